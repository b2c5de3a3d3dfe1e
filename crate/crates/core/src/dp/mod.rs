//! Dynamic programs over nice k-almost chordal tree decompositions:
//! maximum-weight induced d-colorable / H-colorable / d-degenerate
//! subgraphs, graph coloring, connected vertex cover, and the classic
//! problems derived from them.

pub mod candidates;
pub mod classic;
pub mod coloring;
pub mod cvc;
pub mod dcolor;
pub mod degenerate;
pub mod hcolor;
mod mapped;

pub use candidates::{candidate_bound, enumerate_bag_candidates, CandidateFamily};
pub use classic::{solve_classic, ClassicProblem};
pub use coloring::{bag_partitions, solve_coloring, ColoringAnswer};
pub use cvc::solve_cvc;
pub use dcolor::solve_d_colorable;
pub use degenerate::solve_d_degenerate;
pub use hcolor::solve_h_colorable;

use std::collections::BTreeMap;

/// Witness payload attached to a solved instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assignment {
    /// vertex -> color, colors 0-based
    Coloring(BTreeMap<usize, usize>),
    /// vertex -> pattern-graph vertex
    Homomorphism(BTreeMap<usize, usize>),
    /// an ordering in which every vertex has at most d later neighbors
    Ordering(Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub value: i64,
    pub witness: Vec<usize>,
    pub assignment: Option<Assignment>,
}

/// Table value: an explicit infeasibility marker instead of a large finite
/// sentinel, so weight arithmetic can never overflow into a false optimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cost<P> {
    Infeasible,
    Feasible(P),
}

impl<P> Cost<P> {
    pub fn feasible(self) -> Option<P> {
        match self {
            Cost::Infeasible => None,
            Cost::Feasible(p) => Some(p),
        }
    }

    pub fn as_ref(&self) -> Option<&P> {
        match self {
            Cost::Infeasible => None,
            Cost::Feasible(p) => Some(p),
        }
    }
}

/// (value, witness) payload for maximization tables; ties prefer the
/// lexicographically smallest witness so reruns are reproducible.
pub(crate) fn better_max(value: i64, witness: &[usize], than: &(i64, Vec<usize>)) -> bool {
    value > than.0 || (value == than.0 && witness < than.1.as_slice())
}

pub(crate) fn better_min(value: i64, witness: &[usize], than: &(i64, Vec<usize>)) -> bool {
    value < than.0 || (value == than.0 && witness < than.1.as_slice())
}
