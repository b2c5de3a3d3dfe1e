//! Kernelization pipelines: the independent-set kernel for graphs a few
//! added edges from split, the independent-set compression for graphs a
//! few added edges from interval, and the Turing kernel for weighted
//! clique. Every pipeline records an executable trace; replaying the trace
//! on the original instance reproduces the reduced instance exactly.

pub mod interval;
pub mod split;
pub mod turing;

pub use interval::{interval_is_compress, replay_interval};
pub use split::{replay_split, split_edit, split_is_kernel, vc_to_split_modulator};
pub use turing::{turing_kernel_wclique, TuringKernelRun, WCliqueQuery};

use serde::Serialize;

use crate::graph::{Graph, WeightMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Reduced,
    NotInClass,
    ResolvedYes,
    ResolvedNo,
}

/// One reduction step, in graph labels, carrying everything a mechanical
/// replay needs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum TraceOp {
    /// Minimum edit set to a split graph, with the clique side used.
    SplitEdit {
        added: Vec<(usize, usize)>,
        deleted: Vec<(usize, usize)>,
        clique_side: Vec<usize>,
    },
    /// One endpoint of a formerly deleted edge moves to the clique side;
    /// its non-neighbors there move into the modulator-endpoint set.
    ResolveDeletedEdge {
        edge: (usize, usize),
        moved: usize,
        clique_losses: Vec<usize>,
    },
    /// Clique-side vertices adjacent to the independent side are deleted.
    TrimCliqueNeighbors { deleted: Vec<usize> },
    /// The remaining clique side collapses to one vertex, which joins the
    /// independent side.
    CollapseClique { kept: usize, deleted: Vec<usize> },
    /// A modulator-endpoint vertex with too many independent-side
    /// neighbors is deleted.
    DropHighDegree { deleted: usize },
    /// Isolated vertices always join an optimal solution.
    DropIsolated { deleted: usize },
    /// The split edit set is larger than the budget.
    StopEditBudget { edit_size: usize },
    /// Both endpoints of a deleted edge miss too much of the clique side.
    StopDoubleNonNeighbor { edge: (usize, usize) },

    /// Chordal modulator opening the interval pipeline.
    FillinModulator { pairs: Vec<(usize, usize)> },
    /// A touching witness is absorbed into the modulator-endpoint set.
    AbsorbWitness {
        stage: u8,
        shape: String,
        terminals: Vec<usize>,
        vertices: Vec<usize>,
    },
    /// A witness was absorbed more often than the budget permits.
    StopWitnessBudget { stage: u8 },
    /// A vertex whose outside neighborhood holds a large independent set
    /// is irrelevant.
    DropIrrelevant { deleted: usize },
    /// A chordal component is solved directly and removed.
    RemoveChordalComponent { vertices: Vec<usize>, alpha: i64 },
    /// The threshold dropped to zero while removing chordal components.
    ResolveYes,
    /// The reported fill-in exceeds the budget.
    StopFillin,
}

/// The split-side bookkeeping after the deleted-edge rule has run: the
/// clique side is `x ∪ y`, `i` is independent, every `x`-vertex sees all
/// of `y`, and independent subsets of `x` stay small.
#[derive(Clone, Debug, Serialize)]
pub struct SplitPartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub i: Vec<usize>,
    pub deleted_edges: Vec<(usize, usize)>,
}

/// A reduced problem instance plus the provenance of its reduction.
#[derive(Clone, Debug)]
pub struct KernelInstance {
    pub verdict: Verdict,
    pub graph: Option<Graph>,
    pub weights: Option<WeightMap>,
    pub threshold: i64,
    pub trace: Vec<TraceOp>,
    /// Split pipeline: snapshot after the deleted-edge rule.
    pub split_state: Option<SplitPartition>,
    /// Interval pipeline: original members of each component vertex of the
    /// product instance, parallel to the product graph's component part.
    pub product_members: Option<Vec<Vec<usize>>>,
}

impl KernelInstance {
    pub(crate) fn verdict_only(verdict: Verdict, threshold: i64, trace: Vec<TraceOp>) -> KernelInstance {
        KernelInstance {
            verdict,
            graph: None,
            weights: None,
            threshold,
            trace,
            split_state: None,
            product_members: None,
        }
    }
}

/// Deletes the vertices carrying `labels`, preserving all other labels.
pub(crate) fn delete_by_labels(g: &Graph, labels: &[usize]) -> Graph {
    let keep: Vec<usize> = g
        .vertices()
        .filter(|&v| !labels.contains(&g.label(v)))
        .collect();
    g.induced_subgraph(&keep).expect("kept vertices exist")
}

/// Neighbor labels of the vertex carrying `label`.
pub(crate) fn neighbor_labels(g: &Graph, label: usize) -> Vec<usize> {
    let v = g.index_of_label(label).expect("label present");
    g.neighbors(v).iter().map(|&u| g.label(u)).collect()
}

pub(crate) fn labels_of(g: &Graph, indices: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = indices.iter().map(|&v| g.label(v)).collect();
    out.sort_unstable();
    out
}
