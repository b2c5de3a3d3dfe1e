//! Toolkit for optimization problems on graphs that are at most `k` added
//! edges away from being chordal.
//!
//! The pipeline: compute a chordal modulator (`fillin`), turn it into a nice
//! `k`-almost chordal tree decomposition (`decomp`), and run dynamic programs
//! over that decomposition (`dp`). Kernelization pipelines for independent
//! set and weighted clique live in `kernel`. Every solver is cross-validated
//! against the exhaustive-search reference implementations in `oracle`.

pub mod at;
pub mod chordal;
pub mod cli;
pub mod decomp;
pub mod dp;
pub mod error;
pub mod fillin;
pub mod gen;
pub mod graph;
pub mod kernel;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{EdgeSet, EditMode, Graph, WeightMap};
