//! Sparing numbers of graphs under weak integer additive set-indexers.
//!
//! A weak IASI labels every vertex with a finite set of non-negative
//! integers so that vertex labels and edge sumsets are injective and each
//! edge sumset is as large as its larger endpoint label. The sparing number
//! is the least number of edges whose label is a singleton. This crate
//! builds edge coronas, computes sparing numbers exactly, constructs
//! witness labelings and audits closed forms against the exact values.

pub mod cli;
pub mod graph;
pub mod iasi;
pub mod labeler;
pub mod scalar;
pub mod sparing;

pub use graph::{edge_corona, CoronaProvenance, Graph};
pub use iasi::{sumset, verify, IasiVerdict, SetLabel, VertexLabeling};
pub use labeler::{construct_optimal, construct_weak_iasi, sidon};
pub use scalar::Scalar;
pub use sparing::{
    sparing_bruteforce, sparing_exact, MonoPattern, SolverConfig, SparingResult, TheoremId,
};

/// Exact rational used to evaluate closed forms.
pub type Rational = num_rational::Ratio<i64>;
/// Wider exact rational for large parameters.
pub type WideRational = num_rational::Ratio<i128>;
