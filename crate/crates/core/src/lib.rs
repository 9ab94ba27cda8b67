//! Edge-magic and super edge-magic labelings of small graphs.
//!
//! The crate computes valence intervals exactly, enumerates every labeling
//! of a graph with a pruned backtracking search, derives the (perfect)
//! deficiency parameters, builds the complete labeling families of
//! `K_{1,n} ∪ lK_1`, and bundles named verification suites.

pub mod deficiency;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod interval;
pub mod labeling;
pub mod pool;
pub mod star;
pub mod verify;

pub use enumerate::{
    enumerate, enumerate_em, enumerate_sem, find_labeling, is_perfect, prune_feasibility,
    Feasibility, SearchOptions, SpectrumReport,
};
pub use error::{EnumerationError, GraphError, IntervalError, LabelingError, StarError, VerifyError};
pub use graph::{build_family, parse_graph, serialize_graph, FamilySpec, Girth, Graph};
pub use interval::{em_interval, interval_of, sem_interval, IntervalReport};
pub use labeling::{
    characteristics, complement, extend_sem, isomorphic, Mode, Signature, TotalLabeling,
    VertexLabeling,
};
