//! The indexing category of finite ordinals and all functions, the matrix
//! encoding of simplices, and truncated symmetric sets.

mod edges;
mod map;
mod matrix;
mod spine;
mod symset;

pub use edges::{identity_name, EdgeId, EdgeSpec, EdgeStructure, ObjectId, IDENTITY_PREFIX};
pub use map::{compose_maps, factor_epi_mono, AllMaps, FiniteMap};
pub use matrix::{MatrixDisplay, SimplexMatrix};
pub use spine::{all_spines, all_spines_capped, spine_eval, ChainTuple, Spine, DEFAULT_SPINE_CAP};
pub use symset::{
    closure_generate, stirling2, ExplicitSymSet, TruncatedSymSet, ValidationReport, Violation,
};
