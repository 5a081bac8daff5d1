//! Degeneracy, Eilenberg–Zilber factorization, skeleta and dimension, the
//! p-invariant, spininess, groupoid and group recognition, connectivity.

mod degeneracy;
mod groupoid;
mod profile;
mod spiny;
mod structure;

pub use degeneracy::{
    ez_decompose, is_degenerate, is_degenerate_oracle, DegeneracyOracle, EZFactorization,
};
pub use groupoid::{
    compose_edges, groupoid_verdict, inverse_witness, is_group, is_groupoid, missing_segal_tuple,
    GroupoidVerdict,
};
pub use profile::{analyze, AnalysisProfile};
pub use spiny::{
    all_spines_collision, bousfield_tuples, count_segal_tuples, is_spiny, is_spiny_all_spines,
    segal_tuples, spine_collision, standard_spine_collision, standard_spine_injective,
    SpineCollision,
};
pub use structure::{components, dimension, is_connected, p_invariant, skeleton, PInvariant};
