//! Exhaustive enumeration: im-partial subgroups of a partial group, and
//! isomorphism classes of partial groups of small cardinality.

mod enumerate;
mod iso;
mod subsets;

pub use enumerate::{
    candidate_orbits, enumerate_partial_groups, involution_types, EnumeratedPartialGroup,
    DEFAULT_ENUMERATION_CAP,
};
pub use iso::{are_isomorphic, iso_class_key, IsoClassKey};
pub use subsets::{
    count_impartial_subgroups, impartial_subgroups, subset_profile, SubgroupListing, SubgroupMode,
    SymmetricSubset,
};
