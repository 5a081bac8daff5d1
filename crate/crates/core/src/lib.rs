//! Finite partial groups and partial groupoids, modelled as truncated
//! symmetric simplicial sets in matrix form.
//!
//! The crate is organised in four layers:
//!
//! * [`symcore`]: maps between finite ordinals, edge structures, simplex
//!   matrices, spines, and the [`TruncatedSymSet`] container;
//! * [`analysis`]: degeneracy, Eilenberg–Zilber factorization, skeleta,
//!   dimension, spininess and groupoid recognition;
//! * [`constructors`]: nerves, transporter groupoids, products, wedges and
//!   free partial groups;
//! * [`enumeration`]: im-partial subgroups and isomorphism classes of small
//!   partial groups.

pub mod analysis;
pub mod constructors;
pub mod enumeration;
mod error;
pub mod symcore;

pub use error::{Error, Result};
pub use symcore::{
    EdgeId, EdgeSpec, EdgeStructure, FiniteMap, ObjectId, SimplexMatrix, Spine, TruncatedSymSet,
};
