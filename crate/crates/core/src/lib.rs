//! orbicover-core: enumeration and classification of flexible branched
//! covers of hyperbolic 2-orbifolds by the closed genus-2 surface.
//!
//! Covers are encoded by their permutation monodromy. Everything here is a
//! pure function on immutable values; IO, report formats and the CLI live in
//! the `orbicover` crate.
//!
//! Composition convention: `s.compose(&t)` is `s ∘ t`, i.e. `t` is applied
//! first. Every relation check and every move table uses this convention.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;

pub mod enumerate;
pub mod factor;
pub mod mcg;
pub mod orbifold;
pub mod perm;
pub mod pipeline;

pub use enumerate::{
    allowed_profiles, cover_invariants, enumerate_cover_classes, CoverClass, CoverInvariants, LocalProfile,
    MonodromyTuple, TupleKind,
};
pub use error::{Error, Result};
pub use factor::{factorizations, holonomy_classify, Factorization, Holonomy};
pub use mcg::{apply_move, signature_orbits, MoveRule, MoveTables, SignatureClass, TupleMove};
pub use orbifold::{
    candidate_signatures, candidate_table, cone_surface_area, max_cone_points, orbifold_area,
    parity_exclusion, ConeData, Exclusion, PiMultiple, Signature,
};
pub use perm::{
    block_systems, canonicalize_tuple, compose, elements_with_cycle_type, is_transitive, subgroup_summary,
    BlockSystem, CycleType, GroupSummary, Permutation,
};

/// The closed surface whose flexible covers are enumerated.
pub const COVER_GENUS: u32 = 2;
