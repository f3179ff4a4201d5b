//! Unrepresentations of finite transformation semigroups.
//!
//! Given a transformation semigroup `S` on `X = {0..n-1}`, an unrepresentation
//! is a semigroup structure on `X` whose left Cayley representation is exactly
//! `S`. This crate enumerates them and computes the structures built on top:
//! the heap of unrepresentations and its groups, centralizers, pseudounits,
//! and Clifford decompositions.

pub mod catalog;
pub mod cayley;
pub mod clifford;
pub mod corpus;
pub mod error;
pub mod heap;
pub mod semigroup;
pub mod unrep;

pub use cayley::{is_faithful, represent, validate_table, MulTable, RepresentationResult};
pub use error::{Error, Result};
pub use semigroup::{
    classify, compose, idempotents, is_single_cycle, natural_order, ClassificationReport,
    OrderVerdict, TransSemigroup, Transformation, DEFAULT_CLOSURE_CAP,
};
pub use unrep::{
    cyclic_unrep, enumerate_unreps, enumerate_unreps_bruteforce, existence_precheck, induced_table,
    monoid_unreps, verify_action_hom, Strategy, UnrepMap, Unrepresentation,
};
