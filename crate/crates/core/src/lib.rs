//! The bicyclic extension B_ω^𝓕 of the bicyclic monoid by an ω-closed family
//! of inductive subsets of ω, with the two-element family `{[0), [1)}` as the
//! main case, and the monoid of its endomorphisms.
//!
//! * [`element`]: exact products, inverses, idempotents, the natural
//!   partial order and Green's R/L/H.
//! * [`family`] and [`set`]: ω-closed families and inductive sets.
//! * [`endo`]: endomorphisms in the normal form `ε₁ϖⁿ`: application,
//!   composition, factorization and classification.
//! * [`verify`]: exhaustive bounded-window checks of every law above.
//! * [`cli`]: the `bicyclic` command-line front end.

pub mod cli;
pub mod element;
pub mod endo;
pub mod error;
pub mod family;
pub mod set;
pub mod verify;
pub mod window;

pub use element::{Element, GreenRelation, Triple};
pub use endo::{
    apply_pi, apply_pi_power, classify_window, compose, corner_membership, factor,
    parse_endo_expression, CornerDescriptor, EndoNormalForm, EndoPredicates, MonoidPart,
};
pub use error::{Error, Result};
pub use family::{validate_family, Family};
pub use set::{shift_intersect, BoundedSubset, InductiveSet};
pub use verify::{LawReport, Sweep, Verifier};
pub use window::{ElementMap, FnMap, WindowMap};
