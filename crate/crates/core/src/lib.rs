//! Finite-model workbench for Boolean-saturated orthomodular lattices and
//! the modal logic over them.
//!
//! The crate is organized around five subsystems:
//!
//! - [`lattice`]: finite orthomodular lattices as explicit tables, with
//!   validation, center/congruence machinery and an isomorphism search;
//! - [`modal`]: the box operator (largest central element below), its
//!   axiomatics and term evaluation;
//! - [`foulis`]: Baer star-semigroups, residuated endomaps, the semigroup of
//!   a lattice and the closed-projection representation;
//! - [`logic`]: the term language, the Hilbert-style calculus with its proof
//!   checker, and finite-model semantic tooling;
//! - [`kripke`]: point semantics over Baer star-semigroups, truth sets and
//!   frame consequence.
//!
//! [`suite`] bundles the whole verification battery behind one entry point.

pub mod bits;
pub mod foulis;
pub mod kripke;
pub mod lattice;
pub mod logic;
pub mod modal;
pub mod rng;
pub mod suite;
pub mod term;
