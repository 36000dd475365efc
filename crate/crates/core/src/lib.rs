//! Certification and verification tools for Sidorenko-type correlation
//! inequalities.
//!
//! * [`complex`] builds reflection complexes (b-hypergraphs grown by
//!   reflections) and checks reducibility.
//! * [`certify`] decides thickness and weak thickness by exact cone-membership
//!   linear programming, or constructively from a trace.
//! * [`measures`] materializes the coupling measure of a complex on a finite
//!   target and checks the entropy identities it satisfies.
//! * [`homcount`] counts homomorphisms and checks `t(H,G) >= t(e,G)^|E(H)|`
//!   exactly.
//! * [`catalog`] constructs the standard families (trees, even cycles,
//!   tree-arrangeable graphs, products, hypercubes, hypergraph forests, ...).

pub mod error;
pub mod graph;
pub mod setfun;
pub mod complex;
pub mod certify;
pub mod catalog;
pub mod measures;
pub mod homcount;
pub mod io;
pub mod cli;

pub use error::{Error, Result};
