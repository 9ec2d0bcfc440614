//! Componentwise linearity, linear quotients and vertex splittability for
//! edge ideals of weighted oriented graphs.

pub mod betti;
pub mod deciders;
pub mod budget;
pub mod classifier;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod harness;
pub mod monomial;
pub mod oriented;

pub use betti::{betti_table, has_linear_resolution, regularity, BettiTable, FieldSpec};
pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use monomial::{Monomial, MonomialIdeal, Var};
pub use oriented::WeightedOrientedGraph;
