//! Energies, matching coefficients and extremal searches for trees and
//! forests whose edges carry positive integer weights.
//!
//! The energy of a weighted forest is the sum of the absolute eigenvalues of
//! its weighted adjacency matrix. Because forests are bipartite, it is a
//! strictly increasing function of the coefficients `b_k` (sums over
//! `k`-matchings of products of squared weights), so most comparisons can be
//! settled exactly on integer vectors before any floating point is involved.

pub mod charpoly;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod quasiorder;
pub mod spectrum;

pub use charpoly::{b1, coeffs, coeffs_oracle, CoeffVector};
pub use enumerate::{enumerate_class, ClassMember, ClassSpec};
pub use error::{Error, Result};
pub use graph::{canonical_code, make_named, CanonicalCode, NamedGraph, WeightSequence, WeightedForest};
pub use quasiorder::{assert_monotone, compare, OrderRelation};
pub use spectrum::{energy_closed, energy_coulson, energy_eigen, spectrum, Spectrum};
