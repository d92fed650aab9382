//! Weighted forests, their canonical codes and the named extremal graphs.

mod canonical;
mod forest;
mod named;

pub use canonical::{canonical_code, CanonicalCode};
pub use forest::{Edge, GraphJson, WeightSequence, WeightedForest};
pub use named::{balanced_split, make_named, NamedGraph};
pub(crate) use named::{path, star};
