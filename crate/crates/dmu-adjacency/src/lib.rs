//! Exact adjacency indices of Legendrian monosingularities of types `D_mu^±`
//! to multisingularities built from A-type factors.
//!
//! The front of a Legendrian germ of type `D_mu^delta` is stratified by
//! multisingularity type. For a formal product `A = A_n1^k1 ... A_np^kp`
//! (the empty product `1` included), the adjacency index `J_A(D_mu^delta)`
//! is the number of connected components of the `A`-stratum in a small
//! neighbourhood of the `D`-point. This crate computes these indices
//! exactly, three independent ways:
//!
//! * the published closed formula, in exact rational arithmetic
//!   ([`formula::compute_terms_rational`]);
//! * the stratum-by-stratum count behind it, in pure integer arithmetic
//!   ([`formula::compute_terms_integer`]);
//! * brute-force enumeration of root arrangements
//!   ([`oracle::oracle_adjacency_index`]).
//!
//! [`adjacency_index`] evaluates the first two and insists they agree term
//! by term; the oracle exists to check both. [`catalog::build_table`] turns
//! the index into complete adjacency tables per germ.
//!
//! ```
//! use dmu_adjacency::{adjacency_index, DGerm, MultisingularityType};
//!
//! let germ: DGerm = "D4-".parse().unwrap();
//! let ty: MultisingularityType = "A1".parse().unwrap();
//! let report = adjacency_index(germ, &ty).unwrap();
//! assert_eq!(report.j.to_string(), "14");
//! ```

pub mod catalog;
pub mod formula;
pub mod oracle;
pub mod types;

pub use formula::{adjacency_index, AdjacencyReport, FormulaError};
pub use types::{DGerm, MultisingularityType, ParseError, Profile, Sign};
