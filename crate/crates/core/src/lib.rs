//! Exact arithmetic and exhaustive search for sum-dominant sets.
//!
//! A finite set of integers `A` is *sum-dominant* (MSTD, "more sums than
//! differences") when `|A+A| > |A-A|`, *balanced* when the two are equal and
//! *difference-dominant* otherwise. This crate provides:
//!
//! * [`setcore`]: the [`IntSet`] carrier, bit-parallel sumset/difference-set
//!   kernels, classification, symmetry and arithmetic-progression detection,
//!   and affine canonical forms.
//! * [`structure`]: gap vectors, difference tables, equal-pair counts,
//!   cardinality bounds and single-element insertion deltas.
//! * [`verify`]: finite-grid checkers for the structural results about
//!   small sets, progressions with a few extra points, symmetric sets and
//!   fast-growing sequences. Each produces a [`VerificationReport`].
//! * [`search`]: canonical enumeration of sets up to affine equivalence,
//!   parallel and resumable, used to locate the smallest sum-dominant sets
//!   and to probe open questions.
//! * [`cli`]: the `mstd` command-line front end.

pub mod cli;
pub mod error;
pub mod search;
pub mod setcore;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use search::{find_min_mstd, SearchConfig, SearchResult};
pub use setcore::{classify, profile, IntSet, RationalSet, SetClass, SetProfile};
pub use verify::VerificationReport;
