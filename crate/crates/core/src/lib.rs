//! Exact computation of equivariant and ordinary Kazhdan-Lusztig polynomials
//! of matroids.
//!
//! Symmetric-group representations are handled through their Frobenius
//! characteristics: a virtual representation of `S_n` is a
//! [`SchurExpansion`], and a graded one is a [`GradedSchur`], i.e. a Laurent
//! polynomial in `t` with Schur-expansion coefficients.

pub mod braid;
pub mod characters;
pub mod error;
pub mod graded;
pub mod kl;
pub mod kronecker;
pub mod lattice;
pub mod logconcave;
pub mod matroid;
pub mod partition;
pub mod plethysm;
pub mod poly;
pub mod power_sum;
pub mod report;
pub mod schur;
pub mod series;
pub mod uniform;

pub use error::{Error, Result};
pub use graded::GradedSchur;
pub use lattice::FlatLattice;
pub use matroid::Matroid;
pub use partition::Partition;
pub use poly::{IntPoly, LaurentPoly, RatPoly};
pub use power_sum::PowerSumExpansion;
pub use report::{Check, Report};
pub use schur::SchurExpansion;
