//! Exact integer linear algebra.
//!
//! Dense arbitrary-precision matrices, Smith and Hermite normal forms,
//! lattices (subgroups of `Z^n` given by generating columns) with decidable
//! membership and equality, and presentations of finitely generated abelian
//! quotients. Matrices in this crate are small (a few hundred rows at
//! most), so everything is dense except [`sparse`], which handles the one
//! large cokernel computation of the cobar differential.

mod abelian;
mod lattice;
mod matrix;
mod smith;
pub mod sparse;

pub use abelian::{AbelianHomVerdict, AbelianPresentation};
pub use lattice::Lattice;
pub use matrix::IntMatrix;
pub use smith::SmithForm;

use num_bigint::BigInt;

/// Convenience: build a `Vec<BigInt>` from anything iterable over `i64`.
pub fn bigvec(values: impl IntoIterator<Item = i64>) -> Vec<BigInt> {
    values.into_iter().map(BigInt::from).collect()
}
