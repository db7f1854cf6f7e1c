use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{IntMatrix, SmithForm};
use crate::error::{Error, Result};

/// A subgroup of `Z^ambient` spanned by the columns of `generators`.
///
/// Generators are stored as given (possibly redundant); membership and
/// equality queries go through normal forms computed on demand and cached.
/// The caches are behind [`OnceLock`], so shared lattices can be queried
/// concurrently.
#[derive(Clone, Serialize, Deserialize)]
pub struct Lattice {
    ambient: usize,
    generators: IntMatrix,
    #[serde(skip)]
    snf: OnceLock<Arc<SmithForm>>,
    #[serde(skip)]
    hnf: OnceLock<Arc<IntMatrix>>,
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lattice")
            .field("ambient", &self.ambient)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for Lattice {
    /// Structural equality of the stored generators. Mathematical equality
    /// of the spanned subgroups is [`Lattice::equals`].
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.generators == other.generators
    }
}
impl Eq for Lattice {}

impl Lattice {
    pub fn new(ambient: usize, generators: IntMatrix) -> Self {
        assert_eq!(generators.rows(), ambient, "generator rows != ambient rank");
        Lattice {
            ambient,
            generators,
            snf: OnceLock::new(),
            hnf: OnceLock::new(),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::new(ambient, IntMatrix::zeros(ambient, 0))
    }

    pub fn full(ambient: usize) -> Self {
        Self::new(ambient, IntMatrix::identity(ambient))
    }

    pub fn from_columns(ambient: usize, cols: &[Vec<BigInt>]) -> Self {
        Self::new(ambient, IntMatrix::from_columns(ambient, cols))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    fn snf(&self) -> &SmithForm {
        self.snf
            .get_or_init(|| Arc::new(self.generators.smith_normal_form()))
    }

    /// Canonical basis: column Hermite form of the span (computed as the
    /// row HNF of the transpose). Equal spans give identical matrices.
    pub fn canonical_basis(&self) -> &IntMatrix {
        self.hnf
            .get_or_init(|| Arc::new(self.generators.transpose().row_hnf().transpose()))
    }

    pub fn rank(&self) -> usize {
        self.snf().rank()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    /// Solve `generators * c = v` over the integers.
    pub fn solve(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if v.len() != self.ambient {
            return Err(Error::dim(format!(
                "vector length {} in lattice of ambient rank {}",
                v.len(),
                self.ambient
            )));
        }
        Ok(self.snf().solve(v))
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.solve(v)?.is_some())
    }

    pub fn contains_lattice(&self, other: &Lattice) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::dim("ambient ranks differ"));
        }
        for col in other.generators.columns() {
            if !self.contains(&col)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff the two column spans coincide as subgroups of the ambient.
    pub fn equals(&self, other: &Lattice) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::dim("ambient ranks differ"));
        }
        Ok(self.canonical_basis() == other.canonical_basis())
    }

    /// Sum of lattices (span of both generator sets).
    pub fn sum(&self, other: &Lattice) -> Result<Lattice> {
        if self.ambient != other.ambient {
            return Err(Error::dim("ambient ranks differ"));
        }
        Ok(Lattice::new(
            self.ambient,
            self.generators.hstack(&other.generators),
        ))
    }

    /// Intersection of lattices, via the kernel of `[G1 | -G2]`.
    pub fn intersect(&self, other: &Lattice) -> Result<Lattice> {
        if self.ambient != other.ambient {
            return Err(Error::dim("ambient ranks differ"));
        }
        let stacked = self.generators.hstack(&other.generators.neg());
        let ker = stacked.kernel();
        let g1_cols = self.generators.cols();
        let top = ker.select_rows(&(0..g1_cols).collect::<Vec<_>>());
        Ok(Lattice::new(self.ambient, self.generators.mul(&top)))
    }

    /// Image of this lattice under a linear map.
    pub fn map(&self, m: &IntMatrix) -> Lattice {
        assert_eq!(m.cols(), self.ambient, "map domain mismatch");
        Lattice::new(m.rows(), m.mul(&self.generators))
    }

    /// Preimage `{x : m * x in self}` as a lattice in the domain of `m`.
    pub fn preimage(&self, m: &IntMatrix) -> Lattice {
        assert_eq!(m.rows(), self.ambient, "map codomain mismatch");
        let stacked = m.hstack(&self.generators.neg());
        let ker = stacked.kernel();
        let x_part = ker.select_rows(&(0..m.cols()).collect::<Vec<_>>());
        Lattice::new(m.cols(), x_part)
    }
}

/// Kernel of an integer matrix as a lattice in its column space; the basis
/// is saturated (unimodularly extendable).
pub fn kernel_lattice(a: &IntMatrix) -> Lattice {
    Lattice::new(a.cols(), a.kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlinalg::bigvec;

    #[test]
    fn membership() {
        let l = Lattice::from_columns(2, &[bigvec([2, 0]), bigvec([0, 3])]);
        assert_eq!(l.solve(&bigvec([4, 3])).unwrap(), Some(bigvec([2, 1])));
        assert_eq!(l.solve(&bigvec([1, 0])).unwrap(), None);

        let l2 = Lattice::from_columns(2, &[bigvec([1, 1]), bigvec([1, -1])]);
        let c = l2.solve(&bigvec([2, 0])).unwrap().unwrap();
        assert_eq!(l2.generators().mul_vec(&c), bigvec([2, 0]));
        assert_eq!(c, bigvec([1, 1]));
    }

    #[test]
    fn equality() {
        let a = Lattice::from_columns(2, &[bigvec([2, 0]), bigvec([0, 2])]);
        let b = Lattice::from_columns(2, &[bigvec([2, 2]), bigvec([2, -2]), bigvec([0, 2])]);
        assert!(a.equals(&b).unwrap());

        let c = Lattice::from_columns(2, &[bigvec([1, 0])]);
        let d = Lattice::from_columns(2, &[bigvec([2, 0])]);
        assert!(!c.equals(&d).unwrap());

        assert!(Lattice::zero(3).equals(&Lattice::zero(3)).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let l = Lattice::zero(2);
        assert!(l.solve(&bigvec([1, 2, 3])).is_err());
        assert!(l.equals(&Lattice::zero(3)).is_err());
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_lattice(&IntMatrix::from_rows_i64(&[vec![1, 1, 1]]));
        assert_eq!(k.rank(), 2);
        assert!(k.contains(&bigvec([1, -1, 0])).unwrap());
        assert!(k.contains(&bigvec([0, 1, -1])).unwrap());

        assert!(kernel_lattice(&IntMatrix::identity(2)).is_zero());
        assert!(kernel_lattice(&IntMatrix::from_rows_i64(&[vec![0, 0]]))
            .equals(&Lattice::full(2))
            .unwrap());
    }

    #[test]
    fn intersection_and_preimage() {
        let a = Lattice::from_columns(2, &[bigvec([2, 0]), bigvec([0, 1])]);
        let b = Lattice::from_columns(2, &[bigvec([1, 0]), bigvec([0, 3])]);
        let i = a.intersect(&b).unwrap();
        assert!(i.contains(&bigvec([2, 0])).unwrap());
        assert!(i.contains(&bigvec([0, 3])).unwrap());
        assert!(!i.contains(&bigvec([1, 0])).unwrap());
        assert!(!i.contains(&bigvec([0, 1])).unwrap());

        // preimage of 2Z under multiplication by 3 is 2Z
        let m = IntMatrix::from_rows_i64(&[vec![3]]);
        let two = Lattice::from_columns(1, &[bigvec([2])]);
        let pre = two.preimage(&m);
        assert!(pre.equals(&two).unwrap());
    }
}
