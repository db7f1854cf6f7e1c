use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{IntMatrix, Lattice};
use crate::error::{Error, Result};

/// Presentation of a finitely generated abelian group as a quotient
/// `Z^ambient / L`, recorded as `Z^free_rank (+) Z/t_1 (+) ... (+) Z/t_m`
/// with `t_1 | t_2 | ...`, each `t_i >= 2`.
///
/// Elements are addressed in *quotient coordinates*: the torsion
/// coordinates first (in divisibility order), then the free ones. The
/// `projection` matrix carries ambient vectors to quotient coordinates, so
/// downstream consumers map elements without re-deriving anything.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianPresentation {
    ambient: usize,
    free_rank: usize,
    torsion: Vec<BigInt>,
    projection: IntMatrix,
    /// Right inverse of `projection`: ambient representatives of the
    /// quotient coordinate classes.
    section: IntMatrix,
}

impl AbelianPresentation {
    /// Present `Z^ambient / span(relations)`.
    pub fn cokernel(ambient: usize, relations: &Lattice) -> Result<Self> {
        if relations.ambient_rank() != ambient {
            return Err(Error::dim(format!(
                "relations live in rank {}, expected {}",
                relations.ambient_rank(),
                ambient
            )));
        }
        let snf = relations.generators().smith_normal_form();
        let r = snf.rank();
        let mut torsion_rows = Vec::new();
        let mut torsion = Vec::new();
        for i in 0..r {
            let d = snf.s[(i, i)].clone();
            if !d.is_one() {
                torsion_rows.push(i);
                torsion.push(d);
            }
        }
        let free_rows: Vec<usize> = (r..ambient).collect();
        let mut rows = torsion_rows;
        rows.extend(free_rows);
        let projection = snf.u.select_rows(&rows);
        let section = snf
            .u
            .inverse_unimodular()
            .expect("SNF transform is unimodular")
            .select_columns(&rows);
        let free_rank = ambient - r;
        Ok(AbelianPresentation {
            ambient,
            free_rank,
            torsion,
            projection,
            section,
        })
    }

    /// The free group `Z^n` presented on itself (projection = identity).
    pub fn free(n: usize) -> Self {
        AbelianPresentation {
            ambient: n,
            free_rank: n,
            torsion: Vec::new(),
            projection: IntMatrix::identity(n),
            section: IntMatrix::identity(n),
        }
    }

    /// Assemble directly from parts; used by the sparse cokernel engine.
    pub(crate) fn from_parts(
        ambient: usize,
        free_rank: usize,
        torsion: Vec<BigInt>,
        projection: IntMatrix,
        section: IntMatrix,
    ) -> Self {
        assert_eq!(projection.rows(), free_rank + torsion.len());
        assert_eq!(projection.cols(), ambient);
        assert_eq!(section.rows(), ambient);
        assert_eq!(section.cols(), free_rank + torsion.len());
        AbelianPresentation {
            ambient,
            free_rank,
            torsion,
            projection,
            section,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Number of quotient coordinates (torsion + free).
    pub fn coord_dim(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn projection(&self) -> &IntMatrix {
        &self.projection
    }

    pub fn section(&self) -> &IntMatrix {
        &self.section
    }

    /// Ambient representative of a coordinate vector.
    pub fn lift(&self, coords: &[BigInt]) -> Vec<BigInt> {
        self.section.mul_vec(coords)
    }

    /// Quotient coordinates of an ambient vector, torsion part normalized
    /// into `[0, t_i)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut coords = self.projection.mul_vec(v);
        self.normalize(&mut coords);
        coords
    }

    /// Normalize quotient coordinates in place (torsion entries mod t_i).
    pub fn normalize(&self, coords: &mut [BigInt]) {
        assert_eq!(coords.len(), self.coord_dim());
        for (i, t) in self.torsion.iter().enumerate() {
            coords[i] = coords[i].mod_floor(t);
        }
    }

    pub fn is_zero_class(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn coords_equal(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        self.normalize(&mut a);
        self.normalize(&mut b);
        a == b
    }

    /// The torsion relations `t_i * e_i` as a lattice in coordinate space.
    pub fn relation_lattice(&self) -> Lattice {
        let dim = self.coord_dim();
        let cols: Vec<Vec<BigInt>> = self
            .torsion
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let mut v = vec![BigInt::zero(); dim];
                v[i] = t.clone();
                v
            })
            .collect();
        Lattice::from_columns(dim, &cols)
    }

    /// Decide membership of `target` in `lattice + torsion relations`,
    /// both given in quotient coordinates. Returns the coefficients on the
    /// lattice generators if solvable.
    pub fn solve_mod(&self, lattice: &Lattice, target: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if lattice.ambient_rank() != self.coord_dim() {
            return Err(Error::dim("lattice not in quotient coordinates"));
        }
        let aug = lattice.sum(&self.relation_lattice())?;
        match aug.solve(target)? {
            None => Ok(None),
            Some(c) => Ok(Some(c[..lattice.generators().cols()].to_vec())),
        }
    }

    /// Kernel of a map `Z^n -> this quotient` given by a matrix into
    /// quotient coordinates: `{x : m x = 0 modulo torsion}`.
    pub fn kernel_of_map(&self, m: &IntMatrix) -> Lattice {
        assert_eq!(m.rows(), self.coord_dim(), "map does not land in coords");
        let rel = self.relation_lattice();
        let stacked = m.hstack(&rel.generators().neg());
        let ker = stacked.kernel();
        Lattice::new(m.cols(), ker.select_rows(&(0..m.cols()).collect::<Vec<_>>()))
    }

    /// Order of the group if finite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    /// Same isomorphism type (equal free rank and torsion chain).
    pub fn isomorphic(&self, other: &Self) -> bool {
        self.free_rank == other.free_rank && self.torsion == other.torsion
    }
}

/// Verdict of checking a candidate homomorphism between two presented
/// abelian groups, given on ambient generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianHomVerdict {
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
}

impl AbelianHomVerdict {
    pub fn is_iso(&self) -> bool {
        self.well_defined && self.injective && self.surjective
    }
}

/// Check whether the ambient matrix `m : Z^a -> Z^b` induces an
/// isomorphism `Z^a / rel_a -> Z^b / rel_b`.
pub fn hom_verdict(m: &IntMatrix, rel_a: &Lattice, rel_b: &Lattice) -> Result<AbelianHomVerdict> {
    if m.cols() != rel_a.ambient_rank() || m.rows() != rel_b.ambient_rank() {
        return Err(Error::dim("hom_verdict: shape mismatch"));
    }
    let image_of_rel_a = rel_a.map(m);
    let well_defined = rel_b.contains_lattice(&image_of_rel_a)?;
    let injective = well_defined && rel_a.contains_lattice(&rel_b.preimage(m))?;
    let surjective = {
        let span = Lattice::new(m.rows(), m.hstack(rel_b.generators()));
        span.equals(&Lattice::full(m.rows()))?
    };
    Ok(AbelianHomVerdict {
        well_defined,
        injective,
        surjective,
    })
}

/// For `v` not in `lattice (+ torsion relations)`, produce a certificate:
/// a functional `w` and modulus `m >= 0` with `w . g == 0 (mod m)` for all
/// generators `g` but `w . v != 0 (mod m)`. (`m = 0` means equality in `Z`.)
pub fn non_membership_certificate(
    pres: &AbelianPresentation,
    lattice: &Lattice,
    v: &[BigInt],
) -> Option<(Vec<BigInt>, BigInt)> {
    let aug = lattice.sum(&pres.relation_lattice()).ok()?;
    let snf = aug.generators().smith_normal_form();
    let uv = snf.u.mul_vec(v);
    for (i, x) in uv.iter().enumerate() {
        let modulus = if i < snf.rank() {
            snf.s[(i, i)].clone()
        } else {
            BigInt::zero()
        };
        let bad = if modulus.is_zero() {
            !x.is_zero()
        } else {
            !x.mod_floor(&modulus).is_zero()
        };
        if bad {
            return Some((snf.u.row(i).to_vec(), modulus.abs()));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlinalg::bigvec;

    #[test]
    fn z2_plus_z3_is_z6() {
        let l = Lattice::from_columns(2, &[bigvec([2, 0]), bigvec([0, 3])]);
        let p = AbelianPresentation::cokernel(2, &l).unwrap();
        assert_eq!(p.free_rank(), 0);
        assert_eq!(p.torsion(), &[BigInt::from(6)]);
        assert_eq!(p.order(), Some(BigInt::from(6)));
        // projection kills the relations
        for col in l.generators().columns() {
            assert!(p.is_zero_class(&col));
        }
    }

    #[test]
    fn free_and_trivial() {
        let p = AbelianPresentation::cokernel(3, &Lattice::zero(3)).unwrap();
        assert_eq!(p.free_rank(), 3);
        assert!(p.torsion().is_empty());

        let q = AbelianPresentation::cokernel(
            1,
            &Lattice::from_columns(1, &[bigvec([1])]),
        )
        .unwrap();
        assert!(q.is_trivial());
    }

    #[test]
    fn element_classes() {
        // Z^2 / <(2,0)> = Z/2 + Z
        let l = Lattice::from_columns(2, &[bigvec([2, 0])]);
        let p = AbelianPresentation::cokernel(2, &l).unwrap();
        assert_eq!(p.free_rank(), 1);
        assert_eq!(p.torsion(), &[BigInt::from(2)]);
        assert!(p.is_zero_class(&bigvec([2, 0])));
        assert!(!p.is_zero_class(&bigvec([1, 0])));
        assert!(!p.is_zero_class(&bigvec([0, 5])));
        // (1,0) + (1,0) = 0
        let a = p.reduce(&bigvec([1, 0]));
        let sum: Vec<BigInt> = a.iter().map(|x| x * 2).collect();
        let mut sum = sum;
        p.normalize(&mut sum);
        assert!(sum.iter().all(Zero::is_zero));
    }

    #[test]
    fn hom_iso() {
        // multiplication by 1 on Z/4: iso; by 2: neither inj nor surj
        let rel = Lattice::from_columns(1, &[bigvec([4])]);
        let id = IntMatrix::identity(1);
        let v = hom_verdict(&id, &rel, &rel).unwrap();
        assert!(v.is_iso());
        let two = IntMatrix::from_rows_i64(&[vec![2]]);
        let v = hom_verdict(&two, &rel, &rel).unwrap();
        assert!(v.well_defined);
        assert!(!v.injective);
        assert!(!v.surjective);
    }

    #[test]
    fn certificates() {
        let l = Lattice::from_columns(2, &[bigvec([2, 0])]);
        let p = AbelianPresentation::cokernel(2, &Lattice::zero(2)).unwrap();
        let v = bigvec([1, 0]);
        let (w, m) = non_membership_certificate(&p, &l, &v).unwrap();
        // certificate really separates
        let dot = |a: &[BigInt], b: &[BigInt]| -> BigInt {
            a.iter().zip(b).map(|(x, y)| x * y).sum()
        };
        for g in l.generators().columns() {
            let d = dot(&w, &g);
            if m.is_zero() {
                assert!(d.is_zero());
            } else {
                assert!(d.mod_floor(&m).is_zero());
            }
        }
        let d = dot(&w, &v);
        if m.is_zero() {
            assert!(!d.is_zero());
        } else {
            assert!(!d.mod_floor(&m).is_zero());
        }
    }
}
