use num_bigint::BigInt;
use num_traits::Zero;

use super::chains::ChainComplex;
use super::cup::Cochain;
use crate::error::{Error, Result};
use crate::tensorspace::BasedModule;
use crate::zlinalg::{AbelianPresentation, IntMatrix, Lattice};

/// Integral (co)homology data of a single-vertex complex in degrees 1 and
/// 2, with a chosen basis of the free part of `H_1` and the corresponding
/// dual cocycles.
///
/// Because the vertex is unique, `B^1 = 0`: the projection `Z^1 -> H^1` is
/// an isomorphism and the dual-basis section of it is the unique right
/// inverse.
#[derive(Clone, Debug)]
pub struct Cohomology {
    ranks: [usize; 4],
    /// `H_1` as a quotient of `C_1`.
    pub h1: AbelianPresentation,
    /// Rows map a 1-chain to its free `H_1` coordinates in the chosen basis.
    h1_proj: IntMatrix,
    /// Labels for the chosen `H_1`/`H^1` basis.
    pub h1_module: BasedModule,
    /// Column basis of the 2-cocycles `Z^2` inside `C^2`.
    pub cocycle2_basis: IntMatrix,
    /// The 2-coboundaries expressed in `Z^2` coordinates.
    coboundary2_in_z2: Lattice,
    /// `H^2 = Z^2 / B^2` presented over `Z^2` coordinates.
    pub h2: AbelianPresentation,
    /// Column basis of the 2-cycles inside `C_2`.
    pub cycle2_basis: IntMatrix,
    /// `H_2 = Z_2 / B_3` presented over cycle coordinates.
    pub h2_homology: AbelianPresentation,
}

impl Cohomology {
    /// Compute cohomology with the default `H_1` basis (the free rows of
    /// the Smith presentation of `C_1 / im d_2`).
    pub fn new(c: &ChainComplex) -> Result<Self> {
        let ranks = [c.rank(0), c.rank(1), c.rank(2), c.rank(3)];
        let boundary2_img = Lattice::new(ranks[1], c.boundary(2).clone());
        let h1 = AbelianPresentation::cokernel(ranks[1], &boundary2_img)?;
        let t = h1.torsion().len();
        let free_rows: Vec<usize> = (t..h1.coord_dim()).collect();
        let h1_proj = h1.projection().select_rows(&free_rows);

        let d2 = c.coboundary(2); // C^2 -> C^3
        let cocycle2_basis = d2.kernel();
        let d1 = c.coboundary(1); // C^1 -> C^2
        let mut relation_cols = Vec::new();
        for j in 0..d1.cols() {
            let img = d1.column(j);
            let coords = cocycle2_basis.solve(&img).ok_or_else(|| {
                Error::inconsistency("a 2-coboundary failed to be a 2-cocycle")
            })?;
            relation_cols.push(coords);
        }
        let coboundary2_in_z2 = Lattice::from_columns(cocycle2_basis.cols(), &relation_cols);
        let h2 = AbelianPresentation::cokernel(cocycle2_basis.cols(), &coboundary2_in_z2)?;

        let cycle2_basis = c.boundary(2).kernel();
        let b3 = c.boundary(3);
        let mut hom_relations = Vec::new();
        for j in 0..b3.cols() {
            let img = b3.column(j);
            let coords = cycle2_basis.solve(&img).ok_or_else(|| {
                Error::inconsistency("a 3-boundary failed to be a 2-cycle")
            })?;
            hom_relations.push(coords);
        }
        let h2_homology = AbelianPresentation::cokernel(
            cycle2_basis.cols(),
            &Lattice::from_columns(cycle2_basis.cols(), &hom_relations),
        )?;

        let h1_module = BasedModule::standard("x", h1_proj.rows());
        Ok(Cohomology {
            ranks,
            h1,
            h1_proj,
            h1_module,
            cocycle2_basis,
            coboundary2_in_z2,
            h2,
            cycle2_basis,
            h2_homology,
        })
    }

    /// Replace the `H_1` basis by the classes of the given 1-chains, which
    /// must form a basis of the free part.
    pub fn rebase_h1(mut self, class_vectors: &[Vec<BigInt>], labels: BasedModule) -> Result<Self> {
        let b1 = self.h1_rank();
        if class_vectors.len() != b1 || labels.rank() != b1 {
            return Err(Error::input(format!(
                "expected {b1} basis vectors for H_1"
            )));
        }
        let m = IntMatrix::from_fn(b1, b1, |i, j| {
            self.h1_proj.mul_vec(&class_vectors[j])[i].clone()
        });
        let Some(minv) = m.inverse_unimodular() else {
            return Err(Error::input(
                "the given classes do not form a basis of the free part of H_1",
            ));
        };
        self.h1_proj = minv.mul(&self.h1_proj);
        self.h1_module = labels;
        Ok(self)
    }

    pub fn h1_rank(&self) -> usize {
        self.h1_proj.rows()
    }

    pub fn h1_torsion(&self) -> &[BigInt] {
        self.h1.torsion()
    }

    /// Free `H_1` coordinates of a 1-chain in the chosen basis.
    pub fn h1_class(&self, chain: &[BigInt]) -> Vec<BigInt> {
        self.h1_proj.mul_vec(chain)
    }

    /// The unique section of `Z^1 -> H^1` in the chosen dual basis: column
    /// `i` is the 1-cocycle representing the `i`-th dual basis vector.
    pub fn kappa(&self) -> IntMatrix {
        self.h1_proj.transpose()
    }

    /// Apply the section to an `H^1` coordinate vector.
    pub fn kappa_cochain(&self, h1_coords: &[BigInt]) -> Cochain {
        Cochain {
            degree: 1,
            values: self.kappa().mul_vec(h1_coords),
        }
    }

    /// `H^2` coordinates of a 2-cocycle given in `C^2` coordinates.
    pub fn h2_class(&self, cocycle: &Cochain) -> Result<Vec<BigInt>> {
        if cocycle.degree != 2 || cocycle.values.len() != self.ranks[2] {
            return Err(Error::dim("expected a 2-cochain over C^2"));
        }
        let coords = self.cocycle2_basis.solve(&cocycle.values).ok_or_else(|| {
            Error::Precondition("the given 2-cochain is not a cocycle".into())
        })?;
        Ok(self.h2.reduce(&coords))
    }

    /// The coboundary lattice `B^2` in `Z^2` coordinates.
    pub fn coboundaries2(&self) -> &Lattice {
        &self.coboundary2_in_z2
    }

    /// Evaluation pairing of an `H^2` class (in quotient coordinates)
    /// against the 2-cycle basis: entry `j` is the value on cycle `j`.
    pub fn h2_pair_with_cycles(&self, h2_coords: &[BigInt]) -> Vec<BigInt> {
        let z2 = self.h2.lift(h2_coords);
        let cochain = self.cocycle2_basis.mul_vec(&z2);
        (0..self.cycle2_basis.cols())
            .map(|j| {
                cochain
                    .iter()
                    .zip(self.cycle2_basis.column(j))
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn h2_rank(&self) -> usize {
        self.h2.free_rank()
    }

    pub fn c_rank(&self, dim: usize) -> usize {
        self.ranks[dim]
    }
}
