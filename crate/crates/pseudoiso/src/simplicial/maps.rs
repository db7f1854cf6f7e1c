use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::chains::ChainComplex;
use super::set::{EdgeRef, Face2Ref, SimplicialSet};
use crate::error::{Error, Result};
use crate::zlinalg::{hom_verdict, IntMatrix, Lattice};

/// Image of a 3-simplex under a simplicial map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TetImage {
    Tet(usize),
    S0Tri(usize),
    S1Tri(usize),
    S2Tri(usize),
    /// Fully collapsed to the vertex.
    Point,
}

/// A simplicial map between single-vertex sets, specified on nondegenerate
/// simplices. Face commutation is validated on construction.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    pub edge_images: Vec<EdgeRef>,
    pub tri_images: Vec<Face2Ref>,
    pub tet_images: Vec<TetImage>,
}

impl SimplicialMap {
    pub fn identity(x: &SimplicialSet) -> Self {
        SimplicialMap {
            edge_images: (0..x.edge_count()).map(EdgeRef::Edge).collect(),
            tri_images: (0..x.triangle_count()).map(Face2Ref::Triangle).collect(),
            tet_images: (0..x.tetrahedron_count()).map(TetImage::Tet).collect(),
        }
    }

    /// Validate the data as a simplicial map from `x` to `y`.
    pub fn validate(&self, x: &SimplicialSet, y: &SimplicialSet) -> Result<()> {
        if self.edge_images.len() != x.edge_count()
            || self.tri_images.len() != x.triangle_count()
            || self.tet_images.len() != x.tetrahedron_count()
        {
            return Err(Error::validation("map is not total on nondegenerate simplices"));
        }
        let edge_ok = |e: &EdgeRef| match e {
            EdgeRef::Degenerate => true,
            EdgeRef::Edge(i) => *i < y.edge_count(),
        };
        if !self.edge_images.iter().all(edge_ok) {
            return Err(Error::validation("edge image out of range"));
        }
        let map_edge = |e: EdgeRef| -> EdgeRef {
            match e {
                EdgeRef::Degenerate => EdgeRef::Degenerate,
                EdgeRef::Edge(i) => self.edge_images[i],
            }
        };
        // triangles: faces must commute
        for (t, img) in x.triangles().iter().zip(&self.tri_images) {
            for i in 0..3 {
                let expected = map_edge(t.faces[i]);
                let got = y.face_of_face2(*img, i);
                if expected != got {
                    return Err(Error::validation(format!(
                        "face d{i} of 2-simplex {:?} does not commute with the map",
                        t.name
                    )));
                }
            }
        }
        // map of (possibly degenerate) 2-simplices induced on faces
        let map_face2 = |f: Face2Ref| -> Face2Ref {
            match f {
                Face2Ref::Triangle(t) => self.tri_images[t],
                Face2Ref::S0Edge(a) => match self.edge_images[a] {
                    EdgeRef::Edge(b) => Face2Ref::S0Edge(b),
                    EdgeRef::Degenerate => Face2Ref::Degenerate,
                },
                Face2Ref::S1Edge(a) => match self.edge_images[a] {
                    EdgeRef::Edge(b) => Face2Ref::S1Edge(b),
                    EdgeRef::Degenerate => Face2Ref::Degenerate,
                },
                Face2Ref::Degenerate => Face2Ref::Degenerate,
            }
        };
        for (t, img) in x.tetrahedra().iter().zip(&self.tet_images) {
            for i in 0..4 {
                let expected = map_face2(t.faces[i]);
                let got: Face2Ref = match img {
                    TetImage::Tet(s) => y.tetrahedra()[*s].faces[i],
                    // faces of s_k(sigma) via the simplicial identities
                    TetImage::S0Tri(s) => match i {
                        0 | 1 => Face2Ref::Triangle(*s),
                        _ => s0_of(y.triangles()[*s].faces[i - 1]),
                    },
                    TetImage::S1Tri(s) => match i {
                        1 | 2 => Face2Ref::Triangle(*s),
                        0 => s0_of(y.triangles()[*s].faces[0]),
                        _ => s1_of(y.triangles()[*s].faces[2]),
                    },
                    TetImage::S2Tri(s) => match i {
                        2 | 3 => Face2Ref::Triangle(*s),
                        _ => s1_of(y.triangles()[*s].faces[i]),
                    },
                    TetImage::Point => Face2Ref::Degenerate,
                };
                if expected != got {
                    return Err(Error::validation(format!(
                        "face d{i} of 3-simplex {:?} does not commute with the map",
                        t.name
                    )));
                }
            }
        }
        Ok(())
    }

    /// Chain map in degree 1 (degenerate images vanish).
    pub fn chain_map1(&self, x: &ChainComplex, y: &ChainComplex) -> IntMatrix {
        let mut m = IntMatrix::zeros(y.rank(1), x.rank(1));
        for (i, img) in self.edge_images.iter().enumerate() {
            if let EdgeRef::Edge(j) = img {
                m[(*j, i)] = BigInt::one();
            }
        }
        m
    }

    pub fn chain_map2(&self, x: &ChainComplex, y: &ChainComplex) -> IntMatrix {
        let mut m = IntMatrix::zeros(y.rank(2), x.rank(2));
        for (i, img) in self.tri_images.iter().enumerate() {
            if let Face2Ref::Triangle(j) = img {
                m[(*j, i)] = BigInt::one();
            }
        }
        m
    }

    pub fn chain_map3(&self, x: &ChainComplex, y: &ChainComplex) -> IntMatrix {
        let mut m = IntMatrix::zeros(y.rank(3), x.rank(3));
        for (i, img) in self.tet_images.iter().enumerate() {
            if let TetImage::Tet(j) = img {
                m[(*j, i)] = BigInt::one();
            }
        }
        m
    }
}

fn s0_of(e: EdgeRef) -> Face2Ref {
    match e {
        EdgeRef::Edge(a) => Face2Ref::S0Edge(a),
        EdgeRef::Degenerate => Face2Ref::Degenerate,
    }
}

fn s1_of(e: EdgeRef) -> Face2Ref {
    match e {
        EdgeRef::Edge(a) => Face2Ref::S1Edge(a),
        EdgeRef::Degenerate => Face2Ref::Degenerate,
    }
}

/// Outcome of the pseudo-homeomorphism test: isomorphism on `H_1`,
/// epimorphism on `H_2`, and, as diagnostics, the three chain-level
/// lattice conditions dual to them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoHomeoVerdict {
    pub h1_iso: bool,
    pub h2_epi: bool,
    pub is_pseudo_homeo: bool,
    /// `C_1(Y) = f(C_1(X)) + im d_2(Y)`
    pub cond_c1_spanned: bool,
    /// `f^{-1}(im d_2(Y)) = im d_2(X)`
    pub cond_boundary_preimage: bool,
    /// `ker d_2(Y) = f(ker d_2(X)) + im d_3(Y)`
    pub cond_cycles_spanned: bool,
}

/// Decide whether a validated simplicial map is a pseudo-homeomorphism
/// (`H_1` isomorphism and `H_2` epimorphism).
pub fn pseudo_homeo_check(
    map: &SimplicialMap,
    x: &SimplicialSet,
    y: &SimplicialSet,
) -> Result<PseudoHomeoVerdict> {
    map.validate(x, y)?;
    let cx = ChainComplex::of(x);
    let cy = ChainComplex::of(y);
    let f1 = map.chain_map1(&cx, &cy);
    let f2 = map.chain_map2(&cx, &cy);

    let bx = Lattice::new(cx.rank(1), cx.boundary(2).clone());
    let by = Lattice::new(cy.rank(1), cy.boundary(2).clone());
    let h1 = hom_verdict(&f1, &bx, &by)?;

    // H_2 epimorphism via cycle bases
    let zx = cx.boundary(2).kernel();
    let zy = cy.boundary(2).kernel();
    let mut f2_cycles = IntMatrix::zeros(zy.cols(), zx.cols());
    for j in 0..zx.cols() {
        let img = f2.mul_vec(&zx.column(j));
        let coords = zy
            .solve(&img)
            .ok_or_else(|| Error::inconsistency("chain map does not preserve 2-cycles"))?;
        for (i, v) in coords.into_iter().enumerate() {
            f2_cycles[(i, j)] = v;
        }
    }
    let b3x_in_zx = {
        let mut cols = Vec::new();
        for j in 0..cx.boundary(3).cols() {
            cols.push(zx.solve(&cx.boundary(3).column(j)).ok_or_else(|| {
                Error::inconsistency("a 3-boundary is not a 2-cycle")
            })?);
        }
        Lattice::from_columns(zx.cols(), &cols)
    };
    let b3y_in_zy = {
        let mut cols = Vec::new();
        for j in 0..cy.boundary(3).cols() {
            cols.push(zy.solve(&cy.boundary(3).column(j)).ok_or_else(|| {
                Error::inconsistency("a 3-boundary is not a 2-cycle")
            })?);
        }
        Lattice::from_columns(zy.cols(), &cols)
    };
    let h2 = hom_verdict(&f2_cycles, &b3x_in_zx, &b3y_in_zy)?;

    // lattice diagnostics
    let cond_c1_spanned = {
        let span = Lattice::new(cy.rank(1), f1.hstack(cy.boundary(2)));
        span.equals(&Lattice::full(cy.rank(1)))?
    };
    let cond_boundary_preimage = {
        let pre = by.preimage(&f1);
        pre.equals(&bx)?
    };
    let cond_cycles_spanned = {
        let img = f2.mul(&zx);
        let span = Lattice::new(cy.rank(2), img.hstack(cy.boundary(3)));
        span.equals(&Lattice::new(cy.rank(2), zy.clone()))?
    };

    let h1_iso = h1.is_iso();
    let h2_epi = h2.well_defined && h2.surjective;
    Ok(PseudoHomeoVerdict {
        h1_iso,
        h2_epi,
        is_pseudo_homeo: h1_iso && h2_epi,
        cond_c1_spanned,
        cond_boundary_preimage,
        cond_cycles_spanned,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::set::Triangle;

    #[test]
    fn identity_is_pseudo_homeo() {
        let x = SimplicialSet::torus_corner();
        let v = pseudo_homeo_check(&SimplicialMap::identity(&x), &x, &x).unwrap();
        assert!(v.is_pseudo_homeo);
        assert!(v.cond_c1_spanned && v.cond_boundary_preimage && v.cond_cycles_spanned);
    }

    #[test]
    fn collapse_drops_h1() {
        // collapse torus_corner to the circle on a: b -> degenerate, c -> a
        let x = SimplicialSet::torus_corner();
        let y = SimplicialSet::circle("a");
        // the 2-simplex must map somewhere its faces allow:
        // faces (b, c, a) -> (*, a, a), which matches s1(a)
        let map = SimplicialMap {
            edge_images: vec![EdgeRef::Edge(0), EdgeRef::Degenerate, EdgeRef::Edge(0)],
            tri_images: vec![Face2Ref::S1Edge(0)],
            tet_images: vec![],
        };
        let v = pseudo_homeo_check(&map, &x, &y).unwrap();
        assert!(!v.h1_iso);
        assert!(!v.is_pseudo_homeo);
    }

    #[test]
    fn sphere_collapse_is_pseudo_homeo() {
        // duplicate the 2-simplex of torus_corner, creating a 2-sphere
        // class, then map both copies onto the original
        let mut tris = SimplicialSet::torus_corner().triangles().to_vec();
        tris.push(Triangle {
            name: "s2".into(),
            faces: tris[0].faces,
        });
        let x = SimplicialSet::build(
            SimplicialSet::torus_corner().edge_names().to_vec(),
            tris,
            vec![],
        )
        .unwrap();
        let y = SimplicialSet::torus_corner();
        let map = SimplicialMap {
            edge_images: (0..3).map(EdgeRef::Edge).collect(),
            tri_images: vec![Face2Ref::Triangle(0), Face2Ref::Triangle(0)],
            tet_images: vec![],
        };
        let v = pseudo_homeo_check(&map, &x, &y).unwrap();
        assert!(v.h1_iso);
        assert!(v.h2_epi);
        assert!(v.is_pseudo_homeo);
        // the reverse inclusion misses the sphere class: not epi on H_2
        let incl = SimplicialMap {
            edge_images: (0..3).map(EdgeRef::Edge).collect(),
            tri_images: vec![Face2Ref::Triangle(0)],
            tet_images: vec![],
        };
        let v = pseudo_homeo_check(&incl, &y, &x).unwrap();
        assert!(v.h1_iso);
        assert!(!v.h2_epi);
    }
}
