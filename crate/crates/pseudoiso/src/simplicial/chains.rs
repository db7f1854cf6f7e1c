use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::set::{EdgeRef, Face2Ref, SimplicialSet};
use crate::zlinalg::IntMatrix;

/// Normalized chain complex of a single-vertex simplicial set: one basis
/// element per nondegenerate simplex, `C_0 = Z` on the vertex.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ranks: [usize; 4],
    /// `boundary[d]` is the matrix of `C_{d+1} -> C_d` (so `boundary[0]`
    /// is the always-zero map `C_1 -> C_0`).
    boundary: [IntMatrix; 3],
}

impl ChainComplex {
    pub fn of(x: &SimplicialSet) -> Self {
        let c1 = x.edge_count();
        let c2 = x.triangle_count();
        let c3 = x.tetrahedron_count();

        // every edge has both endpoints at the vertex
        let d1 = IntMatrix::zeros(1, c1);

        let mut d2 = IntMatrix::zeros(c1, c2);
        for (j, t) in x.triangles().iter().enumerate() {
            for (i, f) in t.faces.iter().enumerate() {
                if let EdgeRef::Edge(e) = f {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    d2[(*e, j)] += BigInt::from(sign);
                }
            }
        }

        let mut d3 = IntMatrix::zeros(c2, c3);
        for (j, t) in x.tetrahedra().iter().enumerate() {
            for (i, f) in t.faces.iter().enumerate() {
                if let Face2Ref::Triangle(s) = f {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    d3[(*s, j)] += BigInt::from(sign);
                }
            }
        }

        let c = ChainComplex {
            ranks: [1, c1, c2, c3],
            boundary: [d1, d2, d3],
        };
        debug_assert!(c.boundary(1).mul(c.boundary(2)).is_zero());
        debug_assert!(c.boundary(2).mul(c.boundary(3)).is_zero());
        c
    }

    pub fn rank(&self, dim: usize) -> usize {
        self.ranks[dim]
    }

    /// Boundary `C_d -> C_{d-1}` for `d` in `1..=3`.
    pub fn boundary(&self, d: usize) -> &IntMatrix {
        &self.boundary[d - 1]
    }

    /// Coboundary `C^d -> C^{d+1}` (transpose of the boundary), for `d` in
    /// `0..=2`.
    pub fn coboundary(&self, d: usize) -> IntMatrix {
        self.boundary(d + 1).transpose()
    }
}

/// The Alexander–Whitney diagonal and its degree-+1 homotopy, stored as
/// bidegree components. `diagonal[(p, q)]` maps `C_{p+q}` into
/// `C_p (x) C_q` (tensor index `a * rank_q + b`); `homotopy[(p, q)]` maps
/// `C_{p+q-1}` into `C_p (x) C_q` and is populated for total degree 2
/// (from `C_1`) and 3 (from `C_2`).
#[derive(Clone, Debug)]
pub struct Diagonal {
    pub diagonal: BTreeMap<(usize, usize), IntMatrix>,
    pub homotopy: BTreeMap<(usize, usize), IntMatrix>,
}

/// Build the diagonal of a validated set. On an `n`-simplex the diagonal
/// is the sum of front-face (x) back-face terms; degenerate factors vanish
/// in normalized chains. The homotopy on a 1-simplex `a` is `a (x) a`; on
/// a 2-simplex `s` it is `s (x) d1 s + (d2 s + d0 s) (x) s`.
pub fn aw_diagonal(x: &SimplicialSet, c: &ChainComplex) -> Diagonal {
    let mut diagonal = BTreeMap::new();
    let mut homotopy = BTreeMap::new();
    let one = BigInt::one();

    // (0,0): vertex to vertex (x) vertex
    diagonal.insert((0, 0), IntMatrix::identity(1));

    let c1 = c.rank(1);
    let c2 = c.rank(2);
    let c3 = c.rank(3);

    // degree 1: x (x) a + a (x) x
    diagonal.insert((0, 1), IntMatrix::identity(c1));
    diagonal.insert((1, 0), IntMatrix::identity(c1));

    // degree 2: x (x) s + s (x) x + front1 (x) back1
    diagonal.insert((0, 2), IntMatrix::identity(c2));
    diagonal.insert((2, 0), IntMatrix::identity(c2));
    let mut d11 = IntMatrix::zeros(c1 * c1, c2);
    for (j, t) in x.triangles().iter().enumerate() {
        if let (EdgeRef::Edge(front), EdgeRef::Edge(back)) = (t.faces[2], t.faces[0]) {
            d11[(front * c1 + back, j)] += &one;
        }
    }
    diagonal.insert((1, 1), d11);

    // degree 3
    diagonal.insert((0, 3), IntMatrix::identity(c3));
    diagonal.insert((3, 0), IntMatrix::identity(c3));
    let mut d12 = IntMatrix::zeros(c1 * c2, c3);
    let mut d21 = IntMatrix::zeros(c2 * c1, c3);
    for (j, t) in x.tetrahedra().iter().enumerate() {
        // front 1-face = d2 d3, back 2-face = d0
        let front1 = x.face_of_face2(t.faces[3], 2);
        if let (EdgeRef::Edge(a), Face2Ref::Triangle(s)) = (front1, t.faces[0]) {
            d12[(a * c2 + s, j)] += &one;
        }
        // front 2-face = d3, back 1-face = d0 d0
        let back1 = x.face_of_face2(t.faces[0], 0);
        if let (Face2Ref::Triangle(s), EdgeRef::Edge(a)) = (t.faces[3], back1) {
            d21[(s * c1 + a, j)] += &one;
        }
    }
    diagonal.insert((1, 2), d12);
    diagonal.insert((2, 1), d21);

    // homotopy from degree 1: a -> a (x) a
    let mut h11 = IntMatrix::zeros(c1 * c1, c1);
    for a in 0..c1 {
        h11[(a * c1 + a, a)] += &one;
    }
    homotopy.insert((1, 1), h11);

    // homotopy from degree 2: s -> s (x) d1 s + (d2 s + d0 s) (x) s
    let mut h21 = IntMatrix::zeros(c2 * c1, c2);
    let mut h12 = IntMatrix::zeros(c1 * c2, c2);
    for (j, t) in x.triangles().iter().enumerate() {
        if let EdgeRef::Edge(m) = t.faces[1] {
            h21[(j * c1 + m, j)] += &one;
        }
        for f in [t.faces[2], t.faces[0]] {
            if let EdgeRef::Edge(a) = f {
                h12[(a * c2 + j, j)] += &one;
            }
        }
    }
    homotopy.insert((2, 1), h21);
    homotopy.insert((1, 2), h12);

    Diagonal { diagonal, homotopy }
}

impl Diagonal {
    /// Coassociativity `(Delta (x) id) Delta = (id (x) Delta) Delta` as a
    /// matrix identity in the given total degree.
    pub fn is_coassociative(&self, ranks: &[usize; 4], total: usize) -> bool {
        for p in 0..=total {
            for q in 0..=(total - p) {
                let r = total - p - q;
                // component C_total -> C_p (x) C_q (x) C_r both ways
                let left = {
                    let first = &self.diagonal[&(p + q, r)];
                    let second = &self.diagonal[&(p, q)];
                    // (second (x) id) * first
                    tensor_with_identity_right(second, ranks[r]).mul(first)
                };
                let right = {
                    let first = &self.diagonal[&(p, q + r)];
                    let second = &self.diagonal[&(q, r)];
                    tensor_with_identity_left(ranks[p], second).mul(first)
                };
                if left != right {
                    return false;
                }
            }
        }
        true
    }
}

/// `(m (x) id_k)` on tensor coordinates.
pub fn tensor_with_identity_right(m: &IntMatrix, k: usize) -> IntMatrix {
    let mut out = IntMatrix::zeros(m.rows() * k, m.cols() * k);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m[(i, j)] != BigInt::from(0) {
                for t in 0..k {
                    out[(i * k + t, j * k + t)] = m[(i, j)].clone();
                }
            }
        }
    }
    out
}

/// `(id_k (x) m)` on tensor coordinates.
pub fn tensor_with_identity_left(k: usize, m: &IntMatrix) -> IntMatrix {
    let mut out = IntMatrix::zeros(k * m.rows(), k * m.cols());
    for t in 0..k {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if m[(i, j)] != BigInt::from(0) {
                    out[(t * m.rows() + i, t * m.cols() + j)] = m[(i, j)].clone();
                }
            }
        }
    }
    out
}
