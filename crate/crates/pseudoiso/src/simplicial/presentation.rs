use super::set::{EdgeRef, SimplicialSet, Triangle};
use crate::grouprings::GroupPresentation;
use crate::error::Result;

/// A presentation complex together with the bookkeeping needed to identify
/// its fundamental group with the presented group: which edges carry the
/// generators, and the fan layout of each relator.
#[derive(Clone, Debug)]
pub struct PresentationComplex {
    pub set: SimplicialSet,
    /// Edge index of each generator (`g_1, ..., g_n` in order).
    pub generator_edges: Vec<usize>,
    /// Edge index of each formal inverse.
    pub inverse_edges: Vec<usize>,
    /// For each relator, the indices of its fan triangles in order.
    pub relator_fans: Vec<Vec<usize>>,
}

/// Build the single-vertex complex presenting a group: one edge per
/// generator and per formal inverse, one triangle per generator enforcing
/// `g * g_inv = 1` (the opposite identity then holds in the group), and a
/// left-to-right fan of triangles per relator with auxiliary prefix edges,
/// the last triangle closing against the degenerate edge.
///
/// A relator of length `L >= 2` contributes exactly `L - 1` fan triangles
/// and `L - 2` prefix edges; a length-1 relator contributes one triangle.
pub fn presentation_complex(p: &GroupPresentation) -> Result<PresentationComplex> {
    let n = p.generators();
    let mut edges: Vec<String> = Vec::new();
    let mut triangles: Vec<Triangle> = Vec::new();

    let mut generator_edges = Vec::with_capacity(n);
    let mut inverse_edges = Vec::with_capacity(n);
    for i in 1..=n {
        generator_edges.push(edges.len());
        edges.push(format!("g{i}"));
    }
    for i in 1..=n {
        inverse_edges.push(edges.len());
        edges.push(format!("g{i}_inv"));
    }
    for i in 0..n {
        // g * g_inv = 1: d2 = g, d0 = g_inv, d1 degenerate
        triangles.push(Triangle {
            name: format!("inv{}", i + 1),
            faces: [
                EdgeRef::Edge(inverse_edges[i]),
                EdgeRef::Degenerate,
                EdgeRef::Edge(generator_edges[i]),
            ],
        });
    }

    let letter_edge = |l: i64| -> usize {
        let idx = (l.unsigned_abs() as usize) - 1;
        if l > 0 {
            generator_edges[idx]
        } else {
            inverse_edges[idx]
        }
    };

    let mut relator_fans = Vec::new();
    for (ri, w) in p.relators().iter().enumerate() {
        let len = w.len();
        let mut fan = Vec::new();
        if len == 1 {
            fan.push(triangles.len());
            triangles.push(Triangle {
                name: format!("r{}f1", ri + 1),
                faces: [
                    EdgeRef::Degenerate,
                    EdgeRef::Degenerate,
                    EdgeRef::Edge(letter_edge(w[0])),
                ],
            });
            relator_fans.push(fan);
            continue;
        }
        // prefix edges p_2 .. p_{len-1}
        let mut prefix = Vec::with_capacity(len.saturating_sub(2));
        for k in 2..len {
            prefix.push(edges.len());
            edges.push(format!("r{}p{}", ri + 1, k));
        }
        let prefix_ref = |k: usize| -> EdgeRef {
            // the class of l_1 ... l_k
            if k == 1 {
                EdgeRef::Edge(letter_edge(w[0]))
            } else if k == len {
                EdgeRef::Degenerate
            } else {
                EdgeRef::Edge(prefix[k - 2])
            }
        };
        for k in 2..=len {
            // p_{k-1} * l_k = p_k:  d2 = p_{k-1}, d0 = l_k, d1 = p_k
            fan.push(triangles.len());
            triangles.push(Triangle {
                name: format!("r{}f{}", ri + 1, k - 1),
                faces: [
                    EdgeRef::Edge(letter_edge(w[k - 1])),
                    prefix_ref(k),
                    prefix_ref(k - 1),
                ],
            });
        }
        relator_fans.push(fan);
    }

    let set = SimplicialSet::build(edges, triangles, Vec::new())?;
    Ok(PresentationComplex {
        set,
        generator_edges,
        inverse_edges,
        relator_fans,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouprings::{commutator, GroupPresentation};
    use crate::simplicial::{ChainComplex, Cohomology};
    use crate::tensorspace::BasedModule;
    use num_bigint::BigInt;

    #[test]
    fn free_group_structure() {
        let p = GroupPresentation::free(1);
        let pc = presentation_complex(&p).unwrap();
        assert_eq!(pc.set.edge_count(), 2);
        assert_eq!(pc.set.triangle_count(), 1);
        let c = ChainComplex::of(&pc.set);
        let coh = Cohomology::new(&c).unwrap();
        assert_eq!(coh.h1_rank(), 1);
        assert!(coh.h2.is_trivial());
    }

    #[test]
    fn fan_counts() {
        // a relator of length L gives exactly L-1 fan triangles and
        // L-2 prefix edges
        for len in 2..=8usize {
            let w: Vec<i64> = (0..len).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
            // not reduced for adjacent cancellation; build a reduced word
            let w: Vec<i64> = (0..len)
                .map(|i| if i % 2 == 0 { 1 } else { 2 })
                .collect();
            let _ = w;
            let word: Vec<i64> = (0..len).map(|i| [1, 2][(i % 2)]).collect();
            let p = GroupPresentation::new(2, vec![word]).unwrap();
            let pc = presentation_complex(&p).unwrap();
            assert_eq!(pc.relator_fans[0].len(), len - 1);
            assert_eq!(pc.set.edge_count(), 4 + len - 2);
        }
    }

    #[test]
    fn torus_presentation_homology() {
        let p = GroupPresentation::new(2, vec![commutator(&[1], &[2])]).unwrap();
        let pc = presentation_complex(&p).unwrap();
        let c = ChainComplex::of(&pc.set);
        let coh = Cohomology::new(&c).unwrap();
        assert_eq!(coh.h1_rank(), 2);
        assert!(coh.h1_torsion().is_empty());
        // H^2 of the torus presentation complex is Z
        assert_eq!(coh.h2.free_rank(), 1);
        assert!(coh.h2.torsion().is_empty());
        // generator classes form a basis
        let mut e1 = vec![BigInt::from(0); c.rank(1)];
        e1[pc.generator_edges[0]] = BigInt::from(1);
        let mut e2 = vec![BigInt::from(0); c.rank(1)];
        e2[pc.generator_edges[1]] = BigInt::from(1);
        let coh = coh
            .rebase_h1(&[e1, e2], BasedModule::standard("h", 2))
            .unwrap();
        assert_eq!(coh.h1_rank(), 2);
    }

    #[test]
    fn heisenberg_euler_characteristic() {
        // two length-10 relators: H_2 rank 2 for the standard 2-complex
        let c12 = commutator(&[1], &[2]);
        let r1 = commutator(&[1], &c12);
        let r2 = commutator(&[2], &c12);
        let p = GroupPresentation::new(2, vec![r1, r2]).unwrap();
        let pc = presentation_complex(&p).unwrap();
        let c = ChainComplex::of(&pc.set);
        let coh = Cohomology::new(&c).unwrap();
        assert_eq!(coh.h1_rank(), 2);
        assert_eq!(coh.h2.free_rank(), 2);
        assert!(coh.h2.torsion().is_empty());
    }
}
