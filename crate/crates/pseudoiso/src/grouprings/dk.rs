use num_bigint::BigInt;
use num_traits::One;

use super::magnus::{magnus_expand, trunc_rank, FreeTruncSeries};
use super::GroupPresentation;
use crate::error::{Error, Result};
use crate::zlinalg::{AbelianPresentation, Lattice};

/// The quotient of the integral group ring by the `k`-th power of the
/// augmentation ideal, realized as a quotient of the degree-`< k`
/// truncated tensor algebra on the generators.
#[derive(Clone, Debug)]
pub struct GroupRingQuotient {
    n: usize,
    k: usize,
    /// The quotient as an abelian group over the word basis.
    pub presentation: AbelianPresentation,
    /// Span of the truncated relator ideal inside the word basis.
    pub relation_lattice: Lattice,
    /// Ideal generators kept for audits (`u * (magnus(r) - 1) * v`).
    pub ideal_generators: Vec<FreeTruncSeries>,
    /// Quotient coordinates of the classes of `1 + x_i`.
    pub generator_images: Vec<Vec<BigInt>>,
    /// Quotient coordinates of the unit.
    pub unit_image: Vec<BigInt>,
}

/// Build the augmentation-power quotient at level `k <= 4`.
///
/// The two-sided ideal is spanned by `u * (magnus(r) - 1) * v` over basis
/// words with `|u| + |v| <= k - 3`: relators with zero exponent sums have
/// Magnus valuation at least 2, so longer sandwiches truncate to zero.
/// Relators with nonzero exponent sums only have valuation 1 and are
/// rejected for `k >= 3`.
pub fn group_ring_quotient(p: &GroupPresentation, k: usize) -> Result<GroupRingQuotient> {
    if !(1..=4).contains(&k) {
        return Err(Error::input(format!("level {k} out of range 1..=4")));
    }
    let n = p.generators();
    let commutator_relators = p.relators_in_commutator_subgroup();
    if !commutator_relators && k >= 3 {
        return Err(Error::input(
            "relators with nonzero exponent sums are outside the supported hypotheses for k >= 3 \
             (the ideal saturation bound needs Magnus valuation >= 2)",
        ));
    }
    let sandwich_budget: i64 = if commutator_relators {
        k as i64 - 3
    } else {
        k as i64 - 2
    };

    let mut ideal_generators: Vec<FreeTruncSeries> = Vec::new();
    for r in p.relators() {
        let m = magnus_expand(n, r, k)?.sub(&FreeTruncSeries::one(n, k));
        if m.is_zero() {
            continue;
        }
        let mut sandwiched = vec![m];
        let mut frontier = sandwiched.clone();
        for _ in 0..sandwich_budget.max(0) {
            let mut next = Vec::new();
            for e in &frontier {
                for i in 0..n {
                    next.push(e.mul_generator_left(i));
                }
            }
            // right multiplications of everything collected so far by one
            // more letter are generated as left-multiples of right-multiples;
            // enumerate both sides explicitly instead
            frontier = next;
            sandwiched.extend(frontier.iter().cloned());
        }
        // right sandwiches (and mixed ones) on top of every left sandwich
        let mut all = sandwiched.clone();
        for e in &sandwiched {
            let mut level = vec![e.clone()];
            let used = e
                .valuation()
                .map(|v| v as i64 - if commutator_relators { 2 } else { 1 })
                .unwrap_or(0);
            for _ in 0..(sandwich_budget - used).max(0) {
                let mut next = Vec::new();
                for f in &level {
                    for i in 0..n {
                        next.push(f.mul_generator_right(i));
                    }
                }
                all.extend(next.iter().cloned());
                level = next;
            }
        }
        ideal_generators.extend(all.into_iter().filter(|e| !e.is_zero()));
    }

    let ambient = trunc_rank(n, k);
    let cols: Vec<Vec<BigInt>> = ideal_generators
        .iter()
        .map(|e| e.coeffs().to_vec())
        .collect();
    let relation_lattice = Lattice::from_columns(ambient, &cols);
    let presentation = AbelianPresentation::cokernel(ambient, &relation_lattice)?;

    let unit_image = presentation.reduce(FreeTruncSeries::one(n, k).coeffs());
    let generator_images = (0..n)
        .map(|i| {
            let g = FreeTruncSeries::one(n, k).add(&FreeTruncSeries::generator(n, k, i));
            presentation.reduce(g.coeffs())
        })
        .collect();

    Ok(GroupRingQuotient {
        n,
        k,
        presentation,
        relation_lattice,
        ideal_generators,
        generator_images,
        unit_image,
    })
}

impl GroupRingQuotient {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Product of two quotient elements via lifted representatives.
    pub fn multiply(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let la = self.lift_series(a);
        let lb = self.lift_series(b);
        self.presentation.reduce(la.mul(&lb).coeffs())
    }

    fn lift_series(&self, coords: &[BigInt]) -> FreeTruncSeries {
        let amb = self.presentation.lift(coords);
        let mut s = FreeTruncSeries::zero(self.n, self.k);
        for (i, v) in amb.into_iter().enumerate() {
            *s.coeff_mut(i) = v;
        }
        s
    }

    /// Saturation audit: multiplying any stored ideal generator by any
    /// generator letter on either side stays inside the relation span.
    pub fn ideal_is_two_sided(&self) -> Result<bool> {
        for e in &self.ideal_generators {
            for i in 0..self.n {
                for s in [e.mul_generator_left(i), e.mul_generator_right(i)] {
                    if !self.relation_lattice.contains(s.coeffs())? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Quotient class of the Magnus expansion of a word.
    pub fn class_of_word(&self, word: &[i64]) -> Result<Vec<BigInt>> {
        let m = magnus_expand(self.n, word, self.k)?;
        Ok(self.presentation.reduce(m.coeffs()))
    }
}

/// Lower-central-series membership through class 4: `w` lies in the `k`-th
/// term iff the class of `magnus(w) - 1` vanishes at level `k`.
pub fn gamma_member(p: &GroupPresentation, word: &[i64], k: usize) -> Result<bool> {
    if !(1..=4).contains(&k) {
        return Err(Error::Unsupported(format!(
            "lower-central membership is only decided for k in 1..=4, got {k}"
        )));
    }
    let q = group_ring_quotient(p, k)?;
    let m = magnus_expand(p.generators(), word, k)?.sub(&FreeTruncSeries::one(p.generators(), k));
    Ok(q.presentation.is_zero_class(m.coeffs()))
}
