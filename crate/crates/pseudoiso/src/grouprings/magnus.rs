use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::validate_word;
use crate::error::{Error, Result};

/// An element of the free associative algebra on `x_1, ..., x_n` truncated
/// below degree `k`: homogeneous components of degrees `0 .. k-1`, stored
/// flat over the lexicographic word bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeTruncSeries {
    n: usize,
    k: usize,
    coeffs: Vec<BigInt>,
}

/// Number of words of length `< k` over `n` letters.
pub fn trunc_rank(n: usize, k: usize) -> usize {
    (0..k).map(|d| n.pow(d as u32)).sum()
}

/// Offset of the degree-`d` block in the flat coefficient vector.
pub fn degree_offset(n: usize, d: usize) -> usize {
    trunc_rank(n, d)
}

impl FreeTruncSeries {
    pub fn zero(n: usize, k: usize) -> Self {
        FreeTruncSeries {
            n,
            k,
            coeffs: vec![BigInt::zero(); trunc_rank(n, k)],
        }
    }

    pub fn one(n: usize, k: usize) -> Self {
        let mut s = Self::zero(n, k);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// The generator `x_i` (0-based).
    pub fn generator(n: usize, k: usize, i: usize) -> Self {
        assert!(i < n);
        let mut s = Self::zero(n, k);
        if k > 1 {
            s.coeffs[1 + i] = BigInt::one();
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff_mut(&mut self, idx: usize) -> &mut BigInt {
        &mut self.coeffs[idx]
    }

    /// Coefficient of the word `w` (letters 0-based).
    pub fn word_coeff(&self, w: &[usize]) -> &BigInt {
        &self.coeffs[self.word_index(w)]
    }

    pub fn word_index(&self, w: &[usize]) -> usize {
        assert!(w.len() < self.k);
        let mut idx = 0usize;
        for &l in w {
            debug_assert!(l < self.n);
            idx = idx * self.n + l;
        }
        degree_offset(self.n, w.len()) + idx
    }

    /// The degree-`d` homogeneous component as a dense vector of length
    /// `n^d`.
    pub fn degree_part(&self, d: usize) -> Vec<BigInt> {
        assert!(d < self.k);
        let start = degree_offset(self.n, d);
        self.coeffs[start..start + self.n.pow(d as u32)].to_vec()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.k), (other.n, other.k));
        FreeTruncSeries {
            n: self.n,
            k: self.k,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.k), (other.n, other.k));
        FreeTruncSeries {
            n: self.n,
            k: self.k,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        FreeTruncSeries {
            n: self.n,
            k: self.k,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated product (concatenation of words, degrees `>= k` dropped).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.k), (other.n, other.k));
        let (n, k) = (self.n, self.k);
        let mut out = Self::zero(n, k);
        for d1 in 0..k {
            let o1 = degree_offset(n, d1);
            let len1 = n.pow(d1 as u32);
            for w1 in 0..len1 {
                let a = &self.coeffs[o1 + w1];
                if a.is_zero() {
                    continue;
                }
                for d2 in 0..k - d1 {
                    let o2 = degree_offset(n, d2);
                    let len2 = n.pow(d2 as u32);
                    let oo = degree_offset(n, d1 + d2);
                    for w2 in 0..len2 {
                        let b = &other.coeffs[o2 + w2];
                        if !b.is_zero() {
                            out.coeffs[oo + w1 * len2 + w2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Multiply by the generator `x_i` on the left/right (cheap special
    /// cases used by ideal saturation).
    pub fn mul_generator_left(&self, i: usize) -> Self {
        let g = Self::generator(self.n, self.k, i);
        g.mul(self)
    }

    pub fn mul_generator_right(&self, i: usize) -> Self {
        let g = Self::generator(self.n, self.k, i);
        self.mul(&g)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest degree with a nonzero component, if any.
    pub fn valuation(&self) -> Option<usize> {
        for d in 0..self.k {
            if self.degree_part(d).iter().any(|c| !c.is_zero()) {
                return Some(d);
            }
        }
        None
    }
}

/// Image of a reduced word under the truncated Magnus expansion
/// `g_i -> 1 + x_i`, `g_i^{-1} -> 1 - x_i + x_i^2 - ...`, computed modulo
/// degree `k`.
pub fn magnus_expand(n: usize, word: &[i64], k: usize) -> Result<FreeTruncSeries> {
    if !(1..=5).contains(&k) {
        return Err(Error::input(format!("truncation level {k} out of range 1..=5")));
    }
    validate_word(n, word)?;
    let mut acc = FreeTruncSeries::one(n, k);
    for &l in word {
        let i = (l.unsigned_abs() as usize) - 1;
        let factor = if l > 0 {
            let mut f = FreeTruncSeries::one(n, k);
            if k > 1 {
                *f.coeff_mut(1 + i) = BigInt::one();
            }
            f
        } else {
            // alternating geometric series in x_i
            let mut f = FreeTruncSeries::one(n, k);
            let mut pow = FreeTruncSeries::one(n, k);
            let x = FreeTruncSeries::generator(n, k, i);
            for d in 1..k {
                pow = pow.mul(&x);
                let signed = if d % 2 == 1 { pow.scale(&-BigInt::one()) } else { pow.clone() };
                f = f.add(&signed);
            }
            f
        };
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouprings::commutator;

    #[test]
    fn single_generator() {
        let s = magnus_expand(2, &[1], 3).unwrap();
        assert_eq!(*s.word_coeff(&[]), BigInt::one());
        assert_eq!(*s.word_coeff(&[0]), BigInt::one());
        assert!(s.word_coeff(&[1]).is_zero());
        assert!(s.degree_part(2).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn inverse_expansion() {
        // g^{-1} g = 1 exactly after truncation
        for k in 1..=5 {
            let a = magnus_expand(1, &[-1], k).unwrap();
            let b = magnus_expand(1, &[1], k).unwrap();
            assert_eq!(a.mul(&b), FreeTruncSeries::one(1, k));
            assert_eq!(b.mul(&a), FreeTruncSeries::one(1, k));
        }
    }

    #[test]
    fn commutator_degree_two() {
        let c = commutator(&[1], &[2]);
        let s = magnus_expand(2, &c, 3).unwrap();
        assert_eq!(*s.word_coeff(&[]), BigInt::one());
        assert!(s.degree_part(1).iter().all(|v| v.is_zero()));
        assert_eq!(*s.word_coeff(&[0, 1]), BigInt::one());
        assert_eq!(*s.word_coeff(&[1, 0]), -BigInt::one());
        assert!(s.word_coeff(&[0, 0]).is_zero());
        assert!(s.word_coeff(&[1, 1]).is_zero());
    }

    #[test]
    fn multiplicativity_on_random_words() {
        let mut seed = 42u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) as usize
        };
        for _ in 0..40 {
            let n = 1 + next() % 3;
            let k = 1 + next() % 5;
            let mk_word = |next: &mut dyn FnMut() -> usize| -> Vec<i64> {
                let len = next() % 6;
                (0..len)
                    .map(|_| {
                        let g = (next() % n + 1) as i64;
                        if next() % 2 == 0 {
                            g
                        } else {
                            -g
                        }
                    })
                    .collect()
            };
            let u = mk_word(&mut next);
            let v = mk_word(&mut next);
            let uv: Vec<i64> = u.iter().chain(&v).copied().collect();
            let lhs = magnus_expand(n, &uv, k).unwrap();
            let rhs = magnus_expand(n, &u, k).unwrap().mul(&magnus_expand(n, &v, k).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn letter_out_of_range() {
        assert!(magnus_expand(2, &[3], 3).is_err());
        assert!(magnus_expand(2, &[0], 3).is_err());
        assert!(magnus_expand(2, &[1], 6).is_err());
    }
}
