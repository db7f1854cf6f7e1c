use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntMatrix;

/// Smith normal form `U * A * V = S` with `U`, `V` unimodular and `S`
/// diagonal with nonnegative entries in a divisibility chain
/// `d_1 | d_2 | ...`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    rank: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The nonzero diagonal entries `d_1 | ... | d_r`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).collect()
    }
}

impl IntMatrix {
    /// Smith normal form. Pivots are chosen with minimal absolute value to
    /// limit coefficient growth; the divisibility chain is enforced at the
    /// end by folding offending pairs back into the elimination.
    pub fn smith_normal_form(&self) -> SmithForm {
        let mut s = self.clone();
        let mut u = IntMatrix::identity(self.rows());
        let mut v = IntMatrix::identity(self.cols());
        let n = self.rows().min(self.cols());

        let mut pivot = 0;
        while pivot < n {
            if !place_pivot(&mut s, &mut u, &mut v, pivot) {
                break; // rest of the matrix is zero
            }
            reduce_pivot(&mut s, &mut u, &mut v, pivot);
            pivot += 1;
        }
        let mut rank = pivot;

        // make diagonal nonnegative
        for i in 0..rank {
            if s[(i, i)].is_negative() {
                s.negate_row(i);
                u.negate_row(i);
            }
        }

        // enforce d_i | d_{i+1}: fold the offending entry into column i and
        // re-eliminate the 2x2 block
        let mut stable = false;
        while !stable {
            stable = true;
            for i in 0..rank.saturating_sub(1) {
                let a = s[(i, i)].clone();
                let b = s[(i + 1, i + 1)].clone();
                if (&b % &a).is_zero() {
                    continue;
                }
                stable = false;
                // col_i += col_{i+1} puts b into position (i+1, i)
                s.add_col_multiple(i, i + 1, &BigInt::one());
                v.add_col_multiple(i, i + 1, &BigInt::one());
                reduce_pivot(&mut s, &mut u, &mut v, i);
                reduce_pivot(&mut s, &mut u, &mut v, i + 1);
                for k in [i, i + 1] {
                    if s[(k, k)].is_negative() {
                        s.negate_row(k);
                        u.negate_row(k);
                    }
                }
            }
        }

        // a pivot may have become zero only through exact cancellation,
        // which reduce_pivot never produces; recount defensively anyway
        while rank > 0 && s[(rank - 1, rank - 1)].is_zero() {
            rank -= 1;
        }

        debug_assert_eq!(u.mul(self).mul(&v), s, "U*A*V != S");
        SmithForm { u, s, v, rank }
    }

    /// Rank over the rationals (= number of invariant factors).
    pub fn rank(&self) -> usize {
        self.smith_normal_form().rank()
    }

    /// Solve `self * x = b` over the integers.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.rows(), "solve: rhs length mismatch");
        self.smith_normal_form().solve(b)
    }

    /// Column basis of the kernel `{x : self * x = 0}`. The basis is
    /// unimodularly extendable, so the kernel is saturated.
    pub fn kernel(&self) -> IntMatrix {
        let snf = self.smith_normal_form();
        let idx: Vec<usize> = (snf.rank()..self.cols()).collect();
        snf.v.select_columns(&idx)
    }

    /// Inverse of a unimodular matrix. Panics if not square; returns `None`
    /// if the determinant is not a unit.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        assert_eq!(self.rows(), self.cols(), "inverse of non-square matrix");
        let snf = self.smith_normal_form();
        if snf.rank() != self.rows() || snf.invariant_factors().iter().any(|d| !d.is_one()) {
            return None;
        }
        // U A V = I  =>  A^{-1} = V U
        Some(snf.v.mul(&snf.u))
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows() == self.cols() && self.inverse_unimodular().is_some()
    }

    /// Canonical row Hermite normal form of the row span: pivots positive,
    /// entries above each pivot reduced into `[0, pivot)`, zero rows
    /// dropped. Two matrices have equal row spans iff their canonical
    /// forms agree.
    pub fn row_hnf(&self) -> IntMatrix {
        let mut m = self.clone();
        let rows = m.rows();
        let cols = m.cols();
        let mut r = 0; // next pivot row
        for c in 0..cols {
            if r == rows {
                break;
            }
            // gcd-combine rows r.. to leave a single nonzero entry at (r, c)
            loop {
                let mut best: Option<usize> = None;
                for i in r..rows {
                    if m[(i, c)].is_zero() {
                        continue;
                    }
                    best = match best {
                        None => Some(i),
                        Some(j) if m[(i, c)].abs() < m[(j, c)].abs() => Some(i),
                        keep => keep,
                    };
                }
                let Some(i) = best else { break };
                m.swap_rows(r, i);
                let mut done = true;
                for j in r + 1..rows {
                    if m[(j, c)].is_zero() {
                        continue;
                    }
                    let q = div_floor_big(&m[(j, c)], &m[(r, c)]);
                    m.add_row_multiple(j, r, &-q);
                    if !m[(j, c)].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if m[(r, c)].is_zero() {
                continue;
            }
            if m[(r, c)].is_negative() {
                m.negate_row(r);
            }
            // reduce entries above the pivot into [0, pivot)
            for j in 0..r {
                let q = div_floor_big(&m[(j, c)], &m[(r, c)]);
                m.add_row_multiple(j, r, &-q);
            }
            r += 1;
        }
        m.select_rows(&(0..r).collect::<Vec<_>>())
    }
}

impl SmithForm {
    /// Solve `A x = b` where this form came from `A`.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let ub = self.u.mul_vec(b);
        let mut y = vec![BigInt::zero(); self.s.cols()];
        for (i, ubi) in ub.iter().enumerate() {
            if i < self.rank {
                let d = &self.s[(i, i)];
                let (q, r) = ubi.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            } else if !ubi.is_zero() {
                return None;
            }
        }
        Some(self.v.mul_vec(&y))
    }
}

fn div_floor_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

/// Move a minimal-absolute-value nonzero entry of the trailing submatrix to
/// the pivot position. Returns false if the submatrix is zero.
fn place_pivot(s: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, pivot: usize) -> bool {
    let mut best: Option<(usize, usize)> = None;
    for i in pivot..s.rows() {
        for j in pivot..s.cols() {
            if s[(i, j)].is_zero() {
                continue;
            }
            best = match best {
                None => Some((i, j)),
                Some(b) if s[(i, j)].abs() < s[b].abs() => Some((i, j)),
                keep => keep,
            };
        }
    }
    let Some((i, j)) = best else {
        return false;
    };
    s.swap_rows(pivot, i);
    u.swap_rows(pivot, i);
    s.swap_cols(pivot, j);
    v.swap_cols(pivot, j);
    true
}

/// Clear the pivot row and column by repeated remainder steps, re-picking a
/// smaller pivot whenever a remainder undercuts it.
fn reduce_pivot(s: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, pivot: usize) {
    loop {
        if s[(pivot, pivot)].is_zero() && !place_pivot(s, u, v, pivot) {
            return;
        }
        let mut clean = true;
        for i in pivot + 1..s.rows() {
            if s[(i, pivot)].is_zero() {
                continue;
            }
            let q = &s[(i, pivot)] / &s[(pivot, pivot)];
            s.add_row_multiple(i, pivot, &-&q);
            u.add_row_multiple(i, pivot, &-&q);
            if !s[(i, pivot)].is_zero() {
                // remainder is strictly smaller; promote it
                s.swap_rows(pivot, i);
                u.swap_rows(pivot, i);
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        for j in pivot + 1..s.cols() {
            if s[(pivot, j)].is_zero() {
                continue;
            }
            let q = &s[(pivot, j)] / &s[(pivot, pivot)];
            s.add_col_multiple(j, pivot, &-&q);
            v.add_col_multiple(j, pivot, &-&q);
            if !s[(pivot, j)].is_zero() {
                s.swap_cols(pivot, j);
                v.swap_cols(pivot, j);
                clean = false;
            }
        }
        if clean {
            return;
        }
    }
}
