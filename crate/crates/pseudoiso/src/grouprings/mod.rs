//! Free-group words, the truncated Magnus expansion, augmentation-power
//! quotients of group rings, lower-central-series membership, and the
//! graded commutator data attached to a presentation.

mod dk;
mod lcs;
mod magnus;

pub use dk::{group_ring_quotient, GroupRingQuotient};
pub use lcs::{
    build_lcs_data, delta_bar_h2, tau_bar_split_check, DeltaBarH2, LcsData,
};
pub use magnus::{gamma_member, magnus_expand, FreeTruncSeries};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite presentation: `n` generators and relators as reduced words.
/// Letters are nonzero signed integers, `i` for the `i`-th generator and
/// `-i` for its inverse (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    generators: usize,
    relators: Vec<Vec<i64>>,
}

impl GroupPresentation {
    /// Build and validate. Empty relators are dropped (callers that care
    /// can diff `relators()` against what they passed).
    pub fn new(generators: usize, relators: Vec<Vec<i64>>) -> Result<Self> {
        let mut kept = Vec::new();
        for (ri, w) in relators.into_iter().enumerate() {
            if w.is_empty() {
                continue;
            }
            validate_word(generators, &w)
                .map_err(|e| Error::input(format!("relator {ri}: {e}")))?;
            if !is_reduced(&w) {
                return Err(Error::input(format!("relator {ri} is not reduced")));
            }
            kept.push(w);
        }
        Ok(GroupPresentation {
            generators,
            relators: kept,
        })
    }

    pub fn free(generators: usize) -> Self {
        GroupPresentation {
            generators,
            relators: Vec::new(),
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Vec<i64>] {
        &self.relators
    }

    /// Exponent sum of each generator in the given word.
    pub fn exponent_sums(word: &[i64], n: usize) -> Vec<i64> {
        let mut s = vec![0i64; n];
        for &l in word {
            let idx = (l.unsigned_abs() as usize) - 1;
            s[idx] += l.signum();
        }
        s
    }

    /// True iff every relator has zero exponent sum in every generator
    /// (equivalently, lies in the commutator subgroup), which forces
    /// `H_1 = Z^n` on the nose.
    pub fn relators_in_commutator_subgroup(&self) -> bool {
        self.relators
            .iter()
            .all(|w| Self::exponent_sums(w, self.generators).iter().all(|s| *s == 0))
    }
}

pub(crate) fn validate_word(n: usize, word: &[i64]) -> Result<()> {
    for &l in word {
        if l == 0 || l.unsigned_abs() as usize > n {
            return Err(Error::input(format!("letter out of range: {l}")));
        }
    }
    Ok(())
}

pub(crate) fn is_reduced(word: &[i64]) -> bool {
    word.windows(2).all(|w| w[0] != -w[1])
}

/// Free reduction of a word.
pub fn reduce_word(word: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// The commutator `[u, v] = u v u^{-1} v^{-1}` as a reduced word.
pub fn commutator(u: &[i64], v: &[i64]) -> Vec<i64> {
    let mut w = Vec::with_capacity(2 * (u.len() + v.len()));
    w.extend_from_slice(u);
    w.extend_from_slice(v);
    w.extend(u.iter().rev().map(|l| -l));
    w.extend(v.iter().rev().map(|l| -l));
    reduce_word(&w)
}

/// Inverse of a word.
pub fn invert_word(w: &[i64]) -> Vec<i64> {
    w.iter().rev().map(|l| -l).collect()
}
