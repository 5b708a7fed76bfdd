//! Codeword enumeration, weight enumerators and the MacWilliams transform.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::LinearCode;
use crate::error::{Error, Result};
use crate::galois::FieldElement;

/// Largest codebook that may be enumerated.
pub const ENUMERATION_GUARD: u64 = 10_000_000;

/// `|F|^k`, saturating.
pub(crate) fn codeword_count(code: &LinearCode) -> u128 {
    let size = code.field().size() as u128;
    (0..code.k()).fold(1u128, |acc, _| acc.saturating_mul(size))
}

pub(crate) fn check_guard(code: &LinearCode) -> Result<()> {
    let count = codeword_count(code);
    if count > ENUMERATION_GUARD as u128 {
        return Err(Error::EnumerationGuard {
            count,
            limit: ENUMERATION_GUARD,
        });
    }
    Ok(())
}

/// Visits `(message, codeword)` for every message in lexicographic order of
/// canonical encodings (first coordinate most significant). With `first`
/// set, only messages whose first coordinate equals it are visited.
///
/// Consecutive messages differ in a suffix, and the codeword is updated by
/// `(new - old) * row` per changed coordinate.
pub(crate) fn walk_codewords<F>(code: &LinearCode, first: Option<FieldElement>, mut visit: F)
where
    F: FnMut(&[FieldElement], &[FieldElement]),
{
    let f = code.field();
    let g = code.generator();
    let (k, n) = (code.k(), code.n());
    let mut msg = vec![FieldElement::ZERO; k];
    let mut cw = vec![FieldElement::ZERO; n];
    let mut start = 0;
    if let Some(v) = first {
        if k == 0 {
            return;
        }
        msg[0] = v;
        for (c, slot) in cw.iter_mut().enumerate() {
            *slot = f.mul(v, g.get(0, c));
        }
        start = 1;
    }
    let size = f.size();
    loop {
        visit(&msg, &cw);
        let mut i = k;
        loop {
            if i == start {
                return;
            }
            i -= 1;
            let old = msg[i];
            let next = old.enc() + 1;
            let new = if next == size {
                FieldElement::ZERO
            } else {
                f.element(next).expect("next encoding is in range")
            };
            let delta = f.sub(new, old);
            for (c, slot) in cw.iter_mut().enumerate() {
                *slot = f.add(*slot, f.mul(delta, g.get(i, c)));
            }
            msg[i] = new;
            if !new.is_zero() {
                break;
            }
        }
    }
}

fn weight(word: &[FieldElement]) -> usize {
    word.iter().filter(|a| !a.is_zero()).count()
}

/// Runs `per_prefix` over each value of the first message coordinate in
/// parallel (or once for `k = 0`) and collects results in prefix order.
fn par_prefixes<T, F>(code: &LinearCode, per_prefix: F) -> Vec<T>
where
    T: Send,
    F: Fn(Option<FieldElement>) -> T + Sync,
{
    if code.k() == 0 {
        return vec![per_prefix(None)];
    }
    let prefixes: Vec<_> = code.field().elements().collect();
    prefixes
        .into_par_iter()
        .map(|v| per_prefix(Some(v)))
        .collect()
}

/// `A_0..A_n`, `A_w` the number of codewords of weight `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    counts: Vec<BigUint>,
}

impl WeightEnumerator {
    pub fn from_counts<T: Into<BigUint>>(counts: impl IntoIterator<Item = T>) -> WeightEnumerator {
        WeightEnumerator {
            counts: counts.into_iter().map(Into::into).collect(),
        }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, w: usize) -> &BigUint {
        &self.counts[w]
    }

    pub fn len(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.counts.len() <= 1
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Smallest positive weight present; `None` for the zero code.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .map(|(w, _)| w)
    }

    /// Counts as `u64` where they fit (for display).
    pub fn counts_u64(&self) -> Option<Vec<u64>> {
        self.counts.iter().map(ToPrimitive::to_u64).collect()
    }
}

pub fn weight_enumerator(code: &LinearCode) -> Result<WeightEnumerator> {
    check_guard(code)?;
    let n = code.n();
    let partial = par_prefixes(code, |first| {
        let mut hist = vec![0u64; n + 1];
        walk_codewords(code, first, |_, cw| hist[weight(cw)] += 1);
        hist
    });
    let mut hist = vec![0u64; n + 1];
    for h in partial {
        for (a, b) in hist.iter_mut().zip(h) {
            *a += b;
        }
    }
    Ok(WeightEnumerator::from_counts(hist))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DistanceMode {
    Exhaustive,
    Enumerator,
    Bound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Distance {
    pub d: usize,
    pub exact: bool,
}

/// Minimum distance; `Ok(None)` for the zero code.
///
/// `Bound` reports `max(n - m, 1)` from the code's curve metadata, flagged
/// inexact.
pub fn min_distance(code: &LinearCode, mode: DistanceMode) -> Result<Option<Distance>> {
    if code.k() == 0 {
        return Ok(None);
    }
    match mode {
        DistanceMode::Exhaustive => {
            check_guard(code)?;
            let n = code.n();
            let best = par_prefixes(code, |first| {
                let mut best = usize::MAX;
                walk_codewords(code, first, |msg, cw| {
                    if msg.iter().any(|a| !a.is_zero()) {
                        best = best.min(weight(cw));
                    }
                });
                best
            })
            .into_iter()
            .min()
            .unwrap_or(usize::MAX);
            debug_assert!(best <= n);
            Ok(Some(Distance {
                d: best,
                exact: true,
            }))
        }
        DistanceMode::Enumerator => Ok(weight_enumerator(code)?
            .min_distance()
            .map(|d| Distance { d, exact: true })),
        DistanceMode::Bound => {
            let designed = code.designed_distance().ok_or(Error::NoDesignedDistance)?;
            Ok(Some(Distance {
                d: designed.max(1) as usize,
                exact: false,
            }))
        }
    }
}

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}

/// Dual weight enumerator of an `[n, k]` code over an alphabet of size `q`:
/// `B_w = q^{-k} sum_v A_v K_w(v)`, with Krawtchouk coefficients
/// `K_w(v) = sum_j (-1)^j (q-1)^{w-j} C(v, j) C(n-v, w-j)`.
pub fn macwilliams_dual_enumerator(
    we: &WeightEnumerator,
    n: usize,
    k: usize,
    q: u32,
) -> Result<WeightEnumerator> {
    if we.counts.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: we.counts.len(),
        });
    }
    let code_size = BigUint::from(q).pow(k as u32);
    if we.total() != code_size {
        return Err(Error::InvalidEnumerator(format!(
            "counts sum to {} but the code has {} words",
            we.total(),
            code_size
        )));
    }
    let binom = binomials(n);
    let c = |a: usize, b: usize| -> &BigInt { &binom[a][b] };
    let qm1_pow: Vec<BigInt> = {
        let mut v = Vec::with_capacity(n + 1);
        let mut cur = BigInt::one();
        for _ in 0..=n {
            v.push(cur.clone());
            cur *= BigInt::from(q - 1);
        }
        v
    };
    let support: Vec<(usize, BigInt)> = we
        .counts
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(v, a)| (v, BigInt::from(a.clone())))
        .collect();
    let divisor = BigInt::from(code_size);
    let mut out = Vec::with_capacity(n + 1);
    for w in 0..=n {
        let mut sum = BigInt::zero();
        for (v, a) in &support {
            let v = *v;
            let mut kraw = BigInt::zero();
            for j in 0..=w.min(v) {
                if w - j > n - v {
                    continue;
                }
                let term = &qm1_pow[w - j] * c(v, j) * c(n - v, w - j);
                if j % 2 == 0 {
                    kraw += term;
                } else {
                    kraw -= term;
                }
            }
            sum += a * kraw;
        }
        if sum.is_negative() || !(&sum % &divisor).is_zero() {
            return Err(Error::MacWilliams(w));
        }
        let b = (sum / &divisor).to_biguint().expect("nonnegative");
        out.push(b);
    }
    Ok(WeightEnumerator { counts: out })
}

/// Exact minimum distance of the Euclidean dual via MacWilliams. `Ok(None)`
/// when the dual is the zero code.
pub fn dual_distance(code: &LinearCode) -> Result<Option<usize>> {
    let we = weight_enumerator(code)?;
    let dual = macwilliams_dual_enumerator(&we, code.n(), code.k(), code.field().size())?;
    Ok(dual.min_distance())
}
