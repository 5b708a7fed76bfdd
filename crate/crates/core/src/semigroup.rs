//! The Weierstrass semigroup at infinity, `H = <q, s>`, and the monomial
//! basis of the Riemann-Roch spaces `L(m P_inf)`.
//!
//! `x` has pole order `q` and `y` has pole order `s` at infinity. Since
//! `gcd(q, s) = 1`, every element of `H` has exactly one representation
//! `i q + j s` with `0 <= j <= q - 1`, so the monomials `x^i y^j` in that
//! range with pole order at most `m` form a basis of `L(m P_inf)`.

use crate::curve::Curve;

/// Elements of `<q, s>` in `[0, m]`, ascending. Empty for `m < 0`.
pub fn elements_up_to(q: u32, s: u32, m: i64) -> Vec<u64> {
    if m < 0 {
        return Vec::new();
    }
    let m = m as u64;
    let (q, s) = (q as u64, s as u64);
    let mut member = vec![false; m as usize + 1];
    let mut j = 0u64;
    while j * s <= m {
        let mut v = j * s;
        while v <= m {
            member[v as usize] = true;
            v += q;
        }
        j += 1;
    }
    member
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(v, _)| v as u64)
        .collect()
}

/// The gap sequence of `<q, s>`; its length is the genus `(q-1)(s-1)/2`.
pub fn gaps(q: u32, s: u32) -> Vec<u64> {
    let conductor = (q as i64 - 1) * (s as i64 - 1);
    let members = elements_up_to(q, s, conductor - 1);
    let mut out = Vec::new();
    let mut it = members.iter().peekable();
    for v in 0..conductor.max(0) as u64 {
        if it.peek() == Some(&&v) {
            it.next();
        } else {
            out.push(v);
        }
    }
    out
}

/// `dim L(m P_inf)`.
pub fn ell(curve: &Curve, m: i64) -> usize {
    ell_qs(curve.q(), curve.s(), m)
}

pub(crate) fn ell_qs(q: u32, s: u32, m: i64) -> usize {
    if m < 0 {
        return 0;
    }
    let g = ((q - 1) * (s - 1) / 2) as i64;
    if m >= 2 * g - 1 {
        return (m + 1 - g) as usize;
    }
    elements_up_to(q, s, m).len()
}

/// Exponent pair `(i, j)` standing for the function `x^i y^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    q: u32,
    s: u32,
    entries: Vec<Monomial>,
}

impl MonomialBasis {
    pub fn entries(&self) -> &[Monomial] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn pole_order(&self, mono: Monomial) -> u64 {
        mono.i as u64 * self.q as u64 + mono.j as u64 * self.s as u64
    }

    pub fn pole_orders(&self) -> Vec<u64> {
        self.entries.iter().map(|&e| self.pole_order(e)).collect()
    }
}

/// Basis of `L(m P_inf)`: all `x^i y^j` with `i q + j s <= m` and
/// `0 <= j <= q - 1`, sorted by pole order. Empty for `m < 0`.
pub fn monomial_basis(curve: &Curve, m: i64) -> MonomialBasis {
    let (q, s) = (curve.q(), curve.s());
    let mut entries = Vec::new();
    if m >= 0 {
        let m = m as u64;
        for j in 0..q {
            let base = j as u64 * s as u64;
            if base > m {
                break;
            }
            let max_i = (m - base) / q as u64;
            entries.extend((0..=max_i).map(|i| Monomial { i: i as u32, j }));
        }
    }
    let mut basis = MonomialBasis { q, s, entries };
    basis
        .entries
        .sort_by_key(|&e| e.i as u64 * q as u64 + e.j as u64 * s as u64);
    basis
}

/// Count of `i q + j s <= m` with `0 <= j <= jmax`, the literal monomial
/// count for an arbitrary bound on `j`.
pub fn count_monomials_with_j_bound(q: u32, s: u32, m: i64, jmax: u32) -> usize {
    if m < 0 {
        return 0;
    }
    let m = m as u64;
    (0..=jmax as u64)
        .take_while(|j| j * s as u64 <= m)
        .map(|j| ((m - j * s as u64) / q as u64 + 1) as usize)
        .sum()
}
