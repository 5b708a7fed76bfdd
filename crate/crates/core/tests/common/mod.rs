//! Brute-force oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use goppa_core::agcode::LinearCode;
use goppa_core::curve::{AffinePoint, Curve};
use goppa_core::galois::{Field, FieldElement};
use goppa_core::semigroup::ell;

pub fn curve(p: u32, s: u32) -> Arc<Curve> {
    Arc::new(Curve::new(Arc::new(Field::new(p, 1).unwrap()), s).unwrap())
}

pub fn maximal(p: u32) -> Arc<Curve> {
    curve(p, p.div_ceil(2))
}

fn pow_by_mul(f: &Field, a: FieldElement, e: u32) -> FieldElement {
    (0..e).fold(FieldElement::ONE, |acc, _| f.mul(acc, a))
}

/// Every pair `(x, y)` tested against `y^q + y = x^s` by repeated multiplication.
pub fn brute_points(c: &Curve) -> Vec<AffinePoint> {
    let f = c.field();
    let mut out = Vec::new();
    for x in f.elements() {
        let rhs = pow_by_mul(f, x, c.s());
        for y in f.elements() {
            if f.add(pow_by_mul(f, y, c.q()), y) == rhs {
                out.push(AffinePoint { x, y });
            }
        }
    }
    out
}

/// Gaps of `<q, s>` by testing each integer for a representation `a q + b s`.
pub fn brute_gaps(q: u64, s: u64) -> Vec<u64> {
    let bound = (q - 1) * (s - 1);
    (1..bound.max(1))
        .filter(|&v| !(0..=v / q).any(|a| (v - a * q).is_multiple_of(s)))
        .collect()
}

/// `k = n - ell(n + 2g - 2 - m)`, the dimension through the differential
/// code, valid for `2g - 2 < m`.
pub fn complement_dimension(c: &Curve, m: i64) -> usize {
    let n = c.points().len() as i64;
    let g = c.genus() as i64;
    n as usize - ell(c, n + 2 * g - 2 - m)
}

fn is_dual_word(code: &LinearCode, v: &[FieldElement]) -> bool {
    let f = code.field();
    code.generator().row_iter().all(|row| {
        row.iter()
            .zip(v)
            .fold(FieldElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            .is_zero()
    })
}

fn supports(
    n: usize,
    w: usize,
    start: usize,
    cur: &mut Vec<usize>,
    out: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if cur.len() == w {
        return out(cur);
    }
    for i in start..n {
        cur.push(i);
        if supports(n, w, i + 1, cur, out) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Smallest weight `w <= max_w` of a nonzero vector orthogonal to every
/// generator row, found by trying every support and nonzero value pattern.
/// The first value is fixed to 1 since the dual is closed under scaling.
pub fn dual_distance_search(code: &LinearCode, max_w: usize) -> Option<usize> {
    let f = code.field();
    let n = code.n();
    let nonzero: Vec<FieldElement> = f.elements().filter(|a| !a.is_zero()).collect();
    for w in 1..=max_w.min(n) {
        let mut found = false;
        supports(n, w, 0, &mut Vec::new(), &mut |supp| {
            let mut digits = vec![0usize; w - 1];
            loop {
                let mut v = vec![FieldElement::ZERO; n];
                v[supp[0]] = FieldElement::ONE;
                for (k, &i) in supp[1..].iter().enumerate() {
                    v[i] = nonzero[digits[k]];
                }
                if is_dual_word(code, &v) {
                    found = true;
                    return true;
                }
                let mut k = 0;
                loop {
                    if k == digits.len() {
                        return false;
                    }
                    digits[k] += 1;
                    if digits[k] < nonzero.len() {
                        break;
                    }
                    digits[k] = 0;
                    k += 1;
                }
            }
        });
        if found {
            return Some(w);
        }
    }
    None
}

/// Minimum weight over all nonzero codewords, by explicit linear combinations.
pub fn brute_min_distance(code: &LinearCode) -> Option<usize> {
    let f = code.field();
    let (k, n) = (code.k(), code.n());
    if k == 0 {
        return None;
    }
    let size = f.size() as u64;
    let total = size.pow(k as u32);
    let mut best = usize::MAX;
    for idx in 1..total {
        let mut rest = idx;
        let mut cw = vec![FieldElement::ZERO; n];
        for r in 0..k {
            let c = f.element((rest % size) as u32).unwrap();
            rest /= size;
            for (j, slot) in cw.iter_mut().enumerate() {
                *slot = f.add(*slot, f.mul(c, code.generator().get(r, j)));
            }
        }
        best = best.min(cw.iter().filter(|a| !a.is_zero()).count());
    }
    Some(best)
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Compares `actual` with the checked-in golden file. With `GOLDEN_UPDATE`
/// set the file is rewritten instead.
pub fn check_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_path(name);
    if std::env::var_os("GOLDEN_UPDATE").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).map_err(|e| e.to_string())?;
        std::fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected =
        std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!(
            "{} differs from the computed output",
            path.display()
        ))
    }
}

pub mod render {
    use std::fmt::Write;

    use goppa_core::agcode::{
        build_code, predicted_dimension, scan_self_orthogonality, scan_to_csv,
    };
    use goppa_core::channel::{simulate, ChannelKind, ChannelSpec};
    use goppa_core::quantum::{derive_params, DualDistanceMode};

    use super::{curve, maximal};

    pub fn scan_q3() -> String {
        scan_to_csv(&scan_self_orthogonality(&maximal(3), 16).unwrap())
    }

    /// Dimension audit over `m = -1..=n + 2g`.
    pub fn dimension_audit(p: u32) -> String {
        let c = maximal(p);
        let n = c.points().len() as i64;
        let g = c.genus() as i64;
        let mut out = String::from("m,k,paper_case,formula_value,agrees_with_paper\n");
        for m in -1..=n + 2 * g {
            let d = predicted_dimension(&c, m).unwrap();
            let _ = writeln!(
                out,
                "{m},{},{},{},{}",
                d.value, d.paper_case, d.formula_value, d.agrees_with_paper
            );
        }
        out
    }

    /// Quantum parameters for every self-orthogonal `m` in the listed ranges.
    pub fn quantum_params() -> String {
        let mut all = Vec::new();
        for (p, s, m_max) in [(3, 2, 16), (5, 3, 24), (3, 4, 12)] {
            let c = curve(p, s);
            for row in scan_self_orthogonality(&c, m_max).unwrap() {
                if row.self_orthogonal {
                    let code = build_code(&c, row.m, None).unwrap();
                    let mut v =
                        serde_json::to_value(derive_params(&code, DualDistanceMode::Auto).unwrap())
                            .unwrap();
                    v["s"] = s.into();
                    all.push(v);
                }
            }
        }
        serde_json::to_string_pretty(&all).unwrap() + "\n"
    }

    pub fn simulation_reports() -> String {
        let c = maximal(3);
        let runs = [
            (0, ChannelKind::Symmetric, 0.05, 2024, 1000),
            (2, ChannelKind::Symmetric, 0.2, 11, 500),
            (4, ChannelKind::Erasure, 0.5, 7, 500),
        ];
        let reports: Vec<_> = runs
            .iter()
            .map(|&(m, kind, p, seed, trials)| {
                let code = build_code(&c, m, None).unwrap();
                simulate(&code, &ChannelSpec::new(kind, p, seed).unwrap(), trials).unwrap()
            })
            .collect();
        serde_json::to_string_pretty(&reports).unwrap() + "\n"
    }
}
