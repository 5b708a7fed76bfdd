//! One-point codes `C_L(D, m P_inf)` on the curves of [`crate::curve`].
//!
//! A code is stored as a full-rank generator matrix in reduced row echelon
//! form. Duals are null spaces; the Hermitian dual is the dual of the
//! entrywise-conjugated code.

mod weight;

pub(crate) use weight::{check_guard, codeword_count, walk_codewords};
pub use weight::{
    dual_distance, macwilliams_dual_enumerator, min_distance, weight_enumerator, Distance,
    DistanceMode, WeightEnumerator, ENUMERATION_GUARD,
};

use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::curve::{AffinePoint, Curve};
use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::semigroup::{count_monomials_with_j_bound, ell, monomial_basis};

/// Provenance of an evaluation code.
#[derive(Clone, Debug)]
pub struct CodeMeta {
    pub curve: Arc<Curve>,
    pub m: i64,
    pub support: Vec<AffinePoint>,
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<Field>,
    n: usize,
    generator: Matrix,
    meta: Option<CodeMeta>,
}

impl LinearCode {
    /// The row space of `rows`, stored as its reduced row echelon basis.
    pub fn from_matrix(field: Arc<Field>, rows: &Matrix) -> LinearCode {
        let generator = rows.row_basis(&field);
        LinearCode {
            n: rows.cols(),
            field,
            generator,
            meta: None,
        }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn meta(&self) -> Option<&CodeMeta> {
        self.meta.as_ref()
    }

    /// `n - m` for evaluation codes.
    pub fn designed_distance(&self) -> Option<i64> {
        self.meta.as_ref().map(|m| self.n as i64 - m.m)
    }

    /// Same row space, ignoring metadata.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.n == other.n && self.generator == other.generator
    }

    pub fn is_member(&self, word: &[FieldElement]) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: word.len(),
            });
        }
        let mut stacked = self.generator.to_rows();
        stacked.push(word.to_vec());
        Ok(Matrix::from_rows(self.n, stacked)?.rank(&self.field) == self.k())
    }
}

/// Rows `x^i y^j` of the basis of `L(m P_inf)` evaluated at `support`.
pub fn evaluation_matrix(curve: &Curve, m: i64, support: &[AffinePoint]) -> Matrix {
    let f = curve.field();
    let basis = monomial_basis(curve, m);
    let mut out = Matrix::zeros(basis.len(), support.len());
    for (r, mono) in basis.entries().iter().enumerate() {
        for (c, pt) in support.iter().enumerate() {
            let v = f.mul(f.pow(pt.x, mono.i as u64), f.pow(pt.y, mono.j as u64));
            out.set(r, c, v);
        }
    }
    out
}

/// Builds `C_L(D, m P_inf)` with `D` the sum of `support` (default: every
/// affine point in canonical order).
pub fn build_code(
    curve: &Arc<Curve>,
    m: i64,
    support: Option<Vec<AffinePoint>>,
) -> Result<LinearCode> {
    let support = match support {
        Some(s) => {
            curve.check_support(&s)?;
            s
        }
        None => curve.points().to_vec(),
    };
    let eval = evaluation_matrix(curve, m, &support);
    let mut code = LinearCode::from_matrix(curve.field().clone(), &eval);
    code.meta = Some(CodeMeta {
        curve: curve.clone(),
        m,
        support,
    });
    Ok(code)
}

/// Euclidean dual: the null space of the generator.
pub fn dual(code: &LinearCode) -> LinearCode {
    let ns = code.generator.null_space(&code.field);
    LinearCode::from_matrix(code.field.clone(), &ns)
}

/// Hermitian dual `{v : sum v_i c_i^q = 0 for all c}`, i.e. `(C^q)^perp`.
pub fn hermitian_dual(code: &LinearCode) -> LinearCode {
    let conj = code.generator.conj(&code.field);
    let ns = conj.null_space(&code.field);
    LinearCode::from_matrix(code.field.clone(), &ns)
}

/// The Hermitian Gram matrix `G * conj(G)^T`.
pub fn hermitian_gram(code: &LinearCode) -> Matrix {
    let conj = code.generator.conj(&code.field);
    code.generator
        .mul_transpose(&code.field, &conj)
        .expect("same column count")
}

/// Number of nonzero entries of the Hermitian Gram matrix.
pub fn gram_defects(code: &LinearCode) -> usize {
    let gram = hermitian_gram(code);
    (0..gram.rows())
        .flat_map(|i| (0..gram.cols()).map(move |j| (i, j)))
        .filter(|&(i, j)| !gram.get(i, j).is_zero())
        .count()
}

pub fn is_hermitian_self_orthogonal(code: &LinearCode) -> bool {
    hermitian_gram(code).is_zero()
}

/// The self-orthogonality criterion `2m <= n + 2g - 2`.
pub fn self_orthogonality_predicted(n: usize, genus: u32, m: i64) -> bool {
    2 * m <= n as i64 + 2 * genus as i64 - 2
}

/// Which clause of the five-case dimension formula applies, and whether its
/// literal value matches the measured dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionPrediction {
    /// The true dimension of `C_L(D, m P_inf)` over the full affine support.
    pub value: usize,
    pub paper_case: u8,
    /// What the clause's formula evaluates to, taken literally.
    pub formula_value: i64,
    pub agrees_with_paper: bool,
}

/// Literal count `#{i q + j s <= m : i >= 0, 0 <= j <= (q - 1) / 2}`.
fn literal_count(curve: &Curve, m: i64) -> i64 {
    count_monomials_with_j_bound(curve.q(), curve.s(), m, (curve.q() - 1) / 2) as i64
}

pub fn predicted_dimension(curve: &Arc<Curve>, m: i64) -> Result<DimensionPrediction> {
    let q = curve.q() as i64;
    let g = curve.genus() as i64;
    let n = curve.points().len() as i64;
    let value = if m < 0 {
        0
    } else if m < n {
        ell(curve, m)
    } else {
        build_code(curve, m, None)?.k()
    };
    let (paper_case, formula_value) = if m < 0 {
        (1, 0)
    } else if m <= q {
        (2, literal_count(curve, m))
    } else if m < n {
        (3, m + 1 - g)
    } else if m <= n + 2 * g - 2 {
        (4, n - literal_count(curve, n + 2 * g - 2 - m))
    } else {
        (5, n)
    };
    Ok(DimensionPrediction {
        value,
        paper_case,
        formula_value,
        agrees_with_paper: formula_value == value as i64,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub m: i64,
    pub k: usize,
    pub designed_d: i64,
    pub self_orthogonal: bool,
    pub paper_predicts: bool,
}

/// One row per `m` in `0..=m_max` over the full affine support.
pub fn scan_self_orthogonality(curve: &Arc<Curve>, m_max: i64) -> Result<Vec<ScanRow>> {
    let n = curve.points().len();
    let limit = n as i64 + 2 * curve.genus() as i64;
    if m_max > limit {
        return Err(Error::OutOfRange(format!(
            "m_max = {m_max} exceeds n + 2g = {limit}"
        )));
    }
    (0..=m_max)
        .into_par_iter()
        .map(|m| {
            let code = build_code(curve, m, None)?;
            Ok(ScanRow {
                m,
                k: code.k(),
                designed_d: n as i64 - m,
                self_orthogonal: is_hermitian_self_orthogonal(&code),
                paper_predicts: self_orthogonality_predicted(n, curve.genus(), m),
            })
        })
        .collect()
}

pub fn scan_to_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("m,k,designed_d,self_orthogonal,paper_predicts\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.m, r.k, r.designed_d, r.self_orthogonal, r.paper_predicts
        );
    }
    out
}

/// Generator file: `Q n k`, then `k` lines of `n` encodings.
pub fn write_generator(code: &LinearCode) -> String {
    let mut out = format!("{} {} {}\n", code.field.size(), code.n, code.k());
    for row in code.generator.row_iter() {
        let line: Vec<String> = row.iter().map(|a| a.enc().to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_generator(field: Arc<Field>, text: &str) -> Result<LinearCode> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty generator file".into()))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad header token {t:?}")))
        })
        .collect::<Result<_>>()?;
    let [alphabet, n, k] = nums[..] else {
        return Err(Error::Parse("header must be `Q n k`".into()));
    };
    if alphabet != field.size() as usize {
        return Err(Error::Parse(format!(
            "alphabet {alphabet} does not match field size {}",
            field.size()
        )));
    }
    let mut rows = Vec::with_capacity(k);
    for line in lines {
        let row = line
            .split_whitespace()
            .map(|t| {
                let v: u32 = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?}")))?;
                field.element(v)
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: rows.len(),
        });
    }
    let m = Matrix::from_rows(n, rows)?;
    let code = LinearCode::from_matrix(field, &m);
    if code.k() != k {
        return Err(Error::Parse(format!("rows have rank {} < {k}", code.k())));
    }
    Ok(code)
}
