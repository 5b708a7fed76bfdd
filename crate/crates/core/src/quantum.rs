//! Quantum stabilizer parameters from Hermitian self-orthogonal codes.
//!
//! A Hermitian self-orthogonal `[n, k]` code over GF(q^2) yields an
//! `[[n, n - 2k, d]]_q` stabilizer code with `d` at least the minimum
//! distance of the Hermitian dual. The stabilizer generators are obtained by
//! expanding each codeword `v` and `gamma v` in the basis `(1, gamma)` of
//! GF(q^2) over GF(q), giving rows `(a | b)` in GF(q)^{2n}.
//!
//! For coordinates `u = a + b gamma` and `u' = a' + b' gamma`,
//! `u u'^q - u^q u' = (a b' - a' b)(gamma^q - gamma)`. Summed over
//! coordinates this reads `h - h^q = s (gamma^q - gamma)` with `h` the
//! Hermitian product and `s` the symplectic one, so `h = 0` forces `s = 0`.

use std::sync::Arc;

use serde::Serialize;

use crate::agcode::{
    dual_distance, gram_defects, is_hermitian_self_orthogonal, LinearCode, ENUMERATION_GUARD,
};
use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualDistanceMode {
    /// Exact Hermitian dual distance when the primal codebook is within
    /// [`ENUMERATION_GUARD`], otherwise the designed bound.
    Auto,
    /// Always the designed bound `m - 2g + 2`.
    BoundOnly,
}

/// `[[n, logical, d_lower]]_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumParams {
    pub n: usize,
    pub logical: usize,
    pub d_lower: usize,
    pub exact: bool,
    pub q: u32,
    pub source_m: Option<i64>,
    #[serde(skip)]
    pub k: usize,
}

fn require_self_orthogonal(code: &LinearCode) -> Result<()> {
    if is_hermitian_self_orthogonal(code) {
        Ok(())
    } else {
        Err(Error::NotSelfOrthogonal {
            nonzero: gram_defects(code),
        })
    }
}

/// Dual designed distance `m - 2g + 2`, at least 1.
fn dual_designed_distance(code: &LinearCode) -> Result<usize> {
    let meta = code.meta().ok_or(Error::NoDesignedDistance)?;
    let g = meta.curve.genus() as i64;
    Ok((meta.m - 2 * g + 2).max(1) as usize)
}

pub fn derive_params(code: &LinearCode, mode: DualDistanceMode) -> Result<QuantumParams> {
    require_self_orthogonal(code)?;
    let (n, k) = (code.n(), code.k());
    let enumerable = crate::agcode::codeword_count(code) <= ENUMERATION_GUARD as u128;
    let (d_lower, exact) = match mode {
        DualDistanceMode::Auto if enumerable => {
            // Self-orthogonal with n > 0 forces k < n, so the dual is nonzero.
            let d = dual_distance(code)?.expect("dual of a self-orthogonal code is nonzero");
            (d, true)
        }
        _ => (dual_designed_distance(code)?, false),
    };
    Ok(QuantumParams {
        n,
        logical: n - 2 * k,
        d_lower,
        exact,
        q: code.field().q(),
        source_m: code.meta().map(|m| m.m),
        k,
    })
}

/// Rows `(a | b)` over GF(q), stored as subfield elements of GF(q^2).
#[derive(Clone, Debug)]
pub struct StabilizerMatrix {
    field: Arc<Field>,
    n: usize,
    rows: Vec<Vec<FieldElement>>,
}

impl StabilizerMatrix {
    pub fn new(
        field: Arc<Field>,
        n: usize,
        rows: Vec<Vec<FieldElement>>,
    ) -> Result<StabilizerMatrix> {
        for row in &rows {
            if row.len() != 2 * n {
                return Err(Error::DimensionMismatch {
                    expected: 2 * n,
                    found: row.len(),
                });
            }
            if let Some(bad) = row.iter().find(|&&a| !field.in_subfield(a)) {
                return Err(Error::OutOfRange(format!(
                    "entry {} is not in the subfield GF({})",
                    bad.enc(),
                    field.q()
                )));
            }
        }
        Ok(StabilizerMatrix { field, n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `a . b' - a' . b` for rows `(a | b)` and `(a' | b')`.
    pub fn symplectic(&self, r1: usize, r2: usize) -> FieldElement {
        let f = &*self.field;
        let (a, b) = self.rows[r1].split_at(self.n);
        let (a2, b2) = self.rows[r2].split_at(self.n);
        let mut acc = FieldElement::ZERO;
        for i in 0..self.n {
            acc = f.add(acc, f.mul(a[i], b2[i]));
            acc = f.sub(acc, f.mul(a2[i], b[i]));
        }
        acc
    }

    /// Rank over GF(q). Row reduction of subfield-valued rows inside
    /// GF(q^2) gives the same rank.
    pub fn rank(&self) -> usize {
        if self.rows.is_empty() {
            return 0;
        }
        Matrix::from_rows(2 * self.n, self.rows.clone())
            .expect("rows have length 2n")
            .rank(&self.field)
    }

    /// Rows as `GF(q)` values: the index of each entry in the ascending list
    /// of subfield encodings. For prime `q` this is the entry's encoding.
    pub fn to_subfield_indices(&self) -> Vec<Vec<u32>> {
        let sub = self.field.subfield_elements();
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|a| sub.binary_search(a).expect("subfield entry") as u32)
                    .collect()
            })
            .collect()
    }
}

pub fn verify_commutation(stab: &StabilizerMatrix) -> bool {
    (0..stab.len()).all(|i| (i + 1..stab.len()).all(|j| stab.symplectic(i, j).is_zero()))
}

/// Coordinates `(a, b)` in GF(q) with `u = a + b gamma`.
fn split(
    field: &Field,
    gamma: FieldElement,
    denom_inv: FieldElement,
    u: FieldElement,
) -> (FieldElement, FieldElement) {
    // u^q = a + b gamma^q, so b = (u - u^q) / (gamma - gamma^q).
    let b = field.mul(field.sub(u, field.conj(u)), denom_inv);
    let a = field.sub(u, field.mul(b, gamma));
    (a, b)
}

pub fn build_stabilizer(code: &LinearCode) -> Result<StabilizerMatrix> {
    require_self_orthogonal(code)?;
    let field = code.field().clone();
    let f = &*field;
    let n = code.n();
    let gamma = f.primitive();
    let denom_inv = f.inv(f.sub(gamma, f.conj(gamma)))?;
    let mut rows = Vec::with_capacity(2 * code.k());
    for v in code.generator().row_iter() {
        for scale in [FieldElement::ONE, gamma] {
            let mut row = vec![FieldElement::ZERO; 2 * n];
            for (i, &u) in v.iter().enumerate() {
                let (a, b) = split(f, gamma, denom_inv, f.mul(scale, u));
                row[i] = a;
                row[n + i] = b;
            }
            rows.push(row);
        }
    }
    let stab = StabilizerMatrix::new(field, n, rows)?;
    if !verify_commutation(&stab) {
        return Err(Error::CommutationFailure);
    }
    Ok(stab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agcode::build_code;
    use crate::curve::Curve;

    fn c3() -> Arc<Curve> {
        Arc::new(Curve::new(Arc::new(Field::new(3, 1).unwrap()), 2).unwrap())
    }

    #[test]
    fn zero_code_params() {
        let code = build_code(&c3(), -1, None).unwrap();
        let p = derive_params(&code, DualDistanceMode::Auto).unwrap();
        assert_eq!(
            (p.n, p.logical, p.d_lower, p.exact, p.q),
            (15, 15, 1, true, 3)
        );
        let stab = build_stabilizer(&code).unwrap();
        assert!(stab.is_empty());
        assert!(verify_commutation(&stab));
    }

    #[test]
    fn constant_code_stabilizer() {
        let code = build_code(&c3(), 0, None).unwrap();
        let stab = build_stabilizer(&code).unwrap();
        assert_eq!(stab.len(), 2);
        assert_eq!(stab.rows()[0].len(), 30);
        assert_eq!(stab.rank(), 2);
        assert!(stab.symplectic(0, 1).is_zero());
        // Row 0 expands the all-ones word: a = 1, b = 0 everywhere.
        let idx = stab.to_subfield_indices();
        assert!(idx[0][..15].iter().all(|&a| a == 1));
        assert!(idx[0][15..].iter().all(|&b| b == 0));
        // Row 1 expands gamma * 1: a = 0, b = 1.
        assert!(idx[1][..15].iter().all(|&a| a == 0));
        assert!(idx[1][15..].iter().all(|&b| b == 1));
        let p = derive_params(&code, DualDistanceMode::Auto).unwrap();
        assert_eq!((p.logical, p.d_lower, p.exact), (13, 2, true));
    }

    #[test]
    fn expansion_is_faithful() {
        let field = Arc::new(Field::new(3, 2).unwrap());
        let gamma = field.primitive();
        let denom_inv = field.inv(field.sub(gamma, field.conj(gamma))).unwrap();
        for u in field.elements() {
            let (a, b) = split(&field, gamma, denom_inv, u);
            assert!(field.in_subfield(a) && field.in_subfield(b));
            assert_eq!(field.add(a, field.mul(b, gamma)), u);
        }
    }

    #[test]
    fn commutation_edge_cases() {
        let field = Arc::new(Field::new(3, 1).unwrap());
        let (z, o) = (FieldElement::ZERO, FieldElement::ONE);
        let empty = StabilizerMatrix::new(field.clone(), 2, vec![]).unwrap();
        assert!(verify_commutation(&empty));
        let single = StabilizerMatrix::new(field.clone(), 2, vec![vec![o, z, o, o]]).unwrap();
        assert!(verify_commutation(&single));
        let pair =
            StabilizerMatrix::new(field.clone(), 2, vec![vec![o, z, z, z], vec![z, z, o, z]])
                .unwrap();
        assert!(!verify_commutation(&pair));
        assert!(StabilizerMatrix::new(field.clone(), 2, vec![vec![o, z]]).is_err());
        let t = field.primitive();
        assert!(StabilizerMatrix::new(field, 1, vec![vec![t, z]]).is_err());
    }

    #[test]
    fn refuses_non_self_orthogonal() {
        let code = build_code(&c3(), 14, None).unwrap();
        assert!(matches!(
            derive_params(&code, DualDistanceMode::Auto),
            Err(Error::NotSelfOrthogonal { nonzero }) if nonzero > 0
        ));
        assert!(build_stabilizer(&code).is_err());
    }
}
