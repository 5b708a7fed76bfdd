//! Dense matrices over a [`Field`] with deterministic row reduction.

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<FieldElement>>) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[FieldElement]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        self.row_iter().map(<[_]>::to_vec).collect()
    }

    /// Entrywise `a -> a^q`.
    pub fn conj(&self, field: &Field) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| field.conj(a)).collect(),
        }
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, field: &Field, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                out.set(i, j, dot(field, self.row(i), other.row(j)));
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    ///
    /// Columns are scanned left to right and the pivot is the first row at or
    /// below the current one with a nonzero entry, so the result depends only
    /// on the input.
    pub fn rref(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = field.inv(self.get(r, c)).expect("pivot entry is nonzero");
            for cc in c..self.cols {
                let v = field.mul(self.get(r, cc), inv);
                self.set(r, cc, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for cc in c..self.cols {
                    let v = field.sub(self.get(i, cc), field.mul(factor, self.get(r, cc)));
                    self.set(i, cc, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.clone().rref(field).len()
    }

    /// Row-reduced basis of the row space (zero rows dropped).
    pub fn row_basis(&self, field: &Field) -> Matrix {
        let mut m = self.clone();
        let rank = m.rref(field).len();
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        m
    }

    /// Basis of `{v : self * v^T = 0}`, one row per free column.
    pub fn null_space(&self, field: &Field) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zeros(free.len(), self.cols);
        for (row, &f) in free.iter().enumerate() {
            out.set(row, f, FieldElement::ONE);
            for (pr, &pc) in pivots.iter().enumerate() {
                out.set(row, pc, field.neg(m.get(pr, f)));
            }
        }
        out
    }

    pub fn same_row_space(&self, field: &Field, other: &Matrix) -> bool {
        self.cols == other.cols && self.row_basis(field) == other.row_basis(field)
    }

    /// Columns `idx` of `self`, in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, idx.len());
        for r in 0..self.rows {
            for (k, &c) in idx.iter().enumerate() {
                out.set(r, k, self.get(r, c));
            }
        }
        out
    }

    /// `v * self` for a row vector `v` of length `rows`.
    pub fn vec_mul(&self, field: &Field, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = vec![FieldElement::ZERO; self.cols];
        for (r, &coef) in v.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.row(r)) {
                *o = field.add(*o, field.mul(coef, g));
            }
        }
        Ok(out)
    }
}

pub fn dot(field: &Field, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter().zip(b).fold(FieldElement::ZERO, |acc, (&x, &y)| {
        field.add(acc, field.mul(x, y))
    })
}

/// Solves `u * a = b` for `u`. `None` when the system is inconsistent;
/// the second component is the dimension of the solution space's kernel.
pub fn solve_left(
    field: &Field,
    a: &Matrix,
    b: &[FieldElement],
) -> Option<(Vec<FieldElement>, usize)> {
    // u a = b  <=>  a^T u^T = b^T; reduce the augmented [a^T | b^T].
    let (k, n) = (a.rows(), a.cols());
    assert_eq!(
        b.len(),
        n,
        "right-hand side length must equal the column count"
    );
    let mut aug = Matrix::zeros(n, k + 1);
    for (c, &bc) in b.iter().enumerate() {
        for r in 0..k {
            aug.set(c, r, a.get(r, c));
        }
        aug.set(c, k, bc);
    }
    let pivots = aug.rref(field);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut u = vec![FieldElement::ZERO; k];
    for (pr, &pc) in pivots.iter().enumerate() {
        u[pc] = aug.get(pr, k);
    }
    Some((u, k - pivots.len()))
}
