//! The curves `y^q + y = x^s` over GF(q^2) with `s | q + 1`.
//!
//! `s = (q + 1) / 2` gives the maximal curve of genus `(q - 1)^2 / 4`;
//! `s = q + 1` gives the Hermitian curve. The single point at infinity is
//! never stored; one-point divisors `m P_inf` are carried as the integer `m`.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};

/// An affine rational point `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

pub struct Curve {
    field: Arc<Field>,
    s: u32,
    points: OnceLock<Vec<AffinePoint>>,
}

impl std::fmt::Debug for Curve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Curve")
            .field("q", &self.q())
            .field("s", &self.s)
            .field("genus", &self.genus())
            .finish()
    }
}

impl Curve {
    pub fn new(field: Arc<Field>, s: u32) -> Result<Curve> {
        let q = field.q();
        if s < 2 || !(q + 1).is_multiple_of(s) {
            return Err(Error::InvalidCurveParameter { q, s });
        }
        Ok(Curve {
            field,
            s,
            points: OnceLock::new(),
        })
    }

    /// The curve with `s = (q + 1) / 2`.
    pub fn maximal(field: Arc<Field>) -> Result<Curve> {
        let s = field.q().div_ceil(2);
        Curve::new(field, s)
    }

    /// The Hermitian curve, `s = q + 1`.
    pub fn hermitian(field: Arc<Field>) -> Result<Curve> {
        let s = field.q() + 1;
        Curve::new(field, s)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn genus(&self) -> u32 {
        (self.q() - 1) * (self.s - 1) / 2
    }

    pub fn is_on_curve(&self, x: FieldElement, y: FieldElement) -> Result<bool> {
        let f = &*self.field;
        f.element(x.enc())?;
        f.element(y.enc())?;
        Ok(f.add(f.conj(y), y) == f.pow(x, self.s as u64))
    }

    /// All affine points, ascending by `(enc(x), enc(y))`. Computed once.
    pub fn points(&self) -> &[AffinePoint] {
        self.points.get_or_init(|| self.enumerate())
    }

    fn enumerate(&self) -> Vec<AffinePoint> {
        let f = &*self.field;
        // y^q + y takes values in GF(q); bucket the y's by that value.
        let mut fibers: Vec<Vec<FieldElement>> = vec![Vec::new(); f.size() as usize];
        for y in f.elements() {
            let t = f.add(f.conj(y), y);
            fibers[t.enc() as usize].push(y);
        }
        let mut points = Vec::new();
        for x in f.elements() {
            let norm = f.pow(x, self.s as u64);
            for &y in &fibers[norm.enc() as usize] {
                points.push(AffinePoint { x, y });
            }
        }
        points
    }

    /// Number of affine points plus the point at infinity.
    pub fn rational_point_count(&self) -> usize {
        self.points().len() + 1
    }

    /// The upper Hasse-Weil count `q^2 + 1 + 2 g q`.
    pub fn hasse_weil_upper(&self) -> u64 {
        let q = self.q() as u64;
        q * q + 1 + 2 * self.genus() as u64 * q
    }

    pub fn is_maximal(&self) -> bool {
        self.rational_point_count() as u64 == self.hasse_weil_upper()
    }

    /// Image of a point under `(x, y) -> (x^q, y^q)`.
    pub fn frobenius(&self, pt: AffinePoint) -> AffinePoint {
        AffinePoint {
            x: self.field.conj(pt.x),
            y: self.field.conj(pt.y),
        }
    }

    /// Validates a support list: every point on the curve, no repeats.
    pub fn check_support(&self, support: &[AffinePoint]) -> Result<()> {
        let mut seen = HashSet::with_capacity(support.len());
        for pt in support {
            if !self.is_on_curve(pt.x, pt.y)? {
                return Err(Error::PointNotOnCurve {
                    x: pt.x.enc(),
                    y: pt.y.enc(),
                });
            }
            if !seen.insert(*pt) {
                return Err(Error::DuplicateSupportPoint {
                    x: pt.x.enc(),
                    y: pt.y.enc(),
                });
            }
        }
        Ok(())
    }
}

/// CSV export of a point list: header `x,y`, canonical encodings.
pub fn points_to_csv(points: &[AffinePoint]) -> String {
    let mut out = String::from("x,y\n");
    for pt in points {
        let _ = writeln!(out, "{},{}", pt.x.enc(), pt.y.enc());
    }
    out
}
