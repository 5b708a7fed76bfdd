//! Arithmetic in GF(p^(2e)) with a designated subfield GF(q), q = p^e.
//!
//! Elements are stored by their canonical integer encoding `sum c_i p^i`,
//! where `c_0 + c_1 t + ... + c_{deg-1} t^{deg-1}` is the polynomial-basis
//! representative modulo the field's primitive modulus. The encoding is the
//! wire format for every matrix and point written by this crate.

use std::fmt;

use crate::error::{Error, Result};

/// Largest field this crate will construct.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// Fields up to this size get log/antilog tables.
const LOG_TABLE_LIMIT: u32 = 1 << 16;

/// Fields up to this size get full addition and subtraction tables.
const ADD_TABLE_LIMIT: u32 = 512;

/// An element of a [`Field`], identified by its canonical encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn enc(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The finite field GF(p^deg) with deg = 2e, viewed as GF(q^2) over GF(q).
pub struct Field {
    p: u32,
    deg: u32,
    q: u32,
    size: u32,
    /// Monic modulus, constant term first, leading 1 included.
    modulus: Vec<u32>,
    /// `pow_p[i] = p^i` for `i <= deg`.
    pow_p: Vec<u32>,
    logs: Option<LogTables>,
    add_table: Option<Vec<u16>>,
    sub_table: Option<Vec<u16>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("deg", &self.deg)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.deg == other.deg && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Polynomial arithmetic over GF(p) modulo a monic polynomial, on coefficient
/// vectors of length `deg` (constant term first).
struct PolyRing<'a> {
    p: u32,
    modulus: &'a [u32],
}

impl PolyRing<'_> {
    fn deg(&self) -> usize {
        self.modulus.len() - 1
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let d = self.deg();
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p;
            }
        }
        // t^d = -(m_0 + ... + m_{d-1} t^{d-1})
        for top in (d..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (k, &mk) in self.modulus[..d].iter().enumerate() {
                let idx = top - d + k;
                prod[idx] = (prod[idx] + c * (p - mk as u64)) % p;
            }
        }
        prod.truncate(d);
        prod.into_iter().map(|c| c as u32).collect()
    }

    fn pow(&self, base: &[u32], mut exp: u64) -> Vec<u32> {
        let mut result = vec![0u32; self.deg()];
        result[0] = 1;
        let mut b = base.to_vec();
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(&result, &b);
            }
            b = self.mul(&b, &b);
            exp >>= 1;
        }
        result
    }
}

fn is_one(v: &[u32]) -> bool {
    v[0] == 1 && v[1..].iter().all(|&c| c == 0)
}

/// Smallest monic primitive polynomial of degree `deg` over GF(p), comparing
/// coefficient tuples from the constant term upward.
fn smallest_primitive(p: u32, deg: u32) -> Vec<u32> {
    let d = deg as usize;
    let order = (p as u64).pow(deg) - 1;
    let factors = prime_factors(order);
    debug_assert!(d >= 2);
    let mut t = vec![0u32; d];
    t[1] = 1;
    let candidates = (p as u64).pow(deg);
    for idx in 0..candidates {
        // c_0 is the most significant digit of idx.
        let mut coeffs = vec![0u32; d + 1];
        let mut rest = idx;
        for i in (0..d).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs[d] = 1;
        if coeffs[0] == 0 {
            continue;
        }
        let ring = PolyRing {
            p,
            modulus: &coeffs,
        };
        // Order exactly p^d - 1 forces the quotient ring to be a field.
        if !is_one(&ring.pow(&t, order)) {
            continue;
        }
        if factors.iter().all(|&r| !is_one(&ring.pow(&t, order / r))) {
            return coeffs;
        }
    }
    unreachable!("a primitive polynomial of every degree exists over GF(p)")
}

impl Field {
    /// Constructs GF(p^(2e)) with designated subfield GF(p^e).
    pub fn new(p: u32, e: u32) -> Result<Field> {
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        let deg = 2 * e;
        let size = (p as u64).checked_pow(deg).filter(|&s| s <= MAX_FIELD_SIZE);
        let Some(size) = size else {
            return Err(Error::FieldTooLarge {
                p,
                deg,
                limit: MAX_FIELD_SIZE,
            });
        };
        let size = size as u32;
        let q = p.pow(e);
        let modulus = smallest_primitive(p, deg);
        let pow_p = (0..=deg).map(|i| p.pow(i)).collect();

        let mut field = Field {
            p,
            deg,
            q,
            size,
            modulus,
            pow_p,
            logs: None,
            add_table: None,
            sub_table: None,
        };
        if size <= ADD_TABLE_LIMIT {
            let n = size as usize;
            let mut add = vec![0u16; n * n];
            let mut sub = vec![0u16; n * n];
            for a in 0..size {
                for b in 0..size {
                    let (s, d) = (field.add_digits(a, b, false), field.add_digits(a, b, true));
                    add[a as usize * n + b as usize] = s as u16;
                    sub[a as usize * n + b as usize] = d as u16;
                }
            }
            field.add_table = Some(add);
            field.sub_table = Some(sub);
        }
        if size <= LOG_TABLE_LIMIT {
            let order = (size - 1) as usize;
            let mut exp = Vec::with_capacity(order);
            let mut log = vec![0u32; size as usize];
            let gamma = field.primitive();
            let mut cur = FieldElement::ONE;
            for i in 0..order {
                exp.push(cur.0);
                log[cur.0 as usize] = i as u32;
                cur = field.mul_poly(cur, gamma);
            }
            debug_assert_eq!(cur, FieldElement::ONE);
            field.logs = Some(LogTables { exp, log });
        }
        Ok(field)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Extension degree over GF(p).
    pub fn deg(&self) -> u32 {
        self.deg
    }

    /// Order of the designated subfield.
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// Monic modulus coefficients, constant term first (length `deg + 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Validates an encoding and wraps it as an element of this field.
    pub fn element(&self, enc: u32) -> Result<FieldElement> {
        if enc < self.size {
            Ok(FieldElement(enc))
        } else {
            Err(Error::ElementOutOfRange {
                enc,
                size: self.size,
            })
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.deg as usize {
            return Err(Error::DimensionMismatch {
                expected: self.deg as usize,
                found: coeffs.len(),
            });
        }
        let mut enc = 0u32;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.p {
                return Err(Error::Parse(format!(
                    "coefficient {c} is not reduced mod {}",
                    self.p
                )));
            }
            enc += c * self.pow_p[i];
        }
        Ok(FieldElement(enc))
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut rest = a.0;
        (0..self.deg)
            .map(|_| {
                let c = rest % self.p;
                rest /= self.p;
                c
            })
            .collect()
    }

    /// Image of an integer under Z -> GF(p) -> GF(p^deg).
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    /// The class of `t`, a generator of the multiplicative group.
    pub fn primitive(&self) -> FieldElement {
        FieldElement(self.p)
    }

    /// All elements in ascending encoding order, starting with zero.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size).map(FieldElement)
    }

    /// The subfield GF(q), i.e. the fixed points of [`Field::conj`], ascending.
    pub fn subfield_elements(&self) -> Vec<FieldElement> {
        self.elements().filter(|&a| self.conj(a) == a).collect()
    }

    fn add_digits(&self, a: u32, b: u32, subtract: bool) -> u32 {
        let p = self.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for i in 0..self.deg as usize {
            let (x, y) = (a % p, b % p);
            a /= p;
            b /= p;
            let d = if subtract {
                (x + p - y) % p
            } else {
                (x + y) % p
            };
            out += d * self.pow_p[i];
        }
        out
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.add_table {
            Some(t) => FieldElement(t[a.0 as usize * self.size as usize + b.0 as usize] as u32),
            None => FieldElement(self.add_digits(a.0, b.0, false)),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.sub_table {
            Some(t) => FieldElement(t[a.0 as usize * self.size as usize + b.0 as usize] as u32),
            None => FieldElement(self.add_digits(a.0, b.0, true)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.sub(FieldElement::ZERO, a)
    }

    fn mul_poly(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let ring = PolyRing {
            p: self.p,
            modulus: &self.modulus,
        };
        let prod = ring.mul(&self.coeffs(a), &self.coeffs(b));
        let enc = prod.iter().zip(&self.pow_p).map(|(&c, &w)| c * w).sum();
        FieldElement(enc)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        match &self.logs {
            Some(t) => {
                let order = t.exp.len() as u32;
                let mut l = t.log[a.0 as usize] + t.log[b.0 as usize];
                if l >= order {
                    l -= order;
                }
                FieldElement(t.exp[l as usize])
            }
            None => self.mul_poly(a, b),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.logs {
            Some(t) => {
                let order = t.exp.len() as u32;
                let l = t.log[a.0 as usize];
                FieldElement(t.exp[((order - l) % order) as usize])
            }
            None => self.pow(a, self.size as u64 - 2),
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation; `pow(0, 0) = 1`.
    pub fn pow(&self, a: FieldElement, mut exp: u64) -> FieldElement {
        let mut result = FieldElement::ONE;
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        result
    }

    /// Hermitian conjugation `a -> a^q`.
    #[inline]
    pub fn conj(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.q as u64)
    }

    /// True when `a` lies in the subfield GF(q).
    pub fn in_subfield(&self, a: FieldElement) -> bool {
        self.conj(a) == a
    }

    /// Discrete logarithm to base [`Field::primitive`], when tables exist.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        self.logs.as_ref().map(|t| t.log[a.0 as usize])
    }
}
