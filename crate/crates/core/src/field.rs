//! Small finite fields F_{p^k} with runtime-chosen parameters.
//!
//! A [`Field`] is a cheaply cloneable handle to an immutable descriptor
//! (characteristic, extension degree, modulus). Elements are reduced
//! coefficient vectors of length `k` over F_p, ascending in the generator
//! `x`, so equality is plain structural equality. The modulus is the
//! canonical (first in enumeration order) monic irreducible of degree `k`,
//! which makes field construction deterministic: the same `(p, k)` always
//! yields the same element encoding.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on the characteristic: single u64 limbs never overflow below it.
const CHAR_CAP: u64 = 1 << 31;
/// Hard cap on the extension degree; schoolbook reduction stays cheap.
const DEGREE_CAP: usize = 16;
/// Full-field enumeration refuses to materialize more elements than this.
const ENUM_CAP: u128 = 1 << 20;

/// Immutable description of one field: `F_{p^k} = F_p[x] / (modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    k: usize,
    /// Monic irreducible of degree `k`, coefficients ascending, length `k + 1`.
    /// For `k == 1` this is `x` itself and is never consulted.
    modulus: Vec<u64>,
}

/// Shared handle to a [`FieldSpec`]; two handles compare equal when they
/// describe the same field, even if constructed independently.
#[derive(Debug, Clone)]
pub struct Field(Arc<FieldSpec>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl std::ops::Deref for Field {
    type Target = FieldSpec;

    fn deref(&self) -> &FieldSpec {
        &self.0
    }
}

impl FieldSpec {
    /// Field characteristic `p`.
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Extension degree `k` over the prime field.
    pub fn extension_degree(&self) -> usize {
        self.k
    }

    /// The monic irreducible modulus, coefficients ascending.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Field order `p^k`, or `None` when it does not fit in a `u128`.
    pub fn order(&self) -> Option<u128> {
        let mut q: u128 = 1;
        for _ in 0..self.k {
            q = q.checked_mul(self.p as u128)?;
        }
        Some(q)
    }
}

impl Field {
    /// Constructs `F_{p^k}`, verifying `p` prime by trial division and
    /// selecting the first monic irreducible of degree `k` in enumeration
    /// order as the modulus.
    pub fn new(p: u64, k: usize) -> Result<Field> {
        if p >= CHAR_CAP {
            return Err(Error::InvalidParameter("characteristic must be below 2^31"));
        }
        if !fp::is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if k == 0 || k > DEGREE_CAP {
            return Err(Error::InvalidParameter("extension degree must be in 1..=16"));
        }
        let modulus = if k == 1 { vec![0, 1] } else { find_irreducible(p, k) };
        Ok(Field(Arc::new(FieldSpec { p, k, modulus })))
    }

    /// The additive identity.
    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), coeffs: vec![0; self.k] }
    }

    /// The multiplicative identity.
    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Builds an element from raw coefficients: entries are reduced mod `p`
    /// and vectors longer than `k` are reduced modulo the field modulus, so
    /// any integer polynomial in the generator is accepted.
    pub fn element(&self, coeffs: &[u64]) -> FieldElement {
        let mut c: Vec<u64> = coeffs.iter().map(|&v| v % self.p).collect();
        fp::trim(&mut c);
        if c.len() > self.k {
            c = fp::rem(&c, &self.modulus, self.p);
        }
        c.resize(self.k, 0);
        FieldElement { field: self.clone(), coeffs: c }
    }

    /// Embeds an integer as a constant, reducing mod `p`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let r = n.rem_euclid(self.p as i64) as u64;
        let mut coeffs = vec![0; self.k];
        coeffs[0] = r;
        FieldElement { field: self.clone(), coeffs }
    }

    /// The element at position `idx` in enumeration order (base-`p` digits
    /// of `idx`, least significant digit on the constant coefficient).
    pub fn element_from_index(&self, idx: u64) -> Result<FieldElement> {
        if let Some(q) = self.order() {
            if (idx as u128) >= q {
                return Err(Error::InvalidParameter("element index out of range"));
            }
        }
        let mut coeffs = vec![0; self.k];
        let mut rest = idx;
        for c in coeffs.iter_mut() {
            *c = rest % self.p;
            rest /= self.p;
        }
        Ok(FieldElement { field: self.clone(), coeffs })
    }

    /// All `q` elements in canonical ascending order, starting at zero.
    /// Refuses fields with more than 2^20 elements.
    pub fn enumerate(&self) -> Result<Vec<FieldElement>> {
        let order = self.order().unwrap_or(u128::MAX);
        if order > ENUM_CAP {
            return Err(Error::TooLarge { order, cap: ENUM_CAP });
        }
        (0..order as u64).map(|i| self.element_from_index(i)).collect()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.k)
        }
    }
}

/// One element of a [`Field`]: a length-`k` coefficient vector over F_p,
/// every entry already reduced into `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<u64>,
}

impl FieldElement {
    /// The field this element lives in.
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Reduced coefficients, ascending in the generator, length `k`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn same_field(&self, rhs: &Self) -> bool {
        self.field == rhs.field
    }

    /// Sum, or [`Error::SpecMismatch`] when the operands live in
    /// different fields.
    pub fn checked_add(&self, rhs: &Self) -> Result<FieldElement> {
        if !self.same_field(rhs) {
            return Err(Error::SpecMismatch);
        }
        let p = self.field.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement { field: self.field.clone(), coeffs })
    }

    /// Difference, or [`Error::SpecMismatch`] on mixed fields.
    pub fn checked_sub(&self, rhs: &Self) -> Result<FieldElement> {
        if !self.same_field(rhs) {
            return Err(Error::SpecMismatch);
        }
        let p = self.field.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        Ok(FieldElement { field: self.field.clone(), coeffs })
    }

    /// Product, or [`Error::SpecMismatch`] on mixed fields.
    pub fn checked_mul(&self, rhs: &Self) -> Result<FieldElement> {
        if !self.same_field(rhs) {
            return Err(Error::SpecMismatch);
        }
        let spec = &*self.field;
        let mut prod = fp::mul(&self.coeffs, &rhs.coeffs, spec.p);
        if spec.k == 1 {
            prod.resize(1, 0);
        } else {
            prod = fp::rem(&prod, &spec.modulus, spec.p);
            prod.resize(spec.k, 0);
        }
        Ok(FieldElement { field: self.field.clone(), coeffs: prod })
    }

    /// Multiplicative inverse; [`Error::DivisionByZero`] on zero.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let spec = &*self.field;
        let coeffs = if spec.k == 1 {
            vec![fp::inv_mod(self.coeffs[0], spec.p)]
        } else {
            let mut c = fp::poly_inv_mod(&self.coeffs, &spec.modulus, spec.p);
            c.resize(spec.k, 0);
            c
        };
        Ok(FieldElement { field: self.field.clone(), coeffs })
    }

    /// `self` raised to `e` by binary exponentiation; `0^0 == 1`.
    pub fn pow(&self, e: u64) -> FieldElement {
        let mut acc = self.field.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Scales by an integer (the image of `n` under the prime-field embedding).
    pub fn scale(&self, n: u64) -> FieldElement {
        let p = self.field.p;
        let n = n % p;
        let coeffs = self.coeffs.iter().map(|&c| (c as u128 * n as u128 % p as u128) as u64).collect();
        FieldElement { field: self.field.clone(), coeffs }
    }
}

/// Elements order by field parameters, then by enumeration position
/// (coefficients compared from the most significant digit down).
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let lhs = (self.field.p, self.field.k, &self.field.modulus);
        let rhs = (other.field.p, other.field.k, &other.field.modulus);
        lhs.cmp(&rhs)
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! panicking_binop {
    ($trait:ident, $method:ident, $checked:ident, $what:literal) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;

            /// Panics when the operands live in different fields; use the
            /// `checked_*` method to get an error instead.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs)
                    .unwrap_or_else(|_| panic!(concat!($what, " of elements from different fields")))
            }
        }
    };
}

panicking_binop!(Add, add, checked_add, "sum");
panicking_binop!(Sub, sub, checked_sub, "difference");
panicking_binop!(Mul, mul, checked_mul, "product");

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        self.field.zero().checked_sub(self).expect("same field")
    }
}

impl fmt::Display for FieldElement {
    /// `GF(p)` elements print as plain integers; extension elements as
    /// polynomials in `x` with descending powers, e.g. `2x^2+x+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.k == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "x")?,
                1 => write!(f, "{c}x")?,
                _ if c == 1 => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// First monic irreducible of degree `k >= 2` in enumeration order of the
/// lower coefficients. Existence is classical, so the scan terminates.
fn find_irreducible(p: u64, k: usize) -> Vec<u64> {
    let mut idx: u128 = 0;
    loop {
        let mut f = Vec::with_capacity(k + 1);
        let mut rest = idx;
        for _ in 0..k {
            f.push((rest % p as u128) as u64);
            rest /= p as u128;
        }
        debug_assert_eq!(rest, 0, "irreducible scan ran past the coefficient space");
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
        idx += 1;
    }
}

/// Distinct-degree irreducibility test: monic `f` of degree `k >= 2` is
/// irreducible over F_p iff `gcd(f, x^{p^d} - x)` is constant for every
/// `d <= k/2` (that gcd collects all irreducible factors of degree
/// dividing `d`, and a reducible `f` has a factor of degree <= k/2).
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    let x = vec![0, 1];
    let mut h = x.clone();
    for _ in 1..=k / 2 {
        h = fp::pow_mod(&h, p, f, p);
        let diff = fp::sub(&h, &x, p);
        let g = fp::gcd(f, &diff, p);
        if fp::degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Dense polynomial arithmetic over F_p on bare coefficient vectors
/// (ascending degree). Shared by element arithmetic, inverse computation,
/// and the irreducibility scan; kept free of the `Field` types on purpose.
pub(crate) mod fp {
    /// Trial-division primality; sufficient below 2^31.
    pub fn is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        for d in [2, 3] {
            if n == d {
                return true;
            }
            if n % d == 0 {
                return false;
            }
        }
        let mut d = 5;
        while d * d <= n {
            if n % d == 0 || n % (d + 2) == 0 {
                return false;
            }
            d += 6;
        }
        true
    }

    /// Inverse of `a != 0` modulo prime `p` by the extended Euclidean
    /// algorithm on integers.
    pub fn inv_mod(a: u64, p: u64) -> u64 {
        debug_assert!(a != 0 && a < p);
        let (mut r0, mut r1) = (p as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "inverse of a nonunit");
        t0.rem_euclid(p as i128) as u64
    }

    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    /// Degree of a trimmed vector; `None` for the zero polynomial.
    pub fn degree(v: &[u64]) -> Option<usize> {
        let len = v.iter().rposition(|&c| c != 0)?;
        Some(len)
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + p - y) % p;
        }
        trim(&mut out);
        out
    }

    /// Schoolbook product; u128 accumulators keep `k <= 16` limbs exact.
    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut acc = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] += x as u128 * y as u128;
            }
        }
        let mut out: Vec<u64> = acc.into_iter().map(|v| (v % p as u128) as u64).collect();
        trim(&mut out);
        out
    }

    /// Remainder of `a` modulo monic `f`.
    pub fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        debug_assert_eq!(*f.last().expect("nonzero modulus"), 1, "modulus must be monic");
        let df = f.len() - 1;
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        while r.len() > df {
            let lead = r[r.len() - 1];
            let shift = r.len() - 1 - df;
            if lead != 0 {
                for (j, &m) in f.iter().enumerate().take(df) {
                    let sub = lead as u128 * m as u128 % p as u128;
                    let idx = shift + j;
                    r[idx] = ((r[idx] as u128 + p as u128 - sub) % p as u128) as u64;
                }
            }
            r.pop();
            trim(&mut r);
        }
        r
    }

    /// Quotient and remainder by a nonzero (not necessarily monic) divisor.
    pub fn div_rem(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let dd = degree(den).expect("division by zero polynomial");
        let lc_inv = inv_mod(den[dd], p);
        let mut r: Vec<u64> = num.to_vec();
        trim(&mut r);
        if r.len() <= dd {
            return (Vec::new(), r);
        }
        let mut q = vec![0u64; r.len() - dd];
        while degree(&r).map_or(false, |dr| dr >= dd) {
            let dr = r.len() - 1;
            let c = r[dr] as u128 * lc_inv as u128 % p as u128;
            q[dr - dd] = c as u64;
            for j in 0..=dd {
                let sub = c * den[j] as u128 % p as u128;
                let idx = dr - dd + j;
                r[idx] = ((r[idx] as u128 + p as u128 - sub) % p as u128) as u64;
            }
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    /// Euclidean gcd; result is not normalized. `gcd(f, 0) == f`.
    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r0: Vec<u64> = a.to_vec();
        let mut r1: Vec<u64> = b.to_vec();
        trim(&mut r0);
        trim(&mut r1);
        while !r1.is_empty() {
            let (_, r) = div_rem(&r0, &r1, p);
            r0 = std::mem::replace(&mut r1, r);
        }
        r0
    }

    /// `base^e mod f` by binary exponentiation.
    pub fn pow_mod(base: &[u64], e: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1];
        let mut b = rem(base, f, p);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), f, p);
            }
            b = rem(&mul(&b, &b, p), f, p);
            e >>= 1;
        }
        acc
    }

    /// Inverse of `a != 0` modulo the irreducible `f`, via the extended
    /// Euclidean algorithm tracking only the coefficient of `a`.
    pub fn poly_inv_mod(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut r0: Vec<u64> = f.to_vec();
        let mut r1: Vec<u64> = a.to_vec();
        trim(&mut r1);
        debug_assert!(!r1.is_empty());
        let mut t0: Vec<u64> = Vec::new();
        let mut t1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let (q, r) = div_rem(&r0, &r1, p);
            r0 = std::mem::replace(&mut r1, r);
            let qt = mul(&q, &t1, p);
            let next = sub(&t0, &qt, p);
            t0 = std::mem::replace(&mut t1, next);
        }
        // f irreducible and a nonzero of lower degree: the gcd is a constant.
        debug_assert_eq!(degree(&r0), Some(0), "inverse modulo a reducible polynomial");
        let c_inv = inv_mod(r0[0], p);
        let mut out: Vec<u64> =
            t0.iter().map(|&t| (t as u128 * c_inv as u128 % p as u128) as u64).collect();
        trim(&mut out);
        out
    }
}
