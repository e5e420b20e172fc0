//! Univariate polynomials over a runtime finite field.
//!
//! Coefficients are stored dense and degree-ascending with no trailing
//! zeros: the zero polynomial is the empty vector, every other polynomial
//! ends in its nonzero leading coefficient. All constructors restore this
//! form, so structural equality is semantic equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Degree of a polynomial, with a distinguished bottom element for the
/// zero polynomial so that `deg(fg) = deg f + deg g` style reasoning
/// stays total. `NegInfinity` orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    /// The finite value, or `None` for the zero polynomial.
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// Budget for the brute-force squarefree check: candidate divisors grow as
/// `q^(deg/2)`, so both knobs are kept small.
const ORACLE_DEGREE_CAP: usize = 12;
const ORACLE_ORDER_CAP: u128 = 64;

/// A dense univariate polynomial over one [`Field`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros; [`Error::SpecMismatch`] if any coefficient lives elsewhere.
    pub fn new(field: &Field, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::SpecMismatch);
        }
        let mut p = UniPoly { field: field.clone(), coeffs };
        p.trim();
        Ok(p)
    }

    /// Convenience constructor from integer coefficients (ascending),
    /// each reduced into the field.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        let elems = coeffs.iter().map(|&c| field.from_int(c)).collect();
        Self::new(field, elems).expect("coefficients built in the target field")
    }

    pub fn zero(field: &Field) -> Self {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Ascending coefficients; empty exactly for the zero polynomial.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `T^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, FieldElement::is_zero) {
            self.coeffs.pop();
        }
    }

    fn check_field(&self, rhs: &Self) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    /// Sum; [`Error::SpecMismatch`] on mixed fields.
    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        let mut out = UniPoly { field: self.field.clone(), coeffs };
        out.trim();
        Ok(out)
    }

    /// Difference; [`Error::SpecMismatch`] on mixed fields.
    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        let mut out = UniPoly { field: self.field.clone(), coeffs };
        out.trim();
        Ok(out)
    }

    /// Product; [`Error::SpecMismatch`] on mixed fields.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        let mut out = UniPoly { field: self.field.clone(), coeffs };
        out.trim();
        Ok(out)
    }

    /// Multiplies every coefficient by a fixed field element.
    pub fn scale(&self, c: &FieldElement) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        let mut out = UniPoly { field: self.field.clone(), coeffs };
        out.trim();
        out
    }

    /// Formal derivative; coefficient indices are reduced mod p, so e.g.
    /// d/dT (T^3 + T^2 + 1) = 2T over GF(3).
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(&self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(i as u64 % self.field.characteristic()))
            .collect();
        let mut out = UniPoly { field: self.field.clone(), coeffs };
        out.trim();
        out
    }

    /// Euclidean division by a nonzero divisor: `self = q * den + r` with
    /// `deg r < deg den`. [`Error::DivisionByZero`] on a zero divisor.
    pub fn div_rem(&self, den: &Self) -> Result<(Self, Self)> {
        self.check_field(den)?;
        let dd = match den.degree() {
            Degree::NegInfinity => return Err(Error::DivisionByZero),
            Degree::Finite(d) => d,
        };
        let mut r = self.clone();
        if r.coeffs.len() <= dd {
            return Ok((Self::zero(&self.field), r));
        }
        let lc_inv = den.coeffs[dd].inv().expect("leading coefficient is nonzero");
        let mut q = vec![self.field.zero(); r.coeffs.len() - dd];
        while r.coeffs.len() > dd {
            let dr = r.coeffs.len() - 1;
            let c = &r.coeffs[dr] * &lc_inv;
            for j in 0..=dd {
                let t = &c * &den.coeffs[j];
                r.coeffs[dr - dd + j] = &r.coeffs[dr - dd + j] - &t;
            }
            q[dr - dd] = c;
            r.trim();
        }
        let mut q = UniPoly { field: self.field.clone(), coeffs: q };
        q.trim();
        Ok((q, r))
    }

    /// The unique monic scalar multiple; `None` for the zero polynomial.
    pub fn monic(&self) -> Option<Self> {
        let lc = self.leading_coeff()?;
        if lc.is_one() {
            return Some(self.clone());
        }
        Some(self.scale(&lc.inv().expect("leading coefficient is nonzero")))
    }

    /// Monic greatest common divisor by the Euclidean algorithm;
    /// `gcd(f, 0) = monic(f)`, and `gcd(0, 0)` is [`Error::BothZero`].
    pub fn gcd(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        Ok(a.monic().expect("gcd of a nonzero pair is nonzero"))
    }

    /// Squarefreeness via `deg gcd(f, f') == 0`. Exact over finite fields
    /// even when `f' == 0` (then `f` is a p-th power, and `gcd(f, 0) = f`
    /// has positive degree). Nonzero constants count as squarefree;
    /// the zero polynomial is [`Error::ZeroPolynomial`].
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.coeffs.len() == 1 {
            return Ok(true);
        }
        let g = self.gcd(&self.derivative())?;
        Ok(g.degree() == Degree::Finite(0))
    }

    /// Independent brute-force squarefree check: enumerates every monic `g`
    /// with `1 <= deg g <= deg f / 2` and tests `g^2 | f` by long division.
    /// Deliberately shares no code path with [`UniPoly::is_squarefree`].
    /// Cost grows as `q^(deg f / 2)`; inputs beyond degree 12 or field
    /// order 64 are [`Error::BudgetExceeded`].
    pub fn is_squarefree_exhaustive(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let d = self.coeffs.len() - 1;
        if d > ORACLE_DEGREE_CAP {
            return Err(Error::BudgetExceeded("degree above the brute-force cap of 12"));
        }
        let q = match self.field.order() {
            Some(q) if q <= ORACLE_ORDER_CAP => q as u64,
            _ => return Err(Error::BudgetExceeded("field order above the brute-force cap of 64")),
        };
        for dg in 1..=d / 2 {
            // Monic candidates of degree dg: odometer over the lower coefficients.
            let count = q.pow(dg as u32);
            for idx in 0..count {
                let mut coeffs = Vec::with_capacity(dg + 1);
                let mut rest = idx;
                for _ in 0..dg {
                    coeffs.push(self.field.element_from_index(rest % q)?);
                    rest /= q;
                }
                coeffs.push(self.field.one());
                let g = UniPoly::new(&self.field, coeffs)?;
                let g2 = g.checked_mul(&g)?;
                let (_, r) = self.div_rem(&g2)?;
                if r.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Resultant of two polynomials at their actual degrees: the
    /// determinant of the `(deg f + deg g)`-square Sylvester matrix,
    /// computed by Gaussian elimination. A nonzero constant operand uses
    /// the convention `Res(f, c) = c^(deg f)`; a zero operand or two
    /// constants are [`Error::DegenerateInput`].
    pub fn resultant(&self, rhs: &Self) -> Result<FieldElement> {
        self.check_field(rhs)?;
        let df = match self.degree() {
            Degree::NegInfinity => return Err(Error::DegenerateInput("zero polynomial")),
            Degree::Finite(d) => d,
        };
        let dg = match rhs.degree() {
            Degree::NegInfinity => return Err(Error::DegenerateInput("zero polynomial")),
            Degree::Finite(d) => d,
        };
        match (df, dg) {
            (0, 0) => Err(Error::DegenerateInput("both operands constant")),
            (0, _) => Ok(self.coeffs[0].pow(dg as u64)),
            (_, 0) => Ok(rhs.coeffs[0].pow(df as u64)),
            _ => Ok(sylvester_determinant(&self.field, &self.coeffs, df, &rhs.coeffs, dg)),
        }
    }

    /// Discriminant `(-1)^(n(n-1)/2) * Res(f, f') / lc(f)` for `n = deg f
    /// >= 2`, where the resultant is taken with `f'` at its formal degree
    /// `n - 1` (rows of zeros when the derivative degenerates, so a
    /// vanished derivative yields discriminant zero). This is exactly the
    /// specialization of the generic integer discriminant, in any
    /// characteristic. Degree below two is [`Error::DegreeTooSmall`].
    pub fn discriminant(&self) -> Result<FieldElement> {
        let n = match self.degree() {
            Degree::Finite(n) if n >= 2 => n,
            _ => return Err(Error::DegreeTooSmall),
        };
        let deriv = self.derivative();
        let res = sylvester_determinant(&self.field, &self.coeffs, n, deriv.coeffs(), n - 1);
        let lc_inv = self.coeffs[n].inv().expect("leading coefficient is nonzero");
        let signed = if (n * (n - 1) / 2) % 2 == 1 { -&res } else { res };
        Ok(&signed * &lc_inv)
    }

    /// Evaluation by Horner's rule; [`Error::SpecMismatch`] if the point
    /// lives in a different field.
    pub fn eval(&self, at: &FieldElement) -> Result<FieldElement> {
        if at.field() != &self.field {
            return Err(Error::SpecMismatch);
        }
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        Ok(acc)
    }
}

/// Determinant of the Sylvester matrix of `f` (formal degree `df`) and `g`
/// (formal degree `dg`), by Gaussian elimination with the first nonzero
/// pivot in each column. Formal degrees may exceed the stored lengths;
/// missing coefficients are zero.
fn sylvester_determinant(
    field: &Field,
    f: &[FieldElement],
    df: usize,
    g: &[FieldElement],
    dg: usize,
) -> FieldElement {
    let n = df + dg;
    let coeff = |v: &[FieldElement], i: usize| -> FieldElement {
        v.get(i).cloned().unwrap_or_else(|| field.zero())
    };
    let mut m = vec![vec![field.zero(); n]; n];
    for i in 0..dg {
        for j in 0..=df {
            m[i][i + j] = coeff(f, df - j);
        }
    }
    for i in 0..df {
        for j in 0..=dg {
            m[dg + i][i + j] = coeff(g, dg - j);
        }
    }

    let mut det = field.one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return field.zero();
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -&det;
        }
        let pivot = m[col][col].clone();
        det = &det * &pivot;
        let pivot_inv = pivot.inv().expect("pivot is nonzero");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &pivot_inv;
            for c in col..n {
                let t = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &t;
            }
        }
    }
    det
}

macro_rules! panicking_binop {
    ($trait:ident, $method:ident, $checked:ident, $what:literal) => {
        impl $trait<&UniPoly> for &UniPoly {
            type Output = UniPoly;

            /// Panics when the operands live in different fields; use the
            /// `checked_*` method to get an error instead.
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                self.$checked(rhs)
                    .unwrap_or_else(|_| panic!(concat!($what, " of polynomials over different fields")))
            }
        }
    };
}

panicking_binop!(Add, add, checked_add, "sum");
panicking_binop!(Sub, sub, checked_sub, "difference");
panicking_binop!(Mul, mul, checked_mul, "product");

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly::zero(&self.field).checked_sub(self).expect("same field")
    }
}

impl fmt::Display for UniPoly {
    /// Descending powers of `T`; extension-field coefficients are
    /// parenthesized, e.g. `(x+1)T^2+x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let ext = self.field.extension_degree() > 1;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let show_coeff = i == 0 || !c.is_one();
            if show_coeff {
                if ext && i > 0 {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "T")?,
                _ => write!(f, "T^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, k: usize) -> Field {
        Field::new(p, k).unwrap()
    }

    #[test]
    fn degree_and_canonical_form() {
        let f5 = gf(5, 1);
        assert_eq!(UniPoly::zero(&f5).degree(), Degree::NegInfinity);
        assert_eq!(UniPoly::from_ints(&f5, &[0]).degree(), Degree::NegInfinity);
        assert_eq!(UniPoly::from_ints(&f5, &[7]).degree(), Degree::Finite(0));
        assert_eq!(UniPoly::from_ints(&f5, &[1, 0, 3, 0]).degree(), Degree::Finite(2));
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn addition_cancels_leading_terms() {
        let f5 = gf(5, 1);
        let a = UniPoly::from_ints(&f5, &[1, 0, 1]);
        let b = UniPoly::from_ints(&f5, &[4, 0, 4]);
        assert!((&a + &b).is_zero());
        // Partial cancellation drops the degree without zeroing the sum.
        let c = UniPoly::from_ints(&f5, &[0, 2, 4]);
        assert_eq!(&a + &c, UniPoly::from_ints(&f5, &[1, 2]));
    }

    #[test]
    fn multiplication() {
        let f3 = gf(3, 1);
        let a = UniPoly::from_ints(&f3, &[1, 1]); // T + 1
        let b = UniPoly::from_ints(&f3, &[2, 1]); // T + 2
        assert_eq!(&a * &b, UniPoly::from_ints(&f3, &[2, 0, 1])); // T^2 + 2
        assert!((&a * &UniPoly::zero(&f3)).is_zero());
    }

    #[test]
    fn derivative_reduces_indices_mod_p() {
        let f3 = gf(3, 1);
        let f = UniPoly::from_ints(&f3, &[1, 0, 1, 1]); // T^3 + T^2 + 1
        assert_eq!(f.derivative(), UniPoly::from_ints(&f3, &[0, 2])); // 2T
        let f2 = gf(2, 1);
        assert!(UniPoly::from_ints(&f2, &[0, 0, 1]).derivative().is_zero());
        assert!(UniPoly::from_ints(&f3, &[2]).derivative().is_zero());
    }

    #[test]
    fn division_with_remainder() {
        let f2 = gf(2, 1);
        let num = UniPoly::from_ints(&f2, &[1, 0, 0, 1]); // T^3 + 1
        let den = UniPoly::from_ints(&f2, &[1, 1]); // T + 1
        let (q, r) = num.div_rem(&den).unwrap();
        assert_eq!(q, UniPoly::from_ints(&f2, &[1, 1, 1]));
        assert!(r.is_zero());
        let err = num.div_rem(&UniPoly::zero(&f2)).unwrap_err();
        assert_eq!(err, Error::DivisionByZero);
    }

    #[test]
    fn gcd_is_monic() {
        let f5 = gf(5, 1);
        let a = UniPoly::from_ints(&f5, &[4, 0, 1]); // T^2 - 1
        let b = UniPoly::from_ints(&f5, &[4, 1]); // T - 1
        assert_eq!(a.gcd(&b).unwrap(), UniPoly::from_ints(&f5, &[4, 1]));
        let f3 = gf(3, 1);
        let c = UniPoly::from_ints(&f3, &[2, 2]); // 2T + 2
        assert_eq!(c.gcd(&UniPoly::zero(&f3)).unwrap(), UniPoly::from_ints(&f3, &[1, 1]));
        let z = UniPoly::zero(&f3);
        assert_eq!(z.gcd(&z).unwrap_err(), Error::BothZero);
    }

    #[test]
    fn squarefree_detection() {
        let f2 = gf(2, 1);
        assert!(!UniPoly::from_ints(&f2, &[0, 0, 1]).is_squarefree().unwrap()); // T^2
        assert!(UniPoly::from_ints(&f2, &[1, 1, 0, 1]).is_squarefree().unwrap()); // irreducible
        // (T+1)^2 has zero derivative in characteristic 2 but is caught anyway.
        assert!(!UniPoly::from_ints(&f2, &[1, 0, 1]).is_squarefree().unwrap());
        let f3 = gf(3, 1);
        // (T+1)^2 (T+2) = T^3 + T^2 + T + 2? expand: (T^2+2T+1)(T+2) = T^3+4T^2+5T+2
        let g = UniPoly::from_ints(&f3, &[2, 5, 4, 1]);
        assert!(!g.is_squarefree().unwrap());
        // T^3 + 2 = (T + 2)^3 over GF(3): a cube with vanishing derivative.
        assert!(!UniPoly::from_ints(&f3, &[2, 0, 0, 1]).is_squarefree().unwrap());
        // T^3 + T = T (T^2 + 1) with T^2 + 1 irreducible mod 3.
        assert!(UniPoly::from_ints(&f3, &[0, 1, 0, 1]).is_squarefree().unwrap());
        assert!(UniPoly::from_ints(&f3, &[2]).is_squarefree().unwrap());
        let err = UniPoly::zero(&f3).is_squarefree().unwrap_err();
        assert_eq!(err, Error::ZeroPolynomial);
    }

    #[test]
    fn brute_force_oracle_matches_examples() {
        let f2 = gf(2, 1);
        assert!(!UniPoly::from_ints(&f2, &[0, 0, 1]).is_squarefree_exhaustive().unwrap());
        assert!(UniPoly::from_ints(&f2, &[1, 1, 0, 1]).is_squarefree_exhaustive().unwrap());
        let f3 = gf(3, 1);
        let g = UniPoly::from_ints(&f3, &[2, 5, 4, 1]); // (T+1)^2 (T+2)
        assert!(!g.is_squarefree_exhaustive().unwrap());
        assert!(UniPoly::from_ints(&f3, &[5]).is_squarefree_exhaustive().unwrap());
    }

    #[test]
    fn brute_force_oracle_budget() {
        let f2 = gf(2, 1);
        let mut coeffs = vec![0i64; 14];
        coeffs[0] = 1;
        coeffs[13] = 1;
        let big = UniPoly::from_ints(&f2, &coeffs);
        assert!(matches!(big.is_squarefree_exhaustive(), Err(Error::BudgetExceeded(_))));
        let f101 = gf(101, 1);
        let f = UniPoly::from_ints(&f101, &[1, 1, 1]);
        assert!(matches!(f.is_squarefree_exhaustive(), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn resultant_examples() {
        let f5 = gf(5, 1);
        // T^2 + 1 and T + 2 share the root 3, so the resultant vanishes.
        let a = UniPoly::from_ints(&f5, &[1, 0, 1]);
        let b = UniPoly::from_ints(&f5, &[2, 1]);
        assert!(a.resultant(&b).unwrap().is_zero());
        // Res(T, T+1) = value of T+1 at the root of T.
        let t = UniPoly::from_ints(&f5, &[0, 1]);
        let t1 = UniPoly::from_ints(&f5, &[1, 1]);
        assert_eq!(t.resultant(&t1).unwrap(), f5.one());
    }

    #[test]
    fn resultant_constant_convention() {
        let f5 = gf(5, 1);
        let f = UniPoly::from_ints(&f5, &[1, 1, 1]);
        let c = UniPoly::from_ints(&f5, &[3]);
        assert_eq!(f.resultant(&c).unwrap(), f5.from_int(9)); // 3^2 = 4
        assert_eq!(c.resultant(&f).unwrap(), f5.from_int(4));
        let z = UniPoly::zero(&f5);
        assert!(matches!(f.resultant(&z), Err(Error::DegenerateInput(_))));
        assert!(matches!(c.resultant(&c), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn resultant_swap_symmetry() {
        // Res(f, g) = (-1)^(deg f * deg g) Res(g, f).
        let f7 = gf(7, 1);
        let f = UniPoly::from_ints(&f7, &[3, 1, 0, 1]); // odd degree
        let g = UniPoly::from_ints(&f7, &[1, 5, 1]); // even degree
        let fg = f.resultant(&g).unwrap();
        let gf_ = g.resultant(&f).unwrap();
        assert_eq!(fg, gf_); // 3 * 2 even
        let h = UniPoly::from_ints(&f7, &[2, 1]); // degree 1
        assert_eq!(f.resultant(&h).unwrap(), -&h.resultant(&f).unwrap());
    }

    #[test]
    fn resultant_multiplicative_in_one_instance() {
        let f5 = gf(5, 1);
        let f = UniPoly::from_ints(&f5, &[1, 2, 1, 1]);
        let g = UniPoly::from_ints(&f5, &[3, 1]);
        let h = UniPoly::from_ints(&f5, &[1, 4, 1]);
        let gh = &g * &h;
        let lhs = f.resultant(&gh).unwrap();
        let rhs = &f.resultant(&g).unwrap() * &f.resultant(&h).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn discriminant_quadratic() {
        let f5 = gf(5, 1);
        // b^2 - 4ac = 1 - 4 = -3 = 2 for T^2 + T + 1.
        let f = UniPoly::from_ints(&f5, &[1, 1, 1]);
        assert_eq!(f.discriminant().unwrap(), f5.from_int(2));
        assert!(UniPoly::from_ints(&f5, &[0, 0, 1]).discriminant().unwrap().is_zero());
    }

    #[test]
    fn discriminant_cubic() {
        let f7 = gf(7, 1);
        // Disc(T^3 - T) = -4p^3 - 27q^2 at p = -1, q = 0, i.e. 4.
        let f = UniPoly::from_ints(&f7, &[0, -1, 0, 1]);
        assert_eq!(f.discriminant().unwrap(), f7.from_int(4));
    }

    #[test]
    fn discriminant_with_degenerate_derivative() {
        let f3 = gf(3, 1);
        // f = 2T^3 + T^2 + T: f' = 2T + 1 drops to degree 1. The formal
        // Sylvester pad keeps the value equal to the generic discriminant
        // 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 evaluated mod 3 (= 2);
        // an actual-degree resultant would flip it to 1.
        let f = UniPoly::from_ints(&f3, &[0, 1, 1, 2]);
        assert_eq!(f.discriminant().unwrap(), f3.from_int(2));
        // A vanished derivative forces discriminant zero: T^3 + 2 = (T+2)^3.
        let cube = UniPoly::from_ints(&f3, &[2, 0, 0, 1]);
        assert!(cube.discriminant().unwrap().is_zero());
    }

    #[test]
    fn discriminant_degree_bounds() {
        let f5 = gf(5, 1);
        assert_eq!(UniPoly::from_ints(&f5, &[1, 1]).discriminant().unwrap_err(), Error::DegreeTooSmall);
        assert_eq!(UniPoly::from_ints(&f5, &[3]).discriminant().unwrap_err(), Error::DegreeTooSmall);
        assert_eq!(UniPoly::zero(&f5).discriminant().unwrap_err(), Error::DegreeTooSmall);
    }

    #[test]
    fn squarefree_iff_discriminant_nonzero_smoke() {
        let f5 = gf(5, 1);
        for a0 in 0..5 {
            for a1 in 0..5 {
                let f = UniPoly::from_ints(&f5, &[a0, a1, 1]);
                let sf = f.is_squarefree().unwrap();
                let disc = f.discriminant().unwrap();
                assert_eq!(sf, !disc.is_zero(), "T^2 + {a1}T + {a0} over GF(5)");
            }
        }
    }

    #[test]
    fn evaluation() {
        let f5 = gf(5, 1);
        let f = UniPoly::from_ints(&f5, &[1, 0, 1]); // T^2 + 1
        assert!(f.eval(&f5.from_int(3)).unwrap().is_zero()); // 9 + 1 = 10
        assert_eq!(f.eval(&f5.from_int(1)).unwrap(), f5.from_int(2));
    }

    #[test]
    fn mixed_field_operations_fail() {
        let f5 = gf(5, 1);
        let f7 = gf(7, 1);
        let a = UniPoly::from_ints(&f5, &[1, 1]);
        let b = UniPoly::from_ints(&f7, &[1, 1]);
        assert_eq!(a.checked_add(&b).unwrap_err(), Error::SpecMismatch);
        assert_eq!(a.checked_mul(&b).unwrap_err(), Error::SpecMismatch);
        assert!(UniPoly::new(&f5, vec![f7.one()]).is_err());
    }

    #[test]
    fn display_forms() {
        let f5 = gf(5, 1);
        assert_eq!(UniPoly::from_ints(&f5, &[1, 0, 3]).to_string(), "3T^2+1");
        assert_eq!(UniPoly::from_ints(&f5, &[0, 1]).to_string(), "T");
        assert_eq!(UniPoly::zero(&f5).to_string(), "0");
        let f4 = gf(2, 2);
        let p = UniPoly::new(&f4, vec![f4.element(&[0, 1]), f4.element(&[1, 1])]).unwrap();
        assert_eq!(p.to_string(), "(x+1)T+x");
    }
}
