//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! The variables are the coefficient symbols `A_0, ..., A_{nvars-1}` of a
//! generic univariate polynomial; instances carry their arity and refuse
//! mixed-arity arithmetic. Terms live in a `BTreeMap` keyed by a graded
//! lexicographic monomial order, so iteration and the text rendering are
//! deterministic — equal polynomials always serialize identically.
//!
//! Coefficients are `BigInt`: generic discriminant coefficients grow like
//! `(n-1)^(n-1)` and beyond, past any fixed-width integer by `n = 8`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// An exponent vector, one entry per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: lower total degree first, ties broken by
    /// plain left-to-right comparison of the exponent vectors.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A multivariate polynomial with integer coefficients and fixed arity.
///
/// Invariant: no stored coefficient is zero, and every monomial has the
/// polynomial's arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut out = Self::zero(arity);
        if !c.is_zero() {
            out.terms.insert(Monomial(vec![0; arity]), c);
        }
        out
    }

    /// The variable `A_i`; [`Error::ArityMismatch`] when `i` is out of range.
    pub fn variable(arity: usize, i: usize) -> Result<Self> {
        if i >= arity {
            return Err(Error::ArityMismatch { expected: arity, got: i + 1 });
        }
        let mut exps = vec![0; arity];
        exps[i] = 1;
        let mut out = Self::zero(arity);
        out.terms.insert(Monomial(exps), BigInt::one());
        Ok(out)
    }

    /// Builds from `(exponents, coefficient)` pairs, summing duplicates
    /// and pruning zeros; [`Error::ArityMismatch`] on a wrong-length
    /// exponent vector.
    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>,
    ) -> Result<Self> {
        let mut out = Self::zero(arity);
        for (exps, c) in terms {
            if exps.len() != arity {
                return Err(Error::ArityMismatch { expected: arity, got: exps.len() });
            }
            out.add_term(Monomial(exps), c);
        }
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// The integer coefficient of the exact exponent vector (zero if the
    /// monomial is absent); [`Error::ArityMismatch`] on wrong length.
    pub fn coefficient(&self, exponents: &[u32]) -> Result<BigInt> {
        if exponents.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: exponents.len() });
        }
        Ok(self.terms.get(&Monomial(exponents.to_vec())).cloned().unwrap_or_else(BigInt::zero))
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_arity(&self, rhs: &Self) -> Result<()> {
        if self.arity == rhs.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch { expected: self.arity, got: rhs.arity })
        }
    }

    /// Sum; [`Error::ArityMismatch`] on mixed arities.
    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_arity(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Difference; [`Error::ArityMismatch`] on mixed arities.
    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_arity(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    /// Product; [`Error::ArityMismatch`] on mixed arities.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_arity(rhs)?;
        let mut out = Self::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let exps = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                out.add_term(Monomial(exps), ca * cb);
            }
        }
        Ok(out)
    }

    /// Product with a single term `c * A^exponents`, the workhorse of the
    /// determinant expansion. Adding a fixed exponent vector preserves the
    /// graded-lex order, so the term map is rebuilt from an already-sorted
    /// iterator.
    pub fn mul_term(&self, exponents: &[u32], c: &BigInt) -> Result<Self> {
        if exponents.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: exponents.len() });
        }
        if c.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| {
                let exps = m.0.iter().zip(exponents).map(|(x, y)| x + y).collect();
                (Monomial(exps), k * c)
            })
            .collect();
        Ok(MultiPoly { arity: self.arity, terms })
    }

    /// Multiplies every coefficient by an integer scalar.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        MultiPoly { arity: self.arity, terms }
    }

    /// Coefficientwise reduction into `[0, p)`, pruning vanished terms.
    pub fn reduce_mod(&self, p: u64) -> Self {
        let p = BigInt::from(p);
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            let r = c.mod_floor(&p);
            if !r.is_zero() {
                out.terms.insert(m.clone(), r);
            }
        }
        out
    }

    /// Square root in characteristic 2: coefficients are first reduced
    /// mod 2; every surviving exponent must be even (squaring is the
    /// Frobenius there, so squares are exactly the all-even-exponent
    /// polynomials) and is halved, with all coefficients 1.
    /// [`Error::NotASquare`] if an odd exponent survives the reduction.
    pub fn sqrt_char2(&self) -> Result<Self> {
        let reduced = self.reduce_mod(2);
        let mut out = Self::zero(self.arity);
        for (m, _) in &reduced.terms {
            if m.0.iter().any(|&e| e % 2 != 0) {
                return Err(Error::NotASquare);
            }
            let half = m.0.iter().map(|&e| e / 2).collect();
            out.terms.insert(Monomial(half), BigInt::one());
        }
        Ok(out)
    }

    /// Evaluates at a point of a finite field: each integer coefficient
    /// reduces into the prime subfield, each variable takes the
    /// corresponding coordinate. [`Error::ArityMismatch`] on wrong point
    /// length, [`Error::SpecMismatch`] on foreign elements.
    pub fn evaluate(&self, field: &Field, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: point.len() });
        }
        if point.iter().any(|e| e.field() != field) {
            return Err(Error::SpecMismatch);
        }
        let p = BigInt::from(field.characteristic());
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let c_mod: u64 = (c.mod_floor(&p)).try_into().expect("residue fits in u64");
            if c_mod == 0 {
                continue;
            }
            let mut term = field.from_int(c_mod as i64);
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    term = &term * &x.pow(e as u64);
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// True when every term has the same total degree (vacuously for 0).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::total_degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }
}

macro_rules! panicking_binop {
    ($trait:ident, $method:ident, $checked:ident, $what:literal) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;

            /// Panics on mixed arities; use the `checked_*` method to get
            /// an error instead.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs)
                    .unwrap_or_else(|_| panic!(concat!($what, " of polynomials of different arities")))
            }
        }
    };
}

panicking_binop!(Add, add, checked_add, "sum");
panicking_binop!(Sub, sub, checked_sub, "difference");
panicking_binop!(Mul, mul, checked_mul, "product");

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        MultiPoly { arity: self.arity, terms }
    }
}

impl fmt::Display for MultiPoly {
    /// Deterministic rendering: terms ascending in graded-lex order joined
    /// by ` + `, each as `coeff*A_i^e*...` with the coefficient and every
    /// exponent written explicitly, e.g. `1*A_1^2 + -4*A_0^1*A_2^1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if !m.is_constant() {
                for (i, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        write!(f, "*A_{i}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use proptest::prelude::*;

    fn var(arity: usize, i: usize) -> MultiPoly {
        MultiPoly::variable(arity, i).unwrap()
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        // Degree dominates; within a degree, plain lex on the vectors.
        let c = Monomial::new(vec![0, 0]);
        let y = Monomial::new(vec![0, 1]);
        let x = Monomial::new(vec![1, 0]);
        let y2 = Monomial::new(vec![0, 2]);
        assert!(c < y && y < x && x < y2);
    }

    #[test]
    fn additive_inverse_cancels() {
        let a0 = var(2, 0);
        let sum = &a0 + &(-&a0);
        assert!(sum.is_zero());
        assert_eq!(sum.to_string(), "0");
    }

    #[test]
    fn difference_of_squares() {
        let a0 = var(2, 0);
        let a1 = var(2, 1);
        let prod = &(&a0 + &a1) * &(&a0 - &a1);
        let expected = MultiPoly::from_terms(
            2,
            vec![(vec![2, 0], BigInt::from(1)), (vec![0, 2], BigInt::from(-1))],
        )
        .unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn squaring_a_variable() {
        let a1 = var(2, 1);
        let sq = &a1 * &a1;
        assert_eq!(sq.coefficient(&[0, 2]).unwrap(), BigInt::from(1));
        assert_eq!(sq.term_count(), 1);
    }

    #[test]
    fn coefficient_lookup() {
        // A_1^2 - 4 A_0 A_2 in three variables.
        let f = MultiPoly::from_terms(
            3,
            vec![(vec![0, 2, 0], BigInt::from(1)), (vec![1, 0, 1], BigInt::from(-4))],
        )
        .unwrap();
        assert_eq!(f.coefficient(&[0, 2, 0]).unwrap(), BigInt::from(1));
        assert_eq!(f.coefficient(&[1, 0, 1]).unwrap(), BigInt::from(-4));
        assert_eq!(f.coefficient(&[1, 1, 0]).unwrap(), BigInt::from(0));
        assert!(f.coefficient(&[0, 2]).is_err());
    }

    #[test]
    fn display_is_pinned() {
        let f = MultiPoly::from_terms(
            3,
            vec![(vec![0, 2, 0], BigInt::from(1)), (vec![1, 0, 1], BigInt::from(-4))],
        )
        .unwrap();
        assert_eq!(f.to_string(), "1*A_1^2 + -4*A_0^1*A_2^1");
        assert_eq!(MultiPoly::constant(3, 7).to_string(), "7");
        assert_eq!(MultiPoly::zero(3).to_string(), "0");
    }

    #[test]
    fn mul_term_shifts_in_order() {
        let f = MultiPoly::from_terms(
            2,
            vec![(vec![1, 0], BigInt::from(2)), (vec![0, 1], BigInt::from(3))],
        )
        .unwrap();
        let shifted = f.mul_term(&[1, 1], &BigInt::from(-1)).unwrap();
        assert_eq!(shifted.coefficient(&[2, 1]).unwrap(), BigInt::from(-2));
        assert_eq!(shifted.coefficient(&[1, 2]).unwrap(), BigInt::from(-3));
        assert!(f.mul_term(&[0, 0], &BigInt::zero()).unwrap().is_zero());
    }

    #[test]
    fn reduction_mod_p() {
        let f = MultiPoly::from_terms(
            3,
            vec![(vec![0, 2, 0], BigInt::from(1)), (vec![1, 0, 1], BigInt::from(-4))],
        )
        .unwrap();
        let mod2 = f.reduce_mod(2);
        assert_eq!(mod2.to_string(), "1*A_1^2");
        // Everything divisible by p collapses to zero.
        let g = MultiPoly::constant(2, 6).scale(&BigInt::from(5));
        assert!(g.reduce_mod(2).is_zero());
        assert!(g.reduce_mod(3).is_zero());
        // Negative coefficients land in [0, p).
        let h = MultiPoly::constant(1, -1);
        assert_eq!(h.reduce_mod(5).to_string(), "4");
    }

    #[test]
    fn char2_square_roots() {
        // (A_1 A_2 + A_0 A_3)^2 expanded mod 2.
        let f = MultiPoly::from_terms(
            4,
            vec![(vec![0, 2, 2, 0], BigInt::from(1)), (vec![2, 0, 0, 2], BigInt::from(1))],
        )
        .unwrap();
        let root = f.sqrt_char2().unwrap();
        let expected = MultiPoly::from_terms(
            4,
            vec![(vec![0, 1, 1, 0], BigInt::from(1)), (vec![1, 0, 0, 1], BigInt::from(1))],
        )
        .unwrap();
        assert_eq!(root, expected);
        assert_eq!((&root * &root).reduce_mod(2), f.reduce_mod(2));
        // Constants and plain squares.
        assert_eq!(MultiPoly::constant(2, 1).sqrt_char2().unwrap(), MultiPoly::constant(2, 1));
        let a1sq = MultiPoly::from_terms(2, vec![(vec![0, 2], BigInt::from(1))]).unwrap();
        assert_eq!(a1sq.sqrt_char2().unwrap(), var(2, 1));
        // Terms that vanish mod 2 cannot block the root.
        let g = MultiPoly::from_terms(
            3,
            vec![(vec![0, 2, 0], BigInt::from(1)), (vec![1, 0, 1], BigInt::from(-4))],
        )
        .unwrap();
        assert_eq!(g.sqrt_char2().unwrap(), var(3, 1));
        // A surviving odd exponent is rejected.
        assert_eq!(var(2, 0).sqrt_char2().unwrap_err(), Error::NotASquare);
    }

    #[test]
    fn evaluation_over_a_field() {
        let f5 = Field::new(5, 1).unwrap();
        let disc2 = MultiPoly::from_terms(
            3,
            vec![(vec![0, 2, 0], BigInt::from(1)), (vec![1, 0, 1], BigInt::from(-4))],
        )
        .unwrap();
        let one = f5.one();
        let v = disc2.evaluate(&f5, &[one.clone(), one.clone(), one.clone()]).unwrap();
        assert_eq!(v, f5.from_int(2)); // 1 - 4 = -3
        assert!(MultiPoly::zero(3).evaluate(&f5, &[one.clone(), one.clone(), one]).unwrap().is_zero());
        let short = disc2.evaluate(&f5, &[f5.one()]);
        assert!(matches!(short, Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn homogeneity_and_degree() {
        let f = MultiPoly::from_terms(
            3,
            vec![(vec![0, 2, 0], BigInt::from(1)), (vec![1, 0, 1], BigInt::from(-4))],
        )
        .unwrap();
        assert!(f.is_homogeneous());
        assert_eq!(f.total_degree(), Some(2));
        let g = &f + &MultiPoly::constant(3, 1);
        assert!(!g.is_homogeneous());
        assert!(MultiPoly::zero(3).is_homogeneous());
        assert_eq!(MultiPoly::zero(3).total_degree(), None);
    }

    #[test]
    fn mixed_arity_is_rejected() {
        let a = var(2, 0);
        let b = var(3, 0);
        assert!(matches!(a.checked_add(&b), Err(Error::ArityMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::ArityMismatch { .. })));
        assert!(MultiPoly::variable(2, 2).is_err());
        assert!(MultiPoly::from_terms(2, vec![(vec![1], BigInt::one())]).is_err());
    }

    // ---- Ring laws on randomized small polynomials ----

    fn small_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..4, 3), -9i64..10),
            0..5,
        )
        .prop_map(|terms| {
            MultiPoly::from_terms(3, terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn addition_commutes(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn multiplication_commutes(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn multiplication_associates(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn multiplication_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn subtraction_inverts_addition(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }
    }
}
