//! Symbolic resultants and discriminants of generic polynomials.
//!
//! The star object is the discriminant of `A_0 + A_1 T + ... + A_n T^n`
//! as an integer polynomial in the coefficient symbols: a Sylvester
//! determinant over [`MultiPoly`] entries, normalized by the classical
//! sign and an exact division by `A_n`. On top of it sit the monomial
//! extractions and the trinomial identity that the experiment harness
//! asserts.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;

/// Largest generic degree the symbolic engine accepts; the Sylvester
/// matrix is (2n-1)-square and the expansion outgrows a desk budget fast.
pub const SYMBOLIC_DEGREE_CAP: usize = 9;

/// A polynomial in an auxiliary variable `T` whose coefficients are
/// integer multivariate polynomials, degree-ascending with no trailing
/// zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPoly {
    arity: usize,
    coeffs: Vec<MultiPoly>,
}

impl TPoly {
    /// Builds from ascending coefficients, trimming trailing zeros;
    /// [`Error::ArityMismatch`] if the coefficients disagree on arity.
    pub fn new(arity: usize, coeffs: Vec<MultiPoly>) -> Result<Self> {
        for c in &coeffs {
            if c.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, got: c.arity() });
            }
        }
        let mut p = TPoly { arity, coeffs };
        while p.coeffs.last().map_or(false, MultiPoly::is_zero) {
            p.coeffs.pop();
        }
        Ok(p)
    }

    pub fn zero(arity: usize) -> Self {
        TPoly { arity, coeffs: Vec::new() }
    }

    /// The generic degree-`n` polynomial `A_0 + A_1 T + ... + A_n T^n`
    /// in `n + 1` coefficient symbols.
    pub fn generic(n: usize) -> Self {
        let arity = n + 1;
        let coeffs = (0..=n)
            .map(|i| MultiPoly::variable(arity, i).expect("index within arity"))
            .collect();
        TPoly { arity, coeffs }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `T`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `T^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> MultiPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(|| MultiPoly::zero(self.arity))
    }

    /// Formal derivative with respect to `T`.
    pub fn derivative_t(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.arity);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&BigInt::from(i)))
            .collect();
        TPoly { arity: self.arity, coeffs }
    }
}

/// Resultant with respect to `T` of two nonzero polynomials at their
/// actual `T`-degrees: the Sylvester determinant over [`MultiPoly`]
/// entries. A `T`-constant operand `c` against degree `d` uses the
/// convention `c^d`; a zero operand or two constants are
/// [`Error::DegenerateInput`].
pub fn symbolic_resultant(f: &TPoly, g: &TPoly) -> Result<MultiPoly> {
    if f.arity != g.arity {
        return Err(Error::ArityMismatch { expected: f.arity, got: g.arity });
    }
    let df = f.degree().ok_or(Error::DegenerateInput("zero polynomial"))?;
    let dg = g.degree().ok_or(Error::DegenerateInput("zero polynomial"))?;
    match (df, dg) {
        (0, 0) => Err(Error::DegenerateInput("both operands constant")),
        (0, _) => Ok(poly_power(&f.coeffs[0], dg)),
        (_, 0) => Ok(poly_power(&g.coeffs[0], df)),
        _ => {
            let n = df + dg;
            let mut m = vec![vec![MultiPoly::zero(f.arity); n]; n];
            for i in 0..dg {
                for j in 0..=df {
                    m[i][i + j] = f.coeff(df - j);
                }
            }
            for i in 0..df {
                for j in 0..=dg {
                    m[dg + i][i + j] = g.coeff(dg - j);
                }
            }
            Ok(banded_determinant(f.arity, m))
        }
    }
}

/// Discriminant of the generic degree-`n` polynomial, as an integer
/// polynomial in `A_0, ..., A_n`:
/// `(-1)^(n(n-1)/2) * Res_T(m, m') / A_n` with the division by `A_n`
/// performed exactly in the polynomial ring. Degrees outside `2..=9` are
/// [`Error::OutOfBudget`]; [`Error::InexactDivision`] would signal an
/// implementation bug and must never fire.
pub fn symbolic_discriminant(n: usize) -> Result<MultiPoly> {
    if !(2..=SYMBOLIC_DEGREE_CAP).contains(&n) {
        return Err(Error::OutOfBudget(n));
    }
    let m = TPoly::generic(n);
    let res = symbolic_resultant(&m, &m.derivative_t())?;
    let signed = if (n * (n - 1) / 2) % 2 == 1 { -&res } else { res };
    divide_by_variable(&signed, n)
}

/// Exponent vector of `A_1^2 A_2^2 ... A_{n-1}^2` in `n + 1` variables.
pub fn squares_monomial(n: usize) -> Vec<u32> {
    let mut exps = vec![2; n + 1];
    exps[0] = 0;
    exps[n] = 0;
    exps
}

/// Exponent vector of `A_1^(n-1) A_{n-1}^(n-1)` in `n + 1` variables.
pub fn sparse_monomial(n: usize) -> Vec<u32> {
    let mut exps = vec![0; n + 1];
    exps[1] = (n - 1) as u32;
    exps[n - 1] = (n - 1) as u32;
    exps
}

/// Exponent vector of `A_1 A_2 ... A_{n-1}` in `n + 1` variables — the
/// monomial expected inside the characteristic-2 square root.
pub fn char2_root_monomial(n: usize) -> Vec<u32> {
    let mut exps = vec![1; n + 1];
    exps[0] = 0;
    exps[n] = 0;
    exps
}

/// Signed coefficient of the all-squares monomial in the generic
/// discriminant; callers assert absolute value 1.
pub fn squares_coefficient(n: usize) -> Result<BigInt> {
    let disc = symbolic_discriminant(n)?;
    disc.coefficient(&squares_monomial(n))
}

/// Signed coefficient of the sparse monomial `A_1^(n-1) A_{n-1}^(n-1)`
/// in the generic discriminant; callers assert absolute value
/// `(n-2)^(n-2)`. Needs `3 <= n <= 9`, else [`Error::OutOfBudget`].
pub fn sparse_coefficient(n: usize) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::OutOfBudget(n));
    }
    let disc = symbolic_discriminant(n)?;
    disc.coefficient(&sparse_monomial(n))
}

/// Checks the closed form of the trinomial discriminant: with
/// `tri = A_1 + A_{n-1} T^(n-2) + A_n T^(n-1)`,
///
/// ```text
/// A_1^2 * Disc_T(tri) = eps * (n-1)^(n-1) * A_1^n * A_n^(n-2)
///                     + eps * delta * (n-2)^(n-2) * A_1^(n-1) * A_{n-1}^(n-1)
/// ```
///
/// for a sign pair `(eps, delta)`, each `+1` or `-1`. Returns the observed
/// pair; [`Error::NoSignMatch`] if no pair matches (which would indicate a
/// formula transcription or implementation error). Needs `3 <= n <= 9`.
pub fn trinomial_identity(n: usize) -> Result<(i8, i8)> {
    if !(3..=SYMBOLIC_DEGREE_CAP).contains(&n) {
        return Err(Error::OutOfBudget(n));
    }
    let arity = n + 1;
    let var = |i: usize| MultiPoly::variable(arity, i).expect("index within arity");
    // tri has T-degree n-1 with leading coefficient A_n.
    let mut coeffs = vec![MultiPoly::zero(arity); n];
    coeffs[0] = var(1);
    coeffs[n - 2] = var(n - 1);
    coeffs[n - 1] = var(n);
    let tri = TPoly::new(arity, coeffs)?;
    let deg = n - 1;
    let res = symbolic_resultant(&tri, &tri.derivative_t())?;
    let signed = if (deg * (deg - 1) / 2) % 2 == 1 { -&res } else { res };
    let disc_tri = divide_by_variable(&signed, n)?;
    let lhs = poly_power(&var(1), 2).checked_mul(&disc_tri)?;

    let pow = |base: u64, e: u32| BigInt::from(base).pow(e);
    let first = {
        let mut exps = vec![0u32; arity];
        exps[1] = n as u32;
        exps[n] = (n - 2) as u32;
        MultiPoly::from_terms(arity, [(exps, pow((n - 1) as u64, (n - 1) as u32))])?
    };
    let second = {
        let mut exps = vec![0u32; arity];
        exps[1] = (n - 1) as u32;
        exps[n - 1] = (n - 1) as u32;
        MultiPoly::from_terms(arity, [(exps, pow((n - 2) as u64, (n - 2) as u32))])?
    };
    for eps in [1i8, -1] {
        for delta in [1i8, -1] {
            let mut rhs = if eps == 1 { first.clone() } else { -&first };
            let mut term = if delta == 1 { second.clone() } else { -&second };
            if eps == -1 {
                term = -&term;
            }
            rhs = rhs.checked_add(&term)?;
            if rhs == lhs {
                return Ok((eps, delta));
            }
        }
    }
    Err(Error::NoSignMatch)
}

/// Exact division by the variable `A_i`: every term must contain it;
/// otherwise [`Error::InexactDivision`].
fn divide_by_variable(f: &MultiPoly, i: usize) -> Result<MultiPoly> {
    let terms: Vec<(Vec<u32>, BigInt)> = f
        .terms()
        .map(|(m, c)| {
            let mut exps = m.exponents().to_vec();
            if exps[i] == 0 {
                return Err(Error::InexactDivision);
            }
            exps[i] -= 1;
            Ok((exps, c.clone()))
        })
        .collect::<Result<_>>()?;
    MultiPoly::from_terms(f.arity(), terms)
}

fn poly_power(base: &MultiPoly, e: usize) -> MultiPoly {
    let mut acc = MultiPoly::constant(base.arity(), BigInt::one());
    for _ in 0..e {
        acc = &acc * base;
    }
    acc
}

/// Determinant of a square matrix of integer polynomials by cofactor
/// expansion with memoization on the set of remaining columns.
///
/// Rows are pre-sorted by their nonzero band (Sylvester matrices are
/// staircases, so the sparsest rows come first and distinct expansion
/// paths reconverge on shared column sets); the row permutation's parity
/// folds into the result's sign. The memo key is a column bitmask — the
/// next row to expand is determined by how many columns remain.
fn banded_determinant(arity: usize, m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = m.len();
    assert!(n <= 31, "determinant dimension exceeds the bitmask width");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&r| {
        let first = m[r].iter().position(|e| !e.is_zero()).unwrap_or(n);
        let last = m[r].iter().rposition(|e| !e.is_zero()).unwrap_or(0);
        (first, last)
    });
    let mut swaps = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            if order[i] > order[j] {
                swaps += 1;
            }
        }
    }
    let rows: Vec<&Vec<MultiPoly>> = order.iter().map(|&r| &m[r]).collect();
    let full: u32 = (1u32 << n) - 1;
    let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
    let det = expand_minor(arity, &rows, full, &mut memo);
    if swaps % 2 == 1 { -&det } else { det }
}

fn expand_minor(
    arity: usize,
    rows: &[&Vec<MultiPoly>],
    mask: u32,
    memo: &mut HashMap<u32, MultiPoly>,
) -> MultiPoly {
    if mask == 0 {
        return MultiPoly::constant(arity, BigInt::one());
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let n = rows.len();
    let row = rows[n - mask.count_ones() as usize];
    let mut acc = MultiPoly::zero(arity);
    let mut pos = 0u32;
    for (j, entry) in row.iter().enumerate() {
        if mask & (1 << j) == 0 {
            continue;
        }
        if !entry.is_zero() {
            let sub = expand_minor(arity, rows, mask & !(1 << j), memo);
            let term = entry.checked_mul(&sub).expect("matrix entries share one arity");
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        pos += 1;
    }
    memo.insert(mask, acc.clone());
    acc
}
