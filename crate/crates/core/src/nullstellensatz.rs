//! Coefficient boxes and the squarefree witness search.
//!
//! A *box* constrains each coefficient of a degree-`<= n` polynomial to a
//! finite set: tuples range over `S_0 x S_1 x ... x S_n`. Three
//! combinatorial guarantees — derived from the Combinatorial
//! Nullstellensatz applied to the generic discriminant — promise that a
//! box contains a squarefree polynomial:
//!
//! - **General**: every middle set `S_1 ... S_{n-1}` has at least 3
//!   elements (the all-squares monomial `A_1^2...A_{n-1}^2` certifies).
//! - **Char2**: characteristic 2 and middle sets of size at least 2 (the
//!   square root of the discriminant certifies via `A_1...A_{n-1}`).
//! - **Sparse**: `|S_1|, |S_{n-1}| >= n` with `n > 2` and `n` not
//!   congruent to 2 mod p (the monomial `A_1^(n-1) A_{n-1}^(n-1)`, whose
//!   coefficient is `(n-2)^(n-2)`, certifies).
//!
//! All three additionally require `S_n != {0}` so a true degree-`n`
//! member exists. The searches below are deterministic lexicographic
//! scans, so identical inputs always produce identical witnesses.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::discriminant::{char2_root_monomial, sparse_monomial, squares_monomial};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::multipoly::MultiPoly;
use crate::unipoly::{Degree, UniPoly};

/// Largest box cardinality the exhaustive scans accept.
pub const BOX_CAP: u128 = 100_000_000;

/// A product `S_0 x ... x S_n` of nonempty coefficient sets over one
/// field, each stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffBox {
    field: Field,
    sets: Vec<Vec<FieldElement>>,
}

impl CoeffBox {
    /// Builds a box, sorting and deduplicating each set.
    /// [`Error::InvalidParameter`] on an empty set or fewer than two sets;
    /// [`Error::SpecMismatch`] on elements from another field.
    pub fn new(field: &Field, sets: Vec<Vec<FieldElement>>) -> Result<Self> {
        if sets.len() < 2 {
            return Err(Error::InvalidParameter("a box needs at least two coefficient sets"));
        }
        if sets.iter().any(Vec::is_empty) {
            return Err(Error::InvalidParameter("every coefficient set must be nonempty"));
        }
        if sets.iter().flatten().any(|e| e.field() != field) {
            return Err(Error::SpecMismatch);
        }
        let sets = sets
            .into_iter()
            .map(|mut s| {
                s.sort();
                s.dedup();
                s
            })
            .collect();
        Ok(CoeffBox { field: field.clone(), sets })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The nominal degree `n`: one less than the number of sets.
    pub fn n(&self) -> usize {
        self.sets.len() - 1
    }

    pub fn sets(&self) -> &[Vec<FieldElement>] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &[FieldElement] {
        &self.sets[i]
    }

    /// Product of the set sizes.
    pub fn size(&self) -> u128 {
        self.sets.iter().map(|s| s.len() as u128).product()
    }

    /// Tuples in lexicographic order (leftmost coordinate most
    /// significant, so the last coordinate varies fastest).
    pub fn tuples(&self) -> BoxTuples<'_> {
        BoxTuples { sets: &self.sets, idx: vec![0; self.sets.len()], done: false }
    }

    fn ensure_within_budget(&self) -> Result<()> {
        let size = self.size();
        if size > BOX_CAP {
            return Err(Error::BoxTooLarge { size, cap: BOX_CAP });
        }
        Ok(())
    }
}

impl fmt::Display for CoeffBox {
    /// `{0;1}x{1}x...` — sets joined by `x`, elements joined by `;`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{{")?;
            for (j, e) in s.iter().enumerate() {
                if j > 0 {
                    write!(f, ";")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Lexicographic iterator over the tuples of a box.
pub struct BoxTuples<'a> {
    sets: &'a [Vec<FieldElement>],
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for BoxTuples<'_> {
    type Item = Vec<FieldElement>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let tuple = self
            .idx
            .iter()
            .zip(self.sets)
            .map(|(&i, s)| s[i].clone())
            .collect();
        // Odometer increment, last coordinate fastest.
        let mut pos = self.sets.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.idx[pos] += 1;
            if self.idx[pos] < self.sets[pos].len() {
                break;
            }
            self.idx[pos] = 0;
        }
        Some(tuple)
    }
}

/// Which combinatorial guarantee covers a box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GuaranteeKind {
    General,
    Char2,
    Sparse,
}

impl fmt::Display for GuaranteeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GuaranteeKind::General => "general",
            GuaranteeKind::Char2 => "char2",
            GuaranteeKind::Sparse => "sparse",
        };
        write!(f, "{s}")
    }
}

/// A guarantee kind together with the monomial that certifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Guarantee {
    pub kind: GuaranteeKind,
    /// Exponent vector in `n + 1` variables; each exponent is strictly
    /// below the size of the corresponding coefficient set.
    pub monomial: Vec<u32>,
}

/// A point of a box where a polynomial does not vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonvanishingPoint {
    pub point: Vec<FieldElement>,
    pub value: FieldElement,
}

/// A squarefree member of a box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// The coefficient tuple `(a_0, ..., a_n)`, ascending.
    pub tuple: Vec<FieldElement>,
    /// The discriminant at the tuple's true degree — `Some` (and nonzero)
    /// exactly when that degree is at least 2.
    pub disc_value: Option<FieldElement>,
}

/// Result of scanning a box for a squarefree member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Strongest guarantee covering the box, if any.
    pub guarantee: Option<Guarantee>,
    /// Lexicographically first squarefree tuple, if any.
    pub witness: Option<Witness>,
    /// Number of tuples examined (the witness tuple included).
    pub steps: u64,
}

fn guarantee_of_kind(kind: GuaranteeKind, b: &CoeffBox) -> Option<Guarantee> {
    let n = b.n();
    if n < 2 {
        return None;
    }
    // Every guarantee needs a nonzero leading choice: S_n != {0}.
    let sn = b.set(n);
    if sn.len() == 1 && sn[0].is_zero() {
        return None;
    }
    let middles = &b.sets()[1..n];
    let p = b.field().characteristic();
    let applies = match kind {
        GuaranteeKind::General => middles.iter().all(|s| s.len() >= 3),
        GuaranteeKind::Char2 => p == 2 && middles.iter().all(|s| s.len() >= 2),
        GuaranteeKind::Sparse => {
            n > 2 && (n - 2) as u64 % p != 0 && b.set(1).len() >= n && b.set(n - 1).len() >= n
        }
    };
    if !applies {
        return None;
    }
    let monomial = match kind {
        GuaranteeKind::General => squares_monomial(n),
        GuaranteeKind::Char2 => char2_root_monomial(n),
        GuaranteeKind::Sparse => sparse_monomial(n),
    };
    Some(Guarantee { kind, monomial })
}

/// The strongest guarantee covering a box, under the fixed precedence
/// General > Char2 > Sparse; `None` when nothing applies. Set-size
/// conditions are lower bounds: enlarging a set never voids a guarantee.
pub fn classify(b: &CoeffBox) -> Option<Guarantee> {
    [GuaranteeKind::General, GuaranteeKind::Char2, GuaranteeKind::Sparse]
        .into_iter()
        .find_map(|kind| guarantee_of_kind(kind, b))
}

/// Every guarantee covering a box, in precedence order (diagnostics).
pub fn applicable_guarantees(b: &CoeffBox) -> Vec<Guarantee> {
    [GuaranteeKind::General, GuaranteeKind::Char2, GuaranteeKind::Sparse]
        .into_iter()
        .filter_map(|kind| guarantee_of_kind(kind, b))
        .collect()
}

/// The Combinatorial Nullstellensatz applicability test: true iff the
/// coefficient of `monomial` in the homogeneous polynomial `f` is nonzero
/// mod p and every exponent is strictly below the matching set size.
/// A monomial of the wrong total degree simply has coefficient zero.
/// [`Error::NotHomogeneous`] for inhomogeneous `f`;
/// [`Error::ArityMismatch`] when arities disagree.
pub fn applies(f: &MultiPoly, monomial: &[u32], b: &CoeffBox) -> Result<bool> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if monomial.len() != f.arity() {
        return Err(Error::ArityMismatch { expected: f.arity(), got: monomial.len() });
    }
    if b.n() + 1 != f.arity() {
        return Err(Error::ArityMismatch { expected: f.arity(), got: b.n() + 1 });
    }
    let coeff = f.coefficient(monomial)?;
    let p = b.field().characteristic();
    if coeff.mod_floor(&p.into()).is_zero() {
        return Ok(false);
    }
    Ok(monomial.iter().zip(b.sets()).all(|(&e, s)| s.len() > e as usize))
}

/// First point of the box (in lexicographic order) where `f` does not
/// vanish, with the value; `None` if `f` vanishes identically on the box.
/// [`Error::ArityMismatch`] on shape disagreement, [`Error::BoxTooLarge`]
/// past the scan budget.
pub fn find_nonvanishing(f: &MultiPoly, b: &CoeffBox) -> Result<Option<NonvanishingPoint>> {
    if b.n() + 1 != f.arity() {
        return Err(Error::ArityMismatch { expected: f.arity(), got: b.n() + 1 });
    }
    b.ensure_within_budget()?;
    for point in b.tuples() {
        let value = f.evaluate(b.field(), &point)?;
        if !value.is_zero() {
            return Ok(Some(NonvanishingPoint { point, value }));
        }
    }
    Ok(None)
}

/// Scans a box in lexicographic order for a squarefree member and
/// classifies it on the way. Tuples whose polynomial is zero are skipped;
/// a tuple with `a_n = 0` is tested at its true, lower degree. A full
///-degree tuple is squarefree iff its discriminant is nonzero; lower
/// degrees fall back to the gcd test. Never panics on a guarantee
/// violation — callers that want the hard failure use
/// [`find_squarefree`]. [`Error::BoxTooLarge`] past the scan budget.
pub fn search_squarefree(b: &CoeffBox) -> Result<SearchOutcome> {
    b.ensure_within_budget()?;
    let guarantee = classify(b);
    let mut steps = 0u64;
    let mut witness = None;
    for tuple in b.tuples() {
        steps += 1;
        let poly = UniPoly::new(b.field(), tuple.clone())?;
        let squarefree = match poly.degree() {
            Degree::NegInfinity => continue,
            Degree::Finite(d) if d >= 2 => !poly.discriminant()?.is_zero(),
            _ => poly.is_squarefree()?,
        };
        if squarefree {
            let disc_value = match poly.degree() {
                Degree::Finite(d) if d >= 2 => Some(poly.discriminant()?),
                _ => None,
            };
            witness = Some(Witness { tuple, disc_value });
            break;
        }
    }
    Ok(SearchOutcome { guarantee, witness, steps })
}

/// Like [`search_squarefree`], but a box that carries a guarantee and
/// still yields no witness is an invariant violation — the theorems
/// promise existence — and panics rather than returning softly.
pub fn find_squarefree(b: &CoeffBox) -> Result<SearchOutcome> {
    let outcome = search_squarefree(b)?;
    if let (Some(g), None) = (&outcome.guarantee, &outcome.witness) {
        panic!(
            "guarantee violation: box {b} is covered by the {} guarantee but contains no squarefree tuple",
            g.kind
        );
    }
    Ok(outcome)
}
