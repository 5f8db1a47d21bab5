//! Reducibility and factorization of degree-two tropical polynomials.
//!
//! `P` factors exactly when `shape(P)` does, since `A = D ⊙ S ⊙ D` is a
//! change of variables. A shape polynomial factors iff all `s_ij` are finite
//! and non-negative and the largest equals the sum of the other two; with
//! `s31` largest the factors are
//!
//! ```text
//! (a⊙X ⊕ b⊙Y ⊕ Z) ⊙ ((−a)⊙X ⊕ (−b)⊙Y ⊕ Z),   a = s31, b = s32.
//! ```

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::quadratic::{diag_of, matrix_of, shape, Monomial, QuadPoly, OFF_DIAGONAL};
use crate::semiring::{Rational, TropScalar};

/// `x⊙X ⊕ y⊙Y ⊕ z⊙Z` with at least one finite coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinForm {
    coeffs: [TropScalar; 3],
}

impl LinForm {
    pub fn new(coeffs: [TropScalar; 3]) -> Result<Self> {
        if coeffs.iter().all(TropScalar::is_bottom) {
            return Err(Error::EmptyLinearForm);
        }
        Ok(LinForm { coeffs })
    }

    pub fn coeffs(&self) -> &[TropScalar; 3] {
        &self.coeffs
    }

    /// Relabels variable `i` as `perm[i]`.
    pub fn permuted(&self, perm: [usize; 3]) -> LinForm {
        let mut coeffs = self.coeffs.clone();
        for i in 0..3 {
            coeffs[perm[i]] = self.coeffs[i].clone();
        }
        LinForm { coeffs }
    }

    /// Substitutes `X_i ↦ X_i + t_i`.
    pub fn shifted(&self, t: &[Rational; 3]) -> LinForm {
        let coeffs = [0, 1, 2].map(|i| self.coeffs[i].odot(&TropScalar::Finite(t[i].clone())));
        LinForm { coeffs }
    }
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::io::format_linform(self, f)
    }
}

/// Formal product of two linear forms.
pub fn expand(f: &LinForm, g: &LinForm) -> Result<QuadPoly> {
    let coeffs = Monomial::ALL.map(|m| {
        let (i, j) = m.indices();
        let a = f.coeffs[i].odot(&g.coeffs[j]);
        let b = f.coeffs[j].odot(&g.coeffs[i]);
        a.oplus(&b)
    });
    QuadPoly::new(coeffs)
}

/// Index into `[s21, s32, s31]` of the largest finite entry, if all are
/// finite and non-negative and the largest is the sum of the other two.
/// Ties go to the earliest slot.
fn reducible_slot(s: &[TropScalar; 3]) -> Option<usize> {
    let vals: Vec<&Rational> = s.iter().map(TropScalar::as_finite).collect::<Option<_>>()?;
    if vals.iter().any(|v| v.is_negative()) {
        return None;
    }
    let mut top = 0;
    for k in 1..3 {
        if vals[k] > vals[top] {
            top = k;
        }
    }
    let rest: Rational = (0..3).filter(|&k| k != top).map(|k| vals[k].clone()).sum();
    (*vals[top] == rest).then_some(top)
}

pub fn is_reducible(p: &QuadPoly) -> bool {
    reducible_slot(shape(&matrix_of(p)).off()).is_some()
}

/// Outcome of [`factorize`].
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factorization {
    Product(LinForm, LinForm),
    Irreducible,
}

impl Factorization {
    pub fn factors(&self) -> Option<(&LinForm, &LinForm)> {
        match self {
            Factorization::Product(f, g) => Some((f, g)),
            Factorization::Irreducible => None,
        }
    }
}

pub fn factorize(p: &QuadPoly) -> Factorization {
    let a = matrix_of(p);
    let s = shape(&a);
    let Some(top) = reducible_slot(s.off()) else {
        return Factorization::Irreducible;
    };
    // Relabel so the largest entry sits at (3,1): its pair maps to {0, 2} in
    // increasing order and the remaining index to 1. perm[canonical] = actual.
    let (hi, lo) = OFF_DIAGONAL[top];
    let mid = 3 - hi - lo;
    let perm = [lo, mid, hi];
    let a_val = s.entry(perm[2], perm[0]);
    let b_val = s.entry(perm[2], perm[1]);
    let zero = TropScalar::Finite(Rational::zero());
    let neg = |t: &TropScalar| TropScalar::Finite(-t.as_finite().expect("finite").clone());
    let f = LinForm { coeffs: [a_val.clone(), b_val.clone(), zero.clone()] };
    let g = LinForm { coeffs: [neg(&a_val), neg(&b_val), zero] };
    let t = diag_of(&a).t;
    let f = f.permuted(perm).shifted(&t);
    let g = g.permuted(perm).shifted(&t);
    Factorization::Product(f, g)
}
