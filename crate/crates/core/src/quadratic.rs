//! Homogeneous degree-two tropical polynomials and their symmetric matrices.
//!
//! A polynomial
//!
//! ```text
//! a11⊙X² ⊕ a22⊙Y² ⊕ a33⊙Z² ⊕ a21⊙XY ⊕ a32⊙YZ ⊕ a31⊙XZ
//! ```
//!
//! is stored coefficient for coefficient in a [`SymMatrix3`]. Mixed terms are
//! not halved: `⊕` is idempotent, so `a21⊙XY ⊕ a21⊙YX` is just `a21⊙XY`.
//! The diagonal must be finite, otherwise the Newton polygon is not the full
//! degree-two triangle.

use std::fmt;

use num_traits::Zero;

use crate::conic::chart::{AffinePoint, Chart};
use crate::error::{Error, Result};
use crate::semiring::{rat, Rational, TropScalar};

/// One of the six degree-two monomials, in the fixed order
/// `X², Y², Z², XY, YZ, XZ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monomial {
    XX,
    YY,
    ZZ,
    XY,
    YZ,
    XZ,
}

impl Monomial {
    pub const ALL: [Monomial; 6] = [Monomial::XX, Monomial::YY, Monomial::ZZ, Monomial::XY, Monomial::YZ, Monomial::XZ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn exponent(self) -> [i64; 3] {
        match self {
            Monomial::XX => [2, 0, 0],
            Monomial::YY => [0, 2, 0],
            Monomial::ZZ => [0, 0, 2],
            Monomial::XY => [1, 1, 0],
            Monomial::YZ => [0, 1, 1],
            Monomial::XZ => [1, 0, 1],
        }
    }

    /// The monomial whose variables are `i` and `j` (0-based, order free).
    pub fn from_indices(i: usize, j: usize) -> Monomial {
        match (i.min(j), i.max(j)) {
            (0, 0) => Monomial::XX,
            (1, 1) => Monomial::YY,
            (2, 2) => Monomial::ZZ,
            (0, 1) => Monomial::XY,
            (1, 2) => Monomial::YZ,
            (0, 2) => Monomial::XZ,
            _ => panic!("variable index out of range"),
        }
    }

    pub fn from_exponent(e: [i64; 3]) -> Option<Monomial> {
        Monomial::ALL.into_iter().find(|m| m.exponent() == e)
    }

    pub fn indices(self) -> (usize, usize) {
        match self {
            Monomial::XX => (0, 0),
            Monomial::YY => (1, 1),
            Monomial::ZZ => (2, 2),
            Monomial::XY => (0, 1),
            Monomial::YZ => (1, 2),
            Monomial::XZ => (0, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Monomial::XX => "X^2",
            Monomial::YY => "Y^2",
            Monomial::ZZ => "Z^2",
            Monomial::XY => "X*Y",
            Monomial::YZ => "Y*Z",
            Monomial::XZ => "X*Z",
        }
    }

    pub fn from_name(name: &str) -> Option<Monomial> {
        Monomial::ALL.into_iter().find(|m| m.name() == name)
    }

    /// Relabels variables: variable `i` becomes variable `perm[i]`.
    pub fn permuted(self, perm: [usize; 3]) -> Monomial {
        let (i, j) = self.indices();
        Monomial::from_indices(perm[i], perm[j])
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A subset of the six monomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoSet(u8);

impl MonoSet {
    pub fn empty() -> Self {
        MonoSet(0)
    }

    pub fn insert(&mut self, m: Monomial) {
        self.0 |= 1 << m.index();
    }

    pub fn contains(self, m: Monomial) -> bool {
        self.0 & (1 << m.index()) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Monomial> {
        Monomial::ALL.into_iter().filter(move |m| self.contains(*m))
    }

    pub fn union(self, other: MonoSet) -> MonoSet {
        MonoSet(self.0 | other.0)
    }

    /// True when the exponent vectors span a two-dimensional polygon, i.e. the
    /// tie is a vertex of the curve rather than a point on an edge.
    pub fn is_vertex_type(self) -> bool {
        let exps: Vec<[i64; 3]> = self.iter().map(Monomial::exponent).collect();
        if exps.len() < 3 {
            return false;
        }
        let base = exps[0];
        let diff = |e: [i64; 3]| [e[0] - base[0], e[1] - base[1]];
        exps.iter().skip(1).any(|a| {
            exps.iter().skip(1).any(|b| {
                let (p, q) = (diff(*a), diff(*b));
                p[0] * q[1] - p[1] * q[0] != 0
            })
        })
    }

    /// Lattice length of the segment spanned by collinear exponent vectors.
    pub fn lattice_length(self) -> u32 {
        let exps: Vec<[i64; 3]> = self.iter().map(Monomial::exponent).collect();
        let mut best = 0i64;
        for a in &exps {
            for b in &exps {
                let g = (0..3).fold(0i64, |g, k| num_integer::gcd(g, a[k] - b[k]));
                best = best.max(g);
            }
        }
        best as u32
    }

    pub fn permuted(self, perm: [usize; 3]) -> MonoSet {
        self.iter().map(|m| m.permuted(perm)).collect()
    }
}

impl FromIterator<Monomial> for MonoSet {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut set = MonoSet::empty();
        for m in iter {
            set.insert(m);
        }
        set
    }
}

impl fmt::Display for MonoSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.iter().map(Monomial::name).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Off-diagonal positions in the order `(2,1), (3,2), (3,1)`, 0-based.
pub const OFF_DIAGONAL: [(usize, usize); 3] = [(1, 0), (2, 1), (2, 0)];

/// Index into [`OFF_DIAGONAL`] for the unordered pair `{i, j}`, `i != j`.
pub fn pair_slot(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 1) => 0,
        (1, 2) => 1,
        (0, 2) => 2,
        _ => panic!("not an off-diagonal pair"),
    }
}

/// Symmetric 3×3 tropical matrix with finite diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymMatrix3 {
    diag: [Rational; 3],
    off: [TropScalar; 3],
}

impl SymMatrix3 {
    /// `diag = [a11, a22, a33]`, `off = [a21, a32, a31]`.
    pub fn new(diag: [Rational; 3], off: [TropScalar; 3]) -> Self {
        SymMatrix3 { diag, off }
    }

    pub fn from_ints(diag: [i64; 3], off: [i64; 3]) -> Self {
        SymMatrix3::new(diag.map(rat), off.map(TropScalar::int))
    }

    pub fn identity() -> Self {
        SymMatrix3::new(
            [Rational::zero(), Rational::zero(), Rational::zero()],
            [TropScalar::Bottom, TropScalar::Bottom, TropScalar::Bottom],
        )
    }

    pub fn diag(&self) -> &[Rational; 3] {
        &self.diag
    }

    /// Off-diagonal entries `[a21, a32, a31]`.
    pub fn off(&self) -> &[TropScalar; 3] {
        &self.off
    }

    pub fn entry(&self, i: usize, j: usize) -> TropScalar {
        if i == j {
            TropScalar::Finite(self.diag[i].clone())
        } else {
            self.off[pair_slot(i, j)].clone()
        }
    }

    pub fn to_full(&self) -> [[TropScalar; 3]; 3] {
        [0, 1, 2].map(|i| [0, 1, 2].map(|j| self.entry(i, j)))
    }

    pub fn is_shape(&self) -> bool {
        self.diag.iter().all(Zero::is_zero)
    }

    /// Shape matrix with finite non-negative entries.
    pub fn is_nonneg_shape(&self) -> bool {
        self.is_shape()
            && self.off.iter().all(|s| matches!(s, TropScalar::Finite(v) if !num_traits::Signed::is_negative(v)))
    }

    /// Off-diagonal entries as rationals; only valid for non-negative shapes.
    pub fn nonneg_off(&self) -> Option<[Rational; 3]> {
        if !self.is_nonneg_shape() {
            return None;
        }
        Some(self.off.clone().map(|s| s.as_finite().cloned().expect("finite")))
    }

    /// Relabels variables: entry `(i, j)` moves to `(perm[i], perm[j])`.
    pub fn permuted(&self, perm: [usize; 3]) -> SymMatrix3 {
        let mut diag = self.diag.clone();
        let mut off = self.off.clone();
        for i in 0..3 {
            diag[perm[i]] = self.diag[i].clone();
        }
        for (k, &(i, j)) in OFF_DIAGONAL.iter().enumerate() {
            off[pair_slot(perm[i], perm[j])] = self.off[k].clone();
        }
        SymMatrix3 { diag, off }
    }
}

/// A degree-two homogeneous tropical polynomial, one coefficient per
/// [`Monomial`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadPoly {
    coeffs: [TropScalar; 6],
}

impl QuadPoly {
    /// Rejects a `−∞` coefficient on `X²`, `Y²` or `Z²`.
    pub fn new(coeffs: [TropScalar; 6]) -> Result<Self> {
        for m in [Monomial::XX, Monomial::YY, Monomial::ZZ] {
            if coeffs[m.index()].is_bottom() {
                return Err(Error::NonFiniteDiagonal(m));
            }
        }
        Ok(QuadPoly { coeffs })
    }

    pub fn coeff(&self, m: Monomial) -> &TropScalar {
        &self.coeffs[m.index()]
    }

    pub fn coeffs(&self) -> &[TropScalar; 6] {
        &self.coeffs
    }

    pub fn permuted(&self, perm: [usize; 3]) -> QuadPoly {
        poly_of(&matrix_of(self).permuted(perm))
    }

    /// Evaluates at a finite projective point given by coordinates.
    pub fn eval_homogeneous(&self, point: &[Rational; 3]) -> Evaluation {
        let mut best: Option<Rational> = None;
        let mut maximizers = MonoSet::empty();
        for m in Monomial::ALL {
            let TropScalar::Finite(c) = self.coeff(m) else { continue };
            let e = m.exponent();
            let value = c + &point[0] * rat(e[0]) + &point[1] * rat(e[1]) + &point[2] * rat(e[2]);
            match &best {
                Some(b) if value < *b => {}
                Some(b) if value == *b => maximizers.insert(m),
                _ => {
                    best = Some(value);
                    maximizers = MonoSet::empty();
                    maximizers.insert(m);
                }
            }
        }
        Evaluation { value: best.expect("diagonal coefficients are finite"), maximizers }
    }
}

pub fn matrix_of(p: &QuadPoly) -> SymMatrix3 {
    let diag = [Monomial::XX, Monomial::YY, Monomial::ZZ]
        .map(|m| p.coeff(m).as_finite().cloned().expect("QuadPoly keeps a finite diagonal"));
    let off = [Monomial::XY, Monomial::YZ, Monomial::XZ].map(|m| p.coeff(m).clone());
    SymMatrix3::new(diag, off)
}

pub fn poly_of(a: &SymMatrix3) -> QuadPoly {
    let [a11, a22, a33] = a.diag.clone().map(TropScalar::Finite);
    let [a21, a32, a31] = a.off.clone();
    QuadPoly { coeffs: [a11, a22, a33, a21, a32, a31] }
}

/// A tropical diagonal matrix `diag(t1, t2, t3)`, i.e. the translation
/// `[X, Y, Z] ↦ [X + t1, Y + t2, Z + t3]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagTranslation {
    pub t: [Rational; 3],
}

impl DiagTranslation {
    pub fn inverse(&self) -> DiagTranslation {
        DiagTranslation { t: self.t.clone().map(|v| -v) }
    }

    /// `self ⊙ a ⊙ self`.
    pub fn conjugate(&self, a: &SymMatrix3) -> SymMatrix3 {
        let diag = [0, 1, 2].map(|i| &a.diag[i] + &self.t[i] + &self.t[i]);
        let off = [0, 1, 2].map(|k| {
            let (i, j) = OFF_DIAGONAL[k];
            a.off[k].odot(&TropScalar::Finite(&self.t[i] + &self.t[j]))
        });
        SymMatrix3::new(diag, off)
    }
}

/// `D(A)`, with entries `a_ii / 2`.
pub fn diag_of(a: &SymMatrix3) -> DiagTranslation {
    let half = rat(2);
    DiagTranslation { t: a.diag.clone().map(|v| v / &half) }
}

/// `shape(A) = D⁻¹ ⊙ A ⊙ D⁻¹`: zero diagonal and
/// `s_ij = a_ij − (a_ii + a_jj) / 2`.
pub fn shape(a: &SymMatrix3) -> SymMatrix3 {
    diag_of(a).inverse().conjugate(a)
}

/// Replaces the off-diagonal entries of a shape matrix by their
/// non-negative parts.
pub fn nonneg_shape(s: &SymMatrix3) -> Result<SymMatrix3> {
    if !s.is_shape() {
        return Err(Error::NotShapeMatrix);
    }
    Ok(SymMatrix3::new(s.diag.clone(), s.off.clone().map(|v| v.nonneg_part())))
}

/// `shape(A)⁺`.
pub fn shape_plus(a: &SymMatrix3) -> SymMatrix3 {
    nonneg_shape(&shape(a)).expect("shape has a zero diagonal")
}

/// Tropical determinant of a general 3×3 matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropDet {
    pub value: TropScalar,
    /// Number of permutations attaining the maximum.
    pub attained: usize,
}

impl TropDet {
    pub fn is_singular(&self) -> bool {
        self.attained >= 2
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

pub fn trop_det(m: &[[TropScalar; 3]; 3]) -> TropDet {
    let terms: Vec<TropScalar> =
        PERMUTATIONS.iter().map(|sigma| m[0][sigma[0]].odot(&m[1][sigma[1]]).odot(&m[2][sigma[2]])).collect();
    let value = terms.iter().max().cloned().expect("six permutations");
    let attained = terms.iter().filter(|t| **t == value).count();
    TropDet { value, attained }
}

/// Result of evaluating a polynomial at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub value: Rational,
    pub maximizers: MonoSet,
}

/// Evaluates `p` at an affine point of `chart`.
pub fn eval(p: &QuadPoly, point: &AffinePoint, chart: Chart) -> Evaluation {
    let [u, v, _] = chart.frame();
    let mut coords = [Rational::zero(), Rational::zero(), Rational::zero()];
    coords[u] = point.x.clone();
    coords[v] = point.y.clone();
    p.eval_homogeneous(&coords)
}
