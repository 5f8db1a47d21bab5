//! Tropical conics: classification, closed-form vertices and the corner-locus
//! oracle.
//!
//! Up to translation a conic is determined by the non-negative shape entries
//! `s21⁺, s32⁺, s31⁺`. Their alternating sums
//!
//! ```text
//! d1 =  s21 - s32 + s31
//! d2 =  s21 + s32 - s31
//! d3 = -s21 + s32 + s31
//! ```
//!
//! satisfy `s_ij = (d_i + d_j) / 2`, and the sign pattern of `d` together with
//! the zeros of `s⁺` picks one of seven conic types.

pub mod chart;
pub mod locus;
pub mod sketch;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};

pub use chart::{change_chart, chart_embed, chart_project, AffinePoint, Chart, ProjPoint};
pub use locus::corner_locus;
pub use sketch::{
    check_balance, pendant_separations, BalanceViolation, Direction, PendantGaps, Sketch, SketchEdge, SketchGeometry,
    SketchRay, SketchVertex, NORTH_EAST, PENDANT_DIRECTIONS, SOUTH, WEST,
};

use crate::error::{Error, Result};
use crate::quadratic::{diag_of, eval, matrix_of, pair_slot, poly_of, shape_plus, MonoSet, QuadPoly, SymMatrix3};
use crate::semiring::{rat, Rational, TropScalar};

/// `s⁺` and `d` of a conic. Both arrays are indexed `[21, 32, 31]` and
/// `[1, 2, 3]` respectively.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Invariants {
    splus: [Rational; 3],
    d: [Rational; 3],
}

impl Invariants {
    /// Builds the invariants from non-negative shape entries `[s21, s32, s31]`.
    pub fn from_splus(splus: [Rational; 3]) -> Result<Self> {
        if splus.iter().any(Signed::is_negative) {
            return Err(Error::NotNonnegShape);
        }
        let [s21, s32, s31] = &splus;
        let d = [s21 - s32 + s31, s21 + s32 - s31, -s21 + s32 + s31];
        Ok(Invariants { splus, d })
    }

    pub fn splus(&self) -> &[Rational; 3] {
        &self.splus
    }

    pub fn d(&self) -> &[Rational; 3] {
        &self.d
    }

    /// `s⁺_ij` for 0-based `i != j`.
    pub fn s(&self, i: usize, j: usize) -> &Rational {
        &self.splus[pair_slot(i, j)]
    }

    /// The non-negative shape matrix `shape(A)⁺`.
    pub fn shape_matrix(&self) -> SymMatrix3 {
        SymMatrix3::new(
            [Rational::zero(), Rational::zero(), Rational::zero()],
            self.splus.clone().map(TropScalar::Finite),
        )
    }

    /// Invariants after relabeling variable `i` as `perm[i]`.
    pub fn permuted(&self, perm: [usize; 3]) -> Invariants {
        invariants_of(&self.shape_matrix().permuted(perm))
    }
}

impl fmt::Display for Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.splus;
        let [d1, d2, d3] = &self.d;
        write!(f, "s+ = ({a}, {b}, {c}), d = ({d1}, {d2}, {d3})")
    }
}

pub fn invariants_of(a: &SymMatrix3) -> Invariants {
    let s = shape_plus(a).nonneg_off().expect("shape_plus is a non-negative shape");
    Invariants::from_splus(s).expect("non-negative entries")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConicTag {
    OnePointCentral,
    TwoPointCentral,
    /// One pair of consecutive vertices collapsed (`s31 = 0`, `d3 < 0`).
    Degenerate1,
    /// Two pairs collapsed (`s32 = s31 = 0`, `d3 < 0`).
    Degenerate2,
    DoubleLine,
    /// Pair of lines with `d3 = 0` and the other `d` positive.
    PairOfLinesOneZero,
    /// Pair of lines with `d2 = d3 = 0`.
    PairOfLinesTwoZeros,
}

impl ConicTag {
    pub const ALL: [ConicTag; 7] = [
        ConicTag::OnePointCentral,
        ConicTag::TwoPointCentral,
        ConicTag::Degenerate1,
        ConicTag::Degenerate2,
        ConicTag::DoubleLine,
        ConicTag::PairOfLinesOneZero,
        ConicTag::PairOfLinesTwoZeros,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConicTag::OnePointCentral => "one-point-central",
            ConicTag::TwoPointCentral => "two-point-central",
            ConicTag::Degenerate1 => "degenerate-1",
            ConicTag::Degenerate2 => "degenerate-2",
            ConicTag::DoubleLine => "double-line",
            ConicTag::PairOfLinesOneZero => "pair-of-lines-one-zero",
            ConicTag::PairOfLinesTwoZeros => "pair-of-lines-two-zeros",
        }
    }

    pub fn is_degenerate(self) -> bool {
        !matches!(self, ConicTag::OnePointCentral | ConicTag::TwoPointCentral)
    }

    /// Pairs of lines, including the double line.
    pub fn is_pair_of_lines(self) -> bool {
        matches!(self, ConicTag::DoubleLine | ConicTag::PairOfLinesOneZero | ConicTag::PairOfLinesTwoZeros)
    }
}

impl fmt::Display for ConicTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Conic type together with the variable permutation that brings it to its
/// canonical pattern: `perm[k]` is the actual 0-based index playing the role
/// of canonical index `k`.
///
/// Canonical patterns: the negative or zero `d` sits at index 3; for
/// [`ConicTag::Degenerate1`] the vanishing entry is `s31`; for
/// [`ConicTag::PairOfLinesTwoZeros`] the positive `d` is `d1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConicClass {
    pub tag: ConicTag,
    pub perm: [usize; 3],
}

impl ConicClass {
    /// Actual index of the negative `d`, if any.
    pub fn negative_index(&self) -> Option<usize> {
        match self.tag {
            ConicTag::TwoPointCentral | ConicTag::Degenerate1 | ConicTag::Degenerate2 => Some(self.perm[2]),
            _ => None,
        }
    }
}

const IDENTITY: [usize; 3] = [0, 1, 2];

fn others(j: usize) -> [usize; 2] {
    match j {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    }
}

/// Classifies a conic from its invariants.
///
/// At most one `d` is negative: if `d_j < 0` then `0 <= 2 s_ij = d_i + d_j`
/// forces `d_i >= -d_j > 0` for both other indices.
pub fn classify(inv: &Invariants) -> ConicClass {
    let d = &inv.d;
    let negative: Vec<usize> = (0..3).filter(|&i| d[i].is_negative()).collect();
    let zero: Vec<usize> = (0..3).filter(|&i| d[i].is_zero()).collect();
    match negative.as_slice() {
        [] => match zero.as_slice() {
            [] => ConicClass { tag: ConicTag::OnePointCentral, perm: IDENTITY },
            [z] => {
                let [a, b] = others(*z);
                ConicClass { tag: ConicTag::PairOfLinesOneZero, perm: [a, b, *z] }
            }
            [a, b] => {
                let p = (0..3).find(|i| i != a && i != b).expect("one positive index");
                ConicClass { tag: ConicTag::PairOfLinesTwoZeros, perm: [p, *a, *b] }
            }
            _ => ConicClass { tag: ConicTag::DoubleLine, perm: IDENTITY },
        },
        [j] => {
            let j = *j;
            let [a, b] = others(j);
            let zero_partners: Vec<usize> = [a, b].into_iter().filter(|&k| inv.s(j, k).is_zero()).collect();
            match zero_partners.as_slice() {
                [] => ConicClass { tag: ConicTag::TwoPointCentral, perm: [a, b, j] },
                [k] => {
                    let m = if *k == a { b } else { a };
                    ConicClass { tag: ConicTag::Degenerate1, perm: [*k, m, j] }
                }
                _ => ConicClass { tag: ConicTag::Degenerate2, perm: [a, b, j] },
            }
        }
        _ => unreachable!("invariants built from a non-negative shape have at most one negative d"),
    }
}

/// All d non-negative and at least one zero.
pub fn is_pair_of_lines(inv: &Invariants) -> bool {
    inv.d.iter().all(|d| !d.is_negative()) && inv.d.iter().any(Zero::is_zero)
}

/// Classes whose matrix `shape(A)⁺` is tropically singular.
pub fn is_shape_singular_class(c: &ConicClass) -> bool {
    c.tag.is_pair_of_lines() || c.tag == ConicTag::OnePointCentral
}

/// Name of a distinguished point of the shape conic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnchorName {
    /// `v0` .. `v3`.
    V(u8),
    /// `w^i = v^i + t^{i,j}`, stored as 1-based `(i, j)`.
    W(u8, u8),
}

impl fmt::Display for AnchorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnchorName::V(i) => write!(f, "v{i}"),
            AnchorName::W(i, _) => write!(f, "w{i}"),
        }
    }
}

/// Distinguished points of the conic of a non-negative shape matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anchors {
    /// `v0, v1, v2, v3`.
    pub v: [ProjPoint; 4],
    /// `w^{i,j}` for every ordered pair `i != j`.
    pub w: Vec<(AnchorName, ProjPoint)>,
}

impl Anchors {
    pub fn all(&self) -> impl Iterator<Item = (AnchorName, &ProjPoint)> {
        let vs = self.v.iter().enumerate().map(|(i, p)| (AnchorName::V(i as u8), p));
        vs.chain(self.w.iter().map(|(n, p)| (*n, p)))
    }

    pub fn get(&self, name: AnchorName) -> Option<&ProjPoint> {
        self.all().find(|(n, _)| *n == name).map(|(_, p)| p)
    }
}

/// `v^i` are the negated rows of `S`, `v0 = [s32, s31, s21]`, and
/// `w^{i,j} = v^i + t^{i,j}` where `t^{i,j}` is `−2 s_ij` in coordinate `i`.
pub fn anchor_points(s: &SymMatrix3) -> Result<Anchors> {
    let off = s.nonneg_off().ok_or(Error::NotNonnegShape)?;
    let entry = |i: usize, j: usize| if i == j { Rational::zero() } else { off[pair_slot(i, j)].clone() };
    let row = |i: usize| ProjPoint::from_finite([0, 1, 2].map(|j| -entry(i, j)));
    let [s21, s32, s31] = off.clone();
    let v0 = ProjPoint::from_finite([s32, s31, s21]);
    let v = [v0, row(0), row(1), row(2)];
    let mut w = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let mut coords = [0, 1, 2].map(|k| -entry(i, k));
            coords[i] -= rat(2) * entry(i, j);
            w.push((AnchorName::W(i as u8 + 1, j as u8 + 1), ProjPoint::from_finite(coords)));
        }
    }
    Ok(Anchors { v, w })
}

/// Offset from the shape conic to `C(p)` in the `Z` chart:
/// `((a33 − a11) / 2, (a33 − a22) / 2)`.
pub fn translation_of(a: &SymMatrix3) -> (Rational, Rational) {
    let t = diag_of(a).t;
    (&t[2] - &t[0], &t[2] - &t[1])
}

/// Vertex of the conic: affine point in the `Z` chart and its maximizers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub point: AffinePoint,
    pub maximizers: MonoSet,
    pub names: Vec<AnchorName>,
}

/// Non-pendant vertices of `C(p)` in the `Z` chart, from the closed-form
/// anchor points.
///
/// Every `v` and `w` candidate of `shape(p)⁺` is tested with [`eval`]; those
/// where the maximizing exponents span a polygon are vertices. Coincident
/// candidates are merged, and the result is translated by
/// [`translation_of`].
pub fn vertices(p: &QuadPoly) -> Vec<Vertex> {
    let a = matrix_of(p);
    let splus = shape_plus(&a);
    let model = poly_of(&splus);
    let anchors = anchor_points(&splus).expect("shape_plus is a non-negative shape");
    let (tx, ty) = translation_of(&a);

    let mut kept: Vec<(AffinePoint, Vec<AnchorName>)> = Vec::new();
    for (name, cand) in anchors.all() {
        let pt = chart_project(cand, Chart::Z).expect("anchors are interior points");
        if !eval(&model, &pt, Chart::Z).maximizers.is_vertex_type() {
            continue;
        }
        match kept.iter_mut().find(|(q, _)| *q == pt) {
            Some((_, names)) => names.push(name),
            None => kept.push((pt, vec![name])),
        }
    }
    let mut out: Vec<Vertex> = kept
        .into_iter()
        .map(|(pt, names)| {
            let point = pt.translate(&tx, &ty);
            let maximizers = eval(p, &point, Chart::Z).maximizers;
            Vertex { point, maximizers, names }
        })
        .collect();
    out.sort_by(|a, b| a.point.cmp(&b.point));
    out
}

/// [`vertices`] expressed in another chart, sorted lexicographically.
pub fn vertex_points_in(p: &QuadPoly, chart: Chart) -> Vec<AffinePoint> {
    let set: BTreeSet<AffinePoint> = vertices(p).into_iter().map(|v| change_chart(&v.point, Chart::Z, chart)).collect();
    set.into_iter().collect()
}

/// Anchor names relevant to a class: `v0..v3`, plus `w^{j±1}` when `d_j < 0`.
pub fn relevant_anchor(class: &ConicClass, name: AnchorName) -> bool {
    match (name, class.negative_index()) {
        (AnchorName::V(_), _) => true,
        (AnchorName::W(_, j), Some(neg)) => usize::from(j) == neg + 1,
        (AnchorName::W(..), None) => false,
    }
}

/// Labels each vertex of `C(p)` (in `chart`) with the anchor names that
/// coincide there, e.g. `v0=v3`.
pub fn anchor_labels(p: &QuadPoly, chart: Chart) -> Vec<(AffinePoint, String)> {
    let class = classify(&invariants_of(&matrix_of(p)));
    vertices(p)
        .into_iter()
        .map(|v| {
            let mut names: Vec<AnchorName> = v.names.into_iter().filter(|n| relevant_anchor(&class, *n)).collect();
            names.sort();
            let label = names.iter().map(ToString::to_string).collect::<Vec<_>>().join("=");
            (change_chart(&v.point, Chart::Z, chart), label)
        })
        .collect()
}
