//! Projective points and the three affine charts of the tropical plane.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::semiring::{Rational, TropScalar};

/// One of the three affine charts, named by the coordinate fixed to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chart {
    X,
    Y,
    Z,
}

impl Chart {
    pub const ALL: [Chart; 3] = [Chart::X, Chart::Y, Chart::Z];

    /// Index of the normalized coordinate.
    pub fn fixed(self) -> usize {
        match self {
            Chart::X => 0,
            Chart::Y => 1,
            Chart::Z => 2,
        }
    }

    /// Projective coordinate indices `(u, v, w)` where `(u, v)` are the affine
    /// coordinates of the chart and `w` is the normalized one.
    ///
    /// Reading a curve in this chart is the same as reading the polynomial with
    /// variables reordered by this permutation in the `Z` chart.
    pub fn frame(self) -> [usize; 3] {
        match self {
            Chart::X => [1, 2, 0],
            Chart::Y => [0, 2, 1],
            Chart::Z => [0, 1, 2],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Chart::X => "X",
            Chart::Y => "Y",
            Chart::Z => "Z",
        }
    }

    pub fn from_name(name: &str) -> Option<Chart> {
        match name.trim().trim_end_matches("=0").trim() {
            "X" | "x" => Some(Chart::X),
            "Y" | "y" => Some(Chart::Y),
            "Z" | "z" => Some(Chart::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}=0", self.name())
    }
}

/// A point of the affine tropical plane with finite rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePoint {
    pub x: Rational,
    pub y: Rational,
}

impl AffinePoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        AffinePoint { x, y }
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Self {
        AffinePoint::new(&self.x + dx, &self.y + dy)
    }

    pub fn sub(&self, other: &AffinePoint) -> (Rational, Rational) {
        (&self.x - &other.x, &self.y - &other.y)
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A point `[x, y, z]` of the tropical projective plane.
///
/// Stored in its canonical representative: the largest coordinate is `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [TropScalar; 3],
}

impl ProjPoint {
    pub fn new(coords: [TropScalar; 3]) -> Result<Self> {
        let top = coords.iter().max().cloned().expect("three coordinates");
        let Some(top) = top.as_finite().cloned() else {
            return Err(Error::AllBottom);
        };
        let shift = TropScalar::Finite(-top);
        Ok(ProjPoint { coords: coords.map(|c| c.odot(&shift)) })
    }

    /// Builds a point from three finite coordinates.
    pub fn from_finite(coords: [Rational; 3]) -> Self {
        ProjPoint::new(coords.map(TropScalar::Finite)).expect("finite coordinates")
    }

    pub fn coords(&self) -> &[TropScalar; 3] {
        &self.coords
    }

    /// Finite coordinates of an interior point, in the canonical representative.
    pub fn finite_coords(&self) -> Option<[Rational; 3]> {
        let [a, b, c] = &self.coords;
        Some([a.as_finite()?.clone(), b.as_finite()?.clone(), c.as_finite()?.clone()])
    }

    pub fn is_interior(&self) -> bool {
        self.coords.iter().all(|c| !c.is_bottom())
    }

    /// Coordinatewise tropical product with a finite vector (a translation).
    pub fn shifted(&self, by: &[Rational; 3]) -> ProjPoint {
        let coords = [0, 1, 2].map(|i| self.coords[i].odot(&TropScalar::Finite(by[i].clone())));
        ProjPoint::new(coords).expect("translation keeps a finite coordinate")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

/// The chart map `j`: `Z` sends `(x, y)` to `[x, y, 0]`, `Y` sends `(x, z)` to
/// `[x, 0, z]`, `X` sends `(y, z)` to `[0, y, z]`.
pub fn chart_embed(pt: &AffinePoint, chart: Chart) -> ProjPoint {
    let [u, v, w] = chart.frame();
    let mut coords = [Rational::zero(), Rational::zero(), Rational::zero()];
    coords[u] = pt.x.clone();
    coords[v] = pt.y.clone();
    coords[w] = Rational::zero();
    ProjPoint::from_finite(coords)
}

/// Inverse of [`chart_embed`] on interior points.
pub fn chart_project(p: &ProjPoint, chart: Chart) -> Result<AffinePoint> {
    let [u, v, w] = chart.frame();
    let Some(base) = p.coords[w].as_finite() else {
        return Err(Error::OutsideChart(chart));
    };
    let (Some(x), Some(y)) = (p.coords[u].as_finite(), p.coords[v].as_finite()) else {
        return Err(Error::BoundaryPoint);
    };
    Ok(AffinePoint::new(x - base, y - base))
}

/// Moves an interior affine point from one chart to another.
pub fn change_chart(pt: &AffinePoint, from: Chart, to: Chart) -> AffinePoint {
    chart_project(&chart_embed(pt, from), to).expect("interior points lie in every chart")
}
