//! Weighted trees drawn in an affine chart, and the balance condition.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::chart::{AffinePoint, Chart};
use crate::quadratic::MonoSet;
use crate::semiring::Rational;

pub type Direction = (i64, i64);

pub const WEST: Direction = (-1, 0);
pub const SOUTH: Direction = (0, -1);
pub const NORTH_EAST: Direction = (1, 1);

/// The three pendant directions of a conic, in the order used by
/// [`Sketch::ray_census`].
pub const PENDANT_DIRECTIONS: [Direction; 3] = [WEST, SOUTH, NORTH_EAST];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SketchVertex {
    pub point: AffinePoint,
    /// Monomials attaining the maximum at this point.
    pub maximizers: MonoSet,
}

/// Bounded edge between two vertex indices, `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SketchEdge {
    pub u: usize,
    pub v: usize,
    pub weight: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SketchRay {
    pub vertex: usize,
    /// Primitive integer direction.
    pub dir: Direction,
    pub weight: u32,
}

/// A tropical conic drawn in one affine chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sketch {
    pub chart: Chart,
    pub vertices: Vec<SketchVertex>,
    pub edges: Vec<SketchEdge>,
    pub rays: Vec<SketchRay>,
}

/// Coordinates-only view of a sketch, used to compare two curves cell by cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SketchGeometry {
    pub vertices: Vec<AffinePoint>,
    pub edges: Vec<(AffinePoint, AffinePoint, u32)>,
    pub rays: Vec<(AffinePoint, Direction, u32)>,
}

impl Sketch {
    /// Sorts vertices lexicographically and edges and rays by endpoint, then
    /// direction. Edge endpoints are stored with `u < v`.
    pub fn canonicalize(mut self) -> Sketch {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by(|&a, &b| self.vertices[a].point.cmp(&self.vertices[b].point));
        let mut remap = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let vertices = order.iter().map(|&i| self.vertices[i].clone()).collect();
        for e in &mut self.edges {
            let (a, b) = (remap[e.u], remap[e.v]);
            e.u = a.min(b);
            e.v = a.max(b);
        }
        for r in &mut self.rays {
            r.vertex = remap[r.vertex];
        }
        self.edges.sort();
        self.rays.sort();
        Sketch { chart: self.chart, vertices, edges: self.edges, rays: self.rays }
    }

    pub fn geometry(&self) -> SketchGeometry {
        let pt = |i: usize| self.vertices[i].point.clone();
        let mut vertices: Vec<AffinePoint> = self.vertices.iter().map(|v| v.point.clone()).collect();
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (pt(e.u), pt(e.v));
                if a <= b {
                    (a, b, e.weight)
                } else {
                    (b, a, e.weight)
                }
            })
            .collect();
        let mut rays: Vec<_> = self.rays.iter().map(|r| (pt(r.vertex), r.dir, r.weight)).collect();
        vertices.sort();
        edges.sort();
        rays.sort();
        SketchGeometry { vertices, edges, rays }
    }

    pub fn vertex_points(&self) -> Vec<AffinePoint> {
        self.vertices.iter().map(|v| v.point.clone()).collect()
    }

    /// Total ray weight in the west, south and north-east directions.
    pub fn ray_census(&self) -> [u32; 3] {
        let mut census = [0; 3];
        for r in &self.rays {
            if let Some(k) = PENDANT_DIRECTIONS.iter().position(|d| *d == r.dir) {
                census[k] += r.weight;
            }
        }
        census
    }

    /// Number of distinct rays (a weight-two ray counts once).
    pub fn distinct_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn find_vertex(&self, p: &AffinePoint) -> Option<usize> {
        self.vertices.iter().position(|v| v.point == *p)
    }
}

/// Primitive integer vector along a nonzero rational vector.
///
/// Returns `None` for the zero vector or when the reduced vector does not fit
/// in `i64`.
pub fn primitive_direction(dx: &Rational, dy: &Rational) -> Option<Direction> {
    if dx.is_zero() && dy.is_zero() {
        return None;
    }
    let l = dx.denom().lcm(dy.denom());
    let ix: BigInt = dx.numer() * (&l / dx.denom());
    let iy: BigInt = dy.numer() * (&l / dy.denom());
    let g = ix.gcd(&iy);
    Some(((ix / &g).to_i64()?, (iy / &g).to_i64()?))
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct BalanceViolation {
    pub vertex: usize,
    pub point: AffinePoint,
    /// Weighted sum of outgoing primitive directions, `None` if some edge was
    /// degenerate or had an unrepresentable slope.
    pub sum: Option<Direction>,
}

impl fmt::Display for BalanceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sum {
            Some((x, y)) => write!(f, "unbalanced vertex {} at {}: sum is ({x}, {y})", self.vertex, self.point),
            None => write!(f, "degenerate edge at vertex {} ({})", self.vertex, self.point),
        }
    }
}

/// Checks that the weighted primitive directions around every vertex sum to
/// zero.
#[allow(clippy::result_large_err)]
pub fn check_balance(sk: &Sketch) -> Result<(), BalanceViolation> {
    let n = sk.vertices.len();
    let mut sums: BTreeMap<usize, Option<(i64, i64)>> = (0..n).map(|i| (i, Some((0, 0)))).collect();
    let mut add = |v: usize, d: Option<Direction>, w: u32| {
        let entry = sums.get_mut(&v).expect("vertex index in range");
        *entry = match (*entry, d) {
            (Some((x, y)), Some((dx, dy))) => Some((x + i64::from(w) * dx, y + i64::from(w) * dy)),
            _ => None,
        };
    };
    for e in &sk.edges {
        let (dx, dy) = sk.vertices[e.v].point.sub(&sk.vertices[e.u].point);
        let d = primitive_direction(&dx, &dy);
        add(e.u, d, e.weight);
        add(e.v, d.map(|(x, y)| (-x, -y)), e.weight);
    }
    for r in &sk.rays {
        add(r.vertex, Some(r.dir), r.weight);
    }
    for (v, sum) in sums {
        if sum != Some((0, 0)) {
            return Err(BalanceViolation { vertex: v, point: sk.vertices[v].point.clone(), sum });
        }
    }
    Ok(())
}

/// Exact separations between parallel pendant rays in the `Z` chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantGaps {
    /// Displacement from the left to the right north-east ray base.
    pub north_east: (Rational, Rational),
    /// Vertical distance between the two west rays.
    pub west: Rational,
    /// Horizontal distance between the two south rays.
    pub south: Rational,
}

/// Measures how far apart the two pendant rays of each direction are.
///
/// A direction carried by a single weight-two ray has gap zero.
pub fn pendant_separations(sk: &Sketch) -> Result<PendantGaps, crate::error::Error> {
    if sk.chart != Chart::Z {
        return Err(crate::error::Error::Document("pendant separations are measured in the Z=0 chart".into()));
    }
    let bases = |dir: Direction| -> Result<(AffinePoint, AffinePoint), crate::error::Error> {
        let rays: Vec<&SketchRay> = sk.rays.iter().filter(|r| r.dir == dir).collect();
        let pt = |r: &SketchRay| sk.vertices[r.vertex].point.clone();
        match rays.as_slice() {
            [r] if r.weight == 2 => Ok((pt(r), pt(r))),
            [a, b] if a.weight == 1 && b.weight == 1 => {
                let (p, q) = (pt(a), pt(b));
                Ok(if p <= q { (p, q) } else { (q, p) })
            }
            _ => Err(crate::error::Error::Document(format!(
                "expected two unit rays or one double ray in direction {dir:?}"
            ))),
        }
    };
    let (ne_lo, ne_hi) = bases(NORTH_EAST)?;
    let (w_lo, w_hi) = bases(WEST)?;
    let (s_lo, s_hi) = bases(SOUTH)?;
    Ok(PendantGaps { north_east: ne_hi.sub(&ne_lo), west: (&w_hi.y - &w_lo.y).abs(), south: (&s_hi.x - &s_lo.x).abs() })
}
