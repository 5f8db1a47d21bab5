//! Corner locus by exhaustive tie enumeration.
//!
//! This is the definition of the curve taken literally: a point lies on the
//! conic when the maximum of the six affine monomial functions is attained at
//! least twice. Vertices come from the 2×2 linear systems of every triple of
//! monomials with non-collinear exponents, and edges from clipping every
//! pairwise tie line against the remaining monomials. Nothing here uses the
//! shape matrix or the classification, so it serves as an oracle for the
//! closed-form vertex formulas.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::chart::{AffinePoint, Chart};
use super::sketch::{check_balance, primitive_direction, Sketch, SketchEdge, SketchRay, SketchVertex};
use crate::error::{Error, Result};
use crate::quadratic::{eval, MonoSet, Monomial, QuadPoly};
use crate::semiring::{rat, Rational};

/// An affine monomial function `c + ex·x + ey·y` in chart coordinates.
struct Term {
    mono: Monomial,
    c: Rational,
    e: (i64, i64),
}

impl Term {
    fn at(&self, p: &AffinePoint) -> Rational {
        &self.c + &p.x * rat(self.e.0) + &p.y * rat(self.e.1)
    }
}

fn terms(p: &QuadPoly, chart: Chart) -> Vec<Term> {
    let [u, v, _] = chart.frame();
    Monomial::ALL
        .into_iter()
        .filter_map(|m| {
            let c = p.coeff(m).as_finite()?.clone();
            let e = m.exponent();
            Some(Term { mono: m, c, e: (e[u], e[v]) })
        })
        .collect()
}

fn cross(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn sub(a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
    (a.0 - b.0, a.1 - b.1)
}

/// Solves `f_a = f_b = f_c`; `None` when the exponents are collinear.
fn triple_tie(a: &Term, b: &Term, c: &Term) -> Option<AffinePoint> {
    // (e_a - e_b)·p = c_b - c_a and (e_a - e_c)·p = c_c - c_a
    let n1 = sub(a.e, b.e);
    let n2 = sub(a.e, c.e);
    let det = cross(n1, n2);
    if det == 0 {
        return None;
    }
    let r1 = &b.c - &a.c;
    let r2 = &c.c - &a.c;
    let det = rat(det);
    let x = (&r1 * rat(n2.1) - &r2 * rat(n1.1)) / &det;
    let y = (&r2 * rat(n1.0) - &r1 * rat(n2.0)) / &det;
    Some(AffinePoint::new(x, y))
}

/// A one-dimensional cell: the part of a tie line where its monomials win.
struct Cell {
    maximizers: MonoSet,
    lo: Option<AffinePoint>,
    hi: Option<AffinePoint>,
    /// Primitive direction from `lo` towards `hi`.
    dir: (i64, i64),
}

fn tie_cell(a: &Term, b: &Term, all: &[Term]) -> Option<Cell> {
    let n = sub(a.e, b.e);
    let g = num_integer::gcd(n.0, n.1);
    let dir = (-n.1 / g, n.0 / g);
    // base point on n·p = c_b - c_a
    let rhs = &b.c - &a.c;
    let p0 = if n.0 != 0 {
        AffinePoint::new(&rhs / rat(n.0), Rational::zero())
    } else {
        AffinePoint::new(Rational::zero(), &rhs / rat(n.1))
    };
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    let mut maximizers: MonoSet = [a.mono, b.mono].into_iter().collect();
    let base = a.at(&p0);
    for t in all {
        if t.mono == a.mono || t.mono == b.mono {
            continue;
        }
        // f_t - f_a along p0 + s·dir is k + m·s, and must stay <= 0
        let k = t.at(&p0) - &base;
        let de = sub(t.e, a.e);
        let m = de.0 * dir.0 + de.1 * dir.1;
        if m == 0 {
            if k.is_zero() {
                maximizers.insert(t.mono);
            } else if k > Rational::zero() {
                return None;
            }
            continue;
        }
        let bound = -k / rat(m);
        if m > 0 {
            hi = Some(match hi {
                Some(h) if h < bound => h,
                _ => bound,
            });
        } else {
            lo = Some(match lo {
                Some(l) if l > bound => l,
                _ => bound,
            });
        }
    }
    if let (Some(l), Some(h)) = (&lo, &hi) {
        if l >= h {
            return None;
        }
    }
    let at = |s: &Rational| AffinePoint::new(&p0.x + s * rat(dir.0), &p0.y + s * rat(dir.1));
    Some(Cell { maximizers, lo: lo.as_ref().map(at), hi: hi.as_ref().map(at), dir })
}

/// The conic `C(p)` in the given chart, as a weighted tree.
///
/// Fails with [`Error::Internal`] if the enumerated cells do not assemble into
/// a balanced tree; for a degree-two polynomial that would be a bug here.
pub fn corner_locus(p: &QuadPoly, chart: Chart) -> Result<Sketch> {
    let all = terms(p, chart);
    let mut found: BTreeMap<AffinePoint, MonoSet> = BTreeMap::new();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            for k in j + 1..all.len() {
                let Some(pt) = triple_tie(&all[i], &all[j], &all[k]) else { continue };
                if found.contains_key(&pt) {
                    continue;
                }
                let e = eval(p, &pt, chart);
                if e.value == all[i].at(&pt) {
                    found.insert(pt, e.maximizers);
                }
            }
        }
    }
    let vertices: Vec<SketchVertex> =
        found.into_iter().map(|(point, maximizers)| SketchVertex { point, maximizers }).collect();
    let index_of = |pt: &AffinePoint| -> Result<usize> {
        vertices
            .iter()
            .position(|v| v.point == *pt)
            .ok_or_else(|| Error::Internal(format!("cell endpoint {pt} is not a vertex")))
    };

    let mut cells: BTreeMap<MonoSet, Cell> = BTreeMap::new();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if let Some(cell) = tie_cell(&all[i], &all[j], &all) {
                cells.entry(cell.maximizers).or_insert(cell);
            }
        }
    }

    let mut edges = Vec::new();
    let mut rays = Vec::new();
    for cell in cells.values() {
        let weight = cell.maximizers.lattice_length();
        match (&cell.lo, &cell.hi) {
            (Some(a), Some(b)) => edges.push(SketchEdge { u: index_of(a)?, v: index_of(b)?, weight }),
            (Some(a), None) => rays.push(SketchRay { vertex: index_of(a)?, dir: cell.dir, weight }),
            (None, Some(b)) => rays.push(SketchRay { vertex: index_of(b)?, dir: (-cell.dir.0, -cell.dir.1), weight }),
            (None, None) => return Err(Error::Internal(format!("tie {} is a full line", cell.maximizers))),
        }
    }

    let sketch = Sketch { chart, vertices, edges, rays }.canonicalize();
    check_tree(&sketch)?;
    check_balance(&sketch).map_err(|v| Error::Internal(v.to_string()))?;
    Ok(sketch)
}

fn check_tree(sk: &Sketch) -> Result<()> {
    let n = sk.vertices.len();
    if n == 0 {
        return Err(Error::Internal("curve has no vertex".into()));
    }
    if sk.edges.len() + 1 != n {
        return Err(Error::Internal(format!("{} vertices but {} bounded edges", n, sk.edges.len())));
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for e in &sk.edges {
        let (a, b) = (root(&mut parent, e.u), root(&mut parent, e.v));
        if a == b {
            return Err(Error::Internal("bounded edges contain a cycle".into()));
        }
        parent[a] = b;
    }
    for v in &sk.vertices {
        if !v.maximizers.is_vertex_type() {
            return Err(Error::Internal(format!("vertex {} has collinear maximizers", v.point)));
        }
    }
    let dirs = sk.edges.iter().all(|e| {
        let (dx, dy) = sk.vertices[e.v].point.sub(&sk.vertices[e.u].point);
        primitive_direction(&dx, &dy).is_some()
    });
    if !dirs {
        return Err(Error::Internal("zero-length edge".into()));
    }
    Ok(())
}
