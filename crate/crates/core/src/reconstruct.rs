//! From a balanced weighted tree back to a defining polynomial.
//!
//! In the `Z` chart the conic of `shape(A)⁺` has its two west rays at heights
//! `±s32`, its two south rays at abscissae `±s31`, and its two north-east
//! rays on the lines `x − y = ±s21`. This holds for every class (a double ray
//! is the case where the pair coincides), so the ray positions of a tree give
//! both `s⁺` and the translation. The tree's vertex count and double-ray count
//! must then agree with the class those invariants produce, and the
//! reconstructed polynomial must reproduce the tree exactly.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::conic::{
    check_balance, classify, corner_locus, AffinePoint, Chart, ConicClass, ConicTag, Invariants, Sketch, SketchEdge,
    SketchRay, SketchVertex, NORTH_EAST, PENDANT_DIRECTIONS, SOUTH, WEST,
};
use crate::error::Result;
use crate::quadratic::{poly_of, MonoSet, SymMatrix3, OFF_DIAGONAL};
use crate::semiring::{rat, Rational, TropScalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeVertex {
    pub id: String,
    pub point: AffinePoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub u: usize,
    pub v: usize,
    pub weight: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeRay {
    pub vertex: usize,
    pub dir: (i64, i64),
    pub weight: u32,
}

/// A user-supplied weighted tree in one affine chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSpec {
    pub chart: Chart,
    pub vertices: Vec<TreeVertex>,
    pub edges: Vec<TreeEdge>,
    pub rays: Vec<TreeRay>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TreeRejection {
    #[error("a conic has between 1 and 4 vertices, got {0}")]
    VertexCount(usize),
    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("vertices `{0}` and `{1}` coincide")]
    CoincidentVertices(String, String),
    #[error("edge weight {0} is not 1 or 2")]
    BadWeight(u32),
    #[error("edge `{0}`-`{1}` has zero length")]
    ZeroLengthEdge(String, String),
    #[error("bounded edges contain a cycle")]
    Cycle,
    #[error("tree is not connected")]
    Disconnected,
    #[error("ray at `{vertex}` has direction {dir:?}, expected (-1,0), (0,-1) or (1,1)")]
    RayDirection { vertex: String, dir: (i64, i64) },
    #[error("ray weights per direction (W, S, NE) are {0:?}, expected [2, 2, 2]")]
    RayCensus([u32; 3]),
    #[error("vertex `{vertex}` is unbalanced: weighted sum {sum}")]
    Unbalanced { vertex: String, sum: String },
    #[error("ray positions match no conic: {0}")]
    NoMatchingClass(String),
    #[error("reconstructed polynomial does not reproduce the tree")]
    RoundTrip,
}

impl TreeSpec {
    /// The tree as a [`Sketch`] with empty maximizer sets.
    pub fn to_sketch(&self) -> Sketch {
        Sketch {
            chart: self.chart,
            vertices: self
                .vertices
                .iter()
                .map(|v| SketchVertex { point: v.point.clone(), maximizers: MonoSet::empty() })
                .collect(),
            edges: self.edges.iter().map(|e| SketchEdge { u: e.u, v: e.v, weight: e.weight }).collect(),
            rays: self.rays.iter().map(|r| SketchRay { vertex: r.vertex, dir: r.dir, weight: r.weight }).collect(),
        }
    }

    fn id(&self, i: usize) -> String {
        self.vertices[i].id.clone()
    }
}

/// Structural checks: vertex count, weights, tree shape, pendant rays and
/// balance.
pub fn validate_tree(t: &TreeSpec) -> Result<(), TreeRejection> {
    let n = t.vertices.len();
    if !(1..=4).contains(&n) {
        return Err(TreeRejection::VertexCount(n));
    }
    let mut ids = BTreeSet::new();
    for v in &t.vertices {
        if !ids.insert(v.id.as_str()) {
            return Err(TreeRejection::DuplicateVertex(v.id.clone()));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if t.vertices[i].point == t.vertices[j].point {
                return Err(TreeRejection::CoincidentVertices(t.id(i), t.id(j)));
            }
        }
    }
    for w in t.edges.iter().map(|e| e.weight).chain(t.rays.iter().map(|r| r.weight)) {
        if !(1..=2).contains(&w) {
            return Err(TreeRejection::BadWeight(w));
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for e in &t.edges {
        if e.u == e.v {
            return Err(TreeRejection::ZeroLengthEdge(t.id(e.u), t.id(e.v)));
        }
        let (a, b) = (root(&mut parent, e.u), root(&mut parent, e.v));
        if a == b {
            return Err(TreeRejection::Cycle);
        }
        parent[a] = b;
    }
    let r0 = root(&mut parent, 0);
    if (1..n).any(|i| root(&mut parent, i) != r0) {
        return Err(TreeRejection::Disconnected);
    }
    for r in &t.rays {
        if !PENDANT_DIRECTIONS.contains(&r.dir) {
            return Err(TreeRejection::RayDirection { vertex: t.id(r.vertex), dir: r.dir });
        }
    }
    let sketch = t.to_sketch();
    let census = sketch.ray_census();
    if census != [2, 2, 2] {
        return Err(TreeRejection::RayCensus(census));
    }
    check_balance(&sketch).map_err(|v| TreeRejection::Unbalanced {
        vertex: t.id(v.vertex),
        sum: match v.sum {
            Some((x, y)) => format!("({x}, {y})"),
            None => "undefined".into(),
        },
    })?;
    Ok(())
}

/// Vertex count and number of double rays, per class.
pub fn expected_census(tag: ConicTag) -> (usize, usize) {
    match tag {
        ConicTag::OnePointCentral | ConicTag::TwoPointCentral => (4, 0),
        ConicTag::Degenerate1 => (3, 1),
        ConicTag::Degenerate2 => (2, 2),
        ConicTag::DoubleLine => (1, 3),
        ConicTag::PairOfLinesOneZero => (3, 0),
        ConicTag::PairOfLinesTwoZeros => (2, 1),
    }
}

/// What the pendant rays say, in the tree's own chart coordinates.
struct RayReading {
    /// `[s21, s32, s31]` for the polynomial read in the chart frame.
    splus: [Rational; 3],
    translation: (Rational, Rational),
}

fn read_rays(t: &TreeSpec) -> Result<RayReading, TreeRejection> {
    // Two positions per direction; a double ray contributes its base twice.
    let positions = |dir: (i64, i64), coord: &dyn Fn(&AffinePoint) -> Rational| -> (Rational, Rational) {
        let mut vals = Vec::new();
        for r in t.rays.iter().filter(|r| r.dir == dir) {
            for _ in 0..r.weight {
                vals.push(coord(&t.vertices[r.vertex].point));
            }
        }
        vals.sort();
        (vals[0].clone(), vals[1].clone())
    };
    let two = rat(2);
    let (w_lo, w_hi) = positions(WEST, &|p| p.y.clone());
    let (s_lo, s_hi) = positions(SOUTH, &|p| p.x.clone());
    let (ne_lo, ne_hi) = positions(NORTH_EAST, &|p| &p.x - &p.y);
    let s32 = (&w_hi - &w_lo) / &two;
    let s31 = (&s_hi - &s_lo) / &two;
    let s21 = (&ne_hi - &ne_lo) / &two;
    let tx = (&s_hi + &s_lo) / &two;
    let ty = (&w_hi + &w_lo) / &two;
    let ne_mid = (&ne_hi + &ne_lo) / &two;
    if ne_mid != &tx - &ty {
        return Err(TreeRejection::NoMatchingClass(format!(
            "north-east rays are centred on x - y = {ne_mid}, expected {}",
            &tx - &ty
        )));
    }
    Ok(RayReading { splus: [s21, s32, s31], translation: (tx, ty) })
}

fn check_census(t: &TreeSpec, class: &ConicClass) -> Result<(), TreeRejection> {
    let doubles = t.rays.iter().filter(|r| r.weight == 2).count();
    let found = (t.vertices.len(), doubles);
    let expected = expected_census(class.tag);
    if found != expected {
        return Err(TreeRejection::NoMatchingClass(format!(
            "{} vertices and {} double rays, but the ray positions give a {} conic ({} and {})",
            found.0, found.1, class.tag, expected.0, expected.1
        )));
    }
    Ok(())
}

/// Reads `s⁺` and the class of the conic drawn by `t`.
pub fn recover_invariants(t: &TreeSpec) -> Result<(Invariants, ConicClass)> {
    validate_tree(t)?;
    let reading = read_rays(t)?;
    let local = Invariants::from_splus(reading.splus)?;
    check_census(t, &classify(&local))?;
    let inv = local.permuted(t.chart.frame());
    let class = classify(&inv);
    Ok((inv, class))
}

/// A defining polynomial for the tree, with `s_ij = s⁺_ij` and the chart's
/// normalized diagonal coefficient set to zero.
pub fn recover_polynomial(t: &TreeSpec) -> Result<SymMatrix3> {
    validate_tree(t)?;
    let reading = read_rays(t)?;
    let local = Invariants::from_splus(reading.splus.clone())?;
    check_census(t, &classify(&local))?;

    let (tx, ty) = reading.translation;
    let two = rat(2);
    let diag = [-(&two * &tx), -(&two * &ty), Rational::zero()];
    let off = [0, 1, 2].map(|k| {
        let (i, j) = OFF_DIAGONAL[k];
        TropScalar::Finite(&reading.splus[k] + (&diag[i] + &diag[j]) / &two)
    });
    let a = SymMatrix3::new(diag, off).permuted(t.chart.frame());

    let rebuilt = corner_locus(&poly_of(&a), t.chart)?;
    if rebuilt.geometry() != t.to_sketch().geometry() {
        return Err(TreeRejection::RoundTrip.into());
    }
    Ok(a)
}

/// Converts a sketch (for example the output of [`corner_locus`]) into a
/// tree, naming vertices by index.
pub fn tree_of_sketch(sk: &Sketch) -> TreeSpec {
    TreeSpec {
        chart: sk.chart,
        vertices: sk
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| TreeVertex { id: i.to_string(), point: v.point.clone() })
            .collect(),
        edges: sk.edges.iter().map(|e| TreeEdge { u: e.u, v: e.v, weight: e.weight }).collect(),
        rays: sk.rays.iter().map(|r| TreeRay { vertex: r.vertex, dir: r.dir, weight: r.weight }).collect(),
    }
}

impl fmt::Display for TreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tree in {} with {} vertices", self.chart, self.vertices.len())
    }
}
