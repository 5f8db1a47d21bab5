//! JSON documents. Every document carries `"format": 1`; scalars are strings
//! in the textual scalar syntax (`"7"`, `"3/2"`, `"-inf"`).

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::conic::{AffinePoint, Chart, ConicClass, Invariants, Sketch, Vertex};
use crate::error::{Error, Result};
use crate::factor::LinForm;
use crate::quadratic::{SymMatrix3, TropDet};
use crate::reconstruct::{TreeEdge, TreeRay, TreeRejection, TreeSpec, TreeVertex};
use crate::semiring::{Rational, TropScalar};

pub const FORMAT: u32 = 1;

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

/// Scalars may be written as strings or, for convenience, JSON integers.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum ScalarText {
    Text(String),
    Int(i64),
}

impl ScalarText {
    fn scalar(&self) -> Result<TropScalar> {
        match self {
            ScalarText::Text(s) => Ok(s.parse()?),
            ScalarText::Int(n) => Ok(TropScalar::int(*n)),
        }
    }

    fn finite(&self, what: &str) -> Result<Rational> {
        self.scalar()?.as_finite().cloned().ok_or_else(|| doc_err(format!("{what} must be finite")))
    }
}

fn check_format(format: Option<u32>) -> Result<()> {
    match format {
        None | Some(FORMAT) => Ok(()),
        Some(v) => Err(doc_err(format!("unsupported format version {v}"))),
    }
}

fn s(x: &TropScalar) -> String {
    x.to_string()
}

fn r(x: &Rational) -> String {
    x.to_string()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    format: Option<u32>,
    a11: ScalarText,
    a22: ScalarText,
    a33: ScalarText,
    a21: Option<ScalarText>,
    a32: Option<ScalarText>,
    a31: Option<ScalarText>,
}

impl MatrixDoc {
    fn into_matrix(self) -> Result<SymMatrix3> {
        check_format(self.format)?;
        let diag = [self.a11.finite("a11")?, self.a22.finite("a22")?, self.a33.finite("a33")?];
        let off = |x: Option<ScalarText>| x.map_or(Ok(TropScalar::Bottom), |t| t.scalar());
        Ok(SymMatrix3::new(diag, [off(self.a21)?, off(self.a32)?, off(self.a31)?]))
    }
}

/// Reads a symmetric coefficient matrix. Missing off-diagonal keys are `-inf`.
pub fn matrix_from_json(text: &str) -> Result<SymMatrix3> {
    serde_json::from_str::<MatrixDoc>(text)?.into_matrix()
}

pub fn matrix_to_json(a: &SymMatrix3) -> Value {
    json!({
        "format": FORMAT,
        "a11": r(&a.diag()[0]),
        "a22": r(&a.diag()[1]),
        "a33": r(&a.diag()[2]),
        "a21": s(&a.off()[0]),
        "a32": s(&a.off()[1]),
        "a31": s(&a.off()[2]),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RowsDoc {
    format: Option<u32>,
    rows: Vec<Vec<ScalarText>>,
}

/// Reads a general 3×3 matrix, either `{"rows": [[..],[..],[..]]}` or the
/// symmetric `a11…a31` form.
pub fn general_matrix_from_json(text: &str) -> Result<[[TropScalar; 3]; 3]> {
    let v: Value = serde_json::from_str(text)?;
    if v.get("rows").is_none() {
        return Ok(serde_json::from_value::<MatrixDoc>(v)?.into_matrix()?.to_full());
    }
    let doc: RowsDoc = serde_json::from_value(v)?;
    check_format(doc.format)?;
    if doc.rows.len() != 3 || doc.rows.iter().any(|row| row.len() != 3) {
        return Err(doc_err("`rows` must be a 3×3 array"));
    }
    let mut m = [(); 3].map(|_| [(); 3].map(|_| TropScalar::Bottom));
    for (i, row) in doc.rows.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            m[i][j] = x.scalar()?;
        }
    }
    Ok(m)
}

pub fn det_to_json(d: &TropDet) -> Value {
    json!({
        "format": FORMAT,
        "value": s(&d.value),
        "attained": d.attained,
        "singular": d.is_singular(),
    })
}

pub fn linform_to_json(f: &LinForm) -> Value {
    let [x, y, z] = f.coeffs();
    json!({ "format": FORMAT, "x": s(x), "y": s(y), "z": s(z) })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LinFormDoc {
    format: Option<u32>,
    x: ScalarText,
    y: ScalarText,
    z: ScalarText,
}

pub fn linform_from_json(text: &str) -> Result<LinForm> {
    let doc: LinFormDoc = serde_json::from_str(text)?;
    check_format(doc.format)?;
    LinForm::new([doc.x.scalar()?, doc.y.scalar()?, doc.z.scalar()?])
}

#[derive(Serialize)]
struct SketchDoc {
    format: u32,
    chart: &'static str,
    vertices: Vec<SketchVertexDoc>,
    edges: Vec<EdgeDoc>,
    rays: Vec<RayDoc>,
}

#[derive(Serialize)]
struct SketchVertexDoc {
    x: String,
    y: String,
    maximizers: Vec<&'static str>,
}

#[derive(Serialize)]
struct EdgeDoc {
    u: usize,
    v: usize,
    weight: u32,
}

#[derive(Serialize)]
struct RayDoc {
    v: usize,
    dir: [i64; 2],
    weight: u32,
}

pub fn sketch_to_json(sk: &Sketch) -> Value {
    let doc = SketchDoc {
        format: FORMAT,
        chart: sk.chart.name(),
        vertices: sk
            .vertices
            .iter()
            .map(|v| SketchVertexDoc {
                x: r(&v.point.x),
                y: r(&v.point.y),
                maximizers: v.maximizers.iter().map(|m| m.name()).collect(),
            })
            .collect(),
        edges: sk.edges.iter().map(|e| EdgeDoc { u: e.u, v: e.v, weight: e.weight }).collect(),
        rays: sk
            .rays
            .iter()
            .map(|ray| RayDoc { v: ray.vertex, dir: [ray.dir.0, ray.dir.1], weight: ray.weight })
            .collect(),
    };
    serde_json::to_value(doc).expect("sketch serializes")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeDoc {
    format: Option<u32>,
    chart: Option<String>,
    vertices: Vec<TreeVertexDoc>,
    #[serde(default)]
    edges: Vec<TreeLinkDoc>,
    rays: Vec<TreeRayDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeVertexDoc {
    id: Value,
    x: ScalarText,
    y: ScalarText,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeLinkDoc {
    u: Value,
    v: Value,
    weight: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeRayDoc {
    v: Value,
    dir: [i64; 2],
    weight: u32,
}

fn id_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(doc_err(format!("vertex id must be a string or number, got {other}"))),
    }
}

/// Reads a weighted tree. Vertex ids may be strings or numbers; edges and
/// rays refer to them by id.
pub fn tree_from_json(text: &str) -> Result<TreeSpec> {
    let doc: TreeDoc = serde_json::from_str(text)?;
    check_format(doc.format)?;
    let chart = match &doc.chart {
        None => Chart::Z,
        Some(name) => Chart::from_name(name).ok_or_else(|| doc_err(format!("unknown chart `{name}`")))?,
    };
    let mut vertices = Vec::new();
    for v in &doc.vertices {
        let id = id_text(&v.id)?;
        if vertices.iter().any(|w: &TreeVertex| w.id == id) {
            return Err(TreeRejection::DuplicateVertex(id).into());
        }
        vertices.push(TreeVertex { id, point: AffinePoint::new(v.x.finite("x")?, v.y.finite("y")?) });
    }
    let index = |v: &Value| -> Result<usize> {
        let id = id_text(v)?;
        vertices.iter().position(|w| w.id == id).ok_or_else(|| TreeRejection::UnknownVertex(id).into())
    };
    let mut edges = Vec::new();
    for e in &doc.edges {
        let (u, v) = (index(&e.u)?, index(&e.v)?);
        edges.push(TreeEdge { u: u.min(v), v: u.max(v), weight: e.weight });
    }
    let mut rays = Vec::new();
    for ray in &doc.rays {
        rays.push(TreeRay { vertex: index(&ray.v)?, dir: (ray.dir[0], ray.dir[1]), weight: ray.weight });
    }
    Ok(TreeSpec { chart, vertices, edges, rays })
}

pub fn tree_to_json(t: &TreeSpec) -> Value {
    json!({
        "format": FORMAT,
        "chart": t.chart.name(),
        "vertices": t.vertices.iter().map(|v| json!({"id": v.id, "x": r(&v.point.x), "y": r(&v.point.y)})).collect::<Vec<_>>(),
        "edges": t.edges.iter().map(|e| json!({"u": t.vertices[e.u].id, "v": t.vertices[e.v].id, "weight": e.weight})).collect::<Vec<_>>(),
        "rays": t.rays.iter().map(|ray| json!({"v": t.vertices[ray.vertex].id, "dir": [ray.dir.0, ray.dir.1], "weight": ray.weight})).collect::<Vec<_>>(),
    })
}

pub fn invariants_to_json(inv: &Invariants) -> Value {
    let [s21, s32, s31] = inv.splus();
    json!({
        "splus": {"s21": r(s21), "s32": r(s32), "s31": r(s31)},
        "d": inv.d().iter().map(r).collect::<Vec<_>>(),
    })
}

/// The report printed by `classify`.
pub fn classification_to_json(
    inv: &Invariants,
    class: &ConicClass,
    vertices: &[Vertex],
    labels: &[String],
    reducible: bool,
) -> Value {
    let mut doc = invariants_to_json(inv);
    doc["format"] = json!(FORMAT);
    doc["class"] = json!(class.tag.name());
    doc["perm"] = json!(class.perm.map(|i| i + 1));
    doc["reducible"] = json!(reducible);
    doc["vertices"] = vertices
        .iter()
        .zip(labels)
        .map(|(v, label)| {
            json!({
                "x": r(&v.point.x),
                "y": r(&v.point.y),
                "anchors": label,
                "maximizers": v.maximizers.iter().map(|m| m.name()).collect::<Vec<_>>(),
            })
        })
        .collect();
    doc
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value serializes");
    s.push('\n');
    s
}
