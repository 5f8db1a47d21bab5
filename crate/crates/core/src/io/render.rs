//! Deterministic drawings of a sketch as SVG or ASCII.
//!
//! The picture is clipped to the vertex bounding box padded on every side by
//! `max(2, extent / 2)`, where the extent is the larger side of the box. The
//! y axis points up.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::conic::{AffinePoint, Sketch};
use crate::semiring::{rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Ascii,
}

struct Frame {
    x0: Rational,
    y0: Rational,
    x1: Rational,
    y1: Rational,
}

impl Frame {
    fn of(sk: &Sketch) -> Frame {
        let pts = sk.vertex_points();
        let min_x = pts.iter().map(|p| &p.x).min().cloned().unwrap_or_else(|| rat(0));
        let max_x = pts.iter().map(|p| &p.x).max().cloned().unwrap_or_else(|| rat(0));
        let min_y = pts.iter().map(|p| &p.y).min().cloned().unwrap_or_else(|| rat(0));
        let max_y = pts.iter().map(|p| &p.y).max().cloned().unwrap_or_else(|| rat(0));
        let extent = (&max_x - &min_x).max(&max_y - &min_y);
        let pad = (extent / rat(2)).max(rat(2));
        Frame { x0: min_x - &pad, y0: min_y - &pad, x1: max_x + &pad, y1: max_y + pad }
    }

    /// Where a ray from `p` in direction `dir` leaves the frame.
    fn ray_end(&self, p: &AffinePoint, dir: (i64, i64)) -> AffinePoint {
        let mut t: Option<Rational> = None;
        let mut limit = |bound: &Rational, from: &Rational, d: i64| {
            if d != 0 {
                let s = (bound - from) / rat(d);
                t = Some(match t.take() {
                    Some(t) if t < s => t,
                    _ => s,
                });
            }
        };
        limit(if dir.0 > 0 { &self.x1 } else { &self.x0 }, &p.x, dir.0);
        limit(if dir.1 > 0 { &self.y1 } else { &self.y0 }, &p.y, dir.1);
        let t = t.unwrap_or_else(|| rat(0));
        AffinePoint::new(&p.x + &t * rat(dir.0), &p.y + &t * rat(dir.1))
    }

    fn width(&self) -> f64 {
        f(&(&self.x1 - &self.x0))
    }

    fn height(&self) -> f64 {
        f(&(&self.y1 - &self.y0))
    }
}

fn f(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

/// Segments to draw: endpoints and weight.
fn strokes(sk: &Sketch, frame: &Frame) -> Vec<(AffinePoint, AffinePoint, u32)> {
    let mut out = Vec::new();
    for e in &sk.edges {
        out.push((sk.vertices[e.u].point.clone(), sk.vertices[e.v].point.clone(), e.weight));
    }
    for r in &sk.rays {
        let p = &sk.vertices[r.vertex].point;
        out.push((p.clone(), frame.ray_end(p, r.dir), r.weight));
    }
    out
}

fn label_for<'a>(labels: &'a [(AffinePoint, String)], p: &AffinePoint) -> Option<&'a str> {
    labels.iter().find(|(q, l)| q == p && !l.is_empty()).map(|(_, l)| l.as_str())
}

const SVG_SIZE: f64 = 400.0;
const SVG_MARGIN: f64 = 24.0;

fn svg(sk: &Sketch, labels: &[(AffinePoint, String)]) -> String {
    let frame = Frame::of(sk);
    let scale = SVG_SIZE / frame.width().max(frame.height());
    let (x0, y1) = (f(&frame.x0), f(&frame.y1));
    let px = |p: &AffinePoint| ((f(&p.x) - x0) * scale + SVG_MARGIN, (y1 - f(&p.y)) * scale + SVG_MARGIN);
    let w = frame.width() * scale + 2.0 * SVG_MARGIN;
    let h = frame.height() * scale + 2.0 * SVG_MARGIN;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#
    );
    let _ = writeln!(s, "  <title>tropical conic in {}</title>", sk.chart);
    let _ = writeln!(s, r#"  <rect width="{w:.2}" height="{h:.2}" fill="white"/>"#);
    let (bx0, by0) = px(&AffinePoint::new(frame.x0.clone(), frame.y1.clone()));
    let _ = writeln!(
        s,
        r##"  <rect x="{bx0:.2}" y="{by0:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#ccc" stroke-dasharray="4 4"/>"##,
        frame.width() * scale,
        frame.height() * scale
    );
    for (a, b, weight) in strokes(sk, &frame) {
        let ((ax, ay), (bx, by)) = (px(&a), px(&b));
        let width = if weight >= 2 { 4.5 } else { 1.5 };
        let _ = writeln!(
            s,
            r#"  <line x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}" stroke="black" stroke-width="{width}" stroke-linecap="round" data-weight="{weight}"/>"#
        );
    }
    for v in &sk.vertices {
        let (x, y) = px(&v.point);
        let _ = writeln!(s, r#"  <circle cx="{x:.2}" cy="{y:.2}" r="3.5" fill="black"/>"#);
        let text = match label_for(labels, &v.point) {
            Some(l) => format!("{l} {}", v.point),
            None => v.point.to_string(),
        };
        let _ = writeln!(
            s,
            r#"  <text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12">{}</text>"#,
            x + 6.0,
            y - 6.0,
            text
        );
    }
    s.push_str("</svg>\n");
    s
}

const ASCII_COLS: usize = 61;

/// Rows for a frame of the given size; a character cell is about twice as
/// tall as it is wide.
fn ascii_rows(w: f64, h: f64) -> usize {
    (((ASCII_COLS - 1) as f64 / 2.0 * h / w).round() as usize + 1).clamp(5, ASCII_COLS)
}

fn stroke_char(dir: (f64, f64), weight: u32) -> char {
    let (dx, dy) = dir;
    let heavy = weight >= 2;
    if dy == 0.0 {
        if heavy {
            '='
        } else {
            '-'
        }
    } else if dx == 0.0 {
        if heavy {
            'H'
        } else {
            '|'
        }
    } else if dx * dy > 0.0 {
        if heavy {
            '#'
        } else {
            '/'
        }
    } else if heavy {
        '%'
    } else {
        '\\'
    }
}

fn ascii(sk: &Sketch, labels: &[(AffinePoint, String)]) -> String {
    let frame = Frame::of(sk);
    let (x0, y1) = (f(&frame.x0), f(&frame.y1));
    let (w, h) = (frame.width(), frame.height());
    let rows = ascii_rows(w, h);
    let cell = |x: f64, y: f64| -> (usize, usize) {
        let c = ((x - x0) / w * (ASCII_COLS - 1) as f64).round() as usize;
        let r = ((y1 - y) / h * (rows - 1) as f64).round() as usize;
        (c.min(ASCII_COLS - 1), r.min(rows - 1))
    };
    let mut grid = vec![vec![' '; ASCII_COLS]; rows];
    for (a, b, weight) in strokes(sk, &frame) {
        let (ax, ay, bx, by) = (f(&a.x), f(&a.y), f(&b.x), f(&b.y));
        let ch = stroke_char((bx - ax, by - ay), weight);
        let steps = 4 * (ASCII_COLS + rows);
        for k in 0..=steps {
            let t = k as f64 / steps as f64;
            let (c, r) = cell(ax + t * (bx - ax), ay + t * (by - ay));
            grid[r][c] = ch;
        }
    }
    let mut legend = Vec::new();
    for (i, v) in sk.vertices.iter().enumerate() {
        let (c, r) = cell(f(&v.point.x), f(&v.point.y));
        grid[r][c] = 'o';
        let name = label_for(labels, &v.point).map(|l| format!(" {l}")).unwrap_or_default();
        legend.push(format!("  vertex {i}{name} at {}", v.point));
    }
    let mut s = format!("tropical conic in {}\n", sk.chart);
    for row in grid {
        s.push_str(row.iter().collect::<String>().trim_end());
        s.push('\n');
    }
    s.push_str(&format!(
        "x in [{}, {}], y in [{}, {}]; thin - | / \\, thick = H # %\n",
        frame.x0, frame.x1, frame.y0, frame.y1
    ));
    for line in legend {
        s.push_str(&line);
        s.push('\n');
    }
    s
}

/// Draws `sk`. `labels` attaches names (such as anchor names) to vertices.
pub fn render(sk: &Sketch, format: RenderFormat, labels: &[(AffinePoint, String)]) -> String {
    match format {
        RenderFormat::Svg => svg(sk, labels),
        RenderFormat::Ascii => ascii(sk, labels),
    }
}
