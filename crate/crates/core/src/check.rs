//! Cross-checks of the closed-form procedures against the corner-locus
//! oracle for a single polynomial.

use std::fmt;

use crate::conic::{classify, corner_locus, invariants_of, vertex_points_in, Chart};
use crate::error::Result;
use crate::factor::{expand, factorize, is_reducible, Factorization};
use crate::quadratic::{matrix_of, QuadPoly};
use crate::reconstruct::{expected_census, recover_invariants, recover_polynomial, tree_of_sketch};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    fn push(&mut self, name: &'static str, ok: bool, detail: impl Into<String>) {
        self.items.push(CheckItem { name, ok, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.ok)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            let mark = if item.ok { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {}: {}", item.name, item.detail)?;
        }
        Ok(())
    }
}

/// Runs every comparison. Errors from the oracle itself are returned as
/// errors, not as failed items.
pub fn check_poly(p: &QuadPoly) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let a = matrix_of(p);
    let inv = invariants_of(&a);
    let class = classify(&inv);

    for chart in Chart::ALL {
        let sk = corner_locus(p, chart)?;
        let closed = vertex_points_in(p, chart);
        let oracle = sk.vertex_points();
        report.push(
            "vertices",
            closed == oracle,
            format!("{} closed-form vs {} oracle vertices in {chart}", closed.len(), oracle.len()),
        );
        let census = sk.ray_census();
        report.push("ray census", census == [2, 2, 2], format!("W/S/NE weights {census:?} in {chart}"));
    }

    let sk = corner_locus(p, Chart::Z)?;
    let doubles = sk.rays.iter().filter(|r| r.weight == 2).count();
    let expected = expected_census(class.tag);
    report.push(
        "class geometry",
        (sk.vertices.len(), doubles) == expected,
        format!("{} with {} vertices and {} double rays", class.tag, sk.vertices.len(), doubles),
    );

    let reducible = is_reducible(p);
    match factorize(p) {
        Factorization::Product(f, g) => {
            let sound = reducible && expand(&f, &g)? == *p && class.tag.is_pair_of_lines();
            report.push("factorization", sound, format!("({f}) * ({g})"));
        }
        Factorization::Irreducible => report.push("factorization", !reducible, "irreducible"),
    }

    let tree = tree_of_sketch(&sk);
    let (rec_inv, rec_class) = recover_invariants(&tree)?;
    report.push("reconstruction", rec_inv == inv && rec_class == class, format!("recovered {rec_inv}"));
    let rebuilt = recover_polynomial(&tree)?;
    let same = corner_locus(&crate::quadratic::poly_of(&rebuilt), Chart::Z)?.geometry() == sk.geometry();
    report.push("round trip", same, "reconstructed polynomial reproduces the curve");
    Ok(report)
}
