mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};

use common::*;

use tropical_conics::conic::{
    anchor_points, chart_project, check_balance, classify, corner_locus, invariants_of, is_shape_singular_class,
    pendant_separations, vertex_points_in, Chart, ConicTag, NORTH_EAST, SOUTH, WEST,
};
use tropical_conics::corpus::corpus;
use tropical_conics::factor::{expand, factorize, is_reducible, Factorization, LinForm};
use tropical_conics::io::{format_poly, parse_poly, tree_from_json};
use tropical_conics::quadratic::{diag_of, matrix_of, poly_of, shape, shape_plus, trop_det, Monomial, SymMatrix3};
use tropical_conics::reconstruct::recover_polynomial;
use tropical_conics::semiring::{rat, TropScalar};

const SEED: u64 = 20_240_601;
const RANDOM: usize = 500;
const PER_TAG: usize = 10;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn samples() -> Vec<SymMatrix3> {
    corpus(SEED, RANDOM, PER_TAG)
}

fn lin(x: i64, y: i64, z: i64) -> LinForm {
    LinForm::new([TropScalar::int(x), TropScalar::int(y), TropScalar::int(z)]).unwrap()
}

fn golden_factorization() -> Outcome {
    let p = parse_poly("X^2 + 12*Y^2 + Z^2 + 7*X*Y + 6*Y*Z + 1*X*Z").map_err(|e| e.to_string())?;
    let a = matrix_of(&p);
    ensure!(a == SymMatrix3::from_ints([0, 12, 0], [7, 6, 1]), "A = {a:?}");
    ensure!(diag_of(&a).t == [rat(0), rat(6), rat(0)], "D = {:?}", diag_of(&a).t);
    let s = shape(&a);
    ensure!(s == SymMatrix3::from_ints([0, 0, 0], [1, 0, 1]), "S = {s:?}");
    ensure!(shape_plus(&a) == s, "S+ differs from S");
    let class = classify(&invariants_of(&a));
    ensure!(class.tag == ConicTag::PairOfLinesTwoZeros, "class {}", class.tag);
    let Factorization::Product(f, g) = factorize(&p) else {
        return Err("not factored".into());
    };
    ensure!((f.clone(), g.clone()) == (lin(1, 6, 0), lin(-1, 6, 0)), "factors ({f}) * ({g})");
    ensure!(expand(&f, &g).unwrap() == p, "expand(f, g) differs from the input");
    // the variant with (-6)*Y in the first factor does not multiply out to p
    let printed = expand(&lin(1, -6, 0), &lin(-1, 6, 0)).unwrap();
    ensure!(printed.coeff(Monomial::YY) == &TropScalar::int(0), "variant Y^2 coefficient");
    ensure!(printed != p, "variant unexpectedly expands to the input");
    Ok(format!("({f}) * ({g}); (-6) variant has Y^2 coefficient 0, not 12"))
}

fn golden_reconstruction() -> Outcome {
    let tree = tree_from_json(
        r#"{"format": 1, "chart": "Z",
            "vertices": [{"id": "a", "x": "0", "y": "0"}, {"id": "b", "x": "4", "y": "2"}],
            "edges": [{"u": "a", "v": "b", "weight": 1}],
            "rays": [{"v": "a", "dir": [-1, 0], "weight": 2}, {"v": "a", "dir": [0, -1], "weight": 1},
                     {"v": "b", "dir": [0, -1], "weight": 1}, {"v": "b", "dir": [1, 1], "weight": 2}]}"#,
    )
    .map_err(|e| e.to_string())?;
    let a = recover_polynomial(&tree).map_err(|e| e.to_string())?;
    ensure!(a == SymMatrix3::from_ints([-4, 0, 0], [-2, 0, 0]), "recovered {a:?}");
    let p = poly_of(&a);
    ensure!(format_poly(&p) == "(-4)*X^2 + Y^2 + Z^2 + (-2)*X*Y + Y*Z + X*Z", "formatted as {}", format_poly(&p));
    let geo = corner_locus(&p, Chart::Z).map_err(|e| e.to_string())?.geometry();
    ensure!(geo.vertices == vec![pt(0, 0), pt(4, 2)], "vertices {:?}", geo.vertices);
    ensure!(geo.edges == vec![(pt(0, 0), pt(4, 2), 1)], "edges {:?}", geo.edges);
    let rays = vec![(pt(0, 0), WEST, 2), (pt(0, 0), SOUTH, 1), (pt(4, 2), SOUTH, 1), (pt(4, 2), NORTH_EAST, 2)];
    ensure!(geo.rays == rays, "rays {:?}", geo.rays);
    Ok(format_poly(&p))
}

fn oracle_equivalence() -> Outcome {
    let all = samples();
    let mut per_tag: BTreeMap<ConicTag, usize> = BTreeMap::new();
    for a in &all {
        *per_tag.entry(classify(&invariants_of(a)).tag).or_default() += 1;
        let p = poly_of(a);
        for chart in Chart::ALL {
            let oracle = corner_locus(&p, chart).map_err(|e| e.to_string())?.vertex_points();
            let closed = vertex_points_in(&p, chart);
            ensure!(closed == oracle, "{} in {chart}: {closed:?} vs {oracle:?}", format_poly(&p));
        }
    }
    for tag in ConicTag::ALL {
        let n = per_tag.get(&tag).copied().unwrap_or(0);
        ensure!(n >= 10, "{tag} sampled {n} times");
    }
    Ok(format!("{} matrices ({RANDOM} random), every class at least {PER_TAG} times, 3 charts", all.len()))
}

fn shape_and_anchor_identities() -> Outcome {
    let all = samples();
    ensure!(all.len() >= 500, "only {} cases", all.len());
    let zero = rat(0);
    for a in &all {
        ensure!(shape(&shape(a)) == shape(a), "shape not idempotent for {a:?}");

        let s = poly_of(&shape(a));
        let plus = poly_of(&shape_plus(a));
        for chart in Chart::ALL {
            let lhs = corner_locus(&s, chart).map_err(|e| e.to_string())?.geometry();
            let rhs = corner_locus(&plus, chart).map_err(|e| e.to_string())?.geometry();
            ensure!(lhs == rhs, "C(P) != C(P+) for {a:?} in {chart}");
        }

        let inv = invariants_of(a);
        let d = inv.d();
        let anchors = anchor_points(&shape_plus(a)).map_err(|e| e.to_string())?;
        let v: Vec<_> = anchors.v.iter().map(|p| chart_project(p, Chart::Z).unwrap()).collect();
        ensure!(v[1].sub(&v[0]) == (d[0].clone(), zero.clone()), "v1 - v0 for {a:?}");
        ensure!(v[2].sub(&v[0]) == (zero.clone(), d[1].clone()), "v2 - v0 for {a:?}");
        ensure!(v[3].sub(&v[0]) == (-d[2].clone(), -d[2].clone()), "v3 - v0 for {a:?}");

        ensure!(d.iter().filter(|x| **x < zero).count() <= 1, "two negative d for {a:?}");

        let off = inv.splus();
        let top = off.iter().max().unwrap();
        let rest = off.iter().fold(rat(0), |acc, x| acc + x) - top;
        let singular = trop_det(&shape_plus(a).to_full()).is_singular();
        let max_le_sum = *top <= rest;
        let d_nonneg = d.iter().all(|x| *x >= zero);
        ensure!(singular == max_le_sum && max_le_sum == d_nonneg, "singularity equivalence fails for {a:?}");
    }
    Ok(format!("{} cases: idempotence, C(P) = C(P+), anchor displacements, sign of d, singularity", all.len()))
}

fn classification_consequences() -> Outcome {
    let all = samples();
    let mut gap_checks = 0;
    for a in &all {
        let inv = invariants_of(a);
        let class = classify(&inv);
        let hits = tag_predicates(&inv);
        ensure!(hits == vec![class.tag], "dispatch {hits:?} vs {} for {a:?}", class.tag);

        let singular = trop_det(&shape_plus(a).to_full()).is_singular();
        let expected = class.tag.is_pair_of_lines() || class.tag == ConicTag::OnePointCentral;
        ensure!(singular == expected && is_shape_singular_class(&class) == singular, "singular class for {a:?}");

        let d = inv.d();
        let zero = rat(0);
        let pre = d[0] > zero && d[1] > zero && d[2] != zero && inv.splus().iter().all(|s| *s > zero);
        if pre {
            let sk = corner_locus(&poly_of(a), Chart::Z).map_err(|e| e.to_string())?;
            let gaps = pendant_separations(&sk).map_err(|e| e.to_string())?;
            ensure!(gaps.north_east == (d[0].clone(), -d[1].clone()), "NE gap {:?} for {a:?}", gaps.north_east);
            ensure!(gaps.west == rat(2) * inv.s(2, 1), "west gap for {a:?}");
            ensure!(gaps.south == rat(2) * inv.s(2, 0), "south gap for {a:?}");
            gap_checks += 1;
        }
    }
    ensure!(gap_checks > 0, "no sample met the gap preconditions");

    let bare = poly_of(&SymMatrix3::new(
        [rat(0), rat(0), rat(0)],
        [TropScalar::Bottom, TropScalar::Bottom, TropScalar::Bottom],
    ));
    ensure!(factorize(&bare) == Factorization::Irreducible, "witness factored");
    ensure!(classify(&invariants_of(&matrix_of(&bare))).tag == ConicTag::DoubleLine, "witness class");
    Ok(format!("{} cases, {gap_checks} pendant-gap checks, irreducible double-line witness X^2 + Y^2 + Z^2", all.len()))
}

fn balance() -> Outcome {
    let all = samples();
    for a in &all {
        let p = poly_of(a);
        for chart in Chart::ALL {
            let sk = corner_locus(&p, chart).map_err(|e| e.to_string())?;
            check_balance(&sk).map_err(|e| format!("{}: {e}", format_poly(&p)))?;
            ensure!(sk.ray_census() == [2, 2, 2], "census {:?} for {}", sk.ray_census(), format_poly(&p));
        }
    }
    Ok(format!("{} sketches balanced with ray weights (2,2,2)", 3 * all.len()))
}

fn factorization() -> Outcome {
    let all = samples();
    let mut products = 0;
    for a in &all {
        let p = poly_of(a);
        let reducible = is_reducible(&p);
        ensure!(reducible == reducible_by_search(a), "criterion disagrees with search for {}", format_poly(&p));
        match factorize(&p) {
            Factorization::Product(f, g) => {
                ensure!(reducible, "factored an irreducible {}", format_poly(&p));
                ensure!(expand(&f, &g).unwrap() == p, "expand check fails for {}", format_poly(&p));
                ensure!(classify(&invariants_of(a)).tag.is_pair_of_lines(), "reducible but not lines");
                products += 1;
            }
            Factorization::Irreducible => ensure!(!reducible, "missed factorization of {}", format_poly(&p)),
        }
    }
    ensure!(products > 0, "no reducible sample");
    Ok(format!("{} cases, {products} factored and verified", all.len()))
}

fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_tropconic");
    let out = Command::new(bin).args(["check", "--seed", "7", "--count", "100"]).output().map_err(|e| e.to_string())?;
    ensure!(
        out.status.success(),
        "check exited with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stdout)
    );

    for a in samples() {
        let text = format_poly(&poly_of(&a));
        let again = format_poly(&parse_poly(&text).map_err(|e| e.to_string())?);
        ensure!(again == text, "{text} reformatted as {again}");
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut docs = Vec::new();
    for name in ["one.svg", "two.svg"] {
        let path = dir.path().join(name);
        let status = Command::new(bin)
            .args(["sketch", "(-4)*X^2 + Y^2 + Z^2 + (-2)*X*Y + Y*Z + X*Z", "--svg"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?
            .status;
        ensure!(status.success(), "sketch failed");
        docs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure!(docs[0] == docs[1], "SVG output differs between runs");
    Ok("check exits 0, formatting is byte-stable, SVG is byte-identical".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden factorization pipeline", golden_factorization),
        ("golden tree reconstruction", golden_reconstruction),
        ("closed-form vertices equal the corner locus", oracle_equivalence),
        ("shape and anchor identities", shape_and_anchor_identities),
        ("classification and consequences", classification_consequences),
        ("balance and ray census", balance),
        ("factorization soundness and completeness", factorization),
        ("command-line contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
