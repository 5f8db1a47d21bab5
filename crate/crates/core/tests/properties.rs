mod common;

use common::*;
use proptest::prelude::*;

use tropical_conics::conic::{
    anchor_points, chart_project, classify, corner_locus, invariants_of, is_pair_of_lines, is_shape_singular_class,
    vertex_points_in, Chart, ConicTag, Invariants,
};
use tropical_conics::factor::{expand, factorize, is_reducible, Factorization};
use tropical_conics::io::{format_poly, parse_poly};
use tropical_conics::quadratic::{eval, matrix_of, poly_of, shape, shape_plus, trop_det, SymMatrix3};
use tropical_conics::reconstruct::{recover_invariants, recover_polynomial, tree_of_sketch};
use tropical_conics::semiring::{rat, Rational, TropScalar};

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(300)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn closed_form_vertices_match_oracle(p in poly()) {
        for chart in Chart::ALL {
            let sk = corner_locus(&p, chart).unwrap();
            prop_assert_eq!(vertex_points_in(&p, chart), sk.vertex_points(), "chart {}", chart);
        }
    }

    #[test]
    fn every_sketch_is_balanced_with_two_rays_per_direction(p in poly()) {
        for chart in Chart::ALL {
            let sk = corner_locus(&p, chart).unwrap();
            prop_assert!(tropical_conics::conic::check_balance(&sk).is_ok());
            prop_assert_eq!(sk.ray_census(), [2, 2, 2]);
        }
    }

    #[test]
    fn shape_is_idempotent(a in matrix()) {
        prop_assert_eq!(shape(&shape(&a)), shape(&a));
    }

    #[test]
    fn shape_ignores_constant_shift(a in matrix(), alpha in rational()) {
        let shift = TropScalar::Finite(alpha.clone());
        let diag = a.diag().clone().map(|x| x + &alpha);
        let b = SymMatrix3::new(diag, a.off().clone().map(|x| x.odot(&shift)));
        prop_assert_eq!(shape(&b), shape(&a));
    }

    #[test]
    fn matrix_and_shape_are_singular_together(a in matrix()) {
        prop_assert_eq!(trop_det(&a.to_full()).is_singular(), trop_det(&shape(&a).to_full()).is_singular());
    }

    #[test]
    fn determinant_of_shape_matches_closed_formula(a in matrix()) {
        let s = shape_plus(&a);
        let [s21, s32, s31] = s.nonneg_off().unwrap();
        let total = &s21 + &s32 + &s31;
        let two = rat(2);
        let formula = [rat(0), total, &two * &s21, &two * &s32, &two * &s31].into_iter().max().unwrap();
        prop_assert_eq!(trop_det(&s.to_full()).value, TropScalar::Finite(formula));
    }

    #[test]
    fn curve_only_sees_nonnegative_shape(a in matrix()) {
        let p = poly_of(&shape(&a));
        let plus = poly_of(&shape_plus(&a));
        for chart in Chart::ALL {
            prop_assert_eq!(corner_locus(&p, chart).unwrap().geometry(), corner_locus(&plus, chart).unwrap().geometry());
        }
    }

    #[test]
    fn anchor_displacements_follow_d(a in matrix()) {
        let s = shape_plus(&a);
        let inv = invariants_of(&a);
        let anchors = anchor_points(&s).unwrap();
        let v: Vec<_> = anchors.v.iter().map(|p| chart_project(p, Chart::Z).unwrap()).collect();
        let d = inv.d();
        let zero = rat(0);
        prop_assert_eq!(v[1].sub(&v[0]), (d[0].clone(), zero.clone()));
        prop_assert_eq!(v[2].sub(&v[0]), (zero, d[1].clone()));
        prop_assert_eq!(v[3].sub(&v[0]), (-d[2].clone(), -d[2].clone()));
    }

    #[test]
    fn at_most_one_negative_d(a in matrix()) {
        let inv = invariants_of(&a);
        prop_assert!(inv.d().iter().filter(|x| **x < rat(0)).count() <= 1);
    }

    #[test]
    fn singularity_equivalences(a in matrix()) {
        let s = shape_plus(&a);
        let off = s.nonneg_off().unwrap();
        let top = off.iter().max().unwrap().clone();
        let sum: Rational = off.iter().cloned().sum();
        let max_le_sum = top <= sum - &top;
        let d_nonneg = invariants_of(&a).d().iter().all(|x| *x >= rat(0));
        let singular = trop_det(&s.to_full()).is_singular();
        prop_assert_eq!(singular, max_le_sum);
        prop_assert_eq!(singular, d_nonneg);
    }

    #[test]
    fn dispatch_is_total_and_exclusive(a in matrix()) {
        let inv = invariants_of(&a);
        prop_assert_eq!(tag_predicates(&inv), vec![classify(&inv).tag]);
    }

    #[test]
    fn singular_shape_classes(a in matrix()) {
        let inv = invariants_of(&a);
        let class = classify(&inv);
        let singular = trop_det(&shape_plus(&a).to_full()).is_singular();
        prop_assert_eq!(is_shape_singular_class(&class), singular);
        prop_assert_eq!(is_pair_of_lines(&inv), class.tag.is_pair_of_lines());
    }

    #[test]
    fn one_point_central_vertex_value(a in forced_tag(ConicTag::OnePointCentral)) {
        let inv = invariants_of(&a);
        let s = shape_plus(&a);
        let v1 = chart_project(&anchor_points(&s).unwrap().v[1], Chart::Z).unwrap();
        let e = eval(&poly_of(&s), &v1, Chart::Z);
        prop_assert_eq!(e.maximizers.len(), 3);
        prop_assert_eq!(e.value, rat(2) * inv.s(2, 0));
    }

    #[test]
    fn nondegenerate_means_six_unit_rays(a in matrix()) {
        let p = poly_of(&a);
        let class = classify(&invariants_of(&a));
        let sk = corner_locus(&p, Chart::Z).unwrap();
        let six_unit = sk.rays.len() == 6 && sk.rays.iter().all(|r| r.weight == 1);
        let nondegenerate = matches!(class.tag, ConicTag::OnePointCentral | ConicTag::TwoPointCentral);
        prop_assert_eq!(nondegenerate, six_unit && !class.tag.is_pair_of_lines());
        if class.tag.is_pair_of_lines() {
            prop_assert!([6, 5, 3].contains(&sk.distinct_rays()));
        }
    }

    #[test]
    fn factorization_sound_and_complete(a in matrix()) {
        let p = poly_of(&a);
        let reducible = is_reducible(&p);
        prop_assert_eq!(reducible, reducible_by_search(&a));
        match factorize(&p) {
            Factorization::Product(f, g) => {
                prop_assert!(reducible);
                prop_assert_eq!(expand(&f, &g).unwrap(), p);
                prop_assert!(classify(&invariants_of(&a)).tag.is_pair_of_lines());
            }
            Factorization::Irreducible => prop_assert!(!reducible),
        }
    }

    #[test]
    fn factorization_commutes_with_relabelling(a in matrix(), perm in perm()) {
        let p = poly_of(&a);
        let q = p.permuted(perm);
        match (factorize(&p), factorize(&q)) {
            (Factorization::Product(f, g), Factorization::Product(f2, g2)) => {
                let mut want = vec![normalized(&f.permuted(perm)), normalized(&g.permuted(perm))];
                let mut got = vec![normalized(&f2), normalized(&g2)];
                want.sort();
                got.sort();
                prop_assert_eq!(got, want);
            }
            (Factorization::Irreducible, Factorization::Irreducible) => {}
            _ => prop_assert!(false, "reducibility changed under relabelling"),
        }
    }

    #[test]
    fn reconstruction_round_trip(a in matrix(), chart in prop::sample::select(Chart::ALL.to_vec())) {
        let p = poly_of(&a);
        let sk = corner_locus(&p, chart).unwrap();
        let tree = tree_of_sketch(&sk);
        let (inv, class) = recover_invariants(&tree).unwrap();
        prop_assert_eq!(&inv, &invariants_of(&a));
        prop_assert_eq!(class, classify(&inv));
        let rebuilt = recover_polynomial(&tree).unwrap();
        prop_assert_eq!(corner_locus(&poly_of(&rebuilt), chart).unwrap().geometry(), sk.geometry());
        let again = recover_polynomial(&tree_of_sketch(&corner_locus(&poly_of(&rebuilt), chart).unwrap())).unwrap();
        prop_assert_eq!(again, rebuilt);
    }

    #[test]
    fn reconstruction_uses_nonnegative_shape(a in matrix()) {
        let rebuilt = recover_polynomial(&tree_of_sketch(&corner_locus(&poly_of(&a), Chart::Z).unwrap())).unwrap();
        prop_assert_eq!(&rebuilt.diag()[2], &rat(0));
        prop_assert_eq!(shape(&rebuilt), shape_plus(&a));
    }

    #[test]
    fn parse_inverts_format(p in poly()) {
        let text = format_poly(&p);
        let back = parse_poly(&text).unwrap();
        prop_assert_eq!(format_poly(&back), text);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn classification_is_relabelling_invariant(a in matrix(), perm in perm()) {
        let inv = invariants_of(&a);
        let moved = invariants_of(&a.permuted(perm));
        prop_assert_eq!(classify(&moved).tag, classify(&inv).tag);
        prop_assert_eq!(moved, inv.permuted(perm));
    }
}

#[test]
fn invariants_reject_negative_entries() {
    assert!(Invariants::from_splus([rat(-1), rat(0), rat(0)]).is_err());
}

#[test]
fn reducible_implies_pair_of_lines_but_not_conversely() {
    let bare = poly_of(&SymMatrix3::new(
        [rat(0), rat(0), rat(0)],
        [TropScalar::Bottom, TropScalar::Bottom, TropScalar::Bottom],
    ));
    let class = classify(&invariants_of(&matrix_of(&bare)));
    assert_eq!(class.tag, ConicTag::DoubleLine);
    assert_eq!(factorize(&bare), Factorization::Irreducible);
    let square = poly_of(&SymMatrix3::from_ints([0, 0, 0], [0, 0, 0]));
    assert_eq!(corner_locus(&bare, Chart::Z).unwrap().geometry(), corner_locus(&square, Chart::Z).unwrap().geometry());
}
