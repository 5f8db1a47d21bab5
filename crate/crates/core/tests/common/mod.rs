#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tropical_conics::conic::{AffinePoint, ConicTag, Invariants};
use tropical_conics::corpus::forced_matrix;
use tropical_conics::factor::LinForm;
use tropical_conics::quadratic::{poly_of, QuadPoly, SymMatrix3};
use tropical_conics::semiring::{rat, ratio, Rational, TropScalar};

pub fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

pub fn scalar() -> impl Strategy<Value = TropScalar> {
    prop_oneof![1 => Just(TropScalar::Bottom), 7 => rational().prop_map(TropScalar::Finite)]
}

pub fn random_matrix() -> impl Strategy<Value = SymMatrix3> {
    ((rational(), rational(), rational()), (scalar(), scalar(), scalar()))
        .prop_map(|((a, b, c), (x, y, z))| SymMatrix3::new([a, b, c], [x, y, z]))
}

pub fn forced() -> impl Strategy<Value = SymMatrix3> {
    (any::<u64>(), 0..ConicTag::ALL.len())
        .prop_map(|(seed, t)| forced_matrix(ConicTag::ALL[t], &mut ChaCha8Rng::seed_from_u64(seed)))
}

pub fn forced_tag(tag: ConicTag) -> impl Strategy<Value = SymMatrix3> {
    any::<u64>().prop_map(move |seed| forced_matrix(tag, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// Random matrices mixed with samples forced into every class.
pub fn matrix() -> impl Strategy<Value = SymMatrix3> {
    prop_oneof![random_matrix(), forced()]
}

pub fn poly() -> impl Strategy<Value = QuadPoly> {
    matrix().prop_map(|a| poly_of(&a))
}

pub fn perm() -> impl Strategy<Value = [usize; 3]> {
    Just(vec![0usize, 1, 2]).prop_shuffle().prop_map(|v| [v[0], v[1], v[2]])
}

pub fn pt(x: i64, y: i64) -> AffinePoint {
    AffinePoint::new(rat(x), rat(y))
}

/// Class predicates written directly from the sign pattern of `d` and the
/// zeros of `s⁺`, one per tag.
pub fn tag_predicates(inv: &Invariants) -> Vec<ConicTag> {
    let zero = rat(0);
    let d = inv.d();
    let neg = d.iter().filter(|x| **x < zero).count();
    let zeros_d = d.iter().filter(|x| **x == zero).count();
    let zeros_s = inv.splus().iter().filter(|x| **x == zero).count();
    let cases = [
        (ConicTag::OnePointCentral, neg == 0 && zeros_d == 0),
        (ConicTag::PairOfLinesOneZero, neg == 0 && zeros_d == 1),
        (ConicTag::PairOfLinesTwoZeros, neg == 0 && zeros_d == 2),
        (ConicTag::DoubleLine, neg == 0 && zeros_d == 3),
        (ConicTag::TwoPointCentral, neg == 1 && zeros_s == 0),
        (ConicTag::Degenerate1, neg == 1 && zeros_s == 1),
        (ConicTag::Degenerate2, neg == 1 && zeros_s == 2),
    ];
    cases.into_iter().filter(|(_, hit)| *hit).map(|(t, _)| t).collect()
}

/// Reducibility decided from scratch: `p = f ⊙ g` forces
/// `|u_i − u_j| = s_ij` for `u_i = f_i − a_ii / 2`, so search the
/// sign choices with `u_1 = 0`.
pub fn reducible_by_search(a: &SymMatrix3) -> bool {
    let d = a.diag();
    let two = rat(2);
    let s = |k: usize, i: usize, j: usize| a.off()[k].as_finite().map(|x| x - (&d[i] + &d[j]) / &two);
    let (Some(s21), Some(s32), Some(s31)) = (s(0, 1, 0), s(1, 2, 1), s(2, 2, 0)) else {
        return false;
    };
    for e2 in [1, -1] {
        for e3 in [1, -1] {
            let u2 = &s21 * rat(e2);
            let u3 = &s31 * rat(e3);
            let gap = &u2 - &u3;
            let gap = if gap < rat(0) { -gap } else { gap };
            if s21 >= rat(0) && s31 >= rat(0) && gap == s32 {
                return true;
            }
        }
    }
    false
}

/// Linear form shifted so its largest coefficient is 0.
pub fn normalized(f: &LinForm) -> Vec<TropScalar> {
    let top = f.coeffs().iter().max().and_then(TropScalar::as_finite).cloned().unwrap();
    f.coeffs().iter().map(|c| c.odot(&TropScalar::Finite(-top.clone()))).collect()
}
