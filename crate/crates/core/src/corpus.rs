//! Seeded random coefficient matrices, including samples forced into each
//! class.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conic::ConicTag;
use crate::quadratic::{SymMatrix3, OFF_DIAGONAL};
use crate::semiring::{ratio, Rational, TropScalar};

/// Rational in `[-bound, bound]` with denominator at most 4.
pub fn random_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    let den = rng.gen_range(1..=4);
    ratio(rng.gen_range(-bound * den..=bound * den), den)
}

fn positive_rational(rng: &mut impl Rng) -> Rational {
    let den = rng.gen_range(1..=4);
    ratio(rng.gen_range(1..=8 * den), den)
}

/// A matrix with finite diagonal and off-diagonal entries in `[-10, 10]`,
/// about one in eight of them `-inf`.
pub fn random_matrix(rng: &mut impl Rng) -> SymMatrix3 {
    let diag = [(); 3].map(|_| random_rational(rng, 10));
    let off = [(); 3].map(|_| {
        if rng.gen_ratio(1, 8) {
            TropScalar::Bottom
        } else {
            TropScalar::Finite(random_rational(rng, 10))
        }
    });
    SymMatrix3::new(diag, off)
}

/// `[s21, s32, s31]` of a non-negative shape matrix in the given class with
/// the identity relabelling.
fn canonical_splus(tag: ConicTag, rng: &mut impl Rng) -> [Rational; 3] {
    let zero = || ratio(0, 1);
    let two = ratio(2, 1);
    let from_d = |d: [Rational; 3]| [(&d[0] + &d[1]) / &two, (&d[1] + &d[2]) / &two, (&d[0] + &d[2]) / &two];
    match tag {
        ConicTag::OnePointCentral => from_d([positive_rational(rng), positive_rational(rng), positive_rational(rng)]),
        ConicTag::PairOfLinesOneZero => from_d([positive_rational(rng), positive_rational(rng), zero()]),
        ConicTag::PairOfLinesTwoZeros => from_d([positive_rational(rng), zero(), zero()]),
        ConicTag::DoubleLine => [zero(), zero(), zero()],
        ConicTag::TwoPointCentral => {
            let (b, a) = (positive_rational(rng), positive_rational(rng));
            [&a + &b + positive_rational(rng), b, a]
        }
        ConicTag::Degenerate1 => {
            let a = positive_rational(rng);
            [&a + positive_rational(rng), zero(), a]
        }
        ConicTag::Degenerate2 => [positive_rational(rng), zero(), zero()],
    }
}

/// A random matrix whose conic belongs to `tag`.
///
/// Variables are relabelled at random, zero entries of `s⁺` are realized as
/// zero, negative or `-inf` shape entries, and the diagonal is random.
pub fn forced_matrix(tag: ConicTag, rng: &mut impl Rng) -> SymMatrix3 {
    let splus = canonical_splus(tag, rng);
    let off = splus.map(|s| {
        if s != ratio(0, 1) {
            return TropScalar::Finite(s);
        }
        match rng.gen_range(0..3) {
            0 => TropScalar::Finite(s),
            1 => TropScalar::Finite(-positive_rational(rng)),
            _ => TropScalar::Bottom,
        }
    });
    let mut perm = [0, 1, 2];
    perm.shuffle(rng);
    let shape = SymMatrix3::new([ratio(0, 1), ratio(0, 1), ratio(0, 1)], off).permuted(perm);
    let diag = [(); 3].map(|_| random_rational(rng, 10));
    let two = ratio(2, 1);
    let off = [0, 1, 2].map(|k| {
        let (i, j) = OFF_DIAGONAL[k];
        shape.off()[k].odot(&TropScalar::Finite((&diag[i] + &diag[j]) / &two))
    });
    SymMatrix3::new(diag, off)
}

/// `count` random matrices followed by `per_tag` forced samples of every
/// class, all drawn from one seeded stream.
pub fn corpus(seed: u64, count: usize, per_tag: usize) -> Vec<SymMatrix3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<SymMatrix3> = (0..count).map(|_| random_matrix(&mut rng)).collect();
    for tag in ConicTag::ALL {
        for _ in 0..per_tag {
            out.push(forced_matrix(tag, &mut rng));
        }
    }
    out
}
