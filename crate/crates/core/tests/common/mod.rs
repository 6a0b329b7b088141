#![allow(dead_code)]

use biorth_core::family::MqfFamily;
use biorth_core::{Rational, Scalar};
use proptest::prelude::*;

pub fn q(p: i64, d: i64) -> Rational {
    Rational::from_ratio(p, d)
}

pub fn qs(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| q(x, 1)).collect()
}

pub fn rational(lo: i64, hi: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (lo..=hi, 1..=max_den).prop_map(|(p, d)| q(p, d))
}

/// Distinct rationals in random order.
pub fn distinct_rationals(len: std::ops::RangeInclusive<usize>, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::btree_set(rational(lo, hi, 7), len)
        .prop_map(|s| s.into_iter().collect::<Vec<_>>())
        .prop_shuffle()
}

/// `alpha_n = 1 + n, beta_n = 1, gamma_n = 1, delta_n = 3 + n`: passes every
/// validity predicate, so all three constructions apply.
pub fn valid_family() -> MqfFamily<Rational> {
    MqfFamily::polynomial("valid", qs(&[1, -1]), qs(&[1]), qs(&[1]), qs(&[3, -1]))
}

pub fn bessel_family() -> MqfFamily<Rational> {
    MqfFamily::polynomial("bessel", qs(&[0, 0, 1]), qs(&[0, -1, 0]), qs(&[1]), qs(&[0]))
}
