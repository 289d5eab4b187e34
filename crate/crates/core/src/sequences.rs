//! The integer sequences `a(k)`, `a'(k)` attached to the modulus-23
//! congruence families.
//!
//! Both sequences have a closed form built from `(2 ± sqrt(15))^k` with
//! rational prefactors, and both satisfy `x(k+1) = 4x(k) + 11x(k-1)`. The two
//! routes are implemented independently: the closed form in exact `Q(sqrt
//! 15)` arithmetic, the recurrence in plain big integers seeded from the
//! closed form. The conjugate terms cancel every `sqrt(15)` part, so each
//! value is asserted to be a rational integer before it is returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact element `rational + surd * sqrt(15)` of `Q(sqrt 15)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadElem {
    rational: BigRational,
    surd: BigRational,
}

impl QuadElem {
    pub fn new(rational: BigRational, surd: BigRational) -> Self {
        QuadElem { rational, surd }
    }

    /// The element `n/d + (sn/sd) * sqrt(15)` from machine integers.
    pub fn from_ratios(n: i64, d: i64, sn: i64, sd: i64) -> Self {
        QuadElem {
            rational: BigRational::new(BigInt::from(n), BigInt::from(d)),
            surd: BigRational::new(BigInt::from(sn), BigInt::from(sd)),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        QuadElem {
            rational: &self.rational + &other.rational,
            surd: &self.surd + &other.surd,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        QuadElem {
            rational: &self.rational - &other.rational,
            surd: &self.surd - &other.surd,
        }
    }

    /// `(x1 + y1 s)(x2 + y2 s) = (x1 x2 + 15 y1 y2) + (x1 y2 + x2 y1) s`
    /// with `s = sqrt(15)`.
    pub fn mul(&self, other: &Self) -> Self {
        let fifteen = BigRational::from_integer(BigInt::from(15));
        QuadElem {
            rational: &self.rational * &other.rational + fifteen * &self.surd * &other.surd,
            surd: &self.rational * &other.surd + &other.rational * &self.surd,
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut result = QuadElem {
            rational: BigRational::one(),
            surd: BigRational::zero(),
        };
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// The value as a rational integer, when the surd part is exactly zero
    /// and the rational part has denominator one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.surd.is_zero() && self.rational.is_integer() {
            Some(self.rational.to_integer())
        } else {
            None
        }
    }
}

/// One index of the paired sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequencePair {
    pub k: usize,
    pub a: BigInt,
    pub a_prime: BigInt,
}

/// Evaluates both closed forms at `k` in exact `Q(sqrt 15)` arithmetic:
///
/// `a(k)  = (1/2 - sqrt(15)/15)(2 + sqrt(15))^k + (1/2 + sqrt(15)/15)(2 - sqrt(15))^k`
/// `a'(k) = (sqrt(15)/30)(2 + sqrt(15))^k - (sqrt(15)/30)(2 - sqrt(15))^k`
///
/// Panics if either value fails to be a rational integer, which would signal
/// an implementation bug rather than an expected condition.
pub fn closed_form(k: usize) -> SequencePair {
    let plus = QuadElem::from_ratios(2, 1, 1, 1).pow(k as u64);
    let minus = QuadElem::from_ratios(2, 1, -1, 1).pow(k as u64);
    let front_a_plus = QuadElem::from_ratios(1, 2, -1, 15);
    let front_a_minus = QuadElem::from_ratios(1, 2, 1, 15);
    let front_ap = QuadElem::from_ratios(0, 1, 1, 30);
    let a = front_a_plus.mul(&plus).add(&front_a_minus.mul(&minus));
    let a_prime = front_ap.mul(&plus).sub(&front_ap.mul(&minus));
    SequencePair {
        k,
        a: a.as_integer()
            .unwrap_or_else(|| panic!("a({k}) is not a rational integer: {a:?}")),
        a_prime: a_prime
            .as_integer()
            .unwrap_or_else(|| panic!("a'({k}) is not a rational integer: {a_prime:?}")),
    }
}

/// `a(k)`, `a'(k)` for `k = 0..=k_max` by the integer recurrence
/// `x(k+1) = 4x(k) + 11x(k-1)`, seeded from the closed form so the two
/// routes stay free of shared transcription.
pub fn recurrence_pair(k_max: usize) -> Vec<SequencePair> {
    assert!(k_max >= 1, "recurrence needs k_max >= 1");
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(closed_form(0));
    out.push(closed_form(1));
    for k in 2..=k_max {
        let a = 4 * &out[k - 1].a + 11 * &out[k - 2].a;
        let a_prime = 4 * &out[k - 1].a_prime + 11 * &out[k - 2].a_prime;
        out.push(SequencePair { k, a, a_prime });
    }
    out
}

fn mod23(x: &BigInt) -> u64 {
    let r = x.mod_floor(&BigInt::from(23));
    u64::try_from(r).expect("canonical residue fits in u64")
}

/// Entry `k` is true iff `a'(12k) == 0 (mod 23)` *and* the period-12 scaling
/// `a'(12k) == 14 a'(12(k-1)) (mod 23)` holds (vacuously at `k = 0`). Both
/// parts are computed from the exact recurrence values reduced mod 23.
pub fn aprime_vanishing(k_max: usize) -> Vec<bool> {
    let pairs = recurrence_pair((12 * k_max).max(1));
    (0..=k_max)
        .map(|k| {
            let vanishes = mod23(&pairs[12 * k].a_prime) == 0;
            let scaled = k == 0
                || mod23(&pairs[12 * k].a_prime) == (14 * mod23(&pairs[12 * (k - 1)].a_prime)) % 23;
            vanishes && scaled
        })
        .collect()
}
