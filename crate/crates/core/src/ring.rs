//! Coefficient rings for truncated series: exact arbitrary-precision integers
//! and residues modulo a fixed small modulus.
//!
//! A ring is carried *by value* next to every series, so the residue ring
//! `Z/mZ` knows its modulus at run time while the element type stays a plain
//! `u64`. All residues are kept canonical in `[0, m)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arithmetic interface a coefficient ring must provide.
///
/// Implementations must keep elements canonical: every value returned by a
/// ring operation is a valid canonical element of the ring.
pub trait CoeffRing: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Embed a machine integer (canonicalized). Takes the ring receiver
    /// because the target ring is a run-time value.
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, when `a` is a unit.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Canonicalize a raw element. Identity for exact integers.
    fn canon(&self, a: Self::Elem) -> Self::Elem;
    /// Short ring name for diagnostics, e.g. `Z` or `Z/13Z`.
    fn describe(&self) -> String;
    /// Decimal rendering of an element.
    fn to_decimal(&self, a: &Self::Elem) -> String;

    /// Convolution kernel: `sum_i a[i] * b[len-1-i]` over slices of equal
    /// length. Rings may override this with a faster accumulation scheme.
    fn convolve_dot(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Self::Elem {
        debug_assert_eq!(a.len(), b.len());
        let mut acc = self.zero();
        for (x, y) in a.iter().zip(b.iter().rev()) {
            acc = self.add(&acc, &self.mul(x, y));
        }
        acc
    }
}

/// The ring of exact arbitrary-precision integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ExactRing;

impl CoeffRing for ExactRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn inverse(&self, a: &BigInt) -> Option<BigInt> {
        if a.is_one() || (-a).is_one() {
            Some(a.clone())
        } else {
            None
        }
    }

    fn canon(&self, a: BigInt) -> BigInt {
        a
    }

    fn describe(&self) -> String {
        "Z".to_owned()
    }

    fn to_decimal(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn convolve_dot(&self, a: &[BigInt], b: &[BigInt]) -> BigInt {
        debug_assert_eq!(a.len(), b.len());
        let mut acc = BigInt::zero();
        for (x, y) in a.iter().zip(b.iter().rev()) {
            if !x.is_zero() && !y.is_zero() {
                acc += x * y;
            }
        }
        acc
    }
}

/// The residue ring `Z/mZ` with `2 <= m <= u32::MAX`.
///
/// The modulus bound keeps every intermediate product inside a `u64` and lets
/// long convolutions accumulate without per-term reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModRing {
    modulus: u64,
}

impl ModRing {
    /// Panics if the modulus is below 2 or above `u32::MAX`.
    pub fn new(modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2, got {modulus}");
        assert!(
            modulus <= u32::MAX as u64,
            "modulus {modulus} exceeds the supported machine-word bound"
        );
        ModRing { modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.modulus as i64) as u64
    }
}

/// Modular inverse by extended Euclid; `None` when gcd(a, m) != 1.
fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

impl CoeffRing for ModRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.modulus
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.modulus - b) % self.modulus
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.modulus
    }

    fn inverse(&self, a: &u64) -> Option<u64> {
        mod_inverse(*a, self.modulus)
    }

    fn canon(&self, a: u64) -> u64 {
        a % self.modulus
    }

    fn describe(&self) -> String {
        format!("Z/{}Z", self.modulus)
    }

    fn to_decimal(&self, a: &u64) -> String {
        a.to_string()
    }

    fn convolve_dot(&self, a: &[u64], b: &[u64]) -> u64 {
        debug_assert_eq!(a.len(), b.len());
        let m = self.modulus;
        let sq = (m - 1) * (m - 1);
        // Accumulate in u64 while the worst-case sum fits, otherwise in u128.
        if sq.checked_mul(a.len() as u64).is_some() {
            let mut acc: u64 = 0;
            for (x, y) in a.iter().zip(b.iter().rev()) {
                acc += x * y;
            }
            acc % m
        } else {
            let mut acc: u128 = 0;
            for (x, y) in a.iter().zip(b.iter().rev()) {
                acc += *x as u128 * *y as u128;
            }
            (acc % m as u128) as u64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_ring_is_canonical() {
        let r = ModRing::new(13);
        assert_eq!(r.from_i64(-1), 12);
        assert_eq!(r.from_i64(26), 0);
        assert_eq!(r.from_i64(-27), 12);
        assert_eq!(r.sub(&0, &5), 8);
        assert_eq!(r.neg(&0), 0);
        assert_eq!(r.neg(&4), 9);
    }

    #[test]
    fn mod_inverse_prime_and_composite() {
        let p = ModRing::new(17);
        for a in 1..17 {
            let inv = p.inverse(&a).unwrap();
            assert_eq!(p.mul(&a, &inv), 1, "a = {a}");
        }
        let r = ModRing::new(9);
        assert_eq!(r.inverse(&2), Some(5));
        assert_eq!(r.inverse(&3), None);
        assert_eq!(r.inverse(&6), None);
    }

    #[test]
    fn exact_units_are_plus_minus_one() {
        let z = ExactRing;
        assert_eq!(z.inverse(&z.one()), Some(z.one()));
        assert_eq!(z.inverse(&z.from_i64(-1)), Some(z.from_i64(-1)));
        assert_eq!(z.inverse(&z.from_i64(2)), None);
        assert_eq!(z.inverse(&z.zero()), None);
    }

    #[test]
    fn convolve_dot_matches_elementwise() {
        let r = ModRing::new(23);
        let a: Vec<u64> = (0..40).map(|i| (i * 7 + 3) % 23).collect();
        let b: Vec<u64> = (0..40).map(|i| (i * 11 + 5) % 23).collect();
        let mut expect = 0u64;
        for (x, y) in a.iter().zip(b.iter().rev()) {
            expect = r.add(&expect, &r.mul(x, y));
        }
        assert_eq!(r.convolve_dot(&a, &b), expect);

        // Large modulus exercises the u128 accumulation path.
        let big = ModRing::new(u32::MAX as u64);
        let a: Vec<u64> = (0..64).map(|i| big.from_i64(i * 1_000_003)).collect();
        let b: Vec<u64> = (0..64).map(|i| big.from_i64(i * 999_983 + 1)).collect();
        let mut expect = 0u64;
        for (x, y) in a.iter().zip(b.iter().rev()) {
            expect = big.add(&expect, &big.mul(x, y));
        }
        assert_eq!(big.convolve_dot(&a, &b), expect);
    }

    #[test]
    #[should_panic(expected = "modulus must be at least 2")]
    fn modulus_below_two_rejected() {
        ModRing::new(1);
    }
}
