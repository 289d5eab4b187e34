//! Property tests for the series kernel and the dissection operators:
//! ring axioms on random series, inversion round trips, exact/modular
//! compatibility, and the extract/embed adjunction.

use num_integer::Integer;
use proptest::prelude::*;

use regulus_core::dissect::{embed, extract, Dissection};
use regulus_core::ring::{ExactRing, ModRing};
use regulus_core::series::{Comparison, Series};

fn coeff_vec() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-100i64..=100, 1..=64)
}

fn exact(coeffs: &[i64]) -> Series<ExactRing> {
    Series::from_i64_coeffs(ExactRing, coeffs)
}

fn modular(m: u64, coeffs: &[i64]) -> Series<ModRing> {
    Series::from_i64_coeffs(ModRing::new(m), coeffs)
}

/// Coefficients with a unit constant term in Z: first entry is +-1.
fn unit_coeff_vec() -> impl Strategy<Value = Vec<i64>> {
    (prop::bool::ANY, coeff_vec()).prop_map(|(neg, mut v)| {
        v[0] = if neg { -1 } else { 1 };
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1024))]

    #[test]
    fn exact_mul_commutes(a in coeff_vec(), b in coeff_vec()) {
        let (a, b) = (exact(&a), exact(&b));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn exact_mul_associates(a in coeff_vec(), b in coeff_vec(), c in coeff_vec()) {
        let (a, b, c) = (exact(&a), exact(&b), exact(&c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn exact_mul_distributes(a in coeff_vec(), b in coeff_vec(), c in coeff_vec()) {
        let (a, b, c) = (exact(&a), exact(&b), exact(&c));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn mod_ring_axioms(m in 2u64..=97, a in coeff_vec(), b in coeff_vec(), c in coeff_vec()) {
        let (a, b, c) = (modular(m, &a), modular(m, &b), modular(m, &c));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn exact_invert_round_trip(v in unit_coeff_vec()) {
        let s = exact(&v);
        let prod = s.mul(&s.invert().unwrap());
        let one = Series::one(ExactRing, s.order());
        prop_assert_eq!(prod.equal_through(&one, s.order() - 1).unwrap(), Comparison::Equal);
    }

    #[test]
    fn mod_invert_round_trip(m in 2u64..=97, v in coeff_vec(), seed in 0usize..1024) {
        // pick a unit constant term deterministically from the seed
        let units: Vec<u64> = (1..m).filter(|c| c.gcd(&m) == 1).collect();
        let c = units[seed % units.len()];
        let s = modular(m, &v);
        let mut coeffs = s.coeffs().to_vec();
        coeffs[0] = c;
        let s = Series::from_coeffs(ModRing::new(m), coeffs);
        let prod = s.mul(&s.invert().unwrap());
        let one = Series::one(ModRing::new(m), s.order());
        prop_assert_eq!(prod.equal_through(&one, s.order() - 1).unwrap(), Comparison::Equal);
    }

    #[test]
    fn reduction_commutes_with_ops(m in 2u64..=97, a in coeff_vec(), b in coeff_vec(), e in 0u64..=6) {
        let (za, zb) = (exact(&a), exact(&b));
        let (ma, mb) = (za.reduce_mod(m), zb.reduce_mod(m));
        prop_assert_eq!(za.add(&zb).reduce_mod(m), ma.add(&mb));
        prop_assert_eq!(za.mul(&zb).reduce_mod(m), ma.mul(&mb));
        prop_assert_eq!(za.pow(e).reduce_mod(m), ma.pow(e));
    }

    #[test]
    fn shift_is_additive(v in coeff_vec(), a in 0usize..=40, b in 0usize..=40) {
        let s = exact(&v);
        prop_assert_eq!(s.shift(a + b), s.shift(a).shift(b));
    }

    #[test]
    fn extract_embed_adjunction(v in coeff_vec(), m in 1usize..=25, r_seed in 0usize..25) {
        let r = r_seed % m;
        let t = exact(&v);
        let d = Dissection::new(m, r);
        let back = extract(&embed(&t, d, m * t.order() + r), d);
        prop_assert_eq!(back, t);
    }

    #[test]
    fn dissection_partition_of_unity(v in coeff_vec(), m in 1usize..=25) {
        let s = exact(&v);
        let mut sum = Series::zeros(ExactRing, s.order());
        for r in 0..m {
            let d = Dissection::new(m, r);
            sum = sum.add(&embed(&extract(&s, d), d, s.order()));
        }
        prop_assert_eq!(sum, s);
    }

    #[test]
    fn extraction_is_linear_and_commutes_with_reduction(
        a in coeff_vec(),
        b in coeff_vec(),
        m in 1usize..=25,
        r_seed in 0usize..25,
        l in 2u64..=97,
    ) {
        let r = r_seed % m;
        let d = Dissection::new(m, r);
        let (sa, sb) = (exact(&a), exact(&b));
        prop_assert_eq!(extract(&sa.add(&sb), d), extract(&sa, d).add(&extract(&sb, d)));
        prop_assert_eq!(extract(&sa, d).reduce_mod(l), extract(&sa.reduce_mod(l), d));
    }
}
