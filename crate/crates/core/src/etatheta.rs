//! Constructors for the special series the congruence checks are built from:
//! Euler products `f_k = prod_{i>=1} (1 - q^{ki})`, the two-parameter theta
//! series `f(-q^a, -q^b)`, the Rogers-Ramanujan quotient `R(q)`, and the
//! septic theta quotients `A`, `B`, `C` with `f(-q^2)` denominators.

use crate::ring::CoeffRing;
use crate::series::Series;

/// The Euler product `f_k` through exponent `order - 1`.
///
/// Built from the pentagonal number theorem
/// `f_1 = sum_j (-1)^j q^{j(3j-1)/2}` applied at `q^k`, which leaves
/// `O(sqrt(order / k))` nonzero terms. The direct product expansion is kept
/// as a test oracle.
pub fn euler_product<R: CoeffRing>(ring: &R, k: u64, order: usize) -> Series<R> {
    assert!(k >= 1, "euler_product: k must be at least 1");
    assert!(order >= 1, "euler_product: order must be at least 1");
    let mut coeffs = vec![ring.zero(); order];
    coeffs[0] = ring.one();
    let mut j: u64 = 1;
    loop {
        let g_minus = k * (j * (3 * j - 1) / 2);
        if g_minus >= order as u64 {
            break;
        }
        let sign = if j % 2 == 1 { -1 } else { 1 };
        coeffs[g_minus as usize] = ring.add(&coeffs[g_minus as usize], &ring.from_i64(sign));
        let g_plus = k * (j * (3 * j + 1) / 2);
        if g_plus < order as u64 {
            coeffs[g_plus as usize] = ring.add(&coeffs[g_plus as usize], &ring.from_i64(sign));
        }
        j += 1;
    }
    Series::from_coeffs(ring.clone(), coeffs)
}

/// The theta specialization `f(-q^a, -q^b) = sum_n (-1)^n
/// q^{a n(n+1)/2 + b n(n-1)/2}`, summed over all integers `n` with exponent
/// below `order`. The exponents grow quadratically in `|n|`, so the bilateral
/// sum terminates.
pub fn theta2<R: CoeffRing>(ring: &R, a: u64, b: u64, order: usize) -> Series<R> {
    assert!(a >= 1 && b >= 1, "theta2: parameters must be at least 1");
    assert!(order >= 1, "theta2: order must be at least 1");
    let mut coeffs = vec![ring.zero(); order];
    let triangle = |j: u64| j * (j + 1) / 2;
    let mut j: u64 = 0;
    loop {
        // n = +j has exponent a*T(j) + b*T(j-1); n = -j swaps the roles.
        let (t_hi, t_lo) = (triangle(j), if j == 0 { 0 } else { triangle(j - 1) });
        let e_pos = a * t_hi + b * t_lo;
        let e_neg = a * t_lo + b * t_hi;
        if e_pos >= order as u64 && e_neg >= order as u64 {
            break;
        }
        let sign = if j % 2 == 1 { -1 } else { 1 };
        if e_pos < order as u64 {
            let i = e_pos as usize;
            coeffs[i] = ring.add(&coeffs[i], &ring.from_i64(sign));
        }
        if j > 0 && e_neg < order as u64 {
            let i = e_neg as usize;
            coeffs[i] = ring.add(&coeffs[i], &ring.from_i64(sign));
        }
        j += 1;
    }
    Series::from_coeffs(ring.clone(), coeffs)
}

/// In-place multiplication by the binomial `1 - q^e`.
fn mul_binomial<R: CoeffRing>(ring: &R, coeffs: &mut [R::Elem], e: usize) {
    for i in (e..coeffs.len()).rev() {
        coeffs[i] = ring.sub(&coeffs[i], &coeffs[i - e]);
    }
}

/// The Rogers-Ramanujan quotient
/// `R(q) = prod_{n>=1} (1-q^{5n-4})(1-q^{5n-1}) / ((1-q^{5n-3})(1-q^{5n-2}))`
/// through exponent `order - 1`, built verbatim from the truncated finite
/// products. The constant term is 1, so the quotient is invertible.
pub fn rr_quotient<R: CoeffRing>(ring: &R, order: usize) -> Series<R> {
    assert!(order >= 1, "rr_quotient: order must be at least 1");
    let mut num = vec![ring.zero(); order];
    num[0] = ring.one();
    let mut den = num.clone();
    let mut i: usize = 1;
    loop {
        let exps = [5 * i - 4, 5 * i - 1, 5 * i - 3, 5 * i - 2];
        if exps.iter().all(|&e| e >= order) {
            break;
        }
        for (which, &e) in exps.iter().enumerate() {
            if e < order {
                let target = if which < 2 { &mut num } else { &mut den };
                mul_binomial(ring, target, e);
            }
        }
        i += 1;
    }
    let num = Series::from_coeffs(ring.clone(), num);
    let den = Series::from_coeffs(ring.clone(), den);
    num.mul(&den.invert().expect("denominator has constant term 1"))
}

/// Which septic theta quotient to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SepticQuotient {
    /// `A = f(-q^3, -q^4) / f(-q^2)`
    A,
    /// `B = f(-q^2, -q^5) / f(-q^2)`
    B,
    /// `C = f(-q, -q^6) / f(-q^2)`
    C,
}

impl SepticQuotient {
    fn numerator_exponents(self) -> (u64, u64) {
        match self {
            SepticQuotient::A => (3, 4),
            SepticQuotient::B => (2, 5),
            SepticQuotient::C => (1, 6),
        }
    }
}

/// One of the septic theta quotients through exponent `order - 1`.
///
/// The denominator `f(-q^2) = f(-q^2, -q^4)` equals the Euler product `f_2`,
/// which is how it is realized here; `theta2(2, 4, n)` stays available as an
/// independent cross-check of that identification.
pub fn septic_quotient<R: CoeffRing>(ring: &R, which: SepticQuotient, order: usize) -> Series<R> {
    let (a, b) = which.numerator_exponents();
    let num = theta2(ring, a, b, order);
    let den = euler_product(ring, 2, order);
    num.mul(&den.invert().expect("f_2 has constant term 1"))
}
