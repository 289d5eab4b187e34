//! Counting of l-regular partitions: partitions of `n` none of whose parts
//! is divisible by `l`, written `b_l(n)`, with `b_l(0) = 1`.
//!
//! Three independent paths are provided on purpose:
//!
//! - [`regular_gf`] — the exact generating function `f_l / f_1`.
//! - [`regular_gf_mod`] / [`regular_mod_table`] — the large-index modular
//!   path: `p(n) mod l` by the pentagonal-number recurrence, then a sparse
//!   convolution with the pentagonal support of `f_l`.
//! - [`b_oracle`] — a dynamic program over allowed parts, independent of all
//!   series code, used as the ground-truth oracle at small indices.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::etatheta::euler_product;
use crate::ring::{ExactRing, ModRing};
use crate::series::Series;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Generalized pentagonal numbers `j(3j-1)/2` for `j = 1, -1, 2, -2, ...`
/// up to `bound`, each with the sign `(-1)^j` of its Euler-product term.
fn pentagonal_terms(bound: usize) -> Vec<(usize, bool)> {
    let mut out = Vec::new();
    let mut j: u64 = 1;
    loop {
        let g_minus = j * (3 * j - 1) / 2;
        if g_minus > bound as u64 {
            break;
        }
        let negative = j % 2 == 1;
        out.push((g_minus as usize, negative));
        let g_plus = j * (3 * j + 1) / 2;
        if g_plus <= bound as u64 {
            out.push((g_plus as usize, negative));
        }
        j += 1;
    }
    out
}

/// Pentagonal terms split by the sign they carry in the recurrence
/// `p(n) = sum_j (-1)^{j+1} p(n - j(3j-1)/2)`: odd `j` adds, even `j`
/// subtracts. Both lists stay ascending.
fn split_pentagonal_terms(bound: usize) -> (Vec<usize>, Vec<usize>) {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (g, odd_j) in pentagonal_terms(bound) {
        if odd_j {
            plus.push(g);
        } else {
            minus.push(g);
        }
    }
    (plus, minus)
}

/// `p(n) mod modulus` for `n < len`, by the pentagonal recurrence.
/// `O(len * sqrt(len))` word operations and one flat array of `len`
/// residues; small moduli run on a byte table to keep the scattered reads
/// cache-resident.
pub fn partition_mod_table(modulus: u64, len: usize) -> Vec<u32> {
    assert!(modulus >= 2, "modulus must be at least 2");
    assert!(
        modulus <= u32::MAX as u64,
        "modulus {modulus} exceeds the supported machine-word bound"
    );
    if modulus < 256 {
        return partition_mod_table_bytes(modulus, len)
            .into_iter()
            .map(u32::from)
            .collect();
    }
    let m = modulus;
    let mut p = vec![0u32; len];
    if len == 0 {
        return p;
    }
    p[0] = 1;
    let (plus_terms, minus_terms) = split_pentagonal_terms(len.saturating_sub(1));
    for n in 1..len {
        let mut plus: u64 = 0;
        for &g in plus_terms.iter().take_while(|&&g| g <= n) {
            plus += p[n - g] as u64;
        }
        let mut minus: u64 = 0;
        for &g in minus_terms.iter().take_while(|&&g| g <= n) {
            minus += p[n - g] as u64;
        }
        p[n] = ((plus % m + m - minus % m) % m) as u32;
    }
    p
}

/// The same recurrence on a byte table, for moduli below 256.
fn partition_mod_table_bytes(modulus: u64, len: usize) -> Vec<u8> {
    let m = modulus;
    let mut p = vec![0u8; len];
    if len == 0 {
        return p;
    }
    p[0] = 1;
    let (plus_terms, minus_terms) = split_pentagonal_terms(len.saturating_sub(1));
    for n in 1..len {
        let mut plus: u64 = 0;
        for &g in plus_terms.iter().take_while(|&&g| g <= n) {
            plus += p[n - g] as u64;
        }
        let mut minus: u64 = 0;
        for &g in minus_terms.iter().take_while(|&&g| g <= n) {
            minus += p[n - g] as u64;
        }
        p[n] = ((plus % m + m - minus % m) % m) as u8;
    }
    p
}

/// `b_l(n) mod l` for `n < len`, as a flat residue table.
///
/// Writes the generating function as `f_l * (1/f_1)`: the partition table
/// supplies `1/f_1 mod l`, and `f_l` contributes only its pentagonal terms,
/// an `O(len * sqrt(len / l))` convolution. Requires `l` prime, the setting
/// in which the `f_1^{l-1}` reduction of the generating function is valid.
pub fn regular_mod_table(l: u64, len: usize) -> Result<Vec<u32>> {
    if !is_prime(l) {
        return Err(Error::NotPrime(l));
    }
    if l < 256 {
        return Ok(regular_mod_table_from(
            l,
            len,
            &partition_mod_table_bytes(l, len),
        ));
    }
    Ok(regular_mod_table_from(l, len, &partition_mod_table(l, len)))
}

fn regular_mod_table_from<T: Copy + Into<u64>>(l: u64, len: usize, p: &[T]) -> Vec<u32> {
    let mut b = vec![0u32; len];
    if len == 0 {
        return b;
    }
    let bound = (len - 1) / l as usize;
    let terms = pentagonal_terms(bound);
    let m = l;
    for n in 0..len {
        let mut plus: u64 = p[n].into(); // j = 0 term of f_l
        let mut minus: u64 = 0;
        for &(g, odd_j) in terms.iter() {
            let shift = g * l as usize;
            if shift > n {
                break;
            }
            let v: u64 = p[n - shift].into();
            if odd_j {
                minus += v;
            } else {
                plus += v;
            }
        }
        b[n] = ((plus % m + m - minus % m) % m) as u32;
    }
    b
}

/// The exact generating function `sum b_l(n) q^n = f_l / f_1` through
/// exponent `order - 1`.
pub fn regular_gf(l: u64, order: usize) -> Series<ExactRing> {
    assert!(l >= 2, "l-regular partitions need l >= 2");
    let f_l = euler_product(&ExactRing, l, order);
    let f_1 = euler_product(&ExactRing, 1, order);
    f_l.mul(&f_1.invert().expect("f_1 has constant term 1"))
}

/// `sum b_l(n) q^n` reduced mod `l`, through exponent `order - 1`, via the
/// table path. Requires `l` prime.
pub fn regular_gf_mod(l: u64, order: usize) -> Result<Series<ModRing>> {
    let table = regular_mod_table(l, order)?;
    let coeffs = table.into_iter().map(u64::from).collect();
    Ok(Series::from_coeffs(ModRing::new(l), coeffs))
}

/// Exact count of l-regular partitions of `n` by dynamic programming over
/// the allowed parts, independent of all series code. Intended as an oracle
/// at desk scale (`n <= 10^4`).
pub fn b_oracle(l: u64, n: usize) -> BigUint {
    assert!(l >= 2, "l-regular partitions need l >= 2");
    assert!(n <= 10_000, "the enumeration oracle is capped at n = 10^4");
    let mut dp: Vec<BigUint> = vec![BigUint::from(0u32); n + 1];
    dp[0] = BigUint::from(1u32);
    for part in 1..=n {
        if (part as u64).is_multiple_of(l) {
            continue;
        }
        for j in part..=n {
            let prev = dp[j - part].clone();
            dp[j] += prev;
        }
    }
    dp.pop().expect("dp table is nonempty")
}
