//! Coefficient extraction along arithmetic progressions and its inverse
//! embedding.
//!
//! `extract` fuses the three-step operator "keep the terms `q^{mn+r}`, divide
//! by `q^r`, substitute `q` by `q^{1/m}`" into plain index arithmetic, so all
//! series stay in integer exponents.

use crate::ring::CoeffRing;
use crate::series::Series;

/// The progression `m*n + r` with `0 <= r < m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dissection {
    modulus: usize,
    residue: usize,
}

impl Dissection {
    /// Panics unless `modulus >= 1` and `residue < modulus`.
    pub const fn new(modulus: usize, residue: usize) -> Self {
        assert!(modulus >= 1, "dissection modulus must be at least 1");
        assert!(
            residue < modulus,
            "dissection residue must be below the modulus"
        );
        Dissection { modulus, residue }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn residue(&self) -> usize {
        self.residue
    }
}

/// Coefficients of `s` along the progression: result coefficient `n` is the
/// coefficient of `q^{mn+r}` in `s`. The result order is
/// `ceil((order(s) - r) / m)`, possibly zero for tiny inputs.
pub fn extract<R: CoeffRing>(s: &Series<R>, d: Dissection) -> Series<R> {
    let (m, r) = (d.modulus, d.residue);
    let order = s.order();
    let len = if order > r {
        (order - r).div_ceil(m)
    } else {
        0
    };
    let coeffs = (0..len).map(|n| s.coeff(m * n + r).clone()).collect();
    Series::from_coeffs(s.ring().clone(), coeffs)
}

/// The inverse embedding: coefficient of `q^{mn+r}` is `t`'s coefficient `n`,
/// all other coefficients zero.
///
/// The result order is capped at `m * order(t) + r`, the largest exponent
/// range the known coefficients of `t` determine; nothing is extended
/// silently beyond that.
pub fn embed<R: CoeffRing>(t: &Series<R>, d: Dissection, order: usize) -> Series<R> {
    let (m, r) = (d.modulus, d.residue);
    let order = order.min(m * t.order() + r);
    let mut coeffs = vec![t.ring().zero(); order];
    for n in 0..t.order() {
        let e = m * n + r;
        if e >= order {
            break;
        }
        coeffs[e] = t.coeff(n).clone();
    }
    Series::from_coeffs(t.ring().clone(), coeffs)
}
