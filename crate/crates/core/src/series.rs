//! Truncated formal power series over a coefficient ring.
//!
//! A series of order `N` is known exactly through the coefficient of
//! `q^{N-1}`. Every binary operation returns the minimum of the operand
//! orders and never extends a series silently, so "equal through exponent
//! `K`" is always an honest statement about exactly computed coefficients.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{CoeffRing, ExactRing, ModRing};

/// A truncated formal power series: `coeffs[i]` is the coefficient of `q^i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<R: CoeffRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

/// Outcome of comparing two series through a bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    FirstMismatch {
        exponent: usize,
        lhs: String,
        rhs: String,
    },
}

impl<R: CoeffRing> Series<R> {
    /// Builds a series from raw coefficients, canonicalizing each one.
    pub fn from_coeffs(ring: R, coeffs: Vec<R::Elem>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| ring.canon(c)).collect();
        Series { ring, coeffs }
    }

    /// Builds a series from machine-integer coefficients.
    pub fn from_i64_coeffs(ring: R, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| ring.from_i64(c)).collect();
        Series { ring, coeffs }
    }

    /// The zero series of the given order.
    pub fn zeros(ring: R, order: usize) -> Self {
        let coeffs = vec![ring.zero(); order];
        Series { ring, coeffs }
    }

    /// The constant series 1 of the given order.
    pub fn one(ring: R, order: usize) -> Self {
        Self::monomial(ring, 1, 0, order)
    }

    /// The monomial `c * q^exponent`, zero if the exponent is out of range.
    pub fn monomial(ring: R, c: i64, exponent: usize, order: usize) -> Self {
        let mut s = Self::zeros(ring, order);
        if exponent < order {
            s.coeffs[exponent] = s.ring.from_i64(c);
        }
        s
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// The truncation order: coefficients are known for exponents `< order`.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    /// Coefficient of `q^i`. Panics if `i` is at or beyond the order.
    pub fn coeff(&self, i: usize) -> &R::Elem {
        &self.coeffs[i]
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            self.ring == other.ring,
            "incompatible rings: {} vs {}",
            self.ring.describe(),
            other.ring.describe()
        );
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !self.ring.is_zero(c)).count()
    }

    /// Coefficient-wise sum; result order is the minimum operand order.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let n = self.order().min(other.order());
        let coeffs = (0..n)
            .map(|i| self.ring.add(&self.coeffs[i], &other.coeffs[i]))
            .collect();
        Series {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Coefficient-wise difference; result order is the minimum operand order.
    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let n = self.order().min(other.order());
        let coeffs = (0..n)
            .map(|i| self.ring.sub(&self.coeffs[i], &other.coeffs[i]))
            .collect();
        Series {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Series {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Scalar multiple by a machine integer.
    pub fn scale_i64(&self, c: i64) -> Self {
        let c = self.ring.from_i64(c);
        let coeffs = self.coeffs.iter().map(|x| self.ring.mul(&c, x)).collect();
        Series {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Cauchy product truncated to the minimum operand order.
    ///
    /// When one factor has few nonzero terms the product is formed by
    /// iterating over those terms only, which turns the pentagonal-sparse
    /// Euler factors into `O(N sqrt N)` work instead of `O(N^2)`.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let n = self.order().min(other.order());
        if n == 0 {
            return Series {
                ring: self.ring.clone(),
                coeffs: Vec::new(),
            };
        }
        let na = self.nonzero_count();
        let nb = other.nonzero_count();
        let (sparse, dense, nnz) = if na <= nb {
            (self, other, na)
        } else {
            (other, self, nb)
        };
        if nnz * 4 <= n {
            return sparse.mul_sparse_by(dense, n);
        }
        let ring = self.ring.clone();
        let coeffs = (0..n)
            .map(|k| ring.convolve_dot(&self.coeffs[..=k], &other.coeffs[..=k]))
            .collect();
        Series { ring, coeffs }
    }

    /// `self` must be the sparse factor; iterates over its nonzero terms.
    fn mul_sparse_by(&self, dense: &Self, n: usize) -> Self {
        let ring = self.ring.clone();
        let mut coeffs = vec![ring.zero(); n];
        for (i, c) in self.coeffs.iter().enumerate().take(n) {
            if ring.is_zero(c) {
                continue;
            }
            for (j, d) in dense.coeffs.iter().take(n - i).enumerate() {
                if !ring.is_zero(d) {
                    coeffs[i + j] = ring.add(&coeffs[i + j], &ring.mul(c, d));
                }
            }
        }
        Series { ring, coeffs }
    }

    /// Power by repeated squaring; `s^0` is the constant series 1.
    pub fn pow(&self, e: u64) -> Self {
        let mut result = Series::one(self.ring.clone(), self.order());
        if e == 0 {
            return result;
        }
        let mut base = self.clone();
        let mut e = e;
        loop {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        result
    }

    /// Multiplicative inverse through the truncation order.
    ///
    /// The constant term must be a unit of the ring; otherwise this fails
    /// with [`Error::NonInvertible`].
    pub fn invert(&self) -> Result<Self> {
        let n = self.order();
        assert!(n > 0, "cannot invert an empty series");
        let ring = self.ring.clone();
        let inv0 = ring
            .inverse(&self.coeffs[0])
            .ok_or_else(|| Error::NonInvertible(ring.to_decimal(&self.coeffs[0])))?;
        let mut out = vec![ring.zero(); n];
        out[0] = inv0.clone();
        let nz: Vec<usize> = (1..n).filter(|&i| !ring.is_zero(&self.coeffs[i])).collect();
        if nz.len() * 4 <= n {
            for i in 1..n {
                let mut acc = ring.zero();
                for &k in nz.iter().take_while(|&&k| k <= i) {
                    acc = ring.add(&acc, &ring.mul(&self.coeffs[k], &out[i - k]));
                }
                out[i] = ring.neg(&ring.mul(&inv0, &acc));
            }
        } else {
            for i in 1..n {
                let acc = ring.convolve_dot(&self.coeffs[1..=i], &out[..i]);
                out[i] = ring.neg(&ring.mul(&inv0, &acc));
            }
        }
        Ok(Series { ring, coeffs: out })
    }

    /// Multiplication by `q^k`: coefficients move up, the top `k` fall off,
    /// the order is preserved.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![self.ring.zero(); n];
        if k < n {
            coeffs[k..n].clone_from_slice(&self.coeffs[..n - k]);
        }
        Series {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Restriction to a smaller order. Panics if `order` exceeds the current
    /// order: a series is never extended silently.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot extend a series by truncation: {} > {}",
            order,
            self.order()
        );
        Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    /// Substitution `q -> q^k`. The result has order `k * order()`, the
    /// largest range the known coefficients determine.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1, "dilation factor must be at least 1");
        let n = self.order() * k;
        let mut coeffs = vec![self.ring.zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Series {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Reports equality through `q^through`, or the smallest mismatch with
    /// both coefficient values rendered in decimal.
    pub fn equal_through(&self, other: &Self, through: usize) -> Result<Comparison> {
        self.assert_same_ring(other);
        let available = self.order().min(other.order());
        if through >= available {
            return Err(Error::InsufficientOrder { through, available });
        }
        for i in 0..=through {
            if self.coeffs[i] != other.coeffs[i] {
                return Ok(Comparison::FirstMismatch {
                    exponent: i,
                    lhs: self.ring.to_decimal(&self.coeffs[i]),
                    rhs: self.ring.to_decimal(&other.coeffs[i]),
                });
            }
        }
        Ok(Comparison::Equal)
    }
}

impl Series<ExactRing> {
    /// Coefficient-wise canonical reduction into `Z/mZ`.
    pub fn reduce_mod(&self, modulus: u64) -> Series<ModRing> {
        let ring = ModRing::new(modulus);
        let m = num_bigint::BigInt::from(modulus);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let r = num_integer::Integer::mod_floor(c, &m);
                // mod_floor of a BigInt by a positive modulus is in [0, m).
                u64::try_from(r).expect("canonical residue fits in u64")
            })
            .collect();
        Series { ring, coeffs }
    }
}

impl<R: CoeffRing> fmt::Display for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut printed = 0;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            if printed == 8 {
                write!(f, " + ...")?;
                break;
            }
            let dec = self.ring.to_decimal(c);
            let (sign, mag) = match dec.strip_prefix('-') {
                Some(m) => ("-", m.to_owned()),
                None => ("+", dec),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (i, mag.as_str()) {
                (0, m) => write!(f, "{m}")?,
                (1, "1") => write!(f, "q")?,
                (1, m) => write!(f, "{m}*q")?,
                (_, "1") => write!(f, "q^{i}")?,
                (_, m) => write!(f, "{m}*q^{i}")?,
            }
            first = false;
            printed += 1;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}
