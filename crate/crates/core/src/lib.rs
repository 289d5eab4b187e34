//! Exact q-series arithmetic and mechanical verification of congruence
//! families for l-regular partitions modulo l, for l in {13, 17, 23}.
//!
//! The crate is organized around a small kernel and a check registry:
//!
//! - [`series`] — truncated formal power series over exact integers or
//!   `Z/mZ`, with sparse-aware multiplication and inversion.
//! - [`etatheta`] — the special series: Euler products `f_k`, two-parameter
//!   theta series `f(-q^a, -q^b)`, the Rogers-Ramanujan quotient `R(q)` and
//!   the septic theta quotients `A`, `B`, `C`.
//! - [`dissect`] — extraction of arithmetic progressions of coefficients and
//!   the inverse embedding.
//! - [`partitions`] — counting of l-regular partitions: exact generating
//!   function, a fast modular path built on the pentagonal-number recurrence,
//!   and an independent dynamic-programming oracle.
//! - [`sequences`] — the integer sequences attached to the modulus-23
//!   families: closed form in `Q(sqrt 15)` and the recurrence
//!   `x(k+1) = 4x(k) + 11x(k-1)`.
//! - [`verify`] — a registry of named checks, each a machine-checkable series
//!   identity or congruence family, plus the congruence-family checker.

pub mod dissect;
pub mod error;
pub mod etatheta;
pub mod partitions;
pub mod ring;
pub mod sequences;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{CoeffRing, ExactRing, ModRing};
pub use series::{Comparison, Series};
pub use verify::{CheckParams, CheckResult, CheckStatus, CongruenceClaim, Report};
