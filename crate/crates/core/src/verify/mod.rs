//! The registry of named checks — machine-checkable series identities and
//! congruence families — plus the congruence-family checker.
//!
//! Every check builds both sides of its statement from the other modules and
//! compares them through the largest exponent both sides support. A failed
//! comparison is a first-class result carrying the smallest mismatching
//! exponent and both coefficient values: the registry doubles as a referee
//! for the claimed constants, and any wrong constant surfaces as a
//! reproducible witness rather than an exception.

mod registry;

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::regular_mod_table;

pub use registry::check_names;

/// Knobs shared by every check.
#[derive(Clone, Copy, Debug)]
pub struct CheckParams {
    /// Truncation order for series comparisons, in the outermost variable.
    pub order: usize,
    /// Index bound for congruence families: `n` runs over `0..=n_max`.
    pub n_max: usize,
    /// Hard cap on the number of coefficients any single check may allocate.
    pub max_order: usize,
}

impl CheckParams {
    pub const DEFAULT_ORDER: usize = 2000;
    pub const DEFAULT_N_MAX: usize = 200;
    pub const DEFAULT_MAX_ORDER: usize = 20_000_000;
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            order: Self::DEFAULT_ORDER,
            n_max: Self::DEFAULT_N_MAX,
            max_order: Self::DEFAULT_MAX_ORDER,
        }
    }
}

/// Pass, or the smallest mismatch with both values rendered in decimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail {
        exponent: u64,
        lhs: String,
        rhs: String,
    },
}

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub description: String,
    /// Residue modulus, when the check is a congruence.
    pub modulus: Option<u64>,
    /// Coefficients actually computed (series order or family table length).
    pub order: usize,
    /// Family index bound, when the check is a congruence family.
    pub n_max: Option<u64>,
    /// Largest exponent or index through which equality was established.
    pub verified_through: Option<u64>,
    pub status: CheckStatus,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Aggregated outcome of a suite run.
#[derive(Clone, Debug)]
pub struct Report {
    /// The name pattern the suite was selected by.
    pub suite: String,
    pub order: usize,
    pub n_max: Option<u64>,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(CheckResult::passed)
    }
}

/// One reference term `coeff * b_l(stride * n + offset)` on the right-hand
/// side of a congruence family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClaimTerm {
    pub coeff: u64,
    pub stride: u64,
    pub offset: u64,
}

/// Right-hand side of a congruence family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimRhs {
    /// `b_l(A n + B) == 0 (mod l)`
    Zero,
    /// `b_l(A n + B) == c * b_l(n) (mod l)`
    Scalar(u64),
    /// `b_l(A n + B) == sum_i c_i * b_l(s_i n + o_i) (mod l)`
    Linear(Vec<ClaimTerm>),
}

/// A congruence family `b_l(A n + B) == rhs (mod l)` for all `n >= 0`.
///
/// The stride and offset are arbitrary-precision: families whose stride
/// exceeds any computable table (such as the stride-5^24 progressions) stay
/// representable and are rejected at run time with the order they would have
/// needed.
#[derive(Clone, Debug)]
pub struct CongruenceClaim {
    modulus: u64,
    stride: BigUint,
    offset: BigUint,
    rhs: ClaimRhs,
    description: String,
}

impl CongruenceClaim {
    /// Panics unless `offset < stride`, the modulus is at least 2, and every
    /// right-hand coefficient is canonical mod `modulus`.
    pub fn new(
        modulus: u64,
        stride: BigUint,
        offset: BigUint,
        rhs: ClaimRhs,
        description: impl Into<String>,
    ) -> Self {
        assert!(modulus >= 2, "claim modulus must be at least 2");
        assert!(offset < stride, "claim offset must be below the stride");
        match &rhs {
            ClaimRhs::Zero => {}
            ClaimRhs::Scalar(c) => {
                assert!(*c < modulus, "scalar multiplier must be canonical");
            }
            ClaimRhs::Linear(terms) => {
                for t in terms {
                    assert!(t.coeff < modulus, "term multiplier must be canonical");
                    assert!(t.stride >= 1, "term stride must be at least 1");
                }
            }
        }
        CongruenceClaim {
            modulus,
            stride,
            offset,
            rhs,
            description: description.into(),
        }
    }

    pub fn scalar(
        modulus: u64,
        stride: u64,
        offset: u64,
        c: u64,
        description: impl Into<String>,
    ) -> Self {
        Self::new(
            modulus,
            BigUint::from(stride),
            BigUint::from(offset),
            ClaimRhs::Scalar(c),
            description,
        )
    }

    pub fn zero(modulus: u64, stride: u64, offset: u64, description: impl Into<String>) -> Self {
        Self::new(
            modulus,
            BigUint::from(stride),
            BigUint::from(offset),
            ClaimRhs::Zero,
            description,
        )
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

pub(crate) struct Outcome {
    status: CheckStatus,
    verified_through: Option<u64>,
    n_max: Option<u64>,
    order_used: usize,
}

/// Checks the claim for all `0 <= n <= n_max` from a single residue table.
pub(crate) fn family_outcome(
    claim: &CongruenceClaim,
    n_max: usize,
    max_order: usize,
) -> Result<Outcome> {
    let nb = BigUint::from(n_max);
    let mut required = &claim.stride * &nb + &claim.offset + 1u32;
    if let ClaimRhs::Linear(terms) = &claim.rhs {
        for t in terms {
            let need = BigUint::from(t.stride) * &nb + t.offset + 1u32;
            required = required.max(need);
        }
    }
    let required_u128 = required.to_u128().ok_or(Error::OutOfDeskScale {
        required: u128::MAX,
        cap: max_order,
    })?;
    if required_u128 > max_order as u128 {
        return Err(Error::OutOfDeskScale {
            required: required_u128,
            cap: max_order,
        });
    }
    let len = required_u128 as usize;
    let table = regular_mod_table(claim.modulus, len)?;
    let stride = claim.stride.to_usize().expect("stride fits with the table");
    let offset = claim.offset.to_usize().expect("offset fits with the table");
    let l = claim.modulus;
    for n in 0..=n_max {
        let lhs = u64::from(table[stride * n + offset]);
        let rhs = match &claim.rhs {
            ClaimRhs::Zero => 0,
            ClaimRhs::Scalar(c) => c * u64::from(table[n]) % l,
            ClaimRhs::Linear(terms) => terms.iter().fold(0u64, |acc, t| {
                (acc + t.coeff * u64::from(table[t.stride as usize * n + t.offset as usize])) % l
            }),
        };
        if lhs != rhs {
            return Ok(Outcome {
                status: CheckStatus::Fail {
                    exponent: n as u64,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                },
                verified_through: (n > 0).then(|| n as u64 - 1),
                n_max: Some(n_max as u64),
                order_used: len,
            });
        }
    }
    Ok(Outcome {
        status: CheckStatus::Pass,
        verified_through: Some(n_max as u64),
        n_max: Some(n_max as u64),
        order_used: len,
    })
}

/// Verifies a congruence family, timing it and reporting like a registry
/// check. Fails with [`Error::OutOfDeskScale`] when the required table would
/// exceed `max_order` coefficients.
pub fn verify_family(
    claim: &CongruenceClaim,
    n_max: usize,
    max_order: usize,
) -> Result<CheckResult> {
    let start = Instant::now();
    let outcome = family_outcome(claim, n_max, max_order)?;
    Ok(CheckResult {
        name: claim.description.clone(),
        description: claim.description.clone(),
        modulus: Some(claim.modulus),
        order: outcome.order_used,
        n_max: outcome.n_max,
        verified_through: outcome.verified_through,
        status: outcome.status,
        elapsed: start.elapsed(),
    })
}

/// Runs one registered check by name.
pub fn run_check(name: &str, params: &CheckParams) -> Result<CheckResult> {
    let def = registry::find(name).ok_or_else(|| Error::UnknownCheck(name.to_owned()))?;
    let start = Instant::now();
    let outcome = def.execute(params)?;
    Ok(CheckResult {
        name: def.name.to_owned(),
        description: def.description.to_owned(),
        modulus: def.modulus,
        order: outcome.order_used,
        n_max: outcome.n_max,
        verified_through: outcome.verified_through,
        status: outcome.status,
        elapsed: start.elapsed(),
    })
}

/// Runs every registered check whose name matches the `*`-wildcard pattern,
/// in parallel, and aggregates the results in registry order.
pub fn run_suite(pattern: &str, params: &CheckParams) -> Result<Report> {
    let selected: Vec<&str> = check_names()
        .into_iter()
        .filter(|name| glob_match(pattern, name))
        .collect();
    let results = selected
        .par_iter()
        .map(|name| run_check(name, params))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report {
        suite: pattern.to_owned(),
        order: params.order,
        n_max: Some(params.n_max as u64),
        results,
    })
}

/// Matches `pattern` against `name`, where `*` stands for any substring.
pub fn glob_match(pattern: &str, name: &str) -> bool {
    let pieces: Vec<&str> = pattern.split('*').collect();
    if pieces.len() == 1 {
        return pattern == name;
    }
    let mut rest = name;
    match rest.strip_prefix(pieces[0]) {
        Some(r) => rest = r,
        None => return false,
    }
    for piece in &pieces[1..pieces.len() - 1] {
        if piece.is_empty() {
            continue;
        }
        match rest.find(piece) {
            Some(i) => rest = &rest[i + piece.len()..],
            None => return false,
        }
    }
    rest.ends_with(pieces[pieces.len() - 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glob_semantics() {
        assert!(glob_match("id-*", "id-2.1"));
        assert!(!glob_match("id-*", "t13-gf"));
        assert!(glob_match("*", "anything"));
        assert!(glob_match("t17-*", "t17-quintic-expand"));
        assert!(glob_match("*gf", "t23-gf"));
        assert!(glob_match("t13-gf", "t13-gf"));
        assert!(!glob_match("", "id-2.1"));
        assert!(glob_match("", ""));
        assert!(glob_match("a*b", "ab"));
        assert!(!glob_match("a*b*b", "ab"));
        assert!(glob_match("a*b*b", "axbyb"));
    }

    #[test]
    fn empty_pattern_suite_is_vacuously_passing() {
        let report = run_suite("", &CheckParams::default()).unwrap();
        assert!(report.results.is_empty());
        assert!(report.all_pass());
    }

    #[test]
    fn unknown_check_is_an_error() {
        let err = run_check("no-such-check", &CheckParams::default()).unwrap_err();
        assert!(matches!(err, Error::UnknownCheck(_)));
        assert_eq!(err.to_string(), "unknown check `no-such-check`");
    }

    #[test]
    fn desk_scale_guard_names_the_required_order() {
        // the literal stride-5^24 family is representable but not computable
        let stride = BigUint::from(5u32).pow(24);
        let offset = (&stride - 1u32) * 11u32 / 12u32;
        let claim = CongruenceClaim::new(
            23,
            stride,
            offset,
            ClaimRhs::Scalar(14),
            "stride-5^24 family",
        );
        let err = verify_family(&claim, 10, CheckParams::DEFAULT_MAX_ORDER).unwrap_err();
        match err {
            Error::OutOfDeskScale { required, cap } => {
                assert!(required > 5u128.pow(24));
                assert_eq!(cap, CheckParams::DEFAULT_MAX_ORDER);
            }
            other => panic!("expected OutOfDeskScale, got {other:?}"),
        }
    }

    #[test]
    #[should_panic(expected = "offset must be below the stride")]
    fn claim_offset_must_be_reduced() {
        CongruenceClaim::scalar(13, 10, 10, 2, "bad");
    }

    #[test]
    fn family_checker_rejects_composite_modulus() {
        let claim = CongruenceClaim::scalar(15, 10, 3, 2, "composite");
        let err = verify_family(&claim, 5, 10_000).unwrap_err();
        assert!(matches!(err, Error::NotPrime(15)));
    }
}
