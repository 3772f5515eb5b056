//! Verification engine: builds both sides of each congruence exactly and
//! decides it by exact division.
//!
//! Congruences modulo `Φ_n(q)^e` are decided on integer polynomials. Rational
//! scalars and unit denominators (powers of `q`, factors `1 − q^k` with
//! `n ∤ k`) are cleared first; this never changes the verdict because `Φ_n`
//! is monic and primitive, and the cleared factors are units modulo `Φ_n^e`.

mod classical;
pub mod mutation;
mod qsums;
mod record;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::exactpoly::IntPoly;
use crate::qcomb::cyclotomic;

pub use classical::{
    classical_double_binom, classical_harmonic, classical_harmonic_brute_force,
    classical_sum_central, is_prime,
};
pub use qsums::{
    e_exponent, id31_exponent, rhs_guo, thm12_lhs, thm13_lhs, verify_case, verify_chu_vandermonde,
    verify_eq21_equiv, verify_eq38, verify_eq41, verify_identity31, verify_lemma32,
    verify_lemma32_row, verify_thm11, verify_thm12, verify_thm13,
};
pub use record::{digest, Status, Theorem, VerificationRecord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} is below the minimum {min}")]
    PrimeTooSmall { p: u64, min: u64 },
    #[error("the harmonic-sum depth must be odd, got {0}")]
    EvenN(u64),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

/// Default cap on the degree of any polynomial a single check may build.
pub const DEFAULT_MAX_DEGREE: usize = 250_000;

/// Digest reported when a check is refused by the degree guard.
pub const DEGREE_GUARD_DIGEST: &str = "degree-guard";

/// Whether `Φ_n(q)^e` divides `p`.
///
/// `p` is first reduced modulo `(qⁿ − 1)^e`, which `Φ_n^e` divides, so the
/// dense division only ever sees a dividend of degree below `e·n`.
pub fn check_zero_mod(p: &IntPoly, n: u64, e: u32) -> bool {
    residue_mod(p, n, e).is_zero()
}

/// Canonical remainder of `p` modulo `Φ_n(q)^e`.
pub fn residue_mod(p: &IntPoly, n: u64, e: u32) -> IntPoly {
    assert!(n >= 1, "Φ_n is indexed from 1");
    assert!(e >= 1, "the modulus exponent must be positive");
    let folded = p.rem_qn_minus_one_pow(n as usize, e);
    let modulus = cyclotomic_power(n, e);
    folded.rem_monic(&modulus).expect("Φ_n^e is monic")
}

fn cyclotomic_power(n: u64, e: u32) -> IntPoly {
    let phi: Arc<IntPoly> = cyclotomic(n);
    phi.pow(e)
}

/// Arithmetic in ℤ[q]/((qⁿ − 1)²), whose elements are kept below degree 2n.
/// Every congruence modulo `Φ_n²` can be decided on these residues.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SquareFold {
    n: usize,
}

impl SquareFold {
    pub(crate) fn new(n: u64) -> Self {
        assert!(n >= 1);
        SquareFold { n: n as usize }
    }

    pub(crate) fn reduce(&self, p: &IntPoly) -> IntPoly {
        p.rem_qn_minus_one_pow(self.n, 2)
    }

    pub(crate) fn mul(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        self.reduce(&(a * b))
    }

    /// `q^s · p`, using `q^(an+b) ≡ q^b ((1 − a) + a·qⁿ)`.
    pub(crate) fn shift(&self, p: &IntPoly, s: u64) -> IntPoly {
        let mut acc = Vec::new();
        self.shift_into(&mut acc, p, s);
        IntPoly::from_coeffs(acc)
    }

    /// Adds `q^s · p` into the coefficient vector `acc` (length grown to 2n).
    pub(crate) fn shift_into(&self, acc: &mut Vec<BigInt>, p: &IntPoly, s: u64) {
        let n = self.n as u64;
        if acc.len() < 2 * self.n {
            acc.resize(2 * self.n, BigInt::zero());
        }
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = i as u64 + s;
            let (a, b) = (t / n, (t % n) as usize);
            match a {
                0 => acc[b] += c,
                1 => acc[b + self.n] += c,
                _ => {
                    acc[b] -= c * (a - 1);
                    acc[b + self.n] += c * a;
                }
            }
        }
    }

    pub(crate) fn monomial(&self, c: i64, s: u64) -> IntPoly {
        self.shift(&IntPoly::constant(BigInt::from(c)), s)
    }
}

/// Limits applied to every check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub max_degree: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

/// One (theorem, parameters) instance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Check {
    pub theorem: Theorem,
    pub params: Vec<i64>,
}

impl Check {
    pub fn new(theorem: Theorem, params: Vec<i64>) -> Self {
        Check { theorem, params }
    }

    /// A priori bound on the largest polynomial degree the check builds.
    pub fn degree_bound(&self) -> usize {
        let n = self.params.first().copied().unwrap_or(0).max(0) as usize;
        match self.theorem {
            Theorem::Thm12 | Theorem::Eq41 | Theorem::Thm11 | Theorem::Eq21 => n * n + 2 * n,
            Theorem::Thm13 => 4 * n,
            Theorem::Chu => 2 * n * n + 2 * n,
            Theorem::Id31 | Theorem::Lemma32 => 2 * n * n + 2 * n,
            Theorem::Eq38 => n * n + n,
            Theorem::Case1 | Theorem::Case2 | Theorem::Case3 => 6 * n + 4,
            Theorem::Classical11 | Theorem::Classical12 | Theorem::Classical13 => 0,
        }
    }
}

/// Run one check under `opts`. Parameter errors become `fails` records
/// whose digest names the error.
pub fn run_check(check: &Check, opts: &Options) -> VerificationRecord {
    if check.degree_bound() > opts.max_degree {
        return VerificationRecord::new(check.theorem, check.params.clone(), Status::Fails)
            .with_digest(DEGREE_GUARD_DIGEST.to_string());
    }
    let p = &check.params;
    let arg = |i: usize| p.get(i).copied().unwrap_or(0);
    let n = || arg(0).max(1) as u64;
    let result: Result<VerificationRecord, VerifyError> = match check.theorem {
        Theorem::Thm11 => Ok(verify_thm11(n())),
        Theorem::Eq21 => Ok(verify_eq21_equiv(n())),
        Theorem::Thm12 => Ok(verify_thm12(n())),
        Theorem::Thm13 => Ok(verify_thm13(n())),
        Theorem::Eq41 => Ok(verify_eq41(n())),
        Theorem::Chu => Ok(verify_chu_vandermonde(arg(0).max(0) as u64)),
        Theorem::Id31 => Ok(verify_identity31(n())),
        Theorem::Lemma32 => verify_lemma32(n(), arg(1).max(0) as u64),
        Theorem::Eq38 => Ok(verify_eq38(n())),
        Theorem::Case1 => Ok(verify_case(1, n())),
        Theorem::Case2 => Ok(verify_case(2, n())),
        Theorem::Case3 => Ok(verify_case(3, n())),
        Theorem::Classical11 => classical_sum_central(arg(0).max(0) as u64),
        Theorem::Classical12 => classical_double_binom(arg(0).max(0) as u64, arg(1).max(0) as u32),
        Theorem::Classical13 => classical_harmonic(arg(0).max(0) as u64, arg(1).max(0) as u64),
    };
    result.unwrap_or_else(|e| {
        VerificationRecord::new(check.theorem, check.params.clone(), Status::Fails)
            .with_digest(format!("error: {e}"))
    })
}
