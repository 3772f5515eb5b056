//! Built-in smoke suite: the worked examples of every module plus the
//! structural invariants at reduced size. Used by `qcong selftest`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::congruence::mutation::{verify_mutated, Mutant};
use crate::congruence::*;
use crate::cyclofield::{
    case1_term, equals_rational, root_sum_case1, root_sum_case2, root_sum_case3, zeta_pow,
    CycloElement,
};
use crate::exactpoly::{mul_schoolbook, IntPoly, PolyError, RatPoly};
use crate::qcomb::{chi3, cyclotomic, gauss_binom, q_int, q_pochhammer};

/// One named check and whether it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfTestResult {
    pub name: &'static str,
    pub passed: bool,
}

fn p(cs: &[i64]) -> IntPoly {
    IntPoly::from_i64s(cs)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn exactpoly_examples() -> bool {
    let sq = |a: &IntPoly| a * a;
    &p(&[1, 1]) * &p(&[1, -1]) == p(&[1, 0, -1])
        && &p(&[1, 1, 1]) * &p(&[-1, 1]) == p(&[-1, 0, 0, 1])
        && &p(&[1, 1]) + &p(&[1, -1]) == p(&[2])
        && p(&[1, 1]).monomial_mul(2) == p(&[0, 0, 1, 1])
        && IntPoly::zero().monomial_mul(5).is_zero()
        && p(&[3]).monomial_mul(0) == p(&[3])
        && sq(&p(&[1, 1])) == p(&[1, 2, 1])
        && p(&[-1, 1]).pow(0) == IntPoly::one()
        && p(&[1, 1, 1]).pow(2) == p(&[1, 2, 3, 2, 1])
        && p(&[-1, 0, 0, 1]).divrem_monic(&p(&[1, 1, 1])) == Ok((p(&[-1, 1]), IntPoly::zero()))
        && p(&[0, 0, 0, 0, 1]).divrem_monic(&p(&[1, 0, 1])) == Ok((p(&[-1, 0, 1]), p(&[1])))
        && p(&[1, 1, 2, 1, 2, 1, 1]).divrem_monic(&p(&[1, 1, 1]).pow(2))
            == Ok((p(&[1, -1, 1]), IntPoly::zero()))
        && p(&[-1, 0, 0, 0, 0, 0, 1]).divexact(&p(&[1, -1, 1])) == Ok(p(&[-1, -1, 0, 1, 1]))
        && p(&[-1, 0, 1]).divexact(&p(&[-1, 1])) == Ok(p(&[1, 1]))
        && p(&[1, 0, 1]).divexact(&p(&[1, 1])) == Err(PolyError::NotDivisible)
        && p(&[1, 1, 2, 1, 1]).eval(&BigInt::from(1)) == BigInt::from(6)
        && IntPoly::zero().eval(&BigInt::from(7)).is_zero()
        && p(&[1, 1]).eval(&BigInt::from(-1)).is_zero()
        && p(&[0, 1, -1]).scalar_mul(&rat(1, 2))
            == RatPoly::from_coeffs(vec![rat(0, 1), rat(1, 2), rat(-1, 2)])
        && p(&[0, 6]).scalar_mul(&rat(1, 6)) == IntPoly::q().to_rat()
        && IntPoly::zero().scalar_mul(&rat(-3, 7)).is_zero()
}

fn exactpoly_invariants() -> bool {
    // deterministic pseudo-random operands from a linear congruential walk
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = |len: usize| {
        let cs: Vec<i64> = (0..len)
            .map(|_| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                ((state >> 33) % 1999) as i64 - 999
            })
            .collect();
        IntPoly::from_i64s(&cs)
    };
    (0..50).all(|i| {
        let (a, b, c) = (next(1 + i % 17), next(1 + (i * 7) % 17), next(80 + i));
        let monic = &next(i % 5) + &IntPoly::monomial(BigInt::one(), 5);
        let ring = &(&a + &b) + &c == &a + &(&b + &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &a * &b == &b * &a;
        let round_trip = c.divrem_monic(&monic).is_ok_and(|(quot, rem)| {
            &(&quot * &monic) + &rem == c && rem.degree().is_none_or(|d| d < 5)
        });
        let paths = (&c * &c).coeffs() == mul_schoolbook(c.coeffs(), c.coeffs()).as_slice()
            && c.mul_with_threshold(&a, 3) == &c * &a;
        let x = BigInt::from(i as i64 - 25);
        let hom = (&a * &c).eval(&x) == a.eval(&x) * c.eval(&x);
        ring && round_trip && paths && hom
    })
}

fn qcomb_examples() -> bool {
    q_int(1) == IntPoly::one()
        && q_int(3) == p(&[1, 1, 1])
        && q_int(0).is_zero()
        && q_pochhammer(0) == IntPoly::one()
        && q_pochhammer(1) == p(&[1, -1])
        && q_pochhammer(2) == p(&[1, -1, -1, 1])
        && gauss_binom(2, 1) == p(&[1, 1])
        && gauss_binom(4, 2) == p(&[1, 1, 2, 1, 1])
        && gauss_binom(3, 5).is_zero()
        && *cyclotomic(1) == p(&[-1, 1])
        && *cyclotomic(2) == p(&[1, 1])
        && *cyclotomic(6) == p(&[1, -1, 1])
        && chi3(1).value() == 1
        && chi3(2).value() == -1
        && chi3(-4).value() == -1
}

fn qcomb_invariants() -> bool {
    let binomials = (0..=24i64).all(|n| {
        (0..=n).all(|k| {
            let b = gauss_binom(n, k);
            let top = (k * (n - k)) as usize;
            let palindromic = (0..=top).all(|i| b.coeff(i) == b.coeff(top - i));
            let symmetric = b == gauss_binom(n, n - k);
            let pascal = k == 0
                || b == &gauss_binom(n - 1, k - 1).monomial_mul((n - k) as usize)
                    + &gauss_binom(n - 1, k);
            let at_one = b.eval(&BigInt::one()) == binomial(n as u64, k as u64);
            let quotient = &(&b * &q_pochhammer(k as usize)) * &q_pochhammer((n - k) as usize)
                == q_pochhammer(n as usize);
            palindromic && symmetric && pascal && at_one && quotient
        })
    });
    let cyclotomics = (1..=60u64).all(|n| {
        let product = (1..=n)
            .filter(|d| n % d == 0)
            .fold(IntPoly::one(), |acc, d| &acc * &*cyclotomic(d));
        let qn_minus_one = &IntPoly::monomial(BigInt::one(), n as usize) - &IntPoly::one();
        let prime_power = (2..=n).find(|d| n % d == 0).filter(|&q| {
            let mut m = n;
            while m % q == 0 {
                m /= q;
            }
            m == 1
        });
        let at_one = cyclotomic(n).eval(&BigInt::one());
        let expected = match (n, prime_power) {
            (1, _) => BigInt::zero(),
            (_, Some(q)) => BigInt::from(q),
            _ => BigInt::one(),
        };
        product == qn_minus_one && at_one == expected
    });
    binomials && cyclotomics
}

fn cyclofield_examples() -> Result<bool, crate::cyclofield::FieldError> {
    let el = |m: u64, cs: &[i64]| CycloElement::from_int_poly(m, &IntPoly::from_i64s(cs));
    let minus_one = |m: u64| CycloElement::from_rational(m, rat(-1, 1));
    let zeta4 = zeta_pow(4, 1)?;
    let zeta3 = zeta_pow(3, 1)?;
    let checks = [
        el(4, &[0, 0, 1])? == minus_one(4)?,
        el(3, &[0, 0, 0, 1])? == CycloElement::one(3)?,
        el(1, &[5, 1])? == CycloElement::from_rational(1, rat(6, 1))?,
        zeta4.mul(&zeta4)? == minus_one(4)?,
        zeta3.add(&zeta_pow(3, 2)?)? == minus_one(3)?,
        zeta_pow(5, 2)?.mul(&zeta_pow(5, 3)?)? == CycloElement::one(5)?,
        el(4, &[1, -1])?.inverse()? == el(4, &[1, 1])?.scale(&rat(1, 2)),
        CycloElement::one(3)?.inverse()? == CycloElement::one(3)?,
        CycloElement::zero(5)?.inverse().is_err(),
        zeta_pow(4, 6)? == minus_one(4)?,
        zeta_pow(7, 0)? == CycloElement::one(7)?,
        zeta_pow(3, -1)? == el(3, &[-1, -1])?,
        equals_rational(&root_sum_case1(1)?, &rat(0, 1)),
        equals_rational(&root_sum_case1(2)?, &rat(0, 1)),
        equals_rational(&root_sum_case1(5)?, &rat(0, 1)),
        equals_rational(&root_sum_case2(1)?, &rat(-1, 2)),
        equals_rational(&root_sum_case2(2)?, &rat(-1, 1)),
        equals_rational(&root_sum_case2(4)?, &rat(-2, 1)),
        equals_rational(&root_sum_case3(1)?, &rat(-1, 1)),
        equals_rational(&root_sum_case3(2)?, &rat(-3, 2)),
        equals_rational(&root_sum_case3(3)?, &rat(-2, 1)),
    ];
    Ok(checks.iter().all(|&b| b))
}

fn cyclofield_invariants() -> Result<bool, crate::cyclofield::FieldError> {
    for m in 1..=12u64 {
        for d in (1..=2 * m as i64).filter(|d| d % m as i64 != 0) {
            let mut sum = CycloElement::zero(m)?;
            for k in 0..m as i64 {
                sum = sum.add(&zeta_pow(m, k * d)?)?;
            }
            if !sum.is_zero() {
                return Ok(false);
            }
        }
        let a = CycloElement::from_int_poly(m, &p(&[2, -1, 3]))?;
        if !a.is_zero() && a.mul(&a.inverse()?)? != CycloElement::one(m)? {
            return Ok(false);
        }
    }
    for n in 1..=6u64 {
        for k in 1..=n as i64 {
            let pair = case1_term(n, n as i64 - k)?.add(&case1_term(n, -k)?)?;
            if !pair.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn congruence_examples() -> bool {
    let zero_mod = check_zero_mod(&p(&[1, 2, 1]), 2, 2)
        && !check_zero_mod(&p(&[1, 1]), 2, 2)
        && check_zero_mod(&p(&[1, 1, 2, 1, 2, 1, 1]), 3, 2);
    let rhs = rhs_guo(1) == IntPoly::one() && rhs_guo(2) == p(&[0, -1]) && rhs_guo(6).is_zero();
    let sweeps = (1..=4).all(|n| {
        verify_thm12(n).holds()
            && verify_thm13(n).holds()
            && verify_eq41(n).holds()
            && verify_identity31(n).holds()
            && verify_thm11(n).holds()
            && verify_eq21_equiv(n).holds()
    });
    let chu = (0..=2).all(|m| verify_chu_vandermonde(m).holds());
    let lemma = verify_lemma32(3, 1).is_ok_and(|r| r.holds())
        && verify_lemma32(2, 1).is_ok_and(|r| r.holds())
        && verify_lemma32(5, 5).is_err();
    let eq38 = verify_eq38(2).holds()
        && verify_eq38(5).holds()
        && verify_eq38(6).status == Status::Skipped;
    let classical = classical_sum_central(5).is_ok_and(|r| r.holds())
        && classical_sum_central(7).is_ok_and(|r| r.holds())
        && classical_sum_central(4) == Err(VerifyError::NotPrime(4))
        && classical_double_binom(5, 1).is_ok_and(|r| r.holds())
        && classical_double_binom(7, 1).is_ok_and(|r| r.holds())
        && classical_double_binom(5, 2).is_ok_and(|r| r.holds())
        && classical_harmonic(1, 5).is_ok_and(|r| r.holds())
        && classical_harmonic(3, 5).is_ok_and(|r| r.holds())
        && classical_harmonic(2, 7) == Err(VerifyError::EvenN(2));
    zero_mod && rhs && sweeps && chu && lemma && eq38 && classical
}

fn congruence_invariants() -> bool {
    let endpoint = (2..=15).all(|n| verify_thm11(n).holds() && verify_eq21_equiv(n).holds());
    let chain = (1..=15).all(|n| {
        verify_eq41(n).holds()
            && verify_chu_vandermonde(n).holds()
            && verify_thm12(n).holds()
            && verify_thm13(n).holds()
    });
    let lemma = (2..=15).all(|n| verify_lemma32_row(n).iter().all(|r| r.holds()));
    let bridge = (2..=31u64).filter(|&x| is_prime(x)).all(|x| {
        let at_one = (&thm12_lhs(x) - &rhs_guo(x)).eval(&BigInt::one());
        (at_one % BigInt::from(x * x)).is_zero()
    });
    let dp = [3u64, 5, 7, 11, 13].iter().all(|&x| {
        [1u64, 3].iter().filter(|&&k| x > k).all(|&k| {
            classical_harmonic(k, x)
                .is_ok_and(|r| r.holds() == classical_harmonic_brute_force(k, x).is_zero())
        })
    });
    let skips = (1..=30u64).all(|n| {
        (verify_eq38(n).status == Status::Skipped) == (n % 3 == 0)
            && rhs_guo(n).is_zero() == (n % 3 == 0)
    });
    endpoint && chain && lemma && bridge && dp && skips
}

fn negative_controls() -> bool {
    Mutant::ALL
        .iter()
        .all(|&m| (1..=10).any(|n| !verify_mutated(m, n).holds()))
}

/// Runs every check; order is fixed.
pub fn run() -> Vec<SelfTestResult> {
    let ok = |r: Result<bool, crate::cyclofield::FieldError>| r.unwrap_or(false);
    vec![
        SelfTestResult {
            name: "exactpoly examples",
            passed: exactpoly_examples(),
        },
        SelfTestResult {
            name: "exactpoly invariants",
            passed: exactpoly_invariants(),
        },
        SelfTestResult {
            name: "qcomb examples",
            passed: qcomb_examples(),
        },
        SelfTestResult {
            name: "qcomb invariants",
            passed: qcomb_invariants(),
        },
        SelfTestResult {
            name: "cyclofield examples",
            passed: ok(cyclofield_examples()),
        },
        SelfTestResult {
            name: "cyclofield invariants",
            passed: ok(cyclofield_invariants()),
        },
        SelfTestResult {
            name: "congruence examples",
            passed: congruence_examples(),
        },
        SelfTestResult {
            name: "congruence invariants",
            passed: congruence_invariants(),
        },
        SelfTestResult {
            name: "negative controls",
            passed: negative_controls(),
        },
    ]
}

#[cfg(test)]
mod tests {
    #[test]
    fn selftest_passes() {
        for r in super::run() {
            assert!(r.passed, "{}", r.name);
        }
    }
}
