//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Every comparison is exact.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rayon::prelude::*;

use qcong_core::congruence::mutation::{verify_mutated, verify_thm13_mutated, Mutant};
use qcong_core::congruence::*;
use qcong_core::cyclofield::{
    case1_term, equals_rational, expected_case_value, root_sum_case1, root_sum_case2,
    root_sum_case3, zeta_pow, CycloElement,
};
use qcong_core::exactpoly::{mul_karatsuba, mul_schoolbook, IntPoly};
use qcong_core::qcomb::{cyclotomic, gauss_binom, q_pochhammer};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Runs `check` over `items` and lists the ones that fail.
fn sweep<T: Send + Sync + Copy + std::fmt::Debug>(
    label: &str,
    items: Vec<T>,
    check: impl Fn(T) -> bool + Sync,
) -> Result<usize, String> {
    let failures: Vec<T> = items.par_iter().copied().filter(|&x| !check(x)).collect();
    if failures.is_empty() {
        Ok(items.len())
    } else {
        Err(format!("{label} fails at {failures:?}"))
    }
}

fn join(parts: Vec<Result<usize, String>>) -> Outcome {
    let mut total = 0;
    let mut errors = Vec::new();
    for p in parts {
        match p {
            Ok(n) => total += n,
            Err(e) => errors.push(e),
        }
    }
    if errors.is_empty() {
        Ok(format!("{total} checks"))
    } else {
        Err(errors.join("; "))
    }
}

fn primes(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&p| is_prime(p)).collect()
}

fn criterion_1() -> Outcome {
    join(vec![sweep("thm12", (1..=200).collect(), |n| {
        verify_thm12(n).holds()
    })])
}

fn criterion_2() -> Outcome {
    join(vec![
        sweep("thm13", (1..=60).collect(), |n| verify_thm13(n).holds()),
        sweep("eq41", (1..=100).collect(), |n| verify_eq41(n).holds()),
    ])
}

fn criterion_3() -> Outcome {
    join(vec![sweep("thm11/eq21", (1..=150).collect(), |n| {
        let a = verify_thm11(n);
        let b = verify_eq21_equiv(n);
        a.holds() && b.holds() && a.status == b.status
    })])
}

fn criterion_4() -> Outcome {
    let case = |c: u8| {
        move |n: u64| {
            let value = match c {
                1 => root_sum_case1(n),
                2 => root_sum_case2(n),
                _ => root_sum_case3(n),
            };
            value.is_ok_and(|v| equals_rational(&v, &expected_case_value(c, n)))
        }
    };
    join(vec![
        sweep("case1", (1..=40).collect(), case(1)),
        sweep("case2", (1..=40).collect(), case(2)),
        sweep("case3", (1..=40).collect(), case(3)),
        sweep("case1 symmetry", (1..=20).collect(), |n: u64| {
            (1..=n as i64).all(|k| match (case1_term(n, n as i64 - k), case1_term(n, -k)) {
                (Ok(a), Ok(b)) => a.add(&b).is_ok_and(|s| s.is_zero()),
                _ => false,
            })
        }),
    ])
}

fn criterion_5() -> Outcome {
    join(vec![
        sweep("id31", (1..=100).collect(), |n| {
            verify_identity31(n).holds()
        }),
        sweep("lemma32", (2..=80).collect(), |n| {
            verify_lemma32_row(n).iter().all(|r| r.holds())
        }),
        sweep("eq38", (1..=200).filter(|n| n % 3 != 0).collect(), |n| {
            verify_eq38(n).holds()
        }),
    ])
}

fn criterion_6() -> Outcome {
    join(vec![sweep("chu", (0..=100).collect(), |m| {
        verify_chu_vandermonde(m).holds()
    })])
}

fn criterion_7() -> Outcome {
    let holds = |r: Result<VerificationRecord, VerifyError>| r.is_ok_and(|r| r.holds());
    let harmonic: Vec<(u64, u64)> = [1u64, 3, 5]
        .iter()
        .flat_map(|&k| primes(k + 1, 199).into_iter().map(move |p| (k, p)))
        .collect();
    join(vec![
        sweep("central sum mod p²", primes(5, 499), |p| {
            holds(classical_sum_central(p))
        }),
        sweep("double sum mod p", primes(5, 97), |p| {
            holds(classical_double_binom(p, 1))
        }),
        sweep("double sum mod p²", primes(5, 61), |p| {
            holds(classical_double_binom(p, 2))
        }),
        sweep("harmonic sum (nodd, p)", harmonic, |(k, p)| {
            holds(classical_harmonic(k, p))
        }),
        sweep("harmonic sum, nodd = 1", primes(5, 997), |p| {
            holds(classical_harmonic(1, p))
        }),
    ])
}

fn small_poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-999i64..=999, 0..=max_len).prop_map(|c| IntPoly::from_i64s(&c))
}

fn property(cases: u32, strategy: impl Strategy<Value = bool>) -> Result<usize, String> {
    let mut runner = TestRunner::new(Config {
        failure_persistence: None,
        ..Config::with_cases(cases)
    });
    runner
        .run(&strategy, |ok| {
            prop_assert!(ok);
            Ok(())
        })
        .map(|_| cases as usize)
        .map_err(|e| e.to_string())
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_8() -> Outcome {
    let binomials = sweep("q-binomial invariants", (0..=60i64).collect(), |n| {
        (0..=n).all(|k| {
            let b = gauss_binom(n, k);
            let top = (k * (n - k)) as usize;
            let palindromic = (0..=top).all(|i| b.coeff(i) == b.coeff(top - i));
            let symmetric = b == gauss_binom(n, n - k);
            let pascal = k == 0
                || (b
                    == &gauss_binom(n - 1, k - 1)
                        + &gauss_binom(n - 1, k).monomial_mul(k as usize)
                    && b == &gauss_binom(n - 1, k - 1).monomial_mul((n - k) as usize)
                        + &gauss_binom(n - 1, k));
            let at_one = b.eval(&BigInt::one()) == binomial(n as u64, k as u64);
            palindromic && symmetric && pascal && at_one
        })
    });
    let quotient = sweep("quotient definition", (0..=40i64).collect(), |n| {
        (0..=n).all(|k| {
            &(&gauss_binom(n, k) * &q_pochhammer(k as usize)) * &q_pochhammer((n - k) as usize)
                == q_pochhammer(n as usize)
        })
    });
    let cyclo = sweep(
        "cyclotomic product and Φ(1)",
        (1..=300u64).collect(),
        |n| {
            let product = (1..=n)
                .filter(|d| n % d == 0)
                .fold(IntPoly::one(), |acc, d| &acc * &*cyclotomic(d));
            let qn_minus_one = &IntPoly::monomial(BigInt::one(), n as usize) - &IntPoly::one();
            let smallest = (2..=n).find(|d| n % d == 0);
            let expected = match smallest {
                None => BigInt::zero(),
                Some(p) => {
                    let mut m = n;
                    while m % p == 0 {
                        m /= p;
                    }
                    if m == 1 {
                        BigInt::from(p)
                    } else {
                        BigInt::one()
                    }
                }
            };
            product == qn_minus_one && cyclotomic(n).eval(&BigInt::one()) == expected
        },
    );
    let ring = property(
        1000,
        (small_poly(17), small_poly(17), small_poly(17)).prop_map(|(a, b, c)| {
            &(&a + &b) + &c == &a + &(&b + &c)
                && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
                && &a * &b == &b * &a
        }),
    );
    let divrem = property(
        500,
        (small_poly(40), small_poly(12)).prop_map(|(a, low)| {
            let d = low.degree().map_or(0, |d| d + 1);
            let b = &low + &IntPoly::monomial(BigInt::one(), d);
            a.divrem_monic(&b)
                .is_ok_and(|(q, r)| &(&q * &b) + &r == a && r.degree().is_none_or(|rd| rd < d))
        }),
    );
    let karatsuba = property(
        500,
        (small_poly(120), small_poly(120), 1usize..48).prop_map(|(a, b, t)| {
            let school = IntPoly::from_coeffs(mul_schoolbook(a.coeffs(), b.coeffs()));
            let kara = IntPoly::from_coeffs(mul_karatsuba(a.coeffs(), b.coeffs(), t));
            school == kara && &a * &b == school
        }),
    );
    let eval = property(
        500,
        (small_poly(17), small_poly(17), -50i64..50).prop_map(|(a, b, x)| {
            let x = BigInt::from(x);
            (&a * &b).eval(&x) == a.eval(&x) * b.eval(&x)
        }),
    );
    let field = property(
        300,
        (1u64..=30, prop::collection::vec(-20i64..=20, 1..30)).prop_map(|(m, c)| {
            let a = CycloElement::from_int_poly(m, &IntPoly::from_i64s(&c)).expect("valid order");
            a.is_zero()
                || a.inverse()
                    .and_then(|inv| a.mul(&inv))
                    .is_ok_and(|p| p == CycloElement::one(m).expect("valid order"))
        }),
    );
    let powers = property(
        300,
        (1u64..=30, -500i64..500, -500i64..500).prop_map(|(m, e1, e2)| {
            let lhs = zeta_pow(m, e1).and_then(|a| a.mul(&zeta_pow(m, e2)?));
            lhs.ok() == zeta_pow(m, e1 + e2).ok()
        }),
    );
    let geometric = sweep("geometric sums", (1..=30u64).collect(), |m| {
        (1..=3 * m as i64).filter(|d| d % m as i64 != 0).all(|d| {
            (0..m as i64)
                .try_fold(CycloElement::zero(m).expect("valid order"), |acc, k| {
                    acc.add(&zeta_pow(m, k * d)?)
                })
                .is_ok_and(|s| s.is_zero())
        })
    });
    let dp = sweep(
        "harmonic DP vs enumeration",
        [2u64, 3, 5, 7, 11, 13]
            .iter()
            .flat_map(|&p| {
                [1u64, 3]
                    .into_iter()
                    .filter(move |&k| p > k)
                    .map(move |k| (k, p))
            })
            .collect(),
        |(k, p)| {
            classical_harmonic(k, p)
                .is_ok_and(|r| r.holds() == classical_harmonic_brute_force(k, p).is_zero())
        },
    );
    join(vec![
        binomials, quotient, cyclo, ring, divrem, karatsuba, eval, field, powers, geometric, dp,
    ])
}

fn criterion_9() -> Outcome {
    let mut parts: Vec<Result<usize, String>> = Mutant::ALL
        .iter()
        .map(|&m| {
            if (1..=10).any(|n| !verify_mutated(m, n).holds()) {
                Ok(1)
            } else {
                Err(format!("{m:?} leaves every verdict at holds for n ≤ 10"))
            }
        })
        .collect();
    for m in [Mutant::RhsSign, Mutant::RhsExponent] {
        parts.push(if (1..=10).any(|n| !verify_thm13_mutated(m, n).holds()) {
            Ok(1)
        } else {
            Err(format!("{m:?} not caught by the double sum"))
        });
    }
    // The unmutated checks hold on the same range.
    parts.push(sweep("original", (1..=10).collect(), |n| {
        verify_mutated(Mutant::Original, n).holds()
            && verify_thm11(n).holds()
            && verify_identity31(n).holds()
    }));
    join(parts)
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("thm12 sweep n ≤ 200", criterion_1),
        ("thm13 n ≤ 60, eq41 n ≤ 100", criterion_2),
        ("thm11 and eq21 agree, n ≤ 150", criterion_3),
        (
            "root-of-unity sums n ≤ 40, case-1 symmetry n ≤ 20",
            criterion_4,
        ),
        ("id31 n ≤ 100, lemma32 n ≤ 80, eq38 n ≤ 200", criterion_5),
        ("q-Chu-Vandermonde m ≤ 100", criterion_6),
        ("classical congruences", criterion_7),
        ("structural properties", criterion_8),
        ("negative controls", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(summary) => println!("criterion {}: PASS  {name} ({summary}, {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
