//! The q = 1 shadows: congruences for ordinary binomial sums modulo primes
//! and prime squares, in machine-integer modular arithmetic.

use super::record::{timed, Outcome, Theorem, VerificationRecord};
use super::VerifyError;
use crate::qcomb::chi3;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn require_prime(p: u64, min: u64) -> Result<(), VerifyError> {
    if !is_prime(p) {
        return Err(VerifyError::NotPrime(p));
    }
    if p < min {
        return Err(VerifyError::PrimeTooSmall { p, min });
    }
    Ok(())
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

/// Inverse of `a` modulo `m`; `a` must be a unit.
fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "{a} is not a unit modulo {m}");
    t0.rem_euclid(m as i128) as u64
}

/// `χ(p)` as a residue modulo `m`.
fn chi_residue(p: u64, m: u64) -> u64 {
    match chi3(p as i64).value() {
        1 => 1 % m,
        -1 => m - 1,
        _ => 0,
    }
}

/// `∑_{k<p} C(2k, k) ≡ (p/3) (mod p²)` for primes `p ≥ 5`.
pub fn classical_sum_central(p: u64) -> Result<VerificationRecord, VerifyError> {
    require_prime(p, 5)?;
    Ok(timed(Theorem::Classical11, vec![p as i64], || {
        let m = p * p;
        let mut c = 1u64;
        let mut sum = 0u64;
        for k in 0..p {
            sum = add_mod(sum, c, m);
            if k + 1 < p {
                // C(2k+2, k+1) = C(2k, k)·2(2k+1)/(k+1)
                c = mul_mod(c, mul_mod(2 * (2 * k + 1), inv_mod(k + 1, m), m), m);
            }
        }
        verdict(sum, chi_residue(p, m))
    }))
}

/// `∑_{i,j<p} C(i+j, i)² ≡ (p/3) (mod p^e)` for primes `p ≥ 5`, `e ∈ {1, 2}`.
pub fn classical_double_binom(p: u64, e: u32) -> Result<VerificationRecord, VerifyError> {
    require_prime(p, 5)?;
    if !(1..=2).contains(&e) {
        return Err(VerifyError::OutOfRange(format!("modulus exponent {e}")));
    }
    Ok(timed(
        Theorem::Classical12,
        vec![p as i64, e as i64],
        || {
            let m = p.pow(e);
            // row[j] = C(i+j, i), advanced in i
            let mut row = vec![1 % m; p as usize];
            let mut sum = 0u64;
            for i in 0..p {
                if i > 0 {
                    for j in 1..row.len() {
                        row[j] = add_mod(row[j], row[j - 1], m);
                    }
                }
                for &c in &row {
                    sum = add_mod(sum, mul_mod(c, c, m), m);
                }
            }
            verdict(sum, chi_residue(p, m))
        },
    ))
}

/// `∑_{0<i₁<…<i_n<p} χ(i₁)(−1)^i₁ / (i₁⋯i_n) ≡ 0 (mod p)` for odd `n` and
/// primes `p ≥ n + 1`.
///
/// Suffix sums `E_t(j) = ∑_{j<i₁<…<i_t<p} 1/(i₁⋯i_t)` satisfy
/// `E_t(j) = E_t(j+1) + E_{t−1}(j+1)/(j+1)`, giving O(p·n) work.
pub fn classical_harmonic(nodd: u64, p: u64) -> Result<VerificationRecord, VerifyError> {
    if nodd.is_multiple_of(2) {
        return Err(VerifyError::EvenN(nodd));
    }
    require_prime(p, nodd + 1)?;
    Ok(timed(
        Theorem::Classical13,
        vec![nodd as i64, p as i64],
        || verdict(harmonic_dp(nodd, p), 0),
    ))
}

fn harmonic_dp(nodd: u64, p: u64) -> u64 {
    let depth = nodd as usize;
    // suffix[t] = E_t(j) for the current j, starting at j = p − 1
    let mut suffix = vec![0u64; depth];
    suffix[0] = 1 % p;
    let mut total = 0u64;
    for j in (1..p).rev() {
        total = add_mod(total, lead_term(j, p, suffix[depth - 1]), p);
        let inv = inv_mod(j, p);
        for t in (1..depth).rev() {
            suffix[t] = add_mod(suffix[t], mul_mod(inv, suffix[t - 1], p), p);
        }
    }
    total
}

/// `χ(j)(−1)^j / j · rest (mod p)`.
fn lead_term(j: u64, p: u64, rest: u64) -> u64 {
    let chi = chi3(j as i64).value() * if j.is_multiple_of(2) { 1 } else { -1 };
    let v = mul_mod(inv_mod(j, p), rest, p);
    match chi {
        1 => v,
        -1 => (p - v) % p,
        _ => 0,
    }
}

/// Direct enumeration of every chain `i₁ < … < i_n`; exponential, for
/// cross-checking the suffix-sum evaluation on small primes.
pub fn classical_harmonic_brute_force(nodd: u64, p: u64) -> u64 {
    fn chains(start: u64, left: u64, p: u64, prod_inv: u64) -> u64 {
        if left == 0 {
            return prod_inv;
        }
        (start..p).fold(0, |acc, i| {
            add_mod(
                acc,
                chains(i + 1, left - 1, p, mul_mod(prod_inv, inv_mod(i, p), p)),
                p,
            )
        })
    }
    (1..p).fold(0, |acc, i1| {
        let rest = chains(i1 + 1, nodd - 1, p, 1);
        add_mod(acc, lead_term(i1, p, rest), p)
    })
}

fn verdict(value: u64, expected: u64) -> Outcome {
    if value == expected {
        Outcome::Holds
    } else {
        Outcome::Failed(format!("residue {value}, expected {expected}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::Status;

    #[test]
    fn central_sum_examples() {
        // 1+2+6+20+70 = 99 ≡ −1 (mod 25); 1275 ≡ 1 (mod 49)
        assert!(classical_sum_central(5).unwrap().holds());
        assert!(classical_sum_central(7).unwrap().holds());
        assert_eq!(classical_sum_central(4), Err(VerifyError::NotPrime(4)));
        assert_eq!(
            classical_sum_central(3),
            Err(VerifyError::PrimeTooSmall { p: 3, min: 5 })
        );
    }

    fn brute_double(p: u64, m: u64) -> u64 {
        let mut binom = vec![vec![0u64; 2 * p as usize]; 2 * p as usize];
        for a in 0..2 * p as usize {
            binom[a][0] = 1;
            for b in 1..=a {
                binom[a][b] = (binom[a - 1][b - 1] + binom[a - 1][b]) % m;
            }
        }
        let mut s = 0;
        for i in 0..p as usize {
            for j in 0..p as usize {
                s = (s + binom[i + j][i] * binom[i + j][i]) % m;
            }
        }
        s
    }

    #[test]
    fn double_binom_examples() {
        assert_eq!(brute_double(5, 5), 4);
        assert_eq!(brute_double(7, 7), 1);
        assert_eq!(brute_double(5, 25), 24);
        assert!(classical_double_binom(5, 1).unwrap().holds());
        assert!(classical_double_binom(7, 1).unwrap().holds());
        assert!(classical_double_binom(5, 2).unwrap().holds());
        assert!(classical_double_binom(5, 3).is_err());
        assert_eq!(classical_double_binom(9, 1), Err(VerifyError::NotPrime(9)));
    }

    #[test]
    fn harmonic_examples() {
        // −1 − 1/2 + 1/4 = −5/4 ≡ 0 (mod 5)
        assert_eq!(harmonic_dp(1, 5), 0);
        assert!(classical_harmonic(1, 5).unwrap().holds());
        assert!(classical_harmonic(3, 5).unwrap().holds());
        assert_eq!(classical_harmonic(3, 5).unwrap().status, Status::Holds);
        assert_eq!(classical_harmonic(2, 7), Err(VerifyError::EvenN(2)));
        assert_eq!(
            classical_harmonic(5, 5),
            Err(VerifyError::PrimeTooSmall { p: 5, min: 6 })
        );
    }

    #[test]
    fn dp_matches_enumeration() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for nodd in [1u64, 3] {
                if p < nodd + 1 {
                    continue;
                }
                assert_eq!(
                    harmonic_dp(nodd, p),
                    classical_harmonic_brute_force(nodd, p),
                    "n={nodd} p={p}"
                );
            }
        }
    }

    #[test]
    fn inverse_mod_prime_square() {
        for a in 1..49u64 {
            if a % 7 != 0 {
                assert_eq!(mul_mod(a, inv_mod(a, 49), 49), 1);
            }
        }
    }
}
