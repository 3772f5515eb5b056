//! The q-congruences and q-identities, one builder per statement.

use num_bigint::BigInt;
use num_traits::One;
use sha2::{Digest, Sha256};

use super::mutation::Mutant;
use super::record::{timed, Outcome, Theorem, VerificationRecord};
use super::{residue_mod, SquareFold, VerifyError};
use crate::cyclofield::{
    equals_rational, expected_case_value, root_sum_case1, root_sum_case2, root_sum_case3,
};
use crate::exactpoly::IntPoly;
use crate::qcomb::{
    chi3, gauss_binom, gauss_binom_product, gauss_row, CentralBinomials, GaussColumn,
};

fn int(c: i64) -> BigInt {
    BigInt::from(c)
}

fn sign_pow(k: u64) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn exact_div(num: i128, den: i128) -> Option<i128> {
    (num % den == 0).then(|| num / den)
}

/// `(n² − 1)/3`, integral whenever `3 ∤ n`.
fn rhs_exponent(n: u64) -> u64 {
    (n * n - 1) / 3
}

/// Sign and exponent of `χ(n)·q^((n²−1)/3)`, or `None` when `χ(n) = 0`.
fn rhs_term(n: u64, mutant: Mutant) -> Option<(i64, u64)> {
    let chi = chi3(n as i64).value();
    if chi == 0 {
        return None;
    }
    let sign = if mutant == Mutant::RhsSign { -chi } else { chi };
    let exp = rhs_exponent(n) + u64::from(mutant == Mutant::RhsExponent);
    Some((sign, exp))
}

/// `χ(n)·q^((n²−1)/3)`; zero when `3 | n`.
pub fn rhs_guo(n: u64) -> IntPoly {
    rhs_guo_with(n, Mutant::Original)
}

fn rhs_guo_with(n: u64, mutant: Mutant) -> IntPoly {
    assert!(n >= 1);
    match rhs_term(n, mutant) {
        Some((s, e)) => IntPoly::monomial(int(s), e as usize),
        None => IntPoly::zero(),
    }
}

/// `∑_{k=0}^{n−1} q^k [2k, k]`.
pub fn thm12_lhs(n: u64) -> IntPoly {
    let mut acc = IntPoly::zero();
    for (k, c) in CentralBinomials::new().take(n as usize).enumerate() {
        acc += &c.monomial_mul(k);
    }
    acc
}

/// `∑_{k<n} q^k [2k,k] ≡ χ(n) q^((n²−1)/3) (mod Φ_n²)`.
pub fn verify_thm12(n: u64) -> VerificationRecord {
    verify_thm12_with(n, Mutant::Original)
}

pub(crate) fn verify_thm12_with(n: u64, mutant: Mutant) -> VerificationRecord {
    assert!(n >= 1);
    timed(Theorem::Thm12, vec![n as i64], || {
        let diff = &thm12_lhs(n) - &rhs_guo_with(n, mutant);
        Outcome::from_residue(residue_mod(&diff, n, 2))
    })
}

/// The exponent `E(k) = k(k − χ(k))/3 − (k−1)(k−2)/6`, or `None` when
/// `χ(k) = 0` (those terms carry a zero coefficient).
pub fn e_exponent(k: u64) -> Option<u64> {
    e_exponent_with(k, Mutant::Original).expect("E(k) is integral for 3 ∤ k")
}

fn e_exponent_with(k: u64, mutant: Mutant) -> Result<Option<u64>, VerifyError> {
    let chi = chi3(k as i64).value();
    if chi == 0 {
        return Ok(None);
    }
    let k = i128::from(k);
    let non_integral = || VerifyError::OutOfRange(format!("non-integral exponent E({k})"));
    let first = exact_div(k * (k - i128::from(chi)), 3).ok_or_else(non_integral)?;
    let second = exact_div((k - 1) * (k - 2), 6).ok_or_else(non_integral)?;
    let e = match mutant {
        Mutant::HarmonicExponentSign => first + second,
        Mutant::HarmonicExponent => first - second + 1,
        _ => first - second,
    };
    u64::try_from(e).map(Some).map_err(|_| non_integral())
}

/// The harmonic-type congruence cleared of denominators:
/// `6·∑ χ(k)(−1)^k q^E(k) D/[k] − χ(n)(χ(n)−n) q^((n²−1)/3) (1−q) D`
/// with `D = ∏_{k<n, 3∤k} [k]`.
fn thm11_cleared(n: u64, mutant: Mutant) -> Result<IntPoly, VerifyError> {
    let ks: Vec<u64> = (1..n).filter(|k| k % 3 != 0).collect();
    let d = ks.iter().fold(IntPoly::one(), |acc, &k| {
        acc.mul_one_minus_q_pow(k as usize)
            .div_one_minus_q_pow(1)
            .expect("(1 − q) divides 1 − q^k")
    });
    let d_times_one_minus_q = d.mul_one_minus_q_pow(1);
    let mut lhs = IntPoly::zero();
    for &k in &ks {
        let e = e_exponent_with(k, mutant)?.expect("3 ∤ k");
        let mut sign = chi3(k as i64).value() * sign_pow(k);
        if mutant == Mutant::HarmonicSign {
            sign = -sign;
        }
        // D/[k] = D(1 − q)/(1 − q^k)
        let cofactor = d_times_one_minus_q
            .div_one_minus_q_pow(k as usize)
            .expect("[k] divides D");
        lhs += &cofactor.scale(&int(6 * sign)).monomial_mul(e as usize);
    }
    let chi = chi3(n as i64).value();
    if chi != 0 {
        let coeff = chi * (chi - n as i64);
        let rhs = d_times_one_minus_q
            .monomial_mul(rhs_exponent(n) as usize)
            .scale(&int(coeff));
        lhs -= &rhs;
    }
    Ok(lhs)
}

/// The harmonic-type sum `∑_{k<n} χ(k)(−1)^k q^E(k)/[k]` against
/// `χ(n)(χ(n)−n)/6 · q^((n²−1)/3)(1−q)`, modulo `Φ_n`.
pub fn verify_thm11(n: u64) -> VerificationRecord {
    verify_thm11_with(n, Mutant::Original)
}

pub(crate) fn verify_thm11_with(n: u64, mutant: Mutant) -> VerificationRecord {
    assert!(n >= 1);
    timed(Theorem::Thm11, vec![n as i64], || {
        match thm11_cleared(n, mutant) {
            Ok(p) => Outcome::from_residue(residue_mod(&p, n, 1)),
            Err(e) => Outcome::Failed(e.to_string()),
        }
    })
}

/// The reindexed form over `k = −⌊n/3⌋ … ⌊(n−2)/3⌋`, cleared of the
/// denominators `1 − q^|3k+1|`.
fn eq21_cleared(n: u64) -> IntPoly {
    let n_i = n as i64;
    let lo = -n_i.div_euclid(3);
    let hi = (n_i - 2).div_euclid(3);
    // (sign, exponent, |3k+1|); for 3k+1 < 0 use 1/(1−q^−a) = −q^a/(1−q^a)
    let terms: Vec<(i64, u64, u64)> = (lo..=hi)
        .map(|k| {
            let a = 3 * k + 1;
            let base = (3 * k * (k + 1) / 2) as u64;
            let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
            if a > 0 {
                (sign, base, a as u64)
            } else {
                (-sign, base + a.unsigned_abs(), a.unsigned_abs())
            }
        })
        .collect();
    let d = terms.iter().fold(IntPoly::one(), |acc, &(_, _, a)| {
        acc.mul_one_minus_q_pow(a as usize)
    });
    let mut diff = IntPoly::zero();
    for &(sign, e, a) in &terms {
        let cofactor = d.div_one_minus_q_pow(a as usize).expect("factor of D");
        diff += &cofactor.scale(&int(6 * sign)).monomial_mul(e as usize);
    }
    let chi = chi3(n_i).value();
    if chi != 0 {
        let coeff = chi * (n_i - chi);
        diff -= &d.monomial_mul(rhs_exponent(n) as usize).scale(&int(coeff));
    }
    diff
}

/// The reindexed sum `∑ (−1)^k q^(3k(k+1)/2)/(1 − q^(3k+1))` against
/// `χ(n)(n−χ(n))/6 · q^((n²−1)/3)` modulo `Φ_n`; also fails if its verdict
/// disagrees with [`verify_thm11`].
pub fn verify_eq21_equiv(n: u64) -> VerificationRecord {
    assert!(n >= 1);
    timed(Theorem::Eq21, vec![n as i64], || {
        let own = Outcome::from_residue(residue_mod(&eq21_cleared(n), n, 1));
        let other = verify_thm11(n).holds();
        if own.holds() != other {
            Outcome::Failed(format!(
                "verdict differs from thm11 (eq21 {}, thm11 {})",
                own.holds(),
                other
            ))
        } else {
            own
        }
    })
}

/// Double sum `∑_{i,j<n} q^(j²+i+j) [i+j, i]²` reduced modulo `(qⁿ−1)²`,
/// together with the check that `[m, j] ≡ 0 (mod Φ_n)` for every term with
/// `m = i + j ≥ n`.
fn double_sum_folded(n: u64) -> (IntPoly, Outcome) {
    let fold = SquareFold::new(n);
    let last = n as usize - 1;
    let mut row: Vec<IntPoly> = vec![IntPoly::one()];
    let mut acc = Vec::new();
    let mut vanishing = Outcome::Holds;
    for m in 0..=2 * last {
        if m > 0 {
            // Pascal step restricted to columns ≤ n−1, in the quotient ring.
            let width = m.min(last);
            let next: Vec<IntPoly> = (0..=width)
                .map(|j| {
                    let mut entry = if j >= 1 {
                        row[j - 1].clone().into_coeffs()
                    } else {
                        Vec::new()
                    };
                    if let Some(up) = row.get(j) {
                        fold.shift_into(&mut entry, up, j as u64);
                    }
                    IntPoly::from_coeffs(entry)
                })
                .collect();
            row = next;
        }
        let jlo = m.saturating_sub(last);
        let jhi = m.min(last);
        let mut squares: Vec<Option<IntPoly>> = vec![None; jhi + 1];
        for j in jlo..=jhi {
            let i = m - j;
            // [m, j] = [m, i]
            let key = j.min(i);
            let sq = squares[key].get_or_insert_with(|| fold.mul(&row[key], &row[key]));
            fold.shift_into(&mut acc, sq, (j * j + m) as u64);
            if m > last && vanishing.holds() {
                let r = residue_mod(&row[j], n, 1);
                if !r.is_zero() {
                    vanishing = Outcome::Residue(r);
                }
            }
        }
    }
    (IntPoly::from_coeffs(acc), vanishing)
}

/// `∑_{i,j<n} q^(j²+i+j) [i+j, i]²` as an exact polynomial.
pub fn thm13_lhs(n: u64) -> IntPoly {
    let mut acc = IntPoly::zero();
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            let b = gauss_binom(i + j, i);
            acc += &b.square().monomial_mul((j * j + i + j) as usize);
        }
    }
    acc
}

/// The double sum is `≡ χ(n) q^((n²−1)/3) (mod Φ_n²)`.
pub fn verify_thm13(n: u64) -> VerificationRecord {
    verify_thm13_with(n, Mutant::Original)
}

pub(crate) fn verify_thm13_with(n: u64, mutant: Mutant) -> VerificationRecord {
    assert!(n >= 1);
    timed(Theorem::Thm13, vec![n as i64], || {
        let fold = SquareFold::new(n);
        let (sum, _) = double_sum_folded(n);
        let rhs = match rhs_term(n, mutant) {
            Some((s, e)) => fold.monomial(s, e),
            None => IntPoly::zero(),
        };
        Outcome::from_residue(residue_mod(&(&sum - &rhs), n, 2))
    })
}

/// The double sum is `≡ ∑_{m<n} q^m [2m, m] (mod Φ_n²)`, and every
/// discarded `[m, j]` with `m ≥ n` vanishes modulo `Φ_n`.
pub fn verify_eq41(n: u64) -> VerificationRecord {
    assert!(n >= 1);
    timed(Theorem::Eq41, vec![n as i64], || {
        let fold = SquareFold::new(n);
        let (sum, vanishing) = double_sum_folded(n);
        let central = fold.reduce(&thm12_lhs(n));
        Outcome::from_residue(residue_mod(&(&sum - &central), n, 2)).and(vanishing)
    })
}

/// `∑_{j=0}^{m} q^(j²) [m, j]² = [2m, m]` exactly.
pub fn verify_chu_vandermonde(m: u64) -> VerificationRecord {
    timed(Theorem::Chu, vec![m as i64], || {
        let row = gauss_row(m as usize);
        let m = m as usize;
        let mut lhs = IntPoly::zero();
        let mut squares: Vec<Option<IntPoly>> = vec![None; m / 2 + 1];
        for j in 0..=m {
            let key = j.min(m - j);
            let sq = squares[key].get_or_insert_with(|| row[key].square());
            lhs += &sq.monomial_mul(j * j);
        }
        let rhs = gauss_binom_product(2 * m as i64, m as i64);
        Outcome::from_residue(&lhs - &rhs)
    })
}

/// Exponent `(2m² − m·χ(m) − 1)/3` of the expansion over `[2n, k]`, or
/// `None` when `χ(m) = 0`.
pub fn id31_exponent(m: u64) -> Option<u64> {
    id31_exponent_with(m, Mutant::Original).expect("integral for 3 ∤ m")
}

fn id31_exponent_with(m: u64, mutant: Mutant) -> Result<Option<u64>, VerifyError> {
    let chi = chi3(m as i64).value();
    if chi == 0 {
        return Ok(None);
    }
    let m = i128::from(m);
    let e = exact_div(2 * m * m - m * i128::from(chi) - 1, 3)
        .ok_or_else(|| VerifyError::OutOfRange(format!("non-integral exponent at m = {m}")))?;
    let e = e + i128::from(mutant == Mutant::ExpansionExponent);
    Ok(Some(e as u64))
}

/// `∑_{k<n} q^k [2k,k] = ∑_{k<n} χ(n−k) q^((2(n−k)² − (n−k)χ(n−k) − 1)/3) [2n, k]`.
pub fn verify_identity31(n: u64) -> VerificationRecord {
    verify_identity31_with(n, Mutant::Original)
}

pub(crate) fn verify_identity31_with(n: u64, mutant: Mutant) -> VerificationRecord {
    assert!(n >= 1);
    timed(Theorem::Id31, vec![n as i64], || {
        let mut rhs = IntPoly::zero();
        for (k, binom) in GaussColumn::new(2 * n as usize)
            .take(n as usize)
            .enumerate()
        {
            let m = n - k as u64;
            let e = match id31_exponent_with(m, mutant) {
                Ok(Some(e)) => e,
                Ok(None) => continue,
                Err(err) => return Outcome::Failed(err.to_string()),
            };
            let mut chi = chi3(m as i64).value();
            if mutant == Mutant::ExpansionSign {
                chi = -chi;
            }
            rhs += &binom.scale(&int(chi)).monomial_mul(e as usize);
        }
        Outcome::from_residue(&thm12_lhs(n) - &rhs)
    })
}

/// `[2n,k](1 − q^k) q^(k(k−1)/2) − 2(qⁿ − 1)(−1)^k`, the unit-cleared form of
/// `[2n,k] ≡ 2(qⁿ−1)(−1)^k q^(−k(k−1)/2)/(1 − q^k)`.
fn lemma32_outcome(n: u64, k: u64, binom: &IntPoly) -> Outcome {
    let lhs = binom
        .mul_one_minus_q_pow(k as usize)
        .monomial_mul((k * (k - 1) / 2) as usize);
    let qn_minus_one = &IntPoly::monomial(BigInt::one(), n as usize) - &IntPoly::one();
    let rhs = qn_minus_one.scale(&int(2 * sign_pow(k)));
    Outcome::from_residue(residue_mod(&(&lhs - &rhs), n, 2))
}

/// `[2n, k] ≡ 2(qⁿ−1)(−1)^k q^(−k(k−1)/2)/(1 − q^k) (mod Φ_n²)` for `1 ≤ k ≤ n−1`.
pub fn verify_lemma32(n: u64, k: u64) -> Result<VerificationRecord, VerifyError> {
    if k < 1 || k >= n {
        return Err(VerifyError::OutOfRange(format!(
            "lemma32 needs 1 ≤ k ≤ n−1, got n = {n}, k = {k}"
        )));
    }
    Ok(timed(Theorem::Lemma32, vec![n as i64, k as i64], || {
        let binom = gauss_binom_product(2 * n as i64, k as i64);
        lemma32_outcome(n, k, &binom)
    }))
}

/// [`verify_lemma32`] for every `1 ≤ k ≤ n−1`, sharing one column of `[2n, k]`.
pub fn verify_lemma32_row(n: u64) -> Vec<VerificationRecord> {
    GaussColumn::new(2 * n as usize)
        .take(n as usize)
        .enumerate()
        .skip(1)
        .map(|(k, binom)| {
            let k = k as u64;
            timed(Theorem::Lemma32, vec![n as i64, k as i64], || {
                lemma32_outcome(n, k, &binom)
            })
        })
        .collect()
}

/// `q^(n(n−χ(n))/3) ≡ 1 + ((n−χ(n))/3)(qⁿ − 1) (mod Φ_n²)`; skipped when `3 | n`.
pub fn verify_eq38(n: u64) -> VerificationRecord {
    assert!(n >= 1);
    timed(Theorem::Eq38, vec![n as i64], || {
        let chi = chi3(n as i64).value();
        if chi == 0 {
            return Outcome::Skipped;
        }
        let c = (n as i64 - chi) / 3;
        let lhs = IntPoly::monomial(BigInt::one(), (n as i64 * c) as usize);
        let qn_minus_one = &IntPoly::monomial(BigInt::one(), n as usize) - &IntPoly::one();
        let rhs = &IntPoly::one() + &qn_minus_one.scale(&int(c));
        Outcome::from_residue(residue_mod(&(&lhs - &rhs), n, 2))
    })
}

/// Root-of-unity sum `case` (1, 2 or 3) at `n` equals its closed form exactly.
pub fn verify_case(case: u8, n: u64) -> VerificationRecord {
    assert!(n >= 1);
    let theorem = match case {
        1 => Theorem::Case1,
        2 => Theorem::Case2,
        3 => Theorem::Case3,
        _ => panic!("root sums are numbered 1 to 3"),
    };
    timed(theorem, vec![n as i64], || {
        let value = match case {
            1 => root_sum_case1(n),
            2 => root_sum_case2(n),
            _ => root_sum_case3(n),
        };
        match value {
            Ok(v) if equals_rational(&v, &expected_case_value(case, n)) => Outcome::Holds,
            Ok(v) => {
                let text = format!("{v:?}");
                let hash: String = Sha256::digest(text.as_bytes())
                    .iter()
                    .take(8)
                    .map(|b| format!("{b:02x}"))
                    .collect();
                Outcome::Failed(format!("field-value;sha256={hash}"))
            }
            Err(e) => Outcome::Failed(e.to_string()),
        }
    })
}
