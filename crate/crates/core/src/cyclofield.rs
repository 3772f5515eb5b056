//! Exact arithmetic in ℚ(ζ_m) ≅ ℚ[q]/Φ_m(q), and the three root-of-unity
//! sums behind the mod-Φ_n congruence for central q-binomial sums.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactpoly::{IntPoly, RatPoly};
use crate::qcomb::cyclotomic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("operands live in different cyclotomic fields (orders {0} and {1})")]
    OrderMismatch(u64, u64),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("extended Euclid ended with a gcd of positive degree")]
    InternalGcd,
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
}

/// An element of ℚ(ζ_m), stored as the φ(m) coordinates of its residue
/// in the power basis `1, ζ, …, ζ^(φ(m)−1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloElement {
    order: u64,
    coeffs: Vec<BigRational>,
}

fn modulus(m: u64) -> Arc<IntPoly> {
    cyclotomic(m)
}

impl CycloElement {
    pub fn from_poly(m: u64, p: &RatPoly) -> Result<Self, FieldError> {
        if m == 0 {
            return Err(FieldError::ZeroOrder);
        }
        let phi = modulus(m);
        let dim = phi.degree().expect("Φ_m is nonzero");
        let rem = p.rem_monic(&phi.to_rat()).expect("Φ_m is monic");
        let mut coeffs = rem.into_coeffs();
        coeffs.resize(dim, BigRational::zero());
        Ok(CycloElement { order: m, coeffs })
    }

    pub fn from_int_poly(m: u64, p: &IntPoly) -> Result<Self, FieldError> {
        Self::from_poly(m, &p.to_rat())
    }

    pub fn from_rational(m: u64, r: BigRational) -> Result<Self, FieldError> {
        Self::from_poly(m, &RatPoly::constant(r))
    }

    pub fn zero(m: u64) -> Result<Self, FieldError> {
        Self::from_poly(m, &RatPoly::zero())
    }

    pub fn one(m: u64) -> Result<Self, FieldError> {
        Self::from_poly(m, &RatPoly::one())
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Length is always φ(m).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value, when it lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        let (first, rest) = self.coeffs.split_first()?;
        rest.iter().all(Zero::is_zero).then(|| first.clone())
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.clone())
    }

    fn check_order(&self, other: &Self) -> Result<(), FieldError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(FieldError::OrderMismatch(self.order, other.order))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloElement {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloElement {
            order: self.order,
            coeffs,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check_order(other)?;
        Self::from_poly(self.order, &(&self.to_poly() * &other.to_poly()))
    }

    pub fn neg(&self) -> Self {
        CycloElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycloElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Inverse by the extended Euclidean algorithm on (representative, Φ_m)
    /// over ℚ[q], keeping every remainder monic.
    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        // Invariant: r_i ≡ t_i · a (mod Φ_m).
        let mut r0 = modulus(self.order).to_rat();
        let mut t0 = RatPoly::zero();
        let mut r1 = self.to_poly();
        let mut t1 = RatPoly::one();
        normalize(&mut r1, &mut t1);
        while !r1.is_zero() {
            let (quot, rem) = r0.divrem(&r1).expect("r1 is nonzero");
            let t2 = &t0 - &(&quot * &t1);
            r0 = std::mem::replace(&mut r1, rem);
            t0 = std::mem::replace(&mut t1, t2);
            normalize(&mut r1, &mut t1);
        }
        // r0 is the monic gcd
        if r0.degree() != Some(0) {
            return Err(FieldError::InternalGcd);
        }
        Self::from_poly(self.order, &t0)
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        self.mul(&other.inverse()?)
    }
}

fn normalize(r: &mut RatPoly, t: &mut RatPoly) {
    if let Some(lead) = r.leading() {
        if !lead.is_one() {
            let inv = lead.recip();
            *r = r.scale(&inv);
            *t = t.scale(&inv);
        }
    }
}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})[{}]", self.order, self.to_poly())
    }
}

/// `ζ_m^e`, with `e` reduced mod `m` first.
pub fn zeta_pow(m: u64, e: i64) -> Result<CycloElement, FieldError> {
    zeta_pow_big(m, &BigInt::from(e))
}

pub fn zeta_pow_big(m: u64, e: &BigInt) -> Result<CycloElement, FieldError> {
    if m == 0 {
        return Err(FieldError::ZeroOrder);
    }
    let r = e
        .mod_floor(&BigInt::from(m))
        .to_usize()
        .expect("residue below m fits in usize");
    CycloElement::from_poly(m, &RatPoly::monomial(BigRational::one(), r))
}

/// `(−1)^k ζ^num / (1 − ζ^den)`.
fn signed_ratio_term(
    m: u64,
    k: &BigInt,
    num: &BigInt,
    den: &BigInt,
) -> Result<CycloElement, FieldError> {
    let one = CycloElement::one(m)?;
    let denom = one.sub(&zeta_pow_big(m, den)?)?;
    let term = zeta_pow_big(m, num)?.div(&denom)?;
    Ok(if k.is_odd() { term.neg() } else { term })
}

/// `C_k = (−1)^k α^(3k(k+1)/2) / (1 − α^(3k+1))` for a primitive 3n-th root α.
pub fn case1_term(n: u64, k: i64) -> Result<CycloElement, FieldError> {
    let m = 3 * n;
    let k = BigInt::from(k);
    let num = BigInt::from(3) * &k * (&k + 1u32) / 2u32;
    let den = BigInt::from(3) * &k + 1u32;
    signed_ratio_term(m, &k, &num, &den)
}

/// `∑_{k=−n}^{n−1} C_k` in ℚ(ζ_{3n}); the sum vanishes.
pub fn root_sum_case1(n: u64) -> Result<CycloElement, FieldError> {
    let m = 3 * n;
    let n = n as i64;
    let mut acc = CycloElement::zero(m)?;
    for k in -n..n {
        acc = acc.add(&case1_term(n as u64, k)?)?;
    }
    Ok(acc)
}

/// `∑_{k=1}^{2n} (−1)^k ζ^(k(3k−1)/2) / (1 − ζ^(3k−1))` for a primitive
/// (3n+1)-th root ζ; equals −n/2.
pub fn root_sum_case2(n: u64) -> Result<CycloElement, FieldError> {
    let m = 3 * n + 1;
    let mut acc = CycloElement::zero(m)?;
    for k in 1..=2 * n {
        let k = BigInt::from(k);
        let num = &k * (BigInt::from(3) * &k - 1u32) / 2u32;
        let den = BigInt::from(3) * &k - 1u32;
        acc = acc.add(&signed_ratio_term(m, &k, &num, &den)?)?;
    }
    Ok(acc)
}

/// `∑_{k=1}^{2n+1} (−1)^k ω^(k(3k+1)/2) / (1 − ω^(3k))` for a primitive
/// (3n+2)-th root ω; equals −(n+1)/2.
pub fn root_sum_case3(n: u64) -> Result<CycloElement, FieldError> {
    let m = 3 * n + 2;
    let mut acc = CycloElement::zero(m)?;
    for k in 1..=2 * n + 1 {
        let k = BigInt::from(k);
        let num = &k * (BigInt::from(3) * &k + 1u32) / 2u32;
        let den = BigInt::from(3) * &k;
        acc = acc.add(&signed_ratio_term(m, &k, &num, &den)?)?;
    }
    Ok(acc)
}

/// The closed-form values of the three sums, as exact rationals.
pub fn expected_case_value(case: u8, n: u64) -> BigRational {
    let n = BigInt::from(n);
    match case {
        1 => BigRational::zero(),
        2 => BigRational::new(-n, BigInt::from(2)),
        3 => BigRational::new(-(n + 1u32), BigInt::from(2)),
        _ => panic!("root sums are numbered 1 to 3"),
    }
}

/// Whether every non-constant coordinate vanishes and the constant matches.
pub fn equals_rational(x: &CycloElement, r: &BigRational) -> bool {
    x.as_rational().is_some_and(|v| &v == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ints(c: &[i64]) -> Vec<BigRational> {
        c.iter().map(|&x| r(x, 1)).collect()
    }

    fn elem(m: u64, c: &[i64]) -> CycloElement {
        CycloElement::from_int_poly(m, &IntPoly::from_i64s(c)).unwrap()
    }

    #[test]
    fn from_poly_examples() {
        assert_eq!(elem(4, &[0, 0, 1]).coeffs(), ints(&[-1, 0]));
        assert_eq!(elem(3, &[0, 0, 0, 1]).coeffs(), ints(&[1, 0]));
        assert_eq!(elem(1, &[5, 1]).coeffs(), ints(&[6]));
        assert_eq!(CycloElement::zero(0), Err(FieldError::ZeroOrder));
    }

    #[test]
    fn arithmetic_examples() {
        let i = zeta_pow(4, 1).unwrap();
        assert_eq!(i.mul(&i).unwrap().coeffs(), ints(&[-1, 0]));
        let z3 = zeta_pow(3, 1).unwrap();
        let z3sq = zeta_pow(3, 2).unwrap();
        assert_eq!(z3.add(&z3sq).unwrap().coeffs(), ints(&[-1, 0]));
        let prod = zeta_pow(5, 2)
            .unwrap()
            .mul(&zeta_pow(5, 3).unwrap())
            .unwrap();
        assert_eq!(prod, CycloElement::one(5).unwrap());
        assert_eq!(i.add(&z3), Err(FieldError::OrderMismatch(4, 3)));
        assert_eq!(i.mul(&z3), Err(FieldError::OrderMismatch(4, 3)));
    }

    #[test]
    fn inverse_examples() {
        let one_minus_i = elem(4, &[1, -1]);
        let inv = one_minus_i.inverse().unwrap();
        assert_eq!(inv.coeffs(), &[r(1, 2), r(1, 2)]);
        assert_eq!(
            inv.mul(&one_minus_i).unwrap(),
            CycloElement::one(4).unwrap()
        );
        assert_eq!(
            CycloElement::one(3).unwrap().inverse().unwrap(),
            CycloElement::one(3).unwrap()
        );
        assert_eq!(
            CycloElement::zero(5).unwrap().inverse(),
            Err(FieldError::ZeroInverse)
        );
    }

    #[test]
    fn zeta_pow_examples() {
        assert_eq!(zeta_pow(4, 6).unwrap().coeffs(), ints(&[-1, 0]));
        assert_eq!(zeta_pow(7, 0).unwrap(), CycloElement::one(7).unwrap());
        assert_eq!(zeta_pow(3, -1).unwrap().coeffs(), ints(&[-1, -1]));
    }

    // Floating-point evaluation at the literal root e^(2πi/m): an oracle
    // for exponent transcription only.
    fn float_sum(
        m: u64,
        range: impl Iterator<Item = i64>,
        num: fn(i64) -> i64,
        den: fn(i64) -> i64,
    ) -> Complex64 {
        let root = |e: i64| {
            Complex64::from_polar(
                1.0,
                2.0 * std::f64::consts::PI * (e.rem_euclid(m as i64)) as f64 / m as f64,
            )
        };
        range
            .map(|k| {
                let sign = if k.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                root(num(k)) / (Complex64::new(1.0, 0.0) - root(den(k))) * sign
            })
            .sum()
    }

    fn assert_close(z: Complex64, re: f64) {
        assert!((z.re - re).abs() < 1e-9 && z.im.abs() < 1e-9, "{z} vs {re}");
    }

    #[test]
    fn case_examples() {
        for n in [1, 2, 5] {
            assert!(root_sum_case1(n).unwrap().is_zero(), "case 1, n={n}");
        }
        assert_close(
            float_sum(15, -5..5, |k| 3 * k * (k + 1) / 2, |k| 3 * k + 1),
            0.0,
        );

        assert_eq!(root_sum_case2(1).unwrap().as_rational(), Some(r(-1, 2)));
        assert_eq!(root_sum_case2(2).unwrap().as_rational(), Some(r(-1, 1)));
        assert_eq!(root_sum_case2(4).unwrap().as_rational(), Some(r(-2, 1)));
        assert_close(
            float_sum(13, 1..9, |k| k * (3 * k - 1) / 2, |k| 3 * k - 1),
            -2.0,
        );

        assert_eq!(root_sum_case3(1).unwrap().as_rational(), Some(r(-1, 1)));
        assert_eq!(root_sum_case3(2).unwrap().as_rational(), Some(r(-3, 2)));
        assert_eq!(root_sum_case3(3).unwrap().as_rational(), Some(r(-2, 1)));
        assert_close(
            float_sum(11, 1..8, |k| k * (3 * k + 1) / 2, |k| 3 * k),
            -2.0,
        );
    }

    #[test]
    fn case2_hand_check_with_i() {
        // ζ = i: k=1 gives −i/2, k=2 gives (i−1)/2
        let t1 =
            signed_ratio_term(4, &BigInt::from(1), &BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(t1.coeffs(), &[r(0, 1), r(-1, 2)]);
        let t2 =
            signed_ratio_term(4, &BigInt::from(2), &BigInt::from(5), &BigInt::from(5)).unwrap();
        assert_eq!(t2.coeffs(), &[r(-1, 2), r(1, 2)]);
    }

    #[test]
    fn exact_sums_match_float_oracle() {
        for n in 1..=8u64 {
            let m = 3 * n as i64;
            let f1 = float_sum(
                m as u64,
                -(n as i64)..n as i64,
                |k| 3 * k * (k + 1) / 2,
                |k| 3 * k + 1,
            );
            assert_close(f1, 0.0);
            let f2 = float_sum(
                m as u64 + 1,
                1..=2 * n as i64,
                |k| k * (3 * k - 1) / 2,
                |k| 3 * k - 1,
            );
            assert_close(f2, -(n as f64) / 2.0);
            let f3 = float_sum(
                m as u64 + 2,
                1..=2 * n as i64 + 1,
                |k| k * (3 * k + 1) / 2,
                |k| 3 * k,
            );
            assert_close(f3, -(n as f64 + 1.0) / 2.0);
            assert!(equals_rational(
                &root_sum_case2(n).unwrap(),
                &expected_case_value(2, n)
            ));
            assert!(equals_rational(
                &root_sum_case3(n).unwrap(),
                &expected_case_value(3, n)
            ));
        }
    }

    #[test]
    fn case1_term_symmetry() {
        for n in 1..=10u64 {
            for k in 1..=n as i64 {
                let a = case1_term(n, n as i64 - k).unwrap();
                let b = case1_term(n, -k).unwrap();
                assert!(a.add(&b).unwrap().is_zero(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn geometric_sums_vanish() {
        for m in 1..=30u64 {
            for d in 0..=2 * m as i64 {
                let mut acc = CycloElement::zero(m).unwrap();
                for k in 0..m as i64 {
                    acc = acc.add(&zeta_pow(m, k * d).unwrap()).unwrap();
                }
                if d % m as i64 == 0 {
                    assert_eq!(acc.as_rational(), Some(r(m as i64, 1)));
                } else {
                    assert!(acc.is_zero(), "m={m} d={d}");
                }
            }
        }
    }

    fn arb_element() -> impl Strategy<Value = (u64, Vec<i64>)> {
        (1u64..=30).prop_flat_map(|m| {
            let dim = crate::qcomb::euler_phi(m) as usize;
            (Just(m), prop::collection::vec(-20i64..=20, dim))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn inverse_round_trip((m, c) in arb_element()) {
            let a = elem(m, &c);
            prop_assume!(!a.is_zero());
            let inv = a.inverse().unwrap();
            prop_assert_eq!(a.mul(&inv).unwrap(), CycloElement::one(m).unwrap());
        }

        #[test]
        fn power_coherence(m in 1u64..=30, e1 in -200i64..200, e2 in -200i64..200) {
            let lhs = zeta_pow(m, e1).unwrap().mul(&zeta_pow(m, e2).unwrap()).unwrap();
            prop_assert_eq!(lhs, zeta_pow(m, e1 + e2).unwrap());
        }

        #[test]
        fn field_ops_consistent((m, c) in arb_element(), s in -5i64..5) {
            let a = elem(m, &c);
            let b = zeta_pow(m, s).unwrap();
            let sum = a.add(&b).unwrap();
            prop_assert_eq!(sum.sub(&b).unwrap(), a.clone());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.add(&a.neg()).unwrap(), CycloElement::zero(m).unwrap());
        }
    }
}
