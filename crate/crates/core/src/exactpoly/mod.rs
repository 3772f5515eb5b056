//! Dense univariate polynomials in `q` over exact scalars.
//!
//! [`IntPoly`] (coefficients in ℤ) is the ring every q-object lives in;
//! [`RatPoly`] (coefficients in ℚ) carries rational right-hand sides and
//! cyclotomic field representatives. Both are instances of [`Poly`], stored
//! as ascending coefficient vectors with no trailing zeros.

mod karatsuba;
mod kronecker;
mod scalar;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use karatsuba::{mul_karatsuba, mul_schoolbook, KARATSUBA_THRESHOLD};
pub use kronecker::{mul_kronecker, KRONECKER_MIN_LEN};
pub use scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("divisor is not monic")]
    NotMonic,
    #[error("exact division left a nonzero remainder")]
    NotDivisible,
}

/// Dense polynomial `coeffs[0] + coeffs[1]·q + …` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·q^e`.
    pub fn monomial(c: T, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); e + 1];
        coeffs[e] = c;
        Poly { coeffs }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        trim(&mut coeffs);
        Poly { coeffs }
    }

    /// Polynomial from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (usize, T)>>(terms: I) -> Self {
        let mut coeffs: Vec<T> = Vec::new();
        for (e, c) in terms {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, T::zero());
            }
            coeffs[e] += &c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial, which orders below every `Some(d)`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// `q^e · self`.
    pub fn monomial_mul(&self, e: usize) -> Self {
        if self.is_zero() || e == 0 {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + e);
        coeffs.resize(e, T::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Product with an explicit Karatsuba cut-over; the result does not
    /// depend on `threshold`.
    pub fn mul_with_threshold(&self, other: &Self, threshold: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(mul_karatsuba(&self.coeffs, &other.coeffs, threshold))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        result
    }

    /// Division by a monic polynomial; quotient and remainder stay in the
    /// coefficient ring.
    pub fn divrem_monic(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let db = divisor.degree().ok_or(PolyError::ZeroDivisor)?;
        if !divisor.is_monic() {
            return Err(PolyError::NotMonic);
        }
        let da = match self.degree() {
            Some(d) if d >= db => d,
            _ => return Ok((Self::zero(), self.clone())),
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let c = std::mem::replace(&mut rem[i + db], T::zero());
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs[..db].iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &c.mul_ref(d);
                }
            }
            quot[i] = c;
        }
        rem.truncate(db);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem_monic(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.divrem_monic(divisor).map(|(_, r)| r)
    }

    /// Quotient of an exact division by a monic polynomial.
    pub fn divexact(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.divrem_monic(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible)
        }
    }

    /// Remainder modulo the monic polynomial `q^top + Σ c·q^e` given by its
    /// lower terms `(e, c)` with `e < top`. Costs O(deg · terms), which makes
    /// reduction modulo `(q^n − 1)^e` linear in the degree.
    pub fn rem_sparse_monic(&self, top: usize, lower: &[(usize, T)]) -> Self {
        assert!(top > 0, "sparse modulus must have positive degree");
        debug_assert!(lower.iter().all(|(e, _)| *e < top));
        let mut c = self.coeffs.clone();
        for i in (top..c.len()).rev() {
            let lead = std::mem::replace(&mut c[i], T::zero());
            if lead.is_zero() {
                continue;
            }
            for (e, t) in lower {
                c[i - top + e] -= &lead.mul_ref(t);
            }
        }
        c.truncate(top);
        Self::from_coeffs(c)
    }

    /// Remainder modulo `(q^n − 1)^e`.
    pub fn rem_qn_minus_one_pow(&self, n: usize, e: u32) -> Self {
        assert!(n > 0 && e > 0);
        if e == 1 {
            // q^n ≡ 1: fold exponents mod n.
            if self.coeffs.len() <= n {
                return self.clone();
            }
            let mut c = vec![T::zero(); n];
            for (i, a) in self.coeffs.iter().enumerate() {
                c[i % n] += a;
            }
            return Self::from_coeffs(c);
        }
        // (q^n − 1)^e = Σ_i C(e,i) (−1)^(e−i) q^(n i)
        let mut lower = Vec::with_capacity(e as usize);
        let mut binom = T::one();
        for i in 0..e {
            let mut c = binom.clone();
            if (e - i) % 2 == 1 {
                c = -c;
            }
            lower.push((n * i as usize, c));
            binom = binom
                .mul_ref(&T::from_u64(u64::from(e - i)))
                .div_u64(u64::from(i + 1));
        }
        self.rem_sparse_monic(n * e as usize, &lower)
    }

    /// `self · (1 − q^a)`, in O(deg).
    pub fn mul_one_minus_q_pow(&self, a: usize) -> Self {
        assert!(a > 0);
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.coeffs.clone();
        c.resize(self.coeffs.len() + a, T::zero());
        for (i, x) in self.coeffs.iter().enumerate() {
            c[i + a] -= x;
        }
        Self::from_coeffs(c)
    }

    /// `self / (1 − q^a)`, which must be exact; O(deg).
    pub fn div_one_minus_q_pow(&self, a: usize) -> Result<Self, PolyError> {
        assert!(a > 0);
        let Some(d) = self.degree() else {
            return Ok(Self::zero());
        };
        if d < a {
            return Err(PolyError::NotDivisible);
        }
        // self = Q·(1 − q^a)  ⇒  Q_i = s_i + Q_{i−a}
        let qlen = d + 1 - a;
        let mut quot: Vec<T> = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let mut v = self.coeffs[i].clone();
            if i >= a {
                v += &quot[i - a];
            }
            quot.push(v);
        }
        // remaining coefficients must be reproduced by −Q_{i−a}
        for i in qlen..=d {
            let mut v = self.coeffs[i].clone();
            if i >= a {
                v += &quot[i - a];
            }
            if !v.is_zero() {
                return Err(PolyError::NotDivisible);
            }
        }
        Ok(Self::from_coeffs(quot))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl IntPoly {
    pub fn from_i64s(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Each coefficient multiplied by `r`, in lowest terms.
    pub fn scalar_mul(&self, r: &BigRational) -> RatPoly {
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()) * r)
                .collect(),
        )
    }

    pub fn to_rat(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl RatPoly {
    /// Division with remainder over ℚ.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let lead = divisor.leading().ok_or(PolyError::ZeroDivisor)?;
        let inv = lead.recip();
        let monic = divisor.scale(&inv);
        let (q, r) = self.divrem_monic(&monic)?;
        Ok((q.scale(&inv), r))
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn make_monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// The integer polynomial, if every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::from_coeffs)
    }
}

fn trim<T: Scalar>(c: &mut Vec<T>) {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

impl<T: Scalar> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> From<T> for Poly<T> {
    fn from(c: T) -> Self {
        Self::constant(c)
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        match T::fast_mul(&self.coeffs, &rhs.coeffs) {
            Some(c) => Poly::from_coeffs(c),
            None => self.mul_with_threshold(rhs, KARATSUBA_THRESHOLD),
        }
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar> Add for Poly<T> {
    type Output = Poly<T>;

    fn add(mut self, rhs: Poly<T>) -> Poly<T> {
        self += &rhs;
        self
    }
}

impl<T: Scalar> Sub for Poly<T> {
    type Output = Poly<T>;

    fn sub(mut self, rhs: Poly<T>) -> Poly<T> {
        self -= &rhs;
        self
    }
}

impl<T: Scalar> Mul for Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        &self * &rhs
    }
}

impl<T: Scalar> AddAssign<&Poly<T>> for Poly<T> {
    fn add_assign(&mut self, rhs: &Poly<T>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), T::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        trim(&mut self.coeffs);
    }
}

impl<T: Scalar> SubAssign<&Poly<T>> for Poly<T> {
    fn sub_assign(&mut self, rhs: &Poly<T>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), T::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        trim(&mut self.coeffs);
    }
}

impl<T: Scalar> AddAssign for Poly<T> {
    fn add_assign(&mut self, rhs: Poly<T>) {
        *self += &rhs;
    }
}

impl<T: Scalar> SubAssign for Poly<T> {
    fn sub_assign(&mut self, rhs: Poly<T>) {
        *self -= &rhs;
    }
}

impl<T: Scalar + fmt::Display + Signed> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}q", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}q^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar + fmt::Display + Signed> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
