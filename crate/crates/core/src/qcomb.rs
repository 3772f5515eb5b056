//! q-integers, q-Pochhammer symbols, Gaussian binomial coefficients,
//! cyclotomic polynomials and the character mod 3.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactpoly::{IntPoly, PolyError};

/// The character `(k/3)`: +1, −1 or 0 as `k ≡ 1, 2, 0 (mod 3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Char3 {
    Zero,
    Plus,
    Minus,
}

impl Char3 {
    pub fn value(self) -> i64 {
        match self {
            Char3::Zero => 0,
            Char3::Plus => 1,
            Char3::Minus => -1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Char3::Zero
    }
}

/// `(k/3)`, defined for every integer by 3-periodicity.
pub fn chi3(k: i64) -> Char3 {
    match k.rem_euclid(3) {
        0 => Char3::Zero,
        1 => Char3::Plus,
        _ => Char3::Minus,
    }
}

fn one() -> BigInt {
    BigInt::one()
}

/// `[n]_q = 1 + q + … + q^(n−1)`.
pub fn q_int(n: usize) -> IntPoly {
    IntPoly::from_coeffs(vec![one(); n])
}

/// `(q;q)_n = (1−q)(1−q²)…(1−qⁿ)`.
pub fn q_pochhammer(n: usize) -> IntPoly {
    (1..=n).fold(IntPoly::one(), |acc, i| acc.mul_one_minus_q_pow(i))
}

/// Rows of the q-Pascal triangle up to this index are memoized.
const ROW_MEMO_LIMIT: usize = 64;

static ROW_MEMO: OnceLock<RwLock<Vec<Arc<Vec<IntPoly>>>>> = OnceLock::new();

/// Row `n` of the Gaussian triangle: `[[n,0], [n,1], …, [n,n]]`.
pub fn gauss_row(n: usize) -> Arc<Vec<IntPoly>> {
    if n > ROW_MEMO_LIMIT {
        let mut rows = PascalRows::new();
        return Arc::new(rows.nth(n).expect("unbounded iterator"));
    }
    let memo = ROW_MEMO.get_or_init(|| RwLock::new(vec![Arc::new(vec![IntPoly::one()])]));
    if let Some(row) = memo.read().expect("row memo poisoned").get(n) {
        return Arc::clone(row);
    }
    let mut rows = memo.write().expect("row memo poisoned");
    while rows.len() <= n {
        let next = pascal_step(rows.last().expect("row 0 present"));
        rows.push(Arc::new(next));
    }
    Arc::clone(&rows[n])
}

/// `[n,k] = [n−1,k−1] + q^k [n−1,k]`.
fn pascal_step(prev: &[IntPoly]) -> Vec<IntPoly> {
    let m = prev.len();
    let mut next = Vec::with_capacity(m + 1);
    next.push(IntPoly::one());
    for k in 1..m {
        next.push(&prev[k - 1] + &prev[k].monomial_mul(k));
    }
    next.push(IntPoly::one());
    next
}

/// Successive rows of the Gaussian triangle, starting from row 0.
#[derive(Debug, Default)]
pub struct PascalRows {
    current: Option<Vec<IntPoly>>,
}

impl PascalRows {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Iterator for PascalRows {
    type Item = Vec<IntPoly>;

    fn next(&mut self) -> Option<Vec<IntPoly>> {
        let row = match &self.current {
            None => vec![IntPoly::one()],
            Some(prev) => pascal_step(prev),
        };
        self.current = Some(row.clone());
        Some(row)
    }
}

/// Gaussian binomial `[n,k]`; zero unless `0 ≤ k ≤ n`.
///
/// Built by the Pascal recurrence. Only the band of each row that can reach
/// column `k` is kept, so large `n` do not materialize whole rows.
pub fn gauss_binom(n: i64, k: i64) -> IntPoly {
    if n < 0 || k < 0 || k > n {
        return IntPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    if n <= ROW_MEMO_LIMIT {
        return gauss_row(n)[k].clone();
    }
    // Row m contributes columns max(0, k−(n−m)) ..= min(m, k).
    let mut band: Vec<IntPoly> = vec![IntPoly::one()];
    let mut lo = 0usize;
    for m in 1..=n {
        let new_lo = (k + m).saturating_sub(n);
        let new_hi = m.min(k);
        let mut next = Vec::with_capacity(new_hi - new_lo + 1);
        for j in new_lo..=new_hi {
            let left = if j >= 1 && j > lo {
                band.get(j - 1 - lo)
            } else {
                None
            };
            let up = if j >= lo { band.get(j - lo) } else { None };
            let mut entry = left.cloned().unwrap_or_default();
            if let Some(u) = up {
                entry += &u.monomial_mul(j);
            }
            next.push(entry);
        }
        band = next;
        lo = new_lo;
    }
    band.pop().expect("band ends at column k")
}

/// Gaussian binomial by the product `∏_{i=1..k} (1−q^(n−k+i)) / (1−q^i)`,
/// with each division exact. Independent of the Pascal route.
pub fn gauss_binom_product(n: i64, k: i64) -> IntPoly {
    if n < 0 || k < 0 || k > n {
        return IntPoly::zero();
    }
    GaussColumn::new(n as usize)
        .nth(k as usize)
        .expect("column has n+1 entries")
}

/// `[n,0], [n,1], …, [n,n]` via `[n,k+1] = [n,k]·(1−q^(n−k))/(1−q^(k+1))`.
#[derive(Debug, Clone)]
pub struct GaussColumn {
    n: usize,
    k: usize,
    current: IntPoly,
}

impl GaussColumn {
    pub fn new(n: usize) -> Self {
        GaussColumn {
            n,
            k: 0,
            current: IntPoly::one(),
        }
    }
}

impl Iterator for GaussColumn {
    type Item = IntPoly;

    fn next(&mut self) -> Option<IntPoly> {
        if self.k > self.n {
            return None;
        }
        let out = self.current.clone();
        if self.k < self.n {
            self.current = self
                .current
                .mul_one_minus_q_pow(self.n - self.k)
                .div_one_minus_q_pow(self.k + 1)
                .expect("Gaussian binomials are polynomials");
        }
        self.k += 1;
        Some(out)
    }
}

/// Central binomials `[0,0], [2,1], [4,2], …` via
/// `[2k+2,k+1] = [2k,k]·(1−q^(2k+1))(1+q^(k+1)) / (1−q^(k+1))`,
/// updated in place.
#[derive(Debug, Clone)]
pub struct CentralBinomials {
    k: usize,
    current: Vec<BigInt>,
}

impl CentralBinomials {
    pub fn new() -> Self {
        CentralBinomials {
            k: 0,
            current: vec![BigInt::one()],
        }
    }
}

impl Default for CentralBinomials {
    fn default() -> Self {
        Self::new()
    }
}

/// `c ← c·(1 + sign·q^a)`.
fn mul_binomial_in_place(c: &mut Vec<BigInt>, a: usize, sign: i8) {
    let len = c.len();
    c.resize(len + a, BigInt::zero());
    for i in (0..len).rev() {
        let (lo, hi) = c.split_at_mut(i + a);
        if sign > 0 {
            hi[0] += &lo[i];
        } else {
            hi[0] -= &lo[i];
        }
    }
}

/// `c ← c/(1 − q^a)`, exact by assumption.
fn div_one_minus_in_place(c: &mut Vec<BigInt>, a: usize) {
    for i in a..c.len() {
        let (lo, hi) = c.split_at_mut(i);
        hi[0] += &lo[i - a];
    }
    let len = c.len() - a;
    debug_assert!(c[len..].iter().all(|x| x.is_zero()), "inexact division");
    c.truncate(len);
}

impl Iterator for CentralBinomials {
    type Item = IntPoly;

    fn next(&mut self) -> Option<IntPoly> {
        let k = self.k;
        let out = IntPoly::from_coeffs(self.current.clone());
        let c = &mut self.current;
        mul_binomial_in_place(c, 2 * k + 1, -1);
        mul_binomial_in_place(c, k + 1, 1);
        div_one_minus_in_place(c, k + 1);
        self.k += 1;
        Some(out)
    }
}

/// Memo of cyclotomic polynomials, safe to share between threads.
#[derive(Debug, Default)]
pub struct CycloCache {
    memo: RwLock<HashMap<u64, Arc<IntPoly>>>,
}

impl CycloCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `Φ_n(q) = (qⁿ − 1) / ∏_{d|n, d<n} Φ_d(q)`.
    pub fn get(&self, n: u64) -> Result<Arc<IntPoly>, PolyError> {
        assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
        if let Some(p) = self.memo.read().expect("cyclotomic memo poisoned").get(&n) {
            return Ok(Arc::clone(p));
        }
        let mut value = &IntPoly::monomial(one(), n as usize) - &IntPoly::one();
        for d in proper_divisors(n) {
            value = value.divexact(&*self.get(d)?)?;
        }
        let value = Arc::new(value);
        self.memo
            .write()
            .expect("cyclotomic memo poisoned")
            .entry(n)
            .or_insert_with(|| Arc::clone(&value));
        Ok(value)
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("cyclotomic memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

static GLOBAL_CYCLO: OnceLock<CycloCache> = OnceLock::new();

/// `Φ_n(q)` from the process-wide cache.
pub fn cyclotomic(n: u64) -> Arc<IntPoly> {
    GLOBAL_CYCLO
        .get_or_init(CycloCache::new)
        .get(n)
        .expect("qⁿ−1 is divisible by Φ_d for every d | n")
}

pub fn proper_divisors(n: u64) -> Vec<u64> {
    (1..n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}
