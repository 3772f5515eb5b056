//! Integer-polynomial products by Kronecker substitution: pack each operand
//! into one big integer with fixed-width slots, multiply once, unpack.
//! Signed coefficients are read back as balanced digits.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};

/// Shorter operand length from which packing beats coefficient-wise products.
pub const KRONECKER_MIN_LEN: usize = 8;

pub fn mul_kronecker(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let bits = |s: &[BigInt]| s.iter().map(|c| c.bits()).max().unwrap_or(0);
    let overlap = a.len().min(b.len()) as u64;
    let log = 64 - overlap.leading_zeros() as u64;
    // |c| < 2^(ba + bb + log) for every product coefficient; one extra bit
    // for the sign and one of slack.
    let width = bits(a) + bits(b) + log + 2;
    let out_len = a.len() + b.len() - 1;
    let product = pack(a, width) * pack(b, width);
    unpack(&product, width, out_len)
}

fn pack(coeffs: &[BigInt], width: u64) -> BigInt {
    let words = (coeffs.len() as u64 * width).div_ceil(32) as usize + 1;
    let mut pos = vec![0u32; words];
    let mut neg = vec![0u32; words];
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let target = if c.is_negative() { &mut neg } else { &mut pos };
        let offset = i as u64 * width;
        let (w, sh) = ((offset / 32) as usize, (offset % 32) as u32);
        for (k, d) in c.magnitude().iter_u32_digits().enumerate() {
            let wide = u64::from(d) << sh;
            target[w + k] |= wide as u32;
            if sh > 0 {
                target[w + k + 1] |= (wide >> 32) as u32;
            }
        }
    }
    BigInt::from(BigUint::new(pos)) - BigInt::from(BigUint::new(neg))
}

/// `width` bits starting at bit `start` of the little-endian word slice.
fn slot(words: &[u32], start: u64, width: u64) -> BigUint {
    let (w, sh) = ((start / 32) as usize, (start % 32) as u32);
    let count = (u64::from(sh) + width).div_ceil(32) as usize;
    let mut out: Vec<u32> = (0..count)
        .map(|k| {
            let lo = words.get(w + k).copied().unwrap_or(0);
            let hi = words.get(w + k + 1).copied().unwrap_or(0);
            ((u64::from(hi) << 32 | u64::from(lo)) >> sh) as u32
        })
        .collect();
    let keep = width.div_ceil(32) as usize;
    out.truncate(keep);
    let top_bits = (width % 32) as u32;
    if top_bits != 0 {
        if let Some(last) = out.last_mut() {
            *last &= (1u32 << top_bits) - 1;
        }
    }
    BigUint::new(out)
}

fn unpack(value: &BigInt, width: u64, len: usize) -> Vec<BigInt> {
    let (sign, words) = value.to_u32_digits();
    let full = BigInt::from(1u8) << width;
    let half = BigUint::from(1u8) << (width - 1);
    let mut carry = false;
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let mut v = slot(&words, i as u64 * width, width);
        if carry {
            v += 1u8;
        }
        carry = v >= half;
        let digit = if carry {
            BigInt::from(v) - &full
        } else {
            BigInt::from(v)
        };
        out.push(if sign == Sign::Minus { -digit } else { digit });
    }
    debug_assert!(!carry, "Kronecker slot width too small");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::mul_schoolbook;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_products() {
        assert_eq!(
            mul_kronecker(&big(&[1, 1]), &big(&[1, -1])),
            big(&[1, 0, -1])
        );
        assert_eq!(
            mul_kronecker(&big(&[-3]), &big(&[2, 0, 5])),
            big(&[-6, 0, -15])
        );
        assert_eq!(mul_kronecker(&big(&[0, 0]), &big(&[7])), big(&[0, 0]));
        assert!(mul_kronecker(&[], &big(&[1])).is_empty());
    }

    #[test]
    fn wide_coefficients() {
        let huge = BigInt::from(3u8).pow(200);
        let a = vec![huge.clone(), -huge.clone(), BigInt::from(1)];
        let b = vec![-huge.clone(), BigInt::from(0), huge.clone() * 7];
        assert_eq!(mul_kronecker(&a, &b), mul_schoolbook(&a, &b));
    }

    proptest! {
        #[test]
        fn matches_schoolbook(
            a in prop::collection::vec(any::<i64>(), 1..60),
            b in prop::collection::vec(any::<i64>(), 1..60),
            scale in 0u32..3,
        ) {
            let boost = BigInt::from(u64::MAX).pow(scale);
            let a: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x) * &boost).collect();
            let b: Vec<BigInt> = b.iter().map(|&x| BigInt::from(x)).collect();
            prop_assert_eq!(mul_kronecker(&a, &b), mul_schoolbook(&a, &b));
        }
    }
}
