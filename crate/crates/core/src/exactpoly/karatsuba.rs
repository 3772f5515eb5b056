//! Coefficient-slice multiplication: schoolbook below a cut-over length,
//! Karatsuba above it. Inputs need not be trimmed; outputs have length
//! `a.len() + b.len() - 1` (or zero for an empty operand).

use super::Scalar;

/// Operand length at or below which [`mul_karatsuba`] falls back to schoolbook.
pub const KARATSUBA_THRESHOLD: usize = 32;

pub fn mul_schoolbook<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &x.mul_ref(y);
            }
        }
    }
    out
}

pub fn mul_karatsuba<T: Scalar>(a: &[T], b: &[T], threshold: usize) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let threshold = threshold.max(1);
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if short.len() <= threshold {
        return mul_schoolbook(a, b);
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    if short.len() * 2 <= long.len() {
        // Unbalanced: slice the long operand into blocks of the short length.
        for (idx, chunk) in long.chunks(short.len()).enumerate() {
            let part = mul_karatsuba(short, chunk, threshold);
            add_at(&mut out, &part, idx * short.len());
        }
        return out;
    }

    let half = long.len().div_ceil(2);
    let (a0, a1) = split(a, half);
    let (b0, b1) = split(b, half);

    let z0 = mul_karatsuba(a0, b0, threshold);
    let z2 = mul_karatsuba(a1, b1, threshold);
    let sa = sum(a0, a1);
    let sb = sum(b0, b1);
    let mut z1 = mul_karatsuba(&sa, &sb, threshold);
    sub_at(&mut z1, &z0);
    sub_at(&mut z1, &z2);

    add_at(&mut out, &z0, 0);
    add_at(&mut out, &z1, half);
    add_at(&mut out, &z2, 2 * half);
    out
}

fn split<T>(x: &[T], at: usize) -> (&[T], &[T]) {
    if x.len() <= at {
        (x, &[])
    } else {
        x.split_at(at)
    }
}

fn sum<T: Scalar>(x: &[T], y: &[T]) -> Vec<T> {
    let mut out = x.to_vec();
    if out.len() < y.len() {
        out.resize(y.len(), T::zero());
    }
    for (o, v) in out.iter_mut().zip(y) {
        *o += v;
    }
    out
}

fn add_at<T: Scalar>(out: &mut [T], part: &[T], offset: usize) {
    for (o, v) in out[offset..].iter_mut().zip(part) {
        *o += v;
    }
}

// `part` may be longer than `out` only by trailing zeros.
fn sub_at<T: Scalar>(out: &mut [T], part: &[T]) {
    for (i, v) in part.iter().enumerate() {
        match out.get_mut(i) {
            Some(o) => *o -= v,
            None => debug_assert!(v.is_zero()),
        }
    }
}
