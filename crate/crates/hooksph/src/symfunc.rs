//! Elementary and complete homogeneous symmetric polynomials, Pochhammer
//! symbols, factorials and binomial coefficients, over any [`Ring`].

use alloc::vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::{int, Rational, Ring};

/// e_k of the given values; e_0 = 1 and e_k = 0 once k exceeds the length.
/// Single-pass dynamic programming, no subset enumeration.
pub fn elem_sym<R: Ring>(k: usize, vals: &[R]) -> R {
    if k > vals.len() {
        return R::zero();
    }
    let mut e = vec![R::zero(); k + 1];
    e[0] = R::one();
    for v in vals {
        for j in (1..=k).rev() {
            e[j] = e[j].add(&v.mul(&e[j - 1]));
        }
    }
    e.pop().unwrap()
}

/// h_k of the given values; h_0 = 1, and h_k of the empty list is 0 for
/// k >= 1.
pub fn complete_sym<R: Ring>(k: usize, vals: &[R]) -> R {
    if vals.is_empty() {
        return if k == 0 { R::one() } else { R::zero() };
    }
    let mut h = vec![R::zero(); k + 1];
    h[0] = R::one();
    for v in vals {
        for j in 1..=k {
            let t = v.mul(&h[j - 1]);
            h[j] = h[j].add(&t);
        }
    }
    h.pop().unwrap()
}

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    let mut out: Rational = One::one();
    let mut t = a.clone();
    for _ in 0..n {
        out *= &t;
        t += int(1);
    }
    out
}

pub fn factorial(n: usize) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=n {
        out *= BigInt::from(i);
    }
    out
}

/// Binomial coefficient with nonnegative arguments, as an exact integer.
pub fn choose(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// Binomial coefficient by falling product, n (n-1) ... (n-k+1) / k!, so a
/// negative upper argument is legal: binomial(-2, 2) = 3.
pub fn binomial(n: i64, k: usize) -> Rational {
    let mut num = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n) - BigInt::from(i);
    }
    Rational::new(num, factorial(k))
}
