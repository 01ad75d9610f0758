//! Exact integer primitives: square roots, squares, square-freeness and the
//! periodic continued fraction of `√d`.

use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};

/// `⌊√n⌋` for `n ≥ 0`.
///
/// Newton iteration from an overestimate `2^⌈bits/2⌉`; the iterates decrease
/// strictly until they reach the floor, and a final two-sided correction pins
/// the result.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return Err(domain("isqrt of a negative integer"));
    }
    if n.is_zero() {
        return Ok(BigInt::zero());
    }
    let bits = n.bits();
    let mut x = BigInt::one() << bits.div_ceil(2);
    loop {
        let next = (&x + n / &x) >> 1u32;
        if next >= x {
            break;
        }
        x = next;
    }
    while &x * &x > *n {
        x -= 1u32;
    }
    loop {
        let up = &x + 1u32;
        if &up * &up <= *n {
            x = up;
        } else {
            break;
        }
    }
    Ok(x)
}

/// Returns the square root when `n` is a perfect square (negatives never are).
pub fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    // Quadratic residues mod 64 reject most non-squares without a root.
    let low = (n & BigInt::from(63u32)).to_u32_digits().1.first().copied().unwrap_or(0);
    if (0x0202_0212_0203_0213u64 >> low) & 1 == 0 {
        return None;
    }
    let r = isqrt(n).ok()?;
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Trial-division square-freeness test; adequate for `d` up to about `10¹²`.
pub fn is_squarefree(n: &BigInt) -> bool {
    let mut m = n.abs();
    if m.is_zero() {
        return false;
    }
    let mut p = BigInt::from(2u32);
    while &p * &p <= m {
        if (&m % &p).is_zero() {
            m /= &p;
            if (&m % &p).is_zero() {
                return false;
            }
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    true
}

/// Square-free part of a nonzero integer, keeping the sign: `n = s·f²`.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(!n.is_zero());
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut core = BigInt::one();
    let mut factor = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p <= m {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            factor *= &p;
        }
        if e % 2 == 1 {
            core *= &p;
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    // Whatever is left is 1 or a prime.
    if !m.is_one() {
        if let Some(r) = is_perfect_square(&m) {
            factor *= r;
        } else {
            core *= m;
        }
    }
    (core * sign, factor)
}

/// Periodic simple continued fraction `√d = [a₀; a₁, …, a_L]` (period repeats).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub a0: BigInt,
    pub period: Vec<BigInt>,
}

impl ContinuedFraction {
    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    /// Partial quotient `a_i` for any `i ≥ 0`.
    pub fn term(&self, i: usize) -> &BigInt {
        if i == 0 {
            &self.a0
        } else {
            &self.period[(i - 1) % self.period.len()]
        }
    }
}

/// Continued fraction of `√d` for a non-square `d > 1`.
pub fn cf_sqrt(d: &BigInt) -> Result<ContinuedFraction> {
    if *d <= BigInt::one() {
        return Err(domain("continued fraction of √d needs d > 1"));
    }
    if is_perfect_square(d).is_some() {
        return Err(domain("√d is rational for a perfect square d"));
    }
    let a0 = isqrt(d)?;
    let two_a0 = &a0 << 1u32;
    let mut m = BigInt::zero();
    let mut q = BigInt::one();
    let mut a = a0.clone();
    let mut period = Vec::new();
    loop {
        m = &q * &a - &m;
        q = (d - &m * &m) / &q;
        a = (&a0 + &m) / &q;
        period.push(a.clone());
        if a == two_a0 {
            break;
        }
    }
    Ok(ContinuedFraction { a0, period })
}

/// Convergent numerators and denominators `(p_k, q_k)` for `k < count`.
pub fn convergent_pairs(cf: &ContinuedFraction, count: usize) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::with_capacity(count);
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p, mut q) = (cf.a0.clone(), BigInt::one());
    for k in 0..count {
        if k > 0 {
            let a = cf.term(k);
            let p_next = a * &p + &p_prev;
            let q_next = a * &q + &q_prev;
            p_prev = core::mem::replace(&mut p, p_next);
            q_prev = core::mem::replace(&mut q, q_next);
        }
        out.push((p.clone(), q.clone()));
    }
    out
}

/// First `count` convergents as reduced rationals.
pub fn convergents(cf: &ContinuedFraction, count: usize) -> Vec<BigRational> {
    convergent_pairs(cf, count)
        .into_iter()
        .map(|(p, q)| BigRational::new(p, q))
        .collect()
}

pub(crate) fn sign_of(n: &BigInt) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
