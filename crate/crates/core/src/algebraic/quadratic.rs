//! Exact arithmetic in a quadratic field `ℚ(√d)`.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{is_squarefree, sign_of};
use crate::error::{domain, Result};

/// `a + b·√d` with rational `a`, `b` and a fixed square-free `d ≠ 0, 1`.
///
/// `d` may be negative; `√d` then means `i·√|d|`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticElem {
    a: BigRational,
    b: BigRational,
    d: BigInt,
}

impl QuadraticElem {
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Result<Self> {
        if d.is_zero() || d.is_one() || !is_squarefree(&d) {
            return Err(domain("quadratic field needs a square-free d other than 0 and 1"));
        }
        Ok(Self { a, b, d })
    }

    /// `a + b√d` from integers.
    pub fn from_ints(a: i64, b: i64, d: i64) -> Result<Self> {
        Self::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
            d.into(),
        )
    }

    pub fn rational(a: BigRational, d: &BigInt) -> Self {
        Self {
            a,
            b: BigRational::zero(),
            d: d.clone(),
        }
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// `a² − d·b²`
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(self.d.clone()) * &self.b * &self.b
    }

    /// `2a`
    pub fn trace(&self) -> BigRational {
        &self.a + &self.a
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.d, other.d, "mixing elements of different quadratic fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        Self {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_field(other);
        Self {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        let d = BigRational::from_integer(self.d.clone());
        Self {
            a: &self.a * &other.a + d * &self.b * &other.b,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d.clone(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self {
            a: &self.a * k,
            b: &self.b * k,
            d: self.d.clone(),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(self.conj().scale(&n.recip()))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents invert (None for zero).
    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::rational(BigRational::one(), &self.d);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Some(acc)
    }

    /// Membership in the ring of integers of `ℚ(√d)`.
    pub fn is_integral(&self) -> bool {
        let two = BigInt::from(2);
        let ta = &self.a * BigRational::from_integer(two.clone());
        let tb = &self.b * BigRational::from_integer(two.clone());
        if !ta.is_integer() || !tb.is_integer() {
            return false;
        }
        let (u, v) = (ta.to_integer(), tb.to_integer());
        if self.d.mod_floor(&BigInt::from(4)) == BigInt::one() {
            // (u + v√d)/2 is integral iff u ≡ v (mod 2).
            (&u - &v).is_even()
        } else {
            u.is_even() && v.is_even()
        }
    }

    /// Exact sign of the real number `a + b√d` (requires `d > 0`).
    pub fn sign(&self) -> i8 {
        assert!(self.d.is_positive(), "sign of a non-real quadratic number");
        let sa = sign_of(&self.a.numer().clone());
        let sb = sign_of(&self.b.numer().clone());
        if sa == sb || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let db2 = BigRational::from_integer(self.d.clone()) * &self.b * &self.b;
        if a2 > db2 {
            sa
        } else {
            sb
        }
    }

    /// Floating approximation `(re, im)`.
    pub fn to_f64(&self) -> (f64, f64) {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        if d > 0.0 {
            (a + b * libm::sqrt(d), 0.0)
        } else {
            (a, b * libm::sqrt(-d))
        }
    }
}

impl fmt::Display for QuadraticElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{} ", self.a)?;
            f.write_str(if self.b.is_negative() { "- " } else { "+ " })?;
        } else if self.b.is_negative() {
            f.write_str("-")?;
        }
        let b = self.b.abs();
        if !b.is_one() {
            write!(f, "{b}*")?;
        }
        write!(f, "√{}", self.d)
    }
}
