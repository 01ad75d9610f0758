//! Elements of a multiquadratic field `ℚ(i, √p₁, √p₂, …)`.
//!
//! Used to test power identities between numbers that live in different
//! quadratic fields (say a root in `ℚ(√5)` against a unit of `ℚ(√2)`). The
//! radicals `iᵉ·√n` with `n` square-free are linearly independent over `ℚ`,
//! so two elements are equal exactly when their coefficient maps agree.

use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QuadraticElem;

/// `iᵉ·√n`, `e ∈ {0, 1}`, `n ≥ 1` square-free.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct Radical {
    imaginary: bool,
    n: BigInt,
}

impl Radical {
    fn one() -> Self {
        Self {
            imaginary: false,
            n: BigInt::one(),
        }
    }

    /// Product of two radicals as `sign · g · radical`.
    fn mul(&self, other: &Self) -> (BigRational, Radical) {
        let g = self.n.gcd(&other.n);
        let n = (&self.n / &g) * (&other.n / &g);
        let mut coeff = BigRational::from_integer(g);
        let imaginary = self.imaginary ^ other.imaginary;
        if self.imaginary && other.imaginary {
            coeff = -coeff;
        }
        (coeff, Radical { imaginary, n })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiQuad {
    terms: BTreeMap<Radical, BigRational>,
}

impl MultiQuad {
    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Radical::one(), c);
        }
        Self { terms }
    }

    pub fn from_quadratic(e: &QuadraticElem) -> Self {
        let mut out = Self::rational(e.a().clone());
        if !e.b().is_zero() {
            let rad = Radical {
                imaginary: e.d().is_negative(),
                n: e.d().abs(),
            };
            out.terms.insert(rad, e.b().clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Radical, BigRational> = BTreeMap::new();
        for (ra, ca) in &self.terms {
            for (rb, cb) in &other.terms {
                let (k, r) = ra.mul(rb);
                let entry = terms.entry(r).or_insert_with(BigRational::zero);
                *entry += k * ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one();
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }
}
