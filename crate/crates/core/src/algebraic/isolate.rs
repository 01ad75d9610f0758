//! Certified isolation of the complex roots of a square-free integer polynomial.
//!
//! Approximations come from Durand–Kerner (Weierstrass) iteration carried out
//! in exact fixed-point Gaussian integers. They are then certified with the
//! Weierstrass inclusion theorem: with corrections `Wᵢ = f(zᵢ)/(lc·∏_{j≠i}(zᵢ−zⱼ))`,
//! every root lies in some disk `|z − zᵢ| ≤ n|Wᵢ|`, and a connected component of
//! `m` disks holds exactly `m` roots. We circumscribe each disk by a square with
//! a dyadic half-width and accept only when all squares are pairwise disjoint,
//! which makes every square an isolating box. All certificate arithmetic is exact.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::isqrt;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Axis-parallel square `center ± half_width` holding exactly one root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBox {
    pub re: BigRational,
    pub im: BigRational,
    pub half_width: BigRational,
    pub real: bool,
}

impl RootBox {
    pub fn intersects(&self, other: &RootBox) -> bool {
        let reach = &self.half_width + &other.half_width;
        (&self.re - &other.re).abs() <= reach && (&self.im - &other.im).abs() <= reach
    }
}

#[derive(Clone, Debug)]
struct Gauss {
    re: BigInt,
    im: BigInt,
}

impl Gauss {
    fn sub(&self, o: &Self) -> Self {
        Self {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    /// Exact product of Gaussian integers.
    fn mul_exact(&self, o: &Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    /// Fixed-point product at scale `2^p`.
    fn mul(&self, o: &Self, p: u32) -> Self {
        let e = self.mul_exact(o);
        Self {
            re: e.re >> p,
            im: e.im >> p,
        }
    }

    fn div(&self, o: &Self, p: u32) -> Option<Self> {
        let den = &o.re * &o.re + &o.im * &o.im;
        if den.is_zero() {
            return None;
        }
        let re = ((&self.re * &o.re + &self.im * &o.im) << p) / &den;
        let im = ((&self.im * &o.re - &self.re * &o.im) << p) / &den;
        Some(Self { re, im })
    }

    fn norm_sq(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn max_abs_component(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }

    fn rescale(&self, from: u32, to: u32) -> Self {
        if to >= from {
            Self {
                re: &self.re << (to - from),
                im: &self.im << (to - from),
            }
        } else {
            Self {
                re: &self.re >> (from - to),
                im: &self.im >> (from - to),
            }
        }
    }
}

fn eval_fixed(f: &IntPoly, z: &Gauss, p: u32) -> Gauss {
    let mut acc = Gauss {
        re: f.lc() << p,
        im: BigInt::zero(),
    };
    for c in f.coeffs().iter().rev().skip(1) {
        acc = acc.mul(z, p);
        acc.re += c << p;
    }
    acc
}

/// One Durand–Kerner run; returns whether the last sweep's corrections were tiny.
fn durand_kerner(f: &IntPoly, zs: &mut [Gauss], p: u32, max_iter: usize) -> bool {
    let n = zs.len();
    let lc = Gauss {
        re: f.lc() << p,
        im: BigInt::zero(),
    };
    for _ in 0..max_iter {
        let mut biggest = BigInt::zero();
        let mut top_bits = 0u64;
        for i in 0..n {
            let num = eval_fixed(f, &zs[i], p);
            let mut den = lc.clone();
            for j in 0..n {
                if j != i {
                    den = den.mul(&zs[i].sub(&zs[j]), p);
                }
            }
            match num.div(&den, p) {
                Some(w) => {
                    biggest = biggest.max(w.max_abs_component());
                    zs[i] = zs[i].sub(&w);
                }
                None => {
                    // Coincident iterates: nudge and keep going.
                    zs[i].re += BigInt::one() << (p / 2);
                    zs[i].im += BigInt::one() << (p / 3);
                    biggest = BigInt::one() << p;
                }
            }
            top_bits = top_bits.max(zs[i].max_abs_component().bits());
        }
        let slack = 12 + top_bits.saturating_sub(u64::from(p));
        if biggest.bits() <= slack {
            return true;
        }
    }
    false
}

fn initial_guesses(f: &IntPoly, p: u32, attempt: u32) -> Vec<Gauss> {
    let n = f.degree();
    let coeffs = f.coeffs();
    let lo = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let spread = if n > lo {
        (coeffs[lo].bits() as i64 - f.lc().bits() as i64) / (n - lo) as i64
    } else {
        0
    };
    let spread = spread.clamp(-(i64::from(p) / 2), i64::from(p));
    let one = BigInt::one() << p;
    // Base point ≈ 0.4 + 0.9i, turned a little further on every retry.
    let mut w = Gauss {
        re: (&one * 4) / 10,
        im: (&one * 9) / 10,
    };
    for _ in 0..attempt {
        w = w.mul(
            &Gauss {
                re: (&one * 9) / 10,
                im: (&one * 4) / 10,
            },
            p,
        );
    }
    let mut z = Gauss {
        re: if spread >= 0 {
            &one << spread as u32
        } else {
            &one >> (-spread) as u32
        },
        im: BigInt::zero(),
    };
    (0..n)
        .map(|_| {
            z = z.mul(&w, p);
            z.clone()
        })
        .collect()
}

/// Upper bound `≥ √x` with denominator `2^q`.
pub(crate) fn sqrt_upper(x: &BigRational, q: u32) -> BigRational {
    let scaled = (x * BigRational::from_integer(BigInt::one() << (2 * q))).floor().to_integer();
    let s = isqrt(&scaled).expect("nonnegative") + 1u32;
    BigRational::new(s, BigInt::one() << q)
}

/// Lower bound `≤ √x` with denominator `2^q`.
pub(crate) fn sqrt_lower(x: &BigRational, q: u32) -> BigRational {
    let scaled = (x * BigRational::from_integer(BigInt::one() << (2 * q))).floor().to_integer();
    BigRational::new(isqrt(&scaled).expect("nonnegative"), BigInt::one() << q)
}

fn certify(f: &IntPoly, zs: &[Gauss], p: u32) -> Option<Vec<RootBox>> {
    let n = zs.len();
    let scale = BigInt::one() << p;
    let lc = f.lc();
    let mut boxes = Vec::with_capacity(n);
    for (i, z) in zs.iter().enumerate() {
        // 2^{pn}·f(z/2^p), exactly.
        let mut acc = Gauss {
            re: lc.clone(),
            im: BigInt::zero(),
        };
        for (step, c) in f.coeffs().iter().rev().skip(1).enumerate() {
            acc = acc.mul_exact(z);
            acc.re += c << (p * (step as u32 + 1));
        }
        let mut prod = Gauss {
            re: BigInt::one(),
            im: BigInt::zero(),
        };
        for (j, w) in zs.iter().enumerate() {
            if j != i {
                prod = prod.mul_exact(&z.sub(w));
            }
        }
        let pn = prod.norm_sq();
        if pn.is_zero() {
            return None;
        }
        let nn = BigInt::from(n * n);
        let radius_sq = BigRational::new(
            acc.norm_sq() * nn,
            (BigInt::one() << (2 * p)) * &lc * &lc * pn,
        );
        boxes.push(RootBox {
            re: BigRational::new(z.re.clone(), scale.clone()),
            im: BigRational::new(z.im.clone(), scale.clone()),
            half_width: sqrt_upper(&radius_sq, p + 8),
            real: false,
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            if boxes[i].intersects(&boxes[j]) {
                return None;
            }
        }
    }
    for i in 0..n {
        if boxes[i].im.abs() > boxes[i].half_width {
            continue;
        }
        let mirror = RootBox {
            im: -boxes[i].im.clone(),
            ..boxes[i].clone()
        };
        if (0..n).any(|j| j != i && mirror.intersects(&boxes[j])) {
            // Cannot decide realness at this precision.
            return None;
        }
        boxes[i].real = true;
    }
    Some(boxes)
}

/// Isolating boxes for all roots of a square-free `f`, each of half-width at
/// most `2^-min_bits` (rational roots of linear `f` are exact).
pub fn isolate(f: &IntPoly, min_bits: u32) -> Result<Vec<RootBox>> {
    let n = f.degree();
    if f.is_zero() || n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![RootBox {
            re: BigRational::new(-f.coeff(0), f.coeff(1)),
            im: BigRational::zero(),
            half_width: BigRational::zero(),
            real: true,
        }]);
    }
    let target = BigRational::new(BigInt::one(), BigInt::one() << min_bits);
    let mut p: u32 = 64.max(min_bits + 16);
    let mut attempt = 0u32;
    let mut zs = initial_guesses(f, p, attempt);
    let mut converged = durand_kerner(f, &mut zs, p, 200 + 40 * n);
    loop {
        if converged {
            if let Some(boxes) = certify(f, &zs, p) {
                if boxes.iter().all(|b| b.half_width <= target) {
                    return Ok(boxes);
                }
            }
            if p >= 1 << 14 {
                return Err(Error::Numerical(alloc::format!(
                    "could not certify roots of {f} at {p} bits"
                )));
            }
            let next = p * 2;
            zs = zs.iter().map(|z| z.rescale(p, next)).collect();
            p = next;
            converged = durand_kerner(f, &mut zs, p, 60 + 10 * n);
        } else {
            attempt += 1;
            if attempt > 8 {
                return Err(Error::Numerical(alloc::format!(
                    "Durand–Kerner iteration stalled on {f}"
                )));
            }
            zs = initial_guesses(f, p, attempt);
            converged = durand_kerner(f, &mut zs, p, 400 + 80 * n);
        }
    }
}

/// A complex disk with rational center; the radius is an upper bound on the
/// distance to the value it encloses.
#[derive(Clone, Debug)]
pub(crate) struct Ball {
    pub re: BigRational,
    pub im: BigRational,
    pub rad: BigRational,
}

fn round_to(x: &BigRational, p: u32) -> BigRational {
    let s = BigInt::one() << p;
    BigRational::new((x * BigRational::from_integer(s.clone())).floor().to_integer(), s)
}

impl Ball {
    pub fn from_box(b: &RootBox) -> Self {
        Self {
            re: b.re.clone(),
            im: b.im.clone(),
            rad: &b.half_width * BigRational::new(3.into(), 2.into()),
        }
    }

    pub fn exact(re: BigRational, im: BigRational) -> Self {
        Self {
            re,
            im,
            rad: BigRational::zero(),
        }
    }

    fn rounding_slack(p: u32) -> BigRational {
        BigRational::new(BigInt::from(2), BigInt::one() << p)
    }

    fn modulus_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn mul(&self, o: &Self, p: u32) -> Self {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        let a = sqrt_upper(&self.modulus_sq(), p + 4);
        let b = sqrt_upper(&o.modulus_sq(), p + 4);
        let rad = &a * &o.rad + &b * &self.rad + &self.rad * &o.rad + Self::rounding_slack(p);
        Self {
            re: round_to(&re, p),
            im: round_to(&im, p),
            rad,
        }
    }

    pub fn pow(&self, mut e: u64, p: u32) -> Self {
        let mut acc = Self::exact(BigRational::one(), BigRational::zero());
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq, p);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq, p);
            }
        }
        acc
    }

    /// Enclosure of `1/z`; `None` when the ball may contain zero.
    pub fn inv(&self, p: u32) -> Option<Self> {
        let m2 = self.modulus_sq();
        let lower = sqrt_lower(&m2, p + 4);
        if lower <= self.rad {
            return None;
        }
        let re = &self.re / &m2;
        let im = -&self.im / &m2;
        let rad = &self.rad / (&lower * (&lower - &self.rad)) + Self::rounding_slack(p);
        Some(Self {
            re: round_to(&re, p),
            im: round_to(&im, p),
            rad,
        })
    }

    pub fn meets(&self, b: &RootBox) -> bool {
        let reach = &self.rad + &b.half_width;
        (&self.re - &b.re).abs() <= reach && (&self.im - &b.im).abs() <= reach
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn centers(f: &IntPoly) -> Vec<(f64, f64, bool)> {
        let mut v: Vec<_> = isolate(f, 40)
            .unwrap()
            .into_iter()
            .map(|b| (b.re.to_f64().unwrap(), b.im.to_f64().unwrap(), b.real))
            .collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    #[test]
    fn isolates_quadratic_units() {
        let r = centers(&p(&[1, -4, 1]));
        assert!((r[0].0 - (2.0 - 3f64.sqrt())).abs() < 1e-10 && r[0].2);
        assert!((r[1].0 - (2.0 + 3f64.sqrt())).abs() < 1e-10 && r[1].2);
    }

    #[test]
    fn detects_complex_pairs() {
        let r = centers(&p(&[1, -1, 1]));
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|c| !c.2 && (c.0 - 0.5).abs() < 1e-10));
        assert!((r[1].1 - 3f64.sqrt() / 2.0).abs() < 1e-10);
    }

    #[test]
    fn boxes_are_tight_and_disjoint() {
        let f = p(&[-1, -1, -1, 1]); // tribonacci
        let boxes = isolate(&f, 100).unwrap();
        let tiny = BigRational::new(BigInt::one(), BigInt::one() << 100u32);
        assert!(boxes.iter().all(|b| b.half_width <= tiny));
        assert_eq!(boxes.iter().filter(|b| b.real).count(), 1);
    }

    #[test]
    fn clustered_and_large_roots() {
        // (x − 1000)(x − 1001)(x² + 1)
        let f = p(&[-1000, 1]).mul(&p(&[-1001, 1])).mul(&p(&[1, 0, 1]));
        let r = centers(&f);
        assert_eq!(r.len(), 4);
        assert!((r[3].0 - 1001.0).abs() < 1e-9);
        let f = p(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(isolate(&f, 30).unwrap().len(), 12);
    }

    #[test]
    fn ball_power_encloses() {
        let b = Ball::exact(BigRational::new(1.into(), 2.into()), BigRational::zero());
        let q = b.pow(10, 64);
        let exact = BigRational::new(1.into(), 1024.into());
        assert!((&q.re - exact).abs() <= q.rad);
        let inv = b.inv(64).unwrap();
        assert!((&inv.re - BigRational::from_integer(2.into())).abs() <= inv.rad);
    }
}
