//! Algebraic numbers given by a minimal polynomial and an isolating box, and
//! the exact predicates on them: root of unity, degeneracy of a polynomial's
//! root ratios, bounded multiplicative dependence and the excluded binary form.

mod isolate;
mod multiquad;
mod quadratic;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{is_perfect_square, squarefree_decompose};
use crate::error::{domain, Error, Result};
use crate::poly::{cyclotomic, interpolate, orders_with_phi_at_most, resultant_formal, IntPoly, RatPoly};

pub use isolate::{isolate, RootBox};
pub use multiquad::MultiQuad;
pub use quadratic::QuadraticElem;

pub(crate) use isolate::{sqrt_lower, sqrt_upper, Ball};

const MAX_BITS: u32 = 1 << 13;

/// An algebraic number: the primitive irreducible polynomial it satisfies and
/// a box in `ℂ` that contains no other root of that polynomial.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    min_poly: IntPoly,
    root: RootBox,
}

impl AlgebraicNumber {
    pub(crate) fn from_parts(min_poly: IntPoly, root: RootBox) -> Self {
        Self { min_poly, root }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        let min_poly = IntPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
        Self {
            min_poly,
            root: RootBox {
                re: q.clone(),
                im: BigRational::zero(),
                half_width: BigRational::zero(),
                real: true,
            },
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(n.into()))
    }

    pub fn from_quadratic(e: &QuadraticElem) -> Result<Self> {
        if e.is_rational() {
            return Ok(Self::from_rational(e.a()));
        }
        // x² − 2a·x + N(e), cleared of denominators.
        let m = RatPoly::new(vec![e.norm(), -e.trace(), BigRational::one()]).to_primitive();
        let root = locate(&m, |bits| Some(quadratic_ball(e, bits)))?;
        Ok(Self { min_poly: m, root })
    }

    pub fn min_poly(&self) -> &IntPoly {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.min_poly.degree()
    }

    pub fn isolating_box(&self) -> &RootBox {
        &self.root
    }

    pub fn is_real(&self) -> bool {
        self.root.real
    }

    pub fn is_zero(&self) -> bool {
        self.degree() == 1 && self.min_poly.coeff(0).is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        (self.degree() == 1).then(|| self.root.re.clone())
    }

    /// Closed form `a + b√s` when the minimal polynomial is quadratic.
    pub fn as_quadratic(&self) -> Option<QuadraticElem> {
        if self.degree() != 2 {
            return None;
        }
        let (c0, c1, c2) = (self.min_poly.coeff(0), self.min_poly.coeff(1), self.min_poly.coeff(2));
        let disc = &c1 * &c1 - BigInt::from(4) * &c2 * &c0;
        let (s, f) = squarefree_decompose(&disc);
        let den = BigRational::from_integer(&c2 * 2);
        let a = BigRational::from_integer(-c1) / &den;
        let b = BigRational::from_integer(f) / &den;
        let plus = QuadraticElem::new(a.clone(), b.clone(), s.clone()).ok()?;
        let minus = QuadraticElem::new(a, -b, s).ok()?;
        let mut bits = 32;
        while bits <= MAX_BITS {
            let here = self.refine(bits).ok()?;
            let p = quadratic_ball(&plus, bits + 8).meets(&here.root);
            let m = quadratic_ball(&minus, bits + 8).meets(&here.root);
            match (p, m) {
                (true, false) => return Some(plus),
                (false, true) => return Some(minus),
                _ => bits *= 2,
            }
        }
        None
    }

    /// A copy whose box has half-width at most `2^-bits`.
    pub fn refine(&self, bits: u32) -> Result<Self> {
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits);
        if self.root.half_width <= target {
            return Ok(self.clone());
        }
        let mut b = bits;
        loop {
            let boxes = isolate(&self.min_poly, b)?;
            let hits: Vec<&RootBox> = boxes.iter().filter(|x| x.intersects(&self.root)).collect();
            if hits.len() == 1 {
                return Ok(Self {
                    min_poly: self.min_poly.clone(),
                    root: hits[0].clone(),
                });
            }
            if b >= MAX_BITS {
                return Err(Error::Numerical(format!("could not refine a root of {}", self.min_poly)));
            }
            b *= 2;
        }
    }

    pub(crate) fn ball(&self, bits: u32) -> Result<Ball> {
        Ok(Ball::from_box(&self.refine(bits)?.root))
    }

    /// Floating approximation `(re, im)`, good to about 60 bits.
    pub fn to_f64(&self) -> (f64, f64) {
        let r = self.refine(64).unwrap_or_else(|_| self.clone()).root;
        (r.re.to_f64().unwrap_or(f64::NAN), r.im.to_f64().unwrap_or(f64::NAN))
    }

    /// Decides equality exactly.
    pub fn same_value(&self, other: &Self) -> Result<bool> {
        if self.min_poly != other.min_poly {
            return Ok(false);
        }
        let mut bits = 32;
        loop {
            let a = self.refine(bits)?;
            let b = other.refine(bits)?;
            if !a.root.intersects(&b.root) {
                return Ok(false);
            }
            // Both boxes isolate the same root iff each one meets the other's
            // refinement from a common isolation run.
            let boxes = isolate(&self.min_poly, bits)?;
            let ia: Vec<usize> = (0..boxes.len()).filter(|&i| boxes[i].intersects(&a.root)).collect();
            let ib: Vec<usize> = (0..boxes.len()).filter(|&i| boxes[i].intersects(&b.root)).collect();
            if ia.len() == 1 && ib.len() == 1 {
                return Ok(ia[0] == ib[0]);
            }
            if bits >= MAX_BITS {
                return Err(Error::Numerical(String::from("equality test did not resolve")));
            }
            bits *= 2;
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        if let Some(e) = self.as_quadratic() {
            return write!(f, "{e}");
        }
        let (re, im) = self.to_f64();
        write!(f, "root of {} near {re:.12}{:+.12}i", self.min_poly, im)
    }
}

/// Rigorous disk around `a + b√d`.
fn quadratic_ball(e: &QuadraticElem, bits: u32) -> Ball {
    let d = BigRational::from_integer(e.d().abs());
    let lo = sqrt_lower(&d, bits + 4);
    let hi = sqrt_upper(&d, bits + 4);
    let part = e.b() * &lo;
    let rad = e.b().abs() * (&hi - &lo);
    if e.d().is_positive() {
        Ball {
            re: e.a() + part,
            im: BigRational::zero(),
            rad,
        }
    } else {
        Ball {
            re: e.a().clone(),
            im: part,
            rad,
        }
    }
}

/// The isolating box (for some root of square-free `f`) that a family of
/// shrinking enclosures of that root singles out.
fn locate(f: &IntPoly, ball_at: impl Fn(u32) -> Option<Ball>) -> Result<RootBox> {
    let mut bits = 64;
    while bits <= MAX_BITS {
        let boxes = isolate(f, bits)?;
        if let Some(ball) = ball_at(bits + 8) {
            let hits: Vec<&RootBox> = boxes.iter().filter(|b| ball.meets(b)).collect();
            match hits.len() {
                0 => return Err(Error::Numerical(format!("enclosure misses every root of {f}"))),
                1 => return Ok(hits[0].clone()),
                _ => {}
            }
        }
        bits *= 2;
    }
    Err(Error::Numerical(format!("could not single out a root of {f}")))
}

fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let small = n
        .to_u64()
        .filter(|&v| v < 1 << 40)
        .ok_or_else(|| Error::Resource(String::from("leading coefficient too large to factor")))?;
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= small {
        if small % i == 0 {
            out.push(BigInt::from(i));
            if i * i != small {
                out.push(BigInt::from(small / i));
            }
        }
        i += 1;
    }
    out.sort();
    Ok(out)
}

/// `b·∏(x − zᵢ)` rounded to integers, if every coefficient is near one.
fn rounded_product(boxes: &[&RootBox], b: &BigInt) -> Option<IntPoly> {
    let mut re = vec![BigRational::from_integer(b.clone())];
    let mut im = vec![BigRational::zero()];
    for z in boxes {
        let n = re.len();
        let mut nre = vec![BigRational::zero(); n + 1];
        let mut nim = vec![BigRational::zero(); n + 1];
        for k in 0..n {
            nre[k + 1] += &re[k];
            nim[k + 1] += &im[k];
            nre[k] -= &re[k] * &z.re - &im[k] * &z.im;
            nim[k] -= &re[k] * &z.im + &im[k] * &z.re;
        }
        re = nre;
        im = nim;
    }
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut coeffs = Vec::with_capacity(re.len());
    for (r, i) in re.iter().zip(&im) {
        if i.abs() >= quarter {
            return None;
        }
        let n = (r + &half).floor();
        if (r - &n).abs() >= quarter {
            return None;
        }
        coeffs.push(n.to_integer());
    }
    Some(IntPoly::new(coeffs))
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Irreducible factors of a square-free primitive `g`, each with isolating
/// boxes for its own roots.
///
/// Candidate factors come from products over subsets of certified roots; a
/// candidate is accepted only if it divides `g` exactly, and the smallest
/// factor found at each step is necessarily irreducible.
fn factor_squarefree(g: &IntPoly) -> Result<Vec<(IntPoly, Vec<RootBox>)>> {
    let mut g = g.primitive_part();
    let n = g.degree();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![(g.clone(), isolate(&g, 0)?)]);
    }
    let magnitude = g.cauchy_bound().bits() as u32 + 2;
    let bits = 24 + g.lc().bits() as u32 + (n as u32) * magnitude + n as u32;
    let mut roots = isolate(&g, bits)?;
    let mut out = Vec::new();
    'outer: while roots.len() > 1 {
        let m = roots.len();
        let divisors = positive_divisors(&g.lc())?;
        for size in 1..=m / 2 {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                let chosen: Vec<&RootBox> = idx.iter().map(|&i| &roots[i]).collect();
                for b in &divisors {
                    if let Some(h) = rounded_product(&chosen, b) {
                        if h.degree() == size {
                            if let Some(q) = g.div_exact(&h) {
                                let h = h.primitive_part();
                                let own: Vec<RootBox> = chosen.iter().map(|r| (*r).clone()).collect();
                                out.push((h, own));
                                let keep: Vec<RootBox> = (0..m)
                                    .filter(|i| !idx.contains(i))
                                    .map(|i| roots[i].clone())
                                    .collect();
                                roots = keep;
                                g = q.primitive_part();
                                continue 'outer;
                            }
                        }
                    }
                }
                if !next_combination(&mut idx, m) {
                    break;
                }
            }
        }
        break;
    }
    if g.degree() > 0 {
        out.push((g, roots));
    }
    // Linear factors get their exact rational root.
    for (h, boxes) in out.iter_mut() {
        if h.degree() == 1 {
            *boxes = isolate(h, 0)?;
        }
    }
    Ok(out)
}

/// Irreducible factorization over `ℤ` (content dropped): primitive factors
/// with positive leading coefficients and their multiplicities.
pub fn factor(f: &IntPoly) -> Result<Vec<(IntPoly, usize)>> {
    if f.is_zero() {
        return Err(domain("cannot factor the zero polynomial"));
    }
    let mut out = Vec::new();
    for (part, mult) in f.primitive_part().squarefree_factorization() {
        for (h, _) in factor_squarefree(&part)? {
            out.push((h, mult));
        }
    }
    out.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().cmp(b.0.coeffs())));
    Ok(out)
}

fn root_order(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Ordering {
    // Conjugates share their real part exactly while their box centers do not,
    // so real parts closer than the tolerance count as equal.
    let (ar, ai) = a.to_f64();
    let (br, bi) = b.to_f64();
    let close = |x: f64, y: f64| libm::fabs(x - y) <= 1e-12 * (1.0 + libm::fabs(x));
    a.degree().cmp(&b.degree()).then_with(|| {
        if !close(ar, br) {
            br.total_cmp(&ar)
        } else if !close(ai, bi) {
            bi.total_cmp(&ai)
        } else {
            Ordering::Equal
        }
    })
}

/// All distinct complex roots of `f` with their multiplicities.
///
/// Ordered by degree of the minimal polynomial, then by decreasing real part,
/// then by decreasing imaginary part.
pub fn roots_of(f: &IntPoly) -> Result<Vec<(AlgebraicNumber, usize)>> {
    if f.is_zero() {
        return Err(domain("the zero polynomial has no root set"));
    }
    let mut out = Vec::new();
    for (part, mult) in f.primitive_part().squarefree_factorization() {
        for (h, boxes) in factor_squarefree(&part)? {
            for b in boxes {
                out.push((AlgebraicNumber::from_parts(h.clone(), b), mult));
            }
        }
    }
    out.sort_by(|a, b| root_order(&a.0, &b.0));
    Ok(out)
}

/// Order `n` when `α` is a root of unity (`αⁿ = 1`, `n` minimal).
pub fn is_root_of_unity(alpha: &AlgebraicNumber) -> Result<Option<u64>> {
    if alpha.is_zero() {
        return Err(domain("zero is not a unit"));
    }
    let m = alpha.min_poly();
    if !m.is_monic() {
        return Ok(None);
    }
    let deg = m.degree() as u64;
    let modulus = m.to_rat();
    let x = RatPoly::x();
    for n in orders_with_phi_at_most(deg) {
        if x.pow_mod(n, &modulus) == RatPoly::one() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Integer polynomial whose roots include every ratio `αᵢ/αⱼ (i ≠ j)` of roots
/// of the square-free `f`.
///
/// `Res_y(f(y), f(x·y))` vanishes exactly at the ratios; the `n` diagonal
/// ratios contribute `(x − 1)ⁿ`, which is divided out.
pub fn ratio_poly(f: &IntPoly) -> Result<IntPoly> {
    if f.is_zero() {
        return Err(domain("ratio polynomial of zero"));
    }
    if f.coeff(0).is_zero() {
        return Err(domain("a zero root has no ratios"));
    }
    if !f.is_squarefree() {
        return Err(domain("ratio polynomial needs a square-free input"));
    }
    let n = f.degree();
    if n == 0 {
        return Ok(IntPoly::one());
    }
    let points: Vec<(BigInt, BigInt)> = (0..=n * n)
        .map(|x| {
            let xb = BigInt::from(x);
            let mut pw = BigInt::one();
            let scaled: Vec<BigInt> = f
                .coeffs()
                .iter()
                .map(|c| {
                    let v = c * &pw;
                    pw *= &xb;
                    v
                })
                .collect();
            (xb, resultant_formal(f.coeffs(), n, &scaled, n))
        })
        .collect();
    let full = interpolate(&points).to_primitive();
    let diag = IntPoly::from_i64(&[-1, 1]).pow(n as u32);
    let reduced = full
        .div_exact(&diag)
        .ok_or_else(|| Error::Verification(String::from("(x − 1)ⁿ does not divide the ratio resultant")))?;
    Ok(reduced.primitive_part())
}

/// Whether two distinct roots of `f` have a root-of-unity ratio.
pub fn is_degenerate(f: &IntPoly) -> Result<bool> {
    Ok(degeneracy_order(f)?.is_some())
}

/// Smallest `m ≥ 2` with `Φ_m` dividing the ratio polynomial of the
/// square-free part of `f` (repeated roots count once).
pub fn degeneracy_order(f: &IntPoly) -> Result<Option<u64>> {
    if f.is_zero() {
        return Err(domain("degeneracy of the zero polynomial"));
    }
    let f = &f.squarefree_part();
    let r = ratio_poly(f)?;
    let bound = (f.degree() * f.degree()) as u64;
    for m in orders_with_phi_at_most(bound) {
        if m >= 2 && cyclotomic(m)?.divides(&r) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Outcome of a bounded search for `α^r = β^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dependence {
    /// `α^r = β^s` holds exactly.
    Dependent { r: i64, s: i64 },
    /// No relation with `1 ≤ r ≤ R`, `1 ≤ |s| ≤ R`.
    IndependentUpTo(u32),
}

impl Dependence {
    pub fn is_independent(&self) -> bool {
        matches!(self, Dependence::IndependentUpTo(_))
    }
}

fn log_abs_arg(z: (f64, f64)) -> (f64, f64) {
    let m = libm::hypot(z.0, z.1);
    (libm::log(m), libm::atan2(z.1, z.0))
}

/// `y^e mod m` over `ℚ`, `e` possibly negative.
fn power_residue(m: &RatPoly, e: i64) -> Option<RatPoly> {
    let base = if e < 0 { RatPoly::x().inverse_mod(m)? } else { RatPoly::x().rem(m) };
    Some(base.pow_mod(e.unsigned_abs(), m))
}

/// Characteristic polynomial of `h(α)` over `ℚ(α)`, from `Res_y(m(y), D·x − H(y))`.
fn char_poly_of(m: &IntPoly, h: &RatPoly) -> IntPoly {
    let n = m.degree();
    let den = h
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    let hint: Vec<BigInt> = h
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let dh = hint.len().saturating_sub(1);
    let points: Vec<(BigInt, BigInt)> = (0..=n)
        .map(|x| {
            let mut g: Vec<BigInt> = hint.iter().map(|c| -c).collect();
            if g.is_empty() {
                g.push(BigInt::zero());
            }
            g[0] += &den * BigInt::from(x);
            (BigInt::from(x), resultant_formal(m.coeffs(), n, &g, dh))
        })
        .collect();
    interpolate(&points).to_primitive()
}

/// Exact test of `α^r = β^s` for general algebraic numbers.
///
/// Both sides are roots of the square-free part of the product of their
/// characteristic polynomials; they are equal iff rigorous enclosures of them
/// land in the same isolating box of that polynomial.
fn powers_equal_general(alpha: &AlgebraicNumber, r: i64, beta: &AlgebraicNumber, s: i64) -> Result<bool> {
    let ma = alpha.min_poly().to_rat();
    let mb = beta.min_poly().to_rat();
    let (Some(ha), Some(hb)) = (power_residue(&ma, r), power_residue(&mb, s)) else {
        return Ok(false);
    };
    let pa = char_poly_of(alpha.min_poly(), &ha);
    let pb = char_poly_of(beta.min_poly(), &hb);
    if pa.gcd(&pb).degree() == 0 {
        return Ok(false);
    }
    let joint = pa.mul(&pb).squarefree_part();
    let enclose = |x: &AlgebraicNumber, e: i64, bits: u32| -> Option<Ball> {
        let extra = (e.unsigned_abs() as u32) * 8 + 16;
        let b = x.ball(bits + extra).ok()?;
        let b = if e < 0 { b.inv(bits + extra)? } else { b };
        Some(b.pow(e.unsigned_abs(), bits + extra))
    };
    let left = locate(&joint, |bits| enclose(alpha, r, bits))?;
    let right = locate(&joint, |bits| enclose(beta, s, bits))?;
    if !left.intersects(&right) {
        return Ok(false);
    }
    same_root(&joint, &left, &right)
}

fn same_root(f: &IntPoly, a: &RootBox, b: &RootBox) -> Result<bool> {
    let mut bits = 128;
    while bits <= MAX_BITS {
        let boxes = isolate(f, bits)?;
        let ia: Vec<usize> = (0..boxes.len()).filter(|&i| boxes[i].intersects(a)).collect();
        let ib: Vec<usize> = (0..boxes.len()).filter(|&i| boxes[i].intersects(b)).collect();
        if ia.len() == 1 && ib.len() == 1 {
            return Ok(ia[0] == ib[0]);
        }
        bits *= 2;
    }
    Err(Error::Numerical(String::from("could not separate two roots")))
}

fn rational_pow(q: &BigRational, e: i64) -> BigRational {
    let p = num_traits::pow::Pow::pow(q, e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn as_multiquad(a: &AlgebraicNumber) -> Option<MultiQuad> {
    match a.as_rational() {
        Some(q) => Some(MultiQuad::rational(q)),
        None => a.as_quadratic().map(|e| MultiQuad::from_quadratic(&e)),
    }
}

/// Exact `α^r = β^s` (both nonzero).
pub fn powers_equal(alpha: &AlgebraicNumber, r: i64, beta: &AlgebraicNumber, s: i64) -> Result<bool> {
    if let (Some(a), Some(b)) = (alpha.as_rational(), beta.as_rational()) {
        return Ok(rational_pow(&a, r) == rational_pow(&b, s));
    }
    if alpha.degree() <= 2 && beta.degree() <= 2 {
        if let (Some(a), Some(b)) = (as_multiquad(alpha), as_multiquad(beta)) {
            // Move negative exponents across so only nonnegative powers remain.
            let (mut lhs, mut rhs) = (MultiQuad::one(), MultiQuad::one());
            if r >= 0 {
                lhs = lhs.mul(&a.pow(r as u64));
            } else {
                rhs = rhs.mul(&a.pow(r.unsigned_abs()));
            }
            if s >= 0 {
                rhs = rhs.mul(&b.pow(s as u64));
            } else {
                lhs = lhs.mul(&b.pow(s.unsigned_abs()));
            }
            return Ok(lhs == rhs);
        }
    }
    powers_equal_general(alpha, r, beta, s)
}

/// Searches `1 ≤ r ≤ R`, `1 ≤ |s| ≤ R` (in that order, `+s` before `−s`) for
/// `α^r = β^s`.
///
/// Neither input may be zero or a root of unity; with those excluded, any
/// relation can be normalized to `r > 0` and `s ≠ 0`.
pub fn mult_dependent(alpha: &AlgebraicNumber, beta: &AlgebraicNumber, bound: u32) -> Result<Dependence> {
    for x in [alpha, beta] {
        if x.is_zero() {
            return Err(domain("multiplicative dependence of zero"));
        }
        if let Some(n) = is_root_of_unity(x)? {
            return Err(domain(format!("{x} is a root of unity of order {n}")));
        }
    }
    let (la, aa) = log_abs_arg(alpha.to_f64());
    let (lb, ab) = log_abs_arg(beta.to_f64());
    let tau = 2.0 * core::f64::consts::PI;
    for r in 1..=i64::from(bound) {
        for k in 1..=i64::from(bound) {
            for s in [k, -k] {
                let scale = (r + k) as f64 * (1.0 + libm::fabs(la) + libm::fabs(lb));
                if libm::fabs(r as f64 * la - s as f64 * lb) > 1e-8 * scale {
                    continue;
                }
                let turn = (r as f64 * aa - s as f64 * ab) / tau;
                if libm::fabs(turn - libm::round(turn)) > 1e-8 * scale {
                    continue;
                }
                if powers_equal(alpha, r, beta, s)? {
                    return Ok(Dependence::Dependent { r, s });
                }
            }
        }
    }
    Ok(Dependence::IndependentUpTo(bound))
}

/// `f = x² + a·x ± 1` with `(a² ∓ 4)/d` the square of a rational.
pub fn is_excluded_binary(f: &IntPoly, d: &BigInt) -> bool {
    if f.degree() != 2 || !f.is_monic() || d.is_zero() {
        return false;
    }
    let c = f.coeff(0);
    if !c.abs().is_one() {
        return false;
    }
    let a = f.coeff(1);
    let disc = &a * &a - BigInt::from(4) * c;
    // disc/d is a rational square iff disc·d is an integer square (d square-free).
    is_perfect_square(&(disc * d)).is_some()
}

/// Whether an integral element of `ℚ(√d)` is a unit (norm ±1).
pub fn quad_unit_check(e: &QuadraticElem) -> Result<bool> {
    if !e.is_integral() {
        return Err(domain(format!("{e} is not an algebraic integer")));
    }
    Ok(e.norm().abs().is_one())
}
