//! The equation `x² − dy² = t`.
//!
//! Solutions are grouped by orbit under multiplication with the fundamental
//! unit `ε = x₁ + y₁√d`. Inside each orbit of positive numbers `x + y√d > 0`
//! the elements with `x, y ≥ 0` form one half-line `z·εᵐ, m ≥ 0`, so a class
//! is stored as its first nonnegative element `(G₀, H₀)` and the next one
//! `(G₁, H₁)`; both coordinates then follow `V_{m+2} = 2x₁V_{m+1} − V_m`.
//! Every integer solution is a sign variant `(±x, ±y)` of exactly one
//! class member.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebraic::QuadraticElem;
use crate::arith::{convergent_pairs, cf_sqrt, is_perfect_square, is_squarefree, isqrt};
use crate::error::{domain, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PellEquation {
    d: BigInt,
    t: BigInt,
}

impl PellEquation {
    pub fn new(d: BigInt, t: BigInt) -> Result<Self> {
        if d <= BigInt::one() {
            return Err(domain("d must exceed 1"));
        }
        if !is_squarefree(&d) {
            return Err(domain("d must be square-free"));
        }
        if t.is_zero() {
            return Err(domain("t must be nonzero"));
        }
        Ok(Self { d, t })
    }

    pub fn from_i64(d: i64, t: i64) -> Result<Self> {
        Self::new(d.into(), t.into())
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn t(&self) -> &BigInt {
        &self.t
    }

    pub fn is_solution(&self, x: &BigInt, y: &BigInt) -> bool {
        x * x - &self.d * y * y == self.t
    }

    /// `v ∈ X`: returns `y ≥ 0` with `v² − dy² = t`.
    pub fn member_x(&self, v: &BigInt) -> Option<BigInt> {
        let r = v * v - &self.t;
        if r.is_negative() {
            return None;
        }
        let (q, rem) = r.div_rem(&self.d);
        if !rem.is_zero() {
            return None;
        }
        is_perfect_square(&q)
    }

    /// `v ∈ Y`: returns `x ≥ 0` with `x² − dv² = t`.
    pub fn member_y(&self, v: &BigInt) -> Option<BigInt> {
        is_perfect_square(&(&self.d * v * v + &self.t))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FundamentalSolution {
    pub x1: BigInt,
    pub y1: BigInt,
}

impl FundamentalSolution {
    pub fn unit(&self, d: &BigInt) -> QuadraticElem {
        QuadraticElem::new(
            BigRational::from_integer(self.x1.clone()),
            BigRational::from_integer(self.y1.clone()),
            d.clone(),
        )
        .expect("d validated")
    }
}

/// Smallest positive solution of `x² − dy² = 1`.
///
/// It is the first convergent of `√d` with norm `1`; one appears within two
/// periods of the continued fraction.
pub fn fundamental_solution(d: &BigInt) -> Result<FundamentalSolution> {
    if !is_squarefree(d) {
        return Err(domain("d must be square-free"));
    }
    let cf = cf_sqrt(d)?;
    for (p, q) in convergent_pairs(&cf, 2 * cf.period_len() + 1) {
        if &p * &p - d * &q * &q == BigInt::one() {
            return Ok(FundamentalSolution { x1: p, y1: q });
        }
    }
    unreachable!("a norm-one convergent occurs within two periods")
}

/// `(x + y√d)(a + b√d)` on integer coordinates.
fn mul_coords(d: &BigInt, (x, y): (&BigInt, &BigInt), (a, b): (&BigInt, &BigInt)) -> (BigInt, BigInt) {
    (x * a + d * y * b, x * b + y * a)
}

/// Exact sign of `x + y√d`.
fn sign_of_value(d: &BigInt, x: &BigInt, y: &BigInt) -> i8 {
    QuadraticElem::new(
        BigRational::from_integer(x.clone()),
        BigRational::from_integer(y.clone()),
        d.clone(),
    )
    .expect("d validated")
    .sign()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SolutionClass {
    pub g0: BigInt,
    pub h0: BigInt,
    pub g1: BigInt,
    pub h1: BigInt,
    d: BigInt,
    x1: BigInt,
    y1: BigInt,
}

impl SolutionClass {
    /// The recurrence coefficients `(2x₁, −1)` shared by both coordinates.
    pub fn recurrence_coeffs(&self) -> (BigInt, BigInt) {
        (&self.x1 * 2, -BigInt::one())
    }

    /// `(x, y, m)` for `m = 0, …, count − 1`.
    pub fn generate(&self, count: usize) -> Vec<(BigInt, BigInt, usize)> {
        let two_x1 = &self.x1 * 2;
        let t = &self.g0 * &self.g0 - &self.d * &self.h0 * &self.h0;
        let mut out = Vec::with_capacity(count);
        let (mut g, mut h) = ((self.g0.clone(), self.h0.clone()), (self.g1.clone(), self.h1.clone()));
        for m in 0..count {
            assert!(&g.0 * &g.0 - &self.d * &g.1 * &g.1 == t, "class left the solution set");
            out.push((g.0.clone(), g.1.clone(), m));
            let next = (&two_x1 * &h.0 - &g.0, &two_x1 * &h.1 - &g.1);
            g = core::mem::replace(&mut h, next);
        }
        out
    }

    fn half(&self) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(2))
    }

    fn elem(&self, a: BigRational, b: BigRational) -> QuadraticElem {
        QuadraticElem::new(a, b, self.d.clone()).expect("d validated")
    }

    /// `β = x₁ + y₁√d` and `γ = x₁ − y₁√d`.
    pub fn beta_gamma(&self) -> (QuadraticElem, QuadraticElem) {
        let beta = self.elem(BigRational::from_integer(self.x1.clone()), BigRational::from_integer(self.y1.clone()));
        let gamma = beta.conj();
        (beta, gamma)
    }

    /// `(B, C)` with `G_m = Bβᵐ + Cγᵐ`.
    pub fn binet_x(&self) -> (QuadraticElem, QuadraticElem) {
        let b = self.elem(
            BigRational::from_integer(self.g0.clone()) * self.half(),
            BigRational::from_integer(self.h0.clone()) * self.half(),
        );
        let c = b.conj();
        (b, c)
    }

    /// `(B, C)` with `H_m = Bβᵐ + Cγᵐ`.
    pub fn binet_y(&self) -> (QuadraticElem, QuadraticElem) {
        let b = self.elem(
            BigRational::from_integer(self.h0.clone()) * self.half(),
            BigRational::new(self.g0.clone(), &self.d * 2),
        );
        let c = b.conj();
        (b, c)
    }
}

/// All solution classes of one equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub equation: PellEquation,
    pub fundamental: FundamentalSolution,
    /// Classes sorted by `(H₀, G₀)`.
    pub classes: Vec<SolutionClass>,
    /// Bound on `y` used in the search for class representatives.
    pub search_bound: BigInt,
    /// Largest `|G₀|, |H₀|, |G₁|, |H₁|` over all classes (the observed `c₃`).
    pub max_initial: BigInt,
}

impl SolutionSet {
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// All integer solutions with `|y| ≤ cap`, sorted.
    pub fn solutions_up_to(&self, cap: &BigInt) -> Vec<(BigInt, BigInt)> {
        let mut out = Vec::new();
        for class in &self.classes {
            let two_x1 = &class.x1 * 2;
            let (mut g, mut h) = ((class.g0.clone(), class.h0.clone()), (class.g1.clone(), class.h1.clone()));
            while &g.1 <= cap {
                for sx in [1, -1] {
                    for sy in [1, -1] {
                        out.push((&g.0 * sx, &g.1 * sy));
                    }
                }
                let next = (&two_x1 * &h.0 - &g.0, &two_x1 * &h.1 - &g.1);
                g = core::mem::replace(&mut h, next);
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Finds every solution class of `x² − dy² = t` (possibly none).
///
/// Each class contains a solution with `0 ≤ y ≤ Y`, where
/// `Y² = y₁²·t/(2(x₁+1))` for `t > 0` and `Y² = y₁²·|t|/(2(x₁−1))` for `t < 0`;
/// those candidates are found by scanning `y`, moved to their positive orbit
/// and walked back to the first nonnegative element.
pub fn solve_classes(eq: &PellEquation) -> SolutionSet {
    let d = eq.d();
    let t = eq.t();
    let fund = fundamental_solution(d).expect("d validated");
    let (x1, y1) = (&fund.x1, &fund.y1);
    let inv = (x1.clone(), -y1.clone());
    let den = if t.is_positive() { (x1 + 1u32) * 2 } else { (x1 - 1u32) * 2 };
    let bound = isqrt(&((y1 * y1 * t.abs()) / den)).expect("nonnegative");

    let mut starts: Vec<(BigInt, BigInt)> = Vec::new();
    let mut y = BigInt::zero();
    while y <= bound {
        if let Some(x) = is_perfect_square(&(t + d * &y * &y)) {
            for sx in [BigInt::one(), -BigInt::one()] {
                let (mut a, mut b) = (&x * &sx, y.clone());
                if sign_of_value(d, &a, &b) < 0 {
                    a = -a;
                    b = -b;
                }
                while a.is_negative() || b.is_negative() {
                    (a, b) = mul_coords(d, (&a, &b), (x1, y1));
                }
                loop {
                    let (pa, pb) = mul_coords(d, (&a, &b), (&inv.0, &inv.1));
                    if pa.is_negative() || pb.is_negative() {
                        break;
                    }
                    (a, b) = (pa, pb);
                }
                starts.push((a, b));
            }
        }
        y += 1u32;
    }
    starts.sort_by(|p, q| (&p.1, &p.0).cmp(&(&q.1, &q.0)));
    starts.dedup();

    let mut max_initial = BigInt::zero();
    let classes: Vec<SolutionClass> = starts
        .into_iter()
        .map(|(g0, h0)| {
            let (g1, h1) = mul_coords(d, (&g0, &h0), (x1, y1));
            for v in [&g0, &h0, &g1, &h1] {
                if v.abs() > max_initial {
                    max_initial = v.abs();
                }
            }
            SolutionClass {
                g0,
                h0,
                g1,
                h1,
                d: d.clone(),
                x1: x1.clone(),
                y1: y1.clone(),
            }
        })
        .collect();
    SolutionSet {
        equation: eq.clone(),
        fundamental: fund,
        classes,
        search_bound: bound,
        max_initial,
    }
}
