//! Polynomial-exponential equations `Σ P_l(x)·α_l^x = 0`: set partitions of
//! the term indices, the relation group `G(π)`, the explicit cardinality
//! bound `2^{35A³}·D^{6A²}` and its sum over all partitions, plus a brute-force
//! search for vanishing weighted sums of recurrence terms.

mod lattice;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebraic::{factor, MultiQuad, QuadraticElem};
use crate::error::{domain, resource, Result};
use crate::pell::SolutionClass;
use crate::poly::{IntPoly, RatPoly};
use crate::recurrence::{binet_decompose, ClosedForm, BinetForm, LinearRecurrence};

pub use lattice::{g_pi_trivial, is_relation, relation_lattice, Completeness, RelationLattice, DEFAULT_SEARCH_BOUND};

/// Largest ground set accepted by [`enumerate_partitions`] (Bell(12) ≈ 4.2·10⁶).
pub const MAX_PARTITION_SIZE: usize = 12;

/// A set partition of `{0, …, r−1}`; blocks are sorted and ordered by their
/// smallest element. Displayed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    size: usize,
}

impl Partition {
    /// Builds a partition from blocks (0-based), checking that they are
    /// nonempty, disjoint and cover `0..size`.
    pub fn new(blocks: Vec<Vec<usize>>, size: usize) -> Result<Self> {
        let mut seen = vec![false; size];
        for b in &blocks {
            if b.is_empty() {
                return Err(domain("partition blocks must be nonempty"));
            }
            for &i in b {
                if i >= size || seen[i] {
                    return Err(domain(format!("index {} repeated or out of range", i + 1)));
                }
                seen[i] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(domain("partition blocks do not cover the ground set"));
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        Ok(Self { blocks, size })
    }

    /// From a restricted-growth string: element `i` goes to block `rgs[i]`.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let count = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        Self {
            blocks,
            size: rgs.len(),
        }
    }

    pub fn singletons(size: usize) -> Self {
        Self::from_rgs(&(0..size).collect::<Vec<_>>())
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.len() == self.size
    }

    fn block_ids(&self) -> Vec<usize> {
        let mut id = vec![0; self.size];
        for (k, b) in self.blocks.iter().enumerate() {
            for &i in b {
                id[i] = k;
            }
        }
        id
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (j, i) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", i + 1)?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

/// Lazy enumeration of restricted-growth strings in lexicographic order.
pub struct Partitions {
    rgs: Vec<usize>,
    maxes: Vec<usize>,
    done: bool,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition::from_rgs(&self.rgs);
        // Advance: rightmost position that can grow, reset everything after it.
        let n = self.rgs.len();
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.maxes[i - 1] {
                self.rgs[i] += 1;
                for j in i + 1..n {
                    self.rgs[j] = 0;
                }
                for j in i..n {
                    self.maxes[j] = self.maxes[j - 1].max(self.rgs[j]);
                }
                break;
            }
        }
        Some(out)
    }
}

/// All set partitions of an `r`-element set, lazily.
pub fn partitions(r: usize) -> Result<Partitions> {
    if r == 0 {
        return Err(domain("partitions need a nonempty ground set"));
    }
    if r > MAX_PARTITION_SIZE {
        return Err(resource(format!(
            "Bell({r}) partitions exceed the guard r ≤ {MAX_PARTITION_SIZE}"
        )));
    }
    Ok(Partitions {
        rgs: vec![0; r],
        maxes: vec![0; r],
        done: false,
    })
}

pub fn enumerate_partitions(r: usize) -> Result<Vec<Partition>> {
    Ok(partitions(r)?.collect())
}

/// Bell numbers via the Bell triangle.
pub fn bell(r: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for _ in 1..r.max(1) {
        let mut next = vec![row.last().expect("nonempty").clone()];
        for v in &row {
            let x = next.last().expect("nonempty") + v;
            next.push(x);
        }
        row = next;
    }
    if r == 0 {
        BigInt::one()
    } else {
        row.last().expect("nonempty").clone()
    }
}

/// Whether every block of `fine` lies inside a block of `coarse`.
pub fn is_refinement(fine: &Partition, coarse: &Partition) -> Result<bool> {
    if fine.size != coarse.size {
        return Err(domain("partitions of different ground sets"));
    }
    let id = coarse.block_ids();
    Ok(fine.blocks.iter().all(|b| b.iter().all(|&i| id[i] == id[b[0]])))
}

fn closed_to_multiquad(c: &ClosedForm) -> MultiQuad {
    match c {
        ClosedForm::Rational(q) => MultiQuad::rational(q.clone()),
        ClosedForm::Quadratic(e) => MultiQuad::from_quadratic(e),
    }
}

fn closed_is_zero(c: &ClosedForm) -> bool {
    match c {
        ClosedForm::Rational(q) => q.is_zero(),
        ClosedForm::Quadratic(e) => e.is_zero(),
    }
}

/// One term `P_l · α_l^x` with constant `P_l` of formal degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpTerm {
    pub coeff: ClosedForm,
    pub bases: Vec<ClosedForm>,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentialTermSystem {
    s: usize,
    terms: Vec<ExpTerm>,
    field_degree: u64,
}

/// Degree of `ℚ(√d₁, …, √d_m)`: `2^rank` of the radicands in `ℚ*/ℚ*²`.
pub fn multiquadratic_degree(radicands: &[BigInt]) -> u64 {
    // Each square-free radicand becomes its set of prime factors (with −1);
    // elimination over GF(2) is symmetric difference.
    let mut basis: Vec<BTreeSet<BigInt>> = Vec::new();
    for d in radicands {
        let mut v = BTreeSet::new();
        if d.is_negative() {
            v.insert(-BigInt::one());
        }
        let mut m = d.abs();
        let mut p = BigInt::from(2);
        while &p * &p <= m {
            if (&m % &p).is_zero() {
                m /= &p;
                v.insert(p.clone());
            }
            p += 1u32;
        }
        if !m.is_one() {
            v.insert(m);
        }
        for b in &basis {
            let pivot = b.last().expect("basis vectors are nonempty");
            if v.contains(pivot) {
                v = v.symmetric_difference(b).cloned().collect();
            }
        }
        if !v.is_empty() {
            basis.push(v);
            basis.sort_by(|a, b| b.last().cmp(&a.last()));
        }
    }
    1u64 << basis.len()
}

impl ExponentialTermSystem {
    pub fn new(s: usize, terms: Vec<ExpTerm>, field_degree: u64) -> Result<Self> {
        if terms.is_empty() || s == 0 {
            return Err(domain("need at least one term and one variable"));
        }
        if field_degree == 0 {
            return Err(domain("field degree must be positive"));
        }
        for t in &terms {
            if t.bases.len() != s {
                return Err(domain(format!("every term needs {s} bases")));
            }
            if t.bases.iter().any(closed_is_zero) {
                return Err(domain("bases must be nonzero"));
            }
        }
        Ok(Self {
            s,
            terms,
            field_degree,
        })
    }

    /// `Σ ηᵢαᵢ^{n₁} + Σ ηᵢαᵢ^{n₂} − Bβᵐ − Cγᵐ = 0` in variables `(n₁, n₂, m)`,
    /// for a simple sequence whose roots are rational or quadratic and one
    /// class of solutions (`y_side` selects the `y`-coordinate sequence).
    pub fn pell_sum_instance(form: &BinetForm, class: &SolutionClass, y_side: bool) -> Result<Self> {
        let mut roots = Vec::new();
        for t in &form.terms {
            let (alpha, eta) = t
                .closed
                .clone()
                .ok_or_else(|| domain("roots of degree above 2 are not supported here"))?;
            roots.push((alpha, eta));
        }
        let one = ClosedForm::Rational(BigRational::one());
        let (beta, gamma) = class.beta_gamma();
        let (b, c) = if y_side { class.binet_y() } else { class.binet_x() };
        let mut terms = Vec::new();
        for slot in 0..2 {
            for (alpha, eta) in &roots {
                let mut bases = vec![one.clone(), one.clone(), one.clone()];
                bases[slot] = alpha.clone();
                terms.push(ExpTerm {
                    coeff: eta.clone(),
                    bases,
                    degree: 0,
                });
            }
        }
        for (coef, base) in [(b, beta), (c, gamma)] {
            terms.push(ExpTerm {
                coeff: ClosedForm::Quadratic(coef.neg()),
                bases: vec![one.clone(), one.clone(), ClosedForm::Quadratic(base)],
                degree: 0,
            });
        }
        let mut radicands: Vec<BigInt> = vec![beta_radicand(class)];
        for (alpha, eta) in &roots {
            for v in [alpha, eta] {
                if let ClosedForm::Quadratic(e) = v {
                    radicands.push(e.d().clone());
                }
            }
        }
        Self::new(3, terms, multiquadratic_degree(&radicands))
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn terms(&self) -> &[ExpTerm] {
        &self.terms
    }

    pub fn r(&self) -> usize {
        self.terms.len()
    }

    pub fn field_degree(&self) -> u64 {
        self.field_degree
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.terms.iter().map(|t| t.degree).collect()
    }

    pub(crate) fn base_multiquads(&self) -> Vec<Vec<MultiQuad>> {
        self.terms
            .iter()
            .map(|t| t.bases.iter().map(closed_to_multiquad).collect())
            .collect()
    }
}

fn beta_radicand(class: &SolutionClass) -> BigInt {
    class.beta_gamma().0.d().clone()
}

/// `2^{35A³}·D^{6A²}` with `A = max(s, Σ C(s+δ_l, s))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithBound {
    pub a: u64,
    pub s: u64,
    pub d: u64,
    /// Exponent of 2 (`35A³`).
    pub two_exponent: u64,
    /// Exponent of `D` (`6A²`).
    pub d_exponent: u64,
}

impl SmithBound {
    pub fn value(&self) -> BigInt {
        let d = num_traits::pow::Pow::pow(&BigInt::from(self.d), self.d_exponent as usize);
        (BigInt::one() << self.two_exponent) * d
    }

    /// `log₂` of the bound as an exact integer when `D` is a power of two.
    pub fn log2_exact(&self) -> Option<u64> {
        self.d
            .is_power_of_two()
            .then(|| self.two_exponent + self.d_exponent * u64::from(self.d.trailing_zeros()))
    }

    pub fn log2(&self) -> f64 {
        self.two_exponent as f64 + self.d_exponent as f64 * libm::log2(self.d as f64)
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn smith_bound(s: usize, degrees: &[u32], field_degree: u64) -> Result<SmithBound> {
    if s == 0 || field_degree == 0 {
        return Err(domain("smith bound needs s ≥ 1 and D ≥ 1"));
    }
    let s64 = s as u64;
    let sum: BigInt = degrees
        .iter()
        .map(|&delta| binomial(s64 + u64::from(delta), s64))
        .fold(BigInt::zero(), |a, b| a + b);
    let a = sum
        .to_u64()
        .filter(|&v| v < 1 << 20)
        .ok_or_else(|| resource("A too large for an explicit bound"))?
        .max(s64);
    Ok(SmithBound {
        a,
        s: s64,
        d: field_degree,
        two_exponent: 35 * a * a * a,
        d_exponent: 6 * a * a,
    })
}

/// Sum of the per-partition bound over all partitions of the `2k+2` terms of
/// the Pell-sum equation in `s = 3` variables (constant coefficients).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AggregateBound {
    pub k: usize,
    pub r: usize,
    pub partition_count: BigInt,
    pub per_partition: SmithBound,
}

impl AggregateBound {
    pub fn value(&self) -> BigInt {
        &self.partition_count * self.per_partition.value()
    }

    /// Bound with every solution class counted twice (both sides of the
    /// solution set give one equation per class).
    pub fn with_classes(&self, classes: usize) -> BigInt {
        self.value() * BigInt::from(2 * classes)
    }

    pub fn log2(&self) -> f64 {
        self.per_partition.log2() + libm::log2(self.partition_count.to_f64().unwrap_or(f64::INFINITY))
    }
}

pub fn aggregate_bound(k: usize, field_degree: u64) -> Result<AggregateBound> {
    if k == 0 {
        return Err(domain("k must be at least 1"));
    }
    if k > 5 {
        return Err(resource("k ≤ 5 keeps Bell(2k+2) within the partition guard"));
    }
    let r = 2 * k + 2;
    Ok(AggregateBound {
        k,
        r,
        partition_count: bell(r),
        per_partition: smith_bound(3, &vec![0; r], field_degree)?,
    })
}

/// Status of `Σ w_h αⁿʰ ≠ 0` over the characteristic roots for one tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootCondition {
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroSum {
    pub indices: Vec<usize>,
    pub root_condition: RootCondition,
}

/// Upper limit on `(N+1)^k` tuples for [`weighted_zero_sums`].
pub const MAX_TUPLES: u64 = 100_000_000;

/// Tuples `(n₁, …, n_k) ∈ [0, N]^k` with `Σ w_h U_{n_h} = 0` and no vanishing
/// proper nonempty subsum.
///
/// The root condition `Σ w_h αⁿʰ ≠ 0` is decided exactly for each tuple: for an
/// irreducible factor `g` of the (effective) characteristic polynomial it
/// fails at a root of `g` iff `g` divides `Σ w_h x^{n_h}`.
pub fn weighted_zero_sums(rec: &LinearRecurrence, weights: &[BigInt], last: usize) -> Result<Vec<ZeroSum>> {
    if weights.is_empty() {
        return Err(domain("need at least one weight"));
    }
    if weights.iter().any(Zero::is_zero) {
        return Err(domain("weights must be nonzero"));
    }
    let k = weights.len();
    let tuples = (last as u64 + 1).checked_pow(k as u32).filter(|&n| n <= MAX_TUPLES);
    if tuples.is_none() {
        return Err(resource(format!("(N+1)^k exceeds {MAX_TUPLES} tuples")));
    }
    let u = rec.terms(last);
    let poly = match binet_decompose(rec) {
        Ok(form) => form.effective_poly(),
        Err(_) => rec.char_poly().squarefree_part(),
    };
    let factors: Vec<RatPoly> = factor(&poly)?.into_iter().map(|(g, _)| g.to_rat()).collect();

    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    let masks: Vec<u32> = (1..(1u32 << k) - 1).collect();
    loop {
        let total: BigInt = (0..k).map(|h| &weights[h] * &u[idx[h]]).sum();
        if total.is_zero()
            && masks.iter().all(|&m| {
                let sub: BigInt = (0..k).filter(|h| m >> h & 1 == 1).map(|h| &weights[h] * &u[idx[h]]).sum();
                !sub.is_zero()
            })
        {
            let top = *idx.iter().max().expect("k ≥ 1");
            let mut coeffs = vec![BigInt::zero(); top + 1];
            for h in 0..k {
                coeffs[idx[h]] += &weights[h];
            }
            let p = IntPoly::new(coeffs).to_rat();
            let fails = factors.iter().any(|g| p.rem(g).is_zero());
            out.push(ZeroSum {
                indices: idx.clone(),
                root_condition: if fails { RootCondition::Fails } else { RootCondition::Holds },
            });
        }
        // Odometer over the last slot first, so output is lexicographic.
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if idx[pos] < last {
                idx[pos] += 1;
                for v in &mut idx[pos + 1..] {
                    *v = 0;
                }
                break;
            }
        }
    }
}

pub(crate) fn quadratic_to_f64(c: &ClosedForm) -> (f64, f64) {
    match c {
        ClosedForm::Rational(q) => (q.to_f64().unwrap_or(f64::NAN), 0.0),
        ClosedForm::Quadratic(e) => QuadraticElem::to_f64(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_partitions(1).unwrap().len(), 1);
        assert_eq!(enumerate_partitions(3).unwrap().len(), 5);
        assert_eq!(enumerate_partitions(4).unwrap().len(), 15);
        for r in 1..=9 {
            assert_eq!(BigInt::from(partitions(r).unwrap().count()), bell(r), "r = {r}");
        }
        assert_eq!(bell(12), BigInt::from(4_213_597));
        assert!(matches!(partitions(13), Err(crate::Error::Resource(_))));
    }

    #[test]
    fn partitions_are_canonical() {
        let all = enumerate_partitions(3).unwrap();
        let shown: Vec<String> = all.iter().map(|p| format!("{p}")).collect();
        assert_eq!(
            shown,
            vec!["{{1,2,3}}", "{{1,2},{3}}", "{{1,3},{2}}", "{{1},{2,3}}", "{{1},{2},{3}}"]
        );
    }

    #[test]
    fn refinement_examples() {
        let a = Partition::new(vec![vec![0, 1], vec![2]], 3).unwrap();
        let b = Partition::new(vec![vec![0], vec![1, 2]], 3).unwrap();
        assert!(!is_refinement(&a, &b).unwrap());
        assert!(is_refinement(&a, &a).unwrap());
        assert!(is_refinement(&Partition::singletons(3), &b).unwrap());
        assert!(is_refinement(&a, &Partition::singletons(4)).is_err());
        assert!(Partition::new(vec![vec![0, 1], vec![1]], 2).is_err());
    }

    #[test]
    fn smith_examples() {
        let b = smith_bound(3, &[0; 6], 2).unwrap();
        assert_eq!((b.a, b.log2_exact()), (6, Some(7776)));
        assert_eq!(b.value(), BigInt::one() << 7776u32);
        let b = smith_bound(1, &[0], 1).unwrap();
        assert_eq!((b.a, b.log2_exact()), (1, Some(35)));
        let b = smith_bound(3, &[0; 8], 2).unwrap();
        assert_eq!((b.a, b.log2_exact()), (8, Some(18304)));
        // δ = 1 with s = 2 counts C(3, 2) = 3 monomials.
        assert_eq!(smith_bound(2, &[1, 1], 1).unwrap().a, 6);
    }

    #[test]
    fn aggregate_examples() {
        let b = aggregate_bound(2, 2).unwrap();
        assert_eq!(b.partition_count, BigInt::from(203));
        assert_eq!(b.value(), BigInt::from(203) << 7776u32);
        let b = aggregate_bound(1, 2).unwrap();
        assert_eq!(b.partition_count, BigInt::from(15));
        assert_eq!(b.per_partition.log2_exact(), Some(2336));
        let b = aggregate_bound(1, 1).unwrap();
        assert_eq!(b.value(), BigInt::from(15) << 2240u32);
        assert!(aggregate_bound(6, 2).is_err());
    }

    #[test]
    fn field_degrees() {
        let d = |v: &[i64]| multiquadratic_degree(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        assert_eq!(d(&[]), 1);
        assert_eq!(d(&[3, 3]), 2);
        assert_eq!(d(&[2, 3, 6]), 4);
        assert_eq!(d(&[2, 3, 5]), 8);
        assert_eq!(d(&[-1, -3, 3]), 4);
    }

    fn rec(c: &[i64], i: &[i64]) -> LinearRecurrence {
        LinearRecurrence::from_i64(c, i).unwrap()
    }

    fn w(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn zero_sum_examples() {
        let two_three = rec(&[5, -6], &[2, 5]);
        let z = weighted_zero_sums(&two_three, &w(&[1, -1]), 50).unwrap();
        assert_eq!(z.len(), 51);
        assert!(z.iter().all(|t| t.indices[0] == t.indices[1] && t.root_condition == RootCondition::Fails));

        assert!(weighted_zero_sums(&rec(&[0, 1], &[0, 2]), &w(&[1, 1]), 10).unwrap().is_empty());

        let z = weighted_zero_sums(&rec(&[3, -3, 2], &[0, 1, 1]), &w(&[1, 1]), 12).unwrap();
        assert!(z.iter().any(|t| t.indices == vec![1, 4]));
        assert!(weighted_zero_sums(&two_three, &w(&[1, 0]), 5).is_err());
        assert!(weighted_zero_sums(&two_three, &w(&[1, 1, 1, 1, 1]), 100).is_err());
    }

    fn arb_partition(r: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0usize..r, r).prop_map(move |raw| {
            // Relabel to a restricted-growth string.
            let mut map = vec![usize::MAX; r];
            let mut next = 0;
            let rgs: Vec<usize> = raw
                .iter()
                .map(|&b| {
                    if map[b] == usize::MAX {
                        map[b] = next;
                        next += 1;
                    }
                    map[b]
                })
                .collect();
            Partition::from_rgs(&rgs)
        })
    }

    proptest! {
        #[test]
        fn refinement_is_a_partial_order(a in arb_partition(6), b in arb_partition(6), c in arb_partition(6)) {
            prop_assert!(is_refinement(&a, &a).unwrap());
            if is_refinement(&a, &b).unwrap() && is_refinement(&b, &a).unwrap() {
                prop_assert_eq!(&a, &b);
            }
            if is_refinement(&a, &b).unwrap() && is_refinement(&b, &c).unwrap() {
                prop_assert!(is_refinement(&a, &c).unwrap());
            }
        }

        #[test]
        fn smith_is_monotone(s in 1usize..4, degs in proptest::collection::vec(0u32..3, 1..5), d in 1u64..5, bump in 0usize..4) {
            let base = smith_bound(s, &degs, d).unwrap().value();
            prop_assert!(smith_bound(s + 1, &degs, d).unwrap().value() >= base);
            prop_assert!(smith_bound(s, &degs, d + 1).unwrap().value() >= base);
            let mut more = degs.clone();
            let i = bump % more.len();
            more[i] += 1;
            prop_assert!(smith_bound(s, &more, d).unwrap().value() >= base);
        }

        #[test]
        fn zero_sums_permute_with_weights(w1 in -3i64..=3, w2 in -3i64..=3, w3 in -3i64..=3) {
            prop_assume!(w1 != 0 && w2 != 0 && w3 != 0);
            let r = rec(&[3, -3, 2], &[0, 1, 1]);
            let a = weighted_zero_sums(&r, &w(&[w1, w2, w3]), 8).unwrap();
            let b = weighted_zero_sums(&r, &w(&[w3, w1, w2]), 8).unwrap();
            let mut permuted: Vec<Vec<usize>> = a
                .iter()
                .map(|z| vec![z.indices[2], z.indices[0], z.indices[1]])
                .collect();
            permuted.sort();
            let mut other: Vec<Vec<usize>> = b.iter().map(|z| z.indices.clone()).collect();
            other.sort();
            prop_assert_eq!(permuted, other);
        }
    }
}
