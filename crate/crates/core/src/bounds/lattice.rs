//! The group `G(π) = {z ∈ ℤˢ : α_i^z = α_j^z whenever i ~π j}`.
//!
//! With rational bases the group is computed exactly from valuations over a
//! coprime base and a parity condition for signs. Otherwise vectors with
//! `|z_c| ≤ B` are enumerated, filtered numerically and confirmed exactly in a
//! multiquadratic field; the lattice they generate is reported.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{closed_to_multiquad, quadratic_to_f64, ExponentialTermSystem, Partition};
use crate::algebraic::MultiQuad;
use crate::error::{domain, resource, Result};
use crate::recurrence::ClosedForm;

pub const DEFAULT_SEARCH_BOUND: i64 = 20;

/// Vectors visited by the bounded search before giving up.
const MAX_SEARCH: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// The basis generates all of `G(π)`.
    Exact,
    /// The basis generates the relations found with every `|z_c| ≤ B`.
    WithinBound(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationLattice {
    /// Rows in Hermite normal form.
    pub basis: Vec<Vec<BigInt>>,
    pub completeness: Completeness,
}

impl RelationLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }
}

/// Row-style Hermite normal form over the first `cols` columns; rows that
/// vanish there are moved to the end. Returns the number of pivot rows.
fn echelon(rows: &mut [Vec<BigInt>], cols: usize) -> usize {
    let mut piv = 0;
    for c in 0..cols {
        loop {
            let best = (piv..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(best) = best else { break };
            rows.swap(piv, best);
            let mut done = true;
            for i in piv + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[piv][c]);
                let (head, tail) = rows.split_at_mut(i);
                for (x, p) in tail[0].iter_mut().zip(&head[piv]) {
                    *x -= &q * p;
                }
                if !tail[0][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if piv == rows.len() || rows[piv][c].is_zero() {
            continue;
        }
        if rows[piv][c].is_negative() {
            for x in rows[piv].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..piv {
            let q = rows[i][c].div_floor(&rows[piv][c]);
            if !q.is_zero() {
                let (head, tail) = rows.split_at_mut(piv);
                for (x, p) in head[i].iter_mut().zip(&tail[0]) {
                    *x -= &q * p;
                }
            }
        }
        piv += 1;
    }
    piv
}

/// Hermite basis of the lattice spanned by `gens` in `ℤⁿ`.
pub(crate) fn hnf_basis(mut gens: Vec<Vec<BigInt>>, n: usize) -> Vec<Vec<BigInt>> {
    let k = echelon(&mut gens, n);
    gens.truncate(k);
    gens
}

/// Integer kernel `{z : A z = 0}` of an `m × n` matrix given by rows.
pub(crate) fn integer_kernel(a: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let m = a.len();
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut r: Vec<BigInt> = a.iter().map(|row| row[j].clone()).collect();
            r.extend((0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();
    let k = echelon(&mut rows, m);
    rows[k..].iter().map(|r| r[m..].to_vec()).collect()
}

/// Pairwise coprime `b_i > 1` such that every input is a product of powers
/// of them.
fn coprime_base(values: &[BigInt]) -> Vec<BigInt> {
    let mut base: Vec<BigInt> = values.iter().filter(|v| **v > BigInt::one()).cloned().collect();
    base.sort();
    base.dedup();
    'outer: loop {
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                let g = base[i].gcd(&base[j]);
                if !g.is_one() {
                    let (a, b) = (&base[i] / &g, &base[j] / &g);
                    base.remove(j);
                    base.remove(i);
                    base.extend([a, b, g].into_iter().filter(|v| *v > BigInt::one()));
                    base.sort();
                    base.dedup();
                    continue 'outer;
                }
            }
        }
        return base;
    }
}

fn valuation(mut n: BigInt, p: &BigInt) -> i64 {
    let mut v = 0;
    while (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

fn as_rational(c: &ClosedForm) -> Option<BigRational> {
    match c {
        ClosedForm::Rational(q) => Some(q.clone()),
        ClosedForm::Quadratic(e) => e.is_rational().then(|| e.a().clone()),
    }
}

/// Pairs `(i, j)` that must satisfy `α_i^z = α_j^z`, chained through each block.
fn constrained_pairs(pi: &Partition) -> Vec<(usize, usize)> {
    pi.blocks()
        .iter()
        .flat_map(|b| b[1..].iter().map(move |&j| (b[0], j)))
        .collect()
}

fn exact_rational(ratios: &[Vec<BigRational>], s: usize) -> RelationLattice {
    let mut ints = Vec::new();
    for q in ratios.iter().flatten() {
        ints.push(q.numer().abs());
        ints.push(q.denom().abs());
    }
    let primes = coprime_base(&ints);
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut parity: Vec<Vec<BigInt>> = Vec::new();
    for pair in ratios {
        for p in &primes {
            rows.push(
                pair.iter()
                    .map(|q| BigInt::from(valuation(q.numer().abs(), p) - valuation(q.denom().abs(), p)))
                    .collect(),
            );
        }
        if pair.iter().any(|q| q.is_negative()) {
            parity.push(pair.iter().map(|q| BigInt::from(u8::from(q.is_negative()))).collect());
        }
    }
    // Σ_{q_c < 0} z_c ≡ 0 (mod 2) becomes Σ z_c − 2w = 0 with a slack w.
    let n = s + parity.len();
    let mut matrix: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|mut r| {
            r.resize(n, BigInt::zero());
            r
        })
        .collect();
    for (k, mut r) in parity.into_iter().enumerate() {
        r.resize(n, BigInt::zero());
        r[s + k] = BigInt::from(-2);
        matrix.push(r);
    }
    let kernel = integer_kernel(&matrix, n);
    let projected = kernel.into_iter().map(|v| v[..s].to_vec()).collect();
    RelationLattice {
        basis: hnf_basis(projected, s),
        completeness: Completeness::Exact,
    }
}

/// Per pair and column: `(log|ρ|, arg ρ)` for `ρ = α_{i,c}/α_{j,c}`.
fn log_args(sys: &ExponentialTermSystem, pairs: &[(usize, usize)]) -> Vec<Vec<(f64, f64)>> {
    let polar = |c: &ClosedForm| {
        let (re, im) = quadratic_to_f64(c);
        (libm::log(libm::hypot(re, im)), libm::atan2(im, re))
    };
    pairs
        .iter()
        .map(|&(i, j)| {
            (0..sys.s())
                .map(|c| {
                    let (li, ai) = polar(&sys.terms()[i].bases[c]);
                    let (lj, aj) = polar(&sys.terms()[j].bases[c]);
                    (li - lj, ai - aj)
                })
                .collect()
        })
        .collect()
}

fn plausible(z: &[i64], la: &[(f64, f64)]) -> bool {
    let tau = 2.0 * core::f64::consts::PI;
    let (mut l, mut a, mut scale) = (0.0, 0.0, 1.0);
    for (&zc, &(lc, ac)) in z.iter().zip(la) {
        l += zc as f64 * lc;
        a += zc as f64 * ac;
        scale += (zc as f64).abs() * (lc.abs() + ac.abs());
    }
    let a = a - tau * libm::round(a / tau);
    libm::fabs(l) < 1e-9 * scale && libm::fabs(a) < 1e-9 * scale
}

fn holds_exactly(z: &[i64], bi: &[MultiQuad], bj: &[MultiQuad]) -> bool {
    let mut lhs = MultiQuad::one();
    let mut rhs = MultiQuad::one();
    for (c, &zc) in z.iter().enumerate() {
        let e = zc.unsigned_abs();
        if zc > 0 {
            lhs = lhs.mul(&bi[c].pow(e));
            rhs = rhs.mul(&bj[c].pow(e));
        } else if zc < 0 {
            lhs = lhs.mul(&bj[c].pow(e));
            rhs = rhs.mul(&bi[c].pow(e));
        }
    }
    lhs == rhs
}

fn bounded_search(sys: &ExponentialTermSystem, pairs: &[(usize, usize)], bound: i64) -> Result<RelationLattice> {
    let s = sys.s();
    let side = (2 * bound + 1) as u64;
    if side.checked_pow(s as u32).map_or(true, |n| n > MAX_SEARCH) {
        return Err(resource(format!("(2B+1)^s exceeds {MAX_SEARCH} vectors")));
    }
    let la = log_args(sys, pairs);
    let mq = sys.base_multiquads();
    let mut found: Vec<Vec<BigInt>> = Vec::new();
    let mut z = vec![-bound; s];
    loop {
        // Only one of ±z: the first nonzero entry is positive.
        let lead = z.iter().find(|v| **v != 0).copied().unwrap_or(0);
        if lead > 0
            && pairs
                .iter()
                .zip(&la)
                .all(|(&(i, j), l)| plausible(&z, l) && holds_exactly(&z, &mq[i], &mq[j]))
        {
            found.push(z.iter().map(|&v| BigInt::from(v)).collect());
        }
        let mut pos = s;
        loop {
            if pos == 0 {
                return Ok(RelationLattice {
                    basis: hnf_basis(found, s),
                    completeness: Completeness::WithinBound(bound),
                });
            }
            pos -= 1;
            if z[pos] < bound {
                z[pos] += 1;
                for v in &mut z[pos + 1..] {
                    *v = -bound;
                }
                break;
            }
        }
    }
}

/// Basis of `G(π)`; `bound` limits the search when some base is irrational.
pub fn relation_lattice(sys: &ExponentialTermSystem, pi: &Partition, bound: i64) -> Result<RelationLattice> {
    if pi.size() != sys.r() {
        return Err(domain(format!(
            "partition of {} indices for {} terms",
            pi.size(),
            sys.r()
        )));
    }
    if bound < 1 {
        return Err(domain("search bound must be positive"));
    }
    let pairs = constrained_pairs(pi);
    let ratios: Option<Vec<Vec<BigRational>>> = pairs
        .iter()
        .map(|&(i, j)| {
            (0..sys.s())
                .map(|c| Some(as_rational(&sys.terms()[i].bases[c])? / as_rational(&sys.terms()[j].bases[c])?))
                .collect()
        })
        .collect();
    match ratios {
        Some(r) => Ok(exact_rational(&r, sys.s())),
        None => bounded_search(sys, &pairs, bound),
    }
}

pub fn g_pi_trivial(sys: &ExponentialTermSystem, pi: &Partition, bound: i64) -> Result<bool> {
    Ok(relation_lattice(sys, pi, bound)?.is_trivial())
}

/// Whether `α_i^z = α_j^z` holds exactly for every pair in every block.
pub fn is_relation(sys: &ExponentialTermSystem, pi: &Partition, z: &[BigInt]) -> Result<bool> {
    if z.len() != sys.s() || pi.size() != sys.r() {
        return Err(domain("dimension mismatch"));
    }
    let z: Option<Vec<i64>> = z.iter().map(ToPrimitive::to_i64).collect();
    let z = z.ok_or_else(|| resource("relation entries exceed 64 bits"))?;
    let mq: Vec<Vec<MultiQuad>> = sys
        .terms()
        .iter()
        .map(|t| t.bases.iter().map(closed_to_multiquad).collect())
        .collect();
    Ok(constrained_pairs(pi)
        .iter()
        .all(|&(i, j)| holds_exactly(&z, &mq[i], &mq[j])))
}
