//! Exhaustive search for `U_{n₁} + U_{n₂} ∈ X ∪ Y`, detection of the known
//! infinite families and the canned scenarios for the four exceptional cases.
//!
//! Rows (fixed `n₁`) are independent, so a caller may split `0..=N` into
//! ranges, run [`search_rows`] on each and hand the union to [`assemble`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::algebraic::{is_excluded_binary, is_root_of_unity};
use crate::error::{resource, Error, Result};
use crate::pell::PellEquation;
use crate::poly::IntPoly;
use crate::recurrence::{binet_decompose, classify, Classification, LinearRecurrence, DEFAULT_INDEPENDENCE_BOUND};

/// Terms above this many bits (about 10⁴ decimal digits) abort the search.
pub const MAX_VALUE_BITS: u64 = 33_220;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::X => "X",
            Side::Y => "Y",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideFilter {
    X,
    Y,
    Both,
}

impl SideFilter {
    fn includes(self, side: Side) -> bool {
        matches!((self, side), (SideFilter::Both, _) | (SideFilter::X, Side::X) | (SideFilter::Y, Side::Y))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub recurrence: LinearRecurrence,
    pub equation: PellEquation,
    pub bound: usize,
    pub sides: SideFilter,
    /// Restrict X and Y to coordinates of solutions with `x, y > 0`.
    pub positive_only: bool,
    /// Enumerate `n₂ ≤ n₁` only.
    pub unordered: bool,
}

impl SearchConfig {
    pub fn new(recurrence: LinearRecurrence, equation: PellEquation, bound: usize) -> Self {
        Self {
            recurrence,
            equation,
            bound,
            sides: SideFilter::Both,
            positive_only: false,
            unordered: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Match {
    pub n1: usize,
    pub n2: usize,
    pub value: BigInt,
    pub side: Side,
    /// `y` for an X-match, `x` for a Y-match (always `≥ 0`).
    pub witness: BigInt,
}

impl Match {
    /// `(x, y)` with `x² − dy² = t`.
    pub fn solution(&self) -> (BigInt, BigInt) {
        match self.side {
            Side::X => (self.value.clone(), self.witness.clone()),
            Side::Y => (self.witness.clone(), self.value.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub config: SearchConfig,
    pub matches: Vec<Match>,
    /// Number of matches per value `v`.
    pub census: BTreeMap<BigInt, usize>,
    /// `(N′, matches with both indices ≤ N′)` for `N′ = N/4, N/2, N`.
    pub growth: Vec<(usize, usize)>,
}

/// `U₀, …, U_N`, refusing values beyond [`MAX_VALUE_BITS`].
pub fn prepare_terms(config: &SearchConfig) -> Result<Vec<BigInt>> {
    let mut out = Vec::with_capacity(config.bound + 1);
    for (n, u) in config.recurrence.iter().take(config.bound + 1).enumerate() {
        if u.bits() > MAX_VALUE_BITS {
            return Err(resource(format!("U_{n} exceeds {MAX_VALUE_BITS} bits")));
        }
        out.push(u);
    }
    Ok(out)
}

fn membership(eq: &PellEquation, v: &BigInt, sides: SideFilter, positive_only: bool) -> [Option<BigInt>; 2] {
    let keep = |w: Option<BigInt>| w.filter(|w| !positive_only || (v.is_positive() && w.is_positive()));
    [
        if sides.includes(Side::X) { keep(eq.member_x(v)) } else { None },
        if sides.includes(Side::Y) { keep(eq.member_y(v)) } else { None },
    ]
}

/// Matches with `n₁` in `rows`, ordered by `(n₁, n₂, side)`.
pub fn search_rows(config: &SearchConfig, terms: &[BigInt], rows: Range<usize>) -> Vec<Match> {
    let mut out = Vec::new();
    // Periodic and slowly growing sequences repeat values; cache small ones.
    let mut cache: BTreeMap<BigInt, [Option<BigInt>; 2]> = BTreeMap::new();
    for n1 in rows {
        let last = if config.unordered { n1 } else { config.bound };
        for n2 in 0..=last {
            let v = &terms[n1] + &terms[n2];
            let hit = if v.bits() <= 64 {
                if let Some(h) = cache.get(&v) {
                    h.clone()
                } else {
                    let h = membership(&config.equation, &v, config.sides, config.positive_only);
                    if cache.len() < 1 << 16 {
                        cache.insert(v.clone(), h.clone());
                    }
                    h
                }
            } else {
                membership(&config.equation, &v, config.sides, config.positive_only)
            };
            for (side, w) in [Side::X, Side::Y].into_iter().zip(hit) {
                if let Some(witness) = w {
                    out.push(Match {
                        n1,
                        n2,
                        value: v.clone(),
                        side,
                        witness,
                    });
                }
            }
        }
    }
    out
}

/// Sorts matches canonically and derives the census and growth table.
pub fn assemble(config: SearchConfig, mut matches: Vec<Match>) -> SearchResult {
    matches.sort_by_key(|m| (m.n1, m.n2, m.side));
    let mut census = BTreeMap::new();
    for m in &matches {
        *census.entry(m.value.clone()).or_insert(0) += 1;
    }
    let n = config.bound;
    let growth = [n / 4, n / 2, n]
        .into_iter()
        .map(|cut| (cut, matches.iter().filter(|m| m.n1.max(m.n2) <= cut).count()))
        .collect();
    SearchResult {
        config,
        matches,
        census,
        growth,
    }
}

pub fn search(config: &SearchConfig) -> Result<SearchResult> {
    let terms = prepare_terms(config)?;
    let matches = search_rows(config, &terms, 0..config.bound + 1);
    Ok(assemble(config.clone(), matches))
}

/// Structural witness for infinitely many matches. Detection is heuristic:
/// it exhibits the shape, it does not prove the family is infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfiniteFamily {
    /// (a) `U` is periodic, so every match recurs with the period.
    Periodic { period: usize, example: Match },
    /// (b) `U_z = 0` and `U_n` itself lies in X or Y for many `n`, giving
    /// matches `(n, z)`.
    ZeroPadding { zero_index: usize, side: Side, indices: Vec<usize> },
    /// (c) The characteristic polynomial is `x² + ax ± 1` with `(a² ∓ 4)/d` a
    /// rational square.
    ExcludedBinaryForm { poly: IntPoly },
}

impl InfiniteFamily {
    pub fn letter(&self) -> char {
        match self {
            InfiniteFamily::Periodic { .. } => 'a',
            InfiniteFamily::ZeroPadding { .. } => 'b',
            InfiniteFamily::ExcludedBinaryForm { .. } => 'c',
        }
    }
}

impl fmt::Display for InfiniteFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfiniteFamily::Periodic { period, example } => write!(
                f,
                "(a) period {period}: U_{} + U_{} = {} ∈ {} recurs",
                example.n1, example.n2, example.value, example.side
            ),
            InfiniteFamily::ZeroPadding { zero_index, side, indices } => write!(
                f,
                "(b) U_{zero_index} = 0 and U_n ∈ {side} for {} indices n ≤ N",
                indices.len()
            ),
            InfiniteFamily::ExcludedBinaryForm { poly } => write!(f, "(c) excluded binary form {poly}"),
        }
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

/// Exact period when every effective root is a root of unity.
pub fn period(rec: &LinearRecurrence) -> Result<Option<usize>> {
    let form = match binet_decompose(rec) {
        Ok(f) => f,
        Err(Error::NotSimple) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut l = 1u64;
    for t in &form.terms {
        match is_root_of_unity(&t.root)? {
            Some(n) => l = lcm(l, n),
            None => return Ok(None),
        }
    }
    let l = l as usize;
    // U_{n+L} − U_n satisfies the recurrence; k zero values make it vanish.
    let k = rec.order();
    let u = rec.terms(l + k);
    Ok((0..k).all(|n| u[n + l] == u[n]).then_some(l))
}

pub fn detect_infinite_family(result: &SearchResult, rec: &LinearRecurrence) -> Result<Vec<InfiniteFamily>> {
    let mut flags = Vec::new();
    let periodic = period(rec)?;
    if let (Some(period), Some(first)) = (periodic, result.matches.first()) {
        flags.push(InfiniteFamily::Periodic {
            period,
            example: first.clone(),
        });
    }
    if periodic.is_none() {
        let n = result.config.bound;
        let terms = rec.terms(n);
        if let Some(z) = terms.iter().position(Zero::is_zero) {
            for side in [Side::X, Side::Y] {
                let indices: Vec<usize> = result
                    .matches
                    .iter()
                    .filter(|m| m.side == side && (m.n1 == z || m.n2 == z))
                    .map(|m| if m.n2 == z { m.n1 } else { m.n2 })
                    .collect();
                let late = indices.iter().filter(|&&i| 2 * i > n).count();
                if late >= 3 {
                    flags.push(InfiniteFamily::ZeroPadding {
                        zero_index: z,
                        side,
                        indices,
                    });
                }
            }
        }
    }
    let d = result.config.equation.d();
    let mut polys = vec![rec.char_poly()];
    if let Ok(form) = binet_decompose(rec) {
        polys.push(form.effective_poly());
    }
    if let Some(poly) = polys.into_iter().find(|p| is_excluded_binary(p, d)) {
        flags.push(InfiniteFamily::ExcludedBinaryForm { poly });
    }
    Ok(flags)
}

/// Outcome of one canned scenario; every check in it passed.
#[derive(Clone, Debug)]
pub struct RemarkReport {
    pub id: u8,
    pub checks: Vec<String>,
    pub classification: Classification,
    pub result: SearchResult,
    pub flags: Vec<InfiniteFamily>,
}

/// `(coefficients, initial terms, d, t, N)` for each scenario.
pub fn remark_scenario(id: u8) -> Result<SearchConfig> {
    let (c, i, d, t, n): (&[i64], &[i64], i64, i64, usize) = match id {
        1 => (&[3, -3, 2], &[0, 1, 1], 2, 1, 60),
        2 => (&[4, -1], &[0, 1], 3, 1, 20),
        3 => (&[0, 1], &[0, 2], 5, 1, 99),
        4 => (&[4, -3], &[2, 2], 5, -4, 20),
        _ => return Err(crate::error::domain(format!("no scenario {id}; expected 1 to 4"))),
    };
    Ok(SearchConfig::new(
        LinearRecurrence::from_i64(c, i)?,
        PellEquation::from_i64(d, t)?,
        n,
    ))
}

struct Checks {
    id: u8,
    passed: Vec<String>,
}

impl Checks {
    fn check(&mut self, what: &str, ok: bool, detail: impl FnOnce() -> String) -> Result<()> {
        if ok {
            self.passed.push(String::from(what));
            Ok(())
        } else {
            Err(Error::Verification(format!("scenario {}: {what}: {}", self.id, detail())))
        }
    }
}

fn has_match(r: &SearchResult, n1: usize, n2: usize, side: Side) -> bool {
    r.matches.iter().any(|m| m.n1 == n1 && m.n2 == n2 && m.side == side)
}

pub fn verify_remark(id: u8) -> Result<RemarkReport> {
    let config = remark_scenario(id)?;
    let rec = config.recurrence.clone();
    let eq = config.equation.clone();
    let classification = classify(&rec, eq.d(), DEFAULT_INDEPENDENCE_BOUND)?;
    let result = search(&config)?;
    let flags = detect_infinite_family(&result, &rec)?;
    let n = config.bound;
    let mut c = Checks { id, passed: Vec::new() };
    let flag = |l: char| flags.iter().any(|f| f.letter() == l);
    let v = |k: i64| BigInt::from(k);
    match id {
        1 => {
            let head: Vec<BigInt> = rec.terms(11);
            let expect: Vec<BigInt> = [0, 1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1].into_iter().map(v).collect();
            c.check("period 6: 0, 1, 1, 0, -1, -1", head == expect && period(&rec)? == Some(6), || {
                format!("terms {head:?}")
            })?;
            c.check("degenerate", classification.degenerate, || String::from("classifier says not degenerate"))?;
            let w = eq.member_y(&v(2));
            c.check("2 ∈ Y with x = 3", w == Some(v(3)), || format!("witness {w:?}"))?;
            let twos = result.matches.iter().filter(|m| m.value == v(2) && m.side == Side::Y).count();
            c.check("at least 100 matches with v = 2", twos >= 100, || format!("{twos} matches"))?;
            let g: Vec<usize> = result.growth.iter().map(|x| x.1).collect();
            c.check("growth strictly increasing", g.windows(2).all(|w| w[0] < w[1]), || {
                format!("growth {g:?}")
            })?;
            c.check("flag (a)", flag('a'), || format!("flags {flags:?}"))?;
        }
        2 => {
            c.check("excluded binary form", classification.excluded_binary_form, || {
                String::from("classifier does not report the excluded form")
            })?;
            let terms = rec.terms(n);
            let bad: Vec<usize> = (0..=n).filter(|&k| eq.member_y(&terms[k]).is_none()).collect();
            c.check("U_n ∈ Y for n ≤ N", bad.is_empty(), || format!("fails at {bad:?}"))?;
            let missing: Vec<usize> = (0..=n).filter(|&k| !has_match(&result, k, 0, Side::Y)).collect();
            c.check("(n, 0) matches for all n ≤ N", missing.is_empty(), || format!("missing {missing:?}"))?;
            c.check("flags (b) and (c)", flag('b') && flag('c'), || format!("flags {flags:?}"))?;
        }
        3 => {
            let w = eq.member_y(&v(4));
            c.check("4 ∈ Y with x = 9", w == Some(v(9)), || format!("witness {w:?}"))?;
            let missing: Vec<(usize, usize)> = (1..=n)
                .step_by(2)
                .flat_map(|a| (1..=a).step_by(2).map(move |b| (a, b)))
                .filter(|&(a, b)| !has_match(&result, a, b, Side::Y))
                .collect();
            c.check("all (odd, odd) pairs match", missing.is_empty(), || format!("missing {missing:?}"))?;
            c.check("root-of-unity roots", classification.has_root_of_unity_root, || {
                String::from("no root of unity among the roots")
            })?;
            c.check("flag (a)", flag('a'), || format!("flags {flags:?}"))?;
        }
        4 => {
            c.check(
                "effective order 1 (coefficient at 3 vanishes)",
                classification.effective_order == 1 && classification.dropped_roots == ["3"],
                || format!("effective order {}, dropped {:?}", classification.effective_order, classification.dropped_roots),
            )?;
            let w = eq.member_x(&v(4));
            c.check("4 ∈ X with y = 2", w == Some(v(2)), || format!("witness {w:?}"))?;
            let pairs = (n + 1) * (n + 2) / 2;
            let all = (0..=n).all(|a| (0..=a).all(|b| has_match(&result, a, b, Side::X)));
            c.check("all pairs match", all, || format!("{} of {pairs} pairs", result.matches.len()))?;
            c.check("root 1 is a root of unity", classification.roots_of_unity == [(0, 1)], || {
                format!("roots of unity {:?}", classification.roots_of_unity)
            })?;
            c.check("flag (a)", flag('a'), || format!("flags {flags:?}"))?;
        }
        _ => unreachable!("remark_scenario rejects other ids"),
    }
    Ok(RemarkReport {
        id,
        checks: c.passed,
        classification,
        result,
        flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(c: &[i64], i: &[i64], d: i64, t: i64, n: usize) -> SearchConfig {
        SearchConfig::new(
            LinearRecurrence::from_i64(c, i).unwrap(),
            PellEquation::from_i64(d, t).unwrap(),
            n,
        )
    }

    #[test]
    fn remark_three_small() {
        let r = search(&config(&[0, 1], &[0, 2], 5, 1, 9)).unwrap();
        assert_eq!(r.census.get(&BigInt::from(4)), Some(&15));
        assert_eq!(r.census.get(&BigInt::from(0)), Some(&15));
        assert_eq!(r.census.get(&BigInt::from(2)), None);
        assert_eq!(r.census.values().sum::<usize>(), r.matches.len());
    }

    #[test]
    fn remark_four_small() {
        let r = search(&config(&[4, -3], &[2, 2], 5, -4, 5)).unwrap();
        assert_eq!(r.matches.len(), 21);
        assert!(r.matches.iter().all(|m| m.side == Side::X && m.witness == BigInt::from(2)));
    }

    #[test]
    fn finite_case_has_no_flags() {
        let rec = LinearRecurrence::from_i64(&[5, -6], &[2, 5]).unwrap();
        let a = search(&config(&[5, -6], &[2, 5], 2, 1, 30)).unwrap();
        let b = search(&config(&[5, -6], &[2, 5], 2, 1, 60)).unwrap();
        assert_eq!(a.matches, b.matches);
        assert!(detect_infinite_family(&b, &rec).unwrap().is_empty());
    }

    #[test]
    fn ordered_mode_doubles_off_diagonal() {
        let mut c = config(&[3, -3, 2], &[0, 1, 1], 2, 1, 20);
        let un = search(&c).unwrap();
        c.unordered = false;
        let or = search(&c).unwrap();
        let diag = un.matches.iter().filter(|m| m.n1 == m.n2).count();
        assert_eq!(or.matches.len(), 2 * un.matches.len() - diag);
    }

    #[test]
    fn positive_only_drops_zero_coordinates() {
        let mut c = config(&[4, -1], &[0, 1], 3, 1, 10);
        let all = search(&c).unwrap();
        c.positive_only = true;
        let pos = search(&c).unwrap();
        assert!(pos.matches.len() < all.matches.len());
        assert!(pos.matches.iter().all(|m| m.value.is_positive() && m.witness.is_positive()));
    }

    #[test]
    fn value_guard() {
        let c = config(&[2], &[1], 2, 1, 40_000);
        assert!(matches!(search(&c), Err(Error::Resource(_))));
    }

    #[test]
    fn remarks_verify() {
        for id in 1..=4 {
            let r = verify_remark(id).unwrap_or_else(|e| panic!("scenario {id}: {e}"));
            assert!(!r.checks.is_empty());
        }
        assert!(verify_remark(5).is_err());
    }
}
