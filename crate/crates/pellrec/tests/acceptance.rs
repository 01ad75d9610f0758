//! Acceptance run: one PASS/FAIL line per criterion, with timing. Exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use pellrec_core::algebraic::{is_degenerate, is_root_of_unity, roots_of, AlgebraicNumber};
use pellrec_core::bounds::{aggregate_bound, smith_bound};
use pellrec_core::pell::{fundamental_solution, solve_classes, PellEquation};
use pellrec_core::poly::{cyclotomic, IntPoly};
use pellrec_core::recurrence::{binet_decompose, classify, LinearRecurrence};
use pellrec_core::search::{detect_infinite_family, period, search, SearchConfig, Side};
use pellrec_core::BigInt;

type Check = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn rec(c: &[i64], i: &[i64]) -> LinearRecurrence {
    LinearRecurrence::from_i64(c, i).unwrap()
}

fn eq(d: i64, t: i64) -> PellEquation {
    PellEquation::from_i64(d, t).unwrap()
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn fundamental() -> Check {
    let mut times = Vec::new();
    for (d, x, y) in [(3, 2, 1), (5, 9, 4)] {
        let start = Instant::now();
        let f = fundamental_solution(&int(d)).map_err(e)?;
        let dt = start.elapsed();
        ensure(f.x1 == int(x) && f.y1 == int(y), || format!("d={d}: ({}, {})", f.x1, f.y1))?;
        ensure(dt < Duration::from_millis(1), || format!("d={d} took {dt:?}"))?;
        times.push(format!("d={d} in {dt:?}"));
    }
    Ok(times.join(", "))
}

fn remark_one() -> Check {
    let r = rec(&[3, -3, 2], &[0, 1, 1]);
    let head = r.terms(17);
    let pattern = [0, 1, 1, 0, -1, -1];
    ensure(head.iter().enumerate().all(|(n, u)| *u == int(pattern[n % 6])), || format!("terms {head:?}"))?;
    ensure(period(&r).map_err(e)? == Some(6), || "period is not 6".into())?;
    let c = classify(&r, &int(2), 50).map_err(e)?;
    ensure(c.degenerate, || "not reported degenerate".into())?;
    let res = search(&SearchConfig::new(r.clone(), eq(2, 1), 60)).map_err(e)?;
    let twos: Vec<_> = res.matches.iter().filter(|m| m.value == int(2) && m.side == Side::Y).collect();
    ensure(twos.len() >= 100, || format!("{} matches with v=2", twos.len()))?;
    ensure(twos.iter().all(|m| m.witness == int(3)), || "witness is not x=3".into())?;
    let g: Vec<usize> = res.growth.iter().map(|x| x.1).collect();
    ensure(g.windows(2).all(|w| w[0] < w[1]), || format!("growth {g:?}"))?;
    let flags = detect_infinite_family(&res, &r).map_err(e)?;
    ensure(flags.iter().any(|f| f.letter() == 'a'), || format!("flags {flags:?}"))?;
    Ok(format!("{} matches with v=2, growth {g:?}", twos.len()))
}

fn remark_two() -> Check {
    let r = rec(&[4, -1], &[0, 1]);
    let c = classify(&r, &int(3), 50).map_err(e)?;
    ensure(c.excluded_binary_form, || "excluded form not reported".into())?;
    let terms = r.terms(4);
    ensure(terms == [0, 1, 4, 15, 56].map(int), || format!("terms {terms:?}"))?;
    let y = eq(3, 1);
    ensure(terms.iter().all(|u| y.member_y(u).is_some()), || "a term is not in Y".into())?;
    let res = search(&SearchConfig::new(r, y, 20)).map_err(e)?;
    let missing: Vec<usize> = (0..=20)
        .filter(|&n| !res.matches.iter().any(|m| m.n1 == n && m.n2 == 0))
        .collect();
    ensure(missing.is_empty(), || format!("no (n, 0) match for {missing:?}"))?;
    Ok("(n₁, 0) matches for every n₁ ≤ 20".into())
}

fn remark_three() -> Check {
    let r = rec(&[0, 1], &[0, 2]);
    let terms = r.terms(99);
    ensure(
        terms.iter().enumerate().all(|(n, u)| *u == int(1 - if n % 2 == 0 { 1 } else { -1 })),
        || "U_n ≠ 1 − (−1)^n".into(),
    )?;
    let e5 = eq(5, 1);
    ensure(e5.member_y(&int(4)) == Some(int(9)), || "4 ∉ Y or witness ≠ 9".into())?;
    let res = search(&SearchConfig::new(r.clone(), e5, 99)).map_err(e)?;
    let hits: BTreeSet<(usize, usize)> = res.matches.iter().map(|m| (m.n1, m.n2)).collect();
    let odd_pairs: Vec<(usize, usize)> = (1..=99usize)
        .step_by(2)
        .flat_map(|a| (1..=a).step_by(2).map(move |b| (a, b)))
        .collect();
    ensure(odd_pairs.iter().all(|p| hits.contains(p)), || "an (odd, odd) pair is missing".into())?;
    let c = classify(&r, &int(5), 50).map_err(e)?;
    ensure(c.has_root_of_unity_root && c.roots_of_unity.len() == 2, || {
        format!("roots of unity {:?}", c.roots_of_unity)
    })?;
    Ok(format!("{} (odd, odd) pairs match", odd_pairs.len()))
}

fn remark_four() -> Check {
    let r = rec(&[4, -3], &[2, 2]);
    let form = binet_decompose(&r).map_err(e)?;
    ensure(form.effective_order() == 1, || format!("effective order {}", form.effective_order()))?;
    ensure(form.dropped.len() == 1 && form.dropped[0].to_string() == "3", || "root 3 not dropped".into())?;
    ensure(r.terms(200).iter().all(|u| *u == int(2)), || "U is not constantly 2".into())?;
    let e = eq(5, -4);
    ensure(e.member_x(&int(4)) == Some(int(2)), || "4 ∉ X or witness ≠ 2".into())?;
    let n = 40;
    let res = search(&SearchConfig::new(r.clone(), e, n)).map_err(self::e)?;
    ensure(res.matches.len() == (n + 1) * (n + 2) / 2, || format!("{} matches", res.matches.len()))?;
    ensure(res.matches.iter().all(|m| m.side == Side::X && m.value == int(4)), || "unexpected match".into())?;
    let c = classify(&r, &int(5), 50).map_err(self::e)?;
    ensure(c.roots == ["1"] && c.roots_of_unity == [(0, 1)], || format!("roots {:?}", c.roots))?;
    Ok(format!("all {} pairs match with v = 4", res.matches.len()))
}

fn finiteness() -> Check {
    let r = rec(&[5, -6], &[2, 5]);
    let c = classify(&r, &int(2), 50).map_err(e)?;
    ensure(c.theorem_applies, || format!("theorem does not apply: {c:?}"))?;
    let mut counts = Vec::new();
    for n in [30, 60, 120] {
        let res = search(&SearchConfig::new(r.clone(), eq(2, 1), n)).map_err(e)?;
        counts.push(res.matches.len());
    }
    ensure(counts.windows(2).all(|w| w[0] == w[1]), || format!("counts {counts:?}"))?;
    Ok(format!("{} matches at N = 30, 60, 120", counts[0]))
}

fn is_square_free(d: i64) -> bool {
    (2..).take_while(|p| p * p <= d).all(|p| d % (p * p) != 0)
}

fn exact_sqrt(r: i128) -> Option<i128> {
    if r < 0 {
        return None;
    }
    let mut s = (r as f64).sqrt() as i128;
    while s * s > r {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= r {
        s += 1;
    }
    (s * s == r).then_some(s)
}

fn oracle_equivalence() -> Check {
    const CAP: i128 = 10_000;
    let mut equations = 0;
    let mut solutions = 0;
    for d in (2..=50).filter(|&d| is_square_free(d)) {
        for t in (-20..=20).filter(|&t| t != 0) {
            let pe = eq(d, t);
            let (d, t) = (d as i128, t as i128);
            let mut brute = BTreeSet::new();
            for y in 0..=CAP {
                if let Some(x) = exact_sqrt(t + d * y * y) {
                    for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        brute.insert((x * sx, y * sy));
                    }
                }
            }
            let gen: BTreeSet<(i128, i128)> = solve_classes(&pe)
                .solutions_up_to(&BigInt::from(CAP))
                .into_iter()
                .map(|(x, y)| (x.to_i128().unwrap(), y.to_i128().unwrap()))
                .collect();
            ensure(gen == brute, || format!("classes disagree for d={d}, t={t}"))?;
            let xs: BTreeSet<i128> = brute.iter().map(|s| s.0.abs()).collect();
            let ys: BTreeSet<i128> = brute.iter().map(|s| s.1.abs()).collect();
            for v in 0..=CAP {
                let bv = BigInt::from(v);
                // |x| ≤ CAP forces |y| ≤ CAP, so the scan sees every x here.
                let mx = pe.member_x(&bv);
                ensure(mx.is_some() == xs.contains(&v), || format!("member_X({v}) for d={d}, t={t}"))?;
                if let Some(w) = mx {
                    ensure(brute.contains(&(v, w.to_i128().unwrap())), || format!("bad X witness {v}"))?;
                }
                let my = pe.member_y(&bv);
                ensure(my.is_some() == ys.contains(&v), || format!("member_Y({v}) for d={d}, t={t}"))?;
                if let Some(w) = my {
                    ensure(brute.contains(&(w.to_i128().unwrap(), v)), || format!("bad Y witness {v}"))?;
                }
            }
            equations += 1;
            solutions += brute.len();
        }
    }
    Ok(format!("{equations} equations, {solutions} solutions with |y| ≤ 10⁴"))
}

fn bound_calculator() -> Check {
    let six = smith_bound(3, &[0; 6], 2).map_err(e)?;
    ensure(six.value() == BigInt::from(1) << 7776u32, || format!("smith bound 2^{:?}", six.log2_exact()))?;
    let agg = aggregate_bound(1, 2).map_err(e)?;
    let stated = BigInt::from(15) << 2432u32;
    ensure(agg.value() == stated, || {
        format!(
            "aggregate_bound(1, 2) = {}·2^{} (A = {}: 35·{}·… = {}, 6·{}·log₂2 = {}); stated 15·2^2432",
            agg.partition_count,
            agg.per_partition.log2_exact().unwrap(),
            agg.per_partition.a,
            agg.per_partition.a.pow(3),
            agg.per_partition.two_exponent,
            agg.per_partition.a.pow(2),
            agg.per_partition.d_exponent,
        )
    })?;
    Ok("2^7776 and 15·2^2432".into())
}

/// Roots of a monic polynomial by Durand–Kerner in f64.
fn numeric_roots(c: &[f64]) -> Vec<(f64, f64)> {
    let n = c.len() - 1;
    let mul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let mut z: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let a = 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            (2.0 * a.cos(), 2.0 * a.sin())
        })
        .collect();
    for _ in 0..5000 {
        for i in 0..n {
            let mut p = (1.0, 0.0);
            for k in (0..n).rev() {
                p = mul(p, z[i]);
                p.0 += c[k];
            }
            let mut q = (1.0, 0.0);
            for j in 0..n {
                if j != i {
                    q = mul(q, (z[i].0 - z[j].0, z[i].1 - z[j].1));
                }
            }
            let den = q.0 * q.0 + q.1 * q.1;
            if den > 0.0 {
                let step = ((p.0 * q.0 + p.1 * q.1) / den, (p.1 * q.0 - p.0 * q.1) / den);
                z[i] = (z[i].0 - step.0, z[i].1 - step.1);
            }
        }
    }
    z
}

/// Some ratio of numerically distinct roots satisfies ρ^q ≈ 1 with q ≤ 60.
fn numeric_degenerate(coeffs: &[i64]) -> bool {
    let c: Vec<f64> = coeffs.iter().map(|&x| x as f64).collect();
    let z = numeric_roots(&c);
    for i in 0..z.len() {
        for j in 0..z.len() {
            let (a, b) = (z[i], z[j]);
            if i == j || ((a.0 - b.0).hypot(a.1 - b.1)) < 1e-3 {
                continue;
            }
            let den = b.0 * b.0 + b.1 * b.1;
            let rho = ((a.0 * b.0 + a.1 * b.1) / den, (a.1 * b.0 - a.0 * b.1) / den);
            let r = rho.0.hypot(rho.1);
            if (r - 1.0).abs() > 1e-6 {
                continue;
            }
            let theta = rho.1.atan2(rho.0) / (2.0 * std::f64::consts::PI);
            if (1..=60).any(|q| {
                let x = theta * q as f64;
                (x - x.round()).abs() < 1e-7
            }) {
                return true;
            }
        }
    }
    false
}

fn algebraic_predicates() -> Check {
    let mut polys = 0;
    let mut degenerate = 0;
    for deg in 2..=3usize {
        let count = 11usize.pow(deg as u32);
        for code in 0..count {
            // Low coefficients a_0..a_{deg−1} in [−5, 5]; a_0 ≠ 0.
            let mut c: Vec<i64> = (0..deg).map(|k| (code / 11usize.pow(k as u32) % 11) as i64 - 5).collect();
            if c[0] == 0 {
                continue;
            }
            c.push(1);
            let f = IntPoly::from_i64(&c);
            let exact = is_degenerate(&f).map_err(e)?;
            let numeric = numeric_degenerate(&c);
            ensure(exact == numeric, || format!("{f}: exact {exact}, numeric {numeric}"))?;
            polys += 1;
            degenerate += usize::from(exact);
        }
    }
    let mut unity = 0;
    for n in 1..=12u64 {
        for (z, _) in roots_of(&cyclotomic(n).map_err(e)?).map_err(e)? {
            let got = is_root_of_unity(&z).map_err(e)?;
            ensure(got == Some(n), || format!("{z}: order {got:?}, expected {n}"))?;
            unity += 1;
        }
    }
    let mut others: Vec<AlgebraicNumber> = Vec::new();
    for f in [[1, -4, 1], [-1, -1, 1]] {
        others.extend(roots_of(&IntPoly::from_i64(&f)).map_err(e)?.into_iter().map(|r| r.0));
    }
    others.push(AlgebraicNumber::from_int(2));
    others.push(AlgebraicNumber::from_int(3));
    for z in &others {
        ensure(is_root_of_unity(z).map_err(e)?.is_none(), || format!("{z} reported as a root of unity"))?;
    }
    Ok(format!(
        "{polys} polynomials ({degenerate} degenerate), {unity} roots of unity of order ≤ 12, {} non-roots",
        others.len()
    ))
}

fn determinism() -> Check {
    let configs: [&[&str]; 3] = [
        &["search", "--rec-spec", "3;3,-3,2;0,1,1", "-d", "2", "-t", "1", "-N", "150"],
        &["search", "--rec-spec", "2;5,-6;2,5", "-d", "2", "-t", "1", "-N", "120", "--ordered"],
        &["search", "--rec-spec", "2;4,-1;0,1", "-d", "3", "-t", "1", "-N", "90", "--format", "csv"],
    ];
    let mut bytes = 0;
    for args in configs {
        let run = |jobs: &str| {
            Command::new(env!("CARGO_BIN_EXE_pellrec"))
                .args(args)
                .args(["--jobs", jobs])
                .output()
                .map_err(e)
        };
        let (one, eight) = (run("1")?, run("8")?);
        ensure(one.status.success() && eight.status.success(), || "search failed".into())?;
        ensure(one.stdout == eight.stdout, || format!("output differs for {args:?}"))?;
        bytes += one.stdout.len();
    }
    Ok(format!("3 configs, {bytes} bytes identical at --jobs 1 and 8"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "fundamental solutions", Duration::from_secs(1), fundamental),
        (2, "remark 1 reproduction", Duration::from_secs(1), remark_one),
        (3, "remark 2 reproduction", Duration::from_secs(1), remark_two),
        (4, "remark 3 reproduction", Duration::from_secs(1), remark_three),
        (5, "remark 4 reproduction", Duration::from_secs(1), remark_four),
        (6, "finiteness behavior", Duration::from_secs(10), finiteness),
        (7, "oracle equivalence", Duration::from_secs(120), oracle_equivalence),
        (8, "bound calculator", Duration::from_secs(1), bound_calculator),
        (9, "algebraic predicate suite", Duration::from_secs(60), algebraic_predicates),
        (10, "determinism", Duration::from_secs(600), determinism),
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (id, name, limit, f) in criteria {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = f();
        let dt = start.elapsed();
        let outcome = match outcome {
            Ok(_) if dt > limit => Err(format!("took {dt:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name} [{dt:.2?}]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name} [{dt:.2?}]: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
