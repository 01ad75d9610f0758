use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use pellrec_core::pell::PellEquation;
use pellrec_core::recurrence::LinearRecurrence;
use pellrec_core::search::{search, SearchConfig, Side};

fn is_square(n: i64) -> bool {
    n >= 0 && (0..=n).take_while(|s| s * s <= n).any(|s| s * s == n)
}

/// `v ∈ X` or `v ∈ Y` by scanning `y` directly.
fn brute(d: i64, t: i64, v: i64) -> (bool, bool) {
    let in_x = (0..=v.abs() + 5).any(|y| v * v - d * y * y == t);
    let in_y = is_square(t + d * v * v);
    (in_x, in_y)
}

fn square_free(d: i64) -> bool {
    (2..=d).take_while(|p| p * p <= d).all(|p| d % (p * p) != 0)
}

fn small_sequence() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (1usize..=3).prop_flat_map(|k| {
        (
            prop::collection::vec(-2i64..=2, k).prop_filter("nonzero last", |c| *c.last().unwrap() != 0),
            prop::collection::vec(-4i64..=4, k).prop_filter("not all zero", |i| i.iter().any(|&x| x != 0)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn agrees_with_double_loop(
        (c, i) in small_sequence(),
        d in 2i64..=20,
        t in -10i64..=10,
        n in 0usize..=30,
        ordered in any::<bool>(),
    ) {
        prop_assume!(square_free(d) && t != 0);
        let rec = LinearRecurrence::from_i64(&c, &i).unwrap();
        let u: Vec<i64> = rec.terms(n).iter().map(|x| i64::try_from(x).unwrap_or(i64::MAX)).collect();
        prop_assume!(u.iter().all(|x| x.abs() <= 2000));
        let mut cfg = SearchConfig::new(rec, PellEquation::from_i64(d, t).unwrap(), n);
        cfg.unordered = !ordered;
        let got: BTreeSet<(usize, usize, Side)> = search(&cfg).unwrap().matches.iter().map(|m| (m.n1, m.n2, m.side)).collect();
        let mut want = BTreeSet::new();
        for a in 0..=n {
            for b in 0..=if ordered { n } else { a } {
                let (x, y) = brute(d, t, u[a] + u[b]);
                if x { want.insert((a, b, Side::X)); }
                if y { want.insert((a, b, Side::Y)); }
            }
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn matches_are_witnessed_and_prefix_stable(
        (c, i) in small_sequence(),
        d in 2i64..=30,
        t in -12i64..=12,
        n in 4usize..=40,
        cut in 0usize..=40,
    ) {
        prop_assume!(square_free(d) && t != 0);
        let rec = LinearRecurrence::from_i64(&c, &i).unwrap();
        let eq = PellEquation::from_i64(d, t).unwrap();
        let full = search(&SearchConfig::new(rec.clone(), eq.clone(), n)).unwrap();
        for m in &full.matches {
            prop_assert_eq!(&m.value, &(rec.term(m.n1) + rec.term(m.n2)));
            let (x, y) = m.solution();
            prop_assert_eq!(&x * &x - BigInt::from(d) * &y * &y, BigInt::from(t));
        }
        prop_assert_eq!(full.census.values().sum::<usize>(), full.matches.len());
        prop_assert!(full.growth.windows(2).all(|w| w[0].1 <= w[1].1));
        let cut = cut.min(n);
        let part = search(&SearchConfig::new(rec, eq, cut)).unwrap();
        let prefix: Vec<_> = full.matches.iter().filter(|m| m.n1 <= cut).cloned().collect();
        prop_assert_eq!(part.matches, prefix);
    }
}
