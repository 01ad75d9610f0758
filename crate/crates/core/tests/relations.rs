use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use pellrec_core::bounds::{
    enumerate_partitions, g_pi_trivial, is_relation, relation_lattice, Completeness, ExpTerm,
    ExponentialTermSystem, Partition, DEFAULT_SEARCH_BOUND,
};
use pellrec_core::pell::{solve_classes, PellEquation};
use pellrec_core::recurrence::{binet_decompose, ClosedForm, LinearRecurrence};

fn q(n: i64, d: i64) -> ClosedForm {
    ClosedForm::Rational(BigRational::new(n.into(), d.into()))
}

fn system(bases: Vec<Vec<ClosedForm>>) -> ExponentialTermSystem {
    let s = bases[0].len();
    let terms = bases
        .into_iter()
        .map(|b| ExpTerm {
            coeff: q(1, 1),
            bases: b,
            degree: 0,
        })
        .collect();
    ExponentialTermSystem::new(s, terms, 1).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Whether `z` is an integer combination of Hermite rows (pivots ascending).
fn in_lattice(basis: &[Vec<BigInt>], z: &[BigInt]) -> bool {
    let mut z = z.to_vec();
    for row in basis {
        let p = row.iter().position(|x| !x.is_zero()).unwrap();
        if !(&z[p] % &row[p]).is_zero() {
            return false;
        }
        let k = &z[p] / &row[p];
        for (a, b) in z.iter_mut().zip(row) {
            *a -= &k * b;
        }
    }
    z.iter().all(Zero::is_zero)
}

fn pell_instance(c: &[i64], i: &[i64], d: i64, t: i64) -> ExponentialTermSystem {
    let rec = LinearRecurrence::from_i64(c, i).unwrap();
    let form = binet_decompose(&rec).unwrap();
    let set = solve_classes(&PellEquation::from_i64(d, t).unwrap());
    ExponentialTermSystem::pell_sum_instance(&form, &set.classes[0], false).unwrap()
}

#[test]
fn basic_examples() {
    let s = system(vec![vec![q(2, 1)], vec![q(3, 1)]]);
    let both = Partition::new(vec![vec![0, 1]], 2).unwrap();
    assert!(g_pi_trivial(&s, &both, 20).unwrap());
    let single = Partition::singletons(2);
    let g = relation_lattice(&s, &single, 20).unwrap();
    assert_eq!(g.basis, vec![ints(&[1])]);
    assert!(!g_pi_trivial(&s, &single, 20).unwrap());
    assert!(relation_lattice(&s, &Partition::singletons(3), 20).is_err());
}

#[test]
fn same_base_block_in_the_excluded_case() {
    // 2 + √3 is both a characteristic root and the Pell unit for d = 3.
    let sys = pell_instance(&[4, -1], &[0, 1], 3, 1);
    assert_eq!(sys.r(), 6);
    assert_eq!(sys.field_degree(), 2);
    let root = sys.terms().iter().position(|t| t.bases[0].to_string() == "2 + √3").unwrap();
    let beta = 4;
    let pi = Partition::new(
        (0..6)
            .filter(|&i| i != root && i != beta)
            .map(|i| vec![i])
            .chain([vec![root, beta]])
            .collect(),
        6,
    )
    .unwrap();
    let g = relation_lattice(&sys, &pi, DEFAULT_SEARCH_BOUND).unwrap();
    assert_eq!(g.completeness, Completeness::WithinBound(DEFAULT_SEARCH_BOUND));
    assert!(!g.is_trivial());
    assert!(in_lattice(&g.basis, &ints(&[1, 0, 1])));
    assert!(is_relation(&sys, &pi, &ints(&[1, 0, 1])).unwrap());
    assert!(!is_relation(&sys, &pi, &ints(&[1, 0, -1])).unwrap());
}

#[test]
fn instance_relations_are_exhibited_and_pinned() {
    // U_n = 2ⁿ + 3ⁿ satisfies every hypothesis for d = 2, t = 1.
    let sys = pell_instance(&[5, -6], &[2, 5], 2, 1);
    let k = 2;
    let mut trivial = 0;
    for pi in enumerate_partitions(sys.r()).unwrap() {
        if pi.is_singletons() {
            continue;
        }
        let g = relation_lattice(&sys, &pi, DEFAULT_SEARCH_BOUND).unwrap();
        if g.is_trivial() {
            trivial += 1;
            continue;
        }
        for v in &g.basis {
            assert!(is_relation(&sys, &pi, v).unwrap(), "{pi}: {v:?}");
        }
        // Two roots in one block pin that exponent, as do β and γ together.
        for b in pi.blocks() {
            let first = b.iter().filter(|&&i| i < k).count();
            let second = b.iter().filter(|&&i| (k..2 * k).contains(&i)).count();
            let units = b.iter().filter(|&&i| i >= 2 * k).count();
            for (count, slot) in [(first, 0), (second, 1), (units, 2)] {
                if count >= 2 {
                    assert!(g.basis.iter().all(|v| v[slot].is_zero()), "{pi}: slot {slot} free");
                }
            }
        }
    }
    assert!(trivial > 0);
}

fn power(b: &BigRational, e: i64) -> BigRational {
    let p = num_traits::pow(b.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn base_value() -> impl Strategy<Value = (i64, i64)> {
    prop::sample::select(vec![(1, 1), (-1, 1), (2, 1), (-2, 1), (3, 1), (4, 1), (6, 1), (1, 2), (-8, 1), (9, 4), (2, 3)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_lattice_matches_bounded_enumeration(
        raw in prop::collection::vec(prop::collection::vec(base_value(), 2), 2..4),
        rgs in prop::collection::vec(0usize..2, 4),
    ) {
        let r = raw.len();
        let bases: Vec<Vec<BigRational>> = raw
            .iter()
            .map(|row| row.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect())
            .collect();
        let sys = system(raw.iter().map(|row| row.iter().map(|&(n, d)| q(n, d)).collect()).collect());
        let mut labels = vec![0usize; r];
        let mut next = 1;
        for i in 1..r {
            labels[i] = if rgs[i] == 0 { 0 } else { next };
            if rgs[i] != 0 { next += 1; }
        }
        let pi = Partition::from_rgs(&labels);
        let g = relation_lattice(&sys, &pi, 5).unwrap();
        prop_assert_eq!(g.completeness, Completeness::Exact);
        for v in &g.basis {
            prop_assert!(is_relation(&sys, &pi, v).unwrap());
        }
        let bound = 4;
        for a in -bound..=bound {
            for b in -bound..=bound {
                let z = [a, b];
                let holds = pi.blocks().iter().all(|blk| blk.iter().all(|&j| {
                    let lhs = power(&bases[blk[0]][0], z[0]) * power(&bases[blk[0]][1], z[1]);
                    let rhs = power(&bases[j][0], z[0]) * power(&bases[j][1], z[1]);
                    lhs == rhs
                }));
                prop_assert_eq!(holds, in_lattice(&g.basis, &ints(&z)), "z = {:?}", z);
            }
        }
    }
}
