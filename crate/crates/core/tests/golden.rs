use std::collections::BTreeMap;

use sieve_core::arith::Nat;
use sieve_core::criterion::{criterion_inter, eno_crit, survives, Mode};
use sieve_core::golden::{dataset, DATASETS};
use sieve_core::{modular_partitions, FusionType};

fn golden_types() -> Vec<(&'static str, FusionType, bool)> {
    DATASETS
        .iter()
        .flat_map(|d| d.entries().into_iter().map(move |(t, e)| (d.name, t, e)))
        .collect()
}

#[test]
fn every_dataset_matches_published_outcomes() {
    for d in DATASETS {
        let bad = d.mismatches();
        assert!(
            bad.is_empty(),
            "{}: mismatches {:?}",
            d.name,
            bad.iter().map(|(t, _)| t.to_string()).collect::<Vec<_>>()
        );
    }
}

#[test]
fn dataset_sizes() {
    let sizes: Vec<(&str, usize)> = DATASETS
        .iter()
        .map(|d| (d.name, d.entries().len()))
        .collect();
    assert_eq!(
        sizes,
        vec![
            ("rank14_nonperfect", 7),
            ("rank14_perfect", 27),
            ("rank25_odd_perfect", 3),
            ("rank15_survivors", 18),
            ("closing_examples", 2),
        ]
    );
}

#[test]
fn derived_quantities_of_golden_entries() {
    for (name, t, _) in golden_types() {
        let d: Nat = t.dims().iter().map(|&x| Nat::from(x).pow(2)).sum();
        assert_eq!(t.global_dim(), d, "{name}");
        assert_eq!(
            t.pt() as usize,
            t.dims().iter().filter(|&&x| x == 1).count()
        );
    }
    let r14 = dataset("rank14_nonperfect").unwrap().entries();
    assert_eq!(r14[2].0.global_dim(), 129600);
    for (t, _) in dataset("rank25_odd_perfect").unwrap().entries() {
        assert_eq!((t.rank(), t.pt()), (25, 1));
        assert!(t.dims().iter().all(|x| x % 2 == 1));
    }
}

#[test]
fn partition_invariants_across_golden_suite() {
    let mut total = 0usize;
    for (name, t, _) in golden_types() {
        for p in modular_partitions(&t) {
            p.check_against(&t)
                .unwrap_or_else(|e| panic!("{name} {t}: {e}"));
            total += 1;
        }
    }
    assert!(total >= DATASETS.iter().map(|d| d.expected.len()).sum::<usize>());
}

#[test]
fn perfect_types_have_only_the_trivial_grading() {
    for (_, t, _) in golden_types()
        .into_iter()
        .filter(|(_, t, _)| t.is_perfect())
    {
        let parts = modular_partitions(&t);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].first_part().dims(), t.dims());
    }
}

#[test]
fn conservative_mode_never_excludes_more() {
    for (name, t, _) in golden_types() {
        let paper = eno_crit(&t, Mode::Paper).unwrap().survives;
        let conservative = eno_crit(&t, Mode::Conservative).unwrap().survives;
        assert!(!paper || conservative, "{name} {t}");
    }
}

#[test]
fn early_exit_agrees_with_full_enumeration() {
    for (_, t, _) in golden_types() {
        for mode in [Mode::Paper, Mode::Conservative] {
            assert_eq!(
                survives(&t, mode).unwrap(),
                eno_crit(&t, mode).unwrap().survives,
                "{t}"
            );
        }
    }
}

#[test]
fn exclusions_carry_sound_witnesses() {
    for (_, t, _) in golden_types() {
        let v = eno_crit(&t, Mode::Paper).unwrap();
        assert_eq!(v.survives, !v.surviving_partitions.is_empty());
        if v.survives {
            assert!(v.witness.is_none());
            continue;
        }
        let w = v
            .witness
            .expect("excluded with partitions must carry a witness");
        assert_eq!(w.rhs, t.global_dim());
        assert_eq!(Nat::from(w.x_dim) % w.p, 0);
        assert_ne!(Nat::from(t.pt()) % w.p, 0);
        if let Some(b) = w.best_candidate {
            assert_ne!(Nat::from(b.y_dim) % w.p, 0);
            assert!(b.lhs > w.rhs);
        }
        // every grading fails somewhere
        for p in modular_partitions(&t) {
            let u = p.first_part().unique_dims();
            assert!(criterion_inter(&u, t.unique_dims(), t.pt(), t.global_dim())
                .unwrap()
                .is_some());
        }
    }
}

// Second route for the inequality: lcm from explicit prime-power
// factorizations, with an independent reimplementation of the scan.
fn factorize(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

fn lcm_via_factors(a: u64, b: u64) -> u128 {
    let mut e = factorize(a);
    for (p, k) in factorize(b) {
        let s = e.entry(p).or_insert(0);
        *s = (*s).max(k);
    }
    e.into_iter().map(|(p, k)| (p as u128).pow(k)).product()
}

fn passes_via_factors(neutral: &[u64], all: &[u64], pt: u64, d: u128) -> bool {
    let pt_primes = factorize(pt);
    neutral.iter().filter(|&&i| i != 1).all(|&i| {
        factorize(i)
            .keys()
            .filter(|p| !pt_primes.contains_key(p))
            .all(|&p| {
                all.iter().filter(|&&j| j != 1 && j % p != 0).any(|&j| {
                    let l = lcm_via_factors(i, j);
                    l * l + (i as u128) * (i as u128) * pt as u128 <= d
                })
            })
    })
}

#[test]
fn second_lcm_route_gives_identical_verdicts() {
    for (name, t, expected) in golden_types() {
        let alt = modular_partitions(&t).iter().any(|p| {
            passes_via_factors(
                &p.first_part().unique_dims(),
                t.unique_dims(),
                t.pt(),
                t.global_dim(),
            )
        });
        assert_eq!(
            alt,
            eno_crit(&t, Mode::Paper).unwrap().survives,
            "{name} {t}"
        );
        assert_eq!(alt, expected, "{name} {t}");
    }
}
