//! Acceptance gate. Each test covers one release criterion end to end and
//! prints a single `acceptance <tag>: PASS|FAIL` line (visible under
//! `--nocapture`, or on failure) before asserting.

use std::collections::BTreeSet;

use kfacets::bounds::{binom, lb_planar_basic, lb_planar_improved, lb_simplicial, verify_bounds};
use kfacets::conjecture::{explore, random_point_set};
use kfacets::construct::{gen_tight_planar_basic, gen_tight_planar_extended, gen_tight_simplicial};
use kfacets::count::{
    adjacent_leq_k, count_facets, crossing_identity, key_set, leq_k_facets, sweep_count_2d,
    FacetKey,
};
use kfacets::structure::{check_structural_optimality, find_half_net_2d, verify_eps_net};
use kfacets::Rational;

fn verdict(tag: &str, problems: &[String]) {
    let ok = problems.is_empty();
    println!("acceptance {tag}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{tag}: {}", problems.join("; "));
}

/// Deterministic size schedule: `count` values spread evenly over lo..=hi.
fn sizes(count: usize, lo: usize, hi: usize) -> Vec<usize> {
    (0..count)
        .map(|i| lo + i * (hi - lo) / (count - 1))
        .collect()
}

#[test]
fn planar_family_meets_basic_bound_exactly() {
    let mut problems = Vec::new();
    for n in [12usize, 21, 30] {
        let cfg = gen_tight_planar_basic(n).unwrap();
        let fv = count_facets(cfg.set()).unwrap();
        for k in 0..n / 3 {
            let want = lb_planar_basic(k);
            if fv.leq(k) != want {
                problems.push(format!("n={n} k={k}: E={} want {want}", fv.leq(k)));
            }
        }
    }
    verdict("01 planar family tightness", &problems);
}

#[test]
fn extended_family_meets_improved_bound_exactly() {
    let mut problems = Vec::new();
    for n in [12usize, 24] {
        let cfg = gen_tight_planar_extended(n).unwrap();
        let fv = count_facets(cfg.set()).unwrap();
        for k in n / 3..=(5 * n / 12 - 1) {
            let want = lb_planar_improved(n, k);
            if fv.leq(k) != want {
                problems.push(format!("n={n} k={k}: E={} want {want}", fv.leq(k)));
            }
        }
        // Pinned values, frozen against an independent brute-force count.
        let pins: &[(usize, u64)] = if n == 12 {
            &[(4, 48)]
        } else {
            &[(8, 138), (9, 174)]
        };
        for &(k, want) in pins {
            if fv.leq(k) != want {
                problems.push(format!("n={n} pinned E_{k}={} want {want}", fv.leq(k)));
            }
        }
    }
    verdict("02 extended family tightness", &problems);
}

#[test]
fn ray_family_meets_simplicial_bound_exactly() {
    let mut problems = Vec::new();
    for (d, m) in [(3usize, 3usize), (3, 4), (4, 2)] {
        let cfg = gen_tight_simplicial(d, m).unwrap();
        let n = (d + 1) * m;
        let fv = count_facets(cfg.set()).unwrap();
        for k in 0..m {
            let want = lb_simplicial(n, d, k).unwrap();
            if fv.leq(k) != want {
                problems.push(format!("d={d} m={m} k={k}: E={} want {want}", fv.leq(k)));
            }
        }
    }
    verdict("03 ray family tightness", &problems);
}

#[test]
fn random_sets_satisfy_all_lower_bounds() {
    let mut problems = Vec::new();
    for i in 0..200u64 {
        let n = 5 + (i as usize) % 10;
        let s = random_point_set(n, 2, 40_000 + i, 1000).unwrap();
        let rep = verify_bounds(&s, n).unwrap();
        if !rep.all_satisfied() {
            problems.push(format!("d=2 seed={} n={n}", 40_000 + i));
        }
    }
    for i in 0..50u64 {
        let n = 6 + (i as usize) % 7;
        let s = random_point_set(n, 3, 43_000 + i, 1000).unwrap();
        let rep = verify_bounds(&s, n).unwrap();
        if !rep.all_satisfied() {
            problems.push(format!("d=3 seed={} n={n}", 43_000 + i));
        }
    }
    verdict("04 random lower-bound suite", &problems);
}

#[test]
fn crossing_identity_holds_on_random_sets() {
    let mut problems = Vec::new();
    for i in 0..100u64 {
        let n = 4 + (i as usize) % 9;
        let s = random_point_set(n, 2, 50_000 + i, 1000).unwrap();
        let id = crossing_identity(&s).unwrap();
        if !id.equal {
            problems.push(format!("seed={} n={n}: lhs={} rhs={}", 50_000 + i, id.lhs, id.rhs));
        }
    }
    verdict("05 crossing identity", &problems);
}

#[test]
fn sweep_and_enumeration_agree() {
    let mut problems = Vec::new();
    for (i, n) in sizes(100, 5, 60).into_iter().enumerate() {
        let s = random_point_set(n, 2, 60_000 + i as u64, 1000).unwrap();
        let swept = sweep_count_2d(&s).unwrap();
        let enumerated = count_facets(&s).unwrap();
        if swept != enumerated {
            problems.push(format!("seed={} n={n}", 60_000 + i as u64));
        }
    }
    verdict("06 counting oracle equivalence", &problems);
}

#[test]
fn optimal_sets_show_forced_structure() {
    let mut problems = Vec::new();
    let cases = [
        (gen_tight_planar_extended(12).unwrap(), 3usize),
        (gen_tight_planar_basic(30).unwrap(), 9),
    ];
    for (cfg, k) in &cases {
        let n = cfg.set().len();
        let rep = check_structural_optimality(cfg.set(), *k).unwrap();
        if !rep.optimal_at_k {
            problems.push(format!("n={n}: not optimal at k={k}"));
        }
        if !rep.hull_is_triangle {
            problems.push(format!("n={n}: hull is not a triangle"));
        }
        if rep.triangular_layers < rep.required_layers {
            problems.push(format!(
                "n={n}: {} triangular layers, need {}",
                rep.triangular_layers, rep.required_layers
            ));
        }
        for r in &rep.rows {
            if !r.leq_optimal {
                problems.push(format!("n={n} j={}: E={} want {}", r.j, r.counted_leq, r.expected_leq));
            }
            if !r.exact_matches {
                problems.push(format!("n={n} j={}: e={} want {}", r.j, r.counted_exact, r.expected_exact));
            }
        }
        if !rep.cascade_holds {
            problems.push(format!("n={n}: cascade flag false"));
        }
    }
    verdict("07 structural cascade on optimal sets", &problems);
}

#[test]
fn half_net_search_terminates_and_verifies() {
    let mut problems = Vec::new();
    let half = Rational::new(1.into(), 2.into());
    for (i, n) in sizes(100, 5, 200).into_iter().enumerate() {
        let seed = 80_000 + i as u64;
        let bound = 1000i64.max((n * n) as i64);
        let s = random_point_set(n, 2, seed, bound).unwrap();
        let run = find_half_net_2d(&s).unwrap();
        if run.iterations > run.hull_size {
            problems.push(format!(
                "seed={seed} n={n}: {} iterations on a hull of {}",
                run.iterations, run.hull_size
            ));
        }
        if verify_eps_net(&s, &run.net.vertices, &half).unwrap().is_some() {
            problems.push(format!("seed={seed} n={n}: net failed verification"));
        }
    }
    verdict("08 constructive half-net search", &problems);
}

#[test]
fn adjacency_decomposition_is_exact() {
    let mut problems = Vec::new();
    let cfg = gen_tight_planar_basic(30).unwrap();
    let s = cfg.set();
    let run = find_half_net_2d(s).unwrap();
    let half = Rational::new(1.into(), 2.into());
    assert!(verify_eps_net(s, &run.net.vertices, &half).unwrap().is_none());
    let t: BTreeSet<usize> = run.net.vertices.iter().copied().collect();

    let (rest, back) = s.without(&t);
    for k in 2..=9usize {
        let whole = key_set(&leq_k_facets(s, k).unwrap());
        let touching = key_set(&adjacent_leq_k(s, &t, k).unwrap());
        let inner: BTreeSet<FacetKey> = leq_k_facets(&rest, k - 2)
            .unwrap()
            .iter()
            .map(|f| FacetKey {
                indices: f.key.indices.iter().map(|&i| back[i]).collect(),
                sign: f.key.sign,
            })
            .collect();

        if !touching.is_disjoint(&inner) {
            problems.push(format!("k={k}: families overlap"));
        }
        if !touching.is_subset(&whole) || !inner.is_subset(&whole) {
            problems.push(format!("k={k}: a family leaves the (<=k) set"));
        }
        let union: BTreeSet<FacetKey> = touching.union(&inner).cloned().collect();
        if union != whole {
            problems.push(format!(
                "k={k}: union has {} keys, expected {}",
                union.len(),
                whole.len()
            ));
        }
    }
    verdict("09 adjacency decomposition", &problems);
}

#[test]
fn explorer_finds_and_verifies_nets() {
    let mut problems = Vec::new();

    let planar = explore(100, 10, 2, 100_000).unwrap();
    if planar.found_count != planar.trials {
        problems.push(format!(
            "d=2: only {}/{} trials found a net",
            planar.found_count, planar.trials
        ));
    }
    for r in &planar.records {
        if r.found.is_some() && !r.verified {
            problems.push(format!("d=2 seed={}: net failed verification", r.seed));
        }
    }

    let spatial = explore(1000, 12, 3, 103_000).unwrap();
    println!(
        "explorer d=3 tally: {}/{} trials found a net",
        spatial.found_count, spatial.trials
    );
    if spatial.records.len() != spatial.trials {
        problems.push(format!(
            "d=3: report holds {} records for {} trials",
            spatial.records.len(),
            spatial.trials
        ));
    }
    for r in &spatial.records {
        if r.found.is_some() && !r.verified {
            problems.push(format!("d=3 seed={}: net failed verification", r.seed));
        }
        if r.found.is_none() && r.counterexample.is_none() {
            problems.push(format!("d=3 seed={}: missing replay data", r.seed));
        }
    }

    verdict("10 explorer sanity", &problems);
}

/// Shared sanity for the helpers above, so schedule regressions fail here
/// rather than silently shrinking a criterion's coverage.
#[test]
fn size_schedules_cover_their_ranges() {
    assert_eq!(sizes(100, 5, 200).first(), Some(&5));
    assert_eq!(sizes(100, 5, 200).last(), Some(&200));
    assert_eq!(sizes(100, 5, 60).first(), Some(&5));
    assert_eq!(sizes(100, 5, 60).last(), Some(&60));
    assert_eq!(binom(5, 2), 10);
}
