//! Acceptance suite: one PASS/FAIL line per criterion, with the failing
//! sub-checks listed underneath.
//!
//! Two sub-checks fail because the published results disagree with
//! themselves; see `KNOWN_FAILURES`. The test passes only when the failures
//! are exactly those. Runs without the libtest harness so the report is
//! always printed.

use std::process::ExitCode;

use geoposet::catalog::CatalogOptions;
use geoposet::parallel::thread_count;
use geoposet::verify::{Check, Verifier};
use geoposet_core::filters::{check_all, default_registry, Symmetry};
use geoposet_core::geometry::{self, proper_cross, Point2, Rational};
use geoposet_core::graph::{CrossingSet, GraphFamily};
use geoposet_core::kernel::{self, IntPoint};
use geoposet_core::poset::{is_witness_map, necessary_conditions, sorted_dominance};
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRng, TestRunner};

const KNOWN_FAILURES: [&str; 2] = [
    // 6.1 and 7.1 of the C6 listing are both maximal
    "C6: unique minimal and maximal element",
    // the construction gives 8.2 (8 crossings) as its second element
    "K6 chain template classes are 5.1 < 9.2 < 12.1 < 15.1",
];

const TITLES: [&str; 11] = [
    "class counts",
    "canonical crossing sets match the listings",
    "every class has a verified witness",
    "filter completeness on P6",
    "Hasse diagrams and stated chains",
    "K6 parameter table",
    "K6 homomorphism witnesses",
    "K6 nonprecedence certificates",
    "structure theorems",
    "clique chain template",
    "property suites",
];

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(config_algorithm()))
}

fn config_algorithm() -> proptest::test_runner::RngAlgorithm {
    Config::default().rng_algorithm
}

fn run_property<S: Strategy>(name: &str, cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Check
where
    S::Value: std::fmt::Debug,
{
    match runner(cases).run(&strategy, test) {
        Ok(()) => Check::new(name, true, ""),
        Err(e) => Check::new(name, false, e.to_string()),
    }
}

fn rat() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn point() -> impl Strategy<Value = Point2> {
    (rat(), rat()).prop_map(|(x, y)| Point2::new(x, y))
}

/// Cramer's rule on `a + t (b - a) = c + s (d - c)` with `t, s` in `(0, 1)`.
fn parametric_cross(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    let (ux, uy) = (&b.x - &a.x, &b.y - &a.y);
    let (vx, vy) = (&d.x - &c.x, &d.y - &c.y);
    let (wx, wy) = (&c.x - &a.x, &c.y - &a.y);
    let det = &vx * &uy - &ux * &vy;
    if det.is_zero() {
        return false;
    }
    let t = (&vx * &wy - &wx * &vy) / &det;
    let s = (&ux * &wy - &uy * &wx) / &det;
    let (zero, one) = (Rational::zero(), Rational::one());
    t > zero && t < one && s > zero && s < one
}

fn subset(f: &GraphFamily, mask: &[bool]) -> CrossingSet {
    let pairs = f.candidate_crossing_pairs();
    CrossingSet::new(f, pairs.iter().zip(mask).filter(|(_, &m)| m).map(|(p, _)| (p.0, p.1))).unwrap()
}

fn criterion_11(v: &Verifier) -> Vec<Check> {
    let mut out = Vec::new();
    out.push(run_property(
        "segment crossing agrees with the parametric oracle on 10^4 pairs",
        10_000,
        (point(), point(), point(), point()),
        |(a, b, c, d)| {
            prop_assert_eq!(proper_cross(&a, &b, &c, &d), parametric_cross(&a, &b, &c, &d));
            Ok(())
        },
    ));

    let fam = prop_oneof![
        (2usize..=7).prop_map(GraphFamily::path),
        (3usize..=7).prop_map(GraphFamily::cycle),
        (3usize..=6).prop_map(GraphFamily::clique),
    ];
    let setup = fam.prop_flat_map(|f| {
        let a = f.automorphism_count();
        (Just(f), 0..a, 0..a, prop::collection::vec(any::<bool>(), f.candidate_crossing_pairs().len()))
    });
    out.push(run_property("automorphism action laws", 2_000, setup, |(f, i, j, mask)| {
        let x = subset(&f, &mask);
        let p = f.automorphisms().nth(i).unwrap();
        let q = f.automorphisms().nth(j).unwrap();
        let act = |g: &geoposet_core::VertexPermutation, y: &CrossingSet| f.act_on_crossing_set(g, y).unwrap();
        prop_assert_eq!(act(&geoposet_core::VertexPermutation::identity(f.n()), &x), x.clone());
        prop_assert_eq!(act(&p.compose(&q), &x), act(&p, &act(&q, &x)));
        prop_assert_eq!(act(&p.inverse(), &act(&p, &x)), x);
        Ok(())
    }));

    let rules = default_registry();
    let mut filter_fail = Vec::new();
    for n in 4..=7 {
        for f in [GraphFamily::path(n), GraphFamily::cycle(n)] {
            let sym = Symmetry::new(f);
            let pts = prop::collection::vec((-1_000_000i64..1_000_000, -1_000_000i64..1_000_000), n);
            let c = run_property(&format!("{f}"), 1_000, pts, |pts| {
                let pts: Vec<IntPoint> = pts.into_iter().map(|(x, y)| IntPoint::new(x, y)).collect();
                if let Ok(x) = kernel::crossing_set(&f, &pts) {
                    let bad = check_all(&rules, &sym, &x);
                    prop_assert!(bad.is_empty(), "{} violates {:?}", x.display(&f), bad);
                }
                Ok(())
            });
            if !c.pass {
                filter_fail.push(format!("{}: {}", c.name, c.detail));
            }
        }
    }
    out.push(Check::new("filters accept 10^3 random drawings per family", filter_fail.is_empty(), filter_fail.join("; ")));

    out.push(run_property(
        "sorted dominance of coordinatewise-dominated vectors on 10^4 pairs",
        10_000,
        prop::collection::vec((0usize..30, 0usize..30), 1..12),
        |pairs| {
            let x: Vec<usize> = pairs.iter().map(|&(a, b)| a.min(b)).collect();
            let y: Vec<usize> = pairs.iter().map(|&(a, b)| a.max(b)).collect();
            prop_assert!(sorted_dominance(&x, &y).unwrap());
            Ok(())
        },
    ));

    let families = [
        GraphFamily::path(2),
        GraphFamily::path(3),
        GraphFamily::path(4),
        GraphFamily::path(5),
        GraphFamily::path(6),
        GraphFamily::cycle(3),
        GraphFamily::cycle(4),
        GraphFamily::cycle(5),
        GraphFamily::cycle(6),
        GraphFamily::clique(4),
        GraphFamily::clique(5),
        GraphFamily::clique(6),
    ];
    let mut bad = Vec::new();
    let mut related = 0usize;
    for f in families {
        let b = v.built(f).unwrap();
        let p = &b.poset;
        for i in 0..p.len() {
            for j in 0..p.len() {
                if !p.leq(i, j) {
                    continue;
                }
                related += 1;
                let (s, d) = (&p.classes()[i], &p.classes()[j]);
                let map = p.witness_map(i, j).unwrap();
                let act = f.induced_edge_action(map).unwrap();
                let (ps, pd) = (s.profile(), d.profile());
                let ok = necessary_conditions(s, d).is_empty()
                    && is_witness_map(&f, s.crossings(), d.crossings(), map)
                    && f.edges().all(|e| ps.cr_per_edge[e.index()] <= pd.cr_per_edge[act.apply(e).index()])
                    && (1..=f.n()).all(|u| {
                        let w = map.apply(u);
                        ps.d0_per_vertex[u - 1] >= pd.d0_per_vertex[w - 1] && ps.m_per_vertex[u - 1] <= pd.m_per_vertex[w - 1]
                    });
                if !ok {
                    bad.push(format!("{f} {} -> {}", b.id(i), b.id(j)));
                }
            }
        }
    }
    out.push(Check::new(
        format!("necessary conditions hold on all {related} related pairs of the built posets"),
        bad.is_empty(),
        bad.join("; "),
    ));

    let mut bad = Vec::new();
    for n in [5, 6] {
        let b = v.built(GraphFamily::clique(n)).unwrap();
        for (i, c) in b.catalog.classes.iter().enumerate() {
            let geo = c.witness().map(|d| geometry::max_convex_subset(d).unwrap());
            if geo.is_none() || c.profile().omega_hat != geo {
                bad.push(format!("K{n} {}: {:?} vs {geo:?}", b.id(i), c.profile().omega_hat));
            }
        }
    }
    out.push(Check::new("convex clique number matches the sampled K5/K6 witnesses", bad.is_empty(), bad.join("; ")));

    let b = v.built(GraphFamily::clique(6)).unwrap();
    let p = &b.poset;
    let hull = |i: usize| p.classes()[i].profile().hull_size;
    let bad: Vec<String> = (0..p.len())
        .flat_map(|i| (0..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p.leq(i, j) && !matches!((hull(i), hull(j)), (Some(a), Some(c)) if a <= c))
        .map(|(i, j)| format!("{} -> {}", b.id(i), b.id(j)))
        .collect();
    out.push(Check::new("hull size is non-decreasing over related K6 pairs", bad.is_empty(), bad.join("; ")));
    out
}

fn main() -> ExitCode {
    let v = Verifier::new(CatalogOptions { threads: thread_count(None), ..CatalogOptions::default() });
    let mut failures: Vec<String> = Vec::new();
    println!("\nacceptance");
    for k in 1..=11 {
        let checks = if k == 11 { criterion_11(&v) } else { v.criterion(k) };
        let failed: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
        println!(
            "criterion {k:>2} {:<44} {}  ({}/{} checks)",
            TITLES[k - 1],
            if failed.is_empty() && !checks.is_empty() { "PASS" } else { "FAIL" },
            checks.len() - failed.len(),
            checks.len()
        );
        for c in &failed {
            println!("    {c}");
        }
        if checks.is_empty() {
            failures.push(format!("criterion {k} has no checks"));
        }
        failures.extend(failed.iter().map(|c| c.name.clone()));
    }
    failures.sort();
    failures.dedup();
    let mut known: Vec<String> = KNOWN_FAILURES.iter().map(|s| s.to_string()).collect();
    known.sort();
    if failures == known {
        println!("failing checks are exactly the {} recorded conflicts", known.len());
        ExitCode::SUCCESS
    } else {
        println!("failing checks differ from the recorded conflicts: {failures:?}");
        ExitCode::FAILURE
    }
}
