use geoposet_core::filters::{check_all, default_registry, enumerate_candidate_classes, Symmetry};
use geoposet_core::graph::{CrossingSet, GraphFamily};
use geoposet_core::kernel::{self, IntPoint};
use geoposet_core::realizer::{realize, verify_witness, SearchBudget, SearchStatus};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

fn families() -> Vec<GraphFamily> {
    let mut out = Vec::new();
    for n in 4..=7 {
        out.push(GraphFamily::path(n));
        out.push(GraphFamily::cycle(n));
    }
    out
}

/// Random lattice drawings; a few coordinate ranges so that both sparse and
/// dense crossing sets show up.
fn drawing(n: usize) -> impl Strategy<Value = Vec<IntPoint>> {
    prop_oneof![
        prop::collection::vec((-1_000_000i64..1_000_000, -1_000_000i64..1_000_000), n),
        prop::collection::vec((-40i64..40, -40i64..40), n),
    ]
    .prop_map(|v| v.into_iter().map(|(x, y)| IntPoint::new(x, y)).collect())
}

#[test]
fn random_drawings_pass_every_filter() {
    let rules = default_registry();
    for f in families() {
        let sym = Symmetry::new(f);
        let mut runner = TestRunner::new(Config::with_cases(1_000));
        runner
            .run(&drawing(f.n()), |pts| {
                let Ok(x) = kernel::crossing_set(&f, &pts) else { return Ok(()) };
                let v = check_all(&rules, &sym, &x);
                prop_assert!(v.is_empty(), "{} {} violates {:?}", f, x.display(&f), v);
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn filters_are_equivariant() {
    let rules = default_registry();
    for f in [GraphFamily::path(6), GraphFamily::cycle(5), GraphFamily::cycle(6)] {
        let sym = Symmetry::new(f);
        let universe = f.candidate_crossing_pairs();
        let perms: Vec<_> = f.automorphisms().collect();
        for mask in 0u32..(1 << universe.len()) {
            let x = CrossingSet::new(
                &f,
                universe.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| (p.0, p.1)),
            )
            .unwrap();
            let pass = check_all(&rules, &sym, &x).is_empty();
            for p in &perms {
                let y = f.act_on_crossing_set(p, &x).unwrap();
                assert_eq!(pass, check_all(&rules, &sym, &y).is_empty(), "{} {}", f, x.display(&f));
            }
        }
    }
}

#[test]
fn every_survivor_is_realized() {
    let budget = SearchBudget::default();
    for f in [
        GraphFamily::path(2),
        GraphFamily::path(3),
        GraphFamily::path(4),
        GraphFamily::path(5),
        GraphFamily::path(6),
        GraphFamily::cycle(3),
        GraphFamily::cycle(4),
        GraphFamily::cycle(5),
        GraphFamily::cycle(6),
    ] {
        for x in enumerate_candidate_classes(&f).unwrap() {
            let out = realize(&f, &x, &budget).unwrap();
            assert_eq!(out.status, SearchStatus::Realized, "{} {}", f, x.display(&f));
            assert!(verify_witness(out.witness.as_ref().unwrap(), &x));
        }
    }
}
