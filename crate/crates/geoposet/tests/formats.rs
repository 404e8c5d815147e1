use geoposet::catalog::{build_catalog, CatalogOptions};
use geoposet::format::{self, ClassesFile, PosetFile, WitnessFile};
use geoposet_core::geometry::{crossing_set, Point2, Rational};
use geoposet_core::graph::GraphFamily;
use geoposet_core::Drawing;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-500i64..=500, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn drawing() -> impl Strategy<Value = Drawing> {
    let fam = prop_oneof![
        (2usize..=7).prop_map(GraphFamily::path),
        (3usize..=7).prop_map(GraphFamily::cycle),
        (3usize..=6).prop_map(GraphFamily::clique),
    ];
    fam.prop_flat_map(|f| prop::collection::vec((rat(), rat()), f.n()).prop_map(move |pts| (f, pts)))
        .prop_filter_map("degenerate drawing", |(f, pts)| {
            let d = Drawing::new(f, pts.into_iter().map(|(x, y)| Point2::new(x, y)).collect()).ok()?;
            crossing_set(&d).ok()?;
            Some(d)
        })
}

proptest! {
    #[test]
    fn witness_json_round_trips(d in drawing()) {
        let x = crossing_set(&d).unwrap();
        let text = format::to_json_string(&format::witness_to_json(&d, &x));
        let w: WitnessFile = serde_json::from_str(&text).unwrap();
        let (back, y) = format::witness_from_json(&w).unwrap();
        prop_assert_eq!(back.positions(), d.positions());
        prop_assert_eq!(&y, &x);
        prop_assert_eq!(format::to_json_string(&format::witness_to_json(&back, &y)), text);
    }

    #[test]
    fn witness_with_wrong_crossings_is_rejected(d in drawing(), k in any::<prop::sample::Index>()) {
        let f = d.family();
        let x = crossing_set(&d).unwrap();
        let pairs = f.candidate_crossing_pairs();
        prop_assume!(!pairs.is_empty());
        let mut w = format::witness_to_json(&d, &x);
        let p = pairs[k.index(pairs.len())];
        let flipped = [f.edge_label(p.0), f.edge_label(p.1)];
        match w.crossings.iter().position(|p| *p == flipped) {
            Some(i) => { w.crossings.remove(i); }
            None => w.crossings.push(flipped),
        }
        prop_assert!(format::witness_from_json(&w).is_err());
    }

    #[test]
    fn rationals_round_trip(r in rat()) {
        prop_assert_eq!(format::rational_from_str(&format::rational_to_string(&r)).unwrap(), r);
    }
}

#[test]
fn classes_and_poset_files_round_trip() {
    for f in [GraphFamily::path(5), GraphFamily::cycle(5), GraphFamily::clique(5)] {
        let opts = CatalogOptions { samples: 5_000, ..CatalogOptions::default() };
        let cat = build_catalog(&f, &opts).unwrap();
        let file = format::classes_to_json(&f, &cat.ids, &cat.classes, &cat.unresolved);
        let text = format::to_json_string(&file);
        let parsed: ClassesFile = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, file);
        let (g, ids, classes) = format::classes_from_json(&parsed).unwrap();
        assert_eq!(g, f);
        assert_eq!(ids, cat.ids);
        assert_eq!(format::classes_to_json(&g, &ids, &classes, &[]), file);

        let poset = cat.poset(1).unwrap();
        let pf = format::poset_to_json(&poset, &ids);
        let parsed: PosetFile = serde_json::from_str(&format::to_json_string(&pf)).unwrap();
        let (ids2, rebuilt) = format::poset_from_json(&parsed).unwrap();
        assert_eq!(ids2, ids);
        assert_eq!(format::poset_to_json(&rebuilt, &ids2), pf);

        // a relation entry that contradicts the classes is refused
        let mut bad = pf.clone();
        let last = bad.classes.len() - 1;
        bad.leq[last][0] = !bad.leq[last][0];
        assert!(format::poset_from_json(&bad).is_err());
    }
}
