//! The verification suite: every published catalog, table and structural
//! claim, checked against freshly computed posets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use geoposet_core::construct::{clique_chain_template, max_crossing_path, uncross_step};
use geoposet_core::filters::{
    canonical_form, enumerate_candidate_classes, enumerate_with_rules, p5_rule, p6_rule, Symmetry,
};
use geoposet_core::geometry::{self, drawing_hull_size};
use geoposet_core::graph::{CrossingSet, GraphFamily, VertexPermutation};
use geoposet_core::poset::{
    embed_subposet, explain_nonprecedence, is_graded, is_lattice, is_witness_map, minimal_maximal, necessary_conditions, precedes,
    CertificateKind, GeoPoset, RealizationClass,
};
use geoposet_core::realizer::{realize, verify_witness, SearchBudget, SearchStatus};

use crate::catalog::{build_catalog, Catalog, CatalogOptions};
use crate::error::Result;
use crate::fixtures::{self, Justification};
use crate::parallel::par_map;

pub const SUITES: [&str; 8] = ["p5", "p6", "c5", "c6", "k5", "k6", "lemmas", "chains"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }

    fn eq<T: PartialEq + fmt::Debug>(name: impl Into<String>, got: T, want: T) -> Self {
        let pass = got == want;
        let detail = if pass { String::new() } else { format!("got {got:?}, want {want:?}") };
        Check::new(name, pass, detail)
    }

    fn failed(name: impl Into<String>, err: impl fmt::Display) -> Self {
        Check::new(name, false, format!("error: {err}"))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            write!(f, "PASS  {}", self.name)
        } else {
            write!(f, "FAIL  {}: {}", self.name, self.detail)
        }
    }
}

/// A catalog together with its poset.
pub struct Built {
    pub catalog: Catalog,
    pub poset: GeoPoset,
}

impl Built {
    pub fn family(&self) -> GraphFamily {
        self.catalog.family
    }

    pub fn idx(&self, id: &str) -> Option<usize> {
        self.catalog.index(id)
    }

    pub fn id(&self, i: usize) -> &str {
        &self.catalog.ids[i]
    }

    fn ids(&self, v: impl IntoIterator<Item = usize>) -> Vec<String> {
        v.into_iter().map(|i| self.id(i).to_string()).collect()
    }

    fn indices(&self, ids: &[&str]) -> Option<Vec<usize>> {
        ids.iter().map(|id| self.idx(id)).collect()
    }

    pub fn covers(&self) -> BTreeSet<(String, String)> {
        self.poset.hasse().iter().map(|&(a, b)| (self.id(a).to_string(), self.id(b).to_string())).collect()
    }
}

/// Builds catalogs on demand and keeps them for later checks.
pub struct Verifier {
    pub opts: CatalogOptions,
    cache: Mutex<BTreeMap<GraphFamily, Arc<Built>>>,
}

impl Verifier {
    pub fn new(opts: CatalogOptions) -> Self {
        Verifier { opts, cache: Mutex::new(BTreeMap::new()) }
    }

    pub fn built(&self, f: GraphFamily) -> Result<Arc<Built>> {
        if let Some(b) = self.cache.lock().unwrap().get(&f) {
            return Ok(b.clone());
        }
        let catalog = build_catalog(&f, &self.opts)?;
        let poset = catalog.poset(self.opts.threads)?;
        let b = Arc::new(Built { catalog, poset });
        self.cache.lock().unwrap().insert(f, b.clone());
        Ok(b)
    }

    /// One named suite, or all of them for `"all"`.
    pub fn suite(&self, name: &str) -> Option<Vec<Check>> {
        let p = GraphFamily::path;
        let c = GraphFamily::cycle;
        let k = GraphFamily::clique;
        let out = match name {
            "all" => return Some(SUITES.iter().flat_map(|s| self.suite(s).unwrap()).collect()),
            "p5" => {
                let mut v = vec![self.count(p(5), 5), self.fixture(p(5))];
                v.push(self.hasse_exact(p(5), fixtures::P5_COVERS));
                v.push(self.witnesses(p(5)));
                v.push(self.unique_extremes(p(5)));
                v
            }
            "p6" => {
                let mut v = vec![self.count(p(6), 31), self.fixture(p(6)), self.witnesses(p(6))];
                v.push(self.filter_completeness());
                v.extend(self.p6_facts());
                v.push(self.unique_extremes(p(6)));
                v.push(self.not_graded(p(6), fixtures::P6_CHAINS));
                v.push(self.not_lattice(p(6), ("3.5", "3.1")));
                v.push(self.embedding(p(5), p(6), &["0.1", "1.1", "1.2", "2.1", "3.2"]));
                v
            }
            "c5" => {
                let mut v = vec![self.count(c(5), 5), self.fixture(c(5)), self.witnesses(c(5))];
                v.push(self.crossing_counts(c(5), &[0, 1, 2, 3, 5]));
                v.push(self.total_order(c(5)));
                v
            }
            "c6" => {
                let mut v = vec![self.count(c(6), 26), self.fixture(c(6)), self.witnesses(c(6))];
                v.extend(self.c6_facts());
                v.push(self.unique_extremes(c(6)));
                v.push(self.not_graded(c(6), fixtures::C6_CHAINS));
                v.push(self.not_lattice(c(6), ("2.1", "2.2")));
                v.push(self.embedding(c(5), c(6), &[]));
                v
            }
            "k5" => {
                let mut v = vec![self.count(k(4), 2), self.count(k(5), 3), self.fixture(k(5))];
                v.push(self.hasse_exact(k(5), &[("1.1", "3.1"), ("3.1", "5.1")]));
                v.push(self.total_order(k(5)));
                v
            }
            "k6" => {
                let mut v = vec![self.count(k(6), 15), self.fixture(k(6)), self.k6_realized()];
                v.push(self.min_crossings(k(6), 3));
                v.push(self.hasse_exact(k(6), &fixtures::k6_covers()));
                v.push(self.table3());
                v.push(self.table2());
                v.push(self.table5());
                v.push(self.nonprecedence_certificates(k(6)));
                v.push(self.minimal_maximal_ids(k(6), &["3.1", "4.1", "5.1", "5.2", "6.1"], &["10.1", "11.1", "15.1"]));
                v.push(self.not_graded(k(6), fixtures::K6_CHAINS));
                v.push(self.not_lattice(k(6), ("3.1", "4.1")));
                v.push(self.hull_monotone(k(6)));
                v
            }
            "lemmas" => {
                let mut v = Vec::new();
                for (f, want) in [(p(2), 1), (p(3), 1), (p(4), 2), (c(3), 1), (c(4), 2)] {
                    v.push(self.count(f, want));
                }
                for f in [p(2), p(3), p(4), p(5), p(6), c(3), c(4), c(5), c(6)] {
                    v.push(self.unique_extremes(f));
                }
                v.push(self.crossing_counts(c(5), &[0, 1, 2, 3, 5]));
                v.push(max_path_counts());
                v.push(uncross_steps());
                v
            }
            "chains" => vec![
                self.k6_chain_ids(),
                chain_structure(6),
                chain_structure(7),
                chain_structure(8),
                chain_structure(3),
            ],
            _ => return None,
        };
        Some(out)
    }

    /// The checks behind acceptance criterion `k` (1 to 10).
    pub fn criterion(&self, k: usize) -> Vec<Check> {
        let p = GraphFamily::path;
        let c = GraphFamily::cycle;
        let kk = GraphFamily::clique;
        match k {
            1 => {
                let mut v: Vec<Check> = [(p(2), 1), (p(3), 1), (p(4), 2), (p(5), 5), (p(6), 31)]
                    .into_iter()
                    .chain([(c(3), 1), (c(4), 2), (c(5), 5), (c(6), 26)])
                    .chain([(kk(4), 2), (kk(5), 3), (kk(6), 15)])
                    .map(|(f, n)| self.count(f, n))
                    .collect();
                v.push(self.min_crossings(kk(6), 3));
                v
            }
            2 => [p(5), p(6), c(5), c(6), kk(5), kk(6)].into_iter().map(|f| self.fixture(f)).collect(),
            3 => {
                let mut v: Vec<Check> = [p(2), p(3), p(4), p(5), p(6), c(3), c(4), c(5), c(6)]
                    .into_iter()
                    .map(|f| self.witnesses(f))
                    .collect();
                v.push(self.k6_realized());
                v
            }
            4 => vec![self.filter_completeness()],
            5 => {
                let mut v = vec![self.hasse_exact(p(5), fixtures::P5_COVERS)];
                v.extend(self.p6_facts());
                v.push(self.total_order(c(5)));
                v.extend(self.c6_facts());
                v.push(self.hasse_exact(kk(5), &[("1.1", "3.1"), ("3.1", "5.1")]));
                v.push(self.hasse_exact(kk(6), &fixtures::k6_covers()));
                v
            }
            6 => vec![self.table3()],
            7 => vec![self.table2()],
            8 => vec![self.table5(), self.nonprecedence_certificates(kk(6))],
            9 => {
                let mut v: Vec<Check> =
                    [p(2), p(3), p(4), p(5), p(6), c(3), c(4), c(5), c(6)].into_iter().map(|f| self.unique_extremes(f)).collect();
                v.push(self.not_graded(p(6), fixtures::P6_CHAINS));
                v.push(self.not_graded(c(6), fixtures::C6_CHAINS));
                v.push(self.not_graded(kk(6), fixtures::K6_CHAINS));
                v.push(self.not_lattice(p(6), ("3.5", "3.1")));
                v.push(self.not_lattice(c(6), ("2.1", "2.2")));
                v.push(self.not_lattice(kk(6), ("3.1", "4.1")));
                v.push(self.crossing_counts(c(5), &[0, 1, 2, 3, 5]));
                v.push(max_path_counts());
                v.push(uncross_steps());
                v
            }
            10 => vec![self.k6_chain_ids(), chain_structure(6), chain_structure(7), chain_structure(8)],
            _ => Vec::new(),
        }
    }

    fn with_built(&self, name: String, f: GraphFamily, body: impl FnOnce(&Built) -> Check) -> Check {
        match self.built(f) {
            Ok(b) => body(&b),
            Err(e) => Check::failed(name, e),
        }
    }

    fn count(&self, f: GraphFamily, want: usize) -> Check {
        let name = format!("{f}: {want} classes");
        self.with_built(name.clone(), f, |b| {
            let got = b.catalog.classes.len();
            let unresolved = b.catalog.unresolved.len();
            Check::new(&name, got == want && unresolved == 0, format!("got {got} classes, {unresolved} unresolved"))
        })
    }

    fn fixture(&self, f: GraphFamily) -> Check {
        let name = format!("{f}: classes match the published listing");
        self.with_built(name.clone(), f, |b| {
            let want: BTreeMap<String, CrossingSet> = fixtures::catalog(&f)
                .unwrap_or_default()
                .into_iter()
                .map(|(id, x)| (id.to_string(), canonical_form(&x, &f)))
                .collect();
            let got: BTreeMap<String, CrossingSet> = b
                .catalog
                .ids
                .iter()
                .zip(&b.catalog.classes)
                .map(|(id, c)| (id.clone(), canonical_form(c.crossings(), &f)))
                .collect();
            let show = |m: &BTreeMap<String, CrossingSet>, other: &BTreeMap<String, CrossingSet>| -> Vec<String> {
                m.iter().filter(|(k, x)| other.get(*k) != Some(x)).map(|(k, x)| format!("{k} {}", x.display(&f))).collect()
            };
            Check::new(
                &name,
                !want.is_empty() && got == want,
                format!("unmatched computed {:?}; unmatched published {:?}", show(&got, &want), show(&want, &got)),
            )
        })
    }

    fn witnesses(&self, f: GraphFamily) -> Check {
        let name = format!("{f}: every class has a verified witness");
        self.with_built(name.clone(), f, |b| {
            let bad: Vec<&str> = b
                .catalog
                .classes
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.witness().is_some_and(|d| verify_witness(d, c.crossings())))
                .map(|(i, _)| b.id(i))
                .collect();
            let unresolved: Vec<String> = b.catalog.unresolved.iter().map(|x| x.display(&f)).collect();
            Check::new(&name, bad.is_empty() && unresolved.is_empty(), format!("no witness: {bad:?}; unresolved: {unresolved:?}"))
        })
    }

    fn k6_realized(&self) -> Check {
        let name = "K6: every listed crossing set is realized by grid search";
        let f = GraphFamily::clique(6);
        let sets = fixtures::catalog(&f).expect("K6 listing");
        let budget = SearchBudget { rng_seed: self.opts.seed, ..SearchBudget::default() };
        let outcomes = par_map(&sets, self.opts.threads, |(id, x)| {
            match realize(&f, x, &budget) {
                Ok(o) if o.status == SearchStatus::Realized && o.witness.as_ref().is_some_and(|d| verify_witness(d, x)) => None,
                Ok(o) => Some(format!("{id}: {:?} after {} nodes", o.status, o.nodes_visited)),
                Err(e) => Some(format!("{id}: {e}")),
            }
        });
        let bad: Vec<String> = outcomes.into_iter().flatten().collect();
        Check::new(name, bad.is_empty(), bad.join("; "))
    }

    fn min_crossings(&self, f: GraphFamily, want: usize) -> Check {
        let name = format!("{f}: fewest crossings over all classes is {want}");
        self.with_built(name.clone(), f, |b| {
            Check::eq(&name, b.catalog.classes.iter().map(|c| c.crossings().len()).min(), Some(want))
        })
    }

    fn filter_completeness(&self) -> Check {
        let name = "P6: five-vertex rule alone leaves 32 sets, the extra one fails the six-vertex rule";
        let f = GraphFamily::path(6);
        let run = || -> Result<Check> {
            let partial = enumerate_with_rules(&f, &[p5_rule()])?;
            let full: BTreeSet<CrossingSet> = enumerate_candidate_classes(&f)?.into_iter().collect();
            let extra: Vec<&CrossingSet> = partial.iter().filter(|x| !full.contains(*x)).collect();
            let victim = canonical_form(&CrossingSet::from_indexed(&f, fixtures::P6_VICTIM)?, &f);
            let sym = Symmetry::new(f);
            let killed = !p6_rule().violations(&sym, &victim).is_empty();
            let pass = partial.len() == 32 && extra == [&victim] && killed && full.len() == 31;
            Ok(Check::new(
                name,
                pass,
                format!(
                    "{} survivors, extra {:?}, six-vertex rule rejects it: {killed}",
                    partial.len(),
                    extra.iter().map(|x| x.display(&f)).collect::<Vec<_>>()
                ),
            ))
        };
        run().unwrap_or_else(|e| Check::failed(name, e))
    }

    fn hasse_exact(&self, f: GraphFamily, want: &[(&str, &str)]) -> Check {
        let name = format!("{f}: Hasse diagram has exactly the published covers");
        self.with_built(name.clone(), f, |b| {
            let want: BTreeSet<(String, String)> = want.iter().map(|&(a, c)| (a.into(), c.into())).collect();
            let got = b.covers();
            let missing: Vec<_> = want.difference(&got).collect();
            let extra: Vec<_> = got.difference(&want).collect();
            Check::new(&name, missing.is_empty() && extra.is_empty(), format!("missing {missing:?}, extra {extra:?}"))
        })
    }

    fn chains(&self, f: GraphFamily, chains: &[&[&str]]) -> Vec<Check> {
        chains
            .iter()
            .map(|chain| {
                let name = format!("{f}: {} is a cover chain", chain.join(" < "));
                self.with_built(name.clone(), f, |b| match b.indices(chain) {
                    Some(ix) => Check::new(&name, b.poset.is_cover_chain(&ix), "not a cover chain"),
                    None => Check::new(&name, false, "unknown id"),
                })
            })
            .collect()
    }

    fn p6_facts(&self) -> Vec<Check> {
        let f = GraphFamily::path(6);
        let mut v = self.chains(f, &fixtures::P6_CHAINS);
        for &(a, c, related) in fixtures::P6_RELATIONS {
            let name = format!("P6: 2.3 vs 3.x: {a} {} {c}", if related { "<" } else { "not <" });
            v.push(self.with_built(name.clone(), f, |b| match (b.idx(a), b.idx(c)) {
                (Some(i), Some(j)) => Check::eq(&name, b.poset.leq(i, j), related),
                _ => Check::new(&name, false, "unknown id"),
            }));
        }
        let name = "P6: every cover adds one crossing except 4.3 < 6.1".to_string();
        v.push(self.with_built(name.clone(), f, |b| {
            let long: Vec<(String, String)> = b
                .poset
                .hasse()
                .iter()
                .filter(|&&(i, j)| b.poset.classes()[j].crossings().len() != b.poset.classes()[i].crossings().len() + 1)
                .map(|&(i, j)| (b.id(i).to_string(), b.id(j).to_string()))
                .collect();
            let (x, y) = fixtures::P6_LONG_COVER;
            Check::eq(&name, long, vec![(x.to_string(), y.to_string())])
        }));
        let name = "P6: sup(3.5, 3.1) = {4.2, 4.3} and inf(4.3, 4.2) = {3.1, 3.5}".to_string();
        v.push(self.with_built(name.clone(), f, |b| {
            let (Some(i), Some(j), Some(s), Some(t)) = (b.idx("3.5"), b.idx("3.1"), b.idx("4.3"), b.idx("4.2")) else {
                return Check::new(&name, false, "unknown id");
            };
            let sup: BTreeSet<String> = b.ids(b.poset.suprema(i, j)).into_iter().collect();
            let inf: BTreeSet<String> = b.ids(b.poset.infima(s, t)).into_iter().collect();
            let want_sup: BTreeSet<String> = ["4.2", "4.3"].map(String::from).into();
            let want_inf: BTreeSet<String> = ["3.1", "3.5"].map(String::from).into();
            Check::eq(&name, (sup, inf), (want_sup, want_inf))
        }));
        v
    }

    fn c6_facts(&self) -> Vec<Check> {
        let f = GraphFamily::cycle(6);
        let mut v = self.chains(f, &fixtures::C6_CHAINS);
        let name = "C6: 2.1 and 2.2 have no unique supremum".to_string();
        v.push(self.with_built(name.clone(), f, |b| match (b.idx("2.1"), b.idx("2.2")) {
            (Some(i), Some(j)) => {
                let sup = b.poset.suprema(i, j);
                Check::new(&name, sup.len() != 1, format!("suprema {:?}", b.ids(sup)))
            }
            _ => Check::new(&name, false, "unknown id"),
        }));
        v
    }

    fn total_order(&self, f: GraphFamily) -> Check {
        let name = format!("{f}: the classes form a chain");
        self.with_built(name.clone(), f, |b| {
            let m = b.poset.len();
            let ok = (0..m).all(|i| (0..m).all(|j| b.poset.leq(i, j) || b.poset.leq(j, i)));
            Check::new(&name, ok, "incomparable pair")
        })
    }

    fn crossing_counts(&self, f: GraphFamily, want: &[usize]) -> Check {
        let name = format!("{f}: crossing counts are {want:?}");
        self.with_built(name.clone(), f, |b| {
            let got: BTreeSet<usize> = b.catalog.classes.iter().map(|c| c.crossings().len()).collect();
            Check::eq(&name, got.into_iter().collect::<Vec<_>>(), want.to_vec())
        })
    }

    fn unique_extremes(&self, f: GraphFamily) -> Check {
        let name = format!("{f}: unique minimal and maximal element");
        self.with_built(name.clone(), f, |b| {
            let (lo, hi) = minimal_maximal(&b.poset);
            Check::new(&name, lo.len() == 1 && hi.len() == 1, format!("minimal {:?}, maximal {:?}", b.ids(lo), b.ids(hi)))
        })
    }

    fn minimal_maximal_ids(&self, f: GraphFamily, lo: &[&str], hi: &[&str]) -> Check {
        let name = format!("{f}: minimal {lo:?}, maximal {hi:?}");
        self.with_built(name.clone(), f, |b| {
            let (a, c) = minimal_maximal(&b.poset);
            let set = |v: Vec<String>| v.into_iter().collect::<BTreeSet<_>>();
            let want = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
            Check::eq(&name, (set(b.ids(a)), set(b.ids(c))), (want(lo), want(hi)))
        })
    }

    /// Not graded, and the two published chains witness it: both are cover
    /// chains between the same ends with different lengths.
    fn not_graded(&self, f: GraphFamily, chains: [&[&str]; 2]) -> Check {
        let name = format!("{f}: not graded, witnessed by the published chains");
        self.with_built(name.clone(), f, |b| {
            let g = is_graded(&b.poset);
            let [a, c] = chains;
            let ok_chains = match (b.indices(a), b.indices(c)) {
                (Some(x), Some(y)) => {
                    b.poset.is_cover_chain(&x)
                        && b.poset.is_cover_chain(&y)
                        && x.first() == y.first()
                        && x.last() == y.last()
                        && x.len() != y.len()
                }
                _ => false,
            };
            let conflict = g.conflict.map(|(x, y)| (b.ids(x), b.ids(y)));
            Check::new(&name, !g.graded && ok_chains, format!("graded {}, chains valid {ok_chains}, conflict {conflict:?}", g.graded))
        })
    }

    fn not_lattice(&self, f: GraphFamily, pair: (&str, &str)) -> Check {
        let name = format!("{f}: not a lattice, witnessed by {} and {}", pair.0, pair.1);
        self.with_built(name.clone(), f, |b| {
            let l = is_lattice(&b.poset);
            let ok_pair = match (b.idx(pair.0), b.idx(pair.1)) {
                (Some(i), Some(j)) => b.poset.suprema(i, j).len() != 1 || b.poset.infima(i, j).len() != 1,
                _ => false,
            };
            let cx = l.counterexample.map(|(i, j)| (b.id(i).to_string(), b.id(j).to_string()));
            Check::new(&name, !l.lattice && ok_pair, format!("lattice {}, pair witnesses {ok_pair}, found {cx:?}", l.lattice))
        })
    }

    fn embedding(&self, small: GraphFamily, large: GraphFamily, want: &[&str]) -> Check {
        let name = format!("{small} embeds in {large}");
        let (a, c) = match (self.built(small), self.built(large)) {
            (Ok(a), Ok(c)) => (a, c),
            (Err(e), _) | (_, Err(e)) => return Check::failed(name, e),
        };
        match embed_subposet(&a.poset, &c.poset) {
            Ok(image) if want.is_empty() => Check::new(name, true, format!("{:?}", c.ids(image))),
            Ok(image) => {
                let got: BTreeSet<String> = c.ids(image).into_iter().collect();
                Check::eq(name, got, want.iter().map(|s| s.to_string()).collect())
            }
            Err(e) => Check::failed(name, e),
        }
    }

    fn hull_monotone(&self, f: GraphFamily) -> Check {
        let name = format!("{f}: hull size never decreases along the order");
        self.with_built(name.clone(), f, |b| {
            let h = |i: usize| b.poset.classes()[i].profile().hull_size;
            let m = b.poset.len();
            let bad: Vec<(String, String)> = (0..m)
                .flat_map(|i| (0..m).map(move |j| (i, j)))
                .filter(|&(i, j)| b.poset.leq(i, j) && !matches!((h(i), h(j)), (Some(x), Some(y)) if x <= y))
                .map(|(i, j)| (b.id(i).to_string(), b.id(j).to_string()))
                .collect();
            Check::new(&name, bad.is_empty(), format!("violations {bad:?}"))
        })
    }

    fn table3(&self) -> Check {
        let name = "K6: parameter table";
        let f = GraphFamily::clique(6);
        let listed: BTreeMap<&str, CrossingSet> = fixtures::catalog(&f).unwrap().into_iter().collect();
        let mut bad = Vec::new();
        for row in fixtures::K6_PARAMS {
            let c = match RealizationClass::new(f, listed[row.id].clone()) {
                Ok(c) => c,
                Err(e) => return Check::failed(name, e),
            };
            let p = c.profile();
            let got = (p.cr_total, p.e0_count, p.omega_hat, p.d0_sorted.clone(), p.m_sorted.clone());
            let want = (row.cr, row.e0, Some(row.omega_hat), row.d0.to_vec(), row.m.to_vec());
            if got != want {
                bad.push(format!("{}: got {got:?}, want {want:?}", row.id));
            }
        }
        Check::new(name, bad.is_empty(), bad.join("; "))
    }

    fn table2(&self) -> Check {
        let name = "K6: listed homomorphisms are witnesses and precedes finds each pair";
        let f = GraphFamily::clique(6);
        let listed: BTreeMap<&str, CrossingSet> = fixtures::catalog(&f).unwrap().into_iter().collect();
        let mut bad = Vec::new();
        for (a, c, images) in fixtures::K6_MAPS {
            let (x, y) = (&listed[a], &listed[c]);
            let map = VertexPermutation::from_images(images).expect("permutation");
            if !is_witness_map(&f, x, y, &map) {
                bad.push(format!("{a}->{c}: listed map is not a witness"));
            }
            let (src, dst) = (RealizationClass::new(f, x.clone()).unwrap(), RealizationClass::new(f, y.clone()).unwrap());
            match precedes(&src, &dst) {
                Ok(p) if p.related && p.map.as_ref().is_some_and(|m| is_witness_map(&f, x, y, m)) => {}
                Ok(_) => bad.push(format!("{a}->{c}: precedes found no map")),
                Err(e) => bad.push(format!("{a}->{c}: {e}")),
            }
        }
        Check::new(name, bad.is_empty(), bad.join("; "))
    }

    fn table5(&self) -> Check {
        let name = "K6: nonprecedence table";
        let f = GraphFamily::clique(6);
        let b = match self.built(f) {
            Ok(b) => b,
            Err(e) => return Check::failed(name, e),
        };
        let mut bad = Vec::new();
        for (a, c, cell) in fixtures::k6_justifications() {
            let (Some(i), Some(j)) = (b.idx(a), b.idx(c)) else {
                bad.push(format!("{a},{c}: unknown id"));
                continue;
            };
            let p = &b.poset;
            let ok = match cell {
                Justification::Equal => i == j,
                Justification::Cover => p.covers(i, j),
                Justification::Composite => p.less(i, j) && !p.covers(i, j),
                Justification::Cited(kind) => {
                    // the cited obstruction itself must hold and verify
                    let (s, d) = (&p.classes()[i], &p.classes()[j]);
                    let cited = necessary_conditions(s, d).into_iter().find(|c| c.kind == kind);
                    let first = explain_nonprecedence(s, d);
                    cited.is_some_and(|c| c.verify(s, d))
                        && matches!(first, Ok(c) if c.verify(s, d) && c.kind != CertificateKind::ExhaustiveSearch)
                }
                Justification::Bespoke => {
                    let (s, d) = (&p.classes()[i], &p.classes()[j]);
                    matches!(explain_nonprecedence(s, d), Ok(c) if c.verify(s, d))
                }
            };
            if !ok {
                bad.push(format!("{a},{c}: {cell:?}"));
            }
        }
        Check::new(name, bad.is_empty(), bad.join("; "))
    }

    fn nonprecedence_certificates(&self, f: GraphFamily) -> Check {
        let name = format!("{f}: every unrelated pair has a verifying certificate");
        self.with_built(name.clone(), f, |b| {
            let p = &b.poset;
            let mut bad = Vec::new();
            for i in 0..p.len() {
                for j in 0..p.len() {
                    if p.leq(i, j) {
                        continue;
                    }
                    let (s, d) = (&p.classes()[i], &p.classes()[j]);
                    let ok = matches!(precedes(s, d), Ok(r) if !r.related)
                        && matches!(explain_nonprecedence(s, d), Ok(c) if c.verify(s, d));
                    if !ok {
                        bad.push(format!("{},{}", b.id(i), b.id(j)));
                    }
                }
            }
            Check::new(&name, bad.is_empty(), bad.join("; "))
        })
    }

    fn k6_chain_ids(&self) -> Check {
        let name = format!("K6 chain template classes are {}", fixtures::CHAIN_K6.join(" < "));
        let f = GraphFamily::clique(6);
        match clique_chain_template(6) {
            Ok(chain) => {
                let got: Vec<String> = chain
                    .iter()
                    .map(|d| match geometry::crossing_set(d) {
                        Ok(x) => fixtures::published_id(&f, &x).map(String::from).unwrap_or_else(|| format!("?{}", x.len())),
                        Err(e) => format!("error {e}"),
                    })
                    .collect();
                Check::eq(name, got, fixtures::CHAIN_K6.iter().map(|s| s.to_string()).collect())
            }
            Err(e) => Check::failed(name, e),
        }
    }
}

/// The template chain for `K_n`: `n - 2` drawings, hull sizes `3..=n`, and
/// each step related by the identity map.
pub fn chain_structure(n: usize) -> Check {
    let name = format!("K{n} chain template: {} drawings, hull sizes 3..={n}, identity steps", n - 2);
    let chain = match clique_chain_template(n) {
        Ok(c) => c,
        Err(e) => return Check::failed(name, e),
    };
    let hulls: Vec<usize> = chain.iter().map(|d| drawing_hull_size(d).unwrap_or(0)).collect();
    let classes: Vec<Option<RealizationClass>> = chain.iter().map(|d| RealizationClass::from_drawing(d.clone()).ok()).collect();
    let f = GraphFamily::clique(n);
    let id = VertexPermutation::identity(n);
    let steps_ok = classes.windows(2).all(|w| match (&w[0], &w[1]) {
        (Some(a), Some(b)) => {
            is_witness_map(&f, a.crossings(), b.crossings(), &id) && precedes(a, b).is_ok_and(|p| p.related)
        }
        _ => false,
    });
    let want: Vec<usize> = (3..=n).collect();
    let pass = chain.len() == n - 2 && hulls == want && steps_ok;
    Check::new(name, pass, format!("{} drawings, hulls {hulls:?}, steps related {steps_ok}", chain.len()))
}

fn max_path_counts() -> Check {
    let name = "max crossing path attains (n-2)(n-3)/2 for n = 4..9";
    let mut bad = Vec::new();
    for n in 4..=9 {
        let want = (n - 2) * (n - 3) / 2;
        match max_crossing_path(n).map_err(crate::Error::from).and_then(|d| Ok(geometry::crossing_set(&d)?)) {
            Ok(x) if x.len() == want => {}
            Ok(x) => bad.push(format!("n={n}: {} crossings", x.len())),
            Err(e) => bad.push(format!("n={n}: {e}")),
        }
    }
    Check::new(name, bad.is_empty(), bad.join("; "))
}

fn uncross_steps() -> Check {
    let name = "uncrossing the max path reaches the plane class in (n-2)(n-3)/2 steps for n = 4..7";
    let mut bad = Vec::new();
    for n in 4..=7 {
        let want = (n - 2) * (n - 3) / 2;
        let Ok(mut d) = max_crossing_path(n) else {
            bad.push(format!("n={n}: construction failed"));
            continue;
        };
        let mut steps = 0;
        let mut prev = geometry::crossing_set(&d).ok();
        while prev.as_ref().is_some_and(|x| !x.is_empty()) && steps <= want {
            match uncross_step(&d) {
                Ok(e) => {
                    let x = geometry::crossing_set(&e).ok();
                    let shrinks = matches!((&x, &prev), (Some(x), Some(p)) if x.is_subset(p) && x.len() + 1 == p.len());
                    if !shrinks {
                        bad.push(format!("n={n}: step {steps} did not remove exactly one crossing"));
                        break;
                    }
                    d = e;
                    prev = x;
                    steps += 1;
                }
                Err(e) => {
                    bad.push(format!("n={n}: {e}"));
                    break;
                }
            }
        }
        if steps != want || prev.as_ref().is_none_or(|x| !x.is_empty()) {
            bad.push(format!("n={n}: {steps} steps"));
        }
    }
    Check::new(name, bad.is_empty(), bad.join("; "))
}
