//! Realization catalogs: every class of a family with a witness drawing.

use geoposet_core::filters::{assign_ids, enumerate_candidate_classes};
use geoposet_core::graph::{CrossingSet, FamilyKind, GraphFamily};
use geoposet_core::poset::{GeoPoset, RealizationClass};
use geoposet_core::realizer::{realize, SearchBudget, SearchStatus};

use crate::error::Result;
use crate::fixtures;
use crate::parallel::{par_map, poset_parallel, sample_parallel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogOptions {
    /// Random drawings per clique.
    pub samples: u64,
    pub seed: u64,
    pub budget: SearchBudget,
    pub threads: usize,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        CatalogOptions { samples: 100_000, seed: 0, budget: SearchBudget::default(), threads: 1 }
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub family: GraphFamily,
    pub ids: Vec<String>,
    pub classes: Vec<RealizationClass>,
    /// Filter survivors the search could not realize (paths and cycles).
    pub unresolved: Vec<CrossingSet>,
}

impl Catalog {
    pub fn index(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|i| i == id)
    }

    pub fn poset(&self, threads: usize) -> Result<GeoPoset> {
        poset_parallel(self.classes.clone(), threads)
    }
}

/// Paths and cycles: filter enumeration, then a witness search per survivor.
/// Cliques: classes observed among `samples` random drawings.
pub fn build_catalog(family: &GraphFamily, opts: &CatalogOptions) -> Result<Catalog> {
    let mut found: Vec<RealizationClass> = Vec::new();
    let mut unresolved = Vec::new();
    match family.kind() {
        FamilyKind::Path | FamilyKind::Cycle => {
            let survivors = enumerate_candidate_classes(family)?;
            let outcomes = par_map(&survivors, opts.threads, |x| realize(family, x, &opts.budget));
            for (x, out) in survivors.into_iter().zip(outcomes) {
                let out = out?;
                match (out.status, out.witness) {
                    (SearchStatus::Realized, Some(d)) => found.push(RealizationClass::with_witness(*family, x, d)?),
                    _ => unresolved.push(x),
                }
            }
        }
        FamilyKind::Clique => {
            for (x, d) in sample_parallel(family, opts.samples, opts.seed, opts.threads)? {
                found.push(RealizationClass::with_witness(*family, x, d)?);
            }
        }
    }
    let (ids, classes) = label(family, found);
    Ok(Catalog { family: *family, ids, classes, unresolved })
}

fn id_key(id: &str) -> (usize, usize) {
    let (a, b) = id.split_once('.').unwrap_or((id, "0"));
    (a.parse().unwrap_or(usize::MAX), b.parse().unwrap_or(usize::MAX))
}

/// Published ids when every class has one, else `c.k` ids in sorted order.
/// Classes come back ordered by id.
pub fn label(family: &GraphFamily, mut classes: Vec<RealizationClass>) -> (Vec<String>, Vec<RealizationClass>) {
    classes.sort_by(|a, b| (a.crossings().len(), a.crossings()).cmp(&(b.crossings().len(), b.crossings())));
    let published: Option<Vec<&str>> =
        classes.iter().map(|c| fixtures::published_id(family, c.crossings())).collect();
    let ids: Vec<String> = match published {
        Some(p) => p.into_iter().map(String::from).collect(),
        None => {
            let sets: Vec<CrossingSet> = classes.iter().map(|c| c.crossings().clone()).collect();
            assign_ids(&sets)
        }
    };
    let mut paired: Vec<(String, RealizationClass)> = ids.into_iter().zip(classes).collect();
    paired.sort_by_key(|(id, _)| id_key(id));
    paired.into_iter().unzip()
}
