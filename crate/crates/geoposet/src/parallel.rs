//! Thread-partitioned versions of the expensive core operations. Every
//! result is independent of the worker count.

use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use geoposet_core::graph::{CrossingSet, GraphFamily, VertexPermutation};
use geoposet_core::poset::{precedes, GeoPoset, RealizationClass};
use geoposet_core::realizer::{
    merge_samples, outcome_from_points, sample_range, LevelResult, SearchBudget, SearchOutcome, SearchPlan, SearchStatus,
};
use geoposet_core::Drawing;

use crate::error::Result;

pub const THREADS_ENV: &str = "GEOPOSET_THREADS";

/// `--threads` if given, then `GEOPOSET_THREADS`, then the machine's
/// available parallelism.
pub fn thread_count(flag: Option<usize>) -> usize {
    flag.filter(|&t| t > 0)
        .or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse().ok()).filter(|&t: &usize| t > 0))
        .unwrap_or_else(|| thread::available_parallelism().map(NonZeroUsize::get).unwrap_or(1))
}

/// `f` applied to every item, results in input order. Items are handed out
/// dynamically; `skip(i)` is consulted before starting item `i`.
pub fn par_map_skip<T, R, F, S>(items: &[T], threads: usize, f: F, skip: S) -> Vec<Option<R>>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync,
    S: Fn(usize, &[Option<R>]) -> bool + Sync,
{
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    let workers = threads.clamp(1, items.len().max(1));
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                if skip(i, &slots.lock().unwrap()) {
                    continue;
                }
                let r = f(i, &items[i]);
                slots.lock().unwrap()[i] = Some(r);
            });
        }
    });
    slots.into_inner().unwrap()
}

pub fn par_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    par_map_skip(items, threads, |_, t| f(t), |_, _| false).into_iter().map(|r| r.expect("no item skipped")).collect()
}

/// Grid search with the partitions of each level searched concurrently.
///
/// Each partition gets its own node limit of `budget.max_nodes`. Partitions
/// are folded in index order: the first one that is not exhausted decides the
/// level, so the witness is the one the sequential order would reach first.
pub fn realize_parallel(
    family: &GraphFamily,
    x: &CrossingSet,
    budget: &SearchBudget,
    threads: usize,
) -> Result<SearchOutcome> {
    SearchBudget::new(budget.grid_half_width, budget.max_nodes, budget.rng_seed)?;
    let plan = SearchPlan::new(family, x)?;
    let mut total = 0u64;
    for g in 2..=budget.grid_half_width {
        let parts: Vec<usize> = (0..plan.partitions(g)).collect();
        let results = par_map_skip(
            &parts,
            threads,
            |_, &part| {
                let mut nodes = 0u64;
                let r = plan.search_partition(g, part, budget.max_nodes, &mut nodes);
                let r = match r {
                    LevelResult::Found(pts) => match plan.finish(&pts) {
                        Some(_) => LevelResult::Found(pts),
                        None => LevelResult::Exhausted,
                    },
                    other => other,
                };
                (r, nodes)
            },
            // anything after a decided partition cannot change the fold
            |i, done| done[..i].iter().flatten().any(|(r, _)| !matches!(r, LevelResult::Exhausted)),
        );
        for (r, nodes) in results.into_iter().map_while(|r| r) {
            total += nodes;
            match r {
                LevelResult::Exhausted => {}
                LevelResult::Found(pts) => {
                    return Ok(outcome_from_points(&plan, &pts, total).expect("checked above"));
                }
                LevelResult::OutOfNodes => {
                    return Ok(SearchOutcome { status: SearchStatus::BudgetExceeded, witness: None, nodes_visited: total });
                }
            }
        }
    }
    Ok(SearchOutcome { status: SearchStatus::Exhausted, witness: None, nodes_visited: total })
}

/// Number of index blocks the sample range is cut into; fixed so that the
/// merge is the same for any thread count.
const SAMPLE_BLOCKS: u64 = 64;

/// Sampled classes of a clique with the lowest-index witness per class.
pub fn sample_parallel(
    family: &GraphFamily,
    samples: u64,
    seed: u64,
    threads: usize,
) -> Result<Vec<(CrossingSet, Drawing)>> {
    let step = samples.div_ceil(SAMPLE_BLOCKS).max(1);
    let blocks: Vec<(u64, u64)> =
        (0..samples).step_by(step as usize).map(|lo| (lo, (lo + step).min(samples))).collect();
    let parts = par_map(&blocks, threads, |&(lo, hi)| sample_range(family, seed, lo..hi));
    let parts: Vec<_> = parts.into_iter().collect::<std::result::Result<_, _>>()?;
    Ok(merge_samples(parts).into_iter().map(|(k, s)| (k, s.witness)).collect())
}

/// The poset of `classes`, with the precedence matrix computed concurrently.
pub fn poset_parallel(classes: Vec<RealizationClass>, threads: usize) -> Result<GeoPoset> {
    let m = classes.len();
    let cells: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    let relation = par_map(&cells, threads, |&(i, j)| precedes(&classes[i], &classes[j]).map(|p| p.map));
    let relation: Vec<Option<VertexPermutation>> = relation.into_iter().collect::<std::result::Result<_, _>>()?;
    Ok(GeoPoset::from_relation(classes, relation)?)
}
