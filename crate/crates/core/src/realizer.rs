//! Witness drawings: exact backtracking search on a grid, and random sampling
//! of clique drawings.
//!
//! The grid search pins vertex 1 at the origin and places the remaining
//! vertices in label order on `{-g..g}²`. Since the box is symmetric about
//! the origin, vertex 2 is restricted to the octant `0 <= y <= x`. Grids are
//! tried for `g = 2, 3, ...` up to the budget's half width. Required
//! crossings confine each new vertex to a convex region, so only the rows of
//! each column inside that region are examined; `nodes_visited` counts the
//! examined placements.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::filters::Symmetry;
use crate::geometry::{self, Drawing, Point2};
use crate::graph::{CrossingSet, FamilyKind, GraphFamily};
use crate::kernel::{self, IntPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("target contains a pair that is not a candidate crossing of {0}")]
    InvalidTarget(GraphFamily),
    #[error("invalid budget: grid_half_width must lie in 2..=2^20 and max_nodes must be positive")]
    InvalidBudget,
    #[error("unsupported family {0}: sampling needs a clique with n <= 8, search needs at most 64 edges")]
    FamilyNotSupported(GraphFamily),
}

/// Largest accepted grid half width; keeps search arithmetic within `i64`.
pub const MAX_GRID: i64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub grid_half_width: i64,
    pub max_nodes: u64,
    /// Seed handed to sampling when a caller combines search with sampling.
    pub rng_seed: u64,
}

impl SearchBudget {
    pub fn new(grid_half_width: i64, max_nodes: u64, rng_seed: u64) -> Result<Self, RealizeError> {
        let b = SearchBudget { grid_half_width, max_nodes, rng_seed };
        b.check()?;
        Ok(b)
    }

    fn check(&self) -> Result<(), RealizeError> {
        if !(2..=MAX_GRID).contains(&self.grid_half_width) || self.max_nodes == 0 {
            return Err(RealizeError::InvalidBudget);
        }
        Ok(())
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { grid_half_width: 8, max_nodes: 50_000_000, rng_seed: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Realized,
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witness: Option<Drawing>,
    pub nodes_visited: u64,
}

/// Result of searching one partition of one grid level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelResult {
    Found(Vec<IntPoint>),
    Exhausted,
    OutOfNodes,
}

/// Precomputed constraints of a target crossing set.
pub struct SearchPlan {
    family: GraphFamily,
    target: CrossingSet,
    ends: Vec<(usize, usize)>,
    /// Edges completed when vertex `k` (0-based) is placed.
    new_edges: Vec<Vec<usize>>,
    /// Edges completed strictly before each edge, with the expected crossing bit.
    checks: Vec<Vec<(usize, bool)>>,
    /// Crossing partners of each edge as a bit mask.
    partners: Vec<u64>,
    /// Mask of the edges in `checks[e]`.
    done: Vec<u64>,
    /// After placing vertex `k`: half-placed edges as (placed endpoint, mask
    /// of completed edges they must cross), for masks with two or more bits.
    pending: Vec<Vec<(usize, u64)>>,
    /// For vertex `k`: (placed neighbour, completed edge) pairs where the new
    /// edge to the neighbour must cross the completed edge.
    musts: Vec<Vec<(usize, usize)>>,
}

impl SearchPlan {
    pub fn new(family: &GraphFamily, target: &CrossingSet) -> Result<Self, RealizeError> {
        if target.iter().any(|p| !family.is_candidate(p.0, p.1)) {
            return Err(RealizeError::InvalidTarget(*family));
        }
        if family.edge_count() > 64 {
            return Err(RealizeError::FamilyNotSupported(*family));
        }
        let n = family.n();
        let ends: Vec<(usize, usize)> = family
            .edges()
            .map(|e| {
                let (a, b) = family.endpoints(e);
                (a - 1, b - 1)
            })
            .collect();
        let mut new_edges = vec_of(n);
        for (i, &(a, b)) in ends.iter().enumerate() {
            new_edges[a.max(b)].push(i);
        }
        let order: Vec<usize> = new_edges.iter().flatten().copied().collect();
        let m = target.matrix(family);
        let mut checks = vec_of(ends.len());
        let mut partners = alloc::vec![0u64; ends.len()];
        for (pos, &e) in order.iter().enumerate() {
            for &f in &order[..pos] {
                let (a, b) = ends[e];
                let (c, d) = ends[f];
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let want = m.get(e, f);
                checks[e].push((f, want));
                if want {
                    partners[e] |= 1 << f;
                    partners[f] |= 1 << e;
                }
            }
        }
        let done = checks.iter().map(|c| c.iter().fold(0u64, |m, &(f, _)| m | (1 << f))).collect();
        let mut pending = vec_of(n);
        for (k, list) in pending.iter_mut().enumerate() {
            let completed = ends
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a.max(b) <= k)
                .fold(0u64, |m, (i, _)| m | (1 << i));
            for (e, &(a, b)) in ends.iter().enumerate() {
                if a.min(b) <= k && a.max(b) > k {
                    let mask = partners[e] & completed;
                    if mask.count_ones() >= 2 {
                        list.push((a.min(b), mask));
                    }
                }
            }
        }
        let mut musts = vec_of(n);
        for (k, list) in musts.iter_mut().enumerate() {
            for &e in &new_edges[k] {
                let (a, b) = ends[e];
                let other = if a == k { b } else { a };
                for &(f, want) in &checks[e] {
                    if want {
                        list.push((other, f));
                    }
                }
            }
        }
        Ok(SearchPlan {
            family: *family,
            target: target.clone(),
            ends,
            new_edges,
            checks,
            partners,
            done,
            pending,
            musts,
        })
    }

    /// Number of choices for vertex 2 on grid `g`; the unit of partitioning.
    pub fn partitions(&self, g: i64) -> usize {
        second_vertex_choices(g).len()
    }

    /// Searches the subtree where vertex 2 takes its `part`-th choice.
    pub fn search_partition(&self, g: i64, part: usize, node_limit: u64, nodes: &mut u64) -> LevelResult {
        let n = self.family.n();
        let mut pts = alloc::vec![IntPoint::new(0, 0); n];
        if n == 1 {
            return LevelResult::Found(pts);
        }
        let choices = second_vertex_choices(g);
        let Some(&p2) = choices.get(part) else {
            return LevelResult::Exhausted;
        };
        *nodes += 1;
        pts[1] = p2;
        if !self.accept(&pts, 1) {
            return LevelResult::Exhausted;
        }
        let mut dfs = Dfs { plan: self, g, pts, nodes, limit: node_limit };
        match dfs.place(2) {
            Step::Found => LevelResult::Found(dfs.pts),
            Step::Exhausted => LevelResult::Exhausted,
            Step::OutOfNodes => LevelResult::OutOfNodes,
        }
    }

    /// Checks vertex `k` against the placed vertices `0..k`.
    fn accept(&self, pts: &[IntPoint], k: usize) -> bool {
        let c = pts[k];
        for i in 0..k {
            if pts[i] == c {
                return false;
            }
            for j in i + 1..k {
                if orient_small(pts[i], pts[j], c) == 0 {
                    return false;
                }
            }
        }
        let seg = |e: usize| (pts[self.ends[e].0], pts[self.ends[e].1]);
        for &e in &self.new_edges[k] {
            let (a, b) = seg(e);
            for &(f, want) in &self.checks[e] {
                let (c, d) = seg(f);
                if cross_small(a, b, c, d) != want {
                    return false;
                }
            }
            // three edges through one point: e with two crossing partners that cross each other
            let mask = self.partners[e] & self.done[e];
            let mut rest = mask;
            while rest != 0 {
                let f = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut others = self.partners[f] & rest;
                while others != 0 {
                    let h = others.trailing_zeros() as usize;
                    others &= others - 1;
                    if kernel::lines_concurrent(seg(e), seg(f), seg(h)) {
                        return false;
                    }
                }
            }
        }
        self.pending[k].iter().all(|&(anchor, mask)| self.common_direction(pts, anchor, mask))
    }

    /// Whether some ray from `pts[anchor]` meets every segment in `mask`.
    /// Each segment subtends a cone of angle below a half turn; the cones
    /// share a direction iff one of their boundary rays lies in all of them.
    fn common_direction(&self, pts: &[IntPoint], anchor: usize, mask: u64) -> bool {
        let v = pts[anchor];
        let rel = |p: IntPoint| IntPoint::new(p.x - v.x, p.y - v.y);
        let o = IntPoint::new(0, 0);
        let mut cones: [(IntPoint, IntPoint); 64] = [(o, o); 64];
        let mut len = 0;
        let mut rest = mask;
        while rest != 0 {
            let f = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (a, b) = (rel(pts[self.ends[f].0]), rel(pts[self.ends[f].1]));
            cones[len] = if orient_small(o, a, b) > 0 { (a, b) } else { (b, a) };
            len += 1;
        }
        let cones = &cones[..len];
        let inside = |r: IntPoint, (u, w): (IntPoint, IntPoint)| orient_small(o, u, r) >= 0 && orient_small(o, r, w) >= 0;
        cones
            .iter()
            .flat_map(|&(u, w)| [u, w])
            .any(|r| cones.iter().all(|&c| inside(r, c)))
    }

    /// Half-planes `a*y + b*x + c > 0` confining vertex `k` so that its new
    /// edges make every required crossing. Each requirement contributes three.
    fn confining_half_planes(&self, pts: &[IntPoint], k: usize, out: &mut Vec<[i64; 3]>) {
        out.clear();
        for &(i, f) in &self.musts[k] {
            let p = pts[i];
            let (c, d) = (pts[self.ends[f].0], pts[self.ends[f].1]);
            let s = orient_small(c, d, p);
            let t = orient_small(p, c, d);
            for (u, w, sign) in [(c, d, -s), (p, c, t), (p, d, -t)] {
                // orient(u, w, v) = a*vy + b*vx + c
                let a = w.x - u.x;
                let b = u.y - w.y;
                let c = -a * u.y - b * u.x;
                out.push([sign * a, sign * b, sign * c]);
            }
        }
    }

    /// Converts a found placement into an exact drawing and re-verifies it.
    pub fn finish(&self, pts: &[IntPoint]) -> Option<Drawing> {
        let d = Drawing::from_lattice(self.family, pts).ok()?;
        verify_witness(&d, &self.target).then_some(d)
    }
}

fn vec_of<T>(n: usize) -> Vec<Vec<T>> {
    (0..n).map(|_| Vec::new()).collect()
}

/// Rows `y` of column `x` inside every half-plane, clamped to `[-g, g]`.
fn column_rows(planes: &[[i64; 3]], x: i64, g: i64) -> Option<(i64, i64)> {
    let (mut lo, mut hi) = (-g, g);
    for &[a, b, c] in planes {
        // a*y > r
        let r = -(b * x + c);
        match a.signum() {
            0 => {
                if r >= 0 {
                    return None;
                }
            }
            1 => lo = lo.max(r.div_euclid(a) + 1),
            _ => hi = hi.min((-r - 1).div_euclid(-a)),
        }
        if lo > hi {
            return None;
        }
    }
    Some((lo, hi))
}

/// Orientation sign for coordinates below [`MAX_GRID`] in magnitude.
#[inline]
fn orient_small(p: IntPoint, q: IntPoint, r: IntPoint) -> i64 {
    ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)).signum()
}

#[inline]
fn cross_small(a: IntPoint, b: IntPoint, c: IntPoint, d: IntPoint) -> bool {
    orient_small(a, b, c) * orient_small(a, b, d) < 0 && orient_small(c, d, a) * orient_small(c, d, b) < 0
}

fn second_vertex_choices(g: i64) -> Vec<IntPoint> {
    let mut v = Vec::new();
    for x in 1..=g {
        for y in 0..=x {
            v.push(IntPoint::new(x, y));
        }
    }
    v
}

enum Step {
    Found,
    Exhausted,
    OutOfNodes,
}

struct Dfs<'a> {
    plan: &'a SearchPlan,
    g: i64,
    pts: Vec<IntPoint>,
    nodes: &'a mut u64,
    limit: u64,
}

impl Dfs<'_> {
    fn place(&mut self, k: usize) -> Step {
        if k == self.pts.len() {
            return Step::Found;
        }
        let mut planes = Vec::new();
        self.plan.confining_half_planes(&self.pts, k, &mut planes);
        for x in -self.g..=self.g {
            let Some((lo, hi)) = column_rows(&planes, x, self.g) else {
                continue;
            };
            for y in lo..=hi {
                if *self.nodes >= self.limit {
                    return Step::OutOfNodes;
                }
                *self.nodes += 1;
                self.pts[k] = IntPoint::new(x, y);
                if !self.plan.accept(&self.pts, k) {
                    continue;
                }
                match self.place(k + 1) {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
        }
        Step::Exhausted
    }
}

/// Searches for a drawing of `family` whose crossing set is exactly `x`.
pub fn realize(family: &GraphFamily, x: &CrossingSet, budget: &SearchBudget) -> Result<SearchOutcome, RealizeError> {
    budget.check()?;
    let plan = SearchPlan::new(family, x)?;
    let mut nodes = 0u64;
    for g in 2..=budget.grid_half_width {
        for part in 0..plan.partitions(g) {
            match plan.search_partition(g, part, budget.max_nodes, &mut nodes) {
                LevelResult::Found(pts) => {
                    if let Some(d) = plan.finish(&pts) {
                        return Ok(SearchOutcome { status: SearchStatus::Realized, witness: Some(d), nodes_visited: nodes });
                    }
                }
                LevelResult::Exhausted => {}
                LevelResult::OutOfNodes => {
                    return Ok(SearchOutcome { status: SearchStatus::BudgetExceeded, witness: None, nodes_visited: nodes })
                }
            }
        }
    }
    Ok(SearchOutcome { status: SearchStatus::Exhausted, witness: None, nodes_visited: nodes })
}

/// Assembles an outcome from a found lattice placement.
pub fn outcome_from_points(plan: &SearchPlan, pts: &[IntPoint], nodes: u64) -> Option<SearchOutcome> {
    plan.finish(pts).map(|d| SearchOutcome { status: SearchStatus::Realized, witness: Some(d), nodes_visited: nodes })
}

/// True iff `d` is in general position and its crossing set equals `x`.
pub fn verify_witness(d: &Drawing, x: &CrossingSet) -> bool {
    matches!(geometry::crossing_set(d), Ok(c) if &c == x)
}

/// Denominator of sampled coordinates.
pub const SAMPLE_DENOMINATOR: i64 = 1_000_000_000;

/// A discovered class with the index of the sample that first produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sampled {
    pub index: u64,
    pub witness: Drawing,
}

/// Canonicalizer with a cache from raw crossing sets to canonical forms.
pub struct CachedCanonical {
    sym: Symmetry,
    cache: BTreeMap<CrossingSet, CrossingSet>,
}

impl CachedCanonical {
    pub fn new(family: GraphFamily) -> Self {
        CachedCanonical { sym: Symmetry::new(family), cache: BTreeMap::new() }
    }

    pub fn get(&mut self, x: &CrossingSet) -> CrossingSet {
        if let Some(c) = self.cache.get(x) {
            return c.clone();
        }
        let c = self.sym.canonical_form(x);
        self.cache.insert(x.clone(), c.clone());
        c
    }
}

fn check_sampling(family: &GraphFamily) -> Result<(), RealizeError> {
    if family.kind() != FamilyKind::Clique || family.n() > 8 {
        return Err(RealizeError::FamilyNotSupported(*family));
    }
    Ok(())
}

fn coordinate(rng: &mut ChaCha8Rng) -> i64 {
    loop {
        let v = (rng.next_u32() >> 2) as i64;
        if v < SAMPLE_DENOMINATOR {
            return v;
        }
    }
}

/// Draws sample `index` of the stream for `seed`, resampling until the point
/// set is in general position.
pub fn sample_points(n: usize, seed: u64, index: u64) -> Vec<IntPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    loop {
        let pts: Vec<IntPoint> = (0..n).map(|_| IntPoint::new(coordinate(&mut rng), coordinate(&mut rng))).collect();
        if kernel::check_vertices(&pts).is_ok() {
            return pts;
        }
    }
}

/// Samples with indices in `range`, keeping the lowest-index witness per class.
pub fn sample_range(
    family: &GraphFamily,
    seed: u64,
    range: core::ops::Range<u64>,
) -> Result<BTreeMap<CrossingSet, Sampled>, RealizeError> {
    check_sampling(family)?;
    let mut canon = CachedCanonical::new(*family);
    let mut out: BTreeMap<CrossingSet, Sampled> = BTreeMap::new();
    for index in range {
        let mut sub = 0u64;
        let (pts, x) = loop {
            // a concurrency failure redraws from a derived stream
            let pts = sample_points(family.n(), seed.wrapping_add(sub << 32), index);
            if let Ok(x) = kernel::crossing_set(family, &pts) {
                break (pts, x);
            }
            sub += 1;
        };
        let key = canon.get(&x);
        if out.contains_key(&key) {
            continue;
        }
        // relabel so that the witness realizes the canonical set itself
        let (_, map) = canon.sym.canonical_with_map(&x);
        let mut positions = alloc::vec![Point2::from_ints(0, 0); family.n()];
        for (v, p) in pts.iter().enumerate() {
            positions[map.apply(v + 1) - 1] = Point2::from_ratios(p.x, SAMPLE_DENOMINATOR, p.y, SAMPLE_DENOMINATOR);
        }
        let witness = Drawing::new(*family, positions).expect("vertex count matches");
        out.insert(key, Sampled { index, witness });
    }
    Ok(out)
}

/// Merges partition results, keeping the lowest sample index per class.
pub fn merge_samples(parts: impl IntoIterator<Item = BTreeMap<CrossingSet, Sampled>>) -> BTreeMap<CrossingSet, Sampled> {
    let mut out: BTreeMap<CrossingSet, Sampled> = BTreeMap::new();
    for part in parts {
        for (k, s) in part {
            match out.get(&k) {
                Some(prev) if prev.index <= s.index => {}
                _ => {
                    out.insert(k, s);
                }
            }
        }
    }
    out
}

/// Random drawings of a clique, bucketed by canonical crossing set. Witnesses
/// are relabeled to realize their key exactly and come from
/// the lowest sample index per class; deterministic in `seed`.
pub fn sample_classes(
    family: &GraphFamily,
    samples: u64,
    seed: u64,
) -> Result<BTreeMap<CrossingSet, Drawing>, RealizeError> {
    if samples == 0 {
        return Err(RealizeError::FamilyNotSupported(*family));
    }
    Ok(sample_range(family, seed, 0..samples)?.into_iter().map(|(k, s)| (k, s.witness)).collect())
}
