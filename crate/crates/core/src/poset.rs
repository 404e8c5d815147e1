//! The geometric homomorphism order: parameter profiles, necessary
//! conditions, the precedence decision, and structural analyses of the
//! resulting posets.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::filters::Symmetry;
use crate::geometry::{self, Drawing};
use crate::graph::{CrossingSet, EdgeId, FamilyKind, GraphFamily, VertexPermutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("classes belong to different families ({0} vs {1})")]
    FamilyMismatch(GraphFamily, GraphFamily),
    #[error("hull size requested for a class without a witness")]
    WitnessRequired,
    #[error("vectors of lengths {0} and {1} cannot be compared")]
    LengthMismatch(usize, usize),
    #[error("the pair is related; no nonprecedence certificate exists")]
    ActuallyRelated,
    #[error("class {0} appears twice")]
    DuplicateClass(usize),
    #[error("crossing set is not a candidate set of {0}")]
    InvalidClass(GraphFamily),
    #[error("witness drawing does not realize the crossing set")]
    BadWitness,
    #[error("sub-poset embedding failed at class {0}")]
    NotEmbeddable(usize),
}

/// A realization class: a crossing set, an optional witness drawing, and its
/// parameter profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationClass {
    family: GraphFamily,
    crossings: CrossingSet,
    witness: Option<Drawing>,
    profile: ParamProfile,
}

impl RealizationClass {
    pub fn new(family: GraphFamily, crossings: CrossingSet) -> Result<Self, PosetError> {
        if crossings.iter().any(|p| !family.is_candidate(p.0, p.1)) {
            return Err(PosetError::InvalidClass(family));
        }
        let profile = compute_profile(&family, &crossings, None);
        Ok(RealizationClass { family, crossings, witness: None, profile })
    }

    /// A class with a witness; the witness must realize `crossings` exactly.
    pub fn with_witness(family: GraphFamily, crossings: CrossingSet, witness: Drawing) -> Result<Self, PosetError> {
        if witness.family() != family || !crate::realizer::verify_witness(&witness, &crossings) {
            return Err(PosetError::BadWitness);
        }
        let hull = geometry::drawing_hull_size(&witness).ok();
        let profile = compute_profile(&family, &crossings, hull);
        Ok(RealizationClass { family, crossings, witness: Some(witness), profile })
    }

    /// The class of a drawing.
    pub fn from_drawing(d: Drawing) -> Result<Self, PosetError> {
        let x = geometry::crossing_set(&d).map_err(|_| PosetError::BadWitness)?;
        Self::with_witness(d.family(), x, d)
    }

    pub fn family(&self) -> GraphFamily {
        self.family
    }

    pub fn crossings(&self) -> &CrossingSet {
        &self.crossings
    }

    pub fn witness(&self) -> Option<&Drawing> {
        self.witness.as_ref()
    }

    pub fn profile(&self) -> &ParamProfile {
        &self.profile
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamProfile {
    pub cr_total: usize,
    /// Indexed by edge index.
    pub cr_per_edge: Vec<usize>,
    pub e0_count: usize,
    pub ex_count: usize,
    pub g0_edges: Vec<EdgeId>,
    /// Indexed by vertex - 1.
    pub d0_per_vertex: Vec<usize>,
    pub m_per_vertex: Vec<usize>,
    pub d0_sorted: Vec<usize>,
    pub m_sorted: Vec<usize>,
    /// Cliques only.
    pub omega_hat: Option<usize>,
    pub hull_size: Option<usize>,
}

/// Profile of a class. With `want_hull`, fails unless the class has a witness.
pub fn param_profile(class: &RealizationClass, want_hull: bool) -> Result<ParamProfile, PosetError> {
    if want_hull && class.profile.hull_size.is_none() {
        return Err(PosetError::WitnessRequired);
    }
    Ok(class.profile.clone())
}

fn sorted_desc(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn compute_profile(family: &GraphFamily, x: &CrossingSet, hull_size: Option<usize>) -> ParamProfile {
    let n = family.n();
    let cr_per_edge = x.crossings_per_edge(family);
    let g0_edges: Vec<EdgeId> = family.edges().filter(|e| cr_per_edge[e.index()] == 0).collect();
    let mut d0 = vec![0usize; n];
    let mut m = vec![0usize; n];
    for e in family.edges() {
        let (a, b) = family.endpoints(e);
        let c = cr_per_edge[e.index()];
        for v in [a, b] {
            if c == 0 {
                d0[v - 1] += 1;
            }
            m[v - 1] = m[v - 1].max(c);
        }
    }
    let omega_hat = (family.kind() == FamilyKind::Clique).then(|| omega_hat(family, x));
    ParamProfile {
        cr_total: x.len(),
        e0_count: g0_edges.len(),
        ex_count: family.edge_count() - g0_edges.len(),
        g0_edges,
        d0_sorted: sorted_desc(d0.clone()),
        m_sorted: sorted_desc(m.clone()),
        d0_per_vertex: d0,
        m_per_vertex: m,
        cr_per_edge,
        omega_hat,
        hull_size,
    }
}

/// Whether vertices `a < b < c < d` of a clique drawing are in convex
/// position, read off the crossing set: exactly when one of the three
/// perfect matchings on them crosses.
pub fn four_set_convex(family: &GraphFamily, x: &CrossingSet, q: [usize; 4]) -> bool {
    let e = |u: usize, v: usize| family.edge_between(u, v).expect("clique edge");
    let [a, b, c, d] = q;
    x.contains(e(a, b), e(c, d)) || x.contains(e(a, c), e(b, d)) || x.contains(e(a, d), e(b, c))
}

/// Largest vertex subset all of whose 4-subsets are in convex position.
pub fn omega_hat(family: &GraphFamily, x: &CrossingSet) -> usize {
    let n = family.n();
    if n <= 3 {
        return n;
    }
    let mut convex4 = vec![false; 1 << n];
    for mask in 0u32..(1 << n) {
        if mask.count_ones() == 4 {
            let mut q = [0usize; 4];
            let mut k = 0;
            for v in 0..n {
                if mask & (1 << v) != 0 {
                    q[k] = v + 1;
                    k += 1;
                }
            }
            convex4[mask as usize] = four_set_convex(family, x, q);
        }
    }
    // good[mask]: every 4-subset of mask is convex
    let mut good = vec![false; 1 << n];
    let mut best = 3;
    for mask in 0usize..(1 << n) {
        let size = mask.count_ones() as usize;
        good[mask] = if size < 4 {
            true
        } else if size == 4 {
            convex4[mask]
        } else {
            (0..n).filter(|v| mask & (1 << v) != 0).all(|v| good[mask & !(1 << v)])
        };
        if good[mask] {
            best = best.max(size);
        }
    }
    best
}

/// Non-increasing sort of `x` is coordinatewise at most that of `y`.
pub fn sorted_dominance(x: &[usize], y: &[usize]) -> Result<bool, PosetError> {
    if x.len() != y.len() {
        return Err(PosetError::LengthMismatch(x.len(), y.len()));
    }
    let (xs, ys) = (sorted_desc(x.to_vec()), sorted_desc(y.to_vec()));
    Ok(xs.iter().zip(&ys).all(|(a, b)| a <= b))
}

/// First index where sorted `x` exceeds sorted `y`.
fn dominance_failure(x: &[usize], y: &[usize]) -> Option<usize> {
    let (xs, ys) = (sorted_desc(x.to_vec()), sorted_desc(y.to_vec()));
    xs.iter().zip(&ys).position(|(a, b)| a > b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CertificateKind {
    CrTotal,
    E0Ex,
    G0NotSubgraph,
    OmegaHat,
    D0Dominance,
    MDominance,
    CrPerEdgeUnmatchable,
    ExhaustiveSearch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateDetail {
    /// `src` exceeds (or for uncrossed edges, falls below) `dst`.
    Counts { src: usize, dst: usize },
    /// Sorted vectors failing dominance at `index`.
    Vectors { src: Vec<usize>, dst: Vec<usize>, index: usize },
    /// No automorphism maps the uncrossed subgraph of `dst` into that of `src`.
    Subgraph { src: Vec<EdgeId>, dst: Vec<EdgeId> },
    /// Every vertex map was rejected.
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonPrecedenceCertificate {
    pub kind: CertificateKind,
    pub detail: CertificateDetail,
}

impl NonPrecedenceCertificate {
    /// Re-checks the certificate against the two classes.
    pub fn verify(&self, src: &RealizationClass, dst: &RealizationClass) -> bool {
        if src.family != dst.family {
            return false;
        }
        match self.kind {
            CertificateKind::ExhaustiveSearch => matches!(precedes(src, dst), Ok(p) if !p.related),
            kind => necessary_conditions(src, dst).iter().any(|c| c.kind == kind && c == self),
        }
    }
}

fn g0_embeds(family: &GraphFamily, src: &ParamProfile, dst: &ParamProfile) -> bool {
    let sym = Symmetry::new(*family);
    let src_g0: Vec<bool> = {
        let mut v = vec![false; family.edge_count()];
        for e in &src.g0_edges {
            v[e.index()] = true;
        }
        v
    };
    sym.actions().iter().any(|a| dst.g0_edges.iter().all(|&e| src_g0[a.apply(e).index()]))
}

/// Failed necessary conditions for `src ≼ dst`, in a fixed order. An empty
/// list means no obstruction was found, not that the classes are related.
pub fn necessary_conditions(src: &RealizationClass, dst: &RealizationClass) -> Vec<NonPrecedenceCertificate> {
    let (s, d) = (&src.profile, &dst.profile);
    let mut out = Vec::new();
    let mut push = |kind, detail| out.push(NonPrecedenceCertificate { kind, detail });
    if s.cr_total > d.cr_total {
        push(CertificateKind::CrTotal, CertificateDetail::Counts { src: s.cr_total, dst: d.cr_total });
    }
    if s.e0_count < d.e0_count {
        push(CertificateKind::E0Ex, CertificateDetail::Counts { src: s.e0_count, dst: d.e0_count });
    }
    if !g0_embeds(&src.family, s, d) {
        push(
            CertificateKind::G0NotSubgraph,
            CertificateDetail::Subgraph { src: s.g0_edges.clone(), dst: d.g0_edges.clone() },
        );
    }
    if let (Some(a), Some(b)) = (s.omega_hat, d.omega_hat) {
        if a > b {
            push(CertificateKind::OmegaHat, CertificateDetail::Counts { src: a, dst: b });
        }
    }
    if let Some(index) = dominance_failure(&d.d0_sorted, &s.d0_sorted) {
        push(
            CertificateKind::D0Dominance,
            CertificateDetail::Vectors { src: s.d0_sorted.clone(), dst: d.d0_sorted.clone(), index },
        );
    }
    if let Some(index) = dominance_failure(&s.m_sorted, &d.m_sorted) {
        push(
            CertificateKind::MDominance,
            CertificateDetail::Vectors { src: s.m_sorted.clone(), dst: d.m_sorted.clone(), index },
        );
    }
    if let Some(index) = dominance_failure(&s.cr_per_edge, &d.cr_per_edge) {
        push(
            CertificateKind::CrPerEdgeUnmatchable,
            CertificateDetail::Vectors {
                src: sorted_desc(s.cr_per_edge.clone()),
                dst: sorted_desc(d.cr_per_edge.clone()),
                index,
            },
        );
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Precedence {
    pub related: bool,
    pub map: Option<VertexPermutation>,
}

/// Whether `map` is a geometric homomorphism from `src` to `dst`: an
/// automorphism of the underlying graph carrying every crossing of `src` to
/// a crossing of `dst`.
pub fn is_witness_map(family: &GraphFamily, src: &CrossingSet, dst: &CrossingSet, map: &VertexPermutation) -> bool {
    match family.act_on_crossing_set(map, src) {
        Ok(image) => image.is_subset(dst),
        Err(_) => false,
    }
}

/// Decides `src ≼ dst` and returns a witnessing vertex map when related.
pub fn precedes(src: &RealizationClass, dst: &RealizationClass) -> Result<Precedence, PosetError> {
    if src.family != dst.family {
        return Err(PosetError::FamilyMismatch(src.family, dst.family));
    }
    let family = src.family;
    let map = match family.kind() {
        FamilyKind::Path | FamilyKind::Cycle => family
            .automorphisms()
            .find(|p| is_witness_map(&family, &src.crossings, &dst.crossings, p)),
        FamilyKind::Clique => {
            if necessary_conditions(src, dst).is_empty() {
                clique_search(src, dst)
            } else {
                None
            }
        }
    };
    Ok(Precedence { related: map.is_some(), map })
}

/// Lexicographically first vertex permutation mapping the crossings of `src`
/// into those of `dst`, pruned by per-vertex uncrossed degree and maximum
/// crossing multiplicity.
fn clique_search(src: &RealizationClass, dst: &RealizationClass) -> Option<VertexPermutation> {
    let family = src.family;
    let n = family.n();
    // crossings of src grouped by the largest vertex involved
    let mut by_last: Vec<Vec<[usize; 4]>> = (0..n).map(|_| Vec::new()).collect();
    for p in src.crossings.iter() {
        let (a, b) = family.endpoints(p.0);
        let (c, d) = family.endpoints(p.1);
        let last = a.max(b).max(c).max(d);
        by_last[last - 1].push([a, b, c, d]);
    }
    let (sp, dp) = (&src.profile, &dst.profile);
    let compatible = |v: usize, w: usize| sp.d0_per_vertex[v] >= dp.d0_per_vertex[w] && sp.m_per_vertex[v] <= dp.m_per_vertex[w];
    let mut image = vec![0usize; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        n: usize,
        image: &mut [usize],
        used: &mut [bool],
        by_last: &[Vec<[usize; 4]>],
        family: &GraphFamily,
        dst: &CrossingSet,
        compatible: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        if k == n {
            return true;
        }
        for w in 0..n {
            if used[w] || !compatible(k, w) {
                continue;
            }
            image[k] = w + 1;
            let ok = by_last[k].iter().all(|&[a, b, c, d]| {
                let e = family.edge_between(image[a - 1], image[b - 1]).expect("clique edge");
                let f = family.edge_between(image[c - 1], image[d - 1]).expect("clique edge");
                dst.contains(e, f)
            });
            if ok {
                used[w] = true;
                if go(k + 1, n, image, used, by_last, family, dst, compatible) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    go(0, n, &mut image, &mut used, &by_last, &family, &dst.crossings, &compatible)
        .then(|| VertexPermutation::from_images(&image).expect("bijection"))
}

/// The first certificate in the fixed order, or `ExhaustiveSearch` when no
/// necessary condition fails.
pub fn explain_nonprecedence(
    src: &RealizationClass,
    dst: &RealizationClass,
) -> Result<NonPrecedenceCertificate, PosetError> {
    if precedes(src, dst)?.related {
        return Err(PosetError::ActuallyRelated);
    }
    Ok(necessary_conditions(src, dst).into_iter().next().unwrap_or(NonPrecedenceCertificate {
        kind: CertificateKind::ExhaustiveSearch,
        detail: CertificateDetail::Search,
    }))
}

/// A finite poset of realization classes under ≼.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeoPoset {
    classes: Vec<RealizationClass>,
    leq: Vec<Vec<bool>>,
    hasse: Vec<(usize, usize)>,
    maps: Vec<Vec<Option<VertexPermutation>>>,
}

/// Builds the poset, deciding every ordered pair with [`precedes`].
pub fn build_poset(classes: Vec<RealizationClass>) -> Result<GeoPoset, PosetError> {
    check_classes(&classes)?;
    let mut relation = Vec::with_capacity(classes.len() * classes.len());
    for s in &classes {
        for d in &classes {
            relation.push(precedes(s, d)?.map);
        }
    }
    GeoPoset::from_relation(classes, relation)
}

fn check_classes(classes: &[RealizationClass]) -> Result<(), PosetError> {
    if let Some(first) = classes.first() {
        for c in classes {
            if c.family != first.family {
                return Err(PosetError::FamilyMismatch(first.family, c.family));
            }
        }
        let sym = Symmetry::new(first.family);
        let mut seen: Vec<CrossingSet> = Vec::new();
        for (i, c) in classes.iter().enumerate() {
            let k = sym.canonical_form(&c.crossings);
            if seen.contains(&k) {
                return Err(PosetError::DuplicateClass(i));
            }
            seen.push(k);
        }
    }
    Ok(())
}

impl GeoPoset {
    /// Assembles a poset from a precomputed row-major relation of witness
    /// maps (`None` where unrelated).
    pub fn from_relation(
        classes: Vec<RealizationClass>,
        relation: Vec<Option<VertexPermutation>>,
    ) -> Result<Self, PosetError> {
        check_classes(&classes)?;
        let m = classes.len();
        assert_eq!(relation.len(), m * m, "relation must be m x m");
        let mut maps: Vec<Vec<Option<VertexPermutation>>> = (0..m).map(|_| Vec::with_capacity(m)).collect();
        for (k, r) in relation.into_iter().enumerate() {
            maps[k / m].push(r);
        }
        let leq: Vec<Vec<bool>> = maps.iter().map(|row| row.iter().map(Option::is_some).collect()).collect();
        let mut hasse = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i == j || !leq[i][j] {
                    continue;
                }
                let between = (0..m).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
                if !between {
                    hasse.push((i, j));
                }
            }
        }
        Ok(GeoPoset { classes, leq, hasse, maps })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[RealizationClass] {
        &self.classes
    }

    pub fn family(&self) -> Option<GraphFamily> {
        self.classes.first().map(|c| c.family)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    pub fn leq_matrix(&self) -> &[Vec<bool>] {
        &self.leq
    }

    /// Cover edges `(lower, upper)`.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.hasse.contains(&(i, j))
    }

    /// Witnessing vertex map for a related pair.
    pub fn witness_map(&self, i: usize, j: usize) -> Option<&VertexPermutation> {
        self.maps[i][j].as_ref()
    }

    /// Index of the class whose crossing set is equivalent to `x`.
    pub fn index_of(&self, x: &CrossingSet) -> Option<usize> {
        let family = self.family()?;
        let sym = Symmetry::new(family);
        let k = sym.canonical_form(x);
        self.classes.iter().position(|c| sym.canonical_form(&c.crossings) == k)
    }

    /// Reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let m = self.len();
        (0..m).all(|i| self.leq[i][i])
            && (0..m).all(|i| (0..m).all(|j| i == j || !(self.leq[i][j] && self.leq[j][i])))
            && (0..m).all(|i| (0..m).all(|j| !self.leq[i][j] || (0..m).all(|k| !self.leq[j][k] || self.leq[i][k])))
    }

    /// Whether `chain` is a sequence of cover relations.
    pub fn is_cover_chain(&self, chain: &[usize]) -> bool {
        !chain.is_empty() && chain.windows(2).all(|w| self.covers(w[0], w[1]))
    }

    /// Minimal common upper bounds of `i` and `j`.
    pub fn suprema(&self, i: usize, j: usize) -> Vec<usize> {
        let upper: Vec<usize> = (0..self.len()).filter(|&k| self.leq[i][k] && self.leq[j][k]).collect();
        upper.iter().copied().filter(|&k| !upper.iter().any(|&u| self.less(u, k))).collect()
    }

    /// Maximal common lower bounds of `i` and `j`.
    pub fn infima(&self, i: usize, j: usize) -> Vec<usize> {
        let lower: Vec<usize> = (0..self.len()).filter(|&k| self.leq[k][i] && self.leq[k][j]).collect();
        lower.iter().copied().filter(|&k| !lower.iter().any(|&l| self.less(k, l))).collect()
    }
}

/// Elements with no strict predecessor, and with no strict successor.
pub fn minimal_maximal(poset: &GeoPoset) -> (Vec<usize>, Vec<usize>) {
    let m = poset.len();
    let minimal = (0..m).filter(|&j| !(0..m).any(|i| poset.less(i, j))).collect();
    let maximal = (0..m).filter(|&i| !(0..m).any(|j| poset.less(i, j))).collect();
    (minimal, maximal)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gradedness {
    pub graded: bool,
    /// Rank of each element when graded.
    pub ranks: Option<Vec<usize>>,
    /// Two cover chains from minimal elements to the same element with
    /// different lengths, when not graded.
    pub conflict: Option<(Vec<usize>, Vec<usize>)>,
}

/// Rank propagation from the minimal elements along cover edges.
pub fn is_graded(poset: &GeoPoset) -> Gradedness {
    let m = poset.len();
    let order = topological_order(poset);
    // shortest and longest cover paths from a minimal element, with parents
    let mut short: Vec<(usize, Option<usize>)> = vec![(0, None); m];
    let mut long: Vec<(usize, Option<usize>)> = vec![(0, None); m];
    for &j in &order {
        for &(i, jj) in poset.hasse() {
            if jj != j {
                continue;
            }
            let (s, l) = (short[i].0 + 1, long[i].0 + 1);
            if short[j].1.is_none() || s < short[j].0 {
                short[j] = (s, Some(i));
            }
            if long[j].1.is_none() || l > long[j].0 {
                long[j] = (l, Some(i));
            }
        }
    }
    let chain = |table: &[(usize, Option<usize>)], mut j: usize| {
        let mut c = vec![j];
        while let Some(p) = table[j].1 {
            c.push(p);
            j = p;
        }
        c.reverse();
        c
    };
    for &j in &order {
        if short[j].0 != long[j].0 {
            return Gradedness { graded: false, ranks: None, conflict: Some((chain(&long, j), chain(&short, j))) };
        }
    }
    Gradedness { graded: true, ranks: Some(short.iter().map(|s| s.0).collect()), conflict: None }
}

fn topological_order(poset: &GeoPoset) -> Vec<usize> {
    let m = poset.len();
    let mut idx: Vec<usize> = (0..m).collect();
    // the number of strict predecessors is a linear extension key
    idx.sort_by_key(|&j| ((0..m).filter(|&i| poset.less(i, j)).count(), j));
    idx
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Latticeness {
    pub lattice: bool,
    pub counterexample: Option<(usize, usize)>,
}

/// Lattice iff every pair has exactly one supremum and one infimum.
pub fn is_lattice(poset: &GeoPoset) -> Latticeness {
    let m = poset.len();
    for i in 0..m {
        for j in i + 1..m {
            if poset.suprema(i, j).len() != 1 || poset.infima(i, j).len() != 1 {
                return Latticeness { lattice: false, counterexample: Some((i, j)) };
            }
        }
    }
    Latticeness { lattice: true, counterexample: None }
}

/// Maps each class of `small` (paths or cycles on `k` vertices) to the class
/// of `large` (same kind, `n >= k` vertices) with the same crossings on edges
/// `e_1..e_k`, and checks the map is an order embedding.
pub fn embed_subposet(small: &GeoPoset, large: &GeoPoset) -> Result<Vec<usize>, PosetError> {
    let (Some(sf), Some(lf)) = (small.family(), large.family()) else {
        return Ok(Vec::new());
    };
    if sf.kind() != lf.kind() || sf.kind() == FamilyKind::Clique || sf.n() > lf.n() {
        return Err(PosetError::FamilyMismatch(sf, lf));
    }
    let mut image = Vec::with_capacity(small.len());
    for (i, c) in small.classes().iter().enumerate() {
        let x = CrossingSet::new(&lf, c.crossings.iter().map(|p| (p.0, p.1))).map_err(|_| PosetError::NotEmbeddable(i))?;
        image.push(large.index_of(&x).ok_or(PosetError::NotEmbeddable(i))?);
    }
    for i in 0..small.len() {
        for j in 0..small.len() {
            if small.leq(i, j) != large.leq(image[i], image[j]) {
                return Err(PosetError::NotEmbeddable(i));
            }
        }
    }
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::enumerate_candidate_classes;

    fn class(f: &GraphFamily, pairs: &[(usize, usize)]) -> RealizationClass {
        RealizationClass::new(*f, CrossingSet::from_indexed(f, pairs).unwrap()).unwrap()
    }

    fn kclass(pairs: &[((usize, usize), (usize, usize))]) -> RealizationClass {
        let k6 = GraphFamily::clique(6);
        RealizationClass::new(k6, CrossingSet::from_vertex_pairs(&k6, pairs).unwrap()).unwrap()
    }

    fn poset_of(f: GraphFamily) -> GeoPoset {
        let classes = enumerate_candidate_classes(&f).unwrap().into_iter().map(|x| RealizationClass::new(f, x).unwrap()).collect();
        build_poset(classes).unwrap()
    }

    #[test]
    fn profiles() {
        let three_one = kclass(&[((1, 3), (2, 6)), ((1, 4), (2, 5)), ((3, 5), (4, 6))]);
        let p = param_profile(&three_one, false).unwrap();
        assert_eq!((p.cr_total, p.e0_count, p.omega_hat), (3, 9, Some(4)));
        assert_eq!(p.d0_sorted, vec![3; 6]);
        assert_eq!(p.m_sorted, vec![1; 6]);
        assert_eq!(p.cr_per_edge.iter().sum::<usize>(), 2 * p.cr_total);
        assert_eq!(param_profile(&three_one, true), Err(PosetError::WitnessRequired));

        let p6 = GraphFamily::path(6);
        let plane = param_profile(&class(&p6, &[]), false).unwrap();
        assert_eq!((plane.cr_total, plane.ex_count, plane.omega_hat), (0, 0, None));
        assert!(plane.m_sorted.iter().all(|&m| m == 0));
    }

    #[test]
    fn dominance() {
        assert!(sorted_dominance(&[3, 2, 2, 2, 2, 1], &[3, 3, 3, 2, 2, 1]).unwrap());
        assert!(sorted_dominance(&[1, 2, 3], &[3, 2, 1]).unwrap());
        assert!(sorted_dominance(&[4, 4, 3, 3, 2, 2], &[4, 4, 3, 3, 3, 2]).unwrap());
        assert!(!sorted_dominance(&[4, 1], &[3, 3]).unwrap());
        assert_eq!(sorted_dominance(&[1], &[1, 2]), Err(PosetError::LengthMismatch(1, 2)));
    }

    #[test]
    fn path_precedence_uses_reversal() {
        let p5 = GraphFamily::path(5);
        let a = class(&p5, &[(1, 3)]);
        let b = class(&p5, &[(1, 4), (2, 4)]);
        let r = precedes(&a, &b).unwrap();
        assert!(r.related);
        assert_eq!(r.map.unwrap().images(), vec![5, 4, 3, 2, 1]);
        assert!(!precedes(&b, &a).unwrap().related);
        assert!(necessary_conditions(&a, &a).is_empty());
    }

    #[test]
    fn clique_witness_map() {
        let three_one = kclass(&[((1, 3), (2, 6)), ((1, 4), (2, 5)), ((3, 5), (4, 6))]);
        let eight_one = kclass(&[
            ((1, 3), (2, 4)),
            ((1, 3), (2, 6)),
            ((1, 4), (3, 5)),
            ((1, 4), (5, 6)),
            ((1, 6), (2, 4)),
            ((2, 4), (3, 5)),
            ((2, 4), (5, 6)),
            ((3, 5), (4, 6)),
        ]);
        let r = precedes(&three_one, &eight_one).unwrap();
        assert!(r.related);
        let k6 = GraphFamily::clique(6);
        let table = VertexPermutation::from_images(&[1, 6, 3, 4, 5, 2]).unwrap();
        assert!(is_witness_map(&k6, three_one.crossings(), eight_one.crossings(), &table));
        assert!(is_witness_map(&k6, three_one.crossings(), eight_one.crossings(), r.map.as_ref().unwrap()));
    }

    #[test]
    fn certificates() {
        let five_one = kclass(&[((1, 3), (2, 4)), ((1, 3), (2, 5)), ((1, 4), (2, 5)), ((1, 4), (3, 5)), ((2, 4), (3, 5))]);
        let five_two = kclass(&[((1, 3), (2, 6)), ((1, 4), (2, 6)), ((1, 4), (3, 5)), ((1, 4), (3, 6)), ((3, 5), (4, 6))]);
        let c = necessary_conditions(&five_one, &five_two);
        assert!(c.iter().any(|c| c.kind == CertificateKind::OmegaHat));
        let e = explain_nonprecedence(&five_one, &five_two).unwrap();
        assert!(e.verify(&five_one, &five_two));
        assert_eq!(explain_nonprecedence(&five_one, &five_one), Err(PosetError::ActuallyRelated));
    }

    #[test]
    fn p5_poset() {
        let p = poset_of(GraphFamily::path(5));
        assert!(p.is_partial_order());
        let mut h = p.hasse().to_vec();
        h.sort();
        assert_eq!(h, vec![(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]);
        assert!(is_graded(&p).graded);
        assert_eq!(minimal_maximal(&p), (vec![0], vec![4]));
        assert!(is_lattice(&p).lattice);
    }

    #[test]
    fn c5_is_a_chain() {
        let p = poset_of(GraphFamily::cycle(5));
        let counts: Vec<usize> = p.classes().iter().map(|c| c.crossings().len()).collect();
        assert_eq!(counts, vec![0, 1, 2, 3, 5]);
        assert!((0..5).all(|i| (0..5).all(|j| p.leq(i, j) == (i <= j))));
        assert!(is_lattice(&p).lattice);
    }

    #[test]
    fn p6_is_neither_graded_nor_lattice() {
        let p = poset_of(GraphFamily::path(6));
        assert!(p.is_partial_order());
        assert!(!is_graded(&p).graded);
        assert!(!is_lattice(&p).lattice);
        let (mn, mx) = minimal_maximal(&p);
        assert_eq!((mn.len(), mx.len()), (1, 1));
    }

    #[test]
    fn embeddings() {
        let small = poset_of(GraphFamily::path(5));
        let large = poset_of(GraphFamily::path(6));
        let img = embed_subposet(&small, &large).unwrap();
        let sets: Vec<usize> = img.iter().map(|&i| large.classes()[i].crossings().len()).collect();
        assert_eq!(sets, vec![0, 1, 1, 2, 3]);
        assert_eq!(embed_subposet(&small, &small).unwrap(), vec![0, 1, 2, 3, 4]);
        let c5 = poset_of(GraphFamily::cycle(5));
        let c6 = poset_of(GraphFamily::cycle(6));
        assert!(embed_subposet(&c5, &c6).is_ok());
        assert!(embed_subposet(&small, &c6).is_err());
    }

    #[test]
    fn duplicates_rejected() {
        let p5 = GraphFamily::path(5);
        let r = build_poset(vec![class(&p5, &[(1, 3)]), class(&p5, &[(2, 4)])]);
        assert_eq!(r, Err(PosetError::DuplicateClass(1)));
    }
}
