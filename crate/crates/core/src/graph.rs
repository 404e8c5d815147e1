//! The three graph families, their automorphism groups, crossing universes,
//! line graphs and line/crossing graphs.
//!
//! Vertices are numbered `1..=n`. Path and cycle edges are `e_i = {i, i+1}`
//! (plus `e_n = {n, 1}` for cycles); clique edges are `e_{i,j}` with `i < j`.
//! Edges are addressed by [`EdgeId`], an index into the family's edge list in
//! that order, so comparing ids compares edges in serialization order.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid family {kind} with n = {n}")]
    InvalidFamily { kind: FamilyKind, n: usize },
    #[error("crossing pair ({0}, {1}) is not a candidate pair of this family")]
    NotACandidate(String, String),
    #[error("edge label {0:?} does not name an edge of this family")]
    BadEdgeLabel(String),
    #[error("permutation does not map edges to edges")]
    ImageNotAnEdge,
    #[error("permutation has length {got}, expected {expected}")]
    PermutationLength { expected: usize, got: usize },
    #[error("images do not form a bijection on 1..={0}")]
    NotABijection(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Clique,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Clique => "clique",
        })
    }
}

impl core::str::FromStr for FamilyKind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(FamilyKind::Path),
            "cycle" => Ok(FamilyKind::Cycle),
            "clique" => Ok(FamilyKind::Clique),
            _ => Err(GraphError::BadEdgeLabel(s.into())),
        }
    }
}

/// One of `P_n`, `C_n`, `K_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphFamily {
    kind: FamilyKind,
    n: usize,
}

/// Largest vertex count supported by any family. Vertex ids fit in a `u8`
/// and clique edge counts stay small enough for dense tables.
pub const MAX_VERTICES: usize = 16;

impl GraphFamily {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self, GraphError> {
        let min = match kind {
            FamilyKind::Path => 2,
            FamilyKind::Cycle | FamilyKind::Clique => 3,
        };
        if n < min || n > MAX_VERTICES {
            return Err(GraphError::InvalidFamily { kind, n });
        }
        Ok(GraphFamily { kind, n })
    }

    pub fn path(n: usize) -> Self {
        Self::new(FamilyKind::Path, n).expect("invalid path size")
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(FamilyKind::Cycle, n).expect("invalid cycle size")
    }

    pub fn clique(n: usize) -> Self {
        Self::new(FamilyKind::Clique, n).expect("invalid clique size")
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        match self.kind {
            FamilyKind::Path => self.n - 1,
            FamilyKind::Cycle => self.n,
            FamilyKind::Clique => self.n * (self.n - 1) / 2,
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edge_count()).map(EdgeId::from_index)
    }

    /// Endpoints of `e` as 1-based vertex ids, in the labeling order
    /// (`(n, 1)` for the closing cycle edge).
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        let i = e.index();
        debug_assert!(i < self.edge_count());
        match self.kind {
            FamilyKind::Path => (i + 1, i + 2),
            FamilyKind::Cycle => {
                if i + 1 == self.n {
                    (self.n, 1)
                } else {
                    (i + 1, i + 2)
                }
            }
            FamilyKind::Clique => {
                let mut rest = i;
                for a in 1..self.n {
                    let row = self.n - a;
                    if rest < row {
                        return (a, a + 1 + rest);
                    }
                    rest -= row;
                }
                unreachable!("edge index out of range")
            }
        }
    }

    /// The edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u == v || u == 0 || v == 0 || u > self.n || v > self.n {
            return None;
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        match self.kind {
            FamilyKind::Path => (b == a + 1).then(|| EdgeId::from_index(a - 1)),
            FamilyKind::Cycle => {
                if b == a + 1 {
                    Some(EdgeId::from_index(a - 1))
                } else if a == 1 && b == self.n {
                    Some(EdgeId::from_index(self.n - 1))
                } else {
                    None
                }
            }
            FamilyKind::Clique => {
                // rows 1..a-1 hold (n - r) edges each
                let before: usize = (1..a).map(|r| self.n - r).sum();
                Some(EdgeId::from_index(before + (b - a - 1)))
            }
        }
    }

    pub fn adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        if e == f {
            return false;
        }
        let (a, b) = self.endpoints(e);
        let (c, d) = self.endpoints(f);
        a == c || a == d || b == c || b == d
    }

    /// "e3" for paths and cycles, "e3-5" for cliques.
    pub fn edge_label(&self, e: EdgeId) -> String {
        match self.kind {
            FamilyKind::Path | FamilyKind::Cycle => format!("e{}", e.index() + 1),
            FamilyKind::Clique => {
                let (a, b) = self.endpoints(e);
                format!("e{}-{}", a, b)
            }
        }
    }

    pub fn parse_edge(&self, label: &str) -> Result<EdgeId, GraphError> {
        let bad = || GraphError::BadEdgeLabel(label.into());
        let body = label.strip_prefix('e').ok_or_else(bad)?;
        match self.kind {
            FamilyKind::Path | FamilyKind::Cycle => {
                let i: usize = body.parse().map_err(|_| bad())?;
                if i == 0 || i > self.edge_count() {
                    return Err(bad());
                }
                Ok(EdgeId::from_index(i - 1))
            }
            FamilyKind::Clique => {
                let (a, b) = body.split_once('-').ok_or_else(bad)?;
                let a: usize = a.parse().map_err(|_| bad())?;
                let b: usize = b.parse().map_err(|_| bad())?;
                self.edge_between(a, b).ok_or_else(bad)
            }
        }
    }

    /// Whether `{e, f}` can ever cross: vertex-disjoint edges. For paths and
    /// cycles this is the same as non-adjacency.
    pub fn is_candidate(&self, e: EdgeId, f: EdgeId) -> bool {
        e != f && !self.adjacent(e, f)
    }

    /// Every pair that may cross in some drawing, in canonical order.
    pub fn candidate_crossing_pairs(&self) -> Vec<CrossingPair> {
        let m = self.edge_count();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let (e, f) = (EdgeId::from_index(i), EdgeId::from_index(j));
                if self.is_candidate(e, f) {
                    out.push(CrossingPair(e, f));
                }
            }
        }
        out
    }

    /// The automorphism group of the family, streamed. Paths: identity and
    /// reversal. Cycles: the dihedral group (rotations, then reflections).
    /// Cliques: all permutations in lexicographic order.
    pub fn automorphisms(&self) -> Automorphisms {
        Automorphisms {
            family: *self,
            state: match self.kind {
                FamilyKind::Clique => AutState::Lex(Some((1..=self.n).collect())),
                _ => AutState::Counted(0),
            },
        }
    }

    pub fn automorphism_count(&self) -> usize {
        match self.kind {
            FamilyKind::Path => 2,
            FamilyKind::Cycle => 2 * self.n,
            FamilyKind::Clique => (1..=self.n).product(),
        }
    }

    pub fn is_automorphism(&self, p: &VertexPermutation) -> bool {
        p.len() == self.n && self.induced_edge_action(p).is_ok()
    }

    /// Map each edge to the edge on its image vertex pair.
    pub fn induced_edge_action(&self, p: &VertexPermutation) -> Result<EdgeAction, GraphError> {
        if p.len() != self.n {
            return Err(GraphError::PermutationLength { expected: self.n, got: p.len() });
        }
        let mut images = Vec::with_capacity(self.edge_count());
        for e in self.edges() {
            let (a, b) = self.endpoints(e);
            let img = self
                .edge_between(p.apply(a), p.apply(b))
                .ok_or(GraphError::ImageNotAnEdge)?;
            images.push(img);
        }
        Ok(EdgeAction { images })
    }

    pub fn act_on_crossing_set(
        &self,
        p: &VertexPermutation,
        x: &CrossingSet,
    ) -> Result<CrossingSet, GraphError> {
        Ok(self.induced_edge_action(p)?.apply_set(x))
    }

    /// `L(G)`: one vertex per edge (by index), adjacent when the edges share
    /// an endpoint.
    pub fn line_graph(&self) -> AbstractGraph {
        let m = self.edge_count();
        let mut edges = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if self.adjacent(EdgeId::from_index(i), EdgeId::from_index(j)) {
                    edges.push((i, j));
                }
            }
        }
        AbstractGraph::new(m, edges)
    }

    pub fn lex_graph(&self, x: &CrossingSet) -> LexGraph {
        let red = self
            .line_graph()
            .edges()
            .iter()
            .map(|&(i, j)| (EdgeId::from_index(i), EdgeId::from_index(j)))
            .collect();
        let blue = x.iter().map(|p| (p.0, p.1)).collect();
        LexGraph { family: *self, red, blue }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            FamilyKind::Path => 'P',
            FamilyKind::Cycle => 'C',
            FamilyKind::Clique => 'K',
        };
        write!(f, "{}{}", letter, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(u16);

impl EdgeId {
    pub fn from_index(i: usize) -> Self {
        EdgeId(i as u16)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An unordered pair of edges, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossingPair(pub EdgeId, pub EdgeId);

impl CrossingPair {
    pub fn new(e: EdgeId, f: EdgeId) -> Self {
        if e <= f {
            CrossingPair(e, f)
        } else {
            CrossingPair(f, e)
        }
    }

    pub fn involves(&self, e: EdgeId) -> bool {
        self.0 == e || self.1 == e
    }
}

/// A set of crossing edge pairs, kept sorted. The derived ordering is the
/// lexicographic order on the sorted pair lists, which is the order used to
/// pick canonical forms.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossingSet {
    pairs: Vec<CrossingPair>,
}

impl CrossingSet {
    pub fn empty() -> Self {
        CrossingSet { pairs: Vec::new() }
    }

    /// Validates every pair against the family's candidate universe.
    pub fn new(
        family: &GraphFamily,
        pairs: impl IntoIterator<Item = (EdgeId, EdgeId)>,
    ) -> Result<Self, GraphError> {
        let mut out = Vec::new();
        for (e, f) in pairs {
            if e.index() >= family.edge_count()
                || f.index() >= family.edge_count()
                || !family.is_candidate(e, f)
            {
                return Err(GraphError::NotACandidate(family.edge_label(e), family.edge_label(f)));
            }
            out.push(CrossingPair::new(e, f));
        }
        Ok(Self::from_sorted_pairs(out))
    }

    /// Build from `(a, b)` pairs of 1-based edge numbers (`e_a × e_b`) for
    /// paths and cycles.
    pub fn from_indexed(
        family: &GraphFamily,
        pairs: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let mut out = Vec::new();
        for &(a, b) in pairs {
            if a == 0 || b == 0 {
                return Err(GraphError::BadEdgeLabel(format!("e{}xe{}", a, b)));
            }
            out.push((EdgeId::from_index(a - 1), EdgeId::from_index(b - 1)));
        }
        Self::new(family, out)
    }

    /// Build from clique vertex quadruples `((a, b), (c, d))` meaning
    /// `e_{a,b} × e_{c,d}`.
    pub fn from_vertex_pairs(
        family: &GraphFamily,
        pairs: &[((usize, usize), (usize, usize))],
    ) -> Result<Self, GraphError> {
        let mut out = Vec::new();
        for &((a, b), (c, d)) in pairs {
            let e = family
                .edge_between(a, b)
                .ok_or_else(|| GraphError::BadEdgeLabel(format!("e{}-{}", a, b)))?;
            let f = family
                .edge_between(c, d)
                .ok_or_else(|| GraphError::BadEdgeLabel(format!("e{}-{}", c, d)))?;
            out.push((e, f));
        }
        Self::new(family, out)
    }

    pub(crate) fn from_sorted_pairs(mut pairs: Vec<CrossingPair>) -> Self {
        pairs.sort_unstable();
        pairs.dedup();
        CrossingSet { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, e: EdgeId, f: EdgeId) -> bool {
        self.pairs.binary_search(&CrossingPair::new(e, f)).is_ok()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, CrossingPair> {
        self.pairs.iter()
    }

    pub fn pairs(&self) -> &[CrossingPair] {
        &self.pairs
    }

    pub fn is_subset(&self, other: &CrossingSet) -> bool {
        self.pairs.iter().all(|p| other.pairs.binary_search(p).is_ok())
    }

    pub fn with(&self, p: CrossingPair) -> CrossingSet {
        let mut pairs = self.pairs.clone();
        pairs.push(p);
        Self::from_sorted_pairs(pairs)
    }

    pub fn without(&self, p: CrossingPair) -> CrossingSet {
        CrossingSet { pairs: self.pairs.iter().copied().filter(|q| *q != p).collect() }
    }

    /// Number of crossings on each edge, indexed by edge index.
    pub fn crossings_per_edge(&self, family: &GraphFamily) -> Vec<usize> {
        let mut cr = vec![0; family.edge_count()];
        for p in &self.pairs {
            cr[p.0.index()] += 1;
            cr[p.1.index()] += 1;
        }
        cr
    }

    /// Dense symmetric membership table over edge indices.
    pub fn matrix(&self, family: &GraphFamily) -> CrossMatrix {
        let m = family.edge_count();
        let mut cells = vec![false; m * m];
        for p in &self.pairs {
            cells[p.0.index() * m + p.1.index()] = true;
            cells[p.1.index() * m + p.0.index()] = true;
        }
        CrossMatrix { m, cells }
    }

    /// Human-readable form such as `{e1×e3, e2×e4}`.
    pub fn display(&self, family: &GraphFamily) -> String {
        let mut s = String::from("{");
        for (k, p) in self.pairs.iter().enumerate() {
            if k > 0 {
                s.push_str(", ");
            }
            s.push_str(&family.edge_label(p.0));
            s.push('×');
            s.push_str(&family.edge_label(p.1));
        }
        s.push('}');
        s
    }
}

impl<'a> IntoIterator for &'a CrossingSet {
    type Item = &'a CrossingPair;
    type IntoIter = core::slice::Iter<'a, CrossingPair>;

    fn into_iter(self) -> Self::IntoIter {
        self.pairs.iter()
    }
}

#[derive(Debug, Clone)]
pub struct CrossMatrix {
    m: usize,
    cells: Vec<bool>,
}

impl CrossMatrix {
    #[inline]
    pub fn get(&self, e: usize, f: usize) -> bool {
        self.cells[e * self.m + f]
    }
}

/// A bijection on `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPermutation {
    images: Vec<u8>,
}

impl VertexPermutation {
    pub fn identity(n: usize) -> Self {
        VertexPermutation { images: (1..=n as u8).collect() }
    }

    /// `images[i]` is the image of vertex `i + 1`.
    pub fn from_images(images: &[usize]) -> Result<Self, GraphError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in images {
            if v == 0 || v > n || seen[v] {
                return Err(GraphError::NotABijection(n));
            }
            seen[v] = true;
        }
        Ok(VertexPermutation { images: images.iter().map(|&v| v as u8).collect() })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of the 1-based vertex `v`.
    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &VertexPermutation) -> VertexPermutation {
        VertexPermutation { images: other.images.iter().map(|&v| self.images[v as usize - 1]).collect() }
    }

    pub fn inverse(&self) -> VertexPermutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        VertexPermutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }
}

/// The map on edges induced by a vertex automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeAction {
    images: Vec<EdgeId>,
}

impl EdgeAction {
    #[inline]
    pub fn apply(&self, e: EdgeId) -> EdgeId {
        self.images[e.index()]
    }

    pub fn apply_set(&self, x: &CrossingSet) -> CrossingSet {
        CrossingSet::from_sorted_pairs(
            x.iter().map(|p| CrossingPair::new(self.apply(p.0), self.apply(p.1))).collect(),
        )
    }

    pub fn images(&self) -> &[EdgeId] {
        &self.images
    }
}

pub struct Automorphisms {
    family: GraphFamily,
    state: AutState,
}

enum AutState {
    Counted(usize),
    Lex(Option<Vec<usize>>),
}

impl Iterator for Automorphisms {
    type Item = VertexPermutation;

    fn next(&mut self) -> Option<VertexPermutation> {
        let n = self.family.n;
        match &mut self.state {
            AutState::Counted(k) => {
                let idx = *k;
                *k += 1;
                let images: Vec<usize> = match self.family.kind {
                    FamilyKind::Path => match idx {
                        0 => (1..=n).collect(),
                        1 => (1..=n).map(|i| n + 1 - i).collect(),
                        _ => return None,
                    },
                    FamilyKind::Cycle => {
                        if idx >= 2 * n {
                            return None;
                        }
                        let r = idx % n;
                        if idx < n {
                            (1..=n).map(|i| (i - 1 + r) % n + 1).collect()
                        } else {
                            // reflection i -> 2 - i (mod n), then rotate
                            (1..=n).map(|i| ((n + 1 - i) % n + r) % n + 1).collect()
                        }
                    }
                    FamilyKind::Clique => unreachable!(),
                };
                Some(VertexPermutation { images: images.into_iter().map(|v| v as u8).collect() })
            }
            AutState::Lex(cur) => {
                let out = cur.clone()?;
                let next = {
                    let mut p = out.clone();
                    if next_permutation(&mut p) {
                        Some(p)
                    } else {
                        None
                    }
                };
                *cur = next;
                Some(VertexPermutation { images: out.into_iter().map(|v| v as u8).collect() })
            }
        }
    }
}

/// Advance to the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl AbstractGraph {
    pub fn new(vertex_count: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        AbstractGraph { vertex_count, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// True for a connected graph whose vertices all have degree 2.
    pub fn is_cycle(&self) -> bool {
        self.vertex_count >= 3
            && self.edges.len() == self.vertex_count
            && self.degrees().iter().all(|&d| d == 2)
            && self.is_connected()
    }

    /// True for a connected graph with two degree-1 ends and the rest degree 2.
    pub fn is_path(&self) -> bool {
        if self.vertex_count == 1 {
            return self.edges.is_empty();
        }
        let d = self.degrees();
        self.edges.len() + 1 == self.vertex_count
            && d.iter().filter(|&&x| x == 1).count() == 2
            && d.iter().all(|&x| x == 1 || x == 2)
            && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Line/crossing graph: red edges join adjacent edges of the family, blue
/// edges join crossing edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexGraph {
    pub family: GraphFamily,
    pub red: Vec<(EdgeId, EdgeId)>,
    pub blue: Vec<(EdgeId, EdgeId)>,
}

impl LexGraph {
    pub fn blue_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.family.edge_count()];
        for &(e, f) in &self.blue {
            d[e.index()] += 1;
            d[f.index()] += 1;
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(fam: &GraphFamily, pairs: &[CrossingPair]) -> Vec<(String, String)> {
        pairs.iter().map(|p| (fam.edge_label(p.0), fam.edge_label(p.1))).collect()
    }

    #[test]
    fn candidate_counts() {
        let p6 = GraphFamily::path(6);
        let got = labels(&p6, &p6.candidate_crossing_pairs());
        let want: Vec<(String, String)> = [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)]
            .iter()
            .map(|&(a, b)| (format!("e{}", a), format!("e{}", b)))
            .collect();
        assert_eq!(got, want);
        assert_eq!(GraphFamily::cycle(6).candidate_crossing_pairs().len(), 9);
        assert_eq!(GraphFamily::clique(6).candidate_crossing_pairs().len(), 45);
    }

    #[test]
    fn candidate_counts_match_brute_force() {
        // pairs of disjoint vertex pairs, counted directly on vertex sets
        for n in 4..=8 {
            let mut brute = 0;
            for a in 1..=n {
                for b in a + 1..=n {
                    for c in 1..=n {
                        for d in c + 1..=n {
                            if (a, b) < (c, d) && a != c && a != d && b != c && b != d {
                                brute += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(GraphFamily::clique(n).candidate_crossing_pairs().len(), brute);
            assert_eq!(GraphFamily::cycle(n).candidate_crossing_pairs().len(), n * (n - 3) / 2);
        }
    }

    #[test]
    fn clique_edge_indexing_round_trips() {
        let k = GraphFamily::clique(7);
        for e in k.edges() {
            let (a, b) = k.endpoints(e);
            assert!(a < b);
            assert_eq!(k.edge_between(a, b), Some(e));
            assert_eq!(k.parse_edge(&k.edge_label(e)), Ok(e));
        }
        assert_eq!(k.edge_label(k.edge_between(5, 3).unwrap()), "e3-5");
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(GraphFamily::path(5).automorphisms().count(), 2);
        assert_eq!(GraphFamily::cycle(6).automorphisms().count(), 12);
        assert_eq!(GraphFamily::clique(4).automorphisms().count(), 24);
        let rev = GraphFamily::path(5).automorphisms().nth(1).unwrap();
        assert_eq!(rev.images(), vec![5, 4, 3, 2, 1]);
        for fam in [GraphFamily::cycle(5), GraphFamily::cycle(6), GraphFamily::clique(4)] {
            let all: Vec<_> = fam.automorphisms().collect();
            for p in &all {
                assert!(fam.is_automorphism(p));
            }
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
    }

    #[test]
    fn clique_stream_is_lexicographic() {
        let perms: Vec<_> = GraphFamily::clique(4).automorphisms().collect();
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert!(perms[0].is_identity());
    }

    #[test]
    fn induced_actions() {
        let p5 = GraphFamily::path(5);
        let rev = p5.automorphisms().nth(1).unwrap();
        let act = p5.induced_edge_action(&rev).unwrap();
        let e = |i: usize| EdgeId::from_index(i - 1);
        assert_eq!(act.apply(e(1)), e(4));
        assert_eq!(act.apply(e(2)), e(3));

        let c6 = GraphFamily::cycle(6);
        let rot = c6.automorphisms().nth(1).unwrap();
        let act = c6.induced_edge_action(&rot).unwrap();
        for i in 1..=6 {
            assert_eq!(act.apply(e(i)), e(i % 6 + 1));
        }

        let k6 = GraphFamily::clique(6);
        let p = VertexPermutation::from_images(&[1, 6, 3, 4, 5, 2]).unwrap();
        let act = k6.induced_edge_action(&p).unwrap();
        assert_eq!(act.apply(k6.edge_between(1, 3).unwrap()), k6.edge_between(1, 3).unwrap());
        assert_eq!(act.apply(k6.edge_between(2, 5).unwrap()), k6.edge_between(5, 6).unwrap());
    }

    #[test]
    fn image_not_an_edge() {
        let p5 = GraphFamily::path(5);
        let p = VertexPermutation::from_images(&[2, 1, 3, 4, 5]).unwrap();
        assert_eq!(p5.induced_edge_action(&p), Err(GraphError::ImageNotAnEdge));
    }

    #[test]
    fn act_on_sets() {
        let p5 = GraphFamily::path(5);
        let rev = p5.automorphisms().nth(1).unwrap();
        let x = CrossingSet::from_indexed(&p5, &[(1, 3)]).unwrap();
        let want = CrossingSet::from_indexed(&p5, &[(2, 4)]).unwrap();
        assert_eq!(p5.act_on_crossing_set(&rev, &x).unwrap(), want);
        let id = VertexPermutation::identity(5);
        assert_eq!(p5.act_on_crossing_set(&id, &x).unwrap(), x);

        let p6 = GraphFamily::path(6);
        let rev = p6.automorphisms().nth(1).unwrap();
        let x = CrossingSet::from_indexed(&p6, &[(1, 3), (1, 4)]).unwrap();
        let want = CrossingSet::from_indexed(&p6, &[(2, 5), (3, 5)]).unwrap();
        assert_eq!(p6.act_on_crossing_set(&rev, &x).unwrap(), want);
    }

    #[test]
    fn rejects_non_candidates() {
        let p5 = GraphFamily::path(5);
        assert!(CrossingSet::from_indexed(&p5, &[(1, 2)]).is_err());
        let c5 = GraphFamily::cycle(5);
        assert!(CrossingSet::from_indexed(&c5, &[(1, 5)]).is_err());
        assert!(CrossingSet::from_indexed(&c5, &[(3, 4)]).is_err());
    }

    #[test]
    fn line_graphs() {
        assert!(GraphFamily::path(6).line_graph().is_path());
        assert_eq!(GraphFamily::path(6).line_graph().vertex_count(), 5);
        assert!(GraphFamily::cycle(6).line_graph().is_cycle());
        let l3 = GraphFamily::clique(3).line_graph();
        assert_eq!(l3.vertex_count(), 3);
        assert_eq!(l3.edges().len(), 3);
        let l5 = GraphFamily::clique(5).line_graph();
        assert!(l5.degrees().iter().all(|&d| d == 6));
    }

    #[test]
    fn lex_graphs() {
        let p6 = GraphFamily::path(6);
        let x = CrossingSet::from_indexed(&p6, &[(1, 3)]).unwrap();
        let lex = p6.lex_graph(&x);
        assert_eq!(lex.red.len(), 4);
        assert_eq!(lex.blue.len(), 1);
        assert!(p6.lex_graph(&CrossingSet::empty()).blue.is_empty());

        // C6 realization 7.1: blue degrees are the per-edge crossing counts
        let c6 = GraphFamily::cycle(6);
        let x = CrossingSet::from_indexed(
            &c6,
            &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 6), (4, 6)],
        )
        .unwrap();
        let lex = c6.lex_graph(&x);
        assert_eq!(lex.blue_degrees(), vec![3, 2, 2, 3, 2, 2]);
        for (e, f) in &lex.blue {
            assert!(!lex.red.contains(&(*e, *f)));
        }
    }
}
