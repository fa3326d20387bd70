//! Immutable simple undirected graphs over vertices `0..n`.
//!
//! Adjacency is a symmetric bit matrix stored as one [`FixedBitSet`] row per
//! vertex, so edge tests are O(1) and neighborhood set algebra works a word
//! at a time.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Largest order accepted by the brute-force canonical labeling.
pub const MAX_CANONICAL_ORDER: usize = 10;

/// A subset of the vertices of some graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    /// The empty subset of `0..universe`.
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    /// The full set `0..universe`.
    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Builds a set from its members. Panics if a member is outside `0..universe`.
    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
        let mut set = VertexSet::empty(universe);
        for v in members {
            set.insert(v);
        }
        set
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        VertexSet { bits }
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    /// Size of the ground set `0..universe`.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe(),
            "vertex {v} outside universe {}",
            self.universe()
        );
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe() {
            self.bits.set(v, false);
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe() && self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet { bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }

    /// `universe − self`.
    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
}

/// Result of [`Graph::induced_subgraph`]: the subgraph plus its relabeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `labels[i]` is the original vertex that became vertex `i`.
    pub labels: Vec<usize>,
}

/// A proper two-coloring of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Bipartition {
    /// Both sides are stable and together cover every vertex exactly once.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.left.universe() == g.order()
            && self.right.universe() == g.order()
            && self.left.is_disjoint(&self.right)
            && self.left.union(&self.right).len() == g.order()
            && g.is_stable(&self.left)
            && g.is_stable(&self.right)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`. Needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.set_edge(n - 1, 0, true);
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert_ne!(u, v);
        self.rows[u].set(v, present);
        self.rows[v].set(u, present);
    }

    pub(crate) fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub(crate) fn rows_mut(&mut self) -> &mut [FixedBitSet] {
        &mut self.rows
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Adjacency test. Panics if either endpoint is out of range.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// `N(v)`.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits(self.rows[v].clone()))
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        let mut set = self.neighborhood(v)?;
        set.insert(v);
        Ok(set)
    }

    /// `V − N[v]`: the vertices that are neither `v` nor adjacent to it.
    /// This is the outside class the Seidel operator works with.
    pub fn non_neighbors(&self, v: usize) -> Result<VertexSet, GraphError> {
        Ok(self.closed_neighborhood(v)?.complement())
    }

    /// `V − N(v)`, which still contains `v` itself.
    pub fn open_complement(&self, v: usize) -> Result<VertexSet, GraphError> {
        Ok(self.neighborhood(v)?.complement())
    }

    /// True if no two members of `set` are adjacent.
    pub fn is_stable(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.rows[v].is_disjoint(set.bits()))
    }

    /// True if `set` is complete to `other` (every member of one sees every member of the other).
    pub fn is_complete_to(&self, set: &VertexSet, other: &VertexSet) -> bool {
        set.iter().all(|v| other.bits().is_subset(&self.rows[v]))
    }

    /// True if no edge joins `set` and `other`.
    pub fn is_anticomplete_to(&self, set: &VertexSet, other: &VertexSet) -> bool {
        set.iter().all(|v| self.rows[v].is_disjoint(other.bits()))
    }

    /// Inverts every off-diagonal adjacency.
    pub fn complement(&self) -> Graph {
        let mut rows = self.rows.clone();
        for (v, row) in rows.iter_mut().enumerate() {
            row.toggle_range(..);
            row.set(v, false);
        }
        Graph { rows }
    }

    /// The subgraph induced on `set`, relabeled to `0..|set|` in increasing order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> InducedSubgraph {
        let labels = set.to_vec();
        InducedSubgraph {
            graph: self.induced_on(&labels),
            labels,
        }
    }

    /// The subgraph induced on an ordered tuple of distinct vertices: vertex `i`
    /// of the result is `tuple[i]`.
    pub fn induced_on(&self, tuple: &[usize]) -> Graph {
        let mut g = Graph::empty(tuple.len());
        for (i, &u) in tuple.iter().enumerate() {
            for (j, &v) in tuple.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + n, v + n)));
        Graph::new(n + other.order(), edges).expect("shifted edges are in range")
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.order();
        let mut g = self.disjoint_union(other);
        for u in 0..n {
            for v in n..g.order() {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    /// Connected components, each listed by increasing smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = FixedBitSet::with_capacity(n);
            let mut frontier = FixedBitSet::with_capacity(n);
            frontier.insert(start);
            while !frontier.is_clear() {
                comp.union_with(&frontier);
                let mut next = FixedBitSet::with_capacity(n);
                for v in frontier.ones() {
                    next.union_with(&self.rows[v]);
                }
                next.difference_with(&comp);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(VertexSet::from_bits(comp));
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-colors every component, coloring each component's smallest vertex
    /// `left`. On failure returns an odd cycle as a closed vertex sequence.
    pub fn bipartition(&self) -> Result<Bipartition, Vec<usize>> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.rows[u].ones() {
                    match color[w] {
                        None => {
                            color[w] = Some(!color[u].unwrap());
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(c) if c == color[u].unwrap() => {
                            return Err(odd_cycle(u, w, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let left = VertexSet::from_members(n, (0..n).filter(|&v| color[v] == Some(false)));
        let right = left.complement();
        Ok(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// Minimum column-major adjacency encoding over all vertex orderings.
    pub fn canonical_code(&self) -> Result<CanonicalCode, GraphError> {
        CanonicalCode::of(self)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool, GraphError> {
        if self.order() != other.order() || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        let mut da: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        let mut db: Vec<usize> = (0..other.order()).map(|v| other.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return Ok(false);
        }
        Ok(self.canonical_code()? == other.canonical_code()?)
    }
}

/// Closes the BFS tree paths from `u` and `w` up to their lowest common ancestor.
/// A same-colored BFS edge joins two vertices of equal depth, so the cycle is odd.
fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.order(),
            edges: self.edges().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::new(repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}

/// Isomorphism-invariant key: the smallest column-major upper-triangle
/// bit string over all vertex orderings, read most significant bit first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    order: u8,
    bits: u64,
}

impl CanonicalCode {
    pub fn of(g: &Graph) -> Result<Self, GraphError> {
        let n = g.order();
        if n > MAX_CANONICAL_ORDER {
            return Err(GraphError::UnsupportedSize {
                order: n,
                max: MAX_CANONICAL_ORDER,
            });
        }
        let total = n * n.saturating_sub(1) / 2;
        let mut search = CanonSearch {
            g,
            total,
            placed: Vec::with_capacity(n),
            used: 0,
            best: u64::MAX,
        };
        search.descend(0, 0);
        let bits = if n < 2 { 0 } else { search.best };
        Ok(CanonicalCode {
            order: n as u8,
            bits,
        })
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The canonically labeled representative of the isomorphism class.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = n * n.saturating_sub(1) / 2;
        let mut g = Graph::empty(n);
        let mut t = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.bits >> (total - 1 - t)) & 1 == 1 {
                    g.set_edge(i, j, true);
                }
                t += 1;
            }
        }
        g
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    total: usize,
    placed: Vec<usize>,
    used: u32,
    best: u64,
}

impl CanonSearch<'_> {
    /// `prefix` holds the bits for the positions placed so far.
    fn descend(&mut self, prefix: u64, prefix_len: usize) {
        let n = self.g.order();
        let pos = self.placed.len();
        if pos == n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        for v in 0..n {
            if self.used & (1 << v) != 0 {
                continue;
            }
            let mut p = prefix;
            for &u in &self.placed {
                p = (p << 1) | self.g.has_edge(u, v) as u64;
            }
            let len = prefix_len + pos;
            if len > 0 && self.best != u64::MAX && p > (self.best >> (self.total - len)) {
                continue;
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.descend(p, len);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}
