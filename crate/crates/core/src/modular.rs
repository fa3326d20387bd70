//! Modules, primality, and the modular decomposition tree.
//!
//! A set `S` is a module when every vertex outside `S` sees all of `S` or
//! none of it. The decomposition here is the straightforward recursive one:
//! split on components, then on co-components, and otherwise collect the
//! maximal proper modules by closing vertex pairs. Quadratic many closures at
//! O(n²) each is plenty for the graph sizes this crate targets.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ModuleKind {
    Leaf,
    Series,
    Parallel,
    Prime,
}

/// A node of the modular decomposition tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MdNode {
    pub kind: ModuleKind,
    pub vertices: VertexSet,
    pub children: Vec<MdNode>,
    /// For prime nodes: the quotient, vertex `i` standing for `children[i]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<Graph>,
}

impl MdNode {
    /// Visits this node and all descendants, parents before children.
    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a MdNode)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }

    pub fn has_prime_node(&self) -> bool {
        let mut found = false;
        self.walk(&mut |n| found |= n.kind == ModuleKind::Prime);
        found
    }

    /// Rebuilds the graph this tree describes, on `universe` vertices.
    pub fn expand(&self, universe: usize) -> Graph {
        let mut g = Graph::empty(universe);
        self.expand_into(&mut g);
        g
    }

    fn expand_into(&self, g: &mut Graph) {
        for (i, a) in self.children.iter().enumerate() {
            for (j, b) in self.children.iter().enumerate().skip(i + 1) {
                let adjacent = match self.kind {
                    ModuleKind::Series => true,
                    ModuleKind::Parallel | ModuleKind::Leaf => false,
                    ModuleKind::Prime => self.quotient.as_ref().is_some_and(|q| q.has_edge(i, j)),
                };
                if adjacent {
                    for u in a.vertices.iter() {
                        for v in b.vertices.iter() {
                            g.set_edge(u, v, true);
                        }
                    }
                }
            }
        }
        for c in &self.children {
            c.expand_into(g);
        }
    }
}

/// True if every vertex outside `set` is complete or anticomplete to it.
pub fn is_module(g: &Graph, set: &VertexSet) -> bool {
    if set.is_empty() {
        return true;
    }
    set.complement().iter().all(|z| {
        let seen = g.row(z).intersection(set.bits()).count();
        seen == 0 || seen == set.len()
    })
}

/// Smallest module of `g[within]` containing `seed`.
fn module_closure(g: &Graph, seed: &FixedBitSet, within: &FixedBitSet) -> FixedBitSet {
    let mut m = seed.clone();
    loop {
        let size = m.count_ones(..);
        let splitter = within.difference(&m).find(|&z| {
            let seen = g.row(z).intersection(&m).count();
            seen != 0 && seen != size
        });
        match splitter {
            Some(z) => m.insert(z),
            None => return m,
        }
    }
}

/// Prime means at least four vertices and no module `S` with `1 < |S| < n`.
/// Graphs on three or fewer vertices are never prime.
pub fn is_prime(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 {
        return false;
    }
    let all = g.vertex_set();
    for a in 0..n {
        for b in a + 1..n {
            let mut seed = FixedBitSet::with_capacity(n);
            seed.insert(a);
            seed.insert(b);
            if module_closure(g, &seed, all.bits()).count_ones(..) < n {
                return false;
            }
        }
    }
    true
}

/// The modular decomposition tree of `g`.
pub fn md_tree(g: &Graph) -> Result<MdNode, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok(decompose(g, g.vertex_set()))
}

fn decompose(g: &Graph, set: VertexSet) -> MdNode {
    if set.len() == 1 {
        return MdNode {
            kind: ModuleKind::Leaf,
            vertices: set,
            children: Vec::new(),
            quotient: None,
        };
    }
    let sub = g.induced_subgraph(&set);
    let lift = |parts: Vec<VertexSet>| -> Vec<VertexSet> {
        parts
            .iter()
            .map(|p| VertexSet::from_members(g.order(), p.iter().map(|i| sub.labels[i])))
            .collect()
    };

    let components = sub.graph.components();
    let (kind, parts) = if components.len() > 1 {
        (ModuleKind::Parallel, lift(components))
    } else {
        let co_components = sub.graph.complement().components();
        if co_components.len() > 1 {
            (ModuleKind::Series, lift(co_components))
        } else {
            (ModuleKind::Prime, maximal_modules(g, &set))
        }
    };

    let quotient = (kind == ModuleKind::Prime).then(|| {
        let reps: Vec<usize> = parts.iter().map(|p| p.first().unwrap()).collect();
        g.induced_on(&reps)
    });
    let children = parts.into_iter().map(|p| decompose(g, p)).collect();
    MdNode {
        kind,
        vertices: set,
        children,
        quotient,
    }
}

/// For `g[set]` connected and co-connected: its maximal proper modules, which
/// partition `set`. Ordered by smallest member.
fn maximal_modules(g: &Graph, set: &VertexSet) -> Vec<VertexSet> {
    let n = g.order();
    let size = set.len();
    let mut assigned = FixedBitSet::with_capacity(n);
    let mut parts = Vec::new();
    for a in set.iter() {
        if assigned.contains(a) {
            continue;
        }
        let mut part = FixedBitSet::with_capacity(n);
        part.insert(a);
        for b in set.iter() {
            if b == a || part.contains(b) || assigned.contains(b) {
                continue;
            }
            let mut seed = part.clone();
            seed.insert(b);
            let closed = module_closure(g, &seed, set.bits());
            if closed.count_ones(..) < size {
                part = closed;
            }
        }
        assigned.union_with(&part);
        parts.push(VertexSet::from_bits(part));
    }
    parts
}

/// Cograph test through the decomposition tree: no prime node.
pub fn is_cograph_by_tree(g: &Graph) -> bool {
    g.order() == 0 || !md_tree(g).expect("nonempty").has_prime_node()
}
