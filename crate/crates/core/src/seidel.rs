//! Seidel complementation at a vertex.
//!
//! `G * v` keeps every edge inside `N[v]` and inside `V − N[v]`, and inverts
//! every pair with one end in `N(v)` and the other in `V − N[v]`.
//!
//! Two routes are provided: [`classify_edges`] + [`seidel_from_classes`] spells
//! out the three edge classes, and [`seidel_complement`] XORs the cross
//! rectangle into the adjacency rows directly. Tests hold them equal.

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

/// The edge classes of `G` relative to a pivot vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeidelEdgeClassification {
    pub pivot: usize,
    /// Edges with both ends in `N[v]`.
    pub kept_inside: Vec<(usize, usize)>,
    /// Edges with both ends in `V − N[v]`.
    pub kept_outside: Vec<(usize, usize)>,
    /// Non-edges between `N(v)` and `V − N[v]`; these become edges.
    pub created: Vec<(usize, usize)>,
    /// Edges between `N(v)` and `V − N[v]`; these disappear.
    pub removed: Vec<(usize, usize)>,
}

impl SeidelEdgeClassification {
    /// Edge set of `G * v`, sorted.
    pub fn result_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .kept_inside
            .iter()
            .chain(&self.kept_outside)
            .chain(&self.created)
            .copied()
            .collect();
        out.sort_unstable();
        out
    }
}

/// Sorts every pair of vertices of `g` into the four classes.
pub fn classify_edges(g: &Graph, v: usize) -> Result<SeidelEdgeClassification, GraphError> {
    let closed = g.closed_neighborhood(v)?;
    let open = g.neighborhood(v)?;
    let outside = closed.complement();
    let mut c = SeidelEdgeClassification {
        pivot: v,
        kept_inside: Vec::new(),
        kept_outside: Vec::new(),
        created: Vec::new(),
        removed: Vec::new(),
    };
    let n = g.order();
    for x in 0..n {
        for y in x + 1..n {
            let edge = g.has_edge(x, y);
            let cross = (open.contains(x) && outside.contains(y))
                || (open.contains(y) && outside.contains(x));
            match (cross, edge) {
                (true, true) => c.removed.push((x, y)),
                (true, false) => c.created.push((x, y)),
                (false, true) if closed.contains(x) && closed.contains(y) => {
                    c.kept_inside.push((x, y))
                }
                (false, true) => c.kept_outside.push((x, y)),
                (false, false) => {}
            }
        }
    }
    Ok(c)
}

/// Rebuilds `G * v` from its classification.
pub fn seidel_from_classes(n: usize, classes: &SeidelEdgeClassification) -> Graph {
    Graph::new(n, classes.result_edges()).expect("classified pairs are valid edges")
}

/// `G * v`, computed by toggling the `N(v) × (V − N[v])` rectangle row by row.
pub fn seidel_complement(g: &Graph, v: usize) -> Result<Graph, GraphError> {
    let open = g.neighborhood(v)?;
    let outside = g.non_neighbors(v)?;
    let mut h = g.clone();
    toggle_rectangle(&mut h, &open, &outside);
    Ok(h)
}

/// Inverts every pair in `a × b`. The sets must be disjoint.
pub(crate) fn toggle_rectangle(g: &mut Graph, a: &VertexSet, b: &VertexSet) {
    debug_assert!(a.is_disjoint(b));
    let rows = g.rows_mut();
    for x in a.iter() {
        rows[x].symmetric_difference_with(b.bits());
    }
    for y in b.iter() {
        rows[y].symmetric_difference_with(a.bits());
    }
}
