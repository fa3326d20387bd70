//! Constant-time Seidel complementation on half-graphs.
//!
//! A half-graph is a permutation graph: lay its vertices out on two lines and
//! join two vertices exactly when their relative order differs between the
//! lines. For the staircase with orders `b_1..b_k`, `w_1..w_k` the lines are
//!
//! ```text
//! top:    b_k, ..., b_1, w_1, ..., w_k
//! bottom: w_1, b_k, w_2, b_(k-1), ..., w_k, b_1
//! ```
//!
//! Writing a line as `A v B`, the Seidel complement at `v` is realized by
//! `B v A` on both lines: pairs inside one block keep their order, pairs
//! across the blocks flip on one line or both, and the net effect inverts
//! exactly the pairs between `N(v)` and `V − N[v]`. Each line is a circular
//! doubly linked list with a head marker, and `A v B → B v A` is one unlink,
//! one relink and a head update, independent of `k`.
//!
//! A labeled half-graph can be reached in `(2k)!/2` ways, so no descriptor of
//! O(1) words can track arbitrary move sequences; the rings take O(k) words
//! and each move rewrites O(1) of them.

use serde::Serialize;

use crate::error::{GraphError, StructureError};
use crate::graph::Graph;
use crate::structure::{recognize_halfgraph, HalfGraphForm};

const TOP: usize = 0;
const BOTTOM: usize = 1;

/// Links of one vertex on both lines, kept together so a move touches few cache lines.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Links {
    next: [u32; 2],
    prev: [u32; 2],
}

/// Mutable two-line realizer of a half-graph or of its complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfGraphDescriptor {
    k: usize,
    links: Vec<Links>,
    head: [u32; 2],
    complemented: bool,
}

/// The lines as explicit sequences, for inspection and serialization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realizer {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
    pub complemented: bool,
}

impl HalfGraphDescriptor {
    /// Builds the realizer of `form`'s staircase.
    pub fn from_form(form: &HalfGraphForm) -> Self {
        let k = form.k;
        let top: Vec<usize> = form
            .b_order
            .iter()
            .rev()
            .chain(&form.w_order)
            .copied()
            .collect();
        let bottom: Vec<usize> = (0..k)
            .flat_map(|i| [form.w_order[i], form.b_order[k - 1 - i]])
            .collect();
        Self::from_lines(k, &top, &bottom, false)
    }

    /// Realizer of the complement of `form`'s staircase.
    pub fn from_complement_form(form: &HalfGraphForm) -> Self {
        let mut d = Self::from_form(form);
        d.complemented = true;
        d
    }

    /// Recognizes `g` or its complement as a half-graph.
    pub fn from_graph(g: &Graph) -> Option<Self> {
        if let Some(form) = recognize_halfgraph(g) {
            return Some(Self::from_form(&form));
        }
        recognize_halfgraph(&g.complement()).map(|form| Self::from_complement_form(&form))
    }

    fn from_lines(k: usize, top: &[usize], bottom: &[usize], complemented: bool) -> Self {
        let n = 2 * k;
        assert!(n <= u32::MAX as usize);
        let mut links = vec![Links::default(); n];
        for (line, seq) in [top, bottom].into_iter().enumerate() {
            for i in 0..n {
                let v = seq[i];
                links[v].next[line] = seq[(i + 1) % n] as u32;
                links[v].prev[line] = seq[(i + n - 1) % n] as u32;
            }
        }
        HalfGraphDescriptor {
            k,
            links,
            head: [top[0] as u32, bottom[0] as u32],
            complemented,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        2 * self.k
    }

    /// True when the described graph is the complement of a half-graph.
    pub fn is_complemented(&self) -> bool {
        self.complemented
    }

    /// Replaces the described graph by its complement.
    pub fn complement(&mut self) {
        self.complemented = !self.complemented;
    }

    /// Applies `G ↦ G * x` in place.
    pub fn seidel_move(&mut self, x: usize) -> Result<(), GraphError> {
        if x >= self.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: x,
                order: self.order(),
            });
        }
        let x = x as u32;
        self.move_on_line(TOP, x);
        self.move_on_line(BOTTOM, x);
        Ok(())
    }

    /// `A x B → B x A` on one line.
    #[inline]
    fn move_on_line(&mut self, line: usize, x: u32) {
        let h = self.head[line];
        let t = self.links[h as usize].prev[line];
        let xi = x as usize;
        if x == h {
            // A empty: B x is a rotation of x B
            self.head[line] = self.links[xi].next[line];
        } else if x == t {
            // B empty: x A is a rotation of A x
            self.head[line] = x;
        } else {
            let p = self.links[xi].prev[line];
            let q = self.links[xi].next[line];
            self.links[p as usize].next[line] = q;
            self.links[q as usize].prev[line] = p;
            self.links[t as usize].next[line] = x;
            self.links[xi].prev[line] = t;
            self.links[xi].next[line] = h;
            self.links[h as usize].prev[line] = x;
            self.head[line] = q;
        }
    }

    fn line(&self, line: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.order());
        let mut v = self.head[line];
        for _ in 0..self.order() {
            out.push(v as usize);
            v = self.links[v as usize].next[line];
        }
        out
    }

    pub fn realizer(&self) -> Realizer {
        Realizer {
            top: self.line(TOP),
            bottom: self.line(BOTTOM),
            complemented: self.complemented,
        }
    }

    /// The described graph. O(k²).
    pub fn materialize(&self) -> Graph {
        let n = self.order();
        let pos = |seq: Vec<usize>| {
            let mut p = vec![0usize; n];
            for (i, v) in seq.into_iter().enumerate() {
                p[v] = i;
            }
            p
        };
        let top = pos(self.line(TOP));
        let bottom = pos(self.line(BOTTOM));
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let crossing = (top[u] < top[v]) != (bottom[u] < bottom[v]);
                if crossing != self.complemented {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).expect("labels are in range")
    }

    /// Staircase orders of the underlying half-graph (of the complement of the
    /// described graph when complemented), read off the lines in O(k).
    ///
    /// Prime permutation graphs have exactly four realizers; here they are the
    /// two lines in either role, each pair possibly reversed, and reversing
    /// both lines only exchanges the sides. So one line is ordered
    /// `B` reversed then `W`, and it is the one whose first half keeps its
    /// order on the other line.
    pub fn implied_form(&self) -> Result<HalfGraphForm, StructureError> {
        let n = self.order();
        let lines = [self.line(TOP), self.line(BOTTOM)];
        let mut pos = [vec![0usize; n], vec![0usize; n]];
        for (l, seq) in lines.iter().enumerate() {
            for (i, &v) in seq.iter().enumerate() {
                pos[l][v] = i;
            }
        }
        for l in [TOP, BOTTOM] {
            let other = &pos[1 - l];
            let first = &lines[l][..self.k];
            if first.windows(2).all(|w| other[w[0]] < other[w[1]]) {
                let form = HalfGraphForm {
                    k: self.k,
                    b_order: first.iter().rev().copied().collect(),
                    w_order: lines[l][self.k..].to_vec(),
                };
                return Ok(form);
            }
        }
        Err(StructureError::NotPrime)
    }
}
