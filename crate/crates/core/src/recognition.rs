//! Detection of the small induced patterns that define the graph classes here.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// A fixed pattern graph on at most five vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Pattern {
    P4,
    P5,
    /// Complement of `P5`: the square `0-3-1-4-0` with roof `2` on `0` and `4`.
    House,
    /// Triangle `{0, 1, 2}` with pendants `3 - 0` and `4 - 1`.
    Bull,
    C5,
    #[serde(rename = "TWO_K2")]
    TwoK2,
}

/// `P5`, `House`, `Bull`.
pub const P5_HOUSE_BULL: [Pattern; 3] = [Pattern::P5, Pattern::House, Pattern::Bull];
/// `P5` and its complement.
pub const P5_HOUSE: [Pattern; 2] = [Pattern::P5, Pattern::House];

impl Pattern {
    pub const ALL: [Pattern; 6] = [
        Pattern::P4,
        Pattern::P5,
        Pattern::House,
        Pattern::Bull,
        Pattern::C5,
        Pattern::TwoK2,
    ];

    pub fn graph(self) -> Graph {
        match self {
            Pattern::P4 => Graph::path(4),
            Pattern::P5 => Graph::path(5),
            Pattern::House => Graph::path(5).complement(),
            Pattern::Bull => Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap(),
            Pattern::C5 => Graph::cycle(5),
            Pattern::TwoK2 => Graph::new(4, [(0, 1), (2, 3)]).unwrap(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::P4 => "P4",
            Pattern::P5 => "P5",
            Pattern::House => "HOUSE",
            Pattern::Bull => "BULL",
            Pattern::C5 => "C5",
            Pattern::TwoK2 => "TWO_K2",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown pattern `{s}`"))
    }
}

/// An occurrence of a pattern: `vertices[i]` plays pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternMatch {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
}

impl PatternMatch {
    /// The tuple is distinct, in range, and induces exactly the pattern.
    pub fn validate(&self, g: &Graph) -> bool {
        let p = self.pattern.graph();
        let mut seen = FixedBitSet::with_capacity(g.order());
        self.vertices.len() == p.order()
            && self.vertices.iter().all(|&v| v < g.order() && !seen.put(v))
            && g.induced_on(&self.vertices) == p
    }
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: Graph,
    tuple: Vec<usize>,
}

impl Matcher<'_> {
    /// Depth-first over pattern positions, host vertices in increasing order.
    /// `visit` returns `false` to stop the scan.
    fn search(&mut self, used: &FixedBitSet, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let j = self.tuple.len();
        let k = self.pattern.order();
        if j == k {
            return visit(&self.tuple);
        }
        let n = self.host.order();
        let mut cand = used.clone();
        cand.toggle_range(..);
        for (i, &t) in self.tuple.iter().enumerate() {
            if self.pattern.has_edge(i, j) {
                cand.intersect_with(self.host.row(t));
            } else {
                cand.difference_with(self.host.row(t));
            }
        }
        let need_deg = self.pattern.degree(j);
        let need_nondeg = k - 1 - need_deg;
        let candidates: Vec<usize> = cand.ones().collect();
        for h in candidates {
            let d = self.host.degree(h);
            if d < need_deg || n - 1 - d < need_nondeg {
                continue;
            }
            let mut next = used.clone();
            next.insert(h);
            self.tuple.push(h);
            let go_on = self.search(&next, visit);
            self.tuple.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn scan(g: &Graph, pattern: Pattern, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let mut m = Matcher {
        host: g,
        pattern: pattern.graph(),
        tuple: Vec::with_capacity(5),
    };
    if m.pattern.order() > g.order() {
        return;
    }
    let used = FixedBitSet::with_capacity(g.order());
    m.search(&used, visit);
}

/// The lexicographically smallest tuple realizing `pattern` as an induced subgraph.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<PatternMatch> {
    let mut found = None;
    scan(g, pattern, &mut |t| {
        found = Some(t.to_vec());
        false
    });
    found.map(|vertices| PatternMatch { pattern, vertices })
}

/// Every tuple realizing `pattern`, in lexicographic order. Each occurrence
/// appears once per automorphism of the pattern.
pub fn find_all_induced(g: &Graph, pattern: Pattern) -> Vec<PatternMatch> {
    let mut out = Vec::new();
    scan(g, pattern, &mut |t| {
        out.push(PatternMatch {
            pattern,
            vertices: t.to_vec(),
        });
        true
    });
    out
}

/// The first occurrence of any of `patterns`, trying them in the given order.
pub fn find_any(g: &Graph, patterns: &[Pattern]) -> Option<PatternMatch> {
    patterns.iter().find_map(|&p| find_induced(g, p))
}

/// True if none of `patterns` occurs induced in `g`.
pub fn is_free(g: &Graph, patterns: &[Pattern]) -> bool {
    find_any(g, patterns).is_none()
}

/// `(P5, House, Bull)`-freeness.
pub fn is_p5hb_free(g: &Graph) -> bool {
    is_free(g, &P5_HOUSE_BULL)
}

/// Cographs are exactly the `P4`-free graphs.
pub fn is_cograph(g: &Graph) -> bool {
    find_induced(g, Pattern::P4).is_none()
}
