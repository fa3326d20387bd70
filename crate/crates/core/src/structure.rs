//! Structure of prime `(P5, House, Bull)`-free graphs: buoys around induced
//! `C5`s, the three-way classification of prime members, and the staircase
//! form of prime `P5`-free bipartite graphs.

use serde::Serialize;

use crate::error::StructureError;
use crate::graph::{Bipartition, Graph, VertexSet};
use crate::modular::{is_module, is_prime};
use crate::recognition::{find_any, find_induced, Pattern, PatternMatch, P5_HOUSE, P5_HOUSE_BULL};

/// Five classes `A0..A4` (indices mod 5): consecutive classes complete to each
/// other, non-consecutive classes anticomplete.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuoyPartition {
    pub classes: [VertexSet; 5],
}

impl BuoyPartition {
    pub fn union(&self) -> VertexSet {
        self.classes
            .iter()
            .skip(1)
            .fold(self.classes[0].clone(), |acc, c| acc.union(c))
    }

    /// The class `u` could join without breaking the buoy conditions, if any.
    /// `u` must lie outside every class.
    pub fn fitting_class(&self, g: &Graph, u: usize) -> Option<usize> {
        let single = VertexSet::from_members(g.order(), [u]);
        let fits = |i: usize| {
            g.is_complete_to(&single, &self.classes[(i + 4) % 5])
                && g.is_complete_to(&single, &self.classes[(i + 1) % 5])
                && g.is_anticomplete_to(&single, &self.classes[(i + 2) % 5])
                && g.is_anticomplete_to(&single, &self.classes[(i + 3) % 5])
        };
        (0..5).find(|&i| fits(i))
    }

    /// Nonempty disjoint classes, the complete/anticomplete pattern, and
    /// maximality (no outside vertex fits any class).
    pub fn is_valid(&self, g: &Graph) -> bool {
        let c = &self.classes;
        for i in 0..5 {
            if c[i].is_empty() || c[i].universe() != g.order() {
                return false;
            }
            for j in i + 1..5 {
                if !c[i].is_disjoint(&c[j]) {
                    return false;
                }
            }
            if !g.is_complete_to(&c[i], &c[(i + 1) % 5])
                || !g.is_anticomplete_to(&c[i], &c[(i + 2) % 5])
            {
                return false;
            }
        }
        self.union()
            .complement()
            .iter()
            .all(|u| self.fitting_class(g, u).is_none())
    }
}

/// Grows a buoy around the induced `C5` given by `start` (in cyclic order).
///
/// The graph must be connected and `(P5, House)`-free. The returned buoy is
/// checked to be all of `g` or a module of it.
pub fn find_buoy(g: &Graph, start: &PatternMatch) -> Result<BuoyPartition, StructureError> {
    if start.pattern != Pattern::C5 || !start.validate(g) {
        return Err(StructureError::NotInducedC5(start.vertices.clone()));
    }
    if !g.is_connected() {
        return Err(StructureError::NotConnected);
    }
    if let Some(w) = find_any(g, &P5_HOUSE) {
        return Err(StructureError::ClassViolation(w));
    }
    let n = g.order();
    let mut buoy = BuoyPartition {
        classes: std::array::from_fn(|i| VertexSet::from_members(n, [start.vertices[i]])),
    };
    loop {
        let outside = buoy.union().complement();
        let next = outside
            .iter()
            .find_map(|u| buoy.fitting_class(g, u).map(|i| (u, i)));
        match next {
            Some((u, i)) => buoy.classes[i].insert(u),
            None => break,
        }
    }
    let union = buoy.union();
    if union.len() != n && !is_module(g, &union) {
        return Err(StructureError::BuoyNotModule(union.to_vec()));
    }
    Ok(buoy)
}

/// The three alternatives for a prime `(P5, House, Bull)`-free graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Condition {
    C5Iso,
    BipartiteP5Free,
    CobipartiteP5Free,
}

/// A satisfied condition together with evidence for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConditionWitness {
    /// `cycle[i]` plays vertex `i` of `0-1-2-3-4-0`.
    C5Iso {
        cycle: Vec<usize>,
    },
    BipartiteP5Free {
        bipartition: Bipartition,
    },
    /// A bipartition of the complement, i.e. two cliques of `g`.
    CobipartiteP5Free {
        bipartition: Bipartition,
    },
}

impl ConditionWitness {
    pub fn condition(&self) -> Condition {
        match self {
            ConditionWitness::C5Iso { .. } => Condition::C5Iso,
            ConditionWitness::BipartiteP5Free { .. } => Condition::BipartiteP5Free,
            ConditionWitness::CobipartiteP5Free { .. } => Condition::CobipartiteP5Free,
        }
    }

    /// Re-checks the evidence against `g` from scratch.
    pub fn validate(&self, g: &Graph) -> bool {
        match self {
            ConditionWitness::C5Iso { cycle } => {
                g.order() == 5
                    && PatternMatch {
                        pattern: Pattern::C5,
                        vertices: cycle.clone(),
                    }
                    .validate(g)
            }
            ConditionWitness::BipartiteP5Free { bipartition } => {
                bipartition.is_valid_for(g) && find_induced(g, Pattern::P5).is_none()
            }
            ConditionWitness::CobipartiteP5Free { bipartition } => {
                let co = g.complement();
                bipartition.is_valid_for(&co) && find_induced(&co, Pattern::P5).is_none()
            }
        }
    }
}

/// Which of the three alternatives a prime graph satisfies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub witnesses: Vec<ConditionWitness>,
    /// Present when no condition holds: a forbidden `P5`, `House` or `Bull`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forbidden: Option<PatternMatch>,
}

impl ClassReport {
    pub fn conditions(&self) -> Vec<Condition> {
        self.witnesses
            .iter()
            .map(ConditionWitness::condition)
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Classifies a prime graph. Every satisfied condition is reported.
pub fn classify_prime(g: &Graph) -> Result<ClassReport, StructureError> {
    if !is_prime(g) {
        return Err(StructureError::NotPrime);
    }
    let mut witnesses = Vec::new();
    if g.order() == 5 {
        if let Some(m) = find_induced(g, Pattern::C5) {
            witnesses.push(ConditionWitness::C5Iso { cycle: m.vertices });
        }
    }
    if let Ok(bipartition) = g.bipartition() {
        if find_induced(g, Pattern::P5).is_none() {
            witnesses.push(ConditionWitness::BipartiteP5Free { bipartition });
        }
    }
    let co = g.complement();
    if let Ok(bipartition) = co.bipartition() {
        if find_induced(&co, Pattern::P5).is_none() {
            witnesses.push(ConditionWitness::CobipartiteP5Free { bipartition });
        }
    }
    let forbidden = if witnesses.is_empty() {
        find_any(g, &P5_HOUSE_BULL)
    } else {
        None
    };
    Ok(ClassReport {
        witnesses,
        forbidden,
    })
}

/// Prime `(P5, House)`-free graphs are `C5` itself or `C5`-free.
pub fn is_c5_or_c5_free(g: &Graph) -> bool {
    find_induced(g, Pattern::C5).is_none() || (g.order() == 5 && g.edge_count() == 5)
}

/// Staircase orders of a half-graph: `b_order[i] ~ w_order[j]` iff `i + j < k`
/// (0-based), and there are no other edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HalfGraphForm {
    pub k: usize,
    pub b_order: Vec<usize>,
    pub w_order: Vec<usize>,
}

impl HalfGraphForm {
    /// Number of vertices (`2k`).
    pub fn order(&self) -> usize {
        2 * self.k
    }

    /// The graph these orders describe.
    pub fn graph(&self) -> Graph {
        let k = self.k;
        let edges = (0..k).flat_map(|i| (0..k - i).map(move |j| (i, j)));
        Graph::new(
            self.order(),
            edges.map(|(i, j)| (self.b_order[i], self.w_order[j])),
        )
        .expect("form labels are a permutation of 0..2k")
    }

    /// The same graph read with the sides exchanged (`b_i <-> w_i`).
    pub fn swap_sides(&self) -> HalfGraphForm {
        HalfGraphForm {
            k: self.k,
            b_order: self.w_order.clone(),
            w_order: self.b_order.clone(),
        }
    }

    /// Equal up to [`HalfGraphForm::swap_sides`].
    pub fn same_up_to_sides(&self, other: &HalfGraphForm) -> bool {
        self == other || self.swap_sides() == *other
    }

    /// The labels form a permutation of `0..2k` and `g` is exactly the staircase.
    pub fn describes(&self, g: &Graph) -> bool {
        let n = self.order();
        if g.order() != n || self.b_order.len() != self.k || self.w_order.len() != self.k {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in self.b_order.iter().chain(&self.w_order) {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        self.graph() == *g
    }
}

/// The staircase graph on `2k` vertices: `b_i = i - 1` and `w_j = k + j - 1`.
pub fn make_halfgraph(k: usize) -> Result<Graph, StructureError> {
    Ok(standard_form(k)?.graph())
}

/// The form matching [`make_halfgraph`]'s labeling.
pub fn standard_form(k: usize) -> Result<HalfGraphForm, StructureError> {
    if k < 2 {
        return Err(StructureError::HalfGraphTooSmall(k));
    }
    Ok(HalfGraphForm {
        k,
        b_order: (0..k).collect(),
        w_order: (k..2 * k).collect(),
    })
}

/// Recognizes prime `P5`-free bipartite graphs and recovers their staircase.
///
/// The `B` side is the color class of vertex 0; each side is sorted by
/// decreasing degree and the whole adjacency is then checked.
pub fn recognize_halfgraph(g: &Graph) -> Option<HalfGraphForm> {
    let n = g.order();
    if n < 4 || n % 2 == 1 || !g.is_connected() {
        return None;
    }
    let sides = g.bipartition().ok()?;
    let k = n / 2;
    if sides.left.len() != k {
        return None;
    }
    let by_degree = |s: &VertexSet| {
        let mut v = s.to_vec();
        v.sort_by_key(|&x| std::cmp::Reverse(g.degree(x)));
        v
    };
    let form = HalfGraphForm {
        k,
        b_order: by_degree(&sides.left),
        w_order: by_degree(&sides.right),
    };
    form.describes(g).then_some(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::is_free;

    fn c5_with_twin() -> Graph {
        Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2)]).unwrap()
    }

    fn c5_match(g: &Graph) -> PatternMatch {
        find_induced(g, Pattern::C5).unwrap()
    }

    #[test]
    fn buoy_of_c5() {
        let g = Graph::cycle(5);
        let b = find_buoy(&g, &c5_match(&g)).unwrap();
        assert!(b.classes.iter().all(|c| c.len() == 1));
        assert_eq!(b.union().len(), 5);
        assert!(b.is_valid(&g));
    }

    #[test]
    fn buoy_absorbs_twin() {
        let g = c5_with_twin();
        let start = PatternMatch {
            pattern: Pattern::C5,
            vertices: vec![0, 1, 2, 3, 4],
        };
        let b = find_buoy(&g, &start).unwrap();
        assert_eq!(b.classes[1].to_vec(), vec![1, 5]);
        assert!([0, 2, 3, 4].iter().all(|&i| b.classes[i].len() == 1));
        assert_eq!(b.union().len(), 6);
        assert!(b.is_valid(&g));
    }

    #[test]
    fn buoy_as_proper_module() {
        // C5 joined to an apex: (P5, House)-free, and the apex fits no class.
        let g = Graph::cycle(5).join(&Graph::empty(1));
        assert!(is_free(&g, &P5_HOUSE_BULL));
        let b = find_buoy(&g, &c5_match(&g)).unwrap();
        let union = b.union();
        assert_eq!(union.to_vec(), vec![0, 1, 2, 3, 4]);
        assert!(is_module(&g, &union));
        assert!(b.is_valid(&g));
    }

    #[test]
    fn buoy_precondition_errors() {
        let g = Graph::cycle(5).disjoint_union(&Graph::empty(1));
        assert_eq!(
            find_buoy(&g, &c5_match(&g)),
            Err(StructureError::NotConnected)
        );

        // C5 plus a pendant vertex creates a P5.
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        assert!(matches!(
            find_buoy(&g, &c5_match(&g)),
            Err(StructureError::ClassViolation(PatternMatch {
                pattern: Pattern::P5,
                ..
            }))
        ));

        let g = Graph::cycle(5);
        let wrong = PatternMatch {
            pattern: Pattern::C5,
            vertices: vec![0, 2, 1, 3, 4],
        };
        assert!(matches!(
            find_buoy(&g, &wrong),
            Err(StructureError::NotInducedC5(_))
        ));
    }

    #[test]
    fn classify_examples() {
        let r = classify_prime(&Graph::cycle(5)).unwrap();
        assert_eq!(r.conditions(), vec![Condition::C5Iso]);

        let h3 = make_halfgraph(3).unwrap();
        let r = classify_prime(&h3).unwrap();
        assert_eq!(r.conditions(), vec![Condition::BipartiteP5Free]);

        let r = classify_prime(&Graph::path(4)).unwrap();
        assert_eq!(
            r.conditions(),
            vec![Condition::BipartiteP5Free, Condition::CobipartiteP5Free]
        );

        let bull = Pattern::Bull.graph();
        let r = classify_prime(&bull).unwrap();
        assert!(r.is_empty());
        assert_eq!(r.forbidden.as_ref().unwrap().pattern, Pattern::Bull);
        assert!(r.forbidden.unwrap().validate(&bull));

        assert_eq!(
            classify_prime(&Graph::cycle(4)),
            Err(StructureError::NotPrime)
        );
    }

    #[test]
    fn witnesses_validate() {
        for g in [Graph::cycle(5), Graph::path(4), make_halfgraph(4).unwrap()] {
            let r = classify_prime(&g).unwrap();
            assert!(r.witnesses.iter().all(|w| w.validate(&g)));
        }
    }

    #[test]
    fn p4_form() {
        // P4 as the path 3 - 0 - 2 - 1, i.e. w2 - b1 - w1 - b2
        let p4 = Graph::new(4, [(3, 0), (0, 2), (2, 1)]).unwrap();
        let f = recognize_halfgraph(&p4).unwrap();
        assert_eq!(f.k, 2);
        assert_eq!(f.b_order, vec![0, 1]);
        assert_eq!(f.w_order, vec![2, 3]);
        assert_eq!(standard_form(2).unwrap(), f);
    }

    #[test]
    fn non_halfgraphs() {
        assert_eq!(recognize_halfgraph(&Graph::cycle(4)), None);
        assert_eq!(recognize_halfgraph(&Graph::path(5)), None);
        assert_eq!(recognize_halfgraph(&Graph::path(6)), None);
        assert_eq!(recognize_halfgraph(&Graph::complete(2)), None);
    }

    #[test]
    fn staircase_sizes() {
        assert_eq!(
            make_halfgraph(2).unwrap(),
            Graph::new(4, [(0, 2), (0, 3), (1, 2)]).unwrap()
        );
        assert!(make_halfgraph(2)
            .unwrap()
            .is_isomorphic(&Graph::path(4))
            .unwrap());
        assert_eq!(make_halfgraph(3).unwrap().edge_count(), 6);
        let h5 = make_halfgraph(5).unwrap();
        assert_eq!(h5.order(), 10);
        assert_eq!(h5.edge_count(), 15);
        let degs: Vec<_> = (0..10).map(|v| h5.degree(v)).collect();
        assert_eq!(degs, vec![5, 4, 3, 2, 1, 5, 4, 3, 2, 1]);
        assert_eq!(make_halfgraph(1), Err(StructureError::HalfGraphTooSmall(1)));
        assert_eq!(make_halfgraph(0), Err(StructureError::HalfGraphTooSmall(0)));
    }

    #[test]
    fn recognizer_round_trip() {
        for k in 2..=12 {
            let g = make_halfgraph(k).unwrap();
            assert_eq!(recognize_halfgraph(&g), Some(standard_form(k).unwrap()));
        }
    }

    #[test]
    fn c5_or_c5_free() {
        assert!(is_c5_or_c5_free(&Graph::cycle(5)));
        assert!(is_c5_or_c5_free(&Graph::path(4)));
        assert!(!is_c5_or_c5_free(&c5_with_twin()));
    }
}
