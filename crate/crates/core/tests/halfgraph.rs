use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seidel_core::formats::to_graph6;
use seidel_core::graph::Graph;
use seidel_core::halfgraph_fast::HalfGraphDescriptor;
use seidel_core::seidel::seidel_complement;
use seidel_core::structure::{make_halfgraph, recognize_halfgraph};

/// Inverts pairs between N(v) and the non-neighbors of v, pair by pair.
fn naive_move(g: &Graph, v: usize) -> Graph {
    let n = g.order();
    let mut edges = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let side = |z: usize| {
                if z == v {
                    0
                } else if g.has_edge(v, z) {
                    1
                } else {
                    2
                }
            };
            let flip = (side(x), side(y)) == (1, 2) || (side(x), side(y)) == (2, 1);
            if g.has_edge(x, y) != flip {
                edges.push((x, y));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

#[test]
fn random_sequences_match_naive_fold() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 2..=12 {
        for complemented in [false, true] {
            let mut g = make_halfgraph(k).unwrap();
            if complemented {
                g = g.complement();
            }
            let mut d = HalfGraphDescriptor::from_graph(&g).unwrap();
            // the complement of P4 is P4 itself
            assert_eq!(d.is_complemented(), complemented && k > 2);
            let complemented = d.is_complemented();
            for _ in 0..60 {
                let x = rng.gen_range(0..2 * k);
                d.seidel_move(x).unwrap();
                g = naive_move(&g, x);
                assert_eq!(d.materialize(), g);
                let base = if complemented {
                    g.complement()
                } else {
                    g.clone()
                };
                let form = d.implied_form().unwrap();
                assert!(form.describes(&base));
                assert!(recognize_halfgraph(&base).is_some());
                if 2 * k <= 10 {
                    assert!(base.is_isomorphic(&make_halfgraph(k).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn moves_on_either_side_agree_with_operator() {
    for k in 2..=10 {
        let h = make_halfgraph(k).unwrap();
        let d = HalfGraphDescriptor::from_graph(&h).unwrap();
        for x in 0..2 * k {
            let mut e = d.clone();
            e.seidel_move(x).unwrap();
            assert_eq!(
                e.materialize(),
                seidel_complement(&h, x).unwrap(),
                "k={k} x={x}"
            );
        }
    }
}

/// Every labeling of the staircase is reachable, so a descriptor that tracks
/// arbitrary move sequences needs more than a constant number of words.
#[test]
fn all_labelings_are_reachable() {
    for (k, expected) in [(2usize, 12usize), (3, 360)] {
        let start = make_halfgraph(k).unwrap();
        let mut seen = BTreeSet::from([to_graph6(&start)]);
        let mut queue = VecDeque::from([start]);
        while let Some(g) = queue.pop_front() {
            for v in 0..2 * k {
                let h = seidel_complement(&g, v).unwrap();
                if seen.insert(to_graph6(&h)) {
                    queue.push_back(h);
                }
            }
        }
        assert_eq!(seen.len(), expected);
    }
}
