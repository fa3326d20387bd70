//! Cross-checks against deliberately naive reference implementations on
//! adjacency matrices.

use seidel_core::graph::{Graph, VertexSet};
use seidel_core::harness::{enumerate_labeled, isomorphism_classes};
use seidel_core::modular::{is_cograph_by_tree, is_module, is_prime, md_tree, MdNode};
use seidel_core::recognition::{find_induced, is_cograph, Pattern};
use seidel_core::seidel::{classify_edges, seidel_complement, seidel_from_classes};
use seidel_core::structure::{classify_prime, find_buoy, make_halfgraph, Condition};

type Mat = Vec<Vec<bool>>;

fn mat(g: &Graph) -> Mat {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

fn from_mat(m: &Mat) -> Graph {
    let n = m.len();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| m[u][v]);
    Graph::new(n, edges.collect::<Vec<_>>()).unwrap()
}

fn naive_seidel(m: &Mat, v: usize) -> Mat {
    let n = m.len();
    let inside = |x: usize| m[v][x];
    let outside = |x: usize| x != v && !m[v][x];
    let mut out = m.clone();
    for x in 0..n {
        for y in 0..n {
            if (inside(x) && outside(y)) || (outside(x) && inside(y)) {
                out[x][y] = !m[x][y];
            }
        }
    }
    out
}

fn naive_complement(m: &Mat) -> Mat {
    let n = m.len();
    (0..n)
        .map(|u| (0..n).map(|v| u != v && !m[u][v]).collect())
        .collect()
}

fn pattern_mat(p: Pattern) -> Mat {
    let edges: &[(usize, usize)] = match p {
        Pattern::P4 => &[(0, 1), (1, 2), (2, 3)],
        Pattern::P5 => &[(0, 1), (1, 2), (2, 3), (3, 4)],
        Pattern::C5 => &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
        Pattern::House => &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)],
        Pattern::Bull => &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)],
        Pattern::TwoK2 => &[(0, 1), (2, 3)],
    };
    let k = if matches!(p, Pattern::P4 | Pattern::TwoK2) {
        4
    } else {
        5
    };
    let mut m = vec![vec![false; k]; k];
    for &(a, b) in edges {
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

/// Lexicographically first injective tuple realizing `p` as an induced subgraph.
fn naive_induced(m: &Mat, p: &Mat) -> Option<Vec<usize>> {
    fn go(m: &Mat, p: &Mat, tuple: &mut Vec<usize>) -> bool {
        let i = tuple.len();
        if i == p.len() {
            return true;
        }
        for x in 0..m.len() {
            if tuple.contains(&x) {
                continue;
            }
            if (0..i).all(|j| m[x][tuple[j]] == p[i][j]) {
                tuple.push(x);
                if go(m, p, tuple) {
                    return true;
                }
                tuple.pop();
            }
        }
        false
    }
    let mut t = Vec::new();
    go(m, p, &mut t).then_some(t)
}

fn naive_is_module(m: &Mat, set: u32) -> bool {
    let n = m.len();
    (0..n).filter(|z| set >> z & 1 == 0).all(|z| {
        let seen: Vec<bool> = (0..n)
            .filter(|x| set >> x & 1 == 1)
            .map(|x| m[z][x])
            .collect();
        seen.iter().all(|&b| b) || seen.iter().all(|&b| !b)
    })
}

fn naive_prime(m: &Mat) -> bool {
    let n = m.len();
    n >= 4
        && (1u32..(1 << n) - 1)
            .filter(|s| s.count_ones() >= 2)
            .all(|s| !naive_is_module(m, s))
}

fn strong_modules(m: &Mat) -> Vec<u32> {
    let n = m.len();
    let modules: Vec<u32> = (1u32..1 << n).filter(|&s| naive_is_module(m, s)).collect();
    let overlap = |a: u32, b: u32| a & b != 0 && a & !b != 0 && b & !a != 0;
    let mut strong: Vec<u32> = modules
        .iter()
        .copied()
        .filter(|&a| modules.iter().all(|&b| !overlap(a, b)))
        .collect();
    strong.sort_unstable();
    strong
}

fn mask(s: &VertexSet) -> u32 {
    s.iter().map(|v| 1u32 << v).sum()
}

fn naive_bipartite(m: &Mat) -> bool {
    let n = m.len();
    (0u32..1 << n)
        .any(|c| (0..n).all(|u| (u + 1..n).all(|v| !m[u][v] || (c >> u & 1) != (c >> v & 1))))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest upper-triangle bitstring over all relabelings.
fn naive_canonical(m: &Mat, perms: &[Vec<usize>]) -> u64 {
    let n = m.len();
    perms
        .iter()
        .map(|p| {
            let mut bits = 0u64;
            for j in 1..n {
                for i in 0..j {
                    bits = bits << 1 | m[p[i]][p[j]] as u64;
                }
            }
            bits
        })
        .min()
        .unwrap_or(0)
}

fn small_graphs(max: usize) -> impl Iterator<Item = Graph> {
    (0..=max).flat_map(|n| enumerate_labeled(n).unwrap())
}

#[test]
fn seidel_matches_matrix_definition() {
    for g in small_graphs(6) {
        let m = mat(&g);
        for v in 0..g.order() {
            let expected = from_mat(&naive_seidel(&m, v));
            assert_eq!(seidel_complement(&g, v).unwrap(), expected);
            assert_eq!(
                seidel_from_classes(g.order(), &classify_edges(&g, v).unwrap()),
                expected
            );
            assert_eq!(from_mat(&naive_seidel(&naive_seidel(&m, v), v)), g);
            assert_eq!(
                naive_complement(&naive_seidel(&m, v)),
                naive_seidel(&naive_complement(&m), v)
            );
        }
    }
}

#[test]
fn edge_classes_partition_the_result() {
    for g in small_graphs(5) {
        for v in 0..g.order() {
            let c = classify_edges(&g, v).unwrap();
            let h = seidel_complement(&g, v).unwrap();
            for (x, y) in c
                .kept_inside
                .iter()
                .chain(&c.kept_outside)
                .chain(&c.created)
            {
                assert!(h.has_edge(*x, *y));
            }
            for (x, y) in &c.removed {
                assert!(g.has_edge(*x, *y) && !h.has_edge(*x, *y));
            }
            let count = c.kept_inside.len() + c.kept_outside.len() + c.created.len();
            assert_eq!(count, h.edge_count());
        }
    }
}

#[test]
fn induced_search_matches_brute_force() {
    let patterns: Vec<(Pattern, Mat)> = Pattern::ALL
        .into_iter()
        .map(|p| (p, pattern_mat(p)))
        .collect();
    let graphs = small_graphs(6).chain(isomorphism_classes(7).unwrap().iter().cloned());
    for g in graphs {
        let m = mat(&g);
        for (p, pm) in &patterns {
            assert_eq!(from_mat(pm), p.graph());
            let got = find_induced(&g, *p).map(|w| w.vertices);
            assert_eq!(
                got,
                naive_induced(&m, pm),
                "{p} in {:?}",
                g.edges().collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn house_in_g_is_p5_in_complement() {
    for g in small_graphs(6) {
        assert_eq!(
            find_induced(&g, Pattern::House).is_some(),
            find_induced(&g.complement(), Pattern::P5).is_some()
        );
    }
}

#[test]
fn cograph_three_ways() {
    let p4 = pattern_mat(Pattern::P4);
    for g in small_graphs(6) {
        let naive = naive_induced(&mat(&g), &p4).is_none();
        assert_eq!(is_cograph(&g), naive);
        assert_eq!(is_cograph_by_tree(&g), naive);
    }
}

#[test]
fn primality_and_modules_match_subsets() {
    for g in small_graphs(5) {
        let m = mat(&g);
        assert_eq!(is_prime(&g), naive_prime(&m));
        let n = g.order();
        for s in 0u32..1 << n {
            let set = VertexSet::from_members(n, (0..n).filter(|v| s >> v & 1 == 1));
            assert_eq!(is_module(&g, &set), s == 0 || naive_is_module(&m, s));
        }
    }
    for g in isomorphism_classes(6)
        .unwrap()
        .iter()
        .chain(isomorphism_classes(7).unwrap())
    {
        assert_eq!(is_prime(g), naive_prime(&mat(g)));
    }
}

#[test]
fn tree_nodes_are_the_strong_modules() {
    let check = |g: &Graph| {
        if g.order() == 0 {
            return;
        }
        let tree = md_tree(g).unwrap();
        let mut nodes = Vec::new();
        tree.walk(&mut |node: &MdNode| nodes.push(mask(&node.vertices)));
        nodes.sort_unstable();
        assert_eq!(nodes, strong_modules(&mat(g)));
        assert_eq!(tree.expand(g.order()), *g);
        tree.walk(&mut |node: &MdNode| {
            if let Some(q) = &node.quotient {
                assert!(is_prime(q));
            }
        });
    };
    small_graphs(5).for_each(|g| check(&g));
    isomorphism_classes(6).unwrap().iter().for_each(check);
}

#[test]
fn bipartition_matches_colorings() {
    for g in small_graphs(6) {
        let naive = naive_bipartite(&mat(&g));
        match g.bipartition() {
            Ok(b) => {
                assert!(naive);
                assert!(b.is_valid_for(&g));
            }
            Err(cycle) => {
                assert!(!naive);
                assert_eq!(cycle.len() % 2, 1);
                for i in 0..cycle.len() {
                    assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
            }
        }
    }
}

#[test]
fn canonical_codes_match_brute_force_partition() {
    for n in 0..=5 {
        let perms = permutations(n);
        let mut pairs = std::collections::BTreeMap::new();
        for g in enumerate_labeled(n).unwrap() {
            let naive = naive_canonical(&mat(&g), &perms);
            let code = g.canonical_code().unwrap();
            assert_eq!(*pairs.entry(naive).or_insert(code), code);
            assert_eq!(code.to_graph().canonical_code().unwrap(), code);
            assert!(code.to_graph().is_isomorphic(&g).unwrap());
        }
        let distinct: std::collections::BTreeSet<_> = pairs.values().collect();
        assert_eq!(distinct.len(), pairs.len());
        assert_eq!(pairs.len(), isomorphism_classes(n).unwrap().len());
    }
}

#[test]
fn known_class_counts() {
    // unlabeled graphs on n vertices: 1, 1, 2, 4, 11, 34, 156, 1044
    let counts: Vec<usize> = (0..=7)
        .map(|n| isomorphism_classes(n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn staircase_adjacency_formula() {
    for k in 2..=8 {
        let h = make_halfgraph(k).unwrap();
        for i in 1..=k {
            for j in 1..=k {
                assert_eq!(h.has_edge(i - 1, k + j - 1), i + j <= k + 1);
            }
        }
        for a in 0..k {
            for b in a + 1..k {
                assert!(!h.has_edge(a, b) && !h.has_edge(k + a, k + b));
            }
        }
    }
}

#[test]
fn class_report_matches_direct_definitions() {
    let c5 = pattern_mat(Pattern::C5);
    let p5 = pattern_mat(Pattern::P5);
    let perms5 = permutations(5);
    let c5_code = naive_canonical(&c5, &perms5);
    let graphs = small_graphs(6).chain(isomorphism_classes(7).unwrap().iter().cloned());
    for g in graphs.filter(is_prime) {
        let m = mat(&g);
        let co = naive_complement(&m);
        let mut expected = Vec::new();
        if g.order() == 5 && naive_canonical(&m, &perms5) == c5_code {
            expected.push(Condition::C5Iso);
        }
        if naive_bipartite(&m) && naive_induced(&m, &p5).is_none() {
            expected.push(Condition::BipartiteP5Free);
        }
        if naive_bipartite(&co) && naive_induced(&co, &p5).is_none() {
            expected.push(Condition::CobipartiteP5Free);
        }
        let report = classify_prime(&g).unwrap();
        assert_eq!(report.conditions(), expected);
        for w in &report.witnesses {
            assert!(w.validate(&g));
        }
    }
}

/// Largest buoy containing `cycle` as its five seeds: every other vertex is
/// tried in each class or left out, keeping the assignments that satisfy the
/// circular adjacency rules.
fn naive_largest_buoy(m: &Mat, cycle: &[usize]) -> Vec<u32> {
    let n = m.len();
    let rest: Vec<usize> = (0..n).filter(|v| !cycle.contains(v)).collect();
    let mut best: Option<Vec<u32>> = None;
    let total = 6usize.pow(rest.len() as u32);
    for code in 0..total {
        let mut class = vec![usize::MAX; n];
        for (i, &v) in cycle.iter().enumerate() {
            class[v] = i;
        }
        let mut c = code;
        for &v in &rest {
            let a = c % 6;
            c /= 6;
            if a < 5 {
                class[v] = a;
            }
        }
        let ok = (0..n).all(|u| {
            (0..n).all(|v| {
                if u == v || class[u] == usize::MAX || class[v] == usize::MAX {
                    return true;
                }
                match (class[u] + 5 - class[v]) % 5 {
                    0 => true,
                    1 | 4 => m[u][v],
                    _ => !m[u][v],
                }
            })
        });
        if ok {
            let classes: Vec<u32> = (0..5)
                .map(|i| (0..n).filter(|&v| class[v] == i).map(|v| 1u32 << v).sum())
                .collect();
            let size = |cl: &Vec<u32>| cl.iter().map(|c| c.count_ones()).sum::<u32>();
            if best.as_ref().is_none_or(|b| size(&classes) > size(b)) {
                best = Some(classes);
            }
        }
    }
    best.unwrap()
}

#[test]
fn buoys_are_the_largest_circular_partitions() {
    let c5 = pattern_mat(Pattern::C5);
    let p5 = pattern_mat(Pattern::P5);
    let house = pattern_mat(Pattern::House);
    let mut seen = 0;
    let graphs = small_graphs(6).chain(isomorphism_classes(7).unwrap().iter().cloned());
    for g in graphs.filter(|g| g.is_connected()) {
        let m = mat(&g);
        if naive_induced(&m, &p5).is_some() || naive_induced(&m, &house).is_some() {
            continue;
        }
        let Some(cycle) = naive_induced(&m, &c5) else {
            continue;
        };
        seen += 1;
        let start = find_induced(&g, Pattern::C5).unwrap();
        assert_eq!(start.vertices, cycle);
        let buoy = find_buoy(&g, &start).unwrap();
        let got: Vec<u32> = buoy.classes.iter().map(mask).collect();
        assert_eq!(got, naive_largest_buoy(&m, &cycle));
        let union = buoy.union();
        assert!(union.len() == g.order() || naive_is_module(&m, mask(&union)));
    }
    assert!(seen > 0);
}
