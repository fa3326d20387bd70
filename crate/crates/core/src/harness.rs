//! Exhaustive and sampled verification of the structural results over small
//! graph spaces, with replayable counterexamples.
//!
//! Every check runs against a [`SeidelOperator`], so the same suite can be
//! pointed at a deliberately broken operator to confirm it is not vacuous.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{GraphError, HarnessError};
use crate::formats::{from_graph6, to_graph6};
use crate::graph::{CanonicalCode, Graph, MAX_CANONICAL_ORDER};
use crate::halfgraph_fast::HalfGraphDescriptor;
use crate::modular::{is_module, is_prime};
use crate::recognition::{
    find_all_induced, find_any, is_cograph, Pattern, P5_HOUSE, P5_HOUSE_BULL,
};
use crate::seidel::{classify_edges, seidel_complement, seidel_from_classes};
use crate::structure::{
    classify_prime, find_buoy, is_c5_or_c5_free, make_halfgraph, recognize_halfgraph,
};

/// Largest order for exhaustive labeled enumeration.
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;
/// Largest order for which isomorphism classes are generated.
pub const MAX_CLASS_ORDER: usize = 8;
/// Counterexamples kept in a report; the total is always counted.
pub const DEFAULT_MAX_COUNTEREXAMPLES: usize = 100;

/// Graph built from a bitmask over the pairs in column order
/// `(0,1), (0,2), (1,2), (0,3), ...`; bit `t` of `mask` is pair `t`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if (mask >> t) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            t += 1;
        }
    }
    g
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, in mask order.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(HarnessError::SpaceTooLarge {
            order: n,
            max: MAX_EXHAUSTIVE_ORDER,
        });
    }
    Ok((0..1u64 << pair_count(n)).map(move |m| graph_from_mask(n, m)))
}

/// Keeps the first graph of each isomorphism class, in stream order.
pub fn dedup_by_isomorphism<I>(graphs: I) -> Result<Vec<Graph>, HarnessError>
where
    I: IntoIterator<Item = Graph>,
{
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in graphs {
        if seen.insert(g.canonical_code()?) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Canonical representatives of every isomorphism class on `n` vertices,
/// sorted by canonical code. Built by extending the classes on `n - 1`
/// vertices with every possible neighborhood for a new vertex.
pub fn isomorphism_classes(n: usize) -> Result<&'static [Graph], HarnessError> {
    static CACHE: [OnceLock<Vec<Graph>>; MAX_CLASS_ORDER + 1] =
        [const { OnceLock::new() }; MAX_CLASS_ORDER + 1];
    if n > MAX_CLASS_ORDER {
        return Err(HarnessError::SpaceTooLarge {
            order: n,
            max: MAX_CLASS_ORDER,
        });
    }
    if let Some(v) = CACHE[n].get() {
        return Ok(v);
    }
    let classes = if n == 0 {
        vec![Graph::empty(0)]
    } else {
        let smaller = isomorphism_classes(n - 1)?;
        let codes: BTreeSet<CanonicalCode> = smaller
            .par_iter()
            .flat_map_iter(|h| {
                (0..1u64 << (n - 1)).map(move |mask| {
                    let mut g = h.disjoint_union(&Graph::empty(1));
                    for u in 0..n - 1 {
                        if (mask >> u) & 1 == 1 {
                            g.set_edge(u, n - 1, true);
                        }
                    }
                    g.canonical_code().expect("order within canonical limit")
                })
            })
            .collect();
        codes.into_iter().map(|c| c.to_graph()).collect()
    };
    Ok(CACHE[n].get_or_init(|| classes))
}

/// Sampled graph `index` for `seed`: each pair present with probability 1/2,
/// from a ChaCha stream keyed by `(seed, index)`.
pub fn sampled_graph(n: usize, seed: u64, index: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen::<bool>() {
                g.set_edge(i, j, true);
            }
        }
    }
    g
}

/// Bipartite graph number `index` of [`GraphSpace::Bipartite`].
fn bipartite_graph(n: usize, index: u64) -> Graph {
    let mut rest = index;
    for a in 1..=n / 2 {
        let bits = a * (n - a);
        if rest < 1u64 << bits {
            let mut g = Graph::empty(n);
            for i in 0..a {
                for j in 0..n - a {
                    if (rest >> (i * (n - a) + j)) & 1 == 1 {
                        g.set_edge(i, a + j, true);
                    }
                }
            }
            return g;
        }
        rest -= 1u64 << bits;
    }
    unreachable!("index beyond the bipartite space")
}

/// A family of graphs to check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GraphSpace {
    /// Every labeled graph on `n` vertices.
    Exhaustive { n: usize },
    /// `count` graphs from [`sampled_graph`].
    Sampled { n: usize, count: u64, seed: u64 },
    /// One canonical graph per isomorphism class.
    Classes { n: usize },
    /// Every bipartite graph with color classes `{0..a}` and `{a..n}`,
    /// `1 <= a <= n/2`; covers all bipartite graphs up to isomorphism.
    Bipartite { n: usize },
}

impl GraphSpace {
    pub fn order(&self) -> usize {
        match *self {
            GraphSpace::Exhaustive { n }
            | GraphSpace::Sampled { n, .. }
            | GraphSpace::Classes { n }
            | GraphSpace::Bipartite { n } => n,
        }
    }

    pub fn description(&self) -> String {
        match self {
            GraphSpace::Exhaustive { n } => format!("EXHAUSTIVE({n})"),
            GraphSpace::Sampled { n, count, seed } => format!("SAMPLED({n}, {count}, {seed})"),
            GraphSpace::Classes { n } => format!("CLASSES({n})"),
            GraphSpace::Bipartite { n } => format!("BIPARTITE({n})"),
        }
    }

    fn prepare(&self) -> Result<Prepared, HarnessError> {
        Ok(match *self {
            GraphSpace::Exhaustive { n } => {
                if n > MAX_EXHAUSTIVE_ORDER {
                    return Err(HarnessError::SpaceTooLarge {
                        order: n,
                        max: MAX_EXHAUSTIVE_ORDER,
                    });
                }
                Prepared::Masks {
                    n,
                    len: 1u64 << pair_count(n),
                }
            }
            GraphSpace::Sampled { n, count, seed } => Prepared::Sampled { n, count, seed },
            GraphSpace::Classes { n } => Prepared::List(isomorphism_classes(n)?),
            GraphSpace::Bipartite { n } => {
                if n > 12 {
                    return Err(HarnessError::SpaceTooLarge { order: n, max: 12 });
                }
                let len = (1..=n / 2).map(|a| 1u64 << (a * (n - a))).sum();
                Prepared::Bipartite { n, len }
            }
        })
    }
}

impl fmt::Display for GraphSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description())
    }
}

enum Prepared {
    Masks { n: usize, len: u64 },
    Sampled { n: usize, count: u64, seed: u64 },
    List(&'static [Graph]),
    Bipartite { n: usize, len: u64 },
}

impl Prepared {
    fn len(&self) -> u64 {
        match *self {
            Prepared::Masks { len, .. } | Prepared::Bipartite { len, .. } => len,
            Prepared::Sampled { count, .. } => count,
            Prepared::List(v) => v.len() as u64,
        }
    }

    fn get(&self, i: u64) -> Graph {
        match *self {
            Prepared::Masks { n, .. } => graph_from_mask(n, i),
            Prepared::Sampled { n, seed, .. } => sampled_graph(n, seed, i),
            Prepared::List(v) => v[i as usize].clone(),
            Prepared::Bipartite { n, .. } => bipartite_graph(n, i),
        }
    }
}

/// Seeded faults for checking that the properties have teeth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Forget to add the created cross edges.
    DropCreated,
    /// Keep an inside edge only when its larger endpoint is a neighbor of the
    /// pivot, which drops the pivot's edges to smaller-labeled neighbors.
    AsymmetricInside,
}

impl FromStr for Mutation {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "drop-e3" | "drop-created" => Ok(Mutation::DropCreated),
            "asymmetric-e1" | "asymmetric-inside" => Ok(Mutation::AsymmetricInside),
            _ => Err(HarnessError::UnknownMutation(s.into())),
        }
    }
}

/// Which implementation of `G * v` a check exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeidelOperator {
    /// Row XOR over the cross rectangle.
    #[default]
    Bitwise,
    /// Classify the pairs, then rebuild.
    Classified,
    Mutant(Mutation),
}

impl SeidelOperator {
    pub fn apply(self, g: &Graph, v: usize) -> Result<Graph, GraphError> {
        match self {
            SeidelOperator::Bitwise => seidel_complement(g, v),
            SeidelOperator::Classified => {
                Ok(seidel_from_classes(g.order(), &classify_edges(g, v)?))
            }
            SeidelOperator::Mutant(Mutation::DropCreated) => {
                let mut c = classify_edges(g, v)?;
                c.created.clear();
                Ok(seidel_from_classes(g.order(), &c))
            }
            SeidelOperator::Mutant(Mutation::AsymmetricInside) => {
                let mut c = classify_edges(g, v)?;
                let open = g.neighborhood(v)?;
                c.kept_inside.retain(|&(_, y)| open.contains(y));
                Ok(seidel_from_classes(g.order(), &c))
            }
        }
    }

    pub fn name(self) -> String {
        match self {
            SeidelOperator::Bitwise => "bitwise".into(),
            SeidelOperator::Classified => "classified".into(),
            SeidelOperator::Mutant(Mutation::DropCreated) => "mutant:drop-e3".into(),
            SeidelOperator::Mutant(Mutation::AsymmetricInside) => "mutant:asymmetric-e1".into(),
        }
    }
}

/// The registered checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Property {
    /// `(G * v) * v = G`.
    Involution,
    /// `complement(G * v) = complement(G) * v`.
    ComplementCommute,
    /// `N(v)` is the same in `G` and `G * v`.
    NeighborhoodFixpoint,
    /// `G` is `(P5, House, Bull)`-free iff every `G * v` is.
    Thm1Closure,
    /// Cographs stay cographs.
    CographClosure,
    /// `G` is prime iff `G * v` is.
    PrimePreserve,
    /// Prime `(P5, House)`-free graphs are `C5` or `C5`-free.
    Cor1,
    /// A prime graph is `(P5, House, Bull)`-free iff its class report is nonempty.
    Thm3Iff,
    /// Prime `P5`-free bipartite graphs are the staircase, and the recognizer agrees.
    Prop1Unique,
    /// Descriptor moves agree with the operator.
    Prop2Equiv,
    /// Every induced `C5` of a connected `(P5, House)`-free graph lies in a
    /// buoy that is the whole graph or a module.
    BuoyDichotomy,
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::Involution,
        Property::ComplementCommute,
        Property::NeighborhoodFixpoint,
        Property::Thm1Closure,
        Property::CographClosure,
        Property::PrimePreserve,
        Property::Cor1,
        Property::Thm3Iff,
        Property::Prop1Unique,
        Property::Prop2Equiv,
        Property::BuoyDichotomy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Involution => "INVOLUTION",
            Property::ComplementCommute => "COMPLEMENT_COMMUTE",
            Property::NeighborhoodFixpoint => "NEIGHBORHOOD_FIXPOINT",
            Property::Thm1Closure => "THM1_CLOSURE",
            Property::CographClosure => "COGRAPH_CLOSURE",
            Property::PrimePreserve => "PRIME_PRESERVE",
            Property::Cor1 => "COR1",
            Property::Thm3Iff => "THM3_IFF",
            Property::Prop1Unique => "PROP1_UNIQUE",
            Property::Prop2Equiv => "PROP2_EQUIV",
            Property::BuoyDichotomy => "BUOY_DICHOTOMY",
        }
    }

    /// True for checks whose outcome depends on the Seidel operator.
    pub fn uses_operator(self) -> bool {
        matches!(
            self,
            Property::Involution
                | Property::ComplementCommute
                | Property::NeighborhoodFixpoint
                | Property::Thm1Closure
                | Property::CographClosure
                | Property::PrimePreserve
                | Property::Prop2Equiv
        )
    }

    /// Checks one graph. Returns whether the property applied and its failures.
    pub fn check(self, g: &Graph, op: SeidelOperator) -> Outcome {
        let mut out = Outcome {
            applicable: true,
            failures: Vec::new(),
        };
        let star = |v: usize| op.apply(g, v).expect("vertex in range");
        let n = g.order();
        match self {
            Property::Involution => {
                for v in 0..n {
                    let back = op.apply(&star(v), v).expect("vertex in range");
                    if back != *g {
                        out.fail(Some(v), format!("(G*v)*v = {}", to_graph6(&back)));
                    }
                }
            }
            Property::ComplementCommute => {
                let co = g.complement();
                for v in 0..n {
                    let a = star(v).complement();
                    let b = op.apply(&co, v).expect("vertex in range");
                    if a != b {
                        out.fail(
                            Some(v),
                            format!("co(G*v) = {}, co(G)*v = {}", to_graph6(&a), to_graph6(&b)),
                        );
                    }
                }
            }
            Property::NeighborhoodFixpoint => {
                for v in 0..n {
                    let h = star(v);
                    if h.neighborhood(v) != g.neighborhood(v) {
                        out.fail(
                            Some(v),
                            format!("N(v) changed: {:?}", h.neighborhood(v).unwrap()),
                        );
                    }
                }
            }
            Property::Thm1Closure => {
                let here = find_any(g, &P5_HOUSE_BULL);
                let mut all_free = true;
                for v in 0..n {
                    let there = find_any(&star(v), &P5_HOUSE_BULL);
                    if let (None, Some(w)) = (&here, &there) {
                        out.fail(
                            Some(v),
                            format!(
                                "G is free but G*v contains {} at {:?}",
                                w.pattern, w.vertices
                            ),
                        );
                    }
                    all_free &= there.is_none();
                }
                if let (Some(w), true, true) = (&here, all_free, n > 0) {
                    out.fail(
                        None,
                        format!(
                            "every G*v is free but G contains {} at {:?}",
                            w.pattern, w.vertices
                        ),
                    );
                }
            }
            Property::CographClosure => {
                out.applicable = is_cograph(g);
                if out.applicable {
                    for v in 0..n {
                        if !is_cograph(&star(v)) {
                            out.fail(Some(v), "G*v is not a cograph".into());
                        }
                    }
                }
            }
            Property::PrimePreserve => {
                let prime = is_prime(g);
                for v in 0..n {
                    if is_prime(&star(v)) != prime {
                        out.fail(
                            Some(v),
                            format!("prime(G) = {prime} but prime(G*v) = {}", !prime),
                        );
                    }
                }
            }
            Property::Cor1 => {
                out.applicable = is_prime(g) && find_any(g, &P5_HOUSE).is_none();
                if out.applicable && !is_c5_or_c5_free(g) {
                    out.fail(
                        None,
                        "prime (P5, House)-free graph with an induced C5 that is not C5".into(),
                    );
                }
            }
            Property::Thm3Iff => {
                out.applicable = is_prime(g);
                if out.applicable {
                    check_class_report(g, &mut out);
                }
            }
            Property::Prop1Unique => check_staircase_uniqueness(g, &mut out),
            Property::Prop2Equiv => match HalfGraphDescriptor::from_graph(g) {
                None => out.applicable = false,
                Some(d) => {
                    for v in 0..n {
                        let mut moved = d.clone();
                        moved.seidel_move(v).expect("vertex in range");
                        check_moved_descriptor(&moved, &star(v), Some(v), &mut out);
                    }
                }
            },
            Property::BuoyDichotomy => check_buoys(g, &mut out),
        }
        out
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| HarnessError::UnknownProperty(s.into()))
    }
}

fn check_class_report(g: &Graph, out: &mut Outcome) {
    let free = find_any(g, &P5_HOUSE_BULL).is_none();
    let report = classify_prime(g).expect("graph is prime");
    if free == report.is_empty() {
        out.fail(
            None,
            format!("free = {free} but conditions = {:?}", report.conditions()),
        );
    }
    for w in &report.witnesses {
        if !w.validate(g) {
            out.fail(
                None,
                format!("witness for {:?} does not validate", w.condition()),
            );
        }
    }
    if let Some(f) = &report.forbidden {
        if !f.validate(g) {
            out.fail(
                None,
                format!("forbidden {} witness does not validate", f.pattern),
            );
        }
    }
    if report.is_empty() && report.forbidden.is_none() {
        out.fail(None, "empty report without a forbidden witness".into());
    }
}

fn check_staircase_uniqueness(g: &Graph, out: &mut Outcome) {
    let n = g.order();
    let member = is_prime(g) && g.is_bipartite() && find_any(g, &[Pattern::P5]).is_none();
    let recognized = recognize_halfgraph(g);
    out.applicable = member || recognized.is_some();
    if !out.applicable {
        return;
    }
    if member != recognized.is_some() {
        out.fail(
            None,
            format!(
                "class membership {member} but recognizer {}",
                recognized.is_some()
            ),
        );
    }
    if let Some(form) = &recognized {
        if !form.describes(g) {
            out.fail(None, "recognized form does not describe the graph".into());
        }
    }
    if member && n <= MAX_CANONICAL_ORDER {
        let iso = n.is_multiple_of(2)
            && make_halfgraph(n / 2)
                .map(|h| h.is_isomorphic(g).unwrap_or(false))
                .unwrap_or(false);
        if !iso {
            out.fail(
                None,
                "prime P5-free bipartite graph is not the staircase".into(),
            );
        }
    }
}

fn check_moved_descriptor(
    d: &HalfGraphDescriptor,
    expected: &Graph,
    v: Option<usize>,
    out: &mut Outcome,
) {
    let got = d.materialize();
    if got != *expected {
        out.fail(
            v,
            format!(
                "descriptor gives {}, operator gives {}",
                to_graph6(&got),
                to_graph6(expected)
            ),
        );
        return;
    }
    let base = if d.is_complemented() {
        got.complement()
    } else {
        got
    };
    match d.implied_form() {
        Ok(form) if form.describes(&base) && recognize_halfgraph(&base).is_some() => {}
        _ => out.fail(v, "moved descriptor is not a recognized half-graph".into()),
    }
}

fn check_buoys(g: &Graph, out: &mut Outcome) {
    out.applicable = g.is_connected() && find_any(g, &P5_HOUSE).is_none();
    if !out.applicable {
        return;
    }
    let mut seen = BTreeSet::new();
    let starts: Vec<_> = find_all_induced(g, Pattern::C5)
        .into_iter()
        .filter(|m| {
            let mut key = m.vertices.clone();
            key.sort_unstable();
            seen.insert(key)
        })
        .collect();
    out.applicable = !starts.is_empty();
    for start in starts {
        match find_buoy(g, &start) {
            Err(e) => out.fail(None, format!("C5 {:?}: {e}", start.vertices)),
            Ok(b) => {
                let union = b.union();
                let sound = b.is_valid(g)
                    && start
                        .vertices
                        .iter()
                        .enumerate()
                        .all(|(i, &v)| b.classes[i].contains(v))
                    && (union.len() == g.order() || is_module(g, &union));
                if !sound {
                    out.fail(
                        None,
                        format!("C5 {:?}: invalid buoy {:?}", start.vertices, b.classes),
                    );
                }
            }
        }
    }
}

/// Result of checking one graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub applicable: bool,
    pub failures: Vec<(Option<usize>, String)>,
}

impl Outcome {
    fn fail(&mut self, vertex: Option<usize>, detail: String) {
        self.failures.push((vertex, detail));
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub property: String,
    pub space: String,
    pub operator: String,
    pub graphs_checked: u64,
    pub graphs_applicable: u64,
    pub violations: u64,
    /// The first violations in sorted order, at most the configured cap.
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    /// Drops the timing so reports can be compared byte for byte.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub operator: SeidelOperator,
    pub parallel: bool,
    pub max_counterexamples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            operator: SeidelOperator::default(),
            parallel: true,
            max_counterexamples: DEFAULT_MAX_COUNTEREXAMPLES,
        }
    }
}

struct Tally {
    checked: u64,
    applicable: u64,
    violations: u64,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn empty() -> Self {
        Tally {
            checked: 0,
            applicable: 0,
            violations: 0,
            counterexamples: Vec::new(),
        }
    }

    fn merge(mut self, other: Tally, cap: usize) -> Tally {
        self.checked += other.checked;
        self.applicable += other.applicable;
        self.violations += other.violations;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort();
        self.counterexamples.truncate(cap);
        self
    }

    fn record(&mut self, g: &Graph, outcome: Outcome, cap: usize) {
        self.checked += 1;
        self.applicable += outcome.applicable as u64;
        if outcome.failures.is_empty() {
            return;
        }
        let graph6 = to_graph6(g);
        for (vertex, detail) in outcome.failures {
            self.violations += 1;
            self.counterexamples.push(Counterexample {
                graph6: graph6.clone(),
                vertex,
                detail,
            });
        }
        if self.counterexamples.len() > 4 * cap.max(1) {
            self.counterexamples.sort();
            self.counterexamples.truncate(cap);
        }
    }

    fn into_report(
        mut self,
        property: String,
        space: String,
        op: SeidelOperator,
        cap: usize,
        start: Instant,
    ) -> VerificationReport {
        self.counterexamples.sort();
        self.counterexamples.truncate(cap);
        VerificationReport {
            schema: "v1",
            property,
            space,
            operator: op.name(),
            graphs_checked: self.checked,
            graphs_applicable: self.applicable,
            violations: self.violations,
            counterexamples: self.counterexamples,
            elapsed_ms: Some(start.elapsed().as_secs_f64() * 1e3),
        }
    }
}

/// Runs `property` over every graph of `space`.
pub fn verify(
    property: Property,
    space: &GraphSpace,
    opts: VerifyOptions,
) -> Result<VerificationReport, HarnessError> {
    let start = Instant::now();
    let prepared = space.prepare()?;
    let cap = opts.max_counterexamples;
    let check = |i: u64| {
        let g = prepared.get(i);
        let mut t = Tally::empty();
        let outcome = property.check(&g, opts.operator);
        t.record(&g, outcome, cap);
        t
    };
    let tally = if opts.parallel {
        (0..prepared.len())
            .into_par_iter()
            .fold(Tally::empty, |acc, i| acc.merge(check(i), cap))
            .reduce(Tally::empty, |a, b| a.merge(b, cap))
    } else {
        (0..prepared.len()).fold(Tally::empty(), |acc, i| acc.merge(check(i), cap))
    };
    Ok(tally.into_report(
        property.name().into(),
        space.description(),
        opts.operator,
        cap,
        start,
    ))
}

/// Re-parses a counterexample and checks whether the same failure recurs.
pub fn recheck(
    property: Property,
    cx: &Counterexample,
    op: SeidelOperator,
) -> Result<bool, HarnessError> {
    let g = from_graph6(&cx.graph6)
        .map_err(|_| HarnessError::UnknownProperty(format!("bad graph6 `{}`", cx.graph6)))?;
    let outcome = property.check(&g, op);
    Ok(outcome.failures.iter().any(|(v, _)| *v == cx.vertex))
}

/// One move at every vertex of every staircase with `2 <= k <= k_max`,
/// compared against `op`.
pub fn verify_staircase_moves(k_max: usize, opts: VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let cap = opts.max_counterexamples;
    let run = |k: usize| {
        let g = make_halfgraph(k).expect("k >= 2");
        let d = HalfGraphDescriptor::from_graph(&g).expect("staircase is a half-graph");
        let mut t = Tally::empty();
        for x in 0..2 * k {
            let mut moved = d.clone();
            moved.seidel_move(x).expect("vertex in range");
            let mut out = Outcome {
                applicable: true,
                failures: Vec::new(),
            };
            check_moved_descriptor(
                &moved,
                &opts.operator.apply(&g, x).expect("in range"),
                Some(x),
                &mut out,
            );
            t.record(&g, out, cap);
        }
        t
    };
    let tally = if opts.parallel {
        (2..=k_max)
            .into_par_iter()
            .map(run)
            .reduce(Tally::empty, |a, b| a.merge(b, cap))
    } else {
        (2..=k_max)
            .map(run)
            .fold(Tally::empty(), |a, b| a.merge(b, cap))
    };
    tally.into_report(
        Property::Prop2Equiv.name().into(),
        format!("STAIRCASE(2..={k_max}, all vertices)"),
        opts.operator,
        cap,
        start,
    )
}

/// `count` seeded random move sequences of length `len` on the staircase
/// `H_k`, comparing descriptor and operator after every move. Sequence `s`
/// draws its vertices from the ChaCha stream `(seed, s)`.
pub fn verify_move_sequences(
    k: usize,
    count: u64,
    len: usize,
    seed: u64,
    opts: VerifyOptions,
) -> VerificationReport {
    let start = Instant::now();
    let cap = opts.max_counterexamples;
    let h = make_halfgraph(k).expect("k >= 2");
    let base = HalfGraphDescriptor::from_graph(&h).expect("staircase is a half-graph");
    let run = |s: u64| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(s);
        let mut d = base.clone();
        let mut g = h.clone();
        let mut t = Tally::empty();
        let mut out = Outcome {
            applicable: true,
            failures: Vec::new(),
        };
        for step in 0..len {
            let x = rng.gen_range(0..2 * k);
            d.seidel_move(x).expect("vertex in range");
            g = opts.operator.apply(&g, x).expect("vertex in range");
            check_moved_descriptor(&d, &g, Some(x), &mut out);
            if !out.failures.is_empty() {
                let (v, detail) = out.failures.remove(0);
                out.failures = vec![(v, format!("sequence {s} step {step}: {detail}"))];
                break;
            }
        }
        t.record(&h, out, cap);
        t
    };
    let tally = if opts.parallel {
        (0..count)
            .into_par_iter()
            .map(run)
            .reduce(Tally::empty, |a, b| a.merge(b, cap))
    } else {
        (0..count)
            .map(run)
            .fold(Tally::empty(), |a, b| a.merge(b, cap))
    };
    tally.into_report(
        Property::Prop2Equiv.name().into(),
        format!("MOVE_SEQUENCES(k={k}, count={count}, len={len}, seed={seed})"),
        opts.operator,
        cap,
        start,
    )
}

/// Which vertices a benchmark moves at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoveWorkload {
    /// Uniform over all `2k` labels.
    Uniform,
    /// Uniform over a fixed random subset of this many labels.
    WorkingSet(usize),
}

impl fmt::Display for MoveWorkload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveWorkload::Uniform => f.write_str("uniform"),
            MoveWorkload::WorkingSet(m) => write!(f, "working-set-{m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub k: usize,
    pub workload: MoveWorkload,
    pub moves: usize,
    pub mean_ns: f64,
    /// 99th percentile of the per-move time over batches of [`BENCH_BATCH`] moves.
    pub p99_ns: f64,
}

/// Moves per timed batch; single moves are below timer resolution.
pub const BENCH_BATCH: usize = 64;

/// Times `moves` descriptor moves on `H_k`, without materializing.
pub fn bench_fastmove(k: usize, workload: MoveWorkload, moves: usize, seed: u64) -> BenchRow {
    let n = 2 * k;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<usize> = match workload {
        MoveWorkload::Uniform => Vec::new(),
        MoveWorkload::WorkingSet(m) => (0..m.max(1)).map(|_| rng.gen_range(0..n)).collect(),
    };
    let batches = moves.div_ceil(BENCH_BATCH).max(1);
    let seq: Vec<usize> = (0..batches * BENCH_BATCH)
        .map(|_| match workload {
            MoveWorkload::Uniform => rng.gen_range(0..n),
            MoveWorkload::WorkingSet(_) => pool[rng.gen_range(0..pool.len())],
        })
        .collect();
    let form = crate::structure::standard_form(k).expect("k >= 2");
    let mut d = HalfGraphDescriptor::from_form(&form);
    // warm-up pass over the same sequence
    for &x in &seq {
        d.seidel_move(x).expect("in range");
    }
    let mut per_move = Vec::with_capacity(batches);
    for chunk in seq.chunks(BENCH_BATCH) {
        let t = Instant::now();
        for &x in chunk {
            d.seidel_move(std::hint::black_box(x)).expect("in range");
        }
        per_move.push(t.elapsed().as_nanos() as f64 / chunk.len() as f64);
    }
    let mean_ns = per_move.iter().sum::<f64>() / per_move.len() as f64;
    std::hint::black_box(&d);
    per_move.sort_by(f64::total_cmp);
    let p99_ns = per_move[((per_move.len() * 99).div_ceil(100)).saturating_sub(1)];
    BenchRow {
        k,
        workload,
        moves: seq.len(),
        mean_ns,
        p99_ns,
    }
}

/// Runs [`bench_fastmove`] for every `k` in `rounds` interleaved rounds and
/// keeps, per `k`, the round with the median mean. Interleaving spreads clock
/// and scheduling drift over all sizes alike.
pub fn bench_fastmove_rounds(
    ks: &[usize],
    workload: MoveWorkload,
    moves: usize,
    seed: u64,
    rounds: usize,
) -> Vec<BenchRow> {
    let mut runs: Vec<Vec<BenchRow>> = vec![Vec::new(); ks.len()];
    for _ in 0..rounds.max(1) {
        for (i, &k) in ks.iter().enumerate() {
            runs[i].push(bench_fastmove(k, workload, moves, seed));
        }
    }
    runs.into_iter()
        .map(|mut rs| {
            rs.sort_by(|a, b| a.mean_ns.total_cmp(&b.mean_ns));
            rs.swap_remove(rs.len() / 2)
        })
        .collect()
}

/// CSV with header `k,mean_ns,p99_ns,workload`.
pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("k,mean_ns,p99_ns,workload\n");
    for r in rows {
        out.push_str(&format!(
            "{},{:.3},{:.3},{}\n",
            r.k, r.mean_ns, r.p99_ns, r.workload
        ));
    }
    out
}
