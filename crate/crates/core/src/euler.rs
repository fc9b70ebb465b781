//! 4-regular multigraphs and two-in two-out digraphs as dart structures,
//! transition systems, Eulerian circuits, and the Martin polynomials.
//!
//! Vertex `v` owns darts `4v .. 4v+3`. `mate` is the fixed-point-free
//! involution pairing the two darts of each edge, so loops and parallel
//! edges need no special casing. A transition at `v` is one of the three
//! perfect pairings of its darts, numbered by [`PAIRINGS`].
//!
//! A circuit is stored as the cyclic sequence of its *departure* darts: the
//! walk leaves a vertex along `d`, arrives at `mate[d]`, and leaves again
//! along the next departure dart.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::poly::IntPoly1;

/// Partner of each local dart (0..4) under the three pairings
/// `{01|23}`, `{02|13}`, `{03|12}`.
pub const PAIRINGS: [[usize; 4]; 3] = [[1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];

/// Largest host accepted by the exhaustive enumerations.
pub const MAX_HOST_VERTICES: usize = 14;

#[inline]
fn vertex_of(d: usize) -> usize {
    d / 4
}

/// Index of the pairing that pairs local darts `i` and `j`.
fn pairing_of(i: usize, j: usize) -> usize {
    PAIRINGS
        .iter()
        .position(|p| p[i] == j)
        .expect("distinct local darts are paired by exactly one pairing")
}

/// A 4-regular multigraph: loops and multi-edges allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FourRegularGraph {
    labels: Vec<String>,
    mate: Vec<usize>,
}

impl FourRegularGraph {
    /// Builds from an edge list on vertices `0..n`; `(v, v)` is a loop and
    /// repeated pairs are parallel edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut used = vec![0usize; n];
        let mut mate = vec![usize::MAX; 4 * n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(u.max(v).to_string()));
            }
            let need = |w: usize, k: usize| used[w] + k > 4;
            if u == v && need(u, 2) || u != v && (need(u, 1) || need(v, 1)) {
                let w = if need(u, if u == v { 2 } else { 1 }) {
                    u
                } else {
                    v
                };
                let degree = edges
                    .iter()
                    .map(|&(a, b)| (a == w) as usize + (b == w) as usize)
                    .sum();
                return Err(Error::NotFourRegular { vertex: w, degree });
            }
            let du = 4 * u + used[u];
            used[u] += 1;
            let dv = 4 * v + used[v];
            used[v] += 1;
            mate[du] = dv;
            mate[dv] = du;
        }
        if let Some(v) = used.iter().position(|&k| k != 4) {
            return Err(Error::NotFourRegular {
                vertex: v,
                degree: used[v],
            });
        }
        Ok(Self {
            labels: (0..n).map(|i| i.to_string()).collect(),
            mate,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::UnsupportedInput(
                "label count differs from vertex count".into(),
            ));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn darts(&self) -> usize {
        self.mate.len()
    }

    #[inline]
    pub fn mate(&self, d: usize) -> usize {
        self.mate[d]
    }

    /// Edges as `(dart, mate)` with `dart < mate`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.darts())
            .filter(|&d| d < self.mate[d])
            .map(|d| (d, self.mate[d]))
            .collect()
    }

    /// Component id of every vertex.
    pub fn component_ids(&self) -> Vec<usize> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for d in 4 * v..4 * v + 4 {
                    let w = vertex_of(self.mate[d]);
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// `k(G)`.
    pub fn components(&self) -> usize {
        self.component_ids().into_iter().max().map_or(0, |m| m + 1)
    }
}

/// A 4-regular digraph with indegree and outdegree two everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoInTwoOutDigraph {
    graph: FourRegularGraph,
    out: Vec<bool>,
}

impl TwoInTwoOutDigraph {
    /// Builds from arcs `u -> v` on vertices `0..n`.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(u.max(v).to_string()));
            }
            outdeg[u] += 1;
            indeg[v] += 1;
        }
        if let Some(v) = (0..n).find(|&v| indeg[v] != 2 || outdeg[v] != 2) {
            return Err(Error::NotTwoInTwoOut {
                vertex: v,
                indegree: indeg[v],
                outdegree: outdeg[v],
            });
        }
        let graph = FourRegularGraph::from_edges(n, arcs)?;
        // from_edges assigns darts in order: the first of each pair is the tail
        let mut out = vec![false; 4 * n];
        let mut used = vec![0usize; n];
        for &(u, v) in arcs {
            out[4 * u + used[u]] = true;
            used[u] += 1;
            used[v] += 1;
        }
        Ok(Self { graph, out })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        self.graph = self.graph.with_labels(labels)?;
        Ok(self)
    }

    pub fn graph(&self) -> &FourRegularGraph {
        &self.graph
    }

    /// Whether the edge at dart `d` leaves its vertex through `d`.
    pub fn is_out(&self, d: usize) -> bool {
        self.out[d]
    }

    /// Arcs as `(tail, head)` vertex pairs, ordered by tail dart.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.graph.darts())
            .filter(|&d| self.out[d])
            .map(|d| (vertex_of(d), vertex_of(self.graph.mate(d))))
            .collect()
    }
}

/// Common view of directed and undirected hosts.
pub trait Host {
    fn graph(&self) -> &FourRegularGraph;

    /// Out-flags per dart for directed hosts.
    fn orientation(&self) -> Option<&[bool]>;

    fn is_directed(&self) -> bool {
        self.orientation().is_some()
    }

    /// Pairings allowed at `v`: all three, or the two that pair each in-dart
    /// with an out-dart.
    fn allowed_pairings(&self, v: usize) -> Vec<usize> {
        match self.orientation() {
            None => vec![0, 1, 2],
            Some(out) => (0..3)
                .filter(|&p| (0..4).all(|i| out[4 * v + i] != out[4 * v + PAIRINGS[p][i]]))
                .collect(),
        }
    }
}

impl Host for FourRegularGraph {
    fn graph(&self) -> &FourRegularGraph {
        self
    }
    fn orientation(&self) -> Option<&[bool]> {
        None
    }
}

impl Host for TwoInTwoOutDigraph {
    fn graph(&self) -> &FourRegularGraph {
        &self.graph
    }
    fn orientation(&self) -> Option<&[bool]> {
        Some(&self.out)
    }
}

/// A transition (pairing index into [`PAIRINGS`]) at every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransitionSystem {
    choice: Vec<u8>,
}

impl TransitionSystem {
    pub fn new(choice: Vec<u8>) -> Self {
        assert!(choice.iter().all(|&c| c < 3), "pairing index out of range");
        Self { choice }
    }

    pub fn choices(&self) -> &[u8] {
        &self.choice
    }

    pub fn pairing_at(&self, v: usize) -> usize {
        self.choice[v] as usize
    }

    #[inline]
    pub fn partner(&self, d: usize) -> usize {
        let v = vertex_of(d);
        4 * v + PAIRINGS[self.choice[v] as usize][d % 4]
    }

    /// Checks the system against a host: right size, and orientation
    /// consistent when the host is directed.
    pub fn validate(&self, host: &impl Host) -> Result<()> {
        if self.choice.len() != host.graph().n() {
            return Err(Error::HostMismatch);
        }
        for v in 0..self.choice.len() {
            if !host.allowed_pairings(v).contains(&self.pairing_at(v)) {
                return Err(Error::MalformedCircuit(format!(
                    "transition at vertex {v} does not follow the orientation"
                )));
            }
        }
        Ok(())
    }

    /// `|T|`: the number of closed circuits in the induced partition.
    pub fn circuit_count(&self, g: &FourRegularGraph) -> usize {
        let mut seen = vec![false; g.darts()];
        let mut count = 0;
        for start in 0..g.darts() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut d = start;
            loop {
                seen[d] = true;
                let m = g.mate(d);
                seen[m] = true;
                d = self.partner(m);
                if d == start {
                    break;
                }
            }
        }
        count
    }
}

fn check_host_size(g: &FourRegularGraph) -> Result<()> {
    if g.n() > MAX_HOST_VERTICES {
        return Err(Error::SizeCap {
            what: "host vertex count",
            actual: g.n(),
            cap: MAX_HOST_VERTICES,
        });
    }
    Ok(())
}

/// Every transition system of the host with its circuit count, in
/// lexicographic order of pairing choices.
pub fn enumerate_transitions(host: &impl Host) -> Result<Vec<(TransitionSystem, usize)>> {
    let g = host.graph();
    check_host_size(g)?;
    let allowed: Vec<Vec<usize>> = (0..g.n()).map(|v| host.allowed_pairings(v)).collect();
    let mut idx = vec![0usize; g.n()];
    let mut out = Vec::new();
    loop {
        let ts =
            TransitionSystem::new(idx.iter().zip(&allowed).map(|(&i, a)| a[i] as u8).collect());
        let c = ts.circuit_count(g);
        out.push((ts, c));
        // mixed-radix increment, last vertex fastest
        let mut v = g.n();
        loop {
            if v == 0 {
                return Ok(out);
            }
            v -= 1;
            idx[v] += 1;
            if idx[v] < allowed[v].len() {
                break;
            }
            idx[v] = 0;
        }
    }
}

/// Martin polynomial: `m(D) = sum (x-1)^{|T|-k}` for directed hosts and
/// `M(G) = sum (x-2)^{|T|-k}` for undirected ones.
pub fn martin(host: &impl Host) -> Result<IntPoly1> {
    let g = host.graph();
    let k = g.components();
    let mut counts = vec![0u64; g.darts() + 1];
    for (_, c) in enumerate_transitions(host)? {
        counts[c - k] += 1;
    }
    let shift = if host.is_directed() { -1 } else { -2 };
    Ok(IntPoly1::from_shifted_counts(&counts, shift))
}

/// An Eulerian system: one closed walk per host component, each stored as
/// its cyclic sequence of departure darts. Canonical form: every circuit
/// starts at its smallest dart, circuits sorted by that dart.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EulerianCircuit {
    circuits: Vec<Vec<usize>>,
}

impl EulerianCircuit {
    /// Wraps raw departure sequences, validating them against the host and
    /// canonicalizing rotation.
    pub fn new(host: &impl Host, circuits: Vec<Vec<usize>>) -> Result<Self> {
        let c = Self::canonical(circuits);
        c.validate(host)?;
        Ok(c)
    }

    fn canonical(mut circuits: Vec<Vec<usize>>) -> Self {
        for c in &mut circuits {
            if let Some(p) = c
                .iter()
                .enumerate()
                .min_by_key(|&(_, d)| *d)
                .map(|(i, _)| i)
            {
                c.rotate_left(p);
            }
        }
        circuits.sort();
        Self { circuits }
    }

    pub fn circuits(&self) -> &[Vec<usize>] {
        &self.circuits
    }

    /// Traces the circuits of a transition system with exactly one circuit
    /// per component. Each walk starts at the smallest admissible dart of its
    /// component (smallest out-dart when directed).
    pub fn from_transition_system(host: &impl Host, ts: &TransitionSystem) -> Result<Self> {
        let g = host.graph();
        ts.validate(host)?;
        let mut used = vec![false; g.darts()];
        let mut circuits = Vec::new();
        for start in 0..g.darts() {
            if used[start] || host.orientation().is_some_and(|o| !o[start]) {
                continue;
            }
            let mut seq = Vec::new();
            let mut d = start;
            loop {
                used[d] = true;
                let m = g.mate(d);
                used[m] = true;
                seq.push(d);
                d = ts.partner(m);
                if d == start {
                    break;
                }
            }
            circuits.push(seq);
        }
        if circuits.len() != g.components() {
            return Err(Error::MalformedCircuit(format!(
                "transition system has {} circuits but the host has {} components",
                circuits.len(),
                g.components()
            )));
        }
        Ok(Self::canonical(circuits))
    }

    /// Checks that every edge is used once and consecutive darts meet at a
    /// vertex (and follow arc directions on a directed host).
    pub fn validate(&self, host: &impl Host) -> Result<()> {
        let g = host.graph();
        let mut used = vec![false; g.darts()];
        for c in &self.circuits {
            if c.is_empty() {
                return Err(Error::MalformedCircuit("empty circuit".into()));
            }
            for (i, &d) in c.iter().enumerate() {
                if d >= g.darts() {
                    return Err(Error::MalformedCircuit(format!("dart {d} out of range")));
                }
                if used[d] || used[g.mate(d)] {
                    return Err(Error::MalformedCircuit(format!(
                        "edge at dart {d} used twice"
                    )));
                }
                used[d] = true;
                used[g.mate(d)] = true;
                if host.orientation().is_some_and(|o| !o[d]) {
                    return Err(Error::MalformedCircuit(format!(
                        "dart {d} traversed against its arc"
                    )));
                }
                let next = c[(i + 1) % c.len()];
                if vertex_of(g.mate(d)) != vertex_of(next) {
                    return Err(Error::MalformedCircuit(format!(
                        "darts {d} and {next} are not consecutive"
                    )));
                }
            }
        }
        if used.iter().any(|&u| !u) {
            return Err(Error::MalformedCircuit("not every edge is covered".into()));
        }
        let comps = g.component_ids();
        let mut hit = BTreeSet::new();
        for c in &self.circuits {
            if !hit.insert(comps[vertex_of(c[0])]) {
                return Err(Error::MalformedCircuit(
                    "two circuits in one component".into(),
                ));
            }
        }
        Ok(())
    }

    /// The transition system followed by the walk.
    pub fn transition_system(&self, g: &FourRegularGraph) -> TransitionSystem {
        let mut choice = vec![0u8; g.n()];
        for c in &self.circuits {
            for (i, &d) in c.iter().enumerate() {
                let arrive = g.mate(c[(i + c.len() - 1) % c.len()]);
                choice[vertex_of(d)] = pairing_of(arrive % 4, d % 4) as u8;
            }
        }
        TransitionSystem::new(choice)
    }

    /// Departure flag per dart: the orientation the walk induces.
    pub fn departures(&self, g: &FourRegularGraph) -> Vec<bool> {
        let mut dep = vec![false; g.darts()];
        for c in &self.circuits {
            for &d in c {
                dep[d] = true;
            }
        }
        dep
    }

    /// Double-occurrence words (vertex indices), one per circuit.
    pub fn words(&self) -> Vec<Vec<usize>> {
        self.circuits
            .iter()
            .map(|c| c.iter().map(|&d| vertex_of(d)).collect())
            .collect()
    }

    fn positions(&self, v: usize) -> (usize, usize, usize) {
        for (ci, c) in self.circuits.iter().enumerate() {
            let pos: Vec<usize> = c
                .iter()
                .enumerate()
                .filter(|&(_, &d)| vertex_of(d) == v)
                .map(|(i, _)| i)
                .collect();
            if pos.len() == 2 {
                return (ci, pos[0], pos[1]);
            }
        }
        unreachable!("validated circuits visit every vertex twice")
    }

    /// Whether `a` and `b` alternate `a..b..a..b` in a common circuit.
    pub fn interlaced(&self, a: usize, b: usize) -> bool {
        if a == b {
            return false;
        }
        let (ca, a1, a2) = self.positions(a);
        let (cb, b1, b2) = self.positions(b);
        ca == cb && ((a1 < b1 && b1 < a2) != (a1 < b2 && b2 < a2))
    }

    /// Interlace graph `H(C)` on the host's vertex labels.
    pub fn interlace_graph(&self, g: &FourRegularGraph) -> Graph {
        let mut h = Graph::new(g.labels().to_vec()).expect("host labels are distinct");
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                if self.interlaced(a, b) {
                    h.add_edge(a, b);
                }
            }
        }
        h
    }

    /// Transposition `C^{ab}`: with the circuit read as `a X b Y a Z b W`
    /// the result is `a Z b Y a X b W`, which switches the transitions at
    /// `a` and `b` to the other orientation-consistent pairing.
    pub fn transpose(&self, g: &FourRegularGraph, a: usize, b: usize) -> Result<Self> {
        if a >= g.n() || b >= g.n() {
            return Err(Error::UnknownVertex(a.max(b).to_string()));
        }
        if !self.interlaced(a, b) {
            return Err(Error::NotInterlaced(
                g.labels()[a].clone(),
                g.labels()[b].clone(),
            ));
        }
        let (ci, a1, _) = self.positions(a);
        let mut seq = self.circuits[ci].clone();
        seq.rotate_left(a1);
        let at = |v: usize| -> Vec<usize> {
            seq.iter()
                .enumerate()
                .filter(|&(_, &d)| vertex_of(d) == v)
                .map(|(i, _)| i)
                .collect()
        };
        let (pa, pb) = (at(a), at(b));
        let (b1, a2, b2) = (pb[0], pa[1], pb[1]);
        let mut new = Vec::with_capacity(seq.len());
        new.extend_from_slice(&seq[a2..b2]);
        new.extend_from_slice(&seq[b1..a2]);
        new.extend_from_slice(&seq[..b1]);
        new.extend_from_slice(&seq[b2..]);
        let mut circuits = self.circuits.clone();
        circuits[ci] = new;
        Ok(Self::canonical(circuits))
    }
}

/// Finds an Eulerian system by starting from any transition system and
/// switching transitions at vertices where two different circuits meet,
/// which merges them, until one circuit per component remains.
pub fn eulerian_system(host: &impl Host) -> Result<EulerianCircuit> {
    let g = host.graph();
    let allowed: Vec<Vec<usize>> = (0..g.n()).map(|v| host.allowed_pairings(v)).collect();
    let mut ts = TransitionSystem::new(allowed.iter().map(|a| a[0] as u8).collect());
    loop {
        let label = circuit_labels(g, &ts);
        let split = (0..g.n()).find(|&v| {
            let d = 4 * v;
            (1..4).any(|i| label[d + i] != label[d])
        });
        let Some(v) = split else {
            return EulerianCircuit::from_transition_system(host, &ts);
        };
        let cur = ts.pairing_at(v);
        let next = *allowed[v]
            .iter()
            .find(|&&p| p != cur)
            .expect("at least two pairings allowed");
        ts.choice[v] = next as u8;
    }
}

/// Circuit id of every dart under a transition system.
fn circuit_labels(g: &FourRegularGraph, ts: &TransitionSystem) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.darts()];
    let mut next = 0;
    for start in 0..g.darts() {
        if label[start] != usize::MAX {
            continue;
        }
        let mut d = start;
        loop {
            label[d] = next;
            let m = g.mate(d);
            label[m] = next;
            d = ts.partner(m);
            if d == start {
                break;
            }
        }
        next += 1;
    }
    label
}

/// All Eulerian circuits of a connected two-in two-out digraph, by
/// backtracking over the out-darts available at each arrival. Every walk is
/// anchored at the smallest out-dart, so each cyclic circuit appears once.
pub fn euler_circuits(d: &TwoInTwoOutDigraph) -> Result<Vec<EulerianCircuit>> {
    let g = d.graph();
    check_host_size(g)?;
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    if g.components() != 1 {
        return Err(Error::Disconnected);
    }
    let total = 2 * g.n();
    let start = (0..g.darts())
        .find(|&x| d.is_out(x))
        .expect("nonempty host");
    let mut used = vec![false; g.darts()];
    let mut path = vec![start];
    used[start] = true;
    let mut found = Vec::new();

    fn go(
        d: &TwoInTwoOutDigraph,
        used: &mut [bool],
        path: &mut Vec<usize>,
        total: usize,
        found: &mut Vec<EulerianCircuit>,
    ) {
        if path.len() == total {
            found.push(EulerianCircuit::canonical(vec![path.clone()]));
            return;
        }
        let g = d.graph();
        let w = vertex_of(g.mate(*path.last().expect("nonempty path")));
        for o in 4 * w..4 * w + 4 {
            if d.is_out(o) && !used[o] {
                used[o] = true;
                path.push(o);
                go(d, used, path, total, found);
                path.pop();
                used[o] = false;
            }
        }
    }

    go(d, &mut used, &mut path, total, &mut found);
    found.sort();
    Ok(found)
}

/// Closure of `{C}` under all transpositions, breadth-first.
pub fn transposition_closure(
    g: &FourRegularGraph,
    c: &EulerianCircuit,
    cap: usize,
) -> Result<Vec<EulerianCircuit>> {
    let mut seen: HashSet<EulerianCircuit> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(c.clone());
    queue.push_back(c.clone());
    while let Some(cur) = queue.pop_front() {
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                if cur.interlaced(a, b) {
                    let next = cur.transpose(g, a, b)?;
                    if seen.insert(next.clone()) {
                        if seen.len() > cap {
                            return Err(Error::ResourceLimit(format!(
                                "transposition closure exceeded {cap} circuits"
                            )));
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Vertex classes of a circuit partition relative to an Eulerian system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    /// Transition agrees with the system.
    pub agree: u64,
    /// Disagrees but follows the induced orientation.
    pub consistent: u64,
    /// Pairs departures with departures.
    pub inconsistent: u64,
}

/// Classifies every vertex by how `p` relates to `c`.
pub fn classify(g: &FourRegularGraph, c: &EulerianCircuit, p: &TransitionSystem) -> Classification {
    let own = c.transition_system(g);
    let dep = c.departures(g);
    let mut cls = Classification::default();
    for v in 0..g.n() {
        if own.pairing_at(v) == p.pairing_at(v) {
            cls.agree |= bit(v);
        } else if (4 * v..4 * v + 4).all(|d| dep[d] != dep[p.partner(d)]) {
            cls.consistent |= bit(v);
        } else {
            cls.inconsistent |= bit(v);
        }
    }
    cls
}

/// Both sides of `|P| - k(G) = n((H(C)+Z)[Y u Z])`.
pub fn cohn_lempel_check(
    host: &impl Host,
    c: &EulerianCircuit,
    p: &TransitionSystem,
) -> Result<(usize, usize)> {
    let g = host.graph();
    if p.choices().len() != g.n() {
        return Err(Error::HostMismatch);
    }
    c.validate(host)?;
    let cls = classify(g, c, p);
    let lhs = p.circuit_count(g) - g.components();
    let h = c.interlace_graph(g).loop_complement_mask(cls.inconsistent);
    let rhs = h.nullity_of(cls.consistent | cls.inconsistent);
    Ok((lhs, rhs))
}
