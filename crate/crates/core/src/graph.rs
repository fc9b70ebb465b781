//! Looped simple graphs and the pivot / local-complement / loop-complement
//! operations.
//!
//! Vertices carry opaque string labels; internally each vertex is a dense
//! index and its open neighbourhood is a 64-bit mask, which caps a graph at
//! 64 vertices. Every consumer here is exponential in the vertex count, so
//! the cap is never the binding limit.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::gf2::{rank_of_words, Gf2Matrix};

pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Drops bit `i` from `m`, shifting higher bits down by one.
#[inline]
pub(crate) fn remove_bit(m: u64, i: usize) -> u64 {
    let low = full_mask(i);
    (m & low) | ((m >> 1) & !low)
}

/// Iterator over set bit positions of a mask.
pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// A looped simple graph: no multi-edges, loops allowed, vertex-labelled.
///
/// `v` is never in its own neighbourhood, looped or not.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<u64>,
    loops: u64,
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::SizeCap {
                what: "vertex count",
                actual: labels.len(),
                cap: MAX_VERTICES,
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::UnsupportedInput(format!(
                    "duplicate vertex label `{l}`"
                )));
            }
        }
        let n = labels.len();
        Ok(Self {
            labels,
            adj: vec![0; n],
            loops: 0,
        })
    }

    /// `E_n` with labels `"0"`, ..., `"n-1"`.
    pub fn empty(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect()).expect("n <= 64")
    }

    /// Graph on `n` numbered vertices; a pair `(v, v)` is a loop.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    /// Adds edge `uv` (a loop when `u == v`). Idempotent.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            self.loops |= bit(u);
        } else {
            self.adj[u] |= bit(v);
            self.adj[v] |= bit(u);
        }
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        if u == v {
            self.loops ^= bit(u);
        } else {
            self.adj[u] ^= bit(v);
            self.adj[v] ^= bit(u);
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    fn mask_of(&self, labels: &[&str]) -> Result<u64> {
        labels
            .iter()
            .try_fold(0u64, |m, l| Ok(m | bit(self.index_of(l)?)))
    }

    /// Open neighbourhood of `i` as a mask.
    #[inline]
    pub fn neighbors(&self, i: usize) -> u64 {
        self.adj[i]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn is_looped(&self, i: usize) -> bool {
        self.loops >> i & 1 == 1
    }

    pub fn loop_mask(&self) -> u64 {
        self.loops
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n())
    }

    pub fn is_simple(&self) -> bool {
        self.loops == 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Non-loop edges `(u, v)` with `u < v`, in index order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
            .collect()
    }

    /// Row `i` of the adjacency matrix over GF(2): neighbours plus the
    /// diagonal bit when `i` is looped.
    #[inline]
    pub fn adjacency_row(&self, i: usize) -> u64 {
        self.adj[i] | (self.loops & bit(i))
    }

    pub fn adjacency_matrix(&self) -> Gf2Matrix {
        Gf2Matrix::from_fn(self.labels.clone(), |i, j| {
            self.adjacency_row(i) >> j & 1 == 1
        })
        .expect("graph adjacency is symmetric")
    }

    /// GF(2) rank of `A(G)[T]` for the vertex set `T` given as a mask.
    pub fn rank_of(&self, t: u64) -> usize {
        rank_of_words(bits(t).map(|i| self.adjacency_row(i) & t))
    }

    /// GF(2) nullity of `A(G)[T]`; zero for the empty set.
    pub fn nullity_of(&self, t: u64) -> usize {
        t.count_ones() as usize - self.rank_of(t)
    }

    /// Rank and nullity of `A(G)[T]` for a labelled vertex subset.
    pub fn rank_nullity(&self, subset: &[&str]) -> Result<(usize, usize)> {
        let t = self.mask_of(subset)?;
        let r = self.rank_of(t);
        Ok((r, t.count_ones() as usize - r))
    }

    /// `G * v`: toggles every adjacency inside `N(v)`; loops untouched.
    pub fn local_complement(&self, v: &str) -> Result<Self> {
        Ok(self.local_complement_at(self.index_of(v)?))
    }

    pub fn local_complement_at(&self, v: usize) -> Self {
        let mut g = self.clone();
        let nv = self.adj[v];
        for u in bits(nv) {
            g.adj[u] ^= nv & !bit(u);
        }
        g
    }

    /// Local complement in the adjacency-matrix sense: `A + a a^T` off the
    /// pivot vertex, where `a` is column `v`. Besides the edge toggles of
    /// [`Graph::local_complement_at`] this also toggles the loops on `N(v)`.
    /// Deleting `v` afterwards gives the principal pivot transform at a
    /// looped `v` with `v` removed.
    pub fn local_complement_with_loops_at(&self, v: usize) -> Self {
        let mut g = self.local_complement_at(v);
        g.loops ^= self.adj[v];
        g
    }

    /// `G^{ab}`: pivot on edge `ab` (no label swap).
    pub fn pivot(&self, a: &str, b: &str) -> Result<Self> {
        let (ia, ib) = (self.index_of(a)?, self.index_of(b)?);
        self.pivot_at(ia, ib)
    }

    pub fn pivot_at(&self, a: usize, b: usize) -> Result<Self> {
        if a == b || !self.has_edge(a, b) {
            return Err(Error::NotAnEdge(
                self.labels[a].clone(),
                self.labels[b].clone(),
            ));
        }
        for v in [a, b] {
            if self.is_looped(v) {
                return Err(Error::LoopedPivot(self.labels[v].clone()));
            }
        }
        Ok(self.pivot_unchecked(a, b))
    }

    /// Pivot assuming `ab` is an edge with unlooped endpoints.
    pub(crate) fn pivot_unchecked(&self, a: usize, b: usize) -> Self {
        let ends = bit(a) | bit(b);
        let na = self.adj[a] & !ends;
        let nb = self.adj[b] & !ends;
        let only_a = na & !nb;
        let only_b = nb & !na;
        let both = na & nb;
        let classes = [only_a, only_b, both];
        let mut g = self.clone();
        for (k, &c) in classes.iter().enumerate() {
            let others = classes
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .fold(0u64, |m, (_, &d)| m | d);
            for u in bits(c) {
                g.adj[u] ^= others;
            }
        }
        g
    }

    /// `G + S`: toggles loop status on every vertex of `S`.
    pub fn loop_complement(&self, s: &[&str]) -> Result<Self> {
        Ok(self.loop_complement_mask(self.mask_of(s)?))
    }

    pub fn loop_complement_mask(&self, s: u64) -> Self {
        let mut g = self.clone();
        g.loops ^= s & self.vertex_mask();
        g
    }

    /// `G_{ab}`: the vertex labelled `a` takes over the adjacencies of the
    /// vertex labelled `b` and vice versa. Label order is kept, so the result
    /// compares structurally with graphs on the same label list.
    pub fn swap_labels(&self, a: &str, b: &str) -> Result<Self> {
        Ok(self.swap_labels_at(self.index_of(a)?, self.index_of(b)?))
    }

    pub fn swap_labels_at(&self, a: usize, b: usize) -> Self {
        let perm = |i: usize| {
            if i == a {
                b
            } else if i == b {
                a
            } else {
                i
            }
        };
        let mut g = Self {
            labels: self.labels.clone(),
            adj: vec![0; self.n()],
            loops: 0,
        };
        for u in 0..self.n() {
            if self.is_looped(u) {
                g.loops |= bit(perm(u));
            }
            for v in bits(self.adj[u]) {
                g.adj[perm(u)] |= bit(perm(v));
            }
        }
        g
    }

    /// `G \ v`.
    pub fn delete_vertex(&self, v: &str) -> Result<Self> {
        Ok(self.delete_vertex_at(self.index_of(v)?))
    }

    pub fn delete_vertex_at(&self, v: usize) -> Self {
        let mut labels = self.labels.clone();
        labels.remove(v);
        let adj = (0..self.n())
            .filter(|&u| u != v)
            .map(|u| remove_bit(self.adj[u], v))
            .collect();
        Self {
            labels,
            adj,
            loops: remove_bit(self.loops, v),
        }
    }

    /// Induced subgraph `G[T]`.
    pub fn induced(&self, t: u64) -> Self {
        let keep: Vec<usize> = bits(t & self.vertex_mask()).collect();
        let mut g = Self {
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            adj: vec![0; keep.len()],
            loops: 0,
        };
        for (a, &u) in keep.iter().enumerate() {
            if self.is_looped(u) {
                g.loops |= bit(a);
            }
            for (b, &v) in keep.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[a] |= bit(b);
                }
            }
        }
        g
    }

    /// Disjoint union; labels of `other` get `prefix` prepended.
    pub fn disjoint_union(&self, other: &Self, prefix: &str) -> Result<Self> {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| format!("{prefix}{l}")));
        let mut g = Self::new(labels)?;
        let off = self.n();
        g.loops = self.loops | (other.loops << off);
        for u in 0..self.n() {
            g.adj[u] = self.adj[u];
        }
        for u in 0..other.n() {
            g.adj[off + u] = other.adj[u] << off;
        }
        Ok(g)
    }

    /// Number of connected components (loops are irrelevant).
    pub fn components(&self) -> usize {
        let mut unseen = self.vertex_mask();
        let mut count = 0;
        while unseen != 0 {
            count += 1;
            let start = unseen.trailing_zeros() as usize;
            let mut frontier = bit(start);
            unseen &= !frontier;
            while frontier != 0 {
                let mut next = 0;
                for u in bits(frontier) {
                    next |= self.adj[u];
                }
                next &= unseen;
                unseen &= !next;
                frontier = next;
            }
        }
        count
    }

    /// Size of a maximum independent set (loops ignored).
    pub fn independence_number(&self) -> usize {
        fn go(g: &Graph, cand: u64) -> usize {
            if cand == 0 {
                return 0;
            }
            let v = cand.trailing_zeros() as usize;
            let nv = g.adj[v] & cand;
            if nv == 0 {
                // v is isolated within cand; taking it is never worse
                return 1 + go(g, cand & !bit(v));
            }
            let take = 1 + go(g, cand & !bit(v) & !nv);
            let skip = go(g, cand & !bit(v));
            take.max(skip)
        }
        go(self, self.vertex_mask())
    }

    /// All graphs reachable from `self` by sequences of pivots on edges with
    /// unlooped endpoints, breadth-first. Fails once more than `cap` graphs
    /// have been found, reporting the partial maximum independence number.
    pub fn pivot_orbit(&self, cap: usize) -> Result<Vec<Self>> {
        let mut seen: HashSet<Self> = HashSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(self.clone());
        queue.push_back(self.clone());
        while let Some(g) = queue.pop_front() {
            for (a, b) in g.edges() {
                if g.is_looped(a) || g.is_looped(b) {
                    continue;
                }
                let h = g.pivot_unchecked(a, b);
                if seen.insert(h.clone()) {
                    if seen.len() > cap {
                        let partial = seen
                            .iter()
                            .map(Graph::independence_number)
                            .max()
                            .unwrap_or(0);
                        return Err(Error::ResourceLimit(format!(
                            "pivot orbit exceeded {cap} graphs (partial max independence {partial})"
                        )));
                    }
                    queue.push_back(h);
                }
            }
            order.push(g);
        }
        Ok(order)
    }

    /// Component count, independence number, and the maximum independence
    /// number over the pivot orbit.
    pub fn stats(&self, orbit_cap: usize) -> Result<GraphStats> {
        let orbit = self.pivot_orbit(orbit_cap)?;
        Ok(GraphStats {
            components: self.components(),
            independence_number: self.independence_number(),
            pivot_orbit_max_independence: orbit
                .iter()
                .map(Graph::independence_number)
                .max()
                .unwrap_or(0),
            orbit_size: orbit.len(),
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|&(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        let loops: Vec<&str> = bits(self.loops).map(|i| self.labels[i].as_str()).collect();
        write!(
            f,
            "Graph[{}] edges {{{}}} loops {{{}}}",
            self.labels.join(","),
            edges.join(" "),
            loops.join(",")
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub components: usize,
    pub independence_number: usize,
    pub pivot_orbit_max_independence: usize,
    pub orbit_size: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_complement_examples() {
        let e = Graph::empty(4);
        assert_eq!(e.local_complement("2").unwrap(), e);

        let k3 = Graph::complete(3);
        let lc = k3.local_complement("0").unwrap();
        assert_eq!(lc, Graph::from_edges(3, &[(0, 1), (0, 2)]));
        assert_eq!(lc.local_complement("0").unwrap(), k3);
    }

    #[test]
    fn local_complement_leaves_loops() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 1)]);
        let lc = g.local_complement_at(0);
        assert!(lc.is_looped(1));
        assert!(!lc.is_looped(2));
        let lcl = g.local_complement_with_loops_at(0);
        assert!(!lcl.is_looped(1));
        assert!(lcl.is_looped(2));
        assert!(lcl.has_edge(1, 2));
    }

    #[test]
    fn pivot_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.pivot("0", "1").unwrap(), k2);

        let p3 = Graph::path(3);
        assert_eq!(p3.pivot("0", "1").unwrap(), p3);

        let k3 = Graph::complete(3);
        assert_eq!(k3.pivot("0", "1").unwrap(), k3);
    }

    #[test]
    fn pivot_toggles_between_classes() {
        // a=0, b=1; 2 ~ a only, 3 ~ b only, 4 ~ both, 5 ~ neither
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (0, 4), (1, 4), (2, 5)]);
        let p = g.pivot_at(0, 1).unwrap();
        assert!(p.has_edge(2, 3));
        assert!(p.has_edge(2, 4));
        assert!(p.has_edge(3, 4));
        assert!(p.has_edge(2, 5));
        assert!(!p.has_edge(3, 5));
        assert_eq!(p.pivot_at(0, 1).unwrap(), g);
    }

    #[test]
    fn pivot_errors() {
        let p3 = Graph::path(3);
        assert_eq!(
            p3.pivot("0", "2"),
            Err(Error::NotAnEdge("0".into(), "2".into()))
        );
        let looped = Graph::from_edges(2, &[(0, 1), (1, 1)]);
        assert_eq!(looped.pivot("0", "1"), Err(Error::LoopedPivot("1".into())));
        assert_eq!(p3.pivot("0", "z"), Err(Error::UnknownVertex("z".into())));
    }

    #[test]
    fn loop_complement_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.loop_complement(&[]).unwrap(), k2);
        let full = k2.loop_complement(&["0", "1"]).unwrap();
        assert!(full.is_looped(0) && full.is_looped(1));
        let a = full.adjacency_matrix();
        assert!((0..2).all(|i| (0..2).all(|j| a.get(i, j))));
        assert_eq!(full.loop_complement(&["0", "1"]).unwrap(), k2);
    }

    #[test]
    fn label_swap_and_deletion() {
        let p3 = Graph::path(3); // 0-1-2
        let s = p3.swap_labels("0", "1").unwrap(); // 1 is now an end, 0 the middle
        assert_eq!(s, Graph::from_edges(3, &[(0, 1), (0, 2)]));
        let d = p3.delete_vertex("1").unwrap();
        assert_eq!(d.labels(), &["0".to_string(), "2".to_string()]);
        assert_eq!(d.edge_count(), 0);
    }

    #[test]
    fn stats_examples() {
        for n in 0..5 {
            let s = Graph::empty(n).stats(1000).unwrap();
            assert_eq!(
                (
                    s.components,
                    s.independence_number,
                    s.pivot_orbit_max_independence
                ),
                (n, n, n)
            );
        }
        let s = Graph::complete(2).stats(1000).unwrap();
        assert_eq!(
            (
                s.components,
                s.independence_number,
                s.pivot_orbit_max_independence
            ),
            (1, 1, 1)
        );
        // every pivot of K3 returns K3, so the orbit is a singleton
        let s = Graph::complete(3).stats(1000).unwrap();
        assert_eq!(s.orbit_size, 1);
        assert_eq!(
            (
                s.components,
                s.independence_number,
                s.pivot_orbit_max_independence
            ),
            (1, 1, 1)
        );
    }

    #[test]
    fn orbit_cap_is_reported() {
        let g = Graph::path(6);
        match g.pivot_orbit(1) {
            Err(Error::ResourceLimit(msg)) => assert!(msg.contains("partial")),
            other => panic!("expected resource limit, got {other:?}"),
        }
    }

    #[test]
    fn rank_nullity_of_path() {
        let p3 = Graph::path(3);
        assert_eq!(p3.rank_nullity(&["0", "1", "2"]).unwrap(), (2, 1));
        assert_eq!(p3.nullity_of(0), 0);
    }

    #[test]
    fn remove_bit_shifts() {
        assert_eq!(remove_bit(0b1011, 1), 0b101);
        assert_eq!(remove_bit(0b1011, 0), 0b101);
        assert_eq!(remove_bit(0b1011, 3), 0b011);
        assert_eq!(remove_bit(u64::MAX, 63), u64::MAX >> 1);
    }
}
