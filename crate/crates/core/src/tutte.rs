//! Tutte polynomial of multigraphs.

use std::collections::HashMap;

use crate::poly::IntPoly2;

/// Largest edge count accepted by the subset-sum oracle.
pub const RANK_SUM_MAX_EDGES: usize = 20;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Graphic rank of an edge subset: `n - k` of the spanning subgraph.
pub fn graphic_rank(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut uf = UnionFind::new(n);
    edges.iter().filter(|&&(u, v)| uf.union(u, v)).count()
}

fn is_bridge(n: usize, edges: &[(usize, usize)], i: usize) -> bool {
    let (u, v) = edges[i];
    if u == v {
        return false;
    }
    let mut uf = UnionFind::new(n);
    for (j, &(a, b)) in edges.iter().enumerate() {
        if j != i {
            uf.union(a, b);
        }
    }
    uf.find(u) != uf.find(v)
}

/// `t(G; x, y)` by deletion-contraction on the smallest edge that is
/// neither a bridge nor a loop; the base case is `x^bridges y^loops`.
pub fn tutte(n: usize, edges: &[(usize, usize)]) -> IntPoly2 {
    let mut memo = HashMap::new();
    tutte_rec(n, edges.to_vec(), &mut memo)
}

type Memo = HashMap<(usize, Vec<(usize, usize)>), IntPoly2>;

fn tutte_rec(n: usize, edges: Vec<(usize, usize)>, memo: &mut Memo) -> IntPoly2 {
    let key = (n, edges.clone());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let pick = (0..edges.len()).find(|&i| edges[i].0 != edges[i].1 && !is_bridge(n, &edges, i));
    let result = match pick {
        None => {
            let loops = edges.iter().filter(|e| e.0 == e.1).count() as u32;
            let bridges = edges.len() as u32 - loops;
            IntPoly2::monomial(1, bridges, loops)
        }
        Some(i) => {
            let mut deleted = edges.clone();
            let (u, v) = deleted.remove(i);
            // contract: merge v into u, then renumber the last vertex into v's slot
            let last = n - 1;
            let relabel = |w: usize| {
                let w = if w == v { u } else { w };
                if w == last {
                    v
                } else {
                    w
                }
            };
            let contracted: Vec<_> = deleted
                .iter()
                .map(|&(a, b)| {
                    let (a, b) = (relabel(a), relabel(b));
                    (a.min(b), a.max(b))
                })
                .collect();
            let d = tutte_rec(n, deleted, memo);
            let c = tutte_rec(n - 1, contracted, memo);
            d + c
        }
    };
    memo.insert(key, result.clone());
    result
}

/// Independent oracle: `sum_A (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}`.
pub fn tutte_rank_sum(n: usize, edges: &[(usize, usize)]) -> IntPoly2 {
    assert!(
        edges.len() <= RANK_SUM_MAX_EDGES,
        "edge count above oracle cap"
    );
    let m = edges.len();
    let full = graphic_rank(n, edges);
    let mut counts = std::collections::BTreeMap::new();
    let mut sub = Vec::with_capacity(m);
    for a in 0u64..1 << m {
        sub.clear();
        sub.extend((0..m).filter(|&i| a >> i & 1 == 1).map(|i| edges[i]));
        let r = graphic_rank(n, &sub);
        *counts
            .entry(((full - r) as u32, (sub.len() - r) as u32))
            .or_insert(0u64) += 1;
    }
    IntPoly2::from_shifted_counts(&counts, -1, -1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_values() {
        // tree with three edges
        assert_eq!(
            tutte(4, &[(0, 1), (1, 2), (1, 3)]),
            IntPoly2::monomial(1, 3, 0)
        );
        assert_eq!(tutte(1, &[(0, 0)]), IntPoly2::y());
        let k3 = tutte(3, &[(0, 1), (1, 2), (0, 2)]);
        let expect = IntPoly2::monomial(1, 2, 0) + IntPoly2::x() + IntPoly2::y();
        assert_eq!(k3, expect);
        assert_eq!(k3.diagonal().to_string(), "x^2 + 2x");
        // digon
        assert_eq!(tutte(2, &[(0, 1), (0, 1)]), IntPoly2::x() + IntPoly2::y());
    }

    #[test]
    fn k4_counts_spanning_trees() {
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert_eq!(tutte(4, &k4).eval_i64(1, 1), 16.into());
        assert_eq!(tutte(4, &k4), tutte_rank_sum(4, &k4));
    }

    proptest! {
        #[test]
        fn recursion_matches_rank_sum(
            n in 1usize..5,
            raw in proptest::collection::vec((0usize..5, 0usize..5), 0..7),
        ) {
            let edges: Vec<_> = raw.into_iter().map(|(a, b)| (a % n, b % n)).collect();
            prop_assert_eq!(tutte(n, &edges), tutte_rank_sum(n, &edges));
        }
    }
}
