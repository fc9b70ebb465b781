//! Seeded random instances for cross-validation runs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::euler::{FourRegularGraph, TwoInTwoOutDigraph};
use crate::gf2::Gf2Matrix;
use crate::graph::Graph;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with optional loops, each loop present with probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64, loops: bool) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
        if loops && rng.gen_bool(p) {
            g.add_edge(u, u);
        }
    }
    g
}

/// Random symmetric GF(2) matrix, each upper entry set with probability `p`.
pub fn random_symmetric(rng: &mut impl Rng, n: usize, p: f64) -> Gf2Matrix {
    random_graph(rng, n, p, true).adjacency_matrix()
}

/// Random two-in two-out digraph from a uniform matching of out-stubs to
/// in-stubs. Loops and parallel arcs can occur.
pub fn random_two_in_two_out(rng: &mut impl Rng, n: usize) -> TwoInTwoOutDigraph {
    let tails: Vec<usize> = (0..n).flat_map(|v| [v, v]).collect();
    let mut heads = tails.clone();
    heads.shuffle(rng);
    let arcs: Vec<(usize, usize)> = tails.into_iter().zip(heads).collect();
    TwoInTwoOutDigraph::from_arcs(n, &arcs).expect("stub matching is balanced")
}

/// Connected two-in two-out digraph, by rejection.
pub fn random_connected_two_in_two_out(rng: &mut impl Rng, n: usize) -> TwoInTwoOutDigraph {
    loop {
        let d = random_two_in_two_out(rng, n);
        if d.graph().components() <= 1 {
            return d;
        }
    }
}

/// Random 4-regular multigraph from a uniform pairing of `4n` stubs.
pub fn random_four_regular(rng: &mut impl Rng, n: usize) -> FourRegularGraph {
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v; 4]).collect();
    stubs.shuffle(rng);
    let edges: Vec<(usize, usize)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
    FourRegularGraph::from_edges(n, &edges).expect("stub pairing is 4-regular")
}

/// Random subset of `0..n` as a bitmask.
pub fn random_mask(rng: &mut impl Rng, n: usize) -> u64 {
    (0..n)
        .filter(|_| rng.gen_bool(0.5))
        .fold(0, |m, i| m | 1 << i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = random_graph(&mut rng(7), 10, 0.4, true);
        let b = random_graph(&mut rng(7), 10, 0.4, true);
        assert_eq!(a, b);
        let d1 = random_two_in_two_out(&mut rng(3), 6);
        let d2 = random_two_in_two_out(&mut rng(3), 6);
        assert_eq!(d1, d2);
    }

    #[test]
    fn generated_hosts_are_valid() {
        let mut r = rng(11);
        for n in 1..8 {
            assert_eq!(random_four_regular(&mut r, n).n(), n);
            assert_eq!(
                random_connected_two_in_two_out(&mut r, n)
                    .graph()
                    .components(),
                1
            );
        }
    }
}
