//! Interlace polynomials of graphs and of symmetric GF(2) matrices.
//!
//! Every polynomial has a state-sum pipeline (a sum over vertex subsets of
//! powers of shifted variables indexed by GF(2) rank/nullity) and a recursive
//! pipeline (pivot / local-complement recursions). The two share nothing
//! beyond the graph type, so agreement between them is a real check.
//!
//! Recursions pick the lexicographically smallest edge by current vertex
//! labels, and memoize on the labelled graph.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::graph::{bits, Graph};
use crate::poly::{IntPoly1, IntPoly2};

/// Subset masks `0 .. 2^n`.
fn subsets(n: usize) -> std::ops::Range<u64> {
    assert!(n < 64, "state sums need fewer than 64 vertices");
    0..(1u64 << n)
}

/// `q_N(G; x) = sum_T (x-1)^{n(G[T])}`. Loops are read as diagonal 1s.
pub fn q_nullity_statesum(g: &Graph) -> IntPoly1 {
    let mut counts = vec![0u64; g.n() + 1];
    for t in subsets(g.n()) {
        counts[g.nullity_of(t)] += 1;
    }
    IntPoly1::from_shifted_counts(&counts, -1)
}

/// `Q(G; x) = sum_T sum_{S in T} (x-2)^{n((G+S)[T])}`.
pub fn global_statesum(g: &Graph) -> IntPoly1 {
    let mut counts = vec![0u64; g.n() + 1];
    for t in subsets(g.n()) {
        // iterate S over submasks of T, including T and the empty set
        let mut s = t;
        loop {
            counts[g.loop_complement_mask(s).nullity_of(t)] += 1;
            if s == 0 {
                break;
            }
            s = (s - 1) & t;
        }
    }
    IntPoly1::from_shifted_counts(&counts, -2)
}

/// `q(G; x, y) = sum_T (x-1)^{r(G[T])} (y-1)^{n(G[T])}`.
pub fn q_twovar_statesum(g: &Graph) -> IntPoly2 {
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for t in subsets(g.n()) {
        let r = g.rank_of(t) as u32;
        let k = t.count_ones() - r;
        *counts.entry((r, k)).or_default() += 1;
    }
    IntPoly2::from_shifted_counts(&counts, -1, -1)
}

/// Lexicographically smallest non-loop edge by labels, as `(a, b)` with
/// `label(a) < label(b)`, optionally restricted to unlooped endpoints.
fn smallest_edge(g: &Graph, unlooped_only: bool) -> Option<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| !unlooped_only || (!g.is_looped(u) && !g.is_looped(v)))
        .map(|(u, v)| {
            if g.label(u) <= g.label(v) {
                (u, v)
            } else {
                (v, u)
            }
        })
        .min_by(|&(a, b), &(c, d)| (g.label(a), g.label(b)).cmp(&(g.label(c), g.label(d))))
}

fn smallest_looped(g: &Graph) -> Option<usize> {
    bits(g.loop_mask()).min_by(|&a, &b| g.label(a).cmp(g.label(b)))
}

fn require_simple(g: &Graph, what: &str, hint: &str) -> Result<()> {
    if g.is_simple() {
        Ok(())
    } else {
        Err(Error::UnsupportedInput(format!(
            "{what} is defined on simple graphs; {hint}"
        )))
    }
}

/// `q_N` by the edge recursion `q_N(G) = q_N(G\a) + q_N(G^{ab}\b)`,
/// base case `x^n` on edgeless graphs.
pub fn q_nullity_recursive(g: &Graph) -> Result<IntPoly1> {
    require_simple(
        g,
        "the single-variable recursion",
        "use the two-variable recursion at x = 2 for looped graphs",
    )?;
    fn go(g: &Graph, memo: &mut HashMap<Graph, IntPoly1>) -> IntPoly1 {
        if let Some(p) = memo.get(g) {
            return p.clone();
        }
        let p = match smallest_edge(g, false) {
            None => IntPoly1::power_of_x(g.n() as u32),
            Some((a, b)) => {
                let left = go(&g.delete_vertex_at(a), memo);
                let right = go(&g.pivot_unchecked(a, b).delete_vertex_at(b), memo);
                left + right
            }
        };
        memo.insert(g.clone(), p.clone());
        p
    }
    Ok(go(g, &mut HashMap::new()))
}

/// `Q` by `Q(G) = Q(G\a) + Q(G*a\a) + Q(G^{ab}\b)`, base case `x^n`.
pub fn global_recursive(g: &Graph) -> Result<IntPoly1> {
    require_simple(
        g,
        "the Q recursion",
        "Q of a looped graph is available from the state sum only",
    )?;
    fn go(g: &Graph, memo: &mut HashMap<Graph, IntPoly1>) -> IntPoly1 {
        if let Some(p) = memo.get(g) {
            return p.clone();
        }
        let p = match smallest_edge(g, false) {
            None => IntPoly1::power_of_x(g.n() as u32),
            Some((a, b)) => {
                let mut acc = go(&g.delete_vertex_at(a), memo);
                acc += &go(&g.local_complement_at(a).delete_vertex_at(a), memo);
                acc += &go(&g.pivot_unchecked(a, b).delete_vertex_at(b), memo);
                acc
            }
        };
        memo.insert(g.clone(), p.clone());
        p
    }
    Ok(go(g, &mut HashMap::new()))
}

/// Two-variable `q` by its three-case recursion:
///
/// 1. edge `ab`, both unlooped:
///    `q(G\a) + q(G^{ab}\b) + ((x-1)^2 - 1) q(G^{ab}\a\b)`
/// 2. looped `a`: `q(G\a) + (x-1) q(G*a\a)`
/// 3. edgeless and loopless: `y^n`
///
/// In case 2 the local complement also toggles loops on `N(a)`, which is the
/// principal pivot transform at the looped vertex.
pub fn q_twovar_recursive(g: &Graph) -> Result<IntPoly2> {
    fn go(g: &Graph, memo: &mut HashMap<Graph, IntPoly2>) -> Result<IntPoly2> {
        if let Some(p) = memo.get(g) {
            return Ok(p.clone());
        }
        let p = if let Some((a, b)) = smallest_edge(g, true) {
            let piv = g.pivot_unchecked(a, b);
            let mut acc = go(&g.delete_vertex_at(a), memo)?;
            acc += &go(&piv.delete_vertex_at(b), memo)?;
            let both = piv
                .delete_vertex_at(b)
                .delete_vertex_at(if a > b { a - 1 } else { a });
            // (x-1)^2 - 1 = x^2 - 2x
            let factor = &IntPoly2::monomial(1, 2, 0) - &IntPoly2::monomial(2, 1, 0);
            acc += &(&factor * &go(&both, memo)?);
            acc
        } else if let Some(a) = smallest_looped(g) {
            let mut acc = go(&g.delete_vertex_at(a), memo)?;
            let lc = g.local_complement_with_loops_at(a).delete_vertex_at(a);
            let factor = &IntPoly2::x() - &IntPoly2::one();
            acc += &(&factor * &go(&lc, memo)?);
            acc
        } else if g.edge_count() == 0 {
            IntPoly2::monomial(1, 0, g.n() as u32)
        } else {
            return Err(Error::Internal(
                "no recursion case applies to a graph with edges".into(),
            ));
        };
        memo.insert(g.clone(), p.clone());
        Ok(p)
    }
    go(g, &mut HashMap::new())
}

/// `q_N` for any looped graph via the two-variable recursion at `x = 2`.
pub fn q_nullity_via_twovar(g: &Graph) -> Result<IntPoly1> {
    Ok(q_twovar_recursive(g)?.at_x(2))
}

/// Matrix interlace polynomial `q_m(A) = sum_T (x-1)^{n(A[T])}` over
/// symmetric GF(2) matrices.
pub fn q_matrix(a: &Gf2Matrix) -> Result<IntPoly1> {
    if a.dim() >= 64 {
        return Err(Error::SizeCap {
            what: "matrix dimension",
            actual: a.dim(),
            cap: 63,
        });
    }
    let mut counts = vec![0u64; a.dim() + 1];
    for t in subsets(a.dim()) {
        counts[t.count_ones() as usize - a.rank_mask(t)] += 1;
    }
    Ok(IntPoly1::from_shifted_counts(&counts, -1))
}

/// `q_m` through `q_m(A) = q_m(A\v) + q_m((A*T)\v)` with `v` the first
/// index and `T = {v}` or `{v, w}` invertible. A zero row at `v` contributes
/// the factor `x` instead.
pub fn q_matrix_recursive(a: &Gf2Matrix) -> Result<IntPoly1> {
    fn go(a: &Gf2Matrix, memo: &mut HashMap<Gf2Matrix, IntPoly1>) -> Result<IntPoly1> {
        if a.dim() == 0 {
            return Ok(IntPoly1::one());
        }
        if let Some(p) = memo.get(a) {
            return Ok(p.clone());
        }
        let v = 0;
        let p = if a.get(v, v) {
            let left = go(&a.delete(v), memo)?;
            left + go(&a.pivot_on(&[v])?.delete(v), memo)?
        } else if let Some(w) = (1..a.dim()).find(|&w| a.get(v, w)) {
            let left = go(&a.delete(v), memo)?;
            left + go(&a.pivot_on(&[v, w])?.delete(v), memo)?
        } else {
            &IntPoly1::x() * &go(&a.delete(v), memo)?
        };
        memo.insert(a.clone(), p.clone());
        Ok(p)
    }
    go(a, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly1 {
        IntPoly1::from_coeffs(c.iter().copied())
    }

    #[test]
    fn statesum_spot_values() {
        for n in 0..6 {
            assert_eq!(
                q_nullity_statesum(&Graph::empty(n)),
                IntPoly1::power_of_x(n as u32)
            );
        }
        assert_eq!(q_nullity_statesum(&Graph::complete(2)), p(&[0, 2]));
        assert_eq!(q_nullity_statesum(&Graph::path(3)), p(&[0, 2, 1]));
        assert_eq!(q_nullity_statesum(&Graph::complete(3)), p(&[0, 4]));
    }

    #[test]
    fn recursive_spot_values() {
        assert_eq!(
            q_nullity_recursive(&Graph::empty(3)).unwrap(),
            p(&[0, 0, 0, 1])
        );
        assert_eq!(
            q_nullity_recursive(&Graph::complete(2)).unwrap(),
            p(&[0, 2])
        );
        assert_eq!(
            q_nullity_recursive(&Graph::complete(3)).unwrap(),
            p(&[0, 4])
        );
    }

    #[test]
    fn looped_input_is_redirected() {
        let g = Graph::from_edges(1, &[(0, 0)]);
        assert!(matches!(
            q_nullity_recursive(&g),
            Err(Error::UnsupportedInput(_))
        ));
        assert!(matches!(
            global_recursive(&g),
            Err(Error::UnsupportedInput(_))
        ));
        assert_eq!(q_nullity_via_twovar(&g).unwrap(), q_nullity_statesum(&g));
    }

    #[test]
    fn global_spot_values() {
        assert_eq!(global_statesum(&Graph::empty(2)), p(&[0, 0, 1]));
        assert_eq!(global_recursive(&Graph::empty(2)).unwrap(), p(&[0, 0, 1]));
        assert_eq!(global_statesum(&Graph::complete(2)), p(&[0, 3]));
        assert_eq!(global_recursive(&Graph::complete(2)).unwrap(), p(&[0, 3]));
        assert_eq!(
            global_statesum(&Graph::from_edges(1, &[(0, 0)])),
            p(&[0, 1])
        );
    }

    #[test]
    fn twovar_spot_values() {
        let k2 = IntPoly2::monomial(1, 2, 0)
            + IntPoly2::monomial(-2, 1, 0)
            + IntPoly2::monomial(2, 0, 1);
        assert_eq!(q_twovar_statesum(&Graph::complete(2)), k2);
        assert_eq!(q_twovar_recursive(&Graph::complete(2)).unwrap(), k2);
        for n in 0..4 {
            assert_eq!(
                q_twovar_statesum(&Graph::empty(n)),
                IntPoly2::monomial(1, 0, n as u32)
            );
        }
        let looped = Graph::from_edges(1, &[(0, 0)]);
        assert_eq!(q_twovar_recursive(&looped).unwrap(), IntPoly2::x());
        assert_eq!(q_twovar_statesum(&looped), IntPoly2::x());
    }

    #[test]
    fn twovar_case_two_needs_loop_toggling() {
        // looped a adjacent to unlooped b: x^2 - x + y
        let g = Graph::from_edges(2, &[(0, 0), (0, 1)]);
        let expect = IntPoly2::monomial(1, 2, 0) + IntPoly2::monomial(-1, 1, 0) + IntPoly2::y();
        assert_eq!(q_twovar_statesum(&g), expect);
        assert_eq!(q_twovar_recursive(&g).unwrap(), expect);
    }

    #[test]
    fn matrix_polynomial() {
        let zero = Gf2Matrix::zeros((0..3).map(|i| i.to_string()).collect());
        assert_eq!(q_matrix(&zero).unwrap(), IntPoly1::power_of_x(3));
        let k2 = Graph::complete(2).adjacency_matrix();
        assert_eq!(q_matrix(&k2).unwrap(), p(&[0, 2]));
        assert_eq!(q_matrix_recursive(&k2).unwrap(), p(&[0, 2]));
    }
}
