//! Matroids given by their bases, as equicardinal delta-matroids.

use std::collections::BTreeMap;

use crate::delta::{SetSystem, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::graph::{bits, full_mask};
use crate::poly::IntPoly2;
use crate::tutte::graphic_rank;

/// Fails unless the feasible sets are nonempty, equicardinal, and exchange.
pub fn require_matroid(m: &SetSystem) -> Result<()> {
    let Some(&first) = m.feasible().first() else {
        return Err(Error::NotAMatroid("no bases".into()));
    };
    let r = first.count_ones();
    if m.feasible().iter().any(|b| b.count_ones() != r) {
        return Err(Error::NotAMatroid("bases differ in size".into()));
    }
    if !m.satisfies_exchange() {
        return Err(Error::NotAMatroid("basis exchange fails".into()));
    }
    Ok(())
}

/// `t(M; x, y)` by contraction and deletion on the first element that is
/// neither a loop nor a coloop; `x^i y^j` over `i` coloops and `j` loops.
pub fn tutte_matroid(m: &SetSystem) -> Result<IntPoly2> {
    require_matroid(m)?;
    Ok(tutte_rec(m))
}

fn tutte_rec(m: &SetSystem) -> IntPoly2 {
    match (0..m.n()).find(|&e| !m.is_loop(e) && !m.is_coloop(e)) {
        Some(e) => {
            tutte_rec(&m.contract(e).expect("in range"))
                + tutte_rec(&m.delete(e).expect("in range"))
        }
        None => {
            let coloops = (0..m.n()).filter(|&e| m.is_coloop(e)).count() as u32;
            IntPoly2::monomial(1, coloops, m.n() as u32 - coloops)
        }
    }
}

/// Rank of `A`: the largest intersection with a basis.
pub fn rank(m: &SetSystem, a: u64) -> u32 {
    m.feasible()
        .iter()
        .map(|&b| (a & b).count_ones())
        .max()
        .unwrap_or(0)
}

/// `sum_A (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}`.
pub fn tutte_rank_sum(m: &SetSystem) -> Result<IntPoly2> {
    require_matroid(m)?;
    if m.n() > MAX_ELEMENTS {
        return Err(Error::SizeCap {
            what: "ground set",
            actual: m.n(),
            cap: MAX_ELEMENTS,
        });
    }
    let full = full_mask(m.n());
    let rank_e = rank(m, full);
    let mut counts = BTreeMap::new();
    for a in 0..=full {
        let r = rank(m, a);
        *counts
            .entry((rank_e - r, a.count_ones() - r))
            .or_insert(0u64) += 1;
    }
    Ok(IntPoly2::from_shifted_counts(&counts, -1, -1))
}

/// `U_{k,m}`: every `k`-subset of `m` elements is a basis.
pub fn uniform(k: usize, m: usize) -> SetSystem {
    assert!(k <= m && m <= MAX_ELEMENTS);
    let bases = (0..=full_mask(m)).filter(|b| b.count_ones() as usize == k);
    SetSystem::numbered(m, bases).expect("within cap")
}

/// Cycle matroid of a multigraph: edges are elements, spanning forests are
/// bases.
pub fn cycle_matroid(n: usize, edges: &[(usize, usize)]) -> SetSystem {
    let m = edges.len();
    assert!(m <= MAX_ELEMENTS);
    let r = graphic_rank(n, edges);
    let bases = (0..=full_mask(m)).filter(|&b| {
        b.count_ones() as usize == r && {
            let sub: Vec<_> = bits(b).map(|i| edges[i]).collect();
            graphic_rank(n, &sub) == r
        }
    });
    let labels = (0..m).map(|i| format!("e{i}")).collect();
    SetSystem::new(labels, bases).expect("within cap")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly1;
    use crate::tutte::tutte;

    #[test]
    fn small_matroids() {
        let free = SetSystem::numbered(3, [0b111]).unwrap();
        assert_eq!(tutte_matroid(&free).unwrap(), IntPoly2::monomial(1, 3, 0));
        let zero = SetSystem::numbered(3, [0]).unwrap();
        assert_eq!(tutte_matroid(&zero).unwrap(), IntPoly2::monomial(1, 0, 3));
        let u12 = uniform(1, 2);
        assert_eq!(tutte_matroid(&u12).unwrap(), IntPoly2::x() + IntPoly2::y());
        assert_eq!(u12.q_delta().unwrap(), IntPoly1::from_coeffs([2, 2]));
        assert_eq!(u12.q_delta().unwrap().shift(-1), IntPoly1::monomial(2, 1));
    }

    #[test]
    fn rejects_non_matroids() {
        let d = SetSystem::numbered(2, [0, 3]).unwrap();
        assert!(matches!(tutte_matroid(&d), Err(Error::NotAMatroid(_))));
        let e = SetSystem::numbered(2, []).unwrap();
        assert!(matches!(tutte_matroid(&e), Err(Error::NotAMatroid(_))));
    }

    #[test]
    fn diagonal_matches_delta_interlace() {
        for m in 1..=5 {
            for k in 0..=m {
                let u = uniform(k, m);
                let t = tutte_matroid(&u).unwrap();
                assert_eq!(t, tutte_rank_sum(&u).unwrap());
                assert_eq!(t.diagonal(), u.q_delta().unwrap().shift(-1));
            }
        }
    }

    #[test]
    fn cycle_matroid_matches_graph_tutte() {
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let cm = cycle_matroid(4, &k4);
        assert_eq!(cm.feasible().len(), 16);
        assert_eq!(tutte_matroid(&cm).unwrap(), tutte(4, &k4));
        let with_loop = [(0, 1), (1, 1), (0, 1)];
        assert_eq!(
            tutte_matroid(&cycle_matroid(2, &with_loop)).unwrap(),
            tutte(2, &with_loop)
        );
    }
}
