//! Brute-force counting oracles and the evaluation / structure identities
//! they witness.
//!
//! Perfect-matching parities are computed by a subset DP: for a vertex set
//! `T` with lowest vertex `v`, `pm(T) = [v looped] pm(T - v) + sum over
//! neighbours u of v in T of pm(T - v - u)`. Only parities are kept.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::interlace::{global_statesum, q_nullity_statesum, q_twovar_statesum};

/// Largest graph the exponential oracles accept.
pub const ORACLE_MAX_N: usize = 16;

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::SizeCap {
            what: "vertex count",
            actual: g.n(),
            cap,
        });
    }
    Ok(())
}

/// Parity of the number of perfect matchings of `G[T]` for every mask `T`.
/// Vertices in `loops` may be covered by their own loop.
fn matching_parities(g: &Graph, loops: u64) -> Vec<bool> {
    let n = g.n();
    let mut pm = vec![false; 1usize << n];
    pm[0] = true;
    for t in 1u64..(1u64 << n) {
        let v = t.trailing_zeros() as usize;
        let rest = t & !bit(v);
        let mut p = loops >> v & 1 == 1 && pm[rest as usize];
        let mut cand = g.neighbors(v) & rest;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            p ^= pm[(rest & !bit(u)) as usize];
        }
        pm[t as usize] = p;
    }
    pm
}

/// Number of vertex subsets `T` (the empty set included) whose induced
/// subgraph has an odd number of perfect matchings. Loops of `G` may cover
/// their vertex, which is the reading under which the count equals `q_N(G;1)`
/// for looped graphs; on simple graphs it is the ordinary count.
pub fn odd_matching_subgraphs(g: &Graph) -> Result<u64> {
    check_cap(g, ORACLE_MAX_N)?;
    Ok(matching_parities(g, g.loop_mask())
        .iter()
        .filter(|&&p| p)
        .count() as u64)
}

/// Number of vertex subsets inducing a subgraph with every degree even
/// (the empty set included; no connectivity requirement).
pub fn even_subgraphs(g: &Graph) -> Result<u64> {
    check_cap(g, ORACLE_MAX_N)?;
    let n = g.n();
    Ok((0u64..(1u64 << n))
        .filter(|&t| {
            crate::graph::bits(t).all(|v| (g.neighbors(v) & t).count_ones().is_multiple_of(2))
        })
        .count() as u64)
}

/// Number of pairs `(T, S)` with `S` a subset of `T` such that `G[T]` with
/// loop status toggled on `S` has an odd number of general perfect matchings
/// (loops may cover their vertex).
pub fn odd_general_matching_subgraphs(g: &Graph) -> Result<u64> {
    check_cap(g, 12)?;
    let n = g.n();
    let mut count = 0u64;
    for s in 0u64..(1u64 << n) {
        let pm = matching_parities(g, g.loop_mask() ^ s);
        count += (0u64..(1u64 << n))
            .filter(|&t| t & s == s && pm[t as usize])
            .count() as u64;
    }
    Ok(count)
}

/// One identity: two computed columns and whether they are literally equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub pass: bool,
}

impl IdentityCheck {
    pub fn new(name: &'static str, lhs: BigInt, rhs: BigInt) -> Self {
        let pass = lhs == rhs;
        Self {
            name,
            lhs,
            rhs,
            pass,
        }
    }

    /// `a = k * b` for some odd integer `k`, written as equality of residues
    /// modulo `2|b|`. Fails outright when `b = 0`.
    pub fn odd_multiple(name: &'static str, a: &BigInt, b: &BigInt) -> Self {
        if b.is_zero() {
            return Self {
                name,
                lhs: a.clone(),
                rhs: b.clone(),
                pass: false,
            };
        }
        let m = b.abs() * 2;
        Self::new(name, a.mod_floor(&m), b.mod_floor(&m))
    }
}

/// Evaluations of `q_N` and `Q`, the three oracle counts, and every
/// evaluation identity that applies to the graph.
#[derive(Debug, Clone)]
pub struct EvaluationReport {
    pub graph_id: String,
    pub n: usize,
    /// `q_N` at -1, 0, 1, 2, 3.
    pub q_values: Vec<(i64, BigInt)>,
    /// `Q` at 0, 2, 3, 4.
    pub global_values: Vec<(i64, BigInt)>,
    pub odd_matching_subgraphs: u64,
    pub even_subgraphs: u64,
    pub odd_general_matching_subgraphs: u64,
    pub checks: Vec<IdentityCheck>,
}

impl EvaluationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn pow(base: i64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), e)
}

/// Computes the report. Identities restricted to simple graphs are only
/// included when `G` is simple.
pub fn evaluation_report(graph_id: &str, g: &Graph) -> Result<EvaluationReport> {
    let n = g.n();
    let q = q_nullity_statesum(g);
    let big_q = global_statesum(g);
    let q_at = |t: i64| q.eval_i64(t);
    let gq_at = |t: i64| big_q.eval_i64(t);

    let odd_pm = odd_matching_subgraphs(g)?;
    let even = even_subgraphs(g)?;
    let general = odd_general_matching_subgraphs(g)?;

    let mut checks = vec![
        IdentityCheck::new(
            "q_N(1) = odd perfect-matching subgraphs",
            q_at(1),
            BigInt::from(odd_pm),
        ),
        IdentityCheck::new("q_N(2) = 2^n", q_at(2), pow(2, n)),
    ];
    let full_loops = g.loop_complement_mask(g.vertex_mask());
    let k = full_loops.nullity_of(g.vertex_mask());
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    checks.push(IdentityCheck::new(
        "q_N(-1) = (-1)^n (-2)^n(G+V)",
        q_at(-1),
        pow(-2, k) * sign,
    ));
    checks.push(IdentityCheck::odd_multiple(
        "q_N(3) = odd * q_N(-1)",
        &q_at(3),
        &q_at(-1),
    ));
    if g.is_simple() {
        if n >= 1 {
            checks.push(IdentityCheck::new("q_N(0) = 0", q_at(0), BigInt::zero()));
            checks.push(IdentityCheck::new("Q(0) = 0", gq_at(0), BigInt::zero()));
        }
        checks.push(IdentityCheck::new("Q(3) = 3^n", gq_at(3), pow(3, n)));
        checks.push(IdentityCheck::new(
            "Q(4) = 2^n * even subgraphs",
            gq_at(4),
            pow(2, n) * even,
        ));
        checks.push(IdentityCheck::new(
            "Q(2) = odd general-matching subgraphs",
            gq_at(2),
            BigInt::from(general),
        ));
    }

    Ok(EvaluationReport {
        graph_id: graph_id.to_string(),
        n,
        q_values: [-1, 0, 1, 2, 3].iter().map(|&t| (t, q_at(t))).collect(),
        global_values: [0, 2, 3, 4].iter().map(|&t| (t, gq_at(t))).collect(),
        odd_matching_subgraphs: odd_pm,
        even_subgraphs: even,
        odd_general_matching_subgraphs: general,
        checks,
    })
}

/// Structural identities of `q_N` and `q` on a simple graph: lowest
/// exponent equals the component count, no constant term, the coefficient
/// relations `a_1 = a_01 = -a_10`, `a_1 = sum_i a_i1 2^i`,
/// `sum_{i>=1} a_i1 2^i = 0`, and, when `orbit_cap` is given, degree equals
/// the largest independence number over the pivot orbit.
pub fn structure_checks(g: &Graph, orbit_cap: Option<usize>) -> Result<Vec<IdentityCheck>> {
    if !g.is_simple() {
        return Err(Error::UnsupportedInput(
            "structure identities are stated for simple graphs".into(),
        ));
    }
    let n = g.n();
    let q = q_nullity_statesum(g);
    let q2 = q_twovar_statesum(g);
    let mut out = Vec::new();
    if n >= 1 {
        out.push(IdentityCheck::new(
            "lowest exponent of q_N = components",
            BigInt::from(q.lowest_exponent().unwrap_or(0)),
            BigInt::from(g.components()),
        ));
        out.push(IdentityCheck::new(
            "q_N has no constant term",
            q.coeff(0),
            BigInt::zero(),
        ));
    }
    if n > 1 {
        let a1 = q.coeff(1);
        out.push(IdentityCheck::new("a_1 = a_01", a1.clone(), q2.coeff(0, 1)));
        out.push(IdentityCheck::new(
            "a_1 = -a_10",
            a1.clone(),
            -q2.coeff(1, 0),
        ));
        let weighted = |from: u32| -> BigInt {
            q2.terms()
                .filter(|&((i, j), _)| j == 1 && i >= from)
                .map(|((i, _), c)| c * pow(2, i as usize))
                .sum()
        };
        out.push(IdentityCheck::new("a_1 = sum_i a_i1 2^i", a1, weighted(0)));
        out.push(IdentityCheck::new(
            "sum_{i>=1} a_i1 2^i = 0",
            weighted(1),
            BigInt::zero(),
        ));
    }
    if let Some(cap) = orbit_cap {
        let stats = g.stats(cap)?;
        out.push(IdentityCheck::new(
            "deg q_N = max independence over pivot orbit",
            BigInt::from(q.degree().unwrap_or(0)),
            BigInt::from(stats.pivot_orbit_max_independence),
        ));
    }
    Ok(out)
}
