//! Set systems and delta-matroids.
//!
//! Feasible sets are bitmasks over the ground set `0..n` (element labels are
//! kept alongside). Deletion and contraction remove the element from the
//! ground set, so `D \ e` and `D / e` live on `E - e`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::evaluations::IdentityCheck;
use crate::gf2::Gf2Matrix;
use crate::graph::{bit, bits, full_mask, remove_bit, Graph};
use crate::poly::{IntPoly1, IntPoly2};

/// Largest ground set for the `2^|E|` sums.
pub const MAX_ELEMENTS: usize = 20;
/// Largest ground set for the `4^|E|` global sum.
pub const MAX_GLOBAL_ELEMENTS: usize = 12;
/// Largest ground set for the exhaustive vf-safety search.
pub const MAX_VF_SEARCH: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    labels: Vec<String>,
    feasible: Vec<u64>,
}

impl SetSystem {
    /// Sorts and deduplicates the feasible family.
    pub fn new(labels: Vec<String>, feasible: impl IntoIterator<Item = u64>) -> Result<Self> {
        let n = labels.len();
        if n > 64 {
            return Err(Error::SizeCap {
                what: "ground set",
                actual: n,
                cap: 64,
            });
        }
        let mut f: Vec<u64> = feasible.into_iter().collect();
        if let Some(bad) = f.iter().find(|&&m| m & !full_mask(n) != 0) {
            return Err(Error::UnknownElement(format!(
                "bit {}",
                63 - (bad & !full_mask(n)).leading_zeros()
            )));
        }
        f.sort_unstable();
        f.dedup();
        Ok(Self {
            labels,
            feasible: f,
        })
    }

    /// Ground set `0..n` with numeric labels.
    pub fn numbered(n: usize, feasible: impl IntoIterator<Item = u64>) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()).collect(), feasible)
    }

    /// Builds from label strings such as `"abc"`, one character per element.
    pub fn from_words(ground: &str, words: &[&str]) -> Result<Self> {
        let labels: Vec<String> = ground.chars().map(|c| c.to_string()).collect();
        let mut f = Vec::new();
        for w in words {
            let mut m = 0u64;
            for c in w.chars() {
                let i = ground
                    .chars()
                    .position(|g| g == c)
                    .ok_or_else(|| Error::UnknownElement(c.to_string()))?;
                m |= bit(i);
            }
            f.push(m);
        }
        Self::new(labels, f)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn feasible(&self) -> &[u64] {
        &self.feasible
    }

    pub fn is_feasible(&self, x: u64) -> bool {
        self.feasible.binary_search(&x).is_ok()
    }

    pub fn is_proper(&self) -> bool {
        self.n() > 0
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    /// Mask of labelled elements.
    pub fn mask_of(&self, labels: &[&str]) -> Result<u64> {
        labels
            .iter()
            .try_fold(0, |m, l| Ok(m | bit(self.index_of(l)?)))
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e >= self.n() {
            return Err(Error::UnknownElement(e.to_string()));
        }
        Ok(())
    }

    fn require_nonempty(&self) -> Result<()> {
        if self.feasible.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Ok(())
    }

    fn require_size(&self, cap: usize) -> Result<()> {
        if self.n() > cap {
            return Err(Error::SizeCap {
                what: "ground set",
                actual: self.n(),
                cap,
            });
        }
        Ok(())
    }

    /// Element in every feasible set.
    pub fn is_coloop(&self, e: usize) -> bool {
        self.feasible.iter().all(|&f| f & bit(e) != 0)
    }

    /// Element in no feasible set.
    pub fn is_loop(&self, e: usize) -> bool {
        self.feasible.iter().all(|&f| f & bit(e) == 0)
    }

    fn drop_element(&self, e: usize, sets: impl IntoIterator<Item = u64>) -> Self {
        let mut labels = self.labels.clone();
        labels.remove(e);
        Self::new(labels, sets.into_iter().map(|f| remove_bit(f, e))).expect("smaller ground set")
    }

    /// `D \ e` on `E - e`; equals `D / e` when `e` is a coloop.
    pub fn delete(&self, e: usize) -> Result<Self> {
        self.check_element(e)?;
        if !self.feasible.is_empty() && self.is_coloop(e) {
            return self.contract(e);
        }
        Ok(self.drop_element(
            e,
            self.feasible.iter().copied().filter(|&f| f & bit(e) == 0),
        ))
    }

    /// `D / e` on `E - e`; equals `D \ e` when `e` is a loop.
    pub fn contract(&self, e: usize) -> Result<Self> {
        self.check_element(e)?;
        if self.is_loop(e) {
            return Ok(self.drop_element(e, self.feasible.iter().copied()));
        }
        Ok(self.drop_element(
            e,
            self.feasible.iter().copied().filter(|&f| f & bit(e) != 0),
        ))
    }

    /// `D * X`.
    pub fn twist(&self, x: u64) -> Self {
        Self::new(self.labels.clone(), self.feasible.iter().map(|&f| f ^ x))
            .expect("same ground set")
    }

    /// `D + e`: toggles `F + e` for every feasible `F` missing `e`.
    pub fn loop_complement_at(&self, e: usize) -> Self {
        let mut set: HashSet<u64> = self.feasible.iter().copied().collect();
        for &f in &self.feasible {
            if f & bit(e) == 0 && !set.remove(&(f | bit(e))) {
                set.insert(f | bit(e));
            }
        }
        Self::new(self.labels.clone(), set).expect("same ground set")
    }

    /// `D + X`, one point at a time.
    pub fn loop_complement(&self, x: u64) -> Self {
        bits(x).fold(self.clone(), |d, e| d.loop_complement_at(e))
    }

    /// Dual pivot `*e +e *e`.
    pub fn dual_pivot_at(&self, e: usize) -> Self {
        self.twist(bit(e)).loop_complement_at(e).twist(bit(e))
    }

    /// Dual pivot at every point of `X`.
    pub fn dual_pivot(&self, x: u64) -> Self {
        bits(x).fold(self.clone(), |d, e| d.dual_pivot_at(e))
    }

    /// Symmetric exchange axiom. Does not check properness.
    pub fn satisfies_exchange(&self) -> bool {
        for &x in &self.feasible {
            for &y in &self.feasible {
                let diff = x ^ y;
                for u in bits(diff) {
                    if !bits(diff).any(|v| self.is_feasible(x ^ (bit(u) | bit(v)))) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Proper and satisfies symmetric exchange.
    pub fn is_delta_matroid(&self) -> bool {
        self.is_proper() && self.satisfies_exchange()
    }

    /// `d_D(X) = min |F Δ X|`.
    pub fn distance(&self, x: u64) -> Result<u32> {
        self.require_nonempty()?;
        Ok(self
            .feasible
            .iter()
            .map(|&f| (f ^ x).count_ones())
            .min()
            .expect("nonempty"))
    }

    /// Distances of every subset, by breadth-first search on the cube from
    /// the feasible sets.
    pub fn all_distances(&self) -> Result<Vec<u32>> {
        self.require_nonempty()?;
        self.require_size(MAX_ELEMENTS)?;
        let n = self.n();
        let mut dist = vec![u32::MAX; 1 << n];
        let mut queue = VecDeque::new();
        for &f in &self.feasible {
            dist[f as usize] = 0;
            queue.push_back(f as usize);
        }
        while let Some(x) = queue.pop_front() {
            for e in 0..n {
                let y = x ^ 1 << e;
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        Ok(dist)
    }

    /// `q_Δ(D; x) = sum_X x^{d(X)}`.
    pub fn q_delta(&self) -> Result<IntPoly1> {
        let dist = self.all_distances()?;
        let mut counts = vec![0u64; self.n() + 1];
        for d in dist {
            counts[d as usize] += 1;
        }
        Ok(IntPoly1::from_shifted_counts(&counts, 0))
    }

    /// `q_Δ` by deletion and twisted deletion on the first element that is
    /// neither a loop nor a coloop; `(x+1)^|E|` once every element is one.
    pub fn q_delta_recursive(&self) -> Result<IntPoly1> {
        self.require_nonempty()?;
        self.require_size(MAX_ELEMENTS)?;
        if !self.is_delta_matroid() && self.n() > 0 {
            return Err(Error::UnsupportedInput(
                "recursion needs a delta-matroid".into(),
            ));
        }
        Ok(self.q_delta_rec())
    }

    fn q_delta_rec(&self) -> IntPoly1 {
        match (0..self.n()).find(|&e| !self.is_loop(e) && !self.is_coloop(e)) {
            None => IntPoly1::shifted_power(self.n() as u32, 1),
            Some(e) => {
                let del = self.delete(e).expect("element in range");
                let twd = self.twist(bit(e)).delete(e).expect("element in range");
                del.q_delta_rec() + twd.q_delta_rec()
            }
        }
    }

    /// `Q_Δ(D; x) = sum_X sum_{Z ⊆ X} x^{d_{D+Z}(X)}`.
    pub fn q_delta_global(&self) -> Result<IntPoly1> {
        self.require_nonempty()?;
        self.require_size(MAX_GLOBAL_ELEMENTS)?;
        let n = self.n();
        let full = full_mask(n);
        let mut counts = vec![0u64; n + 1];
        for z in 0..=full {
            let dz = self.loop_complement(z);
            if dz.feasible.is_empty() {
                return Err(Error::UndefinedDistance(self.render_set(z)));
            }
            let dist = dz.all_distances()?;
            // supersets of z
            let free = full & !z;
            let mut s = free;
            loop {
                counts[dist[(z | s) as usize] as usize] += 1;
                if s == 0 {
                    break;
                }
                s = (s - 1) & free;
            }
        }
        Ok(IntPoly1::from_shifted_counts(&counts, 0))
    }

    /// `q̄(D; x, y) = sum_X x^{|X|} y^{d(X)}`.
    pub fn q_bar(&self) -> Result<IntPoly2> {
        let dist = self.all_distances()?;
        let mut out = IntPoly2::zero();
        let mut counts = std::collections::BTreeMap::new();
        for (x, d) in dist.into_iter().enumerate() {
            *counts.entry(((x as u64).count_ones(), d)).or_insert(0u64) += 1;
        }
        for ((i, j), c) in counts {
            out.add_term(i, j, BigInt::from(c));
        }
        Ok(out)
    }

    /// The literal printed form `sum_X x^{|X|} (y-1)^{d(X)}`, kept as a
    /// diagnostic: it does not satisfy the graph relation.
    pub fn q_bar_printed(&self) -> Result<IntPoly2> {
        let dist = self.all_distances()?;
        let mut counts = std::collections::BTreeMap::new();
        for (x, d) in dist.into_iter().enumerate() {
            *counts.entry(((x as u64).count_ones(), d)).or_insert(0u64) += 1;
        }
        Ok(IntPoly2::from_shifted_counts(&counts, 0, -1))
    }

    /// `q̄` through its three recurrences on the first element.
    pub fn q_bar_recursive(&self) -> Result<IntPoly2> {
        self.require_nonempty()?;
        self.require_size(MAX_ELEMENTS)?;
        if !self.is_delta_matroid() && self.n() > 0 {
            return Err(Error::UnsupportedInput(
                "recursion needs a delta-matroid".into(),
            ));
        }
        Ok(self.q_bar_rec())
    }

    fn q_bar_rec(&self) -> IntPoly2 {
        if self.n() == 0 {
            return IntPoly2::one();
        }
        let u = 0;
        if self.is_loop(u) {
            let f = IntPoly2::one() + IntPoly2::monomial(1, 1, 1);
            f * self.delete(u).expect("in range").q_bar_rec()
        } else if self.is_coloop(u) {
            let f = IntPoly2::x() + IntPoly2::y();
            f * self.twist(bit(u)).delete(u).expect("in range").q_bar_rec()
        } else {
            let d = self.delete(u).expect("in range").q_bar_rec();
            let t = self.twist(bit(u)).delete(u).expect("in range").q_bar_rec();
            d + IntPoly2::x() * t
        }
    }

    /// Whether every feasible set size has one parity.
    pub fn equal_parity(&self) -> bool {
        let mut par = self.feasible.iter().map(|f| f.count_ones() % 2);
        match par.next() {
            None => true,
            Some(p) => par.all(|q| q == p),
        }
    }

    /// `X` (with `∅` feasible in `D * X`) and the symmetric matrix `A` with
    /// `D = M_A * X`, if one exists. Entries of `A` are fixed by the
    /// singletons and pairs of `D * X`; the whole family is then compared.
    pub fn binary_representation(&self) -> Result<Option<(u64, Graph)>> {
        self.require_size(16)?;
        let n = self.n();
        for &x in &self.feasible {
            let t = self.twist(x);
            let mut g = Graph::new(self.labels.clone())?;
            for v in 0..n {
                if t.is_feasible(bit(v)) {
                    g.add_edge(v, v);
                }
            }
            for u in 0..n {
                for v in u + 1..n {
                    let diag = g.is_looped(u) && g.is_looped(v);
                    if t.is_feasible(bit(u) | bit(v)) != diag {
                        g.add_edge(u, v);
                    }
                }
            }
            if adjacency_delta_matroid(&g).feasible == t.feasible {
                return Ok(Some((x, g)));
            }
        }
        Ok(None)
    }

    pub fn is_binary(&self) -> Result<bool> {
        Ok(self.binary_representation()?.is_some())
    }

    /// vf-safety by the binary criterion, else by exhausting the orbit under
    /// twists and loop complements for small ground sets.
    pub fn vf_safety(&self) -> Result<VfSafety> {
        if !self.is_delta_matroid() {
            return Ok(VfSafety::Violated);
        }
        if self.n() <= 16 && self.is_binary()? {
            return Ok(VfSafety::Binary);
        }
        if self.n() > MAX_VF_SEARCH {
            return Ok(VfSafety::Unknown);
        }
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut queue = VecDeque::from([self.clone()]);
        seen.insert(self.feasible.clone());
        while let Some(d) = queue.pop_front() {
            if !d.is_delta_matroid() {
                return Ok(VfSafety::Violated);
            }
            for e in 0..self.n() {
                for next in [d.twist(bit(e)), d.loop_complement_at(e)] {
                    if seen.insert(next.feasible.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(VfSafety::Searched)
    }

    /// `{a, bc, ∅}` style rendering of one set.
    pub fn render_set(&self, x: u64) -> String {
        if x == 0 {
            return "∅".into();
        }
        let short = self.labels.iter().all(|l| l.chars().count() == 1);
        let parts: Vec<&str> = bits(x).map(|i| self.labels[i].as_str()).collect();
        if short {
            parts.concat()
        } else {
            format!("{{{}}}", parts.join(","))
        }
    }

    /// Feasible sets ordered by size, then lexicographically by labels.
    pub fn sorted_family(&self) -> Vec<u64> {
        let mut f = self.feasible.clone();
        f.sort_by_key(|&x| (x.count_ones(), bits(x).collect::<Vec<_>>()));
        f
    }
}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .sorted_family()
            .iter()
            .map(|&x| self.render_set(x))
            .collect();
        write!(
            f,
            "({{{}}}, {{{}}})",
            self.labels.join(","),
            parts.join(", ")
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VfSafety {
    /// Representable over GF(2), hence vf-safe.
    Binary,
    /// Every system reachable by twists and loop complements is a
    /// delta-matroid.
    Searched,
    /// Some reachable system is not a delta-matroid.
    Violated,
    /// Too large to search and not shown binary.
    Unknown,
}

impl VfSafety {
    pub fn is_safe(self) -> bool {
        matches!(self, VfSafety::Binary | VfSafety::Searched)
    }
}

impl fmt::Display for VfSafety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VfSafety::Binary => "vf-safe (binary)",
            VfSafety::Searched => "vf-safe (orbit search)",
            VfSafety::Violated => "not vf-safe",
            VfSafety::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

/// `M_G`: subsets `X` with `A(G)[X]` invertible over GF(2).
pub fn adjacency_delta_matroid(g: &Graph) -> SetSystem {
    let n = g.n();
    assert!(n <= MAX_ELEMENTS, "adjacency delta-matroid above size cap");
    let f = (0..=full_mask(n)).filter(|&x| g.rank_of(x) == x.count_ones() as usize);
    SetSystem::new(g.labels().to_vec(), f).expect("labels within cap")
}

/// `M_A`: subsets indexing invertible principal submatrices of `A`.
pub fn matrix_delta_matroid(a: &Gf2Matrix) -> Result<SetSystem> {
    let n = a.dim();
    if n > MAX_ELEMENTS {
        return Err(Error::SizeCap {
            what: "matrix dimension",
            actual: n,
            cap: MAX_ELEMENTS,
        });
    }
    let f = (0..=full_mask(n)).filter(|&x| a.rank_mask(x) == x.count_ones() as usize);
    SetSystem::new(a.labels().to_vec(), f)
}

/// `(x-1)^D p(x-1, (y-1)/(x-1))` with `D` the `y`-degree of `p`.
pub fn q_bar_substitute(p: &IntPoly2) -> (IntPoly2, u32) {
    let d = p.max_y_degree().unwrap_or(0);
    let mut out = IntPoly2::zero();
    for ((i, j), c) in p.terms() {
        out += &(&IntPoly2::shifted_monomial(i + d - j, j, -1, -1) * c);
    }
    (out, d)
}

/// `(x-1)^d q`, for comparing with [`q_bar_substitute`].
pub fn times_x_minus_one_pow(q: &IntPoly2, d: u32) -> IntPoly2 {
    IntPoly2::shifted_monomial(d, 0, -1, 0) * q.clone()
}

/// The value in the dual-pivot evaluation: `(-1)^n (-2)^{d_{D *̄ E}(∅)}`,
/// `None` when `D *̄ E` has no feasible sets.
pub fn dual_pivot_evaluation(d: &SetSystem) -> Option<BigInt> {
    let p = d.dual_pivot(full_mask(d.n()));
    let dist = p.distance(0).ok()?;
    let sign = if d.n().is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    Some(sign * BigInt::from(-2).pow(dist))
}

/// Applicable evaluation identities of a delta-matroid.
pub fn delta_evaluations(d: &SetSystem) -> Result<Vec<IdentityCheck>> {
    let n = d.n() as u32;
    let q = d.q_delta()?;
    let mut out = vec![
        IdentityCheck::new("q_Δ(1) = 2^n", q.eval_i64(1), BigInt::from(2).pow(n)),
        IdentityCheck::new(
            "q_Δ(0) = |F|",
            q.eval_i64(0),
            BigInt::from(d.feasible().len()),
        ),
    ];
    if d.equal_parity() {
        out.push(IdentityCheck::new(
            "q_Δ(-1) = 0",
            q.eval_i64(-1),
            BigInt::zero(),
        ));
    }
    let safety = if d.n() <= MAX_GLOBAL_ELEMENTS {
        d.vf_safety()?
    } else {
        VfSafety::Unknown
    };
    if safety.is_safe() && d.n() <= MAX_GLOBAL_ELEMENTS {
        let gq = d.q_delta_global()?;
        out.push(IdentityCheck::new(
            "Q_Δ(-2) = 0",
            gq.eval_i64(-2),
            BigInt::zero(),
        ));
    }
    if safety == VfSafety::Binary {
        out.push(IdentityCheck::odd_multiple(
            "q_Δ(2) = odd * q_Δ(-2)",
            &q.eval_i64(2),
            &q.eval_i64(-2),
        ));
    }
    Ok(out)
}

/// Diagnostic for the dual-pivot evaluation, whose printed form lacks the
/// distance argument. Reports `(q_Δ(-2), (-1)^n (-2)^{d(∅)})`.
pub fn dual_pivot_diagnostic(d: &SetSystem) -> Result<(BigInt, Option<BigInt>)> {
    Ok((d.q_delta()?.eval_i64(-2), dual_pivot_evaluation(d)))
}

/// Checks both `q_Δ` recursions at every admissible choice. The first uses
/// every element that is neither a loop nor a coloop; the second (when `∅`
/// is feasible) every feasible `X` and `e ∈ X`.
pub fn q_delta_recursion_checks(d: &SetSystem) -> Result<(usize, usize)> {
    let q = d.q_delta()?;
    let (mut ok, mut total) = (0, 0);
    for e in 0..d.n() {
        if d.is_loop(e) || d.is_coloop(e) {
            continue;
        }
        let rhs = d.delete(e)?.q_delta()? + d.twist(bit(e)).delete(e)?.q_delta()?;
        total += 1;
        ok += (rhs == q) as usize;
    }
    if d.is_feasible(0) {
        for &x in d.feasible() {
            for e in bits(x) {
                let rhs = d.delete(e)?.q_delta()? + d.twist(x).delete(e)?.q_delta()?;
                total += 1;
                ok += (rhs == q) as usize;
            }
        }
    }
    if d.n() > 0 && (0..d.n()).all(|e| d.is_loop(e) || d.is_coloop(e)) {
        total += 1;
        ok += (q == IntPoly1::shifted_power(d.n() as u32, 1)) as usize;
    }
    Ok((ok, total))
}

/// Checks the three `q̄` recurrences at every element.
pub fn q_bar_recursion_checks(d: &SetSystem) -> Result<(usize, usize)> {
    let q = d.q_bar()?;
    let (mut ok, mut total) = (0, 0);
    for u in 0..d.n() {
        let rhs = if d.is_loop(u) {
            (IntPoly2::one() + IntPoly2::monomial(1, 1, 1)) * d.delete(u)?.q_bar()?
        } else if d.is_coloop(u) {
            (IntPoly2::x() + IntPoly2::y()) * d.twist(bit(u)).delete(u)?.q_bar()?
        } else {
            d.delete(u)?.q_bar()? + IntPoly2::x() * d.twist(bit(u)).delete(u)?.q_bar()?
        };
        total += 1;
        ok += (rhs == q) as usize;
    }
    Ok((ok, total))
}

/// Checks the three-branch `Q_Δ` recursion at every admissible element.
pub fn q_delta_global_recursion_checks(d: &SetSystem) -> Result<(usize, usize)> {
    let q = d.q_delta_global()?;
    let (mut ok, mut total) = (0, 0);
    for e in 0..d.n() {
        let dp = d.dual_pivot_at(e);
        if d.is_loop(e) || d.is_coloop(e) || dp.is_coloop(e) {
            continue;
        }
        let rhs = d.delete(e)?.q_delta_global()?
            + d.twist(bit(e)).delete(e)?.q_delta_global()?
            + dp.delete(e)?.q_delta_global()?;
        total += 1;
        ok += (rhs == q) as usize;
    }
    Ok((ok, total))
}

/// Whether `a` is an odd multiple of `b`.
pub fn is_odd_multiple(a: &BigInt, b: &BigInt) -> bool {
    if b.is_zero() {
        return false;
    }
    let (k, r) = a.div_rem(b);
    r.is_zero() && k.abs().is_odd()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interlace::{global_statesum, q_nullity_statesum, q_twovar_statesum};
    use crate::random::{random_graph, random_mask, rng};

    fn example() -> SetSystem {
        SetSystem::from_words("abc", &["abc", "ab", "ac", "bc", "b", "c", ""]).unwrap()
    }

    #[test]
    fn exchange_examples() {
        let m = example();
        assert!(m.is_delta_matroid());
        let ma = m.loop_complement(m.mask_of(&["a"]).unwrap());
        let expect = SetSystem::from_words("abc", &["a", "b", "c", "bc", ""]).unwrap();
        assert_eq!(ma, expect);
        assert!(!ma.is_delta_matroid());
        let single = SetSystem::from_words("ab", &["a"]).unwrap();
        assert!(single.is_delta_matroid());
        assert_eq!(m.vf_safety().unwrap(), VfSafety::Violated);
    }

    #[test]
    fn s3_relation() {
        let mut r = rng(3);
        for _ in 0..30 {
            let n = 1 + (random_mask(&mut r, 3) as usize % 6);
            let fam: Vec<u64> = (0..=full_mask(n))
                .filter(|_| random_mask(&mut r, 1) == 1)
                .collect();
            let d = SetSystem::numbered(n, fam).unwrap();
            for e in 0..n {
                let t = bit(e);
                let lhs = d.twist(t).loop_complement_at(e).twist(t);
                let rhs = d.loop_complement_at(e).twist(t).loop_complement_at(e);
                assert_eq!(lhs, rhs);
                assert_eq!(d.twist(0), d);
                assert_eq!(d.loop_complement_at(e).loop_complement_at(e), d);
            }
            if n >= 2 {
                let a = d.loop_complement_at(0).loop_complement_at(1);
                let b = d.loop_complement_at(1).loop_complement_at(0);
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(adjacency_delta_matroid(&Graph::empty(3)).feasible(), &[0]);
        assert_eq!(
            adjacency_delta_matroid(&Graph::complete(2)).feasible(),
            &[0, 3]
        );
        let looped = Graph::from_edges(1, &[(0, 0)]);
        assert_eq!(adjacency_delta_matroid(&looped).feasible(), &[0, 1]);
        let k2 = adjacency_delta_matroid(&Graph::complete(2));
        assert_eq!(k2.distance(1).unwrap(), 1);
        assert_eq!(k2.q_delta().unwrap(), IntPoly1::from_coeffs([2, 2]));
        assert_eq!(k2.q_delta().unwrap().shift(-1), IntPoly1::monomial(2, 1));
        let e1 = adjacency_delta_matroid(&Graph::empty(1));
        assert_eq!(e1.q_delta_global().unwrap(), IntPoly1::from_coeffs([2, 1]));
        assert_eq!(
            k2.q_delta_global().unwrap().shift(-2),
            IntPoly1::monomial(3, 1)
        );
    }

    #[test]
    fn empty_family_errors() {
        let d = SetSystem::numbered(2, []).unwrap();
        assert_eq!(d.distance(0), Err(Error::EmptyFamily));
        assert_eq!(d.q_delta(), Err(Error::EmptyFamily));
    }

    #[test]
    fn q_bar_of_k2() {
        let k2 = adjacency_delta_matroid(&Graph::complete(2));
        let qb = k2.q_bar().unwrap();
        assert_eq!(qb.to_string(), "x^2 + 2xy + 1");
        let (sub, d) = q_bar_substitute(&qb);
        let q = q_twovar_statesum(&Graph::complete(2));
        assert_eq!(sub, times_x_minus_one_pow(&q, d));
        let (printed, d2) = q_bar_substitute(&k2.q_bar_printed().unwrap());
        assert_ne!(printed, times_x_minus_one_pow(&q, d2));
    }

    #[test]
    fn graph_relations_on_random_graphs() {
        let mut r = rng(17);
        for _ in 0..40 {
            let n = 1 + random_mask(&mut r, 3) as usize % 6;
            let g = random_graph(&mut r, n, 0.5, true);
            let m = adjacency_delta_matroid(&g);
            assert!(m.is_delta_matroid());
            assert_eq!(m.q_delta().unwrap().shift(-1), q_nullity_statesum(&g));
            assert_eq!(m.q_delta_recursive().unwrap(), m.q_delta().unwrap());
            assert_eq!(m.q_bar_recursive().unwrap(), m.q_bar().unwrap());
            for x in 0..=full_mask(n) {
                assert_eq!(m.distance(x).unwrap() as usize, g.nullity_of(x));
            }
            let (ok, total) = q_delta_recursion_checks(&m).unwrap();
            assert_eq!(ok, total);
            let (ok, total) = q_bar_recursion_checks(&m).unwrap();
            assert_eq!(ok, total);
            if g.is_simple() {
                assert_eq!(m.q_delta_global().unwrap().shift(-2), global_statesum(&g));
            }
        }
    }

    #[test]
    fn twisted_deletion_needs_feasible_x() {
        // ({a}, {∅}) with X = {a}: the second recursion gives 2, not 1 + x
        let d = SetSystem::from_words("a", &[""]).unwrap();
        let rhs = d.delete(0).unwrap().q_delta().unwrap()
            + d.twist(1).delete(0).unwrap().q_delta().unwrap();
        assert_eq!(rhs, IntPoly1::constant(2));
        assert_eq!(d.q_delta().unwrap(), IntPoly1::from_coeffs([1, 1]));
    }

    #[test]
    fn binary_and_vf_safety() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 2)]);
        let m = adjacency_delta_matroid(&g).twist(0b101);
        let (x, h) = m
            .binary_representation()
            .unwrap()
            .expect("twisted graph is binary");
        assert_eq!(adjacency_delta_matroid(&h).twist(x), m);
        assert_eq!(m.vf_safety().unwrap(), VfSafety::Binary);
        for c in delta_evaluations(&m).unwrap() {
            assert!(c.pass, "{}", c.name);
        }
    }

    #[test]
    fn global_recursion_on_twisted_graphs() {
        let mut r = rng(23);
        for _ in 0..25 {
            let n = 1 + random_mask(&mut r, 3) as usize % 5;
            let g = random_graph(&mut r, n, 0.5, true);
            let m = adjacency_delta_matroid(&g).twist(random_mask(&mut r, n));
            let (ok, total) = q_delta_global_recursion_checks(&m).unwrap();
            assert_eq!(ok, total);
            for c in delta_evaluations(&m).unwrap() {
                assert!(c.pass, "{}", c.name);
            }
        }
    }

    #[test]
    fn odd_multiple_helper() {
        assert!(is_odd_multiple(&BigInt::from(-9), &BigInt::from(3)));
        assert!(!is_odd_multiple(&BigInt::from(6), &BigInt::from(3)));
        assert!(!is_odd_multiple(&BigInt::from(0), &BigInt::from(0)));
    }
}
