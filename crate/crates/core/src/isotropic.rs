//! Isotropic systems over the Klein four-group and their Tutte-Martin
//! polynomials.
//!
//! `K = {0, x, y, z}` is encoded as GF(2)^2 with `x = (1,0)`, `y = (0,1)`,
//! `z = (1,1)`. Under this encoding the form `<a,b> = 1` iff `a`, `b` are
//! distinct and nonzero becomes the symplectic form `a.p b.q + a.q b.p`. A
//! vector in `K^V` is a pair of bitmasks `(p, q)`; subspace work is XOR
//! elimination on the 128-bit word `p | q << 64`.

use std::fmt;

use crate::error::{Error, Result};
use crate::euler::{FourRegularGraph, Host, TransitionSystem, PAIRINGS};
use crate::gf2::rank_of_words;
use crate::graph::{bit, bits, Graph};
use crate::poly::IntPoly1;

/// Largest `|V|` for the restricted polynomial (`2^|V|` terms).
pub const MAX_RESTRICTED: usize = 20;
/// Largest `|V|` for the global polynomial (`3^|V|` terms).
pub const MAX_GLOBAL: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KElem {
    Zero,
    X,
    Y,
    Z,
}

impl KElem {
    pub const NONZERO: [KElem; 3] = [KElem::X, KElem::Y, KElem::Z];

    pub fn bits(self) -> (bool, bool) {
        match self {
            KElem::Zero => (false, false),
            KElem::X => (true, false),
            KElem::Y => (false, true),
            KElem::Z => (true, true),
        }
    }

    pub fn from_bits(p: bool, q: bool) -> Self {
        match (p, q) {
            (false, false) => KElem::Zero,
            (true, false) => KElem::X,
            (false, true) => KElem::Y,
            (true, true) => KElem::Z,
        }
    }

    pub fn form(self, other: Self) -> bool {
        self != KElem::Zero && other != KElem::Zero && self != other
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "0" => Some(KElem::Zero),
            "x" => Some(KElem::X),
            "y" => Some(KElem::Y),
            "z" => Some(KElem::Z),
            _ => None,
        }
    }
}

impl std::ops::Add for KElem {
    type Output = Self;

    fn add(self, other: Self) -> Self {
        let (a, b) = (self.bits(), other.bits());
        Self::from_bits(a.0 ^ b.0, a.1 ^ b.1)
    }
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            KElem::Zero => "0",
            KElem::X => "x",
            KElem::Y => "y",
            KElem::Z => "z",
        };
        f.write_str(c)
    }
}

/// Element of `K^V` for `|V| <= 64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct KVector {
    pub p: u64,
    pub q: u64,
}

impl KVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_elems(elems: &[KElem]) -> Self {
        let mut v = Self::zero();
        for (i, &e) in elems.iter().enumerate() {
            v.set(i, e);
        }
        v
    }

    /// Every coordinate in `0..n` set to `e`.
    pub fn constant(n: usize, e: KElem) -> Self {
        Self::from_elems(&vec![e; n])
    }

    pub fn get(&self, v: usize) -> KElem {
        KElem::from_bits(self.p >> v & 1 == 1, self.q >> v & 1 == 1)
    }

    pub fn set(&mut self, v: usize, e: KElem) {
        let (p, q) = e.bits();
        self.p = self.p & !bit(v) | (p as u64) << v;
        self.q = self.q & !bit(v) | (q as u64) << v;
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            p: self.p ^ other.p,
            q: self.q ^ other.q,
        }
    }

    /// `X|P`: keeps the coordinates in mask `s`.
    pub fn restrict(&self, s: u64) -> Self {
        Self {
            p: self.p & s,
            q: self.q & s,
        }
    }

    pub fn support(&self) -> u64 {
        self.p | self.q
    }

    pub fn form(&self, other: &Self) -> bool {
        ((self.p & other.q).count_ones() + (self.q & other.p).count_ones()) % 2 == 1
    }

    pub fn word(&self) -> u128 {
        self.p as u128 | (self.q as u128) << 64
    }

    fn from_word(w: u128) -> Self {
        Self {
            p: w as u64,
            q: (w >> 64) as u64,
        }
    }

    pub fn elems(&self, n: usize) -> Vec<KElem> {
        (0..n).map(|v| self.get(v)).collect()
    }

    /// `(e0,e1,...)` over the first `n` coordinates.
    pub fn render(&self, n: usize) -> String {
        let parts: Vec<String> = self.elems(n).iter().map(|e| e.to_string()).collect();
        format!("({})", parts.join(","))
    }

    fn require_nonzero(&self, n: usize, labels: &[String]) -> Result<()> {
        match (0..n).find(|&v| self.get(v) == KElem::Zero) {
            Some(v) => Err(Error::ZeroEntry(labels[v].clone())),
            None => Ok(()),
        }
    }
}

/// Row-reduced basis of the span of `vs`.
fn reduce(vs: impl IntoIterator<Item = u128>) -> Vec<u128> {
    let mut basis: Vec<u128> = Vec::new();
    for mut v in vs {
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// An isotropic system `(V, L)`, `L` held as a GF(2) basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropicSystem {
    labels: Vec<String>,
    basis: Vec<KVector>,
}

impl IsotropicSystem {
    /// Spans `generators` and validates dimension `|V|` and isotropy.
    pub fn new(labels: Vec<String>, generators: impl IntoIterator<Item = KVector>) -> Result<Self> {
        let n = labels.len();
        if n > 64 {
            return Err(Error::SizeCap {
                what: "isotropic ground set",
                actual: n,
                cap: 64,
            });
        }
        let basis: Vec<KVector> = reduce(generators.into_iter().map(|v| v.word()))
            .into_iter()
            .map(KVector::from_word)
            .collect();
        let full = crate::graph::full_mask(n);
        if basis.iter().any(|b| b.support() & !full != 0) {
            return Err(Error::NotIsotropic(
                "generator outside the ground set".into(),
            ));
        }
        if basis.len() != n {
            return Err(Error::NotIsotropic(format!(
                "subspace has dimension {}, expected {n}",
                basis.len()
            )));
        }
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i + 1..] {
                if a.form(b) {
                    return Err(Error::NotIsotropic(format!(
                        "<{}, {}> = 1",
                        a.render(n),
                        b.render(n)
                    )));
                }
            }
        }
        Ok(Self { labels, basis })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis(&self) -> &[KVector] {
        &self.basis
    }

    pub fn contains(&self, v: &KVector) -> bool {
        rank_of_words(self.basis.iter().map(|b| b.word()).chain([v.word()])) == self.basis.len()
    }

    /// All `2^|V|` members of `L`, sorted.
    pub fn members(&self) -> Vec<KVector> {
        let k = self.basis.len();
        let mut out: Vec<KVector> = (0u64..1 << k)
            .map(|s| bits(s).fold(KVector::zero(), |acc, i| acc.add(&self.basis[i])))
            .collect();
        out.sort();
        out
    }

    /// `dim(L ∩ X^)`, where `X^` is spanned by the `X|{v}`.
    pub fn dim_meet_hat(&self, x: &KVector) -> Result<usize> {
        let n = self.n();
        x.require_nonzero(n, &self.labels)?;
        Ok(self.dim_meet_hat_unchecked(x))
    }

    fn dim_meet_hat_unchecked(&self, x: &KVector) -> usize {
        let n = self.n();
        let hat = (0..n).map(|v| x.restrict(bit(v)).word());
        let r = rank_of_words(self.basis.iter().map(|b| b.word()).chain(hat));
        2 * n - r
    }

    /// `tm(S, C; x) = sum (x-1)^{dim(L ∩ X^)}` over `X` with `X_v != C_v`.
    pub fn restricted_tm(&self, c: &KVector) -> Result<IntPoly1> {
        let n = self.n();
        c.require_nonzero(n, &self.labels)?;
        if n > MAX_RESTRICTED {
            return Err(Error::SizeCap {
                what: "isotropic ground set",
                actual: n,
                cap: MAX_RESTRICTED,
            });
        }
        let choices: Vec<[KElem; 2]> = (0..n)
            .map(|v| {
                let cv = c.get(v);
                let mut it = KElem::NONZERO.into_iter().filter(|&e| e != cv);
                [
                    it.next().expect("two others"),
                    it.next().expect("two others"),
                ]
            })
            .collect();
        let mut counts = vec![0u64; n + 1];
        for s in 0u64..1 << n {
            let mut x = KVector::zero();
            for (v, ch) in choices.iter().enumerate() {
                x.set(v, ch[(s >> v & 1) as usize]);
            }
            counts[self.dim_meet_hat_unchecked(&x)] += 1;
        }
        Ok(IntPoly1::from_shifted_counts(&counts, -1))
    }

    /// `TM(S; x) = sum (x-2)^{dim(L ∩ X^)}` over all `X` in `(K')^V`.
    pub fn global_tm(&self) -> Result<IntPoly1> {
        let n = self.n();
        if n > MAX_GLOBAL {
            return Err(Error::SizeCap {
                what: "isotropic ground set",
                actual: n,
                cap: MAX_GLOBAL,
            });
        }
        let mut counts = vec![0u64; n + 1];
        let mut digits = vec![0usize; n];
        loop {
            let x = KVector::from_elems(
                &digits
                    .iter()
                    .map(|&d| KElem::NONZERO[d])
                    .collect::<Vec<_>>(),
            );
            counts[self.dim_meet_hat_unchecked(&x)] += 1;
            let mut v = 0;
            loop {
                if v == n {
                    return Ok(IntPoly1::from_shifted_counts(&counts, -2));
                }
                digits[v] += 1;
                if digits[v] < 3 {
                    break;
                }
                digits[v] = 0;
                v += 1;
            }
        }
    }
}

/// Graphic presentation `(G, A, B)`: `L` spanned by `A|{v} + B|N(v)`.
pub fn from_graphic_presentation(g: &Graph, a: &KVector, b: &KVector) -> Result<IsotropicSystem> {
    if !g.is_simple() {
        return Err(Error::UnsupportedInput(
            "graphic presentations need a simple graph".into(),
        ));
    }
    let n = g.n();
    a.require_nonzero(n, g.labels())?;
    b.require_nonzero(n, g.labels())?;
    if let Some(v) = (0..n).find(|&v| a.get(v) == b.get(v)) {
        return Err(Error::EqualPresentation(g.label(v).to_string()));
    }
    let gens = (0..n).map(|v| a.restrict(bit(v)).add(&b.restrict(g.neighbors(v))));
    IsotropicSystem::new(g.labels().to_vec(), gens)
}

/// Default presentation `A = x`, `B = y` everywhere.
pub fn default_presentation(g: &Graph) -> Result<IsotropicSystem> {
    let n = g.n();
    from_graphic_presentation(
        g,
        &KVector::constant(n, KElem::X),
        &KVector::constant(n, KElem::Y),
    )
}

/// Per-vertex bijection from the three pairings (indexed as in
/// [`PAIRINGS`]) to `K'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labelling {
    labels: Vec<[KElem; 3]>,
}

impl Labelling {
    pub fn new(labels: Vec<[KElem; 3]>) -> Result<Self> {
        for (v, l) in labels.iter().enumerate() {
            let mut sorted = *l;
            sorted.sort();
            if sorted != KElem::NONZERO {
                return Err(Error::InvalidLabelling(v));
            }
        }
        Ok(Self { labels })
    }

    /// Pairing `i` labelled `x`, `y`, `z` for `i = 0, 1, 2`.
    pub fn standard(n: usize) -> Self {
        Self {
            labels: vec![KElem::NONZERO; n],
        }
    }

    pub fn label(&self, v: usize, pairing: usize) -> KElem {
        self.labels[v][pairing]
    }

    /// `Λ(T)`.
    pub fn of_transitions(&self, t: &TransitionSystem) -> KVector {
        let elems: Vec<KElem> = (0..t.choices().len())
            .map(|v| self.label(v, t.pairing_at(v)))
            .collect();
        KVector::from_elems(&elems)
    }

    /// Inverse of `Λ` on `(K')^V`.
    pub fn transitions_of(&self, x: &KVector) -> Result<TransitionSystem> {
        let choice = (0..self.labels.len())
            .map(|v| {
                self.labels[v]
                    .iter()
                    .position(|&e| e == x.get(v))
                    .map(|p| p as u8)
                    .ok_or(Error::ZeroEntry(v.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TransitionSystem::new(choice))
    }
}

/// Fundamental cycles of a 4-regular multigraph as edge masks over the
/// edge list of [`FourRegularGraph::edges`]. Together they span the cycle
/// space.
pub fn cycle_space_basis(g: &FourRegularGraph) -> Vec<u128> {
    let edges = g.edges();
    let n = g.n();
    let vertex = |d: usize| d / 4;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree = vec![false; edges.len()];
    let edge_at: std::collections::HashMap<usize, usize> = edges
        .iter()
        .enumerate()
        .flat_map(|(i, &(a, b))| [(a, i), (b, i)])
        .collect();
    for s in 0..n {
        if depth[s] != usize::MAX {
            continue;
        }
        depth[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for d in 4 * v..4 * v + 4 {
                let w = vertex(g.mate(d));
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    let e = edge_at[&d];
                    parent[w] = Some((v, e));
                    tree[e] = true;
                    stack.push(w);
                }
            }
        }
    }
    let mut basis = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        if tree[i] {
            continue;
        }
        let mut mask = 1u128 << i;
        let (mut u, mut v) = (vertex(a), vertex(b));
        while u != v {
            if depth[u] < depth[v] {
                std::mem::swap(&mut u, &mut v);
            }
            let (p, e) = parent[u].expect("non-root vertex has a parent");
            mask ^= 1u128 << e;
            u = p;
        }
        basis.push(mask);
    }
    basis
}

/// `Λ(F)` for an even edge set `F` given as a mask over `g.edges()`.
pub fn lambda_of_edge_set(g: &FourRegularGraph, lambda: &Labelling, f: u128) -> KVector {
    let edges = g.edges();
    let mut out = KVector::zero();
    for v in 0..g.n() {
        let local: Vec<usize> = edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| f >> i & 1 == 1)
            .flat_map(|(_, &(a, b))| [a, b])
            .filter(|&d| d / 4 == v)
            .map(|d| d % 4)
            .collect();
        if local.len() == 2 {
            let p = PAIRINGS
                .iter()
                .position(|pr| pr[local[0]] == local[1])
                .expect("two local darts determine a pairing");
            out.set(v, lambda.label(v, p));
        }
    }
    out
}

/// The isotropic system of a 4-regular graph: the image of its cycle space
/// under `Λ`.
pub fn from_four_regular(host: &impl Host, lambda: &Labelling) -> Result<IsotropicSystem> {
    let g = host.graph();
    if g.n() > 64 {
        return Err(Error::SizeCap {
            what: "host vertex count",
            actual: g.n(),
            cap: 64,
        });
    }
    if lambda.labels.len() != g.n() {
        return Err(Error::HostMismatch);
    }
    let gens = cycle_space_basis(g)
        .into_iter()
        .map(|f| lambda_of_edge_set(g, lambda, f));
    IsotropicSystem::new(g.labels().to_vec(), gens)
}

/// The transition at each vertex that pairs the two in-darts (and the two
/// out-darts) of a directed host. Summing over `X != Λ(T)` then ranges over
/// exactly the orientation-consistent transition systems.
pub fn inconsistent_transitions(host: &impl Host) -> Option<TransitionSystem> {
    let out = host.orientation()?;
    let choice = (0..host.graph().n())
        .map(|v| {
            (0..3)
                .find(|&p| (0..4).all(|i| out[4 * v + i] == out[4 * v + PAIRINGS[p][i]]))
                .expect("exactly one pairing joins like darts") as u8
        })
        .collect();
    Some(TransitionSystem::new(choice))
}

/// The two-vertex host of the worked example: a loop at each vertex and a
/// double edge between them, with the loop-pairing transition labelled `y`.
pub fn worked_example() -> (FourRegularGraph, Labelling) {
    let g = FourRegularGraph::from_edges(2, &[(0, 0), (0, 1), (0, 1), (1, 1)])
        .expect("host is 4-regular");
    // darts: vertex 0 holds the loop at 0,1; vertex 1 holds it at 2,3
    let at0 = [KElem::Y, KElem::X, KElem::Z];
    let at1 = [KElem::Y, KElem::X, KElem::Z];
    let lambda = Labelling::new(vec![at0, at1]).expect("bijective labels");
    (g, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{enumerate_transitions, martin, TwoInTwoOutDigraph};
    use crate::interlace::{global_statesum, q_nullity_statesum};

    fn span_x() -> IsotropicSystem {
        IsotropicSystem::new(vec!["0".into()], [KVector::from_elems(&[KElem::X])]).unwrap()
    }

    #[test]
    fn form_table() {
        use KElem::*;
        for a in [Zero, X, Y, Z] {
            for b in [Zero, X, Y, Z] {
                let va = KVector::from_elems(&[a]);
                let vb = KVector::from_elems(&[b]);
                assert_eq!(va.form(&vb), a.form(b));
                assert_eq!(va.add(&vb).get(0), a + b);
            }
        }
    }

    #[test]
    fn one_vertex_examples() {
        let s = span_x();
        assert_eq!(
            s.dim_meet_hat(&KVector::from_elems(&[KElem::X])).unwrap(),
            1
        );
        assert_eq!(
            s.dim_meet_hat(&KVector::from_elems(&[KElem::Y])).unwrap(),
            0
        );
        assert_eq!(
            s.restricted_tm(&KVector::from_elems(&[KElem::X])).unwrap(),
            IntPoly1::constant(2)
        );
        assert_eq!(
            s.restricted_tm(&KVector::from_elems(&[KElem::Y])).unwrap(),
            IntPoly1::x()
        );
        assert_eq!(s.global_tm().unwrap(), IntPoly1::x());
        assert_eq!(
            s.dim_meet_hat(&KVector::zero()),
            Err(Error::ZeroEntry("0".into()))
        );
    }

    #[test]
    fn worked_example_system() {
        let (g, lambda) = worked_example();
        let s = from_four_regular(&g, &lambda).unwrap();
        let shown: Vec<String> = s.members().iter().map(|m| m.render(2)).collect();
        let mut expect = vec!["(0,0)", "(0,y)", "(y,0)", "(y,y)"];
        expect.sort();
        let mut shown_sorted = shown.clone();
        shown_sorted.sort();
        assert_eq!(shown_sorted, expect);
        let yy = KVector::constant(2, KElem::Y);
        let xx = KVector::constant(2, KElem::X);
        assert_eq!(s.dim_meet_hat(&yy).unwrap(), 2);
        assert_eq!(s.dim_meet_hat(&xx).unwrap(), 0);
        // |T| - k = dim(L ∩ Λ(T)^) for every transition system
        for (t, c) in enumerate_transitions(&g).unwrap() {
            assert_eq!(
                c - g.components(),
                s.dim_meet_hat(&lambda.of_transitions(&t)).unwrap()
            );
        }
    }

    #[test]
    fn two_loops_cycle_space() {
        let g = FourRegularGraph::from_edges(1, &[(0, 0), (0, 0)]).unwrap();
        assert_eq!(cycle_space_basis(&g).len(), 2);
        let s = from_four_regular(&g, &Labelling::standard(1)).unwrap();
        assert_eq!(s.basis().len(), 1);
    }

    #[test]
    fn graphic_presentations() {
        let e1 = Graph::empty(1);
        let s = default_presentation(&e1).unwrap();
        assert_eq!(s.members()[1].render(1), "(x)");
        let ab = KVector::constant(1, KElem::Z);
        assert_eq!(s.restricted_tm(&ab).unwrap(), IntPoly1::x());

        let k2 = Graph::complete(2);
        let s = default_presentation(&k2).unwrap();
        let mut shown: Vec<String> = s.members().iter().map(|m| m.render(2)).collect();
        shown.sort();
        assert_eq!(shown, vec!["(0,0)", "(x,y)", "(y,x)", "(z,z)"]);
        assert_eq!(s.global_tm().unwrap(), IntPoly1::monomial(3, 1));
        assert_eq!(s.dim_meet_hat(&KVector::constant(2, KElem::X)).unwrap(), 0);

        let e3 = Graph::empty(3);
        assert_eq!(
            default_presentation(&e3).unwrap().global_tm().unwrap(),
            IntPoly1::power_of_x(3)
        );
    }

    #[test]
    fn presentation_errors() {
        let g = Graph::complete(2);
        let x = KVector::constant(2, KElem::X);
        assert_eq!(
            from_graphic_presentation(&g, &x, &x),
            Err(Error::EqualPresentation("0".into()))
        );
        let mut a = x;
        a.set(1, KElem::Zero);
        assert!(matches!(
            from_graphic_presentation(&g, &a, &KVector::constant(2, KElem::Y)),
            Err(Error::ZeroEntry(_))
        ));
        assert!(Labelling::new(vec![[KElem::X, KElem::X, KElem::Y]]).is_err());
    }

    #[test]
    fn presentation_matches_interlace_on_paths() {
        for n in 1..6 {
            let g = Graph::path(n);
            let s = default_presentation(&g).unwrap();
            let c = KVector::constant(n, KElem::Z);
            assert_eq!(s.restricted_tm(&c).unwrap(), q_nullity_statesum(&g));
            assert_eq!(s.global_tm().unwrap(), global_statesum(&g));
        }
    }

    #[test]
    fn directed_martin_coherence() {
        let d = TwoInTwoOutDigraph::from_arcs(2, &[(0, 1), (1, 0), (0, 1), (1, 0)]).unwrap();
        let lambda = Labelling::standard(2);
        let s = from_four_regular(&d, &lambda).unwrap();
        let t = inconsistent_transitions(&d).unwrap();
        assert_eq!(
            s.restricted_tm(&lambda.of_transitions(&t)).unwrap(),
            martin(&d).unwrap()
        );
    }
}
