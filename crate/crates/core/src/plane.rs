//! Plane graphs as rotation systems and their oriented medial graphs.
//!
//! Edge `i` has darts `2i` (end 0) and `2i + 1` (end 1). The rotation at a
//! vertex lists its darts in counterclockwise order; that list *is* the
//! embedding. Faces are the orbits of `d -> next(other(d))`.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::euler::TwoInTwoOutDigraph;
use crate::poly::IntPoly2;
use crate::tutte::tutte;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    n: usize,
    edge_ids: Vec<String>,
    ends: Vec<[usize; 2]>,
    rotation: Vec<Vec<usize>>,
    next: Vec<usize>,
    prev: Vec<usize>,
}

#[inline]
fn other(d: usize) -> usize {
    d ^ 1
}

/// Faces of a rotation system given by `next` on darts `0..len`.
fn trace_faces(next: &[usize], other: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; next.len()];
    let mut faces = Vec::new();
    for s in 0..next.len() {
        if seen[s] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = s;
        while !seen[d] {
            seen[d] = true;
            face.push(d);
            d = next[other(d)];
        }
        faces.push(face);
    }
    faces
}

impl PlaneGraph {
    /// Builds and validates a plane graph. `edges[i] = (id, u, v)`;
    /// `rotation[v]` lists darts counterclockwise.
    pub fn new(
        n: usize,
        edges: Vec<(String, usize, usize)>,
        rotation: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if rotation.len() != n {
            return Err(Error::InvalidEmbedding(format!(
                "{} rotation lists for {n} vertices",
                rotation.len()
            )));
        }
        let mut ids = BTreeSet::new();
        for (id, u, v) in &edges {
            if !ids.insert(id.clone()) {
                return Err(Error::InvalidEmbedding(format!("duplicate edge id `{id}`")));
            }
            if *u >= n || *v >= n {
                return Err(Error::UnknownVertex(u.max(v).to_string()));
            }
        }
        let darts = 2 * edges.len();
        let ends: Vec<[usize; 2]> = edges.iter().map(|&(_, u, v)| [u, v]).collect();
        let mut next = vec![usize::MAX; darts];
        let mut prev = vec![usize::MAX; darts];
        for (v, rot) in rotation.iter().enumerate() {
            for (k, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(Error::InvalidEmbedding(format!("dart {d} out of range")));
                }
                if ends[d / 2][d % 2] != v {
                    return Err(Error::InvalidEmbedding(format!(
                        "edge `{}` end {} is not at vertex {v}",
                        edges[d / 2].0,
                        d % 2
                    )));
                }
                if next[d] != usize::MAX {
                    return Err(Error::InvalidEmbedding(format!(
                        "edge `{}` end {} listed twice",
                        edges[d / 2].0,
                        d % 2
                    )));
                }
                let succ = rot[(k + 1) % rot.len()];
                next[d] = succ;
            }
        }
        if let Some(d) = next.iter().position(|&x| x == usize::MAX) {
            return Err(Error::InvalidEmbedding(format!(
                "edge `{}` end {} missing from rotations",
                edges[d / 2].0,
                d % 2
            )));
        }
        for d in 0..darts {
            prev[next[d]] = d;
        }
        let pg = Self {
            n,
            edge_ids: edges.into_iter().map(|e| e.0).collect(),
            ends,
            rotation,
            next,
            prev,
        };
        pg.check_genus()?;
        Ok(pg)
    }

    /// Numbered edge ids and `(edge, end)` rotation entries.
    pub fn from_rotations(
        n: usize,
        edges: &[(usize, usize)],
        rotation: &[Vec<(usize, usize)>],
    ) -> Result<Self> {
        let named = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (i.to_string(), u, v))
            .collect();
        let rot = rotation
            .iter()
            .map(|r| r.iter().map(|&(e, end)| 2 * e + end).collect())
            .collect();
        Self::new(n, named, rot)
    }

    /// Each component with edges must satisfy `v - e + f = 2`.
    fn check_genus(&self) -> Result<()> {
        let comp = self.component_ids();
        let k = comp.iter().max().map_or(0, |m| m + 1);
        let mut v = vec![0i64; k];
        let mut e = vec![0i64; k];
        let mut f = vec![0i64; k];
        for &c in &comp {
            v[c] += 1;
        }
        for ends in &self.ends {
            e[comp[ends[0]]] += 1;
        }
        for face in self.faces() {
            f[comp[self.vertex_of(face[0])]] += 1;
        }
        for c in 0..k {
            if e[c] > 0 && v[c] - e[c] + f[c] != 2 {
                return Err(Error::InvalidEmbedding(format!(
                    "rotation system is not planar (v - e + f = {})",
                    v[c] - e[c] + f[c]
                )));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn edge_ids(&self) -> &[String] {
        &self.edge_ids
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    #[inline]
    pub fn vertex_of(&self, d: usize) -> usize {
        self.ends[d / 2][d % 2]
    }

    /// Counterclockwise successor of a dart at its vertex.
    pub fn next(&self, d: usize) -> usize {
        self.next[d]
    }

    pub fn prev(&self, d: usize) -> usize {
        self.prev[d]
    }

    /// Underlying multigraph as `(u, v)` pairs in edge order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.ends.iter().map(|e| (e[0], e[1])).collect()
    }

    pub fn component_ids(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &d in &self.rotation[v] {
                    let w = self.vertex_of(other(d));
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

    pub fn components(&self) -> usize {
        self.component_ids().into_iter().max().map_or(0, |m| m + 1)
    }

    /// Traced face boundaries, per component.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        trace_faces(&self.next, other)
    }

    /// Faces of the plane drawing: outer faces of all components coincide.
    pub fn face_count(&self) -> usize {
        let with_edges: BTreeSet<usize> = {
            let comp = self.component_ids();
            self.ends.iter().map(|e| comp[e[0]]).collect()
        };
        self.faces().len() + 1 - with_edges.len()
    }

    /// `t(G; x, y)` of the underlying multigraph.
    pub fn tutte(&self) -> IntPoly2 {
        tutte(self.n, &self.edges())
    }

    /// Cycle `C_k` (a loop for `k = 1`, a digon for `k = 2`).
    pub fn cycle(k: usize) -> Self {
        assert!(k >= 1);
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        let rot: Vec<_> = (0..k).map(|i| vec![(i, 0), ((i + k - 1) % k, 1)]).collect();
        Self::from_rotations(k, &edges, &rot).expect("cycle embedding is planar")
    }

    /// Path with `m` edges drawn on a line.
    pub fn path(m: usize) -> Self {
        let edges: Vec<_> = (0..m).map(|i| (i, i + 1)).collect();
        let rot: Vec<_> = (0..=m)
            .map(|v| {
                let mut r = Vec::new();
                if v < m {
                    r.push((v, 0));
                }
                if v > 0 {
                    r.push((v - 1, 1));
                }
                r
            })
            .collect();
        Self::from_rotations(m + 1, &edges, &rot).expect("path embedding is planar")
    }

    /// `K_4` drawn as a triangle with a central vertex.
    pub fn k4() -> Self {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)];
        let rot = vec![
            vec![(0, 0), (1, 0), (2, 0)],
            vec![(3, 0), (0, 1), (5, 1)],
            vec![(4, 0), (1, 1), (3, 1)],
            vec![(5, 0), (2, 1), (4, 1)],
        ];
        Self::from_rotations(4, &edges, &rot).expect("K4 embedding is planar")
    }

    /// Theta graph: two branch vertices joined by paths of length 1, 2, 2.
    pub fn theta() -> Self {
        let edges = [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)];
        let rot = vec![
            vec![(0, 0), (1, 0), (3, 0)],
            vec![(2, 1), (0, 1), (4, 1)],
            vec![(1, 1), (2, 0)],
            vec![(3, 1), (4, 0)],
        ];
        Self::from_rotations(4, &edges, &rot).expect("theta embedding is planar")
    }

    /// Random connected plane multigraph: a random tree with random
    /// rotations, then extra edges (loops allowed) inserted across faces.
    pub fn random(rng: &mut impl Rng, n: usize, m: usize) -> Self {
        assert!(n >= 1 && m + 1 >= n, "a connected graph needs n - 1 edges");
        let mut ends: Vec<[usize; 2]> = Vec::new();
        let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 1..n {
            let u = rng.gen_range(0..v);
            let e = ends.len();
            ends.push([u, v]);
            rot[u].push(2 * e);
            rot[v].push(2 * e + 1);
        }
        for r in &mut rot {
            r.shuffle(rng);
        }
        while ends.len() < m {
            let e = ends.len();
            if ends.is_empty() {
                ends.push([0, 0]);
                rot[0] = vec![0, 1];
                continue;
            }
            let mut next = vec![0; 2 * e];
            for r in &rot {
                for (k, &d) in r.iter().enumerate() {
                    next[d] = r[(k + 1) % r.len()];
                }
            }
            let faces = trace_faces(&next, other);
            let face = faces.choose(rng).expect("an edge gives a face");
            // corners of this face sit just after other(d) for each dart d on it
            let a = other(*face.choose(rng).expect("nonempty face"));
            let b = other(*face.choose(rng).expect("nonempty face"));
            let (va, vb) = (ends[a / 2][a % 2], ends[b / 2][b % 2]);
            ends.push([va, vb]);
            let (na, nb) = (2 * e, 2 * e + 1);
            if a == b {
                let at = rot[va]
                    .iter()
                    .position(|&x| x == a)
                    .expect("dart in rotation");
                rot[va].insert(at + 1, nb);
                rot[va].insert(at + 1, na);
            } else {
                let at = rot[va]
                    .iter()
                    .position(|&x| x == a)
                    .expect("dart in rotation");
                rot[va].insert(at + 1, na);
                let bt = rot[vb]
                    .iter()
                    .position(|&x| x == b)
                    .expect("dart in rotation");
                rot[vb].insert(bt + 1, nb);
            }
        }
        let edges = ends
            .iter()
            .enumerate()
            .map(|(i, e)| (i.to_string(), e[0], e[1]))
            .collect();
        Self::new(n, edges, rot).expect("face insertion preserves planarity")
    }
}

/// Oriented medial graph. Medial vertex `i` sits on edge `i`; every corner
/// `(d, next(d))` of the plane graph becomes the arc `edge(d) -> edge(next(d))`,
/// which runs counterclockwise around the black face at `vertex(d)`.
///
/// The construction is validated: the medial rotation system must be planar,
/// its faces properly 2-colorable, and the black class must be exactly the
/// corner cycles around the vertices of the plane graph.
pub fn oriented_medial(pg: &PlaneGraph) -> Result<TwoInTwoOutDigraph> {
    let m = pg.edge_count();
    if m == 0 {
        return Err(Error::Edgeless);
    }
    let corners = 2 * m;
    // medial dart 2c leaves edge(c) along corner c; 2c + 1 enters edge(next(c))
    let leave = |c: usize| 2 * c;
    let enter = |c: usize| 2 * c + 1;
    let mut rot = vec![Vec::with_capacity(4); m];
    for (e, r) in rot.iter_mut().enumerate() {
        let (d0, d1) = (2 * e, 2 * e + 1);
        r.extend([enter(pg.prev(d1)), leave(d0), enter(pg.prev(d0)), leave(d1)]);
    }
    let mut next = vec![usize::MAX; 2 * corners];
    for r in &rot {
        for k in 0..4 {
            next[r[k]] = r[(k + 1) % 4];
        }
    }
    if next.contains(&usize::MAX) {
        return Err(Error::Internal("medial rotation incomplete".into()));
    }
    let faces = trace_faces(&next, other);
    let medial_components = {
        let arcs: Vec<_> = (0..corners).map(|c| (c / 2, pg.next(c) / 2)).collect();
        crate::tutte::graphic_rank(m, &arcs)
    };
    let k = m - medial_components;
    if m as i64 - corners as i64 + faces.len() as i64 != 2 * k as i64 {
        return Err(Error::Internal(
            "medial rotation system is not planar".into(),
        ));
    }

    let mut face_of = vec![0; 2 * corners];
    for (i, f) in faces.iter().enumerate() {
        for &d in f {
            face_of[d] = i;
        }
    }
    let mut color: Vec<Option<bool>> = vec![None; faces.len()];
    for s in 0..faces.len() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(true);
        let mut queue = VecDeque::from([s]);
        while let Some(f) = queue.pop_front() {
            let c = color[f].expect("queued faces are colored");
            for &d in &faces[f] {
                let g = face_of[other(d)];
                match color[g] {
                    None => {
                        color[g] = Some(!c);
                        queue.push_back(g);
                    }
                    Some(cg) if cg == c => {
                        return Err(Error::Internal("medial faces are not 2-colorable".into()));
                    }
                    _ => {}
                }
            }
        }
    }

    // the black class must be exactly the corner cycles around vertices
    let vertex_cycles: BTreeSet<BTreeSet<usize>> = (0..pg.n())
        .filter(|&v| !pg.rotation(v).is_empty())
        .map(|v| pg.rotation(v).iter().copied().collect())
        .collect();
    let black: BTreeSet<usize> = (0..faces.len())
        .filter(|&i| vertex_cycles.contains(&faces[i].iter().map(|&d| d / 2).collect()))
        .collect();
    if black.len() != vertex_cycles.len() {
        return Err(Error::Internal(
            "vertex corner cycles are not medial faces".into(),
        ));
    }
    for (i, f) in faces.iter().enumerate() {
        for &d in f {
            if black.contains(&i) == black.contains(&face_of[other(d)]) {
                return Err(Error::Internal(
                    "medial edge does not separate black from white".into(),
                ));
            }
        }
    }

    let arcs: Vec<(usize, usize)> = (0..corners).map(|c| (c / 2, pg.next(c) / 2)).collect();
    TwoInTwoOutDigraph::from_arcs(m, &arcs)?.with_labels(pg.edge_ids().to_vec())
}
