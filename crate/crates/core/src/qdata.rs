//! Dynkin quivers, height functions, Q-data validation, AR-quiver
//! knitting and the root/coordinate bijection.
//!
//! Knitting convention: the anchor vertex of row `i` sits at
//! `p = φ(i)` and carries the reachability (projective) dimension vector
//! of `i`; meshes are knitted towards increasing `p` in steps of 2 via
//! `label(i, p) = Σ_{j ~ i} label(j, p-1) - label(i, p-2)`, and a vertex
//! exists exactly when the computed label is a positive root. The
//! bijection, simple-root and parity invariants are asserted after
//! knitting.

use crate::liecore::{
    involution_and_coxeter, is_reduced, CartanDatum, ReducedWord, RootSystem, RootVec,
};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// One chosen direction per Dynkin edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DynkinQuiver {
    pub cartan: CartanDatum,
    arrows: BTreeSet<(usize, usize)>,
}

impl DynkinQuiver {
    pub fn new(cartan: CartanDatum, arrows: &[(usize, usize)]) -> Result<Self> {
        let edges = cartan.edges();
        let mut chosen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &(u, v) in arrows {
            let undirected = (u.min(v), u.max(v));
            if !edges.contains(&undirected) {
                return Err(Error::Config(format!("({u},{v}) is not a Dynkin edge")));
            }
            if !chosen.insert((u, v)) || chosen.contains(&(v, u)) {
                return Err(Error::Config(format!("edge {u}-{v} oriented twice")));
            }
        }
        if chosen.len() != edges.len() {
            return Err(Error::Config(format!(
                "expected {} oriented edges, got {}",
                edges.len(),
                chosen.len()
            )));
        }
        Ok(DynkinQuiver { cartan, arrows: chosen })
    }

    /// Every orientation of the diagram, in a deterministic order.
    pub fn all_orientations(cartan: &CartanDatum) -> Vec<DynkinQuiver> {
        let edges = cartan.edges();
        let mut out = Vec::new();
        for mask in 0u32..(1 << edges.len()) {
            let arrows: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .map(|(k, &(u, v))| if mask & (1 << k) == 0 { (u, v) } else { (v, u) })
                .collect();
            out.push(DynkinQuiver::new(cartan.clone(), &arrows).unwrap());
        }
        out
    }

    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arrows.iter().copied()
    }

    pub fn has_arrow(&self, from: usize, to: usize) -> bool {
        self.arrows.contains(&(from, to))
    }

    /// No arrow leaves `i`.
    pub fn is_sink(&self, i: usize) -> bool {
        !self.arrows.iter().any(|&(u, _)| u == i)
    }

    /// Reverse every arrow incident to `i`.
    pub fn reflected(&self, i: usize) -> DynkinQuiver {
        let arrows: BTreeSet<_> = self
            .arrows
            .iter()
            .map(|&(u, v)| if u == i || v == i { (v, u) } else { (u, v) })
            .collect();
        DynkinQuiver { cartan: self.cartan.clone(), arrows }
    }

    /// Vertices reachable from `i` along arrows, as a dimension vector.
    fn reach_vector(&self, i: usize) -> RootVec {
        let mut seen = BTreeSet::from([i]);
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            for &(u, w) in &self.arrows {
                if u == v && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        let mut out = RootVec::zero(self.cartan.rank);
        for v in seen {
            out.coords[v - 1] = 1;
        }
        out
    }
}

impl fmt::Display for DynkinQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .arrows
            .iter()
            .map(|(u, v)| format!("{u}>{v}"))
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "[{body}]")
    }
}

/// A quiver with a height function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QDataT {
    pub quiver: DynkinQuiver,
    /// phi[i-1] is the height of vertex i
    pub phi: Vec<i64>,
}

impl QDataT {
    pub fn new(quiver: DynkinQuiver, phi: Vec<i64>) -> Result<Self> {
        if phi.len() != quiver.cartan.rank {
            return Err(Error::Config("height function has wrong length".into()));
        }
        Ok(QDataT { quiver, phi })
    }

    /// The unique height function with the given even value at vertex 1.
    pub fn from_orientation(quiver: DynkinQuiver, phi1: i64) -> Result<Self> {
        if phi1 % 2 != 0 {
            return Err(Error::Config("phi(1) must be even".into()));
        }
        let rank = quiver.cartan.rank;
        let mut phi = vec![None; rank + 1];
        phi[1] = Some(phi1);
        let mut stack = vec![1usize];
        while let Some(v) = stack.pop() {
            let base = phi[v].unwrap();
            for (u, w) in quiver.arrows() {
                // arrow u -> w forces phi(u) = phi(w) + 1
                if u == v && phi[w].is_none() {
                    phi[w] = Some(base - 1);
                    stack.push(w);
                } else if w == v && phi[u].is_none() {
                    phi[u] = Some(base + 1);
                    stack.push(u);
                }
            }
        }
        let phi = (1..=rank).map(|i| phi[i].unwrap()).collect();
        QDataT::new(quiver, phi)
    }

    pub fn height(&self, i: usize) -> i64 {
        self.phi[i - 1]
    }
}

/// Q-data axioms; returns the violations instead of failing.
pub fn validate_qdata(q: &QDataT) -> Vec<String> {
    let mut violations = Vec::new();
    if q.height(1) % 2 != 0 {
        violations.push(format!("phi(1) = {} is odd", q.height(1)));
    }
    for (u, v) in q.quiver.arrows() {
        if q.height(u) != q.height(v) + 1 {
            violations.push(format!(
                "arrow {u}->{v} needs phi({u}) = phi({v})+1, got {} and {}",
                q.height(u),
                q.height(v)
            ));
        }
    }
    violations
}

/// Coordinate of an AR-quiver vertex or of a fundamental-class label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexLabel {
    pub i: usize,
    pub p: i64,
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.p)
    }
}

/// Knitted AR quiver: vertices with (i, p) coordinates, each labeled by a
/// positive root, plus the mesh arrows (i,p) -> (j,p+1).
#[derive(Clone, Debug, Serialize)]
pub struct ARQuiver {
    pub vertices: BTreeMap<(usize, i64), RootVec>,
    pub meshes: Vec<((usize, i64), (usize, i64))>,
}

impl ARQuiver {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn label(&self, v: &VertexLabel) -> Option<&RootVec> {
        self.vertices.get(&(v.i, v.p))
    }
}

pub fn ar_quiver(rs: &RootSystem, q: &QDataT) -> Result<ARQuiver> {
    let violations = validate_qdata(q);
    if !violations.is_empty() {
        return Err(Error::Config(format!("invalid Q-data: {}", violations.join("; "))));
    }
    let cartan = &rs.cartan;
    let rank = cartan.rank;
    let adj: Vec<Vec<usize>> = {
        let mut a = vec![vec![]; rank + 1];
        for (u, v) in cartan.edges() {
            a[u].push(v);
            a[v].push(u);
        }
        a
    };
    let mut vertices: BTreeMap<(usize, i64), RootVec> = BTreeMap::new();
    let mut alive: Vec<bool> = vec![true; rank + 1];
    for i in 1..=rank {
        vertices.insert((i, q.height(i)), q.quiver.reach_vector(i));
    }
    let min_p = (1..=rank).map(|i| q.height(i)).min().unwrap();
    let max_seed = (1..=rank).map(|i| q.height(i)).max().unwrap();
    let mut p = min_p + 1;
    loop {
        let mut created = false;
        for i in 1..=rank {
            if !alive[i] || p <= q.height(i) || (p - q.height(i)) % 2 != 0 {
                continue;
            }
            let prev = match vertices.get(&(i, p - 2)) {
                Some(v) => v.clone(),
                None => {
                    alive[i] = false;
                    continue;
                }
            };
            let mut label = prev.neg();
            for &j in &adj[i] {
                if let Some(mid) = vertices.get(&(j, p - 1)) {
                    label = label.add(mid);
                }
            }
            if rs.is_positive_root(&label) {
                vertices.insert((i, p), label);
                created = true;
            } else {
                alive[i] = false;
            }
        }
        if !created && p > max_seed {
            break;
        }
        p += 1;
        // hard stop far beyond the Coxeter range; the asserts below carry it
        if p > min_p + 4 * rs.coxeter_number() as i64 + 4 {
            break;
        }
    }
    let ar = ARQuiver {
        meshes: mesh_edges(cartan, &vertices),
        vertices,
    };
    validate_ar(rs, &ar)?;
    Ok(ar)
}

fn mesh_edges(
    cartan: &CartanDatum,
    vertices: &BTreeMap<(usize, i64), RootVec>,
) -> Vec<((usize, i64), (usize, i64))> {
    let mut out = Vec::new();
    for &(i, p) in vertices.keys() {
        for (u, v) in cartan.edges() {
            let j = if u == i {
                v
            } else if v == i {
                u
            } else {
                continue;
            };
            if vertices.contains_key(&(j, p + 1)) {
                out.push(((i, p), (j, p + 1)));
            }
        }
    }
    out.sort();
    out
}

fn validate_ar(rs: &RootSystem, ar: &ARQuiver) -> Result<()> {
    if ar.len() != rs.num_positive() {
        return Err(Error::Internal(format!(
            "knitting produced {} vertices, expected {}",
            ar.len(),
            rs.num_positive()
        )));
    }
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    for ((i, p), root) in &ar.vertices {
        if !rs.is_positive_root(root) {
            return Err(Error::Internal(format!("label {root} at ({i},{p}) is not a root")));
        }
        if !seen.insert(root.coords.clone()) {
            return Err(Error::Internal(format!("root {root} appears twice")));
        }
        // every vertex satisfies the membership parity p = d(1,i) mod 2
        let d = rs.cartan.graph_distance(1, *i) as i64;
        if (p - d).rem_euclid(2) != 0 {
            return Err(Error::Internal(format!(
                "vertex ({i},{p}) violates the parity condition"
            )));
        }
    }
    for i in 1..=rs.cartan.rank {
        let alpha = RootVec::simple(rs.cartan.rank, i);
        if !seen.contains(&alpha.coords) {
            return Err(Error::Internal(format!("simple root {alpha} missing")));
        }
    }
    Ok(())
}

/// root coordinates -> AR vertex label
pub type RootToVertex = BTreeMap<Vec<i64>, VertexLabel>;
/// AR coordinates -> root label
pub type VertexToRoot = BTreeMap<(usize, i64), RootVec>;

/// Mutually inverse maps between roots and AR coordinates.
pub fn root_coordinate_bijection(ar: &ARQuiver) -> (RootToVertex, VertexToRoot) {
    let mut to_label = BTreeMap::new();
    let mut to_root = BTreeMap::new();
    for ((i, p), root) in &ar.vertices {
        to_label.insert(root.coords.clone(), VertexLabel { i: *i, p: *p });
        to_root.insert((*i, *p), root.clone());
    }
    (to_label, to_root)
}

/// Sink-reading adaptedness: every letter must be a sink of the
/// successively reflected quiver.
pub fn is_adapted(rs: &RootSystem, word: &ReducedWord, q: &QDataT) -> Result<bool> {
    if !is_reduced(rs, word)? || word.len() != rs.num_positive() {
        return Err(Error::InvalidWord(format!("{word} is not reduced of full length")));
    }
    let mut quiver = q.quiver.clone();
    for &i in &word.letters {
        if !quiver.is_sink(i) {
            return Ok(false);
        }
        quiver = quiver.reflected(i);
    }
    Ok(true)
}

/// The canonical adapted word: repeatedly read the smallest sink that
/// still extends the word in the weak order.
pub fn adapted_word(rs: &RootSystem, q: &QDataT) -> Result<ReducedWord> {
    let mut quiver = q.quiver.clone();
    let mut w = crate::liecore::WeylAction::identity(rs.cartan.rank);
    let mut letters = Vec::with_capacity(rs.num_positive());
    for _ in 0..rs.num_positive() {
        let sink = (1..=rs.cartan.rank)
            .find(|&i| quiver.is_sink(i) && w.image_of_simple(i).is_nonneg())
            .ok_or_else(|| Error::Internal("no extendable sink while reading".into()))?;
        letters.push(sink);
        w = w.extend_right(&rs.cartan, sink);
        quiver = quiver.reflected(sink);
    }
    let word = ReducedWord::new(letters);
    if !is_reduced(rs, &word)? {
        return Err(Error::Internal(format!("sink word {word} is not reduced")));
    }
    debug_assert!(is_adapted(rs, &word, q)?);
    Ok(word)
}

/// Label-level right dual: `(i, p) ↦ (i*, p + h)`.
pub fn dshift_label(rs: &RootSystem, v: &VertexLabel) -> VertexLabel {
    let (star, h) = involution_and_coxeter(rs);
    VertexLabel { i: star[v.i], p: v.p + h as i64 }
}
