//! Simply-laced Cartan data, root systems, and reduced words of the
//! longest Weyl group element.
//!
//! Roots are integer coordinate vectors over the simple roots. The root
//! system is generated by closing the simple roots under all reflections,
//! so the tables are self-validating rather than hard-coded.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CartanSeries {
    A,
    D,
    E,
}

impl fmt::Display for CartanSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanSeries::A => write!(f, "A"),
            CartanSeries::D => write!(f, "D"),
            CartanSeries::E => write!(f, "E"),
        }
    }
}

/// Cartan matrix of a connected simply-laced diagram, vertices `1..=rank`.
///
/// The symmetric pairing `(α_i, α_j) = c_{i,j}` is used throughout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanDatum {
    pub series: CartanSeries,
    pub rank: usize,
    matrix: Vec<Vec<i64>>,
}

impl CartanDatum {
    pub fn new(series: CartanSeries, rank: usize) -> Result<Self> {
        let ok = match series {
            CartanSeries::A => rank >= 1,
            CartanSeries::D => rank >= 4,
            CartanSeries::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::Config(format!(
                "invalid Cartan type {series}{rank}"
            )));
        }
        let edges = dynkin_edges(series, rank);
        let mut matrix = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            matrix[i][i] = 2;
        }
        for &(i, j) in &edges {
            matrix[i - 1][j - 1] = -1;
            matrix[j - 1][i - 1] = -1;
        }
        Ok(CartanDatum { series, rank, matrix })
    }

    pub fn parse(label: &str) -> Result<Self> {
        let label = label.trim();
        let (s, r) = label.split_at(1);
        let series = match s {
            "A" | "a" => CartanSeries::A,
            "D" | "d" => CartanSeries::D,
            "E" | "e" => CartanSeries::E,
            _ => return Err(Error::Config(format!("unknown series in '{label}'"))),
        };
        let rank: usize = r
            .parse()
            .map_err(|_| Error::Config(format!("bad rank in '{label}'")))?;
        CartanDatum::new(series, rank)
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.series, self.rank)
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i - 1][j - 1]
    }

    /// Dynkin edges as 1-based pairs (i, j) with i < j.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        dynkin_edges(self.series, self.rank)
    }

    /// Symmetric pairing of two coordinate vectors.
    pub fn pairing(&self, v: &RootVec, w: &RootVec) -> i64 {
        let mut acc = 0;
        for i in 0..self.rank {
            if v.coords[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                acc += v.coords[i] * self.matrix[i][j] * w.coords[j];
            }
        }
        acc
    }

    /// Graph distance between vertices of the Dynkin diagram (1-based).
    pub fn graph_distance(&self, from: usize, to: usize) -> usize {
        let adj = self.adjacency();
        let mut dist = vec![usize::MAX; self.rank + 1];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                return dist[v];
            }
            for &u in &adj[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        unreachable!("Dynkin diagram is connected")
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![vec![]; self.rank + 1];
        for (i, j) in self.edges() {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }
}

fn dynkin_edges(series: CartanSeries, rank: usize) -> Vec<(usize, usize)> {
    match series {
        CartanSeries::A => (1..rank).map(|i| (i, i + 1)).collect(),
        CartanSeries::D => {
            let mut e: Vec<_> = (1..rank - 1).map(|i| (i, i + 1)).collect();
            e.push((rank - 2, rank));
            e
        }
        CartanSeries::E => {
            // Bourbaki numbering: branch node 4 carries the extra vertex 2.
            let mut e = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
            if rank >= 7 {
                e.push((6, 7));
            }
            if rank >= 8 {
                e.push((7, 8));
            }
            e
        }
    }
}

/// Integer coordinate vector over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootVec {
    pub coords: Vec<i64>,
}

impl RootVec {
    pub fn zero(rank: usize) -> Self {
        RootVec { coords: vec![0; rank] }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        RootVec { coords }
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_nonneg(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &RootVec) -> RootVec {
        RootVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RootVec) -> RootVec {
        RootVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> RootVec {
        RootVec { coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn scaled(&self, k: i64) -> RootVec {
        RootVec { coords: self.coords.iter().map(|c| c * k).collect() }
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.coords
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Reflection `r_i(v) = v - (v, α_i) α_i`.
pub fn reflection(cartan: &CartanDatum, i: usize, v: &RootVec) -> RootVec {
    let alpha = RootVec::simple(cartan.rank, i);
    let n = cartan.pairing(v, &alpha);
    v.sub(&alpha.scaled(n))
}

/// Positive roots with deterministic (height, lex) order plus lookup table.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan: CartanDatum,
    pub positive_roots: Vec<RootVec>,
    index: BTreeMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn new(cartan: CartanDatum) -> Self {
        let rank = cartan.rank;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<RootVec> = VecDeque::new();
        for i in 1..=rank {
            let a = RootVec::simple(rank, i);
            seen.insert(a.coords.clone());
            queue.push_back(a);
        }
        while let Some(v) = queue.pop_front() {
            for i in 1..=rank {
                let w = reflection(&cartan, i, &v);
                if seen.insert(w.coords.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut positive_roots: Vec<RootVec> = seen
            .into_iter()
            .map(|coords| RootVec { coords })
            .filter(|v| v.is_nonneg() && !v.is_zero())
            .collect();
        positive_roots.sort_by_key(|v| (v.height(), v.coords.clone()));
        let index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, v)| (v.coords.clone(), k))
            .collect();
        RootSystem { cartan, positive_roots, index }
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_positive_root(&self, v: &RootVec) -> bool {
        self.index.contains_key(&v.coords)
    }

    pub fn root_index(&self, v: &RootVec) -> Option<usize> {
        self.index.get(&v.coords).copied()
    }

    /// Coxeter number, `2 |Φ⁺| / rank`.
    pub fn coxeter_number(&self) -> usize {
        2 * self.num_positive() / self.cartan.rank
    }
}

/// Build the Cartan matrix and full positive root list for a valid ADE pair.
pub fn build_root_system(series: CartanSeries, rank: usize) -> Result<RootSystem> {
    Ok(RootSystem::new(CartanDatum::new(series, rank)?))
}

/// Sequence of letters in `1..=rank`; validity is checked by the consumers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        ReducedWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.letters
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Weyl group element stored by its action on the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylAction {
    images: Vec<RootVec>, // images[i-1] = w(α_i)
}

impl WeylAction {
    pub fn identity(rank: usize) -> Self {
        WeylAction {
            images: (1..=rank).map(|i| RootVec::simple(rank, i)).collect(),
        }
    }

    pub fn apply(&self, v: &RootVec) -> RootVec {
        let rank = self.images.len();
        let mut out = RootVec::zero(rank);
        for (i, c) in v.coords.iter().enumerate() {
            if *c != 0 {
                out = out.add(&self.images[i].scaled(*c));
            }
        }
        out
    }

    /// `w r_i`, i.e. multiply by the reflection on the right.
    pub fn extend_right(&self, cartan: &CartanDatum, i: usize) -> WeylAction {
        let rank = cartan.rank;
        let images = (1..=rank)
            .map(|j| {
                // (w r_i)(α_j) = w(α_j) - c_{j,i} w(α_i)
                let c = cartan.entry(j, i);
                self.images[j - 1].sub(&self.images[i - 1].scaled(c))
            })
            .collect();
        WeylAction { images }
    }

    pub fn image_of_simple(&self, i: usize) -> &RootVec {
        &self.images[i - 1]
    }
}

fn check_letters(rs: &RootSystem, word: &ReducedWord) -> Result<()> {
    for &l in &word.letters {
        if l == 0 || l > rs.cartan.rank {
            return Err(Error::InvalidWord(format!(
                "letter {l} outside 1..={}",
                rs.cartan.rank
            )));
        }
    }
    Ok(())
}

/// Length check by the positive-root descent criterion: appending `r_i`
/// increases length exactly when `w(α_i)` is positive.
pub fn is_reduced(rs: &RootSystem, word: &ReducedWord) -> Result<bool> {
    check_letters(rs, word)?;
    let mut w = WeylAction::identity(rs.cartan.rank);
    for &i in &word.letters {
        if !w.image_of_simple(i).is_nonneg() {
            return Ok(false);
        }
        w = w.extend_right(&rs.cartan, i);
    }
    Ok(true)
}

fn require_longest(rs: &RootSystem, word: &ReducedWord) -> Result<()> {
    if !is_reduced(rs, word)? {
        return Err(Error::InvalidWord(format!("{word} is not reduced")));
    }
    if word.len() != rs.num_positive() {
        return Err(Error::InvalidWord(format!(
            "{word} is reduced but has length {} != l(w0) = {}",
            word.len(),
            rs.num_positive()
        )));
    }
    Ok(())
}

/// The roots `β_k = r_{i_1} ... r_{i_{k-1}}(α_{i_k})` of a reduced word
/// for the longest element; enumerates the positive roots bijectively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexSeq {
    pub word: ReducedWord,
    pub betas: Vec<RootVec>,
}

impl ConvexSeq {
    pub fn len(&self) -> usize {
        self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.betas.is_empty()
    }

    pub fn beta(&self, k: usize) -> &RootVec {
        &self.betas[k - 1]
    }
}

pub fn beta_sequence(rs: &RootSystem, word: &ReducedWord) -> Result<ConvexSeq> {
    require_longest(rs, word)?;
    let mut w = WeylAction::identity(rs.cartan.rank);
    let mut betas = Vec::with_capacity(word.len());
    for &i in &word.letters {
        betas.push(w.apply(&RootVec::simple(rs.cartan.rank, i)));
        w = w.extend_right(&rs.cartan, i);
    }
    let distinct: BTreeSet<_> = betas.iter().map(|b| b.coords.clone()).collect();
    if distinct.len() != rs.num_positive() || !betas.iter().all(|b| rs.is_positive_root(b)) {
        return Err(Error::Internal(format!(
            "beta sequence of {word} is not a bijection onto the positive roots"
        )));
    }
    Ok(ConvexSeq { word: word.clone(), betas })
}

/// Depth-first enumeration of reduced words of the longest element in
/// letter order, truncated at `cap`. Returns the words and whether the
/// enumeration was cut off.
pub fn enumerate_reduced_words(rs: &RootSystem, cap: usize) -> (Vec<ReducedWord>, bool) {
    assert!(cap >= 1, "cap must be at least 1");
    let mut out = Vec::new();
    let mut truncated = false;
    let mut stack: Vec<usize> = Vec::new();
    let w = WeylAction::identity(rs.cartan.rank);
    dfs_words(rs, &w, &mut stack, cap, &mut out, &mut truncated);
    (out, truncated)
}

fn dfs_words(
    rs: &RootSystem,
    w: &WeylAction,
    stack: &mut Vec<usize>,
    cap: usize,
    out: &mut Vec<ReducedWord>,
    truncated: &mut bool,
) {
    if out.len() == cap {
        *truncated = true;
        return;
    }
    if stack.len() == rs.num_positive() {
        out.push(ReducedWord::new(stack.clone()));
        return;
    }
    for i in 1..=rs.cartan.rank {
        if w.image_of_simple(i).is_nonneg() {
            stack.push(i);
            let next = w.extend_right(&rs.cartan, i);
            dfs_words(rs, &next, stack, cap, out, truncated);
            stack.pop();
            if *truncated {
                return;
            }
        }
    }
}

/// Convexity of a sequence of distinct positive roots: whenever
/// `β_a + β_b` (a < b) is again a listed root at position c, then a < c < b.
pub fn convexity_check(rs: &RootSystem, betas: &[RootVec]) -> Result<bool> {
    let mut pos: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for (k, b) in betas.iter().enumerate() {
        if !rs.is_positive_root(b) {
            return Err(Error::Domain(format!("{b} is not a positive root")));
        }
        if pos.insert(b.coords.clone(), k).is_some() {
            return Err(Error::Domain(format!("{b} listed twice")));
        }
    }
    for a in 0..betas.len() {
        for b in a + 1..betas.len() {
            let sum = betas[a].add(&betas[b]);
            if let Some(&c) = pos.get(&sum.coords) {
                if !(a < c && c < b) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The diagram involution `i ↦ i*` induced by the longest element together
/// with the Coxeter number.
pub fn involution_and_coxeter(rs: &RootSystem) -> (Vec<usize>, usize) {
    // Walk up the weak order greedily to reach w0.
    let mut w = WeylAction::identity(rs.cartan.rank);
    let mut steps = 0usize;
    loop {
        let mut advanced = false;
        for i in 1..=rs.cartan.rank {
            if w.image_of_simple(i).is_nonneg() {
                w = w.extend_right(&rs.cartan, i);
                steps += 1;
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    assert_eq!(steps, rs.num_positive(), "longest element length mismatch");
    let mut star = vec![0usize; rs.cartan.rank + 1];
    for i in 1..=rs.cartan.rank {
        let img = w.apply(&RootVec::simple(rs.cartan.rank, i)).neg();
        let j = (1..=rs.cartan.rank)
            .find(|&j| img == RootVec::simple(rs.cartan.rank, j))
            .expect("w0 sends each simple root to minus a simple root");
        star[i] = j;
    }
    (star, rs.coxeter_number())
}
