//! Denominator zero tables for untwisted affine types A and D, the delta
//! invariant between fundamental-class labels, root-module / strong
//! duality checkers, cuspidal lines, and the bi-lexicographic order on
//! finitely supported parameters.
//!
//! delta is computed additively from the zero multisets:
//! `delta(x, y) = mult(p_y - p_x in zeros(i_x, i_y))
//!              + mult(p_x - p_y in zeros(i_y, i_x))`.
//! The convention is validated end to end by the root-module and strong
//! duality sweeps rather than trusted.

use crate::liecore::{involution_and_coxeter, CartanSeries, ReducedWord, RootSystem, RootVec};
use crate::qdata::{ar_quiver, is_adapted, root_coordinate_bijection, QDataT, VertexLabel};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Label (i, p) of a fundamental class with spectral exponent p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FundLabel {
    pub i: usize,
    pub p: i64,
}

impl From<VertexLabel> for FundLabel {
    fn from(v: VertexLabel) -> Self {
        FundLabel { i: v.i, p: v.p }
    }
}

impl From<FundLabel> for VertexLabel {
    fn from(v: FundLabel) -> Self {
        VertexLabel { i: v.i, p: v.p }
    }
}

impl fmt::Display for FundLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.p)
    }
}

/// Sorted multiset of integers e with (-q)^e a denominator zero.
pub fn denominator_zeros(
    series: CartanSeries,
    n: usize,
    i: usize,
    j: usize,
) -> Result<Vec<i64>> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::Config(format!("node pair ({i},{j}) outside rank {n}")));
    }
    match series {
        CartanSeries::A => {
            let bound = i.min(j).min(n + 1 - i).min(n + 1 - j);
            Ok((1..=bound).map(|s| (i.abs_diff(j) + 2 * s) as i64).collect())
        }
        CartanSeries::D => {
            if n < 4 {
                return Err(Error::Config(format!("D{n} is not a valid type")));
            }
            let spin = |k: usize| k >= n - 1;
            let mut zeros: Vec<i64> = match (spin(i), spin(j)) {
                (false, false) => {
                    let m = i.min(j);
                    let mut z = Vec::with_capacity(2 * m);
                    for s in 1..=m {
                        z.push((i.abs_diff(j) + 2 * s) as i64);
                        z.push((2 * n - 2 - i - j + 2 * s) as i64);
                    }
                    z
                }
                (false, true) => (1..=i).map(|s| (n - 1 - i + 2 * s) as i64).collect(),
                (true, false) => (1..=j).map(|s| (n - 1 - j + 2 * s) as i64).collect(),
                (true, true) => {
                    if i == j {
                        (1..=n / 2).map(|s| (4 * s - 2) as i64).collect()
                    } else {
                        (1..=(n - 1) / 2).map(|s| (4 * s) as i64).collect()
                    }
                }
            };
            zeros.sort();
            Ok(zeros)
        }
        CartanSeries::E => Err(Error::Unsupported(
            "E-series denominator tables are not included".into(),
        )),
    }
}

/// Delta computation context for one supported root system.
pub struct AffineContext {
    pub rs: std::rc::Rc<RootSystem>,
    star: Vec<usize>,
    h: i64,
    zeros: BTreeMap<(usize, usize), Vec<i64>>,
}

impl AffineContext {
    pub fn new(rs: std::rc::Rc<RootSystem>) -> Result<Self> {
        if rs.cartan.series == CartanSeries::E {
            return Err(Error::Unsupported(
                "E-series denominator tables are not included".into(),
            ));
        }
        let (star, h) = involution_and_coxeter(&rs);
        let mut zeros = BTreeMap::new();
        let n = rs.cartan.rank;
        for i in 1..=n {
            for j in 1..=n {
                zeros.insert((i, j), denominator_zeros(rs.cartan.series, n, i, j)?);
            }
        }
        Ok(AffineContext { rs, star, h: h as i64, zeros })
    }

    pub fn coxeter_number(&self) -> i64 {
        self.h
    }

    pub fn zeros(&self, i: usize, j: usize) -> &[i64] {
        &self.zeros[&(i, j)]
    }

    /// Membership parity for the skeleton category: p = d(1, i) mod 2.
    pub fn in_parity_skeleton(&self, x: &FundLabel) -> bool {
        let d = self.rs.cartan.graph_distance(1, x.i) as i64;
        (x.p - d).rem_euclid(2) == 0
    }

    /// k-fold right dual on labels: (i, p) -> (i*^k, p + k h).
    pub fn dshift(&self, x: &FundLabel, k: i64) -> FundLabel {
        let i = if k.rem_euclid(2) == 0 { x.i } else { self.star[x.i] };
        FundLabel { i, p: x.p + k * self.h }
    }

    pub fn delta_fund(&self, x: &FundLabel, y: &FundLabel) -> u32 {
        let mult = |zs: &[i64], e: i64| zs.iter().filter(|&&z| z == e).count() as u32;
        mult(self.zeros(x.i, y.i), y.p - x.p) + mult(self.zeros(y.i, x.i), x.p - y.p)
    }

    /// Root-module condition: delta against the k-th dual shift is 1 for
    /// k = +-1 and 0 otherwise. Zero exponents lie in (0, 2h), so
    /// scanning |k| <= h is conclusive.
    pub fn root_module_check(&self, x: &FundLabel) -> bool {
        self.root_module_check_upto(x, self.h)
    }

    pub fn root_module_check_upto(&self, x: &FundLabel, k_max: i64) -> bool {
        (-k_max..=k_max).all(|k| {
            let expected = if k == 1 || k == -1 { 1 } else { 0 };
            self.delta_fund(x, &self.dshift(x, k)) == expected
        })
    }

    /// Strong duality conditions for a family of labels indexed by the
    /// Dynkin vertices; also reports the recovered Cartan matrix.
    pub fn strong_datum_check(&self, labels: &BTreeMap<usize, FundLabel>) -> StrongDatumReport {
        let n = self.rs.cartan.rank;
        let mut failures = Vec::new();
        for i in 1..=n {
            if !labels.contains_key(&i) {
                failures.push(format!("missing label for vertex {i}"));
            }
        }
        if !failures.is_empty() {
            return StrongDatumReport {
                recovered_matrix: vec![],
                failures,
                passed: false,
            };
        }
        for (i, l) in labels {
            if !self.root_module_check(l) {
                failures.push(format!("label {l} of vertex {i} is not a root module"));
            }
        }
        let mut recovered = vec![vec![0i64; n]; n];
        for i in 1..=n {
            recovered[i - 1][i - 1] = 2;
        }
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let li = &labels[&i];
                let lj = &labels[&j];
                recovered[i - 1][j - 1] = -(self.delta_fund(li, lj) as i64);
                for k in -self.h..=self.h {
                    let expected = if k == 0 {
                        (-self.rs.cartan.entry(i, j)) as u32
                    } else {
                        0
                    };
                    let got = self.delta_fund(li, &self.dshift(lj, k));
                    if got != expected {
                        failures.push(format!(
                            "delta(L_{i}, D^{k} L_{j}) = {got}, expected {expected}"
                        ));
                    }
                }
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                if recovered[i - 1][j - 1] != self.rs.cartan.entry(i, j) {
                    failures.push(format!(
                        "recovered entry ({i},{j}) = {} differs from the Cartan matrix",
                        recovered[i - 1][j - 1]
                    ));
                }
            }
        }
        StrongDatumReport {
            recovered_matrix: recovered,
            passed: failures.is_empty(),
            failures,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StrongDatumReport {
    pub recovered_matrix: Vec<Vec<i64>>,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Finitely supported map Z -> Z_{>=0}.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CuspParam {
    entries: BTreeMap<i64, u32>,
}

impl CuspParam {
    pub fn new() -> Self {
        CuspParam::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (i64, u32)>>(it: I) -> Self {
        let mut c = CuspParam::new();
        for (k, v) in it {
            c.set(k, v);
        }
        c
    }

    pub fn unit(k: i64) -> Self {
        Self::from_entries([(k, 1)])
    }

    pub fn set(&mut self, k: i64, v: u32) {
        if v == 0 {
            self.entries.remove(&k);
        } else {
            self.entries.insert(k, v);
        }
    }

    pub fn get(&self, k: i64) -> u32 {
        self.entries.get(&k).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn total(&self) -> u64 {
        self.entries.values().map(|&v| v as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Window embedding of a PBW exponent vector at positions 1..=l.
    pub fn from_window(a: &[u32]) -> Self {
        Self::from_entries(a.iter().enumerate().map(|(k, &v)| (k as i64 + 1, v)))
    }

    pub fn sparse_string(&self) -> String {
        self.entries
            .iter()
            .map(|(k, v)| format!("{k}:{v}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BilexOrdering {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Bi-lexicographic comparison: Less needs the leftmost AND the rightmost
/// differences to favor the first argument.
pub fn bilex_compare(a: &CuspParam, b: &CuspParam) -> BilexOrdering {
    use std::cmp::Ordering;
    let keys: std::collections::BTreeSet<i64> = a
        .entries
        .keys()
        .chain(b.entries.keys())
        .copied()
        .collect();
    let mut left = Ordering::Equal;
    for &k in keys.iter() {
        match a.get(k).cmp(&b.get(k)) {
            Ordering::Equal => continue,
            ord => {
                left = ord;
                break;
            }
        }
    }
    if left == Ordering::Equal {
        return BilexOrdering::Equal;
    }
    let mut right = Ordering::Equal;
    for &k in keys.iter().rev() {
        match a.get(k).cmp(&b.get(k)) {
            Ordering::Equal => continue,
            ord => {
                right = ord;
                break;
            }
        }
    }
    match (left, right) {
        (Ordering::Less, Ordering::Less) => BilexOrdering::Less,
        (Ordering::Greater, Ordering::Greater) => BilexOrdering::Greater,
        _ => BilexOrdering::Incomparable,
    }
}

/// One entry of a cuspidal line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CuspEntry {
    /// Adapted case: a fundamental-class label.
    Fund(FundLabel),
    /// Non-adapted case: formal reference to the window class E*(β_k),
    /// shifted `dual_shift` times.
    Shadow {
        window_index: usize,
        root: RootVec,
        dual_shift: i64,
    },
}

impl fmt::Display for CuspEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CuspEntry::Fund(l) => write!(f, "{l}"),
            CuspEntry::Shadow { window_index, root, dual_shift } => {
                write!(f, "D^{dual_shift}[S'_{window_index} = E*({root})]")
            }
        }
    }
}

/// The line k -> S_k attached to Q-data and a reduced word: window labels
/// for k in 1..=l, extended to all k by the dual shift.
#[derive(Clone, Debug)]
pub struct CuspLine {
    pub qdata: QDataT,
    pub word: ReducedWord,
    pub adapted: bool,
    pub k_range: (i64, i64),
    window: Vec<CuspEntry>,
    star: Vec<usize>,
    h: i64,
}

impl CuspLine {
    pub fn window_len(&self) -> usize {
        self.window.len()
    }

    /// S_k for any k in range.
    pub fn label(&self, k: i64) -> Result<CuspEntry> {
        if k < self.k_range.0 || k > self.k_range.1 {
            return Err(Error::Range(format!(
                "index {k} outside the line range {:?}",
                self.k_range
            )));
        }
        let l = self.window.len() as i64;
        let k0 = (k - 1).rem_euclid(l) + 1;
        let m = (k - k0) / l;
        Ok(match &self.window[(k0 - 1) as usize] {
            CuspEntry::Fund(f) => {
                let i = if m.rem_euclid(2) == 0 { f.i } else { self.star[f.i] };
                CuspEntry::Fund(FundLabel { i, p: f.p + m * self.h })
            }
            CuspEntry::Shadow { window_index, root, dual_shift } => CuspEntry::Shadow {
                window_index: *window_index,
                root: root.clone(),
                dual_shift: dual_shift + m,
            },
        })
    }

    pub fn window_fund_labels(&self) -> Option<Vec<FundLabel>> {
        self.window
            .iter()
            .map(|e| match e {
                CuspEntry::Fund(f) => Some(*f),
                CuspEntry::Shadow { .. } => None,
            })
            .collect()
    }
}

pub fn cuspidal_line(
    rs: &RootSystem,
    q: &QDataT,
    word: &ReducedWord,
    k_range: (i64, i64),
) -> Result<CuspLine> {
    if k_range.0 > k_range.1 {
        return Err(Error::Range(format!("empty range {k_range:?}")));
    }
    let seq = crate::liecore::beta_sequence(rs, word)?;
    let adapted = is_adapted(rs, word, q)?;
    let (star, h) = involution_and_coxeter(rs);
    let window = if adapted {
        let ar = ar_quiver(rs, q)?;
        let (to_label, _) = root_coordinate_bijection(&ar);
        seq.betas
            .iter()
            .map(|b| CuspEntry::Fund(to_label[&b.coords].into()))
            .collect()
    } else {
        seq.betas
            .iter()
            .enumerate()
            .map(|(k, b)| CuspEntry::Shadow {
                window_index: k + 1,
                root: b.clone(),
                dual_shift: 0,
            })
            .collect()
    };
    Ok(CuspLine {
        qdata: q.clone(),
        word: word.clone(),
        adapted,
        k_range,
        window,
        star,
        h: h as i64,
    })
}

/// Unmixedness within the window: delta(S_j, D(S_k)) = 0 for all j < k.
pub fn unmixed_check(ctx: &AffineContext, line: &CuspLine) -> Result<bool> {
    let labels = line.window_fund_labels().ok_or_else(|| {
        Error::Unsupported("unmixedness needs fundamental labels (adapted line)".into())
    })?;
    for j in 0..labels.len() {
        for k in j + 1..labels.len() {
            if ctx.delta_fund(&labels[j], &ctx.dshift(&labels[k], 1)) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Ordered factor list of a standard-module descriptor, descending k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StdDescriptor {
    pub factors: Vec<(i64, CuspEntry, u32)>,
}

#[cfg(test)]
fn denominator_zeros_d_for_test(n: usize, i: usize, j: usize) -> Vec<i64> {
    // the D-series formulas instantiated without the rank-4 floor, used
    // only for the D3 = A3 cross-check
    let spin = |k: usize| k >= n - 1;
    let mut zeros: Vec<i64> = match (spin(i), spin(j)) {
        (false, false) => {
            let m = i.min(j);
            let mut z = Vec::with_capacity(2 * m);
            for s in 1..=m {
                z.push((i.abs_diff(j) + 2 * s) as i64);
                z.push((2 * n - 2 - i - j + 2 * s) as i64);
            }
            z
        }
        (false, true) => (1..=i).map(|s| (n - 1 - i + 2 * s) as i64).collect(),
        (true, false) => (1..=j).map(|s| (n - 1 - j + 2 * s) as i64).collect(),
        (true, true) => {
            if i == j {
                (1..=n / 2).map(|s| (4 * s - 2) as i64).collect()
            } else {
                (1..=(n - 1) / 2).map(|s| (4 * s) as i64).collect()
            }
        }
    };
    zeros.sort();
    zeros
}

pub fn standard_descriptor(line: &CuspLine, a: &CuspParam) -> Result<StdDescriptor> {
    let mut factors = Vec::new();
    for (k, mult) in a.support().collect::<Vec<_>>().into_iter().rev() {
        let entry = line.label(k).map_err(|_| {
            Error::Range(format!("support index {k} outside the line range {:?}", line.k_range))
        })?;
        factors.push((k, entry, mult));
    }
    Ok(StdDescriptor { factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::{build_root_system, CartanSeries};
    use crate::qdata::DynkinQuiver;
    use std::rc::Rc;

    fn actx(series: CartanSeries, rank: usize) -> AffineContext {
        AffineContext::new(Rc::new(build_root_system(series, rank).unwrap())).unwrap()
    }

    #[test]
    fn denominator_tables_a() {
        assert_eq!(denominator_zeros(CartanSeries::A, 1, 1, 1).unwrap(), vec![2]);
        assert_eq!(denominator_zeros(CartanSeries::A, 2, 1, 2).unwrap(), vec![3]);
        assert_eq!(denominator_zeros(CartanSeries::A, 2, 1, 1).unwrap(), vec![2]);
        assert_eq!(denominator_zeros(CartanSeries::A, 3, 2, 2).unwrap(), vec![2, 4]);
        assert!(denominator_zeros(CartanSeries::E, 6, 1, 1).is_err());
    }

    #[test]
    fn denominator_tables_d_match_a3_coincidence() {
        // D3 with spin nodes {2,3} is A3 with nodes relabeled (2,1,3)
        let map = |k: usize| match k {
            1 => 2,
            2 => 1,
            3 => 3,
            _ => unreachable!(),
        };
        for i in 1..=3 {
            for j in 1..=3 {
                // D3 is not a valid CartanDatum, but the table formulas
                // extend; compare D4-style formulas at n = 3 directly
                let d = super::denominator_zeros_d_for_test(3, i, j);
                let a = denominator_zeros(CartanSeries::A, 3, map(i), map(j)).unwrap();
                assert_eq!(d, a, "nodes ({i},{j})");
            }
        }
    }

    #[test]
    fn denominator_symmetry_and_range() {
        for (series, n) in [
            (CartanSeries::A, 4),
            (CartanSeries::D, 4),
            (CartanSeries::D, 5),
        ] {
            let rs = build_root_system(series, n).unwrap();
            let h = rs.coxeter_number() as i64;
            for i in 1..=n {
                for j in 1..=n {
                    let z = denominator_zeros(series, n, i, j).unwrap();
                    let zt = denominator_zeros(series, n, j, i).unwrap();
                    assert_eq!(z, zt);
                    for e in z {
                        assert!(e > 0 && e < 2 * h, "{series:?}{n} ({i},{j}): {e}");
                    }
                }
            }
        }
    }

    #[test]
    fn delta_fund_values() {
        let a1 = actx(CartanSeries::A, 1);
        let x = FundLabel { i: 1, p: 0 };
        assert_eq!(a1.delta_fund(&x, &FundLabel { i: 1, p: 2 }), 1);
        assert_eq!(a1.delta_fund(&x, &FundLabel { i: 1, p: 4 }), 0);
        assert_eq!(a1.delta_fund(&x, &x), 0);
        // symmetry
        let a3 = actx(CartanSeries::A, 3);
        for p in [-3, -1, 1, 3] {
            let y = FundLabel { i: 2, p };
            let x = FundLabel { i: 1, p: 0 };
            assert_eq!(a3.delta_fund(&x, &y), a3.delta_fund(&y, &x));
        }
    }

    #[test]
    fn root_module_sweeps() {
        let a1 = actx(CartanSeries::A, 1);
        assert!(a1.root_module_check(&FundLabel { i: 1, p: 0 }));
        let a2 = actx(CartanSeries::A, 2);
        assert!(a2.root_module_check(&FundLabel { i: 1, p: 0 }));
        // every parity-skeleton label passes, scanned to 3h as a wider net
        for (series, rank) in [
            (CartanSeries::A, 2),
            (CartanSeries::A, 3),
            (CartanSeries::D, 4),
        ] {
            let ctx = actx(series, rank);
            for i in 1..=rank {
                let d = ctx.rs.cartan.graph_distance(1, i) as i64;
                for t in -4..=4 {
                    let x = FundLabel { i, p: d + 2 * t };
                    assert!(ctx.in_parity_skeleton(&x));
                    assert!(
                        ctx.root_module_check_upto(&x, 3 * ctx.coxeter_number()),
                        "{series:?}{rank} label {x}"
                    );
                }
            }
        }
    }

    #[test]
    fn strong_datum_a2() {
        let rs = Rc::new(build_root_system(CartanSeries::A, 2).unwrap());
        let ctx = AffineContext::new(rs.clone()).unwrap();
        let quiver = DynkinQuiver::new(rs.cartan.clone(), &[(2, 1)]).unwrap();
        let q = QDataT::new(quiver, vec![0, 1]).unwrap();
        let ar = ar_quiver(&rs, &q).unwrap();
        let (to_label, _) = root_coordinate_bijection(&ar);
        let labels: BTreeMap<usize, FundLabel> = (1..=2)
            .map(|i| {
                let v = to_label[&RootVec::simple(2, i).coords];
                (i, v.into())
            })
            .collect();
        let report = ctx.strong_datum_check(&labels);
        assert!(report.passed, "{:?}", report.failures);
        assert_eq!(report.recovered_matrix, vec![vec![2, -1], vec![-1, 2]]);
        // degenerate family: equal labels fail
        let same: BTreeMap<usize, FundLabel> =
            (1..=2).map(|i| (i, FundLabel { i: 1, p: 0 })).collect();
        assert!(!ctx.strong_datum_check(&same).passed);
    }

    #[test]
    fn bilex_examples() {
        let e0 = CuspParam::unit(0);
        let e1 = CuspParam::unit(1);
        let e0p2 = CuspParam::from_entries([(0, 1), (2, 1)]);
        assert_eq!(bilex_compare(&e1, &e0p2), BilexOrdering::Less);
        assert_eq!(bilex_compare(&e0, &e1), BilexOrdering::Incomparable);
        assert_eq!(bilex_compare(&e0, &e0), BilexOrdering::Equal);
        assert_eq!(bilex_compare(&e0p2, &e1), BilexOrdering::Greater);
    }

    #[test]
    fn cuspidal_line_a1() {
        let rs = Rc::new(build_root_system(CartanSeries::A, 1).unwrap());
        let q = QDataT::new(DynkinQuiver::new(rs.cartan.clone(), &[]).unwrap(), vec![0]).unwrap();
        let w = ReducedWord::new(vec![1]);
        let line = cuspidal_line(&rs, &q, &w, (-3, 5)).unwrap();
        assert!(line.adapted);
        // S_{k+1} = D(S_k): p advances by h = 2 each step
        let mut prev: Option<FundLabel> = None;
        for k in -3..=5 {
            match line.label(k).unwrap() {
                CuspEntry::Fund(f) => {
                    assert_eq!(f.i, 1);
                    if let Some(p) = prev {
                        assert_eq!(f.p, p.p + 2);
                    }
                    prev = Some(f);
                }
                _ => panic!("adapted line must carry labels"),
            }
        }
        assert!(line.label(6).is_err());
        // a single-entry window has no mixed pairs
        let ctx = actx(CartanSeries::A, 1);
        assert!(unmixed_check(&ctx, &line).unwrap());
    }

    #[test]
    fn cuspidal_line_a2() {
        let rs = Rc::new(build_root_system(CartanSeries::A, 2).unwrap());
        let ctx = AffineContext::new(rs.clone()).unwrap();
        let quiver = DynkinQuiver::new(rs.cartan.clone(), &[(2, 1)]).unwrap();
        let q = QDataT::new(quiver, vec![0, 1]).unwrap();
        // adapted word: labels are the AR coordinates, S_4 = D(S_1)
        let w = ReducedWord::new(vec![1, 2, 1]);
        let line = cuspidal_line(&rs, &q, &w, (1, 6)).unwrap();
        assert!(line.adapted);
        let s1 = line.label(1).unwrap();
        let s4 = line.label(4).unwrap();
        match (s1, s4) {
            (CuspEntry::Fund(a), CuspEntry::Fund(b)) => {
                assert_eq!(b, ctx.dshift(&a, 1));
            }
            _ => panic!(),
        }
        assert!(unmixed_check(&ctx, &line).unwrap());
        // non-adapted word: shadow entries only
        let w2 = ReducedWord::new(vec![2, 1, 2]);
        let line2 = cuspidal_line(&rs, &q, &w2, (1, 3)).unwrap();
        assert!(!line2.adapted);
        assert!(matches!(line2.label(1).unwrap(), CuspEntry::Shadow { .. }));
        assert!(matches!(unmixed_check(&ctx, &line2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn standard_descriptor_ordering() {
        let rs = Rc::new(build_root_system(CartanSeries::A, 2).unwrap());
        let quiver = DynkinQuiver::new(rs.cartan.clone(), &[(2, 1)]).unwrap();
        let q = QDataT::new(quiver, vec![0, 1]).unwrap();
        let w = ReducedWord::new(vec![1, 2, 1]);
        let line = cuspidal_line(&rs, &q, &w, (1, 3)).unwrap();
        // a = 0: empty descriptor
        let empty = standard_descriptor(&line, &CuspParam::new()).unwrap();
        assert!(empty.factors.is_empty());
        // a = e1 + e3: factors [S_3, S_1]
        let a = CuspParam::from_entries([(1, 1), (3, 1)]);
        let d = standard_descriptor(&line, &a).unwrap();
        assert_eq!(d.factors.len(), 2);
        assert_eq!(d.factors[0].0, 3);
        assert_eq!(d.factors[1].0, 1);
        // multiplicity stays in place
        let a2 = CuspParam::from_entries([(2, 2)]);
        let d2 = standard_descriptor(&line, &a2).unwrap();
        assert_eq!(d2.factors, vec![(2, line.label(2).unwrap(), 2)]);
        // out of range
        let bad = CuspParam::unit(7);
        assert!(matches!(standard_descriptor(&line, &bad), Err(Error::Range(_))));
    }
}
