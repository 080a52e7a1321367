//! Dual PBW root vectors and monomials attached to a convex order, with
//! exact expansion of homogeneous elements in the dual PBW basis.
//!
//! Per weight space the engine builds, in one ascending pass over the
//! exponents (ordered by right-to-left lex, which refines the
//! bi-lexicographic order):
//!
//! 1. the raw ordered product of divided powers,
//! 2. an eliminated copy with a fresh pivot word (exact fraction-free up
//!    to checked divisions), giving triangular expansion data,
//! 3. the bar-transition row, which fixes the q-power normalization of
//!    the monomial (its bar-diagonal must be a unit q-power and is
//!    symmetrized away),
//! 4. the bar-invariant global element by triangular correction.
//!
//! The global side of the data is surfaced through the `gbasis` module.

use crate::laurent::{LaurentPoly, RatFun};
use crate::liecore::{beta_sequence, ConvexSeq, ReducedWord, RootSystem, RootVec};
use crate::shuffle::{bar_unchecked, shuffle_mul, ShuffleElt, Word};
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

/// Exponent vector `(a_1, ..., a_l)` over the positions of a [`ConvexSeq`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwExponent {
    pub a: Vec<u32>,
}

impl PbwExponent {
    pub fn zero(len: usize) -> Self {
        PbwExponent { a: vec![0; len] }
    }

    pub fn unit(len: usize, k: usize) -> Self {
        let mut a = vec![0; len];
        a[k - 1] = 1;
        PbwExponent { a }
    }

    pub fn total(&self) -> u32 {
        self.a.iter().sum()
    }

    pub fn weight(&self, seq: &ConvexSeq, rank: usize) -> RootVec {
        let mut w = RootVec::zero(rank);
        for (k, &m) in self.a.iter().enumerate() {
            if m > 0 {
                w = w.add(&seq.betas[k].scaled(m as i64));
            }
        }
        w
    }

    /// Right-to-left lexicographic comparison; the largest position where
    /// the vectors differ decides. This is a total order refining the
    /// bi-lexicographic order on window parameters.
    pub fn total_cmp(&self, other: &PbwExponent) -> Ordering {
        for k in (0..self.a.len()).rev() {
            match self.a[k].cmp(&other.a[k]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for PbwExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// A dual PBW monomial together with its expansion pivot.
#[derive(Clone, Debug)]
pub struct PbwBasisElt {
    pub exponent: PbwExponent,
    pub value: ShuffleElt,
    pub leading_word: Word,
}

/// All exponent vectors of a given weight, ascending in the total order.
/// The count is the Kostant partition number of the weight.
pub fn exponents_of_weight(seq: &ConvexSeq, weight: &RootVec) -> Vec<PbwExponent> {
    let mut out = Vec::new();
    let mut acc = vec![0u32; seq.len()];
    rec_exponents(seq, weight.clone(), seq.len(), &mut acc, &mut out);
    out.sort_by(|a, b| a.total_cmp(b));
    out
}

fn rec_exponents(
    seq: &ConvexSeq,
    rem: RootVec,
    k: usize,
    acc: &mut Vec<u32>,
    out: &mut Vec<PbwExponent>,
) {
    if k == 0 {
        if rem.is_zero() {
            out.push(PbwExponent { a: acc.clone() });
        }
        return;
    }
    let beta = &seq.betas[k - 1];
    let mut max = u32::MAX;
    for (i, &b) in beta.coords.iter().enumerate() {
        if b > 0 {
            max = max.min((rem.coords[i] / b).max(0) as u32);
        }
    }
    let mut cur = rem;
    for m in 0..=max {
        acc[k - 1] = m;
        rec_exponents(seq, cur.clone(), k - 1, acc, out);
        if m < max {
            cur = cur.sub(beta);
        }
    }
    acc[k - 1] = 0;
}

/// Sparse element with rational-function coefficients; internal to the
/// weight-space solver.
#[derive(Clone, Debug, Default)]
struct FracElt {
    terms: BTreeMap<Word, RatFun>,
}

impl FracElt {
    fn from_shuffle(x: &ShuffleElt) -> Self {
        FracElt {
            terms: x
                .terms()
                .map(|(w, c)| (w.clone(), RatFun::from_poly(c.clone())))
                .collect(),
        }
    }

    fn coeff(&self, w: &Word) -> RatFun {
        self.terms.get(w).cloned().unwrap_or_else(RatFun::zero)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn max_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    /// self -= factor * other
    fn sub_scaled(&mut self, factor: &RatFun, other: &FracElt) {
        if factor.is_zero() {
            return;
        }
        for (w, c) in other.terms.iter() {
            let delta = factor.mul(c);
            let entry = self.terms.entry(w.clone()).or_insert_with(RatFun::zero);
            *entry = entry.sub(&delta);
            if entry.is_zero() {
                self.terms.remove(w);
            }
        }
    }

    fn shift(&mut self, exp: i64) {
        let q = RatFun::from_poly(LaurentPoly::q_power(exp));
        for c in self.terms.values_mut() {
            *c = c.mul(&q);
        }
    }
}

/// Per-weight basis data: dual PBW monomials, expansion pivots, the
/// bar-transition over PBW, and the bar-invariant global elements with
/// both transition matrices.
#[derive(Debug)]
pub struct WeightBasis {
    pub weight: RootVec,
    /// ascending in `PbwExponent::total_cmp`
    pub exponents: Vec<PbwExponent>,
    /// normalized dual PBW monomials, aligned with `exponents`
    pub monomials: Vec<ShuffleElt>,
    /// distinct expansion pivot words, aligned with `exponents`
    pub pivots: Vec<Word>,
    /// bar(P_a) = P_a + sum_{b<a} bar_lower[a][b] P_b
    pub bar_lower: Vec<Vec<LaurentPoly>>,
    /// bar-invariant global elements, aligned with `exponents`
    pub globals: Vec<ShuffleElt>,
    /// P_a = sum_c pbw_to_global[a][c] G_c; unitriangular, diagonal 1
    pub pbw_to_global: Vec<Vec<LaurentPoly>>,
    /// G_a = sum_b global_to_pbw[a][b] P_b; unitriangular, diagonal 1
    pub global_to_pbw: Vec<Vec<LaurentPoly>>,
    elim: Vec<FracElt>,
    /// P_a = elim_a + sum_{b<a} lmat[a][b] elim_b
    lmat: Vec<Vec<RatFun>>,
}

impl WeightBasis {
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponent_index(&self, a: &PbwExponent) -> Option<usize> {
        self.exponents.iter().position(|e| e == a)
    }

    /// Expand a homogeneous element of this weight over the dual PBW
    /// monomials. Errors with an internal invariant violation when the
    /// monomials fail to span.
    pub fn expand_pbw(&self, x: &ShuffleElt) -> Result<Vec<LaurentPoly>> {
        let n = self.len();
        let mut residual = FracElt::from_shuffle(x);
        let mut f = vec![RatFun::zero(); n];
        for b in 0..n {
            let c = residual.coeff(&self.pivots[b]);
            if c.is_zero() {
                continue;
            }
            let factor = c.div_by(&self.elim[b].coeff(&self.pivots[b]));
            residual.sub_scaled(&factor, &self.elim[b]);
            f[b] = factor;
        }
        if !residual.is_zero() {
            return Err(Error::Internal(format!(
                "PBW monomials fail to span weight space {}",
                self.weight
            )));
        }
        // convert from eliminated columns to P columns, descending
        let mut c = vec![RatFun::zero(); n];
        for b in (0..n).rev() {
            let mut acc = f[b].clone();
            for a in b + 1..n {
                acc = acc.sub(&c[a].mul(&self.lmat[a][b]));
            }
            c[b] = acc;
        }
        c.into_iter()
            .map(|r| {
                r.into_laurent().ok_or_else(|| {
                    Error::Internal(format!(
                        "non-integral PBW coefficient at weight {}",
                        self.weight
                    ))
                })
            })
            .collect()
    }

    /// Expand over the global elements (via the PBW expansion and the
    /// stored unitriangular transition).
    pub fn expand_global(&self, x: &ShuffleElt) -> Result<Vec<LaurentPoly>> {
        let c = self.expand_pbw(x)?;
        let n = self.len();
        let mut d = vec![LaurentPoly::zero(); n];
        for b in 0..n {
            if c[b].is_zero() {
                continue;
            }
            for g in 0..=b {
                if !self.pbw_to_global[b][g].is_zero() {
                    d[g] += &(&c[b] * &self.pbw_to_global[b][g]);
                }
            }
        }
        Ok(d)
    }
}

/// Lazy per-reduced-word engine with idempotent caches.
pub struct PbwContext {
    pub rs: Rc<RootSystem>,
    pub seq: ConvexSeq,
    pub height_bound: i64,
    root_vectors: Vec<Option<ShuffleElt>>,
    powers: BTreeMap<(usize, u32), ShuffleElt>,
    weights: BTreeMap<Vec<i64>, Rc<WeightBasis>>,
}

impl PbwContext {
    pub fn new(rs: Rc<RootSystem>, word: &ReducedWord, height_bound: i64) -> Result<Self> {
        if height_bound < 1 {
            return Err(Error::Config("height bound must be at least 1".into()));
        }
        let seq = beta_sequence(&rs, word)?;
        let l = seq.len();
        Ok(PbwContext {
            rs,
            seq,
            height_bound,
            root_vectors: vec![None; l + 1],
            powers: BTreeMap::new(),
            weights: BTreeMap::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rs.cartan.rank
    }

    pub fn seq_len(&self) -> usize {
        self.seq.len()
    }

    /// The dual root vector E*(β_k), 1-based k. Simple roots are single
    /// letters; other roots are built from the q-bracket of the minimal
    /// pair, normalized primitive, bar-invariant and positive at q = 1.
    pub fn dual_root_vector(&mut self, k: usize) -> Result<ShuffleElt> {
        if k == 0 || k > self.seq.len() {
            return Err(Error::Range(format!("index {k} outside 1..={}", self.seq.len())));
        }
        if let Some(e) = &self.root_vectors[k] {
            return Ok(e.clone());
        }
        let beta = self.seq.beta(k).clone();
        let value = if beta.height() == 1 {
            let i = beta
                .coords
                .iter()
                .position(|&c| c == 1)
                .expect("height one root is simple")
                + 1;
            ShuffleElt::letter(i)
        } else {
            let (j, kk) = self.minimal_pair(k)?;
            let gamma = self.seq.beta(j).clone();
            let delta = self.seq.beta(kk).clone();
            let e_gamma = self.dual_root_vector(j)?;
            let e_delta = self.dual_root_vector(kk)?;
            let pairing = self.rs.cartan.pairing(&gamma, &delta);
            let left = shuffle_mul(&self.rs.cartan, &e_delta, &e_gamma);
            let right = shuffle_mul(&self.rs.cartan, &e_gamma, &e_delta).shifted(pairing);
            let bracket = left.sub(&right);
            self.normalize_root_vector(bracket, &beta)?
        };
        self.root_vectors[k] = Some(value.clone());
        Ok(value)
    }

    /// Minimal pair of β_k: positions (j, k') with β_j + β_{k'} = β_k and
    /// the smallest index spread, ties to the smaller left index.
    fn minimal_pair(&self, k: usize) -> Result<(usize, usize)> {
        let beta = self.seq.beta(k);
        let mut best: Option<(usize, usize)> = None;
        for j in 1..=self.seq.len() {
            for kk in j + 1..=self.seq.len() {
                if self.seq.beta(j).add(self.seq.beta(kk)) == *beta {
                    let better = match best {
                        None => true,
                        Some((bj, bk)) => {
                            (kk - j, j) < (bk - bj, bj)
                        }
                    };
                    if better {
                        best = Some((j, kk));
                    }
                }
            }
        }
        best.ok_or_else(|| {
            Error::Internal(format!("no minimal pair for root {beta} in a convex order"))
        })
    }

    fn normalize_root_vector(&self, bracket: ShuffleElt, beta: &RootVec) -> Result<ShuffleElt> {
        if bracket.is_zero() {
            return Err(Error::Internal(format!("vanishing bracket at root {beta}")));
        }
        // strip the scalar content
        let mut g = LaurentPoly::zero();
        for (_, c) in bracket.terms() {
            g = g.gcd(c);
        }
        let mut prim = ShuffleElt::zero();
        for (w, c) in bracket.terms() {
            let q = c.exact_div(&g).ok_or_else(|| {
                Error::Internal(format!("content division failed at root {beta}"))
            })?;
            prim.add_term(w.clone(), q);
        }
        // fix the q-power so the element is bar-invariant
        let barred = bar_unchecked(&prim);
        let mut ratio: Option<RatFun> = None;
        for (w, c) in prim.terms() {
            let r = RatFun::div(&barred.coeff(w), c);
            match &ratio {
                None => ratio = Some(r),
                Some(prev) if *prev == r => {}
                _ => {
                    return Err(Error::Internal(format!(
                        "bracket at root {beta} is not proportional to its bar image"
                    )))
                }
            }
        }
        let ratio = ratio.unwrap().into_laurent().and_then(|p| p.as_unit_q_power());
        let e = ratio.ok_or_else(|| {
            Error::Internal(format!("bar ratio at root {beta} is not a unit q-power"))
        })?;
        if e % 2 != 0 {
            return Err(Error::Internal(format!("odd bar ratio at root {beta}")));
        }
        let mut out = prim.shifted(e / 2);
        let total: num_bigint::BigInt = out.terms().map(|(_, c)| c.eval_at_one()).sum();
        if total.is_negative() {
            out = out.scaled(&LaurentPoly::monomial(0, (-1).into()));
        } else if total.is_zero() {
            return Err(Error::Internal(format!("degenerate root vector at {beta}")));
        }
        if bar_unchecked(&out) != out {
            return Err(Error::Internal(format!("root vector at {beta} is not bar-invariant")));
        }
        Ok(out)
    }

    /// Self-dual power of a dual root vector: q^{-m(m-1)/2} E*(β_k)^{∘m}.
    pub fn divided_power(&mut self, k: usize, m: u32) -> Result<ShuffleElt> {
        if m == 0 {
            return Ok(ShuffleElt::unit());
        }
        if let Some(p) = self.powers.get(&(k, m)) {
            return Ok(p.clone());
        }
        let base = self.dual_root_vector(k)?;
        let mut raw = base.clone();
        for _ in 1..m {
            raw = shuffle_mul(&self.rs.cartan, &raw, &base);
        }
        let shift = -((m as i64) * (m as i64 - 1) / 2);
        let out = raw.shifted(shift);
        if bar_unchecked(&out) != out {
            return Err(Error::Internal(format!(
                "divided power at position {k}, multiplicity {m} is not bar-invariant"
            )));
        }
        self.powers.insert((k, m), out.clone());
        Ok(out)
    }

    fn raw_product(&mut self, a: &PbwExponent) -> Result<ShuffleElt> {
        let mut x = ShuffleElt::unit();
        for k in (1..=self.seq.len()).rev() {
            let m = a.a[k - 1];
            if m > 0 {
                let f = self.divided_power(k, m)?;
                x = shuffle_mul(&self.rs.cartan, &x, &f);
            }
        }
        Ok(x)
    }

    /// The basis data of one weight space, built on first use.
    pub fn weight_basis(&mut self, weight: &RootVec) -> Result<Rc<WeightBasis>> {
        if let Some(wb) = self.weights.get(&weight.coords) {
            return Ok(wb.clone());
        }
        if !weight.is_nonneg() {
            return Err(Error::Domain(format!("{weight} is not a dominant-cone weight")));
        }
        if weight.height() > self.height_bound {
            return Err(Error::Range(format!(
                "weight {weight} exceeds the configured height bound {}",
                self.height_bound
            )));
        }
        let wb = Rc::new(self.build_weight_basis(weight)?);
        self.weights.insert(weight.coords.clone(), wb.clone());
        Ok(wb)
    }

    fn build_weight_basis(&mut self, weight: &RootVec) -> Result<WeightBasis> {
        let exponents = exponents_of_weight(&self.seq, weight);
        let n = exponents.len();
        let mut monomials: Vec<ShuffleElt> = Vec::with_capacity(n);
        let mut pivots: Vec<Word> = Vec::with_capacity(n);
        let mut elim: Vec<FracElt> = Vec::with_capacity(n);
        let mut lmat: Vec<Vec<RatFun>> = Vec::with_capacity(n);
        let mut bar_lower: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);

        for (idx, a) in exponents.iter().enumerate() {
            let x = self.raw_product(a)?;
            // eliminate against the previous columns
            let mut e = FracElt::from_shuffle(&x);
            let mut lrow = vec![RatFun::zero(); idx];
            for b in 0..idx {
                let c = e.coeff(&pivots[b]);
                if c.is_zero() {
                    continue;
                }
                let factor = c.div_by(&elim[b].coeff(&pivots[b]));
                e.sub_scaled(&factor, &elim[b]);
                lrow[b] = factor;
            }
            if e.is_zero() {
                return Err(Error::Internal(format!(
                    "dual PBW monomial {a} is dependent at weight {weight}"
                )));
            }
            let pivot = e.max_word().unwrap().clone();

            // bar-transition over {P_b} ∪ {X}: fixes the normalization
            let barred = bar_unchecked(&x);
            let mut residual = FracElt::from_shuffle(&barred);
            let mut f = vec![RatFun::zero(); idx + 1];
            for b in 0..idx {
                let c = residual.coeff(&pivots[b]);
                if c.is_zero() {
                    continue;
                }
                let factor = c.div_by(&elim[b].coeff(&pivots[b]));
                residual.sub_scaled(&factor, &elim[b]);
                f[b] = factor;
            }
            let c_top = residual.coeff(&pivot);
            if !c_top.is_zero() {
                let factor = c_top.div_by(&e.coeff(&pivot));
                residual.sub_scaled(&factor, &e);
                f[idx] = factor;
            }
            if !residual.is_zero() {
                return Err(Error::Internal(format!(
                    "bar image of {a} leaves the PBW filtration at weight {weight}"
                )));
            }
            // convert to coefficients over {P_b} ∪ {X}
            let mut c = vec![RatFun::zero(); idx + 1];
            for b in (0..=idx).rev() {
                let mut acc = f[b].clone();
                for up in b + 1..=idx {
                    let l = if up == idx { &lrow[b] } else { &lmat[up][b] };
                    acc = acc.sub(&c[up].mul(l));
                }
                c[b] = acc;
            }
            let diag = c[idx]
                .into_laurent()
                .and_then(|p| p.as_unit_q_power())
                .ok_or_else(|| {
                    Error::Internal(format!(
                        "bar diagonal of {a} at weight {weight} is not a unit q-power"
                    ))
                })?;
            if diag % 2 != 0 {
                return Err(Error::Internal(format!(
                    "odd bar diagonal {diag} of {a} at weight {weight}"
                )));
            }
            let s = diag / 2;

            // P_a := q^s X; rescale the stored solver data to match
            let p = x.shifted(s);
            let mut e_scaled = e;
            e_scaled.shift(s);
            let qs = RatFun::from_poly(LaurentPoly::q_power(s));
            for l in lrow.iter_mut() {
                *l = l.mul(&qs);
            }
            // bar(P_a) = P_a + sum_b q^{-s} c_b P_b
            let mut row = Vec::with_capacity(idx);
            for (b, cb) in c[..idx].iter().enumerate() {
                let val = cb.mul(&RatFun::from_poly(LaurentPoly::q_power(-s)));
                let val = val.into_laurent().ok_or_else(|| {
                    Error::Internal(format!(
                        "non-integral bar coefficient of {a} over {} at weight {weight}",
                        exponents[b]
                    ))
                })?;
                row.push(val);
            }

            monomials.push(p);
            pivots.push(pivot);
            elim.push(e_scaled);
            lmat.push(lrow);
            bar_lower.push(row);
        }

        // bar-invariant global elements by triangular correction
        let mut globals: Vec<ShuffleElt> = Vec::with_capacity(n);
        let mut pbw_to_global: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
        let mut global_to_pbw: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
        for a in 0..n {
            // bar(P_a) - P_a over the globals below a
            let mut t = vec![LaurentPoly::zero(); a];
            for b in 0..a {
                if bar_lower[a][b].is_zero() {
                    continue;
                }
                for g in 0..=b {
                    if !pbw_to_global[b][g].is_zero() {
                        t[g] += &(&bar_lower[a][b] * &pbw_to_global[b][g]);
                    }
                }
            }
            let mut gamma = vec![LaurentPoly::zero(); a];
            for g in 0..a {
                if t[g].is_zero() {
                    continue;
                }
                if !t[g].is_antipalindromic() {
                    return Err(Error::Internal(format!(
                        "bar defect of {} over {} is not anti-palindromic at weight {weight}",
                        exponents[a], exponents[g]
                    )));
                }
                gamma[g] = t[g].positive_part();
            }
            let mut gval = monomials[a].clone();
            let mut grow = vec![LaurentPoly::zero(); n];
            grow[a] = LaurentPoly::one();
            for g in 0..a {
                if gamma[g].is_zero() {
                    continue;
                }
                gval = gval.add(&globals[g].scaled(&gamma[g]));
                for b in 0..=g {
                    if !global_to_pbw[g][b].is_zero() {
                        grow[b] += &(&gamma[g] * &global_to_pbw[g][b]);
                    }
                }
            }
            if bar_unchecked(&gval) != gval {
                return Err(Error::Internal(format!(
                    "global element {} at weight {weight} is not bar-invariant",
                    exponents[a]
                )));
            }
            let mut mrow = vec![LaurentPoly::zero(); n];
            mrow[a] = LaurentPoly::one();
            for g in 0..a {
                if !gamma[g].is_zero() {
                    mrow[g] = -&gamma[g];
                }
            }
            globals.push(gval);
            pbw_to_global.push(mrow);
            global_to_pbw.push(grow);
        }

        Ok(WeightBasis {
            weight: weight.clone(),
            exponents,
            monomials,
            pivots,
            bar_lower,
            globals,
            pbw_to_global,
            global_to_pbw,
            elim,
            lmat,
        })
    }

    /// The normalized dual PBW monomial of an exponent vector.
    pub fn dual_pbw_monomial(&mut self, a: &PbwExponent) -> Result<PbwBasisElt> {
        if a.a.len() != self.seq.len() {
            return Err(Error::Domain(format!(
                "exponent length {} does not match l(w0) = {}",
                a.a.len(),
                self.seq.len()
            )));
        }
        let weight = a.weight(&self.seq, self.rank());
        if a.total() == 0 {
            return Ok(PbwBasisElt {
                exponent: a.clone(),
                value: ShuffleElt::unit(),
                leading_word: Word::empty(),
            });
        }
        let wb = self.weight_basis(&weight)?;
        let idx = wb.exponent_index(a).ok_or_else(|| {
            Error::Internal(format!("exponent {a} missing from its own weight space"))
        })?;
        Ok(PbwBasisElt {
            exponent: a.clone(),
            value: wb.monomials[idx].clone(),
            leading_word: wb.pivots[idx].clone(),
        })
    }

    /// Exact coefficients of a homogeneous element over the dual PBW basis
    /// of its weight.
    pub fn expand_in_pbw(
        &mut self,
        x: &ShuffleElt,
    ) -> Result<BTreeMap<PbwExponent, LaurentPoly>> {
        if x.is_zero() {
            return Ok(BTreeMap::new());
        }
        let weight = x
            .homogeneous_weight(self.rank())
            .ok_or_else(|| Error::Domain("expansion requires a homogeneous element".into()))?;
        let wb = self.weight_basis(&weight)?;
        if wb.is_empty() {
            return Err(Error::Internal(format!(
                "no PBW exponents at weight {weight} for a nonzero element"
            )));
        }
        let coeffs = wb.expand_pbw(x)?;
        Ok(wb
            .exponents
            .iter()
            .cloned()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .collect())
    }
}
