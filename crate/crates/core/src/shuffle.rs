//! Words over the Dynkin index set and the quantum shuffle product.
//!
//! This module is the single convention point for the q-powers used by the
//! whole crate. The pinned conventions are:
//!
//! * `x ∘ y` is the sum over all interleavings of `x` and `y`; an
//!   interleaving contributes `q^E` where `E` adds `(α_a, α_b)` for every
//!   crossed pair, i.e. every letter `a` of `x` and letter `b` of `y`
//!   with `b` placed before `a`. Concatenation `xy` always appears with
//!   coefficient 1.
//! * `bar` conjugates every coefficient (`q ↦ q^{-1}`) and fixes every
//!   word. With the product convention above this satisfies, exactly,
//!   `bar(x ∘ y) = q^{-(wt x, wt y)} bar(y) ∘ bar(x)`.
//!
//! Every other module treats the product and `bar` as black boxes, so a
//! convention change stays local to this file.

use crate::laurent::LaurentPoly;
use crate::liecore::{CartanDatum, RootVec};
use crate::{Error, Result};
use num_bigint::BigInt;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Word over the index set `1..=rank`. Ordered by length, then
/// lexicographically; within one weight space this is plain lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: vec![] }
    }

    pub fn letter(i: usize) -> Self {
        Word { letters: vec![i as u8] }
    }

    pub fn new(letters: &[usize]) -> Self {
        Word { letters: letters.iter().map(|&l| l as u8).collect() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters.iter().map(|&l| l as usize)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn weight(&self, rank: usize) -> RootVec {
        let mut w = RootVec::zero(rank);
        for l in self.letters() {
            w.coords[l - 1] += 1;
        }
        w
    }

    /// Digit string, empty for the empty word. Ranks stay below 10.
    pub fn digits(&self) -> String {
        self.letters.iter().map(|l| l.to_string()).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.digits())
    }
}

/// Finite formal combination of words with [`LaurentPoly`] coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct ShuffleElt {
    terms: BTreeMap<Word, LaurentPoly>,
}

impl ShuffleElt {
    pub fn zero() -> Self {
        ShuffleElt { terms: BTreeMap::new() }
    }

    /// The empty word with coefficient 1.
    pub fn unit() -> Self {
        Self::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentPoly::one());
        ShuffleElt { terms }
    }

    pub fn letter(i: usize) -> Self {
        Self::from_word(Word::letter(i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w: Word, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn max_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn add(&self, other: &ShuffleElt) -> ShuffleElt {
        let mut out = self.clone();
        for (w, c) in other.terms.iter() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ShuffleElt) -> ShuffleElt {
        let mut out = self.clone();
        for (w, c) in other.terms.iter() {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scaled(&self, c: &LaurentPoly) -> ShuffleElt {
        if c.is_zero() {
            return ShuffleElt::zero();
        }
        ShuffleElt {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), c * k)).collect(),
        }
    }

    pub fn shifted(&self, exp: i64) -> ShuffleElt {
        ShuffleElt {
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.clone(), k.shifted(exp)))
                .collect(),
        }
    }

    /// Weight when all words agree on it.
    pub fn homogeneous_weight(&self, rank: usize) -> Option<RootVec> {
        let mut it = self.terms.keys();
        let first = it.next()?.weight(rank);
        for w in it {
            if w.weight(rank) != first {
                return None;
            }
        }
        Some(first)
    }

    fn require_weight(&self, rank: usize) -> Result<RootVec> {
        self.homogeneous_weight(rank).ok_or_else(|| {
            Error::Domain("operation requires a nonzero homogeneous element".into())
        })
    }

    /// q = 1 specialization as word -> integer.
    pub fn eval_at_one(&self) -> BTreeMap<Word, BigInt> {
        self.terms
            .iter()
            .map(|(w, c)| (w.clone(), c.eval_at_one()))
            .collect()
    }

    /// Canonical JSON object string: word digits -> canonical coefficient.
    /// Keys come out in the map's word order.
    pub fn canonical_json(&self) -> String {
        let body = self
            .terms
            .iter()
            .map(|(w, c)| format!("\"{}\":\"{}\"", w.digits(), c.canonical_string()))
            .collect::<Vec<_>>()
            .join(",");
        format!("{{{body}}}")
    }
}

impl fmt::Display for ShuffleElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let body = self
            .terms
            .iter()
            .map(|(w, c)| format!("({}){}", c.canonical_string(), w))
            .collect::<Vec<_>>()
            .join(" + ");
        write!(f, "{body}")
    }
}

/// Quantum shuffle product under the pinned convention.
pub fn shuffle_mul(cartan: &CartanDatum, x: &ShuffleElt, y: &ShuffleElt) -> ShuffleElt {
    let mut out = ShuffleElt::zero();
    for (wx, cx) in x.terms() {
        for (wy, cy) in y.terms() {
            let scale = cx * cy;
            shuffle_words_into(cartan, wx, wy, &scale, &mut out);
        }
    }
    out
}

fn shuffle_words_into(
    cartan: &CartanDatum,
    x: &Word,
    y: &Word,
    scale: &LaurentPoly,
    out: &mut ShuffleElt,
) {
    let xl: Vec<usize> = x.letters().collect();
    let yl: Vec<usize> = y.letters().collect();
    // crossing weight when y[j] is placed before the remaining x suffix
    // starting at i: sum over a >= i of (α_{x_a}, α_{y_j})
    let mut suffix = vec![vec![0i64; cartan.rank + 1]; xl.len() + 1];
    for i in (0..xl.len()).rev() {
        for l in 1..=cartan.rank {
            suffix[i][l] = suffix[i + 1][l] + cartan.entry(xl[i], l);
        }
    }
    let mut buf: Vec<u8> = Vec::with_capacity(xl.len() + yl.len());
    rec_shuffle(&xl, &yl, &suffix, 0, 0, 0, &mut buf, scale, out);
}

#[allow(clippy::too_many_arguments)]
fn rec_shuffle(
    xl: &[usize],
    yl: &[usize],
    suffix: &[Vec<i64>],
    i: usize,
    j: usize,
    exp: i64,
    buf: &mut Vec<u8>,
    scale: &LaurentPoly,
    out: &mut ShuffleElt,
) {
    if i == xl.len() && j == yl.len() {
        out.add_term(
            Word { letters: buf.clone() },
            scale.shifted(exp),
        );
        return;
    }
    if i < xl.len() {
        buf.push(xl[i] as u8);
        rec_shuffle(xl, yl, suffix, i + 1, j, exp, buf, scale, out);
        buf.pop();
    }
    if j < yl.len() {
        buf.push(yl[j] as u8);
        rec_shuffle(xl, yl, suffix, i, j + 1, exp + suffix[i][yl[j]], buf, scale, out);
        buf.pop();
    }
}

/// Bar involution: conjugate every coefficient. Anti-multiplicative with
/// the exact twist `bar(x ∘ y) = q^{-(wt x, wt y)} bar(y) ∘ bar(x)`.
pub fn bar(cartan: &CartanDatum, x: &ShuffleElt) -> Result<ShuffleElt> {
    if !x.is_zero() {
        x.require_weight(cartan.rank)?;
    }
    Ok(bar_unchecked(x))
}

pub(crate) fn bar_unchecked(x: &ShuffleElt) -> ShuffleElt {
    ShuffleElt {
        terms: x.terms.iter().map(|(w, c)| (w.clone(), c.conj())).collect(),
    }
}

/// `(wt x, wt y)` under the symmetric form.
pub fn wt_pair(cartan: &CartanDatum, x: &ShuffleElt, y: &ShuffleElt) -> Result<i64> {
    let wx = x.require_weight(cartan.rank)?;
    let wy = y.require_weight(cartan.rank)?;
    Ok(cartan.pairing(&wx, &wy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::CartanSeries;

    fn a2() -> CartanDatum {
        CartanDatum::new(CartanSeries::A, 2).unwrap()
    }

    fn a1() -> CartanDatum {
        CartanDatum::new(CartanSeries::A, 1).unwrap()
    }

    #[test]
    fn unit_law() {
        let c = a2();
        let x = shuffle_mul(&c, &ShuffleElt::letter(1), &ShuffleElt::letter(2));
        assert_eq!(shuffle_mul(&c, &ShuffleElt::unit(), &x), x);
        assert_eq!(shuffle_mul(&c, &x, &ShuffleElt::unit()), x);
    }

    #[test]
    fn pinned_product_values() {
        let c = a2();
        // (1)(2) = (12) + q^{(α1,α2)} (21) = (12) + q^{-1}(21)
        let x = shuffle_mul(&c, &ShuffleElt::letter(1), &ShuffleElt::letter(2));
        assert_eq!(x.coeff(&Word::new(&[1, 2])), LaurentPoly::one());
        assert_eq!(x.coeff(&Word::new(&[2, 1])), LaurentPoly::q_power(-1));
        assert_eq!(x.num_terms(), 2);
        // (1)(1) = (1 + q^2)(11): two terms, positive, sums to 2 at q = 1
        let c1 = a1();
        let y = shuffle_mul(&c1, &ShuffleElt::letter(1), &ShuffleElt::letter(1));
        let coeff = y.coeff(&Word::new(&[1, 1]));
        assert_eq!(coeff, LaurentPoly::from_terms([(0, 1), (2, 1)]));
        assert_eq!(coeff.eval_at_one(), BigInt::from(2));
    }

    #[test]
    fn associativity_sample() {
        let c = a2();
        let a = ShuffleElt::letter(1);
        let b = ShuffleElt::letter(2);
        let d = shuffle_mul(&c, &a, &a);
        let left = shuffle_mul(&c, &shuffle_mul(&c, &d, &b), &a);
        let right = shuffle_mul(&c, &d, &shuffle_mul(&c, &b, &a));
        assert_eq!(left, right);
    }

    #[test]
    fn bar_is_involution_and_fixes_letters() {
        let c = a2();
        let x = shuffle_mul(&c, &ShuffleElt::letter(1), &ShuffleElt::letter(2));
        assert_eq!(bar(&c, &bar(&c, &x).unwrap()).unwrap(), x);
        let l = ShuffleElt::letter(1);
        assert_eq!(bar(&c, &l).unwrap(), l);
    }

    #[test]
    fn bar_twist_identity() {
        // bar(x y) = q^{-(wt x, wt y)} bar(y) bar(x), tested verbatim
        let c = a2();
        let x = shuffle_mul(&c, &ShuffleElt::letter(1), &ShuffleElt::letter(2));
        let y = ShuffleElt::letter(1);
        let lhs = bar(&c, &shuffle_mul(&c, &x, &y)).unwrap();
        let twist = -wt_pair(&c, &x, &y).unwrap();
        let rhs = shuffle_mul(&c, &bar(&c, &y).unwrap(), &bar(&c, &x).unwrap()).shifted(twist);
        assert_eq!(lhs, rhs);
        // the pinned A2 instance: bar((1)(2)) = q^{+1} (2)(1)
        let lhs2 = bar(&c, &x).unwrap();
        let rhs2 = shuffle_mul(&c, &ShuffleElt::letter(2), &ShuffleElt::letter(1)).shifted(1);
        assert_eq!(lhs2, rhs2);
    }

    #[test]
    fn bar_rejects_mixed_weights() {
        let c = a2();
        let mut x = ShuffleElt::letter(1);
        x.add_term(Word::new(&[1, 2]), LaurentPoly::one());
        assert!(matches!(bar(&c, &x), Err(Error::Domain(_))));
    }

    #[test]
    fn wt_pair_values() {
        let c = a2();
        let one = ShuffleElt::letter(1);
        let two = ShuffleElt::letter(2);
        assert_eq!(wt_pair(&c, &one, &one).unwrap(), 2);
        assert_eq!(wt_pair(&c, &one, &two).unwrap(), -1);
        let w12 = ShuffleElt::from_word(Word::new(&[1, 2]));
        assert_eq!(wt_pair(&c, &w12, &one).unwrap(), 1);
    }

    #[test]
    fn q1_specialization_is_classical_shuffle() {
        let c = a2();
        let x = ShuffleElt::from_word(Word::new(&[1, 2]));
        let y = ShuffleElt::from_word(Word::new(&[2, 1]));
        let prod = shuffle_mul(&c, &x, &y);
        // classical shuffle oracle: count interleavings per word
        let mut expected: BTreeMap<Word, i64> = BTreeMap::new();
        classical_shuffle(&[1, 2], &[2, 1], &mut vec![], 0, 0, &mut expected);
        for (w, n) in expected {
            assert_eq!(prod.coeff(&w).eval_at_one(), BigInt::from(n), "word {w}");
        }
        // and order independence at q=1
        let prod2 = shuffle_mul(&c, &y, &x);
        assert_eq!(prod.eval_at_one(), prod2.eval_at_one());
    }

    fn classical_shuffle(
        x: &[usize],
        y: &[usize],
        buf: &mut Vec<usize>,
        i: usize,
        j: usize,
        out: &mut BTreeMap<Word, i64>,
    ) {
        if i == x.len() && j == y.len() {
            *out.entry(Word::new(buf)).or_insert(0) += 1;
            return;
        }
        if i < x.len() {
            buf.push(x[i]);
            classical_shuffle(x, y, buf, i + 1, j, out);
            buf.pop();
        }
        if j < y.len() {
            buf.push(y[j]);
            classical_shuffle(x, y, buf, i, j + 1, out);
            buf.pop();
        }
    }

    #[test]
    fn canonical_json_golden() {
        let c = a2();
        let x = shuffle_mul(&c, &ShuffleElt::letter(1), &ShuffleElt::letter(2));
        assert_eq!(x.canonical_json(), r#"{"12":"q{0}:1","21":"q{-1}:1"}"#);
        assert_eq!(ShuffleElt::unit().canonical_json(), r#"{"":"q{0}:1"}"#);
        assert_eq!(ShuffleElt::zero().canonical_json(), "{}");
    }
}
