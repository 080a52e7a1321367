//! Randomized property checks for the shuffle algebra and the order
//! combinatorics: associativity and unit laws on homogeneous elements,
//! classical specialization at q = 1, the bar twist identity, and the
//! bi-lexicographic order axioms.

use cuspidal::affine::{bilex_compare, BilexOrdering, CuspParam};
use cuspidal::laurent::LaurentPoly;
use cuspidal::liecore::{CartanDatum, CartanSeries};
use cuspidal::shuffle::{bar, shuffle_mul, wt_pair, ShuffleElt, Word};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn a3() -> CartanDatum {
    CartanDatum::new(CartanSeries::A, 3).unwrap()
}

/// Random word over {1,2,3} of bounded length.
fn word_strategy(max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=3, 0..=max_len)
}

/// Random homogeneous element: rearrangements of one letter multiset with
/// small Laurent coefficients.
fn homogeneous_strategy() -> impl Strategy<Value = ShuffleElt> {
    (word_strategy(4), prop::collection::vec((-2i64..=2, -3i64..=3), 1..=3)).prop_map(
        |(base, coeffs)| {
            let mut elt = ShuffleElt::zero();
            let mut letters = base;
            for (i, (exp, c)) in coeffs.into_iter().enumerate() {
                // deterministic rearrangements of the same multiset
                let rot = i.min(letters.len().max(1) - 1);
                letters.rotate_left(rot);
                elt.add_term(Word::new(&letters), LaurentPoly::monomial(exp, BigInt::from(c)));
            }
            elt
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shuffle_is_associative(x in homogeneous_strategy(),
                              y in homogeneous_strategy(),
                              z in homogeneous_strategy()) {
        let c = a3();
        let left = shuffle_mul(&c, &shuffle_mul(&c, &x, &y), &z);
        let right = shuffle_mul(&c, &x, &shuffle_mul(&c, &y, &z));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn unit_laws(x in homogeneous_strategy()) {
        let c = a3();
        prop_assert_eq!(shuffle_mul(&c, &ShuffleElt::unit(), &x), x.clone());
        prop_assert_eq!(shuffle_mul(&c, &x, &ShuffleElt::unit()), x);
    }

    #[test]
    fn weights_add(x in word_strategy(4), y in word_strategy(4)) {
        let c = a3();
        let ex = ShuffleElt::from_word(Word::new(&x));
        let ey = ShuffleElt::from_word(Word::new(&y));
        let p = shuffle_mul(&c, &ex, &ey);
        let expected = Word::new(&x).weight(3).add(&Word::new(&y).weight(3));
        prop_assert_eq!(p.homogeneous_weight(3), Some(expected));
    }

    #[test]
    fn q1_specialization_is_classical(x in word_strategy(4), y in word_strategy(4)) {
        let c = a3();
        let p = shuffle_mul(
            &c,
            &ShuffleElt::from_word(Word::new(&x)),
            &ShuffleElt::from_word(Word::new(&y)),
        );
        let mut expected: BTreeMap<Word, i64> = BTreeMap::new();
        classical(&x, &y, &mut vec![], 0, 0, &mut expected);
        for (w, n) in expected {
            prop_assert_eq!(p.coeff(&w).eval_at_one(), BigInt::from(n));
        }
    }

    #[test]
    fn bar_twist_holds(x in word_strategy(4), y in word_strategy(4)) {
        let c = a3();
        let ex = ShuffleElt::from_word(Word::new(&x));
        let ey = ShuffleElt::from_word(Word::new(&y));
        let lhs = bar(&c, &shuffle_mul(&c, &ex, &ey)).unwrap();
        let twist = -wt_pair(&c, &ex, &ey).unwrap();
        let rhs = shuffle_mul(&c, &bar(&c, &ey).unwrap(), &bar(&c, &ex).unwrap()).shifted(twist);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bar_is_involution(x in homogeneous_strategy()) {
        let c = a3();
        if x.homogeneous_weight(3).is_some() {
            prop_assert_eq!(bar(&c, &bar(&c, &x).unwrap()).unwrap(), x);
        }
    }
}

fn classical(
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
        classical(x, y, buf, i + 1, j, out);
        buf.pop();
    }
    if j < y.len() {
        buf.push(y[j]);
        classical(x, y, buf, i, j + 1, out);
        buf.pop();
    }
}

fn param_strategy() -> impl Strategy<Value = CuspParam> {
    prop::collection::btree_map(-4i64..=4, 0u32..=3, 0..=5)
        .prop_map(CuspParam::from_entries)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bilex_is_strict_partial_order(a in param_strategy(),
                                     b in param_strategy(),
                                     c in param_strategy()) {
        prop_assert_eq!(bilex_compare(&a, &a), BilexOrdering::Equal);
        let ab = bilex_compare(&a, &b);
        let ba = bilex_compare(&b, &a);
        let flipped = match ab {
            BilexOrdering::Less => BilexOrdering::Greater,
            BilexOrdering::Greater => BilexOrdering::Less,
            other => other,
        };
        prop_assert_eq!(ba, flipped);
        if ab == BilexOrdering::Less && bilex_compare(&b, &c) == BilexOrdering::Less {
            prop_assert_eq!(bilex_compare(&a, &c), BilexOrdering::Less);
        }
    }
}
