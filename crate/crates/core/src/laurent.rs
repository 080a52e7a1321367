//! Exact Laurent polynomials in one variable `q` with arbitrary-precision
//! integer coefficients.
//!
//! The canonical text rendering used everywhere in this crate is
//! `q{E}:C` terms joined by commas, exponents ascending, e.g.
//! `q{-2}:1,q{0}:1` for `q^-2 + 1`. The zero polynomial renders as `0`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    // exponent -> nonzero coefficient
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// `q^exp`
    pub fn q_power(exp: i64) -> Self {
        Self::monomial(exp, BigInt::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Some((exp, coeff)) when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((*e, c))
        } else {
            None
        }
    }

    /// Some(exp) when the polynomial is exactly `q^exp`.
    pub fn as_unit_q_power(&self) -> Option<i64> {
        match self.as_monomial() {
            Some((e, c)) if c.is_one() => Some(e),
            _ => None,
        }
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Substitution q -> q^-1.
    pub fn conj(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.conj()
    }

    pub fn is_antipalindromic(&self) -> bool {
        *self == -&self.conj()
    }

    /// Multiply by q^exp.
    pub fn shifted(&self, exp: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + exp, c.clone())).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True when every exponent is >= 1, i.e. the polynomial lies in qZ[q].
    pub fn in_positive_q(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 1)
    }

    /// The part with exponents >= 1.
    pub fn positive_part(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| **e >= 1)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Exact division; None when `self` is not a multiple of `div`.
    pub fn exact_div(&self, div: &LaurentPoly) -> Option<LaurentPoly> {
        if div.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // Shift both to ordinary polynomials and long-divide over Z.
        let s_min = self.min_exp().unwrap();
        let d_min = div.min_exp().unwrap();
        let mut rem = self.shifted(-s_min);
        let d = div.shifted(-d_min);
        let d_deg = d.max_exp().unwrap();
        let d_lead = d.coeff(d_deg);
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let r_deg = rem.max_exp().unwrap();
            if r_deg < d_deg {
                return None;
            }
            let r_lead = rem.coeff(r_deg);
            let (q, r) = num_integer_div_rem(&r_lead, &d_lead);
            if !r.is_zero() {
                return None;
            }
            let t = LaurentPoly::monomial(r_deg - d_deg, q);
            rem -= &(&t * &d);
            quot += &t;
        }
        Some(quot.shifted(s_min - d_min))
    }

    /// Integer content (gcd of coefficients), non-negative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = big_gcd(&g, c);
        }
        g
    }

    /// Gcd as Laurent polynomials, canonicalized: integer content 1, lowest
    /// exponent 0, positive leading coefficient. gcd(0, p) = canonical p.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        let a = self.canonical_associate();
        let b = other.canonical_associate();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        poly_gcd(&a, &b).canonical_associate()
    }

    /// Divide out the unit-and-content part: content 1, min exponent 0,
    /// positive leading coefficient.
    pub fn canonical_associate(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let c = self.content();
        let shifted = self.shifted(-self.min_exp().unwrap());
        let mut p = LaurentPoly {
            terms: shifted
                .terms
                .iter()
                .map(|(e, co)| (*e, co / &c))
                .collect(),
        };
        if p.terms.values().next_back().unwrap().is_negative() {
            p = -&p;
        }
        p
    }

    /// Canonical string, e.g. "q{-2}:1,q{0}:1"; "0" for zero.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(e, c)| format!("q{{{e}}}:{c}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let q = a / b;
    let r = a - &q * b;
    (q, r)
}

fn big_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

// Primitive pseudo-remainder gcd for ordinary (min exponent 0) inputs.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (mut a, mut b) = if a.max_exp() >= b.max_exp() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b).canonical_associate();
        a = b;
        b = r;
    }
    a
}

fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let db = b.max_exp().unwrap();
    let lb = b.coeff(db);
    let mut rem = a.clone();
    while let Some(dr) = rem.max_exp() {
        if dr < db {
            break;
        }
        // scale so the leading term cancels exactly
        let lr = rem.coeff(dr);
        rem = &rem * &LaurentPoly::monomial(0, lb.clone());
        let t = LaurentPoly::monomial(dr - db, lr);
        rem -= &(&t * b);
    }
    rem
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms.iter() {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms.iter() {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

/// Rational function num/den over [`LaurentPoly`], used only inside the
/// exact linear solvers. Kept reduced via gcd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly, // canonical associate, never zero
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFun { num: p, den: LaurentPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).unwrap();
        let mut den = den.exact_div(&g).unwrap();
        // normalize: denominator a canonical associate (so +-q^k units move
        // into the numerator)
        let unit = den.canonical_associate();
        let scale = den.exact_div(&unit).unwrap(); // +-q^k
        let (e, c) = scale.as_monomial().expect("unit part must be a monomial");
        num = num.shifted(-e);
        if c.is_negative() {
            num = -&num;
        }
        den = unit;
        RatFun { num, den }
    }

    pub fn div(a: &LaurentPoly, b: &LaurentPoly) -> Self {
        Self::reduced(a.clone(), b.clone())
    }

    pub fn add(&self, rhs: &RatFun) -> RatFun {
        Self::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn sub(&self, rhs: &RatFun) -> RatFun {
        Self::reduced(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn mul(&self, rhs: &RatFun) -> RatFun {
        Self::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn div_by(&self, rhs: &RatFun) -> RatFun {
        assert!(!rhs.is_zero(), "division by zero rational function");
        Self::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Back to a Laurent polynomial; None when the reduced denominator is
    /// not a unit.
    pub fn into_laurent(&self) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        self.num.exact_div(&self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn arithmetic_and_normal_form() {
        let a = p(&[(0, 1), (2, 1)]); // 1 + q^2
        let b = p(&[(-1, 1), (1, 1)]); // q^-1 + q
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(&a * &LaurentPoly::one(), a);
        assert_eq!(a.shifted(-1), b);
        assert_eq!(b.conj(), b);
        assert!(b.is_palindromic());
        assert!(p(&[(1, 1), (-1, -1)]).is_antipalindromic());
    }

    #[test]
    fn canonical_string_format() {
        assert_eq!(p(&[(-2, 1), (0, 1)]).canonical_string(), "q{-2}:1,q{0}:1");
        assert_eq!(LaurentPoly::zero().canonical_string(), "0");
        assert_eq!(p(&[(3, -5)]).canonical_string(), "q{3}:-5");
    }

    #[test]
    fn exact_division() {
        let a = p(&[(0, 1), (2, 1)]); // 1+q^2
        let b = p(&[(-1, 1), (1, 1)]); // q^-1+q = q^-1 (1+q^2)
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q, LaurentPoly::q_power(1));
        // (1-q^2) divides (q - q^-1) * anything consistently
        let c = p(&[(1, 1), (-1, -1)]);
        let d = p(&[(0, -1), (2, 1)]); // q^2 - 1 = q * (q - q^-1)
        assert_eq!(d.exact_div(&c).unwrap(), LaurentPoly::q_power(1));
        // non-divisible
        assert!(p(&[(0, 1), (1, 1)]).exact_div(&p(&[(0, 2)])).is_none());
        assert!(p(&[(0, 1)]).exact_div(&p(&[(0, 1), (1, 1)])).is_none());
    }

    #[test]
    fn gcd_basics() {
        let a = p(&[(0, -1), (2, 1)]); // q^2-1
        let b = p(&[(0, -1), (3, 1)]); // q^3-1
        assert_eq!(a.gcd(&b), p(&[(0, -1), (1, 1)])); // q-1
        let c = p(&[(-2, -1), (0, 1)]); // 1 - q^-2
        assert_eq!(c.gcd(&c), c.canonical_associate());
        assert_eq!(c.canonical_associate(), p(&[(0, -1), (2, 1)]));
        assert_eq!(LaurentPoly::zero().gcd(&a), a.canonical_associate());
    }

    #[test]
    fn ratfun_roundtrip() {
        let a = p(&[(0, 1), (2, 1)]);
        let b = p(&[(1, 1)]);
        let r = RatFun::div(&a, &b); // (1+q^2)/q
        assert_eq!(r.into_laurent().unwrap(), p(&[(-1, 1), (1, 1)]));
        let s = RatFun::div(&b, &a); // q/(1+q^2): not laurent
        assert!(s.into_laurent().is_none());
        let t = r.mul(&s);
        assert_eq!(t.into_laurent().unwrap(), LaurentPoly::one());
        // subtraction to zero
        assert!(r.sub(&r).is_zero());
    }
}
