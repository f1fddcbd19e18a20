//! Exact coefficient rings.
//!
//! [`Laurent`] is the group ring of the weight lattice: a term `c e^lambda` is
//! stored under the exponent `lambda` in fundamental-weight coordinates.
//! [`Poly`] is the polynomial ring on the fundamental weights: a term
//! `c w_1^a w_2^b ...` is stored under `[a, b, ...]`.
//!
//! Both rings are integral domains, so a quotient that exists is unique;
//! [`Coefficient::exact_div`] finds it by leading-term elimination under the
//! graded lexicographic order and reports an error otherwise.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::smallvec;

use crate::cartan::Vector;
use crate::error::{Error, Result};

type TermMap = BTreeMap<Vector, i64>;

pub trait Coefficient:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn constant(rank: usize, c: i64) -> Self;
    fn one(rank: usize) -> Self {
        Self::constant(rank, 1)
    }
    fn is_zero(&self) -> bool;
    fn terms(&self) -> &BTreeMap<Vector, i64>;
    fn from_terms(terms: BTreeMap<Vector, i64>) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, c: i64) -> Self;
    /// The unique `q` with `self = q * divisor`.
    fn exact_div(&self, divisor: &Self) -> Result<Self>;
    /// Value under the specialization that forgets the torus.
    fn specialize(&self) -> i64;
}

macro_rules! ring_ops {
    ($t:ident) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                $t(add_terms(&self.0, &o.0, 1))
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                $t(add_terms(&self.0, &o.0, -1))
            }
        }
        impl Mul for &$t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                $t(mul_terms(&self.0, &o.0))
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.scale(-1)
            }
        }
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.scale(-1)
            }
        }
        impl AddAssign<&$t> for $t {
            fn add_assign(&mut self, o: &$t) {
                accumulate(&mut self.0, &o.0, 1);
            }
        }
        impl SubAssign<&$t> for $t {
            fn sub_assign(&mut self, o: &$t) {
                accumulate(&mut self.0, &o.0, -1);
            }
        }
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let m: BTreeMap<String, i64> = self
                    .0
                    .iter()
                    .map(|(k, v)| (exponent_key(k), *v))
                    .collect();
                m.serialize(s)
            }
        }
        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let m: BTreeMap<String, i64> = BTreeMap::deserialize(d)?;
                let mut terms = TermMap::new();
                for (k, v) in m {
                    let e = parse_exponent_key(&k).map_err(D::Error::custom)?;
                    if v != 0 {
                        *terms.entry(e).or_insert(0) += v;
                    }
                }
                terms.retain(|_, c| *c != 0);
                $t::check_terms(&terms).map_err(D::Error::custom)?;
                Ok($t(terms))
            }
        }
    };
}

fn exponent_key(e: &[i32]) -> String {
    e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_exponent_key(k: &str) -> std::result::Result<Vector, String> {
    let k = k.trim().trim_start_matches('[').trim_end_matches(']');
    if k.is_empty() {
        return Ok(Vector::new());
    }
    k.split(',')
        .map(|p| p.trim().parse::<i32>().map_err(|e| format!("bad exponent {p:?}: {e}")))
        .collect()
}

fn add_terms(a: &TermMap, b: &TermMap, sign: i64) -> TermMap {
    let mut out = a.clone();
    accumulate(&mut out, b, sign);
    out
}

fn accumulate(a: &mut TermMap, b: &TermMap, sign: i64) {
    for (k, v) in b {
        let e = a.entry(k.clone()).or_insert(0);
        *e += sign * v;
        if *e == 0 {
            a.remove(k);
        }
    }
}

fn mul_terms(a: &TermMap, b: &TermMap) -> TermMap {
    let mut out = TermMap::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let k: Vector = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            *out.entry(k).or_insert(0) += va * vb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn degree(e: &[i32]) -> i64 {
    e.iter().map(|&x| x as i64).sum()
}

/// Graded lexicographic leading term.
fn leading(a: &TermMap) -> Option<(&Vector, i64)> {
    a.iter()
        .max_by(|x, y| degree(x.0).cmp(&degree(y.0)).then_with(|| x.0.cmp(y.0)))
        .map(|(k, v)| (k, *v))
}

/// Exact division of polynomials with nonnegative exponents.
fn divide_nonnegative(f: &TermMap, g: &TermMap) -> Result<TermMap> {
    let (lg, cg) = match leading(g) {
        Some((k, c)) => (k.clone(), c),
        None => return Err(Error::DivisionByZero),
    };
    let mut q = TermMap::new();
    let mut r = f.clone();
    while let Some((lr, cr)) = leading(&r) {
        if lr.iter().zip(&lg).any(|(a, b)| a < b) || cr % cg != 0 {
            return Err(Error::InexactDivision(format!(
                "leading term {} of the remainder is not divisible by {}",
                exponent_key(lr),
                exponent_key(&lg)
            )));
        }
        let shift: Vector = lr.iter().zip(&lg).map(|(a, b)| a - b).collect();
        let c = cr / cg;
        *q.entry(shift.clone()).or_insert(0) += c;
        for (k, v) in g {
            let m: Vector = k.iter().zip(&shift).map(|(a, b)| a + b).collect();
            let e = r.entry(m.clone()).or_insert(0);
            *e -= c * v;
            if *e == 0 {
                r.remove(&m);
            }
        }
    }
    q.retain(|_, c| *c != 0);
    Ok(q)
}

fn min_exponent(a: &TermMap) -> Vector {
    let mut it = a.keys();
    let mut m = it.next().cloned().unwrap_or_default();
    for k in it {
        for (x, y) in m.iter_mut().zip(k) {
            *x = (*x).min(*y);
        }
    }
    m
}

fn shift_terms(a: &TermMap, by: &[i32], sign: i32) -> TermMap {
    a.iter()
        .map(|(k, v)| (k.iter().zip(by).map(|(x, y)| x + sign * y).collect(), *v))
        .collect()
}

/// Element of the Laurent ring `Z[P]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent(TermMap);

impl Laurent {
    /// `e^lambda`.
    pub fn monomial(lambda: &[i32]) -> Self {
        let mut m = TermMap::new();
        m.insert(lambda.iter().copied().collect(), 1);
        Laurent(m)
    }

    /// `1 - e^beta`.
    pub fn one_minus(beta: &[i32]) -> Self {
        let r = beta.len();
        &Laurent::constant(r, 1) - &Laurent::monomial(beta)
    }

    /// Applies a linear map to every exponent.
    pub fn map_exponents(&self, f: impl Fn(&[i32]) -> Vector) -> Self {
        let mut out = TermMap::new();
        for (k, v) in &self.0 {
            *out.entry(f(k)).or_insert(0) += v;
        }
        out.retain(|_, c| *c != 0);
        Laurent(out)
    }

    fn check_terms(_t: &TermMap) -> std::result::Result<(), String> {
        Ok(())
    }
}

ring_ops!(Laurent);

impl Coefficient for Laurent {
    fn zero() -> Self {
        Laurent(TermMap::new())
    }

    fn constant(rank: usize, c: i64) -> Self {
        let mut m = TermMap::new();
        if c != 0 {
            m.insert(smallvec![0; rank], c);
        }
        Laurent(m)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn terms(&self) -> &TermMap {
        &self.0
    }

    fn from_terms(mut terms: TermMap) -> Self {
        terms.retain(|_, c| *c != 0);
        Laurent(terms)
    }

    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }

    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }

    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Laurent(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    fn exact_div(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let a = min_exponent(&self.0);
        let b = min_exponent(&g.0);
        let f1 = shift_terms(&self.0, &a, -1);
        let g1 = shift_terms(&g.0, &b, -1);
        let q1 = divide_nonnegative(&f1, &g1).map_err(|e| match e {
            Error::InexactDivision(_) => {
                Error::InexactDivision(format!("({self}) / ({g}) is not a Laurent polynomial"))
            }
            other => other,
        })?;
        let d: Vector = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        Ok(Laurent(shift_terms(&q1, &d, 1)))
    }

    fn specialize(&self) -> i64 {
        self.0.values().sum()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in &self.0 {
            let unit = k.iter().all(|&x| x == 0);
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if unit {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write!(f, "e^[{}]", exponent_key(k))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

/// Element of the polynomial ring on the fundamental weights.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(TermMap);

impl Poly {
    /// The linear form `lambda = sum lambda_j w_j`.
    pub fn linear(lambda: &[i32]) -> Self {
        let r = lambda.len();
        let mut m = TermMap::new();
        for (j, &c) in lambda.iter().enumerate() {
            if c != 0 {
                let mut e: Vector = smallvec![0; r];
                e[j] = 1;
                m.insert(e, c as i64);
            }
        }
        Poly(m)
    }

    pub fn monomial(exponent: &[i32], c: i64) -> Self {
        let mut m = TermMap::new();
        if c != 0 {
            m.insert(exponent.iter().copied().collect(), c);
        }
        Poly(m)
    }

    pub fn pow(&self, k: u32, rank: usize) -> Self {
        let mut out = Poly::constant(rank, 1);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Total degree of the highest term, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.0.keys().map(|k| degree(k)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.0.keys().map(|k| degree(k));
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    /// Substitutes `images[j]` for the generator `w_j`.
    pub fn substitute(&self, images: &[Poly]) -> Self {
        let rank = images.len();
        let mut out = Poly::zero();
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::constant(rank, 1), p.clone()]).collect();
        for (k, &c) in &self.0 {
            let mut term = Poly::constant(rank, c);
            for (j, &e) in k.iter().enumerate() {
                let e = e as usize;
                while powers[j].len() <= e {
                    let next = &powers[j][powers[j].len() - 1] * &images[j];
                    powers[j].push(next);
                }
                if e > 0 {
                    term = &term * &powers[j][e];
                }
            }
            out += &term;
        }
        out
    }

    fn check_terms(t: &TermMap) -> std::result::Result<(), String> {
        if t.keys().any(|k| k.iter().any(|&x| x < 0)) {
            Err("polynomial exponents must be nonnegative".into())
        } else {
            Ok(())
        }
    }
}

ring_ops!(Poly);

impl Coefficient for Poly {
    fn zero() -> Self {
        Poly(TermMap::new())
    }

    fn constant(rank: usize, c: i64) -> Self {
        let mut m = TermMap::new();
        if c != 0 {
            m.insert(smallvec![0; rank], c);
        }
        Poly(m)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn terms(&self) -> &TermMap {
        &self.0
    }

    fn from_terms(mut terms: TermMap) -> Self {
        terms.retain(|_, c| *c != 0);
        debug_assert!(Poly::check_terms(&terms).is_ok());
        Poly(terms)
    }

    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }

    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }

    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Poly(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    fn exact_div(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        divide_nonnegative(&self.0, &g.0)
            .map(Poly)
            .map_err(|e| match e {
                Error::InexactDivision(_) => {
                    Error::InexactDivision(format!("({self}) / ({g}) is not a polynomial"))
                }
                other => other,
            })
    }

    fn specialize(&self) -> i64 {
        self.0
            .iter()
            .filter(|(k, _)| k.iter().all(|&x| x == 0))
            .map(|(_, v)| *v)
            .sum()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        // highest degree first
        let mut terms: Vec<(&Vector, i64)> = self.0.iter().map(|(k, v)| (k, *v)).collect();
        terms.sort_by(|a, b| degree(b.0).cmp(&degree(a.0)).then_with(|| b.0.cmp(a.0)));
        for (n, (k, c)) in terms.into_iter().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if n == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let factors: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        format!("w{}", j + 1)
                    } else {
                        format!("w{}^{}", j + 1, e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_geometric_quotient() {
        let a = [1i32];
        let num = Laurent::one_minus(&[2]);
        let den = Laurent::one_minus(&a);
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q, &Laurent::constant(1, 1) + &Laurent::monomial(&a));
    }

    #[test]
    fn laurent_inexact_is_error() {
        let r = Laurent::one_minus(&[1]).exact_div(&Laurent::one_minus(&[2]));
        assert!(matches!(r, Err(Error::InexactDivision(_))));
    }

    #[test]
    fn laurent_negative_exponents() {
        // (e^{-2} - e^{1}) / (1 - e^{1}) = e^{-2}(1 + e + e^2)
        let f = &Laurent::monomial(&[-2]) - &Laurent::monomial(&[1]);
        let q = f.exact_div(&Laurent::one_minus(&[1])).unwrap();
        let expected = &(&Laurent::monomial(&[-2]) + &Laurent::monomial(&[-1])) + &Laurent::monomial(&[0]);
        assert_eq!(q, expected);
        // units divide
        let u = Laurent::monomial(&[3]).scale(-1);
        assert_eq!(Laurent::monomial(&[1]).exact_div(&u).unwrap(), Laurent::monomial(&[-2]).scale(-1));
    }

    #[test]
    fn poly_square_over_linear() {
        let l = Poly::linear(&[1, 2]);
        let sq = &l * &l;
        assert_eq!(sq.exact_div(&l).unwrap(), l);
        assert!(l.exact_div(&Poly::linear(&[1, 0])).is_err());
        assert!(l.exact_div(&Poly::zero()).is_err());
    }

    #[test]
    fn poly_substitution() {
        // w1 -> -w1 + w2, w2 -> w2
        let images = vec![Poly::linear(&[-1, 1]), Poly::linear(&[0, 1])];
        let p = &Poly::linear(&[1, 0]) * &Poly::linear(&[1, 0]);
        let expected = &Poly::linear(&[-1, 1]) * &Poly::linear(&[-1, 1]);
        assert_eq!(p.substitute(&images), expected);
    }

    #[test]
    fn serde_roundtrip() {
        let f = &Laurent::one_minus(&[1, -1]) + &Laurent::monomial(&[0, 2]).scale(3);
        let text = serde_json::to_string(&f).unwrap();
        let back: Laurent = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        let p = Poly::linear(&[2, -1]);
        let back: Poly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Poly>(r#"{"-1,0": 1}"#).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Laurent::one_minus(&[1, 0]).to_string(), "1 - e^[1,0]");
        assert_eq!(Poly::linear(&[1, -2]).to_string(), "w1 - 2*w2");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
