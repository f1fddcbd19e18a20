//! The small-torus affine nilHecke rings.
//!
//! An element is a finite sum `sum_z c_z D_z` with coefficients on the left,
//! where `D_z` is `T_z` (K-theory) or `A_z` (cohomology), or a finite sum
//! `sum_z c_z z` of group elements. Coefficients commute past generators by
//! `D_i q = (D_i q) + (s_i q) D_i` and past group elements by `w q = (w q) w`,
//! both at level zero.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::marker::PhantomData;

use serde::{Deserialize, Serialize};

use crate::affweyl::{AffineWeylElement, AffineWeylGroup, ElementDocument};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::theory::{level_zero_act, node_factor, reflect, Theory, TheoryKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `T_w` in K-theory, `A_w` in cohomology.
    Nil,
    Group,
}

impl Basis {
    pub fn tag(self, kind: TheoryKind) -> &'static str {
        match (self, kind) {
            (Basis::Nil, TheoryKind::K) => "T",
            (Basis::Nil, TheoryKind::H) => "A",
            (Basis::Group, _) => "group",
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct NilHeckeElement<T: Theory> {
    basis: Basis,
    terms: BTreeMap<AffineWeylElement, T::Coeff>,
    _theory: PhantomData<T>,
}

impl<T: Theory> fmt::Debug for NilHeckeElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NilHeckeElement")
            .field("basis", &self.basis.tag(T::KIND))
            .field("terms", &self.terms)
            .finish()
    }
}

impl<T: Theory> NilHeckeElement<T> {
    pub fn zero(basis: Basis) -> Self {
        NilHeckeElement {
            basis,
            terms: BTreeMap::new(),
            _theory: PhantomData,
        }
    }

    /// `c D_x` or `c x`.
    pub fn term(basis: Basis, x: AffineWeylElement, c: T::Coeff) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(x, c);
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<AffineWeylElement, T::Coeff> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: &AffineWeylElement) -> Option<&T::Coeff> {
        self.terms.get(x)
    }

    pub fn coeff_or_zero(&self, x: &AffineWeylElement) -> T::Coeff {
        self.terms.get(x).cloned().unwrap_or_else(T::Coeff::zero)
    }

    pub fn add_term(&mut self, x: AffineWeylElement, c: T::Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&x) {
            Some(e) => {
                *e = e.add_ref(&c);
                if e.is_zero() {
                    self.terms.remove(&x);
                }
            }
            None => {
                self.terms.insert(x, c);
            }
        }
    }

    fn check_basis(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            Err(Error::BasisMismatch(format!(
                "{} and {}",
                self.basis.tag(T::KIND),
                other.basis.tag(T::KIND)
            )))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), c.neg_ref());
        }
        Ok(out)
    }

    /// `q a`, multiplying every coefficient on the left.
    pub fn scale_left(&self, q: &T::Coeff) -> Self {
        let mut out = Self::zero(self.basis);
        for (x, c) in &self.terms {
            out.add_term(x.clone(), mul_coeff::<T>(q, c));
        }
        out
    }

    /// Largest length occurring in the support.
    pub fn max_length(&self, g: &AffineWeylGroup) -> usize {
        self.terms.keys().map(|x| g.length(x)).max().unwrap_or(0)
    }

    /// Keeps the terms with `length <= radius`.
    pub fn truncate(&self, g: &AffineWeylGroup, radius: usize) -> Self {
        let mut out = Self::zero(self.basis);
        for (x, c) in &self.terms {
            if g.length(x) <= radius {
                out.add_term(x.clone(), c.clone());
            }
        }
        out
    }

    pub fn to_document(&self, g: &AffineWeylGroup) -> NilHeckeDocument<T::Coeff> {
        let mut items: Vec<(Vec<usize>, &AffineWeylElement, &T::Coeff)> =
            self.terms.iter().map(|(x, c)| (g.word(x), x, c)).collect();
        items.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        NilHeckeDocument {
            theory: T::KIND,
            basis: self.basis.tag(T::KIND).to_string(),
            terms: items
                .into_iter()
                .map(|(_, x, c)| TermDocument {
                    element: g.to_document(x),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    pub fn from_document(g: &AffineWeylGroup, doc: &NilHeckeDocument<T::Coeff>) -> Result<Self> {
        if doc.theory != T::KIND {
            return Err(Error::Invalid(format!("expected theory {}, found {}", T::KIND, doc.theory)));
        }
        let basis = if doc.basis == Basis::Nil.tag(T::KIND) {
            Basis::Nil
        } else if doc.basis == "group" {
            Basis::Group
        } else {
            return Err(Error::Invalid(format!("unknown basis {:?}", doc.basis)));
        };
        let mut out = Self::zero(basis);
        for t in &doc.terms {
            out.add_term(g.from_document(&t.element)?, t.coeff.clone());
        }
        Ok(out)
    }

    /// Human-readable form such as `1 + (1 - e^[2]) T[s1]`.
    pub fn display(&self, g: &AffineWeylGroup) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let sym = match self.basis {
            Basis::Nil => self.basis.tag(T::KIND),
            Basis::Group => "",
        };
        let mut items: Vec<(Vec<usize>, &T::Coeff)> = self.terms.iter().map(|(x, c)| (g.word(x), c)).collect();
        items.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        items
            .into_iter()
            .map(|(w, c)| format!("({c}) {sym}[{}]", crate::affweyl::display_word(&w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn mul_coeff<T: Theory>(a: &T::Coeff, b: &T::Coeff) -> T::Coeff {
    a.mul_ref(b)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDocument<C> {
    pub element: ElementDocument,
    pub coeff: C,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NilHeckeDocument<C> {
    pub theory: TheoryKind,
    pub basis: String,
    pub terms: Vec<TermDocument<C>>,
}

/// A generator whose coproduct is known in closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `T_i` or `A_i`.
    Nil(usize),
    /// `y_i = 1 + T_i` (K-theory only).
    Y(usize),
    Group(AffineWeylElement),
}

/// A finite sum `sum c D_z (x) D_z'` in the nil basis, coefficients on the left.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor<T: Theory> {
    terms: BTreeMap<(AffineWeylElement, AffineWeylElement), T::Coeff>,
}

impl<T: Theory> fmt::Debug for Tensor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<T: Theory> Default for Tensor<T> {
    fn default() -> Self {
        Tensor { terms: BTreeMap::new() }
    }
}

impl<T: Theory> Tensor<T> {
    pub fn terms(&self) -> &BTreeMap<(AffineWeylElement, AffineWeylElement), T::Coeff> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: AffineWeylElement, b: AffineWeylElement, c: T::Coeff) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        let e = self.terms.entry(key.clone()).or_insert_with(T::Coeff::zero);
        *e = e.add_ref(&c);
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `q (a (x) b)` with both factors in the nil basis.
    pub fn add_product(&mut self, q: &T::Coeff, a: &NilHeckeElement<T>, b: &NilHeckeElement<T>) {
        for (x, p) in a.terms() {
            let qp = q.mul_ref(p);
            for (y, r) in b.terms() {
                self.add_term(x.clone(), y.clone(), qp.mul_ref(r));
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.neg_ref());
        }
        out
    }
}

/// Arithmetic in the nilHecke ring of an affine Weyl group, with memoized
/// expansions of group elements.
pub struct NilHecke<'g, T: Theory> {
    g: &'g AffineWeylGroup,
    expansions: HashMap<AffineWeylElement, NilHeckeElement<T>>,
    expansion_cap: Option<usize>,
}

impl<'g, T: Theory> NilHecke<'g, T> {
    pub fn new(g: &'g AffineWeylGroup) -> Self {
        NilHecke {
            g,
            expansions: HashMap::new(),
            expansion_cap: None,
        }
    }

    /// Drops terms of length above `cap` from expansions. Exact for
    /// coefficients of `T_v` with `length(v) <= cap`.
    pub fn with_expansion_cap(mut self, cap: usize) -> Self {
        self.expansion_cap = Some(cap);
        self
    }

    pub fn group(&self) -> &'g AffineWeylGroup {
        self.g
    }

    fn rank(&self) -> usize {
        self.g.rank()
    }

    pub fn one(&self, basis: Basis) -> NilHeckeElement<T> {
        NilHeckeElement::term(basis, self.g.identity(), T::Coeff::one(self.rank()))
    }

    pub fn scalar(&self, basis: Basis, q: T::Coeff) -> NilHeckeElement<T> {
        NilHeckeElement::term(basis, self.g.identity(), q)
    }

    /// `T_node` or `A_node`.
    pub fn generator(&self, node: usize) -> NilHeckeElement<T> {
        NilHeckeElement::term(Basis::Nil, self.g.simple(node), T::Coeff::one(self.rank()))
    }

    /// `D_x` with coefficient one.
    pub fn basis_element(&self, x: &AffineWeylElement) -> NilHeckeElement<T> {
        NilHeckeElement::term(Basis::Nil, x.clone(), T::Coeff::one(self.rank()))
    }

    pub fn group_element(&self, x: &AffineWeylElement) -> NilHeckeElement<T> {
        NilHeckeElement::term(Basis::Group, x.clone(), T::Coeff::one(self.rank()))
    }

    /// `D_node a` for `a` in the nil basis.
    pub fn left_mul_generator(&self, node: usize, a: &NilHeckeElement<T>) -> NilHeckeElement<T> {
        let mut out = NilHeckeElement::zero(Basis::Nil);
        for (z, q) in a.terms() {
            out.add_term(z.clone(), T::demazure(self.g, node, q));
            let sq = reflect::<T>(self.g, node, q);
            if self.g.is_left_descent(z, node) {
                if T::GENERATOR_SQUARE != 0 {
                    out.add_term(z.clone(), sq.scale(T::GENERATOR_SQUARE));
                }
            } else {
                out.add_term(self.g.mul_simple_left(node, z), sq);
            }
        }
        out
    }

    /// `D_x a` for `a` in the nil basis, along the reduced word of `x`.
    pub fn left_mul_basis(&self, x: &AffineWeylElement, a: &NilHeckeElement<T>) -> NilHeckeElement<T> {
        let mut out = a.clone();
        for &i in self.g.word(x).iter().rev() {
            out = self.left_mul_generator(i, &out);
        }
        out
    }

    pub fn mul(&self, a: &NilHeckeElement<T>, b: &NilHeckeElement<T>) -> Result<NilHeckeElement<T>> {
        a.check_basis(b)?;
        let mut out = NilHeckeElement::zero(a.basis);
        match a.basis {
            Basis::Nil => {
                for (x, p) in a.terms() {
                    let xb = self.left_mul_basis(x, b);
                    for (z, q) in xb.terms {
                        out.add_term(z, p.mul_ref(&q));
                    }
                }
            }
            Basis::Group => {
                for (x, p) in a.terms() {
                    for (y, q) in b.terms() {
                        let moved = level_zero_act::<T>(self.g, x, q);
                        out.add_term(self.g.mul(x, y), p.mul_ref(&moved));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product of `D_i` along a word (not necessarily reduced).
    pub fn word_product(&self, word: &[usize]) -> NilHeckeElement<T> {
        let mut out = self.one(Basis::Nil);
        for &i in word.iter().rev() {
            out = self.left_mul_generator(i, &out);
        }
        out
    }

    /// `s_node = 1 + c_node D_node`.
    pub fn reflection_expansion(&self, node: usize) -> NilHeckeElement<T> {
        let mut out = self.one(Basis::Nil);
        out.add_term(self.g.simple(node), node_factor::<T>(self.g, node));
        out
    }

    /// Expansion of a group element in the nil basis. The coefficient of `D_v`
    /// is the localization value of the Schubert class of `v` at `x`.
    pub fn expand(&mut self, x: &AffineWeylElement) -> NilHeckeElement<T> {
        if let Some(e) = self.expansions.get(x) {
            return e.clone();
        }
        // walk down to a memoized element, then back up
        let mut chain = Vec::new();
        let mut y = x.clone();
        while !self.expansions.contains_key(&y) && !self.g.is_identity(&y) {
            let i = self.g.nodes().find(|&i| self.g.is_left_descent(&y, i)).expect("nonidentity has a descent");
            chain.push((i, y.clone()));
            y = self.g.mul_simple_left(i, &y);
        }
        let mut current = match self.expansions.get(&y) {
            Some(e) => e.clone(),
            None => self.one(Basis::Nil),
        };
        while let Some((i, z)) = chain.pop() {
            // s_i E = E + c_i (D_i E)
            let di = self.left_mul_generator(i, &current);
            let c = node_factor::<T>(self.g, i);
            let mut next = current.clone();
            for (v, q) in di.terms {
                next.add_term(v, c.mul_ref(&q));
            }
            if let Some(cap) = self.expansion_cap {
                next = next.truncate(self.g, cap);
            }
            self.expansions.insert(z, next.clone());
            current = next;
        }
        current
    }

    /// Expansion along an arbitrary word of reflections.
    pub fn expand_word(&self, word: &[usize]) -> NilHeckeElement<T> {
        let mut out = self.one(Basis::Nil);
        for &i in word.iter().rev() {
            let di = self.left_mul_generator(i, &out);
            let c = node_factor::<T>(self.g, i);
            for (v, q) in di.terms {
                out.add_term(v, c.mul_ref(&q));
            }
        }
        out
    }

    /// Converts a group-basis element to the nil basis.
    pub fn to_nil(&mut self, a: &NilHeckeElement<T>) -> NilHeckeElement<T> {
        if a.basis == Basis::Nil {
            return a.clone();
        }
        let mut out = NilHeckeElement::zero(Basis::Nil);
        for (x, q) in a.terms() {
            let e = self.expand(x);
            for (v, p) in e.terms {
                out.add_term(v, q.mul_ref(&p));
            }
        }
        out
    }

    /// `y_w = prod (1 + T_i)` along a reduced word (K-theory only).
    pub fn y(&self, w: &AffineWeylElement) -> Result<NilHeckeElement<T>> {
        self.require_k("y_w")?;
        let mut out = self.one(Basis::Nil);
        for &i in self.g.word(w).iter().rev() {
            let ti = self.left_mul_generator(i, &out);
            out = out.add(&ti)?;
        }
        Ok(out)
    }

    /// `1 - e^{alpha_i} T_i` (K-theory only).
    pub fn y_tilde(&self, node: usize) -> Result<NilHeckeElement<T>> {
        self.require_k("y~_i")?;
        let mut out = self.one(Basis::Nil);
        out.add_term(self.g.simple(node), T::weight_class(self.g.node_root_weight(node)).neg_ref());
        Ok(out)
    }

    fn require_k(&self, what: &str) -> Result<()> {
        if T::KIND == TheoryKind::K {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("{what} is defined in K-theory only")))
        }
    }

    pub fn coproduct(&mut self, gen: &Generator) -> Result<Tensor<T>> {
        let one_c = T::Coeff::one(self.rank());
        let e = self.g.identity();
        let mut out = Tensor::default();
        match gen {
            Generator::Nil(i) => {
                let s = self.g.simple(*i);
                out.add_term(s.clone(), e.clone(), one_c.clone());
                out.add_term(e, s.clone(), one_c);
                out.add_term(s.clone(), s, node_factor::<T>(self.g, *i));
            }
            Generator::Y(i) => {
                self.require_k("y_i")?;
                let y = self.y(&self.g.simple(*i))?;
                let one = self.one(Basis::Nil);
                let ea = T::weight_class(self.g.node_root_weight(*i));
                out.add_product(&node_factor::<T>(self.g, *i), &y, &y);
                out.add_product(&ea, &y, &one);
                out.add_product(&ea, &one, &y);
                out.add_product(&ea.neg_ref(), &one, &one);
            }
            Generator::Group(w) => {
                let x = self.expand(w);
                out.add_product(&one_c, &x, &x);
            }
        }
        Ok(out)
    }

    /// Coproduct of an arbitrary nil-basis element, multiplied out along
    /// reduced words: `Delta(q D_x) = q Delta(D_i1) ... Delta(D_ik)`.
    pub fn coproduct_element(&mut self, a: &NilHeckeElement<T>) -> Result<Tensor<T>> {
        let a = self.to_nil(a);
        let mut out = Tensor::default();
        for (x, q) in a.terms() {
            let mut t = Tensor::default();
            t.add_term(self.g.identity(), self.g.identity(), q.clone());
            for i in self.g.word(x) {
                let d = self.coproduct(&Generator::Nil(i))?;
                t = self.tensor_mul(&t, &d)?;
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Product in the tensor square; coefficients meet through the left factor.
    pub fn tensor_mul(&self, a: &Tensor<T>, b: &Tensor<T>) -> Result<Tensor<T>> {
        let mut out = Tensor::default();
        for ((x1, x2), p) in a.terms() {
            for ((y1, y2), q) in b.terms() {
                // (p D_x1 (x) D_x2)(q D_y1 (x) D_y2) = p (D_x1 q D_y1) (x) (D_x2 D_y2)
                let left = self.left_mul_basis(x1, &NilHeckeElement::term(Basis::Nil, y1.clone(), q.clone()));
                let right = self.left_mul_basis(x2, &self.basis_element(y2));
                let mut part = Tensor::default();
                part.add_product(p, &left, &right);
                out = out.add(&part);
            }
        }
        Ok(out)
    }

    /// `D_{-theta} = c_theta^{-1} (s_theta - 1)` in the finite nil basis.
    pub fn minus_theta_generator(&mut self) -> Result<NilHeckeElement<T>> {
        let st = self.g.from_finite(self.g.s_theta());
        let e = self.expand(&st);
        let c = node_factor::<T>(self.g, 0);
        let mut out = NilHeckeElement::zero(Basis::Nil);
        for (v, q) in e.terms() {
            if !self.g.is_identity(v) {
                out.add_term(v.clone(), q.exact_div(&c)?);
            }
        }
        Ok(out)
    }

    /// The classical projection, which forgets translations. The result is
    /// supported on the finite Weyl group, in the basis of the input.
    pub fn classical_projection(&mut self, a: &NilHeckeElement<T>) -> Result<NilHeckeElement<T>> {
        match a.basis {
            Basis::Group => {
                let mut out = NilHeckeElement::zero(Basis::Group);
                for (x, q) in a.terms() {
                    out.add_term(self.g.finite_part(x), q.clone());
                }
                Ok(out)
            }
            Basis::Nil => {
                let d0 = self.minus_theta_generator()?;
                let mut out = NilHeckeElement::zero(Basis::Nil);
                for (x, q) in a.terms() {
                    let mut prod = self.scalar(Basis::Nil, q.clone());
                    for i in self.g.word(x) {
                        let factor = if i == 0 { d0.clone() } else { self.generator(i) };
                        prod = self.mul(&prod, &factor)?;
                    }
                    out = out.add(&prod)?;
                }
                Ok(out)
            }
        }
    }

    /// Commutator `a q - q a` with a scalar.
    pub fn commutator_with_scalar(&self, a: &NilHeckeElement<T>, q: &T::Coeff) -> Result<NilHeckeElement<T>> {
        let s = self.scalar(a.basis, q.clone());
        let aq = self.mul(a, &s)?;
        let qa = self.mul(&s, a)?;
        aq.sub(&qa)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Laurent, Poly};
    use crate::theory::{Cohomology, KTheory};

    fn a(n: usize) -> AffineWeylGroup {
        AffineWeylGroup::of_type("A", n).unwrap()
    }

    #[test]
    fn generator_squares() {
        let g = a(2);
        let k = NilHecke::<KTheory>::new(&g);
        let h = NilHecke::<Cohomology>::new(&g);
        for i in g.nodes() {
            let t = k.generator(i);
            assert_eq!(k.mul(&t, &t).unwrap(), t.scale_left(&Laurent::constant(2, -1)));
            let ai = h.generator(i);
            assert!(h.mul(&ai, &ai).unwrap().is_zero());
        }
    }

    #[test]
    fn t_times_weight() {
        let g = a(1);
        let k = NilHecke::<KTheory>::new(&g);
        let w = k.scalar(Basis::Nil, Laurent::monomial(&[1]));
        let got = k.mul(&k.generator(1), &w).unwrap();
        let mut expected = k.scalar(Basis::Nil, Laurent::monomial(&[-1]));
        expected.add_term(g.simple(1), Laurent::monomial(&[-1]));
        assert_eq!(got, expected);
    }

    #[test]
    fn reflection_expansions() {
        let g = a(1);
        let mut k = NilHecke::<KTheory>::new(&g);
        let e = k.expand(&g.simple(1));
        assert_eq!(e.coeff(&g.simple(1)), Some(&Laurent::one_minus(&[2])));
        assert_eq!(e.coeff(&g.identity()), Some(&Laurent::constant(1, 1)));
        let t = k.expand(&g.from_word(&[0, 1]).unwrap());
        assert_eq!(t.coeff(&g.simple(1)), Some(&Laurent::one_minus(&[-2])));
        let mut h = NilHecke::<Cohomology>::new(&g);
        let e = h.expand(&g.simple(1));
        assert_eq!(e.coeff(&g.simple(1)), Some(&Poly::linear(&[2]).scale(-1)));
    }

    #[test]
    fn y_on_a1() {
        let g = a(1);
        let k = NilHecke::<KTheory>::new(&g);
        let w = g.from_word(&[0, 1]).unwrap();
        let y = k.y(&w).unwrap();
        assert_eq!(y.len(), 4);
        assert!(y.terms().values().all(|c| *c == Laurent::constant(1, 1)));
        assert!(NilHecke::<Cohomology>::new(&g).y(&w).is_err());
    }

    #[test]
    fn minus_theta_generator_a1() {
        // D_{-theta} in A1 is the generator for the reflection s_1 with root -alpha_1
        let g = a(1);
        let mut k = NilHecke::<KTheory>::new(&g);
        let d = k.minus_theta_generator().unwrap();
        // (s - 1) / (1 - e^{-a}) with s = 1 + (1 - e^a) T_1 gives -e^{a} T_1
        let mut expected = NilHeckeElement::zero(Basis::Nil);
        expected.add_term(g.simple(1), Laurent::monomial(&[2]).scale(-1));
        assert_eq!(d, expected);
        let cl = k.classical_projection(&k.generator(0)).unwrap();
        assert_eq!(cl, expected);
    }

    #[test]
    fn delta_y_matches_delta_t() {
        let g = a(2);
        let mut k = NilHecke::<KTheory>::new(&g);
        for i in g.nodes() {
            let dy = k.coproduct(&Generator::Y(i)).unwrap();
            let mut via_t = k.coproduct(&Generator::Nil(i)).unwrap();
            via_t.add_term(g.identity(), g.identity(), Laurent::constant(2, 1));
            assert_eq!(dy, via_t);
        }
    }

    #[test]
    fn document_roundtrip() {
        let g = a(2);
        let mut k = NilHecke::<KTheory>::new(&g);
        let e = k.expand(&g.from_word(&[0, 1, 2]).unwrap());
        let doc = e.to_document(&g);
        let text = serde_json::to_string(&doc).unwrap();
        let back: NilHeckeDocument<Laurent> = serde_json::from_str(&text).unwrap();
        assert_eq!(NilHeckeElement::<KTheory>::from_document(&g, &back).unwrap(), e);
    }
}
