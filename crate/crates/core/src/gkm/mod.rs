//! Truncated localization models.
//!
//! A class is a function on the affine Weyl group, stored on the ball of
//! elements of length at most its radius. Values outside the radius are never
//! read as zero: every read outside the stored ball is an error.
//!
//! [`Localization`] owns the Schubert table: the expansion of every element of
//! a ball in the nil basis, whose coefficient of `D_v` at `x` is `psi^v(x)`.

mod actions;
mod coproduct;
mod grassmannian;
mod recursion;
pub mod suite;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::affweyl::{AffineWeylElement, AffineWeylGroup, ElementDocument};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::nilhecke::{NilHecke, NilHeckeElement};
use crate::theory::{level_zero_act, Theory, TheoryKind};

pub use actions::Side;
pub use coproduct::{Report, Variant};
pub use grassmannian::GrassmannianExpansion;
pub use recursion::RecursionReport;

#[derive(Clone, PartialEq, Eq)]
pub struct LocalizedClass<T: Theory> {
    radius: usize,
    values: HashMap<AffineWeylElement, T::Coeff>,
}

impl<T: Theory> std::fmt::Debug for LocalizedClass<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LocalizedClass")
            .field("radius", &self.radius)
            .field("points", &self.values.len())
            .finish()
    }
}

pub(crate) fn point_label(x: &AffineWeylElement) -> String {
    format!("(mu={:?}, v={})", x.mu.as_slice(), x.fin.0)
}

impl<T: Theory> LocalizedClass<T> {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn get(&self, x: &AffineWeylElement) -> Result<&T::Coeff> {
        self.values.get(x).ok_or_else(|| Error::OutsideRadius {
            point: point_label(x),
            radius: self.radius,
        })
    }

    pub fn values(&self) -> &HashMap<AffineWeylElement, T::Coeff> {
        &self.values
    }

    /// Restriction to a smaller radius.
    pub fn restrict(&self, loc: &Localization<'_, T>, radius: usize) -> Result<Self> {
        if radius > self.radius {
            return Err(Error::InsufficientRadius {
                needed: radius,
                available: self.radius,
            });
        }
        let mut values = HashMap::new();
        for x in loc.ball(radius)? {
            values.insert(x.clone(), self.get(x)?.clone());
        }
        Ok(LocalizedClass { radius, values })
    }

    /// First point of the common ball where the two classes differ.
    pub fn first_difference(&self, other: &Self, loc: &Localization<'_, T>) -> Result<Option<AffineWeylElement>> {
        let r = self.radius.min(other.radius);
        for x in loc.ball(r)? {
            if self.get(x)? != other.get(x)? {
                return Ok(Some(x.clone()));
            }
        }
        Ok(None)
    }

    pub fn agrees_with(&self, other: &Self, loc: &Localization<'_, T>) -> Result<bool> {
        Ok(self.first_difference(other, loc)?.is_none())
    }

    pub fn to_document(&self, loc: &Localization<'_, T>) -> Result<ClassDocument<T::Coeff>> {
        let mut values = Vec::new();
        for x in loc.ball(self.radius)? {
            values.push(ValueDocument {
                element: loc.group().to_document(x),
                coeff: self.get(x)?.clone(),
            });
        }
        Ok(ClassDocument {
            theory: T::KIND,
            radius: self.radius,
            values,
        })
    }

    pub fn from_document(loc: &Localization<'_, T>, doc: &ClassDocument<T::Coeff>) -> Result<Self> {
        if doc.theory != T::KIND {
            return Err(Error::Invalid(format!("expected theory {}, found {}", T::KIND, doc.theory)));
        }
        let mut values = HashMap::new();
        for v in &doc.values {
            values.insert(loc.group().from_document(&v.element)?, v.coeff.clone());
        }
        for x in loc.ball(doc.radius)? {
            if !values.contains_key(x) {
                return Err(Error::Invalid(format!("missing value at {}", loc.group().display(x))));
            }
        }
        Ok(LocalizedClass {
            radius: doc.radius,
            values,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValueDocument<C> {
    pub element: ElementDocument,
    pub coeff: C,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassDocument<C> {
    pub theory: TheoryKind,
    pub radius: usize,
    pub values: Vec<ValueDocument<C>>,
}

/// The Schubert table on a ball, and the classes and operators built from it.
pub struct Localization<'g, T: Theory> {
    g: &'g AffineWeylGroup,
    radius: usize,
    ball: Vec<AffineWeylElement>,
    /// `ends[L]` is the number of ball elements of length at most `L`.
    ends: Vec<usize>,
    lengths: HashMap<AffineWeylElement, usize>,
    expansions: HashMap<AffineWeylElement, NilHeckeElement<T>>,
    finite: Vec<AffineWeylElement>,
    longest_finite: usize,
}

impl<'g, T: Theory> Localization<'g, T> {
    /// Expands every element of length at most `radius`.
    pub fn new(g: &'g AffineWeylGroup, radius: usize) -> Result<Self> {
        let ball = g.ball(radius)?;
        let mut lengths = HashMap::with_capacity(ball.len());
        let mut ends = vec![0usize; radius + 1];
        for x in &ball {
            let l = g.length(x);
            lengths.insert(x.clone(), l);
            ends[l] += 1;
        }
        for l in 1..=radius {
            ends[l] += ends[l - 1];
        }
        let mut nh = NilHecke::<T>::new(g);
        let mut expansions = HashMap::with_capacity(ball.len());
        for x in &ball {
            expansions.insert(x.clone(), nh.expand(x));
        }
        let mut finite: Vec<AffineWeylElement> = g.finite().elements().map(|v| g.from_finite(v)).collect();
        finite = g.sort_canonical(finite);
        let longest_finite = g.finite().length(g.finite().longest());
        Ok(Localization {
            g,
            radius,
            ball,
            ends,
            lengths,
            expansions,
            finite,
            longest_finite,
        })
    }

    pub fn group(&self) -> &'g AffineWeylGroup {
        self.g
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn rank(&self) -> usize {
        self.g.rank()
    }

    /// Length of the longest element of the finite Weyl group.
    pub fn longest_finite_length(&self) -> usize {
        self.longest_finite
    }

    pub fn finite_elements(&self) -> &[AffineWeylElement] {
        &self.finite
    }

    /// Elements of length at most `r`, sorted by length then reduced word.
    pub fn ball(&self, r: usize) -> Result<&[AffineWeylElement]> {
        if r > self.radius {
            return Err(Error::InsufficientRadius {
                needed: r,
                available: self.radius,
            });
        }
        Ok(&self.ball[..self.ends[r]])
    }

    pub fn length(&self, x: &AffineWeylElement) -> usize {
        match self.lengths.get(x) {
            Some(&l) => l,
            None => self.g.length(x),
        }
    }

    pub fn expansion(&self, x: &AffineWeylElement) -> Result<&NilHeckeElement<T>> {
        self.expansions.get(x).ok_or_else(|| Error::OutsideRadius {
            point: point_label(x),
            radius: self.radius,
        })
    }

    /// `psi^v(x)`.
    pub fn value(&self, v: &AffineWeylElement, x: &AffineWeylElement) -> Result<T::Coeff> {
        Ok(self.expansion(x)?.coeff_or_zero(v))
    }

    /// Values of `psi^v`, as `(x, psi^v(x))` for every `x` in the table with
    /// a nonzero value.
    pub fn schubert_table_column(&self, v: &AffineWeylElement) -> Vec<(AffineWeylElement, T::Coeff)> {
        self.ball
            .iter()
            .filter_map(|x| self.expansions[x].coeff(v).map(|c| (x.clone(), c.clone())))
            .collect()
    }

    fn build(&self, r: usize, f: impl Fn(&AffineWeylElement) -> Result<T::Coeff>) -> Result<LocalizedClass<T>> {
        let mut values = HashMap::with_capacity(self.ends[r.min(self.radius)]);
        for x in self.ball(r)? {
            values.insert(x.clone(), f(x)?);
        }
        Ok(LocalizedClass { radius: r, values })
    }

    /// Builds a class from a pointwise rule.
    pub fn class_from(&self, r: usize, f: impl Fn(&AffineWeylElement) -> Result<T::Coeff>) -> Result<LocalizedClass<T>> {
        self.build(r, f)
    }

    /// The Schubert class `psi^v` (K) or `xi^v` (H) on the ball of radius `r`.
    pub fn schubert(&self, v: &AffineWeylElement, r: usize) -> Result<LocalizedClass<T>> {
        self.build(r, |x| self.value(v, x))
    }

    /// The ideal-sheaf class, dual to `y_w = sum_{v <= w} T_v`:
    /// `sum_{x >= v} (-1)^{l(x) - l(v)} psi^x`. Each value is a finite sum
    /// because `psi^x(z) = 0` unless `x <= z`.
    pub fn ideal_sheaf(&self, v: &AffineWeylElement, r: usize) -> Result<LocalizedClass<T>> {
        if T::KIND != TheoryKind::K {
            return Err(Error::Unsupported("ideal-sheaf classes are defined in K-theory".into()));
        }
        let lv = self.length(v);
        self.build(r, |z| {
            let mut out = T::Coeff::zero();
            for (x, c) in self.expansion(z)?.terms() {
                if self.g.bruhat_leq(v, x) {
                    let lx = self.length(x);
                    let term = if (lx - lv).is_multiple_of(2) { c.clone() } else { c.neg_ref() };
                    out = out.add_ref(&term);
                }
            }
            Ok(out)
        })
    }

    /// `[L_lambda]` (K) or `c_1(L_lambda)` (H): the value at `t_mu v` is the
    /// weight class of `v lambda`.
    pub fn line_bundle(&self, lambda: &[i32], r: usize) -> Result<LocalizedClass<T>> {
        if lambda.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: lambda.len(),
            });
        }
        let q = T::weight_class(lambda);
        self.build(r, |x| Ok(level_zero_act::<T>(self.g, x, &q)))
    }

    /// The class with value `q(v)` at `t_mu v`, for a coefficient `q`: the
    /// image of the scalar `q` under the bullet action on the unit class.
    pub fn coefficient_class(&self, q: &T::Coeff, r: usize) -> Result<LocalizedClass<T>> {
        self.build(r, |x| Ok(level_zero_act::<T>(self.g, x, q)))
    }

    pub fn constant(&self, q: &T::Coeff, r: usize) -> Result<LocalizedClass<T>> {
        self.build(r, |_| Ok(q.clone()))
    }

    pub fn cup(&self, a: &LocalizedClass<T>, b: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let r = a.radius.min(b.radius);
        self.build(r, |x| Ok(a.get(x)?.mul_ref(b.get(x)?)))
    }

    pub fn add(&self, a: &LocalizedClass<T>, b: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let r = a.radius.min(b.radius);
        self.build(r, |x| Ok(a.get(x)?.add_ref(b.get(x)?)))
    }

    pub fn sub(&self, a: &LocalizedClass<T>, b: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let r = a.radius.min(b.radius);
        self.build(r, |x| Ok(a.get(x)?.sub_ref(b.get(x)?)))
    }

    pub fn scale(&self, q: &T::Coeff, a: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        self.build(a.radius, |x| Ok(q.mul_ref(a.get(x)?)))
    }

    /// `(theta psi)(t_mu v) = psi(t_mu)`. The output radius drops by the
    /// length of the longest finite element.
    pub fn theta(&self, psi: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let r = psi.radius.checked_sub(self.longest_finite).ok_or(Error::InsufficientRadius {
            needed: self.longest_finite,
            available: psi.radius,
        })?;
        self.build(r, |x| psi.get(&self.g.translation_part(x)).cloned())
    }

    /// `(eta psi)(t_mu v) = psi(v)`.
    pub fn eta(&self, psi: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        if psi.radius < self.longest_finite {
            return Err(Error::InsufficientRadius {
                needed: self.longest_finite,
                available: psi.radius,
            });
        }
        self.build(psi.radius, |x| psi.get(&self.g.finite_part(x)).cloned())
    }

    /// `(kappa psi)(x) = psi(e)`.
    pub fn kappa(&self, psi: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let e = self.g.identity();
        self.build(psi.radius, |_| psi.get(&e).cloned())
    }

    /// Checks the small-torus GKM condition on every edge `x -- x s_i` inside
    /// the radius: `psi(x s_i) - psi(x)` is divisible by the factor of
    /// `x alpha_i`. Returns the first failing point.
    pub fn gkm_violation(&self, psi: &LocalizedClass<T>) -> Result<Option<AffineWeylElement>> {
        for x in self.ball(psi.radius)? {
            for i in self.g.nodes() {
                let y = self.g.mul_simple_right(x, i);
                if self.length(&y) > psi.radius {
                    continue;
                }
                let diff = psi.get(&y)?.sub_ref(psi.get(x)?);
                let root = self.g.finite().act_weight(x.fin, self.g.node_root_weight(i));
                if diff.exact_div(&T::root_factor(&root)).is_err() {
                    return Ok(Some(x.clone()));
                }
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Laurent, Poly};
    use crate::theory::{Cohomology, KTheory};

    #[test]
    fn schubert_table_examples() {
        let g = AffineWeylGroup::of_type("A", 1).unwrap();
        let loc = Localization::<KTheory>::new(&g, 4).unwrap();
        let s1 = g.simple(1);
        assert_eq!(loc.value(&s1, &s1).unwrap(), Laurent::one_minus(&[2]));
        for x in loc.ball(4).unwrap() {
            assert_eq!(loc.value(&g.identity(), x).unwrap(), Laurent::constant(1, 1));
        }
        let h = Localization::<Cohomology>::new(&g, 2).unwrap();
        assert_eq!(h.value(&s1, &s1).unwrap(), Poly::linear(&[2]).scale(-1));
    }

    #[test]
    fn reading_outside_radius_is_an_error() {
        let g = AffineWeylGroup::of_type("A", 1).unwrap();
        let loc = Localization::<KTheory>::new(&g, 3).unwrap();
        let psi = loc.schubert(&g.simple(0), 2).unwrap();
        let far = g.from_word(&[0, 1, 0]).unwrap();
        assert!(matches!(psi.get(&far), Err(Error::OutsideRadius { .. })));
        assert!(loc.schubert(&g.simple(0), 4).is_err());
    }

    #[test]
    fn line_bundles() {
        let g = AffineWeylGroup::of_type("A", 1).unwrap();
        let loc = Localization::<KTheory>::new(&g, 3).unwrap();
        let l = loc.line_bundle(&[1], 3).unwrap();
        let x = g.mul(&g.translation(&[1]), &g.simple(1));
        assert_eq!(l.get(&x).unwrap(), &Laurent::monomial(&[-1]));
        let l0 = loc.line_bundle(&[0], 3).unwrap();
        assert!(l0.values().values().all(|c| *c == Laurent::constant(1, 1)));
        let sum = loc.cup(&l, &loc.line_bundle(&[2], 3).unwrap()).unwrap();
        assert_eq!(sum, loc.line_bundle(&[3], 3).unwrap());
    }

    #[test]
    fn schubert_classes_are_gkm() {
        let g = AffineWeylGroup::of_type("A", 2).unwrap();
        let loc = Localization::<KTheory>::new(&g, 5).unwrap();
        for v in loc.ball(3).unwrap() {
            let psi = loc.schubert(v, 5).unwrap();
            assert_eq!(loc.gkm_violation(&psi).unwrap(), None);
        }
    }
}
