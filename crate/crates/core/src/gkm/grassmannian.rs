//! Expansion of coset-invariant classes in the Grassmannian Schubert basis,
//! and assembly of Peterson elements from those expansions.
//!
//! A class `zeta` with `zeta(t_mu v)` independent of `v` is determined by its
//! values on cosets. Grassmannian Schubert classes `psi^u` (`u` minimal in its
//! coset) are coset-invariant too, and `psi^{u'}(u) = 0` unless `u' <= u`, so
//! the coefficients come out of a triangular solve in Bruhat order.

use std::collections::HashMap;

use crate::affweyl::AffineWeylElement;
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::nilhecke::{Basis, NilHeckeElement};
use crate::theory::Theory;

use super::{point_label, LocalizedClass, Localization};

/// Coefficients `c_u` of a class in the basis `{psi^u : u Grassmannian}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannianExpansion<T: Theory> {
    /// Every determined coefficient, zeros included, in ball order.
    pub determined: Vec<(AffineWeylElement, T::Coeff)>,
    /// Grassmannian elements whose coefficient the data does not reach.
    pub undetermined: Vec<AffineWeylElement>,
}

impl<T: Theory> GrassmannianExpansion<T> {
    pub fn coefficient(&self, u: &AffineWeylElement) -> Result<T::Coeff> {
        match self.determined.iter().find(|(v, _)| v == u) {
            Some((_, c)) => Ok(c.clone()),
            None => Err(Error::Invalid(format!("coefficient of {} is not determined", point_label(u)))),
        }
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &(AffineWeylElement, T::Coeff)> {
        self.determined.iter().filter(|(_, c)| !c.is_zero())
    }
}

impl<'g, T: Theory> Localization<'g, T> {
    /// Grassmannian elements of the table, in ball order.
    pub fn grassmannian_elements(&self, r: usize) -> Result<Vec<&AffineWeylElement>> {
        let g = self.group();
        Ok(self.ball(r)?.iter().filter(|x| g.is_grassmannian(x)).collect())
    }

    /// Triangular solve from coset values. `at(u)` returns the value of the
    /// class on the coset of `u`, or `None` if it is not available.
    fn triangular<F>(&self, r: usize, mut at: F) -> Result<GrassmannianExpansion<T>>
    where
        F: FnMut(&AffineWeylElement) -> Result<Option<T::Coeff>>,
    {
        let g = self.group();
        let mut solved: Vec<(AffineWeylElement, T::Coeff)> = Vec::new();
        let mut missing: Vec<AffineWeylElement> = Vec::new();
        for u in self.grassmannian_elements(r)? {
            let blocked = missing.iter().any(|m| g.bruhat_lt(m, u));
            let value = if blocked { None } else { at(u)? };
            let Some(value) = value else {
                missing.push(u.clone());
                continue;
            };
            // Grassmannian classes are coset-invariant: evaluate at u itself.
            let mut rest = value;
            for (v, c) in &solved {
                if !c.is_zero() && g.bruhat_lt(v, u) {
                    rest = rest.sub_ref(&c.mul_ref(&self.value(v, u)?));
                }
            }
            let c = rest.exact_div(&self.value(u, u)?)?;
            solved.push((u.clone(), c));
        }
        Ok(GrassmannianExpansion {
            determined: solved,
            undetermined: missing,
        })
    }

    /// Expands a coset-invariant class. Fails with `Invalid` if the class is
    /// not coset-invariant and with `InexactDivision` or `Invalid` if it is
    /// not in the span of the Grassmannian Schubert classes.
    pub fn expand_grassmannian(&self, zeta: &LocalizedClass<T>) -> Result<GrassmannianExpansion<T>> {
        let g = self.group();
        let r = zeta.radius.min(self.radius());
        let mut by_coset: HashMap<&[i32], &T::Coeff> = HashMap::new();
        for x in self.ball(r)? {
            let v = zeta.get(x)?;
            match by_coset.get(x.mu.as_slice()) {
                Some(&w) if w != v => {
                    return Err(Error::Invalid(format!(
                        "class is not constant on the coset of {}",
                        point_label(x)
                    )))
                }
                Some(_) => {}
                None => {
                    by_coset.insert(x.mu.as_slice(), v);
                }
            }
        }
        let out = self.triangular(r, |u| Ok(Some(zeta.get(u)?.clone())))?;
        // residual check on every point of the ball
        for x in self.ball(r)? {
            let mut sum = T::Coeff::zero();
            for (u, c) in out.nonzero() {
                if g.bruhat_leq(u, x) {
                    sum = sum.add_ref(&c.mul_ref(&self.value(u, x)?));
                }
            }
            if &sum != zeta.get(x)? {
                return Err(Error::Invalid(format!(
                    "class is not in the Grassmannian Schubert span at {}",
                    point_label(x)
                )));
            }
        }
        Ok(out)
    }

    /// Coefficients of `theta(psi^z)` in the Grassmannian basis, for
    /// Grassmannian `u` of length at most `r`. The coefficient at `u` uses
    /// `psi^z(t_{u'})` for every Grassmannian `u' <= u`, so it is determined
    /// when those translations lie in the table.
    pub fn stanley_coefficients(&self, z: &AffineWeylElement, r: usize) -> Result<GrassmannianExpansion<T>> {
        let g = self.group();
        self.triangular(r, |u| {
            let t = g.translation_part(u);
            if self.length(&t) > self.radius() {
                Ok(None)
            } else {
                self.value(z, &t).map(Some)
            }
        })
    }

    /// Smallest truncation length at which the Peterson element of `u` is
    /// complete: its support lies in the union of the intervals `[e, t_{u'}]`
    /// over Grassmannian `u' <= u`.
    pub fn peterson_support_radius(&self, u: &AffineWeylElement) -> Result<usize> {
        let g = self.group();
        if !g.is_grassmannian(u) {
            return Err(Error::Invalid(format!("{} is not Grassmannian", g.display(u))));
        }
        let lu = self.length(u);
        let mut best = 0;
        for v in self.grassmannian_elements(lu.min(self.radius()))? {
            if g.bruhat_leq(v, u) {
                best = best.max(self.length(&g.translation_part(v)));
            }
        }
        Ok(best)
    }

    /// `sum_{l(z) <= r} k^z_u T_z` (or `A_z`), the truncation of the Peterson
    /// element indexed by the Grassmannian element `u`.
    pub fn peterson_assemble(&self, u: &AffineWeylElement, r: usize) -> Result<NilHeckeElement<T>> {
        let g = self.group();
        if !g.is_grassmannian(u) {
            return Err(Error::Invalid(format!("{} is not Grassmannian", g.display(u))));
        }
        let lu = self.length(u);
        if lu > self.radius() {
            return Err(Error::InsufficientRadius {
                needed: lu,
                available: self.radius(),
            });
        }
        let mut out = NilHeckeElement::zero(Basis::Nil);
        for z in self.ball(r)? {
            let exp = self.stanley_coefficients(z, lu)?;
            if exp.undetermined.iter().any(|m| m == u) {
                let needed = self.peterson_support_radius(u)?;
                return Err(Error::InsufficientRadius {
                    needed,
                    available: self.radius(),
                });
            }
            let c = exp.coefficient(u)?;
            if !c.is_zero() {
                out.add_term(z.clone(), c);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affweyl::AffineWeylGroup;
    use crate::coeff::{Laurent, Poly};
    use crate::theory::{Cohomology, KTheory};

    #[test]
    fn grassmannian_classes_expand_to_themselves() {
        let g = AffineWeylGroup::of_type("A", 2).unwrap();
        let loc = Localization::<KTheory>::new(&g, 5).unwrap();
        for u in loc.grassmannian_elements(5).unwrap() {
            let e = loc.expand_grassmannian(&loc.schubert(u, 5).unwrap()).unwrap();
            let nz: Vec<_> = e.nonzero().cloned().collect();
            assert_eq!(nz, vec![(u.clone(), Laurent::one(2))]);
        }
    }

    #[test]
    fn affine_a1_reflection_classes() {
        let g = AffineWeylGroup::of_type("A", 1).unwrap();
        let s0 = g.simple(0);
        let s1 = g.simple(1);
        let h = Localization::<Cohomology>::new(&g, 5).unwrap();
        let f = h.theta(&h.schubert(&s1, 5).unwrap()).unwrap();
        let nz: Vec<_> = h.expand_grassmannian(&f).unwrap().nonzero().cloned().collect();
        assert_eq!(nz, vec![(s0.clone(), Poly::one(1))]);
        let k = Localization::<KTheory>::new(&g, 5).unwrap();
        let gk = k.theta(&k.schubert(&s1, 5).unwrap()).unwrap();
        let nz: Vec<_> = k.expand_grassmannian(&gk).unwrap().nonzero().cloned().collect();
        assert_eq!(nz, vec![(s0, Laurent::one(1))]);
    }

    #[test]
    fn non_invariant_class_is_rejected() {
        let g = AffineWeylGroup::of_type("A", 1).unwrap();
        let h = Localization::<Cohomology>::new(&g, 3).unwrap();
        assert!(h.expand_grassmannian(&h.schubert(&g.simple(1), 3).unwrap()).is_err());
    }

    #[test]
    fn grassmannian_values_are_coset_invariant() {
        let g = AffineWeylGroup::of_type("A", 2).unwrap();
        let loc = Localization::<KTheory>::new(&g, 6).unwrap();
        for u in loc.grassmannian_elements(3).unwrap() {
            for x in loc.ball(6).unwrap() {
                let t = g.translation_part(x);
                if loc.length(&t) <= 6 {
                    assert_eq!(loc.value(u, x).unwrap(), loc.value(u, &t).unwrap());
                }
            }
        }
    }

    #[test]
    fn peterson_normalization_row() {
        let g = AffineWeylGroup::of_type("A", 1).unwrap();
        let loc = Localization::<KTheory>::new(&g, 6).unwrap();
        for u in loc.grassmannian_elements(2).unwrap() {
            let r = loc.peterson_support_radius(u).unwrap();
            let k = loc.peterson_assemble(u, r).unwrap();
            for v in loc.grassmannian_elements(r).unwrap() {
                let expected = if v == u { Laurent::one(1) } else { Laurent::zero() };
                assert_eq!(k.coeff_or_zero(v), expected);
            }
        }
    }
}
