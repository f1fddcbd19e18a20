//! The two left actions of the nilHecke ring on classes.
//!
//! * dot: `(q . psi)(b) = q psi(b)`, `(w . psi)(b) = w psi(w^{-1} b)`,
//!   `(D_i . psi)(b) = (s_i psi(s_i b) - psi(b)) / c_i`;
//! * bullet: `(a * psi)(b) = psi(b a)`, so `q` multiplies by the value of
//!   `q` at `b` and `(D_i * psi)(b) = (psi(b s_i) - psi(b)) / c(b alpha_i)`.

use std::collections::HashMap;

use crate::affweyl::AffineWeylElement;
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::nilhecke::{Basis, NilHeckeElement, Tensor};
use crate::theory::{level_zero_act, node_factor, reflect, Theory};

use super::{LocalizedClass, Localization};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Dot,
    Bullet,
}

impl<'g, T: Theory> Localization<'g, T> {
    fn shrink(&self, psi: &LocalizedClass<T>, by: usize) -> Result<usize> {
        psi.radius.checked_sub(by).ok_or(Error::InsufficientRadius {
            needed: by,
            available: psi.radius,
        })
    }

    /// `D_node` acting on a class.
    pub fn act_generator(&self, side: Side, node: usize, psi: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let r = self.shrink(psi, 1)?;
        let g = self.group();
        match side {
            Side::Dot => {
                let c = node_factor::<T>(g, node);
                self.class_from(r, |b| {
                    let moved = reflect::<T>(g, node, psi.get(&g.mul_simple_left(node, b))?);
                    moved.sub_ref(psi.get(b)?).exact_div(&c)
                })
            }
            Side::Bullet => self.class_from(r, |b| {
                let root = g.finite().act_weight(b.fin, g.node_root_weight(node));
                psi.get(&g.mul_simple_right(b, node))?
                    .sub_ref(psi.get(b)?)
                    .exact_div(&T::root_factor(&root))
            }),
        }
    }

    /// A group element acting on a class.
    pub fn act_group(&self, side: Side, w: &AffineWeylElement, psi: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let g = self.group();
        let r = self.shrink(psi, self.length(w))?;
        match side {
            Side::Dot => {
                let winv = g.inverse(w);
                self.class_from(r, |b| Ok(level_zero_act::<T>(g, w, psi.get(&g.mul(&winv, b))?)))
            }
            Side::Bullet => self.class_from(r, |b| psi.get(&g.mul(b, w)).cloned()),
        }
    }

    /// A coefficient acting on a class.
    pub fn act_scalar(&self, side: Side, q: &T::Coeff, psi: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        match side {
            Side::Dot => self.scale(q, psi),
            Side::Bullet => {
                let g = self.group();
                self.class_from(psi.radius, |b| Ok(level_zero_act::<T>(g, b, q).mul_ref(psi.get(b)?)))
            }
        }
    }

    /// `D_x` acting on a class, letters applied right to left.
    pub fn act_basis(&self, side: Side, x: &AffineWeylElement, psi: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let mut out = psi.clone();
        for &i in self.group().word(x).iter().rev() {
            out = self.act_generator(side, i, &out)?;
        }
        Ok(out)
    }

    /// A nilHecke element in either basis acting on a class.
    pub fn act(&self, side: Side, a: &NilHeckeElement<T>, psi: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let reach = a.terms().keys().map(|x| self.length(x)).max().unwrap_or(0);
        let r = self.shrink(psi, reach)?;
        let mut acc: HashMap<AffineWeylElement, T::Coeff> = HashMap::new();
        // shared suffixes: D_x psi computed once per x, from D_{s_i x} psi
        let mut cache: HashMap<AffineWeylElement, LocalizedClass<T>> = HashMap::new();
        for (x, q) in a.terms() {
            let image = match a.basis() {
                Basis::Group => self.act_group(side, x, psi)?,
                Basis::Nil => self.act_basis_cached(side, x, psi, &mut cache)?,
            };
            let scaled = self.act_scalar(side, q, &image)?;
            for y in self.ball(r)? {
                let v = scaled.get(y)?;
                let e = acc.entry(y.clone()).or_insert_with(T::Coeff::zero);
                *e = e.add_ref(v);
            }
        }
        self.class_from(r, |y| Ok(acc.get(y).cloned().unwrap_or_else(T::Coeff::zero)))
    }

    fn act_basis_cached(
        &self,
        side: Side,
        x: &AffineWeylElement,
        psi: &LocalizedClass<T>,
        cache: &mut HashMap<AffineWeylElement, LocalizedClass<T>>,
    ) -> Result<LocalizedClass<T>> {
        if let Some(c) = cache.get(x) {
            return Ok(c.clone());
        }
        let g = self.group();
        let out = if g.is_identity(x) {
            psi.clone()
        } else {
            // D_x = D_i D_{s_i x} with i the first letter
            let i = g.word(x)[0];
            let rest = g.mul_simple_left(i, x);
            let inner = self.act_basis_cached(side, &rest, psi, cache)?;
            self.act_generator(side, i, &inner)?
        };
        cache.insert(x.clone(), out.clone());
        Ok(out)
    }

    /// `sum c (D_z . psi1) cup (D_z' . psi2)` for a tensor `sum c D_z (x) D_z'`,
    /// with the coefficient acting on the first factor.
    pub fn act_tensor(
        &self,
        side: Side,
        t: &Tensor<T>,
        psi1: &LocalizedClass<T>,
        psi2: &LocalizedClass<T>,
    ) -> Result<LocalizedClass<T>> {
        let reach = t
            .terms()
            .keys()
            .map(|(a, b)| self.length(a).max(self.length(b)))
            .max()
            .unwrap_or(0);
        let r = psi1.radius.min(psi2.radius).checked_sub(reach).ok_or(Error::InsufficientRadius {
            needed: reach,
            available: psi1.radius.min(psi2.radius),
        })?;
        let mut c1 = HashMap::new();
        let mut c2 = HashMap::new();
        let mut total = self.constant(&T::Coeff::zero(), r)?;
        for ((a, b), q) in t.terms() {
            let left = self.act_basis_cached(side, a, psi1, &mut c1)?;
            let left = self.act_scalar(side, q, &left)?;
            let right = self.act_basis_cached(side, b, psi2, &mut c2)?;
            let prod = self.cup(&left, &right)?.restrict(self, r)?;
            total = self.add(&total, &prod)?;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affweyl::AffineWeylGroup;
    use crate::nilhecke::NilHecke;
    use crate::theory::{Cohomology, KTheory};

    #[test]
    fn bullet_generators_on_schubert_classes() {
        let g = AffineWeylGroup::of_type("A", 2).unwrap();
        let loc = Localization::<KTheory>::new(&g, 5).unwrap();
        let nh = NilHecke::<KTheory>::new(&g);
        for w in loc.ball(3).unwrap() {
            let psi = loc.schubert(w, 5).unwrap();
            for i in g.nodes() {
                let yi = nh.one(Basis::Nil).add(&nh.generator(i)).unwrap();
                let got = loc.act(Side::Bullet, &yi, &psi).unwrap();
                let target = if g.is_right_descent(w, i) { g.mul_simple_right(w, i) } else { w.clone() };
                assert_eq!(got, loc.schubert(&target, 4).unwrap(), "w={} i={i}", g.display(w));
            }
        }
    }

    // The left action picks up a sign: (A_i . xi^{s_i})(e) = s_i(c) / c = -1,
    // the graded form of the `- e^{alpha_i} T_i` in the K-theoretic operator.
    #[test]
    fn dot_generators_in_cohomology() {
        let g = AffineWeylGroup::of_type("A", 2).unwrap();
        let loc = Localization::<Cohomology>::new(&g, 5).unwrap();
        for w in loc.ball(3).unwrap() {
            let xi = loc.schubert(w, 5).unwrap();
            for i in g.nodes() {
                let got = loc.act_generator(Side::Dot, i, &xi).unwrap();
                let expected = if g.is_left_descent(w, i) {
                    let x = loc.schubert(&g.mul_simple_left(i, w), 4).unwrap();
                    loc.scale(&crate::coeff::Poly::constant(2, -1), &x).unwrap()
                } else {
                    loc.constant(&crate::coeff::Poly::zero(), 4).unwrap()
                };
                assert_eq!(got, expected, "w={} i={i}", g.display(w));
            }
        }
    }
}
