//! Pointwise checks of the operator identities on Schubert classes: the
//! endomorphism relations, the commutation rules of `theta`, `eta`, `kappa`
//! with both actions, the actions of the generators on Schubert classes, the
//! bullet action on Grassmannian classes, the cup-product rule for
//! coproducts, and the divisor identities at translations.

use crate::affweyl::{AffineWeylElement, FactorizationMode};
use crate::coeff::Coefficient;
use crate::error::Result;
use crate::nilhecke::{Basis, Generator, NilHecke, NilHeckeElement, Tensor};
use crate::theory::{Theory, TheoryKind};

use super::{point_label, LocalizedClass, Localization, Report, Side};

/// Compares two classes on their common ball.
fn same<T: Theory>(
    report: &mut Report,
    loc: &Localization<'_, T>,
    a: &LocalizedClass<T>,
    b: &LocalizedClass<T>,
    what: impl FnOnce() -> String,
) -> Result<()> {
    let diff = a.first_difference(b, loc)?;
    report.check(diff.is_none(), || {
        let x = diff.expect("failure has a point");
        format!("{} at {}", what(), point_label(&x))
    });
    Ok(())
}

impl<'g, T: Theory> Localization<'g, T> {
    fn schubert_classes(&self, max_len: usize) -> Result<Vec<(AffineWeylElement, LocalizedClass<T>)>> {
        self.ball(max_len)?
            .iter()
            .map(|w| Ok((w.clone(), self.schubert(w, self.radius())?)))
            .collect()
    }

    /// Translations in the table of length at most `max_len`.
    pub fn translations(&self, max_len: usize) -> Result<Vec<AffineWeylElement>> {
        Ok(self
            .ball(max_len.min(self.radius()))?
            .iter()
            .filter(|x| x.fin == crate::cartan::FiniteWeylElement::IDENTITY)
            .cloned()
            .collect())
    }

    fn weight_generators(&self) -> Vec<T::Coeff> {
        (0..self.rank())
            .map(|j| {
                let mut e = vec![0; self.rank()];
                e[j] = 1;
                T::weight_class(&e)
            })
            .collect()
    }

    fn zero_class(&self, r: usize) -> Result<LocalizedClass<T>> {
        self.constant(&T::Coeff::zero(), r)
    }

    /// `w (.) = (w .) o (w *)`.
    fn odot(&self, w: &AffineWeylElement, psi: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let b = self.act_group(Side::Bullet, w, psi)?;
        self.act_group(Side::Dot, w, &b)
    }

    /// `theta^2 = theta`, `eta^2 = eta`, `kappa^2 = kappa` and all mixed
    /// products equal to `kappa`.
    pub fn check_endomorphisms(&self, max_len: usize) -> Result<Report> {
        let mut rep = Report::new("endomorphism relations", self);
        for (w, psi) in self.schubert_classes(max_len)? {
            let name = self.group().display(&w);
            let th = self.theta(&psi)?;
            let et = self.eta(&psi)?;
            let ka = self.kappa(&psi)?;
            same(&mut rep, self, &self.theta(&th)?, &th, || format!("theta^2 on {name}"))?;
            same(&mut rep, self, &self.eta(&et)?, &et, || format!("eta^2 on {name}"))?;
            same(&mut rep, self, &self.kappa(&ka)?, &ka, || format!("kappa^2 on {name}"))?;
            let mixed = [
                ("theta eta", self.theta(&et)?),
                ("eta theta", self.eta(&th)?),
                ("theta kappa", self.theta(&ka)?),
                ("kappa theta", self.kappa(&th)?),
                ("eta kappa", self.eta(&ka)?),
                ("kappa eta", self.kappa(&et)?),
            ];
            for (label, c) in mixed {
                same(&mut rep, self, &c, &ka, || format!("{label} on {name}"))?;
            }
        }
        Ok(rep)
    }

    /// Commutation of `theta`, `eta`, `kappa` with scalars, translations of
    /// length at most `max_translation` and finite Weyl group elements.
    pub fn check_commutations(&self, max_len: usize, max_translation: usize) -> Result<Report> {
        let mut rep = Report::new("theta, eta, kappa commutations", self);
        let qs = self.weight_generators();
        let ts = self.translations(max_translation)?;
        let ws = self.finite_elements().to_vec();
        let g = self.group();
        for (x, psi) in self.schubert_classes(max_len)? {
            let name = g.display(&x);
            let th = self.theta(&psi)?;
            let et = self.eta(&psi)?;
            let ka = self.kappa(&psi)?;
            for q in &qs {
                let qdot = self.act_scalar(Side::Dot, q, &psi)?;
                let qbul = self.act_scalar(Side::Bullet, q, &psi)?;
                let a = self.act_scalar(Side::Dot, q, &th)?;
                same(&mut rep, self, &a, &self.theta(&qdot)?, || format!("theta(1) q={q} on {name}"))?;
                let a = self.act_scalar(Side::Dot, q, &et)?;
                same(&mut rep, self, &a, &self.eta(&qdot)?, || format!("eta(1) q={q} on {name}"))?;
                let a = self.act_scalar(Side::Bullet, q, &et)?;
                same(&mut rep, self, &a, &self.eta(&qbul)?, || format!("eta(4) q={q} on {name}"))?;
                let a = self.act_scalar(Side::Dot, q, &ka)?;
                same(&mut rep, self, &a, &self.kappa(&qdot)?, || format!("kappa(1) q={q} on {name}"))?;
            }
            for t in &ts {
                let tn = g.display(t);
                let tdot = self.act_group(Side::Dot, t, &psi)?;
                let a = self.act_group(Side::Dot, t, &th)?;
                same(&mut rep, self, &a, &self.theta(&tdot)?, || format!("theta(2) t={tn} on {name}"))?;
                let a = self.act_group(Side::Dot, t, &et)?;
                same(&mut rep, self, &a, &et, || format!("eta(2) t={tn} on {name}"))?;
                let a = self.act_group(Side::Bullet, t, &et)?;
                same(&mut rep, self, &a, &et, || format!("eta(5) t={tn} on {name}"))?;
                let a = self.act_group(Side::Dot, t, &ka)?;
                same(&mut rep, self, &a, &ka, || format!("kappa(2) t={tn} on {name}"))?;
                let a = self.act_group(Side::Bullet, t, &ka)?;
                same(&mut rep, self, &a, &ka, || format!("kappa(4) t={tn} on {name}"))?;
            }
            for w in &ws {
                let wn = g.display(w);
                let wdot = self.act_group(Side::Dot, w, &psi)?;
                let wbul = self.act_group(Side::Bullet, w, &psi)?;
                let wodot = self.odot(w, &psi)?;
                let a = self.act_group(Side::Dot, w, &th)?;
                same(&mut rep, self, &a, &self.theta(&wodot)?, || format!("theta(3) w={wn} on {name}"))?;
                let a = self.act_group(Side::Bullet, w, &th)?;
                same(&mut rep, self, &a, &th, || format!("theta(4) w={wn} on {name}"))?;
                let a = self.act_group(Side::Dot, w, &et)?;
                same(&mut rep, self, &a, &self.eta(&wdot)?, || format!("eta(3) w={wn} on {name}"))?;
                let a = self.act_group(Side::Bullet, w, &et)?;
                same(&mut rep, self, &a, &self.eta(&wbul)?, || format!("eta(6) w={wn} on {name}"))?;
                let a = self.act_group(Side::Dot, w, &ka)?;
                same(&mut rep, self, &a, &self.kappa(&wodot)?, || format!("kappa(3) w={wn} on {name}"))?;
                let a = self.act_group(Side::Bullet, w, &ka)?;
                same(&mut rep, self, &a, &ka, || format!("kappa(5) w={wn} on {name}"))?;
            }
        }
        Ok(rep)
    }

    /// Generators and weights acting on Schubert classes from either side.
    ///
    /// In cohomology the left action carries a sign:
    /// `A_i . xi^w = -xi^{s_i w}` when `s_i w < w`.
    pub fn check_generator_actions(&self, max_len: usize) -> Result<Report> {
        let mut rep = Report::new("generator actions on Schubert classes", self);
        let g = self.group();
        let nh = NilHecke::<T>::new(g);
        let r = self.radius() - 1;
        let minus_one = T::Coeff::constant(self.rank(), -1);
        for (w, psi) in self.schubert_classes(max_len)? {
            let name = g.display(&w);
            for i in g.nodes() {
                let left = g.mul_simple_left(i, &w);
                let right = g.mul_simple_right(&w, i);
                let left_down = self.length(&left) < self.length(&w);
                let right_down = self.length(&right) < self.length(&w);
                let (dot, dot_want, bul, bul_want) = match T::KIND {
                    TheoryKind::K => {
                        let yt = nh.y_tilde(i)?;
                        let y = nh.one(Basis::Nil).add(&nh.generator(i))?;
                        (
                            self.act(Side::Dot, &yt, &psi)?,
                            self.schubert(if left_down { &left } else { &w }, r)?,
                            self.act(Side::Bullet, &y, &psi)?,
                            self.schubert(if right_down { &right } else { &w }, r)?,
                        )
                    }
                    TheoryKind::H => (
                        self.act_generator(Side::Dot, i, &psi)?,
                        if left_down {
                            self.scale(&minus_one, &self.schubert(&left, r)?)?
                        } else {
                            self.zero_class(r)?
                        },
                        self.act_generator(Side::Bullet, i, &psi)?,
                        if right_down { self.schubert(&right, r)? } else { self.zero_class(r)? },
                    ),
                };
                same(&mut rep, self, &dot, &dot_want, || format!("left node {i} on {name}"))?;
                same(&mut rep, self, &bul, &bul_want, || format!("right node {i} on {name}"))?;
            }
            for (j, q) in self.weight_generators().iter().enumerate() {
                let a = self.act_scalar(Side::Dot, q, &psi)?;
                same(&mut rep, self, &a, &self.scale(q, &psi)?, || format!("weight {j} dot on {name}"))?;
                let mut lambda = vec![0; self.rank()];
                lambda[j] = 1;
                let lb = self.line_bundle(&lambda, self.radius())?;
                let a = self.act_scalar(Side::Bullet, q, &psi)?;
                same(&mut rep, self, &a, &self.cup(&lb, &psi)?, || format!("weight {j} bullet on {name}"))?;
            }
        }
        Ok(rep)
    }

    /// `sum sign theta(psi^{x1}) cup eta(f(psi^{x2}))` over factorizations of
    /// `x` with finite right factor.
    fn factored<F>(&self, x: &AffineWeylElement, mut f: F) -> Result<LocalizedClass<T>>
    where
        F: FnMut(&LocalizedClass<T>) -> Result<LocalizedClass<T>>,
    {
        let g = self.group();
        let mode = match T::KIND {
            TheoryKind::K => FactorizationMode::Demazure,
            TheoryKind::H => FactorizationMode::LengthAdditive,
        };
        let mut total: Option<LocalizedClass<T>> = None;
        for fac in g.factorizations(x, mode, true) {
            let left = self.theta(&self.schubert(&fac.left, self.radius())?)?;
            let right = self.eta(&f(&self.schubert(&fac.right, self.radius())?)?)?;
            let mut term = self.cup(&left, &right)?;
            if fac.sign < 0 {
                term = self.scale(&T::Coeff::constant(self.rank(), -1), &term)?;
            }
            total = Some(match total {
                None => term,
                Some(t) => self.add(&t, &term)?,
            });
        }
        match total {
            Some(t) => Ok(t),
            None => self.zero_class(self.radius()),
        }
    }

    /// The bullet action on Grassmannian classes.
    pub fn check_grassmannian_bullet(&self, max_len: usize) -> Result<Report> {
        let mut rep = Report::new("bullet action on Grassmannian classes", self);
        let g = self.group();
        let nh = NilHecke::<T>::new(g);
        let r = self.radius();
        let minus_theta = g.node_root_weight(0).to_vec();
        let theta: Vec<i32> = minus_theta.iter().map(|x| -x).collect();
        let one = T::Coeff::one(self.rank());
        for u in self.grassmannian_elements(max_len)? {
            let name = g.display(u);
            let psi = self.schubert(u, r)?;
            // (1)
            for (j, q) in self.weight_generators().iter().enumerate() {
                let mut lambda = vec![0; self.rank()];
                lambda[j] = 1;
                let a = self.act_scalar(Side::Bullet, q, &psi)?;
                let b = self.cup(&self.line_bundle(&lambda, r)?, &psi)?;
                same(&mut rep, self, &a, &b, || format!("item 1, weight {j}, on {name}"))?;
            }
            // (2)
            for i in 1..=self.rank() {
                let s = g.simple(i);
                let a = self.act_group(Side::Bullet, &s, &psi)?;
                same(&mut rep, self, &a, &psi, || format!("item 2, s_{i} on {name}"))?;
                let (a, want) = match T::KIND {
                    TheoryKind::K => (
                        self.act(Side::Bullet, &nh.one(Basis::Nil).add(&nh.generator(i))?, &psi)?,
                        psi.clone(),
                    ),
                    TheoryKind::H => (self.act_generator(Side::Bullet, i, &psi)?, self.zero_class(r - 1)?),
                };
                same(&mut rep, self, &a, &want, || format!("item 2, node {i} on {name}"))?;
            }
            if g.is_identity(u) {
                continue;
            }
            let us0 = g.mul_simple_right(u, 0);
            let target = self.schubert(&us0, r)?;
            // (3)
            let a = match T::KIND {
                TheoryKind::K => self.act(Side::Bullet, &nh.one(Basis::Nil).add(&nh.generator(0))?, &psi)?,
                TheoryKind::H => self.act_generator(Side::Bullet, 0, &psi)?,
            };
            same(&mut rep, self, &a, &target, || format!("item 3 on {name}"))?;
            let sum = self.factored(&us0, |c| Ok(c.clone()))?;
            same(&mut rep, self, &sum, &target, || format!("item 3 expansion on {name}"))?;
            // (4)
            let lhs = self.act_group(Side::Bullet, &g.simple(0), &psi)?;
            match T::KIND {
                TheoryKind::K => {
                    let lb = self.line_bundle(&minus_theta, r)?;
                    let q = one.sub_ref(&T::weight_class(&minus_theta));
                    let sum = self.factored(&us0, |c| self.act_scalar(Side::Bullet, &q, c))?;
                    let rhs = self.add(&self.cup(&lb, &psi)?, &sum)?;
                    same(&mut rep, self, &lhs, &rhs, || format!("item 4 on {name}"))?;
                    let rest = self.constant(&one, r)?;
                    let rest = self.sub(&rest, &lb)?;
                    let compact = self.add(&self.cup(&lb, &psi)?, &self.cup(&rest, &target)?)?;
                    same(&mut rep, self, &lhs, &compact, || format!("item 4 compact form on {name}"))?;
                }
                TheoryKind::H => {
                    let q = T::weight_class(&theta);
                    let sum = self.factored(&us0, |c| self.act_scalar(Side::Bullet, &q, c))?;
                    let rhs = self.add(&psi, &sum)?;
                    same(&mut rep, self, &lhs, &rhs, || format!("item 4 on {name}"))?;
                    let c1 = self.line_bundle(&theta, r)?;
                    let compact = self.add(&psi, &self.cup(&c1, &target)?)?;
                    same(&mut rep, self, &lhs, &compact, || format!("item 4 compact form on {name}"))?;
                }
            }
        }
        Ok(rep)
    }

    /// `a (psi1 cup psi2) = sum (a_(1) psi1) cup (a_(2) psi2)` on both sides,
    /// for the generators `D_i` and for `e^lambda w`.
    pub fn check_cup_product(&self, max_len: usize) -> Result<Report> {
        let mut rep = Report::new("cup product and coproduct", self);
        let g = self.group();
        let mut nh = NilHecke::<T>::new(g);
        let r = self.radius();
        let mut seconds: Vec<(String, LocalizedClass<T>)> = Vec::new();
        for i in g.nodes() {
            seconds.push((format!("psi^s{i}"), self.schubert(&g.simple(i), r)?));
        }
        let mut omega = vec![0; self.rank()];
        omega[0] = 1;
        seconds.push(("line bundle omega_1".into(), self.line_bundle(&omega, r)?));
        let q = T::weight_class(&omega);

        let mut ops: Vec<(String, NilHeckeElement<T>, Tensor<T>)> = Vec::new();
        for i in g.nodes() {
            ops.push((format!("D_{i}"), nh.generator(i), nh.coproduct(&Generator::Nil(i))?));
        }
        let mut groups = vec![g.simple(0)];
        groups.extend(self.finite_elements().iter().filter(|w| !g.is_identity(w)).cloned());
        for w in groups {
            let a = NilHeckeElement::term(Basis::Group, w.clone(), q.clone());
            let base = nh.coproduct(&Generator::Group(w.clone()))?;
            let mut t = Tensor::default();
            for ((x, y), c) in base.terms() {
                t.add_term(x.clone(), y.clone(), q.mul_ref(c));
            }
            ops.push((format!("e^omega_1 {}", g.display(&w)), a, t));
        }

        for (x, psi) in self.schubert_classes(max_len)? {
            for (sname, second) in &seconds {
                let prod = self.cup(&psi, second)?;
                for (oname, a, t) in &ops {
                    for side in [Side::Dot, Side::Bullet] {
                        let lhs = self.act(side, a, &prod)?;
                        let rhs = self.act_tensor(side, t, &psi, second)?;
                        same(&mut rep, self, &lhs, &rhs, || {
                            format!("{oname} {side:?} on psi^{} cup {sname}", g.display(&x))
                        })?;
                    }
                }
            }
        }
        Ok(rep)
    }

    /// At every translation of length at most `max_translation`:
    /// K: `1 - psi^{s_i} = (1 - psi^{s_0})^level(i)`;
    /// H: `xi^{s_i} = level(i) xi^{s_0}`.
    pub fn check_divisor_identities(&self, max_translation: usize) -> Result<Report> {
        let mut rep = Report::new("divisor identities at translations", self);
        let g = self.group();
        let one = T::Coeff::one(self.rank());
        let s0 = g.simple(0);
        for t in self.translations(max_translation)? {
            let base = self.value(&s0, &t)?;
            for i in g.nodes() {
                let level = g.root_system().comarks()[i];
                let got = self.value(&g.simple(i), &t)?;
                let (lhs, rhs) = match T::KIND {
                    TheoryKind::K => {
                        let f = one.sub_ref(&base);
                        let mut p = one.clone();
                        for _ in 0..level {
                            p = p.mul_ref(&f);
                        }
                        (one.sub_ref(&got), p)
                    }
                    TheoryKind::H => (got, base.scale(level as i64)),
                };
                rep.check(lhs == rhs, || {
                    format!("node {i} (level {level}) at {}: {lhs} != {rhs}", point_label(&t))
                });
            }
        }
        Ok(rep)
    }

    /// Every check above, for classes of length at most `max_len`.
    pub fn operator_suite(&self, max_len: usize, max_translation: usize) -> Result<Vec<Report>> {
        Ok(vec![
            self.check_endomorphisms(max_len)?,
            self.check_commutations(max_len, max_translation)?,
            self.check_generator_actions(max_len)?,
            self.check_grassmannian_bullet(max_len)?,
            self.check_cup_product(max_len)?,
        ])
    }
}
