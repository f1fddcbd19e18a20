//! Rebuilding affine Schubert classes from Grassmannian ones.
//!
//! A class is held in tensor form `sum_u psi^u (x) phi_u`, with `u`
//! Grassmannian and `phi_u` a function on the finite Weyl group; its value at
//! `t_mu v` is `sum_u psi^u(t_mu) phi_u(v)`. Starting from `psi^u (x) 1` the
//! operators `y_i *` (K) or `A_i *` (H) walk down to any `psi^w`, since
//! `y_i * psi^w = psi^{w s_i}` whenever `w s_i < w`.
//!
//! Finite nodes act on the second factor only. The affine node moves the
//! translation: `t_mu v s_0 = t_{mu + v theta^vee} v s_theta`, and
//! `psi^u(t_{mu + v theta^vee})` is re-expanded through the `s_0 *` formula
//! for Grassmannian classes. In K-theory the Grassmannian expansions are
//! infinite, so each affine step keeps `u` up to a length cap; the caps are
//! chosen so that the final components needed for the comparison are exact.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::affweyl::{AffineWeylElement, FactorizationMode};
use crate::cartan::FiniteWeylElement;
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::theory::{Theory, TheoryKind};

use super::{point_label, Localization, Report};

/// Result of rebuilding one Schubert class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionReport {
    pub element: Vec<usize>,
    /// Grassmannian start, as a reduced word.
    pub start: Vec<usize>,
    /// Nodes applied, in order.
    pub steps: Vec<usize>,
    pub points: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
}

type Fiber<C> = Vec<C>;

struct Rebuilder<'a, 'g, T: Theory> {
    loc: &'a Localization<'g, T>,
    finite: Vec<FiniteWeylElement>,
    /// Grassmannian expansion of `theta(psi^z)`, keyed by `z`, up to a cap.
    stanley: HashMap<AffineWeylElement, (usize, Vec<(AffineWeylElement, T::Coeff)>)>,
}

impl<'a, 'g, T: Theory> Rebuilder<'a, 'g, T> {
    fn new(loc: &'a Localization<'g, T>) -> Self {
        let finite = loc.group().finite().elements().collect();
        Rebuilder {
            loc,
            finite,
            stanley: HashMap::new(),
        }
    }

    fn size(&self) -> usize {
        self.finite.len()
    }

    /// `(D_node * phi)(v) = (phi(v r) - phi(v)) / c(v beta)` on the finite
    /// flag variety, with `beta` and `r` the level-zero root and reflection.
    fn fiber_demazure(&self, node: usize, phi: &Fiber<T::Coeff>) -> Result<Fiber<T::Coeff>> {
        let g = self.loc.group();
        let fin = g.finite();
        let r = g.node_reflection(node);
        let beta = g.node_root_weight(node);
        self.finite
            .iter()
            .map(|&v| {
                let vr = fin.mul(v, r);
                let c = T::root_factor(&fin.act_weight(v, beta));
                phi[vr.0 as usize].sub_ref(&phi[v.0 as usize]).exact_div(&c)
            })
            .collect()
    }

    /// `y_node *` (K) or `A_node *` (H) on a fiber.
    fn fiber_step(&self, node: usize, phi: &Fiber<T::Coeff>) -> Result<Fiber<T::Coeff>> {
        let d = self.fiber_demazure(node, phi)?;
        Ok(match T::KIND {
            TheoryKind::K => phi.iter().zip(&d).map(|(a, b)| a.add_ref(b)).collect(),
            TheoryKind::H => d,
        })
    }

    /// `theta(psi^z) = sum k^z_u psi^u` for `l(u) <= cap`.
    fn stanley(&mut self, z: &AffineWeylElement, cap: usize) -> Result<&[(AffineWeylElement, T::Coeff)]> {
        let fresh = match self.stanley.get(z) {
            Some((c, _)) => *c < cap,
            None => true,
        };
        if fresh {
            let exp = self.loc.stanley_coefficients(z, cap)?;
            if let Some(u) = exp.undetermined.first() {
                return Err(Error::InsufficientRadius {
                    needed: self.loc.length(&self.loc.group().translation_part(u)),
                    available: self.loc.radius(),
                });
            }
            let nz = exp.nonzero().cloned().collect();
            self.stanley.insert(z.clone(), (cap, nz));
        }
        Ok(&self.stanley[z].1)
    }

    /// `g_{u,u'}(v) = sum_{x1 x2 = u s_0} sign k^{x1}_{u'} psi^{x2}(v)` for
    /// `l(u') <= cap`.
    fn reexpansion(
        &mut self,
        u: &AffineWeylElement,
        cap: usize,
    ) -> Result<BTreeMap<AffineWeylElement, Fiber<T::Coeff>>> {
        let g = self.loc.group();
        let n = self.size();
        let mut out: BTreeMap<AffineWeylElement, Fiber<T::Coeff>> = BTreeMap::new();
        if g.is_identity(u) {
            if T::KIND == TheoryKind::K {
                out.insert(u.clone(), vec![T::Coeff::one(g.rank()); n]);
            }
            return Ok(out);
        }
        let mode = match T::KIND {
            TheoryKind::K => FactorizationMode::Demazure,
            TheoryKind::H => FactorizationMode::LengthAdditive,
        };
        let target = g.mul_simple_right(u, 0);
        for f in g.factorizations(&target, mode, true) {
            let right: Fiber<T::Coeff> = self
                .finite
                .iter()
                .map(|&v| self.loc.value(&f.right, &g.from_finite(v)))
                .collect::<Result<_>>()?;
            let terms = self.stanley(&f.left, cap)?.to_vec();
            for (up, k) in terms {
                let k = if f.sign > 0 { k } else { k.neg_ref() };
                let slot = out.entry(up).or_insert_with(|| vec![T::Coeff::zero(); n]);
                for (s, r) in slot.iter_mut().zip(&right) {
                    *s = s.add_ref(&k.mul_ref(r));
                }
            }
        }
        Ok(out)
    }

    /// The affine step on the whole state, keeping targets with `l <= cap`.
    fn affine_step(
        &mut self,
        state: BTreeMap<AffineWeylElement, Fiber<T::Coeff>>,
        cap: usize,
    ) -> Result<BTreeMap<AffineWeylElement, Fiber<T::Coeff>>> {
        let g = self.loc.group();
        let fin = g.finite();
        let n = self.size();
        let weight = g.node_root_weight(0);
        // K: L(v) = e^{-v theta}; H: v theta
        let line: Fiber<T::Coeff> = self
            .finite
            .iter()
            .map(|&v| {
                let w = fin.act_weight(v, weight);
                match T::KIND {
                    TheoryKind::K => T::weight_class(&w),
                    TheoryKind::H => T::weight_class(&w).neg_ref(),
                }
            })
            .collect();
        let one = T::Coeff::one(g.rank());
        let mut out: BTreeMap<AffineWeylElement, Fiber<T::Coeff>> = BTreeMap::new();
        let mut add = |u: &AffineWeylElement, f: Fiber<T::Coeff>| {
            let slot = out.entry(u.clone()).or_insert_with(|| vec![T::Coeff::zero(); n]);
            for (s, x) in slot.iter_mut().zip(f) {
                *s = s.add_ref(&x);
            }
        };
        for (u, phi) in &state {
            let moved = self.fiber_demazure(0, phi)?;
            let moved = match T::KIND {
                TheoryKind::K => phi.iter().zip(&moved).map(|(a, b)| a.add_ref(b)).collect::<Vec<_>>(),
                TheoryKind::H => moved,
            };
            if self.loc.length(u) <= cap {
                let own: Fiber<T::Coeff> = match T::KIND {
                    TheoryKind::K => (0..n).map(|j| line[j].mul_ref(&moved[j].sub_ref(&phi[j]))).collect(),
                    TheoryKind::H => moved.clone(),
                };
                add(u, own);
            }
            for (up, gf) in self.reexpansion(u, cap)? {
                let part: Fiber<T::Coeff> = (0..n)
                    .map(|j| match T::KIND {
                        TheoryKind::K => one
                            .sub_ref(&line[j])
                            .mul_ref(&gf[j])
                            .mul_ref(&moved[j])
                            .add_ref(&line[j].mul_ref(&gf[j]).mul_ref(&phi[j])),
                        TheoryKind::H => gf[j].mul_ref(&phi[j]).add_ref(&line[j].mul_ref(&gf[j]).mul_ref(&moved[j])),
                    })
                    .collect();
                add(&up, part);
            }
        }
        out.retain(|_, f| f.iter().any(|c| !c.is_zero()));
        Ok(out)
    }
}

impl<'g, T: Theory> Localization<'g, T> {
    /// A shortest climb `w -> w s_{i1} -> ... -> u` through right ascents to
    /// a Grassmannian `u`, using as few affine letters as possible. Returns
    /// `u` and the nodes in climbing order.
    pub fn climb_to_grassmannian(&self, w: &AffineWeylElement) -> (AffineWeylElement, Vec<usize>) {
        let g = self.group();
        let mut best: HashMap<AffineWeylElement, usize> = HashMap::new();
        let mut parent: HashMap<AffineWeylElement, (AffineWeylElement, usize)> = HashMap::new();
        let mut queue = VecDeque::new();
        best.insert(w.clone(), 0);
        queue.push_back((w.clone(), 0usize));
        while let Some((x, cost)) = queue.pop_front() {
            if best[&x] < cost {
                continue;
            }
            if g.is_grassmannian(&x) {
                let mut nodes = Vec::new();
                let mut cur = x.clone();
                while let Some((p, i)) = parent.get(&cur) {
                    nodes.push(*i);
                    cur = p.clone();
                }
                nodes.reverse();
                return (x, nodes);
            }
            for i in g.nodes() {
                if g.is_right_descent(&x, i) {
                    continue;
                }
                let y = g.mul_simple_right(&x, i);
                let c = cost + usize::from(i == 0);
                if best.get(&y).is_none_or(|&b| c < b) {
                    best.insert(y.clone(), c);
                    parent.insert(y.clone(), (x.clone(), i));
                    if i == 0 {
                        queue.push_back((y, c));
                    } else {
                        queue.push_front((y, c));
                    }
                }
            }
        }
        unreachable!("every element lies below a Grassmannian element")
    }

    /// Rebuilds `psi^w` from `psi^u (x) 1` and compares it with the table at
    /// every point whose translation has length at most `compare`.
    pub fn rebuild_schubert(&self, w: &AffineWeylElement, compare: usize) -> Result<RecursionReport> {
        let g = self.group();
        let (start, climb) = self.climb_to_grassmannian(w);
        let steps: Vec<usize> = climb.iter().rev().copied().collect();
        let spread = 2 * self.longest_finite_length() + 1;
        // cap on l(u) still needed after each step, read from the end
        let mut caps = vec![0usize; steps.len()];
        let mut cap = compare;
        for (k, &i) in steps.iter().enumerate().rev() {
            caps[k] = cap;
            if i == 0 && T::KIND == TheoryKind::K {
                cap += spread;
            }
        }
        let mut rb = Rebuilder::new(self);
        let n = rb.size();
        let mut state: BTreeMap<AffineWeylElement, Fiber<T::Coeff>> = BTreeMap::new();
        state.insert(start.clone(), vec![T::Coeff::one(g.rank()); n]);
        for (k, &i) in steps.iter().enumerate() {
            state = if i == 0 {
                rb.affine_step(state, caps[k])?
            } else {
                let mut next = BTreeMap::new();
                for (u, phi) in state {
                    let f = rb.fiber_step(i, &phi)?;
                    if f.iter().any(|c| !c.is_zero()) {
                        next.insert(u, f);
                    }
                }
                next
            };
        }
        let mut points = 0;
        let mut mismatch = None;
        for x in self.ball(self.radius())? {
            let t = g.translation_part(x);
            if self.length(&t) > compare {
                continue;
            }
            let mut got = T::Coeff::zero();
            for (u, phi) in &state {
                let a = self.value(u, &t)?;
                if !a.is_zero() {
                    got = got.add_ref(&a.mul_ref(&phi[x.fin.0 as usize]));
                }
            }
            points += 1;
            let want = self.value(w, x)?;
            if got != want {
                mismatch = Some(format!("at {} ({}): {} != {}", g.display(x), point_label(x), got, want));
                break;
            }
        }
        Ok(RecursionReport {
            element: g.word(w),
            start: g.word(&start),
            steps,
            points,
            mismatch,
        })
    }

    /// Rebuilds every `psi^w` with `l(w) <= max_len`.
    pub fn recursion_closure(&self, max_len: usize, compare: usize) -> Result<Report> {
        let mut report = Report::new(
            format!("recursion closure for l(w) <= {max_len}, translations of length <= {compare}"),
            self,
        );
        for w in self.ball(max_len)? {
            let r = self.rebuild_schubert(w, compare)?;
            report.check(r.mismatch.is_none(), || {
                format!("{}: {}", self.group().display(w), r.mismatch.clone().unwrap_or_default())
            });
        }
        Ok(report)
    }
}
