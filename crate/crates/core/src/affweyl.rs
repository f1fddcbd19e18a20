//! Affine Weyl group arithmetic in the presentation `t_mu v`, with `mu` in the
//! coroot lattice and `v` in the finite Weyl group.
//!
//! The affine node is `0`; `s_0 = t_{theta^vee} s_theta`. A real affine root
//! `beta + k delta` is stored as a finite root index plus the integer `k`, and
//! `t_mu v` sends it to `v beta + (k - <mu, v beta>) delta`.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use smallvec::smallvec;

use crate::cartan::{FiniteWeylElement, FiniteWeylGroup, RootSystem, Vector};
use crate::error::{Error, Result};

/// Default cap on the number of elements a ball enumeration may produce.
pub const DEFAULT_BALL_CAP: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    /// Translation part in simple-coroot coordinates.
    pub mu: Vector,
    pub fin: FiniteWeylElement,
}

/// The real affine root `beta + k delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineRoot {
    /// Index of `beta` among all finite roots of the group.
    pub root: usize,
    pub k: i32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorizationMode {
    LengthAdditive,
    Demazure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub left: AffineWeylElement,
    pub right: AffineWeylElement,
    pub sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetData {
    pub translation: AffineWeylElement,
    pub finite: AffineWeylElement,
    pub grassmannian: bool,
    pub min_coset_rep: AffineWeylElement,
}

/// JSON form of an element; the word is authoritative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<i32>>,
    pub word: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct AffineWeylGroup {
    rs: RootSystem,
    fin: FiniteWeylGroup,
    theta_coroot: Vector,
    s_theta: FiniteWeylElement,
    node_root: Vec<usize>,
    node_level: Vec<i32>,
    node_coroot: Vec<Vector>,
    node_reflection: Vec<FiniteWeylElement>,
    ball_cap: usize,
}

impl AffineWeylGroup {
    pub fn new(rs: RootSystem) -> Result<Self> {
        let fin = FiniteWeylGroup::new(&rs)?;
        let r = rs.rank();
        let theta = rs.highest_root().clone();
        let theta_coroot = theta.coroot.clone();

        // s_theta(lambda) = lambda - <theta^vee, lambda> theta
        let mut m = vec![0i32; r * r];
        for col in 0..r {
            for row in 0..r {
                let e = (row == col) as i32;
                m[row * r + col] = e - theta.weight[row] * theta_coroot[col];
            }
        }
        let s_theta = fin
            .find_matrix(&m)
            .ok_or_else(|| Error::InvalidCartan("reflection in theta not found".into()))?;

        let find_root = |w: &[i32]| -> Result<usize> {
            (0..fin.root_count())
                .find(|&k| fin.root_weight(k) == w)
                .ok_or_else(|| Error::InvalidCartan("root not found".into()))
        };
        let neg_theta: Vector = theta.weight.iter().map(|x| -x).collect();
        let mut node_root = vec![find_root(&neg_theta)?];
        let mut node_level = vec![1];
        let mut node_coroot: Vec<Vector> = vec![theta_coroot.iter().map(|x| -x).collect()];
        let mut node_reflection = vec![s_theta];
        for i in 1..=r {
            node_root.push(find_root(&rs.simple_root_weight(i))?);
            node_level.push(0);
            let mut c: Vector = smallvec![0; r];
            c[i - 1] = 1;
            node_coroot.push(c);
            node_reflection.push(fin.simple(i));
        }
        Ok(AffineWeylGroup {
            rs,
            fin,
            theta_coroot,
            s_theta,
            node_root,
            node_level,
            node_coroot,
            node_reflection,
            ball_cap: DEFAULT_BALL_CAP,
        })
    }

    pub fn of_type(letter: &str, rank: usize) -> Result<Self> {
        Self::new(RootSystem::of_type(letter, rank)?)
    }

    pub fn with_ball_cap(mut self, cap: usize) -> Self {
        self.ball_cap = cap;
        self
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn finite(&self) -> &FiniteWeylGroup {
        &self.fin
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Affine nodes `0..=rank`.
    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.rank()
    }

    pub fn theta_coroot(&self) -> &[i32] {
        &self.theta_coroot
    }

    pub fn s_theta(&self) -> FiniteWeylElement {
        self.s_theta
    }

    /// Classical root of an affine node, as an index into the finite roots:
    /// `alpha_i` for `i >= 1` and `-theta` for the affine node.
    pub fn node_root(&self, node: usize) -> usize {
        self.node_root[node]
    }

    pub fn node_root_weight(&self, node: usize) -> &[i32] {
        self.fin.root_weight(self.node_root[node])
    }

    /// Classical coroot of an affine node in coroot coordinates.
    pub fn node_coroot(&self, node: usize) -> &[i32] {
        &self.node_coroot[node]
    }

    /// The finite reflection through which `s_node` acts at level zero.
    pub fn node_reflection(&self, node: usize) -> FiniteWeylElement {
        self.node_reflection[node]
    }

    pub fn simple_affine_root(&self, node: usize) -> AffineRoot {
        AffineRoot {
            root: self.node_root[node],
            k: self.node_level[node],
        }
    }

    fn check_node(&self, node: usize) -> Result<()> {
        if node > self.rank() {
            Err(Error::IndexOutOfRange(node))
        } else {
            Ok(())
        }
    }

    pub fn identity(&self) -> AffineWeylElement {
        AffineWeylElement {
            mu: smallvec![0; self.rank()],
            fin: FiniteWeylElement::IDENTITY,
        }
    }

    pub fn is_identity(&self, x: &AffineWeylElement) -> bool {
        x.fin == FiniteWeylElement::IDENTITY && x.mu.iter().all(|&m| m == 0)
    }

    pub fn simple(&self, node: usize) -> AffineWeylElement {
        if node == 0 {
            AffineWeylElement {
                mu: self.theta_coroot.clone(),
                fin: self.s_theta,
            }
        } else {
            AffineWeylElement {
                mu: smallvec![0; self.rank()],
                fin: self.fin.simple(node),
            }
        }
    }

    pub fn translation(&self, mu: &[i32]) -> AffineWeylElement {
        AffineWeylElement {
            mu: mu.iter().copied().collect(),
            fin: FiniteWeylElement::IDENTITY,
        }
    }

    pub fn from_finite(&self, v: FiniteWeylElement) -> AffineWeylElement {
        AffineWeylElement {
            mu: smallvec![0; self.rank()],
            fin: v,
        }
    }

    pub fn is_finite(&self, x: &AffineWeylElement) -> bool {
        x.mu.iter().all(|&m| m == 0)
    }

    pub fn from_word(&self, word: &[usize]) -> Result<AffineWeylElement> {
        let mut x = self.identity();
        for &node in word {
            self.check_node(node)?;
            x = self.mul_simple_right(&x, node);
        }
        Ok(x)
    }

    fn check_dim(&self, x: &AffineWeylElement) -> Result<()> {
        if x.mu.len() != self.rank() || x.fin.index() >= self.fin.size() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: x.mu.len(),
            });
        }
        Ok(())
    }

    /// Group product `(mu, w)(nu, v) = (mu + w nu, w v)`.
    pub fn mul(&self, x: &AffineWeylElement, y: &AffineWeylElement) -> AffineWeylElement {
        let wnu = self.fin.act_coroot(x.fin, &y.mu);
        AffineWeylElement {
            mu: x.mu.iter().zip(&wnu).map(|(a, b)| a + b).collect(),
            fin: self.fin.mul(x.fin, y.fin),
        }
    }

    /// Checked product for elements that may come from a different group.
    pub fn compose(&self, x: &AffineWeylElement, y: &AffineWeylElement) -> Result<AffineWeylElement> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.mul(x, y))
    }

    pub fn inverse(&self, x: &AffineWeylElement) -> AffineWeylElement {
        let vinv = self.fin.inverse(x.fin);
        let m = self.fin.act_coroot(vinv, &x.mu);
        AffineWeylElement {
            mu: m.iter().map(|a| -a).collect(),
            fin: vinv,
        }
    }

    pub fn mul_simple_right(&self, x: &AffineWeylElement, node: usize) -> AffineWeylElement {
        if node == 0 {
            let add = self.fin.act_coroot(x.fin, &self.theta_coroot);
            AffineWeylElement {
                mu: x.mu.iter().zip(&add).map(|(a, b)| a + b).collect(),
                fin: self.fin.mul(x.fin, self.s_theta),
            }
        } else {
            AffineWeylElement {
                mu: x.mu.clone(),
                fin: self.fin.mul_simple_right(x.fin, node),
            }
        }
    }

    pub fn mul_simple_left(&self, node: usize, x: &AffineWeylElement) -> AffineWeylElement {
        if node == 0 {
            let m = self.fin.act_coroot(self.s_theta, &x.mu);
            AffineWeylElement {
                mu: m.iter().zip(&self.theta_coroot).map(|(a, b)| a + b).collect(),
                fin: self.fin.mul(self.s_theta, x.fin),
            }
        } else {
            let m = self.fin.act_coroot(self.fin.simple(node), &x.mu);
            AffineWeylElement {
                mu: m,
                fin: self.fin.mul_simple_left(node, x.fin),
            }
        }
    }

    pub fn root_is_positive(&self, a: AffineRoot) -> bool {
        a.k > 0 || (a.k == 0 && self.fin.root_is_positive(a.root))
    }

    pub fn act_root(&self, x: &AffineWeylElement, a: AffineRoot) -> AffineRoot {
        let vb = self.fin.act_root(x.fin, a.root);
        AffineRoot {
            root: vb,
            k: a.k - RootSystem::pair(&x.mu, self.fin.root_weight(vb)),
        }
    }

    /// `s_node x < x`, tested through `x^{-1}(alpha_node) < 0`.
    pub fn is_left_descent(&self, x: &AffineWeylElement, node: usize) -> bool {
        let a = self.simple_affine_root(node);
        let vinv = self.fin.inverse(x.fin);
        let image = AffineRoot {
            root: self.fin.act_root(vinv, a.root),
            k: a.k + RootSystem::pair(&x.mu, self.fin.root_weight(a.root)),
        };
        !self.root_is_positive(image)
    }

    /// `x s_node < x`, tested through `x(alpha_node) < 0`.
    pub fn is_right_descent(&self, x: &AffineWeylElement, node: usize) -> bool {
        !self.root_is_positive(self.act_root(x, self.simple_affine_root(node)))
    }

    pub fn left_descents(&self, x: &AffineWeylElement) -> Vec<usize> {
        self.nodes().filter(|&i| self.is_left_descent(x, i)).collect()
    }

    pub fn right_descents(&self, x: &AffineWeylElement) -> Vec<usize> {
        self.nodes().filter(|&i| self.is_right_descent(x, i)).collect()
    }

    /// Number of positive affine roots sent to negative roots.
    pub fn length(&self, x: &AffineWeylElement) -> usize {
        let mut total: i64 = 0;
        for k in 0..self.fin.root_count() {
            let k_min = if self.fin.root_is_positive(k) { 0 } else { 1 };
            let vg = self.fin.act_root(x.fin, k);
            let m = RootSystem::pair(&x.mu, self.fin.root_weight(vg));
            total += (m - k_min).max(0) as i64;
            if m >= k_min && !self.fin.root_is_positive(vg) {
                total += 1;
            }
        }
        total as usize
    }

    /// Lex-least reduced word, found by repeatedly stripping the smallest left descent.
    pub fn word(&self, x: &AffineWeylElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut y = x.clone();
        while !self.is_identity(&y) {
            let i = self
                .nodes()
                .find(|&i| self.is_left_descent(&y, i))
                .expect("non-identity element has a left descent");
            word.push(i);
            y = self.mul_simple_left(i, &y);
        }
        word
    }

    pub fn length_and_word(&self, x: &AffineWeylElement) -> (usize, Vec<usize>) {
        let w = self.word(x);
        (w.len(), w)
    }

    pub fn bruhat_leq(&self, v: &AffineWeylElement, w: &AffineWeylElement) -> bool {
        let mut v = v.clone();
        let mut w = w.clone();
        loop {
            if self.is_identity(&w) {
                return self.is_identity(&v);
            }
            if self.is_identity(&v) {
                return true;
            }
            let i = self
                .nodes()
                .find(|&i| self.is_left_descent(&w, i))
                .expect("non-identity element has a left descent");
            if self.is_left_descent(&v, i) {
                v = self.mul_simple_left(i, &v);
            }
            w = self.mul_simple_left(i, &w);
        }
    }

    pub fn bruhat_lt(&self, v: &AffineWeylElement, w: &AffineWeylElement) -> bool {
        v != w && self.bruhat_leq(v, w)
    }

    /// `x * s_node`.
    pub fn demazure_simple_right(&self, x: &AffineWeylElement, node: usize) -> AffineWeylElement {
        if self.is_right_descent(x, node) {
            x.clone()
        } else {
            self.mul_simple_right(x, node)
        }
    }

    pub fn demazure(&self, x: &AffineWeylElement, y: &AffineWeylElement) -> AffineWeylElement {
        self.word(y)
            .into_iter()
            .fold(x.clone(), |acc, i| self.demazure_simple_right(&acc, i))
    }

    /// Demazure product of a word of simple reflections.
    pub fn demazure_word(&self, word: &[usize]) -> AffineWeylElement {
        word.iter()
            .fold(self.identity(), |acc, &i| self.demazure_simple_right(&acc, i))
    }

    /// All elements of length at most `radius`, sorted by length then reduced word.
    pub fn ball(&self, radius: usize) -> Result<Vec<AffineWeylElement>> {
        let mut levels: Vec<Vec<AffineWeylElement>> = vec![vec![self.identity()]];
        let mut total = 1usize;
        for _ in 0..radius {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for x in levels.last().unwrap() {
                for i in self.nodes() {
                    if !self.is_right_descent(x, i) {
                        let y = self.mul_simple_right(x, i);
                        if seen.insert(y.clone()) {
                            next.push(y);
                        }
                    }
                }
            }
            total += next.len();
            if total > self.ball_cap {
                return Err(Error::Budget(format!(
                    "ball of radius {radius} exceeds {} elements",
                    self.ball_cap
                )));
            }
            levels.push(next);
        }
        let mut out = Vec::with_capacity(total);
        for level in levels {
            let mut keyed: Vec<(Vec<usize>, AffineWeylElement)> =
                level.into_iter().map(|x| (self.word(&x), x)).collect();
            keyed.sort();
            out.extend(keyed.into_iter().map(|(_, x)| x));
        }
        Ok(out)
    }

    /// The Bruhat interval `[e, w]`, sorted by length then reduced word.
    pub fn lower_interval(&self, w: &AffineWeylElement) -> Vec<AffineWeylElement> {
        let mut set: HashSet<AffineWeylElement> = HashSet::new();
        set.insert(self.identity());
        for i in self.word(w) {
            let grown: Vec<AffineWeylElement> = set
                .iter()
                .filter(|x| !self.is_right_descent(x, i))
                .map(|x| self.mul_simple_right(x, i))
                .collect();
            set.extend(grown);
        }
        self.sort_canonical(set.into_iter().collect())
    }

    pub fn sort_canonical(&self, xs: Vec<AffineWeylElement>) -> Vec<AffineWeylElement> {
        let mut keyed: Vec<(usize, Vec<usize>, AffineWeylElement)> = xs
            .into_iter()
            .map(|x| {
                let w = self.word(&x);
                (w.len(), w, x)
            })
            .collect();
        keyed.sort();
        keyed.into_iter().map(|(_, _, x)| x).collect()
    }

    /// Pairs `(w1, w2)` with `w = w1 w2` length-additively, or `w1 * w2 = w`.
    pub fn factorizations(
        &self,
        w: &AffineWeylElement,
        mode: FactorizationMode,
        right_factor_finite: bool,
    ) -> Vec<Factorization> {
        let lw = self.length(w);
        let interval = self.lower_interval(w);
        let rights: Vec<&AffineWeylElement> = interval
            .iter()
            .filter(|x| !right_factor_finite || self.is_finite(x))
            .collect();
        let mut out = Vec::new();
        match mode {
            FactorizationMode::LengthAdditive => {
                for w2 in rights {
                    let w1 = self.mul(w, &self.inverse(w2));
                    if self.length(&w1) + self.length(w2) == lw {
                        out.push(Factorization {
                            left: w1,
                            right: w2.clone(),
                            sign: 1,
                        });
                    }
                }
            }
            FactorizationMode::Demazure => {
                let words: HashMap<&AffineWeylElement, Vec<usize>> =
                    interval.iter().map(|x| (x, self.word(x))).collect();
                for w2 in rights {
                    for w1 in &interval {
                        let prod = words[w2]
                            .iter()
                            .fold(w1.clone(), |acc, &i| self.demazure_simple_right(&acc, i));
                        if &prod == w {
                            let excess = words[w1].len() + words[w2].len() - lw;
                            out.push(Factorization {
                                left: w1.clone(),
                                right: w2.clone(),
                                sign: if excess.is_multiple_of(2) { 1 } else { -1 },
                            });
                        }
                    }
                }
            }
        }
        let mut keyed: Vec<((usize, usize, Vec<usize>, Vec<usize>), Factorization)> = out
            .into_iter()
            .map(|f| {
                let a = self.word(&f.left);
                let b = self.word(&f.right);
                ((b.len(), a.len(), b, a), f)
            })
            .collect();
        keyed.sort_by(|x, y| x.0.cmp(&y.0));
        keyed.into_iter().map(|(_, f)| f).collect()
    }

    pub fn translation_part(&self, x: &AffineWeylElement) -> AffineWeylElement {
        self.translation(&x.mu)
    }

    pub fn finite_part(&self, x: &AffineWeylElement) -> AffineWeylElement {
        self.from_finite(x.fin)
    }

    pub fn is_grassmannian(&self, x: &AffineWeylElement) -> bool {
        (1..=self.rank()).all(|i| !self.is_right_descent(x, i))
    }

    /// The unique minimal-length element of `x W`.
    pub fn min_coset_rep(&self, x: &AffineWeylElement) -> AffineWeylElement {
        let mut y = x.clone();
        while let Some(i) = (1..=self.rank()).find(|&i| self.is_right_descent(&y, i)) {
            y = self.mul_simple_right(&y, i);
        }
        y
    }

    pub fn coset_data(&self, x: &AffineWeylElement) -> CosetData {
        CosetData {
            translation: self.translation_part(x),
            finite: self.finite_part(x),
            grassmannian: self.is_grassmannian(x),
            min_coset_rep: self.min_coset_rep(x),
        }
    }

    pub fn to_document(&self, x: &AffineWeylElement) -> ElementDocument {
        ElementDocument {
            mu: Some(x.mu.to_vec()),
            word: self.word(x),
        }
    }

    pub fn from_document(&self, doc: &ElementDocument) -> Result<AffineWeylElement> {
        let x = self.from_word(&doc.word)?;
        if let Some(mu) = &doc.mu {
            if mu.as_slice() != x.mu.as_slice() {
                return Err(Error::Invalid(format!(
                    "translation part {:?} does not match word {:?}",
                    mu, doc.word
                )));
            }
        }
        Ok(x)
    }

    /// Compact display: `s2s1s0`, or `e` for the identity.
    pub fn display(&self, x: &AffineWeylElement) -> String {
        display_word(&self.word(x))
    }
}

pub fn display_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| format!("s{i}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> AffineWeylGroup {
        AffineWeylGroup::of_type("A", n).unwrap()
    }

    #[test]
    fn s0_is_involution_and_decodes() {
        let g = a(2);
        let s0 = g.simple(0);
        assert!(g.is_identity(&g.mul(&s0, &s0)));
        assert_eq!(s0.mu.as_slice(), &[1, 1]);
        assert_eq!(s0.fin, g.s_theta());
    }

    #[test]
    fn a1_translation_from_s0s1() {
        let g = a(1);
        let x = g.mul(&g.simple(0), &g.simple(1));
        assert_eq!(x, g.translation(&[1]));
        assert_eq!(g.length_and_word(&x), (2, vec![0, 1]));
        assert_eq!(g.length(&x), 2);
    }

    #[test]
    fn small_lengths_and_words() {
        let g = a(2);
        assert_eq!(g.length_and_word(&g.identity()), (0, vec![]));
        assert_eq!(g.length_and_word(&g.simple(0)), (1, vec![0]));
    }

    #[test]
    fn bruhat_examples() {
        let g = a(2);
        let s1 = g.simple(1);
        let s21 = g.from_word(&[2, 1]).unwrap();
        assert!(g.bruhat_leq(&g.identity(), &s21));
        assert!(g.bruhat_leq(&s1, &s21));
        assert!(!g.bruhat_leq(&g.simple(0), &s1));
        assert!(!g.bruhat_leq(&s21, &s1));
    }

    #[test]
    fn demazure_examples() {
        let g = a(2);
        let s0 = g.simple(0);
        assert_eq!(g.demazure(&s0, &s0), s0);
        let s21 = g.from_word(&[2, 1]).unwrap();
        assert_eq!(g.demazure(&g.identity(), &s21), s21);
        assert_eq!(g.demazure(&g.simple(2), &s21), s21);
    }

    #[test]
    fn ball_sizes() {
        let g1 = a(1);
        assert_eq!(g1.ball(0).unwrap().len(), 1);
        let b = g1.ball(2).unwrap();
        let words: Vec<Vec<usize>> = b.iter().map(|x| g1.word(x)).collect();
        assert_eq!(words, vec![vec![], vec![0], vec![1], vec![0, 1], vec![1, 0]]);
        assert_eq!(a(2).ball(1).unwrap().len(), 4);
    }

    #[test]
    fn factorization_examples() {
        let g = a(2);
        let w = g.from_word(&[2, 1]).unwrap();
        let show = |fs: &[Factorization]| -> Vec<(String, String, i64)> {
            fs.iter()
                .map(|f| (g.display(&f.left), g.display(&f.right), f.sign))
                .collect()
        };
        let la = g.factorizations(&w, FactorizationMode::LengthAdditive, true);
        assert_eq!(
            show(&la),
            vec![
                ("s2s1".to_string(), "e".to_string(), 1),
                ("s2".to_string(), "s1".to_string(), 1),
                ("e".to_string(), "s2s1".to_string(), 1),
            ]
        );
        let dm = g.factorizations(&w, FactorizationMode::Demazure, true);
        assert_eq!(
            show(&dm),
            vec![
                ("s2s1".to_string(), "e".to_string(), 1),
                ("s2".to_string(), "s1".to_string(), 1),
                ("s2s1".to_string(), "s1".to_string(), -1),
                ("e".to_string(), "s2s1".to_string(), 1),
                ("s2".to_string(), "s2s1".to_string(), -1),
            ]
        );
        let e = g.identity();
        for mode in [FactorizationMode::LengthAdditive, FactorizationMode::Demazure] {
            let f = g.factorizations(&e, mode, true);
            assert_eq!(f.len(), 1);
            assert_eq!(f[0].sign, 1);
        }
    }

    #[test]
    fn coset_examples() {
        let g = a(1);
        let s0 = g.simple(0);
        let d = g.coset_data(&s0);
        assert_eq!(d.translation, g.translation(&[1]));
        assert_eq!(d.finite, g.simple(1));
        assert!(d.grassmannian);
        let s01 = g.from_word(&[0, 1]).unwrap();
        let d = g.coset_data(&s01);
        assert!(!d.grassmannian);
        assert_eq!(d.min_coset_rep, s0);
    }

    #[test]
    fn document_roundtrip() {
        let g = a(2);
        let x = g.from_word(&[0, 2, 1]).unwrap();
        let doc = g.to_document(&x);
        let text = serde_json::to_string(&doc).unwrap();
        let back: ElementDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(g.from_document(&back).unwrap(), x);
        let bad = ElementDocument {
            mu: Some(vec![5, 5]),
            word: vec![0],
        };
        assert!(g.from_document(&bad).is_err());
    }

    #[test]
    fn s0_acts_on_alpha0_by_negation() {
        for (t, r) in [("A", 2), ("C", 2), ("G", 2)] {
            let g = AffineWeylGroup::of_type(t, r).unwrap();
            let a0 = g.simple_affine_root(0);
            let img = g.act_root(&g.simple(0), a0);
            assert_eq!(img.root, g.finite().negate_root(a0.root));
            assert_eq!(img.k, -1);
        }
    }
}
