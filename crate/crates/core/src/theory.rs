//! The two theories share one code path and differ only in the coefficient
//! ring and in the coefficient `c_i` of the relation `s_i = 1 + c_i D_i`:
//!
//! * K-theory: `D_i = T_i`, `c_i = 1 - e^{alpha_i}`, `T_i^2 = -T_i`;
//! * cohomology: `D_i = A_i`, `c_i = -alpha_i`, `A_i^2 = 0`.
//!
//! The affine node acts at level zero: its classical root is `-theta` and its
//! reflection is `s_theta` (see [`AffineWeylGroup::node_root`]).

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use smallvec::smallvec;

use crate::affweyl::{AffineWeylElement, AffineWeylGroup};
use crate::cartan::{FiniteWeylElement, FiniteWeylGroup, RootSystem, Vector};
use crate::coeff::{Coefficient, Laurent, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoryKind {
    K,
    H,
}

impl fmt::Display for TheoryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoryKind::K => write!(f, "K"),
            TheoryKind::H => write!(f, "H"),
        }
    }
}

impl std::str::FromStr for TheoryKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "K" | "k" => Ok(TheoryKind::K),
            "H" | "h" => Ok(TheoryKind::H),
            _ => Err(format!("unknown theory {s:?}; expected K or H")),
        }
    }
}

pub trait Theory: Copy + Default + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    type Coeff: Coefficient + Hash + Serialize + DeserializeOwned;

    const KIND: TheoryKind;
    /// `D_i^2 = GENERATOR_SQUARE * D_i`.
    const GENERATOR_SQUARE: i64;

    /// `e^lambda` in K-theory, the linear form `lambda` in cohomology.
    fn weight_class(lambda: &[i32]) -> Self::Coeff;

    /// The coefficient `c` in `s_beta = 1 + c D_beta`.
    fn root_factor(beta: &[i32]) -> Self::Coeff;

    /// Action of a finite Weyl group element on coefficients.
    fn act_finite(fin: &FiniteWeylGroup, v: FiniteWeylElement, f: &Self::Coeff) -> Self::Coeff;

    /// `D_node` applied to a coefficient.
    fn demazure(g: &AffineWeylGroup, node: usize, f: &Self::Coeff) -> Self::Coeff;
}

/// Level-zero action: an affine element acts through its finite part.
pub fn level_zero_act<T: Theory>(g: &AffineWeylGroup, x: &AffineWeylElement, f: &T::Coeff) -> T::Coeff {
    T::act_finite(g.finite(), x.fin, f)
}

/// `c_node`, with the affine node read at level zero.
pub fn node_factor<T: Theory>(g: &AffineWeylGroup, node: usize) -> T::Coeff {
    T::root_factor(g.node_root_weight(node))
}

/// `s_node` acting on a coefficient.
pub fn reflect<T: Theory>(g: &AffineWeylGroup, node: usize, f: &T::Coeff) -> T::Coeff {
    T::act_finite(g.finite(), g.node_reflection(node), f)
}

pub fn one<T: Theory>(g: &AffineWeylGroup) -> T::Coeff {
    T::Coeff::one(g.rank())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KTheory;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Cohomology;

impl Theory for KTheory {
    type Coeff = Laurent;
    const KIND: TheoryKind = TheoryKind::K;
    const GENERATOR_SQUARE: i64 = -1;

    fn weight_class(lambda: &[i32]) -> Laurent {
        Laurent::monomial(lambda)
    }

    fn root_factor(beta: &[i32]) -> Laurent {
        Laurent::one_minus(beta)
    }

    fn act_finite(fin: &FiniteWeylGroup, v: FiniteWeylElement, f: &Laurent) -> Laurent {
        if v == FiniteWeylElement::IDENTITY {
            return f.clone();
        }
        f.map_exponents(|lambda| fin.act_weight(v, lambda))
    }

    fn demazure(g: &AffineWeylGroup, node: usize, f: &Laurent) -> Laurent {
        let beta = g.node_root_weight(node);
        let coroot = g.node_coroot(node);
        let mut out = std::collections::BTreeMap::new();
        for (lambda, &c) in f.terms() {
            let n = RootSystem::pair(coroot, lambda);
            let shifted = |j: i32| -> Vector { lambda.iter().zip(beta).map(|(l, b)| l + j * b).collect() };
            if n > 0 {
                for j in 1..=n {
                    *out.entry(shifted(-j)).or_insert(0) += c;
                }
            } else if n < 0 {
                for j in 0..-n {
                    *out.entry(shifted(j)).or_insert(0) -= c;
                }
            }
        }
        Laurent::from_terms(out)
    }
}

impl Cohomology {
    /// Images of the generators `w_j` under `v`.
    fn generator_images(fin: &FiniteWeylGroup, v: FiniteWeylElement) -> Vec<Poly> {
        let r = fin.rank();
        (0..r)
            .map(|j| {
                let mut e: Vector = smallvec![0; r];
                e[j] = 1;
                Poly::linear(&fin.act_weight(v, &e))
            })
            .collect()
    }
}

impl Theory for Cohomology {
    type Coeff = Poly;
    const KIND: TheoryKind = TheoryKind::H;
    const GENERATOR_SQUARE: i64 = 0;

    fn weight_class(lambda: &[i32]) -> Poly {
        Poly::linear(lambda)
    }

    fn root_factor(beta: &[i32]) -> Poly {
        Poly::linear(beta).scale(-1)
    }

    fn act_finite(fin: &FiniteWeylGroup, v: FiniteWeylElement, f: &Poly) -> Poly {
        if v == FiniteWeylElement::IDENTITY || f.is_zero() {
            return f.clone();
        }
        f.substitute(&Self::generator_images(fin, v))
    }

    fn demazure(g: &AffineWeylGroup, node: usize, f: &Poly) -> Poly {
        // A(w_j m) = <beta^vee, w_j> m + s(w_j) A(m), on monomials
        let r = g.rank();
        let beta = g.node_root_weight(node);
        let coroot = g.node_coroot(node);
        let reflected: Vec<Poly> = (0..r)
            .map(|j| {
                let mut e: Vector = smallvec![0; r];
                e[j] = 1;
                let img: Vector = e.iter().zip(beta).map(|(x, b)| x - coroot[j] * b).collect();
                Poly::linear(&img)
            })
            .collect();
        let mut memo: HashMap<Vector, Poly> = HashMap::new();
        fn on_monomial(
            e: &Vector,
            coroot: &[i32],
            reflected: &[Poly],
            memo: &mut HashMap<Vector, Poly>,
        ) -> Poly {
            let j = match e.iter().position(|&x| x > 0) {
                None => return Poly::zero(),
                Some(j) => j,
            };
            if let Some(p) = memo.get(e) {
                return p.clone();
            }
            let mut rest = e.clone();
            rest[j] -= 1;
            let mut out = Poly::monomial(&rest, coroot[j] as i64);
            let tail = on_monomial(&rest, coroot, reflected, memo);
            if !tail.is_zero() {
                out += &(&reflected[j] * &tail);
            }
            memo.insert(e.clone(), out.clone());
            out
        }
        let mut out = Poly::zero();
        for (e, &c) in f.terms() {
            let a = on_monomial(e, coroot, &reflected, &mut memo);
            out += &a.scale(c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> AffineWeylGroup {
        AffineWeylGroup::of_type("A", n).unwrap()
    }

    /// `(s f - f) / c` by exact division.
    fn by_division<T: Theory>(g: &AffineWeylGroup, node: usize, f: &T::Coeff) -> T::Coeff {
        reflect::<T>(g, node, f)
            .sub_ref(f)
            .exact_div(&node_factor::<T>(g, node))
            .unwrap()
    }

    #[test]
    fn k_operator_cases() {
        let g = a(1);
        let w1 = Laurent::monomial(&[1]);
        assert_eq!(KTheory::demazure(&g, 1, &w1), Laurent::monomial(&[-1]));
        assert!(KTheory::demazure(&g, 1, &Laurent::constant(1, 1)).is_zero());
        // at level zero the affine node sees -theta
        assert_eq!(KTheory::demazure(&g, 0, &w1), by_division::<KTheory>(&g, 0, &w1));
    }

    #[test]
    fn h_operator_on_weights() {
        let g = a(2);
        for node in g.nodes() {
            for j in 0..2 {
                let mut e = [0, 0];
                e[j] = 1;
                let got = Cohomology::demazure(&g, node, &Poly::linear(&e));
                assert_eq!(got, Poly::constant(2, g.node_coroot(node)[j] as i64));
            }
        }
    }

    #[test]
    fn operators_match_division() {
        for (letter, rank) in [("A", 2), ("C", 2), ("G", 2)] {
            let g = AffineWeylGroup::of_type(letter, rank).unwrap();
            for node in g.nodes() {
                for lambda in [[2, -1], [-3, 1], [0, 2], [1, 1]] {
                    let f = &Laurent::monomial(&lambda) + &Laurent::monomial(&[lambda[1], 1]).scale(-2);
                    assert_eq!(KTheory::demazure(&g, node, &f), by_division::<KTheory>(&g, node, &f));
                    let p = &Poly::linear(&lambda) * &Poly::linear(&[1, lambda[0]]);
                    let p = &p * &Poly::linear(&[0, 1]);
                    assert_eq!(Cohomology::demazure(&g, node, &p), by_division::<Cohomology>(&g, node, &p));
                }
            }
        }
    }

    #[test]
    fn level_zero_examples() {
        let g = a(1);
        let w1 = Laurent::monomial(&[1]);
        let t = g.translation(&[3]);
        assert_eq!(level_zero_act::<KTheory>(&g, &t, &w1), w1);
        assert_eq!(level_zero_act::<KTheory>(&g, &g.simple(1), &w1), Laurent::monomial(&[-1]));
        let g2 = a(2);
        let s0 = g2.simple(0);
        let f = Laurent::monomial(&[1, 0]);
        let expected = Laurent::monomial(&g2.finite().act_weight(g2.s_theta(), &[1, 0]));
        assert_eq!(level_zero_act::<KTheory>(&g2, &s0, &f), expected);
    }
}
