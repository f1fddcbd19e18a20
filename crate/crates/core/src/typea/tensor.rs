//! Elements of `Lambda / I_n (x) Z[x_1, ..., x_{n-1}]`, stored in the basis
//! `m_l (x) x^a`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::symfunc::{basis_label, Partition, SymBasis, SymFunc, SymFuncDocument};
use super::xpoly::{monomial_label, XPoly, XPolyDocument};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly {
    pub n: usize,
    /// Truncation degree of the symmetric-function factor.
    pub degree: u32,
    pub terms: BTreeMap<(Partition, Vec<u32>), i64>,
}

/// A negative coefficient found by [`TensorPoly::monomial_positivity`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeTerm {
    pub partition: Partition,
    pub exponent: Vec<u32>,
    pub coefficient: i64,
    pub label: String,
}

fn product_label(left: &str, right: &str) -> String {
    match (left.is_empty(), right.is_empty()) {
        (true, _) => right.to_string(),
        (_, true) => left.to_string(),
        _ => format!("{left}*{right}"),
    }
}

impl TensorPoly {
    pub fn zero(n: usize, degree: u32) -> Self {
        TensorPoly {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, p: Partition, e: Vec<u32>, c: i64) {
        if c == 0 || p.first().is_some_and(|&a| a as usize >= self.n) || p.iter().sum::<u32>() > self.degree {
            return;
        }
        let key = (p, e);
        let v = self.terms.entry(key.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&key);
        }
    }

    /// Adds `sign * left (x) right`, reducing the left factor modulo `I_n`.
    pub fn add_product(&mut self, left: &SymFunc, right: &XPoly, sign: i64) -> Result<()> {
        if right.vars + 1 != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n - 1,
                found: right.vars,
            });
        }
        let m = left.to_basis(SymBasis::Monomial);
        for (p, &a) in &m.terms {
            for (e, &b) in &right.terms {
                self.add_term(p.clone(), e.clone(), sign * a * b);
            }
        }
        Ok(())
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        out.degree = self.degree.min(other.degree);
        let d = out.degree;
        out.terms.retain(|(p, _), _| p.iter().sum::<u32>() <= d);
        for ((p, e), &c) in &other.terms {
            out.add_term(p.clone(), e.clone(), -c);
        }
        out
    }

    fn total_degree(p: &Partition, e: &[u32]) -> u32 {
        p.iter().sum::<u32>() + e.iter().sum::<u32>()
    }

    /// Homogeneous part of lowest total degree.
    pub fn lowest_degree_part(&self) -> TensorPoly {
        let low = self.terms.keys().map(|(p, e)| Self::total_degree(p, e)).min();
        let mut out = self.clone();
        out.terms.retain(|(p, e), _| Some(Self::total_degree(p, e)) == low);
        out
    }

    /// Left factors in `basis`, grouped by x-monomial, in display order.
    pub fn grouped(&self, basis: SymBasis) -> Vec<(Vec<u32>, SymFunc)> {
        let mut by_x: BTreeMap<Vec<u32>, SymFunc> = BTreeMap::new();
        for ((p, e), &c) in &self.terms {
            by_x.entry(e.clone())
                .or_insert_with(|| SymFunc::zero(SymBasis::Monomial, self.degree))
                .add_term(p.clone(), c);
        }
        let mut out: Vec<(Vec<u32>, SymFunc)> = by_x
            .into_iter()
            .map(|(e, f)| (e, f.to_basis(basis)))
            .filter(|(_, f)| !f.is_zero())
            .collect();
        out.sort_by(|a, b| super::xpoly::display_order(&a.0, &b.0));
        out
    }

    /// Canonical text in a fixed basis for the symmetric-function factors.
    pub fn to_text_in(&self, basis: SymBasis) -> String {
        let mut items: Vec<(u32, u32, Vec<u32>, Partition, i64, String)> = Vec::new();
        for (e, f) in self.grouped(basis) {
            let xl = monomial_label(&e);
            let xd: u32 = e.iter().sum();
            for (p, &c) in &f.terms {
                let pl = if p.is_empty() { String::new() } else { basis_label(basis, p) };
                items.push((p.iter().sum::<u32>() + xd, xd, e.clone(), p.clone(), c, product_label(&pl, &xl)));
            }
        }
        items.sort_by(|a, b| {
            a.0.cmp(&b.0)
                .then(a.1.cmp(&b.1))
                .then_with(|| super::xpoly::display_order(&a.2, &b.2))
                .then_with(|| super::symfunc::display_order(&a.3, &b.3))
        });
        let pairs: Vec<(i64, String)> = items.into_iter().map(|t| (t.4, t.5)).collect();
        super::join_terms(&pairs)
    }

    /// The basis used by [`fmt::Display`]: complete homogeneous or monomial,
    /// whichever gives fewer terms (complete homogeneous on ties).
    pub fn auto_basis(&self) -> SymBasis {
        let count = |b: SymBasis| self.grouped(b).iter().map(|(_, f)| f.terms.len()).sum::<usize>();
        if count(SymBasis::Homogeneous) <= count(SymBasis::Monomial) {
            SymBasis::Homogeneous
        } else {
            SymBasis::Monomial
        }
    }

    /// Whether every coefficient of `m_l (x) x^a` is nonnegative; otherwise
    /// the first negative term in canonical order.
    pub fn monomial_positivity(&self) -> (bool, Option<NegativeTerm>) {
        let mut negatives: Vec<(&(Partition, Vec<u32>), i64)> =
            self.terms.iter().filter(|(_, &c)| c < 0).map(|(k, &c)| (k, c)).collect();
        negatives.sort_by(|a, b| {
            let (pa, ea) = a.0;
            let (pb, eb) = b.0;
            Self::total_degree(pa, ea)
                .cmp(&Self::total_degree(pb, eb))
                .then_with(|| super::xpoly::display_order(ea, eb))
                .then_with(|| super::symfunc::display_order(pa, pb))
        });
        match negatives.first() {
            None => (true, None),
            Some(((p, e), c)) => {
                let pl = if p.is_empty() { String::new() } else { basis_label(SymBasis::Monomial, p) };
                let label = product_label(&pl, &monomial_label(e));
                (
                    false,
                    Some(NegativeTerm {
                        partition: p.clone(),
                        exponent: e.clone(),
                        coefficient: *c,
                        label: if label.is_empty() { "1".into() } else { label },
                    }),
                )
            }
        }
    }

    pub fn to_document(&self) -> TensorPolyDocument {
        TensorPolyDocument {
            n: self.n,
            degree: self.degree,
            pairs: self
                .grouped(SymBasis::Monomial)
                .into_iter()
                .map(|(e, f)| TensorPairDocument {
                    left: f.to_document(),
                    right: XPoly::monomial(e, 1).to_document(),
                })
                .collect(),
        }
    }

    pub fn from_document(doc: &TensorPolyDocument) -> Result<TensorPoly> {
        let mut out = TensorPoly::zero(doc.n, doc.degree);
        for pair in &doc.pairs {
            let left = SymFunc::from_document(&pair.left)?;
            let right = XPoly::from_document(&pair.right)?;
            out.add_product(&left, &right, 1)?;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorPairDocument {
    pub left: SymFuncDocument,
    pub right: XPolyDocument,
}

/// `{"n", "degree", "pairs": [{"left": SymFunc, "right": XPoly}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorPolyDocument {
    pub n: usize,
    pub degree: u32,
    pub pairs: Vec<TensorPairDocument>,
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text_in(self.auto_basis()))
    }
}
