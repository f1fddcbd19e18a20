//! Integer polynomials in `x_1, ..., x_{n-1}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoly {
    /// Number of variables (`n - 1` for `S_n`).
    pub vars: usize,
    pub terms: BTreeMap<Vec<u32>, i64>,
}

impl XPoly {
    pub fn zero(vars: usize) -> Self {
        XPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        Self::monomial(vec![0; vars], 1)
    }

    pub fn monomial(exponent: Vec<u32>, c: i64) -> Self {
        let mut out = Self::zero(exponent.len());
        out.add_term(exponent, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponent: Vec<u32>, c: i64) {
        assert_eq!(exponent.len(), self.vars, "exponent length");
        if c == 0 {
            return;
        }
        let e = self.terms.entry(exponent.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn add(&self, other: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> XPoly {
        let mut out = Self::zero(self.vars);
        for (e, &x) in &self.terms {
            out.add_term(e.clone(), c * x);
        }
        out
    }

    pub fn mul(&self, other: &XPoly) -> XPoly {
        let mut out = Self::zero(self.vars);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn homogeneous_part(&self, d: u32) -> XPoly {
        let mut out = self.clone();
        out.terms.retain(|e, _| e.iter().sum::<u32>() == d);
        out
    }

    pub fn to_document(&self) -> XPolyDocument {
        XPolyDocument {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","), c))
                .collect(),
        }
    }

    pub fn from_document(doc: &XPolyDocument) -> Result<XPoly> {
        let mut out = XPoly::zero(doc.vars);
        for (k, &c) in &doc.terms {
            let e: std::result::Result<Vec<u32>, _> = if k.is_empty() {
                Ok(Vec::new())
            } else {
                k.split(',').map(|x| x.trim().parse::<u32>()).collect()
            };
            let e = e.map_err(|err| Error::Invalid(format!("bad exponent {k:?}: {err}")))?;
            if e.len() != doc.vars {
                return Err(Error::DimensionMismatch {
                    expected: doc.vars,
                    found: e.len(),
                });
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

/// `{"vars": n-1, "terms": {"2,0": c}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XPolyDocument {
    pub vars: usize,
    pub terms: BTreeMap<String, i64>,
}

/// `x1^2*x2`; empty for the constant monomial.
pub fn monomial_label(e: &[u32]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &p)| p > 0)
        .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
        .collect::<Vec<_>>()
        .join("*")
}

/// By degree, then `x1` before `x2`.
pub(crate) fn display_order(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| display_order(a, b));
        let items: Vec<(i64, String)> = keys.into_iter().map(|e| (self.terms[e], monomial_label(e))).collect();
        f.write_str(&super::join_terms(&items))
    }
}
