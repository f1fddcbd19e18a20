//! Type-A polynomial realizations of affine Schubert classes.
//!
//! Affine Schubert classes of affine `A_{n-1}` are written in
//! `Lambda / I_n (x) Z[x_1, ..., x_{n-1}]` by summing affine Stanley functions
//! against Schubert polynomials over factorizations with finite right factor;
//! the K-theoretic version uses affine stable Grothendieck functions,
//! Grothendieck polynomials, Demazure factorizations and signs.

pub mod cyclic;
pub mod polys;
pub mod symfunc;
pub mod tensor;
pub mod xpoly;

pub use symfunc::{Partition, SymBasis, SymFunc, SymFuncDocument};
pub use tensor::{NegativeTerm, TensorPoly, TensorPolyDocument};
pub use xpoly::{XPoly, XPolyDocument};

use crate::affweyl::{AffineWeylElement, AffineWeylGroup, Factorization, FactorizationMode};
use crate::error::{Error, Result};

/// Joins `(coefficient, label)` pairs as `a - 2*b + c`; an empty label is
/// the constant term.
pub(crate) fn join_terms(items: &[(i64, String)]) -> String {
    if items.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (c, label)) in items.iter().enumerate() {
        let mag = c.unsigned_abs();
        let body = match (mag, label.is_empty()) {
            (_, true) => mag.to_string(),
            (1, false) => label.clone(),
            _ => format!("{mag}*{label}"),
        };
        match (k, *c < 0) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

/// Affine `A_{n-1}` together with `n`.
pub struct TypeA {
    pub n: usize,
    group: AffineWeylGroup,
}

impl TypeA {
    pub fn new(n: usize) -> Result<Self> {
        Ok(TypeA {
            n,
            group: cyclic::affine_group(n)?,
        })
    }

    pub fn group(&self) -> &AffineWeylGroup {
        &self.group
    }

    pub fn element(&self, word: &[usize]) -> Result<AffineWeylElement> {
        self.group.from_word(word)
    }

    fn check_degree(&self, w: &AffineWeylElement, degree: u32) -> Result<()> {
        let lw = self.group.length(w);
        if (degree as usize) < lw {
            return Err(Error::Invalid(format!("degree {degree} is below the length {lw}")));
        }
        Ok(())
    }

    pub fn affine_stanley(&self, w: &AffineWeylElement, degree: u32) -> Result<SymFunc> {
        self.check_degree(w, degree)?;
        Ok(cyclic::affine_stanley_in(&self.group, self.n, w, degree))
    }

    pub fn affine_stable_grothendieck(&self, w: &AffineWeylElement, degree: u32) -> Result<SymFunc> {
        self.check_degree(w, degree)?;
        Ok(cyclic::affine_stable_grothendieck_in(&self.group, self.n, w, degree))
    }

    pub fn schubert_poly(&self, v: &AffineWeylElement) -> Result<XPoly> {
        polys::schubert_poly_in(&self.group, self.n, v)
    }

    pub fn grothendieck_poly(&self, v: &AffineWeylElement) -> Result<XPoly> {
        polys::grothendieck_poly_in(&self.group, self.n, v)
    }

    /// Factor pairs of the cohomological formula.
    pub fn schubert_factors(&self, w: &AffineWeylElement) -> Vec<Factorization> {
        self.group.factorizations(w, FactorizationMode::LengthAdditive, true)
    }

    /// Factor pairs, with signs, of the K-theoretic formula.
    pub fn grothendieck_factors(&self, w: &AffineWeylElement) -> Vec<Factorization> {
        self.group.factorizations(w, FactorizationMode::Demazure, true)
    }

    pub fn affine_schubert_poly(&self, w: &AffineWeylElement, degree: u32) -> Result<TensorPoly> {
        self.check_degree(w, degree)?;
        let mut out = TensorPoly::zero(self.n, degree);
        for f in self.schubert_factors(w) {
            out.add_product(&self.affine_stanley(&f.left, degree)?, &self.schubert_poly(&f.right)?, 1)?;
        }
        Ok(out)
    }

    pub fn affine_grothendieck_poly(&self, w: &AffineWeylElement, degree: u32) -> Result<TensorPoly> {
        self.check_degree(w, degree)?;
        let mut out = TensorPoly::zero(self.n, degree);
        for f in self.grothendieck_factors(w) {
            let left = self.affine_stable_grothendieck(&f.left, degree)?;
            out.add_product(&left, &self.grothendieck_poly(&f.right)?, f.sign)?;
        }
        Ok(out)
    }
}

pub fn affine_stanley(w: &[usize], n: usize, degree: u32) -> Result<SymFunc> {
    let a = TypeA::new(n)?;
    a.affine_stanley(&a.element(w)?, degree)
}

pub fn affine_stable_grothendieck(w: &[usize], n: usize, degree: u32) -> Result<SymFunc> {
    let a = TypeA::new(n)?;
    a.affine_stable_grothendieck(&a.element(w)?, degree)
}

pub fn schubert_poly(v: &[usize], n: usize) -> Result<XPoly> {
    let a = TypeA::new(n)?;
    a.schubert_poly(&a.element(v)?)
}

pub fn grothendieck_poly(v: &[usize], n: usize) -> Result<XPoly> {
    let a = TypeA::new(n)?;
    a.grothendieck_poly(&a.element(v)?)
}

pub fn affine_schubert_poly(w: &[usize], n: usize, degree: u32) -> Result<TensorPoly> {
    let a = TypeA::new(n)?;
    a.affine_schubert_poly(&a.element(w)?, degree)
}

pub fn affine_grothendieck_poly(w: &[usize], n: usize, degree: u32) -> Result<TensorPoly> {
    let a = TypeA::new(n)?;
    a.affine_grothendieck_poly(&a.element(w)?, degree)
}

pub fn monomial_positivity(p: &TensorPoly) -> (bool, Option<NegativeTerm>) {
    p.monomial_positivity()
}
