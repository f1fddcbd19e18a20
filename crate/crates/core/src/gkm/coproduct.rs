//! Pointwise verification of the coproduct formulas
//! `psi^w = sum sign theta(psi^{w1}) cup eta(psi^{w2})` over factorizations
//! with finite right factor.

use serde::{Deserialize, Serialize};

use crate::affweyl::{AffineWeylElement, FactorizationMode};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::theory::{Theory, TheoryKind};

use super::{point_label, Localization};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    StructureSheaf,
    IdealSheaf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of a verification, serialized as
/// `{identity, type, rank, radius, status, counterexample?, checks}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub identity: String,
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub radius: usize,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub checks: usize,
}

impl Report {
    pub fn new<T: Theory>(identity: impl Into<String>, loc: &Localization<'_, T>) -> Self {
        Report {
            identity: identity.into(),
            cartan_type: loc.group().root_system().label().to_string(),
            rank: loc.rank(),
            radius: loc.radius(),
            status: Status::Pass,
            counterexample: None,
            checks: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Records one check; the first failure is kept.
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.status == Status::Pass {
            self.status = Status::Fail;
            self.counterexample = Some(what());
        }
    }

    /// Folds another report into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        if !other.passed() && self.passed() {
            self.status = Status::Fail;
            self.counterexample = Some(format!("{}: {}", other.identity, other.counterexample.unwrap_or_default()));
        }
    }
}

impl<'g, T: Theory> Localization<'g, T> {
    /// `psibar^v(z)`, the ideal-sheaf class at a point of the table.
    pub fn ideal_value(&self, v: &AffineWeylElement, z: &AffineWeylElement) -> Result<T::Coeff> {
        let lv = self.length(v);
        let mut out = T::Coeff::zero();
        for (x, c) in self.expansion(z)?.terms() {
            if self.group().bruhat_leq(v, x) {
                let lx = self.length(x);
                out = if (lx - lv).is_multiple_of(2) { out.add_ref(c) } else { out.sub_ref(c) };
            }
        }
        Ok(out)
    }

    /// Points `t_mu v` of the table whose translation `t_mu` is also in the
    /// table: exactly the points where both sides can be evaluated.
    pub fn usable_points(&self) -> Vec<&AffineWeylElement> {
        let g = self.group();
        self.ball(self.radius())
            .expect("own radius")
            .iter()
            .filter(|x| self.length(&g.translation_part(x)) <= self.radius())
            .collect()
    }

    pub fn verify_coproduct(&self, w: &AffineWeylElement, variant: Variant) -> Result<Report> {
        let g = self.group();
        let lw = self.length(w);
        if lw > self.radius() {
            return Err(Error::InsufficientRadius {
                needed: lw,
                available: self.radius(),
            });
        }
        let ideal = variant == Variant::IdealSheaf && T::KIND == TheoryKind::K;
        let mode = match T::KIND {
            TheoryKind::K => FactorizationMode::Demazure,
            TheoryKind::H => FactorizationMode::LengthAdditive,
        };
        let name = match (T::KIND, ideal) {
            (TheoryKind::K, false) => "affine Schubert coproduct (K, structure sheaf)",
            (TheoryKind::K, true) => "affine Schubert coproduct (K, ideal sheaf)",
            (TheoryKind::H, _) => "affine Schubert coproduct (H)",
        };
        let mut report = Report::new(format!("{name} for {}", g.display(w)), self);
        let factors = g.factorizations(w, mode, true);
        let value = |v: &AffineWeylElement, x: &AffineWeylElement| -> Result<T::Coeff> {
            if ideal {
                self.ideal_value(v, x)
            } else {
                self.value(v, x)
            }
        };
        for x in self.usable_points() {
            let t = g.translation_part(x);
            let v = g.finite_part(x);
            let lhs = value(w, x)?;
            let mut rhs = T::Coeff::zero();
            for f in &factors {
                let term = value(&f.left, &t)?.mul_ref(&value(&f.right, &v)?);
                rhs = if f.sign > 0 || ideal { rhs.add_ref(&term) } else { rhs.sub_ref(&term) };
            }
            report.check(lhs == rhs, || format!("at {} ({}): {} != {}", g.display(x), point_label(x), lhs, rhs));
            if !report.passed() {
                break;
            }
        }
        Ok(report)
    }
}
