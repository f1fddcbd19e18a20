//! Exact small-torus affine nilHecke rings, truncated localization models of
//! the equivariant K-theory and cohomology of affine flag varieties, and the
//! coproduct formulas for affine Schubert classes.
//!
//! All arithmetic is over the integers. Quotients that the theory guarantees to
//! be exact are computed by [`coeff::Coefficient::exact_div`], which fails loudly
//! instead of rounding.

pub mod affweyl;
pub mod cartan;
pub mod coeff;
pub mod error;
pub mod gkm;
pub mod nilhecke;
pub mod theory;
pub mod typea;

pub use affweyl::{AffineRoot, AffineWeylElement, AffineWeylGroup, FactorizationMode};
pub use cartan::{FiniteWeylElement, FiniteWeylGroup, RootSystem, Vector};
pub use coeff::{Coefficient, Laurent, Poly};
pub use error::{Error, Result};
pub use theory::{Cohomology, KTheory, Theory, TheoryKind};
