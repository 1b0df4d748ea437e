//! Exact Chern-class calculus for the rational Chow rings of the moduli
//! stacks of smooth and nodal plane curves of degree `d`.
//!
//! The crate is layered bottom-up: [`scalars`] (ℚ and ℚ[d]), [`mpoly`]
//! (weighted polynomials), [`groebner`], [`symmetric`], [`chow`] (the
//! equivariant Chow ring of the plane), [`theorems`] (relation ideals,
//! presentations, tautological pullbacks) and [`dsl`], a small expression
//! language over all of the above.

pub mod chow;
pub mod dsl;
pub mod groebner;
pub mod mpoly;
pub mod scalars;
pub mod symmetric;
pub mod theorems;

pub use chow::ChowClass;
pub use groebner::{GroebnerBasis, IdealBasis, PresentationReport, RingPresentation};
pub use mpoly::{MPoly, Monomial, Var};
pub use scalars::{Coeff, Rational, Scalar, UniPoly};
pub use symmetric::SymDecomposition;
