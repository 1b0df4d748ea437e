//! Relation ideals of the smooth and nodal discriminants, the resulting
//! Chow ring presentations, and pullbacks of the tautological classes
//! `δ, λ1, λ2, λ3`.
//!
//! Most functions come in two flavours through the `Coeff` parameter:
//! over `UniPoly` they compute identities valid for every `d`, over
//! `Rational` they compute at one specific degree.

mod audit;
mod presentation;
mod relations;
mod table;
mod tautological;

pub use audit::{generic_identities, verify_degree, DegreeRecord, GenericRecord};
pub use presentation::{
    free_dims, nodal_presentation, nodal_target, nodal_truncation, smooth_presentation, smooth_target, NodalRegime,
    SmoothRegime, TruncationCheck, DIM_BOUND,
};
pub use relations::{
    delta_pullback, nodal_relations, nodal_syzygy_check, published, r_generator, r_nodal, r_smooth, r_smooth_class,
    smooth_relations, NodalGenerator,
};
pub use table::{
    abc_closed_forms, abc_csv, abc_row, abc_table, published_abc, AbcRow, ClosedForms, Extrapolation,
    INTERPOLATION_DEGREE,
};
pub use tautological::{
    binomial3, compositions, genus, hodge_product, lambda3_closed_form, lambda_classes, mumford_check, LambdaChecks,
    TautologicalReport,
};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serializer;
use thiserror::Error;

use crate::scalars::{Rational, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("degree must be a positive integer, got {0}")]
    NonPositiveDegree(u64),
    #[error("the Mumford relation is only asserted for d >= 4, got d = {0}")]
    MumfordRange(u64),
    #[error("table range must satisfy 4 <= from <= to, got {from}..{to}")]
    TableRange { from: u64, to: u64 },
    #[error("invalid nodal generator beta_{x}{y}")]
    InvalidGenerator { x: u8, y: u8 },
    #[error(transparent)]
    Interpolation(#[from] ScalarError),
}

pub(crate) fn d_rat(d: u64) -> Rational {
    Rational::from_integer(BigInt::from(d))
}

pub(crate) fn check_degree(d: u64) -> Result<(), TheoremError> {
    if d == 0 {
        Err(TheoremError::NonPositiveDegree(d))
    } else {
        Ok(())
    }
}

/// Integers as JSON numbers when they fit in `i64`, otherwise as strings;
/// non-integers as `"p/q"` strings.
pub(crate) fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    match (r.is_integer(), r.to_integer().to_i64()) {
        (true, Some(n)) => s.serialize_i64(n),
        _ => s.collect_str(r),
    }
}

pub(crate) fn serialize_abc<S: Serializer>(abc: &Option<[Rational; 3]>, s: S) -> Result<S::Ok, S::Error> {
    struct Json<'a>(&'a Rational);
    impl serde::Serialize for Json<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serialize_rational(self.0, s)
        }
    }
    match abc {
        None => s.serialize_none(),
        Some(v) => s.collect_seq(v.iter().map(Json)),
    }
}
