use serde::Serialize;

use crate::groebner::PresentationReport;
use crate::mpoly::MPoly;
use crate::scalars::UniPoly;

use super::presentation::{nodal_presentation, nodal_truncation, smooth_presentation, TruncationCheck};
use super::relations::{delta_pullback, nodal_syzygy_check, published, r_nodal, r_smooth};
use super::tautological::{lambda_classes, LambdaChecks};
use super::{check_degree, d_rat, TheoremError};

/// Identities in `ℚ[d][c1,c2,c3]`, independent of any particular degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenericRecord {
    pub smooth_formulas: bool,
    pub nodal_formulas: bool,
    pub syzygy: bool,
    pub delta: bool,
    pub pass: bool,
}

pub fn generic_identities() -> GenericRecord {
    let d = UniPoly::d();
    let smooth_formulas = (0..3).all(|y| r_smooth(y, &d) == published::r_smooth(y));
    let nodal_formulas = (0..3).all(|y| r_nodal(y, &d) == published::r_nodal(y));
    let syzygy = nodal_syzygy_check(&d);
    let delta = delta_pullback(&d) == published::r_smooth(0);
    GenericRecord {
        smooth_formulas,
        nodal_formulas,
        syzygy,
        delta,
        pass: smooth_formulas && nodal_formulas && syzygy && delta,
    }
}

/// Every check that applies at one degree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeRecord {
    pub d: u64,
    pub coherence: bool,
    pub syzygy: bool,
    pub smooth: PresentationReport,
    pub nodal: PresentationReport,
    pub truncation: Option<TruncationCheck>,
    pub lambda: LambdaChecks,
    pub pass: bool,
}

/// The generic formulas specialised at `d` agree with the computation at `d`.
fn coherent(d: u64) -> bool {
    let (g, q) = (UniPoly::d(), d_rat(d));
    let same = |generic: MPoly<UniPoly>, specific| generic.eval_at(&q) == specific;
    (0..3).all(|y| same(r_smooth(y, &g), r_smooth(y, &q)) && same(r_nodal(y, &g), r_nodal(y, &q)))
        && same(delta_pullback(&g), delta_pullback(&q))
}

pub fn verify_degree(d: u64) -> Result<DegreeRecord, TheoremError> {
    check_degree(d)?;
    let coherence = coherent(d);
    let syzygy = nodal_syzygy_check(&d_rat(d));
    let smooth = smooth_presentation(d)?;
    let nodal = nodal_presentation(d)?;
    let truncation = if d >= 4 { Some(nodal_truncation(d)?) } else { None };
    let lambda = lambda_classes(d)?.checks;
    let pass = coherence
        && syzygy
        && smooth.pass
        && nodal.pass
        && truncation.as_ref().is_none_or(TruncationCheck::pass)
        && lambda.pass();
    Ok(DegreeRecord {
        d,
        coherence,
        syzygy,
        smooth,
        nodal,
        truncation,
        lambda,
        pass,
    })
}
