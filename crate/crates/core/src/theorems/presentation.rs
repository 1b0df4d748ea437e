use serde::Serialize;

use crate::groebner::{
    buchberger, normal_form, verify_presentation, IdealBasis, PresentationReport, QPoly, RingPresentation,
};
use crate::mpoly::{Monomial, Var};
use crate::scalars::int;

use super::relations::{nodal_relations, smooth_relations};
use super::{check_degree, TheoremError};

/// Graded dimensions are compared in weights `0..=DIM_BOUND`.
pub const DIM_BOUND: u32 = 8;

/// Number of monomials of each weight `0..=up_to` in a free polynomial ring
/// on generators of the given weights.
pub fn free_dims(weights: &[u32], up_to: u32) -> Vec<usize> {
    let mut dims = vec![0usize; up_to as usize + 1];
    dims[0] = 1;
    for &w in weights {
        for n in w as usize..dims.len() {
            dims[n] += dims[n - w as usize];
        }
    }
    dims
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SmoothRegime {
    Line,
    Conic,
    Higher,
}

impl SmoothRegime {
    pub fn of(d: u64) -> Self {
        match d {
            1 => SmoothRegime::Line,
            2 => SmoothRegime::Conic,
            _ => SmoothRegime::Higher,
        }
    }

    pub fn quotient(self) -> &'static str {
        match self {
            SmoothRegime::Line => "Q[c1,c2]",
            SmoothRegime::Conic => "Q[c2]",
            SmoothRegime::Higher => "Q",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodalRegime {
    Line,
    Conic,
    Cubic,
    Higher,
}

impl NodalRegime {
    pub fn of(d: u64) -> Self {
        match d {
            1 => NodalRegime::Line,
            2 => NodalRegime::Conic,
            3 => NodalRegime::Cubic,
            _ => NodalRegime::Higher,
        }
    }

    pub fn quotient(self) -> &'static str {
        match self {
            NodalRegime::Line | NodalRegime::Conic => "Q[c1,c2]",
            NodalRegime::Cubic => "Q[c1,c2,c3]/(c1^2,c1*c2,c1*c3)",
            NodalRegime::Higher => "Q[c1]/(c1^4)",
        }
    }
}

fn poly(terms: &[(i64, [u32; 3])]) -> QPoly {
    QPoly::from_int_terms(
        &terms
            .iter()
            .map(|&(k, [a, b, c])| (k, Monomial::chern(a, b, c)))
            .collect::<Vec<_>>(),
    )
}

fn ideal(gens: Vec<QPoly>) -> IdealBasis {
    IdealBasis::new(gens).expect("target generators are homogeneous Chern polynomials")
}

pub fn smooth_target(d: u64) -> Result<RingPresentation, TheoremError> {
    check_degree(d)?;
    let (target, dims) = match SmoothRegime::of(d) {
        SmoothRegime::Line => (ideal(vec![poly(&[(1, [0, 0, 1])])]), free_dims(&[1, 2], DIM_BOUND)),
        SmoothRegime::Conic => (
            ideal(vec![poly(&[(1, [1, 0, 0])]), poly(&[(1, [0, 0, 1])])]),
            free_dims(&[2], DIM_BOUND),
        ),
        SmoothRegime::Higher => (
            ideal(vec![
                poly(&[(1, [1, 0, 0])]),
                poly(&[(1, [0, 1, 0])]),
                poly(&[(1, [0, 0, 1])]),
            ]),
            free_dims(&[], DIM_BOUND),
        ),
    };
    Ok(RingPresentation {
        target,
        expected_dims: dims,
    })
}

pub fn nodal_target(d: u64) -> Result<RingPresentation, TheoremError> {
    check_degree(d)?;
    let (target, dims) = match NodalRegime::of(d) {
        NodalRegime::Line => (ideal(vec![poly(&[(1, [0, 0, 1])])]), free_dims(&[1, 2], DIM_BOUND)),
        NodalRegime::Conic => (
            ideal(vec![poly(&[(1, [0, 0, 1]), (-1, [1, 1, 0])])]),
            free_dims(&[1, 2], DIM_BOUND),
        ),
        NodalRegime::Cubic => {
            // c2^b c3^c together with the lone c1
            let mut dims = free_dims(&[2, 3], DIM_BOUND);
            dims[1] += 1;
            (
                ideal(vec![
                    poly(&[(1, [2, 0, 0])]),
                    poly(&[(1, [1, 1, 0])]),
                    poly(&[(1, [1, 0, 1])]),
                ]),
                dims,
            )
        }
        NodalRegime::Higher => {
            let d = int(d as i64);
            let one = int(1);
            let three = int(3);
            let dm1 = &d - &one;
            let dm3 = &d - &three;
            let q3 = &(&d * &d) - &(&three * &d) + three.clone();
            let q1 = &(&d * &d) - &(&three * &d) + one.clone();
            let c = |a, b, cc| Monomial::chern(a, b, cc);
            let first = QPoly::from_terms([(dm3.clone(), c(0, 1, 0)), (-dm1.clone(), c(2, 0, 0))]);
            let second = QPoly::from_terms([
                (&(&dm3 * &dm3) * &q3, c(0, 0, 1)),
                (-(&(&dm1 * &dm1) * &q1), c(3, 0, 0)),
            ]);
            let dims = (0..=DIM_BOUND).map(|w| usize::from(w <= 3)).collect();
            (ideal(vec![first, second, poly(&[(1, [4, 0, 0])])]), dims)
        }
    };
    Ok(RingPresentation {
        target,
        expected_dims: dims,
    })
}

pub fn smooth_presentation(d: u64) -> Result<PresentationReport, TheoremError> {
    let target = smooth_target(d)?;
    Ok(verify_presentation(d, &smooth_relations(d), &target))
}

pub fn nodal_presentation(d: u64) -> Result<PresentationReport, TheoremError> {
    let target = nodal_target(d)?;
    Ok(verify_presentation(d, &nodal_relations(d), &target))
}

/// Membership of `c1^4` and `c1^3` in the nodal relation ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TruncationCheck {
    pub c1_4_in_ideal: bool,
    pub c1_3_in_ideal: bool,
}

impl TruncationCheck {
    pub fn pass(&self) -> bool {
        self.c1_4_in_ideal && !self.c1_3_in_ideal
    }
}

pub fn nodal_truncation(d: u64) -> Result<TruncationCheck, TheoremError> {
    check_degree(d)?;
    let g = buchberger(&nodal_relations(d));
    let c1 = |e| QPoly::term(int(1), Monomial::power(Var::C1, e));
    Ok(TruncationCheck {
        c1_4_in_ideal: normal_form(&c1(4), &g).is_zero(),
        c1_3_in_ideal: normal_form(&c1(3), &g).is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting() {
        assert_eq!(free_dims(&[1, 2], 6), vec![1, 1, 2, 2, 3, 3, 4]);
        assert_eq!(free_dims(&[2], 4), vec![1, 0, 1, 0, 1]);
        assert_eq!(free_dims(&[], 3), vec![1, 0, 0, 0]);
        assert_eq!(free_dims(&[1, 2, 3], 6), vec![1, 1, 2, 3, 4, 5, 7]);
    }

    #[test]
    fn smooth_regimes() {
        for d in [1, 2, 3, 7] {
            let r = smooth_presentation(d).unwrap();
            assert!(r.pass, "{r:?}");
        }
        assert_eq!(
            smooth_presentation(7).unwrap().graded_dims,
            vec![1, 0, 0, 0, 0, 0, 0, 0, 0]
        );
        assert_eq!(smooth_presentation(0), Err(TheoremError::NonPositiveDegree(0)));
    }

    #[test]
    fn nodal_regimes() {
        for d in [1, 2, 3, 4, 5, 10] {
            let r = nodal_presentation(d).unwrap();
            assert!(r.pass, "{r:?}");
        }
        assert_eq!(
            nodal_presentation(3).unwrap().graded_dims,
            vec![1, 1, 1, 1, 1, 1, 2, 1, 2]
        );
        assert_eq!(
            nodal_presentation(10).unwrap().graded_dims,
            vec![1, 1, 1, 1, 0, 0, 0, 0, 0]
        );
    }

    #[test]
    fn wrong_regime_is_rejected() {
        let r = verify_presentation(3, &nodal_relations(3), &nodal_target(4).unwrap());
        assert!(!r.pass);
        let r = verify_presentation(2, &smooth_relations(2), &smooth_target(1).unwrap());
        assert!(!r.ideal_equal);
    }

    #[test]
    fn truncation() {
        for d in [4, 6, 9] {
            let t = nodal_truncation(d).unwrap();
            assert!(t.pass(), "d = {d}");
        }
        assert!(!nodal_truncation(3).unwrap().pass());
    }
}
