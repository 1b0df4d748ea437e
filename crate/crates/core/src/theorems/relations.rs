use crate::chow::{euler_dual_standard_twist, nodal_divisor_class, ChowClass};
use crate::groebner::IdealBasis;
use crate::mpoly::MPoly;
use crate::scalars::{Coeff, Rational};

use super::{d_rat, TheoremError};

/// `r(x) = ∫ x · e(O(d-1) ⊗ V^∨)`: pushforward of `x` times the class of the
/// singular-point incidence locus.
pub fn r_smooth_class<C: Coeff>(x: &ChowClass<C>, d: &C) -> MPoly<C> {
    let k = d.clone() - C::one();
    x.mul(&euler_dual_standard_twist(&k)).pushforward()
}

/// `r(h^y)` for the smooth discriminant.
pub fn r_smooth<C: Coeff>(y: u32, d: &C) -> MPoly<C> {
    r_smooth_class(&ChowClass::h_power(y), d)
}

/// `r(β_0y)` for the nodal discriminant: the incidence class is cut further
/// by the divisor `(2d - 6) h - 2 c1` where the Hessian degenerates.
pub fn r_nodal<C: Coeff>(y: u32, d: &C) -> MPoly<C> {
    let k = d.clone() - C::one();
    ChowClass::h_power(y)
        .mul(&nodal_divisor_class(d))
        .mul(&euler_dual_standard_twist(&k))
        .pushforward()
}

/// Module generator `β_xy = α^x · h^y` of the Chow group of the conic
/// bundle over the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NodalGenerator {
    x: u8,
    y: u8,
}

impl NodalGenerator {
    pub fn new(x: u8, y: u8) -> Result<Self, TheoremError> {
        if x > 1 || y > 2 {
            return Err(TheoremError::InvalidGenerator { x, y });
        }
        Ok(NodalGenerator { x, y })
    }

    pub fn all() -> impl Iterator<Item = NodalGenerator> {
        (0..2).flat_map(|x| (0..3).map(move |y| NodalGenerator { x, y }))
    }

    pub fn x(self) -> u8 {
        self.x
    }

    pub fn y(self) -> u8 {
        self.y
    }
}

/// Image of a generator; the `α`-multiples push forward to zero.
pub fn r_generator<C: Coeff>(g: NodalGenerator, d: &C) -> MPoly<C> {
    if g.x == 1 {
        MPoly::zero()
    } else {
        r_nodal(g.y as u32, d)
    }
}

/// `r(β02) = -c1 r(β01) - c2 r(β00) + 2 d^2 (d-2)^2 c1 c3`.
pub fn nodal_syzygy_check<C: Coeff>(d: &C) -> bool {
    let c1 = MPoly::var(crate::mpoly::Var::C1);
    let c2 = MPoly::var(crate::mpoly::Var::C2);
    let c3 = MPoly::var(crate::mpoly::Var::C3);
    let dm2 = d.clone() - C::from_i64(2);
    let k = C::from_i64(2) * d.clone() * d.clone() * dm2.clone() * dm2;
    let rhs = &(&(-&(&c1 * &r_nodal(1, d))) - &(&c2 * &r_nodal(0, d))) + &(&c1 * &c3).scale(&k);
    r_nodal(2, d) == rhs
}

/// `ε_d^* δ`, the class of the locus of singular curves.
pub fn delta_pullback<C: Coeff>(d: &C) -> MPoly<C> {
    r_smooth(0, d)
}

pub fn smooth_relations(d: u64) -> IdealBasis {
    let d = d_rat(d);
    IdealBasis::new((0..3).map(|y| r_smooth::<Rational>(y, &d))).expect("weighted-homogeneous Chern polynomials")
}

/// `(r(β00), r(β01), r(β02))`; the `β1y` images vanish.
pub fn nodal_relations(d: u64) -> IdealBasis {
    let d = d_rat(d);
    IdealBasis::new(NodalGenerator::all().map(|g| r_generator::<Rational>(g, &d)))
        .expect("weighted-homogeneous Chern polynomials")
}

/// The relation polynomials in the closed forms they are published in,
/// expanded from their factored shape. Used as the reference the computed
/// pushforwards are held against.
pub mod published {
    use crate::mpoly::{MPoly, Monomial};
    use crate::scalars::{int, UniPoly};

    /// `k · ∏ factors`, each factor given by descending integer coefficients.
    fn fac(k: i64, factors: &[&[i64]]) -> UniPoly {
        factors
            .iter()
            .fold(UniPoly::constant(int(k)), |acc, f| acc * UniPoly::from_descending(f))
    }

    const D: &[i64] = &[1, 0];
    const D1: &[i64] = &[1, -1];
    const D2: &[i64] = &[1, -2];
    const D3: &[i64] = &[1, -3];

    fn c(a: u32, b: u32, cc: u32) -> Monomial {
        Monomial::chern(a, b, cc)
    }

    pub fn r_smooth(y: u32) -> MPoly<UniPoly> {
        let terms = match y {
            0 => vec![(fac(-1, &[D, D1, D1]), c(1, 0, 0))],
            1 => vec![(fac(-1, &[D, D1, D2]), c(0, 1, 0)), (fac(1, &[D, D1, D1]), c(2, 0, 0))],
            2 => vec![
                (fac(-1, &[D, &[1, -3, 3]]), c(0, 0, 1)),
                (fac(1, &[D, D1, &[2, -3]]), c(1, 1, 0)),
                (fac(-1, &[D, D1, D1]), c(3, 0, 0)),
            ],
            _ => panic!("published formulas cover r(1), r(h), r(h^2) only"),
        };
        MPoly::from_terms(terms)
    }

    pub fn r_nodal(y: u32) -> MPoly<UniPoly> {
        let terms = match y {
            0 => vec![
                (fac(-2, &[D, D1, D2, D3]), c(0, 1, 0)),
                (fac(2, &[D, D1, D1, D2]), c(2, 0, 0)),
            ],
            1 => vec![
                (fac(-2, &[D, D3, &[1, -3, 3]]), c(0, 0, 1)),
                (fac(2, &[D, D1, &[2, -8, 7]]), c(1, 1, 0)),
                (fac(-2, &[D, D1, D1, D2]), c(3, 0, 0)),
            ],
            2 => vec![
                (fac(2, &[D, &[2, -10, 16, -9]]), c(1, 0, 1)),
                (fac(2, &[D, D1, D1, D2]), c(4, 0, 0)),
                (fac(2, &[D, D1, D2, D3]), c(0, 2, 0)),
                (fac(-2, &[D, D1, &[3, -11, 9]]), c(2, 1, 0)),
            ],
            _ => panic!("published formulas cover r(beta_00), r(beta_01), r(beta_02) only"),
        };
        MPoly::from_terms(terms)
    }
}
