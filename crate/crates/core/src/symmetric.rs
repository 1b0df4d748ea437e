//! Symmetric polynomials in the Chern roots `t1, t2, t3`: conversion to the
//! elementary symmetric values `c1, c2, c3`, weight-3 monomial-symmetric
//! coordinates, and truncated total Chern classes from root data.

use serde::Serialize;
use thiserror::Error;

use crate::mpoly::{MPoly, Monomial, Var};
use crate::scalars::Coeff;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetricError {
    #[error("polynomial involves variables other than t1, t2, t3")]
    NotRootPolynomial,
    #[error("polynomial is not symmetric in t1, t2, t3")]
    NotSymmetric,
    #[error("polynomial is not homogeneous of weight 3")]
    NotWeightThree,
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn permute(m: &Monomial, perm: &[usize; 3]) -> Monomial {
    let mut exps = *m.exps();
    for (i, &j) in perm.iter().enumerate() {
        exps[Var::ROOTS[j].index()] = m.exp(Var::ROOTS[i]);
    }
    Monomial::from_exps(exps)
}

/// Invariance under every permutation of `t1, t2, t3`.
pub fn is_symmetric<C: Coeff>(p: &MPoly<C>) -> bool {
    PERMUTATIONS[1..]
        .iter()
        .all(|perm| p.terms().all(|(m, c)| p.coeff(&permute(m, perm)) == *c))
}

/// `e1 = t1 + t2 + t3`, `e2`, `e3` as root polynomials.
pub fn elementary<C: Coeff>() -> [MPoly<C>; 3] {
    let t = Var::ROOTS.map(MPoly::<C>::var);
    [
        &(&t[0] + &t[1]) + &t[2],
        &(&(&t[0] * &t[1]) + &(&t[0] * &t[2])) + &(&t[1] * &t[2]),
        &(&t[0] * &t[1]) * &t[2],
    ]
}

/// Express a symmetric polynomial in `t1, t2, t3` through `c1, c2, c3`,
/// where `c_i` stands for the `i`-th elementary symmetric polynomial.
///
/// Uses the leading-term reduction: the lex-largest monomial
/// `t1^a t2^b t3^c` (necessarily `a ≥ b ≥ c`) is cancelled by
/// `e1^(a-b) e2^(b-c) e3^c`.
pub fn sym_to_chern<C: Coeff>(p: &MPoly<C>) -> Result<MPoly<C>, SymmetricError> {
    if !p.uses_only(&Var::ROOTS) {
        return Err(SymmetricError::NotRootPolynomial);
    }
    if !is_symmetric(p) {
        return Err(SymmetricError::NotSymmetric);
    }
    let e = elementary::<C>();
    let mut rest = p.clone();
    let mut out = MPoly::zero();
    while let Some((m, c)) = rest
        .terms()
        .max_by_key(|(m, _)| Var::ROOTS.map(|v| m.exp(v)))
        .map(|(m, c)| (m.clone(), c.clone()))
    {
        let [a, b, cc] = Var::ROOTS.map(|v| m.exp(v));
        debug_assert!(a >= b && b >= cc);
        let cancel = &(&e[0].pow(a - b) * &e[1].pow(b - cc)) * &e[2].pow(cc);
        rest = &rest - &cancel.scale(&c);
        out = &out + &MPoly::term(c, Monomial::chern(a - b, b - cc, cc));
    }
    Ok(out)
}

/// Coordinates of a weight-3 symmetric polynomial in the monomial-symmetric
/// basis `m3 = Σ t_i^3`, `m111 = t1 t2 t3`, `m21 = Σ_{i≠j} t_i^2 t_j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymDecomposition<C> {
    pub a: C,
    pub b: C,
    pub c: C,
}

/// `m3`, `m111`, `m21` as root polynomials.
pub fn monomial_symmetric<C: Coeff>() -> [MPoly<C>; 3] {
    let m3 = MPoly::from_int_terms(&[
        (1, Monomial::roots(3, 0, 0)),
        (1, Monomial::roots(0, 3, 0)),
        (1, Monomial::roots(0, 0, 3)),
    ]);
    let m111 = MPoly::from_int_terms(&[(1, Monomial::roots(1, 1, 1))]);
    let mut m21 = MPoly::zero();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut e = [0u32; 3];
                e[i] = 2;
                e[j] = 1;
                m21 = &m21 + &MPoly::term(C::one(), Monomial::roots(e[0], e[1], e[2]));
            }
        }
    }
    [m3, m111, m21]
}

impl<C: Coeff> SymDecomposition<C> {
    pub fn reconstruct(&self) -> MPoly<C> {
        let [m3, m111, m21] = monomial_symmetric::<C>();
        &(&m3.scale(&self.a) + &m111.scale(&self.b)) + &m21.scale(&self.c)
    }

    /// The same class written in `c1, c2, c3` via
    /// `m3 = c1^3 - 3c1c2 + 3c3`, `m111 = c3`, `m21 = c1c2 - 3c3`.
    pub fn to_chern(&self) -> MPoly<C> {
        let m3 = MPoly::from_int_terms(&[
            (1, Monomial::chern(3, 0, 0)),
            (-3, Monomial::chern(1, 1, 0)),
            (3, Monomial::chern(0, 0, 1)),
        ]);
        let m111 = MPoly::var(Var::C3);
        let m21 = MPoly::from_int_terms(&[(1, Monomial::chern(1, 1, 0)), (-3, Monomial::chern(0, 0, 1))]);
        &(&m3.scale(&self.a) + &m111.scale(&self.b)) + &m21.scale(&self.c)
    }
}

pub fn decompose_weight3<C: Coeff>(p: &MPoly<C>) -> Result<SymDecomposition<C>, SymmetricError> {
    if !p.uses_only(&Var::ROOTS) {
        return Err(SymmetricError::NotRootPolynomial);
    }
    if !p.is_zero() && p.homogeneous_weight() != Some(3) {
        return Err(SymmetricError::NotWeightThree);
    }
    if !is_symmetric(p) {
        return Err(SymmetricError::NotSymmetric);
    }
    Ok(SymDecomposition {
        a: p.coeff(&Monomial::roots(3, 0, 0)),
        b: p.coeff(&Monomial::roots(1, 1, 1)),
        c: p.coeff(&Monomial::roots(2, 1, 0)),
    })
}

/// `∏ (1 - x t1 - y t2 - z t3)` over the given `(x, y, z)`, truncated above
/// `max_weight`.
pub fn chern_roots_product<C: Coeff>(forms: &[[C; 3]], max_weight: u32) -> MPoly<C> {
    let mut acc = MPoly::one().truncate(max_weight);
    for [x, y, z] in forms {
        let factor = MPoly::from_terms([
            (C::one(), Monomial::one()),
            (-x.clone(), Monomial::var(Var::T1)),
            (-y.clone(), Monomial::var(Var::T2)),
            (-z.clone(), Monomial::var(Var::T3)),
        ]);
        acc = acc.mul_truncated(&factor, max_weight);
    }
    acc
}
