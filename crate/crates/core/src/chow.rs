//! The equivariant Chow ring of the projective plane,
//! `ℚ[c1,c2,c3,h] / (h^3 + c1 h^2 + c2 h + c3)`, and integration along it.

use std::fmt;

use thiserror::Error;

use crate::mpoly::{MPoly, Monomial, Var};
use crate::scalars::Coeff;
use crate::symmetric::{sym_to_chern, SymmetricError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("Chern root variables cannot appear in a class on the projective plane")]
    RootVariable,
}

/// A class in `h`-degree at most 2 with coefficients in `ℚ[c1,c2,c3]`
/// (or `ℚ[d][c1,c2,c3]`).
#[derive(Clone, PartialEq)]
pub struct ChowClass<C> {
    value: MPoly<C>,
}

/// `h^3 ↦ -(c1 h^2 + c2 h + c3)`, applied until the `h`-degree is at most 2.
pub fn reduce<C: Coeff>(p: &MPoly<C>) -> Result<ChowClass<C>, ChowError> {
    if !p.uses_only(&[Var::C1, Var::C2, Var::C3, Var::H]) {
        return Err(ChowError::RootVariable);
    }
    let tail = -&MPoly::from_int_terms(&[
        (1, Monomial::from_exps([1, 0, 0, 2, 0, 0, 0])),
        (1, Monomial::from_exps([0, 1, 0, 1, 0, 0, 0])),
        (1, Monomial::var(Var::C3)),
    ]);
    let mut value = p.clone();
    let mut top = value.degree_in(Var::H);
    while top >= 3 {
        let coeff = value.coefficient_in(Var::H, top);
        let lowered = Monomial::power(Var::H, top - 3);
        value = &value - &coeff.mul_term(&C::one(), &Monomial::power(Var::H, top));
        value = &value + &(&coeff * &tail).mul_term(&C::one(), &lowered);
        top -= 1;
    }
    Ok(ChowClass { value })
}

impl<C: Coeff> ChowClass<C> {
    pub fn value(&self) -> &MPoly<C> {
        &self.value
    }

    pub fn into_value(self) -> MPoly<C> {
        self.value
    }

    /// Integration along the plane: the `h^2` coefficient.
    pub fn pushforward(&self) -> MPoly<C> {
        self.value.coefficient_in(Var::H, 2)
    }

    pub fn h() -> Self {
        ChowClass {
            value: MPoly::var(Var::H),
        }
    }

    pub fn h_power(y: u32) -> Self {
        reduce(&MPoly::term(C::one(), Monomial::power(Var::H, y))).expect("h only")
    }

    pub fn mul(&self, other: &Self) -> Self {
        reduce(&(&self.value * &other.value)).expect("no roots")
    }

    pub fn add(&self, other: &Self) -> Self {
        ChowClass {
            value: &self.value + &other.value,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        ChowClass {
            value: &self.value - &other.value,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(reduce(&MPoly::one()).unwrap(), |acc, _| acc.mul(self))
    }
}

pub fn pushforward<C: Coeff>(x: &ChowClass<C>) -> MPoly<C> {
    x.pushforward()
}

impl<C: Coeff> fmt::Display for ChowClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

impl<C: Coeff> fmt::Debug for ChowClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChowClass({})", self.value)
    }
}

/// Top Chern class of `O(k) ⊗ V^∨`, from its roots `k h - t_i`.
pub fn euler_dual_standard_twist<C: Coeff>(k: &C) -> ChowClass<C> {
    let kh = MPoly::term(k.clone(), Monomial::var(Var::H));
    let product = Var::ROOTS
        .iter()
        .fold(MPoly::one(), |acc, &t| &acc * &(&kh - &MPoly::var(t)));
    let mut value = MPoly::zero();
    for j in 0..=3 {
        let in_roots = product.coefficient_in(Var::H, j);
        let in_chern = sym_to_chern(&in_roots).unwrap_or_else(|e: SymmetricError| unreachable!("{e}"));
        value = &value + &in_chern.mul_term(&C::one(), &Monomial::power(Var::H, j));
    }
    reduce(&value).expect("c and h only")
}

/// First Chern class of the canonical bundle of the plane, `-3h - c1`.
pub fn canonical_class<C: Coeff>() -> ChowClass<C> {
    ChowClass {
        value: MPoly::from_int_terms(&[(-3, Monomial::var(Var::H)), (-1, Monomial::var(Var::C1))]),
    }
}

/// First Chern class of `K^2(2d)`, i.e. `(2d - 6) h - 2 c1`.
pub fn nodal_divisor_class<C: Coeff>(d: &C) -> ChowClass<C> {
    let dh = MPoly::term(d.clone(), Monomial::var(Var::H));
    let twisted = &dh + canonical_class::<C>().value();
    ChowClass {
        value: twisted.scale(&C::from_i64(2)),
    }
}
