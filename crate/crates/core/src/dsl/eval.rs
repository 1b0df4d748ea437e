use std::fmt;

use crate::chow::{canonical_class, euler_dual_standard_twist, nodal_divisor_class, reduce};
use crate::groebner::{buchberger, normal_form};
use crate::mpoly::{MPoly, Var};
use crate::scalars::{Coeff, Rational, UniPoly};
use crate::theorems::{nodal_relations, smooth_relations};

use super::ast::{Expr, Node, Preset, Symbol};
use super::Span;

/// Largest exponent accepted by `^`.
pub const MAX_EXPONENT: u32 = 64;

/// `d` is either the indeterminate of `ℚ[d]` or a fixed rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Generic,
    At(Rational),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Generic(MPoly<UniPoly>),
    Specific(MPoly<Rational>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueKind {
    /// A class on the plane, still involving `h`.
    Class,
    /// An element of `ℚ[c1,c2,c3]` (or `ℚ[d][c1,c2,c3]`).
    Base,
}

impl Value {
    pub fn kind(&self) -> ValueKind {
        let uses_h = match self {
            Value::Generic(p) => p.degree_in(Var::H) > 0,
            Value::Specific(p) => p.degree_in(Var::H) > 0,
        };
        if uses_h {
            ValueKind::Class
        } else {
            ValueKind::Base
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Generic(p) => p.fmt(f),
            Value::Specific(p) => p.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalErrorKind {
    NfNeedsDegree,
    DegreeMismatch { literal: u64, mode: Rational },
    NonPositiveDegree,
    NonScalarTwist,
    NotChernOnly,
    ExponentTooLarge(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub kind: EvalErrorKind,
    pub span: Span,
}

impl fmt::Display for EvalErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalErrorKind::NfNeedsDegree => f.write_str("nf needs a specific degree (use --d)"),
            EvalErrorKind::DegreeMismatch { literal, mode } => {
                write!(f, "nf degree {literal} differs from the evaluation degree {mode}")
            }
            EvalErrorKind::NonPositiveDegree => f.write_str("nf degree must be a positive integer"),
            EvalErrorKind::NonScalarTwist => f.write_str("euler_twist expects an expression in d and numbers only"),
            EvalErrorKind::NotChernOnly => {
                f.write_str("nf expects a polynomial in c1, c2, c3 (push or reduce away h first)")
            }
            EvalErrorKind::ExponentTooLarge(e) => write!(f, "exponent {e} exceeds {MAX_EXPONENT}"),
        }
    }
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error: {} at {}", self.kind, self.span)
    }
}

impl std::error::Error for EvalError {}

/// Coefficient types the evaluator can run over.
trait EvalCoeff: Coeff {
    fn normal_form(p: &MPoly<Self>, preset: Preset, d: u64) -> Result<MPoly<Self>, EvalErrorKind>;
}

impl EvalCoeff for Rational {
    fn normal_form(p: &MPoly<Self>, preset: Preset, d: u64) -> Result<MPoly<Self>, EvalErrorKind> {
        let ideal = match preset {
            Preset::Smooth => smooth_relations(d),
            Preset::Nodal => nodal_relations(d),
        };
        Ok(normal_form(p, &buchberger(&ideal)))
    }
}

impl EvalCoeff for UniPoly {
    fn normal_form(_: &MPoly<Self>, _: Preset, _: u64) -> Result<MPoly<Self>, EvalErrorKind> {
        Err(EvalErrorKind::NfNeedsDegree)
    }
}

struct Ctx<'a, C> {
    d: C,
    at: Option<&'a Rational>,
}

fn fail<T>(kind: EvalErrorKind, span: Span) -> Result<T, EvalError> {
    Err(EvalError { kind, span })
}

impl<C: EvalCoeff> Ctx<'_, C> {
    fn eval(&self, e: &Expr) -> Result<MPoly<C>, EvalError> {
        Ok(match &e.node {
            Node::Num(r) => MPoly::constant(C::from_rational(r.clone())),
            Node::Var(Symbol::D) => MPoly::constant(self.d.clone()),
            Node::Var(Symbol::C1) => MPoly::var(Var::C1),
            Node::Var(Symbol::C2) => MPoly::var(Var::C2),
            Node::Var(Symbol::C3) => MPoly::var(Var::C3),
            Node::Var(Symbol::H) => MPoly::var(Var::H),
            Node::Add(l, r) => &self.eval(l)? + &self.eval(r)?,
            Node::Sub(l, r) => &self.eval(l)? - &self.eval(r)?,
            Node::Mul(l, r) => &self.eval(l)? * &self.eval(r)?,
            Node::Pow(b, n) => {
                if *n > MAX_EXPONENT {
                    return fail(EvalErrorKind::ExponentTooLarge(*n), e.span);
                }
                self.eval(b)?.pow(*n)
            }
            Node::Push(x) => reduce(&self.eval(x)?).expect("no root variables").pushforward(),
            Node::Reduce(x) => reduce(&self.eval(x)?).expect("no root variables").into_value(),
            Node::EulerTwist(k) => {
                let k = self.eval(k)?;
                let Some(k) = k.as_constant() else {
                    return fail(EvalErrorKind::NonScalarTwist, e.span);
                };
                euler_dual_standard_twist(&k).into_value()
            }
            Node::Canonical => canonical_class::<C>().into_value(),
            Node::NodalDivisor => nodal_divisor_class(&self.d).into_value(),
            Node::Nf(x, preset, d) => {
                let Some(at) = self.at else {
                    return fail(EvalErrorKind::NfNeedsDegree, e.span);
                };
                if *d == 0 {
                    return fail(EvalErrorKind::NonPositiveDegree, e.span);
                }
                if Rational::from_integer((*d).into()) != *at {
                    return fail(
                        EvalErrorKind::DegreeMismatch {
                            literal: *d,
                            mode: at.clone(),
                        },
                        e.span,
                    );
                }
                let p = self.eval(x)?;
                if p.degree_in(Var::H) > 0 {
                    return fail(EvalErrorKind::NotChernOnly, x.span);
                }
                C::normal_form(&p, *preset, *d).map_err(|kind| EvalError { kind, span: e.span })?
            }
        })
    }
}

/// Evaluate `e` with `d` generic or fixed. Products are kept unreduced;
/// `push` and `reduce` apply `h^3 = -(c1 h^2 + c2 h + c3)`.
pub fn evaluate(e: &Expr, mode: &Mode) -> Result<Value, EvalError> {
    match mode {
        Mode::Generic => Ctx {
            d: UniPoly::d(),
            at: None,
        }
        .eval(e)
        .map(Value::Generic),
        Mode::At(d) => Ctx {
            d: d.clone(),
            at: Some(d),
        }
        .eval(e)
        .map(Value::Specific),
    }
}
