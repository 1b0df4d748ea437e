//! Sparse weighted-graded polynomials in the fixed variables
//! `c1, c2, c3, h, t1, t2, t3`.
//!
//! Weights are `c_i ↦ i` and `1` for `h` and the roots `t_i`. Terms are kept
//! in a [`BTreeMap`] under the weighted graded reverse-lexicographic order of
//! [`Monomial`], so iteration order is the canonical print order and the
//! leading term is the last key.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::scalars::{ArithOp, Coeff, Rational, UniPoly};

pub const NVARS: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    C1,
    C2,
    C3,
    H,
    T1,
    T2,
    T3,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::C1, Var::C2, Var::C3, Var::H, Var::T1, Var::T2, Var::T3];
    pub const CHERN: [Var; 3] = [Var::C1, Var::C2, Var::C3];
    pub const ROOTS: [Var; 3] = [Var::T1, Var::T2, Var::T3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn weight(self) -> u32 {
        match self {
            Var::C2 => 2,
            Var::C3 => 3,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::C1 => "c1",
            Var::C2 => "c2",
            Var::C3 => "c3",
            Var::H => "h",
            Var::T1 => "t1",
            Var::T2 => "t2",
            Var::T3 => "t3",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// Reverse-lexicographic tie-break sequence: the first variable in this list
// where two monomials of equal weight differ decides, smaller exponent wins.
// On pure Chern monomials this is grevlex with c3 > c2 > c1, so normal forms
// modulo the relation ideals come out in powers of c1.
const REVLEX_SEQUENCE: [Var; NVARS] = [Var::T3, Var::T2, Var::T1, Var::H, Var::C1, Var::C2, Var::C3];

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u32; NVARS],
    weight: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: [0; NVARS],
            weight: 0,
        }
    }

    pub fn from_exps(exps: [u32; NVARS]) -> Self {
        let weight = Var::ALL.iter().map(|v| v.weight() * exps[v.index()]).sum();
        Monomial { exps, weight }
    }

    pub fn var(v: Var) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: Var, e: u32) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Self::from_exps(exps)
    }

    /// `c1^a c2^b c3^c`.
    pub fn chern(a: u32, b: u32, c: u32) -> Self {
        Self::from_exps([a, b, c, 0, 0, 0, 0])
    }

    /// `t1^a t2^b t3^c`.
    pub fn roots(a: u32, b: u32, c: u32) -> Self {
        Self::from_exps([0, 0, 0, 0, a, b, c])
    }

    pub fn exps(&self) -> &[u32; NVARS] {
        &self.exps
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn uses_only(&self, vars: &[Var]) -> bool {
        Var::ALL.iter().all(|v| self.exp(*v) == 0 || vars.contains(v))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.exps;
        for (e, s) in exps.iter_mut().zip(&self.exps) {
            *e -= s;
        }
        Some(Monomial::from_exps(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(&other.exps) {
            *e = (*e).max(*o);
        }
        Monomial::from_exps(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Copy with the exponent of `v` set to `e`.
    pub fn with_exp(&self, v: Var, e: u32) -> Monomial {
        let mut exps = self.exps;
        exps[v.index()] = e;
        Monomial::from_exps(exps)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, r) in exps.iter_mut().zip(&rhs.exps) {
            *e += r;
        }
        Monomial {
            exps,
            weight: self.weight + rhs.weight,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight.cmp(&other.weight).then_with(|| {
            for v in REVLEX_SEQUENCE {
                match self.exp(v).cmp(&other.exp(v)) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Polynomial over a coefficient ring `C` in the fixed variable table.
#[derive(Clone, PartialEq)]
pub struct MPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(C::one(), Monomial::var(v))
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (C, Monomial)>) -> Self {
        let mut p = Self::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(terms: &[(i64, Monomial)]) -> Self {
        Self::from_terms(terms.iter().map(|(c, m)| (C::from_i64(*c), m.clone())))
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading one down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn uses_only(&self, vars: &[Var]) -> bool {
        self.terms.keys().all(|m| m.uses_only(vars))
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.leading_monomial().map(Monomial::weight)
    }

    /// The common weight of all terms, if there is one (zero counts as
    /// homogeneous of weight 0).
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(Monomial::weight);
        match weights.next() {
            None => Some(0),
            Some(w) => weights.all(|x| x == w).then_some(w),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, a)| (a.clone() * c.clone(), m.clone())))
    }

    pub fn mul_term(&self, c: &C, m: &Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, a)| (a.clone() * c.clone(), k * m)))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Product with every term of weight above `max_weight` dropped.
    pub fn mul_truncated(&self, other: &Self, max_weight: u32) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            if ma.weight() > max_weight {
                // keys are weight-ordered
                break;
            }
            for (mb, cb) in &other.terms {
                if ma.weight() + mb.weight() > max_weight {
                    break;
                }
                out.add_term(ma * mb, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn truncate(&self, max_weight: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() <= max_weight)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of the terms of weight exactly `w`.
    pub fn graded_part(&self, w: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `v^power`, as a polynomial free of `v`.
    pub fn coefficient_in(&self, v: Var, power: u32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exp(v) == power)
                .map(|(m, c)| (c.clone(), m.with_exp(v, 0))),
        )
    }

    /// Simultaneous substitution of each bound variable by a polynomial.
    pub fn substitute(&self, bindings: &[(Var, MPoly<C>)]) -> Self {
        let mut powers: Vec<Vec<MPoly<C>>> = bindings.iter().map(|(_, p)| vec![Self::one(), p.clone()]).collect();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut rest = *m.exps();
            let mut acc = Self::one();
            for (i, (v, p)) in bindings.iter().enumerate() {
                let e = rest[v.index()] as usize;
                rest[v.index()] = 0;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * p;
                    powers[i].push(next);
                }
                if e > 0 {
                    acc = &acc * &powers[i][e];
                }
            }
            out = out + acc.mul_term(c, &Monomial::from_exps(rest));
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (f(c), m.clone())))
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let c = if negate { -c.clone() } else { c.clone() };
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl MPoly<UniPoly> {
    /// Substitute the degree parameter `d = d0` in every coefficient.
    pub fn eval_at(&self, d0: &Rational) -> MPoly<Rational> {
        self.map_coeffs(|c| c.eval(d0))
    }
}

/// Lift a specific-d polynomial to constant generic coefficients.
pub fn lift(p: &MPoly<Rational>) -> MPoly<UniPoly> {
    p.map_coeffs(|c| UniPoly::constant(c.clone()))
}

pub fn poly_arith<C: Coeff>(p: &MPoly<C>, q: &MPoly<C>, op: ArithOp) -> MPoly<C> {
    match op {
        ArithOp::Add => p + q,
        ArithOp::Sub => p - q,
        ArithOp::Mul => p * q,
    }
}

impl<C: Coeff> Add for &MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: &MPoly<C>) -> MPoly<C> {
        self.combine(rhs, false)
    }
}

impl<C: Coeff> Sub for &MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: &MPoly<C>) -> MPoly<C> {
        self.combine(rhs, true)
    }
}

impl<C: Coeff> Mul for &MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: &MPoly<C>) -> MPoly<C> {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma * mb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Add for MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: MPoly<C>) -> MPoly<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: MPoly<C>) -> MPoly<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: MPoly<C>) -> MPoly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        -&self
    }
}

impl<C: Coeff> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if let Some(c) = self.as_constant() {
            return fmt::Display::fmt(&c, f);
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let (neg, body) = c.factor_form();
            match (i == 0, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            match (body, m.is_one()) {
                (None, true) => f.write_str("1")?,
                (None, false) => write!(f, "{m}")?,
                (Some(b), true) => f.write_str(&b)?,
                (Some(b), false) => write!(f, "{b}*{m}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl<C: Coeff> Serialize for MPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
