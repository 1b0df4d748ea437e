//! Exact coefficient arithmetic: rationals, polynomials in the degree
//! parameter `d`, and Newton interpolation over ℚ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cannot combine a specific-d scalar with a generic-d scalar")]
    ModeMismatch,
    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(Rational),
    #[error("interpolant has degree {degree}, exceeding the bound {max_degree}")]
    DegreeTooHigh { degree: usize, max_degree: usize },
    #[error("need at least {needed} points for a degree-{max_degree} fit, got {got}")]
    TooFewPoints {
        needed: usize,
        got: usize,
        max_degree: usize,
    },
}

/// Ring operation selector shared by scalar and polynomial arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Coefficient ring of an [`MPoly`](crate::mpoly::MPoly).
///
/// Implemented by [`Rational`] (specific-d mode) and [`UniPoly`] (generic-d
/// mode). Making the mode a type parameter means the two can never meet in a
/// single polynomial; [`Scalar`] is the runtime-tagged form for callers that
/// only learn the mode at run time.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(r: Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// How this value prints when it multiplies a monomial: a sign flag and
    /// the magnitude text, `None` when the magnitude is one.
    fn factor_form(&self) -> (bool, Option<String>);
}

impl Coeff for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn factor_form(&self) -> (bool, Option<String>) {
        let abs = self.abs();
        let body = if abs.is_one() { None } else { Some(abs.to_string()) };
        (self.is_negative(), body)
    }
}

/// Polynomial in the formal degree parameter `d` with rational coefficients,
/// stored by ascending power with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Build from integer coefficients listed from the highest power down,
    /// e.g. `[1, -3, 3]` is `d^2 - 3*d + 3`.
    pub fn from_descending(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().rev().map(|&c| int(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The parameter `d` itself.
    pub fn d() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `d - a`.
    pub fn d_minus(a: i64) -> Self {
        Self::from_coeffs(vec![int(-a), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Horner evaluation at `d = d0`.
    pub fn eval(&self, d0: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * d0 + c)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        let coeffs = (0..n)
            .map(|i| {
                f(
                    self.coeffs.get(i).unwrap_or(&zero),
                    other.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        Self::from_coeffs(coeffs)
    }
}

/// Evaluate `p` at `d0`.
pub fn eval_at(p: &UniPoly, d0: &Rational) -> Rational {
    p.eval(d0)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                $tr::$m(&self, &rhs)
            }
        }
    )*};
}
forward_owned!(UniPoly, Add::add, Sub::sub, Mul::mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl Zero for UniPoly {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UniPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Coeff for UniPoly {
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }

    fn factor_form(&self) -> (bool, Option<String>) {
        let nonzero: Vec<_> = self.coeffs.iter().filter(|c| !c.is_zero()).collect();
        match nonzero.as_slice() {
            [] => (false, Some("0".into())),
            [_] => {
                let neg = self.coeffs.last().is_some_and(Signed::is_negative);
                let abs = if neg { -self } else { self.clone() };
                if abs.is_one() {
                    (neg, None)
                } else {
                    (neg, Some(abs.to_string()))
                }
            }
            _ => {
                let neg = self.coeffs.last().is_some_and(Signed::is_negative);
                let shown = if neg { -self } else { self.clone() };
                (neg, Some(format!("({shown})")))
            }
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let abs = c.abs();
            let var = match power {
                0 => String::new(),
                1 => "d".to_string(),
                p => format!("d^{p}"),
            };
            match (abs.is_one(), var.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => f.write_str(&var)?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{var}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

/// A coefficient whose mode is only known at run time.
#[derive(Clone, PartialEq, Debug)]
pub enum Scalar {
    Specific(Rational),
    Generic(UniPoly),
}

impl Scalar {
    pub fn is_generic(&self) -> bool {
        matches!(self, Scalar::Generic(_))
    }

    pub fn arith(&self, rhs: &Scalar, op: ArithOp) -> Result<Scalar, ScalarError> {
        fn apply<T>(a: &T, b: &T, op: ArithOp) -> T
        where
            for<'a> &'a T: Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
        {
            match op {
                ArithOp::Add => a + b,
                ArithOp::Sub => a - b,
                ArithOp::Mul => a * b,
            }
        }
        match (self, rhs) {
            (Scalar::Specific(a), Scalar::Specific(b)) => Ok(Scalar::Specific(apply(a, b, op))),
            (Scalar::Generic(a), Scalar::Generic(b)) => Ok(Scalar::Generic(apply(a, b, op))),
            _ => Err(ScalarError::ModeMismatch),
        }
    }

    /// Substitute `d = d0`; specific values pass through unchanged.
    pub fn specialize(&self, d0: &Rational) -> Rational {
        match self {
            Scalar::Specific(r) => r.clone(),
            Scalar::Generic(p) => p.eval(d0),
        }
    }
}

pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, ScalarError> {
    a.arith(b, op)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Specific(r) => write!(f, "{r}"),
            Scalar::Generic(p) => write!(f, "{p}"),
        }
    }
}

/// Incremental Newton divided-difference interpolation over ℚ.
///
/// Points can be appended one at a time; the Newton coefficients of the
/// points seen so far are always available.
#[derive(Clone, Debug, Default)]
pub struct NewtonInterpolator {
    xs: Vec<Rational>,
    /// Last row of the divided-difference table: `f[x_n], f[x_{n-1}, x_n], …`.
    row: Vec<Rational>,
    /// Newton-form coefficients `f[x_0], f[x_0, x_1], …`.
    newton: Vec<Rational>,
}

impl NewtonInterpolator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn push(&mut self, x: Rational, y: Rational) -> Result<(), ScalarError> {
        if self.xs.contains(&x) {
            return Err(ScalarError::DuplicateAbscissa(x));
        }
        let n = self.xs.len();
        let mut row = Vec::with_capacity(n + 1);
        row.push(y);
        for k in 1..=n {
            let num = &row[k - 1] - &self.row[k - 1];
            let den = &x - &self.xs[n - k];
            row.push(num / den);
        }
        self.newton.push(row[n].clone());
        self.row = row;
        self.xs.push(x);
        Ok(())
    }

    /// Expand the Newton form into the monomial basis.
    pub fn polynomial(&self) -> UniPoly {
        let mut acc = UniPoly::zero();
        for k in (0..self.newton.len()).rev() {
            let shift = UniPoly::from_coeffs(vec![-self.xs[k].clone(), Rational::one()]);
            acc = &(&acc * &shift) + &UniPoly::constant(self.newton[k].clone());
        }
        acc
    }
}

/// The unique polynomial of degree below `points.len()` through `points`,
/// rejected if its degree exceeds `max_degree`.
pub fn interpolate(points: &[(Rational, Rational)], max_degree: usize) -> Result<UniPoly, ScalarError> {
    if points.len() < max_degree + 1 {
        return Err(ScalarError::TooFewPoints {
            needed: max_degree + 1,
            got: points.len(),
            max_degree,
        });
    }
    let mut newton = NewtonInterpolator::new();
    for (x, y) in points {
        newton.push(x.clone(), y.clone())?;
    }
    let p = newton.polynomial();
    match p.degree() {
        Some(degree) if degree > max_degree => Err(ScalarError::DegreeTooHigh { degree, max_degree }),
        _ => Ok(p),
    }
}
