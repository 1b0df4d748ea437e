//! A small expression language over the Chow ring of the plane.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' INT)?
//! atom   := NUMBER | IDENT | IDENT '(' args? ')' | '(' expr ')'
//! NUMBER := INT ('/' INT)?
//! ```
//!
//! Variables are `c1, c2, c3, h, d`. Calls are `push(x)`, `euler_twist(k)`,
//! `K()`, `nodal_divisor()`, `reduce(x)` and `nf(x, smooth|nodal, INT)`.

mod ast;
mod eval;
mod lexer;
mod parser;

use std::fmt;

pub use ast::{render, Expr, Node, Preset, Symbol};
pub use eval::{evaluate, EvalError, EvalErrorKind, Mode, Value, ValueKind, MAX_EXPONENT};
pub use parser::{parse, ParseError, ParseErrorKind, MAX_DEPTH};

/// Byte offsets `start..end` into the source text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        Span { start, end }
    }

    pub fn join(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}
