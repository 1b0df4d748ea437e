use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::scalars::Rational;

use super::ast::{Expr, Node, Preset, Symbol};
use super::lexer::{lex, Tok};
use super::Span;

/// Nesting limit for parentheses and calls.
pub const MAX_DEPTH: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken {
        found: String,
        expected: Vec<&'static str>,
    },
    UnknownIdentifier(String),
    UnknownPreset(String),
    Arity {
        name: &'static str,
        expected: usize,
        got: usize,
    },
    ZeroDenominator,
    LiteralTooLarge,
    TooDeep,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub span: Span,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "expected {}, found {found}", expected.join(" or "))
            }
            ParseErrorKind::UnknownIdentifier(s) => write!(f, "unknown identifier '{s}'"),
            ParseErrorKind::UnknownPreset(s) => write!(f, "unknown ideal '{s}', expected smooth or nodal"),
            ParseErrorKind::Arity { name, expected, got } => {
                write!(f, "{name} takes {expected} argument(s), got {got}")
            }
            ParseErrorKind::ZeroDenominator => f.write_str("zero denominator"),
            ParseErrorKind::LiteralTooLarge => f.write_str("integer literal too large"),
            ParseErrorKind::TooDeep => write!(f, "expression nested deeper than {MAX_DEPTH}"),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error: {} at {}", self.kind, self.span)
    }
}

impl std::error::Error for ParseError {}

const ATOM_START: &[&str] = &["number", "identifier", "'('"];

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    depth: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected<T>(&self, expected: &[&'static str]) -> PResult<T> {
        Err(ParseError {
            kind: ParseErrorKind::UnexpectedToken {
                found: self.peek().to_string(),
                expected: expected.to_vec(),
            },
            span: self.span(),
        })
    }

    fn expect(&mut self, tok: Tok, label: &'static str) -> PResult<Span> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            self.unexpected(&[label])
        }
    }

    fn enter(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError {
                kind: ParseErrorKind::TooDeep,
                span: self.span(),
            });
        }
        Ok(())
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let add = match self.peek() {
                Tok::Plus => true,
                Tok::Minus => false,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span.join(rhs.span);
            let node = if add {
                Node::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Node::Sub(Box::new(lhs), Box::new(rhs))
            };
            lhs = Expr::new(node, span);
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.factor()?;
            let span = lhs.span.join(rhs.span);
            lhs = Expr::new(Node::Mul(Box::new(lhs), Box::new(rhs)), span);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> PResult<Expr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (n, span) = self.integer()?;
        let e = n.to_u32().ok_or(ParseError {
            kind: ParseErrorKind::LiteralTooLarge,
            span,
        })?;
        let span = base.span.join(span);
        Ok(Expr::new(Node::Pow(Box::new(base), e), span))
    }

    fn integer(&mut self) -> PResult<(BigInt, Span)> {
        match self.peek().clone() {
            Tok::Int(n) => {
                let span = self.bump().1;
                Ok((n, span))
            }
            _ => self.unexpected(&["integer"]),
        }
    }

    fn atom(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Int(num) => {
                let mut span = self.bump().1;
                let mut value = Rational::from_integer(num);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let (den, den_span) = self.integer()?;
                    if den.is_zero() {
                        return Err(ParseError {
                            kind: ParseErrorKind::ZeroDenominator,
                            span: den_span,
                        });
                    }
                    value /= Rational::from_integer(den);
                    span = span.join(den_span);
                }
                Ok(Expr::new(Node::Num(value), span))
            }
            Tok::LParen => {
                self.enter()?;
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                self.depth -= 1;
                Ok(inner)
            }
            Tok::Ident(name) => {
                let span = self.span();
                if let Some(v) = Symbol::from_name(&name) {
                    self.bump();
                    return Ok(Expr::new(Node::Var(v), span));
                }
                match name.as_str() {
                    "push" | "euler_twist" | "reduce" | "K" | "nodal_divisor" | "nf" => self.call(&name),
                    _ => Err(ParseError {
                        kind: ParseErrorKind::UnknownIdentifier(name),
                        span,
                    }),
                }
            }
            _ => self.unexpected(ATOM_START),
        }
    }

    fn call(&mut self, name: &str) -> PResult<Expr> {
        let start = self.bump().1;
        self.expect(Tok::LParen, "'('")?;
        self.enter()?;
        let node = if name == "nf" {
            let x = self.expr()?;
            self.expect(Tok::Comma, "','")?;
            let preset = match self.peek().clone() {
                Tok::Ident(s) => {
                    let span = self.bump().1;
                    Preset::from_name(&s).ok_or(ParseError {
                        kind: ParseErrorKind::UnknownPreset(s),
                        span,
                    })?
                }
                _ => return self.unexpected(&["smooth", "nodal"]),
            };
            self.expect(Tok::Comma, "','")?;
            let (d, d_span) = self.integer()?;
            let d = d.to_u64().ok_or(ParseError {
                kind: ParseErrorKind::LiteralTooLarge,
                span: d_span,
            })?;
            Node::Nf(Box::new(x), preset, d)
        } else {
            let mut args = Vec::new();
            if *self.peek() != Tok::RParen {
                args.push(self.expr()?);
                while *self.peek() == Tok::Comma {
                    self.bump();
                    args.push(self.expr()?);
                }
            }
            let (name, expected): (&'static str, usize) = match name {
                "push" => ("push", 1),
                "euler_twist" => ("euler_twist", 1),
                "reduce" => ("reduce", 1),
                "K" => ("K", 0),
                _ => ("nodal_divisor", 0),
            };
            if *self.peek() != Tok::RParen {
                return self.unexpected(&["','", "')'"]);
            }
            if args.len() != expected {
                return Err(ParseError {
                    kind: ParseErrorKind::Arity {
                        name,
                        expected,
                        got: args.len(),
                    },
                    span: start.join(self.span()),
                });
            }
            let mut args = args.into_iter().map(Box::new);
            match name {
                "push" => Node::Push(args.next().unwrap()),
                "euler_twist" => Node::EulerTwist(args.next().unwrap()),
                "reduce" => Node::Reduce(args.next().unwrap()),
                "K" => Node::Canonical,
                _ => Node::NodalDivisor,
            }
        };
        let end = self.expect(Tok::RParen, "')'")?;
        self.depth -= 1;
        Ok(Expr::new(node, start.join(end)))
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        depth: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return p.unexpected(&["'+'", "'-'", "'*'", "'^'", "end of input"]);
    }
    Ok(e)
}
