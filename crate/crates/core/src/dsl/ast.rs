use std::fmt;

use crate::scalars::Rational;

use super::Span;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    C1,
    C2,
    C3,
    H,
    D,
}

impl Symbol {
    pub const ALL: [Symbol; 5] = [Symbol::C1, Symbol::C2, Symbol::C3, Symbol::H, Symbol::D];

    pub fn name(self) -> &'static str {
        match self {
            Symbol::C1 => "c1",
            Symbol::C2 => "c2",
            Symbol::C3 => "c3",
            Symbol::H => "h",
            Symbol::D => "d",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Symbol::ALL.into_iter().find(|v| v.name() == s)
    }
}

/// Relation ideal selected by name in `nf(...)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    Smooth,
    Nodal,
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::Smooth => "smooth",
            Preset::Nodal => "nodal",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "smooth" => Some(Preset::Smooth),
            "nodal" => Some(Preset::Nodal),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    /// Non-negative rational literal.
    Num(Rational),
    Var(Symbol),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Push(Box<Expr>),
    EulerTwist(Box<Expr>),
    Canonical,
    NodalDivisor,
    Reduce(Box<Expr>),
    Nf(Box<Expr>, Preset, u64),
}

/// A syntax tree node with its source span. Equality ignores spans.
#[derive(Clone, Debug)]
pub struct Expr {
    pub node: Node,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl Expr {
    pub fn new(node: Node, span: Span) -> Self {
        Expr { node, span }
    }

    /// Node without a meaningful span, for building trees by hand.
    pub fn bare(node: Node) -> Self {
        Expr {
            node,
            span: Span::default(),
        }
    }

    fn precedence(&self) -> u8 {
        match self.node {
            Node::Add(..) | Node::Sub(..) => 1,
            Node::Mul(..) => 2,
            Node::Pow(..) => 3,
            _ => 4,
        }
    }
}

fn write_at(e: &Expr, min: u8, out: &mut String) {
    let wrap = e.precedence() < min;
    if wrap {
        out.push('(');
    }
    match &e.node {
        Node::Num(r) => out.push_str(&r.to_string()),
        Node::Var(v) => out.push_str(v.name()),
        Node::Add(l, r) | Node::Sub(l, r) => {
            write_at(l, 1, out);
            out.push_str(if matches!(e.node, Node::Add(..)) { " + " } else { " - " });
            write_at(r, 2, out);
        }
        Node::Mul(l, r) => {
            write_at(l, 2, out);
            out.push_str(" * ");
            write_at(r, 3, out);
        }
        Node::Pow(b, n) => {
            write_at(b, 4, out);
            out.push_str(&format!("^{n}"));
        }
        Node::Push(x) => call("push", x, out),
        Node::EulerTwist(x) => call("euler_twist", x, out),
        Node::Reduce(x) => call("reduce", x, out),
        Node::Canonical => out.push_str("K()"),
        Node::NodalDivisor => out.push_str("nodal_divisor()"),
        Node::Nf(x, preset, d) => {
            out.push_str("nf(");
            write_at(x, 0, out);
            out.push_str(&format!(", {}, {d})", preset.name()));
        }
    }
    if wrap {
        out.push(')');
    }
}

fn call(name: &str, arg: &Expr, out: &mut String) {
    out.push_str(name);
    out.push('(');
    write_at(arg, 0, out);
    out.push(')');
}

/// Source text for `e` with the fewest parentheses that reparse to the same
/// tree.
pub fn render(e: &Expr) -> String {
    let mut out = String::new();
    write_at(e, 0, &mut out);
    out
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}
