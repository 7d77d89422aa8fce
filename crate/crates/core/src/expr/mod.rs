//! Expression language for Chern-class polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' NAT)?
//! atom   := NAT | GEN | BASIS | '(' expr ')'
//! GEN    := 'c' NAT | "c'" NAT | 'v1' | 'v2'
//! BASIS  := ('s' | 'q') '[' NAT (',' NAT)* ']'
//! ```
//!
//! There is no unary minus and no implicit multiplication. `s[…]` takes a
//! partition, `q[…]` a strict partition.

mod lexer;
mod parser;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{CPolynomial, Generator};
use crate::partition::{Partition, StrictPartition};
use crate::qtilde::qtilde;
use crate::schur::schur_dual_jt;

pub use parser::parse;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {}: {message}", .position + 1)]
pub struct ParseError {
    /// 0-based character offset.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Gen(Generator),
    Schur(Partition),
    QTilde(StrictPartition),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Evaluates to a polynomial; basis atoms expand to their determinantal
    /// (`s`) or recursive (`q`) definitions.
    pub fn to_polynomial(&self) -> CPolynomial {
        match self {
            Expr::Int(k) => CPolynomial::constant(k.clone()),
            Expr::Gen(g) => CPolynomial::gen(*g),
            Expr::Schur(lam) => schur_dual_jt(lam),
            Expr::QTilde(mu) => qtilde(mu.as_partition()),
            Expr::Add(a, b) => &a.to_polynomial() + &b.to_polynomial(),
            Expr::Sub(a, b) => &a.to_polynomial() - &b.to_polynomial(),
            Expr::Mul(a, b) => &a.to_polynomial() * &b.to_polynomial(),
            Expr::Pow(a, e) => a.to_polynomial().pow(*e),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Pow(..) => 3,
            _ => 4,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Int(k) => write!(f, "{k}"),
            Expr::Gen(g) => write!(f, "{g}"),
            Expr::Schur(lam) => write_basis(f, 's', lam.parts()),
            Expr::QTilde(mu) => write_basis(f, 'q', mu.parts()),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.fmt_at(f, 1)?;
                write!(f, " {} ", if matches!(self, Expr::Add(..)) { '+' } else { '-' })?;
                b.fmt_at(f, 2)
            }
            Expr::Mul(a, b) => {
                a.fmt_at(f, 2)?;
                write!(f, "*")?;
                b.fmt_at(f, 3)
            }
            Expr::Pow(a, e) => {
                a.fmt_at(f, 4)?;
                write!(f, "^{e}")
            }
        }
    }
}

fn write_basis(f: &mut fmt::Formatter<'_>, kind: char, parts: &[u32]) -> fmt::Result {
    let parts: Vec<String> = parts.iter().map(u32::to_string).collect();
    write!(f, "{kind}[{}]", parts.join(","))
}

/// Prints with the fewest parentheses that re-parse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates_corpus_expression() {
        let e = parse("c1^3 + 3*c1*c2 + 2*c3").unwrap();
        assert_eq!(e.to_polynomial().to_string(), "c1^3 + 3*c1*c2 + 2*c3");
        assert_eq!(parse("s[2,1]").unwrap().to_polynomial().to_string(), "c1*c2 - c3");
        assert_eq!(parse("q[2,1]").unwrap().to_polynomial().to_string(), "c1*c2 - 2*c3");
    }

    #[test]
    fn printing_round_trips() {
        for text in [
            "c1^3 + 3*c1*c2 + 2*c3",
            "c2 - (c1 - c3)",
            "(c1 + v1)^2*q[3,1]",
            "2*(c'1 + c'2*c1)",
            "s[2,2] - s[3,1] + 0",
            "((c1))",
            "c1 - c2 - c3",
            "c1*(c2*c3)",
        ] {
            let e = parse(text).unwrap();
            let printed = e.to_string();
            assert_eq!(parse(&printed).unwrap(), e, "{text} -> {printed}");
        }
        assert_eq!(parse("c2 - (c1 - c3)").unwrap().to_string(), "c2 - (c1 - c3)");
        assert_eq!(parse("(c1 * c2) * c3").unwrap().to_string(), "c1*c2*c3");
    }
}
