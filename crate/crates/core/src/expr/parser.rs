use num_traits::ToPrimitive;

use crate::partition::{Partition, StrictPartition};

use super::lexer::{tokenize, Tok};
use super::{Expr, ParseError};

/// Parses a full expression; trailing input is an error.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(input)?;
    let mut p = Parser { toks, at: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        t => Err(p.error(format!("unexpected {}", t.describe()))),
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos(), message)
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {}, found {}", want.describe(), self.peek().describe())))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let e = self.small_nat("exponent")?;
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn small_nat(&mut self, what: &str) -> Result<u32, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Nat(n) => n
                .to_u32()
                .ok_or_else(|| ParseError::new(pos, format!("{what} out of range"))),
            t => Err(ParseError::new(pos, format!("expected {what}, found {}", t.describe()))),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Nat(n) => Ok(Expr::Int(n)),
            Tok::Gen(g) => Ok(Expr::Gen(g)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Basis(kind) => self.basis(kind, pos),
            t => Err(ParseError::new(pos, format!("expected an operand, found {}", t.describe()))),
        }
    }

    fn basis(&mut self, kind: char, pos: usize) -> Result<Expr, ParseError> {
        self.expect(Tok::LBracket)?;
        let mut parts = Vec::new();
        loop {
            let at = self.pos();
            let k = self.small_nat("part")?;
            if k == 0 {
                return Err(ParseError::new(at, "parts must be positive"));
            }
            if let Some(&prev) = parts.last() {
                let ok = if kind == 'q' { k < prev } else { k <= prev };
                if !ok {
                    let need = if kind == 'q' { "strictly" } else { "weakly" };
                    return Err(ParseError::new(at, format!("parts must be {need} decreasing")));
                }
            }
            parts.push(k);
            match self.bump() {
                Tok::Comma => continue,
                Tok::RBracket => break,
                t => {
                    return Err(ParseError::new(
                        self.toks[self.at.saturating_sub(1)].1,
                        format!("expected ',' or ']', found {}", t.describe()),
                    ))
                }
            }
        }
        let lam = Partition::new(parts).map_err(|e| ParseError::new(pos, e.to_string()))?;
        if kind == 'q' {
            let mu = StrictPartition::try_from(lam).map_err(|e| ParseError::new(pos, e.to_string()))?;
            Ok(Expr::QTilde(mu))
        } else {
            Ok(Expr::Schur(lam))
        }
    }
}
