use num_bigint::BigInt;

use crate::algebra::Generator;

use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(super) enum Tok {
    Nat(BigInt),
    Gen(Generator),
    Basis(char),
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("number {n}"),
            Tok::Gen(g) => format!("generator {g}"),
            Tok::Basis(k) => format!("basis symbol '{k}'"),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

pub(super) fn tokenize(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |from: usize| {
        let mut j = from;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    let index = |from: usize, to: usize| -> Result<u32, ParseError> {
        let s: String = chars[from..to].iter().collect();
        match s.parse::<u32>() {
            Ok(0) => Err(ParseError::new(from, "generator index must be positive")),
            Ok(k) => Ok(k),
            Err(_) => Err(ParseError::new(from, "generator index out of range")),
        }
    };
    while i < chars.len() {
        let ch = chars[i];
        let start = i;
        let tok = match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let j = digits(i);
                let s: String = chars[i..j].iter().collect();
                i = j;
                Tok::Nat(s.parse().expect("digits"))
            }
            'c' => {
                let primed = chars.get(i + 1) == Some(&'\'');
                let from = if primed { i + 2 } else { i + 1 };
                let to = digits(from);
                if to == from {
                    return Err(ParseError::new(from, "expected an index after 'c'"));
                }
                let k = index(from, to)?;
                i = to;
                Tok::Gen(if primed { Generator::CPrime(k) } else { Generator::C(k) })
            }
            'v' => {
                let to = digits(i + 1);
                let s: String = chars[i + 1..to].iter().collect();
                i = to;
                match s.as_str() {
                    "1" => Tok::Gen(Generator::V1),
                    "2" => Tok::Gen(Generator::V2),
                    _ => return Err(ParseError::new(start, "only v1 and v2 are line classes")),
                }
            }
            's' | 'q' => {
                i += 1;
                Tok::Basis(ch)
            }
            '[' | ']' | ',' | '+' | '-' | '*' | '^' | '(' | ')' => {
                i += 1;
                match ch {
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ',' => Tok::Comma,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                }
            }
            other => return Err(ParseError::new(start, format!("unexpected character '{other}'"))),
        };
        out.push((tok, start));
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}
