//! Thom polynomials as printed in the literature, stored verbatim as expressions.

use serde_json::json;

use crate::algebra::CPolynomial;
use crate::error::Result;
use crate::expansion::QExpansion;
use crate::expr::parse;
use crate::legendrian::{lagrangian_part, legendrian_parse, legendrian_positivity, LegendrianKey};
use crate::parallel::{self, Mode};
use crate::partition::{Partition, StrictPartition};
use crate::rings::LagrangianRing;

use super::{certify, smallest_square_hook, PositivityReport, Verdict};

/// Maps between equal-dimensional manifolds.
const CLASSICAL: &[(&str, &str)] = &[
    ("A_3", "c1^3 + 3*c1*c2 + 2*c3"),
    ("A_4", "c1^4 + 6*c1^2*c2 + 2*c2^2 + 9*c1*c3 + 6*c4"),
    ("A_5", "c1^5 + 10*c1^3*c2 + 25*c1^2*c3 + 10*c1*c2^2 + 38*c1*c4 + 12*c2*c3 + 24*c5"),
    ("I_{2,2}", "c2^2 - c1*c3"),
    ("I_{2,3}", "2*c1*c2^2 - 2*c1^2*c3 + 2*c2*c3 - 2*c1*c4"),
    (
        "I_{2,4}",
        "2*c1^2*c2^2 + 3*c2^3 - 2*c1^3*c3 + 2*c1*c2*c3 - 3*c3^2 - 5*c1^2*c4 + 9*c2*c4 - 6*c1*c5",
    ),
];

/// Legendrian Thom polynomials: (name, bold Lagrangian part, full expression).
const LEGENDRIAN: &[(&str, &str, &str)] = &[
    ("A_2", "q[1]", "q[1]"),
    ("A_3", "3*q[2]", "3*q[2] + v2*q[1]"),
    ("A_4", "12*q[3] + 3*q[2,1]", "12*q[3] + 3*q[2,1] + (3*v1 + 7*v2)*q[2] + (v1*v2 + v2^2)*q[1]"),
    ("D_4", "q[2,1]", "q[2,1]"),
    ("P_8", "q[3,2,1]", "q[3,2,1]"),
    (
        "A_5",
        "60*q[4] + 27*q[3,1]",
        "60*q[4] + 27*q[3,1] + (6*v1 + 16*v2)*q[2,1] + (39*v1 + 47*v2)*q[3] \
         + (6*v1^2 + 22*v1*v2 + 12*v2^2)*q[2] + (2*v1^2*v2 + 3*v1*v2^2 + v2^3)*q[1]",
    ),
    ("D_5", "6*q[3,1]", "6*q[3,1] + 4*v2*q[2,1]"),
    ("P_9", "12*q[4,2,1]", "12*q[4,2,1] + 12*v2*q[3,2,1]"),
];

/// Rank used for the Legendrian table; every printed label fits `ρ(4)`.
const LEGENDRIAN_RANK: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Table {
    Classical,
    Lagrangian,
    Legendrian,
}

impl Table {
    pub fn name(&self) -> &'static str {
        match self {
            Table::Classical => "classical",
            Table::Lagrangian => "lagrangian",
            Table::Legendrian => "legendrian",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThomTableEntry {
    pub name: &'static str,
    pub source: Table,
    pub expression: &'static str,
    pub polynomial: CPolynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LegendrianTableEntry {
    pub name: &'static str,
    pub bold: &'static str,
    pub expression: &'static str,
}

pub fn classical_table() -> Vec<ThomTableEntry> {
    CLASSICAL
        .iter()
        .map(|&(name, expression)| ThomTableEntry {
            name,
            source: Table::Classical,
            expression,
            polynomial: parse(expression).expect("corpus expression parses").to_polynomial(),
        })
        .collect()
}

pub fn legendrian_table() -> Vec<LegendrianTableEntry> {
    LEGENDRIAN
        .iter()
        .map(|&(name, bold, expression)| LegendrianTableEntry { name, bold, expression })
        .collect()
}

/// Schur expansion and verdict of every classical entry.
pub fn verify_classical(mode: Mode) -> Result<Vec<PositivityReport<Partition>>> {
    let table = classical_table();
    parallel::map(mode, &table, |e| {
        let r = certify(&e.polynomial, None)?;
        let sum_positive = r.coefficient_sum() > 0.into();
        let hook = smallest_square_hook(&r.expansion);
        let mut r = r.with_detail("coefficient_sum_positive", sum_positive).with_detail("square_hook", hook);
        r.name = e.name.to_string();
        r.input = e.expression.to_string();
        Ok(r)
    })
    .into_iter()
    .collect()
}

/// Each bold Lagrangian polynomial is expanded as a `c`-polynomial in
/// `LG(d)`, `d` its degree, and must give back the printed coefficients.
pub fn verify_lagrangian(mode: Mode) -> Result<Vec<PositivityReport<StrictPartition>>> {
    let table = legendrian_table();
    parallel::map(mode, &table, |e| {
        let printed = legendrian_parse(e.bold, LEGENDRIAN_RANK)?;
        let printed = lagrangian_part(&printed);
        let n = printed.degree();
        let poly = parse(e.bold)?.to_polynomial();
        let expansion: QExpansion = LagrangianRing::shared(n).reduce(&poly)?;
        let matches = expansion == printed;
        Ok(PositivityReport::new(e.name, e.bold, expansion)
            .with_detail("rank", n)
            .with_detail("matches_printed", matches))
    })
    .into_iter()
    .collect()
}

/// Parses every full Legendrian entry and checks positivity, homogeneity,
/// and that its `v = 0` slice is the printed bold part.
pub fn verify_legendrian(mode: Mode) -> Result<Vec<PositivityReport<LegendrianKey>>> {
    let table = legendrian_table();
    parallel::map(mode, &table, |e| {
        let full = legendrian_parse(e.expression, LEGENDRIAN_RANK)?;
        let bold = lagrangian_part(&legendrian_parse(e.bold, LEGENDRIAN_RANK)?);
        let slice = lagrangian_part(&full);
        let bold_matches = slice.to_json() == bold.to_json();
        let bold_verdict = Verdict::of(&slice);
        let mut r = legendrian_positivity(&full)
            .with_detail("degree", full.degree())
            .with_detail("lagrangian_part", slice.to_json())
            .with_detail("lagrangian_verdict", json!(bold_verdict.as_str()))
            .with_detail("bold_part_matches", bold_matches);
        r.name = e.name.to_string();
        r.input = e.expression.to_string();
        Ok(r)
    })
    .into_iter()
    .collect()
}
