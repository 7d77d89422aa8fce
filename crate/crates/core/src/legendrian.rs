//! Legendrian characteristic classes in the basis `Y^μ · v1^a · v2^b`.
//!
//! Only the additive structure is modelled. Products of two `Y` classes
//! are rejected because their structure constants are not available here.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::expansion::{BasisLabel, Expansion, QExpansion};
use crate::expr::{parse, Expr};
use crate::partition::StrictPartition;
use crate::positivity::PositivityReport;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LegendrianKey {
    pub mu: StrictPartition,
    pub a: u32,
    pub b: u32,
}

impl LegendrianKey {
    pub fn new(mu: StrictPartition, a: u32, b: u32) -> Self {
        LegendrianKey { mu, a, b }
    }

    fn unit() -> Self {
        LegendrianKey::new(StrictPartition::empty(), 0, 0)
    }

    fn times(&self, other: &LegendrianKey) -> Result<LegendrianKey> {
        let mu = match (self.mu.is_empty(), other.mu.is_empty()) {
            (_, true) => self.mu.clone(),
            (true, false) => other.mu.clone(),
            (false, false) => {
                return Err(Error::BasisProduct(format!("q{}", self.mu), format!("q{}", other.mu)));
            }
        };
        Ok(LegendrianKey::new(mu, self.a + other.a, self.b + other.b))
    }
}

impl fmt::Display for LegendrianKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        if !self.mu.is_empty() {
            let parts: Vec<String> = self.mu.parts().iter().map(u32::to_string).collect();
            factors.push(format!("q[{}]", parts.join(",")));
        }
        for (name, e) in [("v1", self.a), ("v2", self.b)] {
            match e {
                0 => {}
                1 => factors.push(name.to_string()),
                e => factors.push(format!("{name}^{e}")),
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

impl BasisLabel for LegendrianKey {
    fn degree(&self) -> u32 {
        self.mu.weight() + self.a + self.b
    }

    fn json_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("strict_partition".into(), serde_json::to_value(&self.mu).unwrap());
        obj.insert("a".into(), json!(self.a));
        obj.insert("b".into(), json!(self.b));
    }
}

/// A homogeneous combination of Legendrian basis classes over `LG(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegendrianClass {
    n: u32,
    expansion: Expansion<LegendrianKey>,
}

type Terms = BTreeMap<LegendrianKey, BigInt>;

fn scalar(k: BigInt) -> Terms {
    BTreeMap::from([(LegendrianKey::unit(), k)])
}

fn add(mut x: Terms, y: Terms, sign: i32) -> Terms {
    for (k, c) in y {
        *x.entry(k).or_default() += c * sign;
    }
    x.retain(|_, c| *c != BigInt::default());
    x
}

fn mul(x: &Terms, y: &Terms) -> Result<Terms> {
    let mut out = Terms::new();
    for (kx, cx) in x {
        for (ky, cy) in y {
            *out.entry(kx.times(ky)?).or_default() += cx * cy;
        }
    }
    out.retain(|_, c| *c != BigInt::default());
    Ok(out)
}

fn eval(e: &Expr) -> Result<Terms> {
    Ok(match e {
        Expr::Int(k) => scalar(k.clone()),
        Expr::Gen(Generator::V1) => BTreeMap::from([(LegendrianKey::new(StrictPartition::empty(), 1, 0), 1.into())]),
        Expr::Gen(Generator::V2) => BTreeMap::from([(LegendrianKey::new(StrictPartition::empty(), 0, 1), 1.into())]),
        Expr::Gen(g) => return Err(Error::ForeignGenerator(g.to_string())),
        Expr::Schur(lam) => return Err(Error::ForeignGenerator(format!("s{lam}"))),
        Expr::QTilde(mu) => BTreeMap::from([(LegendrianKey::new(mu.clone(), 0, 0), 1.into())]),
        Expr::Add(a, b) => add(eval(a)?, eval(b)?, 1),
        Expr::Sub(a, b) => add(eval(a)?, eval(b)?, -1),
        Expr::Mul(a, b) => mul(&eval(a)?, &eval(b)?)?,
        Expr::Pow(a, k) => {
            let base = eval(a)?;
            let mut acc = scalar(1.into());
            for _ in 0..*k {
                acc = mul(&acc, &base)?;
            }
            acc
        }
    })
}

/// Parses a table-style expression such as `3*q[2] + v2*q[1]`.
pub fn legendrian_parse(expr: &str, n: u32) -> Result<LegendrianClass> {
    let terms = eval(&parse(expr)?)?;
    let degree = match terms.keys().next() {
        Some(k) => k.degree(),
        None => 0,
    };
    if terms.keys().any(|k| k.degree() != degree) {
        return Err(Error::Inhomogeneous);
    }
    for k in terms.keys() {
        if !k.mu.fits_staircase(n) {
            return Err(Error::Containment {
                what: format!("q{}", k.mu),
                region: format!("the staircase of size {n}"),
            });
        }
        if k.a > n || k.b > n {
            return Err(Error::Containment {
                what: k.to_string(),
                region: format!("v-degrees at most {n}"),
            });
        }
    }
    Ok(LegendrianClass { n, expansion: Expansion::from_terms(degree, terms) })
}

impl LegendrianClass {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.expansion.degree()
    }

    pub fn expansion(&self) -> &Expansion<LegendrianKey> {
        &self.expansion
    }

    pub fn get(&self, mu: &StrictPartition, a: u32, b: u32) -> BigInt {
        self.expansion.get(&LegendrianKey::new(mu.clone(), a, b))
    }

    pub fn to_json(&self) -> Value {
        self.expansion.to_json()
    }
}

/// The `v1 = v2 = 0` slice.
pub fn lagrangian_part(x: &LegendrianClass) -> QExpansion {
    QExpansion::from_terms(
        x.degree(),
        x.expansion
            .iter()
            .filter(|(k, _)| k.a == 0 && k.b == 0)
            .map(|(k, c)| (k.mu.clone(), c.clone())),
    )
}

pub fn legendrian_positivity(x: &LegendrianClass) -> PositivityReport<LegendrianKey> {
    let text = x.expansion.to_string();
    PositivityReport::new(text.clone(), text, x.expansion.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positivity::Verdict;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        let x = legendrian_parse("q[1]", 4).unwrap();
        assert_eq!(x.expansion().len(), 1);
        assert_eq!(x.get(&sp(&[1]), 0, 0), 1.into());

        let x = legendrian_parse("3*q[2] + v2*q[1]", 4).unwrap();
        assert_eq!(x.get(&sp(&[2]), 0, 0), 3.into());
        assert_eq!(x.get(&sp(&[1]), 0, 1), 1.into());
        assert_eq!(x.degree(), 2);

        let x = legendrian_parse("(v1 + v2)^2*q[1] - v1^2*q[1]", 4).unwrap();
        assert_eq!(x.get(&sp(&[1]), 1, 1), 2.into());
        assert_eq!(x.get(&sp(&[1]), 0, 2), 1.into());
        assert_eq!(x.expansion().len(), 2);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(legendrian_parse("q[2] + q[1]", 4), Err(Error::Inhomogeneous)));
        assert!(matches!(legendrian_parse("q[2]*q[1]", 4), Err(Error::BasisProduct(..))));
        assert!(matches!(legendrian_parse("c1*q[1]", 4), Err(Error::ForeignGenerator(_))));
        assert!(matches!(legendrian_parse("q[2,2]", 4), Err(Error::Parse(_))));
        assert!(matches!(legendrian_parse("q[3]", 2), Err(Error::Containment { .. })));
        assert!(matches!(legendrian_parse("v1^3", 2), Err(Error::Containment { .. })));
    }

    #[test]
    fn slices_and_positivity() {
        let x = legendrian_parse("12*q[3] + 3*q[2,1] + (3*v1 + 7*v2)*q[2] + (v1*v2 + v2^2)*q[1]", 4).unwrap();
        let bold = lagrangian_part(&x);
        assert_eq!(bold, QExpansion::from_terms(3, [(sp(&[3]), 12.into()), (sp(&[2, 1]), 3.into())]));
        assert_eq!(legendrian_positivity(&x).verdict, Verdict::Positive);

        let y = legendrian_parse("q[2] - v1*q[1]", 4).unwrap();
        let r = legendrian_positivity(&y);
        assert_eq!(r.verdict, Verdict::NotNonnegative);
        assert_eq!(r.witnesses, vec![(LegendrianKey::new(sp(&[1]), 1, 0), BigInt::from(-1))]);
        assert_eq!(
            r.to_json()["witnesses"].to_string(),
            r#"[{"a":1,"b":0,"coeff":"-1","strict_partition":[1]}]"#
        );
    }

    #[test]
    fn key_display() {
        assert_eq!(LegendrianKey::new(sp(&[2, 1]), 1, 2).to_string(), "q[2,1]*v1*v2^2");
        assert_eq!(LegendrianKey::unit().to_string(), "1");
    }
}
