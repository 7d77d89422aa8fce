//! Schur-positivity certificates, the Thom-polynomial corpus, and Schur-bundle classes.
//!
//! A nonzero Chern polynomial is numerically positive on ample bundles iff
//! every coefficient of its Schur expansion is nonnegative.

mod bundle;
mod thom;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::algebra::CPolynomial;
use crate::error::Result;
use crate::expansion::{term_json, BasisLabel, Expansion, SchurExpansion};
use crate::partition::Partition;
use crate::schur::to_schur;

pub use bundle::{schur_bundle_class, schur_bundle_class_bounded, BundleWorkBound};
pub use thom::{
    classical_table, legendrian_table, verify_classical, verify_lagrangian, verify_legendrian, LegendrianTableEntry,
    Table, ThomTableEntry,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Positive,
    Zero,
    NotNonnegative,
}

impl Verdict {
    pub fn of<K: BasisLabel>(x: &Expansion<K>) -> Verdict {
        if x.is_zero() {
            Verdict::Zero
        } else if x.is_nonnegative() {
            Verdict::Positive
        } else {
            Verdict::NotNonnegative
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Positive => "POSITIVE",
            Verdict::Zero => "ZERO",
            Verdict::NotNonnegative => "NOT_NONNEGATIVE",
        }
    }
}

/// An expansion together with its verdict and any negative coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport<K: BasisLabel> {
    pub name: String,
    pub input: String,
    pub expansion: Expansion<K>,
    pub verdict: Verdict,
    pub witnesses: Vec<(K, BigInt)>,
    /// Extra named facts (consistency checks, diagnostics) attached by callers.
    pub details: BTreeMap<String, Value>,
}

impl<K: BasisLabel> PositivityReport<K> {
    pub fn new(name: impl Into<String>, input: impl Into<String>, expansion: Expansion<K>) -> Self {
        let verdict = Verdict::of(&expansion);
        let witnesses = expansion.negative_terms();
        PositivityReport {
            name: name.into(),
            input: input.into(),
            expansion,
            verdict,
            witnesses,
            details: BTreeMap::new(),
        }
    }

    pub fn with_detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.expansion.coefficient_sum()
    }

    /// True iff every boolean detail is true.
    pub fn checks_pass(&self) -> bool {
        self.details.values().all(|v| v.as_bool() != Some(false))
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("name".into(), json!(self.name));
        obj.insert("input".into(), json!(self.input));
        obj.insert("verdict".into(), json!(self.verdict.as_str()));
        obj.insert("expansion".into(), self.expansion.to_json());
        obj.insert("coefficient_sum".into(), json!(self.coefficient_sum().to_string()));
        if self.verdict == Verdict::NotNonnegative {
            let w = self.witnesses.iter().map(|(k, c)| term_json(k, c)).collect();
            obj.insert("witnesses".into(), Value::Array(w));
        }
        for (k, v) in &self.details {
            obj.insert(k.clone(), v.clone());
        }
        Value::Object(obj)
    }
}

/// Expands `p` over the Schur basis and applies the positivity criterion.
pub fn certify(p: &CPolynomial, length_bound: Option<usize>) -> Result<PositivityReport<Partition>> {
    let x = to_schur(p, length_bound)?;
    let text = p.to_string();
    Ok(PositivityReport::new(text.clone(), text, x))
}

/// Support partitions lying outside the `(n, m)`-hook.
pub fn hook_violations(x: &SchurExpansion, n: usize, m: u32) -> Vec<Partition> {
    x.iter().map(|(l, _)| l).filter(|l| !l.in_hook(n, m)).cloned().collect()
}

/// Smallest `k` whose `(k, k)`-hook holds the whole support.
pub fn smallest_square_hook(x: &SchurExpansion) -> u32 {
    x.iter()
        .map(|(l, _)| (0..).find(|&k| l.in_hook(k as usize, k)).unwrap())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::schur_dual_jt;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn certify_examples() {
        let c = CPolynomial::c;
        let r = certify(&(&c(1).pow(2) - &c(2)), None).unwrap();
        assert_eq!(r.verdict, Verdict::Positive);
        assert_eq!(r.expansion, SchurExpansion::singleton(p(&[2])));

        let r = certify(&(&c(2) - &c(1).pow(2)), None).unwrap();
        assert_eq!(r.verdict, Verdict::NotNonnegative);
        assert_eq!(r.witnesses, vec![(p(&[2]), BigInt::from(-1))]);
        assert!(r.to_json().get("witnesses").is_some());

        let r = certify(&CPolynomial::zero(), None).unwrap();
        assert_eq!(r.verdict, Verdict::Zero);
        assert!(r.to_json().get("witnesses").is_none());

        assert!(certify(&(&c(1) + &c(2)), None).is_err());
    }

    #[test]
    fn schur_classes_certify_as_singletons() {
        for d in 1..=6 {
            for lam in enumerate_partitions(d, None, None) {
                let r = certify(&schur_dual_jt(&lam), None).unwrap();
                assert_eq!(r.verdict, Verdict::Positive);
                assert_eq!(r.expansion, SchurExpansion::singleton(lam));
            }
        }
    }

    #[test]
    fn hook_helpers() {
        let x = SchurExpansion::from_terms(4, [(p(&[2, 2]), 1.into()), (p(&[4]), 1.into())]);
        assert_eq!(smallest_square_hook(&x), 2);
        assert_eq!(hook_violations(&x, 1, 1), vec![p(&[2, 2])]);
        assert!(hook_violations(&x, 2, 0).is_empty());
    }
}
