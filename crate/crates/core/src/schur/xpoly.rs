//! Polynomials in explicit variables `x_1, x_2, …`, used where a symmetric
//! function has to be written out monomial by monomial.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::Ring;
use crate::error::{Error, Result};
use crate::partition::{enumerate_ssyt, Partition};

use super::SchurExpansion;

/// Exponent vectors carry no trailing zeros, so the variable count is implicit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XPoly {
    terms: HashMap<Vec<u32>, BigInt>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl XPoly {
    pub fn constant(k: impl Into<BigInt>) -> Self {
        let mut p = XPoly::default();
        p.add_term(Vec::new(), k.into());
        p
    }

    /// `Σ w_i x_i`.
    pub fn linear(weights: &[u32]) -> Self {
        let mut p = XPoly::default();
        for (i, &w) in weights.iter().enumerate() {
            let mut e = vec![0; i + 1];
            e[i] = 1;
            p.add_term(e, w.into());
        }
        p
    }

    /// `s_λ(x_1, …, x_n)` as a sum over semistandard tableaux.
    pub fn schur(lambda: &Partition, n: u32) -> Self {
        let mut p = XPoly::default();
        for t in enumerate_ssyt(lambda, n) {
            p.add_term(t.weight(n), BigInt::one());
        }
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, k: BigInt) {
        if k.is_zero() {
            return;
        }
        let key = trim(exps);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += k;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(&trim(exps.to_vec())).cloned().unwrap_or_default()
    }

    pub fn scale(&self, k: &BigInt) -> XPoly {
        let mut out = XPoly::default();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    /// Lexicographically largest exponent vector.
    fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().max_by(|a, b| a.0.cmp(b.0))
    }

    /// Writes a symmetric polynomial in `n` variables as a combination of
    /// `s_ν(x_1..x_n)` by repeatedly cancelling the lex-leading monomial.
    pub fn peel_schur(&self, n: u32, degree: u32) -> Result<SchurExpansion> {
        let mut rest = self.clone();
        let mut out = SchurExpansion::zero(degree);
        let mut cache: HashMap<Partition, XPoly> = HashMap::new();
        while let Some((lead, k)) = rest.leading() {
            let nu = Partition::new(lead.clone())?;
            if nu.weight() != degree {
                return Err(Error::Inhomogeneous);
            }
            if nu.len() > n as usize {
                return Err(Error::ForeignGenerator(format!("x{}", nu.len())));
            }
            let k = k.clone();
            let s = cache.entry(nu.clone()).or_insert_with(|| XPoly::schur(&nu, n));
            rest = rest.sub(&s.scale(&k));
            out.add_term(nu, k);
        }
        Ok(out)
    }
}

impl Ring for XPoly {
    fn zero() -> Self {
        XPoly::default()
    }

    fn one() -> Self {
        XPoly::constant(1)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = XPoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let len = ea.len().max(eb.len());
                let e = (0..len)
                    .map(|i| ea.get(i).unwrap_or(&0) + eb.get(i).unwrap_or(&0))
                    .collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}
