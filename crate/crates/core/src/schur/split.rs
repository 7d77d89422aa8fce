//! Splitting supersymmetric classes into `s_α(E) · s_β(F*)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::{Assignment, CPolynomial, Family, Generator, Monomial};
use crate::error::{Error, Result};
use crate::partition::Partition;

use super::expand::to_schur_in;
use super::jt::schur_jt;
use super::BundleSymbol;

/// Coefficients `b_{αβ}` of `Σ b_{αβ} s_α(E) s_β(F*)`, keyed by `(α, β)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiSchurExpansion {
    coeffs: BTreeMap<(Partition, Partition), BigInt>,
}

impl BiSchurExpansion {
    pub fn get(&self, alpha: &Partition, beta: &Partition) -> BigInt {
        self.coeffs
            .get(&(alpha.clone(), beta.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Partition, Partition), &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The `β = ∅` slice as a map `α → b_{α,∅}`.
    pub fn pure_e_slice(&self) -> BTreeMap<Partition, BigInt> {
        self.coeffs
            .iter()
            .filter(|((_, beta), _)| beta.is_empty())
            .map(|((alpha, _), c)| (alpha.clone(), c.clone()))
            .collect()
    }

    fn add(&mut self, alpha: Partition, beta: Partition, c: BigInt) {
        let slot = self.coeffs.entry((alpha.clone(), beta.clone())).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(alpha, beta));
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|((a, b), c)| json!({"alpha": a, "beta": b, "coeff": c.to_string()}))
                .collect(),
        )
    }
}

fn bundles(rank_e: Option<u32>, rank_f: Option<u32>) -> (BundleSymbol, BundleSymbol) {
    (
        BundleSymbol::new(Family::C, rank_e),
        BundleSymbol::new(Family::CPrime, rank_f),
    )
}

/// `s_λ(E - F) = Σ b_{αβ} s_α(E) s_β(F*)`, with `E` in the `c` generators and
/// `F` in the `c'` generators. Ranks, when given, are applied before splitting.
pub fn super_split(lambda: &Partition, rank_e: Option<u32>, rank_f: Option<u32>) -> Result<BiSchurExpansion> {
    let (e, f) = bundles(rank_e, rank_f);
    let s = schur_jt(lambda, &e, &f)?;
    split_in_dual(&f.specialize(&e.specialize(&s)), rank_e, rank_f)
}

/// Reads `p` as a polynomial in `c_i(E - F)` and splits it the same way.
pub fn split_difference(p: &CPolynomial, rank_e: Option<u32>, rank_f: Option<u32>) -> Result<BiSchurExpansion> {
    let (e, f) = bundles(rank_e, rank_f);
    let mut assignment = Assignment::new();
    for g in p.generators() {
        let Generator::C(i) = g else {
            return Err(Error::ForeignGenerator(g.to_string()));
        };
        assignment.insert(g, schur_jt(&Partition::column(i), &e, &f)?);
    }
    let q = p.specialize(&assignment)?;
    split_in_dual(&f.specialize(&e.specialize(&q)), rank_e, rank_f)
}

/// Rewrites `c_j(F)` as `(-1)^j c_j(F*)` and separates the two families.
fn split_in_dual(p: &CPolynomial, rank_e: Option<u32>, rank_f: Option<u32>) -> Result<BiSchurExpansion> {
    let dualize: Assignment = p
        .generators()
        .into_iter()
        .filter_map(|g| match g {
            Generator::CPrime(j) => {
                let c = CPolynomial::gen(g);
                Some((g, if j % 2 == 0 { c } else { -c }))
            }
            _ => None,
        })
        .collect();
    let p = p.specialize(&dualize)?;

    // Group by the F*-part of each monomial.
    let mut by_f: BTreeMap<Monomial, CPolynomial> = BTreeMap::new();
    for (m, k) in p.terms() {
        let (ep, fp): (Vec<_>, Vec<_>) =
            m.powers().iter().partition(|(g, _)| g.family() == Some(Family::C));
        by_f.entry(Monomial::from_powers(fp))
            .or_default()
            .add_term(Monomial::from_powers(ep), k.clone());
    }

    // For each α collect the F*-polynomial multiplying s_α(E).
    let bound = |r: Option<u32>| r.map(|r| r as usize);
    let mut by_alpha: BTreeMap<Partition, CPolynomial> = BTreeMap::new();
    for (fm, e_part) in &by_f {
        for (alpha, k) in to_schur_in(Family::C, e_part, bound(rank_e))?.iter() {
            by_alpha.entry(alpha.clone()).or_default().add_term(fm.clone(), k.clone());
        }
    }

    let mut out = BiSchurExpansion::default();
    for (alpha, f_part) in by_alpha {
        for (beta, k) in to_schur_in(Family::CPrime, &f_part, bound(rank_f))?.iter() {
            out.add(alpha.clone(), beta.clone(), k.clone());
        }
    }
    Ok(out)
}
