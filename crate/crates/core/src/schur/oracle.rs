//! Verification path that never touches the determinantal `c`-polynomials:
//! Schur polynomials are written as tableau sums in explicit variables and
//! products are decomposed by peeling leading monomials.

use std::collections::HashMap;

use crate::algebra::{CPolynomial, Family, Ring};
use crate::error::{Error, Result};
use crate::partition::Partition;

use super::xpoly::XPoly;
use super::SchurExpansion;

pub const DEFAULT_ORACLE_BOUND: u32 = 8;

/// `s_λ · s_μ` computed in `|λ| + |μ|` explicit variables.
pub fn lr_oracle(lambda: &Partition, mu: &Partition, bound: u32) -> Result<SchurExpansion> {
    let n = lambda.weight() + mu.weight();
    if n > bound {
        return Err(Error::WorkBound(format!("|λ|+|μ| = {n} exceeds the oracle bound {bound}")));
    }
    let product = XPoly::schur(lambda, n).mul(&XPoly::schur(mu, n));
    product.peel_schur(n, n)
}

/// Schur expansion of a `c`-polynomial by substituting `c_i = e_i(x_1..x_d)`
/// with `d` the degree, expanding, and peeling.
pub fn monomial_schur_expansion(p: &CPolynomial) -> Result<SchurExpansion> {
    let Some(d) = p.homogeneous_degree()? else {
        return Ok(SchurExpansion::zero(0));
    };
    let mut elementary: HashMap<u32, XPoly> = HashMap::new();
    let mut total = XPoly::default();
    for (m, k) in p.terms() {
        let mut term = XPoly::constant(k.clone());
        for &(g, e) in m.powers() {
            if g.family() != Some(Family::C) {
                return Err(Error::ForeignGenerator(g.to_string()));
            }
            let i = g.index().unwrap();
            let ei = elementary
                .entry(i)
                .or_insert_with(|| XPoly::schur(&Partition::column(i), d))
                .clone();
            for _ in 0..e {
                term = term.mul(&ei);
            }
        }
        total = total.add(&term);
    }
    total.peel_schur(d, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn pieri_examples() {
        let x = lr_oracle(&p(&[1]), &p(&[1]), 8).unwrap();
        assert_eq!(x, SchurExpansion::from_terms(2, [(p(&[2]), 1.into()), (p(&[1, 1]), 1.into())]));
        let x = lr_oracle(&p(&[1]), &p(&[2, 1]), 8).unwrap();
        let expected = SchurExpansion::from_terms(
            4,
            [(p(&[3, 1]), 1.into()), (p(&[2, 2]), 1.into()), (p(&[2, 1, 1]), 1.into())],
        );
        assert_eq!(x, expected);
    }

    #[test]
    fn unit_and_bound() {
        let lam = p(&[3, 1]);
        assert_eq!(lr_oracle(&lam, &Partition::empty(), 8).unwrap(), SchurExpansion::singleton(lam.clone()));
        assert!(matches!(lr_oracle(&lam, &lam, 7), Err(Error::WorkBound(_))));
    }

    #[test]
    fn monomial_route_on_c_polynomials() {
        let c = CPolynomial::c;
        let i22 = &c(2).pow(2) - &(&c(1) * &c(3));
        assert_eq!(monomial_schur_expansion(&i22).unwrap(), SchurExpansion::singleton(p(&[2, 2])));
        assert_eq!(monomial_schur_expansion(&c(3)).unwrap(), SchurExpansion::singleton(p(&[1, 1, 1])));
    }
}
