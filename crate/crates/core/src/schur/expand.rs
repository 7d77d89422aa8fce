use std::collections::HashMap;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::linalg::to_integer;
use crate::algebra::{CPolynomial, Family, RationalMatrix, Rref, SolveError};
use crate::error::{Error, Result};
use crate::parallel::Memo;
use crate::partition::{enumerate_partitions, Partition};

use super::jt::{schur_dual_jt_in, schur_truncated};
use super::SchurExpansion;

/// Monomial-to-Schur transition data for one degree: rows are the
/// `c`-monomials of that degree, columns the admissible Schur classes.
struct Transition {
    columns: Vec<Partition>,
    rows: HashMap<Partition, usize>,
    rref: Rref,
}

type TransitionKey = (Family, u32, Option<usize>);

static TRANSITIONS: LazyLock<Memo<TransitionKey, Arc<Transition>>> = LazyLock::new(Memo::new);

fn transition(family: Family, degree: u32, length_bound: Option<usize>) -> Arc<Transition> {
    TRANSITIONS.get_or_insert_with(&(family, degree, length_bound), || {
        let columns = enumerate_partitions(degree, None, length_bound);
        // Modulo c_k = 0 for k > r the bounded Schur classes are a basis of
        // the polynomials in c_1..c_r.
        let max_index = length_bound.map(|r| r as u32);
        let row_labels = enumerate_partitions(degree, max_index, None);
        let rows: HashMap<Partition, usize> =
            row_labels.into_iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut a = RationalMatrix::zeros(rows.len(), columns.len());
        for (j, lam) in columns.iter().enumerate() {
            let s = match max_index {
                Some(r) => schur_truncated(family, lam, r),
                None => schur_dual_jt_in(family, lam),
            };
            for (m, k) in s.terms() {
                let i = rows[&m.as_partition(family).expect("Schur polynomial leaves its family")];
                a.set(i, j, BigRational::from_integer(k.clone()));
            }
        }
        let rref = Rref::new(&a);
        assert!(
            rref.is_unique_on(0..columns.len()),
            "Schur classes of degree {degree} are linearly dependent"
        );
        Arc::new(Transition { columns, rows, rref })
    })
}

/// Expands a polynomial in a single Chern family over the Schur basis,
/// optionally restricted to partitions with at most `length_bound` rows.
pub fn to_schur(p: &CPolynomial, length_bound: Option<usize>) -> Result<SchurExpansion> {
    let family = p.single_family()?.unwrap_or(Family::C);
    to_schur_in(family, p, length_bound)
}

pub fn to_schur_in(family: Family, p: &CPolynomial, length_bound: Option<usize>) -> Result<SchurExpansion> {
    let Some(degree) = p.homogeneous_degree()? else {
        return Ok(SchurExpansion::zero(0));
    };
    if let Some(g) = p.generators().into_iter().find(|g| g.family() != Some(family)) {
        return Err(if g.family().is_some() {
            Error::MixedFamilies
        } else {
            Error::ForeignGenerator(g.to_string())
        });
    }
    let t = transition(family, degree, length_bound);
    let mut b = vec![BigRational::from_integer(BigInt::default()); t.rows.len()];
    for (m, k) in p.terms() {
        let Some(&row) = t.rows.get(&m.as_partition(family).unwrap()) else {
            return Err(Error::Inexpressible(length_bound.unwrap_or(usize::MAX)));
        };
        b[row] = BigRational::from_integer(k.clone());
    }
    let x = t.rref.solve(&b).map_err(|e| match e {
        SolveError::Inconsistent { .. } => Error::Inexpressible(length_bound.unwrap_or(usize::MAX)),
        other => other.into(),
    })?;
    let mut out = SchurExpansion::zero(degree);
    for (lam, q) in t.columns.iter().zip(&x) {
        let k = to_integer(q).ok_or_else(|| Error::NonIntegral(q.to_string()))?;
        out.add_term(lam.clone(), k);
    }
    Ok(out)
}

/// Substitutes the determinantal Schur polynomials back in.
pub fn from_schur(x: &SchurExpansion, family: Family) -> CPolynomial {
    let mut out = CPolynomial::zero();
    for (lam, k) in x.iter() {
        out += &schur_dual_jt_in(family, lam).scale(k);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Generator;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c(i: u32) -> CPolynomial {
        CPolynomial::c(i)
    }

    #[test]
    fn thom_examples() {
        let i22 = &c(2).pow(2) - &(&c(1) * &c(3));
        let x = to_schur(&i22, None).unwrap();
        assert_eq!(x, SchurExpansion::singleton(p(&[2, 2])));

        // Values frozen from the monomial oracle (see tests/oracles.rs).
        let a3 = &(&c(1).pow(3) + &(&c(1) * &c(2)).scale(&3.into())) + &c(3).scale(&2.into());
        let x = to_schur(&a3, None).unwrap();
        let expected =
            SchurExpansion::from_terms(3, [(p(&[3]), 1.into()), (p(&[2, 1]), 5.into()), (p(&[1, 1, 1]), 6.into())]);
        assert_eq!(x, expected);
    }

    #[test]
    fn basis_round_trip_up_to_weight_6() {
        for d in 0..=6 {
            for lam in enumerate_partitions(d, None, None) {
                let x = to_schur(&super::super::schur_dual_jt(&lam), None).unwrap();
                assert_eq!(x, SchurExpansion::singleton(lam));
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!(to_schur(&(&c(1) + &c(2)), None), Err(Error::Inhomogeneous));
        let mixed = &c(1) * &CPolynomial::gen(Generator::CPrime(1));
        assert_eq!(to_schur(&mixed, None), Err(Error::MixedFamilies));
        let v = CPolynomial::gen(Generator::V1);
        assert!(matches!(to_schur(&v, None), Err(Error::ForeignGenerator(_))));
        // c3 needs three rows.
        assert_eq!(to_schur(&c(3), Some(2)), Err(Error::Inexpressible(2)));
    }

    #[test]
    fn length_bound_and_constants() {
        let x = to_schur(&(&c(1) * &c(1)), Some(2)).unwrap();
        assert_eq!(x, SchurExpansion::from_terms(2, [(p(&[2]), 1.into()), (p(&[1, 1]), 1.into())]));
        let k = to_schur(&CPolynomial::constant(7), None).unwrap();
        assert_eq!(k.get(&Partition::empty()), 7.into());
        assert!(to_schur(&CPolynomial::zero(), None).unwrap().is_zero());
    }

    #[test]
    fn primed_family() {
        let x = to_schur(&CPolynomial::chern(Family::CPrime, 2), None).unwrap();
        assert_eq!(x, SchurExpansion::singleton(p(&[1, 1])));
        assert_eq!(from_schur(&x, Family::CPrime), CPolynomial::chern(Family::CPrime, 2));
    }
}
