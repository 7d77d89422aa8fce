use crate::algebra::{determinant, Ring};
use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::partition::{enumerate_ssyt, Partition};
use crate::schur::xpoly::XPoly;

/// Limits on the explicit-variable computation behind [`schur_bundle_class`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BundleWorkBound {
    pub max_roots: usize,
    pub max_class_degree: u32,
}

impl Default for BundleWorkBound {
    fn default() -> Self {
        BundleWorkBound { max_roots: 20, max_class_degree: 4 }
    }
}

/// `s_μ(S^λ E)` for `E` of rank `n`, expanded over `s_ν(E)`.
pub fn schur_bundle_class(lambda: &Partition, mu: &Partition, n: u32) -> Result<SchurExpansion> {
    schur_bundle_class_bounded(lambda, mu, n, BundleWorkBound::default())
}

pub fn schur_bundle_class_bounded(
    lambda: &Partition,
    mu: &Partition,
    n: u32,
    bound: BundleWorkBound,
) -> Result<SchurExpansion> {
    if mu.weight() > bound.max_class_degree {
        return Err(Error::WorkBound(format!(
            "|μ| = {} exceeds {}",
            mu.weight(),
            bound.max_class_degree
        )));
    }
    // Chern roots of S^λ E: the weights of the tableaux of shape λ.
    let tableaux = enumerate_ssyt(lambda, n);
    if tableaux.len() > bound.max_roots {
        return Err(Error::WorkBound(format!(
            "S^{lambda} of a rank-{n} bundle has {} Chern roots, limit {}",
            tableaux.len(),
            bound.max_roots
        )));
    }
    let top = mu.weight() as usize;
    let mut e = vec![XPoly::one()];
    e.resize(top + 1, XPoly::zero());
    for t in &tableaux {
        let root = XPoly::linear(&t.weight(n));
        for k in (1..=top).rev() {
            e[k] = e[k].add(&root.mul(&e[k - 1]));
        }
    }
    let conj = mu.conjugate();
    let l = conj.len();
    let elem = |k: i64| -> XPoly {
        if k < 0 || k as usize > top {
            XPoly::zero()
        } else {
            e[k as usize].clone()
        }
    };
    let m: Vec<Vec<XPoly>> = (0..l)
        .map(|i| (0..l).map(|j| elem(conj.part(i) as i64 - i as i64 + j as i64)).collect())
        .collect();
    determinant(&m).peel_schur(n, mu.weight())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn symmetric_square_of_a_plane() {
        let x = schur_bundle_class(&p(&[2]), &p(&[1]), 2).unwrap();
        assert_eq!(x, SchurExpansion::from_terms(1, [(p(&[1]), 3.into())]));
        let x = schur_bundle_class(&p(&[2]), &p(&[1, 1]), 2).unwrap();
        assert_eq!(x, SchurExpansion::from_terms(2, [(p(&[2]), 2.into()), (p(&[1, 1]), 6.into())]));
    }

    #[test]
    fn identity_functor() {
        for n in 1..=3 {
            for mu in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])] {
                let x = schur_bundle_class(&p(&[1]), &mu, n).unwrap();
                let expected = if mu.len() <= n as usize {
                    SchurExpansion::singleton(mu.clone())
                } else {
                    SchurExpansion::zero(mu.weight())
                };
                assert_eq!(x, expected, "μ = {mu}, n = {n}");
            }
        }
    }

    #[test]
    fn work_bound() {
        assert!(matches!(schur_bundle_class(&p(&[1]), &p(&[5]), 2), Err(Error::WorkBound(_))));
        // S^3 of a rank-4 bundle has 20 roots; S^4 has 35.
        assert!(schur_bundle_class(&p(&[3]), &p(&[1]), 4).is_ok());
        assert!(matches!(schur_bundle_class(&p(&[4]), &p(&[1]), 4), Err(Error::WorkBound(_))));
    }
}
