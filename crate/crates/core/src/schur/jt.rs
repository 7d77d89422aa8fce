//! Schur functions as determinants in Chern generators.

use std::sync::LazyLock;

use crate::algebra::{determinant, CPolynomial, Family};
use crate::error::{Error, Result};
use crate::parallel::Memo;
use crate::partition::Partition;

use super::BundleSymbol;

static COMPLETE: LazyLock<Memo<(Family, u32), CPolynomial>> = LazyLock::new(Memo::new);
static DUAL_JT: LazyLock<Memo<(Family, Partition), CPolynomial>> = LazyLock::new(Memo::new);
static TRUNCATED: LazyLock<Memo<(Family, Partition, u32), CPolynomial>> = LazyLock::new(Memo::new);

/// `h_k(E)` in the Chern classes of `E`, from `Σ_{i=0}^{k} (-1)^i c_i h_{k-i} = [k = 0]`.
///
/// The result is universal (no rank truncation); see [`BundleSymbol::specialize`].
pub fn complete_from_elementary(k: u32, bundle: &BundleSymbol) -> CPolynomial {
    complete_in(bundle.family(), k)
}

pub(crate) fn complete_in(family: Family, k: u32) -> CPolynomial {
    if k == 0 {
        return CPolynomial::one();
    }
    COMPLETE.get_or_insert_with(&(family, k), || {
        let mut h = CPolynomial::zero();
        for i in 1..=k {
            let term = &CPolynomial::chern(family, i) * &complete_in(family, k - i);
            if i % 2 == 1 {
                h += &term;
            } else {
                h -= &term;
            }
        }
        h
    })
}

/// `s_k(E - F) = Σ_j (-1)^j c_j(F) h_{k-j}(E)`, the `z^k` coefficient of
/// `∏(1 - f z) / ∏(1 - e z)`.
pub fn supersymmetric_s(k: u32, e: &BundleSymbol, f: &BundleSymbol) -> Result<CPolynomial> {
    check_families(e, f)?;
    Ok(super_s_in(e.family(), f.family(), k as i64))
}

fn check_families(e: &BundleSymbol, f: &BundleSymbol) -> Result<()> {
    if e.family() == f.family() {
        return Err(Error::FamilyClash(e.family().to_string()));
    }
    Ok(())
}

fn super_s_in(e: Family, f: Family, k: i64) -> CPolynomial {
    if k < 0 {
        return CPolynomial::zero();
    }
    let k = k as u32;
    let mut out = CPolynomial::zero();
    for j in 0..=k {
        let term = &CPolynomial::chern(f, j) * &complete_in(e, k - j);
        if j % 2 == 0 {
            out += &term;
        } else {
            out -= &term;
        }
    }
    out
}

/// `s_λ(E - F) = det[s_{λ_i - i + j}(E - F)]`, with the ranks of `e` and `f`
/// applied entrywise.
pub fn schur_jt(lambda: &Partition, e: &BundleSymbol, f: &BundleSymbol) -> Result<CPolynomial> {
    check_families(e, f)?;
    let l = lambda.len();
    let matrix: Vec<Vec<CPolynomial>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let k = lambda.part(i) as i64 - i as i64 + j as i64;
                    f.specialize(&e.specialize(&super_s_in(e.family(), f.family(), k)))
                })
                .collect()
        })
        .collect();
    Ok(determinant(&matrix))
}

/// `s_λ = det[c_{μ_i - i + j}]` with `μ` the conjugate of `λ`, in the `C` family.
pub fn schur_dual_jt(lambda: &Partition) -> CPolynomial {
    schur_dual_jt_in(Family::C, lambda)
}

pub fn schur_dual_jt_in(family: Family, lambda: &Partition) -> CPolynomial {
    DUAL_JT.get_or_insert_with(&(family, lambda.clone()), || {
        let mu = lambda.conjugate();
        let l = mu.len();
        let matrix: Vec<Vec<CPolynomial>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let idx = mu.part(i) as i64 - i as i64 + j as i64;
                        if idx < 0 {
                            CPolynomial::zero()
                        } else {
                            CPolynomial::chern(family, idx as u32)
                        }
                    })
                    .collect()
            })
            .collect();
        determinant(&matrix)
    })
}

/// `s_λ` modulo `c_k = 0` for `k > rank`, i.e. for a bundle of that rank.
///
/// Uses `det[h_{λ_i - i + j}]`, whose size is `ℓ(λ) ≤ rank`, so it stays
/// small where the conjugate determinant would not.
pub fn schur_truncated(family: Family, lambda: &Partition, rank: u32) -> CPolynomial {
    if lambda.len() > rank as usize {
        return CPolynomial::zero();
    }
    TRUNCATED.get_or_insert_with(&(family, lambda.clone(), rank), || {
        let l = lambda.len();
        let h = |k: i64| {
            if k < 0 {
                CPolynomial::zero()
            } else {
                complete_in(family, k as u32).truncate(family, rank)
            }
        };
        let matrix: Vec<Vec<CPolynomial>> = (0..l)
            .map(|i| (0..l).map(|j| h(lambda.part(i) as i64 - i as i64 + j as i64)).collect())
            .collect();
        determinant(&matrix)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn e() -> BundleSymbol {
        BundleSymbol::unbounded(Family::C)
    }

    fn f() -> BundleSymbol {
        BundleSymbol::unbounded(Family::CPrime)
    }

    #[test]
    fn complete_examples() {
        assert_eq!(complete_from_elementary(0, &e()), CPolynomial::one());
        assert_eq!(complete_from_elementary(1, &e()), CPolynomial::c(1));
        assert_eq!(complete_from_elementary(3, &e()).to_string(), "c1^3 - 2*c1*c2 + c3");
    }

    #[test]
    fn supersymmetric_low_degree() {
        assert_eq!(
            supersymmetric_s(2, &e(), &f()).unwrap().to_string(),
            "c1^2 - c2 - c1*c'1 + c'2"
        );
        // F of rank 0 collapses to h_k(E).
        let zero_f = BundleSymbol::new(Family::CPrime, Some(0));
        for k in 0..6 {
            let s = zero_f.specialize(&supersymmetric_s(k, &e(), &zero_f).unwrap());
            assert_eq!(s, complete_from_elementary(k, &e()));
        }
        // E of rank 0: s_k(-F) = (-1)^k c_k(F).
        let zero_e = BundleSymbol::new(Family::C, Some(0));
        for k in 0..6 {
            let s = zero_e.specialize(&supersymmetric_s(k, &zero_e, &f()).unwrap());
            let expected = CPolynomial::chern(Family::CPrime, k);
            assert_eq!(s, if k % 2 == 0 { expected } else { -expected });
        }
    }

    #[test]
    fn family_clash_is_rejected() {
        assert!(matches!(supersymmetric_s(1, &e(), &e()), Err(Error::FamilyClash(_))));
        assert!(schur_jt(&p(&[1]), &f(), &f()).is_err());
    }

    #[test]
    fn dual_jt_examples() {
        for i in 1..=6 {
            assert_eq!(schur_dual_jt(&Partition::column(i)), CPolynomial::c(i));
        }
        assert_eq!(schur_dual_jt(&p(&[2])).to_string(), "c1^2 - c2");
        assert_eq!(schur_dual_jt(&p(&[2, 1])).to_string(), "c1*c2 - c3");
        assert_eq!(schur_dual_jt(&p(&[2, 2])).to_string(), "c2^2 - c1*c3");
        assert_eq!(schur_dual_jt(&Partition::empty()), CPolynomial::one());
    }

    #[test]
    fn row_and_column_via_jt() {
        let zero_f = BundleSymbol::new(Family::CPrime, Some(0));
        let s = zero_f.specialize(&schur_jt(&p(&[4]), &e(), &zero_f).unwrap());
        assert_eq!(s, complete_from_elementary(4, &e()));
        let s11 = zero_f.specialize(&schur_jt(&p(&[1, 1]), &e(), &zero_f).unwrap());
        assert_eq!(s11, CPolynomial::c(2));
    }

    #[test]
    fn two_determinantal_forms_agree_up_to_weight_6() {
        let zero_f = BundleSymbol::new(Family::CPrime, Some(0));
        for d in 0..=6 {
            for lam in enumerate_partitions(d, None, None) {
                let jt = zero_f.specialize(&schur_jt(&lam, &e(), &zero_f).unwrap());
                assert_eq!(jt, schur_dual_jt(&lam), "λ = {lam}");
            }
        }
    }

    #[test]
    fn truncated_schur_matches_truncated_dual_form() {
        for rank in 0..=3 {
            for d in 0..=6 {
                for lam in enumerate_partitions(d, None, None) {
                    let want = schur_dual_jt(&lam).truncate(Family::C, rank);
                    assert_eq!(schur_truncated(Family::C, &lam, rank), want, "λ = {lam}, rank {rank}");
                }
            }
        }
    }
}
