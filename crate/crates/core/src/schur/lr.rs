use crate::algebra::CPolynomial;
use crate::parallel::{self, Mode};
use crate::partition::{enumerate_partitions, Partition};

use super::expand::to_schur;
use super::jt::schur_dual_jt;
use super::oracle::lr_oracle;
use super::SchurExpansion;

/// Littlewood–Richardson expansion of `s_λ · s_μ`, obtained by multiplying the
/// determinantal polynomials and expanding the product in the Schur basis.
pub fn lr_multiply(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    let product: CPolynomial = &schur_dual_jt(lambda) * &schur_dual_jt(mu);
    to_schur(&product, None).expect("product of Schur polynomials is homogeneous in c")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrMismatch {
    pub lambda: Partition,
    pub mu: Partition,
    pub product: SchurExpansion,
    pub oracle: Option<SchurExpansion>,
}

/// Compares [`lr_multiply`] with [`lr_oracle`] on every ordered pair with
/// `|λ| + |μ| ≤ bound`, also flagging negative coefficients. Returns the
/// number of pairs checked and the failures.
pub fn lr_cross_check(bound: u32, mode: Mode) -> (usize, Vec<LrMismatch>) {
    let pairs: Vec<(Partition, Partition)> = (0..=bound)
        .flat_map(|a| {
            (0..=bound - a).flat_map(move |b| {
                let mus = enumerate_partitions(b, None, None);
                enumerate_partitions(a, None, None)
                    .into_iter()
                    .flat_map(move |l| mus.clone().into_iter().map(move |m| (l.clone(), m)))
            })
        })
        .collect();
    let failures = parallel::map(mode, &pairs, |(l, m)| {
        let product = lr_multiply(l, m);
        let oracle = lr_oracle(l, m, bound).ok();
        let ok = product.is_nonnegative() && oracle.as_ref() == Some(&product);
        (!ok).then(|| LrMismatch { lambda: l.clone(), mu: m.clone(), product, oracle })
    });
    (pairs.len(), failures.into_iter().flatten().collect())
}
