//! Schur and supersymmetric Schur functions, Schur-basis expansion, and
//! Littlewood–Richardson products with an independent monomial oracle.

mod expand;
mod jt;
mod lr;
pub mod oracle;
mod split;
pub mod xpoly;

pub use expand::{from_schur, to_schur, to_schur_in};
pub use jt::{complete_from_elementary, schur_dual_jt, schur_dual_jt_in, schur_jt, schur_truncated, supersymmetric_s};
pub use lr::{lr_cross_check, lr_multiply, LrMismatch};
pub use oracle::{lr_oracle, DEFAULT_ORACLE_BOUND};
pub use split::{split_difference, super_split, BiSchurExpansion};

pub use crate::expansion::SchurExpansion;

use crate::algebra::{CPolynomial, Family};

/// The Chern generators of one bundle, with an optional rank.
///
/// Engines compute universally; the rank only enters through
/// [`BundleSymbol::specialize`], which sets `c_k = 0` for `k > rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BundleSymbol {
    family: Family,
    rank: Option<u32>,
}

impl BundleSymbol {
    pub fn new(family: Family, rank: Option<u32>) -> Self {
        BundleSymbol { family, rank }
    }

    pub fn unbounded(family: Family) -> Self {
        Self::new(family, None)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> Option<u32> {
        self.rank
    }

    pub fn specialize(&self, p: &CPolynomial) -> CPolynomial {
        match self.rank {
            Some(r) => p.truncate(self.family, r),
            None => p.clone(),
        }
    }
}
