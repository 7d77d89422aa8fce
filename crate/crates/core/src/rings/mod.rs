//! Cohomology of the Grassmannian and the Lagrangian Grassmannian.

mod grassmannian;
mod lagrangian;

pub use grassmannian::GrassmannianRing;
pub use lagrangian::{DimensionCertificate, LagrangianRing};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::Result;
use crate::expansion::BasisLabel;

/// `∫ X^a · X^b` for every pair of basis classes of complementary degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix<K> {
    pub entries: Vec<(K, K, BigInt)>,
}

impl<K: BasisLabel + serde::Serialize> PairingMatrix<K> {
    /// True iff every entry is 1 on `(a, dual(a))` and 0 elsewhere.
    pub fn is_permutation_of(&self, mut dual: impl FnMut(&K) -> Result<K>) -> Result<bool> {
        for (a, b, v) in &self.entries {
            let expected = if *b == dual(a)? { 1 } else { 0 };
            if *v != BigInt::from(expected) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(a, b, v)| json!({"left": a, "right": b, "value": v.to_string()}))
                .collect(),
        )
    }
}
