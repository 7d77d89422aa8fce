//! Homogeneous integer combinations of basis classes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::partition::{Partition, StrictPartition};

/// Something that labels a basis class: has a degree and a JSON rendering.
pub trait BasisLabel: Ord + Clone + fmt::Display {
    fn degree(&self) -> u32;
    fn json_fields(&self, obj: &mut Map<String, Value>);
}

impl BasisLabel for Partition {
    fn degree(&self) -> u32 {
        self.weight()
    }

    fn json_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("partition".into(), serde_json::to_value(self).unwrap());
    }
}

impl BasisLabel for StrictPartition {
    fn degree(&self) -> u32 {
        self.weight()
    }

    fn json_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("strict_partition".into(), serde_json::to_value(self).unwrap());
    }
}

/// A finite map `label → nonzero integer`, all labels of one degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Expansion<K> {
    degree: u32,
    coeffs: BTreeMap<K, BigInt>,
}

pub type SchurExpansion = Expansion<Partition>;
pub type QExpansion = Expansion<StrictPartition>;

impl<K: BasisLabel> Expansion<K> {
    pub fn zero(degree: u32) -> Self {
        Expansion { degree, coeffs: BTreeMap::new() }
    }

    pub fn singleton(label: K) -> Self {
        let mut e = Self::zero(label.degree());
        e.add_term(label, BigInt::from(1));
        e
    }

    /// Panics if a label has the wrong degree.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (K, BigInt)>) -> Self {
        let mut e = Self::zero(degree);
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    pub fn add_term(&mut self, label: K, c: BigInt) {
        assert_eq!(label.degree(), self.degree, "label {label} has the wrong degree");
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(label.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&label);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn get(&self, label: &K) -> BigInt {
        self.coeffs.get(label).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.coeffs.iter()
    }

    /// Number of nonzero terms; emptiness is [`Self::is_zero`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn negative_terms(&self) -> Vec<(K, BigInt)> {
        self.coeffs
            .iter()
            .filter(|(_, c)| c.is_negative())
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect()
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Keeps the terms whose label satisfies `keep`.
    pub fn retain(&mut self, mut keep: impl FnMut(&K) -> bool) {
        self.coeffs.retain(|k, _| keep(k));
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).unwrap()
    }
}

impl<K: BasisLabel> Serialize for Expansion<K> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for (k, c) in &self.coeffs {
            seq.serialize_element(&term_json(k, c))?;
        }
        seq.end()
    }
}

pub(crate) fn term_json<K: BasisLabel>(label: &K, c: &BigInt) -> Value {
    let mut obj = Map::new();
    label.json_fields(&mut obj);
    obj.insert("coeff".into(), Value::String(c.to_string()));
    Value::Object(obj)
}

/// Prints e.g. `s(3) + 5 s(2,1) + 6 s(1,1,1)` style listings: `[(3):1, (2,1):5]`.
impl<K: BasisLabel> fmt::Display for Expansion<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}: {c}")?;
        }
        write!(f, "}}")
    }
}

impl<K: BasisLabel> fmt::Debug for Expansion<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expansion[deg {}]{}", self.degree, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn json_is_sorted_by_partition_order() {
        let e = SchurExpansion::from_terms(
            3,
            [(p(&[1, 1, 1]), 6.into()), (p(&[3]), 1.into()), (p(&[2, 1]), 5.into())],
        );
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"[{"coeff":"1","partition":[3]},{"coeff":"5","partition":[2,1]},{"coeff":"6","partition":[1,1,1]}]"#
        );
        assert_eq!(e.to_string(), "{(3): 1, (2,1): 5, (1,1,1): 6}");
        assert_eq!(e.coefficient_sum(), 12.into());
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut e = SchurExpansion::singleton(p(&[2]));
        e.add_term(p(&[2]), (-1).into());
        assert!(e.is_zero());
        assert_eq!(e.degree(), 2);
    }

    #[test]
    fn strict_labels_use_their_own_key() {
        let mu = StrictPartition::new(vec![2, 1]).unwrap();
        let e = QExpansion::from_terms(3, [(mu, BigInt::from(-2))]);
        assert!(!e.is_nonnegative());
        assert_eq!(e.to_json().to_string(), r#"[{"coeff":"-2","strict_partition":[2,1]}]"#);
    }
}
