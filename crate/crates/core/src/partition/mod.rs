//! Integer partitions, strict partitions and semistandard tableaux.
//!
//! Partitions are stored without zero parts. The global order on partitions
//! (used for every map key, matrix column and serialized listing) is: smaller
//! weight first, then reverse lexicographic within a weight, so `(3)` precedes
//! `(2,1)` precedes `(1,1,1)`.

mod tableau;

pub use tableau::{enumerate_ssyt, SemistandardTableau};

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; zero parts are dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The single-row partition `(k)`; empty for `k = 0`.
    pub fn row(k: u32) -> Self {
        Self::from_unsorted(vec![k])
    }

    /// The single-column partition `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition { parts: vec![1; k as usize] }
    }

    /// The `rows × cols` rectangle.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Part `i` (0-based), with missing parts read as 0.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (1..=width as u32)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn fits_rectangle(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// The Poincaré dual partner inside the `r × (n-r)` rectangle:
    /// `λ'_i = n - r - λ_{r+1-i}`.
    pub fn rectangle_dual(&self, r: usize, n: usize) -> Result<Partition> {
        let cols = n.checked_sub(r).ok_or_else(|| Error::Containment {
            what: format!("Gr({r},{n})"),
            region: "a valid Grassmannian".into(),
        })? as u32;
        if !self.fits_rectangle(r, cols) {
            return Err(Error::Containment {
                what: self.to_string(),
                region: format!("the {r}x{cols} rectangle"),
            });
        }
        let parts = (0..r).map(|i| cols - self.part(r - 1 - i)).collect();
        Partition::new(parts)
    }

    /// Whether the diagram lies in the `(n, m)`-hook: `λ_{n+1} ≤ m`.
    pub fn in_hook(&self, n: usize, m: u32) -> bool {
        self.part(n) <= m
    }

    /// Whether `other`'s diagram is contained in this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Multiplicity of each part size: `counts[k-1]` is the number of parts equal to `k`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut counts = vec![0; self.part(0) as usize];
        for &p in &self.parts {
            counts[p as usize - 1] += 1;
        }
        counts
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// A partition with strictly decreasing parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let p = Partition::new(parts)?;
        if p.parts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotStrict(p.parts));
        }
        Ok(StrictPartition(p))
    }

    pub fn empty() -> Self {
        StrictPartition::default()
    }

    /// The staircase `ρ(n) = (n, n-1, …, 1)`.
    pub fn staircase(n: u32) -> Self {
        StrictPartition(Partition { parts: (1..=n).rev().collect() })
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn weight(&self) -> u32 {
        self.0.weight()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn fits_staircase(&self, n: u32) -> bool {
        self.0.part(0) <= n
    }

    /// Parts of `{1..n}` not used by `self`, in decreasing order.
    pub fn complement(&self, n: u32) -> Result<StrictPartition> {
        if !self.fits_staircase(n) {
            return Err(Error::Containment {
                what: self.to_string(),
                region: format!("ρ({n})"),
            });
        }
        let parts = (1..=n).rev().filter(|k| !self.parts().contains(k)).collect();
        Ok(StrictPartition(Partition { parts }))
    }

    /// Strict partitions inside `ρ(n)` of weight `d`, in the global order.
    pub fn in_staircase(n: u32, d: u32) -> Vec<StrictPartition> {
        fn go(rem: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if rem == 0 {
                out.push(StrictPartition(Partition { parts: prefix.clone() }));
                return;
            }
            for k in (1..=max.min(rem)).rev() {
                prefix.push(k);
                go(rem - k, k - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(d, n, &mut Vec::new(), &mut out);
        out
    }
}

impl From<StrictPartition> for Partition {
    fn from(p: StrictPartition) -> Partition {
        p.0
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        StrictPartition::new(p.parts)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StrictPartition{}", self.0)
    }
}

impl Serialize for StrictPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// All partitions of `d` with parts at most `max_part` and at most `max_length`
/// parts, in reverse lexicographic order.
pub fn enumerate_partitions(d: u32, max_part: Option<u32>, max_length: Option<usize>) -> Vec<Partition> {
    fn go(
        rem: u32,
        max: u32,
        slots: usize,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for k in (1..=max.min(rem)).rev() {
            prefix.push(k);
            go(rem - k, k, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(
        d,
        max_part.unwrap_or(d),
        max_length.unwrap_or(d as usize),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Partitions contained in the `rows × cols` rectangle, grouped by weight.
pub fn partitions_in_rectangle(rows: usize, cols: u32) -> Vec<Partition> {
    (0..=rows as u32 * cols)
        .flat_map(|d| enumerate_partitions(d, Some(cols), Some(rows)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn zero_parts_are_stripped() {
        assert_eq!(p(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn conjugate_is_involution_up_to_weight_12() {
        for d in 0..=12 {
            for lam in enumerate_partitions(d, None, None) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().weight(), d);
            }
        }
    }

    #[test]
    fn rectangle_dual_examples() {
        assert_eq!(p(&[1]).rectangle_dual(2, 4).unwrap(), p(&[2, 1]));
        assert_eq!(Partition::empty().rectangle_dual(2, 4).unwrap(), p(&[2, 2]));
        assert_eq!(p(&[2, 2]).rectangle_dual(2, 4).unwrap(), Partition::empty());
        assert!(p(&[3]).rectangle_dual(2, 4).is_err());
        assert!(p(&[1, 1, 1]).rectangle_dual(2, 4).is_err());
    }

    #[test]
    fn rectangle_dual_is_involution() {
        for n in 1..=6 {
            for r in 0..=n {
                for lam in partitions_in_rectangle(r, (n - r) as u32) {
                    let dual = lam.rectangle_dual(r, n).unwrap();
                    assert_eq!(lam.weight() + dual.weight(), (r * (n - r)) as u32);
                    assert_eq!(dual.rectangle_dual(r, n).unwrap(), lam);
                }
            }
        }
    }

    #[test]
    fn strict_complement_examples() {
        assert_eq!(sp(&[1]).complement(2).unwrap(), sp(&[2]));
        for n in 0..6 {
            assert_eq!(StrictPartition::staircase(n).complement(n).unwrap(), StrictPartition::empty());
        }
        assert_eq!(sp(&[3, 1]).complement(3).unwrap(), sp(&[2]));
        assert!(sp(&[4]).complement(3).is_err());
        assert!(StrictPartition::new(vec![2, 2]).is_err());
    }

    #[test]
    fn strict_complement_is_involution() {
        for n in 0..=6 {
            let top = n * (n + 1) / 2;
            for d in 0..=top {
                for mu in StrictPartition::in_staircase(n, d) {
                    let c = mu.complement(n).unwrap();
                    assert_eq!(mu.weight() + c.weight(), top);
                    assert_eq!(c.complement(n).unwrap(), mu);
                }
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_partitions(2, None, None), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            enumerate_partitions(4, Some(2), None),
            vec![p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(0, None, None), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4, None, Some(2)), vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
    }

    #[test]
    fn partition_numbers() {
        let counts: Vec<usize> = (0..10).map(|d| enumerate_partitions(d, None, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn enumeration_matches_global_order() {
        let parts = enumerate_partitions(6, None, None);
        let mut sorted = parts.clone();
        sorted.sort();
        assert_eq!(parts, sorted);
    }

    #[test]
    fn hook_examples() {
        assert!(p(&[1, 1, 1]).in_hook(1, 3));
        assert!(p(&[5]).in_hook(1, 0));
        assert!(p(&[2, 2]).in_hook(1, 10));
        assert!(!p(&[2, 2]).in_hook(1, 1));
        assert!(!p(&[1, 1]).in_hook(1, 0));
        assert!(p(&[7]).in_hook(1, 0));
    }

    #[test]
    fn multiplicities_and_containment() {
        assert_eq!(p(&[3, 1, 1]).multiplicities(), vec![2, 0, 1]);
        assert!(p(&[3, 2]).contains(&p(&[2, 2])));
        assert!(!p(&[3]).contains(&p(&[1, 1])));
    }

    #[test]
    fn json_form() {
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        let back: Partition = serde_json::from_str("[2,2,0]").unwrap();
        assert_eq!(back, p(&[2, 2]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
