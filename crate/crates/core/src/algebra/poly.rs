//! Sparse polynomials with big-integer coefficients in graded Chern generators.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A family of Chern generators `c_1, c_2, …` attached to one bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    C,
    CPrime,
}

impl Family {
    pub fn gen(self, i: u32) -> Generator {
        match self {
            Family::C => Generator::C(i),
            Family::CPrime => Generator::CPrime(i),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::C => "c",
            Family::CPrime => "c'",
        })
    }
}

/// A polynomial generator. `C(i)` and `CPrime(i)` have degree `i` (`i ≥ 1`);
/// the line classes `V1`, `V2` have degree 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    C(u32),
    CPrime(u32),
    V1,
    V2,
}

impl Generator {
    pub fn degree(self) -> u32 {
        match self {
            Generator::C(i) | Generator::CPrime(i) => i,
            Generator::V1 | Generator::V2 => 1,
        }
    }

    pub fn family(self) -> Option<Family> {
        match self {
            Generator::C(_) => Some(Family::C),
            Generator::CPrime(_) => Some(Family::CPrime),
            _ => None,
        }
    }

    /// Index within a Chern family, if any.
    pub fn index(self) -> Option<u32> {
        match self {
            Generator::C(i) | Generator::CPrime(i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::C(i) => write!(f, "c{i}"),
            Generator::CPrime(i) => write!(f, "c'{i}"),
            Generator::V1 => f.write_str("v1"),
            Generator::V2 => f.write_str("v2"),
        }
    }
}

/// A monomial: generators with positive exponents, sorted by generator.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Generator, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn gen(g: Generator) -> Self {
        Monomial(vec![(g, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Generator, u32)>) -> Self {
        let mut acc: BTreeMap<Generator, u32> = BTreeMap::new();
        for (g, e) in powers {
            *acc.entry(g).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    /// `c_{p_1} c_{p_2} ⋯` in the given family.
    pub fn from_partition(family: Family, parts: &Partition) -> Self {
        Self::from_powers(parts.parts().iter().map(|&k| (family.gen(k), 1)))
    }

    /// Inverse of [`Monomial::from_partition`]; `None` if other generators occur.
    pub fn as_partition(&self, family: Family) -> Option<Partition> {
        let mut parts = Vec::new();
        for &(g, e) in &self.0 {
            if g.family() != Some(family) {
                return None;
            }
            parts.extend(std::iter::repeat_n(g.index().unwrap(), e as usize));
        }
        Some(Partition::from_unsorted(parts))
    }

    pub fn powers(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(g, e)| g.degree() * e).sum()
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        self.0
            .binary_search_by(|(h, _)| h.cmp(&g))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

/// Graded reverse lexicographic: lower degree first; within a degree, the
/// monomial with the smaller exponent on the last differing generator is larger.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut i, mut j) = (self.0.len(), other.0.len());
            while i > 0 || j > 0 {
                let a = (i > 0).then(|| self.0[i - 1]);
                let b = (j > 0).then(|| other.0[j - 1]);
                let (ea, eb) = match (a, b) {
                    (Some(a), Some(b)) => match a.0.cmp(&b.0) {
                        Ordering::Equal => {
                            i -= 1;
                            j -= 1;
                            (a.1, b.1)
                        }
                        Ordering::Greater => {
                            i -= 1;
                            (a.1, 0)
                        }
                        Ordering::Less => {
                            j -= 1;
                            (0, b.1)
                        }
                    },
                    (Some(a), None) => {
                        i -= 1;
                        (a.1, 0)
                    }
                    (None, Some(b)) => {
                        j -= 1;
                        (0, b.1)
                    }
                    (None, None) => unreachable!(),
                };
                if ea != eb {
                    return eb.cmp(&ea);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &(g, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Simultaneous substitution `generator ↦ polynomial`.
pub type Assignment = BTreeMap<Generator, CPolynomial>;

/// A sparse polynomial over ℤ in [`Generator`]s. No zero coefficient is ever stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct CPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl CPolynomial {
    pub fn zero() -> Self {
        CPolynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(k: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(), k)
    }

    pub fn term(m: Monomial, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        let mut terms = BTreeMap::new();
        if !k.is_zero() {
            terms.insert(m, k);
        }
        CPolynomial { terms }
    }

    pub fn gen(g: Generator) -> Self {
        Self::term(Monomial::gen(g), 1)
    }

    /// `c_i`, with `c_0 = 1`.
    pub fn c(i: u32) -> Self {
        Self::chern(Family::C, i)
    }

    /// The `i`-th generator of `family`, with index 0 giving 1.
    pub fn chern(family: Family, i: u32) -> Self {
        if i == 0 {
            Self::one()
        } else {
            Self::gen(family.gen(i))
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = CPolynomial::zero();
        for (m, k) in terms {
            p.add_term(m, k);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, k: BigInt) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Number of nonzero terms; emptiness is [`Self::is_zero`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The common weighted degree: `Ok(None)` for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let Some(d) = degrees.next() else {
            return Ok(None);
        };
        if degrees.all(|e| e == d) {
            Ok(Some(d))
        } else {
            Err(Error::Inhomogeneous)
        }
    }

    pub fn generators(&self) -> BTreeSet<Generator> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|&(g, _)| g))
            .collect()
    }

    /// The single Chern family used, if the polynomial only involves one.
    /// Constants report `Ok(None)`.
    pub fn single_family(&self) -> Result<Option<Family>> {
        let mut fam = None;
        for g in self.generators() {
            let f = g.family().ok_or_else(|| Error::ForeignGenerator(g.to_string()))?;
            match fam {
                None => fam = Some(f),
                Some(prev) if prev != f => return Err(Error::MixedFamilies),
                _ => {}
            }
        }
        Ok(fam)
    }

    pub fn scale(&self, k: &BigInt) -> CPolynomial {
        if k.is_zero() {
            return CPolynomial::zero();
        }
        CPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> CPolynomial {
        let mut acc = CPolynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sets `c_k = 0` for `k > rank` in `family`.
    pub fn truncate(&self, family: Family, rank: u32) -> CPolynomial {
        CPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| {
                    m.powers()
                        .iter()
                        .all(|&(g, _)| g.family() != Some(family) || g.index().unwrap() <= rank)
                })
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps only the terms whose monomial satisfies `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> CPolynomial {
        CPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Simultaneous substitution. Every image must be zero or homogeneous of
    /// the same degree as the generator it replaces.
    pub fn specialize(&self, assignment: &Assignment) -> Result<CPolynomial> {
        for (g, image) in assignment {
            match image.homogeneous_degree() {
                Ok(None) => {}
                Ok(Some(d)) if d == g.degree() => {}
                _ => {
                    return Err(Error::DegreeViolation {
                        generator: g.to_string(),
                        degree: g.degree(),
                    })
                }
            }
        }
        let mut powers: HashMap<(Generator, u32), CPolynomial> = HashMap::new();
        let mut out = CPolynomial::zero();
        for (m, k) in &self.terms {
            let mut fixed = Monomial::one();
            let mut value = CPolynomial::constant(k.clone());
            for &(g, e) in m.powers() {
                match assignment.get(&g) {
                    None => fixed = fixed.mul(&Monomial::from_powers([(g, e)])),
                    Some(image) => {
                        let pw = powers.entry((g, e)).or_insert_with(|| image.pow(e));
                        value = &value * &*pw;
                    }
                }
                if value.is_zero() {
                    break;
                }
            }
            if value.is_zero() {
                continue;
            }
            for (vm, vk) in value.terms {
                out.add_term(vm.mul(&fixed), vk);
            }
        }
        Ok(out)
    }
}

impl From<i64> for CPolynomial {
    fn from(k: i64) -> Self {
        CPolynomial::constant(k)
    }
}

impl From<Generator> for CPolynomial {
    fn from(g: Generator) -> Self {
        CPolynomial::gen(g)
    }
}

impl<'a> Add<&'a CPolynomial> for &'a CPolynomial {
    type Output = CPolynomial;

    fn add(self, rhs: &'a CPolynomial) -> CPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for CPolynomial {
    type Output = CPolynomial;

    fn add(mut self, rhs: CPolynomial) -> CPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&CPolynomial> for CPolynomial {
    fn add_assign(&mut self, rhs: &CPolynomial) {
        for (m, k) in &rhs.terms {
            self.add_term(m.clone(), k.clone());
        }
    }
}

impl SubAssign<&CPolynomial> for CPolynomial {
    fn sub_assign(&mut self, rhs: &CPolynomial) {
        for (m, k) in &rhs.terms {
            self.add_term(m.clone(), -k);
        }
    }
}

impl<'a> Sub<&'a CPolynomial> for &'a CPolynomial {
    type Output = CPolynomial;

    fn sub(self, rhs: &'a CPolynomial) -> CPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for CPolynomial {
    type Output = CPolynomial;

    fn sub(mut self, rhs: CPolynomial) -> CPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &CPolynomial {
    type Output = CPolynomial;

    fn neg(self) -> CPolynomial {
        CPolynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), -k)).collect(),
        }
    }
}

impl Neg for CPolynomial {
    type Output = CPolynomial;

    fn neg(self) -> CPolynomial {
        -&self
    }
}

impl<'a> Mul<&'a CPolynomial> for &'a CPolynomial {
    type Output = CPolynomial;

    fn mul(self, rhs: &'a CPolynomial) -> CPolynomial {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ka) in &self.terms {
            for (mb, kb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ka * kb;
            }
        }
        CPolynomial {
            terms: acc.into_iter().filter(|(_, k)| !k.is_zero()).collect(),
        }
    }
}

impl Mul for CPolynomial {
    type Output = CPolynomial;

    fn mul(self, rhs: CPolynomial) -> CPolynomial {
        &self * &rhs
    }
}

/// Terms are printed from the largest monomial down, e.g. `c1^3 + 3*c1*c2 + 2*c3`.
impl fmt::Display for CPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, k)) in self.terms.iter().rev().enumerate() {
            let mag = k.abs();
            match (i, k.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(i: u32) -> CPolynomial {
        CPolynomial::c(i)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&c(1) * &c(1), CPolynomial::gen(Generator::C(1)).pow(2));
        let a = &(&c(2) * &c(2)) - &(&c(1) * &c(3));
        let sum = &a + &(&c(1) * &c(3));
        assert_eq!(sum, c(2).pow(2));
        assert_eq!(sum.len(), 1);
        assert!((&CPolynomial::zero() * &a).is_zero());
    }

    #[test]
    fn degrees() {
        let p = &(&c(1) * &c(2)) + &c(3);
        assert_eq!(p.homogeneous_degree(), Ok(Some(3)));
        assert_eq!((&p + &c(1)).homogeneous_degree(), Err(Error::Inhomogeneous));
        assert_eq!(CPolynomial::zero().homogeneous_degree(), Ok(None));
        let v = CPolynomial::gen(Generator::V1) * CPolynomial::gen(Generator::CPrime(2));
        assert_eq!(v.homogeneous_degree(), Ok(Some(3)));
    }

    #[test]
    fn display_follows_monomial_order() {
        let a3 = &(&c(1).pow(3) + &(&c(1) * &c(2)).scale(&3.into())) + &c(3).scale(&2.into());
        assert_eq!(a3.to_string(), "c1^3 + 3*c1*c2 + 2*c3");
        let i22 = &c(2).pow(2) - &(&c(1) * &c(3));
        assert_eq!(i22.to_string(), "c2^2 - c1*c3");
        assert_eq!((-&c(2)).to_string(), "-c2");
        assert_eq!(CPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn specialize_examples() {
        let p = &c(1) * &c(2);
        let kill = Assignment::from([(Generator::C(2), CPolynomial::zero())]);
        assert!(p.specialize(&kill).unwrap().is_zero());

        let v = &CPolynomial::gen(Generator::V1) + &CPolynomial::gen(Generator::V2);
        let sub = Assignment::from([(Generator::C(1), v)]);
        let got = c(1).pow(2).specialize(&sub).unwrap();
        assert_eq!(got.to_string(), "v1^2 + 2*v1*v2 + v2^2");

        let bad = Assignment::from([(Generator::C(2), c(1))]);
        assert!(matches!(p.specialize(&bad), Err(Error::DegreeViolation { .. })));
    }

    #[test]
    fn monomial_partition_round_trip() {
        let lam = Partition::new(vec![3, 1, 1]).unwrap();
        let m = Monomial::from_partition(Family::C, &lam);
        assert_eq!(m.to_string(), "c1^2*c3");
        assert_eq!(m.as_partition(Family::C), Some(lam));
        assert_eq!(m.as_partition(Family::CPrime), None);
        assert_eq!(m.exponent(Generator::C(1)), 2);
        assert_eq!(m.degree(), 5);
    }
}
