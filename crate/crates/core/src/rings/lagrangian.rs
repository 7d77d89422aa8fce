use std::collections::HashMap;
use std::sync::{Arc, LazyLock, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::linalg::to_integer;
use crate::algebra::{CPolynomial, Family, Generator, Monomial, RationalMatrix, Rref, SolveError};
use crate::error::{Error, Result};
use crate::expansion::QExpansion;
use crate::parallel::{self, Memo, Mode};
use crate::partition::{enumerate_partitions, Partition, StrictPartition};
use crate::qtilde::{qtilde, qtilde_pair};
use crate::schur::schur_truncated;

use super::PairingMatrix;

/// `H*(LG(n))` presented as `ℤ[c_1..c_n] / (Q̃_{i,i}, i = 1..n)` with
/// `c_i = c_i(R*)`; the Schubert class `Y^μ` is `Q̃_μ(R*)` for strict `μ ⊂ ρ(n)`.
///
/// Degree slices (the linear algebra behind [`LagrangianRing::reduce`]) are
/// built on first use and kept.
#[derive(Debug)]
pub struct LagrangianRing {
    n: u32,
    slices: Vec<OnceLock<Result<Arc<Slice>>>>,
}

/// One degree of the presentation: monomials as rows; the `Q̃` basis
/// followed by all monomial multiples of the ideal generators as columns.
#[derive(Debug)]
struct Slice {
    rows: HashMap<Partition, usize>,
    basis: Vec<StrictPartition>,
    ideal_rank: usize,
    rref: Rref,
}

/// Counts behind the uniqueness of reduction in one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionCertificate {
    pub degree: u32,
    pub monomials: usize,
    pub basis: usize,
    pub ideal_rank: usize,
}

impl DimensionCertificate {
    pub fn holds(&self) -> bool {
        self.monomials == self.basis + self.ideal_rank
    }
}

static SHARED: LazyLock<Memo<u32, Arc<LagrangianRing>>> = LazyLock::new(Memo::new);

impl LagrangianRing {
    pub fn new(n: u32) -> Self {
        let top = n * (n + 1) / 2;
        LagrangianRing { n, slices: (0..=top).map(|_| OnceLock::new()).collect() }
    }

    /// A process-wide instance per `n`, so slices are only built once.
    pub fn shared(n: u32) -> Arc<LagrangianRing> {
        SHARED.get_or_insert_with(&n, || Arc::new(LagrangianRing::new(n)))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn top_degree(&self) -> u32 {
        self.n * (self.n + 1) / 2
    }

    pub fn point(&self) -> StrictPartition {
        StrictPartition::staircase(self.n)
    }

    pub fn basis(&self, degree: u32) -> Vec<StrictPartition> {
        StrictPartition::in_staircase(self.n, degree)
    }

    pub fn full_basis(&self) -> Vec<StrictPartition> {
        (0..=self.top_degree()).flat_map(|d| self.basis(d)).collect()
    }

    fn check_class(&self, mu: &StrictPartition) -> Result<()> {
        if mu.fits_staircase(self.n) {
            Ok(())
        } else {
            Err(Error::Containment { what: mu.to_string(), region: format!("ρ({})", self.n) })
        }
    }

    /// `Y^μ = Q̃_μ(R*)`, i.e. `Q̃_μ` with `c_k = 0` for `k > n`.
    pub fn schubert_class(&self, mu: &StrictPartition) -> Result<CPolynomial> {
        self.check_class(mu)?;
        Ok(qtilde(mu.as_partition()).truncate(Family::C, self.n))
    }

    /// The relation `Q̃_{i,i}` in `c_1..c_n`.
    pub fn ideal_generator(&self, i: u32) -> CPolynomial {
        qtilde_pair(i, i).truncate(Family::C, self.n)
    }

    fn slice(&self, degree: u32) -> Result<Arc<Slice>> {
        self.slices[degree as usize]
            .get_or_init(|| self.build_slice(degree).map(Arc::new))
            .clone()
    }

    fn build_slice(&self, degree: u32) -> Result<Slice> {
        let n = self.n;
        let rows: HashMap<Partition, usize> = enumerate_partitions(degree, Some(n), None)
            .into_iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let basis = self.basis(degree);
        let mut columns: Vec<CPolynomial> =
            basis.iter().map(|mu| self.schubert_class(mu)).collect::<Result<_>>()?;
        for i in (1..=n).filter(|i| 2 * i <= degree) {
            let g = self.ideal_generator(i);
            for m in enumerate_partitions(degree - 2 * i, Some(n), None) {
                columns.push(&CPolynomial::term(Monomial::from_partition(Family::C, &m), 1) * &g);
            }
        }
        let fill = |cols: &[CPolynomial]| {
            let mut a = RationalMatrix::zeros(rows.len(), cols.len());
            for (j, col) in cols.iter().enumerate() {
                for (m, k) in col.terms() {
                    let i = rows[&m.as_partition(Family::C).unwrap()];
                    a.set(i, j, BigRational::from_integer(k.clone()));
                }
            }
            a
        };
        let ideal_rank = fill(&columns[basis.len()..]).rank();
        let rref = Rref::new(&fill(&columns));
        if !rref.is_unique_on(0..basis.len()) {
            return Err(SolveError::NonUnique.into());
        }
        Ok(Slice { rows, basis, ideal_rank, rref })
    }

    pub fn dimension_certificate(&self, degree: u32) -> Result<DimensionCertificate> {
        let s = self.slice(degree)?;
        Ok(DimensionCertificate {
            degree,
            monomials: s.rows.len(),
            basis: s.basis.len(),
            ideal_rank: s.ideal_rank,
        })
    }

    /// The unique integral `a_μ` with `p ≡ Σ a_μ Q̃_μ` modulo the ideal.
    pub fn reduce(&self, p: &CPolynomial) -> Result<QExpansion> {
        let n = self.n;
        if let Some(g) = p
            .generators()
            .into_iter()
            .find(|g| !matches!(g, Generator::C(i) if *i <= n))
        {
            return Err(Error::ForeignGenerator(g.to_string()));
        }
        let Some(degree) = p.homogeneous_degree()? else {
            return Ok(QExpansion::zero(0));
        };
        // Cohomology vanishes above the dimension.
        if degree > self.top_degree() {
            return Ok(QExpansion::zero(degree));
        }
        let s = self.slice(degree)?;
        let mut b = vec![BigRational::zero(); s.rows.len()];
        for (m, k) in p.terms() {
            b[s.rows[&m.as_partition(Family::C).unwrap()]] = BigRational::from_integer(k.clone());
        }
        let x = s.rref.solve(&b)?;
        let mut out = QExpansion::zero(degree);
        for (mu, q) in s.basis.iter().zip(&x) {
            let k = to_integer(q).ok_or_else(|| Error::NonIntegral(q.to_string()))?;
            out.add_term(mu.clone(), k);
        }
        Ok(out)
    }

    /// Degree of a top class: the coefficient of `ρ(n)`.
    pub fn integrate(&self, x: &QExpansion) -> Result<BigInt> {
        if x.degree() != self.top_degree() {
            return Err(Error::WrongDegree { expected: self.top_degree(), got: x.degree() });
        }
        Ok(x.get(&self.point()))
    }

    pub fn dual(&self, mu: &StrictPartition) -> Result<StrictPartition> {
        mu.complement(self.n)
    }

    /// Pullback of the Grassmannian class `X^λ` along `LG(V) ⊂ G_n(V)`.
    pub fn restrict(&self, lambda: &Partition) -> Result<QExpansion> {
        if !lambda.fits_rectangle(self.n as usize, self.n) {
            return Err(Error::Containment {
                what: lambda.to_string(),
                region: format!("the {0}x{0} square", self.n),
            });
        }
        self.reduce(&schur_truncated(Family::C, lambda, self.n))
    }

    /// `∫ Y^μ · Y^ν`.
    pub fn pair(&self, mu: &StrictPartition, nu: &StrictPartition) -> Result<BigInt> {
        let product = &self.schubert_class(mu)? * &self.schubert_class(nu)?;
        self.integrate(&self.reduce(&product)?)
    }

    pub fn pairing_matrix(&self, mode: Mode) -> Result<PairingMatrix<StrictPartition>> {
        let top = self.top_degree();
        let pairs: Vec<(StrictPartition, StrictPartition)> = (0..=top)
            .flat_map(|d| {
                let duals = self.basis(top - d);
                self.basis(d)
                    .into_iter()
                    .flat_map(move |l| duals.clone().into_iter().map(move |m| (l.clone(), m)))
            })
            .collect();
        let values = parallel::map(mode, &pairs, |(a, b)| self.pair(a, b));
        let entries = pairs
            .into_iter()
            .zip(values)
            .map(|((a, b), v)| v.map(|v| (a, b, v)))
            .collect::<Result<_>>()?;
        Ok(PairingMatrix { entries })
    }

    pub fn pairing_is_duality(&self, m: &PairingMatrix<StrictPartition>) -> Result<bool> {
        m.is_permutation_of(|mu| self.dual(mu))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let lg = LagrangianRing::new(2);
        let c = CPolynomial::c;
        assert_eq!(lg.reduce(&c(1)).unwrap(), QExpansion::singleton(sp(&[1])));
        assert_eq!(
            lg.reduce(&c(1).pow(2)).unwrap(),
            QExpansion::from_terms(2, [(sp(&[2]), 2.into())])
        );
        assert_eq!(lg.reduce(&(&c(1) * &c(2))).unwrap(), QExpansion::singleton(sp(&[2, 1])));
    }

    #[test]
    fn ideal_generators_reduce_to_zero() {
        for n in 1..=4 {
            let lg = LagrangianRing::new(n);
            for i in (1..=n).filter(|i| 2 * i <= lg.top_degree()) {
                let x = lg.reduce(&lg.ideal_generator(i)).unwrap();
                assert!(x.is_zero(), "Q̃_({i},{i}) in LG({n}) gave {x}");
            }
        }
    }

    #[test]
    fn basis_round_trip() {
        for n in 1..=4 {
            let lg = LagrangianRing::new(n);
            for mu in lg.full_basis() {
                let x = lg.reduce(&lg.schubert_class(&mu).unwrap()).unwrap();
                assert_eq!(x, QExpansion::singleton(mu));
            }
        }
    }

    #[test]
    fn integration() {
        let lg = LagrangianRing::new(2);
        assert_eq!(lg.integrate(&QExpansion::singleton(sp(&[2, 1]))).unwrap(), 1.into());
        assert_eq!(lg.pair(&sp(&[1]), &sp(&[2])).unwrap(), 1.into());
        assert!(matches!(
            lg.integrate(&QExpansion::singleton(sp(&[1]))),
            Err(Error::WrongDegree { .. })
        ));
    }

    #[test]
    fn restriction_examples() {
        let lg = LagrangianRing::new(2);
        assert_eq!(lg.restrict(&p(&[1])).unwrap(), QExpansion::singleton(sp(&[1])));
        assert_eq!(lg.restrict(&p(&[1, 1])).unwrap(), QExpansion::singleton(sp(&[2])));
        assert_eq!(lg.restrict(&p(&[2])).unwrap(), QExpansion::singleton(sp(&[2])));
        assert!(lg.restrict(&p(&[3])).is_err());
        assert!(lg.restrict(&p(&[2, 2])).unwrap().is_zero());
    }

    #[test]
    fn reduce_errors() {
        let lg = LagrangianRing::new(2);
        assert!(matches!(lg.reduce(&CPolynomial::c(3)), Err(Error::ForeignGenerator(_))));
        assert_eq!(lg.reduce(&CPolynomial::c(1).pow(4)).unwrap(), QExpansion::zero(4));
        assert!(matches!(lg.schubert_class(&sp(&[3])), Err(Error::Containment { .. })));
    }

    #[test]
    fn dimension_identity_small() {
        for n in 1..=3 {
            let lg = LagrangianRing::new(n);
            for d in 0..=lg.top_degree() {
                assert!(lg.dimension_certificate(d).unwrap().holds());
            }
        }
    }
}
