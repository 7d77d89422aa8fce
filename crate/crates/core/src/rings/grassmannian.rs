use num_bigint::BigInt;

use crate::algebra::{CPolynomial, Family, Generator};
use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::parallel::{self, Mode};
use crate::partition::{enumerate_partitions, partitions_in_rectangle, Partition};
use crate::schur::{lr_multiply, schur_truncated, to_schur};

use super::PairingMatrix;

/// `H*(Gr(r, n))` presented as `ℤ[c_1..c_r] / (h_{n-r+1}, …, h_n)` with
/// `c_i = c_i(R*)`; the Schubert class `X^λ` is `s_λ(R*)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrassmannianRing {
    r: usize,
    n: usize,
}

impl GrassmannianRing {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::Containment {
                what: format!("a {r}-plane"),
                region: format!("a {n}-dimensional space"),
            });
        }
        Ok(GrassmannianRing { r, n })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn cols(&self) -> u32 {
        (self.n - self.r) as u32
    }

    pub fn top_degree(&self) -> u32 {
        self.r as u32 * self.cols()
    }

    /// The point class `(n-r)^r`.
    pub fn rectangle(&self) -> Partition {
        Partition::rectangle(self.r, self.cols())
    }

    pub fn basis(&self, degree: u32) -> Vec<Partition> {
        enumerate_partitions(degree, Some(self.cols()), Some(self.r))
    }

    pub fn full_basis(&self) -> Vec<Partition> {
        partitions_in_rectangle(self.r, self.cols())
    }

    fn check_class(&self, lambda: &Partition) -> Result<()> {
        if lambda.fits_rectangle(self.r, self.cols()) {
            Ok(())
        } else {
            Err(Error::Containment {
                what: lambda.to_string(),
                region: format!("the {}x{} rectangle", self.r, self.cols()),
            })
        }
    }

    /// `X^λ = s_λ(R*)` as a polynomial in `c_1..c_r`; higher `c_k` vanish.
    pub fn schubert_class(&self, lambda: &Partition) -> Result<CPolynomial> {
        self.check_class(lambda)?;
        Ok(schur_truncated(Family::C, lambda, self.r as u32))
    }

    /// Expands a polynomial in `c_1..c_r` over the Schubert basis.
    pub fn reduce(&self, p: &CPolynomial) -> Result<SchurExpansion> {
        if let Some(g) = p
            .generators()
            .into_iter()
            .find(|g| !matches!(g, Generator::C(i) if *i as usize <= self.r))
        {
            return Err(Error::ForeignGenerator(g.to_string()));
        }
        if let Some(d) = p.homogeneous_degree()? {
            if d > self.top_degree() {
                return Ok(SchurExpansion::zero(d));
            }
        }
        let mut x = to_schur(p, Some(self.r))?;
        // h_k = 0 for k > n - r kills every s_λ with λ_1 > n - r.
        let cols = self.cols();
        x.retain(|lam| lam.part(0) <= cols);
        Ok(x)
    }

    /// Degree of a top class: the coefficient of the point class.
    pub fn integrate(&self, x: &SchurExpansion) -> Result<BigInt> {
        if x.degree() != self.top_degree() {
            return Err(Error::WrongDegree { expected: self.top_degree(), got: x.degree() });
        }
        Ok(x.get(&self.rectangle()))
    }

    pub fn dual(&self, lambda: &Partition) -> Result<Partition> {
        lambda.rectangle_dual(self.r, self.n)
    }

    /// Product of two Schubert classes via Littlewood–Richardson, truncated to the rectangle.
    pub fn product(&self, lambda: &Partition, mu: &Partition) -> Result<SchurExpansion> {
        self.check_class(lambda)?;
        self.check_class(mu)?;
        let weight = lambda.weight() + mu.weight();
        if weight > self.top_degree() {
            return Ok(SchurExpansion::zero(weight));
        }
        let mut x = lr_multiply(lambda, mu);
        let (r, cols) = (self.r, self.cols());
        x.retain(|nu| nu.fits_rectangle(r, cols));
        Ok(x)
    }

    /// `∫ X^λ · X^μ`.
    pub fn pair(&self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        let product = &self.schubert_class(lambda)? * &self.schubert_class(mu)?;
        self.integrate(&self.reduce(&product)?)
    }

    /// Intersection numbers of all complementary-degree basis pairs.
    pub fn pairing_matrix(&self, mode: Mode) -> Result<PairingMatrix<Partition>> {
        let top = self.top_degree();
        let pairs: Vec<(Partition, Partition)> = (0..=top)
            .flat_map(|d| {
                let duals = self.basis(top - d);
                self.basis(d)
                    .into_iter()
                    .flat_map(move |l| duals.clone().into_iter().map(move |m| (l.clone(), m)))
            })
            .collect();
        let values = parallel::map(mode, &pairs, |(l, m)| self.pair(l, m));
        let entries = pairs
            .into_iter()
            .zip(values)
            .map(|((l, m), v)| v.map(|v| (l, m, v)))
            .collect::<Result<_>>()?;
        Ok(PairingMatrix { entries })
    }

    /// Whether the pairing matrix is exactly the permutation of [`Self::dual`].
    pub fn pairing_is_duality(&self, m: &PairingMatrix<Partition>) -> Result<bool> {
        m.is_permutation_of(|l| self.dual(l))
    }
}
