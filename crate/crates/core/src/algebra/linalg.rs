//! Exact Gauss–Jordan elimination over ℚ.

use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("system is inconsistent (row {row} reduces to 0 = nonzero)")]
    Inconsistent { row: usize },

    #[error("solution is not unique on the requested coordinates")]
    NonUnique,

    #[error("right-hand side has length {got}, matrix has {rows} rows")]
    DimensionMismatch { rows: usize, got: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        RationalMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        Rref::new(self).rank()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, i: usize, k: &BigRational) {
        for v in &mut self.data[i * self.cols..(i + 1) * self.cols] {
            if !v.is_zero() {
                *v *= k;
            }
        }
    }

    /// `row[target] -= k * row[source]`
    fn eliminate(&mut self, target: usize, source: usize, k: &BigRational) {
        for j in 0..self.cols {
            let s = &self.data[source * self.cols + j];
            if !s.is_zero() {
                let delta = s * k;
                self.data[target * self.cols + j] -= delta;
            }
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form of `A` together with the row operations `T`
/// (`T·A = R`), so any number of right-hand sides can be solved later.
#[derive(Clone, Debug)]
pub struct Rref {
    reduced: RationalMatrix,
    transform: RationalMatrix,
    pivots: Vec<usize>,
}

impl Rref {
    pub fn new(a: &RationalMatrix) -> Self {
        let mut reduced = a.clone();
        let mut transform = RationalMatrix::identity(a.rows);
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !reduced.get(i, col).is_zero()) else {
                continue;
            };
            reduced.swap_rows(r, p);
            transform.swap_rows(r, p);
            let inv = reduced.get(r, col).recip();
            reduced.scale_row(r, &inv);
            transform.scale_row(r, &inv);
            for i in 0..a.rows {
                if i != r {
                    let k = reduced.get(i, col).clone();
                    if !k.is_zero() {
                        reduced.eliminate(i, r, &k);
                        transform.eliminate(i, r, &k);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        Rref { reduced, transform, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis of the null space, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<BigRational>> {
        let cols = self.reduced.cols;
        (0..cols)
            .filter(|c| !self.pivots.contains(c))
            .map(|free| {
                let mut v = vec![BigRational::zero(); cols];
                v[free] = BigRational::one();
                for (i, &pc) in self.pivots.iter().enumerate() {
                    v[pc] = -self.reduced.get(i, free).clone();
                }
                v
            })
            .collect()
    }

    /// Whether every solution (when one exists) agrees on the coordinates in `block`.
    pub fn is_unique_on(&self, block: Range<usize>) -> bool {
        let cols = self.reduced.cols;
        let free: Vec<usize> = (0..cols).filter(|c| !self.pivots.contains(c)).collect();
        if free.iter().any(|f| block.contains(f)) {
            return false;
        }
        self.pivots.iter().enumerate().all(|(i, &pc)| {
            !block.contains(&pc) || free.iter().all(|&f| self.reduced.get(i, f).is_zero())
        })
    }

    /// A particular solution (free variables set to 0).
    pub fn solve(&self, b: &[BigRational]) -> Result<Vec<BigRational>, SolveError> {
        if b.len() != self.reduced.rows {
            return Err(SolveError::DimensionMismatch { rows: self.reduced.rows, got: b.len() });
        }
        let y = self.transform.mul_vec(b);
        if let Some(row) = (self.rank()..y.len()).find(|&i| !y[i].is_zero()) {
            return Err(SolveError::Inconsistent { row });
        }
        let mut x = vec![BigRational::zero(); self.reduced.cols];
        for (i, &pc) in self.pivots.iter().enumerate() {
            x[pc] = y[i].clone();
        }
        Ok(x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub values: Vec<BigRational>,
    pub unique_on_block: bool,
}

impl Solution {
    pub fn require_unique(self) -> Result<Vec<BigRational>, SolveError> {
        if self.unique_on_block {
            Ok(self.values)
        } else {
            Err(SolveError::NonUnique)
        }
    }
}

/// Solves `A·x = b` exactly, reporting whether the solution is unique on `block`.
pub fn solve_exact(
    a: &RationalMatrix,
    b: &[BigRational],
    block: Range<usize>,
) -> Result<Solution, SolveError> {
    let rref = Rref::new(a);
    let values = rref.solve(b)?;
    Ok(Solution { values, unique_on_block: rref.is_unique_on(block) })
}

pub fn to_integer(q: &BigRational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn identity_returns_rhs() {
        let a = RationalMatrix::identity(3);
        let s = solve_exact(&a, &q(&[4, -1, 7]), 0..3).unwrap();
        assert!(s.unique_on_block);
        assert_eq!(s.values, q(&[4, -1, 7]));
    }

    #[test]
    fn back_substitution() {
        let a = RationalMatrix::from_integers(&[vec![1, 1], vec![0, 1]]);
        let s = solve_exact(&a, &q(&[3, 1]), 0..2).unwrap();
        assert_eq!(s.require_unique().unwrap(), q(&[2, 1]));
    }

    #[test]
    fn inconsistent_system() {
        let a = RationalMatrix::from_integers(&[vec![1, 2], vec![2, 4]]);
        assert!(matches!(solve_exact(&a, &q(&[1, 3]), 0..2), Err(SolveError::Inconsistent { .. })));
    }

    #[test]
    fn partial_uniqueness() {
        // x0 = 1, x1 + x2 = 2: x0 is pinned, x1 and x2 are not.
        let a = RationalMatrix::from_integers(&[vec![1, 0, 0], vec![0, 1, 1]]);
        let b = q(&[1, 2]);
        let s = solve_exact(&a, &b, 0..1).unwrap();
        assert!(s.unique_on_block);
        assert_eq!(s.values[0], BigRational::one());
        let s = solve_exact(&a, &b, 0..2).unwrap();
        assert_eq!(s.require_unique(), Err(SolveError::NonUnique));
    }

    #[test]
    fn rank_and_null_space() {
        let a = RationalMatrix::from_integers(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        let rref = Rref::new(&a);
        assert_eq!(rref.rank(), 2);
        for v in rref.null_space() {
            assert!(a.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn fractional_solution() {
        let a = RationalMatrix::from_integers(&[vec![2, 0], vec![0, 3]]);
        let s = solve_exact(&a, &q(&[1, 1]), 0..2).unwrap();
        assert_eq!(s.values[0], BigRational::new(1.into(), 2.into()));
        assert_eq!(to_integer(&s.values[0]), None);
        assert_eq!(to_integer(&BigRational::from_integer(5.into())), Some(5.into()));
    }
}
