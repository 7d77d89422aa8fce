//! Exact arithmetic kernel: sparse integer polynomials and a rational solver.

pub mod det;
pub mod linalg;
pub mod poly;

pub use det::{determinant, Ring};
pub use linalg::{solve_exact, RationalMatrix, Rref, Solution, SolveError};
pub use poly::{Assignment, CPolynomial, Family, Generator, Monomial};
