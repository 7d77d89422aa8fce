//! Exact Chern-class calculus: Schur and Q̃ expansions, Schubert calculus on
//! `Gr(r, n)` and `LG(n)`, and positivity certificates for Thom polynomials.
//!
//! All arithmetic is over arbitrary-precision integers and rationals. Batch
//! operations take a [`parallel::Mode`]; the rayon backend sits behind the
//! default `parallel` feature.

pub mod algebra;
pub mod error;
pub mod expansion;
pub mod expr;
pub mod legendrian;
pub mod parallel;
pub mod partition;
pub mod positivity;
pub mod qtilde;
pub mod rings;
pub mod schur;

pub use algebra::{CPolynomial, Family, Generator};
pub use error::{Error, Result};
pub use expansion::{BasisLabel, Expansion, QExpansion, SchurExpansion};
pub use expr::{parse, Expr, ParseError};
pub use legendrian::{lagrangian_part, legendrian_parse, legendrian_positivity, LegendrianClass, LegendrianKey};
pub use parallel::Mode;
pub use partition::{Partition, StrictPartition};
pub use positivity::{certify, schur_bundle_class, PositivityReport, Verdict};
pub use qtilde::{qtilde, qtilde_expand};
pub use rings::{GrassmannianRing, LagrangianRing};
