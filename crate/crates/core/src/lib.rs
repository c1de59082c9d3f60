//! Exact verification of the eigenspace decomposition, quadratic relations and
//! determinant certificate for multilinear forms on (P^1)^4 under a cyclic
//! permutation of the factors.
//!
//! All arithmetic is exact over `Q(i)`.

pub mod certify;
pub mod error;
pub mod exactnum;
pub mod linalg;
pub mod multipoly;
pub mod weil;

pub use certify::{run_pipeline, verify_certificate, Certificate, SeededSampler, Verdict};
pub use error::{Error, Result};
pub use exactnum::{parse_gaussian, rational, GaussianRational, Rational};
pub use linalg::{PolyMatrix, ScalarMatrix};
pub use multipoly::{Monomial, Polynomial, VariableRegistry, ZeroFreeVerdict};
pub use weil::{CoefficientTriple, EliminationResult, GroupElement};
