//! Exact scalar and small-tensor arithmetic underlying the whole toolkit.

pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod tensor;

pub use linalg::{solve_affine, LinalgError, Matrix, Vector};
pub use poly::{Poly, RootError};
pub use scalar::{euler_phi, ParseScalarError, Rational, Scalar, ScalarError};
pub use tensor::{trace_bilinear_rank, Tensor2, Tensor3};
