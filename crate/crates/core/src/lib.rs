//! Optimal dual (Delaunay) quantization of compactly supported
//! one-dimensional laws.
//!
//! A dual quantizer is a grid `a = x_1 < ... < x_N = b` together with the
//! random splitting that sends `xi` in `[x_i, x_{i+1}]` to one of the two
//! endpoints with barycentric probabilities, so that `E[X_hat | X] = X`.
//! The crate computes `L^r`-optimal grids with a Lloyd-type fixed point
//! iteration for `r = 2`, and with dedicated recursions for power and
//! truncated exponential laws for general `r`. The derivative and spectral
//! tools needed to certify the results are included.

pub mod distributions;
pub mod dual;
pub mod error;
pub mod kernels;
pub mod lloyd;
pub mod quadrature;
pub mod roots;
pub mod special;
pub mod spectral;
pub mod tridiag;

pub use distributions::{DistributionKind, DistributionSpec, Orientation, Tabulated};
pub use dual::{DualGrid, QuantizerResult};
pub use error::{Error, Result};
pub use kernels::KernelParams;
pub use tridiag::{Tridiag, TridiagSym};
pub use lloyd::{lloyd_solve, LloydConfig, LloydInit};
