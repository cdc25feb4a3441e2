//! The dual quantizer: grid, randomized splitting, companion weights,
//! distortion with its derivatives, and a brute-force optimizer used as a
//! test oracle.

mod brute;
mod distortion;
mod grid;
mod projection;
mod result;
mod weights;
mod zador;

pub use brute::brute_force_optimal;
pub use distortion::{
    distortion, distortion_cdf_form, distortion_density_form, distortion_gradient, distortion_hessian,
    distortion_quadratic, gradient_cdf_form, gradient_density_form, gradient_quadratic, residual_sup, Distortion,
};
pub use grid::DualGrid;
pub use projection::{dual_project, projection_mean};
pub use result::{quadrature_apply, QuantizerResult};
pub use weights::{dual_weights, dual_weights_by_quadrature};
pub use zador::{uniform_zador_table, zador_constant, ZadorRow};
