//! Semi-closed-form solvers: power laws through ratio recursions and
//! truncated exponentials through the `Phi_r` / `theta_r` machinery.

mod phi;
mod power;
mod theta;
mod truncexp;

pub use phi::{phi, phi_check};
pub use power::{chi, power_grid, power_ratios};
pub use theta::{
    theta1_b_coefficients, theta1_coefficients, theta1_pole, theta1_series, theta2_coefficients, theta2_series,
    theta_backward, theta_forward, PowerSeries, ThetaMethod, DEFAULT_SERIES_ORDER, SERIES_AGREEMENT,
};
pub use truncexp::truncexp_grid;
