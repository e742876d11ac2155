//! Special-function kernel.

mod bessel;
mod gamma;
mod hypergeom;
mod laguerre;
mod sine_integral;

pub use bessel::{bessel_i, bessel_k, bessel_k_from_i, bessel_k_scaled, BesselOrderArg};
pub use gamma::{cos_pi, gamma, gamma_sign, ln_gamma, ln_gamma_ratio_symmetric, rgamma, sin_pi, EULER_GAMMA};
pub use hypergeom::{
    kummer_m, tricomi_u, tricomi_u_bessel, tricomi_u_integral, tricomi_u_ratio, tricomi_u_ratio_b,
    tricomi_u_recurrence_shift, tricomi_u_recurrence_shift_scaled, tricomi_u_scaled, tricomi_u_scaled_with,
    tricomi_u_series, HypergeomArgs, Scaled, Shift, UOptions, URoute, A_SWITCH, B_NUDGE,
};
pub use laguerre::laguerre;
pub use sine_integral::sine_integral;
