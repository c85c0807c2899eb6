//! Log-space special functions and the constant-curvature ball volume.

mod gamma;
mod logreal;
mod sine_integral;

pub use gamma::{factorial, log10_biguint, log10_factorial, log_gamma};
pub use logreal::{LogReal, Sign};
pub use sine_integral::{log_sin_power_integral, sin_power_integral, wallis};

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Volume of a geodesic ball of radius `r` in the simply connected
/// `d`-dimensional space of constant curvature `k > 0`:
///
/// `V(d, k, r) = 2 (π/k)^{d/2} / Γ(d/2) · ∫₀^{r√k} sin^{d−1}φ dφ`.
///
/// By Gunther's comparison theorem this bounds from below the volume of any
/// ball of radius `r` inside the cut locus of a `d`-manifold whose sectional
/// curvatures are at most `k`.
pub fn ball_volume(d: u32, k: f64, r: f64) -> Result<LogReal> {
    ball_volume_with_limit(d, k, r * k.sqrt())
}

/// Same as [`ball_volume`] but with the integration limit `r√k` supplied
/// directly. Used to reproduce published evaluations in which the limit was
/// rounded independently of `r` and `k`.
pub fn ball_volume_with_limit(d: u32, k: f64, limit: f64) -> Result<LogReal> {
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::InvalidArgument(format!("curvature bound {k} must be positive")));
    }
    if !(limit > 0.0) {
        return Err(Error::InvalidArgument(format!("radius must be positive, got limit {limit}")));
    }
    if limit > PI {
        return Err(Error::BeyondCutLocus { r: limit / k.sqrt(), k });
    }
    let half_d = f64::from(d) / 2.0;
    let prefactor = LogReal::from_f64(2.0) * LogReal::from_f64(PI / k).powf(half_d);
    let gamma = log_gamma(half_d)?;
    let integral = log_sin_power_integral(d - 1, limit)?;
    Ok(prefactor / gamma * integral)
}
