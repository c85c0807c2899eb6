//! `I_n(x) = ∫₀ˣ sinⁿφ dφ` for `0 ≤ x ≤ π`.
//!
//! Two representations, each free of cancellation where it is used:
//!
//! * Substituting `u = sin φ` gives
//!   `I_n(x) = sⁿ⁺¹ Σⱼ cⱼ s²ʲ / (n + 1 + 2j)` with `s = sin x` and
//!   `cⱼ = C(2j, j) / 4ʲ`. Every term is positive and the ratio is below
//!   `s²`, so this converges for `x < π/2`, quickly when `x ≤ π/4`. The
//!   prefactor is carried in log space because it underflows `f64` for
//!   large `n`.
//! * `I_n(x) = W_n − K_n(π/2 − x)` where `W_n = I_n(π/2)` (Wallis) and
//!   `K_n(y) = ∫₀ʸ cosⁿψ dψ` obeys a recurrence with positive terms. This
//!   is used only when `K_n ≤ W_n / 2`, so the subtraction costs at most a
//!   bit; otherwise the series above is summed, which then still converges
//!   in `O(n)` terms.
//!
//! Beyond `π/2`, `I_n(x) = 2 W_n − I_n(π − x)`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use super::LogReal;
use crate::error::{Error, Result};

fn check_range(x: f64) -> Result<()> {
    if !(0.0..=PI).contains(&x) {
        return Err(Error::InvalidArgument(format!(
            "sine-power integral upper limit {x} is outside [0, π]"
        )));
    }
    Ok(())
}

/// `I_n(π/2)` by the Wallis recurrence.
pub fn wallis(n: u32) -> f64 {
    let mut w = if n.is_multiple_of(2) { FRAC_PI_2 } else { 1.0 };
    let mut m = if n.is_multiple_of(2) { 2 } else { 3 };
    while m <= n {
        w *= f64::from(m - 1) / f64::from(m);
        m += 2;
    }
    w
}

/// `K_n(y) = ∫₀ʸ cosⁿψ dψ` via `K_n = sin y cosⁿ⁻¹y / n + (n−1)/n K_{n−2}`.
fn cos_power_integral(n: u32, y: f64) -> f64 {
    let (s, c) = y.sin_cos();
    let mut k = if n.is_multiple_of(2) { y } else { s };
    let mut m = if n.is_multiple_of(2) { 2 } else { 3 };
    let mut cpow = if n.is_multiple_of(2) { c } else { c * c };
    while m <= n {
        k = s * cpow / f64::from(m) + f64::from(m - 1) / f64::from(m) * k;
        cpow *= c * c;
        m += 2;
    }
    k
}

/// `log10` of the series representation.
fn log10_series(n: u32, x: f64) -> f64 {
    let s = x.sin();
    let s2 = s * s;
    let base = f64::from(n) + 1.0;
    let mut coeff = 1.0;
    let mut pow = 1.0;
    let mut sum = 1.0 / base;
    for j in 0..10_000_000u32 {
        let jf = f64::from(j);
        coeff *= (2.0 * jf + 1.0) / (2.0 * jf + 2.0);
        pow *= s2;
        let term = coeff * pow / (base + 2.0 * jf + 2.0);
        sum += term;
        // remaining tail is below term·s²/(1 − s²)
        if term * s2 < 1e-17 * sum * (1.0 - s2) {
            break;
        }
    }
    base * s.log10() + sum.log10()
}

/// `log10 I_n(x)` for `0 < x ≤ π/2`.
fn log10_up_to_half_pi(n: u32, x: f64) -> f64 {
    if x > FRAC_PI_4 {
        let w = wallis(n);
        let k = cos_power_integral(n, FRAC_PI_2 - x);
        if k <= 0.5 * w {
            return (w - k).log10();
        }
    }
    log10_series(n, x)
}

fn plain(n: u32, x: f64) -> f64 {
    if x <= FRAC_PI_2 {
        10f64.powf(log10_up_to_half_pi(n, x))
    } else {
        2.0 * wallis(n) - plain(n, PI - x)
    }
}

/// `I_n(x)` as a plain float. Underflows to zero when the true value is
/// below the `f64` range; use [`log_sin_power_integral`] there.
pub fn sin_power_integral(n: u32, x: f64) -> Result<f64> {
    check_range(x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(plain(n, x))
}

/// `I_n(x)` in log space.
pub fn log_sin_power_integral(n: u32, x: f64) -> Result<LogReal> {
    check_range(x)?;
    if x == 0.0 {
        return Ok(LogReal::ZERO);
    }
    if x <= FRAC_PI_2 {
        Ok(LogReal::positive_from_log10(log10_up_to_half_pi(n, x)))
    } else {
        // at least W_n, which is representable for any n
        Ok(LogReal::from_f64(plain(n, x)))
    }
}
