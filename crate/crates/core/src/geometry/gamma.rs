//! Gamma function in log space.
//!
//! Integer and half-integer arguments go through exact big-integer
//! factorials before the logarithm is taken; everything else falls back to
//! the Lanczos approximation in `statrs`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::LogReal;
use crate::error::{Error, Result};

/// Largest integer or half-integer argument handled by the exact path.
const EXACT_LIMIT: f64 = 4096.0;

/// `log10` of an arbitrary-size positive integer.
pub fn log10_biguint(n: &BigUint) -> f64 {
    assert!(n.bits() > 0, "log10 of zero");
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().expect("fits in f64").log10();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().expect("64 leading bits");
    (top as f64).log10() + shift as f64 * std::f64::consts::LOG10_2
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn log10_factorial(n: u64) -> f64 {
    log10_biguint(&factorial(n))
}

/// `log10 Γ(m + 1/2) = log10((2m)! √π / (4^m m!))`.
fn log10_gamma_half_integer(m: u64) -> f64 {
    let num = factorial(2 * m);
    let den = factorial(m) << (2 * m);
    log10_biguint(&num) - log10_biguint(&den) + 0.5 * std::f64::consts::PI.log10()
}

/// `Γ(x)` as a [`LogReal`] for `x > 0`.
pub fn log_gamma(x: f64) -> Result<LogReal> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::NonPositiveGamma(x));
    }
    let twice = 2.0 * x;
    if x <= EXACT_LIMIT && twice == twice.round() {
        let twice = twice as u64;
        let log10 = if twice.is_multiple_of(2) {
            log10_factorial(twice / 2 - 1)
        } else {
            log10_gamma_half_integer(twice / 2)
        };
        return Ok(LogReal::positive_from_log10(log10));
    }
    Ok(LogReal::positive_from_ln(statrs::function::gamma::ln_gamma(x)))
}
