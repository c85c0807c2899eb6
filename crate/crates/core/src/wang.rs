//! Radius of Wang's Zassenhaus neighbourhood.
//!
//! `R_G` is the least positive zero of
//! `F(t) = e^{C₁t} − 1 + 2 sin(C₂t) − C₁t / (e^{C₁t} − 1)`; every lattice
//! has a conjugate meeting the `R_G`-ball about the identity trivially, so a
//! ball of radius `R_G / 2` embeds in the quotient.

use serde::Serialize;

use crate::error::{Error, Result};

/// Scan step in units of `1/C₁`.
pub const SCAN_STEP: f64 = 1e-3;
/// The scan gives up past `SCAN_LIMIT / C₁`.
pub const SCAN_LIMIT: f64 = 20.0;
/// Bisection stops once the bracket is this narrow.
pub const BRACKET_WIDTH: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WangRadius {
    pub r_g: f64,
    pub r_half: f64,
    /// `|F(r_g)|`
    pub residual: f64,
}

/// `x / (eˣ − 1)`, continuous through `x = 0`.
fn bernoulli_generating(x: f64) -> f64 {
    if x.abs() < 1e-6 {
        // 1 − x/2 + x²/12 − x⁴/720
        1.0 - x / 2.0 + x * x / 12.0
    } else {
        x / x.exp_m1()
    }
}

pub fn wang_f(c1: f64, c2: f64, t: f64) -> f64 {
    let x = c1 * t;
    x.exp_m1() + 2.0 * (c2 * t).sin() - bernoulli_generating(x)
}

pub fn solve_wang_radius(c1: f64, c2: f64) -> Result<WangRadius> {
    if !(c1 > 0.0 && c2 > 0.0) || !c1.is_finite() || !c2.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "constants must be positive, got C1 = {c1}, C2 = {c2}"
        )));
    }
    let f = |t: f64| wang_f(c1, c2, t);
    let step = SCAN_STEP / c1;
    let limit = SCAN_LIMIT / c1;

    let mut lo = 0.0;
    let mut hi = None;
    let mut i = 1u32;
    loop {
        let t = f64::from(i) * step;
        if t > limit {
            break;
        }
        if f(t) >= 0.0 {
            hi = Some(t);
            break;
        }
        lo = t;
        i += 1;
    }
    let mut hi = hi.ok_or(Error::NoZeroFound { limit })?;

    while hi - lo > BRACKET_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (flo, fhi) = (f(lo).abs(), f(hi).abs());
    let r_g = if flo < fhi { lo } else { hi };
    Ok(WangRadius {
        r_g,
        r_half: r_g / 2.0,
        residual: flo.min(fhi),
    })
}
