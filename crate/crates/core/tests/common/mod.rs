//! Independent oracles shared by the integration tests and the acceptance
//! runner. Nothing here calls the library's numerical kernels.

#![allow(dead_code)]

pub mod props;

use std::f64::consts::PI;

use orbivol::catalog::{ExactVolumeExpression, SymmetricSpaceSpec};

/// Adaptive Simpson with Richardson correction. `tol` is absolute.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn step(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        // below round-off the estimate cannot improve by splitting
        let floor = 64.0 * f64::EPSILON * (left + right).abs();
        if depth == 0 || delta.abs() <= (15.0 * tol).max(floor) {
            return left + right + delta / 15.0;
        }
        step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fm, fb, whole, tol, 50)
}

/// Quadrature to relative `rel`: a first pass sizes the absolute target.
pub fn integrate_rel(f: &dyn Fn(f64) -> f64, a: f64, b: f64, rel: f64) -> f64 {
    let peak = (0..=64)
        .map(|i| f(a + (b - a) * f64::from(i) / 64.0).abs())
        .fold(f64::MIN_POSITIVE, f64::max);
    let rough = adaptive_simpson(f, a, b, 1e-6 * peak * (b - a));
    adaptive_simpson(f, a, b, rel * rough.abs())
}

/// `∫₀ˣ sinⁿ` by quadrature, relative tolerance 10⁻¹⁵.
pub fn sin_power_quad(n: u32, x: f64) -> f64 {
    integrate_rel(&|t: f64| t.sin().powi(n as i32), 0.0, x, 1e-15)
}

pub fn gamma(x: f64) -> f64 {
    statrs::function::gamma::gamma(x)
}

pub fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

/// Volume of the unit `k`-sphere.
pub fn sphere_volume(k: u32) -> f64 {
    let h = f64::from(k + 1) / 2.0;
    2.0 * PI.powf(h) / gamma(h)
}

/// `Vol(SO(n)) = Vol(SO(n−1)) · Vol(S^{n−1})`.
pub fn so_volume_by_spheres(n: u32) -> f64 {
    (1..n).map(sphere_volume).product()
}

/// `ln` of an exact volume expression, factorials through `ln Γ`.
pub fn ln_volume_via_gamma(e: &ExactVolumeExpression) -> f64 {
    let q = *e.rational_scalar.numer() as f64 / *e.rational_scalar.denom() as f64;
    let pi_pow = *e.pow_pi.numer() as f64 / *e.pow_pi.denom() as f64;
    q.ln() + e.pow2 as f64 * 2f64.ln() + pi_pow * PI.ln() + 0.5 * (e.sqrt_int as f64).ln()
        - e.factorial_denominators.iter().map(|&f| ln_gamma(f as f64 + 1.0)).sum::<f64>()
}

/// `V(d, k, limit)` in plain floating point.
pub fn direct_ball_volume(d: u32, k: f64, limit: f64) -> f64 {
    let h = f64::from(d) / 2.0;
    2.0 * (PI / k).powf(h) / gamma(h) * sin_power_quad(d - 1, limit)
}

/// The whole bound in plain floating point for given `k` and limit.
pub fn direct_bound(space: &SymmetricSpaceSpec, k: f64, limit: f64) -> f64 {
    let n = f64::from(space.dim_space);
    let norm = (f64::from(space.alpha_g) / (2.0 * (n - 1.0))).powf(n / 2.0);
    let vol_k = ln_volume_via_gamma(space.k_volume.as_ref().unwrap()).exp();
    norm / vol_k * direct_ball_volume(space.dim_group, k, limit)
}

/// Dual Coxeter number of the complexified simple Lie algebra.
pub fn dual_coxeter(series: char, rank: u32) -> u32 {
    match (series, rank) {
        ('A', l) => l + 1,
        ('B', l) => 2 * l - 1,
        ('C', l) => l + 1,
        ('D', l) => 2 * l - 2,
        ('E', 6) => 12,
        ('E', 7) => 18,
        ('E', 8) => 30,
        ('F', 4) => 9,
        ('G', 2) => 4,
        other => panic!("no simple algebra {other:?}"),
    }
}

/// Complexification `𝔤_ℂ` of the isometry algebra, as (series, rank).
pub fn complexification(id: &str) -> (char, u32) {
    let n = |p: &str| id.strip_prefix(p).unwrap().parse::<u32>().unwrap();
    if id.starts_with("H.") {
        // so(n+1, ℂ)
        let m = n("H.") + 1;
        if m % 2 == 0 {
            ('D', m / 2)
        } else {
            ('B', m / 2)
        }
    } else if id.starts_with("CH.") {
        ('A', n("CH."))
    } else if id.starts_with("AII.") {
        ('A', 2 * n("AII.") - 1)
    } else {
        match id {
            "OH.2" | "F4_4" => ('F', 4),
            "G2_2" => ('G', 2),
            "EIV" => ('E', 6),
            _ => panic!("unexpected id {id}"),
        }
    }
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}
