//! Upper bound on the sectional curvature of `G` with its left-invariant
//! metric.
//!
//! Splitting unit vectors into their `𝔨` and `𝔭` parts with norms `a` and
//! `b` bounds the curvature by `C₁²/4 · P(a, b)` with
//!
//! `P(a, b) = a² + b² + (α² − 2)a²b² + 6(α + 1) ab √(1−a²) √(1−b²)`
//!
//! and `α = C₂/C₁`. The bound is `k = C₁²/4 · max P` over the unit square.

use serde::Serialize;

use crate::constants::ConstantsProfile;

/// Grid points per axis for the initial scan.
pub const GRID_POINTS: usize = 2001;
/// Newton stops once `|∇P|` drops below this.
pub const GRADIENT_TOLERANCE: f64 = 1e-12;
const MAX_NEWTON_STEPS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvatureBound {
    pub alpha: f64,
    pub poly_max: f64,
    pub argmax: (f64, f64),
    /// `poly_max / 4 · C₁²`; zero until [`sectional_bound`] fills it in.
    pub k: f64,
    /// `|∇P|` at the refined point.
    pub gradient_norm: f64,
    /// Best value on the grid before refinement.
    pub grid_max: f64,
}

pub fn curvature_poly(alpha: f64, a: f64, b: f64) -> f64 {
    let cross = 6.0 * (alpha + 1.0) * a * b * (1.0 - a * a).sqrt() * (1.0 - b * b).sqrt();
    a * a + b * b + (alpha * alpha - 2.0) * a * a * b * b + cross
}

/// `g(x) = x√(1−x²)` and its first two derivatives.
fn g(x: f64) -> (f64, f64, f64) {
    let s = (1.0 - x * x).sqrt();
    (x * s, (1.0 - 2.0 * x * x) / s, x * (2.0 * x * x - 3.0) / (s * s * s))
}

fn gradient_hessian(alpha: f64, a: f64, b: f64) -> ([f64; 2], [[f64; 2]; 2]) {
    let c = alpha * alpha - 2.0;
    let m = 6.0 * (alpha + 1.0);
    let (ga, ga1, ga2) = g(a);
    let (gb, gb1, gb2) = g(b);
    let grad = [
        2.0 * a + 2.0 * c * a * b * b + m * ga1 * gb,
        2.0 * b + 2.0 * c * a * a * b + m * ga * gb1,
    ];
    let haa = 2.0 + 2.0 * c * b * b + m * ga2 * gb;
    let hbb = 2.0 + 2.0 * c * a * a + m * ga * gb2;
    let hab = 4.0 * c * a * b + m * ga1 * gb1;
    (grad, [[haa, hab], [hab, hbb]])
}

/// Best grid point; ties broken toward the lexicographically smallest
/// `(a, b)`. Only `a ≤ b` is scanned since `P` is symmetric.
fn grid_scan(alpha: f64) -> (f64, (f64, f64)) {
    let h = 1.0 / (GRID_POINTS - 1) as f64;
    let mut best = (f64::NEG_INFINITY, (0.0, 0.0));
    for i in 0..GRID_POINTS {
        let a = i as f64 * h;
        for j in i..GRID_POINTS {
            let b = j as f64 * h;
            let v = curvature_poly(alpha, a, b);
            if v > best.0 {
                best = (v, (a, b));
            }
        }
    }
    best
}

/// Damped Newton on `∇P = 0`, kept strictly inside the square.
fn refine(alpha: f64, start: (f64, f64)) -> ((f64, f64), f64) {
    let inside = |x: f64| x > 0.0 && x < 1.0;
    let (mut a, mut b) = start;
    if !(inside(a) && inside(b)) {
        return ((a, b), f64::NAN);
    }
    let mut norm = f64::INFINITY;
    for _ in 0..MAX_NEWTON_STEPS {
        let (grad, hess) = gradient_hessian(alpha, a, b);
        norm = grad[0].hypot(grad[1]);
        if norm <= GRADIENT_TOLERANCE {
            break;
        }
        let det = hess[0][0] * hess[1][1] - hess[0][1] * hess[1][0];
        // a maximum needs a negative definite Hessian; otherwise stop
        if !(hess[0][0] < 0.0 && det > 0.0) {
            break;
        }
        let da = -(hess[1][1] * grad[0] - hess[0][1] * grad[1]) / det;
        let db = -(hess[0][0] * grad[1] - hess[1][0] * grad[0]) / det;
        let mut t = 1.0;
        while !(inside(a + t * da) && inside(b + t * db)) && t > 1e-12 {
            t *= 0.5;
        }
        let (na, nb) = (a + t * da, b + t * db);
        if na == a && nb == b {
            break;
        }
        a = na;
        b = nb;
    }
    ((a, b), norm)
}

/// Global maximum of `P` over `[0,1]²`: a grid scan followed by Newton
/// refinement from the best grid point.
pub fn max_curvature_poly(alpha: f64) -> CurvatureBound {
    assert!(alpha > 0.0, "alpha must be positive");
    let (grid_max, start) = grid_scan(alpha);
    let (mut argmax, gradient_norm) = refine(alpha, start);
    let mut poly_max = curvature_poly(alpha, argmax.0, argmax.1);
    if !(poly_max >= grid_max) {
        argmax = start;
        poly_max = grid_max;
    }
    debug_assert!(
        (curvature_poly(alpha, argmax.1, argmax.0) - poly_max).abs() <= 1e-12 * poly_max.abs().max(1.0)
    );
    CurvatureBound {
        alpha,
        poly_max,
        argmax,
        k: 0.0,
        gradient_norm,
        grid_max,
    }
}

pub fn sectional_bound(profile: &ConstantsProfile) -> CurvatureBound {
    let mut bound = max_curvature_poly(profile.alpha_ratio);
    bound.k = bound.poly_max / 4.0 * profile.c1 * profile.c1;
    bound
}
