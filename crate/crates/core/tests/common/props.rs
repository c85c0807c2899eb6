//! Invariant checks. Each returns a one-line summary on success and the
//! first violation otherwise, so the same code serves `cargo test` and the
//! acceptance runner.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use orbivol::bounds::{compute_bound, Mode};
use orbivol::catalog::Catalog;
use orbivol::constants::{c1_from_restricted_roots, shipped_roots, RestrictedRootSystem, SHIPPED_ROOT_IDS};
use orbivol::curvature::{curvature_poly, max_curvature_poly, GRID_POINTS};
use orbivol::geometry::{ball_volume, ball_volume_with_limit, log_sin_power_integral, sin_power_integral};
use orbivol::wang::{solve_wang_radius, wang_f};

use super::{direct_bound, gamma, rel_err, sin_power_quad};

pub type Outcome = Result<String, String>;

const SEED: u64 = 0x5eed_0b1f;

pub const FIVE_SPACES: [&str; 5] = ["H.4", "CH.2", "OH.2", "G2_2", "F4_4"];

const WANG_PAIRS: [(f64, f64); 3] = [(1.0, SQRT_2), (SQRT_2, SQRT_2), (1.0, 1.0)];

pub fn wang_scaling() -> Outcome {
    let mut worst: f64 = 0.0;
    for (c1, c2) in WANG_PAIRS {
        let base = solve_wang_radius(c1, c2).map_err(|e| e.to_string())?.r_g;
        for s in [0.5, 2.0, 3.0] {
            let scaled = solve_wang_radius(s * c1, s * c2).map_err(|e| e.to_string())?.r_g;
            let err = (scaled * s - base).abs();
            if err > 1e-12 {
                return Err(format!("({c1}, {c2}) scaled by {s}: off by {err:e}"));
            }
            worst = worst.max(err);
        }
    }
    Ok(format!("r_g(s·C)·s = r_g(C), worst deviation {worst:.1e}"))
}

pub fn wang_least_zero() -> Outcome {
    for (c1, c2) in WANG_PAIRS {
        let r = solve_wang_radius(c1, c2).map_err(|e| e.to_string())?.r_g;
        // open interval: skip the endpoint itself, where F is ~0
        for i in 1..10_000 {
            let t = r * f64::from(i) / 10_000.0;
            if wang_f(c1, c2, t) >= 0.0 {
                return Err(format!("F({c1}, {c2}) is non-negative at t = {t} < r_g = {r}"));
            }
        }
    }
    Ok("F < 0 on a 10^4-point grid of (0, r_g)".into())
}

pub fn wang_fine_scan() -> Outcome {
    for (c1, c2) in WANG_PAIRS {
        let r = solve_wang_radius(c1, c2).map_err(|e| e.to_string())?.r_g;
        let h = 1e-7;
        let mut i = 1u64;
        let t_hi = loop {
            let t = i as f64 * h;
            if wang_f(c1, c2, t) >= 0.0 {
                break t;
            }
            i += 1;
        };
        let t_lo = t_hi - h;
        if !(t_lo <= r + 1e-15 && r <= t_hi + 1e-15) {
            return Err(format!("({c1}, {c2}): scan brackets [{t_lo}, {t_hi}], solver gave {r}"));
        }
    }
    Ok("a 1e-7 sign scan brackets the solver's zero".into())
}

pub fn sin_integral_vs_quadrature() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 1..=60u32 {
        for x in [0.01, 0.1, 0.5, 1.0, FRAC_PI_2] {
            let got = sin_power_integral(n, x).map_err(|e| e.to_string())?;
            let want = sin_power_quad(n, x);
            let err = rel_err(got, want);
            if err > 1e-10 {
                return Err(format!("n = {n}, x = {x}: {got:e} vs quadrature {want:e}"));
            }
            let logged = log_sin_power_integral(n, x).map_err(|e| e.to_string())?.to_f64();
            if rel_err(logged, want) > 1e-10 {
                return Err(format!("log path n = {n}, x = {x}: {logged:e} vs quadrature {want:e}"));
            }
            worst = worst.max(err);
        }
    }
    Ok(format!("n in 1..=60, worst relative error {worst:.1e}"))
}

pub fn euclidean_limit() -> Outcome {
    let mut worst: f64 = 0.0;
    for d in [2u32, 3, 5, 10] {
        for r in [0.3, 1.0, 2.0] {
            let got = ball_volume(d, 1e-10, r).map_err(|e| e.to_string())?.to_f64();
            let h = f64::from(d) / 2.0;
            let want = PI.powf(h) / gamma(h + 1.0) * r.powi(d as i32);
            let err = rel_err(got, want);
            if err > 1e-6 {
                return Err(format!("d = {d}, r = {r}: {got} vs {want}"));
            }
            worst = worst.max(err);
        }
    }
    Ok(format!("k = 1e-10, worst relative error {worst:.1e}"))
}

pub fn ball_volume_monotone() -> Outcome {
    for d in [2u32, 8, 14, 52] {
        for i in 1..20 {
            let r = 0.02 * f64::from(i);
            let mut last = f64::INFINITY;
            for j in 1..20 {
                let k = 0.25 * f64::from(j);
                let v = ball_volume(d, k, r).map_err(|e| e.to_string())?.log10_mag();
                if v >= last {
                    return Err(format!("not decreasing in k at d = {d}, r = {r}, k = {k}"));
                }
                last = v;
            }
        }
        for j in 1..20 {
            let k = 0.25 * f64::from(j);
            let mut last = f64::NEG_INFINITY;
            for i in 1..20 {
                let r = 0.02 * f64::from(i);
                let v = ball_volume(d, k, r).map_err(|e| e.to_string())?.log10_mag();
                if v <= last {
                    return Err(format!("not increasing in r at d = {d}, k = {k}, r = {r}"));
                }
                last = v;
            }
        }
    }
    Ok("decreasing in k and increasing in r on a 19x19 grid".into())
}

pub fn log_vs_direct_pipeline() -> Outcome {
    let cat = Catalog::builtin();
    let mut ids: Vec<String> = FIVE_SPACES.iter().map(|s| s.to_string()).collect();
    ids.extend((5..=12).map(|n| format!("H.{n}")));
    ids.extend((3..=6).map(|n| format!("CH.{n}")));
    let mut worst: f64 = 0.0;
    let mut compared = 0;
    for id in &ids {
        let space = cat.find(id).map_err(|e| e.to_string())?;
        for mode in [Mode::Paper, Mode::Precise] {
            let b = compute_bound(&space, mode).map_err(|e| e.to_string())?;
            if b.bound.log10_mag() < -300.0 {
                continue;
            }
            let direct = direct_bound(&space, b.k_used, b.limit_used);
            let err = rel_err(b.bound.to_f64(), direct);
            if err > 1e-9 {
                return Err(format!("{id} ({mode}): {} vs direct {direct:e}", b.bound));
            }
            worst = worst.max(err);
            compared += 1;
        }
    }
    Ok(format!("{compared} bounds, worst relative error {worst:.1e}"))
}

pub fn mode_gap() -> Outcome {
    let cat = Catalog::builtin();
    let mut worst: f64 = 0.0;
    for id in FIVE_SPACES {
        let space = cat.find(id).map_err(|e| e.to_string())?;
        let paper = compute_bound(&space, Mode::Paper).map_err(|e| e.to_string())?;
        let precise = compute_bound(&space, Mode::Precise).map_err(|e| e.to_string())?;
        let gap = (paper.bound.log10_mag() - precise.bound.log10_mag()).abs();
        if gap >= 0.5 {
            return Err(format!("{id}: log10 gap {gap}"));
        }
        worst = worst.max(gap);
    }
    Ok(format!("largest log10 gap {worst:.3}"))
}

fn family_decreasing(prefix: &str, range: std::ops::RangeInclusive<u32>, mode: Mode) -> Outcome {
    let cat = Catalog::builtin();
    let mut last = f64::INFINITY;
    for n in range.clone() {
        let id = format!("{prefix}.{n}");
        let space = cat.find(&id).map_err(|e| e.to_string())?;
        let v = compute_bound(&space, mode).map_err(|e| e.to_string())?.bound.log10_mag();
        if v >= last {
            return Err(format!("{id}: log10 bound {v} does not drop below {last}"));
        }
        last = v;
    }
    Ok(format!("{prefix}.n strictly decreasing for n in {}..={} ({mode})", range.start(), range.end()))
}

pub fn h_family_decreasing() -> Outcome {
    for mode in [Mode::Paper, Mode::Precise] {
        family_decreasing("H", 4..=20, mode)?;
    }
    Ok("H.n strictly decreasing for n in 4..=20 in both modes".into())
}

pub fn ch_family_decreasing() -> Outcome {
    family_decreasing("CH", 2..=5, Mode::Precise)
}

pub fn curvature_symmetry() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..100_000 {
        let alpha = rng.gen_range(0.0..3.0);
        let (a, b) = (rng.gen::<f64>(), rng.gen::<f64>());
        let (p, q) = (curvature_poly(alpha, a, b), curvature_poly(alpha, b, a));
        if (p - q).abs() > 4.0 * f64::EPSILON * p.abs().max(1.0) {
            return Err(format!("P({alpha}, {a}, {b}) = {p} but swapped gives {q}"));
        }
    }
    Ok("P(a, b) = P(b, a) on 10^5 random triples".into())
}

pub fn curvature_interior_max() -> Outcome {
    for alpha in [1.0, SQRT_2] {
        let m = max_curvature_poly(alpha);
        let (a, b) = m.argmax;
        if !(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0) {
            return Err(format!("alpha = {alpha}: argmax ({a}, {b}) on the boundary"));
        }
        let edge = (0..=10_000)
            .map(|i| f64::from(i) / 10_000.0)
            .flat_map(|t| {
                [
                    curvature_poly(alpha, t, 0.0),
                    curvature_poly(alpha, t, 1.0),
                    curvature_poly(alpha, 0.0, t),
                    curvature_poly(alpha, 1.0, t),
                ]
            })
            .fold(f64::NEG_INFINITY, f64::max);
        if m.poly_max <= edge {
            return Err(format!("alpha = {alpha}: interior max {} not above edge max {edge}", m.poly_max));
        }
    }
    Ok("interior maxima exceed the edge maxima for alpha in {1, √2}".into())
}

/// Largest Hessian eigenvalue magnitude of `P` at `(a, b)`, by central
/// differences.
fn hessian_spectral_radius(alpha: f64, a: f64, b: f64) -> f64 {
    let h = 1e-4;
    let p = |x: f64, y: f64| curvature_poly(alpha, x, y);
    let paa = (p(a + h, b) - 2.0 * p(a, b) + p(a - h, b)) / (h * h);
    let pbb = (p(a, b + h) - 2.0 * p(a, b) + p(a, b - h)) / (h * h);
    let pab = (p(a + h, b + h) - p(a + h, b - h) - p(a - h, b + h) + p(a - h, b - h)) / (4.0 * h * h);
    let mean = 0.5 * (paa + pbb);
    let spread = (0.25 * (paa - pbb).powi(2) + pab * pab).sqrt();
    (mean - spread).abs().max((mean + spread).abs())
}

/// The refined maximum may not fall below the grid maximum, and may exceed
/// it by at most the second-order grid error `½ |λ|max · h²/2`: every point
/// is within `h/√2` of a grid node.
pub fn curvature_grid_vs_newton() -> Outcome {
    let spacing = 1.0 / (GRID_POINTS - 1) as f64;
    let mut worst_gain: f64 = 0.0;
    for i in 0..=40 {
        let alpha = 1.0 + 0.025 * f64::from(i);
        let m = max_curvature_poly(alpha);
        let gain = m.poly_max - m.grid_max;
        let allowed = 1.05 * 0.5 * hessian_spectral_radius(alpha, m.argmax.0, m.argmax.1) * spacing * spacing / 2.0;
        if gain < -1e-12 || gain > allowed {
            return Err(format!("alpha = {alpha}: refined minus grid = {gain:e}, allowed {allowed:e}"));
        }
        worst_gain = worst_gain.max(gain);
    }
    Ok(format!(
        "alpha in [1, 2]: refined max never below the grid max, largest gain {worst_gain:.2e} within the second-order grid bound"
    ))
}

pub fn curvature_monotone_in_alpha() -> Outcome {
    let mut last = f64::NEG_INFINITY;
    for i in 0..=20 {
        let alpha = 1.0 + 0.05 * f64::from(i);
        let v = max_curvature_poly(alpha).poly_max;
        if v < last - 1e-12 {
            return Err(format!("poly_max drops at alpha = {alpha}: {v} < {last}"));
        }
        last = v;
    }
    Ok("poly_max nondecreasing on alpha = 1, 1.05, ..., 2".into())
}

/// Lower-triangular `L` with `LLᵀ = q`.
fn cholesky(q: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = q.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            l[i][j] = if i == j { (q[i][i] - s).sqrt() } else { (q[i][j] - s) / l[j][j] };
        }
    }
    l
}

/// Largest `max_ᾱ |ᾱ(H)|` over `samples` random `H` of unit norm.
pub fn sampled_ad_norm(rrs: &RestrictedRootSystem, samples: usize, rng: &mut StdRng) -> f64 {
    let l = cholesky(&rrs.gram_f64());
    let n = l.len();
    let roots: Vec<Vec<f64>> = rrs
        .roots()
        .iter()
        .map(|r| r.vector.iter().map(|q| *q.numer() as f64 / *q.denom() as f64).collect())
        .collect();
    let mut best: f64 = 0.0;
    let mut z = vec![0.0; n];
    let mut h = vec![0.0; n];
    for _ in 0..samples {
        for v in z.iter_mut() {
            *v = rng.gen_range(-1.0..1.0);
        }
        let len = z.iter().map(|v| v * v).sum::<f64>().sqrt();
        if len == 0.0 {
            continue;
        }
        // Lᵀ h = z / |z| gives Hᵀ Q H = 1
        for i in (0..n).rev() {
            let s: f64 = (i + 1..n).map(|k| l[k][i] * h[k]).sum();
            h[i] = (z[i] / len - s) / l[i][i];
        }
        for r in &roots {
            let v: f64 = r.iter().zip(&h).map(|(a, x)| a * x).sum::<f64>().abs();
            best = best.max(v);
        }
    }
    best
}

pub fn dual_norm_sampling() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut worst_gap: f64 = 0.0;
    for id in SHIPPED_ROOT_IDS {
        let rrs = shipped_roots(id).ok_or(format!("no data for {id}"))?;
        let c1 = c1_from_restricted_roots(&rrs).map_err(|e| e.to_string())?;
        let sampled = sampled_ad_norm(&rrs, 1_000_000, &mut rng);
        if sampled > c1 * (1.0 + 1e-12) {
            return Err(format!("{id}: sampled {sampled} exceeds C1 = {c1}"));
        }
        if c1 - sampled > 1e-3 {
            return Err(format!("{id}: sampled {sampled} stays {} below C1 = {c1}", c1 - sampled));
        }
        worst_gap = worst_gap.max(c1 - sampled);
    }
    Ok(format!("10^6 samples per system, largest shortfall {worst_gap:.1e}"))
}

pub fn dual_norm_scaling() -> Outcome {
    use num_rational::Ratio;
    for id in SHIPPED_ROOT_IDS {
        let rrs = shipped_roots(id).ok_or(format!("no data for {id}"))?;
        let c1 = c1_from_restricted_roots(&rrs).map_err(|e| e.to_string())?;
        for (n, d) in [(1i64, 4i64), (2, 1), (9, 1), (3, 7)] {
            let s = n as f64 / d as f64;
            let scaled = rrs.scaled(Ratio::new(n, d)).map_err(|e| e.to_string())?;
            let got = c1_from_restricted_roots(&scaled).map_err(|e| e.to_string())?;
            if rel_err(got, c1 / s.sqrt()) > 1e-12 {
                return Err(format!("{id} with Q scaled by {s}: {got} vs {}", c1 / s.sqrt()));
            }
        }
    }
    Ok("C1(sQ) = C1(Q)/√s".into())
}

pub fn ball_volume_limit_matches_radius() -> Outcome {
    for (d, k, r) in [(10u32, 1.17, 0.114), (52, 1.885, 0.098)] {
        let a = ball_volume(d, k, r).map_err(|e| e.to_string())?;
        let b = ball_volume_with_limit(d, k, r * k.sqrt()).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("d = {d}: {a} vs {b}"));
        }
    }
    Ok("ball_volume(d, k, r) = ball_volume_with_limit(d, k, r√k)".into())
}

/// Everything that makes up acceptance criterion 5, in order.
pub fn all() -> Vec<(&'static str, fn() -> Outcome)> {
    vec![
        ("wang scaling", wang_scaling as fn() -> Outcome),
        ("wang least zero", wang_least_zero),
        ("wang fine scan", wang_fine_scan),
        ("sin integral vs quadrature", sin_integral_vs_quadrature),
        ("euclidean limit", euclidean_limit),
        ("ball volume monotone", ball_volume_monotone),
        ("log vs direct pipeline", log_vs_direct_pipeline),
        ("paper vs precise gap", mode_gap),
        ("H family decreasing", h_family_decreasing),
        ("CH family decreasing", ch_family_decreasing),
        ("curvature symmetry", curvature_symmetry),
        ("curvature interior max", curvature_interior_max),
        ("curvature grid vs newton", curvature_grid_vs_newton),
        ("curvature monotone in alpha", curvature_monotone_in_alpha),
        ("dual norm sampling", dual_norm_sampling),
        ("dual norm scaling", dual_norm_scaling),
    ]
}
