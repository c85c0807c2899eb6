//! Lower bound for `Vol(Γ\G/K, g₀)` where `g₀` is normalized to Ricci
//! curvature `−(N−1)`:
//!
//! `(α_G / 2(N−1))^{N/2} · 1/Vol(K) · V(d, k, r)`
//!
//! with `r = R_G/2` from the Wang radius and `k` the sectional curvature
//! bound, both determined by `(C₁, C₂)`.
//!
//! Two modes are offered. `Precise` carries `r`, `k` and the integration
//! limit `r√k` at full precision. `Paper` substitutes the rounded values
//! behind the published table so that those figures are reproduced; the
//! published arithmetic rounds `r`, `k` and `r√k` independently and not
//! always consistently, so the substitutions are per family.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::catalog::{k_volume_value, Catalog, ConstantsClass, Family, SymmetricSpaceSpec};
use crate::constants::{classify_constants, ConstantsProfile};
use crate::curvature::{sectional_bound, CurvatureBound};
use crate::error::{Error, Result};
use crate::geometry::{ball_volume_with_limit, LogReal};
use crate::wang::{solve_wang_radius, WangRadius};

/// Largest family parameter accepted by [`bound_table`].
pub const MAX_FAMILY_N: u32 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Paper,
    Precise,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Paper => "paper",
            Mode::Precise => "precise",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "paper" => Ok(Mode::Paper),
            "precise" => Ok(Mode::Precise),
            _ => Err(Error::InvalidArgument(format!("unknown mode `{s}`"))),
        }
    }
}

/// Ball radius, curvature bound and integration limit fed to the comparison
/// volume.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BallParameters {
    pub r: f64,
    pub k: f64,
    pub limit: f64,
}

/// Published rounding of `R_G/2` for `C₁ = 1`, `C₂ = √2`.
pub const PAPER_R_ONE_SQRT2: f64 = 0.114;
/// Published rounding of `R_G/2` for `C₁ = C₂ = √2`.
pub const PAPER_R_EQUAL_SQRT2: f64 = 0.098;
/// Published curvature bound for `C₁ = 1`, `C₂ = √2`.
pub const PAPER_K_ONE_SQRT2: f64 = 1.17259;
/// Published curvature bound for `C₁ = C₂ = √2`, as used for `ℂHⁿ`.
pub const PAPER_K_EQUAL_SQRT2_FINE: f64 = 1.88462;
/// Published curvature bound for `C₁ = C₂ = √2`, as used for `G₂₍₂₎` and `F₄₍₄₎`.
pub const PAPER_K_EQUAL_SQRT2_COARSE: f64 = 1.885;
/// Published `r√k` for `C₁ = 1`, `C₂ = √2`.
pub const PAPER_LIMIT_ONE_SQRT2: f64 = 0.12344;
/// Published `r√k` for `C₁ = C₂ = √2`.
pub const PAPER_LIMIT_EQUAL_SQRT2: f64 = 0.134;

/// The rounded parameters that reproduce the published bounds.
///
/// * `Hⁿ`, `𝕆H²`: `r = 0.114`, `k = 1.17259`, limit `0.12344`.
/// * `ℂHⁿ`: `r = 0.098`, `k = 1.88462`, limit `r√k`.
/// * `G₂₍₂₎`, `F₄₍₄₎`: `r = 0.098`, `k = 1.885`, limit `0.134`.
///
/// User-registered spaces get the `Hⁿ` values or the `G₂₍₂₎` values
/// according to their constants class.
pub fn paper_parameters(space: &SymmetricSpaceSpec) -> Result<BallParameters> {
    let one_sqrt2 = BallParameters {
        r: PAPER_R_ONE_SQRT2,
        k: PAPER_K_ONE_SQRT2,
        limit: PAPER_LIMIT_ONE_SQRT2,
    };
    let equal_coarse = BallParameters {
        r: PAPER_R_EQUAL_SQRT2,
        k: PAPER_K_EQUAL_SQRT2_COARSE,
        limit: PAPER_LIMIT_EQUAL_SQRT2,
    };
    match (space.family, space.constants_class) {
        (Family::ComplexHyperbolic(_), _) => Ok(BallParameters {
            r: PAPER_R_EQUAL_SQRT2,
            k: PAPER_K_EQUAL_SQRT2_FINE,
            limit: PAPER_R_EQUAL_SQRT2 * PAPER_K_EQUAL_SQRT2_FINE.sqrt(),
        }),
        (_, ConstantsClass::OneSqrt2) => Ok(one_sqrt2),
        (_, ConstantsClass::EqualSqrt2) => Ok(equal_coarse),
        (_, ConstantsClass::H3Special) => Err(Error::InvalidArgument(format!(
            "{}: no published rounding for class H3_SPECIAL; use precise mode",
            space.id
        ))),
    }
}

/// Full-precision Wang radius and curvature bound for one class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PreciseConstants {
    pub wang: WangRadius,
    pub curvature: CurvatureBound,
}

impl PreciseConstants {
    pub fn ball(&self) -> BallParameters {
        let r = self.wang.r_half;
        let k = self.curvature.k;
        BallParameters { r, k, limit: r * k.sqrt() }
    }
}

fn compute_precise(class: ConstantsClass) -> Result<PreciseConstants> {
    let profile = ConstantsProfile::for_class(class);
    Ok(PreciseConstants {
        wang: solve_wang_radius(profile.c1, profile.c2)?,
        curvature: sectional_bound(&profile),
    })
}

/// Memoized per class; the curvature maximization is a few million
/// polynomial evaluations.
pub fn precise_constants(class: ConstantsClass) -> Result<PreciseConstants> {
    static CELLS: [OnceLock<std::result::Result<PreciseConstants, Error>>; 3] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = match class {
        ConstantsClass::EqualSqrt2 => 0,
        ConstantsClass::OneSqrt2 => 1,
        ConstantsClass::H3Special => 2,
    };
    CELLS[slot].get_or_init(|| compute_precise(class)).clone()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundResult {
    pub space_id: String,
    pub mode: Mode,
    pub dim_space: u32,
    pub dim_group: u32,
    pub alpha_g: u32,
    pub profile: ConstantsProfile,
    pub r_used: f64,
    pub k_used: f64,
    pub limit_used: f64,
    /// `(α_G / 2(N−1))^{N/2}`
    pub normalization: LogReal,
    pub k_volume_reciprocal: LogReal,
    /// `V(d, k, r)`
    pub ball_term: LogReal,
    pub bound: LogReal,
}

impl BoundResult {
    /// Lower bound for `Vol(Γ\G) = Vol(Γ\G/K) · Vol(K)`.
    pub fn group_quotient_bound(&self) -> LogReal {
        self.bound / self.k_volume_reciprocal
    }
}

/// `(α_G / 2(N−1))^{N/2}`; exactly one when `α_G = 2(N−1)`.
pub fn normalization_factor(alpha_g: u32, dim_space: u32) -> LogReal {
    let denom = 2 * (dim_space - 1);
    if alpha_g == denom {
        return LogReal::ONE;
    }
    LogReal::from_f64(f64::from(alpha_g) / f64::from(denom)).powf(f64::from(dim_space) / 2.0)
}

pub fn compute_bound(space: &SymmetricSpaceSpec, mode: Mode) -> Result<BoundResult> {
    if space.k_volume.is_none() {
        return Err(Error::MissingKVolume(space.id.clone()));
    }
    if !space.supports_bound() {
        return Err(Error::OutsideWorkedFamilies(space.id.clone()));
    }
    let profile = classify_constants(space);
    let ball = match mode {
        Mode::Paper => paper_parameters(space)?,
        Mode::Precise => precise_constants(space.constants_class)?.ball(),
    };
    let normalization = normalization_factor(space.alpha_g, space.dim_space);
    let k_volume_reciprocal = k_volume_value(space)?.recip();
    let ball_term = ball_volume_with_limit(space.dim_group, ball.k, ball.limit)?;
    Ok(BoundResult {
        space_id: space.id.clone(),
        mode,
        dim_space: space.dim_space,
        dim_group: space.dim_group,
        alpha_g: space.alpha_g,
        profile,
        r_used: ball.r,
        k_used: ball.k,
        limit_used: ball.limit,
        normalization,
        k_volume_reciprocal,
        ball_term,
        bound: normalization * k_volume_reciprocal * ball_term,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFamily {
    RealHyperbolic,
    ComplexHyperbolic,
    AllFixed,
}

impl FromStr for TableFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" => Ok(TableFamily::RealHyperbolic),
            "CH" => Ok(TableFamily::ComplexHyperbolic),
            "FIXED" | "fixed" | "ALL_FIXED" => Ok(TableFamily::AllFixed),
            _ => Err(Error::InvalidArgument(format!("unknown family `{s}` (expected H, CH or FIXED)"))),
        }
    }
}

/// One row of a table: the space id and its bound or the reason it failed.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub space_id: String,
    pub result: Result<BoundResult>,
}

/// Bounds for a family over `n_range` (ignored for [`TableFamily::AllFixed`]).
/// Failures are reported per row.
pub fn bound_table(
    catalog: &Catalog,
    family: TableFamily,
    n_range: RangeInclusive<u32>,
    mode: Mode,
) -> Result<Vec<TableRow>> {
    let ids: Vec<String> = match family {
        TableFamily::AllFixed => ["OH.2", "G2_2", "F4_4"].map(String::from).to_vec(),
        TableFamily::RealHyperbolic | TableFamily::ComplexHyperbolic => {
            if n_range.is_empty() || *n_range.end() > MAX_FAMILY_N {
                return Err(Error::InvalidArgument(format!(
                    "family range {}..{} must be non-empty and end at most at {MAX_FAMILY_N}",
                    n_range.start(),
                    n_range.end()
                )));
            }
            let prefix = if family == TableFamily::RealHyperbolic { "H" } else { "CH" };
            n_range.map(|n| format!("{prefix}.{n}")).collect()
        }
    };
    Ok(ids
        .into_iter()
        .map(|id| {
            let result = catalog.find(&id).and_then(|s| compute_bound(&s, mode));
            TableRow { space_id: id, result }
        })
        .collect())
}
