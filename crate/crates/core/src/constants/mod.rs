//! The operator-norm constants `C₁` (over `𝔭`) and `C₂` (over `𝔨`).
//!
//! Under the renormalized Killing form only three pairs occur, so the
//! production path reads the class stored with each space. Restricted-root
//! data gives an independent route to `C₁` for the cases where it is
//! shipped: `C₁` is the largest dual norm of a positive restricted root.

mod roots;

pub use roots::{
    c1_from_restricted_roots, parse_roots, shipped_roots, Rational, RestrictedRoot,
    RestrictedRootSystem, RootDataError, SHIPPED_ROOT_IDS,
};

/// Shipped restricted-root systems by name.
pub mod root_data {
    pub use super::roots::{cayley_plane, complex_hyperbolic, e6_minus26, real_hyperbolic, su_star};
}

use std::f64::consts::SQRT_2;

use serde::Serialize;

use crate::catalog::{CartanLabel, ConstantsClass, SymmetricSpaceSpec};
use crate::error::{Error, Result};

/// Agreement required between the classifier and the root-data route.
pub const VERIFY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstantsProfile {
    pub c1: f64,
    pub c2: f64,
    /// `C₂ / C₁`
    pub alpha_ratio: f64,
}

impl ConstantsProfile {
    pub fn new(c1: f64, c2: f64) -> Self {
        ConstantsProfile {
            c1,
            c2,
            alpha_ratio: c2 / c1,
        }
    }

    pub fn for_class(class: ConstantsClass) -> Self {
        match class {
            ConstantsClass::EqualSqrt2 => ConstantsProfile {
                c1: SQRT_2,
                c2: SQRT_2,
                alpha_ratio: 1.0,
            },
            ConstantsClass::OneSqrt2 => ConstantsProfile {
                c1: 1.0,
                c2: SQRT_2,
                alpha_ratio: SQRT_2,
            },
            ConstantsClass::H3Special => ConstantsProfile {
                c1: 1.0,
                c2: 1.0,
                alpha_ratio: 1.0,
            },
        }
    }
}

pub fn classify_constants(space: &SymmetricSpaceSpec) -> ConstantsProfile {
    ConstantsProfile::for_class(space.constants_class)
}

/// Structural description of a real form, enough to place it in the
/// classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealForm {
    pub name: &'static str,
    pub label: CartanLabel,
    pub real_rank: u32,
    /// `dim G/K`
    pub dim_space: u32,
}

impl RealForm {
    pub fn of(space: &SymmetricSpaceSpec) -> RealForm {
        RealForm {
            name: "",
            label: space.cartan_label,
            real_rank: space.real_rank,
            dim_space: space.dim_space,
        }
    }
}

/// Constants class of a simply connected irreducible symmetric space of
/// non-compact type.
///
/// `C₁ = 1 < √2 = C₂` exactly for rank-one spaces other than `H²`, `H³`
/// and `ℂHⁿ`, for `SU*(2n)/Sp(n)`, for `Sp(p,q)/Sp(p)Sp(q)` and for
/// `E₆₍₋₂₆₎/F₄`; `H³` has `C₁ = C₂ = 1`; everything else, type IV
/// included, has `C₁ = C₂ = √2`.
pub fn classify_real_form(form: &RealForm) -> ConstantsClass {
    use CartanLabel::*;
    match form.label {
        BI | DI if form.real_rank == 1 => match form.dim_space {
            2 => ConstantsClass::EqualSqrt2,
            3 => ConstantsClass::H3Special,
            _ => ConstantsClass::OneSqrt2,
        },
        AII | CII | FII | EIV => ConstantsClass::OneSqrt2,
        _ => ConstantsClass::EqualSqrt2,
    }
}

/// The exceptional real forms of type III.
pub const EXCEPTIONAL_REAL_FORMS: [RealForm; 12] = [
    RealForm { name: "E6(6)/Sp(4)", label: CartanLabel::EI, real_rank: 6, dim_space: 42 },
    RealForm { name: "E6(2)/SU(6)Sp(1)", label: CartanLabel::EII, real_rank: 4, dim_space: 40 },
    RealForm { name: "E6(-14)/Spin(10)U(1)", label: CartanLabel::EIII, real_rank: 2, dim_space: 32 },
    RealForm { name: "E6(-26)/F4", label: CartanLabel::EIV, real_rank: 2, dim_space: 26 },
    RealForm { name: "E7(7)/SU(8)", label: CartanLabel::EV, real_rank: 7, dim_space: 70 },
    RealForm { name: "E7(-5)/Spin(12)Sp(1)", label: CartanLabel::EVI, real_rank: 4, dim_space: 64 },
    RealForm { name: "E7(-25)/E6U(1)", label: CartanLabel::EVII, real_rank: 3, dim_space: 54 },
    RealForm { name: "E8(8)/Spin(16)", label: CartanLabel::EVIII, real_rank: 8, dim_space: 128 },
    RealForm { name: "E8(-24)/E7Sp(1)", label: CartanLabel::EIX, real_rank: 4, dim_space: 112 },
    RealForm { name: "F4(4)/Sp(3)Sp(1)", label: CartanLabel::FI, real_rank: 4, dim_space: 28 },
    RealForm { name: "F4(-20)/Spin(9)", label: CartanLabel::FII, real_rank: 1, dim_space: 16 },
    RealForm { name: "G2(2)/SO(4)", label: CartanLabel::G, real_rank: 2, dim_space: 8 },
];

/// Whether `C₁` from restricted-root data agrees with the classifier.
pub fn verify_classification(space: &SymmetricSpaceSpec, rrs: &RestrictedRootSystem) -> Result<bool> {
    let c1 = c1_from_restricted_roots(rrs)?;
    Ok((c1 - classify_constants(space).c1).abs() <= VERIFY_TOLERANCE)
}

/// [`verify_classification`] against the shipped data for `space`.
pub fn verify_with_shipped_data(space: &SymmetricSpaceSpec) -> Result<bool> {
    let rrs = shipped_roots(&space.id).ok_or_else(|| Error::NoRootData(space.id.clone()))?;
    verify_classification(space, &rrs)
}
