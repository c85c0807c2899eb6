//! Irreducible symmetric spaces of non-compact type and the data the volume
//! bound consumes for each: dimensions, the Killing-form normalizer, the
//! constants class and the volume of the maximal compact subgroup.

mod file;
mod volume;

pub(crate) use file::RationalField;
pub use file::{parse_spaces, SpaceRecord};
pub use volume::ExactVolumeExpression;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::LogReal;

/// Helgason's labels for the type III real forms plus type IV.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanLabel {
    AI,
    AII,
    AIII,
    BI,
    CI,
    CII,
    DI,
    DIII,
    EI,
    EII,
    EIII,
    EIV,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    FII,
    G,
    #[serde(rename = "TYPE_IV")]
    TypeIV,
}

impl CartanLabel {
    pub const ALL: [CartanLabel; 21] = [
        CartanLabel::AI,
        CartanLabel::AII,
        CartanLabel::AIII,
        CartanLabel::BI,
        CartanLabel::CI,
        CartanLabel::CII,
        CartanLabel::DI,
        CartanLabel::DIII,
        CartanLabel::EI,
        CartanLabel::EII,
        CartanLabel::EIII,
        CartanLabel::EIV,
        CartanLabel::EV,
        CartanLabel::EVI,
        CartanLabel::EVII,
        CartanLabel::EVIII,
        CartanLabel::EIX,
        CartanLabel::FI,
        CartanLabel::FII,
        CartanLabel::G,
        CartanLabel::TypeIV,
    ];

    pub fn as_str(self) -> &'static str {
        use CartanLabel::*;
        match self {
            AI => "AI",
            AII => "AII",
            AIII => "AIII",
            BI => "BI",
            CI => "CI",
            CII => "CII",
            DI => "DI",
            DIII => "DIII",
            EI => "EI",
            EII => "EII",
            EIII => "EIII",
            EIV => "EIV",
            EV => "EV",
            EVI => "EVI",
            EVII => "EVII",
            EVIII => "EVIII",
            EIX => "EIX",
            FI => "FI",
            FII => "FII",
            G => "G",
            TypeIV => "TYPE_IV",
        }
    }

    pub fn is_exceptional(self) -> bool {
        use CartanLabel::*;
        matches!(self, EI | EII | EIII | EIV | EV | EVI | EVII | EVIII | EIX | FI | FII | G)
    }
}

impl fmt::Display for CartanLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CartanLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CartanLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown Cartan label `{s}`")))
    }
}

/// The three possible values of `(C₁, C₂)` under the renormalized Killing
/// form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstantsClass {
    /// `C₁ = C₂ = √2`
    #[serde(rename = "EQUAL_SQRT2")]
    EqualSqrt2,
    /// `C₁ = 1`, `C₂ = √2`
    #[serde(rename = "ONE_SQRT2")]
    OneSqrt2,
    /// `C₁ = C₂ = 1`, real hyperbolic 3-space only
    #[serde(rename = "H3_SPECIAL")]
    H3Special,
}

impl ConstantsClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ConstantsClass::EqualSqrt2 => "EQUAL_SQRT2",
            ConstantsClass::OneSqrt2 => "ONE_SQRT2",
            ConstantsClass::H3Special => "H3_SPECIAL",
        }
    }
}

impl fmt::Display for ConstantsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstantsClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "EQUAL_SQRT2" => Ok(ConstantsClass::EqualSqrt2),
            "ONE_SQRT2" => Ok(ConstantsClass::OneSqrt2),
            "H3_SPECIAL" => Ok(ConstantsClass::H3Special),
            _ => Err(Error::InvalidArgument(format!("unknown constants class `{s}`"))),
        }
    }
}

/// Where an entry comes from; parameterized families carry their `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `Hⁿ = SO₀(n,1)/SO(n)`
    RealHyperbolic(u32),
    /// `ℂHⁿ = SU(n,1)/S(U(n)U(1))`
    ComplexHyperbolic(u32),
    /// `𝕆H²`, `G₂₍₂₎/SO(4)`, `F₄₍₄₎/Sp(3)Sp(1)`
    Fixed,
    /// Entries carried for constants checks only, without a K-volume.
    Reference,
    /// Registered at runtime from a spaces file.
    User,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricSpaceSpec {
    pub id: String,
    pub family: Family,
    pub cartan_label: CartanLabel,
    /// `N = dim G/K`
    pub dim_space: u32,
    /// `d = dim G`
    pub dim_group: u32,
    /// Twice the dual Coxeter number of `G`; the Killing form is `α_G`
    /// times the renormalized one.
    pub alpha_g: u32,
    pub real_rank: u32,
    pub constants_class: ConstantsClass,
    /// `Vol(K)` for the metric induced by the renormalized Killing form of `G`.
    pub k_volume: Option<ExactVolumeExpression>,
}

impl SymmetricSpaceSpec {
    pub fn dim_compact(&self) -> u32 {
        self.dim_group - self.dim_space
    }

    /// `false` for `H²` and `H³`, which the bound driver refuses, and for
    /// entries without a K-volume.
    pub fn supports_bound(&self) -> bool {
        match self.family {
            Family::RealHyperbolic(n) => n >= 4,
            Family::Reference => false,
            _ => self.k_volume.is_some(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::InvalidSpace {
                id: self.id.clone(),
                reason,
            })
        };
        if self.id.trim().is_empty() {
            return fail("empty id".into());
        }
        if self.dim_space < 2 {
            return fail(format!("N = {} must be at least 2", self.dim_space));
        }
        if self.dim_group <= self.dim_space {
            return fail(format!("d = {} must exceed N = {}", self.dim_group, self.dim_space));
        }
        if self.alpha_g < 2 || !self.alpha_g.is_multiple_of(2) {
            return fail(format!("alpha_G = {} must be even and at least 2", self.alpha_g));
        }
        if self.real_rank == 0 || self.real_rank > self.dim_space {
            return fail(format!("real rank {} out of range", self.real_rank));
        }
        if let Some(v) = &self.k_volume {
            v.validate().or_else(|e| fail(e.to_string()))?;
        }
        Ok(())
    }
}

pub fn real_hyperbolic(n: u32) -> SymmetricSpaceSpec {
    assert!(n >= 2);
    SymmetricSpaceSpec {
        id: format!("H.{n}"),
        family: Family::RealHyperbolic(n),
        // so(n,1) is of type B when n+1 is odd
        cartan_label: if n.is_multiple_of(2) { CartanLabel::BI } else { CartanLabel::DI },
        dim_space: n,
        dim_group: n * (n + 1) / 2,
        alpha_g: 2 * n - 2,
        real_rank: 1,
        constants_class: match n {
            2 => ConstantsClass::EqualSqrt2,
            3 => ConstantsClass::H3Special,
            _ => ConstantsClass::OneSqrt2,
        },
        k_volume: Some(ExactVolumeExpression::so(u64::from(n))),
    }
}

pub fn complex_hyperbolic(n: u32) -> SymmetricSpaceSpec {
    assert!(n >= 2);
    SymmetricSpaceSpec {
        id: format!("CH.{n}"),
        family: Family::ComplexHyperbolic(n),
        cartan_label: CartanLabel::AIII,
        dim_space: 2 * n,
        dim_group: n * n + 2 * n,
        alpha_g: 2 * n + 2,
        real_rank: 1,
        constants_class: ConstantsClass::EqualSqrt2,
        k_volume: Some(ExactVolumeExpression::s_u_n_u1(u64::from(n))),
    }
}

/// `𝕆H² = F₄₍₋₂₀₎/Spin(9)`; `Spin(9)` embeds with index one.
pub fn octonion_hyperbolic_plane() -> SymmetricSpaceSpec {
    SymmetricSpaceSpec {
        id: "OH.2".into(),
        family: Family::Fixed,
        cartan_label: CartanLabel::FII,
        dim_space: 16,
        dim_group: 52,
        alpha_g: 18,
        real_rank: 1,
        constants_class: ConstantsClass::OneSqrt2,
        k_volume: Some(ExactVolumeExpression::so(9).covering(2)),
    }
}

/// `G₂₍₂₎/SO(4)`. The volume `48√3π⁴` reflects the embedding index of
/// `SO(4)` and differs from the intrinsic one.
pub fn split_g2() -> SymmetricSpaceSpec {
    SymmetricSpaceSpec {
        id: "G2_2".into(),
        family: Family::Fixed,
        cartan_label: CartanLabel::G,
        dim_space: 8,
        dim_group: 14,
        alpha_g: 8,
        real_rank: 2,
        constants_class: ConstantsClass::EqualSqrt2,
        k_volume: Some(
            ExactVolumeExpression::new(4, Ratio::from_integer(4))
                .with_scalar(Ratio::from_integer(3))
                .with_sqrt(3),
        ),
    }
}

/// `F₄₍₄₎/(Sp(3)Sp(1)/ΔZ₂)`.
pub fn split_f4() -> SymmetricSpaceSpec {
    SymmetricSpaceSpec {
        id: "F4_4".into(),
        family: Family::Fixed,
        cartan_label: CartanLabel::FI,
        dim_space: 28,
        dim_group: 52,
        alpha_g: 18,
        real_rank: 4,
        constants_class: ConstantsClass::EqualSqrt2,
        k_volume: Some(ExactVolumeExpression::new(21, Ratio::from_integer(14)).over_factorials([5, 3])),
    }
}

/// `E₆₍₋₂₆₎/F₄`, carried for the restricted-root check only.
pub fn e6_minus26() -> SymmetricSpaceSpec {
    SymmetricSpaceSpec {
        id: "EIV".into(),
        family: Family::Reference,
        cartan_label: CartanLabel::EIV,
        dim_space: 26,
        dim_group: 78,
        alpha_g: 24,
        real_rank: 2,
        constants_class: ConstantsClass::OneSqrt2,
        k_volume: None,
    }
}

/// `SU*(2n)/Sp(n)`, carried for the restricted-root check only.
pub fn su_star(n: u32) -> SymmetricSpaceSpec {
    assert!(n >= 2);
    SymmetricSpaceSpec {
        id: format!("AII.{n}"),
        family: Family::Reference,
        cartan_label: CartanLabel::AII,
        dim_space: 2 * n * n - n - 1,
        dim_group: 4 * n * n - 1,
        alpha_g: 4 * n,
        real_rank: n - 1,
        constants_class: ConstantsClass::OneSqrt2,
        k_volume: None,
    }
}

fn fixed_spaces() -> Vec<SymmetricSpaceSpec> {
    vec![octonion_hyperbolic_plane(), split_g2(), split_f4()]
}

fn parse_family_id(id: &str, prefix: &str) -> Option<u32> {
    id.strip_prefix(prefix)?.strip_prefix('.')?.parse().ok()
}

fn builtin(id: &str) -> Option<SymmetricSpaceSpec> {
    if let Some(n) = parse_family_id(id, "H") {
        return (n >= 2).then(|| real_hyperbolic(n));
    }
    if let Some(n) = parse_family_id(id, "CH") {
        return (n >= 2).then(|| complex_hyperbolic(n));
    }
    if let Some(n) = parse_family_id(id, "AII") {
        return (n >= 2).then(|| su_star(n));
    }
    match id {
        "EIV" => Some(e6_minus26()),
        _ => fixed_spaces().into_iter().find(|s| s.id == id),
    }
}

fn sort_key(s: &SymmetricSpaceSpec) -> (String, u32) {
    match s.id.split_once('.') {
        Some((prefix, n)) => (prefix.to_string(), n.parse().unwrap_or(0)),
        None => (s.id.clone(), 0),
    }
}

/// All built-in spaces with a K-volume that the bound formula covers:
/// the fixed spaces, `H.n` for `4 ≤ n ≤ max_n` and `CH.n` for
/// `2 ≤ n ≤ max_n`, ordered by id prefix then `n`.
pub fn list_spaces(max_n: u32) -> Result<Vec<SymmetricSpaceSpec>> {
    Catalog::builtin().list(max_n)
}

pub fn k_volume_value(space: &SymmetricSpaceSpec) -> Result<LogReal> {
    space
        .k_volume
        .as_ref()
        .map(ExactVolumeExpression::evaluate)
        .ok_or_else(|| Error::MissingKVolume(space.id.clone()))
}

/// Built-in spaces plus user registrations. User entries shadow built-ins
/// with the same id.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    user: Vec<SymmetricSpaceSpec>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Catalog::default()
    }

    pub fn register(&mut self, mut space: SymmetricSpaceSpec) -> Result<()> {
        space.family = Family::User;
        space.validate()?;
        self.user.retain(|s| s.id != space.id);
        self.user.push(space);
        self.user.sort_by_key(sort_key);
        Ok(())
    }

    pub fn load_file(&mut self, path: &Path) -> Result<usize> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        let spaces = parse_spaces(&text).map_err(|e| match e {
            Error::Parse { reason, .. } => Error::Parse {
                path: path.display().to_string(),
                reason,
            },
            other => other,
        })?;
        let count = spaces.len();
        for s in spaces {
            self.register(s)?;
        }
        Ok(count)
    }

    pub fn user_spaces(&self) -> &[SymmetricSpaceSpec] {
        &self.user
    }

    pub fn find(&self, id: &str) -> Result<SymmetricSpaceSpec> {
        self.user
            .iter()
            .find(|s| s.id == id)
            .cloned()
            .or_else(|| builtin(id))
            .ok_or_else(|| Error::UnknownSpace(id.to_string()))
    }

    pub fn list(&self, max_n: u32) -> Result<Vec<SymmetricSpaceSpec>> {
        if max_n < 2 {
            return Err(Error::InvalidArgument(format!("max_n must be at least 2, got {max_n}")));
        }
        let mut out: Vec<SymmetricSpaceSpec> = fixed_spaces();
        out.extend((4..=max_n).map(real_hyperbolic));
        out.extend((2..=max_n).map(complex_hyperbolic));
        out.retain(|s| !self.user.iter().any(|u| u.id == s.id));
        out.sort_by_key(sort_key);
        out.extend(self.user.iter().cloned());
        Ok(out)
    }
}
