//! TOML schema for user-supplied spaces.
//!
//! ```toml
//! [[space]]
//! id = "HH.2"                 # free-form key, must be unique
//! cartan_label = "CII"
//! N = 8                       # dim G/K
//! d = 21                      # dim G
//! alpha_G = 8                 # twice the dual Coxeter number
//! real_rank = 1               # optional, default 1
//! constants_class = "ONE_SQRT2"
//!
//! [space.k_volume]            # q * 2^pow2 * pi^pow_pi * sqrt(sqrt_int) / prod(f!)
//! pow2 = 5
//! pow_pi = "7/2"              # integer or "p/q"
//! sqrt_int = 1                # optional
//! factorial_denominators = [3, 1]   # optional
//! rational_scalar = "1/3"     # optional, integer or "p/q"
//! ```

use num_rational::Ratio;
use num_traits::One;
use serde::Deserialize;

use super::{ExactVolumeExpression, Family, SymmetricSpaceSpec};
use crate::error::{Error, Result};

/// An integer or a `"p/q"` string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub(crate) enum RationalField {
    Int(i64),
    Str(String),
}

impl RationalField {
    pub(crate) fn to_ratio(&self) -> Result<Ratio<i64>> {
        match self {
            RationalField::Int(v) => Ok(Ratio::from_integer(*v)),
            RationalField::Str(s) => s
                .trim()
                .parse::<Ratio<i64>>()
                .map_err(|e| Error::InvalidArgument(format!("bad rational `{s}`: {e}"))),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct VolumeRecord {
    pow2: i64,
    pow_pi: RationalField,
    #[serde(default)]
    sqrt_int: Option<u64>,
    #[serde(default)]
    factorial_denominators: Vec<u64>,
    #[serde(default)]
    rational_scalar: Option<RationalField>,
}

impl VolumeRecord {
    fn into_expression(self) -> Result<ExactVolumeExpression> {
        let scalar = match &self.rational_scalar {
            None => Ratio::one(),
            Some(field) => {
                let q = field.to_ratio()?;
                if *q.numer() <= 0 {
                    return Err(Error::InvalidArgument("rational_scalar must be positive".into()));
                }
                Ratio::new(*q.numer() as u64, *q.denom() as u64)
            }
        };
        let expr = ExactVolumeExpression::new(self.pow2, self.pow_pi.to_ratio()?)
            .with_sqrt(self.sqrt_int.unwrap_or(1))
            .with_scalar(scalar)
            .over_factorials(self.factorial_denominators);
        expr.validate()?;
        Ok(expr)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceRecord {
    id: String,
    cartan_label: String,
    #[serde(rename = "N")]
    dim_space: u32,
    #[serde(rename = "d")]
    dim_group: u32,
    #[serde(rename = "alpha_G")]
    alpha_g: u32,
    #[serde(default = "default_rank")]
    real_rank: u32,
    constants_class: String,
    k_volume: VolumeRecord,
}

fn default_rank() -> u32 {
    1
}

impl SpaceRecord {
    pub fn into_spec(self) -> Result<SymmetricSpaceSpec> {
        let id = self.id.clone();
        let wrap = |e: Error| Error::InvalidSpace {
            id: id.clone(),
            reason: e.to_string(),
        };
        let spec = SymmetricSpaceSpec {
            id: self.id,
            family: Family::User,
            cartan_label: self.cartan_label.parse().map_err(wrap)?,
            dim_space: self.dim_space,
            dim_group: self.dim_group,
            alpha_g: self.alpha_g,
            real_rank: self.real_rank,
            constants_class: self.constants_class.parse().map_err(wrap)?,
            k_volume: Some(self.k_volume.into_expression().map_err(wrap)?),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpacesFile {
    #[serde(default)]
    space: Vec<SpaceRecord>,
}

pub fn parse_spaces(text: &str) -> Result<Vec<SymmetricSpaceSpec>> {
    let file: SpacesFile = toml::from_str(text).map_err(|e| Error::Parse {
        path: "<spaces>".into(),
        reason: e.to_string(),
    })?;
    let specs = file
        .space
        .into_iter()
        .map(SpaceRecord::into_spec)
        .collect::<Result<Vec<_>>>()?;
    for (i, s) in specs.iter().enumerate() {
        if specs[..i].iter().any(|t| t.id == s.id) {
            return Err(Error::InvalidSpace {
                id: s.id.clone(),
                reason: "duplicate id".into(),
            });
        }
    }
    Ok(specs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{k_volume_value, split_g2, CartanLabel, ConstantsClass};

    const G2_COPY: &str = r#"
[[space]]
id = "G2_copy"
cartan_label = "G"
N = 8
d = 14
alpha_G = 8
real_rank = 2
constants_class = "EQUAL_SQRT2"

[space.k_volume]
pow2 = 4
pow_pi = 4
sqrt_int = 3
rational_scalar = 3
"#;

    #[test]
    fn parses_a_space_equal_to_builtin() {
        let v = parse_spaces(G2_COPY).unwrap();
        assert_eq!(v.len(), 1);
        let s = &v[0];
        assert_eq!(s.cartan_label, CartanLabel::G);
        assert_eq!(s.constants_class, ConstantsClass::EqualSqrt2);
        let a = k_volume_value(s).unwrap().log10_mag();
        let b = k_volume_value(&split_g2()).unwrap().log10_mag();
        assert!((a - b).abs() < 1e-14);
    }

    #[test]
    fn fractional_pi_power() {
        let text = r#"
[[space]]
id = "X"
cartan_label = "CII"
N = 8
d = 21
alpha_G = 8
constants_class = "ONE_SQRT2"
[space.k_volume]
pow2 = -1
pow_pi = "7/2"
factorial_denominators = [3]
rational_scalar = "5/3"
"#;
        let s = &parse_spaces(text).unwrap()[0];
        let v = k_volume_value(s).unwrap().to_f64();
        let want = 0.5 * std::f64::consts::PI.powf(3.5) / 6.0 * 5.0 / 3.0;
        assert!((v / want - 1.0).abs() < 1e-13);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_spaces("[[space]]\nid = 3"), Err(Error::Parse { .. })));
        let bad_class = G2_COPY.replace("EQUAL_SQRT2", "TWO");
        assert!(matches!(parse_spaces(&bad_class), Err(Error::InvalidSpace { .. })));
        let bad_alpha = G2_COPY.replace("alpha_G = 8", "alpha_G = 9");
        assert!(matches!(parse_spaces(&bad_alpha), Err(Error::InvalidSpace { .. })));
        let dup = format!("{G2_COPY}\n{G2_COPY}");
        assert!(matches!(parse_spaces(&dup), Err(Error::InvalidSpace { .. })));
        let unknown = G2_COPY.replace("real_rank = 2", "rank = 2");
        assert!(parse_spaces(&unknown).is_err());
        assert!(parse_spaces("").unwrap().is_empty());
    }
}
