use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Deserialize;

use crate::catalog::RationalField;
use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq)]
pub struct RestrictedRoot {
    /// Coordinates in `𝔞*` dual to the chosen coordinates on `𝔞`.
    pub vector: Vec<Rational>,
    pub multiplicity: u32,
}

impl RestrictedRoot {
    pub fn new(vector: Vec<Rational>, multiplicity: u32) -> Self {
        RestrictedRoot { vector, multiplicity }
    }

    /// `ᾱ(H)` for `H` given in `𝔞` coordinates.
    pub fn eval(&self, h: &[f64]) -> f64 {
        self.vector.iter().zip(h).map(|(a, x)| to_f64(a) * x).sum()
    }
}

/// Positive restricted roots `Σ⁺` together with the Gram matrix of the
/// renormalized Killing form on `𝔞`.
#[derive(Debug, Clone, PartialEq)]
pub struct RestrictedRootSystem {
    gram: Vec<Vec<Rational>>,
    roots: Vec<RestrictedRoot>,
}

fn to_f64(q: &Rational) -> f64 {
    q.numer().to_f64().unwrap() / q.denom().to_f64().unwrap()
}

/// Symmetric positive definiteness by exact elimination: every pivot of the
/// LDLᵀ factorization is positive iff every leading principal minor is.
fn is_positive_definite(gram: &[Vec<Rational>]) -> bool {
    let n = gram.len();
    let mut a: Vec<Vec<Rational>> = gram.to_vec();
    for k in 0..n {
        let pivot = a[k][k];
        if !pivot.is_positive() {
            return false;
        }
        for i in k + 1..n {
            let factor = a[i][k] / pivot;
            for j in k..n {
                let delta = factor * a[k][j];
                a[i][j] -= delta;
            }
        }
    }
    true
}

impl RestrictedRootSystem {
    pub fn new(gram: Vec<Vec<Rational>>, roots: Vec<RestrictedRoot>) -> Result<Self> {
        let dim = gram.len();
        if dim == 0 {
            return Err(Error::MalformedRoots("empty gram matrix".into()));
        }
        if gram.iter().any(|row| row.len() != dim) {
            return Err(Error::MalformedRoots("gram matrix is not square".into()));
        }
        for i in 0..dim {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::MalformedRoots("gram matrix is not symmetric".into()));
                }
            }
        }
        if !is_positive_definite(&gram) {
            return Err(Error::NotPositiveDefinite);
        }
        if roots.is_empty() {
            return Err(Error::EmptyRootSystem);
        }
        for r in &roots {
            if r.vector.len() != dim {
                return Err(Error::MalformedRoots(format!(
                    "root has {} coordinates, expected {dim}",
                    r.vector.len()
                )));
            }
            if r.vector.iter().all(Zero::is_zero) {
                return Err(Error::MalformedRoots("zero root".into()));
            }
            if r.multiplicity == 0 {
                return Err(Error::MalformedRoots("multiplicity must be positive".into()));
            }
        }
        Ok(RestrictedRootSystem { gram, roots })
    }

    pub fn ambient_dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn roots(&self) -> &[RestrictedRoot] {
        &self.roots
    }

    /// Same roots, Gram matrix multiplied by `s`.
    pub fn scaled(&self, s: Rational) -> Result<Self> {
        let gram = self
            .gram
            .iter()
            .map(|row| row.iter().map(|q| q * s).collect())
            .collect();
        RestrictedRootSystem::new(gram, self.roots.clone())
    }

    pub fn gram_f64(&self) -> Vec<Vec<f64>> {
        self.gram.iter().map(|row| row.iter().map(to_f64).collect()).collect()
    }

    /// `‖H‖ = √(Hᵀ Q H)`.
    pub fn norm(&self, h: &[f64]) -> f64 {
        let q = self.gram_f64();
        let mut s = 0.0;
        for (i, row) in q.iter().enumerate() {
            for (j, qij) in row.iter().enumerate() {
                s += h[i] * qij * h[j];
            }
        }
        s.sqrt()
    }

    /// `N(ad H) = max |ᾱ(H)|` over `Σ⁺`.
    pub fn ad_norm(&self, h: &[f64]) -> f64 {
        self.roots.iter().map(|r| r.eval(h).abs()).fold(0.0, f64::max)
    }

    /// Lower-triangular Cholesky factor of the Gram matrix.
    fn cholesky(&self) -> Result<Vec<Vec<f64>>> {
        let q = self.gram_f64();
        let n = q.len();
        let mut l = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..=i {
                let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
                if i == j {
                    let d = q[i][i] - s;
                    if d <= 0.0 {
                        return Err(Error::NotPositiveDefinite);
                    }
                    l[i][i] = d.sqrt();
                } else {
                    l[i][j] = (q[i][j] - s) / l[j][j];
                }
            }
        }
        Ok(l)
    }

    /// Dual norm `√(ᾱᵀ Q⁻¹ ᾱ)` of each root, from `Q = LLᵀ` and `z = L⁻¹ᾱ`.
    pub fn dual_norms(&self) -> Result<Vec<f64>> {
        let l = self.cholesky()?;
        let n = l.len();
        Ok(self
            .roots
            .iter()
            .map(|r| {
                let mut z = vec![0.0; n];
                for i in 0..n {
                    let s: f64 = (0..i).map(|k| l[i][k] * z[k]).sum();
                    z[i] = (to_f64(&r.vector[i]) - s) / l[i][i];
                }
                z.iter().map(|v| v * v).sum::<f64>().sqrt()
            })
            .collect())
    }
}

/// `C₁ = sup_{‖H‖=1} max_ᾱ |ᾱ(H)| = max_ᾱ ‖ᾱ‖_{Q⁻¹}`.
pub fn c1_from_restricted_roots(rrs: &RestrictedRootSystem) -> Result<f64> {
    rrs.dual_norms()?
        .into_iter()
        .reduce(f64::max)
        .ok_or(Error::EmptyRootSystem)
}

fn q(n: i64, d: i64) -> Rational {
    Ratio::new(n, d)
}

fn int(n: i64) -> Rational {
    Ratio::from_integer(n)
}

/// `F₄₍₋₂₀₎/Spin(9)`: `𝔞` is spanned by the short root `x₁`, on which the
/// renormalized form is Euclidean; `Σ⁺ = {x₁ (7), ½x₁ (8)}`.
pub fn cayley_plane() -> RestrictedRootSystem {
    RestrictedRootSystem::new(
        vec![vec![int(1)]],
        vec![
            RestrictedRoot::new(vec![int(1)], 7),
            RestrictedRoot::new(vec![q(1, 2)], 8),
        ],
    )
    .expect("valid shipped data")
}

/// `E₆₍₋₂₆₎/F₄` with `𝔞 = {(t₁, t₂, t₂, t₂, t₂, −2t₂)}` and form
/// `(4/3)(t₁² + t₁t₂ + 7t₂²)`; `Σ⁺ = {t₁ − t₂, t₁ + 2t₂, 3t₂}`, each of
/// multiplicity 8.
pub fn e6_minus26() -> RestrictedRootSystem {
    RestrictedRootSystem::new(
        vec![vec![q(4, 3), q(2, 3)], vec![q(2, 3), q(28, 3)]],
        vec![
            RestrictedRoot::new(vec![int(1), int(-1)], 8),
            RestrictedRoot::new(vec![int(1), int(2)], 8),
            RestrictedRoot::new(vec![int(0), int(3)], 8),
        ],
    )
    .expect("valid shipped data")
}

/// `SU*(2n)/Sp(n)`: `𝔞 = {(t₁, t₁, …, tₙ, tₙ) : Σtᵢ = 0}` with norm
/// `2Σtᵢ²`; `Σ⁺ = {tᵢ − tⱼ}`, multiplicity 4.
///
/// Coordinates are `s = (t₁, …, tₙ₋₁)` with `tₙ = −Σs`, so the Gram matrix
/// is `2(I + J)`, and `tᵢ − tₙ` reads `eᵢ + (1, …, 1)`.
pub fn su_star(n: usize) -> RestrictedRootSystem {
    assert!(n >= 2);
    let m = n - 1;
    let gram = (0..m)
        .map(|i| (0..m).map(|j| int(if i == j { 4 } else { 2 })).collect())
        .collect();
    let t = |i: usize| -> Vec<Rational> {
        if i < m {
            (0..m).map(|k| int(i64::from(k == i))).collect()
        } else {
            vec![int(-1); m]
        }
    };
    let mut roots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = t(i).iter().zip(t(j)).map(|(a, b)| a - b).collect();
            roots.push(RestrictedRoot::new(v, 4));
        }
    }
    RestrictedRootSystem::new(gram, roots).expect("valid shipped data")
}

/// `SO₀(n,1)/SO(n)`: a single restricted root of multiplicity `n − 1`.
/// For `n = 2` the group is split and the root is long.
pub fn real_hyperbolic(n: u32) -> RestrictedRootSystem {
    assert!(n >= 2);
    let gram = if n == 2 { q(1, 2) } else { int(1) };
    RestrictedRootSystem::new(vec![vec![gram]], vec![RestrictedRoot::new(vec![int(1)], n - 1)])
        .expect("valid shipped data")
}

/// `SU(n,1)/S(U(n)U(1))`: `{α (2n − 2), 2α (1)}` with `2α` long.
pub fn complex_hyperbolic(n: u32) -> RestrictedRootSystem {
    assert!(n >= 2);
    RestrictedRootSystem::new(
        vec![vec![int(2)]],
        vec![
            RestrictedRoot::new(vec![int(1)], 2 * n - 2),
            RestrictedRoot::new(vec![int(2)], 1),
        ],
    )
    .expect("valid shipped data")
}

/// Shipped restricted-root data by catalog id.
pub fn shipped_roots(id: &str) -> Option<RestrictedRootSystem> {
    let family = |prefix: &str| -> Option<u32> {
        id.strip_prefix(prefix)?.strip_prefix('.')?.parse().ok()
    };
    if let Some(n) = family("H") {
        return (n >= 2).then(|| real_hyperbolic(n));
    }
    if let Some(n) = family("CH") {
        return (n >= 2).then(|| complex_hyperbolic(n));
    }
    if let Some(n) = family("AII") {
        return (n >= 2).then(|| su_star(n as usize));
    }
    match id {
        "OH.2" => Some(cayley_plane()),
        "EIV" => Some(e6_minus26()),
        _ => None,
    }
}

/// Ids whose data is checked by default.
pub const SHIPPED_ROOT_IDS: [&str; 8] = ["OH.2", "EIV", "AII.2", "AII.3", "H.4", "H.5", "CH.2", "CH.3"];

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RootRecord {
    vector: Vec<RationalField>,
    multiplicity: u32,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RootSystemRecord {
    id: String,
    dimension: usize,
    gram: Vec<Vec<RationalField>>,
    roots: Vec<RootRecord>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RootsFile {
    #[serde(default)]
    roots: Vec<RootSystemRecord>,
}

fn ratios(v: &[RationalField]) -> Result<Vec<Rational>> {
    v.iter().map(RationalField::to_ratio).collect()
}

/// A root-system entry that failed to load, keyed by its id.
#[derive(Debug, Clone, PartialEq)]
pub struct RootDataError {
    pub id: String,
    pub error: Error,
}

/// Parses a roots file. Syntax errors fail the whole file; an entry whose
/// data is inconsistent is reported against its id and the rest still load.
pub fn parse_roots(
    text: &str,
) -> Result<Vec<std::result::Result<(String, RestrictedRootSystem), RootDataError>>> {
    let file: RootsFile = toml::from_str(text).map_err(|e| Error::Parse {
        path: "<roots>".into(),
        reason: e.to_string(),
    })?;
    Ok(file
        .roots
        .into_iter()
        .map(|rec| {
            let id = rec.id.clone();
            let build = || -> Result<RestrictedRootSystem> {
                if rec.gram.len() != rec.dimension {
                    return Err(Error::MalformedRoots(format!(
                        "dimension {} but gram has {} rows",
                        rec.dimension,
                        rec.gram.len()
                    )));
                }
                let gram = rec.gram.iter().map(|r| ratios(r)).collect::<Result<Vec<_>>>()?;
                let roots = rec
                    .roots
                    .iter()
                    .map(|r| Ok(RestrictedRoot::new(ratios(&r.vector)?, r.multiplicity)))
                    .collect::<Result<Vec<_>>>()?;
                RestrictedRootSystem::new(gram, roots)
            };
            build()
                .map(|rrs| (id.clone(), rrs))
                .map_err(|error| RootDataError { id, error })
        })
        .collect())
}
