use std::fmt;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{factorial, log10_biguint, LogReal};

/// Exact closed form `q · 2^a · π^b · √m / ∏ fᵢ!` for the volume of a
/// compact group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactVolumeExpression {
    pub pow2: i64,
    pub pow_pi: Ratio<i64>,
    pub sqrt_int: u64,
    pub factorial_denominators: Vec<u64>,
    pub rational_scalar: Ratio<u64>,
}

impl ExactVolumeExpression {
    pub fn new(pow2: i64, pow_pi: Ratio<i64>) -> Self {
        ExactVolumeExpression {
            pow2,
            pow_pi,
            sqrt_int: 1,
            factorial_denominators: Vec::new(),
            rational_scalar: Ratio::one(),
        }
    }

    /// Multiplies by `√m`, moving square factors of `m` into the scalar.
    pub fn with_sqrt(mut self, m: u64) -> Self {
        let mut rest = m;
        let mut outside = 1u64;
        let mut p = 2u64;
        while p * p <= rest {
            while rest.is_multiple_of(p * p) {
                rest /= p * p;
                outside *= p;
            }
            p += 1;
        }
        self.sqrt_int *= rest;
        if self.sqrt_int > 1 && self.sqrt_int == rest * rest {
            self.sqrt_int = 1;
            outside *= rest;
        }
        self.rational_scalar *= Ratio::from_integer(outside);
        self.normalize();
        self
    }

    pub fn with_scalar(mut self, q: Ratio<u64>) -> Self {
        self.rational_scalar = q;
        self
    }

    pub fn over_factorials(mut self, fs: impl IntoIterator<Item = u64>) -> Self {
        self.factorial_denominators.extend(fs);
        self
    }

    /// `Vol(SO(2p)) = 2^{p−1} (2π)^{p²} / ((2p−2)! (2p−4)! ⋯ 2!)`.
    pub fn so_even(p: u64) -> Self {
        assert!(p >= 1);
        let sq = (p * p) as i64;
        Self::new(p as i64 - 1 + sq, Ratio::from_integer(sq))
            .over_factorials((1..p).rev().map(|j| 2 * j))
    }

    /// `Vol(SO(2p+1)) = 2^p (2π)^{p²+p} / ((2p−1)! (2p−3)! ⋯ 3! 1!)`.
    pub fn so_odd(p: u64) -> Self {
        assert!(p >= 1);
        let e = (p * p + p) as i64;
        Self::new(p as i64 + e, Ratio::from_integer(e))
            .over_factorials((1..=p).rev().map(|j| 2 * j - 1))
    }

    /// `Vol(SO(n))` for either parity.
    pub fn so(n: u64) -> Self {
        if n.is_multiple_of(2) {
            Self::so_even(n / 2)
        } else {
            Self::so_odd(n / 2)
        }
    }

    /// `Vol(S(U(n)U(1))) = √(n+1) (2π)^{(n²+n)/2} / ((n−1)! ⋯ 2!)`.
    pub fn s_u_n_u1(n: u64) -> Self {
        assert!(n >= 1);
        let e = (n * n + n) as i64 / 2;
        Self::new(e, Ratio::from_integer(e))
            .with_sqrt(n + 1)
            .over_factorials((2..n).rev())
    }

    /// Volume of a `degree`-fold cover.
    pub fn covering(mut self, degree: u64) -> Self {
        self.rational_scalar *= Ratio::from_integer(degree);
        self.normalize();
        self
    }

    /// Moves powers of two out of the rational scalar into `pow2`.
    fn normalize(&mut self) {
        let (mut num, mut den) = (*self.rational_scalar.numer(), *self.rational_scalar.denom());
        while num != 0 && num % 2 == 0 {
            num /= 2;
            self.pow2 += 1;
        }
        while den % 2 == 0 {
            den /= 2;
            self.pow2 -= 1;
        }
        self.rational_scalar = Ratio::new(num, den);
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| Err(Error::InvalidArgument(format!("volume expression: {reason}")));
        if self.sqrt_int == 0 {
            return bad("radicand must be positive");
        }
        if !is_square_free(self.sqrt_int) {
            return bad("radicand must be square-free");
        }
        if self.rational_scalar.is_zero() {
            return bad("scalar must be positive");
        }
        if self.factorial_denominators.contains(&0) {
            return bad("factorial arguments must be positive");
        }
        Ok(())
    }

    /// Exact integer numerator and denominator of the non-π part, squared
    /// radical excluded.
    fn integer_parts(&self) -> (BigUint, BigUint) {
        let mut num = BigUint::from(*self.rational_scalar.numer());
        let mut den = BigUint::from(*self.rational_scalar.denom());
        if self.pow2 >= 0 {
            num <<= self.pow2 as u64;
        } else {
            den <<= self.pow2.unsigned_abs();
        }
        for &f in &self.factorial_denominators {
            den *= factorial(f);
        }
        (num, den)
    }

    pub fn evaluate(&self) -> LogReal {
        let (num, den) = self.integer_parts();
        let pi_exp = *self.pow_pi.numer() as f64 / *self.pow_pi.denom() as f64;
        let log10 = log10_biguint(&num) - log10_biguint(&den)
            + pi_exp * std::f64::consts::PI.log10()
            + 0.5 * (self.sqrt_int as f64).log10();
        LogReal::positive_from_log10(log10)
    }
}

fn is_square_free(m: u64) -> bool {
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

impl fmt::Display for ExactVolumeExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.rational_scalar.is_one() {
            parts.push(self.rational_scalar.to_string());
        }
        if self.pow2 != 0 {
            parts.push(format!("2^{}", self.pow2));
        }
        if !self.pow_pi.is_zero() {
            parts.push(format!("pi^{}", self.pow_pi));
        }
        if self.sqrt_int != 1 {
            parts.push(format!("sqrt({})", self.sqrt_int));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join("*"))?;
        if !self.factorial_denominators.is_empty() {
            let fs: Vec<String> = self.factorial_denominators.iter().map(|k| format!("{k}!")).collect();
            write!(f, "/({})", fs.join("*"))?;
        }
        Ok(())
    }
}
