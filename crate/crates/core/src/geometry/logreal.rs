use std::cmp::Ordering;
use std::fmt;
use std::ops::{Div, Mul};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    fn from_i8(v: i8) -> Self {
        match v.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

/// A real number stored as a sign and the base-10 logarithm of its magnitude.
///
/// Volumes of compact groups and comparison balls range from about `1e-300`
/// to `1e+40`; products of such factors leave the `f64` range long before the
/// final bound is formed, so all assembly happens on the logarithms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogReal {
    sign: Sign,
    log10_mag: f64,
}

impl LogReal {
    pub const ZERO: LogReal = LogReal {
        sign: Sign::Zero,
        log10_mag: f64::NEG_INFINITY,
    };

    pub const ONE: LogReal = LogReal {
        sign: Sign::Positive,
        log10_mag: 0.0,
    };

    pub fn from_log10(sign: Sign, log10_mag: f64) -> Self {
        if sign == Sign::Zero {
            return Self::ZERO;
        }
        LogReal { sign, log10_mag }
    }

    pub fn positive_from_log10(log10_mag: f64) -> Self {
        Self::from_log10(Sign::Positive, log10_mag)
    }

    /// Natural-log constructor for positive quantities.
    pub fn positive_from_ln(ln_mag: f64) -> Self {
        Self::positive_from_log10(ln_mag / std::f64::consts::LN_10)
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            return Self::ZERO;
        }
        let sign = if x < 0.0 { Sign::Negative } else { Sign::Positive };
        LogReal {
            sign,
            log10_mag: x.abs().log10(),
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// `log10 |x|`; negative infinity for zero.
    pub fn log10_mag(&self) -> f64 {
        self.log10_mag
    }

    pub fn ln_mag(&self) -> f64 {
        self.log10_mag * std::f64::consts::LN_10
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Positive
    }

    /// Plain value; overflows to infinity or underflows to zero outside the
    /// `f64` range.
    pub fn to_f64(&self) -> f64 {
        match self.sign {
            Sign::Zero => 0.0,
            s => f64::from(s.as_i8()) * 10f64.powf(self.log10_mag),
        }
    }

    pub fn recip(&self) -> Self {
        assert!(self.sign != Sign::Zero, "reciprocal of zero");
        LogReal {
            sign: self.sign,
            log10_mag: -self.log10_mag,
        }
    }

    /// Real power of a positive value.
    pub fn powf(&self, exponent: f64) -> Self {
        match self.sign {
            Sign::Positive => Self::positive_from_log10(self.log10_mag * exponent),
            Sign::Zero if exponent > 0.0 => Self::ZERO,
            _ => panic!("powf of non-positive LogReal"),
        }
    }

    /// Decimal mantissa in `[1, 10)` (signed) and exponent.
    pub fn mantissa_exponent(&self) -> (f64, i32) {
        if self.sign == Sign::Zero {
            return (0.0, 0);
        }
        let exponent = self.log10_mag.floor();
        let mantissa = 10f64.powf(self.log10_mag - exponent);
        (f64::from(self.sign.as_i8()) * mantissa, exponent as i32)
    }

    /// Scientific notation with `sig_digits` significant digits, e.g.
    /// `5.94845e-13`.
    pub fn to_scientific(&self, sig_digits: usize) -> String {
        if self.sign == Sign::Zero {
            return format!("{:.*}e+00", sig_digits.saturating_sub(1), 0.0);
        }
        let decimals = sig_digits.saturating_sub(1);
        let (mut mantissa, mut exponent) = self.mantissa_exponent();
        // rounding the mantissa may carry into the next decade
        let rounded: f64 = format!("{:.*}", decimals, mantissa.abs()).parse().unwrap();
        if rounded >= 10.0 {
            mantissa /= 10.0;
            exponent += 1;
        }
        let sign = if exponent < 0 { '-' } else { '+' };
        format!(
            "{:.*}e{}{:02}",
            decimals,
            mantissa,
            sign,
            exponent.unsigned_abs()
        )
    }
}

impl Mul for LogReal {
    type Output = LogReal;

    fn mul(self, rhs: LogReal) -> LogReal {
        let sign = Sign::from_i8(self.sign.as_i8() * rhs.sign.as_i8());
        LogReal::from_log10(sign, self.log10_mag + rhs.log10_mag)
    }
}

impl Div for LogReal {
    type Output = LogReal;

    fn div(self, rhs: LogReal) -> LogReal {
        self * rhs.recip()
    }
}

impl std::iter::Product for LogReal {
    fn product<I: Iterator<Item = LogReal>>(iter: I) -> LogReal {
        iter.fold(LogReal::ONE, |acc, x| acc * x)
    }
}

impl fmt::Display for LogReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().map_or(6, |p| p + 1);
        f.write_str(&self.to_scientific(digits))
    }
}
