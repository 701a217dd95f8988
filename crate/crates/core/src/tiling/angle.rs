//! Exact vertex-angle arithmetic in rational degrees.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::curvature::CurvatureSign;
use crate::error::{domain, Error, Result};

/// An angle in degrees held as a reduced fraction.
///
/// Displays and serializes as `"num/den"` (always with a denominator, so
/// `360` is `"360/1"`), which keeps reports free of floating point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactAngle(Ratio<i64>);

impl ExactAngle {
    pub const FULL_TURN: ExactAngle = ExactAngle(Ratio::new_raw(360, 1));

    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(domain("angle denominator must be nonzero"));
        }
        Ok(ExactAngle(Ratio::new(numer, denom)))
    }

    pub fn integer(deg: i64) -> Self {
        ExactAngle(Ratio::from_integer(deg))
    }

    pub fn zero() -> Self {
        ExactAngle(Ratio::zero())
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    /// Always positive; the fraction is kept in lowest terms.
    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn to_degrees_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    pub fn to_radians_f64(&self) -> f64 {
        self.to_degrees_f64().to_radians()
    }

    pub fn sign(&self) -> CurvatureSign {
        if self.0.is_positive() {
            CurvatureSign::Positive
        } else if self.0.is_negative() {
            CurvatureSign::Negative
        } else {
            CurvatureSign::Zero
        }
    }

    /// Mixed-number form such as `128 4/7`, the way angles are usually read.
    pub fn mixed(&self) -> String {
        let (n, d) = (self.numer(), self.denom());
        let whole = n / d;
        let rem = (n % d).abs();
        match (whole, rem) {
            (_, 0) => whole.to_string(),
            (0, _) if n < 0 => format!("-{rem}/{d}"),
            (0, _) => format!("{rem}/{d}"),
            _ => format!("{whole} {rem}/{d}"),
        }
    }
}

impl Add for ExactAngle {
    type Output = ExactAngle;
    fn add(self, o: ExactAngle) -> ExactAngle {
        ExactAngle(self.0 + o.0)
    }
}

impl Sub for ExactAngle {
    type Output = ExactAngle;
    fn sub(self, o: ExactAngle) -> ExactAngle {
        ExactAngle(self.0 - o.0)
    }
}

impl std::iter::Sum for ExactAngle {
    fn sum<I: Iterator<Item = ExactAngle>>(iter: I) -> ExactAngle {
        iter.fold(ExactAngle::zero(), Add::add)
    }
}

impl fmt::Display for ExactAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for ExactAngle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || domain(format!("expected an angle as \"num/den\", got {s:?}"));
        let (n, d) = s.split_once('/').ok_or_else(bad)?;
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        ExactAngle::new(n, d)
    }
}

impl Serialize for ExactAngle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactAngle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Interior angle `(n − 2)·180/n` of a regular Euclidean `n`-gon.
pub fn interior_angle(n: u32) -> Result<ExactAngle> {
    if n < 3 {
        return Err(domain(format!("a polygon needs at least 3 sides, got {n}")));
    }
    ExactAngle::new((n as i64 - 2) * 180, n as i64)
}
