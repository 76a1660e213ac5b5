use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A half-integer `n/2`, stored as the numerator `n`.
///
/// Used for q-grades (`q^{n/2}`) throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub fn from_halves(n: i64) -> Self {
        HalfInt(n)
    }

    pub fn whole(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub fn halves(self) -> i64 {
        self.0
    }

    pub fn is_whole(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_whole() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a half-integer: {0:?}")]
pub struct ParseHalfIntError(pub String);

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts `n`, `n/2` and decimal `n.5` forms.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || ParseHalfIntError(s.to_string());
        if let Some((n, d)) = t.split_once('/') {
            let n: i64 = n.trim().parse().map_err(|_| err())?;
            return match d.trim() {
                "1" => Ok(HalfInt(2 * n)),
                "2" => Ok(HalfInt(n)),
                _ => Err(err()),
            };
        }
        if let Ok(n) = t.parse::<i64>() {
            return Ok(HalfInt(2 * n));
        }
        let x: f64 = t.parse().map_err(|_| err())?;
        let twice = 2.0 * x;
        if twice.fract() == 0.0 && twice.abs() < 1e15 {
            Ok(HalfInt(twice as i64))
        } else {
            Err(err())
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!("3/2".parse::<HalfInt>().unwrap(), HalfInt(3));
        assert_eq!("2".parse::<HalfInt>().unwrap(), HalfInt(4));
        assert_eq!("4/2".parse::<HalfInt>().unwrap(), HalfInt(4));
        assert_eq!("-0.5".parse::<HalfInt>().unwrap(), HalfInt(-1));
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("0.25".parse::<HalfInt>().is_err());
        assert_eq!(HalfInt(3).to_string(), "3/2");
        assert_eq!(HalfInt(-4).to_string(), "-2");
    }
}
