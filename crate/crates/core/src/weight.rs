//! Exact fixed-point membership values.
//!
//! Every membership degree is stored as an integer count of millionths, so
//! comparisons that decide pair classes and cycle minima are exact.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Number of millionths in one unit.
pub const SCALE: u32 = 1_000_000;

const FRACTION_DIGITS: usize = 6;

/// A membership value in `[0, 1]` with a resolution of `10^-6`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "String")]
pub struct UnitWeight(u32);

impl UnitWeight {
    pub const ZERO: UnitWeight = UnitWeight(0);
    pub const ONE: UnitWeight = UnitWeight(SCALE);

    /// Returns `None` when `millionths` exceeds one unit.
    pub const fn from_millionths(millionths: u32) -> Option<Self> {
        if millionths <= SCALE {
            Some(UnitWeight(millionths))
        } else {
            None
        }
    }

    pub const fn millionths(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Minimum (`∧`).
    pub fn meet(self, other: Self) -> Self {
        self.min(other)
    }

    /// Maximum (`∨`).
    pub fn join(self, other: Self) -> Self {
        self.max(other)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightParseError {
    #[error("malformed decimal literal {0:?}")]
    Syntax(String),
    #[error("{0:?} has more than six fractional digits")]
    TooPrecise(String),
    #[error("{0:?} lies outside [0, 1]")]
    OutOfRange(String),
}

/// Parses `digits[.digits]` into millionths without going through floats.
fn parse_millionths(text: &str) -> Result<u64, WeightParseError> {
    let syntax = || WeightParseError::Syntax(text.to_string());
    let (int_part, frac_part) = match text.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (text, None),
    };
    if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax());
    }
    let mut value: u64 = 0;
    for b in int_part.bytes() {
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add(u64::from(b - b'0')))
            .ok_or_else(|| WeightParseError::OutOfRange(text.to_string()))?;
        if value > u64::from(SCALE) {
            return Err(WeightParseError::OutOfRange(text.to_string()));
        }
    }
    value *= u64::from(SCALE);
    if let Some(frac) = frac_part {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax());
        }
        if frac.len() > FRACTION_DIGITS {
            return Err(WeightParseError::TooPrecise(text.to_string()));
        }
        let mut f: u64 = 0;
        for b in frac.bytes() {
            f = f * 10 + u64::from(b - b'0');
        }
        f *= 10u64.pow((FRACTION_DIGITS - frac.len()) as u32);
        value += f;
    }
    Ok(value)
}

impl FromStr for UnitWeight {
    type Err = WeightParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let value = parse_millionths(s)?;
        if value > u64::from(SCALE) {
            return Err(WeightParseError::OutOfRange(s.to_string()));
        }
        Ok(UnitWeight(value as u32))
    }
}

/// Shortest exact decimal: no trailing zeros, no trailing point.
fn write_decimal(f: &mut fmt::Formatter<'_>, millionths: u64) -> fmt::Result {
    let scale = u64::from(SCALE);
    let int = millionths / scale;
    let frac = millionths % scale;
    if frac == 0 {
        return write!(f, "{int}");
    }
    let digits = format!("{frac:06}");
    write!(f, "{int}.{}", digits.trim_end_matches('0'))
}

impl fmt::Display for UnitWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_decimal(f, u64::from(self.0))
    }
}

impl From<UnitWeight> for String {
    fn from(w: UnitWeight) -> String {
        w.to_string()
    }
}

/// A sum of unit weights, e.g. the weight `W(D)` of a dominating set.
/// Unlike [`UnitWeight`] it may exceed one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "String")]
pub struct WeightSum(u64);

impl WeightSum {
    pub const ZERO: WeightSum = WeightSum(0);

    pub const fn from_millionths(millionths: u64) -> Self {
        WeightSum(millionths)
    }

    pub const fn millionths(self) -> u64 {
        self.0
    }

    /// `count · weight`.
    pub fn times(weight: UnitWeight, count: usize) -> Self {
        WeightSum(u64::from(weight.0) * count as u64)
    }
}

impl From<UnitWeight> for WeightSum {
    fn from(w: UnitWeight) -> Self {
        WeightSum(u64::from(w.0))
    }
}

impl Add for WeightSum {
    type Output = WeightSum;
    fn add(self, rhs: Self) -> Self {
        WeightSum(self.0 + rhs.0)
    }
}

impl Add<UnitWeight> for WeightSum {
    type Output = WeightSum;
    fn add(self, rhs: UnitWeight) -> Self {
        WeightSum(self.0 + u64::from(rhs.0))
    }
}

impl Sum<UnitWeight> for WeightSum {
    fn sum<I: Iterator<Item = UnitWeight>>(iter: I) -> Self {
        iter.fold(WeightSum::ZERO, |acc, w| acc + w)
    }
}

impl Sum for WeightSum {
    fn sum<I: Iterator<Item = WeightSum>>(iter: I) -> Self {
        iter.fold(WeightSum::ZERO, |acc, w| acc + w)
    }
}

impl FromStr for WeightSum {
    type Err = WeightParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        // sums are only bounded by u64; reuse the literal grammar without the cap
        let syntax = || WeightParseError::Syntax(s.to_string());
        let (int_part, frac_part) = s.split_once('.').unwrap_or((s, ""));
        if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax());
        }
        let int: u64 = int_part
            .parse()
            .map_err(|_| WeightParseError::OutOfRange(s.to_string()))?;
        let frac = if s.contains('.') {
            let w: UnitWeight = format!("0.{frac_part}").parse()?;
            u64::from(w.0)
        } else {
            0
        };
        int.checked_mul(u64::from(SCALE))
            .and_then(|v| v.checked_add(frac))
            .map(WeightSum)
            .ok_or_else(|| WeightParseError::OutOfRange(s.to_string()))
    }
}

impl fmt::Display for WeightSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_decimal(f, self.0)
    }
}

impl From<WeightSum> for String {
    fn from(w: WeightSum) -> String {
        w.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_plain_literals() {
        assert_eq!("1".parse::<UnitWeight>().unwrap(), UnitWeight::ONE);
        assert_eq!("0".parse::<UnitWeight>().unwrap(), UnitWeight::ZERO);
        assert_eq!("0.3".parse::<UnitWeight>().unwrap().millionths(), 300_000);
        assert_eq!("0.05".parse::<UnitWeight>().unwrap().millionths(), 50_000);
        assert_eq!("1.000000".parse::<UnitWeight>().unwrap(), UnitWeight::ONE);
        assert_eq!("0.000001".parse::<UnitWeight>().unwrap().millionths(), 1);
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(matches!("1.2".parse::<UnitWeight>(), Err(WeightParseError::OutOfRange(_))));
        assert!(matches!("1.000001".parse::<UnitWeight>(), Err(WeightParseError::OutOfRange(_))));
        assert!(matches!("0.1234567".parse::<UnitWeight>(), Err(WeightParseError::TooPrecise(_))));
        for bad in ["", ".5", "5.", "-0.1", "0.1e1", "abc", "0..1", " 0.1"] {
            assert!(matches!(bad.parse::<UnitWeight>(), Err(WeightParseError::Syntax(_))), "{bad}");
        }
        assert!("99999999999999999999999".parse::<UnitWeight>().is_err());
    }

    #[test]
    fn prints_shortest_decimal() {
        let cases = [(0, "0"), (1_000_000, "1"), (300_000, "0.3"), (50_000, "0.05"), (1, "0.000001")];
        for (m, s) in cases {
            assert_eq!(UnitWeight::from_millionths(m).unwrap().to_string(), s);
        }
        assert_eq!(WeightSum::from_millionths(2_400_000).to_string(), "2.4");
    }

    #[test]
    fn meet_and_join() {
        let a: UnitWeight = "0.2".parse().unwrap();
        let b: UnitWeight = "0.7".parse().unwrap();
        assert_eq!(a.meet(b), a);
        assert_eq!(a.join(b), b);
    }

    #[test]
    fn sums_exceed_one() {
        let w: UnitWeight = "0.7".parse().unwrap();
        let s: WeightSum = [w, w, w].into_iter().sum();
        assert_eq!(s.to_string(), "2.1");
        assert_eq!(WeightSum::times(w, 3), s);
        assert_eq!("2.1".parse::<WeightSum>().unwrap(), s);
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(m in 0u32..=SCALE) {
            let w = UnitWeight::from_millionths(m).unwrap();
            prop_assert_eq!(w.to_string().parse::<UnitWeight>().unwrap(), w);
        }

        #[test]
        fn sum_display_parse_round_trip(m in 0u64..=50_000_000) {
            let s = WeightSum::from_millionths(m);
            prop_assert_eq!(s.to_string().parse::<WeightSum>().unwrap(), s);
        }
    }
}
