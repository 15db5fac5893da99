//! Exact rational scores with fixed 4-decimal rendering.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// An exact nonnegative rational plus its 4-decimal rendering. Undefined
/// values (zero denominators) are represented as `None` by callers, never
/// as zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Score {
    pub numerator: u64,
    pub denominator: u64,
    /// Decimal rendering rounded half-up to 4 places.
    pub value: String,
}

impl Score {
    pub fn new(numerator: u64, denominator: u64) -> Option<Score> {
        if denominator == 0 {
            return None;
        }
        Some(Score {
            numerator,
            denominator,
            value: render4(numerator, denominator),
        })
    }

    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new(self.numerator, self.denominator)
    }

    pub fn as_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

/// Renders `n/d` with exactly four decimal places, rounding half-up, using
/// integer arithmetic only.
pub fn render4(n: u64, d: u64) -> String {
    assert!(d != 0, "denominator must be nonzero");
    let scaled = (n as u128 * 20_000 + d as u128) / (2 * d as u128);
    format!("{}.{:04}", scaled / 10_000, scaled % 10_000)
}
