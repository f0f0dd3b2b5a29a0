use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Working precision in bits for every [`ComplexValue`](crate::ComplexValue).
///
/// All tolerances and thresholds in the crate are derived from it: the
/// default relative tolerance is `2^-(bits/2)` and the pole/confluence
/// threshold is `2^-(bits/4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Precision(u32);

impl Precision {
    pub const MIN_BITS: u32 = 64;
    pub const DEFAULT: Precision = Precision(256);

    pub fn new(bits: u32) -> Result<Self> {
        if bits < Self::MIN_BITS {
            return Err(Error::Precision(bits));
        }
        Ok(Precision(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// `2^-(bits/2)`.
    pub fn rel_tol(self) -> f64 {
        (-(f64::from(self.0) / 2.0)).exp2()
    }

    /// `2^-(bits/4)`, used both for pole proximity and confluence detection.
    pub fn threshold(self) -> f64 {
        (-(f64::from(self.0) / 4.0)).exp2()
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl TryFrom<u32> for Precision {
    type Error = Error;

    fn try_from(bits: u32) -> Result<Self> {
        Precision::new(bits)
    }
}

impl From<Precision> for u32 {
    fn from(p: Precision) -> u32 {
        p.0
    }
}

impl std::fmt::Display for Precision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} bits", self.0)
    }
}
