use serde::{Deserialize, Serialize};

use crate::numeric::{relative_error, ComplexValue};

/// A formula value set against an independent reference value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub label: String,
    pub value: ComplexValue,
    pub oracle: ComplexValue,
    pub abs_err: f64,
    pub rel_err: f64,
    pub precision_bits: u32,
    pub tolerance: f64,
    /// Per-step errors for checks that approach a limit along an ε-ladder.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ladder: Vec<LadderStep>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LadderStep {
    pub eps: f64,
    pub value: ComplexValue,
    pub rel_err: f64,
}

impl EvalReport {
    pub fn new(
        label: impl Into<String>,
        value: ComplexValue,
        oracle: ComplexValue,
        tolerance: f64,
    ) -> Self {
        let abs_err = value.dist(&oracle);
        let rel_err = relative_error(&value, &oracle);
        let precision_bits = value.precision().bits().min(oracle.precision().bits());
        EvalReport {
            label: label.into(),
            value,
            oracle,
            abs_err,
            rel_err,
            precision_bits,
            tolerance,
            ladder: Vec::new(),
        }
    }

    pub fn with_ladder(mut self, ladder: Vec<LadderStep>) -> Self {
        self.ladder = ladder;
        self
    }

    pub fn passed(&self) -> bool {
        self.rel_err < self.tolerance
    }

    /// True when every ladder step improves on the previous one.
    pub fn ladder_decreasing(&self) -> bool {
        self.ladder.windows(2).all(|w| w[1].rel_err < w[0].rel_err)
    }
}
