//! Closed formulas for ACUE and CUE moments and ratios.
//!
//! Column indices `i` are 1-based throughout, running over `1..=K+L`.

mod columns;
mod moments;
mod oracle;
mod ratios;

use serde::{Deserialize, Serialize};

pub use columns::{
    h_exponent, h_func, p_laurent, p_poly, phi_column, phi_poly, psi_column, psi_poly,
};
pub use moments::{
    acue_moment, cue_moment, moment_from_ratio_limit, moment_from_ratio_limit_with, tao_scan,
    RatioLimitLadder, TaoCell, TaoScan,
};
pub use oracle::{
    moment_by_enumeration, moment_observable, ratio_by_enumeration, ratio_observable,
};
pub use ratios::{
    acue_kernel, acue_ratio, bos_compose, cue_kernel, cue_ratio, f_kernel, one_ratio_acue,
    swap2_acue, swap2_cue,
};

use crate::error::{Error, Result};
use crate::numeric::{ComplexValue, Confluence, Precision};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftRole {
    NumeratorV,
    DenominatorU,
}

/// An ordered list of shifts together with the side of the ratio it sits on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShiftSet {
    values: Vec<ComplexValue>,
    role: ShiftRole,
}

impl ShiftSet {
    pub fn numerators(values: Vec<ComplexValue>) -> Self {
        ShiftSet {
            values,
            role: ShiftRole::NumeratorV,
        }
    }

    pub fn denominators(values: Vec<ComplexValue>) -> Self {
        ShiftSet {
            values,
            role: ShiftRole::DenominatorU,
        }
    }

    pub fn values(&self) -> &[ComplexValue] {
        &self.values
    }

    pub fn role(&self) -> ShiftRole {
        self.role
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn precision(&self) -> Precision {
        self.values
            .iter()
            .map(ComplexValue::precision)
            .min()
            .unwrap_or_default()
    }

    /// Rejects any `u` within the pole threshold of a `2N`-th root of unity.
    pub fn check_acue_denominators(&self, n: usize) -> Result<()> {
        ratios::check_off_roots(n, &self.values)
    }

    /// Rejects any `u` near the unit circle; otherwise returns `|u| < 1` per entry.
    pub fn cue_inside_flags(&self) -> Result<Vec<bool>> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, u)| ratios::inside_flag(i, u))
            .collect()
    }
}

impl std::ops::Deref for ShiftSet {
    type Target = [ComplexValue];
    fn deref(&self) -> &[ComplexValue] {
        &self.values
    }
}

/// `E[det(g)^{-K} ∏_{k=1}^{K+L} det(1 + v_k g)]` at a given `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSpec {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub shifts: ShiftSet,
    pub confluence: Confluence,
}

impl MomentSpec {
    /// Coincident shifts are rejected unless [`confluent`](Self::confluent) is applied.
    pub fn new(n: usize, k: usize, l: usize, shifts: Vec<ComplexValue>) -> Result<Self> {
        if n == 0 || k == 0 || l == 0 {
            return Err(Error::Domain(format!(
                "need N, K, L >= 1, got N={n}, K={k}, L={l}"
            )));
        }
        if shifts.len() != k + l {
            return Err(Error::Dimension(format!(
                "{} shifts supplied, K + L = {}",
                shifts.len(),
                k + l
            )));
        }
        Ok(MomentSpec {
            n,
            k,
            l,
            shifts: ShiftSet::numerators(shifts),
            confluence: Confluence::Reject,
        })
    }

    /// Evaluate repeated shifts through derivative columns.
    pub fn confluent(mut self) -> Self {
        self.confluence = Confluence::Allow;
        self
    }

    pub fn precision(&self) -> Precision {
        self.shifts.precision()
    }
}
