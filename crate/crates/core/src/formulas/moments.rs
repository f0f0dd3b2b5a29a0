//! Moment determinants, the ratio-limit replay and the agreement scan.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formulas::columns::{phi_poly, psi_poly};
use crate::formulas::ratios::acue_ratio;
use crate::formulas::MomentSpec;
use crate::numeric::{alternant_ratio, relative_error, ComplexValue, LaurentPoly, Precision};
use crate::report::{EvalReport, LadderStep};

fn moment_with<F>(spec: &MomentSpec, column: F) -> Result<ComplexValue>
where
    F: Fn(usize, usize, usize, usize) -> Result<LaurentPoly>,
{
    let rows = (1..=spec.k + spec.l)
        .map(|i| column(spec.n, spec.k, spec.l, i))
        .collect::<Result<Vec<_>>>()?;
    alternant_ratio(&rows, &spec.shifts, spec.confluence)
}

/// `E_ACUE(N)[det(g)^{-K} ∏ det(1 + v_k g)] = det(φ_i(v_j)) / Δ(v)`.
pub fn acue_moment(spec: &MomentSpec) -> Result<ComplexValue> {
    moment_with(spec, phi_poly)
}

/// `E_CUE(N)[det(G)^{-K} ∏ det(1 + v_k G)] = det(ψ_i(v_j)) / Δ(v) = s_⟨N^K⟩(v)`.
pub fn cue_moment(spec: &MomentSpec) -> Result<ComplexValue> {
    moment_with(spec, psi_poly)
}

/// Shifts `u_k = σ^k / ε` (k ≤ K) and `u'_ℓ = ε σ^ℓ` (ℓ ≤ L) for a descending ε.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioLimitLadder {
    pub sigma: (f64, f64),
    pub eps: Vec<f64>,
    /// Fresh σ attempts after a pole on the ladder.
    pub retries: usize,
}

impl Default for RatioLimitLadder {
    fn default() -> Self {
        RatioLimitLadder {
            sigma: (0.8, 0.45),
            eps: (1..=6).map(|m| 10f64.powi(-m)).collect(),
            retries: 3,
        }
    }
}

/// Recovers the ACUE moment from the ratio determinant by sending `K`
/// denominator shifts to infinity and `L` to zero, with prefactor `∏ u_k^N`.
pub fn moment_from_ratio_limit(spec: &MomentSpec) -> Result<EvalReport> {
    moment_from_ratio_limit_with(spec, &RatioLimitLadder::default())
}

pub fn moment_from_ratio_limit_with(
    spec: &MomentSpec,
    ladder: &RatioLimitLadder,
) -> Result<EvalReport> {
    if ladder.eps.len() < 2 {
        return Err(Error::Dimension("ladder needs at least two steps".into()));
    }
    let target = acue_moment(spec)?;
    let prec = spec.precision();
    let mut last_err = None;
    for attempt in 0..=ladder.retries {
        let sigma = ComplexValue::from_f64(prec, ladder.sigma.0, ladder.sigma.1)
            * ComplexValue::from_f64(prec, 0.0, 0.37 * attempt as f64).exp();
        match ladder_steps(spec, &sigma, &ladder.eps, &target) {
            Ok(steps) => {
                let (prev, last) = (&steps[steps.len() - 2], &steps[steps.len() - 1]);
                let ratio = prev.eps / last.eps;
                let r = ComplexValue::from_f64(prec, ratio, 0.0);
                let extrapolated = &(&(&r * &last.value) - &prev.value)
                    / &ComplexValue::from_f64(prec, ratio - 1.0, 0.0);
                return Ok(
                    EvalReport::new("moment-from-ratio-limit", extrapolated, target, 1e-8)
                        .with_ladder(steps),
                );
            }
            Err(e @ Error::Pole(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.expect("at least one attempt"))
}

fn ladder_steps(
    spec: &MomentSpec,
    sigma: &ComplexValue,
    eps: &[f64],
    target: &ComplexValue,
) -> Result<Vec<LadderStep>> {
    let prec = spec.precision();
    let n = spec.n as i64;
    eps.iter()
        .map(|&e| {
            let e_c = ComplexValue::from_f64(prec, e, 0.0);
            let mut us = Vec::with_capacity(spec.k + spec.l);
            let mut prefactor = ComplexValue::one(prec);
            for k in 1..=spec.k as i64 {
                let u = &sigma.powi(k) / &e_c;
                prefactor *= &u.powi(n);
                us.push(u);
            }
            for l in 1..=spec.l as i64 {
                us.push(&e_c * &sigma.powi(l));
            }
            let value = &prefactor * &acue_ratio(spec.n, &spec.shifts, &us)?;
            Ok(LadderStep {
                eps: e,
                rel_err: relative_error(&value, target),
                value,
            })
        })
        .collect()
}

/// One `(K, L)` cell of the ACUE/CUE comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaoCell {
    pub k: usize,
    pub l: usize,
    /// Largest `|acue - cue| / max(1, |cue|)` over the trials.
    pub max_rel_diff: f64,
    pub agree: bool,
    /// Whether `K, L <= N`, where the two moments are known to coincide.
    pub predicted_agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaoScan {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub agreement_tolerance: f64,
    /// Sorted by `(k, l)`.
    pub cells: Vec<TaoCell>,
}

impl TaoScan {
    /// True when the agreeing cells are exactly those with `K, L <= N`.
    pub fn matches_prediction(&self) -> bool {
        self.cells.iter().all(|c| c.agree == c.predicted_agree)
    }
}

/// Compares ACUE and CUE moments over `1..=kmax × 1..=lmax` on random shifts
/// with real and imaginary parts uniform in `[-1.5, 1.5]`.
///
/// Cells are evaluated on worker threads, each from its own seeded stream, so
/// the output depends only on the arguments.
pub fn tao_scan(
    n: usize,
    kmax: usize,
    lmax: usize,
    trials: usize,
    seed: u64,
    prec: Precision,
) -> Result<TaoScan> {
    if n == 0 || kmax == 0 || lmax == 0 || trials == 0 {
        return Err(Error::Domain(
            "tao scan needs N, kmax, lmax, trials >= 1".into(),
        ));
    }
    let tol = 2f64.powi(-(prec.bits() as i32 / 2 - 8));
    let grid: Vec<(usize, usize)> = (1..=kmax)
        .flat_map(|k| (1..=lmax).map(move |l| (k, l)))
        .collect();
    let cells = std::thread::scope(|scope| {
        let handles: Vec<_> = grid
            .iter()
            .map(|&(k, l)| scope.spawn(move || scan_cell(n, k, l, trials, seed, prec, tol)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(TaoScan {
        n,
        trials,
        seed,
        agreement_tolerance: tol,
        cells,
    })
}

fn scan_cell(
    n: usize,
    k: usize,
    l: usize,
    trials: usize,
    seed: u64,
    prec: Precision,
    tol: f64,
) -> Result<TaoCell> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((k as u64) << 32 | l as u64));
    let mut max_rel_diff = 0f64;
    for _ in 0..trials {
        let shifts = (0..k + l)
            .map(|_| {
                ComplexValue::from_f64(
                    prec,
                    rng.random_range(-1.5..1.5),
                    rng.random_range(-1.5..1.5),
                )
            })
            .collect();
        let spec = MomentSpec::new(n, k, l, shifts)?;
        let acue = acue_moment(&spec)?;
        let cue = cue_moment(&spec)?;
        let diff = (&acue - &cue).abs_f64() / cue.abs_f64().max(1.0);
        max_rel_diff = max_rel_diff.max(diff);
    }
    Ok(TaoCell {
        k,
        l,
        max_rel_diff,
        agree: max_rel_diff < tol,
        predicted_agree: k <= n && l <= n,
    })
}
