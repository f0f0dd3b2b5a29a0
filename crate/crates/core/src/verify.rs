//! Runtime verification suites: each closed formula against exact ACUE
//! enumeration or against an independent identity.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ensembles::{AcueEnsemble, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::formulas::{
    acue_moment, acue_ratio, bos_compose, cue_moment, cue_ratio, f_kernel, moment_from_ratio_limit,
    moment_observable, one_ratio_acue, p_poly, ratio_observable, swap2_acue, swap2_cue, tao_scan,
    MomentSpec,
};
use crate::numeric::{
    cauchy_det_check, condensation_check, relative_error, ComplexValue, CondensationOrder,
    Polynomial, Precision,
};
use crate::symfunc::{hook_expectation, pieri_check, schur_eval, Partition};
use crate::zeta_limits::{averaged_acue_limit, r_average_limit, ScaledShifts};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Normalization,
    Hooks,
    Schur,
    OneRatio,
    Ratios,
    Moments,
    Tao,
    Cauchy,
    Condensation,
    FunctionalEquation,
    PTaylor,
    RatioLimit,
    Swap,
    Limits,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Normalization,
        Suite::Hooks,
        Suite::Schur,
        Suite::OneRatio,
        Suite::Ratios,
        Suite::Moments,
        Suite::Tao,
        Suite::Cauchy,
        Suite::Condensation,
        Suite::FunctionalEquation,
        Suite::PTaylor,
        Suite::RatioLimit,
        Suite::Swap,
        Suite::Limits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Normalization => "normalization",
            Suite::Hooks => "hooks",
            Suite::Schur => "schur",
            Suite::OneRatio => "one-ratio",
            Suite::Ratios => "ratios",
            Suite::Moments => "moments",
            Suite::Tao => "tao",
            Suite::Cauchy => "cauchy",
            Suite::Condensation => "condensation",
            Suite::FunctionalEquation => "functional-equation",
            Suite::PTaylor => "p-taylor",
            Suite::RatioLimit => "ratio-limit",
            Suite::Swap => "swap",
            Suite::Limits => "limits",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Largest `N` exercised by the enumeration-backed suites.
    pub n_max: usize,
    pub precision: Precision,
    pub seed: u64,
    /// Random inputs per parameter point.
    pub trials: usize,
    pub enumeration_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 3,
            precision: Precision::DEFAULT,
            seed: 0,
            trials: 10,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl VerifyConfig {
    /// `2^{-(bits/2 - 8)}`: the agreement demanded of exact identities.
    pub fn tolerance(&self) -> f64 {
        2f64.powi(-(self.precision.bits() as i32 / 2 - 8))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub max_rel_err: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

struct Acc {
    report: SuiteReport,
}

impl Acc {
    fn new(suite: Suite, tolerance: f64) -> Self {
        Acc {
            report: SuiteReport {
                suite,
                checks: 0,
                max_rel_err: 0.0,
                tolerance,
                passed: true,
                failures: Vec::new(),
            },
        }
    }

    fn record(&mut self, what: impl FnOnce() -> String, err: f64) {
        let r = &mut self.report;
        r.checks += 1;
        if err.is_nan() || err > r.max_rel_err {
            r.max_rel_err = err;
        }
        if err.is_nan() || err >= r.tolerance {
            r.passed = false;
            if r.failures.len() < 5 {
                r.failures.push(format!("{}: rel err {err:e}", what()));
            }
        }
    }

    /// Tracks an error measured against a check-specific tolerance.
    fn observe(&mut self, err: f64) {
        if err.is_nan() || err > self.report.max_rel_err {
            self.report.max_rel_err = err;
        }
    }

    fn require(&mut self, cond: bool, what: impl FnOnce() -> String) {
        self.report.checks += 1;
        if !cond {
            self.report.passed = false;
            if self.report.failures.len() < 5 {
                self.report.failures.push(what());
            }
        }
    }
}

/// Random complex number with both parts uniform in `[-r, r]`.
pub fn random_complex(rng: &mut impl Rng, prec: Precision, r: f64) -> ComplexValue {
    ComplexValue::from_f64(prec, rng.random_range(-r..r), rng.random_range(-r..r))
}

fn random_vec(rng: &mut impl Rng, prec: Precision, len: usize, r: f64) -> Vec<ComplexValue> {
    (0..len).map(|_| random_complex(rng, prec, r)).collect()
}

/// `ℓ`-th Taylor coefficient at 0 of `f`, by the trapezoid rule for the
/// Cauchy integral on `|u| = radius`.
pub fn taylor_coefficient<F>(
    f: F,
    ell: usize,
    radius: f64,
    points: usize,
    prec: Precision,
) -> Result<ComplexValue>
where
    F: Fn(&ComplexValue) -> Result<ComplexValue>,
{
    let rho = ComplexValue::from_f64(prec, radius, 0.0);
    let mut total = ComplexValue::zero(prec);
    for m in 0..points {
        let u = &rho * &ComplexValue::root_of_unity(prec, m as i64, points as u64);
        total += &(&f(&u)? * &u.powi(-(ell as i64)));
    }
    Ok(&total / &ComplexValue::from_i64(prec, points as i64))
}

pub fn run_suites(config: &VerifyConfig, suites: &[Suite]) -> Result<VerifyReport> {
    if config.n_max == 0 || config.trials == 0 {
        return Err(Error::Domain("verify needs n >= 1 and trials >= 1".into()));
    }
    let mut reports = std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&suite| scope.spawn(move || run_suite(config, suite)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite worker panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    reports.sort_by_key(|r| r.suite);
    Ok(VerifyReport {
        config: config.clone(),
        passed: reports.iter().all(|r| r.passed),
        suites: reports,
    })
}

pub fn run_all(config: &VerifyConfig) -> Result<VerifyReport> {
    run_suites(config, &Suite::ALL)
}

pub fn run_suite(config: &VerifyConfig, suite: Suite) -> Result<SuiteReport> {
    let mut rng =
        ChaCha8Rng::seed_from_u64(config.seed ^ (suite as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let prec = config.precision;
    let mut acc = Acc::new(suite, config.tolerance());
    let ensembles =
        || (1..=config.n_max).map(|n| AcueEnsemble::with_cap(n, prec, config.enumeration_cap));
    match suite {
        Suite::Normalization => {
            for e in ensembles() {
                let e = e?;
                let total = ComplexValue::real(e.total_weight());
                acc.record(
                    || format!("N={}", e.n()),
                    relative_error(&total, &ComplexValue::one(prec)),
                );
            }
        }
        Suite::Hooks => {
            for e in ensembles() {
                let e = e?;
                let n = e.n();
                for b in 0..n {
                    for a in 1..=4 * n - b {
                        let lambda = Partition::hook(a, b)?;
                        let oracle = e.expect(|pts| schur_eval(&lambda, pts))?;
                        let closed =
                            ComplexValue::from_i64(prec, i64::from(hook_expectation(n, a, b)?));
                        // the exact value is the reference so that zeros compare absolutely
                        acc.record(
                            || format!("N={n} hook ({a},1^{b})"),
                            relative_error(&oracle, &closed),
                        );
                    }
                }
            }
        }
        Suite::Schur => {
            for n in 1..=config.n_max + 1 {
                let xs = random_vec(&mut rng, prec, n, 1.5);
                for j in 0..=n {
                    for k in 0..=2 * n {
                        let r = pieri_check(j, k, &xs)?;
                        acc.record(|| format!("pieri N={n} j={j} k={k}"), r.rel_err);
                    }
                }
                for k in 1..=n {
                    for l in 1..=n {
                        let shifts = random_vec(&mut rng, prec, k + l, 1.5);
                        let schur = schur_eval(&Partition::rectangle(n, k), &shifts);
                        let spec = MomentSpec::new(n, k, l, shifts)?;
                        acc.record(
                            || format!("rectangle N={n} K={k} L={l}"),
                            relative_error(&cue_moment(&spec)?, &schur),
                        );
                    }
                }
            }
        }
        Suite::OneRatio => {
            for e in ensembles() {
                let e = e?;
                let n = e.n();
                for _ in 0..config.trials {
                    let (v, u) = loop {
                        let u = random_complex(&mut rng, prec, 1.5);
                        let gap = (&u.powi(2 * n as i64) - &ComplexValue::one(prec)).abs_f64();
                        if gap > 1e-2 {
                            break (random_complex(&mut rng, prec, 1.5), u);
                        }
                    };
                    let oracle = e.expect(ratio_observable(
                        std::slice::from_ref(&v),
                        std::slice::from_ref(&u),
                    ))?;
                    acc.record(
                        || format!("N={n} v={v} u={u}"),
                        relative_error(&one_ratio_acue(n, &v, &u)?, &oracle),
                    );
                }
            }
        }
        Suite::Ratios => {
            for e in ensembles() {
                let e = e?;
                let n = e.n();
                for j in 1..=3 {
                    for _ in 0..config.trials {
                        let (vs, us, value) = loop {
                            let vs = random_vec(&mut rng, prec, j, 1.5);
                            let us = random_vec(&mut rng, prec, j, 1.5);
                            if let Ok(value) = acue_ratio(n, &vs, &us) {
                                break (vs, us, value);
                            }
                        };
                        let bos = bos_compose(n, &vs, &us)?;
                        acc.require(bos == value, || {
                            format!("N={n} J={j}: acue_ratio and bos_compose differ")
                        });
                        let oracle = e.expect(ratio_observable(&vs, &us))?;
                        acc.record(|| format!("N={n} J={j}"), relative_error(&value, &oracle));
                    }
                }
            }
        }
        Suite::Moments => {
            for e in ensembles() {
                let e = e?;
                let n = e.n();
                for k in 1..=n + 2 {
                    for l in 1..=n + 2 {
                        for _ in 0..config.trials.min(5) {
                            let shifts = random_vec(&mut rng, prec, k + l, 1.5);
                            let oracle = e.expect(moment_observable(k, &shifts))?;
                            let spec = MomentSpec::new(n, k, l, shifts)?;
                            acc.record(
                                || format!("N={n} K={k} L={l}"),
                                relative_error(&acue_moment(&spec)?, &oracle),
                            );
                        }
                    }
                }
            }
        }
        Suite::Tao => {
            for n in 1..=config.n_max {
                let scan = tao_scan(n, n + 1, n + 1, config.trials.min(5), config.seed, prec)?;
                for cell in &scan.cells {
                    if cell.predicted_agree {
                        acc.record(
                            || format!("N={n} K={} L={}", cell.k, cell.l),
                            cell.max_rel_diff,
                        );
                    }
                }
                acc.require(scan.matches_prediction(), || {
                    format!("N={n}: agreement set is not K, L <= N")
                });
            }
        }
        Suite::Cauchy => {
            for j in 1..=6 {
                for _ in 0..config.trials {
                    let us = random_vec(&mut rng, prec, j, 1.5);
                    let vs = random_vec(&mut rng, prec, j, 1.5);
                    let r = cauchy_det_check(&us, &vs)?;
                    acc.record(|| format!("J={j}"), r.rel_err);
                }
            }
        }
        Suite::Condensation => {
            let orders = [
                CondensationOrder::Leading,
                CondensationOrder::LeadingReversed,
                CondensationOrder::Trailing,
            ];
            for order in orders {
                for q in 1..=3 {
                    let fs: Vec<Polynomial> = (0..4)
                        .map(|_| Polynomial::new(random_vec(&mut rng, prec, 4, 1.0)))
                        .collect();
                    let a = random_complex(&mut rng, prec, 1.0);
                    let tail = random_vec(&mut rng, prec, 4 - q, 1.0);
                    let r = condensation_check(&fs, q, &a, &tail, order)?;
                    acc.observe(r.rel_err);
                    acc.require(r.ladder_decreasing(), || {
                        format!("{order:?} q={q}: ladder not decreasing")
                    });
                    acc.require(r.passed(), || {
                        format!("{order:?} q={q}: extrapolated rel err {:e}", r.rel_err)
                    });
                }
            }
        }
        Suite::FunctionalEquation => {
            for n in 1..=config.n_max {
                for _ in 0..config.trials {
                    let u = random_complex(&mut rng, prec, 1.5);
                    let v = random_complex(&mut rng, prec, 1.5);
                    let Ok(lhs) = f_kernel(n, &u, &v) else {
                        continue;
                    };
                    let Ok(f_inv) = f_kernel(n, &u.recip(), &v.recip()) else {
                        continue;
                    };
                    let rhs = -&(&(&f_inv * &v.powi(n as i64 - 1)) * &u.powi(-(n as i64) - 1));
                    acc.record(|| format!("N={n} u={u} v={v}"), relative_error(&lhs, &rhs));
                }
            }
        }
        Suite::PTaylor => {
            acc.report.tolerance = 1e-20;
            for n in 1..=config.n_max {
                let v = ComplexValue::from_f64(prec, 0.9, 0.6);
                let radius = 0.5 * v.abs_f64().min(1.0);
                for ell in 0..=4 * n {
                    let coeff = taylor_coefficient(|u| f_kernel(n, u, &v), ell, radius, 256, prec)?;
                    let p = p_poly(n, ell, &v)?;
                    acc.record(|| format!("N={n} ℓ={ell}"), relative_error(&-&coeff, &p));
                }
            }
        }
        Suite::RatioLimit => {
            acc.report.tolerance = 1e-8;
            let c = |re, im| ComplexValue::from_f64(prec, re, im);
            let specs = [
                MomentSpec::new(1, 1, 1, vec![c(0.3, 0.2), c(-0.6, 0.5)])?,
                MomentSpec::new(
                    2,
                    3,
                    1,
                    vec![c(0.3, 0.2), c(-0.5, 0.6), c(0.9, -0.1), c(-0.2, -0.7)],
                )?,
                MomentSpec::new(
                    2,
                    2,
                    2,
                    vec![c(0.4, -0.3), c(-0.8, 0.1), c(0.2, 0.9), c(1.1, 0.5)],
                )?,
            ];
            for spec in &specs {
                let r = moment_from_ratio_limit(spec)?;
                let label = || format!("N={} K={} L={}", spec.n, spec.k, spec.l);
                acc.require(r.ladder_decreasing(), || {
                    format!("{}: ladder not decreasing", label())
                });
                acc.record(label, r.rel_err);
            }
        }
        Suite::Swap => {
            for e in ensembles() {
                let e = e?;
                let n = e.n();
                let minus_one = ComplexValue::from_i64(prec, -1);
                for _ in 0..config.trials {
                    let [a, b, g, d]: [ComplexValue; 4] = loop {
                        let t = random_vec(&mut rng, prec, 4, 0.95);
                        let vs = [-&t[0], &minus_one / &t[1]];
                        let us = [-&t[2], &minus_one / &t[3]];
                        if t[2].abs_f64() < 1.0
                            && t[3].abs_f64() < 1.0
                            && acue_ratio(n, &vs, &us).is_ok()
                        {
                            break t.try_into().expect("four values");
                        }
                    };
                    let vs = [-&a, &minus_one / &b];
                    let us = [-&g, &minus_one / &d];
                    let pref = &b.powi(n as i64) / &d.powi(n as i64);
                    let acue = swap2_acue(n, &a, &b, &g, &d)?;
                    acc.record(
                        || format!("ACUE N={n} substitution"),
                        relative_error(&acue, &(&pref * &acue_ratio(n, &vs, &us)?)),
                    );
                    let oracle = &pref * &e.expect(ratio_observable(&vs, &us))?;
                    acc.record(
                        || format!("ACUE N={n} enumeration"),
                        relative_error(&acue, &oracle),
                    );
                    let cue = swap2_cue(n, &a, &b, &g, &d)?;
                    acc.record(
                        || format!("CUE N={n} substitution"),
                        relative_error(&cue, &(&pref * &cue_ratio(n, &vs, &us)?)),
                    );
                }
            }
        }
        Suite::Limits => {
            acc.report.tolerance = 1e-20;
            for j in 1..=2 {
                let shifts = loop {
                    let mus = random_vec(&mut rng, prec, j, 1.0);
                    let nus = random_vec(&mut rng, prec, j, 1.0);
                    if mus.iter().all(|m| m.re().to_f64().abs() > 0.2) {
                        if let Ok(s) = ScaledShifts::new(mus, nus) {
                            break s;
                        }
                    }
                };
                let contour = averaged_acue_limit(&shifts, 512)?;
                let direct = r_average_limit(&shifts, 512)?;
                acc.record(|| format!("J={j}"), relative_error(&contour, &direct));
            }
        }
    }
    Ok(acc.report)
}
