//! Scaled `N → ∞` limits of the ratio formulas, with shifts `e^{-μ/N}`,
//! `e^{-ν/N}`, and the rotation-averaged ACUE prediction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formulas::acue_ratio;
use crate::numeric::{ComplexMatrix, ComplexValue, Precision};

/// Default number of equispaced nodes on the unit circle.
pub const DEFAULT_QUADRATURE_POINTS: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LimitKernel {
    Cue,
    Acue,
}

/// Denominator exponents `μ_j` and numerator exponents `ν_j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaledShifts {
    mus: Vec<ComplexValue>,
    nus: Vec<ComplexValue>,
}

impl ScaledShifts {
    /// Requires equal non-zero lengths, distinct `μ`s, distinct `ν`s and `ν_j ≠ μ_i`.
    pub fn new(mus: Vec<ComplexValue>, nus: Vec<ComplexValue>) -> Result<Self> {
        if mus.len() != nus.len() || mus.is_empty() {
            return Err(Error::Dimension(format!(
                "|μ| = {}, |ν| = {}",
                mus.len(),
                nus.len()
            )));
        }
        let thr = precision_of(&mus, &nus).threshold();
        for (i, m) in mus.iter().enumerate() {
            for (j, n) in nus.iter().enumerate() {
                if m.dist(n) < thr {
                    return Err(Error::Pole(format!("μ_{} = ν_{} ({m})", i + 1, j + 1)));
                }
            }
        }
        for (name, xs) in [("μ", &mus), ("ν", &nus)] {
            if let Some((a, b)) = crate::numeric::alternant::first_coincident_pair(xs, thr) {
                return Err(Error::Pole(format!("{name}_{} = {name}_{}", a + 1, b + 1)));
            }
        }
        Ok(ScaledShifts { mus, nus })
    }

    pub fn mus(&self) -> &[ComplexValue] {
        &self.mus
    }

    pub fn nus(&self) -> &[ComplexValue] {
        &self.nus
    }

    pub fn len(&self) -> usize {
        self.mus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mus.is_empty()
    }

    pub fn precision(&self) -> Precision {
        precision_of(&self.mus, &self.nus)
    }

    /// Both sets moved by `-iπr`.
    pub fn rotated(&self, r: f64) -> ScaledShifts {
        let prec = self.precision();
        let shift = ComplexValue::new(
            rug::Float::with_val(prec.bits(), 0),
            rug::Float::with_val(prec.bits(), rug::float::Constant::Pi) * r,
        );
        ScaledShifts {
            mus: self.mus.iter().map(|m| m - &shift).collect(),
            nus: self.nus.iter().map(|n| n - &shift).collect(),
        }
    }

    fn cauchy(&self) -> Result<ComplexMatrix> {
        ComplexMatrix::from_fn(self.len(), self.len(), |i, j| {
            (&self.nus[j] - &self.mus[i]).recip()
        })
    }
}

fn precision_of(mus: &[ComplexValue], nus: &[ComplexValue]) -> Precision {
    mus.iter()
        .chain(nus)
        .map(ComplexValue::precision)
        .min()
        .unwrap_or_default()
}

/// `e(μ, ν)`: 1 for `Re μ > 0`, `e^{μ-ν}` for `Re μ < 0`.
pub fn e_limit_kernel(mu: &ComplexValue, nu: &ComplexValue) -> Result<ComplexValue> {
    let re = mu.re().to_f64();
    if re.abs() < mu.precision().threshold() {
        return Err(Error::Domain(format!(
            "e(μ, ν) needs Re μ ≠ 0, got μ = {mu}"
        )));
    }
    Ok(if re > 0.0 {
        ComplexValue::one(mu.precision())
    } else {
        (mu - nu).exp()
    })
}

/// `𝔢(μ, ν) = (1 - e^{-μ-ν}) / (1 - e^{-2μ})`.
pub fn ae_limit_kernel(mu: &ComplexValue, nu: &ComplexValue) -> Result<ComplexValue> {
    let one = ComplexValue::one(mu.precision());
    let den = &one - &(-(mu + mu)).exp();
    if den.abs_f64() < mu.precision().threshold() {
        return Err(Error::Pole(format!("1 - e^(-2μ) = 0 at μ = {mu}")));
    }
    Ok(&(&one - &(-(mu + nu)).exp()) / &den)
}

/// `det(k(μ_i, ν_j) / (ν_j - μ_i)) / det(1 / (ν_j - μ_i))`.
pub fn ratio_limit_det(shifts: &ScaledShifts, kernel: LimitKernel) -> Result<ComplexValue> {
    let cauchy = shifts.cauchy()?;
    let weighted = ComplexMatrix::try_from_fn(shifts.len(), shifts.len(), |i, j| {
        let (mu, nu) = (&shifts.mus[i], &shifts.nus[j]);
        let k = match kernel {
            LimitKernel::Cue => e_limit_kernel(mu, nu)?,
            LimitKernel::Acue => ae_limit_kernel(mu, nu)?,
        };
        Ok(cauchy.get(i, j) * &k)
    })?;
    Ok(&weighted.det()? / &cauchy.det()?)
}

/// Average over `|z| = 1` of
/// `det((1/(ν_j - μ_i)) (1 - z e^{-μ_i-ν_j}) / (1 - z e^{-2μ_i}))`, divided by
/// the Cauchy determinant. The average is normalised as `∫_0^1 dr` with
/// `z = e^{2πir}` and computed by the trapezoid rule on `points` nodes.
pub fn averaged_acue_limit(shifts: &ScaledShifts, points: usize) -> Result<ComplexValue> {
    if points == 0 {
        return Err(Error::Domain("quadrature needs at least one point".into()));
    }
    let prec = shifts.precision();
    let one = ComplexValue::one(prec);
    for (i, mu) in shifts.mus.iter().enumerate() {
        // the pole z = e^{2μ} sits on the contour exactly when Re μ = 0
        if mu.re().to_f64().abs() < prec.threshold() {
            return Err(Error::Contour(format!(
                "μ_{} = {mu} puts a pole on |z| = 1",
                i + 1
            )));
        }
    }
    let cauchy = shifts.cauchy()?;
    let j = shifts.len();
    let decay_num =
        ComplexMatrix::from_fn(j, j, |i, k| (-(&shifts.mus[i] + &shifts.nus[k])).exp())?;
    let decay_den: Vec<ComplexValue> = shifts.mus.iter().map(|m| (-(m + m)).exp()).collect();
    let mut total = ComplexValue::zero(prec);
    for m in 0..points {
        let z = ComplexValue::root_of_unity(prec, m as i64, points as u64);
        let integrand = ComplexMatrix::from_fn(j, j, |i, k| {
            let kernel = &(&one - &(&z * decay_num.get(i, k))) / &(&one - &(&z * &decay_den[i]));
            cauchy.get(i, k) * &kernel
        })?;
        total += &integrand.det()?;
    }
    let mean = &total / &ComplexValue::from_i64(prec, points as i64);
    Ok(&mean / &cauchy.det()?)
}

/// Midpoint-rule average over `r ∈ [0, 1)` of `ratio_limit_det` with both
/// shift sets moved by `-iπr` and the ACUE kernel.
pub fn r_average_limit(shifts: &ScaledShifts, points: usize) -> Result<ComplexValue> {
    if points == 0 {
        return Err(Error::Domain("quadrature needs at least one point".into()));
    }
    let prec = shifts.precision();
    let mut total = ComplexValue::zero(prec);
    for m in 0..points {
        let r = (m as f64 + 0.5) / points as f64;
        total += &ratio_limit_det(&shifts.rotated(r), LimitKernel::Acue)?;
    }
    Ok(&total / &ComplexValue::from_i64(prec, points as i64))
}

/// Finite-`N` ACUE ratio at `v_j = e^{-ν_j/N}`, `u_j = e^{-μ_j/N}`.
pub fn finite_n_ratio(shifts: &ScaledShifts, n: usize) -> Result<ComplexValue> {
    finite_n_rotated(shifts, n, 0.0)
}

fn finite_n_rotated(shifts: &ScaledShifts, n: usize, r: f64) -> Result<ComplexValue> {
    let prec = shifts.precision();
    let nn = ComplexValue::from_i64(prec, n as i64);
    let rot = ComplexValue::new(
        rug::Float::with_val(prec.bits(), 0),
        rug::Float::with_val(prec.bits(), rug::float::Constant::Pi) * r / n as f64,
    )
    .exp();
    let scale = |xs: &[ComplexValue]| -> Vec<ComplexValue> {
        xs.iter().map(|x| &(-&(x / &nn)).exp() * &rot).collect()
    };
    acue_ratio(n, &scale(&shifts.nus), &scale(&shifts.mus))
}

/// Midpoint average over `r ∈ [0, 1)` of the finite-`N` ACUE ratio with both
/// shift sets rotated by `e^{iπr/N}`.
pub fn finite_n_average(shifts: &ScaledShifts, n: usize, points: usize) -> Result<ComplexValue> {
    if points == 0 {
        return Err(Error::Domain("quadrature needs at least one point".into()));
    }
    let prec = shifts.precision();
    let mut total = ComplexValue::zero(prec);
    for m in 0..points {
        let r = (m as f64 + 0.5) / points as f64;
        total += &finite_n_rotated(shifts, n, r)?;
    }
    Ok(&total / &ComplexValue::from_i64(prec, points as i64))
}
