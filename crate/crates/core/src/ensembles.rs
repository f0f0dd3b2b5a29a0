//! ACUE(N) by exact enumeration, and a Haar sampler for CUE(N).
//!
//! The ACUE places N points on the 2N-th roots of unity with probability
//! proportional to the squared Vandermonde. Ordered tuples with a repeated
//! root carry zero weight, and each N-subset appears N! times, so summing
//! over the C(2N, N) subsets with weight `|Δ|² / (2N)^N` reproduces the full
//! tuple average exactly.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rug::ops::Pow;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{vandermonde, ComplexValue, Precision};

pub const DEFAULT_ENUMERATION_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnsembleKind {
    Acue,
    Cue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub n: usize,
    pub precision: Precision,
}

impl EnsembleSpec {
    pub fn new(kind: EnsembleKind, n: usize, precision: Precision) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("ensemble size N must be at least 1".into()));
        }
        Ok(EnsembleSpec { kind, n, precision })
    }
}

/// One atom of ACUE(N): a set of N distinct 2N-th roots of unity.
#[derive(Debug, Clone, PartialEq)]
pub struct PointConfiguration {
    pub n: usize,
    /// Strictly increasing, each in `0..2n`; index `t` selects `e(t / 2N)`.
    pub indices: Vec<usize>,
    pub points: Vec<ComplexValue>,
    /// `|Δ(points)|² / (2N)^N`.
    pub weight: Float,
}

/// The full enumerated support of ACUE(N) at a fixed precision.
#[derive(Debug, Clone)]
pub struct AcueEnsemble {
    n: usize,
    precision: Precision,
    roots: Vec<ComplexValue>,
    configurations: Vec<PointConfiguration>,
}

impl AcueEnsemble {
    pub fn new(n: usize, precision: Precision) -> Result<Self> {
        Self::with_cap(n, precision, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(n: usize, precision: Precision, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("ensemble size N must be at least 1".into()));
        }
        if n > cap {
            return Err(Error::Capacity { n, cap });
        }
        let m = 2 * n;
        let roots: Vec<ComplexValue> = (0..m)
            .map(|k| ComplexValue::root_of_unity(precision, k as i64, m as u64))
            .collect();
        let scale = Float::with_val(precision.bits(), m).pow(n as u32);
        let configurations = subsets(m, n)
            .map(|indices| {
                let points: Vec<ComplexValue> = indices.iter().map(|&i| roots[i].clone()).collect();
                let weight = vandermonde(&points).norm_sqr() / &scale;
                PointConfiguration {
                    n,
                    indices,
                    points,
                    weight,
                }
            })
            .collect();
        Ok(AcueEnsemble {
            n,
            precision,
            roots,
            configurations,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// The 2N-th roots of unity `e(k / 2N)`, `k = 0..2N`.
    pub fn roots(&self) -> &[ComplexValue] {
        &self.roots
    }

    pub fn configurations(&self) -> &[PointConfiguration] {
        &self.configurations
    }

    pub fn into_configurations(self) -> Vec<PointConfiguration> {
        self.configurations
    }

    pub fn total_weight(&self) -> Float {
        let mut total = Float::with_val(self.precision.bits(), 0);
        for c in &self.configurations {
            total += &c.weight;
        }
        total
    }

    /// `Σ weight × observable(points)`, summed in enumeration order.
    pub fn expect<F>(&self, observable: F) -> Result<ComplexValue>
    where
        F: Fn(&[ComplexValue]) -> ComplexValue,
    {
        self.try_expect(|pts| Ok(observable(pts)))
    }

    /// As [`expect`](Self::expect) for observables that can fail; any
    /// non-finite value is reported as a pole naming the configuration.
    pub fn try_expect<F>(&self, observable: F) -> Result<ComplexValue>
    where
        F: Fn(&[ComplexValue]) -> Result<ComplexValue>,
    {
        let mut acc = ComplexValue::zero(self.precision);
        for config in &self.configurations {
            let value = observable(&config.points)?;
            if !value.is_finite() {
                return Err(Error::Pole(format!(
                    "observable is not finite on ACUE({}) configuration {:?}",
                    self.n, config.indices
                )));
            }
            acc += &value.scale(&config.weight);
        }
        Ok(acc)
    }
}

/// All C(2n, n) configurations of ACUE(n).
pub fn enumerate_acue(
    n: usize,
    precision: Precision,
    cap: usize,
) -> Result<Vec<PointConfiguration>> {
    Ok(AcueEnsemble::with_cap(n, precision, cap)?.into_configurations())
}

/// Expectation over ACUE(n) of a symmetric observable, by enumeration.
pub fn acue_expect<F>(n: usize, precision: Precision, observable: F) -> Result<ComplexValue>
where
    F: Fn(&[ComplexValue]) -> Result<ComplexValue>,
{
    AcueEnsemble::new(n, precision)?.try_expect(observable)
}

/// `det(1 - z g) = ∏ (1 - z ω_j)`.
pub fn char_poly(points: &[ComplexValue], z: &ComplexValue) -> ComplexValue {
    let one = ComplexValue::one(z.precision());
    let mut acc = one.clone();
    for w in points {
        acc *= &(&one - &(z * w));
    }
    acc
}

/// `det(1 + v g) = ∏ (1 + v ω_j)`.
pub fn det_one_plus(points: &[ComplexValue], v: &ComplexValue) -> ComplexValue {
    char_poly(points, &-v)
}

/// `det(g) = ∏ ω_j`.
pub fn det_of(points: &[ComplexValue], precision: Precision) -> ComplexValue {
    crate::numeric::complex::product(precision, points)
}

/// Strictly increasing `k`-subsets of `0..m` in lexicographic order.
fn subsets(m: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= m { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let next = {
            let mut c = out.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if c[i] < m - k + i {
                    c[i] += 1;
                    for t in i + 1..k {
                        c[t] = c[t - 1] + 1;
                    }
                    break Some(c);
                }
            }
        };
        current = next;
        Some(out)
    })
}

/// Eigenvalues of `count` Haar-random N×N unitaries.
///
/// Each unitary is `Q · diag(r_ii / |r_ii|)` from the QR factorisation of a
/// standard complex Gaussian matrix; eigenvalues come from a complex Schur
/// form. Deterministic in `rng_seed`.
pub fn sample_cue(n: usize, count: usize, rng_seed: u64) -> Vec<Vec<Complex64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    (0..count)
        .map(|_| haar_unitary_eigenvalues(n, &mut rng))
        .collect()
}

pub fn haar_unitary(n: usize, rng: &mut ChaCha8Rng) -> DMatrix<Complex64> {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let z = DMatrix::from_fn(n, n, |_, _| {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        Complex64::new(re * scale, im * scale)
    });
    let qr = z.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 {
            d / d.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

fn haar_unitary_eigenvalues(n: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let u = haar_unitary(n, rng);
    let t = u.schur().unpack().1;
    (0..n).map(|i| t[(i, i)]).collect()
}

/// Sample mean and its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    pub std_err: f64,
    pub samples: usize,
}

impl MonteCarloEstimate {
    pub fn from_values(values: &[f64]) -> Self {
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
        MonteCarloEstimate {
            mean,
            std_err: (var / n).sqrt(),
            samples: values.len(),
        }
    }

    pub fn within_sigmas(&self, exact: f64, sigmas: f64) -> bool {
        (self.mean - exact).abs() <= sigmas * self.std_err
    }
}

/// Monte Carlo estimate of `E |det(1 + G)|²` over CUE(n).
pub fn cue_abs_det_one_plus_squared(n: usize, count: usize, rng_seed: u64) -> MonteCarloEstimate {
    let values: Vec<f64> = sample_cue(n, count, rng_seed)
        .iter()
        .map(|pts| {
            pts.iter()
                .map(|w| (Complex64::new(1.0, 0.0) + w).norm_sqr())
                .product()
        })
        .collect();
    MonteCarloEstimate::from_values(&values)
}
