//! The formulas' observables, averaged by exact ACUE enumeration.

use crate::ensembles::{det_of, det_one_plus, AcueEnsemble};
use crate::error::{Error, Result};
use crate::formulas::MomentSpec;
use crate::numeric::ComplexValue;

/// `det(g)^{-K} ∏_k det(1 + v_k g)` on a configuration of eigenvalues.
pub fn moment_observable(
    k: usize,
    shifts: &[ComplexValue],
) -> impl Fn(&[ComplexValue]) -> ComplexValue + '_ {
    move |points| {
        let prec = shifts[0].precision();
        let mut acc = det_of(points, prec).powi(-(k as i64));
        for v in shifts {
            acc *= &det_one_plus(points, v);
        }
        acc
    }
}

/// `∏_j det(1 + v_j g) / det(1 + u_j g)` on a configuration of eigenvalues.
pub fn ratio_observable<'a>(
    vs: &'a [ComplexValue],
    us: &'a [ComplexValue],
) -> impl Fn(&[ComplexValue]) -> ComplexValue + 'a {
    move |points| {
        let mut acc = ComplexValue::one(vs[0].precision());
        for (v, u) in vs.iter().zip(us) {
            acc *= &(&det_one_plus(points, v) / &det_one_plus(points, u));
        }
        acc
    }
}

/// Enumeration value of the moment described by `spec`.
pub fn moment_by_enumeration(spec: &MomentSpec, cap: usize) -> Result<ComplexValue> {
    AcueEnsemble::with_cap(spec.n, spec.precision(), cap)?
        .expect(moment_observable(spec.k, &spec.shifts))
}

/// Enumeration value of the ACUE ratio expectation.
pub fn ratio_by_enumeration(
    n: usize,
    vs: &[ComplexValue],
    us: &[ComplexValue],
    cap: usize,
) -> Result<ComplexValue> {
    if vs.len() != us.len() || vs.is_empty() {
        return Err(Error::Dimension(format!(
            "|v| = {}, |u| = {}",
            vs.len(),
            us.len()
        )));
    }
    let prec = vs[0].precision().min(us[0].precision());
    AcueEnsemble::with_cap(n, prec, cap)?.expect(ratio_observable(vs, us))
}
