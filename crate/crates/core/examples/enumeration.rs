//! Exact enumeration of ACUE(N): configurations, weights, and an expectation.

use acue_lab::ensembles::{det_one_plus, AcueEnsemble};
use acue_lab::{ComplexValue, Precision};

pub fn run_example() -> acue_lab::Result<()> {
    let prec = Precision::DEFAULT;
    for n in 1..=5 {
        let ensemble = AcueEnsemble::new(n, prec)?;
        // E|det(1 + U)|^2, where U has eigenvalues on the 2N-th roots of unity.
        let second = ensemble.expect(|pts| {
            let d = det_one_plus(pts, &ComplexValue::one(prec));
            &d * &d.conj()
        })?;
        println!(
            "N = {n}: {:>3} configurations, total weight {:.6}, E|det(1+U)|^2 = {:.6}",
            ensemble.configurations().len(),
            ensemble.total_weight().to_f64(),
            second.to_c64().re,
        );
    }
    Ok(())
}

fn main() -> acue_lab::Result<()> {
    run_example()
}
