//! Scaled large-N limits of ratio averages, with finite-N values for comparison.

use acue_lab::numeric::relative_error;
use acue_lab::zeta_limits::{
    averaged_acue_limit, finite_n_average, finite_n_ratio, r_average_limit, ratio_limit_det,
    LimitKernel, ScaledShifts, DEFAULT_QUADRATURE_POINTS,
};
use acue_lab::{ComplexValue, Precision};

pub fn run_example() -> acue_lab::Result<()> {
    let prec = Precision::DEFAULT;
    let z = |re, im| ComplexValue::from_f64(prec, re, im);
    let shifts = ScaledShifts::new(
        vec![z(0.6, 0.2), z(-0.9, 0.5)],
        vec![z(0.3, -0.4), z(-0.1, 0.8)],
    )?;

    let acue = ratio_limit_det(&shifts, LimitKernel::Acue)?;
    let cue = ratio_limit_det(&shifts, LimitKernel::Cue)?;
    println!(
        "limit determinant: ACUE {:.10}  CUE {:.10}",
        acue.to_c64(),
        cue.to_c64()
    );
    for n in [10, 100, 1000] {
        let finite = finite_n_ratio(&shifts, n)?;
        println!(
            "  N = {n:>4}: rel err to ACUE limit {:.2e}",
            relative_error(&finite, &acue)
        );
    }

    let contour = averaged_acue_limit(&shifts, DEFAULT_QUADRATURE_POINTS)?;
    let rotation = r_average_limit(&shifts, DEFAULT_QUADRATURE_POINTS)?;
    let finite = finite_n_average(&shifts, 200, 64)?;
    println!(
        "averaged limit {:.10} (rotation average differs by {:.1e})",
        contour.to_c64(),
        relative_error(&rotation, &contour)
    );
    println!(
        "N = 200 rotation average differs by {:.1e}",
        relative_error(&finite, &contour)
    );
    Ok(())
}

fn main() -> acue_lab::Result<()> {
    run_example()
}
