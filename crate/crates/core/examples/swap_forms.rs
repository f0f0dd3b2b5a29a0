//! The two-ratio swap formulas and the substitution that links them to ratios.

use acue_lab::formulas::{acue_ratio, swap2_acue, swap2_cue};
use acue_lab::numeric::relative_error;
use acue_lab::{ComplexValue, Precision};

pub fn run_example() -> acue_lab::Result<()> {
    let prec = Precision::DEFAULT;
    let z = |re, im| ComplexValue::from_f64(prec, re, im);
    let (alpha, beta, gamma, delta) = (z(0.4, 0.3), z(-0.7, 0.2), z(0.1, -0.5), z(0.3, 0.6));

    for n in 1..=4 {
        let swap = swap2_acue(n, &alpha, &beta, &gamma, &delta)?;
        let minus_one = z(-1.0, 0.0);
        let vs = [-&alpha, &minus_one / &beta];
        let us = [-&gamma, &minus_one / &delta];
        let via_ratio = &(&beta.powi(n as i64) / &delta.powi(n as i64)) * &acue_ratio(n, &vs, &us)?;
        println!(
            "N = {n}: ACUE swap {:.8}  via ratio rel err {:.1e}  CUE swap {:.8}",
            swap.to_c64(),
            relative_error(&swap, &via_ratio),
            swap2_cue(n, &alpha, &beta, &gamma, &delta)?.to_c64(),
        );
    }
    Ok(())
}

fn main() -> acue_lab::Result<()> {
    run_example()
}
