//! Cauchy determinants and the confluent limit of a polynomial alternant.

use acue_lab::numeric::{cauchy_det_check, condensation_check, CondensationOrder, Polynomial};
use acue_lab::{ComplexValue, Precision};

pub fn run_example() -> acue_lab::Result<()> {
    let prec = Precision::DEFAULT;
    let z = |re, im| ComplexValue::from_f64(prec, re, im);

    let us = [z(0.3, 0.1), z(-0.8, 0.4), z(1.2, -0.6)];
    let vs = [z(0.5, 0.9), z(-0.2, -0.3), z(0.7, 0.0)];
    let cauchy = cauchy_det_check(&us, &vs)?;
    println!(
        "Cauchy 3x3: det {:.8}, rel err {:.1e}",
        cauchy.value.to_c64(),
        cauchy.rel_err
    );

    let poly =
        |coeffs: &[(f64, f64)]| Polynomial::new(coeffs.iter().map(|&(re, im)| z(re, im)).collect());
    let fs = [
        poly(&[(1.0, 0.0), (2.0, 0.0), (0.0, 1.0)]),
        poly(&[(0.0, 0.0), (1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]),
        poly(&[(3.0, 0.0), (0.0, 0.0), (-1.0, 0.5)]),
    ];
    let report = condensation_check(
        &fs,
        2,
        &z(0.4, -0.2),
        &[z(-1.1, 0.3)],
        CondensationOrder::Leading,
    )?;
    println!("two rows merged at a = 0.4 - 0.2i:");
    for step in &report.ladder {
        println!("  eps = {:.0e}: rel err {:.2e}", step.eps, step.rel_err);
    }
    println!("extrapolated rel err {:.2e}", report.rel_err);
    Ok(())
}

fn main() -> acue_lab::Result<()> {
    run_example()
}
