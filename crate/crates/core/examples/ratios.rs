//! Ratio averages: the one-ratio kernel, the J x J determinant, and enumeration.

use acue_lab::ensembles::DEFAULT_ENUMERATION_CAP;
use acue_lab::formulas::{
    acue_ratio, bos_compose, cue_ratio, one_ratio_acue, ratio_by_enumeration,
};
use acue_lab::{ComplexValue, Precision};

pub fn run_example() -> acue_lab::Result<()> {
    let prec = Precision::DEFAULT;
    let z = |re, im| ComplexValue::from_f64(prec, re, im);

    let (v, u) = (z(0.5, 0.0), z(-1.0 / 3.0, 0.25));
    println!("N = 3, J = 1: {:.8}", one_ratio_acue(3, &v, &u)?.to_c64());

    let vs = [z(0.5, 0.0), z(2.0, 0.0)];
    let us = [z(-1.0 / 3.0, 0.25), z(0.0, 1.6)];
    for n in 1..=3 {
        let det = acue_ratio(n, &vs, &us)?;
        let composed = bos_compose(n, &vs, &us)?;
        let enumerated = ratio_by_enumeration(n, &vs, &us, DEFAULT_ENUMERATION_CAP)?;
        println!(
            "N = {n}, J = 2: ACUE {:.8}  composed identical: {}  enumeration {:.8}  CUE {:.8}",
            det.to_c64(),
            det == composed,
            enumerated.to_c64(),
            cue_ratio(n, &vs, &us)?.to_c64(),
        );
    }
    Ok(())
}

fn main() -> acue_lab::Result<()> {
    run_example()
}
