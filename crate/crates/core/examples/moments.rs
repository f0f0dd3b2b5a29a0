//! Shifted moments for ACUE and CUE, and where the two stop agreeing.

use acue_lab::ensembles::DEFAULT_ENUMERATION_CAP;
use acue_lab::formulas::{acue_moment, cue_moment, moment_by_enumeration, tao_scan, MomentSpec};
use acue_lab::{ComplexValue, Precision};

pub fn run_example() -> acue_lab::Result<()> {
    let prec = Precision::DEFAULT;
    let shifts: Vec<ComplexValue> = [(0.5, 0.0), (-0.3, 0.25), (2.0, 0.0), (0.0, 0.6)]
        .iter()
        .map(|&(re, im)| ComplexValue::from_f64(prec, re, im))
        .collect();

    for n in [1, 2, 3] {
        let spec = MomentSpec::new(n, 2, 2, shifts.clone())?;
        let acue = acue_moment(&spec)?;
        let cue = cue_moment(&spec)?;
        let enumerated = moment_by_enumeration(&spec, DEFAULT_ENUMERATION_CAP)?;
        println!(
            "N = {n}, K = L = 2: ACUE {:.6}  CUE {:.6}  enumeration {:.6}",
            acue.to_c64(),
            cue.to_c64(),
            enumerated.to_c64()
        );
    }

    let scan = tao_scan(2, 4, 4, 3, 7, prec)?;
    println!("\nagreement grid for N = 2 (x = formulas agree):");
    for k in 1..=4 {
        let row: String = (1..=4)
            .map(|l| {
                let cell = scan.cells.iter().find(|c| c.k == k && c.l == l).unwrap();
                if cell.agree {
                    " x"
                } else {
                    " ."
                }
            })
            .collect();
        println!("  K = {k}:{row}");
    }
    println!(
        "matches K, L <= N prediction: {}",
        scan.matches_prediction()
    );
    Ok(())
}

fn main() -> acue_lab::Result<()> {
    run_example()
}
