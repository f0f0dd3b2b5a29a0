//! Hook Schur function averages: closed form against enumeration.

use acue_lab::ensembles::AcueEnsemble;
use acue_lab::symfunc::{hook_expectation, schur_eval, Partition};
use acue_lab::Precision;

pub fn run_example() -> acue_lab::Result<()> {
    let n = 3;
    let ensemble = AcueEnsemble::new(n, Precision::DEFAULT)?;
    println!("E[s_(a,1^b)] over ACUE({n}); nonzero only when 2N divides a + b");
    for b in 0..n {
        for a in 1..=2 * n + 1 {
            let lambda = Partition::hook(a, b)?;
            let closed = hook_expectation(n, a, b)?;
            let enumerated = ensemble.expect(|pts| schur_eval(&lambda, pts))?.to_c64();
            if closed != 0 || a + b == 2 * n - 1 {
                println!(
                    "  lambda = {:<10} closed {closed:>2}   enumerated {:+.3e}",
                    lambda.to_string(),
                    enumerated.re
                );
            }
        }
    }
    Ok(())
}

fn main() -> acue_lab::Result<()> {
    run_example()
}
