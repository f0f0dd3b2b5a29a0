//! Haar-random unitaries: E|det(1 + U)|^2 for CUE(N) equals N + 1.

use acue_lab::ensembles::cue_abs_det_one_plus_squared;

pub fn run_example() -> acue_lab::Result<()> {
    for n in 1..=4 {
        let est = cue_abs_det_one_plus_squared(n, 20_000, 11);
        let exact = (n + 1) as f64;
        println!(
            "N = {n}: {:.4} +/- {:.4} (exact {exact}), within 3 sigma: {}",
            est.mean,
            est.std_err,
            est.within_sigmas(exact, 3.0)
        );
    }
    Ok(())
}

fn main() -> acue_lab::Result<()> {
    run_example()
}
