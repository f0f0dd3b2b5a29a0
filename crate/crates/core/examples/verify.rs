//! Running the built-in self-checks programmatically.

use acue_lab::verify::{run_suites, Suite, VerifyConfig};

pub fn run_example() -> acue_lab::Result<()> {
    let config = VerifyConfig {
        n_max: 2,
        trials: 3,
        ..VerifyConfig::default()
    };
    let suites = [
        Suite::Normalization,
        Suite::Hooks,
        Suite::Ratios,
        Suite::Swap,
    ];
    let report = run_suites(&config, &suites)?;
    for suite in &report.suites {
        println!(
            "{:<14} {:>4} checks  max rel err {:.2e}  {}",
            suite.suite.to_string(),
            suite.checks,
            suite.max_rel_err,
            if suite.passed { "ok" } else { "FAILED" }
        );
    }
    println!("all passed: {}", report.passed);
    Ok(())
}

fn main() -> acue_lab::Result<()> {
    run_example()
}
