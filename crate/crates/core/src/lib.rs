//! Moments and ratios of characteristic polynomials for the alternative
//! circular unitary ensemble ACUE(N) and for CUE(N).

pub mod cli;
pub mod ensembles;
pub mod error;
pub mod formulas;
pub mod numeric;
pub mod report;
pub mod symfunc;
pub mod verify;
pub mod zeta_limits;

pub use error::{Error, Result};
pub use numeric::{ComplexMatrix, ComplexValue, Precision};
pub use report::EvalReport;
