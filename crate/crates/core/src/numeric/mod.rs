//! Arbitrary-precision complex scalars, dense determinants, and the
//! Vandermonde/Cauchy/confluent structures built on them.

pub mod alternant;
pub mod complex;
pub mod matrix;
pub mod poly;
pub mod precision;
pub mod structures;

pub use alternant::{alternant_ratio, Confluence};
pub use complex::{relative_error, ComplexValue};
pub use matrix::{det, ComplexMatrix};
pub use poly::{LaurentPoly, Polynomial};
pub use precision::Precision;
pub use structures::{
    cauchy_det_check, cauchy_matrix, cauchy_product, condensation_check, vandermonde,
    CondensationOrder,
};
