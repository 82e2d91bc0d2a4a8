//! Exact construction and verification of left-symmetric superalgebras on sl(m|n).

pub mod error;
pub mod json;
pub mod linalg;
pub mod lssa;
pub mod nonexist;
pub mod report;
pub mod reps;
pub mod scalar;
pub mod sl21;
pub mod slmm;
pub mod suites;
pub mod superlie;

pub use error::{Error, Result};
pub use scalar::{RatFun, Rational, Scalar};
