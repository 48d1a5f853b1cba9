//! Exact computations with weak bimonoids, weak Hopf monoids and quantum
//! groupoids in categories of graded vector spaces with a bicharacter braiding.

pub mod cauchy;
pub mod comodules;
pub mod constructions;
pub mod diagram;
pub mod error;
pub mod exact_linear;
pub mod matrix;
pub mod model;
pub mod quantum;
pub mod registry;
pub mod report;
pub mod scalar;
pub mod structures;

pub use error::{Error, Result};
pub use scalar::{Fp, Rat, Scalar};

/// Linear maps over the rationals.
pub type QMap = exact_linear::LinMap<Rat>;
/// Linear maps over a prime field.
pub type FpMap = exact_linear::LinMap<Fp>;
