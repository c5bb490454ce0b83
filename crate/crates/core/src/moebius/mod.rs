//! Moebius transformations over exact or floating complex numbers.

pub mod matrix;
pub mod scalar;
pub mod word;

pub use matrix::{ElementKind, MoebiusMatrix, SpherePoint, EPS_PAR};
pub use scalar::{ComplexValue, GaussianRational, Real, FLOAT_TOL};
