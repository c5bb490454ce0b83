//! Two-parabolic Moebius groups `G = <S, T>` with `S = [[1, 0], [1, 1]]` and
//! `T = [[1, 2 lambda], [0, 1]]`.
//!
//! The crate covers exact and floating Moebius algebra, the parameter map
//! `f(lambda) = -2 lambda^2`, classification of `lambda` against the named
//! regions of the parameter plane, certificates for parabolic dust and
//! non-free groups, and plane-curve generation with CSV/JSON/SVG export.

pub mod cli;
pub mod curves;
pub mod dynamics;
pub mod error;
pub mod group2p;
pub mod literal;
pub mod moebius;
pub mod regions;

pub use error::{Error, Result};
pub use moebius::{ComplexValue, MoebiusMatrix, Real, SpherePoint};
