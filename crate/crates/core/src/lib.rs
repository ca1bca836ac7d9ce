//! Exact analysis of two-parameter stability regions.
//!
//! Given `p(s,k) = p0(s) + k1 p1(s) + k2 p2(s)`, the crate builds the
//! parametrized Hermite matrix `H(k)`, splits the boundary curve
//! `det H(k) = 0` into a line `l(k) = 0` and a rational curve represented
//! by an affine symmetric pencil `G(k)`, assembles `C(k) = diag(l, G)` and,
//! when `C` is positive definite at a stable point, certifies an LMI
//! description of that stability component. Every symbolic step runs in
//! exact rational arithmetic and is cross-checked against a Routh oracle.

pub mod app;
pub mod bezout;
pub mod certify;
pub mod curve;
pub mod error;
pub mod frontends;
pub mod linalg;
pub mod poly;
pub mod region;

pub use error::{Error, Result};
