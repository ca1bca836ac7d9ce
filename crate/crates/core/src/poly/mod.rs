//! Exact rational arithmetic: scalars, univariate polynomials in `s`/`w`/`t`,
//! bivariate polynomials in the gains `(k1, k2)`, and the problem instance.

pub mod bipoly;
pub mod instance;
pub mod rational;
pub mod ring;
pub mod unipoly;

pub use bipoly::BiPoly;
pub use instance::{normalize_monic, ProblemInstance};
pub use rational::{int, parse_rational, rat, Rational};
pub use ring::Ring;
pub use unipoly::{UniPoly, Var};
