use num_traits::Zero;

use super::bipoly::BiPoly;
use super::rational::Rational;
use super::unipoly::{UniPoly, Var};
use crate::error::{Error, Result};

/// The affine family `p(s,k) = p0(s) + k1 p1(s) + k2 p2(s)` with `p0` monic
/// and `deg p1, deg p2 < deg p0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInstance {
    p0: UniPoly,
    p1: UniPoly,
    p2: UniPoly,
}

impl ProblemInstance {
    pub fn p0(&self) -> &UniPoly {
        &self.p0
    }

    pub fn p1(&self) -> &UniPoly {
        &self.p1
    }

    pub fn p2(&self) -> &UniPoly {
        &self.p2
    }

    pub fn polys(&self) -> [&UniPoly; 3] {
        [&self.p0, &self.p1, &self.p2]
    }

    /// Degree of `p(s,k)`, independent of `k`.
    pub fn degree(&self) -> usize {
        self.p0.degree().expect("validated instance has nonzero p0")
    }

    /// `p(s,k)` at a rational point.
    pub fn eval_at(&self, k1: &Rational, k2: &Rational) -> UniPoly {
        &(&self.p0 + &self.p1.scale(k1)) + &self.p2.scale(k2)
    }

    /// Coefficients of `p(s,k)` in `s` (ascending) as affine polynomials in `k`.
    pub fn symbolic_coeffs(&self) -> Vec<BiPoly> {
        (0..=self.degree())
            .map(|m| BiPoly::affine(&self.p0.coeff(m), &self.p1.coeff(m), &self.p2.coeff(m)))
            .collect()
    }
}

/// Validate `(p0, p1, p2)` and scale all three by `1/lc(p0)`.
pub fn normalize_monic(p0: UniPoly, p1: UniPoly, p2: UniPoly) -> Result<ProblemInstance> {
    let [p0, p1, p2] = [p0, p1, p2].map(|p| p.with_var(Var::S));
    let Some(n) = p0.degree().filter(|&n| n > 0) else {
        return Err(Error::DegenerateInstance(
            "p0 must be a nonconstant polynomial".into(),
        ));
    };
    if p1.is_zero() || p2.is_zero() {
        return Err(Error::DegenerateInstance(
            "p1/p2 is constant (one of them is zero)".into(),
        ));
    }
    // p1 and p2 linearly dependent <=> lc(p2) p1 == lc(p1) p2
    if p1.scale(&p2.lc()) == p2.scale(&p1.lc()) {
        return Err(Error::DegenerateInstance(format!(
            "p1/p2 is constant: p1 = {p1}, p2 = {p2}"
        )));
    }
    for (name, p) in [("k1", &p1), ("k2", &p2)] {
        if p.degree().is_some_and(|d| d >= n) {
            return Err(Error::KDependentLeading(format!(
                "deg of the {name} coefficient is not below deg p0 = {n}"
            )));
        }
    }
    let inv = p0.lc().recip();
    debug_assert!(!inv.is_zero());
    Ok(ProblemInstance {
        p0: p0.scale(&inv),
        p1: p1.scale(&inv),
        p2: p2.scale(&inv),
    })
}
