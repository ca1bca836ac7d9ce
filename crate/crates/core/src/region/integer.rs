//! Integer fast path for grid classification.
//!
//! At `k = (a/d, b/d)` with `d > 0`, the tests are run on `d L p(s,k)`,
//! `d^2 L_H H(k)` and `d L_C C(k)` where the `L`s clear all coefficient
//! denominators once. Positive scaling preserves Routh signs and leading
//! principal minor signs, so the results coincide with the rational
//! reference (`certify::classify_point`) while avoiding gcd normalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bezout::QuadraticMatrixPencil;
use crate::certify::Stability;
use crate::curve::AffinePencil;
use crate::linalg::SymMatrix;
use crate::poly::rational::denominator_lcm;
use crate::poly::{ProblemInstance, Rational};

type IntMatrix = Vec<Vec<BigInt>>;

fn scaled_matrix(m: &SymMatrix, l: &BigInt) -> IntMatrix {
    let l = Rational::from_integer(l.clone());
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| (x * &l).to_integer()).collect())
        .collect()
}

fn matrices_lcm<'a>(ms: impl IntoIterator<Item = &'a SymMatrix>) -> BigInt {
    let entries: Vec<Rational> = ms.into_iter().flat_map(|m| m.to_rows().concat()).collect();
    denominator_lcm(&entries)
}

/// Precomputed integer data of `p`, `H` and optionally `C`.
#[derive(Debug, Clone)]
pub struct IntegerClassifier {
    /// Descending integer coefficients of `L p0`, `L p1`, `L p2`, padded to
    /// `deg p0 + 1`.
    p: [Vec<BigInt>; 3],
    /// `L_H H_{ij}` in the order 00, 10, 01, 20, 11, 02.
    h: Vec<IntMatrix>,
    c: Option<IntegerPencil>,
}

/// `L (F0, F1, F2)` of an affine pencil.
#[derive(Debug, Clone)]
pub struct IntegerPencil {
    f: [IntMatrix; 3],
}

impl IntegerPencil {
    pub fn new(c: &AffinePencil) -> Self {
        let lc = matrices_lcm([&c.f0, &c.f1, &c.f2]);
        IntegerPencil {
            f: [scaled_matrix(&c.f0, &lc), scaled_matrix(&c.f1, &lc), scaled_matrix(&c.f2, &lc)],
        }
    }

    /// `C(k) > 0`
    pub fn is_positive_definite(&self, k1: &Rational, k2: &Rational) -> bool {
        let (d, a, b) = common_denominator(k1, k2);
        self.pd_scaled(&d, &a, &b)
    }

    fn pd_scaled(&self, d: &BigInt, a: &BigInt, b: &BigInt) -> bool {
        leading_minors_positive(combine(&self.f, &[d.clone(), a.clone(), b.clone()]))
    }
}

/// `(d, a, b)` with `k = (a/d, b/d)`, `d > 0`.
fn common_denominator(k1: &Rational, k2: &Rational) -> (BigInt, BigInt, BigInt) {
    let d = k1.denom().lcm(k2.denom());
    let a = k1.numer() * (&d / k1.denom());
    let b = k2.numer() * (&d / k2.denom());
    (d, a, b)
}

impl IntegerClassifier {
    pub fn new(inst: &ProblemInstance, h: &QuadraticMatrixPencil, c: Option<&AffinePencil>) -> Self {
        let n = inst.degree();
        let all: Vec<Rational> = inst.polys().iter().flat_map(|p| p.coeffs().to_vec()).collect();
        let l = Rational::from_integer(denominator_lcm(&all));
        let desc = |i: usize| -> Vec<BigInt> {
            let q = inst.polys()[i];
            (0..=n).rev().map(|d| (q.coeff(d) * &l).to_integer()).collect()
        };
        let lh = matrices_lcm(h.coefficients().map(|(_, m)| m));
        let mut out = IntegerClassifier {
            p: [desc(0), desc(1), desc(2)],
            h: h.coefficients().map(|(_, m)| scaled_matrix(m, &lh)).collect(),
            c: None,
        };
        out.set_certificate(c);
        out
    }

    pub fn set_certificate(&mut self, c: Option<&AffinePencil>) {
        self.c = c.map(IntegerPencil::new);
    }

    /// `(stability, H(k) > 0, C(k) > 0)` at a rational point.
    pub fn classify(&self, k1: &Rational, k2: &Rational) -> (Stability, bool, Option<bool>) {
        let (d, a, b) = common_denominator(k1, k2);
        let poly: Vec<BigInt> = (0..self.p[0].len())
            .map(|i| &d * &self.p[0][i] + &a * &self.p[1][i] + &b * &self.p[2][i])
            .collect();
        let stability = routh_integer(&poly);

        let weights = [&d * &d, &d * &a, &d * &b, &a * &a, &a * &b, &b * &b];
        let h_pd = leading_minors_positive(combine(&self.h, &weights));

        let c_pd = self.c.as_ref().map(|c| c.pd_scaled(&d, &a, &b));
        (stability, h_pd, c_pd)
    }
}

fn combine(ms: &[IntMatrix], w: &[BigInt]) -> IntMatrix {
    let n = ms[0].len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    ms.iter()
                        .zip(w)
                        .filter(|(m, _)| !m[i][j].is_zero())
                        .fold(BigInt::zero(), |acc, (m, w)| acc + w * &m[i][j])
                })
                .collect()
        })
        .collect()
}

/// Routh test on descending integer coefficients with a positive leading
/// coefficient. Each new row is `|pivot|` times the true row divided by its
/// content, so first-column signs are exact.
pub fn routh_integer(desc: &[BigInt]) -> Stability {
    debug_assert!(desc[0].is_positive());
    let n = desc.len() - 1;
    let width = n / 2 + 1;
    let row = |start: usize| -> Vec<BigInt> {
        (0..width)
            .map(|j| desc.get(start + 2 * j).cloned().unwrap_or_else(BigInt::zero))
            .collect()
    };
    let mut prev = row(0);
    let mut cur = row(1);
    let mut column = vec![prev[0].clone(), cur[0].clone()];
    let zero = BigInt::zero();
    for _ in 2..=n {
        if cur[0].is_zero() {
            return Stability::Boundary;
        }
        let sign = if cur[0].is_negative() { -BigInt::one() } else { BigInt::one() };
        let mut next: Vec<BigInt> = (0..width)
            .map(|j| {
                let a = prev.get(j + 1).unwrap_or(&zero);
                let b = cur.get(j + 1).unwrap_or(&zero);
                &sign * (&cur[0] * a - &prev[0] * b)
            })
            .collect();
        let g = next.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if !g.is_zero() && !g.is_one() {
            next.iter_mut().for_each(|x| *x /= &g);
        }
        column.push(next[0].clone());
        prev = std::mem::replace(&mut cur, next);
    }
    if column.iter().any(Zero::is_zero) {
        Stability::Boundary
    } else if column.iter().all(Signed::is_positive) {
        Stability::Stable
    } else {
        Stability::Unstable
    }
}

/// Sylvester's criterion by integer Bareiss elimination without pivoting.
pub fn leading_minors_positive(mut a: IntMatrix) -> bool {
    let n = a.len();
    let mut prev = BigInt::one();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    true
}
