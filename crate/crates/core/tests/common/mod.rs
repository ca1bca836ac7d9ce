//! Helpers and independent oracles shared by the integration tests.
//!
//! Nothing here calls the library's own determinant, Routh or Bezoutian
//! code: determinants use cofactor expansion or plain Gaussian elimination,
//! stability uses Hurwitz minors, and resultants use the Sylvester matrix.
#![allow(dead_code, clippy::needless_range_loop)]

use std::path::PathBuf;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use stabreg::app::{parse_instance, InstanceFile};
use stabreg::linalg::SymMatrix;
use stabreg::poly::{int, rat, BiPoly, ProblemInstance, Rational, UniPoly, Var};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

pub fn load(name: &str) -> (InstanceFile, ProblemInstance) {
    parse_instance(&fixture_path(name)).expect("fixture parses")
}

pub fn s(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c, Var::S)
}

pub fn t(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c, Var::T)
}

/// `c0 + c1 k1 + c2 k2` with integer coefficients.
pub fn aff(c0: i64, c1: i64, c2: i64) -> BiPoly {
    BiPoly::affine(&int(c0), &int(c1), &int(c2))
}

pub fn sym_bi(rows: Vec<Vec<BiPoly>>) -> SymMatrix<BiPoly> {
    SymMatrix::from_rows(rows).expect("symmetric")
}

// ---------------------------------------------------------------- oracles

/// Laplace expansion along the first row.
pub fn det_cofactor(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    match n {
        0 => Rational::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = Rational::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Rational>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * det_cofactor(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Gaussian elimination over the rationals with row swaps.
pub fn det_gauss(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= &a[k][k];
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let v = &a[k][j] * &f;
                a[i][j] -= v;
            }
        }
    }
    det
}

/// Sylvester's criterion with cofactor minors.
pub fn pd_by_minors(m: &[Vec<Rational>]) -> bool {
    (1..=m.len()).all(|k| {
        let lead: Vec<Vec<Rational>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        det_cofactor(&lead).is_positive()
    })
}

/// Hurwitz criterion: positive leading coefficient and positive leading
/// minors of the Hurwitz matrix.
pub fn hurwitz_stable(p: &UniPoly) -> bool {
    let n = p.degree().expect("nonzero");
    let sign = if p.lc().is_positive() { int(1) } else { int(-1) };
    let c = |k: i64| -> Rational {
        if k < 0 || k > n as i64 {
            Rational::zero()
        } else {
            p.coeff(n - k as usize) * &sign
        }
    };
    let h: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| c(2 * j as i64 - i as i64 + 1)).collect())
        .collect();
    (1..=n).all(|k| {
        let lead: Vec<Vec<Rational>> = h[..k].iter().map(|r| r[..k].to_vec()).collect();
        det_gauss(&lead).is_positive()
    })
}

/// Resultant as the determinant of the Sylvester matrix, with the usual
/// conventions for constants.
pub fn sylvester_oracle(a: &UniPoly, b: &UniPoly) -> Rational {
    let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
    let size = m + n;
    if size == 0 {
        return Rational::one();
    }
    let mut rows = Vec::with_capacity(size);
    for r in 0..n {
        let mut row = vec![Rational::zero(); size];
        for i in 0..=m {
            row[r + i] = a.coeff(m - i);
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![Rational::zero(); size];
        for i in 0..=n {
            row[r + i] = b.coeff(n - i);
        }
        rows.push(row);
    }
    det_gauss(&rows)
}

/// Classical Hermite form of a monic `p`: the coefficients `H[i][j]` of
/// `(p(x) p(y) - p(-x) p(-y)) / (2 (x + y)) = sum H[i][j] x^i y^j`.
/// The numerator is `2 sum c_a c_b x^a y^b` over odd `a + b`; multiplying by
/// `x + y` gives `H[a-1][b] + H[a][b-1] = c_a c_b [a + b odd]`, solved row by row.
pub fn hermite_classical(p: &UniPoly) -> Vec<Vec<Rational>> {
    let p = p.monic();
    let n = p.degree().expect("nonconstant");
    let c = |i: usize| p.coeff(i);
    let mut h = vec![vec![Rational::zero(); n]; n];
    for a in 0..n {
        for b in 1..=n {
            let mut v = if (a + b) % 2 == 1 { c(a) * c(b) } else { Rational::zero() };
            if a > 0 && b < n {
                v -= &h[a - 1][b];
            }
            h[a][b - 1] = v;
        }
    }
    h
}

/// `p(i w)` as `(re, im)`.
pub fn eval_imag_axis(p: &UniPoly, w: &Rational) -> (Rational, Rational) {
    let (mut re, mut im) = (Rational::zero(), Rational::zero());
    let mut pow = Rational::one();
    for (k, c) in p.coeffs().iter().enumerate() {
        let v = c * &pow;
        match k % 4 {
            0 => re += v,
            1 => im += v,
            2 => re -= v,
            _ => im -= v,
        }
        pow *= w;
    }
    (re, im)
}

/// `sigma_i sigma_j a[pi i][pi j] == b[i][j]` for some permutation `pi` and
/// signs `sigma`; returns `(pi, sigma)`.
pub fn signed_permutation_congruence(
    a: &SymMatrix<BiPoly>,
    b: &SymMatrix<BiPoly>,
) -> Option<(Vec<usize>, Vec<bool>)> {
    let n = a.order();
    if b.order() != n {
        return None;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        for mask in 0..(1u32 << n) {
            let neg: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            let ok = (0..n).all(|i| {
                (0..n).all(|j| {
                    let x = a.get(perm[i], perm[j]).clone();
                    let x = if neg[i] != neg[j] { -x } else { x };
                    &x == b.get(i, j)
                })
            });
            if ok {
                return Some((perm, neg));
            }
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

// ------------------------------------------------------------- generators

pub fn random_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn random_nonzero_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    loop {
        let r = random_rational(rng, num, den);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random polynomial of exact degree `deg`; monic when requested.
pub fn random_poly(rng: &mut ChaCha8Rng, deg: usize, monic: bool, var: Var) -> UniPoly {
    let mut c: Vec<Rational> = (0..deg).map(|_| random_rational(rng, 9, 4)).collect();
    c.push(if monic { int(1) } else { random_nonzero_rational(rng, 9, 4) });
    UniPoly::new(c, var)
}

/// Polynomial of degree `deg` (possibly zero) with `deg + 1` random
/// coefficients, leading one possibly zero.
pub fn random_poly_upto(rng: &mut ChaCha8Rng, deg: usize, var: Var) -> UniPoly {
    UniPoly::new((0..=deg).map(|_| random_rational(rng, 9, 4)).collect(), var)
}

/// Monic polynomial with known stability: a product of factors `s + a` and
/// `s^2 + b s + c`. Returns the polynomial and whether every root lies in
/// the open left half-plane.
pub fn random_factored(rng: &mut ChaCha8Rng, deg: usize) -> (UniPoly, bool) {
    let mut p = UniPoly::constant(int(1), Var::S);
    let mut stable = true;
    let mut left = deg;
    while left > 0 {
        if left >= 2 && rng.gen_bool(0.5) {
            let b = random_rational(rng, 6, 3);
            let c = random_rational(rng, 6, 3);
            stable &= b.is_positive() && c.is_positive();
            p = &p * &UniPoly::new(vec![c, b, int(1)], Var::S);
            left -= 2;
        } else {
            let a = random_rational(rng, 6, 3);
            stable &= a.is_positive();
            p = &p * &UniPoly::new(vec![a, int(1)], Var::S);
            left -= 1;
        }
    }
    (p, stable)
}
