//! Bezoutian matrices, resultants and Hermite matrices.
//!
//! The Bezoutian of `a(u)`, `b(u)` at size `n` is the symmetric matrix `B`
//! with `(a(u) b(v) - a(v) b(u)) / (v - u) = sum_ij B[i][j] u^i v^j`
//! (0-based indices). The Hermite matrix of `p(s)` is the Bezoutian, in `w`,
//! of `A(w) = pR(w^2)` and `B(w) = w pI(w^2)`; it is positive definite
//! exactly when the monic polynomial `p` is Hurwitz stable.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{det_bareiss, SymMatrix};
use crate::poly::unipoly::split_real_imag_coeffs;
use crate::poly::{BiPoly, ProblemInstance, Rational, Ring, UniPoly};

/// Bezoutian over any exact ring from ascending coefficient slices.
///
/// With `c_ij = a_i b_j - a_j b_i`, dividing by `v - u` gives the recurrence
/// `B[i][j] = c_{i,j+1} + B[i-1][j+1]`, i.e. `B[i][j] = sum_r c_{i-r, j+1+r}`.
/// Entries beyond the natural size `max(len) - 1` vanish.
pub fn bezoutian<T: Ring>(a: &[T], b: &[T], size: usize) -> SymMatrix<T> {
    let zero = T::zero();
    let at = |v: &'_ [T], i: usize| -> T { v.get(i).unwrap_or(&zero).clone() };
    let c = |i: usize, j: usize| at(a, i) * at(b, j) - at(a, j) * at(b, i);
    let top = a.len().max(b.len());
    SymMatrix::from_upper(size, |i, j| {
        let mut acc = T::zero();
        for r in 0..=i {
            let jj = j + 1 + r;
            if jj >= top {
                break;
            }
            acc = acc + c(i - r, jj);
        }
        acc
    })
}

/// Bezoutian of two rational polynomials at an explicit size.
pub fn bezout_matrix(a: &UniPoly, b: &UniPoly, size: usize) -> Result<SymMatrix> {
    let degree = a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
    if size < degree.max(1) {
        return Err(Error::SizeTooSmall { size, degree });
    }
    Ok(bezoutian(a.coeffs(), b.coeffs(), size))
}

/// Resultant as the determinant of the Bezoutian at size `max(deg a, deg b)`.
///
/// Sign convention: for `deg a = deg b = n` this equals
/// `(-1)^(n(n+1)/2)` times the Sylvester resultant (checked in tests); only
/// the absolute value and the zero locus are relied upon elsewhere.
pub fn resultant_bezout(a: &UniPoly, b: &UniPoly) -> Result<Rational> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let size = a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
    if size == 0 {
        return Ok(Rational::one());
    }
    bezout_matrix(a, b, size)?.det()
}

/// Classical Sylvester-matrix resultant, used as an independent oracle.
pub fn resultant_sylvester(a: &UniPoly, b: &UniPoly) -> Result<Rational> {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        let other = if a.is_zero() { b } else { a };
        return Ok(if other.is_constant() {
            Rational::one()
        } else {
            Rational::zero()
        });
    };
    let size = m + n;
    if size == 0 {
        return Ok(Rational::one());
    }
    let mut rows = vec![vec![Rational::zero(); size]; size];
    for r in 0..n {
        for i in 0..=m {
            rows[r][r + i] = a.coeff(m - i);
        }
    }
    for r in 0..m {
        for i in 0..=n {
            rows[n + r][r + i] = b.coeff(n - i);
        }
    }
    det_bareiss(&rows)
}

/// Hermite matrix from the ascending coefficients of a degree-`n` polynomial
/// in `s`, over any exact ring. No monic normalization is applied here.
///
/// The Bezoutian `B_w(pR(w^2), w pI(w^2))` is conjugated by
/// `D = diag((-1)^floor(i/2))`, which rewrites it in the monomial basis of
/// `s = jw`. The result is the classical form
/// `(p(x) p(y) - p(-x) p(-y)) / (2 (x + y))`; `D` is a real congruence, so
/// definiteness and the determinant are unchanged.
pub fn hermite_from_coeffs<T: Ring>(coeffs: &[T], n: usize) -> SymMatrix<T> {
    let (re, im) = split_real_imag_coeffs(coeffs);
    let len = coeffs.len() + 1;
    let mut a = vec![T::zero(); len];
    let mut b = vec![T::zero(); len];
    for (r, c) in re.into_iter().enumerate() {
        a[2 * r] = c;
    }
    for (r, c) in im.into_iter().enumerate() {
        b[2 * r + 1] = c;
    }
    let bez = bezoutian(&a, &b, n);
    SymMatrix::from_upper(n, |i, j| {
        let x = bez.get(i, j).clone();
        if (i / 2 + j / 2) % 2 == 1 {
            -x
        } else {
            x
        }
    })
}

/// Hermite matrix `H(p)` of a nonconstant polynomial, after scaling `p` monic.
pub fn hermite_matrix(p: &UniPoly) -> Result<SymMatrix> {
    let n = match p.degree() {
        Some(n) if n > 0 => n,
        _ => return Err(Error::ConstantPolynomial),
    };
    Ok(hermite_from_coeffs(p.monic().coeffs(), n))
}

/// Index of the coefficient matrix of `k1^i k2^j` within the pencil.
const QUADRATIC_EXPONENTS: [(u32, u32); 6] = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];

/// `H(k) = sum H_ij k1^i k2^j` over `i + j <= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticMatrixPencil {
    order: usize,
    coeffs: [SymMatrix; 6],
}

impl QuadraticMatrixPencil {
    /// Split a symbolic matrix whose entries have total degree at most 2.
    pub fn from_symbolic(m: &SymMatrix<BiPoly>) -> Result<Self> {
        if m.to_rows().iter().flatten().any(|e| e.total_degree().is_some_and(|d| d > 2)) {
            return Err(Error::Internal("Hermite entry of degree > 2 in k".into()));
        }
        let coeffs = QUADRATIC_EXPONENTS.map(|e| m.map(|x| x.coeff(e)));
        Ok(QuadraticMatrixPencil {
            order: m.order(),
            coeffs,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient matrix of `k1^i1 k2^i2`; `None` when `i1 + i2 > 2`.
    pub fn coefficient(&self, i1: u32, i2: u32) -> Option<&SymMatrix> {
        QUADRATIC_EXPONENTS
            .iter()
            .position(|&e| e == (i1, i2))
            .map(|x| &self.coeffs[x])
    }

    /// Coefficient matrices in the order `H00, H10, H01, H20, H11, H02`.
    pub fn coefficients(&self) -> impl Iterator<Item = ((u32, u32), &SymMatrix)> {
        QUADRATIC_EXPONENTS.iter().copied().zip(self.coeffs.iter())
    }

    pub fn eval(&self, k1: &Rational, k2: &Rational) -> SymMatrix {
        let scalars = [
            Rational::one(),
            k1.clone(),
            k2.clone(),
            k1 * k1,
            k1 * k2,
            k2 * k2,
        ];
        SymMatrix::from_upper(self.order, |i, j| {
            self.coeffs
                .iter()
                .zip(&scalars)
                .fold(Rational::zero(), |acc, (m, s)| acc + m.get(i, j) * s)
        })
    }

    pub fn to_symbolic(&self) -> SymMatrix<BiPoly> {
        SymMatrix::from_upper(self.order, |i, j| {
            BiPoly::from_terms(
                QUADRATIC_EXPONENTS
                    .iter()
                    .zip(&self.coeffs)
                    .map(|(&e, m)| (e, m.get(i, j).clone())),
            )
        })
    }

    /// `h(k) = det H(k)` as a polynomial in `k`.
    pub fn det_poly(&self) -> Result<BiPoly> {
        self.to_symbolic().det()
    }
}

/// Parametrized Hermite matrix of `p(s,k)`.
pub fn hermite_pencil(inst: &ProblemInstance) -> Result<QuadraticMatrixPencil> {
    let sym = hermite_from_coeffs(&inst.symbolic_coeffs(), inst.degree());
    QuadraticMatrixPencil::from_symbolic(&sym)
}
