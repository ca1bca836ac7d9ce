//! Problem instances from PI-controlled plants and static output feedback.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{int, normalize_monic, rat, ProblemInstance, Rational, UniPoly, Var};

/// Placement of the two gains in the PI controller.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiForm {
    /// `k1/s + k2`
    IntegralFirst,
    /// `k1 + k2/s`
    ProportionalFirst,
}

impl PiForm {
    pub fn parse(text: &str) -> Result<Self> {
        match text.replace(' ', "").as_str() {
            "k1/s+k2" => Ok(PiForm::IntegralFirst),
            "k1+k2/s" => Ok(PiForm::ProportionalFirst),
            other => Err(Error::Parse(format!(
                "unknown PI form {other:?} (expected \"k1/s+k2\" or \"k1+k2/s\")"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PiForm::IntegralFirst => "k1/s+k2",
            PiForm::ProportionalFirst => "k1+k2/s",
        }
    }
}

/// Open-loop plant `b(s)/a(s)` under a PI controller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiPlant {
    pub a: UniPoly,
    pub b: UniPoly,
    pub form: PiForm,
}

/// Closed loop `s a(s) + (controller numerator) b(s)`.
pub fn pi_frontend(plant: &PiPlant) -> Result<ProblemInstance> {
    let a = plant.a.clone().with_var(Var::S);
    let b = plant.b.clone().with_var(Var::S);
    if a.is_zero() {
        return Err(Error::DegenerateInstance("plant denominator is zero".into()));
    }
    if b.degree() > a.degree() {
        return Err(Error::KDependentLeading(
            "improper plant: deg b > deg a".into(),
        ));
    }
    let sa = a.shift(1);
    let sb = b.shift(1);
    match plant.form {
        PiForm::IntegralFirst => normalize_monic(sa, b, sb),
        PiForm::ProportionalFirst => normalize_monic(sa, sb, b),
    }
}

/// Characteristic polynomial and adjugate coefficients of a square matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharAdj {
    /// `det(sI - A)`, monic of degree `n`.
    pub charpoly: UniPoly,
    /// `adj(sI - A) = sum_r adj[r] s^r`, `r = 0..n-1`.
    pub adj: Vec<Matrix>,
}

impl CharAdj {
    /// `adj(sI - A)[i][j]` as a polynomial in `s`.
    pub fn adj_entry(&self, i: usize, j: usize) -> UniPoly {
        UniPoly::new(self.adj.iter().map(|m| m.get(i, j).clone()).collect(), Var::S)
    }
}

/// Faddeev-LeVerrier recursion: `N_{n-1} = I`,
/// `c_r = -tr(A N_r) / (n - r)`, `N_{r-1} = A N_r + c_r I`.
/// The identity `(sI - A) adj(sI - A) = det(sI - A) I` is checked
/// coefficientwise before returning.
pub fn faddeev_leverrier(a: &Matrix) -> Result<CharAdj> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "Faddeev-LeVerrier needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let id = Matrix::identity(n);
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut adj = vec![Matrix::zeros(n, n); n];
    if n == 0 {
        return Ok(CharAdj {
            charpoly: UniPoly::new(coeffs, Var::S),
            adj,
        });
    }
    let mut current = id.clone();
    for r in (0..n).rev() {
        let an = a.mul(&current)?;
        let c = -an.trace() / int((n - r) as i64);
        adj[r] = current;
        coeffs[r] = c.clone();
        current = an.add(&id.scale(&c))?;
    }
    let out = CharAdj {
        charpoly: UniPoly::new(coeffs, Var::S),
        adj,
    };
    check_adjugate_identity(a, &out)?;
    Ok(out)
}

fn check_adjugate_identity(a: &Matrix, ca: &CharAdj) -> Result<()> {
    let n = a.rows();
    let id = Matrix::identity(n);
    // coefficient of s^r in (sI - A) adj: N_{r-1} - A N_r
    for r in 0..=n {
        let upper = if r >= 1 { ca.adj[r - 1].clone() } else { Matrix::zeros(n, n) };
        let lower = if r < n { a.mul(&ca.adj[r])? } else { Matrix::zeros(n, n) };
        let lhs = upper.sub(&lower)?;
        if lhs != id.scale(&ca.charpoly.coeff(r)) {
            return Err(Error::Internal(format!(
                "adjugate identity fails at s^{r}"
            )));
        }
    }
    Ok(())
}

/// Static output feedback data with `m * p = 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SofTriple {
    pub a: Matrix,
    pub b: Matrix,
    pub c: Matrix,
}

impl SofTriple {
    pub fn new(a: Matrix, b: Matrix, c: Matrix) -> Result<Self> {
        let n = a.rows();
        if !a.is_square() || b.rows() != n || c.cols() != n {
            return Err(Error::Dimension(format!(
                "SOF shapes A {}x{}, B {}x{}, C {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols(),
                c.rows(),
                c.cols()
            )));
        }
        if b.cols() * c.rows() != 2 {
            return Err(Error::Dimension(format!(
                "SOF needs m*p = 2, got m = {}, p = {}",
                b.cols(),
                c.rows()
            )));
        }
        Ok(SofTriple { a, b, c })
    }

    /// `(m, p)`: inputs and outputs.
    pub fn orientation(&self) -> (usize, usize) {
        (self.b.cols(), self.c.rows())
    }

    /// Gain matrix `K` (m x p) holding `(k1, k2)`.
    pub fn gain(&self, k1: &Rational, k2: &Rational) -> Matrix {
        let (m, p) = self.orientation();
        let mut k = Matrix::zeros(m, p);
        if m == 1 {
            k.set(0, 0, k1.clone());
            k.set(0, 1, k2.clone());
        } else {
            k.set(0, 0, k1.clone());
            k.set(1, 0, k2.clone());
        }
        k
    }

    /// `A + B K C`
    pub fn closed_loop(&self, k1: &Rational, k2: &Rational) -> Result<Matrix> {
        let bkc = self.b.mul(&self.gain(k1, k2))?.mul(&self.c)?;
        self.a.add(&bkc)
    }
}

/// `det(sI - A - BKC)` through the rank-one identity; see [`sof_polynomials`].
pub fn sof_frontend(triple: &SofTriple) -> Result<ProblemInstance> {
    let [p0, p1, p2] = sof_polynomials(triple)?;
    normalize_monic(p0, p1, p2)
}

/// `(p0, p1, p2)` with `det(sI - A - BKC) = p0 + k1 p1 + k2 p2`, from
/// `det(M - u v^T) = det M - v^T adj(M) u` with `M = sI - A`. The result is
/// checked against a direct characteristic polynomial at fixed gains.
pub fn sof_polynomials(triple: &SofTriple) -> Result<[UniPoly; 3]> {
    let ca = faddeev_leverrier(&triple.a)?;
    let n = triple.a.rows();
    let (m, _) = triple.orientation();
    // -row^T adj(M) col as a polynomial in s
    let bilinear = |row: &Matrix, col: &Matrix| -> UniPoly {
        let mut acc = UniPoly::zero(Var::S);
        for i in 0..n {
            for j in 0..n {
                let w = row.get(0, i) * col.get(j, 0);
                if !w.is_zero() {
                    acc = &acc - &ca.adj_entry(i, j).scale(&w);
                }
            }
        }
        acc
    };
    let (p1, p2) = if m == 1 {
        let b = triple.b.col(0);
        (bilinear(&triple.c.row(0), &b), bilinear(&triple.c.row(1), &b))
    } else {
        let c = triple.c.row(0);
        (bilinear(&c, &triple.b.col(0)), bilinear(&c, &triple.b.col(1)))
    };
    let p0 = ca.charpoly.clone();
    for (k1, k2) in verification_points() {
        let direct = faddeev_leverrier(&triple.closed_loop(&k1, &k2)?)?.charpoly;
        let affine = &(&p0 + &p1.scale(&k1)) + &p2.scale(&k2);
        if direct != affine {
            return Err(Error::Internal(format!(
                "rank-one determinant check failed at k = ({k1}, {k2})"
            )));
        }
    }
    Ok([p0, p1, p2])
}

fn verification_points() -> [(Rational, Rational); 5] {
    [
        (int(1), int(2)),
        (rat(-3, 2), rat(1, 3)),
        (int(0), rat(-7, 5)),
        (rat(11, 4), int(-1)),
        (rat(-2, 9), rat(5, 7)),
    ]
}
