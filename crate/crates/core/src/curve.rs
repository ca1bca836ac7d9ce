//! Boundary curve decomposition `det H(k) = l(k) g(k)^2`.
//!
//! The line `l(k) = p(0,k)` collects the roots at `s = 0`; the remaining
//! component is the rational curve `k(t) = (q1(t), q2(t)) / q0(t)` with
//! `t = w^2`, implicitized by the Bezoutian pencil
//! `G(k) = B_t(q1 - k1 q0, q2 - k2 q0)`, which is affine in `k` because
//! `B_t(q0, q0) = 0`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bezout::{bezoutian, QuadraticMatrixPencil};
use crate::error::{Error, Result};
use crate::linalg::SymMatrix;
use crate::poly::rational::denominator_lcm;
use crate::poly::unipoly::content_of;
use crate::poly::{BiPoly, ProblemInstance, Rational, UniPoly, Var};

/// `c0 + c1 k1 + c2 k2`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineScalar {
    pub c0: Rational,
    pub c1: Rational,
    pub c2: Rational,
}

impl AffineScalar {
    pub fn new(c0: Rational, c1: Rational, c2: Rational) -> Self {
        AffineScalar { c0, c1, c2 }
    }

    pub fn eval(&self, k1: &Rational, k2: &Rational) -> Rational {
        &self.c0 + &self.c1 * k1 + &self.c2 * k2
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero() && self.c2.is_zero()
    }

    /// True when `l` does not depend on `k`.
    pub fn is_constant(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }

    pub fn neg(&self) -> Self {
        AffineScalar::new(-&self.c0, -&self.c1, -&self.c2)
    }

    pub fn to_bipoly(&self) -> BiPoly {
        BiPoly::affine(&self.c0, &self.c1, &self.c2)
    }
}

/// `F0 + k1 F1 + k2 F2` with symmetric `Fi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffinePencil {
    pub f0: SymMatrix,
    pub f1: SymMatrix,
    pub f2: SymMatrix,
}

impl AffinePencil {
    pub fn new(f0: SymMatrix, f1: SymMatrix, f2: SymMatrix) -> Result<Self> {
        if f0.order() != f1.order() || f0.order() != f2.order() {
            return Err(Error::Dimension("pencil matrices differ in order".into()));
        }
        Ok(AffinePencil { f0, f1, f2 })
    }

    /// Split a symbolic matrix; every entry must have total degree <= 1.
    pub fn from_symbolic(m: &SymMatrix<BiPoly>) -> Result<Self> {
        let rows = m.to_rows();
        if rows.iter().flatten().any(|e| e.total_degree().is_some_and(|d| d > 1)) {
            return Err(Error::NonAffinePencil);
        }
        Ok(AffinePencil {
            f0: m.map(|x| x.coeff((0, 0))),
            f1: m.map(|x| x.coeff((1, 0))),
            f2: m.map(|x| x.coeff((0, 1))),
        })
    }

    pub fn order(&self) -> usize {
        self.f0.order()
    }

    pub fn eval(&self, k1: &Rational, k2: &Rational) -> SymMatrix {
        SymMatrix::from_upper(self.order(), |i, j| {
            self.f0.get(i, j) + self.f1.get(i, j) * k1 + self.f2.get(i, j) * k2
        })
    }

    pub fn entry(&self, i: usize, j: usize) -> AffineScalar {
        AffineScalar::new(
            self.f0.get(i, j).clone(),
            self.f1.get(i, j).clone(),
            self.f2.get(i, j).clone(),
        )
    }

    pub fn neg(&self) -> Self {
        AffinePencil {
            f0: self.f0.neg(),
            f1: self.f1.neg(),
            f2: self.f2.neg(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        AffinePencil {
            f0: self.f0.scale(c),
            f1: self.f1.scale(c),
            f2: self.f2.scale(c),
        }
    }

    pub fn to_symbolic(&self) -> SymMatrix<BiPoly> {
        SymMatrix::from_upper(self.order(), |i, j| self.entry(i, j).to_bipoly())
    }

    pub fn det_poly(&self) -> Result<BiPoly> {
        self.to_symbolic().det()
    }

    /// `diag(l, self)` with a 1x1 leading block.
    pub fn with_leading_scalar(&self, l: &AffineScalar) -> Self {
        let one = |c: &Rational| SymMatrix::from_upper(1, |_, _| c.clone());
        let (a, b, c) = (one(&l.c0), one(&l.c1), one(&l.c2));
        AffinePencil {
            f0: SymMatrix::block_diag(&[&a, &self.f0]),
            f1: SymMatrix::block_diag(&[&b, &self.f1]),
            f2: SymMatrix::block_diag(&[&c, &self.f2]),
        }
    }
}

/// Normalized rational parametrization of the curve component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parametrization {
    pub q0: UniPoly,
    pub q1: UniPoly,
    pub q2: UniPoly,
    /// Positive multiplier applied to the raw triple to reach coprime
    /// integer coefficients.
    pub scale: Rational,
}

impl Parametrization {
    /// Largest degree among `q0, q1, q2`: the order of `G`.
    pub fn pencil_order(&self) -> usize {
        [&self.q0, &self.q1, &self.q2]
            .iter()
            .filter_map(|q| q.degree())
            .max()
            .unwrap_or(0)
    }

    /// `k(t)`; `None` at poles (`q0(t) = 0`).
    pub fn point(&self, t: &Rational) -> Option<(Rational, Rational)> {
        let d = self.q0.eval(t);
        if d.is_zero() {
            return None;
        }
        Some((self.q1.eval(t) / &d, self.q2.eval(t) / &d))
    }
}

/// Everything known about the boundary curve of one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveData {
    pub param: Parametrization,
    pub line: AffineScalar,
    pub g: AffinePencil,
}

impl CurveData {
    pub fn compute(inst: &ProblemInstance) -> Result<Self> {
        let param = rational_parametrization(inst)?;
        let g = curve_pencil(&param.q0, &param.q1, &param.q2)?;
        Ok(CurveData {
            line: boundary_line(inst),
            param,
            g,
        })
    }
}

/// `l(k) = p0(0) + k1 p1(0) + k2 p2(0)`, scaled by the least positive integer
/// that clears its denominators.
pub fn boundary_line(inst: &ProblemInstance) -> AffineScalar {
    let c: Vec<Rational> = inst.polys().iter().map(|p| p.coeff(0)).collect();
    let m = Rational::from_integer(denominator_lcm(&c));
    AffineScalar::new(&c[0] * &m, &c[1] * &m, &c[2] * &m)
}

/// Solve `[p1R p2R; p1I p2I] k = -[p0R; p0I]` by Cramer's rule:
/// `q0 = p1I p2R - p1R p2I`, `q1 = p2I p0R - p2R p0I`,
/// `q2 = p1R p0I - p1I p0R`, then scale the triple to coprime integers.
pub fn rational_parametrization(inst: &ProblemInstance) -> Result<Parametrization> {
    let (r0, i0) = inst.p0().split_real_imag();
    let (r1, i1) = inst.p1().split_real_imag();
    let (r2, i2) = inst.p2().split_real_imag();
    let q0 = &(&i1 * &r2) - &(&r1 * &i2);
    let q1 = &(&i2 * &r0) - &(&r2 * &i0);
    let q2 = &(&r1 * &i0) - &(&i1 * &r0);
    if q0.is_zero() {
        return Err(Error::DegenerateInstance(
            "parametrization denominator q0 vanishes identically".into(),
        ));
    }
    let all: Vec<Rational> = [&q0, &q1, &q2]
        .iter()
        .flat_map(|q| q.coeffs().iter().cloned())
        .collect();
    let scale = content_of(&all).recip();
    let [q0, q1, q2] = [q0, q1, q2].map(|q| q.scale(&scale).with_var(Var::T));
    Ok(Parametrization { q0, q1, q2, scale })
}

/// `G(k) = B_t(q1 - k1 q0, q2 - k2 q0)` at size `max deg q`, split into
/// `(F0, F1, F2)`.
pub fn curve_pencil(q0: &UniPoly, q1: &UniPoly, q2: &UniPoly) -> Result<AffinePencil> {
    let size = [q0, q1, q2].iter().filter_map(|q| q.degree()).max().unwrap_or(0);
    if size == 0 {
        return Err(Error::DegenerateInstance(
            "parametrization is constant; the curve component is empty".into(),
        ));
    }
    let len = size + 1;
    let lift = |q: &UniPoly, k: BiPoly| -> Vec<BiPoly> {
        (0..len)
            .map(|i| {
                let c = q.coeff(i);
                &BiPoly::constant(c) - &(&k * &BiPoly::constant(q0.coeff(i)))
            })
            .collect()
    };
    let a = lift(q1, BiPoly::k1());
    let b = lift(q2, BiPoly::k2());
    AffinePencil::from_symbolic(&bezoutian(&a, &b, size))
}

/// Witness of `alpha det H(k) = beta l(k) (det G(k))^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    /// Positive integer.
    pub alpha: BigInt,
    pub beta: BigInt,
    pub h: BiPoly,
    pub det_g: BiPoly,
}

pub fn verify_factorization(
    h: &QuadraticMatrixPencil,
    l: &AffineScalar,
    g: &AffinePencil,
) -> Result<FactorizationReport> {
    let hp = h.det_poly()?;
    let dg = g.det_poly()?;
    let rhs = &l.to_bipoly() * &(&dg * &dg);
    let ratio = match (hp.is_zero(), rhs.is_zero()) {
        (true, true) => Rational::one(),
        (false, false) => {
            let (e, c) = hp.terms().next_back().expect("nonzero");
            let r = rhs.coeff(*e);
            if r.is_zero() {
                return Err(Error::FactorizationMismatch(format!(
                    "l(k) det G(k)^2 lacks the monomial {e:?} of det H(k)"
                )));
            }
            c / r
        }
        _ => {
            return Err(Error::FactorizationMismatch(
                "exactly one of det H and l det G^2 vanishes".into(),
            ))
        }
    };
    if hp != rhs.scale(&ratio) {
        return Err(Error::FactorizationMismatch(format!(
            "det H(k) = {hp} is not proportional to l(k) det G(k)^2 = {rhs}"
        )));
    }
    Ok(FactorizationReport {
        alpha: ratio.denom().clone(),
        beta: ratio.numer().clone(),
        h: hp,
        det_g: dg,
    })
}

/// What happened to the scalar block `l` during assembly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineBlock {
    Kept { negated: bool },
    /// `l` is a nonzero constant; its sign is recorded.
    Dropped { positive: bool },
}

/// `C(k) = diag(+-l(k), +-G(k))` with signs chosen at a seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificatePencil {
    pencil: AffinePencil,
    line_block: LineBlock,
    g_negated: bool,
    pd_at_seed: bool,
}

impl CertificatePencil {
    pub fn pencil(&self) -> &AffinePencil {
        &self.pencil
    }

    pub fn line_block(&self) -> &LineBlock {
        &self.line_block
    }

    pub fn g_negated(&self) -> bool {
        self.g_negated
    }

    pub fn pd_at_seed(&self) -> bool {
        self.pd_at_seed
    }

    pub fn normalization_notes(&self) -> Vec<String> {
        let mut notes = Vec::new();
        match self.line_block {
            LineBlock::Kept { negated: true } => notes.push("line block negated at seed".into()),
            LineBlock::Kept { negated: false } => {}
            LineBlock::Dropped { positive } => notes.push(format!(
                "constant line block dropped ({})",
                if positive { "positive" } else { "negative" }
            )),
        }
        if self.g_negated {
            notes.push("G block negated at seed".into());
        }
        notes
    }
}

/// Assemble `C(k) = diag(l(k), G(k))`, flipping each block whose value at
/// the seed is negative definite. A nonzero constant `l` is dropped.
pub fn assemble_certificate_pencil(
    l: &AffineScalar,
    g: &AffinePencil,
    seed: (&Rational, &Rational),
) -> Result<CertificatePencil> {
    if l.is_zero() {
        return Err(Error::DegenerateLine);
    }
    let g_at = g.eval(seed.0, seed.1);
    let g_negated = g_at.is_negative_definite();
    let g_block = if g_negated { g.neg() } else { g.clone() };
    let mut pd_at_seed = g_negated || g_at.is_positive_definite();

    let (pencil, line_block) = if l.is_constant() {
        (g_block, LineBlock::Dropped { positive: l.c0.is_positive() })
    } else {
        let lv = l.eval(seed.0, seed.1);
        let negated = lv.is_negative();
        pd_at_seed &= !lv.is_zero();
        let l_block = if negated { l.neg() } else { l.clone() };
        (g_block.with_leading_scalar(&l_block), LineBlock::Kept { negated })
    };
    Ok(CertificatePencil {
        pencil,
        line_block,
        g_negated,
        pd_at_seed,
    })
}
