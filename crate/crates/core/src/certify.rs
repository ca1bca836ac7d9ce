//! Routh oracle, point classification and LMI-region certificates.

use num_traits::{Signed, Zero};

use crate::bezout::QuadraticMatrixPencil;
use crate::curve::{AffinePencil, CertificatePencil};
use crate::error::{Error, Result};
use crate::linalg::SymMatrix;
use crate::poly::{ProblemInstance, Rational, UniPoly};

/// Outcome of the exact Routh test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stability {
    Stable,
    Unstable,
    /// An exact zero pivot appeared: roots on the imaginary axis or placed
    /// symmetrically about the origin. Never part of the open stability
    /// region.
    Boundary,
}

impl Stability {
    pub fn is_stable(self) -> bool {
        self == Stability::Stable
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Stability::Stable => "stable",
            Stability::Unstable => "unstable",
            Stability::Boundary => "boundary",
        }
    }
}

/// Exact PD test; errors on non-symmetric input rows.
pub fn is_positive_definite(rows: Vec<Vec<Rational>>) -> Result<bool> {
    Ok(SymMatrix::from_rows(rows)?.is_positive_definite())
}

/// First column of the Routh array of the monic normalization of `p`, or
/// `None` when a zero pivot stops the recursion.
fn routh_first_column(p: &UniPoly) -> Result<Option<Vec<Rational>>> {
    let n = match p.degree() {
        Some(n) if n > 0 => n,
        _ => return Err(Error::ConstantPolynomial),
    };
    let p = p.monic();
    let desc: Vec<Rational> = (0..=n).rev().map(|i| p.coeff(i)).collect();
    let width = n / 2 + 1;
    let row = |start: usize| -> Vec<Rational> {
        (0..width)
            .map(|j| desc.get(start + 2 * j).cloned().unwrap_or_else(Rational::zero))
            .collect()
    };
    let mut prev = row(0);
    let mut cur = row(1);
    let mut column = vec![prev[0].clone(), cur[0].clone()];
    for _ in 2..=n {
        if cur[0].is_zero() {
            return Ok(None);
        }
        let next: Vec<Rational> = (0..width)
            .map(|j| {
                let a = prev.get(j + 1).cloned().unwrap_or_else(Rational::zero);
                let b = cur.get(j + 1).cloned().unwrap_or_else(Rational::zero);
                (&cur[0] * a - &prev[0] * b) / &cur[0]
            })
            .collect();
        column.push(next[0].clone());
        prev = std::mem::replace(&mut cur, next);
    }
    if column.iter().any(Zero::is_zero) {
        return Ok(None);
    }
    Ok(Some(column))
}

/// Exact Routh-Hurwitz test of a nonconstant polynomial (scaled monic).
pub fn routh_stable(p: &UniPoly) -> Result<Stability> {
    Ok(match routh_first_column(p)? {
        None => Stability::Boundary,
        Some(col) if col.iter().all(Signed::is_positive) => Stability::Stable,
        Some(_) => Stability::Unstable,
    })
}

/// Number of open right-half-plane roots, `None` in the degenerate
/// (zero pivot) case.
pub fn unstable_root_count(p: &UniPoly) -> Result<Option<usize>> {
    Ok(routh_first_column(p)?.map(|col| {
        col.windows(2)
            .filter(|w| w[0].is_positive() != w[1].is_positive())
            .count()
    }))
}

/// Classification of one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointClass {
    pub k1: Rational,
    pub k2: Rational,
    pub stability: Stability,
    pub h_pd: bool,
    pub c_pd: Option<bool>,
}

pub fn classify_point(
    inst: &ProblemInstance,
    h: &QuadraticMatrixPencil,
    c: Option<&AffinePencil>,
    k1: &Rational,
    k2: &Rational,
) -> PointClass {
    let stability =
        routh_stable(&inst.eval_at(k1, k2)).expect("validated instance is nonconstant");
    PointClass {
        k1: k1.clone(),
        k2: k2.clone(),
        stability,
        h_pd: h.eval(k1, k2).is_positive_definite(),
        c_pd: c.map(|c| c.eval(k1, k2).is_positive_definite()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateStatus {
    /// `H(seed) > 0` and `C(seed) > 0`: the seed's component of
    /// `{C >= 0}` lies in the stability region.
    CertifiedLmiSubset,
    /// A sampled point has `C > 0` but is not stable.
    CertifiedNoInclusion,
    /// `C` is not positive definite at the seed and no counterexample was
    /// sampled.
    NotPdAtSeed,
    /// No usable seed (for example, no stable point at all).
    Degenerate,
}

impl CertificateStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateStatus::CertifiedLmiSubset => "certified-lmi-subset",
            CertificateStatus::CertifiedNoInclusion => "certified-no-inclusion",
            CertificateStatus::NotPdAtSeed => "not-pd-at-seed",
            CertificateStatus::Degenerate => "degenerate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub status: CertificateStatus,
    pub seed: Option<(Rational, Rational)>,
    /// `(F0, F1, F2)` of the LMI, present when certified.
    pub lmi: Option<AffinePencil>,
    /// Sampled point with `C > 0` that is not stable.
    pub witness: Option<(Rational, Rational)>,
    /// Samples with `C > 0` that failed the Routh test although the seed
    /// certified. Zero unless something upstream is inconsistent.
    pub sample_violations: usize,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn degenerate(note: impl Into<String>) -> Self {
        Certificate {
            status: CertificateStatus::Degenerate,
            seed: None,
            lmi: None,
            witness: None,
            sample_violations: 0,
            notes: vec![note.into()],
        }
    }
}

/// Certify the LMI region through `seed`.
///
/// `samples` must have been classified with the same certificate pencil
/// (`c_pd` filled in); they back the certificate with a sampled
/// cross-validation and supply counterexamples when `C(seed)` is not PD.
pub fn certify_lmi_region(
    inst: &ProblemInstance,
    h: &QuadraticMatrixPencil,
    c: &CertificatePencil,
    seed: (&Rational, &Rational),
    samples: &[PointClass],
) -> Result<Certificate> {
    let at_seed = classify_point(inst, h, Some(c.pencil()), seed.0, seed.1);
    if !at_seed.stability.is_stable() {
        return Err(Error::SeedNotStable(seed.0.to_string(), seed.1.to_string()));
    }
    if !at_seed.h_pd {
        return Err(Error::Internal(
            "stable seed with an indefinite Hermite matrix".into(),
        ));
    }
    let bad_samples = || {
        samples
            .iter()
            .filter(|p| p.c_pd == Some(true) && !p.stability.is_stable())
    };
    let mut cert = Certificate {
        status: CertificateStatus::NotPdAtSeed,
        seed: Some((seed.0.clone(), seed.1.clone())),
        lmi: None,
        witness: None,
        sample_violations: 0,
        notes: c.normalization_notes(),
    };
    if at_seed.c_pd == Some(true) {
        cert.status = CertificateStatus::CertifiedLmiSubset;
        cert.lmi = Some(c.pencil().clone());
        cert.sample_violations = bad_samples().count();
        cert.notes.push(format!(
            "inclusion of the seed component of {{C >= 0}} follows from C(seed) > 0 and \
             H(seed) > 0; checked on {} sampled points, {} violations",
            samples.len(),
            cert.sample_violations
        ));
    } else if let Some(w) = bad_samples().next() {
        cert.status = CertificateStatus::CertifiedNoInclusion;
        cert.witness = Some((w.k1.clone(), w.k2.clone()));
        cert.notes.push(format!(
            "C is not positive definite at the seed; C({}, {}) > 0 but the point is {}",
            w.k1,
            w.k2,
            w.stability.as_str()
        ));
    } else {
        cert.notes.push(format!(
            "C is not positive definite at the seed; no sampled counterexample among {} points",
            samples.len()
        ));
    }
    Ok(cert)
}
