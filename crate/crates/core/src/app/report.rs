//! Serializable analysis report. Every exact value is a string; integers
//! are counts only.

use serde::{Deserialize, Serialize};

use super::schema::{BoxSpec, InstanceFile};
use crate::bezout::QuadraticMatrixPencil;
use crate::certify::Certificate;
use crate::curve::{AffinePencil, AffineScalar, CertificatePencil, LineBlock, Parametrization};
use crate::linalg::SymMatrix;
use crate::poly::{Rational, UniPoly};
use crate::region::ConvexityVerdict;

pub type MatrixDto = Vec<Vec<String>>;

pub fn matrix_dto(m: &SymMatrix) -> MatrixDto {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(Rational::to_string).collect())
        .collect()
}

pub fn coeffs_dto(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(Rational::to_string).collect()
}

fn point_dto(p: &(Rational, Rational)) -> [String; 2] {
    [p.0.to_string(), p.1.to_string()]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialsDto {
    pub p0: Vec<String>,
    pub p1: Vec<String>,
    pub p2: Vec<String>,
}

/// Coefficient of `k1^i1 k2^i2` in `H(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HermiteTermDto {
    pub k1_power: u32,
    pub k2_power: u32,
    pub matrix: MatrixDto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HermiteDto {
    pub order: usize,
    pub terms: Vec<HermiteTermDto>,
}

impl HermiteDto {
    pub fn from_pencil(h: &QuadraticMatrixPencil) -> Self {
        HermiteDto {
            order: h.order(),
            terms: h
                .coefficients()
                .map(|((a, b), m)| HermiteTermDto {
                    k1_power: a,
                    k2_power: b,
                    matrix: matrix_dto(m),
                })
                .collect(),
        }
    }
}

/// `c0 + c1 k1 + c2 k2`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineDto {
    pub c0: String,
    pub c1: String,
    pub c2: String,
    pub text: String,
}

impl AffineDto {
    pub fn from_scalar(l: &AffineScalar) -> Self {
        AffineDto {
            c0: l.c0.to_string(),
            c1: l.c1.to_string(),
            c2: l.c2.to_string(),
            text: l.to_bipoly().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParametrizationDto {
    pub q0: Vec<String>,
    pub q1: Vec<String>,
    pub q2: Vec<String>,
    pub scale: String,
}

impl ParametrizationDto {
    pub fn from_param(p: &Parametrization) -> Self {
        ParametrizationDto {
            q0: coeffs_dto(&p.q0),
            q1: coeffs_dto(&p.q1),
            q2: coeffs_dto(&p.q2),
            scale: p.scale.to_string(),
        }
    }
}

/// `F0 + k1 F1 + k2 F2`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilDto {
    pub order: usize,
    pub f0: MatrixDto,
    pub f1: MatrixDto,
    pub f2: MatrixDto,
}

impl PencilDto {
    pub fn from_pencil(p: &AffinePencil) -> Self {
        PencilDto {
            order: p.order(),
            f0: matrix_dto(&p.f0),
            f1: matrix_dto(&p.f1),
            f2: matrix_dto(&p.f2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationDto {
    /// `kept`, `negated`, `dropped-positive` or `dropped-negative`.
    pub line_block: String,
    pub g_negated: bool,
    pub pd_at_seed: bool,
}

impl NormalizationDto {
    pub fn from_pencil(c: &CertificatePencil) -> Self {
        let line_block = match c.line_block() {
            LineBlock::Kept { negated: false } => "kept",
            LineBlock::Kept { negated: true } => "negated",
            LineBlock::Dropped { positive: true } => "dropped-positive",
            LineBlock::Dropped { positive: false } => "dropped-negative",
        };
        NormalizationDto {
            line_block: line_block.into(),
            g_negated: c.g_negated(),
            pd_at_seed: c.pd_at_seed(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationDto {
    pub alpha: String,
    pub beta: String,
    pub det_h: String,
    pub det_g: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDto {
    pub status: String,
    pub seed: Option<[String; 2]>,
    /// `given` or `auto`.
    pub seed_source: String,
    pub lmi: Option<PencilDto>,
    pub witness: Option<[String; 2]>,
    pub sample_violations: usize,
    pub notes: Vec<String>,
}

impl CertificateDto {
    pub fn from_certificate(c: &Certificate, seed_source: &str) -> Self {
        CertificateDto {
            status: c.status.as_str().into(),
            seed: c.seed.as_ref().map(point_dto),
            seed_source: seed_source.into(),
            lmi: c.lmi.as_ref().map(PencilDto::from_pencil),
            witness: c.witness.as_ref().map(point_dto),
            sample_violations: c.sample_violations,
            notes: c.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexityDto {
    /// `consistent-with-convex` or `nonconvex`.
    pub verdict: String,
    pub trials: usize,
    pub witness: Option<[[String; 2]; 3]>,
}

impl ConvexityDto {
    pub fn from_verdict(v: &ConvexityVerdict, trials: usize) -> Self {
        match v {
            ConvexityVerdict::ConsistentWithConvex { .. } => ConvexityDto {
                verdict: "consistent-with-convex".into(),
                trials,
                witness: None,
            },
            ConvexityVerdict::Nonconvex { a, b, midpoint } => ConvexityDto {
                verdict: "nonconvex".into(),
                trials,
                witness: Some([point_dto(a), point_dto(b), point_dto(midpoint)]),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDto {
    pub id: usize,
    pub cells: usize,
    pub sample: [String; 2],
    pub near_boundary: bool,
    pub convexity: ConvexityDto,
    /// The certificate's seed lies in this component.
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridDto {
    #[serde(rename = "box")]
    pub grid_box: BoxSpec,
    pub resolution: usize,
    pub stable: usize,
    pub unstable: usize,
    pub boundary: usize,
    /// Nodes where the Hermite test and the Routh test disagree.
    pub hermite_mismatches: usize,
    /// Nodes with `C > 0`, and the subset of those that are not stable.
    pub c_pd: usize,
    pub c_pd_not_stable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtifactsDto {
    pub svg: Option<String>,
    pub pgm: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionReport {
    pub tool_version: String,
    pub schema: String,
    pub instance: InstanceFile,
    pub normalized: PolynomialsDto,
    pub hermite: HermiteDto,
    pub line: AffineDto,
    pub parametrization: ParametrizationDto,
    pub g: PencilDto,
    pub c: Option<PencilDto>,
    pub normalization: Option<NormalizationDto>,
    pub factorization: FactorizationDto,
    pub certificate: CertificateDto,
    pub components: Vec<ComponentDto>,
    pub grid: GridDto,
    pub artifacts: ArtifactsDto,
}

impl RegionReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
