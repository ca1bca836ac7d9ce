//! JSON instance files (schema "1").
//!
//! ```json
//! {"schema": "1", "name": "nn1", "type": "polynomials",
//!  "p0": ["0", "-13", "0", "1"], "p1": ["0", "-5", "1"], "p2": ["1", "1"],
//!  "box": {"k1": ["0", "3"], "k2": ["0", "60"]}, "seed": ["2", "47"]}
//! ```
//!
//! Coefficients are ascending; every number is a rational string. `"pi"`
//! instances carry `"a"`, `"b"` and `"form"`; `"sof"` instances carry
//! row-major `"A"`, `"B"`, `"C"`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frontends::{pi_frontend, sof_frontend, PiForm, PiPlant, SofTriple};
use crate::linalg::Matrix;
use crate::poly::{normalize_monic, parse_rational, ProblemInstance, Rational, UniPoly, Var};
use crate::region::GridBox;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum InstanceSpec {
    Polynomials {
        p0: Vec<String>,
        p1: Vec<String>,
        p2: Vec<String>,
    },
    Pi {
        a: Vec<String>,
        b: Vec<String>,
        form: String,
    },
    Sof {
        #[serde(rename = "A")]
        a: Vec<Vec<String>>,
        #[serde(rename = "B")]
        b: Vec<Vec<String>>,
        #[serde(rename = "C")]
        c: Vec<Vec<String>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxSpec {
    pub k1: [String; 2],
    pub k2: [String; 2],
}

impl BoxSpec {
    pub fn from_box(b: &GridBox) -> Self {
        BoxSpec {
            k1: [b.k1.0.to_string(), b.k1.1.to_string()],
            k2: [b.k2.0.to_string(), b.k2.1.to_string()],
        }
    }

    pub fn to_box(&self) -> Result<GridBox> {
        let p = |s: &String, what: &str| {
            parse_rational(s).map_err(|e| Error::Parse(format!("box.{what}: {e}")))
        };
        GridBox::new(
            (p(&self.k1[0], "k1[0]")?, p(&self.k1[1], "k1[1]")?),
            (p(&self.k2[0], "k2[0]")?, p(&self.k2[1], "k2[1]")?),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub instance: InstanceSpec,
    #[serde(rename = "box", default, skip_serializing_if = "Option::is_none")]
    pub grid_box: Option<BoxSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<[String; 2]>,
}

impl InstanceFile {
    pub fn grid_box(&self) -> Result<Option<GridBox>> {
        self.grid_box.as_ref().map(BoxSpec::to_box).transpose()
    }

    pub fn seed(&self) -> Result<Option<(Rational, Rational)>> {
        self.seed
            .as_ref()
            .map(|[a, b]| {
                let p = |s: &String, i: usize| {
                    parse_rational(s).map_err(|e| Error::Parse(format!("seed[{i}]: {e}")))
                };
                Ok((p(a, 0)?, p(b, 1)?))
            })
            .transpose()
    }

    /// Run the frontend selected by `"type"` and normalize.
    pub fn to_instance(&self) -> Result<ProblemInstance> {
        match &self.instance {
            InstanceSpec::Polynomials { p0, p1, p2 } => normalize_monic(
                poly_field(p0, "p0")?,
                poly_field(p1, "p1")?,
                poly_field(p2, "p2")?,
            ),
            InstanceSpec::Pi { a, b, form } => pi_frontend(&PiPlant {
                a: poly_field(a, "a")?,
                b: poly_field(b, "b")?,
                form: PiForm::parse(form)?,
            }),
            InstanceSpec::Sof { a, b, c } => sof_frontend(&SofTriple::new(
                matrix_field(a, "A")?,
                matrix_field(b, "B")?,
                matrix_field(c, "C")?,
            )?),
        }
    }
}

fn poly_field(coeffs: &[String], field: &str) -> Result<UniPoly> {
    let c = coeffs
        .iter()
        .enumerate()
        .map(|(i, s)| parse_rational(s).map_err(|e| Error::Parse(format!("{field}[{i}]: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(c, Var::S))
}

fn matrix_field(rows: &[Vec<String>], field: &str) -> Result<Matrix> {
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, s)| {
                    parse_rational(s).map_err(|e| Error::Parse(format!("{field}[{i}][{j}]: {e}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed).map_err(|e| Error::Parse(format!("{field}: {e}")))
}

/// Parse instance JSON text. Syntax and shape errors carry serde's line and
/// column; value errors name the offending field.
pub fn parse_instance_str(text: &str) -> Result<InstanceFile> {
    let file: InstanceFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("instance JSON: {e}")))?;
    if let Some(v) = &file.schema {
        if v != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema version {v:?} (this build reads \"{SCHEMA_VERSION}\")"
            )));
        }
    }
    Ok(file)
}

/// Read and validate an instance file, returning the echo and the
/// normalized instance.
pub fn parse_instance(path: &Path) -> Result<(InstanceFile, ProblemInstance)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let file = parse_instance_str(&text)?;
    let inst = file.to_instance()?;
    Ok((file, inst))
}
