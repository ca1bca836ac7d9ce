//! End-to-end analysis: parse, symbolic stages, scan, certify, render.

use std::path::PathBuf;

use super::report::*;
use super::schema::{parse_instance, BoxSpec, SCHEMA_VERSION};
use crate::bezout::hermite_pencil;
use crate::certify::{certify_lmi_region, Certificate, CertificateStatus};
use crate::curve::{assemble_certificate_pencil, verify_factorization, CurveData};
use crate::error::Error;
use crate::poly::{int, Rational};
use crate::region::{
    connected_components, convexity_probe, render_pgm, render_svg, scan_grid, trace_boundary,
    GridBox, SvgStyle,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Plot,
    Certify,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input: PathBuf,
    /// Overrides the box stored in the instance file.
    pub grid_box: Option<GridBox>,
    pub resolution: usize,
    /// Overrides the seed stored in the instance file.
    pub seed: Option<(Rational, Rational)>,
    pub trials: usize,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub pgm: Option<PathBuf>,
    pub require_certificate: bool,
    /// Worker threads for the grid scan; `None` uses the available
    /// parallelism.
    pub threads: Option<usize>,
    pub rng_seed: u64,
    pub trace_samples: usize,
}

impl RunConfig {
    pub fn new(command: Command, input: impl Into<PathBuf>) -> Self {
        RunConfig {
            command,
            input: input.into(),
            grid_box: None,
            resolution: 101,
            seed: None,
            trials: 200,
            out: None,
            svg: None,
            pgm: None,
            require_certificate: false,
            threads: None,
            rng_seed: 1,
            trace_samples: 2000,
        }
    }

    pub fn default_box() -> GridBox {
        GridBox::from_ints((-5, 5), (-5, 5)).expect("static box")
    }
}

/// A pipeline failure tagged with the stage that raised it.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("{stage}: {error}")]
    Stage { stage: &'static str, error: Error },
    #[error("writing {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("configuration: {0}")]
    Config(String),
}

impl AppError {
    /// 2 for degenerate instances, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Stage { error, .. } if error.is_degenerate_instance() => 2,
            _ => 1,
        }
    }
}

fn stage<T>(name: &'static str, r: crate::Result<T>) -> Result<T, AppError> {
    r.map_err(|error| AppError::Stage { stage: name, error })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub report: RegionReport,
    pub exit_code: i32,
}

/// Run the whole pipeline on a fresh thread pool of the configured size.
pub fn run_analyze(config: &RunConfig) -> Result<RunOutcome, AppError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = config.threads {
        if n == 0 {
            return Err(AppError::Config("--threads must be at least 1".into()));
        }
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| AppError::Config(format!("thread pool: {e}")))?;
    pool.install(|| run_inner(config))
}

fn run_inner(config: &RunConfig) -> Result<RunOutcome, AppError> {
    if config.command == Command::Plot && config.svg.is_none() && config.pgm.is_none() {
        return Err(AppError::Config("plot needs --svg and/or --pgm".into()));
    }
    let (file, inst) = stage("parse", parse_instance(&config.input))?;
    let grid_box = match &config.grid_box {
        Some(b) => b.clone(),
        None => stage("parse", file.grid_box())?.unwrap_or_else(RunConfig::default_box),
    };
    let given_seed = match &config.seed {
        Some(s) => Some(s.clone()),
        None => stage("parse", file.seed())?,
    };

    let h = stage("hermite", hermite_pencil(&inst))?;
    let curve = stage("curve", CurveData::compute(&inst))?;
    let fact = stage("factorization", verify_factorization(&h, &curve.line, &curve.g))?;
    let mut scan = stage(
        "scan",
        scan_grid(&inst, &h, None, &grid_box, config.resolution),
    )?;

    let (seed, seed_source) = match given_seed {
        Some(s) => (Some(s), "given"),
        None => (
            scan.first_interior_stable()
                .map(|(i, j)| (scan.point(i, j).k1.clone(), scan.point(i, j).k2.clone())),
            "auto",
        ),
    };

    let (cert, c_pencil) = match &seed {
        Some(s) => {
            let c = stage(
                "certificate",
                assemble_certificate_pencil(&curve.line, &curve.g, (&s.0, &s.1)),
            )?;
            scan.attach_certificate_pencil(c.pencil());
            let cert = stage(
                "certificate",
                certify_lmi_region(&inst, &h, &c, (&s.0, &s.1), scan.points()),
            )?;
            (cert, Some(c))
        }
        None => (
            Certificate::degenerate("no interior stable grid node to seed the certificate"),
            None,
        ),
    };
    let certified = cert.status == CertificateStatus::CertifiedLmiSubset;

    let comps = connected_components(&scan);
    let seed_node = seed.as_ref().map(|s| nearest_node(&grid_box, config.resolution, s));
    let components: Vec<ComponentDto> = comps
        .components
        .iter()
        .map(|c| {
            let v = convexity_probe(&inst, &scan, c, config.trials, config.rng_seed + c.id as u64);
            let p = scan.point(c.sample.0, c.sample.1);
            ComponentDto {
                id: c.id,
                cells: c.len(),
                sample: [p.k1.to_string(), p.k2.to_string()],
                near_boundary: c.near_boundary,
                convexity: ConvexityDto::from_verdict(&v, config.trials),
                certified: certified && seed_node.is_some_and(|n| c.contains(n)),
            }
        })
        .collect();

    let (stable, unstable, boundary) = scan.label_counts();
    let pts = scan.points();
    let grid = GridDto {
        grid_box: BoxSpec::from_box(&grid_box),
        resolution: config.resolution,
        stable,
        unstable,
        boundary,
        hermite_mismatches: pts.iter().filter(|p| p.h_pd != p.stability.is_stable()).count(),
        c_pd: pts.iter().filter(|p| p.c_pd == Some(true)).count(),
        c_pd_not_stable: pts
            .iter()
            .filter(|p| p.c_pd == Some(true) && !p.stability.is_stable())
            .count(),
    };

    let mut artifacts = ArtifactsDto { svg: None, pgm: None };
    if let Some(path) = &config.svg {
        let trace = trace_boundary(&curve, &grid_box, config.trace_samples);
        let style = SvgStyle {
            title: file.name.clone(),
            certified_components: components.iter().filter(|c| c.certified).map(|c| c.id).collect(),
            ..SvgStyle::default()
        };
        write(path, render_svg(&scan, &comps, &trace, &style).as_bytes())?;
        artifacts.svg = Some(path.display().to_string());
    }
    if let Some(path) = &config.pgm {
        write(path, &render_pgm(&scan))?;
        artifacts.pgm = Some(path.display().to_string());
    }

    let report = RegionReport {
        tool_version: env!("CARGO_PKG_VERSION").into(),
        schema: SCHEMA_VERSION.into(),
        instance: file,
        normalized: PolynomialsDto {
            p0: coeffs_dto(inst.p0()),
            p1: coeffs_dto(inst.p1()),
            p2: coeffs_dto(inst.p2()),
        },
        hermite: HermiteDto::from_pencil(&h),
        line: AffineDto::from_scalar(&curve.line),
        parametrization: ParametrizationDto::from_param(&curve.param),
        g: PencilDto::from_pencil(&curve.g),
        c: c_pencil.as_ref().map(|c| PencilDto::from_pencil(c.pencil())),
        normalization: c_pencil.as_ref().map(NormalizationDto::from_pencil),
        factorization: FactorizationDto {
            alpha: fact.alpha.to_string(),
            beta: fact.beta.to_string(),
            det_h: fact.h.to_string(),
            det_g: fact.det_g.to_string(),
        },
        certificate: CertificateDto::from_certificate(&cert, seed_source),
        components,
        grid,
        artifacts,
    };
    if let Some(path) = &config.out {
        write(path, report.to_json().as_bytes())?;
    }
    let exit_code = if config.require_certificate && !certified { 3 } else { 0 };
    Ok(RunOutcome { report, exit_code })
}

/// Grid node closest to `p` (coordinates clamped to the box).
fn nearest_node(b: &GridBox, n: usize, p: &(Rational, Rational)) -> (usize, usize) {
    let idx = |range: &(Rational, Rational), x: &Rational| -> usize {
        let r = (x - &range.0) * int(n as i64 - 1) / (&range.1 - &range.0);
        let i = (r + Rational::new(1.into(), 2.into())).floor().to_integer();
        i.clamp(0.into(), (n - 1).into()).try_into().unwrap_or(0)
    };
    (idx(&b.k1, &p.0), idx(&b.k2, &p.1))
}

fn write(path: &PathBuf, bytes: &[u8]) -> Result<(), AppError> {
    std::fs::write(path, bytes).map_err(|source| AppError::Io {
        path: path.display().to_string(),
        source,
    })
}
