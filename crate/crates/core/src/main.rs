use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use stabreg::app::{run_analyze, Command, RunConfig};
use stabreg::poly::{parse_rational, Rational};
use stabreg::region::GridBox;

#[derive(Parser)]
#[command(name = "stabreg", version, about = "Exact stability regions of two-parameter polynomial families")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Full analysis; prints the JSON report unless --out is given.
    Analyze(Opts),
    /// Render the stability region (needs --svg and/or --pgm).
    Plot(Opts),
    /// Print only the certificate section of the report.
    Certify(Opts),
}

#[derive(Args)]
struct Opts {
    /// Instance JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Report JSON output path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// SVG plot of the region and boundary curve.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Binary PGM raster, one pixel per grid node.
    #[arg(long)]
    pgm: Option<PathBuf>,
    /// Parameter box "k1min,k1max,k2min,k2max" (rationals).
    #[arg(long = "box", allow_hyphen_values = true)]
    grid_box: Option<String>,
    /// Grid nodes per axis.
    #[arg(long, default_value_t = 101)]
    grid: usize,
    /// Certificate seed "k1,k2".
    #[arg(long, allow_hyphen_values = true)]
    seed: Option<String>,
    /// Random midpoint pairs per component for the convexity probe.
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Exit with status 3 unless the LMI subset is certified.
    #[arg(long)]
    require_certificate: bool,
    /// Worker threads for the grid scan.
    #[arg(long)]
    threads: Option<usize>,
    /// Seed of the convexity probe's random pairs.
    #[arg(long, default_value_t = 1)]
    rng_seed: u64,
}

fn rationals(text: &str, n: usize, what: &str) -> Result<Vec<Rational>, String> {
    let v = text
        .split(',')
        .map(|s| parse_rational(s).map_err(|e| format!("--{what}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    if v.len() != n {
        return Err(format!("--{what} expects {n} comma-separated rationals"));
    }
    Ok(v)
}

fn config(command: Command, o: Opts) -> Result<RunConfig, String> {
    let mut c = RunConfig::new(command, o.input);
    if let Some(b) = &o.grid_box {
        let v = rationals(b, 4, "box")?;
        c.grid_box = Some(
            GridBox::new((v[0].clone(), v[1].clone()), (v[2].clone(), v[3].clone()))
                .map_err(|e| format!("--box: {e}"))?,
        );
    }
    if let Some(s) = &o.seed {
        let v = rationals(s, 2, "seed")?;
        c.seed = Some((v[0].clone(), v[1].clone()));
    }
    if o.grid < 2 {
        return Err(format!("--grid must be at least 2, got {}", o.grid));
    }
    c.resolution = o.grid;
    c.trials = o.trials;
    c.out = o.out;
    c.svg = o.svg;
    c.pgm = o.pgm;
    c.require_certificate = o.require_certificate;
    c.threads = o.threads;
    c.rng_seed = o.rng_seed;
    Ok(c)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, opts) = match cli.command {
        Sub::Analyze(o) => (Command::Analyze, o),
        Sub::Plot(o) => (Command::Plot, o),
        Sub::Certify(o) => (Command::Certify, o),
    };
    let cfg = match config(command, opts) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match run_analyze(&cfg) {
        Ok(outcome) => {
            let r = &outcome.report;
            match command {
                Command::Analyze if cfg.out.is_none() => print!("{}", r.to_json()),
                Command::Certify => println!(
                    "{}",
                    serde_json::to_string_pretty(&r.certificate).expect("certificate serializes")
                ),
                _ => {}
            }
            eprintln!(
                "certificate: {}; components: {}; stable nodes: {}/{}",
                r.certificate.status,
                r.components.len(),
                r.grid.stable,
                r.grid.resolution * r.grid.resolution
            );
            if outcome.exit_code == 3 {
                eprintln!("error: certificate required but status is {}", r.certificate.status);
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
