//! `hwc`: generate, solve, verify, benchmark and plot facility/highway
//! instances.
//!
//! Exit codes: 0 success, 2 input error, 3 verification failure.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use highway_center::bench::{bench, Variant};
use highway_center::generate::{generate, Family};
use highway_center::io::{emit_instance, emit_solution, parse_instance, parse_solution, to_json};
use highway_center::metric::HighwayKind;
use highway_center::oracle::verify;
use highway_center::plot::plot;
use highway_center::problem::{Instance, LengthMode};
use highway_center::solution::solve;

#[derive(Parser)]
#[command(
    name = "hwc",
    version,
    about = "Facility location with a turnpike or freeway under the L1 metric"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance document.
    Gen {
        /// uniform, clustered, collinear, grid or duplicate-heavy.
        #[arg(long, default_value = "uniform")]
        family: Family,
        #[arg(short, long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        params: Params,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Solve an instance document and print the solution document.
    Solve {
        /// Instance file, or `-` for standard input.
        instance: PathBuf,
        #[command(flatten)]
        params: Params,
        /// Also write an SVG drawing of the solution.
        #[arg(long)]
        svg_out: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a solution against its instance.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
        /// Also compare against the brute-force oracle (small instances only).
        #[arg(long)]
        oracle: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Time a solver variant over increasing sizes.
    Bench {
        /// turnpike-vl, turnpike-fl, freeway-vl or freeway-fl.
        #[arg(long)]
        variant: Variant,
        /// Comma-separated ascending sizes.
        #[arg(long, value_delimiter = ',', default_values_t = [500, 1000, 2000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Draw an instance and its solution as SVG.
    Plot {
        instance: PathBuf,
        solution: PathBuf,
        /// Output file; standard output when omitted.
        #[arg(long)]
        svg_out: Option<PathBuf>,
    },
}

/// Instance parameters; for `solve` they override the document.
#[derive(Args)]
struct Params {
    /// turnpike or freeway.
    #[arg(long, value_parser = parse_kind)]
    kind: Option<HighwayKind>,
    /// `variable` or a positive highway length.
    #[arg(long, value_parser = parse_length)]
    length: Option<LengthMode>,
    #[arg(long)]
    speed: Option<f64>,
    /// Fixed freeway orientation in radians.
    #[arg(long, allow_hyphen_values = true)]
    orientation: Option<f64>,
}

fn parse_kind(s: &str) -> Result<HighwayKind, String> {
    match s {
        "turnpike" => Ok(HighwayKind::Turnpike),
        "freeway" => Ok(HighwayKind::Freeway),
        _ => Err(format!("expected `turnpike` or `freeway`, got `{s}`")),
    }
}

fn parse_length(s: &str) -> Result<LengthMode, String> {
    if s == "variable" {
        return Ok(LengthMode::Variable);
    }
    s.parse::<f64>()
        .map(LengthMode::Fixed)
        .map_err(|_| format!("expected `variable` or a number, got `{s}`"))
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<highway_center::Error> for Failure {
    fn from(e: highway_center::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("reading {}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure::Input(format!("writing {}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn apply(mut inst: Instance, p: &Params) -> Result<Instance, Failure> {
    if let Some(kind) = p.kind {
        inst.kind = kind;
    }
    if let Some(length) = p.length {
        inst.length = length;
    }
    if let Some(speed) = p.speed {
        inst.speed = speed;
    }
    if let Some(alpha) = p.orientation {
        inst.orientation = Some(alpha);
    }
    inst.validate()?;
    Ok(inst)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen {
            family,
            n,
            seed,
            params,
            out,
        } => {
            let points = generate(family, n, seed)?;
            let base = Instance {
                points,
                kind: HighwayKind::Turnpike,
                length: LengthMode::Variable,
                speed: 2.0,
                orientation: None,
            };
            let inst = apply(base, &params)?;
            write(out.as_deref(), &emit_instance(&inst))
        }
        Command::Solve {
            instance,
            params,
            svg_out,
            out,
        } => {
            let inst = apply(parse_instance(&read(&instance)?)?, &params)?;
            let rec = solve(&inst)?;
            if let Some(svg) = svg_out {
                write(Some(&svg), &plot(&inst, &rec)?)?;
            }
            write(out.as_deref(), &emit_solution(&rec))
        }
        Command::Verify {
            instance,
            solution,
            oracle,
            out,
        } => {
            let inst = parse_instance(&read(&instance)?)?;
            let rec = parse_solution(&read(&solution)?)?;
            let report = verify(&inst, &rec, oracle)?;
            write(out.as_deref(), &to_json(&report))?;
            if report.passed() {
                Ok(())
            } else {
                let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
                Err(Failure::Verification(format!(
                    "failed checks: {}",
                    names.join(", ")
                )))
            }
        }
        Command::Bench {
            variant,
            sizes,
            reps,
            seed,
            out,
        } => {
            let report = bench(variant, &sizes, reps, seed)?;
            write(out.as_deref(), &to_json(&report))
        }
        Command::Plot {
            instance,
            solution,
            svg_out,
        } => {
            let inst = parse_instance(&read(&instance)?)?;
            let rec = parse_solution(&read(&solution)?)?;
            write(svg_out.as_deref(), &plot(&inst, &rec)?)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}
