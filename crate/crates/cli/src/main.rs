use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hdimp_cli::generate::{self, PlantedParams, RandomParams, SideKind, Template};
use hdimp_cli::render::render_svg;
use hdimp_cli::{run_compute, run_oracle, Algorithm, CliError, InstanceDocument, Quantity, ResultDocument};
use hdimp_core::Tolerance;

/// Bounds on the directed Hausdorff distance between imprecise point sets.
#[derive(Parser)]
#[command(name = "hdimp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute hmin or hmax of an instance.
    Compute {
        instance: PathBuf,
        #[arg(long, value_enum)]
        quantity: QuantityArg,
        #[arg(long, value_enum, default_value = "auto")]
        algorithm: Algorithm,
        /// Predicate tolerance.
        #[arg(long)]
        eps: Option<f64>,
        #[command(flatten)]
        out: Output,
    },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        mode: GenMode,
        #[arg(long, default_value_t = 0, global = true)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Brute-force bracket of hmin or hmax by sampling the discs.
    Oracle {
        instance: PathBuf,
        #[arg(long, value_enum)]
        quantity: QuantityArg,
        /// Sampling pitch.
        #[arg(long, default_value_t = 0.02)]
        step: f64,
        #[arg(long)]
        eps: Option<f64>,
        #[command(flatten)]
        out: Output,
    },
    /// Render an instance, and optionally a result, as SVG.
    Render {
        instance: PathBuf,
        #[arg(long)]
        result: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuantityArg {
    Hmin,
    Hmax,
}

impl From<QuantityArg> for Quantity {
    fn from(q: QuantityArg) -> Self {
        match q {
            QuantityArg::Hmin => Quantity::Hmin,
            QuantityArg::Hmax => Quantity::Hmax,
        }
    }
}

#[derive(Subcommand)]
enum GenMode {
    /// Uniform random instance in a square box.
    Random {
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long = "box", default_value_t = 10.0)]
        size: f64,
        #[arg(long, default_value_t = 0.2)]
        rmin: f64,
        #[arg(long, default_value_t = 1.5)]
        rmax: f64,
        #[arg(long, value_enum, default_value = "precise")]
        p_kind: SideKind,
        #[arg(long, value_enum, default_value = "imprecise")]
        q_kind: SideKind,
        #[arg(long)]
        disjoint: bool,
        #[arg(long)]
        unit: bool,
    },
    /// Disjoint discs with a precise P whose hmin equals the target.
    Planted {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        extra: usize,
        #[arg(long = "box", default_value_t = 10.0)]
        size: f64,
        #[arg(long, default_value_t = 0.5)]
        rmin: f64,
        #[arg(long, default_value_t = 1.5)]
        rmax: f64,
        #[arg(long, default_value_t = 0.05)]
        target: f64,
    },
    /// A bundled planar 3-SAT gadget instance.
    Gadget {
        #[arg(long, value_enum, default_value = "one-variable")]
        template: Template,
        /// Unit length of the construction.
        #[arg(long, default_value_t = 1.0)]
        eps: f64,
    },
}

fn tolerance(eps: Option<f64>) -> Result<Tolerance, CliError> {
    Ok(match eps {
        Some(e) => Tolerance::with_eps(e)?,
        None => Tolerance::default(),
    })
}

// Writes to a sibling temporary file and renames it over the target.
fn emit(out: &Output, text: &str) -> Result<(), CliError> {
    let Some(path) = &out.output else {
        print!("{text}");
        return Ok(());
    };
    let tmp = temp_path(path);
    std::fs::write(&tmp, text)
        .and_then(|_| std::fs::rename(&tmp, path))
        .map_err(|e| CliError::Internal(format!("{}: {e}", path.display())))
}

fn temp_path(path: &Path) -> PathBuf {
    let mut name = path.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(format!(".{}.tmp", std::process::id()));
    path.with_file_name(name)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute {
            instance,
            quantity,
            algorithm,
            eps,
            out,
        } => {
            let doc = InstanceDocument::load(&instance)?;
            let res = run_compute(&doc, quantity.into(), algorithm, &tolerance(eps)?)?;
            emit(&out, &res.emit())
        }
        Command::Oracle {
            instance,
            quantity,
            step,
            eps,
            out,
        } => {
            let doc = InstanceDocument::load(&instance)?;
            emit(&out, &run_oracle(&doc, quantity.into(), step, &tolerance(eps)?)?.emit())
        }
        Command::Render { instance, result, out } => {
            let doc = InstanceDocument::load(&instance)?;
            let res = result.as_deref().map(ResultDocument::load).transpose()?;
            emit(&out, &render_svg(&doc, res.as_ref()))
        }
        Command::Gen { mode, seed, out } => {
            let doc = match mode {
                GenMode::Random {
                    m,
                    n,
                    size,
                    rmin,
                    rmax,
                    p_kind,
                    q_kind,
                    disjoint,
                    unit,
                } => generate::generate_random(
                    &RandomParams {
                        m,
                        n,
                        size,
                        radius: (rmin, rmax),
                        p_kind,
                        q_kind,
                        disjoint,
                        unit,
                    },
                    seed,
                )?,
                GenMode::Planted {
                    n,
                    extra,
                    size,
                    rmin,
                    rmax,
                    target,
                } => generate::generate_planted(
                    &PlantedParams {
                        n,
                        extra,
                        size,
                        radius: (rmin, rmax),
                        target,
                    },
                    seed,
                )?,
                GenMode::Gadget { template, eps } => generate::generate_gadget(template, eps)?,
            };
            emit(&out, &doc.emit())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hdimp: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
