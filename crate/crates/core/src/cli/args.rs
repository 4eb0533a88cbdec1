use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use super::{execute, exit_code, Command, Format, GalleryAction, GalleryArgs, ParamArgs, RunConfig};
use crate::error::{Error, Result};
use crate::gallery::GalleryId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Svg,
}

/// Lower and upper bounds on the number of convex components of a union of polytopes.
#[derive(Debug, Parser)]
#[command(name = "ccbound", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
    /// Scene JSON file (or a directory of them for `bounds`).
    #[arg(long, global = true)]
    scene: Option<PathBuf>,
    /// Pins: a JSON file or an inline JSON array of {"point", "normal"}.
    #[arg(long, global = true)]
    pins: Option<String>,
    #[arg(long, global = true)]
    alpha: Option<f64>,
    #[arg(long, global = true)]
    beta: Option<f64>,
    #[arg(long, global = true)]
    p: Option<usize>,
    #[arg(long, global = true)]
    l: Option<f64>,
    #[arg(long, global = true)]
    h: Option<f64>,
    #[arg(long, global = true)]
    lambda: Option<f64>,
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long = "mc-samples", global = true)]
    mc_samples: Option<usize>,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Every lower bound for a scene, with per-witness terms.
    Bounds,
    /// Example scenes: list, build or verify.
    Gallery {
        #[command(subcommand)]
        action: GalleryCommand,
    },
    /// Parameter interval where the planar bound pins k_min of C.
    RegimeSearch {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Greedy convex decomposition of a planar scene.
    Decompose { scene: Option<PathBuf> },
    /// Structural invariants of a scene.
    Verify,
}

#[derive(Debug, Subcommand)]
pub enum GalleryCommand {
    List,
    Build { id: String },
    Verify { id: String },
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfig> {
        let mut scene_path = self.scene;
        let mut samples = 10_000;
        let command = match self.command {
            CliCommand::Bounds => Command::Bounds,
            CliCommand::Gallery { action } => Command::Gallery(match action {
                GalleryCommand::List => GalleryAction::List,
                GalleryCommand::Build { id } => GalleryAction::Build(id.parse::<GalleryId>()?),
                GalleryCommand::Verify { id } => GalleryAction::Verify(id.parse::<GalleryId>()?),
            }),
            CliCommand::RegimeSearch { samples: s } => {
                samples = s;
                Command::RegimeSearch
            }
            CliCommand::Decompose { scene } => {
                scene_path = scene.or(scene_path);
                Command::Decompose
            }
            CliCommand::Verify => Command::Verify,
        };
        let defaults = GalleryArgs::default();
        Ok(RunConfig {
            command,
            scene_path,
            pins: self.pins,
            params: ParamArgs { p: self.p, alpha: self.alpha, beta: self.beta },
            gallery: GalleryArgs {
                l: self.l.unwrap_or(defaults.l),
                h: self.h.unwrap_or(defaults.h),
                lambda: self.lambda,
                n: self.n,
            },
            output: self.out,
            format: match self.format {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
                FormatArg::Svg => Format::Svg,
            },
            seed: self.seed,
            mc_samples: self.mc_samples,
            samples,
        })
    }
}

/// Parses arguments, runs the command and writes output; returns the exit code.
pub fn main_from_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            let _ = writeln!(stderr, "{}", super::error_json(&Error::InvalidInput(e.to_string())));
            return 2;
        }
    };
    let to_file = cli.out.is_some();
    let result = cli.into_config().and_then(|cfg| execute(&cfg));
    match &result {
        Ok(o) if !to_file => {
            let _ = write!(stdout, "{}", o.text);
            if !o.text.ends_with('\n') {
                let _ = writeln!(stdout);
            }
        }
        Ok(_) => {}
        Err(e) => {
            let _ = writeln!(stderr, "{}", super::error_json(e));
        }
    }
    exit_code(&result)
}
