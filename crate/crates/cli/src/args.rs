use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use selfdist_core::finite::StructureKind;
use selfdist_core::matrix::random::DEFAULT_SEED;
use selfdist_core::verify::{DEFAULT_STEP, DEFAULT_T_SAMPLES, NOETHER_TOLERANCE};

/// Finite and smooth self-distributive structures.
///
/// Exit status: 0 on success or a passing check, 1 on a negative result,
/// 2 on usage or input errors. JSON and CSV go to standard output,
/// summaries to standard error.
#[derive(Debug, Parser)]
#[command(name = "selfdist", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify an operation table as shelf, spindle or quandle.
    Classify {
        /// JSON file `{"order": n, "table": [[...], ...]}`.
        file: PathBuf,
    },
    /// List all tables of a given order and kind, one JSON document per line,
    /// followed by a count line.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Keep one representative per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Check the axioms of a realization on seeded random samples.
    Verify {
        #[command(flatten)]
        realization: RealizationArgs,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Defaults to 1e-8, or 1e-12 for the affine realizations.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Compare "x fixes y" with "y fixes x" over seeded random pairs.
    Noether {
        #[command(flatten)]
        realization: RealizationArgs,
        #[arg(long, default_value_t = 100)]
        pairs: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Points of the t grid spanning [-3, 3].
        #[arg(long, default_value_t = DEFAULT_T_SAMPLES)]
        t_samples: usize,
        #[arg(long, default_value_t = NOETHER_TOLERANCE)]
        tol: f64,
    },
    /// Emit the trajectory t ↦ x ▷_t y as CSV.
    Flow {
        #[command(flatten)]
        realization: RealizationArgs,
        /// JSON file holding x.
        #[arg(long)]
        x: PathBuf,
        /// JSON file holding y.
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        t_end: f64,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Central-difference bracket next to the analytic one.
    Bracket {
        #[command(flatten)]
        realization: RealizationArgs,
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        h: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Shelf,
    Spindle,
    Quandle,
}

impl From<Kind> for StructureKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Shelf => StructureKind::Shelf,
            Kind::Spindle => StructureKind::Spindle,
            Kind::Quandle => StructureKind::Quandle,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Rk4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RealizationName {
    MatrixHermitian,
    MatrixGeneral,
    Bloch,
    ConvexFlow,
    ConvexSpindle,
    FixedSpectrum,
    Union,
    /// Deliberately broken control: x ▷_t y = y + 1e-3·x.
    Corrupted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Body {
    Box,
    Simplex,
}

#[derive(Debug, Args)]
pub struct RealizationArgs {
    #[arg(long, value_enum)]
    pub realization: RealizationName,
    /// Matrix size or vector length.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Mixing bias of convex-spindle, in [0, 1].
    #[arg(long)]
    pub bias: Option<f64>,
    /// Body of convex-spindle.
    #[arg(long, value_enum)]
    pub body: Option<Body>,
    /// Comma-separated eigenvalues of fixed-spectrum (default 1, 2, ..., dim).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub spectrum: Option<Vec<f64>>,
}
