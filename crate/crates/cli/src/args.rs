use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "dha",
    version,
    about = "Lens areas, Kepler inversion, beta quantiles and the half-area overlap offset of two unit disks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Newton,
    Series,
}

#[derive(Debug, Args)]
pub struct FormatArg {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TolArg {
    /// Absolute tolerance for iterative solves
    #[arg(long, default_value_t = 1e-14)]
    pub tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the half-area offset by all four methods and compare them
    Constant {
        #[command(flatten)]
        format: FormatArg,
        #[command(flatten)]
        tol: TolArg,
    },
    /// Overlap area of circles of radius R at the origin and r at (d, 0)
    #[command(name = "lens-area", allow_negative_numbers = true)]
    LensArea {
        #[arg(value_name = "R")]
        radius_a: f64,
        #[arg(value_name = "r")]
        radius_b: f64,
        #[arg(value_name = "d")]
        separation: f64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Centre separation giving a prescribed overlap
    #[command(
        allow_negative_numbers = true,
        group(ArgGroup::new("target").required(true).args(["fraction", "area"]))
    )]
    Offset {
        #[arg(value_name = "R")]
        radius_a: f64,
        #[arg(value_name = "r")]
        radius_b: f64,
        /// Overlap as a fraction of pi * min(R, r)^2
        #[arg(long)]
        fraction: Option<f64>,
        /// Overlap as an absolute area
        #[arg(long)]
        area: Option<f64>,
        #[command(flatten)]
        format: FormatArg,
        #[command(flatten)]
        tol: TolArg,
    },
    /// Solve x = y - a sin(y) for y
    #[command(allow_negative_numbers = true)]
    Kepler {
        a: f64,
        x: f64,
        #[arg(long, value_enum, default_value_t = Method::Newton)]
        method: Method,
        /// Number of series terms (series method only)
        #[arg(long, default_value_t = 50)]
        terms: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Inverse regularized incomplete beta I^-1_z(a, b)
    #[command(allow_negative_numbers = true)]
    Invbeta {
        z: f64,
        a: f64,
        b: f64,
        #[command(flatten)]
        format: FormatArg,
        #[command(flatten)]
        tol: TolArg,
    },
    /// Cross-check the analytic lens area against Monte Carlo and quadrature
    Verify {
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        format: FormatArg,
    },
}
