use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "amf", version, about = "Exact algebraic modular forms for the Hurwitz order")]
pub struct Cli {
    /// Worker threads for degree ranges (default: all cores).
    #[arg(long, env = "AMF_WORKERS", global = true)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bases of invariant harmonic polynomials.
    Basis(BasisArgs),
    /// Dimension table from the closed form, the trace formula and the generating series.
    Dims(DimsArgs),
    /// Hecke matrices and characteristic polynomials.
    Hecke(HeckeArgs),
    /// Mod-2 congruence certificates.
    Congruence(CongruenceArgs),
    /// Lattice points of the ternary norm form.
    CmPoints(CmArgs),
    /// Exact division by f3+ or f6-.
    Divide(DivideArgs),
    /// Recompute fixture files and compare exactly.
    Verify(VerifyArgs),
    /// Write database records as JSON.
    ExportDb(ExportArgs),
}

/// Inclusive degree range: `7`, `3..12` or `3..=12`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeRange {
    pub start: u32,
    pub end: u32,
}

impl DegreeRange {
    pub fn iter(self) -> impl Iterator<Item = u32> {
        self.start..=self.end
    }
}

impl FromStr for DegreeRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("bad degree {t:?}"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range {s:?}"));
        }
        Ok(DegreeRange { start, end })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Gamma,
    Plus,
    Minus,
    BothSigns,
}

impl VariantArg {
    pub fn variants(self) -> Vec<amf_core::Variant> {
        use amf_core::Variant;
        match self {
            VariantArg::Gamma => vec![Variant::Gamma],
            VariantArg::Plus => vec![Variant::Plus],
            VariantArg::Minus => vec![Variant::Minus],
            VariantArg::BothSigns => vec![Variant::Plus, Variant::Minus],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Main,
    Ecoord,
    Both,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Divisor {
    F3,
    F6minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FrameArg {
    X,
    Y,
}

impl From<FrameArg> for amf_core::Frame {
    fn from(f: FrameArg) -> Self {
        match f {
            FrameArg::X => amf_core::Frame::X,
            FrameArg::Y => amf_core::Frame::Y,
        }
    }
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    #[arg(long = "l")]
    pub degrees: DegreeRange,
    #[arg(long, value_enum, default_value_t = VariantArg::BothSigns)]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value_t = Algorithm::Main)]
    pub algorithm: Algorithm,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    #[arg(long, default_value_t = 12)]
    pub l_max: u32,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct HeckeArgs {
    #[arg(long = "l")]
    pub degrees: DegreeRange,
    /// Primes, comma separated.
    #[arg(long = "p", value_delimiter = ',', required = true)]
    pub primes: Vec<u64>,
    #[arg(long, value_enum, default_value_t = VariantArg::BothSigns)]
    pub variant: VariantArg,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct CongruenceArgs {
    #[arg(long = "l")]
    pub degrees: DegreeRange,
    /// Largest odd multiplier in the search.
    #[arg(long, default_value_t = 15)]
    pub max_multiplier: u32,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct CmArgs {
    /// Negative discriminant.
    #[arg(long, allow_hyphen_values = true)]
    pub disc: i64,
    /// Integral x-polynomial whose parity is reported at each point.
    #[arg(long)]
    pub poly: Option<String>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct DivideArgs {
    #[arg(long, value_enum)]
    pub by: Divisor,
    /// Polynomial text, e.g. "x1^3 - x1^2*x2 + 2/3*x2*x3^2".
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
    #[arg(long, value_enum, default_value_t = FrameArg::X)]
    pub frame: FrameArg,
    #[arg(long, value_enum)]
    pub out_frame: Option<FrameArg>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Fixture files.
    #[arg(required = true)]
    pub fixtures: Vec<PathBuf>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long = "l")]
    pub degrees: DegreeRange,
    #[arg(long, value_enum, default_value_t = Algorithm::Main)]
    pub algorithm: Algorithm,
    /// Hecke primes to include, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub hecke: Vec<u64>,
    /// Attach congruence certificates to even plus records.
    #[arg(long)]
    pub certificates: bool,
    #[arg(long, short)]
    pub output: PathBuf,
}
