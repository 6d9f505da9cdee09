use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser, Serialize)]
#[command(
    name = "cquartic",
    version,
    about = "Clifford quartic forms: representations, identities, symmetries, zeta gamma factors"
)]
pub struct Cli {
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Leave out wall-clock fields so that reruns are byte-identical.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Build, verify and normalize representations.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Coefficients, values and exact identities of the quartic form.
    #[command(subcommand)]
    Quartic(QuarticCmd),
    /// Symmetry Lie algebras.
    #[command(subcommand)]
    Sym(SymCmd),
    /// Gamma matrices and zeta integrals.
    #[command(subcommand)]
    Zeta(ZetaCmd),
    /// Degenerate / exceptional / generic verdict and prehomogeneity.
    Classify(ClassifyArgs),
    /// Run every check over an enumeration of representations.
    VerifyAll(VerifyAllArgs),
}

/// `(p, q, mults)` given on the command line.
#[derive(Clone, Debug, Args, Serialize)]
pub struct PqArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    /// Multiplicities of the irreducibles, comma separated.
    #[arg(long = "mult", value_delimiter = ',', required = true)]
    pub mults: Vec<usize>,
}

/// A rep file (JSON, or the plain-text matrix format together with
/// `--p --q --mult`), or `--p --q --mult` alone to build one.
#[derive(Clone, Debug, Args, Serialize)]
pub struct RepSource {
    pub rep: Option<PathBuf>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long = "mult", value_delimiter = ',')]
    pub mults: Option<Vec<usize>>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepCmd {
    /// Direct sum of irreducibles with the given multiplicities.
    Build {
        #[command(flatten)]
        pq: PqArgs,
        /// Emit the plain-text matrix format instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Check symmetry, Clifford relations and self-duality exactly.
    Verify {
        #[command(flatten)]
        rep: RepSource,
    },
    /// Conjugate into the block canonical form.
    Canonical {
        #[command(flatten)]
        rep: RepSource,
    },
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuarticCmd {
    /// Exact coefficient table.
    Coeffs {
        #[command(flatten)]
        rep: RepSource,
    },
    /// Value at an integer point.
    Eval {
        #[command(flatten)]
        rep: RepSource,
        /// Integer coordinates, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        w: Vec<String>,
    },
    /// Gradient at an integer point.
    Grad {
        #[command(flatten)]
        rep: RepSource,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        w: Vec<String>,
    },
    /// P(grad P(w)) = 256 P(w)^3 at random integer points.
    Homaloidal {
        #[command(flatten)]
        rep: RepSource,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Exact witness that the form is a constant times a squared quadratic form.
    SquareDetect {
        #[command(flatten)]
        rep: RepSource,
    },
    /// Pfaffian identity for the 32-dimensional family with k copies.
    #[command(name = "check-32")]
    #[serde(rename = "check-32")]
    Check32 {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

#[derive(Clone, Copy, Debug, Args, Serialize)]
#[group(multiple = false)]
pub struct ModeArgs {
    /// Exact modular rank (default).
    #[arg(long)]
    pub exact: bool,
    /// Floating-point SVD.
    #[arg(long)]
    pub float: bool,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymCmd {
    /// Algebra of X with ᵀX S_i + S_i X = 0 for every i.
    H {
        #[command(flatten)]
        rep: RepSource,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Lie algebra of the quartic form.
    G {
        #[command(flatten)]
        rep: RepSource,
        /// Sample points for the float mode (0 = minimum).
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Whether the only symmetric solutions are the forced ones.
    Sharp {
        #[command(flatten)]
        rep: RepSource,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Predicted dimensions from the classification.
    Predict {
        #[command(flatten)]
        pq: PqArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Formula {
    Quartic,
    Pullback,
    Quadratic,
}

/// `(p, q, m)` for the quartic gamma matrix.
#[derive(Clone, Debug, Args, Serialize)]
pub struct PqmArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub m: usize,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZetaCmd {
    /// Gamma matrix at one point s.
    Gamma {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Degree; ignored by the quadratic formula.
        #[arg(long)]
        m: Option<usize>,
        /// Complex point, e.g. 0.4+0i or -1.5-2i.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, value_enum, default_value_t = Formula::Quartic)]
        formula: Formula,
    },
    /// Γ(s) Γ(−m/4 − s) = 1 for the closed form at random s.
    CheckInvolution {
        #[command(flatten)]
        pqm: PqmArgs,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Closed form against the pullback of the quadratic matrices at random s.
    CheckPullback {
        #[command(flatten)]
        pqm: PqmArgs,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Quadratic functional equation by quadrature (p+q ≤ 2).
    CheckFeQuadratic {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
    },
    /// Monte Carlo zeta integral of the quartic form.
    Mc {
        #[command(flatten)]
        rep: RepSource,
        /// Component label (+, -, -+, --, ...); all of W when omitted.
        #[arg(long, allow_hyphen_values = true)]
        component: Option<String>,
        /// Real part of s (a complex value is accepted too).
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
}

#[derive(Debug, Args, Serialize)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub pq: PqArgs,
    /// Include the reasoning behind each flag.
    #[arg(long)]
    pub explain: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyAllArgs {
    /// Largest p+q.
    #[arg(long, default_value_t = 6)]
    pub max_pq: usize,
    /// Largest dimension m.
    #[arg(long, default_value_t = 16)]
    pub max_m: usize,
    /// Largest total multiplicity.
    #[arg(long, default_value_t = 2)]
    pub max_total: usize,
    /// Random points for the homaloidal identity.
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    /// Random s values per gamma comparison.
    #[arg(long, default_value_t = 20)]
    pub s_count: usize,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}
