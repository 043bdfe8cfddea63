use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// Groebner bases, matrix factorizations and dimension bounds for
/// singularity categories of hypersurface rings.
#[derive(Debug, Parser)]
#[command(name = "sgdim", version)]
pub struct Cli {
    /// Output format (default from SGDIM_FORMAT, then the config file, then text).
    #[arg(long, global = true, env = "SGDIM_FORMAT", value_enum)]
    pub format: Option<Format>,

    /// TOML file with default options.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jacobian ideal of a complete intersection.
    Jacobian {
        /// Ring such as `QQ[x,y]/(x^4 - y^5)`.
        ring: String,
    },
    /// Least power of an element lying in the Jacobian ideal.
    Alpha {
        element: String,
        ring: String,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Loewy length of R/J (J the Jacobian ideal unless --ideal is given).
    Loewy {
        ring: String,
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Hilbert-Samuel multiplicity of J (the Jacobian ideal unless --ideal).
    Mult {
        ring: String,
        #[arg(long)]
        ideal: Option<String>,
        /// Parameter reduction Q of J, e.g. `(x^3)`.
        #[arg(long)]
        reduction: Option<String>,
        /// Largest n for which the length of R/J^(n+1) is computed.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Whether a comma-separated list of elements is a regular sequence.
    RegularSeq { elements: String, ring: String },
    /// Every applicable dimension bound, with the best one.
    Bounds(BoundsArgs),
    /// Matrix-factorization checks on a JSON factorization file.
    #[command(subcommand)]
    Mf(MfCommand),
    /// Regression suite over the worked examples.
    Verify {
        #[arg(value_parser = ["all"])]
        target: String,
    },
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    pub ring: String,
    /// Largest degree of candidate monomials.
    #[arg(long)]
    pub degree_cap: Option<u32>,
    #[arg(long)]
    pub max_candidates: Option<usize>,
    /// Known dimension of a quotient, as `RING=VALUE`; repeatable.
    #[arg(long = "assert-dim")]
    pub assert_dim: Vec<String>,
    /// Parameter reduction of J used for the multiplicity bound.
    #[arg(long)]
    pub reduction: Option<String>,
    /// Record jac R ⊆ ann D_sg(R) as an unqualified user assertion.
    #[arg(long)]
    pub no_jacobian_hypotheses: bool,
}

#[derive(Debug, Subcommand)]
pub enum MfCommand {
    /// Check AB = BA = f·I.
    Validate {
        #[arg(long)]
        file: PathBuf,
    },
    /// Monomials acting as zero on the factorization up to homotopy.
    Ann {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        degree_cap: Option<u32>,
    },
    /// K(x)⊗X ≃ X ⊕ X[1] for a stable annihilator x.
    KoszulSplit {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        x: String,
    },
    /// Split triangle K(x)⊗X → K(xy)⊗X → K(y)⊗X.
    Prop5 {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Also prove cone(u) ≃ K(y)⊗X with the exact solver.
        #[arg(long)]
        exactness: bool,
    },
    /// K(x_1..x_n)⊗X ≃ ⊕ X[i]^(n choose i).
    Binomial {
        #[arg(long)]
        file: PathBuf,
        /// Comma-separated elements.
        #[arg(long)]
        xs: String,
    },
}
