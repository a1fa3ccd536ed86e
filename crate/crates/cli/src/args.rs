use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Clone, Parser)]
#[command(name = "polyclass", version, about = "Classify, bound and localize the real roots of cubics and quartics")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Relative tolerance for every threshold comparison.
    #[arg(long, global = true, default_value_t = 1e-9, value_name = "EPS")]
    pub tol: f64,

    /// Rational arithmetic; coefficients are integers or p/q fractions.
    #[arg(long, global = true)]
    pub exact: bool,

    /// Seed for random choices.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Append brute-force roots and an agreement flag to the report.
    #[arg(long, global = true)]
    pub oracle_check: bool,

    /// Run one command per line of FILE.
    #[arg(long, value_name = "FILE")]
    pub batch: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct PolyInput {
    /// Monic cubic x³ + a x² + b x + c.
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_hyphen_values = true)]
    pub cubic: Option<Vec<String>>,

    /// Monic quartic x⁴ + a x³ + b x² + c x + d.
    #[arg(long, num_args = 4, value_names = ["A", "B", "C", "D"], allow_hyphen_values = true)]
    pub quartic: Option<Vec<String>>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Classify the real roots.
    Classify(PolyInput),

    /// Localization intervals for a quartic with four real roots.
    Localize {
        #[arg(long, num_args = 4, value_names = ["A", "B", "C", "D"], allow_hyphen_values = true, required = true)]
        quartic: Vec<String>,
    },

    /// Build a quartic with a prescribed root nature.
    Synthesize {
        /// Target nature, e.g. four-distinct, double-middle, quadruple.
        #[arg(long)]
        nature: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
    },

    /// Discriminant cascade of x⁵ + p x⁴ + q x³ + r x² + s x + t.
    Quintic {
        #[arg(long, num_args = 5, value_names = ["P", "Q", "R", "S", "T"], allow_hyphen_values = true, required = true)]
        coeffs: Vec<String>,
    },

    /// Write the triangle or tetrahedron schematic as SVG.
    Render {
        #[command(flatten)]
        input: PolyInput,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Seeded classifier-vs-oracle consistency run.
    Selftest {
        #[arg(long, default_value_t = 2000)]
        samples: usize,
    },
}
