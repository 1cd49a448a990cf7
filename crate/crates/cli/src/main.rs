mod commands;
mod source;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "singspec", version, about = "Exact spectra of hypersurface singularities and polar degrees")]
pub struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Open,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// `]a, a+1[`
    Open,
    /// `]a, a+1]`
    Half,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and transform spectra.
    #[command(subcommand)]
    Spectrum(SpectrumCmd),
    /// Count spectral numbers in an interval.
    Deg {
        source: String,
        /// Left end point, a rational or -inf.
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        /// Right end point, a rational or +inf.
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, value_enum, default_value = "open")]
        left: Side,
        #[arg(long, value_enum, default_value = "closed")]
        right: Side,
    },
    /// Count spectral numbers in the unit window starting at `a`.
    Window {
        source: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(long, value_enum, default_value = "half")]
        kind: Kind,
    },
    /// Invariants of a catalog class.
    Germ {
        class: String,
        /// Number of variables.
        #[arg(long, default_value_t = 2)]
        vars: u32,
    },
    /// List catalog classes up to a Milnor number.
    Catalog {
        max_mu: u64,
        /// Comma-separated families, e.g. `A,D`.
        #[arg(long)]
        families: Option<String>,
    },
    /// Polar degree of a configuration.
    Pol {
        #[arg(long)]
        config: String,
    },
    /// Sectional Milnor number bound for a configuration of polar degree `k`.
    Huh {
        #[arg(long)]
        config: String,
        #[arg(long)]
        k: u64,
    },
    /// Semicontinuity of a configuration against the Fermat spectrum.
    Check {
        #[arg(long)]
        config: String,
        /// Only check half-open windows.
        #[arg(long)]
        no_open_variant: bool,
    },
    /// Semicontinuity of one spectrum against another.
    Compare {
        candidate: String,
        target: String,
        #[arg(long, value_enum, default_value = "half")]
        kind: Kind,
    },
    /// Enumerate configurations with polar degree `k` in `P^n` of degree `d`.
    Search {
        n: u32,
        d: u32,
        k: u64,
        /// Comma-separated families (required for k ≥ 3).
        #[arg(long)]
        whitelist: Option<String>,
        /// Disable a filter: alpha1, corank, huh or semicontinuity.
        #[arg(long = "no-filter")]
        no_filter: Vec<String>,
        /// Only check half-open windows.
        #[arg(long)]
        no_open_variant: bool,
        /// Worker threads; 1 runs the search serially.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Finite superset of the (n, d) pairs with polar degree `k`.
    Region { k: u64 },
    /// Individual dimension and degree bounds.
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// Verify the bundled lists of polar degree 1 and 2.
    VerifyHuh,
}

#[derive(Debug, Subcommand)]
pub enum SpectrumCmd {
    /// Spectrum of a catalog class in `vars` variables.
    Germ {
        class: String,
        #[arg(long, default_value_t = 2)]
        vars: u32,
    },
    /// Closed-form row of a curve class, with any discrepancy note.
    Table {
        class: String,
    },
    /// Spectrum of `x_1^d + ... + x_n^d`.
    Fermat {
        n: u32,
        d: u32,
    },
    /// Spectrum of a weighted homogeneous curve germ.
    Weights {
        w1: String,
        w2: String,
    },
    /// Spectrum from `value:multiplicity` pairs.
    Make {
        #[arg(allow_hyphen_values = true, required = true)]
        pairs: Vec<String>,
    },
    Sum {
        a: String,
        b: String,
    },
    /// Thom-Sebastiani join.
    Join {
        a: String,
        b: String,
    },
    Shift {
        source: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Suspension by `m` squares.
    Suspend {
        source: String,
        m: u32,
    },
    /// Total, range and symmetry.
    Info {
        source: String,
        #[arg(long, allow_hyphen_values = true)]
        center: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BoundsCmd {
    /// Least l with C(n+l, n) > k.
    Ell { n: u32, k: u64 },
    /// Strict upper bound on the degree.
    Degree { n: u32, k: u64 },
    /// Whether dimension n is excluded for polar degree k.
    Dim { n: u32, k: u64 },
    /// Lower bound on the smallest spectral number of each singular point.
    Alpha1 { n: u32, k: u64 },
    /// The refined (n, d) region for polar degree 2 in dimension n ≥ 3.
    RefinedK2,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::execute(&cli.command) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
            } else {
                out.text.trim_end().to_string()
            };
            let _ = writeln!(io::stdout().lock(), "{body}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
