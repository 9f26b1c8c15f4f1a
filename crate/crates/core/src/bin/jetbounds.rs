//! Command-line front end: exact bound computation, integer witness search,
//! and the verification suites, with reproducible seeds and machine-readable
//! reports.
//!
//! Exit codes: 0 all checks pass; 1 witness absent or a check failed;
//! 2 usage error; 3 desk-scale guard tripped.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;

use jetbounds::bounds::DebarreSearchOptions;
use jetbounds::error::Error;
use jetbounds::groebner::GroebnerCaps;
use jetbounds::report::{Report, RunConfig};
use jetbounds::runner;
use jetbounds::wronskian::DEFAULT_SUBSET_CAP;

#[derive(Parser)]
#[command(
    name = "jetbounds",
    version,
    about = "Exact jet-Wronskian checks, intersection multiplicities, and effective degree bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for every randomized suite.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cap on monomial subsets visited by span tests.
    #[arg(long, global = true, default_value_t = DEFAULT_SUBSET_CAP)]
    cap_subsets: usize,

    /// Cap on variables accepted by the Gröbner engine.
    #[arg(long, global = true, default_value_t = GroebnerCaps::default().max_vars)]
    cap_groebner_vars: usize,

    /// Increase logging detail in text output.
    #[arg(short, long, global = true, action = ArgAction::Count)]
    verbose: u8,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a closed-form degree bound.
    Bound {
        #[command(subcommand)]
        kind: BoundKind,
    },
    /// Search an integer witness decomposition for a degree.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Subcommand)]
enum BoundKind {
    /// Hypersurface hyperbolicity bound in dimension n.
    Kobayashi {
        #[arg(long)]
        n: u32,
    },
    /// Complete-intersection ample-cotangent bound in projective N-space.
    Debarre {
        #[arg(long = "N")]
        big_n: u32,
    },
    /// Previously published bounds for dimension n, for comparison.
    Prior {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand)]
enum WitnessKind {
    /// Decompose d = n(n+1)(r+n) + ε with the required margins.
    Kobayashi {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: String,
    },
    /// Decompose d_p = δ_p(r+1) + ε_p with a shared r.
    Debarre {
        #[arg(long = "N")]
        big_n: u32,
        #[arg(long)]
        c: usize,
        /// Degrees, comma separated; one value is replicated to all factors.
        #[arg(long, value_delimiter = ',')]
        d: Vec<String>,
        /// Also sweep uniform δ above the minimum 2N-1.
        #[arg(long)]
        search_delta: bool,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Wronskian identity suites: vanishing, alternation, multilinearity,
    /// common factor, reparameterization weight.
    Wronskian {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
    },
    /// Local multiplicity δ^(N-1) of the pencil-curve fiber system.
    Lemma31 {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        delta: u32,
    },
    /// Local multiplicities (∏ δ_j^(k+1))/δ_i of the product fiber systems.
    LemmaProduct {
        #[arg(long, default_value_t = 2)]
        c: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_delimiter = ',', default_values_t = vec![2u32, 2])]
        delta: Vec<u32>,
    },
    /// Plücker coordinates and degree-1 verification of the pencil curves.
    Pluecker {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        delta: u32,
    },
    /// Zero-locus stability of the span test across degree bounds.
    Stabilization {
        #[arg(long, value_delimiter = ',', default_values_t = vec![2u32, 3, 4])]
        delta: Vec<u32>,
        #[arg(long, default_value_t = 10)]
        grid: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        seed: cli.seed,
        format: cli.format.name().into(),
        cap_subsets: cli.cap_subsets,
        cap_groebner_vars: cli.cap_groebner_vars,
        verbosity: cli.verbose,
    };
    match dispatch(&cli, &config) {
        Ok(report) => {
            if let Err(e) = emit(&cli, &report) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::ScaleGuard(_) => 3,
                Error::InvalidArgument(_) | Error::DimensionMismatch(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> std::io::Result<()> {
    let rendered = report.render(cli.format.name());
    match &cli.out {
        Some(path) => std::fs::write(path, rendered),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn parse_bigint(s: &str) -> Result<BigInt, Error> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("`{s}` is not an integer")))
}

fn dispatch(cli: &Cli, config: &RunConfig) -> Result<Report, Error> {
    match &cli.command {
        Command::Bound { kind } => match kind {
            BoundKind::Kobayashi { n } => runner::bound_kobayashi(*n, config),
            BoundKind::Debarre { big_n } => runner::bound_debarre(*big_n, config),
            BoundKind::Prior { n } => runner::bound_prior(*n, config),
        },
        Command::Witness { kind } => match kind {
            WitnessKind::Kobayashi { n, d } => {
                runner::witness_kobayashi(*n, &parse_bigint(d)?, config)
            }
            WitnessKind::Debarre {
                big_n,
                c,
                d,
                search_delta,
            } => {
                let mut degrees: Vec<BigInt> = d
                    .iter()
                    .map(|s| parse_bigint(s))
                    .collect::<Result<_, _>>()?;
                if degrees.len() == 1 && *c > 1 {
                    degrees = vec![degrees[0].clone(); *c];
                }
                let options = DebarreSearchOptions {
                    search_delta_above_min: *search_delta,
                    ..DebarreSearchOptions::default()
                };
                runner::witness_debarre(*big_n, *c, &degrees, &options, config)
            }
        },
        Command::Verify { suite } => match suite {
            VerifySuite::Wronskian { n, k, trials } => {
                runner::verify_wronskian(*n, *k, *trials, config)
            }
            VerifySuite::Lemma31 { big_n, delta } => runner::verify_lemma31(*big_n, *delta, config),
            VerifySuite::LemmaProduct { c, k, delta } => {
                runner::verify_lemma_product(*c, *k, delta, config)
            }
            VerifySuite::Pluecker { big_n, delta } => {
                runner::verify_pluecker(*big_n, *delta, config)
            }
            VerifySuite::Stabilization { delta, grid } => {
                runner::verify_stabilization(delta, *grid, config)
            }
        },
    }
}
