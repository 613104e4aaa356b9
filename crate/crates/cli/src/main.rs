use std::path::{Path, PathBuf};
use std::process::ExitCode;

use areg_cli::commands::{self, Options, SliceInput};
use areg_cli::{CliError, PairDescriptorFile, EXIT_ERROR};
use areg_core::catalog::Catalog;
use areg_core::sampling::Config;
use clap::{Args, Parser, Subcommand};

/// Decide a-regularity of reductive pairs (g, h) of classical Lie algebras.
///
/// Exit codes: 0 YES, 3 NO, 2 routes disagree or a table mismatch, 1 error.
#[derive(Parser)]
#[command(name = "areg", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = Config::default().seed)]
    seed: u64,

    /// Samples per randomized test.
    #[arg(long, global = true, default_value_t = Config::default().trials)]
    trials: u32,

    /// Sample coefficients are drawn from [-B, B].
    #[arg(long, global = true, default_value_t = Config::default().coeff_bound)]
    coeff_bound: u64,

    /// Compact JSON on stdout (default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Indented JSON on stdout and a human summary on stderr.
    #[arg(long, global = true)]
    pretty: bool,

    /// Table catalog to use instead of the built-in one.
    #[arg(long, global = true, value_name = "PATH")]
    catalog: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether h^⊥ contains a regular element of g.
    Decide { pair: PathBuf },
    /// Recompute every constructible catalog row up to an ambient rank.
    VerifyTables {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
    },
    /// Ideals of h and the splitting of the pair along the factors of g.
    Decompose { pair: PathBuf },
    /// Principal sl2-triple and Slodowy slice of g, and non-emptiness of the
    /// hyperkähler slice for a pair.
    Slice {
        /// Pair descriptor; its ambient algebra is used.
        #[arg(required_unless_present = "algebra", conflicts_with = "algebra")]
        pair: Option<PathBuf>,
        /// Ambient algebra such as `A2` or `B2+C3`.
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Generic stabilizer of h acting on h^⊥, with Knop's c and rk.
    Stabilizer { pair: PathBuf },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_pair(path: &Path) -> Result<PairDescriptorFile, CliError> {
    PairDescriptorFile::parse(&read(path)?).map_err(|e| match e {
        CliError::Field { field, message } => CliError::Field {
            field: format!("{}: {field}", path.display()),
            message,
        },
        other => other,
    })
}

fn run(cli: Cli) -> Result<commands::Outcome, CliError> {
    let g = cli.global;
    let catalog = match &g.catalog {
        Some(path) => Catalog::from_json(&read(path)?)?,
        None => Catalog::builtin()?,
    };
    let opts = Options {
        cfg: Config {
            seed: g.seed,
            trials: g.trials,
            coeff_bound: g.coeff_bound,
        },
        pretty: g.pretty,
        catalog,
    };
    match cli.command {
        Command::Decide { pair } => commands::decide(load_pair(&pair)?, &opts),
        Command::VerifyTables { max_rank } => commands::verify_tables(max_rank, &opts),
        Command::Decompose { pair } => commands::decompose(load_pair(&pair)?, &opts),
        Command::Slice { pair, algebra, samples } => {
            let input = match (pair, algebra) {
                (Some(p), _) => SliceInput::Pair(load_pair(&p)?),
                (None, Some(a)) => SliceInput::Algebra(commands::parse_algebra(&a)?),
                (None, None) => return Err(CliError::Usage("give a pair file or --algebra".into())),
            };
            commands::slice(input, samples, &opts)
        }
        Command::Stabilizer { pair } => commands::stabilizer(load_pair(&pair)?, &opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.global.pretty;
    match run(cli) {
        Ok(out) => {
            println!("{}", out.stdout);
            if pretty {
                eprintln!("{}", out.summary);
            }
            ExitCode::from(out.exit_code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
