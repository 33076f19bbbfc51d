use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use psl13::forms::{export_catalog, Family, FormSet};
use psl13::polynomial::default_prime;
use psl13::qseries::{dump_series, named_series, SERIES_NAMES};
use psl13::verify::{build_store, run_selected, Context, Overrides, RunConfig, Suite, DEFAULT_ORDER, DEFAULT_SEED};

const CACHE_ENV: &str = "PSL13_CACHE_DIR";

#[derive(Parser)]
#[command(name = "psl13", version, about = "Exact checks of the PSL(2,13) invariant forms and their modular parametrizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a report.
    Verify(VerifyArgs),
    /// Print a q-expansion as "k/M<TAB>coefficient" lines.
    Qexp {
        name: String,
        #[arg(long)]
        order: i64,
    },
    /// Print a form catalog in the plain-text catalog format.
    ExportCatalog { family: String },
    /// Build the on-disk group closures used by the group suite.
    Cache {
        #[arg(long)]
        rebuild: bool,
        #[arg(long, env = CACHE_ENV)]
        cache_dir: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// all, or one of group, forms, invariance, modular, singularity, icosahedral, theta
    #[arg(long, default_value = "all")]
    suite: String,
    /// Truncation order N; series checks are exact through q^N.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: i64,
    /// Prime for the random identity tests, or "auto".
    #[arg(long, default_value = "auto")]
    prime: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Bits of working precision for the numeric embeddings.
    #[arg(long)]
    precision: Option<usize>,
    /// Structured output instead of the table.
    #[arg(long)]
    json: bool,
    /// Report zero milliseconds everywhere, for byte-identical reruns.
    #[arg(long)]
    no_timing: bool,
    #[arg(long, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
}

fn default_cache_dir() -> Option<PathBuf> {
    std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .map(|d| d.join("psl13"))
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    eprintln!("run `psl13 --help` for usage");
    ExitCode::from(2)
}

fn verify(args: VerifyArgs) -> ExitCode {
    let suite = match Suite::parse(&args.suite) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let prime = if args.prime == "auto" {
        default_prime()
    } else {
        match args.prime.parse() {
            Ok(p) => p,
            Err(_) => return usage(format!("--prime expects an integer or \"auto\", got {:?}", args.prime)),
        }
    };
    let defaults = RunConfig::default();
    let config = RunConfig {
        order: args.order,
        prime,
        seed: args.seed,
        precision: args.precision.unwrap_or(defaults.precision),
        timing: !args.no_timing,
        cache_dir: args.cache_dir.or_else(default_cache_dir),
        ..defaults
    };
    let ctx = match Context::new(config, Overrides::default()) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let report = run_selected(suite, &ctx);
    if args.json {
        emit(&(report.to_json() + "\n"));
    } else {
        emit(&report.to_table());
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn qexp(name: &str, order: i64) -> ExitCode {
    if !SERIES_NAMES.contains(&name) {
        return usage(format!("unknown expansion {name:?}; expected one of {}", SERIES_NAMES.join(", ")));
    }
    if order < 0 {
        return usage("--order must be nonnegative");
    }
    match named_series(name, order) {
        Ok(s) => {
            emit(&dump_series(&s));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn export(family: &str) -> ExitCode {
    let Some(family) = Family::parse(family) else {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        return usage(format!("unknown family {family:?}; expected one of {}", names.join(", ")));
    };
    match FormSet::standard().export_family(family) {
        Ok(cat) => {
            emit(&export_catalog(&cat));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn cache(rebuild: bool, dir: Option<PathBuf>) -> ExitCode {
    let Some(dir) = dir.or_else(default_cache_dir) else {
        return usage(format!("no cache directory; set {CACHE_ENV} or pass --cache-dir"));
    };
    match build_store(&dir, rebuild) {
        Ok(entries) => {
            for (file, status, order) in entries {
                emit(&format!("{}\t{:?}\torder {order}\n", dir.join(file).display(), status));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Qexp { name, order } => qexp(&name, order),
        Command::ExportCatalog { family } => export(&family),
        Command::Cache { rebuild, cache_dir } => cache(rebuild, cache_dir),
    }
}
