//! `symchar`: batch front end for the symmetric-group character library.

mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use symchar::suites::{Suite, SuiteRunner};
use symchar::{
    find_covering_pairs, hook_char_recursive, near_hook_value, parse_partition,
    structure_constant, structure_constant_bruteforce, two_row_char_recursive, CharTable, Error,
    MnEngine, NearHookShape, Partition, TableCache, DEFAULT_BRUTE_FORCE_LIMIT,
};

#[derive(Parser)]
#[command(name = "symchar", version, about = "Exact character computations for symmetric groups")]
struct Cli {
    /// Directory for cached character tables.
    #[arg(long, env = "SYMCHAR_CACHE", default_value = "./.symchar-cache", global = true)]
    cache_dir: PathBuf,

    /// Worker threads: a positive integer or "auto".
    #[arg(long, default_value = "auto", global = true)]
    workers: String,

    /// Largest n for permutation enumeration.
    #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_LIMIT, global = true)]
    brute_force_limit: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Mn,
    Formula,
    Recursion,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Theorem,
    Orthogonality,
    Formulas,
    Structure,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full character table of S_n.
    Chartable {
        n: usize,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate one character value.
    Eval {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value = "mn")]
        method: Method,
    },
    /// Pairs of classes on which every non-linear character vanishes on one member.
    VanishingPairs {
        n: usize,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
        /// Check every pair against the full table, skipping the parity and merge prefilters.
        #[arg(long)]
        no_prune: bool,
    },
    /// Class-algebra structure constant a(mu, nu; gamma).
    StructureConstant {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        gamma: String,
        /// Also count by permutation enumeration and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Run invariant suites over a range of n.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
    },
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Io(_) | Error::CorruptCache { .. } => 3,
            Error::BruteForceLimit { .. } => 4,
            Error::Inconsistent(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<String, Failure>;

struct Context {
    cache: TableCache,
    workers: usize,
    brute_force_limit: usize,
    engine: MnEngine,
}

impl Context {
    fn table(&self, n: usize) -> Result<CharTable, Failure> {
        if n == 0 {
            return Err(Failure::usage("n must be at least 1"));
        }
        Ok(self.cache.load_or_build(&self.engine, n, self.workers)?)
    }
}

fn resolve_workers(arg: &str) -> Result<usize, Failure> {
    if arg == "auto" {
        return Ok(std::thread::available_parallelism().map(|w| w.get()).unwrap_or(1));
    }
    match arg.parse::<usize>() {
        Ok(w) if w >= 1 => Ok(w),
        _ => Err(Failure::usage(format!("--workers must be a positive integer or \"auto\", got {arg:?}"))),
    }
}

fn parse(text: &str) -> Result<Partition, Failure> {
    Ok(parse_partition(text)?)
}

fn same_size(ps: &[&Partition]) -> Result<usize, Failure> {
    let n = ps[0].size();
    if ps.iter().any(|p| p.size() != n) {
        let sizes: Vec<String> = ps.iter().map(|p| p.size().to_string()).collect();
        return Err(Failure::usage(format!("partitions have different sizes: {}", sizes.join(", "))));
    }
    Ok(n)
}

fn cmd_chartable(ctx: &Context, n: usize, format: Format, out: Option<PathBuf>) -> CmdResult {
    let table = ctx.table(n)?;
    let text = match format {
        Format::Pretty => output::table_pretty(&table),
        Format::Json => output::table_json(&table),
        Format::Csv => output::table_csv(&table),
    };
    match out {
        Some(path) => {
            std::fs::write(&path, text).map_err(Error::from)?;
            eprintln!("wrote {}", path.display());
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn cmd_eval(ctx: &Context, lambda: &str, mu: &str, method: Method) -> CmdResult {
    let (lambda, mu) = (parse(lambda)?, parse(mu)?);
    same_size(&[&lambda, &mu])?;
    let value = match method {
        Method::Mn => ctx.engine.char_value(&lambda, &mu)?,
        Method::Formula => {
            let shape = NearHookShape::identify(&lambda).ok_or_else(|| {
                Failure::usage(format!("{lambda} is not one of the eight near-hook shapes"))
            })?;
            near_hook_value(shape, &mu)?
        }
        Method::Recursion => {
            if lambda.is_hook() {
                hook_char_recursive(lambda.len() - 1, &mu)?
            } else if lambda.len() == 2 {
                two_row_char_recursive(lambda.part(1), &mu)?
            } else {
                return Err(Failure::usage(format!("{lambda} is neither a hook nor a two-row shape")));
            }
        }
    };
    Ok(format!("{value}\n"))
}

fn cmd_vanishing_pairs(ctx: &Context, n: usize, format: Format, no_prune: bool) -> CmdResult {
    let table = ctx.table(n)?;
    let report = find_covering_pairs(n, &table, !no_prune)?;
    Ok(match format {
        Format::Pretty => output::report_pretty(&report),
        Format::Json => output::report_json(&report),
        Format::Csv => output::report_csv(&report),
    })
}

fn cmd_structure_constant(ctx: &Context, mu: &str, nu: &str, gamma: &str, verify: bool) -> CmdResult {
    let (mu, nu, gamma) = (parse(mu)?, parse(nu)?, parse(gamma)?);
    let n = same_size(&[&mu, &nu, &gamma])?;
    if verify && n > ctx.brute_force_limit {
        return Err(Error::BruteForceLimit { n, limit: ctx.brute_force_limit }.into());
    }
    let table = ctx.table(n)?;
    let value = structure_constant(&mu, &nu, &gamma, &table)?;
    if !verify {
        return Ok(format!("{value}\n"));
    }
    let brute = structure_constant_bruteforce(&mu, &nu, &gamma, ctx.brute_force_limit)?;
    let text = format!("character-sum: {value}\nbrute-force: {brute}\n");
    if brute != value {
        return Err(Failure { code: 1, message: format!("mismatch\n{text}") });
    }
    Ok(text)
}

fn cmd_verify(ctx: &Context, suite: SuiteArg, n_min: usize, n_max: usize) -> CmdResult {
    if n_min == 0 || n_min > n_max {
        return Err(Failure::usage(format!("invalid range --n-min {n_min} --n-max {n_max}")));
    }
    let suite = match suite {
        SuiteArg::Theorem => Suite::Theorem,
        SuiteArg::Orthogonality => Suite::Orthogonality,
        SuiteArg::Formulas => Suite::Formulas,
        SuiteArg::Structure => Suite::Structure,
        SuiteArg::All => Suite::All,
    };
    let runner = SuiteRunner {
        engine: &ctx.engine,
        cache: Some(ctx.cache.clone()),
        workers: ctx.workers,
        brute_force_limit: ctx.brute_force_limit,
    };
    let start = Instant::now();
    let outcomes = runner.run(suite, n_min, n_max)?;
    let mut text = String::new();
    let mut failed = 0;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        if !o.passed {
            failed += 1;
        }
        text.push_str(&format!(
            "{status}  {:<13} n={:<3} {}: {} ({:.3}s)\n",
            o.suite.to_string(),
            o.n,
            o.name,
            o.detail,
            o.elapsed.as_secs_f64()
        ));
    }
    text.push_str(&format!(
        "{} checks, {} failed, {:.2}s\n",
        outcomes.len(),
        failed,
        start.elapsed().as_secs_f64()
    ));
    if failed > 0 {
        return Err(Failure { code: 1, message: text });
    }
    Ok(text)
}

fn run(cli: Cli) -> CmdResult {
    let workers = resolve_workers(&cli.workers)?;
    // covering-pair search and brute-force counts use the global pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global();
    let ctx = Context {
        cache: TableCache::new(cli.cache_dir),
        workers,
        brute_force_limit: cli.brute_force_limit,
        engine: MnEngine::new(),
    };
    match cli.command {
        Command::Chartable { n, format, out } => cmd_chartable(&ctx, n, format, out),
        Command::Eval { lambda, mu, method } => cmd_eval(&ctx, &lambda, &mu, method),
        Command::VanishingPairs { n, format, no_prune } => cmd_vanishing_pairs(&ctx, n, format, no_prune),
        Command::StructureConstant { mu, nu, gamma, verify } => {
            cmd_structure_constant(&ctx, &mu, &nu, &gamma, verify)
        }
        Command::Verify { suite, n_min, n_max } => cmd_verify(&ctx, suite, n_min, n_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            // failed verification runs still print their report
            if f.code == 1 {
                print!("{}", f.message);
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
