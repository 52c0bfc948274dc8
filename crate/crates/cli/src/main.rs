//! `flatpart`: enumerate pattern-avoiding flattened partitions, tabulate
//! class sizes, print statistic distributions, run the bijections and
//! verify every identity.
//!
//! Exit status: 0 success, 1 identity failure, 2 usage error, 3 size guard,
//! 4 input outside a map's domain.

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use flatpart_core::{
    certify, enumerate_avoiding, series, verify, Bijection, CountTable, Error, Limits, Method, PatternSet, Permutation,
    QPolynomial, Scope,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "flatpart", version, about = "Pattern-avoiding flattened partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List F(n; patterns) in lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Comma-joined patterns, e.g. 213,231; empty for all flattened partitions.
        #[arg(long, default_value = "", value_parser = parse_patterns)]
        avoid: PatternSet,
        #[arg(long, value_enum, default_value_t = ListFormat::Lines)]
        format: ListFormat,
        /// Print comma form even when every entry is a single digit.
        #[arg(long)]
        comma: bool,
    },
    /// Size of F(n; patterns).
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "", value_parser = parse_patterns)]
        avoid: PatternSet,
        #[arg(long, default_value = "direct", value_parser = parse_method)]
        method: Method,
    },
    /// Counts for all 6 single patterns and all 15 pairs, n = 1..=n-max.
    Table {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Comma-joined subset of direct, brute, closed-form.
        #[arg(long, default_value = "direct,closed-form", value_delimiter = ',', value_parser = parse_method)]
        methods: Vec<Method>,
    },
    /// Distribution of runs over F(n; 213) or inversions over F(n; 312).
    Stats {
        #[arg(long, value_enum)]
        stat: Stat,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = StatsFormat::Text)]
        format: StatsFormat,
    },
    /// Apply a map to one permutation read from stdin, or certify it on a whole class.
    Bijection {
        #[arg(long, value_parser = parse_map)]
        name: Bijection,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Size of the flattened side; required for certify.
        #[arg(long, required_if_eq("mode", "certify"))]
        n: Option<usize>,
    },
    /// Check every identity in a scope and print the reports as JSON.
    Verify {
        #[arg(long, value_enum, default_value_t = ScopeArg::All)]
        scope: ScopeArg,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Lines,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stat {
    Runs,
    Inv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Apply,
    Certify,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    All,
    Core,
    Bijections,
    Series,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::All => Scope::All,
            ScopeArg::Core => Scope::Core,
            ScopeArg::Bijections => Scope::Bijections,
            ScopeArg::Series => Scope::Series,
        }
    }
}

fn parse_patterns(s: &str) -> Result<PatternSet, String> {
    PatternSet::parse(s).map_err(|e| e.to_string())
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_map(s: &str) -> Result<Bijection, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(io::Error),
    /// A verification run reported at least one violated identity.
    Reported,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let _ = out.flush();
            let code = match &failure {
                Failure::Lib(e) => {
                    eprintln!("flatpart: {e}");
                    match e {
                        Error::IdentityFailed(_) => 1,
                        Error::Guard { .. } => 3,
                        Error::OutOfDomain { .. } => 4,
                        _ => 2,
                    }
                }
                Failure::Usage(msg) => {
                    eprintln!("flatpart: {msg}");
                    2
                }
                Failure::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => 0,
                Failure::Io(e) => {
                    eprintln!("flatpart: {e}");
                    1
                }
                Failure::Reported => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Enumerate { n, avoid, format, comma } => cmd_enumerate(out, n, &avoid, format, comma),
        Command::Count { n, avoid, method } => cmd_count(out, n, &avoid, method),
        Command::Table { n_max, format, methods } => cmd_table(out, n_max, format, &methods),
        Command::Stats { stat, n, format } => cmd_stats(out, stat, n, format),
        Command::Bijection { name, mode, n } => match mode {
            Mode::Apply => cmd_apply(out, name),
            Mode::Certify => cmd_certify(out, name, n.expect("clap enforces --n for certify")),
        },
        Command::Verify { scope, n_max } => cmd_verify(out, scope.into(), n_max),
    }
}

fn render(p: &Permutation, comma: bool) -> String {
    if comma {
        p.to_comma()
    } else {
        p.to_string()
    }
}

fn cmd_enumerate(out: &mut impl Write, n: usize, ps: &PatternSet, format: ListFormat, comma: bool) -> Outcome {
    let members = enumerate_avoiding(n, ps)?;
    match format {
        ListFormat::Lines => {
            for p in members {
                writeln!(out, "{}", render(&p, comma))?;
            }
        }
        ListFormat::Json => {
            let words: Vec<String> = members.map(|p| render(&p, comma)).collect();
            let doc = json!({
                "n": n,
                "patterns": ps.to_string(),
                "count": words.len(),
                "permutations": words,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(())
}

fn cmd_count(out: &mut impl Write, n: usize, ps: &PatternSet, method: Method) -> Outcome {
    let limits = Limits::default();
    let count = match method {
        Method::Direct => limits.count_avoiding(n, ps)?,
        Method::Brute => limits.brute_force_avoiding(n, ps)?.len() as u64,
        Method::ClosedForm => {
            let value = series::closed_form_count(n, ps)
                .ok_or_else(|| Failure::Usage(format!("no closed form for {ps} at n = {n}")))?;
            writeln!(out, "{value}")?;
            return Ok(());
        }
    };
    writeln!(out, "{count}")?;
    Ok(())
}

fn cmd_table(out: &mut impl Write, n_max: usize, format: TableFormat, methods: &[Method]) -> Outcome {
    let sets: Vec<PatternSet> = PatternSet::singles().into_iter().chain(PatternSet::pairs()).collect();
    let table = CountTable::build(n_max, &sets, methods, &Limits::default())?;
    match format {
        TableFormat::Csv => write!(out, "{}", table.to_csv())?,
        TableFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&table.to_json())?)?,
    }
    Ok(())
}

fn cmd_stats(out: &mut impl Write, stat: Stat, n: usize, format: StatsFormat) -> Outcome {
    let (name, class, poly): (&str, &str, QPolynomial) = match stat {
        Stat::Runs => ("runs", "213", series::runs_distribution(n)?),
        Stat::Inv => ("inv", "312", series::inv_distribution(n)?),
    };
    match format {
        StatsFormat::Text => writeln!(out, "{poly}")?,
        StatsFormat::Json => {
            let coeffs: Vec<String> = poly.coeffs().iter().map(ToString::to_string).collect();
            let doc = json!({
                "stat": name,
                "n": n,
                "patterns": class,
                "coefficients": coeffs,
                "polynomial": poly.to_string(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(())
}

fn cmd_apply(out: &mut impl Write, map: Bijection) -> Outcome {
    let mut input = String::new();
    io::stdin().read_to_string(&mut input)?;
    let p = Permutation::parse_comma(input.trim()).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{}", map.apply(&p)?.to_comma())?;
    Ok(())
}

fn cmd_certify(out: &mut impl Write, map: Bijection, n: usize) -> Outcome {
    let cert = certify(map, n)?;
    writeln!(out, "{}", serde_json::to_string_pretty(&cert)?)?;
    Ok(())
}

fn cmd_verify(out: &mut impl Write, scope: Scope, n_max: usize) -> Outcome {
    let reports = verify::run(scope, n_max)?;
    writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?;
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}
