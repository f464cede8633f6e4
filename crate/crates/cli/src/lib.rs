//! The `bn` command-line tool.
//!
//! Exit status is 0 on success, 1 on usage or input errors, and 2 when a
//! `verify` run completes but some check fails.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::str::FromStr;

use brandt::census::{census, census_from_formulas, DEFAULT_BRUTE_CAP};
use brandt::formulas::{average_formula, unsolvable_count};
use brandt::{Brandt, Mode};
use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bn",
    version,
    about = "Equations in one variable over the Brandt semigroup B_n"
)]
struct Cli {
    /// Dimension of B_n (required for every command but verify).
    #[arg(long, global = true)]
    n: Option<u32>,

    /// Worker threads for census enumeration: a positive integer or `auto`.
    #[arg(long, global = true, default_value = "auto")]
    threads: Threads,

    /// Largest n for which brute-force enumeration is allowed.
    #[arg(long = "brute-cap", global = true, default_value_t = DEFAULT_BRUTE_CAP)]
    brute_cap: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiply two elements, e.g. `mul "(1,2)" "(2,3)"`.
    Mul { a: String, b: String },
    /// Print the canonical form of a term.
    Normalize { term: String },
    /// List the solutions of `<term> = <term>` by exhaustive evaluation.
    Solve { equation: String },
    /// Distribution of solution counts over all equations.
    Census {
        #[arg(long, value_enum, default_value_t = CliMode::Symbolic)]
        mode: CliMode,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare enumerated censuses with the closed-form results for a range of n.
    Verify {
        /// Inclusive range `A..B` with 1 ≤ A ≤ B.
        #[arg(long)]
        range: NRange,
        #[arg(long, value_enum, default_value_t = CliMode::Symbolic)]
        mode: CliMode,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliMode {
    Brute,
    Symbolic,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Mode {
        match m {
            CliMode::Brute => Mode::Brute,
            CliMode::Symbolic => Mode::Symbolic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Threads {
    Auto,
    Fixed(usize),
}

impl FromStr for Threads {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            return Ok(Threads::Auto);
        }
        match s.parse::<usize>() {
            Ok(k) if k > 0 => Ok(Threads::Fixed(k)),
            _ => Err(format!("expected a positive integer or 'auto', got '{s}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct NRange(RangeInclusive<u32>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected A..B, got '{s}'"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid bound '{t}'"))
        };
        let (a, b) = (parse(a)?, parse(b)?);
        if a == 0 {
            return Err("n must be at least 1".into());
        }
        if a > b {
            return Err(format!("empty range {a}..{b}"));
        }
        Ok(NRange(a..=b))
    }
}

/// A failure that aborts the command before any data is written.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };

    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Threads::Fixed(k) = cli.threads {
            builder = builder.num_threads(k);
        }
        match builder.build() {
            Ok(pool) => pool,
            Err(e) => {
                let _ = writeln!(err, "error: cannot start worker threads: {e}");
                return EXIT_USAGE;
            }
        }
    };

    match pool.install(|| execute(&cli)) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dimension(cli: &Cli) -> Result<Brandt, UsageError> {
    let n = cli
        .n
        .ok_or_else(|| UsageError("--n is required for this command".into()))?;
    Ok(Brandt::new(n)?)
}

fn execute(cli: &Cli) -> Result<(String, u8), UsageError> {
    let mut out = String::new();
    match &cli.command {
        Command::Mul { a, b } => {
            let g = dimension(cli)?;
            let product = g.multiply(g.parse_element(a)?, g.parse_element(b)?)?;
            writeln!(out, "{product}")?;
        }
        Command::Normalize { term } => {
            let g = dimension(cli)?;
            let c = g.normalize(&g.parse_term(term)?)?;
            writeln!(out, "{c}")?;
        }
        Command::Solve { equation } => {
            let g = dimension(cli)?;
            let eq = g.parse_equation(equation)?;
            let solutions = g.solve(&eq);
            for x in solutions.members() {
                writeln!(out, "{x}")?;
            }
            writeln!(out, "count: {}", solutions.len())?;
        }
        Command::Census { mode, format } => {
            let g = dimension(cli)?;
            let table = census(&g, (*mode).into(), cli.brute_cap)?;
            match format {
                Format::Text => write!(out, "{table}")?,
                Format::Csv => out.push_str(&table.to_csv()),
                Format::Json => out.push_str(&table.to_json()),
            }
        }
        Command::Verify { range, mode } => {
            let report = verify(range.0.clone(), (*mode).into(), cli.brute_cap)?;
            out.push_str(&report.to_string());
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            return Ok((out, code));
        }
    }
    Ok((out, EXIT_OK))
}

/// Outcome of one comparison for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub n: u32,
    pub name: &'static str,
    pub mode: Mode,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status} n={} {} ({}): {}",
                c.n, c.name, c.mode, c.detail
            )?;
        }
        Ok(())
    }
}

/// For each `n` in `range`, enumerates the census (brute force while
/// `n ≤ brute_cap` if `mode` is brute, symbolic otherwise) and compares its
/// distribution, average and unsolvable count with the closed forms.
pub fn verify(
    range: RangeInclusive<u32>,
    mode: Mode,
    brute_cap: u32,
) -> Result<Report, brandt::Error> {
    let mut report = Report::default();
    for n in range {
        let g = Brandt::new(n)?;
        let mode = if mode == Mode::Brute && n <= brute_cap {
            Mode::Brute
        } else {
            Mode::Symbolic
        };
        let table = census(&g, mode, brute_cap)?;
        let formula = census_from_formulas(n);

        let rows_ok = table.same_rows(&formula);
        let detail = if rows_ok {
            format!(
                "{} buckets, {} equations",
                table.rows().len(),
                table.total()
            )
        } else {
            format!(
                "enumerated {:?} vs closed form {:?}",
                table.rows(),
                formula.rows()
            )
        };
        report.checks.push(Check {
            n,
            name: "distribution",
            mode,
            passed: rows_ok,
            detail,
        });

        let (avg, want) = (table.average(), average_formula(n));
        let detail = if avg == want {
            avg.to_string()
        } else {
            format!("{avg} != {want}")
        };
        report.checks.push(Check {
            n,
            name: "average",
            mode,
            passed: avg == want,
            detail,
        });

        let (zero, want) = (table.unsolvable(), unsolvable_count(n));
        let detail = if zero == want {
            zero.to_string()
        } else {
            format!("{zero} != {want}")
        };
        report.checks.push(Check {
            n,
            name: "unsolvable",
            mode,
            passed: zero == want,
            detail,
        });
    }
    Ok(report)
}
