//! Command-line front end: polynomial tables, the verification suite, flag
//! series, Rothe diagrams and reduced words.
//!
//! [`run`] does all the work and returns the exit code with the text to print,
//! so the binary stays a thin wrapper and tests can call it directly.

use std::fmt::Write as _;

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use weyl_mahonian::algebra::DEFAULT_BOUND;
use weyl_mahonian::flaggeom::{enumerate_flags, flag_series, rothe_diagram, FlagType, FqSpace};
use weyl_mahonian::statistics::{
    default_grid, mahonian_direct, mahonian_recursive, run_checks, CheckParams, GridOptions, StatisticSpec,
    CHECK_NAMES,
};
use weyl_mahonian::weylgroups::{greedy_reduced_word, length, Family, GroupFamily, SignedPerm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "wm", version, about = "Weyl-Mahonian polynomials and their finite-field checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the polynomial Σ q^length t^Wmaj (times s^β with --euler).
    Mahonian(MahonianArgs),
    /// Run named identity checks and print a pass/fail table.
    Verify(VerifyArgs),
    /// Print the weighted-flag series of a space over F_p.
    Flags(FlagsArgs),
    /// Print the Rothe diagram of a permutation.
    Rothe(RotheArgs),
    /// Print the length and a greedy reduced word of a permutation.
    Word(WordArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Enum,
    Recur,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolyFormat {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DiagramFormat {
    Text,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesFormat {
    Text,
    Json,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|_| format!("unknown family `{s}` (expected A, BC or D)"))
}

fn parse_type(s: &str) -> Result<FlagType, String> {
    s.parse().map_err(|_| format!("unknown type `{s}` (expected A, C, B or D)"))
}

fn parse_perm(s: &str) -> Result<SignedPerm, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Args, Debug)]
struct MahonianArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    d: usize,
    #[arg(long, value_enum, default_value = "recur")]
    method: Method,
    /// Mark the descent number β with the variable s.
    #[arg(long)]
    euler: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: PolyFormat,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check to run (repeatable).
    #[arg(long, value_parser = PossibleValuesParser::new(CHECK_NAMES))]
    check: Vec<String>,
    /// Run every registered check.
    #[arg(long, conflicts_with = "check")]
    all: bool,
    /// Largest rank in each grid.
    #[arg(long)]
    max_d: Option<usize>,
    /// Comma-separated primes for the finite-field checks.
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u32>>,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    trunc: usize,
    /// Print the reports as a JSON array instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct FlagsArgs {
    #[arg(long)]
    prime: u32,
    /// A, C (or BC), B or D.
    #[arg(long, alias = "type", value_parser = parse_type)]
    family: FlagType,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    trunc: usize,
    /// Mark the total weight α with the variable s.
    #[arg(long)]
    alpha: bool,
    /// List the flags, one JSON array of RREF bases per line.
    #[arg(long)]
    list: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: SeriesFormat,
}

#[derive(Args, Debug)]
struct RotheArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_perm)]
    perm: SignedPerm,
    #[arg(long = "type", value_parser = parse_type)]
    kind: FlagType,
    #[arg(long, value_enum, default_value = "text")]
    format: DiagramFormat,
}

#[derive(Args, Debug)]
struct WordArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_perm)]
    perm: SignedPerm,
    #[arg(long, value_parser = parse_family)]
    family: Family,
}

/// Parses `args` (without the program name) and runs the subcommand.
pub fn run<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("wm")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let result = match cli.command {
        Command::Mahonian(a) => mahonian(a),
        Command::Verify(a) => verify(a),
        Command::Flags(a) => flags(a),
        Command::Rothe(a) => rothe(a),
        Command::Word(a) => word(a),
    };
    match result {
        Ok(out) => out,
        Err(e) => (EXIT_USAGE, format!("error: {e}\n")),
    }
}

type Outcome = weyl_mahonian::Result<(i32, String)>;

fn mahonian(a: MahonianArgs) -> Outcome {
    let spec = StatisticSpec { family: a.family, euler_extended: a.euler };
    let m = match a.method {
        Method::Enum => mahonian_direct(spec, a.d)?,
        Method::Recur => mahonian_recursive(spec, a.d)?,
    };
    let text = match a.format {
        PolyFormat::Text => m.to_text(),
        PolyFormat::Latex => m.to_latex_table(),
        PolyFormat::Json => m.to_json(),
    };
    Ok((EXIT_OK, text + "\n"))
}

fn verify(a: VerifyArgs) -> Outcome {
    let names: Vec<String> = if a.all {
        CHECK_NAMES.iter().map(|s| s.to_string()).collect()
    } else if a.check.is_empty() {
        return Ok((EXIT_USAGE, "error: pass --check NAME or --all\n".to_string()));
    } else {
        a.check
    };
    let opts = GridOptions { max_d: a.max_d, primes: a.primes, trunc: a.trunc };
    let mut jobs: Vec<(String, CheckParams)> = Vec::new();
    for name in &names {
        jobs.extend(default_grid(name, &opts)?.into_iter().map(|p| (name.clone(), p)));
    }
    let reports = run_checks(&jobs).into_iter().collect::<weyl_mahonian::Result<Vec<_>>>()?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    let code = if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED };
    if a.json {
        let json = serde_json::to_string_pretty(&reports).expect("reports serialize");
        return Ok((code, json + "\n"));
    }
    let name_w = reports.iter().map(|r| r.name.len()).max().unwrap_or(5).max(5);
    let param_w = reports.iter().map(|r| r.params.to_string().len()).max().unwrap_or(6).max(6);
    let mut out = String::new();
    let _ = writeln!(out, "{:name_w$}  {:param_w$}  result", "check", "params");
    for r in &reports {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{:name_w$}  {:param_w$}  {verdict}", r.name, r.params.to_string());
        if let Some(d) = &r.discrepancy {
            let _ = writeln!(out, "    {d}");
        }
    }
    let _ = writeln!(out, "{} checks, {} passed, {} failed", reports.len(), reports.len() - failed, failed);
    Ok((code, out))
}

fn flags(a: FlagsArgs) -> Outcome {
    let space = FqSpace::of_type(a.family, a.prime, a.d)?;
    if a.list {
        let mut out = String::new();
        for fl in enumerate_flags(&space)? {
            out.push_str(&fl.to_json());
            out.push('\n');
        }
        return Ok((EXIT_OK, out));
    }
    let series = flag_series(&space, a.trunc, a.alpha)?;
    let text = match a.format {
        SeriesFormat::Text => series.to_string(),
        SeriesFormat::Json => serde_json::to_string(&series).expect("series serialize"),
    };
    Ok((EXIT_OK, text + "\n"))
}

fn rothe(a: RotheArgs) -> Outcome {
    let r = rothe_diagram(&a.perm, a.kind)?;
    let text = match a.format {
        DiagramFormat::Text => r.render_text(),
        DiagramFormat::Latex => r.render_latex() + "\n",
    };
    Ok((EXIT_OK, text))
}

fn word(a: WordArgs) -> Outcome {
    let fam = GroupFamily::new(a.family, a.perm.rank());
    let l = length(&a.perm, &fam)?;
    let w = greedy_reduced_word(&a.perm, &fam)?;
    let letters: Vec<String> = w.iter().map(|i| format!("s{i}")).collect();
    let shown = if letters.is_empty() { "id".to_string() } else { letters.join(" ") };
    Ok((EXIT_OK, format!("length: {l}\nword: {shown}\n")))
}
