//! Command-line surface: exact adjacency indices of D-type Legendrian front
//! singularities, complete per-germ tables, and self-verification.

use std::process::ExitCode;

mod output;
mod verify;

use dmu_adjacency::types::{DGerm, MultisingularityType};
use dmu_adjacency::{catalog, formula, oracle};
use output::OutputFormat;

const USAGE: &str = "\
dmu-adjacency — exact adjacency indices of D-type Legendrian front singularities

USAGE:
    dmu-adjacency <COMMAND> [ARGS] [OPTIONS]

COMMANDS:
    compute <germ> <type>    the adjacency index of <germ> to <type>, with its
                             full term breakdown along both evaluation paths
    table <germ>             the complete adjacency table of a germ over all
                             A-type products of codimension <= mu + 2
    verify                   cross-check the closed formula, its proof form,
                             the brute-force arrangement oracle, the closed
                             forms, and odd-index sign invariance
    closed-forms             check the A1 and empty-type closed forms against
                             the general formula

OPTIONS:
    --format <json|csv|markdown>   output format; defaults to markdown on a
                                   terminal and json when redirected
    --quiet                        suppress progress output on stderr
    --include-zero                 table: keep rows with index 0
    --max-mu <K>                   verify: largest D-index to check (default 7)
    --cap <N>                      verify: word-enumeration budget (default 100000000)
    --max-k <K>                    closed-forms: largest k to check (default 12)
    -h, --help                     print this help

ARGUMENTS:
    <germ>  D<mu> with a mandatory sign for even mu: D4+, D4-, D6+ ...
            and no sign for odd mu: D5, D7 ... (ASCII only)
    <type>  a product of A-factors: \"A1\", \"A1^2 A3\", \"A2*A2\", or \"1\"
            for the empty type

EXIT CODES:
    0 success        1 verification failure     2 usage or parse error
    3 internal dual-path mismatch               4 enumeration cap exceeded
";

const EXIT_VERIFICATION_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_CAP: u8 = 4;

struct Failure {
    code: u8,
    message: Option<String>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: Some(message.into()),
        }
    }

    fn silent(code: u8) -> Self {
        Self {
            code,
            message: None,
        }
    }
}

impl From<dmu_adjacency::ParseError> for Failure {
    fn from(error: dmu_adjacency::ParseError) -> Self {
        Failure::usage(error.to_string())
    }
}

impl From<formula::FormulaError> for Failure {
    fn from(error: formula::FormulaError) -> Self {
        Self {
            code: EXIT_INTERNAL,
            message: Some(error.to_string()),
        }
    }
}

impl From<oracle::OracleError> for Failure {
    fn from(error: oracle::OracleError) -> Self {
        Self {
            code: EXIT_CAP,
            message: Some(error.to_string()),
        }
    }
}

fn main() -> ExitCode {
    match run(std::env::args().skip(1).collect()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if let Some(message) = failure.message {
                eprintln!("error: {message}");
                if failure.code == EXIT_USAGE {
                    eprintln!("run with --help for usage");
                }
            }
            ExitCode::from(failure.code)
        }
    }
}

struct Options {
    format: Option<OutputFormat>,
    quiet: bool,
    include_zero: bool,
    max_mu: u64,
    cap: u64,
    max_k: u64,
}

fn run(args: Vec<String>) -> Result<(), Failure> {
    let mut options = Options {
        format: None,
        quiet: false,
        include_zero: false,
        max_mu: 7,
        cap: oracle::DEFAULT_WORD_CAP,
        max_k: 12,
    };
    let mut positionals: Vec<String> = Vec::new();

    let mut args = args.into_iter();
    while let Some(arg) = args.next() {
        match arg.as_str() {
            "-h" | "--help" => {
                print!("{USAGE}");
                return Ok(());
            }
            "--quiet" => options.quiet = true,
            "--include-zero" => options.include_zero = true,
            "--format" => {
                let value = flag_value(&mut args, "--format")?;
                options.format = Some(
                    OutputFormat::parse(&value)
                        .ok_or_else(|| Failure::usage(format!("unknown format '{value}'")))?,
                );
            }
            "--max-mu" => options.max_mu = numeric_flag(&mut args, "--max-mu")?,
            "--cap" => options.cap = numeric_flag(&mut args, "--cap")?,
            "--max-k" => options.max_k = numeric_flag(&mut args, "--max-k")?,
            other if other.starts_with("--") => {
                return Err(Failure::usage(format!("unknown option '{other}'")));
            }
            _ => positionals.push(arg),
        }
    }

    let Some((command, rest)) = positionals.split_first() else {
        return Err(Failure::usage("missing command"));
    };
    match command.as_str() {
        "compute" => cmd_compute(rest, &options),
        "table" => cmd_table(rest, &options),
        "verify" => cmd_verify(rest, &options),
        "closed-forms" => cmd_closed_forms(rest, &options),
        other => Err(Failure::usage(format!("unknown command '{other}'"))),
    }
}

fn flag_value(args: &mut impl Iterator<Item = String>, flag: &str) -> Result<String, Failure> {
    args.next()
        .ok_or_else(|| Failure::usage(format!("{flag} requires a value")))
}

fn numeric_flag(args: &mut impl Iterator<Item = String>, flag: &str) -> Result<u64, Failure> {
    let value = flag_value(args, flag)?;
    value.parse().map_err(|_| {
        Failure::usage(format!(
            "{flag} expects a nonnegative integer, got '{value}'"
        ))
    })
}

fn expect_arity(rest: &[String], expected: usize, usage: &str) -> Result<(), Failure> {
    if rest.len() != expected {
        return Err(Failure::usage(format!("expected {usage}")));
    }
    Ok(())
}

fn cmd_compute(rest: &[String], options: &Options) -> Result<(), Failure> {
    expect_arity(rest, 2, "compute <germ> <type>")?;
    let germ: DGerm = rest[0].parse()?;
    let ty: MultisingularityType = rest[1].parse()?;
    let report = formula::adjacency_index(germ, &ty)?;
    print!(
        "{}",
        output::render_report(&report, OutputFormat::resolve(options.format))
    );
    Ok(())
}

fn cmd_table(rest: &[String], options: &Options) -> Result<(), Failure> {
    expect_arity(rest, 1, "table <germ>")?;
    let germ: DGerm = rest[0].parse()?;
    let entries = catalog::build_table(germ, options.include_zero)?;
    print!(
        "{}",
        output::render_table(germ, &entries, OutputFormat::resolve(options.format))
    );
    Ok(())
}

fn cmd_verify(rest: &[String], options: &Options) -> Result<(), Failure> {
    expect_arity(rest, 0, "verify [--max-mu K] [--cap N]")?;
    if options.max_mu < 4 {
        return Err(Failure::usage(
            "--max-mu must be at least 4 (the D series starts there)",
        ));
    }
    if options.cap == 0 {
        return Err(Failure::usage("--cap must be positive"));
    }
    let summary = verify::run_verify(options.max_mu, options.cap, options.quiet)?;
    print!(
        "{}",
        output::render_verify(&summary, OutputFormat::resolve(options.format))
    );
    if summary.all_passed() {
        Ok(())
    } else {
        report_failures(&summary.failures);
        Err(Failure::silent(EXIT_VERIFICATION_FAILURE))
    }
}

/// Mismatch details go to stderr regardless of the chosen output format.
fn report_failures(failures: &[String]) {
    for failure in failures {
        eprintln!("FAIL: {failure}");
    }
}

fn cmd_closed_forms(rest: &[String], options: &Options) -> Result<(), Failure> {
    expect_arity(rest, 0, "closed-forms [--max-k K]")?;
    if options.max_k < 2 {
        return Err(Failure::usage("--max-k must be at least 2"));
    }
    let summary = verify::run_closed_forms(options.max_k)?;
    print!(
        "{}",
        output::render_closed_forms(&summary, OutputFormat::resolve(options.format))
    );
    if summary.all_passed() {
        Ok(())
    } else {
        report_failures(&summary.failures);
        Err(Failure::silent(EXIT_VERIFICATION_FAILURE))
    }
}
