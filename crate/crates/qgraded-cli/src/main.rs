//! Command line for the deformed-algebra toolkit.
//!
//! Subcommands: `verify` (named suites), `matrix` (operator dumps),
//! `bracket` (graded bracket of two words), `normal` (normal ordering),
//! `partners` (partner-parameter enumeration), `report` (everything at
//! once). Exit status is zero exactly when every selected assertion passes.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qgraded::bracket::bracket;
use qgraded::fock::{
    adjoint_dag, annihilator, basic_number_operator, creator_natural, number_operator,
    reorder_even_odd,
};
use qgraded::param::monomial_g_factor;
use qgraded::partner::{solve_partners, solve_partners_extended, PartnerSet};
use qgraded::report::{run_report, run_suite, RunConfig, SUITES};
use qgraded::word::{normal_order, parse_word};
use qgraded::{Error, QParam64};

const WORD_GRAMMAR: &str = "\
Word syntax (bracket/normal):
  word   := term (('*' | space) term)*
  term   := gen '(' q ')' ('^' uint)?  |  'id'
  gen    := 'aq' | 'a'     lowering generator a_q
          | 'anat'         raising generator a_q~nat (plain transpose)
          | 'adag'         adjoint a_q^+ (stored as anat of the conjugate)
  q      := float | 're,im' | 'r@phi'
Examples: \"aq(-1)^1 * adag(1)^1\",  \"a(0.5@1.2)^2 anat(0.5@1.2)^2\"";

#[derive(Parser)]
#[command(
    name = "qgraded",
    about = "Complex-deformed Heisenberg algebras: verification suites, matrix dumps, graded brackets, partner parameters",
    long_about = None,
    after_help = WORD_GRAMMAR,
    version
)]
struct Cli {
    /// Truncated Fock-space dimension.
    #[arg(long, global = true, default_value_t = 64)]
    dim: usize,

    /// Residual tolerance for verification suites.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for randomized word sweeps.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Dump an operator matrix in the declared JSON schema.
    Matrix(MatrixArgs),
    /// Evaluate the graded bracket of two words.
    Bracket(BracketArgs),
    /// Normal order a single-parameter word.
    Normal(NormalArgs),
    /// Enumerate partner parameters for an input q.
    Partners(PartnerArgs),
    /// Run every suite plus figure reproduction and emit one document.
    Report(ReportArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: defining, fermionic, limits, susy-1m1, mapping, appendix, qqbar, all.
    #[arg(long)]
    suite: String,
}

#[derive(Args)]
struct MatrixArgs {
    /// Deformation parameter: "re,im", "r@phi", or a bare real.
    #[arg(long)]
    q: String,
    /// One of: a, anat, adag, N, basicN.
    #[arg(long)]
    which: String,
    /// One of: standard, evenodd.
    #[arg(long, default_value = "standard")]
    ordering: String,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct BracketArgs {
    /// Left word, e.g. "aq(-1)^1 * adag(1)^1".
    #[arg(long)]
    left: String,
    /// Right word.
    #[arg(long)]
    right: String,
}

#[derive(Args)]
struct NormalArgs {
    /// Word over a single parameter, e.g. "a(0.5@1.2)^2 anat(0.5@1.2)^2".
    #[arg(long)]
    word: String,
}

#[derive(Args)]
struct PartnerArgs {
    /// Input parameter: "re,im", "r@phi", or a bare real.
    #[arg(long)]
    q: String,
    /// Experimental: enumerate partner phases up to this bound (> 2π).
    #[arg(long)]
    extended_phases: Option<f64>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct ReportArgs {
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Option<String>, payload: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, payload).map_err(Error::from),
        None => {
            println!("{payload}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    let config = RunConfig::new(cli.dim, cli.tol, cli.seed)?;
    match &cli.command {
        Command::Verify(args) => {
            if !SUITES.contains(&args.suite.as_str()) {
                return Err(Error::UnknownSuite(args.suite.clone()));
            }
            let reports = run_suite(&args.suite, &config)?;
            let passed = reports.iter().all(|r| r.passed);
            let payload = match cli.format {
                Format::Json => serde_json::to_string_pretty(&reports).expect("serializable"),
                Format::Csv => reports.iter().map(|r| r.render_csv()).collect::<String>(),
                Format::Text => reports.iter().map(|r| r.render_text()).collect::<String>(),
            };
            println!("{payload}");
            Ok(passed)
        }
        Command::Matrix(args) => {
            let q = QParam64::parse(&args.q)?;
            let space = config.space();
            let op = match args.which.as_str() {
                "a" => annihilator(&q, &space),
                "anat" => creator_natural(&q, &space),
                "adag" => adjoint_dag(&q, &space),
                "N" => number_operator::<f64>(&space).to_operator(),
                "basicN" => basic_number_operator(&q, &space).to_operator(),
                other => return Err(Error::UnknownOperator(other.to_string())),
            };
            let (op, ordering) = match args.ordering.as_str() {
                "standard" => (op, qgraded::fock::BasisOrdering::Standard),
                "evenodd" => (
                    reorder_even_odd(&op, &space).0,
                    qgraded::fock::BasisOrdering::EvenOdd,
                ),
                other => {
                    return Err(Error::Parse(format!("unknown ordering '{other}'")));
                }
            };
            let dump = qgraded::fock::MatrixDump::new(&op, &q, ordering);
            emit(&args.out, &serde_json::to_string_pretty(&dump).expect("serializable"))?;
            Ok(true)
        }
        Command::Bracket(args) => {
            let space = config.space();
            let left = parse_word::<f64>(&args.left)?;
            let right = parse_word::<f64>(&args.right)?;
            let a = left.evaluate(&space);
            let b = right.evaluate(&space);
            let g = monomial_g_factor(&a.tag(), &b.tag());
            let br = bracket(&a, &b)?;
            let payload = serde_json::json!({
                "dim": space.dim(),
                "g": { "re": g.re, "im": g.im },
                "left_tag": { "degree": a.tag().degree, "radius": a.tag().radius },
                "right_tag": { "degree": b.tag().degree, "radius": b.tag().radius },
                "safe_rows": br.safe_rows(),
                "max_norm": br.max_norm_window(br.safe_rows()),
                "entries": br.matrix().iter()
                    .map(|z| [z.re, z.im]).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            Ok(true)
        }
        Command::Normal(args) => {
            let word = parse_word::<f64>(&args.word)?;
            let nf = normal_order(&word)?;
            let payload = serde_json::json!({
                "q": { "re": nf.q.value().re, "im": nf.q.value().im },
                "scalar": { "re": nf.scalar.re, "im": nf.scalar.im },
                "tag": { "degree": nf.tag.degree, "radius": nf.tag.radius },
                "terms": nf.terms.iter().map(|t| serde_json::json!({
                    "creators": t.creators,
                    "annihilators": t.annihilators,
                    "coefficient": t.coefficient.coefficients(),
                    "pretty": t.coefficient.to_string(),
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            Ok(true)
        }
        Command::Partners(args) => {
            let q = QParam64::parse(&args.q)?;
            let solutions = match args.extended_phases {
                Some(bound) => solve_partners_extended(&q, bound),
                None => solve_partners(&q),
            };
            let set = PartnerSet::new(&q, &solutions);
            let payload = match cli.format {
                Format::Json | Format::Text => set.to_json(),
                Format::Csv => set.to_csv(),
            };
            emit(&args.out, &payload)?;
            Ok(true)
        }
        Command::Report(args) => {
            let doc = run_report(&config)?;
            let payload = match cli.format {
                Format::Json | Format::Csv => {
                    serde_json::to_string_pretty(&doc).expect("serializable")
                }
                Format::Text => doc.render_text(),
            };
            emit(&args.out, &payload)?;
            Ok(doc.passed)
        }
    }
}
