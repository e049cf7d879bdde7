use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fuzzlat::fuzzy_universe::{lift_grade_map, AnyFuzzySet, FuzzySet, GradeMap};
use fuzzlat::grade_lattices::{
    closed_join, closed_meet, hesitant_inter, hesitant_union, interval_leq, s_inter, s_order, s_union, ClosedSubset, Interval,
};
use fuzzlat::law_harness::{run_all, run_suite, suites, GenParams, HarnessError, Report};
use fuzzlat::{RealSubset, SetError, Tag};
use serde::Serialize;
use serde_json::json;

use crate::document::{parse_document, DocumentError};
use crate::parse::{parse_grade_expr, parse_set_expr, ParseError};
use crate::svg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "fuzzlat", version, about = "Exact lattice operations on fuzzy-set grades")]
struct Cli {
    /// Output format for results and errors.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(long, default_value_t = GenParams::default().samples)]
    samples: usize,
    #[arg(long, default_value_t = GenParams::default().seed)]
    seed: u64,
    /// Largest denominator of generated rationals.
    #[arg(long, default_value_t = GenParams::default().denominator_bound)]
    denom: u32,
    /// Atoms per generated set, at most.
    #[arg(long, default_value_t = GenParams::default().max_atoms)]
    atoms: usize,
    /// Labels per generated universe.
    #[arg(long, default_value_t = GenParams::default().universe_size)]
    universe: usize,
}

impl ParamArgs {
    fn params(&self) -> GenParams {
        GenParams {
            seed: self.seed,
            max_atoms: self.atoms,
            denominator_bound: self.denom,
            universe_size: self.universe,
            samples: self.samples,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply a binary set operation and print the canonical result.
    Eval {
        /// union, inter, difference, s_union, s_inter, h_union, h_inter, closed_join, closed_meet
        op: String,
        a: String,
        b: String,
    },
    /// Decide a relation between two sets.
    Order {
        /// s_order, subset, closed, interval
        rel: String,
        a: String,
        b: String,
    },
    /// Apply a named embedding to a fuzzy set from a document.
    Embed {
        /// phi, omega, lambda, iota, i, i-closed, theta, xi, gamma, phi-bar, lambda-bar, mu-bar, delta
        name: String,
        file: PathBuf,
        set: String,
    },
    /// Run one law suite, or every default suite with `all`.
    Check {
        suite: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run a commuting-diagram suite: xi-phi, mu-theta, mu-iota, delta-phi.
    Diagram {
        id: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Compare the symbolic operators with enumeration on a finite grid.
    Oracle {
        /// Grid denominator.
        #[arg(long, default_value_t = 64)]
        grid: u32,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = GenParams::default().seed)]
        seed: u64,
    },
    /// Write an SVG of a grade expression, or of a set expression with --set.
    Plot {
        expr: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        set: bool,
    },
    /// Full reports for every default suite.
    Report {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// List the registered suites.
    List,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse { arg: String, err: ParseError },
    Document(DocumentError),
    Domain(String),
    Harness(HarnessError),
    Io(String),
}

impl Failure {
    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Parse { err, .. } => match err {
                ParseError::Syntax { .. } => "syntax",
                ParseError::Range { .. } => "range",
                ParseError::EmptyAtom { .. } => "empty-atom",
                ParseError::Grade { .. } => "grade",
            },
            Failure::Document(_) => "document",
            Failure::Domain(_) => "domain",
            Failure::Harness(_) => "harness",
            Failure::Io(_) => "io",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Io(m) => m.clone(),
            Failure::Parse { arg, err } => format!("in `{arg}`: {err}"),
            Failure::Document(e) => e.to_string(),
            Failure::Harness(e) => e.to_string(),
        }
    }

    fn json(&self) -> serde_json::Value {
        let mut obj = json!({ "error": { "kind": self.kind(), "message": self.message() } });
        match self {
            Failure::Parse { arg, err } => {
                obj["error"]["input"] = json!(arg);
                obj["error"]["position"] = json!(err.pos());
            }
            Failure::Document(e) => obj["error"]["line"] = json!(e.line),
            _ => {}
        }
        obj
    }
}

fn domain(e: SetError) -> Failure {
    Failure::Domain(e.to_string())
}

fn set_arg(text: &str) -> Result<RealSubset, Failure> {
    parse_set_expr(text).map_err(|err| Failure::Parse { arg: text.to_string(), err })
}

fn closed_arg(text: &str) -> Result<ClosedSubset, Failure> {
    ClosedSubset::new(set_arg(text)?).map_err(domain)
}

fn interval_arg(text: &str) -> Result<Interval, Failure> {
    let set = set_arg(text)?;
    match set.atoms() {
        [a] if a.lo_closed() && a.hi_closed() && a.tag() == Tag::All => {
            Ok(Interval::new(a.lo().clone(), a.hi().clone()).expect("closed atom"))
        }
        _ => Err(Failure::Domain(format!("{set} is not a closed interval"))),
    }
}

fn eval(op: &str, a: &str, b: &str) -> Result<RealSubset, Failure> {
    let (s, t) = (set_arg(a)?, set_arg(b)?);
    Ok(match op.replace('-', "_").as_str() {
        "union" => s.union(&t),
        "inter" => s.intersect(&t),
        "difference" => s.difference(&t),
        "s_union" => s_union(&s, &t).map_err(domain)?,
        "s_inter" => s_inter(&s, &t).map_err(domain)?,
        "h_union" => hesitant_union(&s, &t).map_err(domain)?,
        "h_inter" => hesitant_inter(&s, &t).map_err(domain)?,
        "closed_join" => closed_join(&closed_arg(a)?, &closed_arg(b)?).into_set(),
        "closed_meet" => closed_meet(&closed_arg(a)?, &closed_arg(b)?).into_set(),
        _ => return Err(Failure::Usage(format!("unknown operation `{op}`"))),
    })
}

fn order(rel: &str, a: &str, b: &str) -> Result<bool, Failure> {
    match rel.replace('-', "_").as_str() {
        "s_order" => s_order(&set_arg(a)?, &set_arg(b)?).map_err(domain),
        "subset" => Ok(set_arg(a)?.subset_of(&set_arg(b)?)),
        "closed" => s_order(closed_arg(a)?.as_set(), closed_arg(b)?.as_set()).map_err(domain),
        "interval" => Ok(interval_leq(&interval_arg(a)?, &interval_arg(b)?)),
        _ => Err(Failure::Usage(format!("unknown relation `{rel}`"))),
    }
}

fn grade_map(name: &str) -> Result<GradeMap, Failure> {
    Ok(match name.replace('_', "-").as_str() {
        "phi" => GradeMap::Phi,
        "omega" => GradeMap::Omega,
        "lambda" => GradeMap::Lambda,
        "iota" => GradeMap::Iota,
        "i" => GradeMap::Inclusion,
        "i-closed" => GradeMap::ClosedInclusion,
        "theta" => GradeMap::Theta,
        "xi" => GradeMap::Xi,
        "gamma" => GradeMap::Gamma,
        "phi-bar" => GradeMap::PhiBar,
        "lambda-bar" => GradeMap::LambdaBar,
        "mu-bar" => GradeMap::MuBar,
        "delta" => GradeMap::Delta,
        _ => return Err(Failure::Usage(format!("unknown embedding `{name}`"))),
    })
}

/// `{label: grade}` with grades in the expression grammar.
fn grades_json<G: fmt::Display>(a: &FuzzySet<G>) -> serde_json::Value {
    a.iter().map(|(l, g)| (l.to_string(), json!(g.to_string()))).collect::<serde_json::Map<_, _>>().into()
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// What a successful command prints, and whether its checks passed.
struct Outcome {
    text: String,
    json: serde_json::Value,
    passed: bool,
}

impl Outcome {
    fn ok(text: String, json: serde_json::Value) -> Outcome {
        Outcome { text, json, passed: true }
    }
}

fn reports_outcome(reports: Vec<Report>, detailed: bool) -> Outcome {
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut text = String::new();
    for r in &reports {
        if detailed || !r.passed() {
            text.push_str(&format!("{r}\n"));
        } else {
            text.push_str(&format!("{}: {} ({} samples, seed {})\n", r.suite, r.verdict, r.samples, r.seed));
        }
    }
    text.push_str(&format!("{} suites, {} passed, {} failed", reports.len(), reports.len() - failed, failed));
    Outcome { text, json: json(&reports), passed: failed == 0 }
}

fn single_report(report: Report) -> Outcome {
    let passed = report.passed();
    Outcome { text: report.to_string(), json: json(&report), passed }
}

fn json<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("serializable report")
}

fn execute(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Eval { op, a, b } => {
            let r = eval(&op, &a, &b)?;
            Ok(Outcome::ok(r.to_string(), json!({ "result": r.to_string() })))
        }
        Command::Order { rel, a, b } => {
            let r = order(&rel, &a, &b)?;
            Ok(Outcome::ok(r.to_string(), json!({ "result": r })))
        }
        Command::Embed { name, file, set } => {
            let map = grade_map(&name)?;
            let doc = parse_document(&read(&file)?).map_err(Failure::Document)?;
            let source = doc.get(&set).ok_or_else(|| Failure::Usage(format!("no set `{set}` in {}", file.display())))?;
            let image = lift_grade_map(source, &map).map_err(|e| Failure::Domain(e.to_string()))?;
            let grades = match &image {
                AnyFuzzySet::Fs(a) => grades_json(a),
                AnyFuzzySet::Ivfs(a) => grades_json(a),
                AnyFuzzySet::Svfs { set, .. } => grades_json(set),
                AnyFuzzySet::Cvfs(a) => grades_json(a),
                AnyFuzzySet::T2fs(a) => grades_json(a),
            };
            let text = format!("{} {}({set}) = {image}", image.family(), map.name());
            Ok(Outcome::ok(text, json!({ "family": image.family().to_string(), "grades": grades })))
        }
        Command::Check { suite, params } => {
            let params = params.params();
            if suite == "all" {
                Ok(reports_outcome(run_all(&params).map_err(Failure::Harness)?, false))
            } else {
                Ok(single_report(run_suite(&suite, &params).map_err(Failure::Harness)?))
            }
        }
        Command::Diagram { id, params } => {
            let name = if id.starts_with("diagram-") { id } else { format!("diagram-{id}") };
            Ok(single_report(run_suite(&name, &params.params()).map_err(Failure::Harness)?))
        }
        Command::Oracle { grid, samples, seed } => {
            let params = GenParams { seed, denominator_bound: grid, samples, ..GenParams::default() };
            Ok(single_report(run_suite("grid-oracle", &params).map_err(Failure::Harness)?))
        }
        Command::Plot { expr, out, set } => {
            let svg = if set {
                svg::render_set(&set_arg(&expr)?)
            } else {
                svg::render_fn(&parse_grade_expr(&expr).map_err(|err| Failure::Parse { arg: expr.clone(), err })?)
            };
            std::fs::write(&out, &svg).map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
            Ok(Outcome::ok(format!("wrote {}", out.display()), json!({ "out": out.display().to_string(), "bytes": svg.len() })))
        }
        Command::Report { params } => Ok(reports_outcome(run_all(&params.params()).map_err(Failure::Harness)?, true)),
        Command::List => {
            let text = suites()
                .iter()
                .map(|s| format!("{:<24} {}{}", s.name, s.about, if s.in_all() { "" } else { " [not in all]" }))
                .collect::<Vec<_>>()
                .join("\n");
            let list: Vec<_> = suites().iter().map(|s| json!({ "name": s.name, "about": s.about, "in_all": s.in_all() })).collect();
            Ok(Outcome::ok(text, json!(list)))
        }
    }
}

/// `--format json` anywhere in `args`, for reporting errors clap itself raises.
fn wants_json(args: &[OsString]) -> bool {
    args.windows(2).any(|w| w[0] == "--format" && w[1] == "json") || args.iter().any(|a| a == "--format=json")
}

/// Runs the command line `args` (program name first). Exit code 0 on
/// success, 1 when a suite fails, 2 on usage, parse and input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            if wants_json(&args) {
                let msg = e.kind().to_string();
                let _ = writeln!(err, "{}", Failure::Usage(msg).json());
            } else {
                let _ = write!(err, "{}", e.render());
            }
            return 2;
        }
    };
    match execute(cli.command) {
        Ok(outcome) => {
            let _ = match cli.format {
                Format::Text => writeln!(out, "{}", outcome.text),
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&outcome.json).expect("json")),
            };
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(failure) => {
            let _ = match cli.format {
                Format::Text => writeln!(err, "error: {}", failure.message()),
                Format::Json => writeln!(err, "{}", failure.json()),
            };
            2
        }
    }
}
