//! Command-line front end: enumeration of the tree and permutation
//! families, evaluation in the example algebras, the verification suites
//! and the dimension tables.

pub mod enumerate;
pub mod eval;
pub mod suites;

use clap::{Parser, Subcommand};
use cha_core::{Error, Report};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "cha", version, about = "Combinatorial Hopf algebras: enumerate, evaluate, check")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Degree bound (default 4 for checks, 6 for enumeration and evaluation).
    #[arg(long, global = true, value_name = "N")]
    pub maxdeg: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, value_name = "N", default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the elements of a family of size n.
    Enumerate {
        /// pt, pbt, put, ut, perm or sp-poset.
        family: String,
        n: usize,
        /// Only irreducible permutations or connected posets.
        #[arg(long)]
        connected: bool,
    },
    /// Evaluate an expression `VERB ARG ...` in an algebra.
    Eval {
        /// dipt, dend, mr, qsym, fdb, gl, ck or brace-operad.
        algebra: String,
        expression: String,
    },
    /// Run a verification suite.
    Check { suite: String },
    /// Reproduce a table of counts.
    Table { name: String },
}

/// What the process prints and its exit status: 0 when everything
/// passes, 1 when a check fails, 2 for usage or input errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn out(stdout: String, code: i32) -> Self {
        Outcome { stdout, stderr: String::new(), code }
    }
}

const CHECK_DEGREE: usize = 4;
const ENUMERATION_DEGREE: usize = 6;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { Outcome::out(text, 0) } else { Outcome { stdout: String::new(), stderr: text, code } };
        }
    };
    execute(&cli)
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn render_error(cli: &Cli, e: &Error, input: Option<&str>) -> Outcome {
    if cli.json {
        let mut v = json!({"error": e.to_string()});
        if let Error::Parse { pos, .. } = e {
            v["position"] = json!(pos);
        }
        return Outcome { stdout: line(v), stderr: String::new(), code: 2 };
    }
    let mut text = format!("error: {e}\n");
    if let (Error::Parse { pos, .. }, Some(input)) = (e, input) {
        text.push_str(&format!("  {input}\n  {}^\n", " ".repeat(input[..(*pos).min(input.len())].chars().count())));
    }
    Outcome { stdout: String::new(), stderr: text, code: 2 }
}

fn report_outcome(cli: &Cli, report: &Report) -> Outcome {
    let code = if report.ok() { 0 } else { 1 };
    if cli.json {
        Outcome::out(line(report.to_json()), code)
    } else {
        Outcome::out(line(report), code)
    }
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Enumerate { family, n, connected } => {
            let bound = cli.maxdeg.unwrap_or(ENUMERATION_DEGREE);
            match enumerate::enumerate(family, *n, *connected, bound) {
                Ok(items) => {
                    if cli.json {
                        let v = json!({"family": family, "n": n, "connected": connected, "count": items.len(), "elements": items});
                        Outcome::out(line(v), 0)
                    } else {
                        let mut text = line(format!("count: {}", items.len()));
                        for item in &items {
                            text.push_str(&line(item));
                        }
                        Outcome::out(text, 0)
                    }
                }
                Err(e) => render_error(cli, &e, None),
            }
        }
        Command::Eval { algebra, expression } => {
            let bound = cli.maxdeg.unwrap_or(ENUMERATION_DEGREE);
            match eval::eval(algebra, expression, bound) {
                Ok(r) => {
                    if cli.json {
                        let v = json!({"algebra": algebra, "expression": expression, "result": r.text, "terms": r.json["terms"]});
                        Outcome::out(line(v), 0)
                    } else {
                        Outcome::out(line(r.text), 0)
                    }
                }
                Err(e) => render_error(cli, &e, Some(expression)),
            }
        }
        Command::Check { suite } => {
            let maxdeg = cli.maxdeg.unwrap_or(CHECK_DEGREE);
            match suites::run_suite(suite, maxdeg, cli.seed) {
                Ok(report) => report_outcome(cli, &report),
                Err(e) => render_error(cli, &e, None),
            }
        }
        Command::Table { name } => match suites::table(name) {
            Ok((rows, note)) => {
                let ok = rows.iter().all(suites::Row::matches);
                let code = if ok { 0 } else { 1 };
                if cli.json {
                    let rows: Vec<_> = rows
                        .iter()
                        .map(|r| json!({"name": r.name, "computed": r.computed, "expected": r.expected, "match": r.matches()}))
                        .collect();
                    Outcome::out(line(json!({"table": name, "rows": rows, "note": note, "ok": ok})), code)
                } else {
                    let mut text = String::new();
                    for r in &rows {
                        let status = if r.matches() { "PASS" } else { "FAIL" };
                        let mut row = format!("{status} {}: {}", r.name, r.computed.join(","));
                        if !r.matches() {
                            row.push_str(&format!(" (expected {})", r.expected.join(",")));
                        }
                        text.push_str(&line(row));
                    }
                    if let Some(note) = note {
                        text.push_str(&line(format!("note: {note}")));
                    }
                    Outcome::out(text, code)
                }
            }
            Err(e) => render_error(cli, &e, None),
        },
    }
}
