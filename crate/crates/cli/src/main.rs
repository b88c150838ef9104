//! `gsla`: construct, verify, decompose and recognize graded Lie algebras
//! and graded modules from JSON files.

mod commands;
mod report;

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gsla_core::abgroup::GroupElem;
use gsla_core::catalog::{Params, ENTRIES};
use gsla_core::exactfield::FieldSpec;
use gsla_core::{Error, Options};
use serde_json::Value;

use report::{Outcome, Report};

#[derive(Parser, Debug)]
#[command(name = "gsla", version, about = "Exact computation with group-graded Lie algebras and modules")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// seed for randomized probes
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// random probes per homogeneous component
    #[arg(long, global = true, default_value_t = 8)]
    probes: usize,
    /// cap on degree subsets enumerated by support searches
    #[arg(long, global = true, default_value_t = 65536)]
    max_subsets: u64,
    /// comma-separated permutation of the degrees admitting invertible
    /// endomorphisms, e.g. 0,2,1,3
    #[arg(long, global = true)]
    commute_order: Option<String>,
    /// emit JSON reports
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check antisymmetry, Jacobi and grading of an algebra
    Verify {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Build g(Q, P, a) from a request {group, P, a}
    LoopBuild {
        #[arg(default_value = "-")]
        input: String,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Split into the ideals of a loop presentation
    Decompose {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Present a graded simple algebra as a loop algebra
    Recognize {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Degree-0 endomorphisms of a graded simple module
    Schur {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Split a module into graded simple summands
    Weyl {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Check the module axioms and graded simplicity
    ModVerify {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Present a graded simple module as a loop module
    ModRecognize {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Emit a built-in algebra or module (`list` shows the names)
    Catalog {
        name: String,
        /// rationals, cyclotomic:N or prime:P
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        h1: Option<usize>,
        #[arg(long)]
        h2: Option<usize>,
        /// prime for example0
        #[arg(long)]
        p: Option<u64>,
        /// moduli of Q, e.g. 2,2
        #[arg(long)]
        moduli: Option<String>,
        /// a generator of P, e.g. 1,0; repeatable
        #[arg(long = "p-gen")]
        p_gens: Vec<String>,
        /// index of the sl2 grading of Q/P
        #[arg(long)]
        grading: Option<usize>,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn parse_list<T: std::str::FromStr>(what: &str, s: &str) -> Result<Vec<T>, Error> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| invalid(format!("{what}: cannot parse {t:?}"))))
        .collect()
}

fn parse_field(s: &str) -> Result<FieldSpec, Error> {
    let bad = || invalid(format!("--field: expected rationals, cyclotomic:N or prime:P, got {s:?}"));
    match s.split_once(':') {
        None if s == "rationals" || s == "Q" => Ok(FieldSpec::Rationals),
        Some(("cyclotomic", n)) => n.parse().map(|n| FieldSpec::Cyclotomic { n }).map_err(|_| bad()),
        Some(("prime", p)) => p.parse().map(|p| FieldSpec::Prime { p }).map_err(|_| bad()),
        _ => Err(bad()),
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut s).map_err(|e| invalid(format!("stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| invalid(format!("{path}: {e}")))?;
    }
    Ok(s)
}

fn write_doc(path: &str, doc: &Value) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(doc).expect("plain data") + "\n";
    if path == "-" {
        std::io::stdout().write_all(text.as_bytes()).map_err(|e| invalid(format!("stdout: {e}")))
    } else {
        std::fs::write(path, text).map_err(|e| invalid(format!("{path}: {e}")))
    }
}

fn emit(report: &Report, opts: &Options, json: bool) -> ExitCode {
    let text = if json {
        serde_json::to_string_pretty(&report.to_json(opts)).expect("plain data") + "\n"
    } else {
        report.to_text()
    };
    // a closed pipe downstream is not our failure
    let _ = std::io::stdout().write_all(text.as_bytes());
    if report.outcome == Outcome::Invalid {
        if let Some(c) = report.certificates.iter().find(|c| !c.passed) {
            eprintln!("gsla: {}", c.detail);
        }
    }
    ExitCode::from(report.outcome as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut opts = Options {
        seed: cli.seed,
        probes: cli.probes,
        max_subsets: cli.max_subsets,
        commute_order: None,
    };
    let fail = |cmd: &'static str, e: Error, opts: &Options| emit(&Report::new(cmd).failed_with(&e), opts, cli.json);
    if let Some(s) = &cli.commute_order {
        match parse_list("--commute-order", s) {
            Ok(v) => opts.commute_order = Some(v),
            Err(e) => return fail("gsla", e, &opts),
        }
    }

    let (name, input) = match &cli.cmd {
        Cmd::Verify { input } => ("verify", input),
        Cmd::LoopBuild { input, .. } => ("loop-build", input),
        Cmd::Decompose { input } => ("decompose", input),
        Cmd::Recognize { input } => ("recognize", input),
        Cmd::Schur { input } => ("schur", input),
        Cmd::Weyl { input } => ("weyl", input),
        Cmd::ModVerify { input } => ("mod-verify", input),
        Cmd::ModRecognize { input } => ("mod-recognize", input),
        Cmd::Catalog {
            name,
            field,
            n,
            h1,
            h2,
            p,
            moduli,
            p_gens,
            grading,
            output,
        } => {
            if name == "list" {
                let mut out = String::new();
                for (n, args, what) in ENTRIES {
                    out += &format!("{n:16} {args:40} {what}\n");
                }
                let _ = std::io::stdout().write_all(out.as_bytes());
                return ExitCode::SUCCESS;
            }
            let params = (|| -> Result<Params, Error> {
                Ok(Params {
                    field: field.as_deref().map(parse_field).transpose()?,
                    n: *n,
                    h1: *h1,
                    h2: *h2,
                    p: *p,
                    moduli: moduli.as_deref().map(|m| parse_list("--moduli", m)).transpose()?,
                    p_gens: p_gens
                        .iter()
                        .map(|g| parse_list("--p-gen", g).map(GroupElem::new))
                        .collect::<Result<_, _>>()?,
                    grading: *grading,
                })
            })();
            let params = match params {
                Ok(p) => p,
                Err(e) => return fail("catalog", e, &opts),
            };
            return match commands::catalog(name, &params) {
                Ok(doc) => match write_doc(output, &doc) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => fail("catalog", e, &opts),
                },
                Err(r) => emit(&r, &opts, cli.json),
            };
        }
    };
    let text = match read_input(input) {
        Ok(t) => t,
        Err(e) => return fail(name, e, &opts),
    };
    let report = match &cli.cmd {
        Cmd::Verify { .. } => commands::verify(&text),
        Cmd::LoopBuild { output, .. } => {
            return match commands::loop_build(&text) {
                Ok(doc) => match write_doc(output, &doc) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => fail("loop-build", e, &opts),
                },
                Err(r) => emit(&r, &opts, cli.json),
            }
        }
        Cmd::Decompose { .. } => commands::decompose(&text, &opts),
        Cmd::Recognize { .. } => commands::recognize_cmd(&text, &opts),
        Cmd::Schur { .. } => commands::schur(&text, &opts),
        Cmd::Weyl { .. } => commands::weyl(&text, &opts),
        Cmd::ModVerify { .. } => commands::mod_verify(&text, &opts),
        Cmd::ModRecognize { .. } => commands::mod_recognize(&text, &opts),
        Cmd::Catalog { .. } => unreachable!("handled above"),
    };
    emit(&report, &opts, cli.json)
}
