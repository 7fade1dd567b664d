use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use orbicover::{json, render, run_pipeline, PipelineOptions, PipelineReport};
use orbicover_core::pipeline::{analyze_case, CaseAnalysis};
use orbicover_core::{MoveTables, Signature};
use serde::Serialize;

/// Enumerate and classify flexible covers of hyperbolic 2-orbifolds by the
/// genus-2 surface.
#[derive(Parser, Debug)]
#[command(name = "orbicover", version)]
struct Cli {
    /// Worker threads for the pipeline (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Also write the command's JSON output to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CaseArgs {
    /// Signature, e.g. `0:2,2,2,3` or `(0;2,2,2,3)`.
    #[arg(long)]
    signature: String,
    #[arg(long)]
    degree: u32,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct Format {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Candidate signatures, degrees and parity exclusions.
    Signatures {
        #[arg(long)]
        json: bool,
    },
    /// Conjugacy classes of monodromy tuples for one case.
    Enumerate(CaseArgs),
    /// Signature-equivalence classes for one case.
    Orbits(CaseArgs),
    /// Holonomy classification, for one case or all.
    Classify {
        #[arg(long, requires = "degree")]
        signature: Option<String>,
        #[arg(long, requires = "signature")]
        degree: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// The full pipeline report.
    Report(Format),
    /// Check the pipeline against reference values; exits non-zero on failure.
    Verify {
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn options(cli: &Cli) -> PipelineOptions {
    PipelineOptions { threads: cli.threads, tables: MoveTables::standard() }
}

fn case(args_sig: &str, degree: u32) -> Result<CaseAnalysis> {
    let sig = Signature::parse(args_sig).with_context(|| format!("bad signature {args_sig:?}"))?;
    Ok(analyze_case(&sig, degree, &MoveTables::standard())?)
}

fn pipeline(cli: &Cli) -> Result<PipelineReport> {
    Ok(run_pipeline(&options(cli))?)
}

/// Prints `text` or the JSON of `value`, and writes the JSON to `--out`.
fn emit<T: Serialize>(cli: &Cli, as_json: bool, text: impl FnOnce() -> String, value: &T) -> Result<()> {
    let body = serde_json::to_string_pretty(value)?;
    if let Some(path) = &cli.out {
        std::fs::write(path, &body).with_context(|| format!("writing {}", path.display()))?;
    }
    if as_json {
        println!("{body}");
    } else {
        print!("{}", text());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Signatures { json } => {
            let r = pipeline(&cli)?;
            let doc = json::report(&r);
            let value =
                json::tagged(CandidatesDoc { candidates: doc.candidates, exclusions: doc.exclusions });
            emit(&cli, *json, || render::candidates_text(&r), &value)?;
        }
        Command::Enumerate(a) => {
            let c = case(&a.signature, a.degree)?;
            let doc = json::CaseJson::from(&c);
            emit(
                &cli,
                a.json,
                || render::classes_text(&c),
                &json::tagged(ClassesDoc {
                    signature: doc.signature,
                    degree: doc.degree,
                    classes: doc.classes,
                }),
            )?;
        }
        Command::Orbits(a) => {
            let c = case(&a.signature, a.degree)?;
            let doc = json::CaseJson::from(&c);
            emit(
                &cli,
                a.json,
                || render::orbits_text(&c),
                &json::tagged(OrbitsDoc { signature: doc.signature, degree: doc.degree, orbits: doc.orbits }),
            )?;
        }
        Command::Classify { signature, degree, json } => {
            let cases = match (signature, degree) {
                (Some(s), Some(d)) => vec![case(s, *d)?],
                _ => pipeline(&cli)?.cases,
            };
            let docs: Vec<OrbitsDoc> = cases
                .iter()
                .map(|c| {
                    let doc = json::CaseJson::from(c);
                    OrbitsDoc { signature: doc.signature, degree: doc.degree, orbits: doc.orbits }
                })
                .collect();
            let text = || cases.iter().map(render::classify_text).collect::<String>();
            emit(&cli, *json, text, &json::tagged(ClassifyDoc { cases: docs }))?;
        }
        Command::Report(f) => {
            let r = pipeline(&cli)?;
            let doc = json::report(&r);
            if f.csv {
                let csv = render::report_csv(&r)?;
                emit(&cli, false, || csv, &doc)?;
            } else {
                emit(&cli, f.json, || render::report_text(&r), &doc)?;
            }
            let _ = f.text;
        }
        Command::Verify { json } => {
            let v = orbicover::verify::verify_with(&options(&cli));
            emit(&cli, *json, || render::verify_text(&v), &json::verify(&v))?;
            if !v.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CandidatesDoc {
    candidates: Vec<json::CandidateJson>,
    exclusions: Vec<json::ExclusionJson>,
}

#[derive(Serialize)]
struct ClassesDoc {
    signature: json::SignatureJson,
    degree: u32,
    classes: Vec<json::ClassJson>,
}

#[derive(Serialize)]
struct OrbitsDoc {
    signature: json::SignatureJson,
    degree: u32,
    orbits: Vec<json::OrbitJson>,
}

#[derive(Serialize)]
struct ClassifyDoc {
    cases: Vec<OrbitsDoc>,
}
