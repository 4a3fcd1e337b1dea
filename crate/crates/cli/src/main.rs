//! Command-line interface.
//!
//! Every subcommand reads JSON inputs (from files, or inline when the
//! argument starts with `{` or `[`), runs one library operation, and prints
//! a single JSON document. Exit codes: 0 success, 1 verification-suite
//! failure, 2 malformed input, 3 precondition violation.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;

use a2star::autact::{pullback_dual_path_with_limit, pullback_with_limit};
use a2star::cech::{decompose, homogeneous_degree};
use a2star::classify::{compare, exoticity_report, h3_coefficient};
use a2star::descent::{descend, dg_find_section, dg_pick_lambda, normalize_p1};
use a2star::verify::verify_identity;
use a2star::{BundleSpec, Rat};

use a2star_cli::json::{self, BundleDto, LaurentDto, P1CocycleDto, Poly1Dto, Poly4Dto, WordDto};
use a2star_cli::{corpus, suite};

#[derive(Parser)]
#[command(
    name = "a2star",
    version,
    about = "Exact computation with transition cocycles of additive-group bundles over the punctured affine plane"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Canonical cocycle class of a Laurent polynomial
    Normalize {
        /// Laurent polynomial (file or inline JSON)
        #[arg(long)]
        poly: String,
    },
    /// Split a class into its weight components
    Decompose {
        #[arg(long)]
        class: String,
    },
    /// Homogeneous degree of a class, null when zero or mixed
    Degree {
        #[arg(long)]
        class: String,
    },
    /// Pull a class back along an automorphism word
    Pullback {
        #[arg(long)]
        word: String,
        #[arg(long)]
        class: String,
        /// Reject classes with weights above this bound
        #[arg(long, default_value_t = 64)]
        max_degree: i64,
        /// Evaluate through the pairing-reconstruction path instead
        #[arg(long)]
        dual_path: bool,
    },
    /// de Rham coefficient of a bundle
    H3 {
        #[arg(long)]
        bundle: String,
    },
    /// Classify a pair of bundles (or a list of pairs)
    Compare {
        #[arg(long, conflicts_with = "pairs", requires = "b")]
        a: Option<String>,
        #[arg(long, requires = "a")]
        b: Option<String>,
        /// JSON array of {"a": spec, "b": spec} pairs
        #[arg(long)]
        pairs: Option<String>,
    },
    /// Exotic-sphere report for a nontrivial bundle
    Exotic {
        #[arg(long)]
        bundle: String,
    },
    /// Descend a homogeneous class to the quotient line
    Descend {
        #[arg(long)]
        class: String,
    },
    /// Normal form of a quotient-line cocycle at a given weight
    P1Normalize {
        #[arg(long)]
        cocycle: String,
        #[arg(long)]
        d: i64,
    },
    /// Rational-section data for transition polynomial q at weight d
    DgSection {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        q: String,
        /// Pole location; the smallest admissible positive integer when omitted
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Normal form in the coordinate ring of a bundle
    Nf {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        bundle: String,
    },
    /// Check an identity in the coordinate ring of a bundle
    Verify {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long)]
        bundle: String,
    },
    /// Run the built-in verification suite
    VerifyPaper,
    /// Write the named example bundles as JSON files
    Corpus {
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    /// Unreadable or unparsable input: exit 2.
    Input(String),
    /// Violated operation precondition: exit 3.
    Precondition(String),
}

impl From<a2star::Error> for Failure {
    fn from(e: a2star::Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

fn load_input(arg: &str) -> Result<String, Failure> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg).map_err(|e| Failure::Input(format!("cannot read {arg}: {e}")))
}

fn parse_json<T: for<'de> Deserialize<'de>>(arg: &str) -> Result<T, Failure> {
    let text = load_input(arg)?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("bad JSON in {arg}: {e}")))
}

fn parse_laurent(arg: &str) -> Result<a2star::LaurentPoly2, Failure> {
    let dto: LaurentDto = parse_json(arg)?;
    json::dto_to_laurent(&dto).map_err(Failure::Input)
}

fn parse_class(arg: &str) -> Result<a2star::CechClass, Failure> {
    let dto: LaurentDto = parse_json(arg)?;
    json::dto_to_class(&dto).map_err(Failure::Input)
}

/// A bundle argument: either a bare spec or a corpus entry wrapping one.
#[derive(Deserialize)]
#[serde(untagged)]
enum BundleArgDto {
    Entry { spec: BundleDto },
    Plain(BundleDto),
}

/// Parse and validate a bundle spec: schema errors are input errors,
/// violated canonical-form invariants are precondition errors.
fn parse_bundle(arg: &str) -> Result<BundleSpec, Failure> {
    let dto = match parse_json(arg)? {
        BundleArgDto::Entry { spec } => spec,
        BundleArgDto::Plain(dto) => dto,
    };
    let spec = json::dto_to_bundle(&dto).map_err(Failure::Input)?;
    spec.validate()?;
    Ok(spec)
}

fn run(cmd: Cmd) -> Result<(String, u8), Failure> {
    let doc = match cmd {
        Cmd::Normalize { poly } => {
            let f = parse_laurent(&poly)?;
            let class = a2star::CechClass::normalize(&f);
            serde_json::to_value(json::class_to_dto(&class)).unwrap()
        }
        Cmd::Decompose { class } => {
            let c = parse_class(&class)?;
            json::decomposition_to_json(&c)
        }
        Cmd::Degree { class } => {
            let c = parse_class(&class)?;
            serde_json::json!({ "degree": homogeneous_degree(&c) })
        }
        Cmd::Pullback {
            word,
            class,
            max_degree,
            dual_path,
        } => {
            let dto: WordDto = parse_json(&word)?;
            let word = json::dto_to_word(&dto).map_err(Failure::Input)?;
            let c = parse_class(&class)?;
            let image = if dual_path {
                pullback_dual_path_with_limit(&word, &c, max_degree)?
            } else {
                pullback_with_limit(&word, &c, max_degree)?
            };
            serde_json::to_value(json::class_to_dto(&image)).unwrap()
        }
        Cmd::H3 { bundle } => {
            let spec = parse_bundle(&bundle)?;
            serde_json::json!({ "coefficient": json::format_rat(&h3_coefficient(&spec)) })
        }
        Cmd::Compare { a, b, pairs } => match (a, b, pairs) {
            (Some(a), Some(b), None) => {
                let left = parse_bundle(&a)?;
                let right = parse_bundle(&b)?;
                json::verdict_to_json(&compare(&left, &right))
            }
            (None, None, Some(pairs)) => {
                #[derive(Deserialize)]
                struct PairDto {
                    a: BundleDto,
                    b: BundleDto,
                }
                let list: Vec<PairDto> = parse_json(&pairs)?;
                let mut results = Vec::with_capacity(list.len());
                for pair in &list {
                    let left = json::dto_to_bundle(&pair.a).map_err(Failure::Input)?;
                    let right = json::dto_to_bundle(&pair.b).map_err(Failure::Input)?;
                    left.validate()?;
                    right.validate()?;
                    results.push(json::verdict_to_json(&compare(&left, &right)));
                }
                serde_json::json!({ "results": results })
            }
            _ => {
                return Err(Failure::Input(
                    "compare needs either --a and --b, or --pairs".into(),
                ))
            }
        },
        Cmd::Exotic { bundle } => {
            let spec = parse_bundle(&bundle)?;
            json::exotic_report_to_json(&exoticity_report(&spec)?)
        }
        Cmd::Descend { class } => {
            let c = parse_class(&class)?;
            let comps = decompose(&c);
            let [comp] = comps.as_slice() else {
                return Err(Failure::Precondition(format!(
                    "descend needs a homogeneous class; this one has {} weight components",
                    comps.len()
                )));
            };
            let image = descend(comp);
            serde_json::json!({
                "d": comp.d(),
                "terms": json::p1_to_dto(&image).terms,
            })
        }
        Cmd::P1Normalize { cocycle, d } => {
            let dto: P1CocycleDto = parse_json(&cocycle)?;
            let q = json::dto_to_p1(&dto).map_err(Failure::Input)?;
            json::p1_class_to_json(&normalize_p1(&q, d)?)
        }
        Cmd::DgSection { d, q, lambda } => {
            let dto: Poly1Dto = parse_json(&q)?;
            let q = json::dto_to_poly1(&dto).map_err(Failure::Input)?;
            let lambda = match lambda {
                Some(raw) => json::parse_rat(&raw).map_err(Failure::Input)?,
                None => dg_pick_lambda::<Rat>(d, &q)?,
            };
            json::section_to_json(&dg_find_section(d, &q, &lambda)?)
        }
        Cmd::Nf { poly, bundle } => {
            let dto: Poly4Dto = parse_json(&poly)?;
            let f = json::dto_to_poly4(&dto).map_err(Failure::Input)?;
            let spec = parse_bundle(&bundle)?;
            let reduced = a2star::verify::nf_bundle(&f, &spec)?;
            serde_json::to_value(json::poly4_to_dto(&reduced)).unwrap()
        }
        Cmd::Verify { lhs, rhs, bundle } => {
            let lhs_dto: Poly4Dto = parse_json(&lhs)?;
            let rhs_dto: Poly4Dto = parse_json(&rhs)?;
            let lhs = json::dto_to_poly4(&lhs_dto).map_err(Failure::Input)?;
            let rhs = json::dto_to_poly4(&rhs_dto).map_err(Failure::Input)?;
            let spec = parse_bundle(&bundle)?;
            let check = verify_identity(&lhs, &rhs, &spec)?;
            serde_json::json!({
                "pass": check.passed(),
                "residual": json::poly4_to_dto(&check.residual),
            })
        }
        Cmd::VerifyPaper => {
            let results = suite::run_all();
            let code = u8::from(!results.iter().all(|r| r.pass));
            return Ok((json::render(&suite::to_json(&results)), code));
        }
        Cmd::Corpus { out } => {
            let written = corpus::write_corpus(&out)
                .map_err(|e| Failure::Input(format!("cannot write corpus: {e}")))?;
            serde_json::json!({
                "written": written
                    .iter()
                    .map(|p| p.display().to_string())
                    .collect::<Vec<_>>(),
            })
        }
    };
    Ok((json::render(&doc), 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
