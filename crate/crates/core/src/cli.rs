//! Command-line front end. Every command prints one JSON document carrying
//! `"schema": 1`.
//!
//! Exit codes: 0 accepted or constructed, 1 rejected or nothing found,
//! 2 input error, 3 budget or enumeration cap exceeded.
//!
//! JSON arguments may be given inline, as `-` for stdin, or as a file path.

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::complex::{RelativeComplex, SimplicialComplex};
use crate::constructions::{
    bfs_witness, cone_skeleton_repair, decomposition_witness, find_decomposition, phi_d,
    verify_decomposition, witness_rel_f, BjornerDecomposition, DecompositionOutcome,
};
use crate::error::Error;
use crate::face::{Face, MultiFace};
use crate::json::{JsonInt, VectorInput, VectorJson, VectorKind, SCHEMA_VERSION};
use crate::oracle::{
    achievable_fully_shellable_h, achievable_relative_f, complex_masks, enumeration_report,
    mask_to_complex, min_shadow, OracleConfig,
};
use crate::realizability::{
    cm_h_necessary_check, fully_cm_h_check, hilbert_quotient_check, kruskal_katona_check,
    m_sequence_check, m_sequence_upward, rel_f_check, rel_multi_check, rel_multi_prefix_check,
    CertificatePair, Direction, PrefixReport, VerdictJson,
};
use crate::shadow::{binomial_rep, lower_shadow, ShadowKind};
use crate::shelling::{
    find_shelling, h_from_shelling, is_fully_shellable, verify_shelling, FullOutcome,
    SearchOutcome, ShellingCheck, ShellingTranscript,
};
use crate::vector::{f_to_h, h_to_f, FVector, HVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable naming the oracle cache directory.
pub const CACHE_ENV: &str = "RELKK_ORACLE_CACHE";

#[derive(Debug, Parser)]
#[command(
    name = "relkk",
    version,
    about = "Face numbers of relative simplicial complexes and multicomplexes"
)]
pub struct Cli {
    /// Include the full (a, b) evolution of certificate recursions.
    #[arg(long, global = true)]
    pub trace: bool,
    /// Node limit for searches.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget: u64,
    /// Write the JSON document here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ShadowArg {
    Lower,
    Macaulay,
    Upper,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    F,
    H,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a numerical shadow of r with respect to k.
    Shadow { kind: ShadowArg, r: BigUint, k: u32 },
    /// The k-binomial representation of r.
    BinomRep { r: BigUint, k: u32 },
    /// Kruskal-Katona check of (1, f_0, ..., f_{d-1}).
    KkCheck { f: String },
    /// Macaulay check of (1, f_0, f_1, ...).
    MCheck { f: String },
    /// Face vectors of proper relative simplicial complexes on [n].
    RelFCheck { f: String, n: u64 },
    /// Face vectors of proper relative multicomplexes on [n].
    RelMultiCheck { f: String, n: u64 },
    /// Bottom-up check of a finite prefix of a relative multicomplex face vector.
    RelPrefixCheck { f: String, n: u64 },
    /// Hilbert functions H(0..K) of quotients of monomial ideals in n variables.
    HilbertCheck { h: String, n: u64 },
    /// h-vectors of fully Cohen-Macaulay relative complexes on [n].
    FcmHCheck { h: String, n: u64 },
    /// Necessary condition for h-vectors of Cohen-Macaulay relative complexes.
    CmHNecessary { h: String, n: u64 },
    /// Compressed pair (Δ, Γ) realizing a face vector.
    WitnessF { f: String, n: u32 },
    /// Fully shellable pair realizing an h-vector, with shelling orders.
    WitnessH { h: String, n: u32 },
    /// Image of a multiset under the map to d-subsets of [n].
    PhiD { face: String, d: usize, n: u32 },
    /// Cone Γ over new vertices and keep the (dim Ψ)-skeleta.
    ConeRepair { psi: String, steps: u32 },
    /// Search for a decomposition of h into shifted M-sequences.
    Decompose {
        h: String,
        #[arg(required = true)]
        shifts: Vec<usize>,
    },
    /// Build the shellable relative complex of a decomposition.
    DecompWitness { decomposition: String },
    /// Verify a shelling order of a relative complex.
    ShellVerify { psi: String, order: String },
    /// Search for a shelling order.
    ShellFind { psi: String },
    /// Search presentations with Δ, Γ and Ψ all shellable.
    FullyShellable {
        psi: String,
        /// Ground set size to search over (default: the presentation's).
        #[arg(long)]
        ground: Option<u32>,
    },
    /// Convert between f- and h-vectors.
    HfConvert {
        vector: String,
        /// Kind of a bare array input.
        #[arg(long, value_enum, default_value = "f")]
        from: KindArg,
        /// d for an f-vector input (default: its dimension count).
        #[arg(long)]
        d: Option<usize>,
    },
    /// f- and h-vector of a relative complex.
    FVector {
        psi: String,
        /// Exit 1 unless the f-vector equals this one.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Brute-force enumerations on small ground sets.
    Oracle {
        /// Raise the default caps to the limits of the encoding.
        #[arg(long, global = true)]
        allow_long_runtimes: bool,
        #[command(subcommand)]
        which: OracleCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Count (and optionally list) all simplicial complexes on [n].
    Complexes {
        n: u32,
        #[arg(long)]
        list: bool,
    },
    /// All face vectors of proper relative complexes on [n].
    RelF { n: u32 },
    /// Minimum shadow over all m-families of k-subsets of [n].
    MinShadow { m: u64, k: u32, n: u32 },
    /// All h-vectors of fully shellable relative complexes of dimension d-1 on [n].
    FsH { n: u32, d: usize },
    /// Every enumeration on [n].
    Report { n: u32 },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    doc: Value,
}

impl Failure {
    fn input(message: impl Into<String>, path: Option<String>) -> Self {
        let mut doc = json!({ "error": "input", "message": message.into() });
        if let Some(p) = path {
            doc["path"] = Value::String(p);
        }
        Failure {
            code: EXIT_INPUT,
            doc,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded(_) => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        let kind = if code == EXIT_BUDGET { "cap" } else { "input" };
        Failure {
            code,
            doc: json!({ "error": kind, "message": e.to_string() }),
        }
    }
}

type Outcome = std::result::Result<(i32, Value), Failure>;

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                CliOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                CliOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let (code, doc) = match dispatch(&cli) {
        Ok(ok) => ok,
        Err(f) => (f.code, f.doc),
    };
    let text = render(doc);
    match &cli.output {
        Some(path) => match fs::write(path, &text) {
            Ok(()) => CliOutput {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => CliOutput {
                code: EXIT_INPUT,
                stdout: String::new(),
                stderr: format!("cannot write {}: {e}\n", path.display()),
            },
        },
        None => CliOutput {
            code,
            stdout: text,
            stderr: String::new(),
        },
    }
}

fn render(doc: Value) -> String {
    let mut out = Map::new();
    out.insert("schema".into(), json!(SCHEMA_VERSION));
    match doc {
        Value::Object(m) => out.extend(m),
        other => {
            out.insert("result".into(), other);
        }
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(out)).expect("JSON values serialize");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("types serialize to JSON")
}

/// Inline JSON, `-` for stdin, or a path to a JSON file.
fn read_arg(arg: &str) -> std::result::Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("cannot read stdin: {e}"), None))?;
        return Ok(s);
    }
    let trimmed = arg.trim_start();
    let looks_inline = trimmed.starts_with(['[', '{', '"'])
        || trimmed.starts_with(|c: char| c.is_ascii_digit() || c == '-');
    if !looks_inline && Path::new(arg).is_file() {
        return fs::read_to_string(arg)
            .map_err(|e| Failure::input(format!("cannot read {arg}: {e}"), None));
    }
    Ok(arg.to_owned())
}

fn parse<T: DeserializeOwned>(arg: &str, what: &str) -> std::result::Result<T, Failure> {
    let text = read_arg(arg)?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Failure::input(format!("invalid {what}: {}", e.inner()), Some(path))
    })
}

/// f- or h-vector: a bare array or the tagged object form.
fn parse_vector<T: DeserializeOwned>(arg: &str, what: &str) -> std::result::Result<T, Failure> {
    let text = read_arg(arg)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("invalid JSON: {e}"), None))?;
    let shape = if value.is_array() {
        serde_path_to_error::deserialize::<_, Vec<JsonInt>>(value.clone()).map(|_| ())
    } else {
        serde_path_to_error::deserialize::<_, VectorJson>(value.clone()).map(|_| ())
    };
    shape.map_err(|e| {
        Failure::input(
            format!("invalid {what}: {}", e.inner()),
            Some(e.path().to_string()),
        )
    })?;
    serde_json::from_value(value).map_err(|e| Failure::input(format!("invalid {what}: {e}"), None))
}

fn parse_relative(arg: &str) -> std::result::Result<RelativeComplex, Failure> {
    let text = read_arg(arg)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("invalid JSON: {e}"), None))?;
    let is_relative = value.get("delta").is_some() || value.get("gamma").is_some();
    let parsed = if is_relative {
        serde_path_to_error::deserialize(value)
            .map_err(|e| (e.path().to_string(), e.inner().to_string()))
    } else {
        serde_path_to_error::deserialize::<_, SimplicialComplex>(value)
            .map(RelativeComplex::from_complex)
            .map_err(|e| (e.path().to_string(), e.inner().to_string()))
    };
    parsed.map_err(|(path, msg)| {
        Failure::input(format!("invalid relative complex: {msg}"), Some(path))
    })
}

fn faces_value(faces: &[Face]) -> Value {
    json!(faces
        .iter()
        .map(|f| f.vertices().to_vec())
        .collect::<Vec<_>>())
}

fn verdict_code(accepted: bool) -> i32 {
    if accepted {
        EXIT_OK
    } else {
        EXIT_REJECTED
    }
}

fn certificate_doc(c: &CertificatePair, trace: bool) -> Value {
    let mut doc = to_value(&c.to_json());
    doc["direction"] = to_value(&c.direction);
    if trace {
        let indices: Vec<usize> = match c.direction {
            Direction::TopDown => (0..c.a.len()).rev().collect(),
            Direction::BottomUp => (0..c.a.len()).collect(),
        };
        let steps: Vec<Value> = indices
            .into_iter()
            .map(|i| json!({ "index": i, "a": JsonInt(c.a[i].clone()), "b": JsonInt(c.b[i].clone()) }))
            .collect();
        doc["trace"] = Value::Array(steps);
    }
    doc
}

fn prefix_doc(r: &PrefixReport, trace: bool) -> Value {
    let mut doc = certificate_doc(&r.certificate, trace);
    doc["first_violation"] = json!(r.first_violation());
    doc["per_index"] = json!(r.per_index());
    doc
}

fn certificate_outcome(c: CertificatePair, trace: bool) -> Outcome {
    Ok((verdict_code(c.is_accepted()), certificate_doc(&c, trace)))
}

fn dispatch(cli: &Cli) -> Outcome {
    let trace = cli.trace;
    match &cli.command {
        Command::Shadow { kind, r, k } => {
            if *k == 0 {
                return Err(Failure::input("k must be positive", None));
            }
            let (shadow, name) = match kind {
                ShadowArg::Lower => (ShadowKind::Lower, "lower"),
                ShadowArg::Macaulay => (ShadowKind::Macaulay, "macaulay"),
                ShadowArg::Upper => (ShadowKind::Upper, "upper"),
            };
            let value = shadow.apply(r, *k);
            Ok((
                EXIT_OK,
                json!({
                    "kind": name,
                    "r": JsonInt(r.clone().into()),
                    "k": k,
                    "value": JsonInt(value.into()),
                }),
            ))
        }
        Command::BinomRep { r, k } => {
            if *k == 0 {
                return Err(Failure::input("k must be positive", None));
            }
            let rep = binomial_rep(r, *k);
            let terms: Vec<Value> = rep
                .terms()
                .iter()
                .map(|(top, i)| json!({ "top": JsonInt(top.clone().into()), "bottom": i }))
                .collect();
            Ok((
                EXIT_OK,
                json!({ "r": JsonInt(r.clone().into()), "k": k, "terms": terms, "text": rep.to_string() }),
            ))
        }
        Command::KkCheck { f } => {
            let f: FVector = parse_vector(f, "f-vector")?;
            let v = kruskal_katona_check(&f)?;
            Ok((
                verdict_code(v.is_accepted()),
                to_value(&VerdictJson::from(&v)),
            ))
        }
        Command::MCheck { f } => {
            let f: FVector = parse_vector(f, "f-vector")?;
            let v = m_sequence_check(&f);
            let mut doc = to_value(&VerdictJson::from(&v));
            doc["upward"] = json!(m_sequence_upward(&f));
            Ok((verdict_code(v.is_accepted()), doc))
        }
        Command::RelFCheck { f, n } => {
            let f: FVector = parse_vector(f, "f-vector")?;
            certificate_outcome(rel_f_check(&f, *n)?, trace)
        }
        Command::RelMultiCheck { f, n } => {
            let f: FVector = parse_vector(f, "f-vector")?;
            certificate_outcome(rel_multi_check(&f, *n)?, trace)
        }
        Command::RelPrefixCheck { f, n } => {
            let f: FVector = parse_vector(f, "f-vector")?;
            let r = rel_multi_prefix_check(&f, *n)?;
            Ok((verdict_code(r.is_clean()), prefix_doc(&r, trace)))
        }
        Command::HilbertCheck { h, n } => {
            let h: Vec<JsonInt> = parse(h, "Hilbert function")?;
            let h: Vec<BigInt> = h.into_iter().map(|x| x.0).collect();
            let r = hilbert_quotient_check(&h, *n)?;
            Ok((verdict_code(r.is_clean()), prefix_doc(&r, trace)))
        }
        Command::FcmHCheck { h, n } => {
            let h: HVector = parse_vector(h, "h-vector")?;
            certificate_outcome(fully_cm_h_check(&h, *n)?, trace)
        }
        Command::CmHNecessary { h, n } => {
            let h: HVector = parse_vector(h, "h-vector")?;
            let c = cm_h_necessary_check(&h, *n)?;
            let mut doc = certificate_doc(&c, trace);
            doc["sufficient"] = json!(false);
            Ok((verdict_code(c.is_accepted()), doc))
        }
        Command::WitnessF { f, n } => {
            let f: FVector = parse_vector(f, "f-vector")?;
            let cert = rel_f_check(&f, *n as u64)?;
            if !cert.is_accepted() {
                return Ok((EXIT_REJECTED, certificate_doc(&cert, trace)));
            }
            let psi = witness_rel_f(&f, *n)?;
            Ok((
                EXIT_OK,
                json!({
                    "witness": to_value(&psi),
                    "f": to_value(&psi.f_vector()),
                    "certificate": certificate_doc(&cert, trace),
                }),
            ))
        }
        Command::WitnessH { h, n } => {
            let h: HVector = parse_vector(h, "h-vector")?;
            let cert = fully_cm_h_check(&h, *n as u64)?;
            if !cert.is_accepted() {
                return Ok((EXIT_REJECTED, certificate_doc(&cert, trace)));
            }
            let w = bfs_witness(&h, *n)?;
            Ok((
                EXIT_OK,
                json!({
                    "witness": to_value(&w.psi),
                    "h": to_value(&w.psi.h_vector()),
                    "orders": {
                        "delta": faces_value(&w.delta_order),
                        "gamma": faces_value(&w.gamma_order),
                        "psi": faces_value(&w.psi_order),
                    },
                    "shelling": to_value(&ShellingTranscript::from_steps(&w.psi_steps)),
                    "certificate": certificate_doc(&cert, trace),
                }),
            ))
        }
        Command::PhiD { face, d, n } => {
            let elements: Vec<u32> = parse(face, "multiset")?;
            let f = MultiFace::new(elements)?;
            let base = n
                .checked_sub(*d as u32)
                .ok_or_else(|| Failure::input("d exceeds n", None))?;
            if let Some(v) = f.max_element().filter(|&v| v > base) {
                return Err(Failure::input(
                    format!("element {v} lies outside [n - d] = [{base}]"),
                    None,
                ));
            }
            let image = phi_d(&f, *d)?;
            Ok((EXIT_OK, json!({ "face": image.vertices() })))
        }
        Command::ConeRepair { psi, steps } => {
            let psi = parse_relative(psi)?;
            let repaired = cone_skeleton_repair(&psi, *steps)?;
            Ok((
                EXIT_OK,
                json!({
                    "repaired": to_value(&repaired),
                    "note": "both complexes are Cohen-Macaulay provided the input is and steps = dim Ψ + 1 - depth k[Γ]",
                }),
            ))
        }
        Command::Decompose { h, shifts } => {
            let h: HVector = parse_vector(h, "h-vector")?;
            match find_decomposition(&h, shifts, cli.budget)? {
                DecompositionOutcome::Found(dec) => {
                    Ok((EXIT_OK, json!({ "decomposition": to_value(&dec) })))
                }
                DecompositionOutcome::None => Ok((
                    EXIT_REJECTED,
                    json!({ "decomposition": null, "reason": "no decomposition with these shifts exists" }),
                )),
                DecompositionOutcome::BoundExceeded => Ok((
                    EXIT_BUDGET,
                    json!({ "decomposition": null, "reason": "search bound exceeded" }),
                )),
            }
        }
        Command::DecompWitness { decomposition } => {
            let dec: BjornerDecomposition = parse(decomposition, "decomposition")?;
            let v = verify_decomposition(&dec);
            if !v.is_accepted() {
                return Ok((EXIT_REJECTED, to_value(&VerdictJson::from(&v))));
            }
            let w = decomposition_witness(&dec)?;
            Ok((
                EXIT_OK,
                json!({
                    "witness": to_value(&w.psi),
                    "h": to_value(&w.psi.h_vector()),
                    "shelling": to_value(&ShellingTranscript::from_steps(&w.steps)),
                    "minimal_faces": faces_value(&w.psi.minimal_faces()),
                }),
            ))
        }
        Command::ShellVerify { psi, order } => {
            let psi = parse_relative(psi)?;
            let order = parse_order(order)?;
            match verify_shelling(&psi, &order)? {
                ShellingCheck::Valid(steps) => {
                    let mut doc = to_value(&ShellingTranscript::from_steps(&steps));
                    doc["valid"] = json!(true);
                    let d = steps.first().map_or(0, |s| s.facet.len());
                    doc["h"] = match h_from_shelling(&steps, d) {
                        Ok(h) => to_value(&h),
                        Err(_) => Value::Null,
                    };
                    Ok((EXIT_OK, doc))
                }
                ShellingCheck::Failed(fail) => Ok((
                    EXIT_REJECTED,
                    json!({
                        "valid": false,
                        "step": fail.step,
                        "facet": fail.facet.vertices(),
                        "minimal_faces": faces_value(&fail.minimal_faces),
                    }),
                )),
            }
        }
        Command::ShellFind { psi } => {
            let psi = parse_relative(psi)?;
            match find_shelling(&psi, cli.budget)? {
                SearchOutcome::Found(order) => {
                    let ShellingCheck::Valid(steps) = verify_shelling(&psi, &order)? else {
                        return Err(
                            Error::Verification("found order does not verify".into()).into()
                        );
                    };
                    let mut doc = to_value(&ShellingTranscript::from_steps(&steps));
                    doc["found"] = json!(true);
                    Ok((EXIT_OK, doc))
                }
                SearchOutcome::NotShellable => Ok((
                    EXIT_REJECTED,
                    json!({ "found": false, "reason": "search exhausted: no shelling order exists" }),
                )),
                SearchOutcome::BudgetExceeded => Ok((
                    EXIT_BUDGET,
                    json!({ "found": false, "reason": "budget exceeded" }),
                )),
            }
        }
        Command::FullyShellable { psi, ground } => {
            let psi = parse_relative(psi)?;
            match is_fully_shellable(&psi, *ground, cli.budget)? {
                FullOutcome::FullyShellable(w) => Ok((
                    EXIT_OK,
                    json!({
                        "fully_shellable": true,
                        "presentation": to_value(&w.presentation),
                        "orders": {
                            "delta": faces_value(&w.delta_order),
                            "gamma": faces_value(&w.gamma_order),
                            "psi": faces_value(&w.psi_order),
                        },
                    }),
                )),
                FullOutcome::NotFullyShellable(reason) => Ok((
                    EXIT_REJECTED,
                    json!({ "fully_shellable": false, "reason": reason }),
                )),
                FullOutcome::BudgetExceeded => Ok((
                    EXIT_BUDGET,
                    json!({ "fully_shellable": null, "reason": "budget exceeded" }),
                )),
            }
        }
        Command::HfConvert { vector, from, d } => {
            let input: VectorInput = parse_vector(vector, "vector")?;
            let (kind, declared, entries) = input.parts();
            let kind = kind.unwrap_or(match from {
                KindArg::F => VectorKind::F,
                KindArg::H => VectorKind::H,
            });
            match kind {
                VectorKind::F => {
                    let f = FVector::new(entries);
                    let d = d.or(declared).unwrap_or_else(|| f.dimension_count());
                    Ok((
                        EXIT_OK,
                        json!({ "input": to_value(&f), "output": to_value(&f_to_h(&f, d)?) }),
                    ))
                }
                VectorKind::H => {
                    let h = HVector::new(entries);
                    Ok((
                        EXIT_OK,
                        json!({ "input": to_value(&h), "output": to_value(&h_to_f(&h)) }),
                    ))
                }
            }
        }
        Command::FVector { psi, expect } => {
            let psi = parse_relative(psi)?;
            let f = psi.f_vector();
            let mut doc =
                json!({ "f": to_value(&f), "h": to_value(&psi.h_vector()), "dim": psi.dim() });
            let mut code = EXIT_OK;
            if let Some(e) = expect {
                let e: FVector = parse_vector(e, "expected f-vector")?;
                let matches = e.trimmed() == f;
                doc["matches"] = json!(matches);
                code = verdict_code(matches);
            }
            Ok((code, doc))
        }
        Command::Oracle {
            allow_long_runtimes,
            which,
        } => {
            let config = OracleConfig {
                allow_long_runtimes: *allow_long_runtimes,
            };
            oracle(which, &config)
        }
    }
}

fn parse_order(arg: &str) -> std::result::Result<Vec<Face>, Failure> {
    let text = read_arg(arg)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("invalid JSON: {e}"), None))?;
    let transcript: ShellingTranscript = if value.is_array() {
        let order: Vec<Vec<u32>> = serde_path_to_error::deserialize(value).map_err(|e| {
            Failure::input(
                format!("invalid order: {}", e.inner()),
                Some(e.path().to_string()),
            )
        })?;
        ShellingTranscript {
            order,
            restrictions: Vec::new(),
        }
    } else {
        serde_path_to_error::deserialize(value).map_err(|e| {
            Failure::input(
                format!("invalid order: {}", e.inner()),
                Some(e.path().to_string()),
            )
        })?
    };
    Ok(transcript.faces()?)
}

fn oracle(which: &OracleCommand, config: &OracleConfig) -> Outcome {
    let key = format!("{which:?}|long={}", config.allow_long_runtimes);
    if let Some(doc) = cache_load(&key) {
        return Ok((EXIT_OK, doc));
    }
    let doc = match which {
        OracleCommand::Complexes { n, list } => {
            let masks: Vec<u64> = complex_masks(*n, config)?.collect();
            let mut doc = json!({ "n": n, "count": masks.len() });
            if *list {
                let all: Vec<Value> = masks
                    .iter()
                    .map(|&m| to_value(&mask_to_complex(*n, m)))
                    .collect();
                doc["complexes"] = Value::Array(all);
            }
            doc
        }
        OracleCommand::RelF { n } => {
            let set = achievable_relative_f(*n, config)?;
            json!({ "n": n, "achievable_f": set.iter().map(to_value).collect::<Vec<_>>() })
        }
        OracleCommand::MinShadow { m, k, n } => {
            let value = min_shadow(*m, *k, *n, config)?;
            let compressed = if *k > 0 {
                lower_shadow(&BigUint::from(*m), *k)
            } else {
                BigUint::default()
            };
            json!({ "m": m, "k": k, "n": n, "value": value, "lower_shadow": JsonInt(compressed.into()) })
        }
        OracleCommand::FsH { n, d } => {
            let set = achievable_fully_shellable_h(*n, *d, config)?;
            json!({ "n": n, "d": d, "achievable_h": set.iter().map(to_value).collect::<Vec<_>>() })
        }
        OracleCommand::Report { n } => to_value(&enumeration_report(*n, config)?),
    };
    cache_store(&key, &doc);
    Ok((EXIT_OK, doc))
}

fn cache_path(key: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    let digest = Sha256::digest(format!("relkk-oracle-v{SCHEMA_VERSION}|{key}").as_bytes());
    Some(PathBuf::from(dir).join(format!("{}.json", hex::encode(digest))))
}

fn cache_load(key: &str) -> Option<Value> {
    let text = fs::read_to_string(cache_path(key)?).ok()?;
    serde_json::from_str(&text).ok()
}

fn cache_store(key: &str, doc: &Value) {
    if let Some(path) = cache_path(key) {
        if let Some(parent) = path.parent() {
            let _ = fs::create_dir_all(parent);
        }
        // the cache is an optimization; a failed write only costs a recomputation
        let _ = fs::write(path, doc.to_string());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, Value) {
        let mut argv = vec!["relkk"];
        argv.extend_from_slice(args);
        let out = run(argv);
        let doc = if out.stdout.is_empty() {
            Value::Null
        } else {
            serde_json::from_str(&out.stdout).unwrap()
        };
        (out.code, doc)
    }

    #[test]
    fn spec_examples() {
        let (code, doc) = call(&["rel-multi-check", "[0,0,4]", "2"]);
        assert_eq!(code, 1);
        assert!(doc["reason"].as_str().unwrap().contains("a_0 = 3 > n = 2"));
        assert_eq!(doc["schema"], 1);

        let (code, doc) = call(&["rel-f-check", "[0,0,4]", "4"]);
        assert_eq!(code, 0);
        assert_eq!(doc["a"], json!([4, 4]));
        assert_eq!(doc["b"], json!([4, 0]));

        let (code, doc) = call(&["shadow", "lower", "4", "3"]);
        assert_eq!(code, 0);
        assert_eq!(doc["value"], 6);
    }

    #[test]
    fn malformed_input_points_at_field() {
        let (code, doc) = call(&["shell-find", r#"{"n":3,"facets":[[1,2],["x"]]}"#]);
        assert_eq!(code, 2);
        assert_eq!(doc["path"], "facets[1][0]");
        let (code, doc) = call(&["kk-check", r#"{"kind":"f","d":2,"entries":[1,[2]]}"#]);
        assert_eq!(code, 2);
        assert_eq!(doc["path"], "entries[1]");
    }

    #[test]
    fn trace_lists_every_index() {
        let (_, doc) = call(&["--trace", "rel-f-check", "[0,0,4]", "4"]);
        assert_eq!(doc["trace"].as_array().unwrap().len(), 2);
        assert_eq!(doc["trace"][0]["index"], 1);
    }
}
