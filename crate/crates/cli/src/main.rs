//! `hyperforest`: code, decode, count, enumerate and sample forests of
//! rooted uniform hypertrees from the command line.
//!
//! Exit status is 0 on success, 1 when an input fails validation and 2 on
//! usage or parameter errors. Errors are printed to standard error as a
//! JSON object `{"error": <reason code>, "message": ...}`.

mod documents;

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use hyperforest::counting::{
    count_forests, count_hypercycles, count_rooted_hypertrees, hypercycle_class_count,
};
use hyperforest::oracle::{self, DEFAULT_BUDGET};
use hyperforest::{
    decode_code, encode_forest, generate_ids, rank_code, unrank_code, validate_code, validate_forest, Error,
    ForestSampler, ForestShape, HypercycleForm, RootedForest,
};

use documents::*;

const BUDGET_VAR: &str = "HYPERFOREST_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "hyperforest", version, about = "Prüfer-like codes for forests of rooted uniform hypertrees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a forest or code document
    Validate {
        #[arg(short, long, default_value = "-")]
        input: PathBuf,
    },
    /// Forest document -> code document
    Encode {
        #[arg(short, long, default_value = "-")]
        input: PathBuf,
    },
    /// Code document -> forest document
    Decode {
        #[arg(short, long, default_value = "-")]
        input: PathBuf,
    },
    /// Evaluate a counting formula exactly
    Count {
        #[arg(long, value_enum)]
        kind: CountKind,
        #[arg(long = "b")]
        b: u32,
        #[arg(long = "s")]
        s: u32,
        #[arg(long = "k")]
        k: Option<u32>,
        #[arg(long = "j")]
        j: Option<u32>,
        #[arg(long, value_enum, default_value = "closed")]
        form: Form,
    },
    /// Stream every object of a small space, then a summary record
    Enumerate {
        #[arg(long, value_enum)]
        kind: EnumerateKind,
        #[arg(long = "b")]
        b: u32,
        #[arg(long = "s")]
        s: u32,
        #[arg(long = "k")]
        k: Option<u32>,
        #[arg(long)]
        multiset: bool,
    },
    /// Compare the hypercycle formulas with brute-force counts
    Audit {
        #[arg(long = "b")]
        b: u32,
        #[arg(long = "s")]
        s: u32,
    },
    /// Draw uniform random forests
    Sample {
        #[arg(long = "b")]
        b: u32,
        #[arg(long = "s")]
        s: u32,
        #[arg(long = "k")]
        k: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long = "m", default_value_t = 1)]
        m: u64,
    },
    /// Position of a code in the canonical order
    Rank {
        #[arg(short, long, default_value = "-")]
        input: PathBuf,
    },
    /// Code at a position of the canonical order
    Unrank {
        #[arg(long)]
        index: String,
        #[arg(long = "b")]
        b: u32,
        #[arg(long = "s")]
        s: u32,
        #[arg(long = "k")]
        k: u32,
    },
    /// The first m codes of the canonical order, as unique identifiers
    Ids {
        #[arg(long = "b")]
        b: u32,
        #[arg(long = "s")]
        s: u32,
        #[arg(long = "k")]
        k: u32,
        #[arg(long = "m")]
        m: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CountKind {
    Forests,
    Hypertrees,
    Hypercycles,
    HypercycleClass,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnumerateKind {
    Forests,
    Codes,
    Hypercycles,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Form {
    Closed,
    Sum,
}

/// Everything that ends a run with a nonzero status.
#[derive(Debug)]
enum Failure {
    Usage { reason: &'static str, message: String },
    Invalid { reason: &'static str, message: String },
    Library(Error),
}

impl Failure {
    fn usage(reason: &'static str, message: impl Into<String>) -> Self {
        Failure::Usage { reason, message: message.into() }
    }

    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage { .. } => 2,
            Failure::Invalid { .. } => 1,
            Failure::Library(e) => match e {
                Error::Range(_) | Error::BudgetExceeded { .. } => 2,
                Error::MalformedEdge { .. }
                | Error::InvalidForest(_)
                | Error::InvalidCode(_)
                | Error::Invariant(_) => 1,
            },
        }
    }

    fn document(&self) -> ErrorDocument {
        match self {
            Failure::Usage { reason, message } | Failure::Invalid { reason, message } => {
                ErrorDocument { error: reason, message: message.clone() }
            }
            Failure::Library(e) => ErrorDocument { error: e.reason_code(), message: e.to_string() },
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage("io", e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Output<W: Write> {
    out: W,
}

impl<W: Write> Output<W> {
    fn record<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        serde_json::to_writer(&mut self.out, value)?;
        self.out.write_all(b"\n")
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| Failure::usage("io", format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn parse<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::usage("bad_document", format!("not a {what} document: {e}")))
}

fn budget() -> Result<u64, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage("bad_budget", format!("{BUDGET_VAR}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn validate(text: &str, out: &mut Output<impl Write>) -> Outcome {
    let value: serde_json::Value = parse(text, "JSON")?;
    let doc = if value.get("edges").is_some() {
        let forest: ForestDocument = parse(text, "forest")?;
        let report = validate_forest(&forest.to_hypergraph());
        ValidationDocument {
            document: "forest",
            valid: report.is_valid(),
            s: Some(report.s),
            k: report.k,
            violations: report.violations.iter().map(ToString::to_string).collect(),
        }
    } else if value.get("P").is_some() {
        let code: CodeDocument = parse(text, "code")?;
        match code.to_code() {
            Ok(code) => {
                let report = validate_code(&code);
                ValidationDocument {
                    document: "code",
                    valid: report.is_valid(),
                    s: Some(report.s),
                    k: report.k,
                    violations: report.violations.iter().map(ToString::to_string).collect(),
                }
            }
            Err(e) => ValidationDocument {
                document: "code",
                valid: false,
                s: None,
                k: None,
                violations: vec![e.to_string()],
            },
        }
    } else {
        return Err(Failure::usage("bad_document", "neither a forest (edges) nor a code (P) document"));
    };
    out.record(&doc)?;
    if doc.valid {
        Ok(())
    } else {
        Err(Failure::Invalid { reason: "validation_failed", message: doc.violations.join("; ") })
    }
}

fn shape(b: u32, s: u32, k: u32) -> Result<ForestShape, Failure> {
    Ok(ForestShape::new(b, s, k)?)
}

fn required(value: Option<u32>, flag: &str, kind: &str) -> Result<u32, Failure> {
    value.ok_or_else(|| Failure::usage("missing_flag", format!("--{flag} is required for {kind}")))
}

fn count(kind: CountKind, b: u32, s: u32, k: Option<u32>, j: Option<u32>, form: Form) -> Result<CountDocument, Failure> {
    let cycle_n = u64::from(s) * u64::from(b.saturating_sub(1));
    let doc = match kind {
        CountKind::Forests => {
            let k = required(k, "k", "forests")?;
            let value = count_forests(b, s, k)?;
            CountDocument {
                kind: "forests",
                b,
                s,
                k: Some(k),
                j: None,
                form: None,
                n: u64::from(shape(b, s, k)?.n()),
                count: value.to_string(),
            }
        }
        CountKind::Hypertrees => CountDocument {
            kind: "hypertrees",
            b,
            s,
            k: None,
            j: None,
            form: None,
            count: count_rooted_hypertrees(b, s)?.to_string(),
            n: cycle_n + 1,
        },
        CountKind::Hypercycles => {
            let (form_name, form) = match form {
                Form::Closed => ("closed", HypercycleForm::Closed),
                Form::Sum => ("sum", HypercycleForm::Sum),
            };
            CountDocument {
                kind: "hypercycles",
                b,
                s,
                k: None,
                j: None,
                form: Some(form_name),
                count: count_hypercycles(b, s, form)?.to_string(),
                n: cycle_n,
            }
        }
        CountKind::HypercycleClass => {
            let j = required(j, "j", "hypercycle-class")?;
            CountDocument {
                kind: "hypercycle-class",
                b,
                s,
                k: None,
                j: Some(j),
                form: None,
                count: hypercycle_class_count(b, s, j)?.to_string(),
                n: cycle_n,
            }
        }
    };
    Ok(doc)
}

fn emit<T: Serialize>(out: &mut Output<impl Write>, failed: &mut Option<io::Error>, value: &T) {
    if failed.is_none() {
        if let Err(e) = out.record(value) {
            *failed = Some(e);
        }
    }
}

fn enumerate(kind: EnumerateKind, b: u32, s: u32, k: Option<u32>, multiset: bool, out: &mut Output<impl Write>) -> Outcome {
    let budget = budget()?;
    let mut failed = None;
    let summary = match kind {
        EnumerateKind::Forests => {
            let k = required(k, "k", "forests")?;
            let total = oracle::for_each_forest(b, s, k, budget, |f| {
                emit(out, &mut failed, &ForestDocument::from_forest(&f))
            })?;
            EnumerationSummary {
                kind: "forests",
                b,
                s,
                k: Some(k),
                multiset: None,
                count: total.to_string(),
                formula: count_forests(b, s, k)?.to_string(),
            }
        }
        EnumerateKind::Codes => {
            let k = required(k, "k", "codes")?;
            let total =
                oracle::for_each_code(b, s, k, budget, |c| emit(out, &mut failed, &CodeDocument::from_code(&c)))?;
            EnumerationSummary {
                kind: "codes",
                b,
                s,
                k: Some(k),
                multiset: None,
                count: total.to_string(),
                formula: count_forests(b, s, k)?.to_string(),
            }
        }
        EnumerateKind::Hypercycles => {
            let total = oracle::for_each_hypercycle(b, s, multiset, budget, |h| {
                let doc = EdgeSetDocument {
                    n: h.n(),
                    b: h.b(),
                    edges: h.edges().iter().map(|e| e.vertices().to_vec()).collect(),
                };
                emit(out, &mut failed, &doc)
            })?;
            EnumerationSummary {
                kind: "hypercycles",
                b,
                s,
                k: None,
                multiset: Some(multiset),
                count: total.to_string(),
                formula: count_hypercycles(b, s, HypercycleForm::Closed)?.to_string(),
            }
        }
    };
    if let Some(e) = failed {
        return Err(e.into());
    }
    out.record(&Summary { summary })?;
    Ok(())
}

fn audit(b: u32, s: u32, out: &mut Output<impl Write>) -> Outcome {
    let report = oracle::audit_hypercycles(b, s, budget()?)?;
    for (&j, count) in &report.by_cycle_length {
        out.record(&CycleClassRecord { j, count: count.to_string() })?;
    }
    out.record(&Summary {
        summary: AuditSummary {
            b: report.b,
            s: report.s,
            n: report.n,
            closed_form: report.closed_form.to_string(),
            sum_form: report.sum_form.to_string(),
            cycle_length_total: report.cycle_length_total.to_string(),
            oracle_set: report.oracle_set.to_string(),
            oracle_multiset: report.oracle_multiset.to_string(),
            notes: report.notes,
        },
    })?;
    Ok(())
}

fn run(cli: Cli, out: &mut Output<&mut dyn Write>) -> Outcome {
    match cli.command {
        Command::Validate { input } => validate(&read_input(&input)?, out),
        Command::Encode { input } => {
            let doc: ForestDocument = parse(&read_input(&input)?, "forest")?;
            let forest = RootedForest::new(doc.to_hypergraph())?;
            out.record(&CodeDocument::from_code(&encode_forest(&forest)?))?;
            Ok(())
        }
        Command::Decode { input } => {
            let doc: CodeDocument = parse(&read_input(&input)?, "code")?;
            let forest = decode_code(&doc.to_code()?)?;
            out.record(&ForestDocument::from_forest(&forest))?;
            Ok(())
        }
        Command::Count { kind, b, s, k, j, form } => {
            out.record(&count(kind, b, s, k, j, form)?)?;
            Ok(())
        }
        Command::Enumerate { kind, b, s, k, multiset } => enumerate(kind, b, s, k, multiset, out),
        Command::Audit { b, s } => audit(b, s, out),
        Command::Sample { b, s, k, seed, m } => {
            let mut sampler = ForestSampler::new(shape(b, s, k)?, seed);
            for _ in 0..m {
                out.record(&ForestDocument::from_forest(&sampler.next_forest()?))?;
            }
            Ok(())
        }
        Command::Rank { input } => {
            let doc: CodeDocument = parse(&read_input(&input)?, "code")?;
            let index = rank_code(&doc.to_code()?)?;
            out.record(&IndexDocument { b: doc.b, s: doc.s, k: doc.k, index: index.to_string() })?;
            Ok(())
        }
        Command::Unrank { index, b, s, k } => {
            let index = BigUint::from_str(index.trim())
                .map_err(|_| Failure::usage("bad_index", format!("{index:?} is not a non-negative integer")))?;
            out.record(&CodeDocument::from_code(&unrank_code(&index, shape(b, s, k)?)?))?;
            Ok(())
        }
        Command::Ids { b, s, k, m } => {
            for (i, code) in generate_ids(shape(b, s, k)?, m)?.iter().enumerate() {
                out.record(&IdDocument { index: i.to_string(), code: CodeDocument::from_code(code) })?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let doc = ErrorDocument { error: "usage", message: e.kind().to_string() };
            eprintln!("{}", serde_json::to_string(&doc).expect("serializable"));
            let _ = e.print();
            return ExitCode::from(2);
        }
    };

    let stdout = io::stdout();
    let mut lock = BufWriter::new(stdout.lock());
    let mut out = Output { out: &mut lock as &mut dyn Write };
    let result = run(cli, &mut out);
    let flushed = lock.flush();
    match result.and(flushed.map_err(Failure::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{}", serde_json::to_string(&failure.document()).expect("serializable"));
            ExitCode::from(failure.exit_code())
        }
    }
}
