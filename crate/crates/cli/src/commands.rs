use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};
use ybasis_core::basis::{self, assemble_with, BasisKind, BasisMatrix, Report};
use ybasis_core::matrix_rep::{represent_with_cap, DEFAULT_SIZE_CAP};
use ybasis_core::projectors::{hermitian_mold, projector};
use ybasis_core::transitions::transition;
use ybasis_core::{AlgebraElement, ProjectorKind, TransitionKind, YoungDiagram, YoungTableau};

use crate::config::{thread_count, FileConfig};
use crate::json;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Orthonormality pairs drawn at `m ≥ 5` unless `--sample` says otherwise.
const DEFAULT_SAMPLE: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Young,
    Hermitian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ProjKind {
    Young,
    Staircase,
    Mold,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TransKind {
    Young,
    General,
    Compact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Table,
    Ortho,
    Complete,
    Independence,
    Counting,
}

#[derive(Parser, Debug)]
#[command(
    name = "ybasis",
    version,
    about = "Exact projector and transition operator bases of the SU(N) invariant algebra on V^m"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// TOML file with defaults for any of the flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for verification (also YBASIS_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the standard tableaux with m boxes in canonical order.
    Tableaux {
        #[arg(long)]
        m: Option<usize>,
    },
    /// Build one projector, e.g. --tableau "[[1,2],[3]]".
    Projector {
        #[arg(long)]
        tableau: String,
        #[arg(long, value_enum)]
        kind: Option<ProjKind>,
    },
    /// Build the transition operator from one tableau to another.
    Transition {
        #[arg(long)]
        to: String,
        #[arg(long)]
        from: String,
        #[arg(long, value_enum)]
        kind: Option<TransKind>,
    },
    /// Assemble the full block matrix, optionally verifying it.
    Basis {
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        /// Transition construction for the Hermitian kind.
        #[arg(long, value_enum)]
        transitions: Option<TransKind>,
        #[arg(long, value_enum)]
        verify: Option<Suite>,
    },
    /// Evaluate an operator as an exact n^m x n^m matrix.
    Represent {
        #[arg(long)]
        m: Option<usize>,
        #[arg(long = "N")]
        n: usize,
        /// Operator JSON, or @file to read it from a file.
        #[arg(long)]
        op: String,
        #[arg(long)]
        rank: bool,
        #[arg(long)]
        size_cap: Option<usize>,
    },
    /// Run the verification suite for the Hermitian basis.
    Verify {
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum)]
        suite: Option<Suite>,
        /// Orthonormality pairs to sample; 0 checks all pairs.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Dimension polynomials of the irreducibles with m boxes.
    Dims {
        #[arg(long)]
        m: Option<usize>,
    },
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<(Document, bool), Usage>;

/// What a command produced: JSON plus renderings for the other formats.
struct Document {
    json: Value,
    text: String,
    latex: String,
}

fn from_config<T: ValueEnum>(key: &str, value: Option<&String>) -> Result<Option<T>, Usage> {
    value
        .map(|s| T::from_str(s, true).map_err(|_| Usage(format!("config key {key}: unknown value {s}"))))
        .transpose()
}

fn degree(flag: Option<usize>, file: &FileConfig) -> Result<usize, Usage> {
    match flag.or(file.m) {
        Some(0) => Err(Usage("--m must be at least 1".into())),
        Some(m) => Ok(m),
        None => Err(Usage("--m is required".into())),
    }
}

fn parse_tableau(text: &str) -> Result<YoungTableau, Usage> {
    let v: Value = serde_json::from_str(text).map_err(|e| Usage(format!("tableau {text}: {e}")))?;
    Ok(json::parse_tableau(&v)?)
}

fn latex_tableau(t: &YoungTableau) -> String {
    let rows: Vec<String> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" & "))
        .collect();
    format!("\\begin{{ytableau}} {} \\end{{ytableau}}", rows.join(" \\\\ "))
}

fn tableaux_cmd(m: usize) -> Outcome {
    let all = YoungTableau::all(m);
    let mut text = String::new();
    let mut latex = String::new();
    let items: Vec<Value> = all
        .iter()
        .map(|t| {
            text.push_str(&format!("{}  {}  mold {}\n", t.shape(), t.bracket(), t.mold()));
            latex.push_str(&latex_tableau(t));
            latex.push('\n');
            json!({ "tableau": json::tableau(t), "mold": t.mold() })
        })
        .collect();
    Ok((
        Document {
            json: json!({ "m": m, "tableaux": items }),
            text,
            latex,
        },
        true,
    ))
}

fn projector_cmd(tableau: &str, kind: ProjKind) -> Outcome {
    let t = parse_tableau(tableau)?;
    let kind = match kind {
        ProjKind::Young => ProjectorKind::Young,
        ProjKind::Staircase => ProjectorKind::Staircase,
        ProjKind::Mold => ProjectorKind::Mold,
    };
    let p = projector(&t, kind)?;
    let text = format!(
        "P{} = {}\n  = {}\ndim = {}\n",
        t.bracket(),
        p.word,
        p.element,
        p.dimension()
    );
    let latex = format!("P_{{{}}} = {}\n", t.bracket(), p.element.to_latex());
    Ok((
        Document {
            json: json::projector(&p),
            text,
            latex,
        },
        true,
    ))
}

fn transition_kind(k: TransKind) -> TransitionKind {
    match k {
        TransKind::Young => TransitionKind::Young,
        TransKind::General => TransitionKind::General,
        TransKind::Compact => TransitionKind::Compact,
    }
}

fn transition_cmd(to: &str, from: &str, kind: TransKind) -> Outcome {
    let (a, b) = (parse_tableau(to)?, parse_tableau(from)?);
    let t = transition(&a, &b, transition_kind(kind))?;
    let text = format!(
        "T{} <- {} = {}\n  = {}\ntau^2 = {}\n",
        a.bracket(),
        b.bracket(),
        t.word,
        t.element,
        json::rational(&t.tau_squared).as_str().unwrap_or_default()
    );
    let latex = format!("T_{{{},{}}} = {}\n", a.bracket(), b.bracket(), t.element.to_latex());
    Ok((
        Document {
            json: json::transition(&t),
            text,
            latex,
        },
        true,
    ))
}

fn basis_text(b: &BasisMatrix) -> (String, String) {
    let mut text = String::new();
    let mut latex = String::new();
    for blk in &b.blocks {
        text.push_str(&format!("block {}\n", blk.diagram));
        for (i, row) in blk.operators.iter().enumerate() {
            for (j, op) in row.iter().enumerate() {
                let (a, c) = (blk.tableaux[i].bracket(), blk.tableaux[j].bracket());
                text.push_str(&format!("  {a} <- {c}: {op}\n"));
                latex.push_str(&format!("\\mathfrak{{m}}_{{{a},{c}}} = {}\n", op.to_latex()));
            }
        }
    }
    (text, latex)
}

/// Runs the selected checks on an assembled basis.
fn check_basis(b: &BasisMatrix, suite: Suite, sample: Option<usize>, seed: u64) -> Result<Report, Usage> {
    let mut report = Report::default();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Counting) {
        report.extend(basis::verify_counting(b));
    }
    if wants(Suite::Table) {
        report.extend(basis::verify_multiplication_table(b));
    }
    if wants(Suite::Ortho) {
        if b.kind == BasisKind::Young {
            if suite == Suite::Ortho {
                return Err(Usage(ybasis_core::Error::OrthonormalityOnYoung.to_string()));
            }
        } else {
            let n = b.len();
            let sample = sample.unwrap_or(if b.m >= 5 { DEFAULT_SAMPLE } else { 0 });
            let r = if sample == 0 {
                basis::verify_orthonormality(b)?
            } else {
                let mut rng = StdRng::seed_from_u64(seed);
                let pairs: Vec<(usize, usize)> = (0..sample)
                    .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                    .collect();
                basis::verify_orthonormality_pairs(b, &pairs)?
            };
            report.extend(r);
        }
    }
    if wants(Suite::Complete) && b.kind == BasisKind::Hermitian {
        report.extend(basis::verify_completeness_and_nesting(b.m)?);
    }
    if wants(Suite::Independence) {
        report.extend(basis::verify_linear_independence(b));
    }
    Ok(report)
}

fn kind_of(k: Kind) -> BasisKind {
    match k {
        Kind::Young => BasisKind::Young,
        Kind::Hermitian => BasisKind::Hermitian,
    }
}

fn basis_cmd(m: usize, kind: Kind, transitions: TransKind, verify: Option<Suite>, seed: u64) -> Outcome {
    let b = assemble_with(m, kind_of(kind), transition_kind(transitions))?;
    let mut doc = json::basis(&b);
    let (mut text, latex) = basis_text(&b);
    let mut ok = true;
    if let Some(suite) = verify {
        let r = check_basis(&b, suite, None, seed)?;
        ok = r.passed();
        text.push_str(&r.to_string());
        doc["report"] = json::report(&r);
    }
    Ok((Document { json: doc, text, latex }, ok))
}

fn verify_cmd(m: usize, suite: Suite, sample: Option<usize>, seed: u64) -> Outcome {
    let b = assemble_with(m, BasisKind::Hermitian, TransitionKind::Compact)?;
    let mut report = check_basis(&b, suite, sample, seed)?;
    if m <= 4 && matches!(suite, Suite::All | Suite::Table) {
        let young = assemble_with(m, BasisKind::Young, TransitionKind::Young)?;
        let mut r = basis::verify_multiplication_table(&young);
        for c in &mut r.checks {
            c.identity = format!("young: {}", c.identity);
        }
        report.extend(r);
    }
    let ok = report.passed();
    let text = format!("m = {m}\n{report}");
    let doc = json!({ "m": m, "suite": format!("{suite:?}").to_lowercase(), "report": json::report(&report) });
    Ok((
        Document {
            json: doc,
            latex: text.clone(),
            text,
        },
        ok,
    ))
}

fn dims_cmd(m: usize) -> Outcome {
    let mut items = Vec::new();
    let mut text = String::new();
    for d in YoungDiagram::all(m) {
        let first = &YoungTableau::of_shape(&d)[0];
        let dim = hermitian_mold(first)?.dimension();
        text.push_str(&format!("{d}  {dim}\n"));
        items.push(json!({ "diagram": d.rows(), "dimension": json::poly(&dim), "text": dim.to_string() }));
    }
    Ok((
        Document {
            json: json!({ "m": m, "dimensions": items }),
            latex: text.clone(),
            text,
        },
        true,
    ))
}

fn represent_cmd(m: Option<usize>, n: usize, op: &str, rank: bool, cap: usize) -> Outcome {
    let source = match op.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Usage(format!("{path}: {e}")))?,
        None => op.to_owned(),
    };
    let v: Value = serde_json::from_str(&source).map_err(|e| Usage(format!("operator: {e}")))?;
    let a: AlgebraElement = json::parse_operator(&v)?;
    if let Some(m) = m {
        if m != a.degree() {
            return Err(Usage(format!("--m {m} but the operator has degree {}", a.degree())));
        }
    }
    if n == 0 {
        return Err(Usage("--N must be at least 1".into()));
    }
    let c = represent_with_cap(&a, n, cap)?;
    let mut doc = json::matrix(&c);
    let mut text = format!("{0}x{0} matrix, {1} nonzero entries\n", c.dim(), c.nnz());
    if rank {
        let r = c.rank();
        doc["rank"] = json!(r);
        text.push_str(&format!("rank {r}\n"));
    }
    for (r, k, v) in c.triplets() {
        text.push_str(&format!("  ({r}, {k}) {v}\n"));
    }
    Ok((
        Document {
            json: doc,
            latex: text.clone(),
            text,
        },
        true,
    ))
}

fn execute(cli: Cli, file: &FileConfig) -> Outcome {
    let seed = file.seed.unwrap_or(0);
    let suite_cfg = |key| from_config::<Suite>(key, file.suite.as_ref().or(file.verify.as_ref()));
    match cli.command {
        Command::Tableaux { m } => tableaux_cmd(degree(m, file)?),
        Command::Projector { tableau, kind } => {
            let kind = kind
                .or(from_config("kind", file.kind.as_ref())?)
                .unwrap_or(ProjKind::Mold);
            projector_cmd(&tableau, kind)
        }
        Command::Transition { to, from, kind } => {
            let kind = kind
                .or(from_config("kind", file.kind.as_ref())?)
                .unwrap_or(TransKind::Compact);
            transition_cmd(&to, &from, kind)
        }
        Command::Basis {
            m,
            kind,
            transitions,
            verify,
        } => {
            let kind = kind
                .or(from_config("kind", file.kind.as_ref())?)
                .unwrap_or(Kind::Hermitian);
            let transitions = transitions
                .or(from_config("transitions", file.transitions.as_ref())?)
                .unwrap_or(TransKind::Compact);
            let verify = verify.or(from_config("verify", file.verify.as_ref())?);
            basis_cmd(degree(m, file)?, kind, transitions, verify, seed)
        }
        Command::Represent {
            m,
            n,
            op,
            rank,
            size_cap,
        } => {
            let cap = size_cap.or(file.size_cap).unwrap_or(DEFAULT_SIZE_CAP);
            if cap == 0 {
                return Err(Usage("--size-cap must be positive".into()));
            }
            represent_cmd(m.or(file.m), n, &op, rank, cap)
        }
        Command::Verify {
            m,
            suite,
            sample,
            seed: s,
        } => {
            let suite = suite.or(suite_cfg("suite")?).unwrap_or(Suite::All);
            verify_cmd(degree(m, file)?, suite, sample.or(file.sample), s.unwrap_or(seed))
        }
        Command::Dims { m } => dims_cmd(degree(m, file)?),
    }
}

fn configure_threads(n: Option<usize>) {
    if let Some(n) = n {
        // A pool that already exists (repeated calls in one process) stays.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match run_parsed(cli, stdout) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILED,
        Err(Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn run_parsed(cli: Cli, stdout: &mut dyn Write) -> Result<bool, Usage> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    configure_threads(thread_count(cli.threads, &file)?);
    let format = cli
        .format
        .or(from_config("format", file.format.as_ref())?)
        .unwrap_or(Format::Json);
    let out = cli.out.clone().or_else(|| file.out.clone());
    let (doc, ok) = execute(cli, &file)?;
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&doc.json)? + "\n",
        Format::Text => doc.text,
        Format::Latex => doc.latex,
    };
    match out {
        Some(path) => std::fs::write(&path, body).map_err(|e| Usage(format!("{}: {e}", path.display())))?,
        None => stdout.write_all(body.as_bytes())?,
    }
    Ok(ok)
}
