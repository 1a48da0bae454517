//! The `tiealg` command line. [`run`] is pure apart from `--out` and the
//! `TIEALG_BUDGET` variable, so it can be driven from tests.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::diagram::{to_diagram, Format};
use crate::hyperoct::{
    induced_rep, irreps_e3, phi0_rep, phi1_rep, plus_minus_split, semisimplicity_certificate, to_erep, Bipartition,
    ERep, RepError,
};
use crate::rewrite::relations::{defining_relations, derived_identities, lemma_corrected, Relation};
use crate::rewrite::{self, RewriteError};
use crate::specht::Partition;
use crate::word::{Element, ElementError, Word};

pub const SCHEMA: &str = "tiealg/1";

pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 2;
    pub const UNSUPPORTED: i32 = 3;
    pub const INVARIANT: i32 = 4;
}

#[derive(Debug, Parser)]
#[command(name = "tiealg", version, about = "Exact computations in the algebra of braids and ties")]
pub struct Cli {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Relations,
    Derived,
    Skein,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an element.
    Nf {
        #[arg(long)]
        n: usize,
        element: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Dimension with its certificate.
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Verify a family of identities.
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Representation matrices of E_n(1): `list`, `bip:[2],[1]`,
    /// `plusminus:[1]`, `phi0:[2,1]`, `phi1:[2,1]`.
    Repr {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value = "list")]
        which: String,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Draw a single word.
    Diagram {
        element: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "ascii")]
        format: OutputFormat,
    },
    /// Rank certificate for E_3(1).
    Certify {
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

/// Exit code, stdout and stderr of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: exit::OK, stdout, stderr: String::new() }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: exit::INPUT, message: message.into() }
    }
}

impl From<ElementError> for Failure {
    fn from(e: ElementError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<RewriteError> for Failure {
    fn from(e: RewriteError) -> Self {
        let code = match &e {
            RewriteError::BudgetExceeded { .. } | RewriteError::Unsupported { .. } => exit::UNSUPPORTED,
            RewriteError::Invariant(_) => exit::INVARIANT,
            RewriteError::Element(_) => exit::INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<RepError> for Failure {
    fn from(e: RepError) -> Self {
        let code = match &e {
            RepError::SizeMismatch { .. } => exit::INPUT,
            RepError::Unsupported(_) => exit::UNSUPPORTED,
            _ => exit::INVARIANT,
        };
        Failure { code, message: e.to_string() }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::OK };
            let text = e.render().to_string();
            return if code == exit::OK {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let result = check_budget_var().and_then(|_| dispatch(&cli.command));
    match result {
        Ok((code, text)) => match &cli.out {
            Some(path) => match std::fs::write(path, &text) {
                Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
                Err(e) => Outcome { code: exit::INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
            },
            None => Outcome { code, stdout: text, stderr: String::new() },
        },
        Err(f) => Outcome { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
    }
}

fn check_budget_var() -> Result<(), Failure> {
    match std::env::var("TIEALG_BUDGET") {
        Ok(v) if v.trim().parse::<u64>().is_err() => Err(Failure::input(format!("TIEALG_BUDGET must be a count, got {v:?}"))),
        _ => Ok(()),
    }
}

fn strands(n: usize) -> Result<usize, Failure> {
    match n {
        0 | 1 => Err(Failure::input(format!("--n must be at least 2, got {n}"))),
        2..=4 => Ok(n),
        _ => Err(Failure { code: exit::UNSUPPORTED, message: format!("n = {n} is not supported (2 ≤ n ≤ 4)") }),
    }
}

fn text_or_json(format: OutputFormat) -> Result<bool, Failure> {
    match format {
        OutputFormat::Text => Ok(false),
        OutputFormat::Json => Ok(true),
        f => Err(Failure::input(format!("format {f:?} is not available for this command"))),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn dispatch(cmd: &Command) -> Result<(i32, String), Failure> {
    match cmd {
        Command::Nf { n, element, format } => cmd_nf(*n, element, *format).map(|s| (exit::OK, s)),
        Command::Dim { n, format } => cmd_dim(*n, *format).map(|s| (exit::OK, s)),
        Command::Check { n, suite, format } => cmd_check(*n, *suite, *format),
        Command::Repr { n, which, format } => cmd_repr(*n, which, *format).map(|s| (exit::OK, s)),
        Command::Diagram { element, n, format } => cmd_diagram(element, *n, *format).map(|s| (exit::OK, s)),
        Command::Certify { format } => cmd_certify(*format).map(|s| (exit::OK, s)),
    }
}

fn terms_json(e: &Element) -> Value {
    Value::Array(e.terms().map(|(w, c)| json!({"word": w.to_string(), "coeff": c.to_string()})).collect())
}

fn cmd_nf(n: usize, text: &str, format: OutputFormat) -> Result<String, Failure> {
    let json = text_or_json(format)?;
    let n = strands(n)?;
    let a = Element::parse(text, n)?;
    let nf = rewrite::normal_form(&a)?;
    if json {
        return Ok(pretty(&json!({
            "schema": SCHEMA, "command": "nf", "n": n, "input": text,
            "normal_form": nf.to_string(), "terms": terms_json(&nf),
        })));
    }
    Ok(format!("{nf}\n"))
}

fn cmd_dim(n: usize, format: OutputFormat) -> Result<String, Failure> {
    let json = text_or_json(format)?;
    let n = strands(n)?;
    let d = rewrite::dimension(n)?;
    if json {
        return Ok(pretty(&json!({
            "schema": SCHEMA, "command": "dim", "n": n, "dimension": d.value,
            "certificate": d.certificate.to_string(), "span_length": d.span_len,
        })));
    }
    Ok(format!("{} {}\n", d.value, d.certificate))
}

fn suite_relations(n: usize, suite: Suite) -> Vec<Relation> {
    let is_skein = |r: &Relation| r.name.starts_with("skein");
    let derived = || derived_identities(n).into_iter().chain(lemma_corrected(n));
    match suite {
        Suite::Relations => defining_relations(n),
        Suite::Skein => derived().filter(is_skein).collect(),
        Suite::Derived => derived().filter(|r| !is_skein(r)).collect(),
        Suite::All => defining_relations(n).into_iter().chain(derived()).collect(),
    }
}

fn cmd_check(n: usize, suite: Suite, format: OutputFormat) -> Result<(i32, String), Failure> {
    let json = text_or_json(format)?;
    let n = strands(n)?;
    let rels = suite_relations(n, suite);
    let mut results = Vec::with_capacity(rels.len());
    for r in &rels {
        results.push((r, rewrite::check_identity(&r.lhs, &r.rhs)?));
    }
    let failed = results.iter().filter(|(_, ok)| !ok).count();
    let code = if failed == 0 { exit::OK } else { exit::INVARIANT };
    let suite_name = format!("{suite:?}").to_lowercase();
    if json {
        let items: Vec<Value> = results
            .iter()
            .map(|(r, ok)| json!({"name": r.name, "lhs": r.lhs.to_string(), "rhs": r.rhs.to_string(), "holds": ok}))
            .collect();
        let v = json!({
            "schema": SCHEMA, "command": "check", "n": n, "suite": suite_name,
            "passed": results.len() - failed, "failed": failed, "results": items,
        });
        return Ok((code, pretty(&v)));
    }
    let mut s = String::new();
    for (r, ok) in &results {
        s.push_str(&format!("{}  {}: {} = {}\n", if *ok { "pass" } else { "FAIL" }, r.name, r.lhs, r.rhs));
    }
    s.push_str(&format!("{} passed, {} failed ({suite_name}, n = {n})\n", results.len() - failed, failed));
    Ok((code, s))
}

/// `[2,1]`, `[]`, `φ` or `phi`.
pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if matches!(s, "φ" | "phi" | "[]") {
        return Ok(Partition::empty());
    }
    let inner = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(|| format!("bad partition {s:?}"))?;
    let parts = inner
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("bad partition {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

/// `[2],[1]` or `[1,1],φ`: split at the comma outside brackets.
pub fn parse_bipartition(s: &str) -> Result<Bipartition, String> {
    let mut depth = 0i32;
    for (k, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                return Ok(Bipartition { alpha: parse_partition(&s[..k])?, beta: parse_partition(&s[k + 1..])? });
            }
            _ => {}
        }
    }
    Err(format!("bad bipartition {s:?}"))
}

fn rep_json(r: &ERep) -> Value {
    let mut v = r.to_json();
    v["dim"] = json!(r.dim());
    v
}

fn cmd_repr(n: usize, which: &str, format: OutputFormat) -> Result<String, Failure> {
    let json = text_or_json(format)?;
    let n = strands(n)?;
    let (kind, arg) = which.split_once(':').unwrap_or((which, ""));
    let size_check = |p: &Partition, want: usize| {
        if p.size() == want {
            Ok(())
        } else {
            Err(Failure::input(format!("{p} has size {}, expected {want}", p.size())))
        }
    };
    let reps = match kind {
        "list" => {
            if n != 3 {
                return Err(Failure { code: exit::UNSUPPORTED, message: "the full list is provided for n = 3".into() });
            }
            irreps_e3()?
        }
        "bip" => {
            let bp = parse_bipartition(arg).map_err(Failure::input)?;
            if bp.n() != n {
                return Err(RepError::SizeMismatch { a: bp.alpha.size(), b: bp.beta.size(), n }.into());
            }
            vec![to_erep(&induced_rep(&bp)?)?]
        }
        "plusminus" => {
            let a = parse_partition(arg).map_err(Failure::input)?;
            if 2 * a.size() != n {
                return Err(Failure::input(format!("plusminus needs |α| = n/2, got {a} for n = {n}")));
            }
            let (p, m) = plus_minus_split(&a)?;
            vec![p, m]
        }
        "phi0" | "phi1" => {
            let a = parse_partition(arg).map_err(Failure::input)?;
            size_check(&a, n)?;
            vec![if kind == "phi0" { phi0_rep(&a) } else { phi1_rep(&a) }]
        }
        _ => return Err(Failure::input(format!("unknown representation selector {which:?}"))),
    };
    if json {
        let v = json!({
            "schema": SCHEMA, "command": "repr", "n": n, "which": which,
            "reps": reps.iter().map(rep_json).collect::<Vec<_>>(),
        });
        return Ok(pretty(&v));
    }
    Ok(reps.iter().map(|r| format!("{} dim {}\n", r.label, r.dim())).collect())
}

fn cmd_diagram(text: &str, n: usize, format: OutputFormat) -> Result<String, Failure> {
    let n = strands(n)?;
    let w = Word::parse(text, n)?;
    let d = to_diagram(&w, n).map_err(ElementError::from)?;
    Ok(match format {
        OutputFormat::Ascii | OutputFormat::Text => d.render(Format::Ascii),
        OutputFormat::Svg => d.render(Format::Svg),
        OutputFormat::Json => {
            let mut v = d.to_json();
            v["schema"] = json!(SCHEMA);
            v["word"] = json!(w.to_string());
            pretty(&v)
        }
    })
}

fn cmd_certify(format: OutputFormat) -> Result<String, Failure> {
    let json = text_or_json(format)?;
    let c = semisimplicity_certificate()?;
    if c.rank != c.words.len() {
        return Err(Failure {
            code: exit::INVARIANT,
            message: format!("image rank {} is below {}", c.rank, c.words.len()),
        });
    }
    if json {
        let mut v = serde_json::to_value(&c).expect("serializable");
        v["schema"] = json!(SCHEMA);
        v["command"] = json!("certify");
        return Ok(pretty(&v));
    }
    let mut s = String::new();
    s.push_str(&format!("words: {}\n", c.words.len()));
    s.push_str(&format!("rank (phi0 + psi): {}\n", c.rank));
    s.push_str(&format!("rank (phi0 only): {}\n", c.phi0_rank));
    s.push_str(&format!("rank (psi only): {}\n", c.psi_rank));
    if c.psi_rank < c.words.len() {
        s.push_str(&format!("psi is not injective on the span: kernel dimension {}\n", c.psi_kernel.len()));
    }
    s.push_str(&format!("witness columns: {}\n", c.witness_columns.join(" ")));
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_syntax() {
        assert_eq!(parse_partition("[2,1]").unwrap().parts(), &[2, 1]);
        assert_eq!(parse_partition("φ").unwrap(), Partition::empty());
        assert!(parse_partition("[1,2]").is_err());
        let bp = parse_bipartition("[1,1],[1]").unwrap();
        assert_eq!((bp.alpha.size(), bp.beta.size()), (2, 1));
        assert!(parse_bipartition("[2]").is_err());
    }

    #[test]
    fn bad_arguments_are_input_errors() {
        assert_eq!(run(["tiealg", "nf", "--n", "2", "E9"]).code, exit::INPUT);
        assert_eq!(run(["tiealg", "check", "--n", "3", "--suite", "nope"]).code, exit::INPUT);
        assert_eq!(run(["tiealg", "nf", "--n", "7", "T1"]).code, exit::UNSUPPORTED);
        assert_eq!(run(["tiealg", "diagram", "T1 + E1", "--n", "2"]).code, exit::INPUT);
        assert_eq!(run(["tiealg", "--help"]).code, exit::OK);
    }
}
