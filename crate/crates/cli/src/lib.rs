//! Command line front end: Hasse and BGG graphs, extremal vectors, complex
//! checks along chains, and the Dirac sequence checker.

mod document;
mod literal;
mod render;

use std::ffi::OsString;
use std::fmt::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dirac::{convention, verify_complex, DiracError, FieldSet};
use liealg::{AlgebraSpec, Series, Weight};
use parabolic::{
    bgg_graph, regular_hasse_graph, singular_hasse_graph, HomEvidence, LabeledGraph, ParabolicError, ParabolicSpec,
};
use serde_json::json;
use verma::{compose_is_zero, ExtremalEvidence, VermaError, VermaModule, VermaVector};

pub use document::{weight_strings, EdgeDoc, GraphDocument, VertexDoc};
pub use literal::parse_weight;
pub use render::{to_dot, to_text};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("guard exceeded: {0}")]
    Guard(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Guard(_) => EXIT_GUARD,
        }
    }
}

impl From<ParabolicError> for CliError {
    fn from(e: ParabolicError) -> Self {
        match e {
            ParabolicError::Guard(_) | ParabolicError::Weyl(weyl::WeylError::Guard(_)) => CliError::Guard(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<VermaError> for CliError {
    fn from(e: VermaError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<DiracError> for CliError {
    fn from(e: DiracError) -> Self {
        match e {
            DiracError::Guard(_) => CliError::Guard(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "orthobgg", version, about = "BGG graphs and singular vectors for orthogonal Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SeriesArg {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    #[arg(long)]
    pub algebra: SeriesArg,
    #[arg(long)]
    pub rank: usize,
    /// Crossed simple roots, 1-based; exactly one is supported.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub cross: Vec<usize>,
    /// Weight literals are given as lambda + delta.
    #[arg(long)]
    pub shifted: bool,
}

#[derive(Args, Debug)]
pub struct OutArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Regular or singular Hasse graph.
    Hasse {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, conflicts_with_all = ["singular", "lambda"])]
        regular: bool,
        #[arg(long)]
        singular: bool,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// BGG graph with edge kinds.
    Bgg {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, conflicts_with = "lambda")]
        regular: bool,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Confirm non-standard arrows with the singular vector solver.
        #[arg(long)]
        confirm_extremal: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Singular vectors of weight mu in M_p(lambda).
    Extremal {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Solve the homomorphisms along a chain and compose neighbours.
    Complex {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, num_args = 2..=4, required = true, allow_hyphen_values = true)]
        chain: Vec<String>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check the two-variable Dirac sequence on polynomial fields.
    Dirac {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: Mode,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// standard, alternate or mutated (negative control)
        #[arg(long, default_value = "standard")]
        convention: String,
        #[command(flatten)]
        out: OutArgs,
    },
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    body: String,
    violation: bool,
}

impl AlgebraArgs {
    fn spec(&self) -> Result<ParabolicSpec, CliError> {
        let series = match self.algebra {
            SeriesArg::B => Series::B,
            SeriesArg::D => Series::D,
        };
        let algebra = AlgebraSpec::new(series, self.rank).map_err(|e| CliError::Usage(e.to_string()))?;
        let k = match self.cross.as_slice() {
            [k] => *k,
            [] => return Err(CliError::Usage("no crossed node given".into())),
            many => return Err(CliError::Usage(format!("{} crossed nodes given, exactly one is supported", many.len()))),
        };
        Ok(ParabolicSpec::new(algebra, k)?)
    }

    fn weight(&self, spec: &ParabolicSpec, text: &str) -> Result<Weight, CliError> {
        let w = parse_weight(text, spec).map_err(CliError::Usage)?;
        Ok(if self.shifted { &w - &spec.algebra.delta() } else { w })
    }
}

fn graph_output(g: &LabeledGraph, format: Format) -> String {
    match format {
        Format::Text => to_text(g),
        Format::Json => GraphDocument::from_graph(g).to_json() + "\n",
        Format::Dot => to_dot(g),
    }
}

fn no_dot(format: Format) -> Result<(), CliError> {
    if format == Format::Dot {
        return Err(CliError::Usage("dot output is only available for graphs".into()));
    }
    Ok(())
}

fn vector_json(m: &VermaModule, v: &VermaVector) -> serde_json::Value {
    let terms: Vec<_> = v
        .terms
        .iter()
        .map(|(key, c)| {
            let (lower, levi) = m.term_factors(key);
            json!({
                "coeff": c.to_string(),
                "y": lower.iter().map(|g| [g.i, g.j]).collect::<Vec<_>>(),
                "Y": levi.iter().map(|g| [g.i, g.j]).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "text": m.render(v), "terms": terms })
}

fn cmd_extremal(alg: &AlgebraArgs, lambda: &str, mu: &str, format: Format) -> Result<Report, CliError> {
    no_dot(format)?;
    let spec = alg.spec()?;
    let (lambda, mu) = (alg.weight(&spec, lambda)?, alg.weight(&spec, mu)?);
    let m = VermaModule::new(spec, lambda.clone())?;
    let sol = m.extremal_vectors(&mu)?;
    let body = match format {
        Format::Json => {
            let doc = json!({
                "algebra": spec.algebra.to_string(),
                "sigma": [spec.k],
                "lambda": weight_strings(&lambda),
                "mu": weight_strings(&mu),
                "candidates": sol.candidates.len(),
                "dim": sol.dim(),
                "basis": sol.basis.iter().map(|v| vector_json(&m, v)).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
        _ => {
            let mut s = format!("dim {}\n", sol.dim());
            for v in &sol.basis {
                writeln!(s, "{}", m.render(v)).unwrap();
            }
            s
        }
    };
    Ok(Report { body, violation: false })
}

fn cmd_complex(alg: &AlgebraArgs, chain: &[String], format: Format) -> Result<Report, CliError> {
    no_dot(format)?;
    let spec = alg.spec()?;
    let weights = chain.iter().map(|w| alg.weight(&spec, w)).collect::<Result<Vec<_>, _>>()?;
    let evidence = ExtremalEvidence::default();
    let mut homs = Vec::new();
    for pair in weights.windows(2) {
        let m = evidence.module(&spec, &pair[0])?;
        let sol = m.extremal_vectors(&pair[1])?;
        homs.push((m, sol));
    }
    let mut text = format!("{spec}\n");
    let mut hom_docs = Vec::new();
    for (i, (m, sol)) in homs.iter().enumerate() {
        writeln!(text, "hom {}: {} -> {} dim {}", i + 1, spec.render(&sol.mu), spec.render(&sol.lambda), sol.dim()).unwrap();
        for v in &sol.basis {
            writeln!(text, "  {}", m.render(v)).unwrap();
        }
        hom_docs.push(json!({
            "from": weight_strings(&sol.mu),
            "to": weight_strings(&sol.lambda),
            "dim": sol.dim(),
            "basis": sol.basis.iter().map(|v| vector_json(m, v)).collect::<Vec<_>>(),
        }));
    }
    let mut violation = false;
    let mut comp_docs = Vec::new();
    if homs.len() < 2 {
        writeln!(text, "no compositions").unwrap();
    }
    for (i, pair) in homs.windows(2).enumerate() {
        let ((outer_m, outer), (inner_m, inner)) = (&pair[0], &pair[1]);
        let verdict = if outer.dim() != 1 || inner.dim() != 1 {
            format!("undetermined (dims {} and {})", inner.dim(), outer.dim())
        } else {
            let (zero, residual) = compose_is_zero(outer_m, &outer.basis[0], inner_m, &inner.basis[0])?;
            if zero {
                "zero".to_string()
            } else {
                violation = true;
                format!("nonzero: {}", outer_m.render(&residual))
            }
        };
        writeln!(text, "composite {}: {}", i + 1, verdict).unwrap();
        comp_docs.push(json!({ "index": i + 1, "verdict": verdict }));
    }
    if homs.len() >= 2 {
        writeln!(text, "complex: {}", if violation { "no" } else { "yes" }).unwrap();
    }
    let body = match format {
        Format::Json => {
            let doc = json!({
                "algebra": spec.algebra.to_string(),
                "sigma": [spec.k],
                "homs": hom_docs,
                "compositions": comp_docs,
                "complex": !violation,
            });
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
        _ => text,
    };
    Ok(Report { body, violation })
}

fn mode_name(mode: Mode) -> String {
    mode.to_possible_value().expect("named").get_name().to_string()
}

#[allow(clippy::too_many_arguments)]
fn cmd_dirac(
    n: usize,
    degree: usize,
    mode: Mode,
    trials: usize,
    seed: u64,
    name: &str,
    format: Format,
) -> Result<Report, CliError> {
    no_dot(format)?;
    let seq = convention(name).ok_or_else(|| CliError::Usage(format!("unknown convention {name:?}")))?;
    let set = match mode {
        Mode::Exhaustive => FieldSet::Exhaustive,
        Mode::Random => FieldSet::Random { trials, seed },
    };
    let r = verify_complex(seq, n, degree, set)?;
    let body = match format {
        Format::Json => {
            let failures: Vec<_> = r
                .failures
                .iter()
                .map(|f| json!({"check": f.check.to_string(), "input": f.input, "residual": f.residual, "terms": f.terms}))
                .collect();
            let doc = json!({
                "convention": r.convention,
                "n": r.n,
                "degree": r.max_degree,
                "mode": mode_name(mode),
                "stage1_inputs": r.stage1_inputs,
                "stage1_nonzero": r.stage1_nonzero,
                "stage2_inputs": r.stage2_inputs,
                "stage2_nonzero": r.stage2_nonzero,
                "laplacian_checks": r.laplacian_checks,
                "failures": failures,
                "passed": r.passed(),
            });
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
        _ => {
            let mut s = format!("convention {}\n", r.convention);
            writeln!(s, "n {} degree {} mode {}", r.n, r.max_degree, mode_name(mode)).unwrap();
            writeln!(s, "stage1 inputs {} nonzero {}", r.stage1_inputs, r.stage1_nonzero).unwrap();
            writeln!(s, "stage2 inputs {} nonzero {}", r.stage2_inputs, r.stage2_nonzero).unwrap();
            writeln!(s, "laplacian checks {}", r.laplacian_checks).unwrap();
            writeln!(s, "failures {}", r.failures.len()).unwrap();
            for f in r.failures.iter().take(20) {
                writeln!(s, "  {} on {}: {} terms: {}", f.check, f.input, f.terms, f.residual).unwrap();
            }
            writeln!(s, "{}", if r.passed() { "PASS" } else { "FAIL" }).unwrap();
            s
        }
    };
    Ok(Report { body, violation: !r.passed() })
}

fn execute(cli: &Cli) -> Result<(Report, Option<PathBuf>), CliError> {
    match &cli.command {
        Command::Hasse { alg, regular, singular, lambda, out } => {
            let spec = alg.spec()?;
            let g = match (regular, lambda) {
                (true, _) => regular_hasse_graph(&spec)?,
                (false, Some(l)) => singular_hasse_graph(&spec, &alg.weight(&spec, l)?)?,
                (false, None) if *singular => return Err(CliError::Usage("--singular needs --lambda".into())),
                (false, None) => return Err(CliError::Usage("give --regular or --singular --lambda W".into())),
            };
            Ok((Report { body: graph_output(&g, out.format), violation: false }, out.out.clone()))
        }
        Command::Bgg { alg, regular, lambda, confirm_extremal, out } => {
            let spec = alg.spec()?;
            let lambda = match (regular, lambda) {
                (true, _) => Weight::zero(spec.rank()),
                (false, Some(l)) => alg.weight(&spec, l)?,
                (false, None) => return Err(CliError::Usage("give --regular or --lambda W".into())),
            };
            let solver = ExtremalEvidence::default();
            let evidence: Option<&dyn HomEvidence> = if *confirm_extremal { Some(&solver) } else { None };
            let g = bgg_graph(&spec, &lambda, evidence)?;
            Ok((Report { body: graph_output(&g, out.format), violation: false }, out.out.clone()))
        }
        Command::Extremal { alg, lambda, mu, out } => Ok((cmd_extremal(alg, lambda, mu, out.format)?, out.out.clone())),
        Command::Complex { alg, chain, out } => Ok((cmd_complex(alg, chain, out.format)?, out.out.clone())),
        Command::Dirac { n, degree, mode, trials, seed, convention, out } => {
            Ok((cmd_dirac(*n, *degree, *mode, *trials, *seed, convention, out.format)?, out.out.clone()))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok((report, path)) => {
            let code = if report.violation { EXIT_VIOLATION } else { EXIT_OK };
            match path {
                Some(p) => match std::fs::write(&p, &report.body) {
                    Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
                    Err(e) => Outcome {
                        code: EXIT_USAGE,
                        stdout: String::new(),
                        stderr: format!("cannot write {}: {e}\n", p.display()),
                    },
                },
                None => Outcome { code, stdout: report.body, stderr: String::new() },
            }
        }
        Err(e) => Outcome { code: e.code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
