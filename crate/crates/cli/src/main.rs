//! `simplicial-lines`: generate graphs from the named families, analyze
//! their line/Gallai/anti-Gallai complexes, decide shellability, and run
//! the verification suites.
//!
//! Exit codes are a stable contract: 0 success/shellable, 1 verification
//! suite failure, 2 parse/IO/usage error, 3 analysis with a failed
//! identity verdict, 4 not shellable, 5 inconclusive, 6 facet count above
//! the search bound with no ordering file supplied.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use simplicial_lines_core::io::read_graph_file;
use simplicial_lines_core::report::{analyze, render_text, AnalysisReport, ALL_KINDS};
use simplicial_lines_core::shelling::{
    find_shelling_order, verify_ordering, Method, SearchOptions, ShellingCertificate, Verdict,
    DEFAULT_SEARCH_BOUND,
};
use simplicial_lines_core::suites::{run_all, run_suite, SuiteOptions, SuiteReport};
use simplicial_lines_core::{
    anti_gallai_complex, complete_graph, cycle_graph, friendship_graph, gallai_complex,
    line_complex, path_graph, prism_graph, star_graph, wheel_graph, Face, IndexKind, SimpleGraph,
    SimplicialComplex,
};

const EXIT_SUITE_FAILURE: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_VERDICT_FAILED: u8 = 3;
const EXIT_NOT_SHELLABLE: u8 = 4;
const EXIT_INCONCLUSIVE: u8 = 5;
const EXIT_BOUND_EXCEEDED: u8 = 6;

#[derive(Parser)]
#[command(name = "simplicial-lines", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named family graph and write it to a file (.json for the
    /// JSON schema, anything else for edge-list text).
    Gen {
        family: Family,
        /// Family parameter: rim size, triangle count, layer count, ...
        param: usize,
        out: PathBuf,
    },
    /// Compute the per-complex invariants and identity verdicts of a graph.
    Analyze {
        input: PathBuf,
        /// Which complexes to report on.
        #[arg(long, value_delimiter = ',', default_values_t = [Kind::Line, Kind::Gallai, Kind::AntiGallai])]
        complexes: Vec<Kind>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Collapse duplicate edge pairs in the input instead of rejecting.
        #[arg(long)]
        dedupe: bool,
    },
    /// Decide shellability of one complex of the graph.
    Shell {
        input: PathBuf,
        #[arg(long)]
        complex: Kind,
        #[arg(long, value_enum, default_value_t = Mode::Search)]
        mode: Mode,
        /// Candidate facet ordering: a JSON array of 0-based facet indices
        /// or of facets given as vertex arrays.
        #[arg(long)]
        ordering_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Exhaustive-search facet bound (default 20; env SL_MAX_FACETS
        /// overrides the default, the flag overrides both).
        #[arg(long)]
        max_facets: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        dedupe: bool,
    },
    /// Run the verification suites and print a summary table.
    Verify {
        /// A single suite name; all suites when omitted.
        #[arg(long)]
        suite: Option<String>,
        /// Family or corpus bound; each suite has its own default.
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Wheel,
    Friendship,
    Prism,
    Cycle,
    Star,
    Path,
    Complete,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Line,
    Gallai,
    #[value(name = "anti-gallai")]
    AntiGallai,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::Line => "line",
            Kind::Gallai => "gallai",
            Kind::AntiGallai => "anti-gallai",
        })
    }
}

impl From<Kind> for IndexKind {
    fn from(kind: Kind) -> Self {
        match kind {
            Kind::Line => IndexKind::Line,
            Kind::Gallai => IndexKind::Gallai,
            Kind::AntiGallai => IndexKind::AntiGallai,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Search,
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Definition,
    Residuals,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Definition => Method::Definition,
            MethodArg::Residuals => Method::Residuals,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(err: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_INPUT_ERROR,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Gen { family, param, out } => cmd_gen(family, param, &out),
        Command::Analyze {
            input,
            complexes,
            format,
            dedupe,
        } => cmd_analyze(&input, &complexes, format, dedupe),
        Command::Shell {
            input,
            complex,
            mode,
            ordering_file,
            method,
            max_facets,
            format,
            dedupe,
        } => cmd_shell(
            &input,
            complex,
            mode,
            ordering_file.as_deref(),
            method.into(),
            max_facets,
            format,
            dedupe,
        ),
        Command::Verify { suite, max_n } => cmd_verify(suite.as_deref(), max_n),
    }
}

fn cmd_gen(family: Family, param: usize, out: &Path) -> Result<u8, Failure> {
    let graph = match family {
        Family::Wheel => wheel_graph(param),
        Family::Friendship => friendship_graph(param),
        Family::Prism => prism_graph(param),
        Family::Cycle => cycle_graph(param),
        Family::Star => star_graph(param),
        Family::Path => path_graph(param),
        Family::Complete => complete_graph(param),
    }
    .map_err(Failure::input)?;
    simplicial_lines_core::io::write_graph_file(out, &graph).map_err(Failure::input)?;
    Ok(0)
}

fn cmd_analyze(input: &Path, kinds: &[Kind], format: Format, dedupe: bool) -> Result<u8, Failure> {
    let graph = read_graph_file(input, dedupe).map_err(Failure::input)?;
    let kinds: Vec<IndexKind> = if kinds.is_empty() {
        ALL_KINDS.to_vec()
    } else {
        kinds.iter().map(|&k| k.into()).collect()
    };
    let report = analyze(&graph, &kinds);
    print_report(&report, format);
    Ok(if report.any_failure() {
        EXIT_VERDICT_FAILED
    } else {
        0
    })
}

fn print_report(report: &AnalysisReport, format: Format) {
    match format {
        Format::Text => print!("{}", render_text(report)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
    }
}

fn complex_of(graph: &SimpleGraph, kind: Kind) -> SimplicialComplex {
    match kind {
        Kind::Line => line_complex(graph),
        Kind::Gallai => gallai_complex(graph),
        Kind::AntiGallai => anti_gallai_complex(graph),
    }
}

fn search_bound(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("SL_MAX_FACETS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_SEARCH_BOUND)
}

#[allow(clippy::too_many_arguments)]
fn cmd_shell(
    input: &Path,
    kind: Kind,
    mode: Mode,
    ordering_file: Option<&Path>,
    method: Method,
    max_facets: Option<usize>,
    format: Format,
    dedupe: bool,
) -> Result<u8, Failure> {
    let graph = read_graph_file(input, dedupe).map_err(Failure::input)?;
    let complex = complex_of(&graph, kind);
    let bound = search_bound(max_facets);

    let certificate = match mode {
        Mode::Verify => {
            let path = ordering_file.ok_or_else(|| {
                Failure::input("--mode verify requires --ordering-file")
            })?;
            verify_from_file(&complex, path, method)?
        }
        Mode::Search if complex.facet_count() > bound => match ordering_file {
            // Too many facets to refute exhaustively; fall back to
            // verifying the supplied candidate ordering.
            Some(path) => verify_from_file(&complex, path, method)?,
            None => {
                return Err(Failure {
                    code: EXIT_BOUND_EXCEEDED,
                    message: format!(
                        "{} facets exceed the search bound {bound}; raise --max-facets \
                         or supply --ordering-file with a candidate ordering",
                        complex.facet_count()
                    ),
                })
            }
        },
        Mode::Search => {
            let options = SearchOptions {
                max_facets: bound,
                ..SearchOptions::default()
            };
            find_shelling_order(&complex, method, &options).map_err(Failure::input)?
        }
    };

    match format {
        Format::Text => print!("{}", render_certificate(&certificate)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&certificate).expect("certificate serializes")
        ),
    }
    Ok(match certificate.verdict {
        Verdict::Shellable => 0,
        Verdict::NotShellable => EXIT_NOT_SHELLABLE,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}

fn verify_from_file(
    complex: &SimplicialComplex,
    path: &Path,
    method: Method,
) -> Result<ShellingCertificate, Failure> {
    let ordering = load_ordering(complex, path)?;
    verify_ordering(complex, &ordering, method).map_err(Failure::input)
}

/// Reads a JSON array that is either 0-based facet indices or explicit
/// facets as vertex arrays.
fn load_ordering(complex: &SimplicialComplex, path: &Path) -> Result<Vec<usize>, Failure> {
    let text = std::fs::read_to_string(path).map_err(Failure::input)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(Failure::input)?;
    let items = value
        .as_array()
        .ok_or_else(|| Failure::input("ordering file must hold a JSON array"))?;
    let mut ordering = Vec::with_capacity(items.len());
    for item in items {
        match item {
            serde_json::Value::Number(n) => {
                let i = n
                    .as_u64()
                    .ok_or_else(|| Failure::input("facet indices must be non-negative"))?;
                ordering.push(i as usize);
            }
            serde_json::Value::Array(vertices) => {
                let vertices: Vec<usize> = vertices
                    .iter()
                    .map(|v| {
                        v.as_u64()
                            .map(|v| v as usize)
                            .ok_or_else(|| Failure::input("facet vertices must be integers"))
                    })
                    .collect::<Result<_, _>>()?;
                let face = Face::new(vertices);
                let position = complex
                    .facets()
                    .iter()
                    .position(|f| *f == face)
                    .ok_or_else(|| {
                        Failure::input(format!("{face} is not a facet of the complex"))
                    })?;
                ordering.push(position);
            }
            _ => {
                return Err(Failure::input(
                    "ordering entries must be facet indices or vertex arrays",
                ))
            }
        }
    }
    Ok(ordering)
}

fn render_certificate(cert: &ShellingCertificate) -> String {
    let mut out = format!("verdict: {}\n", cert.verdict);
    if let Some(faces) = cert.ordered_facets() {
        let listing: Vec<String> = faces.iter().map(|f| f.to_string()).collect();
        out.push_str(&format!("ordering: {}\n", listing.join(", ")));
    }
    for step in &cert.steps {
        out.push_str(&format!(
            "  step {} {} -> {}",
            step.position,
            step.facet,
            if step.ok { "ok" } else { "FAIL" }
        ));
        if let Some(gens) = &step.residual_generators {
            let gens: Vec<String> = gens.iter().map(|m| m.to_string()).collect();
            out.push_str(&format!("  residual minimal generators {{{}}}", gens.join(", ")));
        }
        if let Some(faces) = &step.intersection_faces {
            let faces: Vec<String> = faces.iter().map(|f| f.to_string()).collect();
            out.push_str(&format!("  maximal intersections {{{}}}", faces.join(", ")));
        }
        out.push('\n');
    }
    if let Some(refutation) = &cert.refutation {
        out.push_str(&format!(
            "refutation: exhaustive search over {} facets; {} achievable prefix sets\n",
            refutation.facet_count, refutation.achievable_prefix_sets
        ));
    }
    if let Some(note) = &cert.note {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}

fn cmd_verify(suite: Option<&str>, max_n: Option<usize>) -> Result<u8, Failure> {
    let options = SuiteOptions {
        max_n,
        ..SuiteOptions::default()
    };
    let reports = match suite {
        Some(name) => vec![run_suite(name, &options).map_err(Failure::input)?],
        None => run_all(&options).map_err(Failure::input)?,
    };
    let mut all_passed = true;
    for report in &reports {
        print_suite(report);
        all_passed &= report.passed();
    }
    let (suites, rows): (usize, usize) = (reports.len(), reports.iter().map(|r| r.rows.len()).sum());
    println!(
        "{}: {suites} suite(s), {rows} row(s)",
        if all_passed { "PASS" } else { "FAIL" }
    );
    Ok(if all_passed { 0 } else { EXIT_SUITE_FAILURE })
}

fn print_suite(report: &SuiteReport) {
    println!("suite {}", report.suite);
    for row in &report.rows {
        if row.pass {
            println!("  PASS  {}: {}", row.label, row.computed);
        } else {
            println!(
                "  FAIL  {}: expected {}, computed {}",
                row.label, row.expected, row.computed
            );
        }
    }
}
