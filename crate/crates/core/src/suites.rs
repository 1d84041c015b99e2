//! Named verification suites: each one sweeps a family or an exhaustive
//! small-graph corpus and compares computed invariants against their
//! closed forms, golden listings or independent oracles. The corpus
//! sweeps fan out across graphs; aggregation order is fixed by input
//! order regardless of scheduling.

use serde::Serialize;
use thiserror::Error;

use crate::checks::{connectivity_equivalence, euler_decomposition};
use crate::complex::{
    anti_gallai_complex, gallai_complex, line_complex, ComplexError, SimplicialComplex,
};
use crate::face::Face;
use crate::graph::{
    cycle_graph, enumerate_graphs, friendship_graph, path_graph, prism_graph, star_graph,
    wheel_graph, GraphError, SimpleGraph,
};
use crate::indices::anti_gallai_indices;
use crate::shelling::{
    find_shelling_order, ordering_positions, verify_ordering, Method, SearchOptions,
    ShellingError, Verdict,
};
use crate::sweep;

pub const SUITE_NAMES: [&str; 11] = [
    "wheel-euler",
    "wheel-decomposition",
    "friendship-euler",
    "triangle-pendant",
    "t2-exhaustive",
    "t1-exhaustive",
    "shelling-families",
    "oracle-equivalence",
    "triangle-free",
    "excision",
    "f-vector-oracle",
];

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Shelling(#[from] ShellingError),
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    /// Upper bound on the family parameter or corpus vertex count; each
    /// suite has its own default.
    pub max_n: Option<usize>,
    pub parallel: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: None,
            parallel: cfg!(feature = "parallel"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteRow {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl SuiteRow {
    fn compare<T: PartialEq + std::fmt::Debug>(label: impl Into<String>, expected: T, computed: T) -> Self {
        SuiteRow {
            label: label.into(),
            expected: format!("{expected:?}"),
            computed: format!("{computed:?}"),
            pass: expected == computed,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

pub fn run_suite(name: &str, options: &SuiteOptions) -> Result<SuiteReport, SuiteError> {
    let rows = match name {
        "wheel-euler" => wheel_euler(options),
        "wheel-decomposition" => wheel_decomposition(options),
        "friendship-euler" => friendship_euler(options),
        "triangle-pendant" => triangle_pendant_golden(),
        "t2-exhaustive" => t2_exhaustive(options),
        "t1-exhaustive" => t1_exhaustive(options),
        "shelling-families" => shelling_families(options),
        "oracle-equivalence" => oracle_equivalence(options),
        "triangle-free" => triangle_free(options),
        "excision" => excision(options),
        "f-vector-oracle" => f_vector_oracle(options),
        other => return Err(SuiteError::UnknownSuite(other.to_string())),
    }?;
    Ok(SuiteReport {
        suite: name.to_string(),
        rows,
    })
}

pub fn run_all(options: &SuiteOptions) -> Result<Vec<SuiteReport>, SuiteError> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, options))
        .collect()
}

/// The four-vertex triangle-plus-pendant graph used as the golden worked
/// example throughout the test suites.
pub fn triangle_pendant_graph() -> SimpleGraph {
    SimpleGraph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).expect("valid fixture")
}

fn wheel_euler(options: &SuiteOptions) -> Result<Vec<SuiteRow>, SuiteError> {
    let max = options.max_n.unwrap_or(12);
    let mut rows = Vec::new();
    for n in 4..=max {
        let fv = line_complex(&wheel_graph(n)?).f_vector()?;
        let pairs = n * (n + 1) / 2;
        rows.push(SuiteRow::compare(
            format!("line(wheel-{n}): (chi, alpha1, alpha2)"),
            (n as i64 + 1, pairs, pairs),
            (fv.euler(), fv.alpha(1), fv.alpha(2)),
        ));
    }
    Ok(rows)
}

fn wheel_decomposition(options: &SuiteOptions) -> Result<Vec<SuiteRow>, SuiteError> {
    let max = options.max_n.unwrap_or(12);
    let mut rows = Vec::new();
    for n in 4..=max {
        let w = wheel_graph(n)?;
        rows.push(SuiteRow::compare(
            format!("wheel-{n}: (gallai chi, anti-gallai count)"),
            (1i64, n),
            (
                gallai_complex(&w).euler_characteristic()?,
                anti_gallai_indices(&w).len(),
            ),
        ));
    }
    Ok(rows)
}

fn friendship_euler(options: &SuiteOptions) -> Result<Vec<SuiteRow>, SuiteError> {
    let max = options.max_n.unwrap_or(10);
    let mut rows = Vec::new();
    for n in 2..=max {
        let f = friendship_graph(n)?;
        let gallai_fv = gallai_complex(&f).f_vector()?;
        rows.push(SuiteRow::compare(
            format!("friendship-{n}: (gallai chi, line chi, anti-gallai count, gallai alpha2)"),
            (1 - n as i64, 1i64, n, 2 * n * (n - 1)),
            (
                gallai_fv.euler(),
                line_complex(&f).euler_characteristic()?,
                anti_gallai_indices(&f).len(),
                gallai_fv.alpha(2),
            ),
        ));
    }
    Ok(rows)
}

fn triangle_pendant_golden() -> Result<Vec<SuiteRow>, SuiteError> {
    let g = triangle_pendant_graph();
    let line = line_complex(&g);
    let gallai = gallai_complex(&g);
    let facets = |c: &SimplicialComplex| -> Vec<Face> { c.facets().to_vec() };
    Ok(vec![
        SuiteRow::compare(
            "line facets",
            vec![
                Face::from([1, 2, 3]),
                Face::from([1, 3, 4]),
                Face::from([2, 3, 4]),
            ],
            facets(&line),
        ),
        SuiteRow::compare("line chi", 1, line.euler_characteristic()?),
        SuiteRow::compare(
            "gallai facets",
            vec![
                Face::from([1, 2]),
                Face::from([1, 3, 4]),
                Face::from([2, 3, 4]),
            ],
            facets(&gallai),
        ),
        SuiteRow::compare("gallai chi", 0, gallai.euler_characteristic()?),
        SuiteRow::compare("anti-gallai count", 1, anti_gallai_indices(&g).len()),
    ])
}

fn corpus_aggregate<F>(
    options: &SuiteOptions,
    default_max: usize,
    what: &str,
    check: F,
) -> Result<Vec<SuiteRow>, SuiteError>
where
    F: Fn(&SimpleGraph) -> bool + Sync,
{
    let max = options.max_n.unwrap_or(default_max);
    let mut rows = Vec::new();
    for n in 1..=max {
        let graphs: Vec<SimpleGraph> = enumerate_graphs(n, 1)?.collect();
        let verdicts = sweep::map_slice(&graphs, options.parallel, &check);
        let holds = verdicts.iter().filter(|&&ok| ok).count();
        rows.push(SuiteRow::compare(
            format!("{what} on the {} min-degree-1 graphs with n={n}", graphs.len()),
            graphs.len(),
            holds,
        ));
    }
    Ok(rows)
}

fn t2_exhaustive(options: &SuiteOptions) -> Result<Vec<SuiteRow>, SuiteError> {
    corpus_aggregate(options, 5, "euler decomposition", |g| {
        euler_decomposition(g).map(|d| d.holds()).unwrap_or(false)
    })
}

fn t1_exhaustive(options: &SuiteOptions) -> Result<Vec<SuiteRow>, SuiteError> {
    corpus_aggregate(options, 5, "connectivity equivalence", |g| {
        connectivity_equivalence(g)
            .map(|c| c.holds())
            .unwrap_or(false)
    })
}

/// The three explicit shelling listings used by the family suites.
pub fn friendship_line_listing(n: usize) -> Vec<Face> {
    let hub = 2 * n + 1;
    let mut listing = Vec::new();
    for i in 1..=2 * n {
        for j in (i + 1)..=2 * n {
            listing.push(Face::from([i, j, hub]));
        }
    }
    listing
}

/// Spoke-pair facets in lexicographic order, then the rim triples ending
/// with the two wrap-around ones. Valid for rim size at least 4.
pub fn wheel_line_listing(n: usize) -> Vec<Face> {
    let hub = n + 1;
    let mut listing = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            listing.push(Face::from([i, j, hub]));
        }
    }
    for j in 1..=n.saturating_sub(2) {
        listing.push(Face::from([j, j + 1, j + 2]));
    }
    listing.push(Face::from([n - 1, n, 1]));
    listing.push(Face::from([n, 1, 2]));
    listing
}

/// Rim order around the hub; valid for rim size at least 4 (at rim size 3
/// the wheel is complete and has an extra hubless triangle).
pub fn wheel_anti_gallai_listing(n: usize) -> Vec<Face> {
    let hub = n + 1;
    (1..=n)
        .map(|i| Face::from([i, if i == n { 1 } else { i + 1 }, hub]))
        .collect()
}

fn verdict_row(
    label: String,
    expected: Verdict,
    complex: &SimplicialComplex,
    options: &SuiteOptions,
) -> Result<SuiteRow, SuiteError> {
    let search = SearchOptions {
        parallel: options.parallel,
        ..SearchOptions::default()
    };
    let cert = find_shelling_order(complex, Method::Both, &search)?;
    Ok(SuiteRow::compare(label, expected, cert.verdict))
}

fn listing_row(
    label: String,
    complex: &SimplicialComplex,
    listing: &[Face],
) -> Result<SuiteRow, SuiteError> {
    let Some(order) = ordering_positions(complex, listing) else {
        return Ok(SuiteRow {
            label,
            expected: "listing matches facet set".into(),
            computed: "listing is not a permutation of the facets".into(),
            pass: false,
        });
    };
    let cert = verify_ordering(complex, &order, Method::Both)?;
    Ok(SuiteRow::compare(label, Verdict::Shellable, cert.verdict))
}

fn shelling_families(options: &SuiteOptions) -> Result<Vec<SuiteRow>, SuiteError> {
    let mut rows = Vec::new();
    for n in 2..=5 {
        let complex = line_complex(&friendship_graph(n)?);
        rows.push(verdict_row(
            format!("line(friendship-{n}) search"),
            Verdict::Shellable,
            &complex,
            options,
        )?);
    }
    for n in 2..=8 {
        let complex = line_complex(&friendship_graph(n)?);
        rows.push(listing_row(
            format!("line(friendship-{n}) hub-lex listing"),
            &complex,
            &friendship_line_listing(n),
        )?);
    }
    for n in 4..=8 {
        let complex = line_complex(&wheel_graph(n)?);
        rows.push(listing_row(
            format!("line(wheel-{n}) spokes-then-rim listing"),
            &complex,
            &wheel_line_listing(n),
        )?);
    }
    for n in 4..=5 {
        let complex = line_complex(&wheel_graph(n)?);
        rows.push(verdict_row(
            format!("line(wheel-{n}) search"),
            Verdict::Shellable,
            &complex,
            options,
        )?);
    }
    for n in 3..=12 {
        let complex = anti_gallai_complex(&wheel_graph(n)?);
        rows.push(verdict_row(
            format!("anti-gallai(wheel-{n}) search"),
            Verdict::Shellable,
            &complex,
            options,
        )?);
    }
    rows.push(verdict_row(
        "line(cycle-5) search".to_string(),
        Verdict::NotShellable,
        &line_complex(&cycle_graph(5)?),
        options,
    )?);
    for n in 2..=8 {
        rows.push(verdict_row(
            format!("anti-gallai(prism-{n}) search"),
            Verdict::NotShellable,
            &anti_gallai_complex(&prism_graph(n)?),
            options,
        )?);
        rows.push(verdict_row(
            format!("anti-gallai(friendship-{n}) search"),
            Verdict::NotShellable,
            &anti_gallai_complex(&friendship_graph(n)?),
            options,
        )?);
    }
    Ok(rows)
}

/// Criterion-7 family instances small enough for the two-method
/// cross-check.
fn oracle_instances() -> Result<Vec<(String, SimplicialComplex)>, SuiteError> {
    let mut instances = Vec::new();
    for n in 2..=8 {
        instances.push((
            format!("line(friendship-{n})"),
            line_complex(&friendship_graph(n)?),
        ));
        instances.push((
            format!("anti-gallai(prism-{n})"),
            anti_gallai_complex(&prism_graph(n)?),
        ));
        instances.push((
            format!("anti-gallai(friendship-{n})"),
            anti_gallai_complex(&friendship_graph(n)?),
        ));
    }
    for n in 4..=8 {
        instances.push((format!("line(wheel-{n})"), line_complex(&wheel_graph(n)?)));
    }
    for n in 3..=12 {
        instances.push((
            format!("anti-gallai(wheel-{n})"),
            anti_gallai_complex(&wheel_graph(n)?),
        ));
    }
    instances.push(("line(cycle-5)".to_string(), line_complex(&cycle_graph(5)?)));
    instances.retain(|(_, c)| c.facet_count() <= 15);
    Ok(instances)
}

/// Verdict agreement between the two criteria, plus per-step agreement on
/// every (prefix, facet) pair the search evaluates. A step disagreement
/// surfaces as a `CriteriaMismatch` error and fails the row loudly.
fn agreement(complex: &SimplicialComplex, options: &SuiteOptions) -> Result<(), String> {
    let search = SearchOptions {
        parallel: options.parallel,
        ..SearchOptions::default()
    };
    let by_definition = find_shelling_order(complex, Method::Definition, &search)
        .map_err(|e| e.to_string())?
        .verdict;
    let by_residuals = find_shelling_order(complex, Method::Residuals, &search)
        .map_err(|e| e.to_string())?
        .verdict;
    if by_definition != by_residuals {
        return Err(format!(
            "verdicts disagree: definition {by_definition:?}, residuals {by_residuals:?}"
        ));
    }
    // Both-mode re-runs the same search checking the predicates pairwise.
    find_shelling_order(complex, Method::Both, &search).map_err(|e| e.to_string())?;
    Ok(())
}

fn oracle_equivalence(options: &SuiteOptions) -> Result<Vec<SuiteRow>, SuiteError> {
    let max = options.max_n.unwrap_or(5);
    let mut rows = Vec::new();
    for n in 1..=max {
        let graphs: Vec<SimpleGraph> = enumerate_graphs(n, 1)?.collect();
        let results = sweep::map_slice(&graphs, options.parallel, |g| {
            for complex in [line_complex(g), gallai_complex(g), anti_gallai_complex(g)] {
                agreement(&complex, options)?;
            }
            Ok::<(), String>(())
        });
        let first_error = results.iter().flat_map(|r| r.as_ref().err()).next();
        rows.push(SuiteRow {
            label: format!(
                "criteria agree on all complexes of the {} min-degree-1 graphs with n={n}",
                graphs.len()
            ),
            expected: "agreement".into(),
            computed: first_error.cloned().unwrap_or_else(|| "agreement".into()),
            pass: first_error.is_none(),
        });
    }
    for (label, complex) in oracle_instances()? {
        let outcome = agreement(&complex, options);
        rows.push(SuiteRow {
            label: format!("{label} ({} facets)", complex.facet_count()),
            expected: "agreement".into(),
            pass: outcome.is_ok(),
            computed: outcome.err().unwrap_or_else(|| "agreement".into()),
        });
    }
    Ok(rows)
}

fn triangle_free(options: &SuiteOptions) -> Result<Vec<SuiteRow>, SuiteError> {
    let max = options.max_n.unwrap_or(6);
    let mut rows = Vec::new();
    let coincide = |g: &SimpleGraph| {
        anti_gallai_indices(g).is_empty() && line_complex(g) == gallai_complex(g)
    };
    for n in 1..=max {
        let graphs: Vec<SimpleGraph> = enumerate_graphs(n, 0)?
            .filter(|g| g.triangles().is_empty())
            .collect();
        let verdicts = sweep::map_slice(&graphs, options.parallel, coincide);
        let holds = verdicts.iter().filter(|&&ok| ok).count();
        rows.push(SuiteRow::compare(
            format!(
                "line and gallai complexes coincide on the {} triangle-free graphs with n={n}",
                graphs.len()
            ),
            graphs.len(),
            holds,
        ));
    }
    let mut instances: Vec<(String, SimpleGraph)> = Vec::new();
    for n in 4..=10 {
        instances.push((format!("cycle-{n}"), cycle_graph(n)?));
    }
    for n in 1..=10 {
        instances.push((format!("path-{n}"), path_graph(n)?));
        instances.push((format!("star-{n}"), star_graph(n)?));
    }
    for (label, g) in instances {
        rows.push(SuiteRow::compare(format!("{label} coincidence"), true, coincide(&g)));
    }
    for n in 2..=8 {
        rows.push(SuiteRow::compare(
            format!("line(friendship-{n}) = line(star-{})", 2 * n),
            line_complex(&friendship_graph(n)?),
            line_complex(&star_graph(2 * n)?),
        ));
    }
    Ok(rows)
}

fn excision(options: &SuiteOptions) -> Result<Vec<SuiteRow>, SuiteError> {
    let max = options.max_n.unwrap_or(5);
    let mut rows = Vec::new();
    for n in 1..=max {
        let graphs: Vec<SimpleGraph> = enumerate_graphs(n, 1)?.collect();
        let verdicts = sweep::map_slice(&graphs, options.parallel, |g| {
            let additive = [line_complex(g), gallai_complex(g), anti_gallai_complex(g)]
                .iter()
                .filter(|c| !c.is_void())
                .all(|c| {
                    let total: i64 = c
                        .connected_components()
                        .expect("non-void")
                        .iter()
                        .map(|part| part.euler_characteristic().expect("non-void"))
                        .sum();
                    c.euler_characteristic().expect("non-void") == total
                });
            let components_match = line_complex(g)
                .connected_components()
                .expect("min-degree-1 line complex is non-void")
                .len()
                == g.component_count();
            additive && components_match
        });
        let holds = verdicts.iter().filter(|&&ok| ok).count();
        rows.push(SuiteRow::compare(
            format!(
                "euler additivity and component counts on the {} graphs with n={n}",
                graphs.len()
            ),
            graphs.len(),
            holds,
        ));
    }
    Ok(rows)
}

/// Independent f-vector oracle: enumerate every subset of the vertex set
/// and test containment against the facet list directly.
pub fn f_vector_by_enumeration(complex: &SimplicialComplex) -> Vec<usize> {
    let vertices = complex.vertices();
    let mut counts: Vec<usize> = Vec::new();
    for mask in 1u64..(1u64 << vertices.len()) {
        let subset: Vec<usize> = vertices
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let face = Face::new(subset);
        if complex.facets().iter().any(|f| face.is_subset_of(f)) {
            if counts.len() < face.len() {
                counts.resize(face.len(), 0);
            }
            counts[face.len() - 1] += 1;
        }
    }
    counts
}

fn f_vector_matches_oracle(complex: &SimplicialComplex) -> bool {
    match complex.f_vector() {
        Ok(fv) => fv.counts() == f_vector_by_enumeration(complex).as_slice(),
        Err(_) => complex.is_void(),
    }
}

fn f_vector_oracle(options: &SuiteOptions) -> Result<Vec<SuiteRow>, SuiteError> {
    let max = options.max_n.unwrap_or(5);
    let mut rows = Vec::new();
    for n in 1..=max {
        let graphs: Vec<SimpleGraph> = enumerate_graphs(n, 1)?.collect();
        let verdicts = sweep::map_slice(&graphs, options.parallel, |g| {
            [line_complex(g), gallai_complex(g), anti_gallai_complex(g)]
                .iter()
                .all(f_vector_matches_oracle)
        });
        let holds = verdicts.iter().filter(|&&ok| ok).count();
        rows.push(SuiteRow::compare(
            format!(
                "f-vector matches subset enumeration on the {} graphs with n={n}",
                graphs.len()
            ),
            graphs.len(),
            holds,
        ));
    }
    let mut family: Vec<(String, SimpleGraph)> = Vec::new();
    for n in 4..=8 {
        family.push((format!("wheel-{n}"), wheel_graph(n)?));
    }
    for n in 2..=5 {
        family.push((format!("friendship-{n}"), friendship_graph(n)?));
        family.push((format!("prism-{n}"), prism_graph(n)?));
    }
    for (label, g) in family {
        let ok = [line_complex(&g), gallai_complex(&g), anti_gallai_complex(&g)]
            .iter()
            .filter(|c| c.vertex_count() <= 16)
            .all(f_vector_matches_oracle);
        rows.push(SuiteRow::compare(format!("{label} f-vectors"), true, ok));
    }
    Ok(rows)
}
