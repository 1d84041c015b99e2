//! Self-contained analysis reports: graph summary, per-complex invariant
//! blocks and the two identity verdicts. Every number in a report can be
//! recomputed from the embedded edge list alone, and serialization is
//! deterministic.

use serde::Serialize;

use crate::checks::{connectivity_equivalence, euler_decomposition};
use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::graph::SimpleGraph;
use crate::indices::{indices_of_kind, IndexKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
    pub triangle_count: usize,
    pub connected: bool,
    /// Degree-0 vertices; they appear in no index, so the complexes below
    /// never see them.
    pub isolated_vertices: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexReport {
    pub kind: IndexKind,
    pub void: bool,
    pub vertices: Vec<usize>,
    /// Vertices of the graph missing from the complex.
    pub dropped_vertices: Vec<usize>,
    pub facets: Vec<Face>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_vector: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler_characteristic: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pure: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component_count: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConnectivityVerdict {
    pub status: VerdictStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph_connected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complex_connected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionVerdict {
    pub status: VerdictStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line_euler: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gallai_euler: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anti_gallai_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremVerdicts {
    pub t1: ConnectivityVerdict,
    pub t2: DecompositionVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub complexes: Vec<ComplexReport>,
    pub theorems: TheoremVerdicts,
}

impl AnalysisReport {
    pub fn any_failure(&self) -> bool {
        self.theorems.t1.status == VerdictStatus::Fail
            || self.theorems.t2.status == VerdictStatus::Fail
    }
}

fn complex_report(g: &SimpleGraph, kind: IndexKind) -> ComplexReport {
    let complex = SimplicialComplex::from_generators(indices_of_kind(g, kind))
        .expect("index members are non-empty");
    let dropped = g
        .vertices()
        .filter(|v| !complex.vertices().contains(v))
        .collect();
    if complex.is_void() {
        return ComplexReport {
            kind,
            void: true,
            vertices: Vec::new(),
            dropped_vertices: dropped,
            facets: Vec::new(),
            f_vector: None,
            euler_characteristic: None,
            dimension: None,
            pure: None,
            connected: None,
            component_count: None,
        };
    }
    let fv = complex.f_vector().expect("non-void");
    ComplexReport {
        kind,
        void: false,
        vertices: complex.vertices().to_vec(),
        dropped_vertices: dropped,
        euler_characteristic: Some(fv.euler()),
        f_vector: Some(fv.counts().to_vec()),
        dimension: Some(complex.dimension().expect("non-void")),
        pure: Some(complex.is_pure().expect("non-void")),
        connected: Some(complex.is_connected().expect("non-void")),
        component_count: Some(complex.connected_components().expect("non-void").len()),
        facets: complex.facets().to_vec(),
    }
}

/// Builds the full report. Identity verdicts are skipped (with the reason
/// recorded) when the graph has isolated vertices; a failed verdict never
/// aborts the analysis, so the tool can double as a counterexample hunter.
pub fn analyze(g: &SimpleGraph, kinds: &[IndexKind]) -> AnalysisReport {
    let graph = GraphSummary {
        n: g.vertex_count(),
        m: g.edge_count(),
        edges: g.edges().map(|e| e.endpoints()).collect(),
        triangle_count: g.triangle_count(),
        connected: g.is_connected(),
        isolated_vertices: g.isolated_vertices(),
    };

    let t1 = match connectivity_equivalence(g) {
        Ok(check) => ConnectivityVerdict {
            status: if check.holds() {
                VerdictStatus::Pass
            } else {
                VerdictStatus::Fail
            },
            graph_connected: Some(check.graph_connected),
            complex_connected: Some(check.complex_connected),
            reason: None,
        },
        Err(e) => ConnectivityVerdict {
            status: VerdictStatus::Skipped,
            graph_connected: None,
            complex_connected: None,
            reason: Some(e.to_string()),
        },
    };
    let t2 = match euler_decomposition(g) {
        Ok(check) => DecompositionVerdict {
            status: if check.holds() {
                VerdictStatus::Pass
            } else {
                VerdictStatus::Fail
            },
            line_euler: Some(check.line_euler),
            gallai_euler: Some(check.gallai_euler),
            anti_gallai_count: Some(check.anti_gallai_count),
            reason: None,
        },
        Err(e) => DecompositionVerdict {
            status: VerdictStatus::Skipped,
            line_euler: None,
            gallai_euler: None,
            anti_gallai_count: None,
            reason: Some(e.to_string()),
        },
    };

    AnalysisReport {
        graph,
        complexes: kinds.iter().map(|&kind| complex_report(g, kind)).collect(),
        theorems: TheoremVerdicts { t1, t2 },
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn status_word(status: VerdictStatus) -> &'static str {
    match status {
        VerdictStatus::Pass => "PASS",
        VerdictStatus::Fail => "FAIL",
        VerdictStatus::Skipped => "SKIPPED",
    }
}

/// Human-readable rendering with the same numbers as the JSON form.
pub fn render_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let g = &report.graph;
    out.push_str(&format!(
        "graph: n={} m={} triangles={} connected={}\n",
        g.n,
        g.m,
        g.triangle_count,
        yes_no(g.connected)
    ));
    if !g.isolated_vertices.is_empty() {
        out.push_str(&format!(
            "  isolated vertices: {}\n",
            join(&g.isolated_vertices)
        ));
    }
    for c in &report.complexes {
        if c.void {
            out.push_str(&format!("complex {}: void (no indices)\n", c.kind));
            continue;
        }
        out.push_str(&format!(
            "complex {}: facets [{}]\n",
            c.kind,
            join(&c.facets)
        ));
        if !c.dropped_vertices.is_empty() {
            out.push_str(&format!(
                "  dropped vertices: {}\n",
                join(&c.dropped_vertices)
            ));
        }
        out.push_str(&format!(
            "  f-vector ({})  chi {}  dim {}  pure {}  connected {}  components {}\n",
            join(c.f_vector.clone().unwrap_or_default()),
            c.euler_characteristic.unwrap_or_default(),
            c.dimension.unwrap_or_default(),
            yes_no(c.pure.unwrap_or_default()),
            yes_no(c.connected.unwrap_or_default()),
            c.component_count.unwrap_or_default(),
        ));
    }
    let t1 = &report.theorems.t1;
    match t1.status {
        VerdictStatus::Skipped => out.push_str(&format!(
            "t1 connectivity: SKIPPED ({})\n",
            t1.reason.as_deref().unwrap_or("")
        )),
        status => out.push_str(&format!(
            "t1 connectivity: {} (graph {}, line complex {})\n",
            status_word(status),
            yes_no(t1.graph_connected.unwrap_or_default()),
            yes_no(t1.complex_connected.unwrap_or_default()),
        )),
    }
    let t2 = &report.theorems.t2;
    match t2.status {
        VerdictStatus::Skipped => out.push_str(&format!(
            "t2 euler decomposition: SKIPPED ({})\n",
            t2.reason.as_deref().unwrap_or("")
        )),
        status => out.push_str(&format!(
            "t2 euler decomposition: {} ({} = {} + {})\n",
            status_word(status),
            t2.line_euler.unwrap_or_default(),
            t2.gallai_euler.unwrap_or_default(),
            t2.anti_gallai_count.unwrap_or_default(),
        )),
    }
    out
}

pub const ALL_KINDS: [IndexKind; 3] = [IndexKind::Line, IndexKind::Gallai, IndexKind::AntiGallai];

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_pendant() -> SimpleGraph {
        SimpleGraph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn report_worked_example() {
        let report = analyze(&triangle_pendant(), &ALL_KINDS);
        assert_eq!(report.theorems.t2.status, VerdictStatus::Pass);
        assert_eq!(report.theorems.t2.line_euler, Some(1));
        assert_eq!(report.theorems.t2.gallai_euler, Some(0));
        assert_eq!(report.theorems.t2.anti_gallai_count, Some(1));
        assert!(!report.any_failure());
        assert_eq!(report.complexes.len(), 3);
        assert_eq!(report.complexes[0].f_vector.as_deref(), Some(&[4, 6, 3][..]));
    }

    #[test]
    fn skipped_verdicts_on_isolated_vertex() {
        let g = SimpleGraph::new(3, &[(1, 2)]).unwrap();
        let report = analyze(&g, &[IndexKind::Line]);
        assert_eq!(report.theorems.t1.status, VerdictStatus::Skipped);
        assert_eq!(report.theorems.t2.status, VerdictStatus::Skipped);
        assert!(!report.any_failure());
        assert_eq!(report.complexes[0].dropped_vertices, vec![3]);
    }

    #[test]
    fn failed_verdicts_are_flagged() {
        let mut report = analyze(&triangle_pendant(), &ALL_KINDS);
        assert!(!report.any_failure());
        report.theorems.t2.status = VerdictStatus::Fail;
        assert!(report.any_failure());
    }

    #[test]
    fn serialization_is_deterministic() {
        let report = analyze(&triangle_pendant(), &ALL_KINDS);
        let a = serde_json::to_string_pretty(&report).unwrap();
        let b = serde_json::to_string_pretty(&analyze(&triangle_pendant(), &ALL_KINDS)).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"t2\""));
    }

    #[test]
    fn text_mode_reports_the_same_numbers() {
        let report = analyze(&triangle_pendant(), &ALL_KINDS);
        let text = render_text(&report);
        assert!(text.contains("chi 1"));
        assert!(text.contains("chi 0"));
        assert!(text.contains("(1 = 0 + 1)"));
        assert!(text.contains("F_{1,2,3}"));
    }
}
