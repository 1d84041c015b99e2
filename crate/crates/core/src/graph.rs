//! Finite simple graphs on the vertex range `1..=n`, generators for the
//! classic parameterized families, and exhaustive enumeration of small
//! labeled graphs for property sweeps.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dsu::Dsu;
use crate::face::Face;

/// Largest vertex count accepted by [`enumerate_graphs`]; `n = 6` already
/// means 2^15 candidate edge subsets.
pub const MAX_ENUMERATION_VERTICES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0},{0}) is a loop")]
    LoopEdge(usize),
    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} lies outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{family} graph needs a parameter of at least {min}, got {got}")]
    ParameterTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("exhaustive enumeration is capped at {max} vertices, got {got}")]
    TooManyVertices { max: usize, got: usize },
}

/// Unordered pair of distinct vertices, stored smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "(usize, usize)", try_from = "(usize, usize)")]
pub struct Edge {
    a: usize,
    b: usize,
}

impl Edge {
    pub fn new(i: usize, j: usize) -> Result<Self, GraphError> {
        if i == j {
            return Err(GraphError::LoopEdge(i));
        }
        Ok(Edge {
            a: i.min(j),
            b: i.max(j),
        })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    /// The endpoint other than `v`; `v` must be an endpoint.
    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    /// The common endpoint of two distinct edges, if they are incident.
    /// Distinct simple edges share at most one vertex.
    pub fn shared_vertex(&self, other: &Edge) -> Option<usize> {
        if self == other {
            return None;
        }
        if other.contains(self.a) {
            Some(self.a)
        } else if other.contains(self.b) {
            Some(self.b)
        } else {
            None
        }
    }

    pub fn as_face(&self) -> Face {
        Face::from([self.a, self.b])
    }
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        (e.a, e.b)
    }
}

impl TryFrom<(usize, usize)> for Edge {
    type Error = GraphError;

    fn try_from((i, j): (usize, usize)) -> Result<Self, Self::Error> {
        Edge::new(i, j)
    }
}

/// A finite simple graph: a vertex range `1..=n` plus a set of unordered
/// edges between distinct in-range vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GraphJson", try_from = "GraphJson")]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<Edge>,
}

/// Wire shape of a graph: `{"n": 4, "edges": [[1,2],[3,4]]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<SimpleGraph> for GraphJson {
    fn from(g: SimpleGraph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|e| e.endpoints()).collect(),
        }
    }
}

impl TryFrom<GraphJson> for SimpleGraph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Self, Self::Error> {
        SimpleGraph::new(j.n, &j.edges)
    }
}

impl SimpleGraph {
    /// Builds a graph, rejecting loops, out-of-range endpoints and duplicate
    /// edge pairs. Duplicates are an error here so that data bugs in input
    /// files do not go unnoticed; use [`SimpleGraph::new_dedupe`] for lenient
    /// ingestion.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::build(n, pairs, false)
    }

    /// Like [`SimpleGraph::new`], but silently collapses duplicate pairs.
    pub fn new_dedupe(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::build(n, pairs, true)
    }

    fn build(n: usize, pairs: &[(usize, usize)], dedupe: bool) -> Result<Self, GraphError> {
        let mut edges = BTreeSet::new();
        for &(i, j) in pairs {
            let edge = Edge::new(i, j)?;
            for v in [i, j] {
                if v < 1 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if !edges.insert(edge) && !dedupe {
                let (a, b) = edge.endpoints();
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(SimpleGraph { n, edges })
    }

    fn from_edge_set(n: usize, edges: BTreeSet<Edge>) -> Self {
        SimpleGraph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    /// Edges in sorted endpoint-pair order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        match Edge::new(i, j) {
            Ok(e) => self.edges.contains(&e),
            Err(_) => false,
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.degree(v) == 0).collect()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| e.other(v))
            .collect()
    }

    /// All triangles `{i,j,k}` whose three sides are edges, in sorted order.
    pub fn triangles(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for edge in &self.edges {
            let (a, b) = edge.endpoints();
            for c in (b + 1)..=self.n {
                if self.has_edge(a, c) && self.has_edge(b, c) {
                    out.push(Face::from([a, b, c]));
                }
            }
        }
        out
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles().len()
    }

    /// True when every pair of vertices is joined by a path. Isolated
    /// vertices count as their own components; the empty and one-vertex
    /// graphs are connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn component_count(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let mut dsu = Dsu::new(self.n);
        for edge in &self.edges {
            let (a, b) = edge.endpoints();
            dsu.union(a - 1, b - 1);
        }
        dsu.component_count()
    }
}

fn check_param(family: &'static str, min: usize, got: usize) -> Result<(), GraphError> {
    if got < min {
        return Err(GraphError::ParameterTooSmall { family, min, got });
    }
    Ok(())
}

/// Wheel with rim `1..=n` (a cycle) and hub `n+1` joined to every rim
/// vertex; `2n` edges in total.
pub fn wheel_graph(n: usize) -> Result<SimpleGraph, GraphError> {
    check_param("wheel", 3, n)?;
    let hub = n + 1;
    let mut pairs = Vec::with_capacity(2 * n);
    for i in 1..=n {
        pairs.push((i, if i == n { 1 } else { i + 1 }));
        pairs.push((i, hub));
    }
    SimpleGraph::new(hub, &pairs)
}

/// `n` triangles sharing the single hub vertex `2n+1`: base edges
/// `(2k-1, 2k)` plus a spoke from every base vertex to the hub.
pub fn friendship_graph(n: usize) -> Result<SimpleGraph, GraphError> {
    check_param("friendship", 1, n)?;
    let hub = 2 * n + 1;
    let mut pairs = Vec::with_capacity(3 * n);
    for k in 1..=n {
        pairs.push((2 * k - 1, 2 * k));
    }
    for i in 1..=2 * n {
        pairs.push((i, hub));
    }
    SimpleGraph::new(hub, &pairs)
}

/// Triangular prism tower: `n` triangle layers `{3k+1, 3k+2, 3k+3}` with
/// vertical edges between consecutive layers; `3(2n-1)` edges. The layer
/// triangles are the only triangles.
pub fn prism_graph(n: usize) -> Result<SimpleGraph, GraphError> {
    check_param("prism", 1, n)?;
    let mut pairs = Vec::new();
    for k in 0..n {
        let base = 3 * k;
        pairs.push((base + 1, base + 2));
        pairs.push((base + 1, base + 3));
        pairs.push((base + 2, base + 3));
        if k + 1 < n {
            for i in 1..=3 {
                pairs.push((base + i, base + 3 + i));
            }
        }
    }
    SimpleGraph::new(3 * n, &pairs)
}

pub fn cycle_graph(n: usize) -> Result<SimpleGraph, GraphError> {
    check_param("cycle", 3, n)?;
    let pairs: Vec<_> = (1..=n).map(|i| (i, if i == n { 1 } else { i + 1 })).collect();
    SimpleGraph::new(n, &pairs)
}

/// Star with `k` leaves `1..=k` and hub `k+1`.
pub fn star_graph(k: usize) -> Result<SimpleGraph, GraphError> {
    check_param("star", 1, k)?;
    let pairs: Vec<_> = (1..=k).map(|i| (i, k + 1)).collect();
    SimpleGraph::new(k + 1, &pairs)
}

pub fn path_graph(n: usize) -> Result<SimpleGraph, GraphError> {
    check_param("path", 1, n)?;
    let pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    SimpleGraph::new(n, &pairs)
}

pub fn complete_graph(n: usize) -> Result<SimpleGraph, GraphError> {
    check_param("complete", 1, n)?;
    let mut pairs = Vec::new();
    for i in 1..n {
        for j in (i + 1)..=n {
            pairs.push((i, j));
        }
    }
    SimpleGraph::new(n, &pairs)
}

/// All labeled graphs on `n` vertices with minimum degree at least
/// `min_degree`, in increasing edge-subset-bitmask order over the sorted
/// candidate edge list. The order is deterministic, which the corpus
/// sweeps rely on.
pub fn enumerate_graphs(
    n: usize,
    min_degree: usize,
) -> Result<impl Iterator<Item = SimpleGraph>, GraphError> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(GraphError::TooManyVertices {
            max: MAX_ENUMERATION_VERTICES,
            got: n,
        });
    }
    let mut candidates = Vec::new();
    for i in 1..n {
        for j in (i + 1)..=n {
            candidates.push(Edge::new(i, j).expect("distinct endpoints"));
        }
    }
    let m = candidates.len();
    Ok((0u32..(1u32 << m)).filter_map(move |mask| {
        let edges: BTreeSet<Edge> = candidates
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        let g = SimpleGraph::from_edge_set(n, edges);
        g.vertices()
            .all(|v| g.degree(v) >= min_degree)
            .then_some(g)
    }))
}
