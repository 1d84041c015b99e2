//! Line, Gallai and anti-Gallai graphs: graphs whose vertices are the
//! edges of a source graph.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::{Edge, SimpleGraph};

/// A graph on the edge set of some source graph. Vertex `p` of this graph
/// is the edge `labels[p]`; labels are sorted by endpoint pair, so vertex
/// numbering is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(into = "DerivedGraphJson")]
pub struct EdgeVertexGraph {
    labels: Vec<Edge>,
    adjacency: BTreeSet<(usize, usize)>,
}

/// Wire shape: the [`SimpleGraph`] schema with 1-based label indices as
/// vertices, plus the `labels` array of source endpoint pairs.
#[derive(Serialize)]
struct DerivedGraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<(usize, usize)>,
}

impl From<EdgeVertexGraph> for DerivedGraphJson {
    fn from(g: EdgeVertexGraph) -> Self {
        DerivedGraphJson {
            n: g.labels.len(),
            edges: g.adjacency.iter().map(|&(p, q)| (p + 1, q + 1)).collect(),
            labels: g.labels.iter().map(|e| e.endpoints()).collect(),
        }
    }
}

impl EdgeVertexGraph {
    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Edge] {
        &self.labels
    }

    /// Adjacent label-index pairs `(p, q)` with `p < q`, 0-based.
    pub fn adjacency(&self) -> &BTreeSet<(usize, usize)> {
        &self.adjacency
    }

    pub fn is_adjacent(&self, p: usize, q: usize) -> bool {
        let pair = (p.min(q), p.max(q));
        p != q && self.adjacency.contains(&pair)
    }

    pub fn degree(&self, p: usize) -> usize {
        self.adjacency
            .iter()
            .filter(|&&(a, b)| a == p || b == p)
            .count()
    }

    pub fn isolated_labels(&self) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&p| self.degree(p) == 0)
            .collect()
    }
}

fn derive(g: &SimpleGraph, keep: impl Fn(&Edge, &Edge, usize) -> bool) -> EdgeVertexGraph {
    let labels: Vec<Edge> = g.edges().collect();
    let mut adjacency = BTreeSet::new();
    for p in 0..labels.len() {
        for q in (p + 1)..labels.len() {
            if let Some(shared) = labels[p].shared_vertex(&labels[q]) {
                if keep(&labels[p], &labels[q], shared) {
                    adjacency.insert((p, q));
                }
            }
        }
    }
    EdgeVertexGraph { labels, adjacency }
}

/// Line graph: labels adjacent exactly when the edges share an endpoint.
pub fn line_graph(g: &SimpleGraph) -> EdgeVertexGraph {
    derive(g, |_, _, _| true)
}

/// Gallai graph: incident edges `e_{i,j}`, `e_{j,k}` are adjacent exactly
/// when `{i,k}` is not an edge, i.e. the pair does not span a triangle.
pub fn gallai_graph(g: &SimpleGraph) -> EdgeVertexGraph {
    derive(g, |e, f, shared| {
        !g.has_edge(e.other(shared), f.other(shared))
    })
}

/// Anti-Gallai graph: incident edges are adjacent exactly when they span a
/// triangle. Complement of the Gallai graph inside the line graph.
pub fn anti_gallai_graph(g: &SimpleGraph) -> EdgeVertexGraph {
    derive(g, |e, f, shared| {
        g.has_edge(e.other(shared), f.other(shared))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete_graph, cycle_graph, enumerate_graphs, friendship_graph, star_graph, SimpleGraph,
    };

    fn triangle_pendant() -> SimpleGraph {
        SimpleGraph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    fn pairs(g: &EdgeVertexGraph) -> Vec<(usize, usize)> {
        g.adjacency().iter().copied().collect()
    }

    #[test]
    fn line_graph_triangle_pendant() {
        // Labels sort as 0:(1,2), 1:(1,3), 2:(2,3), 3:(3,4).
        let l = line_graph(&triangle_pendant());
        assert_eq!(l.label_count(), 4);
        assert_eq!(pairs(&l), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn line_graph_small_cases() {
        let single = SimpleGraph::new(2, &[(1, 2)]).unwrap();
        let l = line_graph(&single);
        assert_eq!(l.label_count(), 1);
        assert!(l.adjacency().is_empty());
        assert_eq!(l.isolated_labels(), vec![0]);

        // All spokes of a star meet at the hub.
        let l = line_graph(&star_graph(3).unwrap());
        assert_eq!(pairs(&l), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn gallai_graph_cases() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(gallai_graph(&c5), line_graph(&c5));

        let k3 = complete_graph(3).unwrap();
        let g = gallai_graph(&k3);
        assert!(g.adjacency().is_empty());
        assert_eq!(g.isolated_labels(), vec![0, 1, 2]);

        // Base edges of a friendship graph only ever meet spokes of their
        // own triangle, so they are isolated in the Gallai graph. With at
        // least two triangles the spokes stay adjacent across triangles,
        // so nothing else is isolated.
        for n in 2..=4 {
            let fr = friendship_graph(n).unwrap();
            let g = gallai_graph(&fr);
            let base_labels: Vec<usize> = g
                .labels()
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.contains(2 * n + 1))
                .map(|(p, _)| p)
                .collect();
            assert_eq!(g.isolated_labels(), base_labels);
        }
    }

    #[test]
    fn anti_gallai_graph_cases() {
        let k3 = complete_graph(3).unwrap();
        assert_eq!(anti_gallai_graph(&k3), line_graph(&k3));

        assert!(anti_gallai_graph(&cycle_graph(5).unwrap())
            .adjacency()
            .is_empty());

        let a = anti_gallai_graph(&triangle_pendant());
        assert_eq!(pairs(&a), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn serializes_as_graph_schema_plus_labels() {
        let l = line_graph(&triangle_pendant());
        let value = serde_json::to_value(&l).unwrap();
        assert_eq!(value["n"], 4);
        assert_eq!(value["edges"][0], serde_json::json!([1, 2]));
        assert_eq!(value["labels"][3], serde_json::json!([3, 4]));
    }

    /// Gallai and anti-Gallai adjacency partition the line graph adjacency
    /// on every graph with five vertices.
    #[test]
    fn partition_over_small_corpus() {
        for g in enumerate_graphs(5, 0).unwrap() {
            let l = line_graph(&g);
            let gal = gallai_graph(&g);
            let anti = anti_gallai_graph(&g);
            assert_eq!(l.label_count(), g.edge_count());
            assert!(gal.adjacency().is_disjoint(anti.adjacency()));
            let union: BTreeSet<_> = gal.adjacency().union(anti.adjacency()).copied().collect();
            assert_eq!(&union, l.adjacency());
        }
    }
}
