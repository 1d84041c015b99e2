//! The two identity checks the analyzer runs on every graph: connectivity
//! equivalence (T1) and the Euler-characteristic decomposition (T2). Both
//! require minimum degree one, since a degree-0 vertex lies in no index and
//! the complexes never see it.

use serde::Serialize;
use thiserror::Error;

use crate::complex::{gallai_complex, line_complex};
use crate::graph::SimpleGraph;
use crate::indices::anti_gallai_indices;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("vertex {0} is isolated; identity checks need minimum degree 1")]
    IsolatedVertex(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
}

fn require_min_degree_one(g: &SimpleGraph) -> Result<(), CheckError> {
    if g.vertex_count() == 0 {
        return Err(CheckError::EmptyGraph);
    }
    match g.isolated_vertices().first() {
        Some(&v) => Err(CheckError::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// T1: the graph is connected exactly when its line complex is connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConnectivityEquivalence {
    pub graph_connected: bool,
    pub complex_connected: bool,
}

impl ConnectivityEquivalence {
    pub fn holds(&self) -> bool {
        self.graph_connected == self.complex_connected
    }
}

pub fn connectivity_equivalence(g: &SimpleGraph) -> Result<ConnectivityEquivalence, CheckError> {
    require_min_degree_one(g)?;
    Ok(ConnectivityEquivalence {
        graph_connected: g.is_connected(),
        complex_connected: line_complex(g)
            .is_connected()
            .expect("line complex of a min-degree-1 graph is non-void"),
    })
}

/// T2: chi(line complex) = chi(Gallai complex) + #anti-Gallai indices.
/// The three numbers are computed along independent routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EulerDecomposition {
    pub line_euler: i64,
    pub gallai_euler: i64,
    pub anti_gallai_count: usize,
}

impl EulerDecomposition {
    pub fn holds(&self) -> bool {
        self.line_euler == self.gallai_euler + self.anti_gallai_count as i64
    }
}

pub fn euler_decomposition(g: &SimpleGraph) -> Result<EulerDecomposition, CheckError> {
    require_min_degree_one(g)?;
    let non_void = "complex of a min-degree-1 graph is non-void";
    Ok(EulerDecomposition {
        line_euler: line_complex(g).euler_characteristic().expect(non_void),
        gallai_euler: gallai_complex(g).euler_characteristic().expect(non_void),
        anti_gallai_count: anti_gallai_indices(g).len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{friendship_graph, path_graph, wheel_graph};

    fn triangle_pendant() -> SimpleGraph {
        SimpleGraph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn decomposition_worked_examples() {
        let d = euler_decomposition(&triangle_pendant()).unwrap();
        assert_eq!((d.line_euler, d.gallai_euler, d.anti_gallai_count), (1, 0, 1));
        assert!(d.holds());

        for n in 4..=9 {
            let d = euler_decomposition(&wheel_graph(n).unwrap()).unwrap();
            assert_eq!(d.line_euler, n as i64 + 1);
            assert_eq!(d.gallai_euler, 1);
            assert_eq!(d.anti_gallai_count, n);
            assert!(d.holds());
        }

        for n in 2..=8 {
            let d = euler_decomposition(&friendship_graph(n).unwrap()).unwrap();
            assert_eq!(d.line_euler, 1);
            assert_eq!(d.gallai_euler, 1 - n as i64);
            assert_eq!(d.anti_gallai_count, n);
            assert!(d.holds());
        }
    }

    #[test]
    fn connectivity_worked_examples() {
        let c = connectivity_equivalence(&wheel_graph(5).unwrap()).unwrap();
        assert!(c.graph_connected && c.complex_connected && c.holds());

        let two_triangles =
            SimpleGraph::new(6, &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]).unwrap();
        let c = connectivity_equivalence(&two_triangles).unwrap();
        assert!(!c.graph_connected && !c.complex_connected && c.holds());

        let c = connectivity_equivalence(&path_graph(4).unwrap()).unwrap();
        assert!(c.graph_connected && c.complex_connected && c.holds());
    }

    #[test]
    fn isolated_vertices_are_rejected() {
        let g = SimpleGraph::new(3, &[(1, 2)]).unwrap();
        assert_eq!(
            connectivity_equivalence(&g),
            Err(CheckError::IsolatedVertex(3))
        );
        assert_eq!(euler_decomposition(&g), Err(CheckError::IsolatedVertex(3)));
    }
}
