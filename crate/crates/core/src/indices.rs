//! Line, Gallai and anti-Gallai index families: the vertex subsets that
//! generate the three simplicial complexes of a graph.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::derived::{anti_gallai_graph, gallai_graph, line_graph, EdgeVertexGraph};
use crate::face::Face;
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexKind {
    Line,
    Gallai,
    AntiGallai,
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexKind::Line => write!(f, "line"),
            IndexKind::Gallai => write!(f, "gallai"),
            IndexKind::AntiGallai => write!(f, "anti-gallai"),
        }
    }
}

/// A set of 2- or 3-element vertex subsets extracted from a graph. Each
/// triangle contributes one index regardless of how many incident edge
/// pairs witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexFamily {
    kind: IndexKind,
    members: BTreeSet<Face>,
}

/// Serializes as a plain JSON array of sorted integer arrays.
impl Serialize for IndexFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.members.iter())
    }
}

impl IndexFamily {
    pub fn kind(&self) -> IndexKind {
        self.kind
    }

    pub fn members(&self) -> &BTreeSet<Face> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.members.contains(face)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Face> {
        self.members.iter()
    }
}

impl IntoIterator for IndexFamily {
    type Item = Face;
    type IntoIter = std::collections::btree_set::IntoIter<Face>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.into_iter()
    }
}

fn family_from(derived: &EdgeVertexGraph, kind: IndexKind, with_isolated: bool) -> IndexFamily {
    let mut members = BTreeSet::new();
    for &(p, q) in derived.adjacency() {
        members.insert(
            derived.labels()[p]
                .as_face()
                .union(&derived.labels()[q].as_face()),
        );
    }
    if with_isolated {
        for p in derived.isolated_labels() {
            members.insert(derived.labels()[p].as_face());
        }
    }
    IndexFamily { kind, members }
}

/// Every adjacent label pair of the line graph yields the 3-set of covered
/// vertices; every isolated label yields its own 2-set.
pub fn line_indices(g: &SimpleGraph) -> IndexFamily {
    family_from(&line_graph(g), IndexKind::Line, true)
}

/// Same extraction applied to the Gallai graph: 3-sets from Gallai-adjacent
/// pairs, 2-sets from edges isolated in the Gallai graph (not merely in the
/// line graph).
pub fn gallai_indices(g: &SimpleGraph) -> IndexFamily {
    family_from(&gallai_graph(g), IndexKind::Gallai, true)
}

/// Anti-Gallai indices are exactly the triangles of the graph; labels
/// isolated in the anti-Gallai graph contribute nothing, so 2-sets never
/// occur here and a triangle-free graph has an empty family.
pub fn anti_gallai_indices(g: &SimpleGraph) -> IndexFamily {
    family_from(&anti_gallai_graph(g), IndexKind::AntiGallai, false)
}

pub fn indices_of_kind(g: &SimpleGraph, kind: IndexKind) -> IndexFamily {
    match kind {
        IndexKind::Line => line_indices(g),
        IndexKind::Gallai => gallai_indices(g),
        IndexKind::AntiGallai => anti_gallai_indices(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete_graph, cycle_graph, enumerate_graphs, friendship_graph, prism_graph, wheel_graph,
        SimpleGraph,
    };

    fn triangle_pendant() -> SimpleGraph {
        SimpleGraph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    fn family(members: &[&[usize]]) -> BTreeSet<Face> {
        members.iter().map(|m| Face::new(m.to_vec())).collect()
    }

    #[test]
    fn triangle_pendant_families() {
        let g = triangle_pendant();
        assert_eq!(
            line_indices(&g).members(),
            &family(&[&[1, 2, 3], &[1, 3, 4], &[2, 3, 4]])
        );
        assert_eq!(
            gallai_indices(&g).members(),
            &family(&[&[1, 2], &[1, 3, 4], &[2, 3, 4]])
        );
        assert_eq!(anti_gallai_indices(&g).members(), &family(&[&[1, 2, 3]]));
    }

    /// Brute force over all graphs on four vertices: the line-index family
    /// {123, 134, 234} alone has four preimages (the star centered at 3
    /// among them), but adding the anti-Gallai family {123} pins down the
    /// triangle-plus-pendant graph uniquely.
    #[test]
    fn triangle_pendant_is_unique_preimage() {
        let target_line = family(&[&[1, 2, 3], &[1, 3, 4], &[2, 3, 4]]);
        let target_anti = family(&[&[1, 2, 3]]);
        let line_matches: Vec<SimpleGraph> = enumerate_graphs(4, 0)
            .unwrap()
            .filter(|g| line_indices(g).members() == &target_line)
            .collect();
        assert_eq!(line_matches.len(), 4);
        assert!(line_matches.contains(&triangle_pendant()));

        let full_matches: Vec<SimpleGraph> = line_matches
            .into_iter()
            .filter(|g| anti_gallai_indices(g).members() == &target_anti)
            .collect();
        assert_eq!(full_matches, vec![triangle_pendant()]);
    }

    #[test]
    fn wheel_families() {
        for n in 4..=7 {
            let w = wheel_graph(n).unwrap();
            let hub = n + 1;

            let mut expected_line = BTreeSet::new();
            for j in 1..=n {
                let a = j;
                let b = if j == n { 1 } else { j + 1 };
                let c = if b == n { 1 } else { (b % n) + 1 };
                expected_line.insert(Face::from([a, b, c]));
            }
            for i in 1..=n {
                for j in (i + 1)..=n {
                    expected_line.insert(Face::from([i, j, hub]));
                }
            }
            assert_eq!(line_indices(&w).members(), &expected_line);

            let expected_anti: BTreeSet<Face> = (1..=n)
                .map(|i| Face::from([i, if i == n { 1 } else { i + 1 }, hub]))
                .collect();
            assert_eq!(anti_gallai_indices(&w).members(), &expected_anti);
            assert_eq!(anti_gallai_indices(&w).len(), n);
        }
    }

    #[test]
    fn friendship_families() {
        for n in 2..=5 {
            let fr = friendship_graph(n).unwrap();
            let hub = 2 * n + 1;

            let mut expected_gallai = BTreeSet::new();
            for k in 1..=n {
                expected_gallai.insert(Face::from([2 * k - 1, 2 * k]));
            }
            for i in 1..=2 * n {
                for j in (i + 1)..=2 * n {
                    // Spokes from distinct triangles only.
                    if !(j == i + 1 && i % 2 == 1) {
                        expected_gallai.insert(Face::from([i, j, hub]));
                    }
                }
            }
            assert_eq!(gallai_indices(&fr).members(), &expected_gallai);
            assert_eq!(anti_gallai_indices(&fr).len(), n);
        }
    }

    #[test]
    fn simple_families() {
        let single = SimpleGraph::new(2, &[(1, 2)]).unwrap();
        assert_eq!(line_indices(&single).members(), &family(&[&[1, 2]]));

        assert!(anti_gallai_indices(&cycle_graph(6).unwrap()).is_empty());

        let k3 = complete_graph(3).unwrap();
        assert_eq!(
            gallai_indices(&k3).members(),
            &family(&[&[1, 2], &[1, 3], &[2, 3]])
        );

        for n in 2..=4 {
            let expected: BTreeSet<Face> = (0..n)
                .map(|k| Face::from([3 * k + 1, 3 * k + 2, 3 * k + 3]))
                .collect();
            assert_eq!(
                anti_gallai_indices(&prism_graph(n).unwrap()).members(),
                &expected
            );
        }
    }

    #[test]
    fn serializes_as_array_of_sorted_arrays() {
        let family = gallai_indices(&triangle_pendant());
        let value = serde_json::to_value(&family).unwrap();
        assert_eq!(value, serde_json::json!([[1, 2], [1, 3, 4], [2, 3, 4]]));
    }

    #[test]
    fn corpus_invariants() {
        for g in enumerate_graphs(5, 0).unwrap() {
            let line = line_indices(&g);
            let gallai = gallai_indices(&g);
            let anti = anti_gallai_indices(&g);

            // Anti-Gallai indices are the triangle set.
            let triangles: BTreeSet<Face> = g.triangles().into_iter().collect();
            assert_eq!(anti.members(), &triangles);

            // 3-element members embed in the line family; 2-element Gallai
            // members embed in some line index.
            for face in gallai.iter().chain(anti.iter()) {
                if face.len() == 3 {
                    assert!(line.contains(face));
                } else {
                    assert!(line.iter().any(|f| face.is_subset_of(f)));
                }
            }

            if g.triangles().is_empty() {
                assert_eq!(line.members(), gallai.members());
                assert!(anti.is_empty());
            }
        }
    }
}
