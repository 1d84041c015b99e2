//! Sorted vertex sets, shared by index families, complexes and monomial
//! supports.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A finite set of vertex labels, kept sorted and duplicate-free.
///
/// Faces serve three roles in this crate: members of an index family,
/// faces/facets of a simplicial complex, and supports of squarefree
/// monomials. The empty face is a legal value; it shows up as the
/// intersection of disjoint facets and has dimension `-1`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(Vec<usize>);

impl Face {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension as a simplex: `|F| - 1`, so the empty face has dimension -1.
    pub fn dimension(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.0.binary_search(&vertex).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn is_strict_subset_of(&self, other: &Face) -> bool {
        self.len() < other.len() && self.is_subset_of(other)
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut vertices = self.0.clone();
        vertices.extend_from_slice(&other.0);
        Face::new(vertices)
    }
}

impl From<Vec<usize>> for Face {
    fn from(vertices: Vec<usize>) -> Self {
        Face::new(vertices)
    }
}

impl<const N: usize> From<[usize; N]> for Face {
    fn from(vertices: [usize; N]) -> Self {
        Face::new(vertices.to_vec())
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Face::new(iter.into_iter().collect())
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Prints in the subscripted index notation used by the report renderer,
/// e.g. `F_{1,3,4}`.
impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{self:?}")
    }
}
