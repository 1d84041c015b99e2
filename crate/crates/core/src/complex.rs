//! Simplicial complexes generated by index families: face enumeration,
//! f-vector, Euler characteristic, dimension, purity, connectedness and
//! subcomplex relations.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::dsu::Dsu;
use crate::face::Face;
use crate::graph::SimpleGraph;
use crate::indices::{anti_gallai_indices, gallai_indices, line_indices, IndexFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("the empty set is not a valid generator")]
    EmptyGenerator,
    #[error("operation undefined on the void complex")]
    VoidComplex,
}

/// A simplicial complex given by its facets: an inclusion-maximal antichain
/// of non-empty vertex sets. The vertex set is the union of the facet
/// supports. A complex with no facets at all is the void complex, which is
/// legal but rejected by the numeric invariants below.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds the complex generated by a family of vertex sets: facets are
    /// the inclusion-maximal members. An empty family yields the void
    /// complex; an empty member is an error.
    pub fn from_generators<I>(generators: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = Face>,
    {
        let members: BTreeSet<Face> = generators.into_iter().collect();
        if members.iter().any(Face::is_empty) {
            return Err(ComplexError::EmptyGenerator);
        }
        let facets: Vec<Face> = members
            .iter()
            .filter(|f| !members.iter().any(|g| f.is_strict_subset_of(g)))
            .cloned()
            .collect();
        Ok(Self::from_facet_antichain(facets))
    }

    /// `facets` must already be a sorted antichain.
    fn from_facet_antichain(facets: Vec<Face>) -> Self {
        let vertices: BTreeSet<usize> = facets.iter().flat_map(Face::iter).collect();
        SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            facets,
        }
    }

    pub fn void() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            facets: Vec::new(),
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Facets in sorted order; certificate orderings index into this list.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// True when the face lies inside some facet.
    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(f))
    }

    /// All non-empty faces, by per-facet subset expansion into a global
    /// deduplicating set. Exponential in the facet size, which is fine for
    /// the 2- and 3-element facets index families produce.
    pub fn all_faces(&self) -> BTreeSet<Face> {
        let mut faces = BTreeSet::new();
        for facet in &self.facets {
            let verts = facet.vertices();
            for mask in 1u64..(1u64 << verts.len()) {
                let subset: Vec<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                faces.insert(Face::new(subset));
            }
        }
        faces
    }

    /// Face counts `alpha_0..alpha_d`, empty face excluded.
    pub fn f_vector(&self) -> Result<FVector, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::VoidComplex);
        }
        let mut counts = vec![0usize; self.dimension()? + 1];
        for face in self.all_faces() {
            counts[face.len() - 1] += 1;
        }
        Ok(FVector(counts))
    }

    /// Alternating sum of the f-vector (unreduced: the empty face does not
    /// contribute).
    pub fn euler_characteristic(&self) -> Result<i64, ComplexError> {
        Ok(self.f_vector()?.euler())
    }

    pub fn dimension(&self) -> Result<usize, ComplexError> {
        self.facets
            .iter()
            .map(|f| f.len() - 1)
            .max()
            .ok_or(ComplexError::VoidComplex)
    }

    pub fn is_pure(&self) -> Result<bool, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::VoidComplex);
        }
        let first = self.facets[0].len();
        Ok(self.facets.iter().all(|f| f.len() == first))
    }

    /// Connectivity of the facet-intersection graph: any two facets must be
    /// linked by a chain of pairwise-intersecting facets.
    pub fn is_connected(&self) -> Result<bool, ComplexError> {
        Ok(self.connected_components()?.len() <= 1)
    }

    /// Splits the facet set along the facet-intersection graph. Components
    /// have pairwise disjoint vertex sets and are ordered by their smallest
    /// facet.
    pub fn connected_components(&self) -> Result<Vec<SimplicialComplex>, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::VoidComplex);
        }
        let r = self.facets.len();
        let mut dsu = Dsu::new(r);
        for i in 0..r {
            for j in (i + 1)..r {
                if !self.facets[i].intersection(&self.facets[j]).is_empty() {
                    dsu.union(i, j);
                }
            }
        }
        let mut groups: Vec<(usize, Vec<Face>)> = Vec::new();
        for i in 0..r {
            let root = dsu.find(i);
            match groups.iter_mut().find(|(r, _)| *r == root) {
                Some((_, facets)) => facets.push(self.facets[i].clone()),
                None => groups.push((root, vec![self.facets[i].clone()])),
            }
        }
        Ok(groups
            .into_iter()
            .map(|(_, facets)| SimplicialComplex::from_facet_antichain(facets))
            .collect())
    }

    /// Face-containment subcomplex test: every facet of `self` is a face of
    /// `other`. (Facet-set inclusion would be strictly narrower and would
    /// reject Gallai complexes inside their line complex whenever a short
    /// Gallai facet sits inside a longer line facet.)
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains_face(f))
    }

    /// A spanning subcomplex additionally covers the same vertex set.
    pub fn is_spanning_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.is_subcomplex_of(other) && self.vertices == other.vertices
    }
}

/// Face counts by dimension: `alpha_k` counts the faces on `k+1` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FVector(Vec<usize>);

impl FVector {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// `alpha_k`, zero beyond the dimension.
    pub fn alpha(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &count)| {
                let signed = count as i64;
                if k % 2 == 0 {
                    signed
                } else {
                    -signed
                }
            })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn complex_of(family: IndexFamily) -> SimplicialComplex {
    SimplicialComplex::from_generators(family).expect("index members are non-empty")
}

/// The complex generated by the line indices of `g`.
pub fn line_complex(g: &SimpleGraph) -> SimplicialComplex {
    complex_of(line_indices(g))
}

/// The complex generated by the Gallai indices of `g`.
pub fn gallai_complex(g: &SimpleGraph) -> SimplicialComplex {
    complex_of(gallai_indices(g))
}

/// The complex generated by the anti-Gallai indices of `g`; void exactly
/// when `g` is triangle-free.
pub fn anti_gallai_complex(g: &SimpleGraph) -> SimplicialComplex {
    complex_of(anti_gallai_indices(g))
}
