//! Squarefree monomials, facet ideals and residual sets. Only supports
//! matter here: the coefficient field never enters the shellability
//! criterion, so a monomial is just its set of variable indices.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::face::Face;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ordering is not a permutation of the {expected} facets")]
    NotAPermutation { expected: usize },
    #[error("facet ideal of the void complex is undefined")]
    VoidComplex,
    #[error("generator position {position} outside 2..={count}")]
    PositionOutOfRange { position: usize, count: usize },
    #[error("{0} does not divide {1}")]
    NotDivisible(Monomial, Monomial),
    #[error("unit monomial present; it would generate the whole ring")]
    UnitMonomial,
    #[error("generators are not a minimal system (some generator divides another)")]
    NotMinimalSystem,
}

/// A squarefree monomial, e.g. support `{1,2,5}` stands for `x1*x2*x5`.
/// The unit monomial has empty support and degree 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Monomial {
    support: Face,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial {
            support: Face::empty(),
        }
    }

    pub fn from_face(face: &Face) -> Self {
        Monomial {
            support: face.clone(),
        }
    }

    pub fn from_variables(vars: Vec<usize>) -> Self {
        Monomial {
            support: Face::new(vars),
        }
    }

    pub fn support(&self) -> &Face {
        &self.support
    }

    pub fn degree(&self) -> usize {
        self.support.len()
    }

    pub fn is_unit(&self) -> bool {
        self.support.is_empty()
    }

    pub fn is_linear(&self) -> bool {
        self.degree() == 1
    }

    /// Divisibility of squarefree monomials is support containment.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.support.is_subset_of(&other.support)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            support: self.support.intersection(&other.support),
        }
    }

    pub fn quotient(&self, divisor: &Monomial) -> Result<Monomial, IdealError> {
        if !divisor.divides(self) {
            return Err(IdealError::NotDivisible(divisor.clone(), self.clone()));
        }
        Ok(Monomial {
            support: self.support.difference(&divisor.support),
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for v in self.support.iter() {
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

/// Divisibility antichain of a monomial set: the members not strictly
/// divisible by another member. Generates the same ideal as the input.
/// A unit monomial is rejected; it cannot occur for facet ideals.
pub fn minimal_generators(monomials: &BTreeSet<Monomial>) -> Result<BTreeSet<Monomial>, IdealError> {
    if monomials.iter().any(Monomial::is_unit) {
        return Err(IdealError::UnitMonomial);
    }
    Ok(monomials
        .iter()
        .filter(|m| !monomials.iter().any(|d| d != *m && d.divides(m)))
        .cloned()
        .collect())
}

/// The facet ideal of a complex under a chosen facet ordering: generator
/// `m_k` is the product of the variables of the `k`-th facet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetIdeal {
    variables: Vec<usize>,
    generators: Vec<Monomial>,
}

/// Builds the ordered ideal; `order` must be a permutation of
/// `0..facet_count` indexing into the complex's sorted facet list.
pub fn facet_ideal(complex: &SimplicialComplex, order: &[usize]) -> Result<FacetIdeal, IdealError> {
    let facets = complex.facets();
    if facets.is_empty() {
        return Err(IdealError::VoidComplex);
    }
    let r = facets.len();
    let mut seen = vec![false; r];
    if order.len() != r {
        return Err(IdealError::NotAPermutation { expected: r });
    }
    for &i in order {
        if i >= r || seen[i] {
            return Err(IdealError::NotAPermutation { expected: r });
        }
        seen[i] = true;
    }
    Ok(FacetIdeal {
        variables: complex.vertices().to_vec(),
        generators: order
            .iter()
            .map(|&i| Monomial::from_face(&facets[i]))
            .collect(),
    })
}

impl FacetIdeal {
    pub fn from_generators(variables: Vec<usize>, generators: Vec<Monomial>) -> Self {
        FacetIdeal {
            variables,
            generators,
        }
    }

    pub fn variables(&self) -> &[usize] {
        &self.variables
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Pairwise indivisibility. Automatic when the generators come from a
    /// facet antichain.
    pub fn is_minimal_system(&self) -> bool {
        let g = &self.generators;
        !(0..g.len()).any(|i| (0..g.len()).any(|j| i != j && g[i].divides(&g[j])))
    }

    /// The residual set at 1-based `position` i: the quotients
    /// `m_i / gcd(m_k, m_i)` over all earlier generators, deduplicated.
    /// Depends only on the set of predecessors, not their order.
    pub fn residual_set(&self, position: usize) -> Result<BTreeSet<Monomial>, IdealError> {
        let count = self.generators.len();
        if position < 2 || position > count {
            return Err(IdealError::PositionOutOfRange { position, count });
        }
        let target = &self.generators[position - 1];
        Ok(self.generators[..position - 1]
            .iter()
            .map(|earlier| {
                target
                    .quotient(&earlier.gcd(target))
                    .expect("gcd divides both operands")
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{anti_gallai_complex, line_complex};
    use crate::graph::{cycle_graph, wheel_graph};

    fn m(vars: &[usize]) -> Monomial {
        Monomial::from_variables(vars.to_vec())
    }

    fn set(monomials: &[&[usize]]) -> BTreeSet<Monomial> {
        monomials.iter().map(|v| m(v)).collect()
    }

    #[test]
    fn gcd_and_quotient() {
        assert_eq!(m(&[1, 2, 3]).gcd(&m(&[2, 3, 4])), m(&[2, 3]));
        assert_eq!(m(&[2, 3, 4]).quotient(&m(&[2, 3])).unwrap(), m(&[4]));
        let x = m(&[1, 5]);
        assert_eq!(x.gcd(&x), x);
        assert_eq!(m(&[1, 2]).gcd(&m(&[3, 4])), Monomial::unit());
        assert!(matches!(
            m(&[1]).quotient(&m(&[2])),
            Err(IdealError::NotDivisible(..))
        ));
    }

    #[test]
    fn minimal_generator_sets() {
        assert_eq!(
            minimal_generators(&set(&[&[3], &[2, 3]])).unwrap(),
            set(&[&[3]])
        );
        assert_eq!(
            minimal_generators(&set(&[&[4, 5], &[1, 5]])).unwrap(),
            set(&[&[4, 5], &[1, 5]])
        );
        assert_eq!(minimal_generators(&set(&[&[1]])).unwrap(), set(&[&[1]]));
        let mut with_unit = set(&[&[1]]);
        with_unit.insert(Monomial::unit());
        assert_eq!(
            minimal_generators(&with_unit),
            Err(IdealError::UnitMonomial)
        );
    }

    #[test]
    fn cycle_ideal_listing() {
        let c5 = line_complex(&cycle_graph(5).unwrap());
        // Sorted facets: {1,2,3},{1,2,5},{1,4,5},{2,3,4},{3,4,5}; pick the
        // rim listing order.
        let order = order_of(&c5, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[1, 4, 5], &[1, 2, 5]]);
        let ideal = facet_ideal(&c5, &order).unwrap();
        assert!(ideal.is_minimal_system());
        assert_eq!(ideal.generators()[0], m(&[1, 2, 3]));
        assert_eq!(ideal.generators()[4], m(&[1, 2, 5]));

        let single = single_edge_complex();
        let ideal = facet_ideal(&single, &[0]).unwrap();
        assert_eq!(ideal.generators()[0].degree(), 2);

        assert!(matches!(
            facet_ideal(&c5, &[0, 0, 1, 2, 3]),
            Err(IdealError::NotAPermutation { .. })
        ));
    }

    fn single_edge_complex() -> SimplicialComplex {
        SimplicialComplex::from_generators(vec![Face::from([1, 2])]).unwrap()
    }

    fn order_of(complex: &SimplicialComplex, listing: &[&[usize]]) -> Vec<usize> {
        listing
            .iter()
            .map(|f| {
                let face = Face::new(f.to_vec());
                complex
                    .facets()
                    .iter()
                    .position(|g| *g == face)
                    .expect("listed facet exists")
            })
            .collect()
    }

    #[test]
    fn wheel_anti_gallai_ideal_rim_order() {
        let anti = anti_gallai_complex(&wheel_graph(5).unwrap());
        let order = order_of(
            &anti,
            &[&[1, 2, 6], &[2, 3, 6], &[3, 4, 6], &[4, 5, 6], &[1, 5, 6]],
        );
        let ideal = facet_ideal(&anti, &order).unwrap();
        assert_eq!(ideal.generators()[2], m(&[3, 4, 6]));
    }

    #[test]
    fn cycle_residual_examples() {
        let c5 = line_complex(&cycle_graph(5).unwrap());
        // Prefix {m_123, m_234}, next m_145: two incomparable quadratics.
        let order = order_of(&c5, &[&[1, 2, 3], &[2, 3, 4], &[1, 4, 5], &[1, 2, 5], &[3, 4, 5]]);
        let ideal = facet_ideal(&c5, &order).unwrap();
        assert_eq!(
            ideal.residual_set(3).unwrap(),
            set(&[&[4, 5], &[1, 5]])
        );

        // Prefix (m_123, m_234, m_125), next m_145: raw residuals reduce to
        // {x1x5, x4}.
        let order = order_of(&c5, &[&[1, 2, 3], &[2, 3, 4], &[1, 2, 5], &[1, 4, 5], &[3, 4, 5]]);
        let ideal = facet_ideal(&c5, &order).unwrap();
        let raw = ideal.residual_set(4).unwrap();
        assert_eq!(raw, set(&[&[4, 5], &[1, 5], &[4]]));
        assert_eq!(
            minimal_generators(&raw).unwrap(),
            set(&[&[1, 5], &[4]])
        );

        assert!(matches!(
            ideal.residual_set(1),
            Err(IdealError::PositionOutOfRange { .. })
        ));
        assert!(matches!(
            ideal.residual_set(6),
            Err(IdealError::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn second_position_with_shared_pair_is_linear() {
        let complex = SimplicialComplex::from_generators(vec![
            Face::from([1, 2, 3]),
            Face::from([2, 3, 4]),
        ])
        .unwrap();
        let ideal = facet_ideal(&complex, &[0, 1]).unwrap();
        assert_eq!(ideal.residual_set(2).unwrap(), set(&[&[4]]));
    }

    #[test]
    fn residuals_ignore_predecessor_order() {
        let c5 = line_complex(&cycle_graph(5).unwrap());
        let a = facet_ideal(&c5, &[0, 1, 2, 3, 4]).unwrap();
        let b = facet_ideal(&c5, &[2, 0, 1, 3, 4]).unwrap();
        assert_eq!(a.residual_set(4).unwrap(), b.residual_set(4).unwrap());
    }
}
