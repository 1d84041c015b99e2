//! Shellability of simplicial complexes, decided by two cross-checked
//! criteria.
//!
//! The direct criterion orders the facets and demands that each new facet
//! meet the union of its predecessors in a pure complex of one dimension
//! lower; the algebraic criterion demands that every residual set of the
//! ordered facet ideal be minimally generated by linear monomials. The two
//! step predicates are definitionally dual (maximal intersections with the
//! new facet complement its minimal support differences), and
//! [`Method::Both`] evaluates both on every step, failing loudly if they
//! ever disagree.
//!
//! Ordering search is a dynamic program over predecessor subsets, valid
//! because both step predicates depend only on the *set* of predecessors.
//! A deterministic greedy pass (lexicographic tie-break) runs first: a
//! completed greedy order is already a certificate, and it is what makes
//! large shellable instances cheap. Refutations only ever come from the
//! exhaustive subset search, which is capped by
//! [`SearchOptions::max_facets`]; past the cap a stalled greedy pass is
//! reported as inconclusive, never as not shellable.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::ideal::{facet_ideal, minimal_generators, FacetIdeal, IdealError, Monomial};
use crate::sweep;

/// Default cap on the exhaustive subset search.
pub const DEFAULT_SEARCH_BOUND: usize = 20;

/// Subset masks are machine words; the exhaustive search cannot go past
/// this many facets regardless of the configured bound.
const MASK_LIMIT: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Definition,
    Residuals,
    Both,
}

impl Method {
    fn wants_definition(self) -> bool {
        matches!(self, Method::Definition | Method::Both)
    }

    fn wants_residuals(self) -> bool {
        matches!(self, Method::Residuals | Method::Both)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Shellable,
    NotShellable,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Shellable => "SHELLABLE",
            Verdict::NotShellable => "NOT_SHELLABLE",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShellingError {
    #[error("ordering is not a permutation of the {expected} facets")]
    InvalidOrdering { expected: usize },
    #[error(
        "shelling criteria disagree at facet {facet:?} after prefix {prefix:?}: \
         definition says {definition}, residuals say {residuals}"
    )]
    CriteriaMismatch {
        prefix: Vec<Face>,
        facet: Face,
        definition: bool,
        residuals: bool,
    },
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Evidence for one step of an ordering: the maximal intersection faces
/// (definition route) and/or the minimal residual generators (algebraic
/// route), depending on the method.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepEvidence {
    /// 1-based position in the ordering; the first facet is unconditional,
    /// so evidence starts at position 2.
    pub position: usize,
    pub facet: Face,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection_faces: Option<Vec<Face>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_generators: Option<Vec<Monomial>>,
}

/// Machine-checkable refutation: the exhaustive search over predecessor
/// subsets found no valid extension reaching the full facet set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub facet_count: usize,
    /// Number of facet subsets achievable by some valid partial ordering.
    pub achievable_prefix_sets: u64,
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellingCertificate {
    pub verdict: Verdict,
    pub method: Method,
    /// The sorted facet list that `ordering` indexes into.
    pub facets: Vec<Face>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ordering: Option<Vec<usize>>,
    pub steps: Vec<StepEvidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refutation: Option<Refutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ShellingCertificate {
    pub fn is_shellable(&self) -> bool {
        self.verdict == Verdict::Shellable
    }

    /// The facets in certificate order, when an ordering is present.
    pub fn ordered_facets(&self) -> Option<Vec<Face>> {
        self.ordering
            .as_ref()
            .map(|order| order.iter().map(|&i| self.facets[i].clone()).collect())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Exhaustive-search cap on the facet count. Above it only the greedy
    /// pass runs and a stall is reported as inconclusive.
    pub max_facets: usize,
    /// Expand subset frontiers in parallel. Ignored without the `parallel`
    /// feature; results are identical either way.
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_facets: DEFAULT_SEARCH_BOUND,
            parallel: cfg!(feature = "parallel"),
        }
    }
}

/// Direct shelling step: `M` is the set of inclusion-maximal intersections
/// of `next` with the prefix facets; the step is valid when every member
/// of `M` has exactly one vertex fewer than `next`. A prefix touching
/// `next` nowhere gives `M = {{}}`, which fails unless `next` is a single
/// vertex -- the one case where dimension -1 is the required dimension.
pub fn shelling_step_ok(prefix: &[Face], next: &Face) -> (bool, Vec<Face>) {
    let candidates: BTreeSet<Face> = prefix.iter().map(|f| f.intersection(next)).collect();
    let maximal: Vec<Face> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|d| c.is_strict_subset_of(d)))
        .cloned()
        .collect();
    let ok = !maximal.is_empty() && maximal.iter().all(|m| m.len() + 1 == next.len());
    (ok, maximal)
}

/// Algebraic shelling step on an explicit predecessor set: the residual
/// quotients of `next` must be minimally generated by linear monomials.
pub fn residual_step_ok(
    predecessors: &[Monomial],
    next: &Monomial,
) -> Result<(bool, Vec<Monomial>), IdealError> {
    let residuals: BTreeSet<Monomial> = predecessors
        .iter()
        .map(|earlier| {
            next.quotient(&earlier.gcd(next))
                .expect("gcd divides both operands")
        })
        .collect();
    let generators = minimal_generators(&residuals)?;
    let ok = !generators.is_empty() && generators.iter().all(Monomial::is_linear);
    Ok((ok, generators.into_iter().collect()))
}

/// [`residual_step_ok`] at a 1-based position of an ordered ideal.
pub fn step_linear(
    ideal: &FacetIdeal,
    position: usize,
) -> Result<(bool, Vec<Monomial>), IdealError> {
    let count = ideal.generator_count();
    if position < 2 || position > count {
        return Err(IdealError::PositionOutOfRange { position, count });
    }
    residual_step_ok(
        &ideal.generators()[..position - 1],
        &ideal.generators()[position - 1],
    )
}

/// Checks an ordered minimal system generator by generator. The returned
/// certificate is `SHELLABLE` when every residual set is linear and
/// `INCONCLUSIVE` otherwise (a failed ordering says nothing about other
/// orderings).
pub fn has_linear_residuals(ideal: &FacetIdeal) -> Result<ShellingCertificate, IdealError> {
    if !ideal.is_minimal_system() {
        return Err(IdealError::NotMinimalSystem);
    }
    let r = ideal.generator_count();
    let mut steps = Vec::new();
    let mut all_ok = true;
    for position in 2..=r {
        let (ok, generators) = step_linear(ideal, position)?;
        all_ok &= ok;
        steps.push(StepEvidence {
            position,
            facet: ideal.generators()[position - 1].support().clone(),
            ok,
            intersection_faces: None,
            residual_generators: Some(generators),
        });
    }
    let facets: Vec<Face> = ideal
        .generators()
        .iter()
        .map(|m| m.support().clone())
        .collect();
    let ordering = (0..r).collect();
    Ok(ShellingCertificate {
        verdict: if all_ok {
            Verdict::Shellable
        } else {
            Verdict::Inconclusive
        },
        method: Method::Residuals,
        facets,
        ordering: Some(ordering),
        steps,
        refutation: None,
        note: (!all_ok).then(|| "given ordering is not a shelling order".to_string()),
    })
}

/// Step predicates for one complex, evaluated against predecessor bitmasks.
struct StepOracle {
    facets: Vec<Face>,
    monomials: Vec<Monomial>,
    method: Method,
}

impl StepOracle {
    fn new(facets: Vec<Face>, method: Method) -> Self {
        let monomials = facets.iter().map(Monomial::from_face).collect();
        StepOracle {
            facets,
            monomials,
            method,
        }
    }

    fn len(&self) -> usize {
        self.facets.len()
    }

    fn definition_ok(&self, prefix: &[usize], j: usize) -> bool {
        let next = &self.facets[j];
        let candidates: BTreeSet<Face> = prefix
            .iter()
            .map(|&k| self.facets[k].intersection(next))
            .collect();
        let target = next.len() - 1;
        candidates
            .iter()
            .all(|c| c.len() == target || candidates.iter().any(|d| c.is_strict_subset_of(d)))
    }

    fn residuals_ok(&self, prefix: &[usize], j: usize) -> bool {
        let next = &self.monomials[j];
        let residuals: BTreeSet<Face> = prefix
            .iter()
            .map(|&k| next.support().difference(self.monomials[k].support()))
            .collect();
        // Minimal generators all linear: every difference is either a
        // single variable or strictly divisible by another difference.
        residuals
            .iter()
            .all(|u| u.len() == 1 || residuals.iter().any(|d| d.is_strict_subset_of(u)))
    }

    fn check(&self, prefix: &[usize], j: usize) -> Result<bool, ShellingError> {
        debug_assert!(!prefix.is_empty() && !prefix.contains(&j));
        match self.method {
            Method::Definition => Ok(self.definition_ok(prefix, j)),
            Method::Residuals => Ok(self.residuals_ok(prefix, j)),
            Method::Both => {
                let definition = self.definition_ok(prefix, j);
                let residuals = self.residuals_ok(prefix, j);
                if definition != residuals {
                    return Err(ShellingError::CriteriaMismatch {
                        prefix: prefix.iter().map(|&k| self.facets[k].clone()).collect(),
                        facet: self.facets[j].clone(),
                        definition,
                        residuals,
                    });
                }
                Ok(definition)
            }
        }
    }

    /// Full evidence for a certificate step; `prefix` holds facet indices.
    fn evidence(&self, prefix: &[usize], j: usize, position: usize) -> StepEvidence {
        let prefix_faces: Vec<Face> = prefix.iter().map(|&k| self.facets[k].clone()).collect();
        let (mut ok, mut intersections, mut generators) = (true, None, None);
        if self.method.wants_definition() {
            let (def_ok, maximal) = shelling_step_ok(&prefix_faces, &self.facets[j]);
            ok &= def_ok;
            intersections = Some(maximal);
        }
        if self.method.wants_residuals() {
            let predecessors: Vec<Monomial> =
                prefix.iter().map(|&k| self.monomials[k].clone()).collect();
            let (res_ok, gens) = residual_step_ok(&predecessors, &self.monomials[j])
                .expect("facet antichain never yields a unit residual");
            ok &= res_ok;
            generators = Some(gens);
        }
        StepEvidence {
            position,
            facet: self.facets[j].clone(),
            ok,
            intersection_faces: intersections,
            residual_generators: generators,
        }
    }
}

/// Deterministic greedy pass: start from the lexicographically first facet
/// and repeatedly append the first remaining facet that passes the step
/// test. Returns the completed ordering or `None` on a stall.
fn greedy(oracle: &StepOracle) -> Result<Option<Vec<usize>>, ShellingError> {
    let r = oracle.len();
    let mut order = vec![0usize];
    let mut used = vec![false; r];
    used[0] = true;
    while order.len() < r {
        let mut extended = false;
        for (j, used_j) in used.iter_mut().enumerate() {
            if !*used_j && oracle.check(&order, j)? {
                order.push(j);
                *used_j = true;
                extended = true;
                break;
            }
        }
        if !extended {
            return Ok(None);
        }
    }
    Ok(Some(order))
}

enum SearchOutcome {
    Order(Vec<usize>),
    Refuted { achievable: u64 },
}

/// Level-synchronous dynamic program over predecessor subsets. A mask is
/// achievable when some valid partial ordering realizes exactly that facet
/// set; transitions depend only on (mask, next facet). Frontier expansion
/// fans out per mask; results are merged in sorted order so the recovered
/// ordering never depends on scheduling.
fn exhaustive_search(oracle: &StepOracle, parallel: bool) -> Result<SearchOutcome, ShellingError> {
    let r = oracle.len();
    let full: u64 = (1u64 << r) - 1;
    let mut parent: HashMap<u64, (u64, usize)> = HashMap::new();
    let mut frontier: Vec<u64> = (0..r).map(|j| 1u64 << j).collect();
    for &mask in &frontier {
        parent.insert(mask, (0, mask.trailing_zeros() as usize));
    }
    while !frontier.is_empty() && !parent.contains_key(&full) {
        let expansions = sweep::map_slice(&frontier, parallel, |&mask| {
            let prefix: Vec<usize> = (0..r).filter(|&k| mask >> k & 1 == 1).collect();
            let mut found = Vec::new();
            for j in 0..r {
                if mask >> j & 1 == 0 {
                    match oracle.check(&prefix, j) {
                        Ok(true) => found.push((mask | 1 << j, mask, j)),
                        Ok(false) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
            Ok(found)
        });
        let mut discovered = Vec::new();
        for result in expansions {
            discovered.extend(result?);
        }
        discovered.sort_unstable();
        frontier.clear();
        for (mask, prev, j) in discovered {
            if let std::collections::hash_map::Entry::Vacant(entry) = parent.entry(mask) {
                entry.insert((prev, j));
                frontier.push(mask);
            }
        }
    }
    if parent.contains_key(&full) {
        let mut order = Vec::with_capacity(r);
        let mut mask = full;
        while mask != 0 {
            let (prev, j) = parent[&mask];
            order.push(j);
            mask = prev;
        }
        order.reverse();
        Ok(SearchOutcome::Order(order))
    } else {
        Ok(SearchOutcome::Refuted {
            achievable: parent.len() as u64,
        })
    }
}

fn certificate_for_order(
    oracle: &StepOracle,
    order: Vec<usize>,
    note: Option<String>,
) -> ShellingCertificate {
    let steps = (1..order.len())
        .map(|i| oracle.evidence(&order[..i], order[i], i + 1))
        .collect();
    ShellingCertificate {
        verdict: Verdict::Shellable,
        method: oracle.method,
        facets: oracle.facets.clone(),
        ordering: Some(order),
        steps,
        refutation: None,
        note,
    }
}

/// Searches for a shelling order of the complex. Verdicts:
///
/// * `SHELLABLE` with a witnessing ordering (re-verifiable under either
///   criterion),
/// * `NOT_SHELLABLE` with an exhaustive refutation, only when the facet
///   count is within `options.max_facets`,
/// * `INCONCLUSIVE` when the facet count exceeds the bound and the greedy
///   heuristic stalls.
///
/// The void complex and single-facet complexes are trivially shellable.
pub fn find_shelling_order(
    complex: &SimplicialComplex,
    method: Method,
    options: &SearchOptions,
) -> Result<ShellingCertificate, ShellingError> {
    let facets = complex.facets().to_vec();
    let r = facets.len();
    let oracle = StepOracle::new(facets, method);
    if r <= 1 {
        return Ok(certificate_for_order(&oracle, (0..r).collect(), None));
    }
    if let Some(order) = greedy(&oracle)? {
        return Ok(certificate_for_order(
            &oracle,
            order,
            Some("found by greedy pass".to_string()),
        ));
    }
    let bound = options.max_facets.min(MASK_LIMIT);
    if r <= bound {
        match exhaustive_search(&oracle, options.parallel)? {
            SearchOutcome::Order(order) => Ok(certificate_for_order(&oracle, order, None)),
            SearchOutcome::Refuted { achievable } => Ok(ShellingCertificate {
                verdict: Verdict::NotShellable,
                method,
                facets: oracle.facets.clone(),
                ordering: None,
                steps: Vec::new(),
                refutation: Some(Refutation {
                    facet_count: r,
                    achievable_prefix_sets: achievable,
                    exhaustive: true,
                }),
                note: Some(
                    "no ordering of the facets passes every step; \
                     exhausted all achievable predecessor sets"
                        .to_string(),
                ),
            }),
        }
    } else {
        Ok(ShellingCertificate {
            verdict: Verdict::Inconclusive,
            method,
            facets: oracle.facets.clone(),
            ordering: None,
            steps: Vec::new(),
            refutation: None,
            note: Some(format!(
                "greedy heuristic stalled and {r} facets exceed the exhaustive \
                 search bound {bound}; supply a candidate ordering to verify"
            )),
        })
    }
}

/// Checks one given ordering step by step, without any search. Passing
/// proves shellability; failing only disqualifies this ordering, so the
/// verdict is then `INCONCLUSIVE` with the failing steps recorded.
pub fn verify_ordering(
    complex: &SimplicialComplex,
    ordering: &[usize],
    method: Method,
) -> Result<ShellingCertificate, ShellingError> {
    let facets = complex.facets().to_vec();
    let r = facets.len();
    let mut seen = vec![false; r];
    if ordering.len() != r {
        return Err(ShellingError::InvalidOrdering { expected: r });
    }
    for &i in ordering {
        if i >= r || seen[i] {
            return Err(ShellingError::InvalidOrdering { expected: r });
        }
        seen[i] = true;
    }
    let oracle = StepOracle::new(facets, method);
    let steps: Vec<StepEvidence> = (1..r)
        .map(|i| oracle.evidence(&ordering[..i], ordering[i], i + 1))
        .collect();
    let first_failure = steps.iter().find(|s| !s.ok).map(|s| s.position);
    Ok(ShellingCertificate {
        verdict: match first_failure {
            None => Verdict::Shellable,
            Some(_) => Verdict::Inconclusive,
        },
        method,
        facets: oracle.facets.clone(),
        ordering: Some(ordering.to_vec()),
        steps,
        refutation: None,
        note: first_failure
            .map(|p| format!("ordering is not a shelling order; first failure at position {p}")),
    })
}

/// Convenience: build the facet ideal for an ordering given as facet
/// values rather than indices.
pub fn ideal_for_listing(
    complex: &SimplicialComplex,
    listing: &[Face],
) -> Result<FacetIdeal, ShellingError> {
    let order = ordering_positions(complex, listing)
        .ok_or(ShellingError::InvalidOrdering {
            expected: complex.facet_count(),
        })?;
    Ok(facet_ideal(complex, &order)?)
}

/// Maps a facet listing onto positions in the complex's sorted facet list;
/// `None` when the listing is not a permutation of the facets.
pub fn ordering_positions(complex: &SimplicialComplex, listing: &[Face]) -> Option<Vec<usize>> {
    let facets = complex.facets();
    if listing.len() != facets.len() {
        return None;
    }
    let mut seen = vec![false; facets.len()];
    let mut order = Vec::with_capacity(listing.len());
    for face in listing {
        let i = facets.binary_search(face).ok()?;
        if seen[i] {
            return None;
        }
        seen[i] = true;
        order.push(i);
    }
    Some(order)
}
