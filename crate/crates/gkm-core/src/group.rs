//! Finite groups of exact rational matrices: Weyl groups, their orbits
//! and stabilizers, and graded bases of invariant rings.
//!
//! Invariant rings of the compact groups appearing in graph labels are
//! always computed as Weyl-group invariants on the maximal torus
//! (Chevalley restriction), so a group here is just (torus rank, finite
//! matrix group).

use std::collections::BTreeMap;
use std::collections::VecDeque;

use thiserror::Error;

use crate::linalg::{rank as matrix_rank, LinearMap};
use crate::poly::{monomial_basis, GradedSubspace, Polynomial};
use crate::rat::{rat, Rat};
use crate::root::{RootSystem, Weight};

/// Default cap on group enumeration; override per call or, in the CLI,
/// through `GKM_MAX_GROUP_ORDER`.
pub const DEFAULT_MAX_GROUP_ORDER: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("generator is not invertible")]
    NotInvertible,
    #[error("group closure exceeds cap of {0} elements")]
    ClosureTooLarge(usize),
}

/// A finite group of invertible rational matrices, closed under product
/// and inverse, with deterministic element order (breadth-first products
/// of the sorted generators starting from the identity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMatrixGroup {
    rank: usize,
    elements: Vec<LinearMap>,
    generator_indices: Vec<usize>,
    identity_index: usize,
    /// For each non-identity element, `(parent, generator)` with
    /// `element = elements[parent] * elements[generator_indices[generator]]`.
    provenance: Vec<Option<(usize, usize)>>,
    index: BTreeMap<LinearMap, usize>,
}

impl FiniteMatrixGroup {
    /// Identity-only group of the given rank.
    pub fn trivial(rank: usize) -> Self {
        enumerate_group_capped(rank, &[], DEFAULT_MAX_GROUP_ORDER).expect("trivial closure")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[LinearMap] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn generators(&self) -> Vec<LinearMap> {
        self.generator_indices
            .iter()
            .map(|&i| self.elements[i].clone())
            .collect()
    }

    pub fn index_of(&self, m: &LinearMap) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// BFS provenance of the element: `(parent, generator)` pairs, `None`
    /// for the identity.
    pub fn provenance(&self, i: usize) -> Option<(usize, usize)> {
        self.provenance[i]
    }

    /// All distinct images `w(lambda)`, in first-discovery order over the
    /// element list.
    pub fn orbit(&self, lambda: &Weight) -> Vec<Weight> {
        assert_eq!(lambda.rank(), self.rank, "weight rank mismatch");
        let mut seen = Vec::new();
        for w in &self.elements {
            let img = Weight::new(w.apply(&lambda.coords));
            if !seen.contains(&img) {
                seen.push(img);
            }
        }
        seen
    }

    /// Subgroup `{w : w(lambda) = lambda}` with the induced element order.
    pub fn stabilizer(&self, lambda: &Weight) -> FiniteMatrixGroup {
        assert_eq!(lambda.rank(), self.rank, "weight rank mismatch");
        let elements: Vec<LinearMap> = self
            .elements
            .iter()
            .filter(|w| w.apply(&lambda.coords) == lambda.coords)
            .cloned()
            .collect();
        let generators: Vec<LinearMap> = elements
            .iter()
            .filter(|m| **m != LinearMap::identity(self.rank))
            .cloned()
            .collect();
        enumerate_group_capped(self.rank, &generators, self.elements.len())
            .expect("stabilizer closure within parent order")
    }

    /// Basis of the degree-`d` invariants: Reynolds averages of the
    /// monomial basis, rank-filtered in monomial order.
    pub fn invariant_basis(&self, d: u32) -> GradedSubspace {
        let nvars = self.rank;
        let monos = monomial_basis(nvars, d);
        let order = rat(self.order() as i64);
        let mut picked: Vec<Polynomial> = Vec::new();
        let mut picked_rows: Vec<Vec<Rat>> = Vec::new();
        for m in monos {
            let f = Polynomial::from_terms(nvars, [(m, rat(1))]);
            let mut avg = Polynomial::zero(nvars);
            for w in &self.elements {
                avg = avg.add(&f.pullback(w).expect("rank match"));
            }
            avg = avg.scale(&(rat(1) / &order));
            if avg.is_zero() {
                continue;
            }
            let row = avg.coefficient_vector(d);
            picked_rows.push(row);
            if matrix_rank(&picked_rows) == picked_rows.len() {
                picked.push(normalize_poly(&avg, d));
            } else {
                picked_rows.pop();
            }
        }
        GradedSubspace::new(d, nvars, picked).expect("Reynolds output is independent")
    }
}

/// Scales a homogeneous polynomial so its coefficient vector is a
/// primitive integer vector; purely cosmetic normalization.
fn normalize_poly(p: &Polynomial, d: u32) -> Polynomial {
    let v = p.coefficient_vector(d);
    match crate::rat::primitive_integer_vector(&v) {
        Some(ints) => {
            let coeffs: Vec<Rat> = ints.into_iter().map(Rat::from_integer).collect();
            Polynomial::from_coefficient_vector(p.nvars(), d, &coeffs)
        }
        None => p.clone(),
    }
}

/// Closure of the generators under multiplication, capped at
/// [`DEFAULT_MAX_GROUP_ORDER`] elements.
pub fn enumerate_group(generators: &[LinearMap]) -> Result<FiniteMatrixGroup, GroupError> {
    let rank = generators.first().map_or(0, |g| g.rows());
    enumerate_group_capped(rank, generators, DEFAULT_MAX_GROUP_ORDER)
}

/// Closure under multiplication via breadth-first products of the sorted
/// generators. Element 0 is the identity; discovery order is
/// deterministic.
pub fn enumerate_group_capped(
    rank: usize,
    generators: &[LinearMap],
    cap: usize,
) -> Result<FiniteMatrixGroup, GroupError> {
    for g in generators {
        if g.rows() != rank || g.cols() != rank {
            return Err(GroupError::RankMismatch {
                expected: rank,
                got: g.rows(),
            });
        }
        if !g.is_invertible() {
            return Err(GroupError::NotInvertible);
        }
    }
    let identity = LinearMap::identity(rank);
    let mut gens: Vec<LinearMap> = generators
        .iter()
        .filter(|g| **g != identity)
        .cloned()
        .collect();
    gens.sort();
    gens.dedup();

    let mut elements = vec![identity.clone()];
    let mut provenance: Vec<Option<(usize, usize)>> = vec![None];
    let mut index = BTreeMap::new();
    index.insert(identity, 0usize);
    let mut queue = VecDeque::from([0usize]);
    while let Some(current) = queue.pop_front() {
        for (gi, g) in gens.iter().enumerate() {
            let product = elements[current].compose(g);
            if index.contains_key(&product) {
                continue;
            }
            if elements.len() >= cap {
                return Err(GroupError::ClosureTooLarge(cap));
            }
            index.insert(product.clone(), elements.len());
            provenance.push(Some((current, gi)));
            queue.push_back(elements.len());
            elements.push(product);
        }
    }
    let generator_indices = gens
        .iter()
        .map(|g| *index.get(g).expect("generators are in the closure"))
        .collect();
    Ok(FiniteMatrixGroup {
        rank,
        elements,
        generator_indices,
        identity_index: 0,
        provenance,
        index,
    })
}

/// Weyl group of a root system: closure of the simple reflections (the
/// identity-only group for a rootless torus).
pub fn weyl_group(rs: &RootSystem) -> FiniteMatrixGroup {
    enumerate_group_capped(rs.rank, &rs.simple_reflections(), DEFAULT_MAX_GROUP_ORDER)
        .expect("Weyl groups at supported ranks are small")
}

/// A compact group, represented by what the solvers need: the rank of a
/// maximal torus and the Weyl group acting on its coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDescriptor {
    pub torus_rank: usize,
    pub weyl: FiniteMatrixGroup,
    pub name: String,
}

impl GroupDescriptor {
    pub fn new(name: impl Into<String>, weyl: FiniteMatrixGroup) -> Self {
        GroupDescriptor {
            torus_rank: weyl.rank(),
            weyl,
            name: name.into(),
        }
    }

    /// Torus of the given rank: trivial Weyl group, the full polynomial
    /// ring as invariants.
    pub fn torus(rank: usize, name: impl Into<String>) -> Self {
        GroupDescriptor::new(name, FiniteMatrixGroup::trivial(rank))
    }

    /// Group with Weyl group generated by the simple reflections of `rs`.
    pub fn from_root_system(name: impl Into<String>, rs: &RootSystem) -> Self {
        GroupDescriptor::new(name, weyl_group(rs))
    }
}
