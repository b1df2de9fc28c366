//! GKM graphs of torus actions and their constraint solver.
//!
//! A graph has dots (the fixed points), dot-dot edges labeled by a
//! nonzero weight — the edge constraint identifies the two polynomials on
//! the kernel of that weight — and star vertices recording real
//! projective planes in the 1-skeleton. Stars impose no constraints; they
//! are kept so the graph encodes the whole 1-skeleton.
//!
//! Edge constraints are implemented as restriction to an integer basis of
//! `ker(label)` (Hermite form, so constraint matrices are canonical)
//! rather than as divisibility by the label; the equivalence of the two
//! formulations is covered by property tests.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::group::{weyl_group, FiniteMatrixGroup};
use crate::linalg::{kernel_embedding, nullspace_with_cols, LinearMap};
use crate::poly::{monomial_basis, Polynomial};
use crate::rat::{rat, Rat};
use crate::root::{RootSystem, Weight};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AbelianError {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("orbit of the zero weight is a single point; no graph")]
    ZeroWeight,
    #[error("incompatible vertex action: {0}")]
    IncompatibleAction(String),
}

/// Dot-dot edge: the two fixed points of a 2-sphere in the 1-skeleton,
/// labeled by a weight whose kernel is the subtorus fixing the sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianEdge {
    pub a: usize,
    pub b: usize,
    pub label: Weight,
}

/// Dot-star edge: a projective plane through the fixed point `dot`. The
/// label slot is reserved by the serialization; no semantics attach to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarEdge {
    pub dot: usize,
    pub star: usize,
    pub label: Option<Weight>,
}

/// GKM graph of a torus action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGkmGraph {
    pub torus_rank: usize,
    pub dots: Vec<String>,
    pub edges: Vec<AbelianEdge>,
    pub stars: Vec<String>,
    pub star_edges: Vec<StarEdge>,
}

impl AbelianGkmGraph {
    pub fn validate(&self) -> Result<(), AbelianError> {
        let mut problems = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.a >= self.dots.len() || e.b >= self.dots.len() {
                problems.push(format!("edge {} references a missing dot", i));
                continue;
            }
            if e.a == e.b {
                problems.push(format!("edge {} is a self-loop", i));
            }
            if e.label.rank() != self.torus_rank {
                problems.push(format!("edge {} label has wrong rank", i));
            } else if e.label.is_zero() {
                problems.push(format!("edge {} has zero label", i));
            }
        }
        for (i, se) in self.star_edges.iter().enumerate() {
            if se.dot >= self.dots.len() || se.star >= self.stars.len() {
                problems.push(format!("star edge {} references a missing vertex", i));
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(AbelianError::InvalidGraph(problems.join("; ")))
        }
    }

    /// The same graph with all stars and star edges removed.
    pub fn without_stars(&self) -> AbelianGkmGraph {
        AbelianGkmGraph {
            torus_rank: self.torus_rank,
            dots: self.dots.clone(),
            edges: self.edges.clone(),
            stars: Vec::new(),
            star_edges: Vec::new(),
        }
    }

    /// Connected components of the dot-edge graph (stars ignored).
    pub fn dot_components(&self) -> usize {
        let n = self.dots.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for e in &self.edges {
            let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, e.b));
            parent[ra] = rb;
        }
        (0..n)
            .map(|i| find(&mut parent, i))
            .collect::<BTreeSet<_>>()
            .len()
    }
}

/// Basis of the degree-`d` slice of the graph algebra: tuples of
/// homogeneous polynomials, one per dot, that agree on every edge kernel.
#[derive(Debug, Clone)]
pub struct AbelianSolution {
    pub degree: u32,
    pub basis: Vec<Vec<Polynomial>>,
}

impl AbelianSolution {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// GKM graph of the isotropy action on the orbit of `lambda`: one dot per
/// orbit point, one edge per orbit pair `{mu, s_alpha(mu)}` per root
/// line. The edge label is the functional cutting out the reflection
/// wall of `alpha` — the primitive form of `Gram * alpha`, which is
/// `alpha` itself in the orthonormal realizations — so that its kernel
/// under the solver's coordinate pairing is the Lie algebra of the
/// subtorus fixing the connecting sphere. No stars.
pub fn build_orbit_graph(
    rs: &RootSystem,
    lambda: &Weight,
) -> Result<AbelianGkmGraph, AbelianError> {
    if lambda.is_zero() {
        return Err(AbelianError::ZeroWeight);
    }
    let weyl = weyl_group(rs);
    let points = weyl.orbit(lambda);
    let dots: Vec<String> = points.iter().map(|w| w.to_string()).collect();
    let mut edges = Vec::new();
    let mut seen: BTreeSet<(usize, usize, Weight)> = BTreeSet::new();
    for alpha in rs.positive_roots() {
        let s = rs.reflection_unchecked(&alpha);
        let covector = Weight::new(
            crate::rat::primitive_integer_vector(&rs.gram.apply(&alpha.coords))
                .expect("roots are nonzero")
                .into_iter()
                .map(Rat::from_integer)
                .collect(),
        )
        .canonical_sign();
        for (i, mu) in points.iter().enumerate() {
            let image = Weight::new(s.apply(&mu.coords));
            if image == *mu {
                continue;
            }
            let j = points
                .iter()
                .position(|p| *p == image)
                .expect("orbit is closed");
            let key = (i.min(j), i.max(j), covector.clone());
            if seen.insert(key.clone()) {
                edges.push(AbelianEdge {
                    a: key.0,
                    b: key.1,
                    label: covector.clone(),
                });
            }
        }
    }
    Ok(AbelianGkmGraph {
        torus_rank: rs.rank,
        dots,
        edges,
        stars: Vec::new(),
        star_edges: Vec::new(),
    })
}

/// Pullback matrix of the degree-`d` monomial basis along `map`:
/// `result[i][t]` is the coefficient of target monomial `t` in
/// `mono_i ∘ map`.
fn pullback_rows(nvars: usize, d: u32, map: &LinearMap) -> Vec<Vec<Rat>> {
    monomial_basis(nvars, d)
        .into_iter()
        .map(|m| {
            Polynomial::from_terms(nvars, [(m, rat(1))])
                .pullback(map)
                .expect("rank match")
                .coefficient_vector(d)
        })
        .collect()
}

fn edge_constraint_rows(
    g: &AbelianGkmGraph,
    d: u32,
    unknowns: usize,
    mono_dim: usize,
) -> Vec<Vec<Rat>> {
    let r = g.torus_rank;
    let mut rows = Vec::new();
    for e in &g.edges {
        let embed = kernel_embedding(&e.label.coords).expect("edge labels are nonzero");
        let target_dim = monomial_basis(embed.cols(), d).len();
        let pulled = pullback_rows(r, d, &embed);
        for t in 0..target_dim {
            let mut row = vec![rat(0); unknowns];
            for i in 0..mono_dim {
                row[e.a * mono_dim + i] = &row[e.a * mono_dim + i] + &pulled[i][t];
                row[e.b * mono_dim + i] = &row[e.b * mono_dim + i] - &pulled[i][t];
            }
            rows.push(row);
        }
    }
    rows
}

fn solution_from_nullspace(
    g: &AbelianGkmGraph,
    d: u32,
    mono_dim: usize,
    vectors: Vec<Vec<Rat>>,
) -> AbelianSolution {
    let basis = vectors
        .into_iter()
        .map(|v| {
            (0..g.dots.len())
                .map(|p| {
                    let coeffs = &v[p * mono_dim..(p + 1) * mono_dim];
                    Polynomial::from_coefficient_vector(g.torus_rank, d, coeffs)
                })
                .collect()
        })
        .collect();
    AbelianSolution { degree: d, basis }
}

/// All degree-`d` tuples `(f_p)` with `(f_a - f_b) ∘ i_ker(label) = 0`
/// for every edge. Star edges impose nothing.
pub fn abelian_solution(g: &AbelianGkmGraph, d: u32) -> AbelianSolution {
    let mono_dim = monomial_basis(g.torus_rank, d).len();
    let unknowns = g.dots.len() * mono_dim;
    let rows = edge_constraint_rows(g, d, unknowns, mono_dim);
    let vectors = nullspace_with_cols(&rows, unknowns);
    solution_from_nullspace(g, d, mono_dim, vectors)
}

/// Graded dimensions of the graph algebra for `d = 0..=max_degree`.
pub fn abelian_hilbert(g: &AbelianGkmGraph, max_degree: u32) -> Vec<usize> {
    crate::map_degrees(max_degree as usize, |d| abelian_solution(g, d as u32).dim())
}

/// Action of a finite matrix group on the dots of a graph, compatible
/// with the edge structure.
#[derive(Debug, Clone)]
pub struct VertexGroupAction {
    pub group: FiniteMatrixGroup,
    /// `perms[w][p]` is the index of the image of dot `p` under element `w`.
    pub perms: Vec<Vec<usize>>,
}

impl VertexGroupAction {
    /// Builds the permutations of an orbit graph's dots from the matrix
    /// action on the orbit weights (dot `i` carries `weights[i]`).
    pub fn from_weights(
        group: FiniteMatrixGroup,
        weights: &[Weight],
    ) -> Result<VertexGroupAction, AbelianError> {
        let mut perms = Vec::with_capacity(group.order());
        for w in group.elements() {
            let mut perm = Vec::with_capacity(weights.len());
            for mu in weights {
                let image = Weight::new(w.apply(&mu.coords));
                let j = weights.iter().position(|p| *p == image).ok_or_else(|| {
                    AbelianError::IncompatibleAction(format!(
                        "image {} of {} is not a dot",
                        image, mu
                    ))
                })?;
                perm.push(j);
            }
            perms.push(perm);
        }
        Ok(VertexGroupAction { group, perms })
    }

    /// Builds the full permutation family from permutations of the
    /// generators alone, composing along the group's BFS provenance.
    pub fn from_generator_perms(
        group: FiniteMatrixGroup,
        generator_perms: &[Vec<usize>],
    ) -> Result<VertexGroupAction, AbelianError> {
        let gen_indices = group.generator_indices().to_vec();
        if generator_perms.len() != gen_indices.len() {
            return Err(AbelianError::IncompatibleAction(format!(
                "expected {} generator permutations, got {}",
                gen_indices.len(),
                generator_perms.len()
            )));
        }
        let n = generator_perms.first().map_or(0, |p| p.len());
        let mut perms: Vec<Option<Vec<usize>>> = vec![None; group.order()];
        perms[group.identity_index()] = Some((0..n).collect());
        // BFS order: parents are always resolved before children.
        for i in 0..group.order() {
            if perms[i].is_some() {
                continue;
            }
            let (parent, gen) = group
                .provenance(i)
                .expect("non-identity elements have provenance");
            let parent_perm = perms[parent].clone().ok_or_else(|| {
                AbelianError::IncompatibleAction("provenance out of order".into())
            })?;
            let gen_perm = &generator_perms[gen];
            if gen_perm.len() != n {
                return Err(AbelianError::IncompatibleAction(
                    "generator permutations have inconsistent lengths".into(),
                ));
            }
            // element = parent * gen acts by perm(parent) ∘ perm(gen)
            let composed: Vec<usize> = (0..n).map(|p| parent_perm[gen_perm[p]]).collect();
            perms[i] = Some(composed);
        }
        Ok(VertexGroupAction {
            group,
            perms: perms
                .into_iter()
                .map(|p| p.expect("all resolved"))
                .collect(),
        })
    }

    /// Permutations restricted to the generators, in generator order.
    pub fn generator_perms(&self) -> Vec<Vec<usize>> {
        self.group
            .generator_indices()
            .iter()
            .map(|&i| self.perms[i].clone())
            .collect()
    }

    /// Checks the action property and edge compatibility against `g`.
    pub fn validate(&self, g: &AbelianGkmGraph) -> Result<(), AbelianError> {
        let n = g.dots.len();
        if self.group.rank() != g.torus_rank {
            return Err(AbelianError::IncompatibleAction(format!(
                "group rank {} vs torus rank {}",
                self.group.rank(),
                g.torus_rank
            )));
        }
        if self.perms.len() != self.group.order() {
            return Err(AbelianError::IncompatibleAction(
                "one permutation per group element required".into(),
            ));
        }
        for perm in &self.perms {
            let mut seen = vec![false; n];
            if perm.len() != n {
                return Err(AbelianError::IncompatibleAction(
                    "permutation length".into(),
                ));
            }
            for &img in perm {
                if img >= n || seen[img] {
                    return Err(AbelianError::IncompatibleAction("not a permutation".into()));
                }
                seen[img] = true;
            }
        }
        // Action property over all pairs (group orders here are tiny).
        for (i, gi) in self.group.elements().iter().enumerate() {
            for (j, gj) in self.group.elements().iter().enumerate() {
                let k = self
                    .group
                    .index_of(&gi.compose(gj))
                    .expect("group is closed");
                for p in 0..n {
                    if self.perms[k][p] != self.perms[i][self.perms[j][p]] {
                        return Err(AbelianError::IncompatibleAction(
                            "permutations do not compose like the group".into(),
                        ));
                    }
                }
            }
        }
        // Edges map to edges. Labels are functionals, so they transform
        // contragrediently: the image of ker(c) under w is ker(c ∘ w^{-1}),
        // whose coordinate vector is transpose(w^{-1}) * c.
        for (wi, w) in self.group.elements().iter().enumerate() {
            let contragredient = w
                .inverse()
                .expect("group elements are invertible")
                .transpose();
            for e in &g.edges {
                let ia = self.perms[wi][e.a];
                let ib = self.perms[wi][e.b];
                let image_label = Weight::new(contragredient.apply(&e.label.coords));
                let image_line = crate::rat::primitive_integer_vector(&image_label.coords);
                let found = g.edges.iter().any(|f| {
                    ((f.a == ia && f.b == ib) || (f.a == ib && f.b == ia))
                        && crate::rat::primitive_integer_vector(&f.label.coords) == image_line
                });
                if !found {
                    return Err(AbelianError::IncompatibleAction(format!(
                        "edge {}-{} with label {} has no image edge",
                        g.dots[e.a], g.dots[e.b], e.label
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Dimension of the subspace of [`abelian_solution`] that additionally
/// satisfies `f_{w(p)} = f_p ∘ w^{-1}` for all group elements — the
/// Weyl-invariant part of the graph algebra.
pub fn invariant_dimension(
    g: &AbelianGkmGraph,
    action: &VertexGroupAction,
    d: u32,
) -> Result<usize, AbelianError> {
    Ok(invariant_solution(g, action, d)?.dim())
}

/// Basis of the invariant subspace; see [`invariant_dimension`].
pub fn invariant_solution(
    g: &AbelianGkmGraph,
    action: &VertexGroupAction,
    d: u32,
) -> Result<AbelianSolution, AbelianError> {
    action.validate(g)?;
    let mono_dim = monomial_basis(g.torus_rank, d).len();
    let unknowns = g.dots.len() * mono_dim;
    let mut rows = edge_constraint_rows(g, d, unknowns, mono_dim);
    for (wi, w) in action.group.elements().iter().enumerate() {
        if wi == action.group.identity_index() {
            continue;
        }
        let w_inv = w.inverse().expect("group elements are invertible");
        let pulled = pullback_rows(g.torus_rank, d, &w_inv);
        for p in 0..g.dots.len() {
            let wp = action.perms[wi][p];
            for t in 0..mono_dim {
                let mut row = vec![rat(0); unknowns];
                row[wp * mono_dim + t] = rat(1);
                for i in 0..mono_dim {
                    row[p * mono_dim + i] = &row[p * mono_dim + i] - &pulled[i][t];
                }
                rows.push(row);
            }
        }
    }
    let vectors = nullspace_with_cols(&rows, unknowns);
    Ok(solution_from_nullspace(g, d, mono_dim, vectors))
}

/// Graded dimensions of the invariant subalgebra for `d = 0..=max_degree`.
pub fn invariant_hilbert(
    g: &AbelianGkmGraph,
    action: &VertexGroupAction,
    max_degree: u32,
) -> Result<Vec<usize>, AbelianError> {
    action.validate(g)?;
    let dims = crate::map_degrees(max_degree as usize, |d| {
        invariant_dimension(g, action, d as u32)
    });
    dims.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::{build_root_system, direct_sum, Family};

    /// The double-edge graph with two stars: two dots, edge kernels
    /// span(1,1) and span(1,-1).
    fn gras_graph() -> AbelianGkmGraph {
        AbelianGkmGraph {
            torus_rank: 2,
            dots: vec!["p".into(), "q".into()],
            edges: vec![
                AbelianEdge {
                    a: 0,
                    b: 1,
                    label: Weight::from_ints(&[1, -1]),
                },
                AbelianEdge {
                    a: 0,
                    b: 1,
                    label: Weight::from_ints(&[1, 1]),
                },
            ],
            stars: vec!["s1".into(), "s2".into()],
            star_edges: vec![
                StarEdge {
                    dot: 0,
                    star: 0,
                    label: None,
                },
                StarEdge {
                    dot: 1,
                    star: 1,
                    label: None,
                },
            ],
        }
    }

    fn flag_graph() -> AbelianGkmGraph {
        let c2 = build_root_system(Family::C, 2).unwrap();
        build_orbit_graph(&c2, &Weight::from_ints(&[2, 1])).unwrap()
    }

    #[test]
    fn orbit_graph_shapes() {
        let b2 = build_root_system(Family::B, 2).unwrap();
        let small = build_orbit_graph(&b2, &Weight::from_ints(&[0, 1])).unwrap();
        assert_eq!(small.dots.len(), 4);
        assert_eq!(small.edges.len(), 6);
        let b2_flag = build_orbit_graph(&b2, &Weight::from_ints(&[2, 1])).unwrap();
        assert_eq!(b2_flag.dots.len(), 8);
        assert_eq!(b2_flag.edges.len(), 16);
        let flag = flag_graph();
        assert_eq!(flag.dots.len(), 8);
        assert_eq!(flag.edges.len(), 16);
        let g2 = build_root_system(Family::G, 2).unwrap();
        let k6 = build_orbit_graph(&g2, &Weight::from_ints(&[3, 2])).unwrap();
        assert_eq!(k6.dots.len(), 6);
        assert_eq!(k6.edges.len(), 15);
        assert!(build_orbit_graph(&b2, &Weight::zero(2)).is_err());
    }

    #[test]
    fn gras_low_degrees() {
        let g = gras_graph();
        assert_eq!(abelian_solution(&g, 0).dim(), 1);
        assert_eq!(abelian_solution(&g, 2).dim(), 4);
    }

    #[test]
    fn no_edges_means_free() {
        let g = AbelianGkmGraph {
            torus_rank: 2,
            dots: vec!["a".into(), "b".into(), "c".into()],
            edges: vec![],
            stars: vec![],
            star_edges: vec![],
        };
        for d in 0..4u32 {
            let mono = monomial_basis(2, d).len();
            assert_eq!(abelian_solution(&g, d).dim(), 3 * mono);
        }
    }

    #[test]
    fn gras_hilbert_series() {
        // Independent route: coefficients of (1 + q^2) / (1 - q)^2.
        assert_eq!(abelian_hilbert(&gras_graph(), 5), vec![1, 2, 4, 6, 8, 10]);
    }

    #[test]
    fn single_dot_free_ring() {
        let g = AbelianGkmGraph {
            torus_rank: 2,
            dots: vec!["pt".into()],
            edges: vec![],
            stars: vec![],
            star_edges: vec![],
        };
        assert_eq!(abelian_hilbert(&g, 3), vec![1, 2, 3, 4]);
    }

    #[test]
    fn flag_hilbert_series() {
        // Independent route: (1 + 2q + 2q^2 + 2q^3 + q^4) / (1 - q)^2.
        assert_eq!(abelian_hilbert(&flag_graph(), 3), vec![1, 4, 9, 16]);
    }

    #[test]
    fn solutions_satisfy_edge_constraints_exactly() {
        let g = gras_graph();
        for d in 0..=3u32 {
            for tuple in abelian_solution(&g, d).basis {
                let diff = tuple[0].sub(&tuple[1]);
                for e in &g.edges {
                    let ker = kernel_embedding(&e.label.coords).unwrap();
                    assert!(diff.pullback(&ker).unwrap().is_zero());
                }
            }
        }
    }

    fn sign_change_action(graph: &AbelianGkmGraph) -> VertexGroupAction {
        let a1 = build_root_system(Family::A, 1).unwrap();
        let a1a1 = direct_sum(&a1, &a1);
        let c2 = build_root_system(Family::C, 2).unwrap();
        let weights = weyl_group(&c2).orbit(&Weight::from_ints(&[2, 1]));
        assert_eq!(weights.len(), graph.dots.len());
        VertexGroupAction::from_weights(weyl_group(&a1a1), &weights).unwrap()
    }

    #[test]
    fn invariant_dims_under_sign_changes() {
        let flag = flag_graph();
        let action = sign_change_action(&flag);
        let dims = invariant_hilbert(&flag, &action, 5).unwrap();
        assert_eq!(dims, vec![1, 2, 4, 6, 8, 10]);
    }

    #[test]
    fn invariant_dims_trivial_group_match_plain() {
        let flag = flag_graph();
        let trivial = VertexGroupAction::from_weights(
            FiniteMatrixGroup::trivial(2),
            &weyl_group(&build_root_system(Family::C, 2).unwrap())
                .orbit(&Weight::from_ints(&[2, 1])),
        )
        .unwrap();
        for d in 0..=3u32 {
            assert_eq!(
                invariant_dimension(&flag, &trivial, d).unwrap(),
                abelian_solution(&flag, d).dim()
            );
        }
    }

    #[test]
    fn invariant_dims_never_exceed_plain_dims() {
        let flag = flag_graph();
        let action = sign_change_action(&flag);
        for d in 0..=4u32 {
            assert!(
                invariant_dimension(&flag, &action, d).unwrap() <= abelian_solution(&flag, d).dim()
            );
        }
    }

    #[test]
    fn invariant_dims_under_full_weyl() {
        // Full W(C2)-invariants of the flag algebra: the polynomial ring
        // S(t*) itself, dimensions d + 1.
        let flag = flag_graph();
        let c2 = build_root_system(Family::C, 2).unwrap();
        let weights = weyl_group(&c2).orbit(&Weight::from_ints(&[2, 1]));
        let action = VertexGroupAction::from_weights(weyl_group(&c2), &weights).unwrap();
        let dims = invariant_hilbert(&flag, &action, 3).unwrap();
        assert_eq!(dims, vec![1, 2, 3, 4]);
    }

    #[test]
    fn generator_perms_round_trip() {
        let flag = flag_graph();
        let action = sign_change_action(&flag);
        let rebuilt = VertexGroupAction::from_generator_perms(
            action.group.clone(),
            &action.generator_perms(),
        )
        .unwrap();
        assert_eq!(rebuilt.perms, action.perms);
        assert!(rebuilt.validate(&flag).is_ok());
    }

    #[test]
    fn incompatible_action_is_rejected() {
        // Rank mismatch between the group and the torus.
        let g = gras_graph();
        let rank1 = crate::group::enumerate_group(&[LinearMap::from_int_rows(&[&[-1]])]).unwrap();
        let bad_rank = VertexGroupAction {
            group: rank1,
            perms: vec![vec![0, 1], vec![1, 0]],
        };
        assert!(bad_rank.validate(&g).is_err());

        // Coordinate swap does not map the label (1,2) to any edge label.
        let mut skewed = g.clone();
        skewed.edges[1].label = Weight::from_ints(&[1, 2]);
        let swap = LinearMap::from_int_rows(&[&[0, 1], &[1, 0]]);
        let group = crate::group::enumerate_group(&[swap]).unwrap();
        let action = VertexGroupAction {
            group,
            perms: vec![vec![0, 1], vec![0, 1]],
        };
        assert!(action.validate(&skewed).is_err());

        // Non-permutation images are rejected outright.
        let neg = LinearMap::from_int_rows(&[&[-1, 0], &[0, -1]]);
        let sign = crate::group::enumerate_group(&[neg]).unwrap();
        let broken = VertexGroupAction {
            group: sign,
            perms: vec![vec![0, 1], vec![0, 0]],
        };
        assert!(broken.validate(&g).is_err());
    }

    #[test]
    fn star_removal_never_changes_dimensions() {
        let g = gras_graph();
        let bare = g.without_stars();
        for d in 0..=5u32 {
            assert_eq!(
                abelian_solution(&g, d).dim(),
                abelian_solution(&bare, d).dim()
            );
        }
    }

    #[test]
    fn degree_zero_counts_components() {
        let mut g = gras_graph();
        assert_eq!(abelian_solution(&g, 0).dim(), 1);
        assert_eq!(g.dot_components(), 1);
        g.dots.push("isolated".into());
        assert_eq!(abelian_solution(&g, 0).dim(), 2);
        assert_eq!(g.dot_components(), 2);
    }
}
