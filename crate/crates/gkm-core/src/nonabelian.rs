//! GKM graphs for actions of non-abelian compact groups, and their
//! constraint solver.
//!
//! A graph consists of circles (components of the maximal-rank orbit
//! stratum), dots inside circles labeled by group descriptors, arrows
//! from each circle's representative dot to its other dots carrying the
//! identifying linear isomorphism, stars labeled by group descriptors,
//! and edges. An edge carries an abstract `k`-dimensional edge space with
//! one explicit embedding into each endpoint's torus coordinates.
//!
//! The degree-`d` slice of the graph algebra consists of tuples — one
//! Weyl-invariant polynomial per circle, in the representative's
//! coordinates — subject to, per dot-dot edge,
//! `f_A ∘ h_Aa^{-1} ∘ i_a = f_B ∘ h_Bb^{-1} ∘ i_b` on the edge space, and
//! per dot-star edge the condition that the restricted polynomial is the
//! restriction of some invariant of the star's group. Arrows on
//! representatives are implicitly the identity.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::group::GroupDescriptor;
use crate::linalg::{membership_constraints, nullspace_with_cols, LinearMap};
use crate::poly::{monomial_basis, GradedSubspace, Polynomial};
use crate::rat::{rat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NonAbelianError {
    #[error("invalid graph:\n{}", .0.join("\n"))]
    Invalid(Vec<String>),
    #[error("shape error: {0}")]
    Shape(String),
}

/// One circle: a maximal-rank orbit component. `representative` indexes
/// into the graph's dot list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    pub id: String,
    pub representative: usize,
}

/// A dot inside a circle, labeled with the isotropy group at that point.
/// Non-representative dots carry the arrow from the representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dot {
    pub id: String,
    pub circle: usize,
    pub group: GroupDescriptor,
    pub arrow: Option<LinearMap>,
}

/// A star outside the circles: a singular orbit of non-maximal rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star {
    pub id: String,
    pub group: GroupDescriptor,
}

/// Second endpoint of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeEnd {
    Dot(usize),
    Star(usize),
}

impl fmt::Display for EdgeEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeEnd::Dot(i) => write!(f, "dot #{}", i),
            EdgeEnd::Star(i) => write!(f, "star #{}", i),
        }
    }
}

/// An edge with an abstract rank-`k` edge space and its two embeddings
/// into the endpoint torus coordinate spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkmEdge {
    pub id: String,
    pub a: usize,
    pub b: EdgeEnd,
    pub rank: usize,
    pub embed_a: LinearMap,
    pub embed_b: LinearMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonAbelianGkmGraph {
    pub circles: Vec<Circle>,
    pub dots: Vec<Dot>,
    pub stars: Vec<Star>,
    pub edges: Vec<GkmEdge>,
}

impl NonAbelianGkmGraph {
    /// Referential integrity, the arrow discipline (no arrow on a
    /// representative, exactly one invertible arrow on every other dot),
    /// embedding ranks and descriptor consistency. Collects every
    /// violation instead of stopping at the first.
    pub fn validate(&self) -> Result<(), NonAbelianError> {
        let mut problems = Vec::new();
        for (ci, c) in self.circles.iter().enumerate() {
            match self.dots.get(c.representative) {
                None => problems.push(format!(
                    "circle {:?} references missing representative dot #{}",
                    c.id, c.representative
                )),
                Some(rep) => {
                    if rep.circle != ci {
                        problems.push(format!(
                            "representative of circle {:?} lies in another circle",
                            c.id
                        ));
                    }
                }
            }
        }
        for (di, d) in self.dots.iter().enumerate() {
            if d.group.weyl.rank() != d.group.torus_rank {
                problems.push(format!("dot {:?} has a Weyl group of the wrong rank", d.id));
            }
            match self.circles.get(d.circle) {
                None => {
                    problems.push(format!(
                        "dot {:?} references missing circle #{}",
                        d.id, d.circle
                    ));
                    continue;
                }
                Some(c) => {
                    let is_rep = c.representative == di;
                    match (&d.arrow, is_rep) {
                        (Some(_), true) => {
                            problems.push(format!("arrow on representative dot {:?}", d.id))
                        }
                        (None, false) => {
                            problems.push(format!("non-representative dot {:?} has no arrow", d.id))
                        }
                        (Some(h), false) => {
                            let rep_rank = self.dots[c.representative].group.torus_rank;
                            if h.rows() != d.group.torus_rank || h.cols() != rep_rank {
                                problems.push(format!(
                                    "arrow of dot {:?} has shape {}x{}, expected {}x{}",
                                    d.id,
                                    h.rows(),
                                    h.cols(),
                                    d.group.torus_rank,
                                    rep_rank
                                ));
                            } else if !h.is_invertible() {
                                problems.push(format!("arrow of dot {:?} is singular", d.id));
                            }
                        }
                        (None, true) => {}
                    }
                }
            }
        }
        for s in &self.stars {
            if s.group.weyl.rank() != s.group.torus_rank {
                problems.push(format!(
                    "star {:?} has a Weyl group of the wrong rank",
                    s.id
                ));
            }
        }
        for e in &self.edges {
            let rank_a = match self.dots.get(e.a) {
                None => {
                    problems.push(format!("edge {:?} references missing dot #{}", e.id, e.a));
                    continue;
                }
                Some(d) => d.group.torus_rank,
            };
            let rank_b = match e.b {
                EdgeEnd::Dot(i) => match self.dots.get(i) {
                    None => {
                        problems.push(format!("edge {:?} references missing dot #{}", e.id, i));
                        continue;
                    }
                    Some(d) => d.group.torus_rank,
                },
                EdgeEnd::Star(i) => match self.stars.get(i) {
                    None => {
                        problems.push(format!("edge {:?} references missing star #{}", e.id, i));
                        continue;
                    }
                    Some(s) => s.group.torus_rank,
                },
            };
            if e.rank > rank_a.min(rank_b) {
                problems.push(format!(
                    "edge {:?} has rank {} exceeding an endpoint rank",
                    e.id, e.rank
                ));
            }
            for (name, embed, endpoint_rank) in [
                ("embedA", &e.embed_a, rank_a),
                ("embedB", &e.embed_b, rank_b),
            ] {
                if embed.rows() != endpoint_rank || embed.cols() != e.rank {
                    problems.push(format!(
                        "edge {:?} {} has shape {}x{}, expected {}x{}",
                        e.id,
                        name,
                        embed.rows(),
                        embed.cols(),
                        endpoint_rank,
                        e.rank
                    ));
                } else if embed.rank() != e.rank {
                    problems.push(format!(
                        "edge {:?} {} does not have full column rank",
                        e.id, name
                    ));
                }
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(NonAbelianError::Invalid(problems))
        }
    }

    pub fn representative_of(&self, circle: usize) -> &Dot {
        &self.dots[self.circles[circle].representative]
    }

    /// Map `h_Aa^{-1}` from the dot's coordinates back to its circle
    /// representative's coordinates (the identity on representatives).
    fn to_representative(&self, dot: usize) -> LinearMap {
        match &self.dots[dot].arrow {
            Some(h) => h.inverse().expect("validated arrows are invertible"),
            None => LinearMap::identity(self.dots[dot].group.torus_rank),
        }
    }

    /// The same graph with the given dot as its circle's representative;
    /// arrows are recomposed accordingly. Graded dimensions are invariant
    /// under this change when dot descriptors are conjugation-consistent.
    pub fn with_representative(&self, circle: usize, new_rep: usize) -> NonAbelianGkmGraph {
        assert_eq!(
            self.dots[new_rep].circle, circle,
            "dot lies in another circle"
        );
        let old_rep = self.circles[circle].representative;
        if old_rep == new_rep {
            return self.clone();
        }
        let mut out = self.clone();
        let to_new = self.dots[new_rep]
            .arrow
            .clone()
            .expect("non-representative dot");
        let to_new_inv = to_new.inverse().expect("validated arrows are invertible");
        for (di, dot) in out.dots.iter_mut().enumerate() {
            if dot.circle != circle {
                continue;
            }
            if di == new_rep {
                dot.arrow = None;
            } else if di == old_rep {
                dot.arrow = Some(to_new_inv.clone());
            } else {
                let h = dot.arrow.as_ref().expect("non-representative dot");
                dot.arrow = Some(h.compose(&to_new_inv));
            }
        }
        out.circles[circle].representative = new_rep;
        out
    }

    /// Connected components of the circle graph spanned by dot-dot edges.
    pub fn circle_components(&self) -> usize {
        let n = self.circles.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for e in &self.edges {
            if let EdgeEnd::Dot(b) = e.b {
                let ca = self.dots[e.a].circle;
                let cb = self.dots[b].circle;
                let (ra, rb) = (find(&mut parent, ca), find(&mut parent, cb));
                parent[ra] = rb;
            }
        }
        (0..n)
            .map(|i| find(&mut parent, i))
            .collect::<BTreeSet<_>>()
            .len()
    }
}

/// Basis of the degree-`d` slice: one invariant polynomial per circle, in
/// that circle's representative coordinates.
#[derive(Debug, Clone)]
pub struct NonAbelianSolution {
    pub degree: u32,
    pub basis: Vec<Vec<Polynomial>>,
}

impl NonAbelianSolution {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Degree-`d` restrictions of the star group's invariants to the edge
/// space: `{ g ∘ embed_star : g invariant }` as a subspace of the
/// `k`-variable polynomials.
pub fn star_image_basis(
    star: &Star,
    embed_star: &LinearMap,
    d: u32,
) -> Result<GradedSubspace, NonAbelianError> {
    if embed_star.rows() != star.group.torus_rank {
        return Err(NonAbelianError::Shape(format!(
            "star embedding has {} rows, star torus rank is {}",
            embed_star.rows(),
            star.group.torus_rank
        )));
    }
    if embed_star.rank() != embed_star.cols() {
        return Err(NonAbelianError::Shape(
            "star embedding does not have full column rank".into(),
        ));
    }
    let invariants = star.group.weyl.invariant_basis(d);
    let k = embed_star.cols();
    // Restriction can collapse invariants; keep an independent subset.
    let mut picked = Vec::new();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for b in &invariants.basis {
        let restricted = b.pullback(embed_star).expect("shape checked");
        if restricted.is_zero() {
            continue;
        }
        rows.push(restricted.coefficient_vector(d));
        if crate::linalg::rank(&rows) == rows.len() {
            picked.push(restricted);
        } else {
            rows.pop();
        }
    }
    GradedSubspace::new(d, k, picked).map_err(|e| NonAbelianError::Shape(e.to_string()))
}

struct CircleData {
    offset: usize,
    invariants: GradedSubspace,
}

/// Degree-`d` solutions of the graph's edge relations over the circles'
/// invariant rings.
pub fn nonabelian_solution(
    g: &NonAbelianGkmGraph,
    d: u32,
) -> Result<NonAbelianSolution, NonAbelianError> {
    g.validate()?;
    let mut circles = Vec::with_capacity(g.circles.len());
    let mut offset = 0;
    for ci in 0..g.circles.len() {
        let rep = g.representative_of(ci);
        let invariants = rep.group.weyl.invariant_basis(d);
        let dim = invariants.dim();
        circles.push(CircleData { offset, invariants });
        offset += dim;
    }
    let unknowns = offset;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for e in &g.edges {
        let circle_a = g.dots[e.a].circle;
        // Coefficient matrix of f_A ∘ h^{-1} ∘ i_a over the edge-space
        // monomials, one row per invariant basis element.
        let map_a = g.to_representative(e.a).compose(&e.embed_a);
        let pulled_a = pullback_basis_rows(&circles[circle_a].invariants, &map_a, d);
        let target_dim = monomial_basis(e.rank, d).len();
        match e.b {
            EdgeEnd::Dot(b) => {
                let circle_b = g.dots[b].circle;
                let map_b = g.to_representative(b).compose(&e.embed_b);
                let pulled_b = pullback_basis_rows(&circles[circle_b].invariants, &map_b, d);
                for t in 0..target_dim {
                    let mut row = vec![rat(0); unknowns];
                    for (i, p) in pulled_a.iter().enumerate() {
                        let idx = circles[circle_a].offset + i;
                        row[idx] = &row[idx] + &p[t];
                    }
                    for (j, p) in pulled_b.iter().enumerate() {
                        let idx = circles[circle_b].offset + j;
                        row[idx] = &row[idx] - &p[t];
                    }
                    rows.push(row);
                }
            }
            EdgeEnd::Star(s) => {
                let image = star_image_basis(&g.stars[s], &e.embed_b, d)?;
                let constraints = membership_constraints(&image);
                for c in &constraints {
                    let mut row = vec![rat(0); unknowns];
                    for (i, p) in pulled_a.iter().enumerate() {
                        let mut acc = rat(0);
                        for t in 0..target_dim {
                            acc += &c[t] * &p[t];
                        }
                        row[circles[circle_a].offset + i] = acc;
                    }
                    rows.push(row);
                }
            }
        }
    }
    let vectors = nullspace_with_cols(&rows, unknowns);
    let basis = vectors
        .into_iter()
        .map(|v| {
            circles
                .iter()
                .map(|c| {
                    let mut f = Polynomial::zero(c.invariants.nvars);
                    for (i, b) in c.invariants.basis.iter().enumerate() {
                        f = f.add(&b.scale(&v[c.offset + i]));
                    }
                    f
                })
                .collect()
        })
        .collect();
    Ok(NonAbelianSolution { degree: d, basis })
}

fn pullback_basis_rows(space: &GradedSubspace, map: &LinearMap, d: u32) -> Vec<Vec<Rat>> {
    space
        .basis
        .iter()
        .map(|b| {
            b.pullback(map)
                .expect("validated shapes")
                .coefficient_vector(d)
        })
        .collect()
}

/// Graded dimensions for `d = 0..=max_degree`.
pub fn nonabelian_hilbert(
    g: &NonAbelianGkmGraph,
    max_degree: u32,
) -> Result<Vec<usize>, NonAbelianError> {
    g.validate()?;
    let dims = crate::map_degrees(max_degree as usize, |d| {
        nonabelian_solution(g, d as u32).map(|s| s.dim())
    });
    dims.into_iter().collect()
}

/// GKM graph of a cohomogeneity-one action with group diagram
/// `G ⊃ K+, K- ⊃ H`: a single edge of rank `H.torus_rank`. When both
/// sides have maximal rank the edge joins two one-dot circles; otherwise
/// the minus side becomes a star.
pub fn cohomogeneity_one_graph(
    k_plus: &GroupDescriptor,
    k_minus: &GroupDescriptor,
    h: &GroupDescriptor,
    embed_plus: &LinearMap,
    embed_minus: &LinearMap,
    both_max_rank: bool,
) -> Result<NonAbelianGkmGraph, NonAbelianError> {
    for (name, embed, group) in [
        ("embedPlus", embed_plus, k_plus),
        ("embedMinus", embed_minus, k_minus),
    ] {
        if embed.rows() != group.torus_rank || embed.cols() != h.torus_rank {
            return Err(NonAbelianError::Shape(format!(
                "{} has shape {}x{}, expected {}x{}",
                name,
                embed.rows(),
                embed.cols(),
                group.torus_rank,
                h.torus_rank
            )));
        }
        if embed.rank() != h.torus_rank {
            return Err(NonAbelianError::Shape(format!(
                "{} does not have full column rank",
                name
            )));
        }
    }
    let graph = if both_max_rank {
        NonAbelianGkmGraph {
            circles: vec![
                Circle {
                    id: "plus".into(),
                    representative: 0,
                },
                Circle {
                    id: "minus".into(),
                    representative: 1,
                },
            ],
            dots: vec![
                Dot {
                    id: "p+".into(),
                    circle: 0,
                    group: k_plus.clone(),
                    arrow: None,
                },
                Dot {
                    id: "p-".into(),
                    circle: 1,
                    group: k_minus.clone(),
                    arrow: None,
                },
            ],
            stars: vec![],
            edges: vec![GkmEdge {
                id: "segment".into(),
                a: 0,
                b: EdgeEnd::Dot(1),
                rank: h.torus_rank,
                embed_a: embed_plus.clone(),
                embed_b: embed_minus.clone(),
            }],
        }
    } else {
        NonAbelianGkmGraph {
            circles: vec![Circle {
                id: "plus".into(),
                representative: 0,
            }],
            dots: vec![Dot {
                id: "p+".into(),
                circle: 0,
                group: k_plus.clone(),
                arrow: None,
            }],
            stars: vec![Star {
                id: "minus".into(),
                group: k_minus.clone(),
            }],
            edges: vec![GkmEdge {
                id: "segment".into(),
                a: 0,
                b: EdgeEnd::Star(0),
                rank: h.torus_rank,
                embed_a: embed_plus.clone(),
                embed_b: embed_minus.clone(),
            }],
        }
    };
    graph.validate()?;
    Ok(graph)
}

/// Multiplies the Hilbert series by `prod (1 - q^b)` over the base
/// degrees and checks that every coefficient through degree
/// `D - max(base)` is non-negative — the numeric consequence of the
/// graded algebra being a free module over a polynomial base with
/// generators in those degrees. Returns the flag and the quotient
/// coefficients through that degree.
pub fn freeness_check(hilbert: &[usize], base_degrees: &[u32]) -> (bool, Vec<i64>) {
    let top = hilbert.len().saturating_sub(1);
    let mut series: Vec<i64> = hilbert.iter().map(|&x| x as i64).collect();
    for &b in base_degrees {
        let b = b as usize;
        let mut next = series.clone();
        for i in b..=top {
            next[i] -= series[i - b];
        }
        series = next;
    }
    let max_base = base_degrees.iter().max().copied().unwrap_or(0) as usize;
    let keep = top.saturating_sub(max_base);
    let quotient: Vec<i64> = series[..=keep].to_vec();
    (quotient.iter().all(|&c| c >= 0), quotient)
}
