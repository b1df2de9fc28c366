//! Root systems of the compact classical groups at small rank, plus G2.
//!
//! Families B, C, D are realized in the orthonormal basis of `R^rank`
//! with integer-coordinate roots and the identity Gram matrix. Families
//! A and G are realized in the basis of their simple roots, with the
//! symmetrized Cartan matrix as Gram matrix, which keeps every root at
//! integer coordinates. For G2 the short simple root is the first basis
//! vector; this one realization is used by every fixture.

use std::fmt;

use num::Zero;
use thiserror::Error;

use crate::linalg::LinearMap;
use crate::rat::{format_rat, rat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("unsupported root system {family:?} of rank {rank}")]
    Unsupported { family: Family, rank: usize },
    #[error("{0} is not a root of this system")]
    NotARoot(String),
}

/// Vector in the torus coordinate space (a root, an edge label, an orbit
/// point).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight::new(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight::new(vec![rat(0); rank])
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn neg(&self) -> Weight {
        Weight::new(self.coords.iter().map(|c| -c).collect())
    }

    /// Sign-canonical representative of `{w, -w}`: first nonzero
    /// coordinate positive.
    pub fn canonical_sign(&self) -> Weight {
        match self.coords.iter().find(|c| !c.is_zero()) {
            Some(c) if *c < rat(0) => self.neg(),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.coords.iter().map(format_rat).collect();
        write!(f, "({})", cells.join(","))
    }
}

/// Supported families of irreducible root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G => "G",
        };
        write!(f, "{}", s)
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G" => Ok(Family::G),
            other => Err(format!("unknown root-system family {:?}", other)),
        }
    }
}

/// A finite root system with a fixed rational realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub rank: usize,
    pub roots: Vec<Weight>,
    pub simple_roots: Vec<Weight>,
    /// Symmetric positive-definite Gram matrix of the invariant inner
    /// product in these coordinates.
    pub gram: LinearMap,
}

impl RootSystem {
    /// Rank-`k` torus: no roots, identity Gram. Useful as a direct-sum
    /// factor and for trivial-Weyl group descriptors.
    pub fn torus(rank: usize) -> Self {
        RootSystem {
            rank,
            roots: Vec::new(),
            simple_roots: Vec::new(),
            gram: LinearMap::identity(rank),
        }
    }

    pub fn inner(&self, v: &Weight, w: &Weight) -> Rat {
        let gw = self.gram.apply(&w.coords);
        v.coords.iter().zip(&gw).fold(rat(0), |s, (a, b)| s + a * b)
    }

    pub fn is_root(&self, alpha: &Weight) -> bool {
        self.roots.contains(alpha)
    }

    /// Reflection in the hyperplane orthogonal to the root `alpha`:
    /// `s(v) = v - 2 (v,alpha)/(alpha,alpha) alpha`. Involutive, fixes
    /// `ker alpha` pointwise.
    pub fn reflection(&self, alpha: &Weight) -> Result<LinearMap, RootError> {
        if !self.is_root(alpha) {
            return Err(RootError::NotARoot(alpha.to_string()));
        }
        Ok(self.reflection_unchecked(alpha))
    }

    /// Reflection matrix for any nonzero vector, without requiring it to
    /// be a root of the system.
    pub fn reflection_unchecked(&self, alpha: &Weight) -> LinearMap {
        assert!(!alpha.is_zero(), "reflection in the zero vector");
        let norm = self.inner(alpha, alpha);
        let galpha = self.gram.apply(&alpha.coords); // (e_j, alpha) = (G alpha)_j
        let n = self.rank;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let mut e = if i == j { rat(1) } else { rat(0) };
                e -= rat(2) * &alpha.coords[i] * &galpha[j] / &norm;
                row.push(e);
            }
            rows.push(row);
        }
        LinearMap::from_rows(&rows)
    }

    /// One reflection per simple root; generators of the Weyl group.
    pub fn simple_reflections(&self) -> Vec<LinearMap> {
        self.simple_roots
            .iter()
            .map(|alpha| self.reflection_unchecked(alpha))
            .collect()
    }

    /// Positive roots: canonical-sign representatives, one per root line.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let mut out: Vec<Weight> = Vec::new();
        for r in &self.roots {
            let c = r.canonical_sign();
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }
}

/// Standard realization of the supported `(family, rank)` pairs.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem, RootError> {
    let unsupported = RootError::Unsupported { family, rank };
    match family {
        Family::A => {
            if !(1..=4).contains(&rank) {
                return Err(unsupported);
            }
            Ok(type_a(rank))
        }
        Family::B => {
            if !(1..=3).contains(&rank) {
                return Err(unsupported);
            }
            Ok(type_bc(rank, false))
        }
        Family::C => {
            if !(1..=3).contains(&rank) {
                return Err(unsupported);
            }
            Ok(type_bc(rank, true))
        }
        Family::D => {
            if !(2..=4).contains(&rank) {
                return Err(unsupported);
            }
            Ok(type_d(rank))
        }
        Family::G => {
            if rank != 2 {
                return Err(unsupported);
            }
            Ok(type_g2())
        }
    }
}

fn unit(rank: usize, i: usize, scale: i64) -> Weight {
    let mut coords = vec![0i64; rank];
    coords[i] = scale;
    Weight::from_ints(&coords)
}

fn type_a(n: usize) -> RootSystem {
    // Simple-root coordinates; positive roots are consecutive sums
    // alpha_i + ... + alpha_j.
    let mut roots = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut coords = vec![0i64; n];
            for k in i..=j {
                coords[k] = 1;
            }
            let w = Weight::from_ints(&coords);
            roots.push(w.neg());
            roots.push(w);
        }
    }
    roots.sort();
    let simple_roots = (0..n).map(|i| unit(n, i, 1)).collect();
    let mut gram_rows = Vec::new();
    for i in 0..n {
        let mut row = vec![rat(0); n];
        row[i] = rat(2);
        if i > 0 {
            row[i - 1] = rat(-1);
        }
        if i + 1 < n {
            row[i + 1] = rat(-1);
        }
        gram_rows.push(row);
    }
    RootSystem {
        rank: n,
        roots,
        simple_roots,
        gram: LinearMap::from_rows(&gram_rows),
    }
}

fn type_bc(n: usize, long_axes: bool) -> RootSystem {
    // B_n: ±e_i and ±e_i±e_j;  C_n: ±2e_i and ±e_i±e_j.
    let axis_scale = if long_axes { 2 } else { 1 };
    let mut roots = Vec::new();
    for i in 0..n {
        roots.push(unit(n, i, axis_scale));
        roots.push(unit(n, i, -axis_scale));
    }
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut coords = vec![0i64; n];
                coords[i] = si;
                coords[j] = sj;
                roots.push(Weight::from_ints(&coords));
            }
        }
    }
    roots.sort();
    let mut simple_roots: Vec<Weight> = (0..n.saturating_sub(1))
        .map(|i| {
            let mut coords = vec![0i64; n];
            coords[i] = 1;
            coords[i + 1] = -1;
            Weight::from_ints(&coords)
        })
        .collect();
    simple_roots.push(unit(n, n - 1, axis_scale));
    RootSystem {
        rank: n,
        roots,
        simple_roots,
        gram: LinearMap::identity(n),
    }
}

fn type_d(n: usize) -> RootSystem {
    let mut roots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut coords = vec![0i64; n];
                coords[i] = si;
                coords[j] = sj;
                roots.push(Weight::from_ints(&coords));
            }
        }
    }
    roots.sort();
    let mut simple_roots: Vec<Weight> = (0..n - 1)
        .map(|i| {
            let mut coords = vec![0i64; n];
            coords[i] = 1;
            coords[i + 1] = -1;
            Weight::from_ints(&coords)
        })
        .collect();
    let mut last = vec![0i64; n];
    last[n - 2] = 1;
    last[n - 1] = 1;
    simple_roots.push(Weight::from_ints(&last));
    RootSystem {
        rank: n,
        roots,
        simple_roots,
        gram: LinearMap::identity(n),
    }
}

fn type_g2() -> RootSystem {
    // Simple-root coordinates, alpha1 short, alpha2 long:
    // short ±(1,0), ±(1,1), ±(2,1); long ±(0,1), ±(3,1), ±(3,2).
    let positives = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]];
    let mut roots = Vec::new();
    for p in positives {
        let w = Weight::from_ints(&p);
        roots.push(w.neg());
        roots.push(w);
    }
    roots.sort();
    let simple_roots = vec![Weight::from_ints(&[1, 0]), Weight::from_ints(&[0, 1])];
    let gram = LinearMap::from_int_rows(&[&[2, -3], &[-3, 6]]);
    RootSystem {
        rank: 2,
        roots,
        simple_roots,
        gram,
    }
}

/// Direct sum: rank adds, each summand's roots sit in complementary
/// coordinates, Gram becomes block diagonal.
pub fn direct_sum(a: &RootSystem, b: &RootSystem) -> RootSystem {
    let rank = a.rank + b.rank;
    let pad_left = |w: &Weight| {
        let mut coords = w.coords.clone();
        coords.extend(vec![rat(0); b.rank]);
        Weight::new(coords)
    };
    let pad_right = |w: &Weight| {
        let mut coords = vec![rat(0); a.rank];
        coords.extend(w.coords.clone());
        Weight::new(coords)
    };
    let mut roots: Vec<Weight> = a.roots.iter().map(pad_left).collect();
    roots.extend(b.roots.iter().map(pad_right));
    roots.sort();
    let mut simple_roots: Vec<Weight> = a.simple_roots.iter().map(pad_left).collect();
    simple_roots.extend(b.simple_roots.iter().map(pad_right));
    let mut gram_rows = vec![vec![rat(0); rank]; rank];
    for i in 0..a.rank {
        for j in 0..a.rank {
            gram_rows[i][j] = a.gram.entry(i, j).clone();
        }
    }
    for i in 0..b.rank {
        for j in 0..b.rank {
            gram_rows[a.rank + i][a.rank + j] = b.gram.entry(i, j).clone();
        }
    }
    RootSystem {
        rank,
        roots,
        simple_roots,
        gram: LinearMap::from_rows(&gram_rows),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        assert_eq!(build_root_system(Family::B, 2).unwrap().roots.len(), 8);
        assert_eq!(build_root_system(Family::G, 2).unwrap().roots.len(), 12);
        assert_eq!(build_root_system(Family::A, 1).unwrap().roots.len(), 2);
        assert_eq!(build_root_system(Family::C, 2).unwrap().roots.len(), 8);
        assert_eq!(build_root_system(Family::A, 2).unwrap().roots.len(), 6);
        assert_eq!(build_root_system(Family::D, 4).unwrap().roots.len(), 24);
        assert_eq!(build_root_system(Family::B, 3).unwrap().roots.len(), 18);
    }

    #[test]
    fn unsupported_ranks_error() {
        assert!(build_root_system(Family::A, 5).is_err());
        assert!(build_root_system(Family::G, 3).is_err());
        assert!(build_root_system(Family::B, 4).is_err());
        assert!(build_root_system(Family::D, 1).is_err());
    }

    #[test]
    fn direct_sums() {
        let a1 = build_root_system(Family::A, 1).unwrap();
        let sum = direct_sum(&a1, &a1);
        assert_eq!(sum.rank, 2);
        assert_eq!(sum.roots.len(), 4);
        let triple = direct_sum(&sum, &a1);
        assert_eq!(triple.rank, 3);
        assert_eq!(triple.roots.len(), 6);
        let padded = direct_sum(&a1, &RootSystem::torus(2));
        assert_eq!(padded.rank, 3);
        assert_eq!(padded.roots.len(), 2);
        assert_eq!(padded.roots[1], Weight::from_ints(&[1, 0, 0]));
    }

    #[test]
    fn reflection_negates_root_and_fixes_wall() {
        let b2 = build_root_system(Family::B, 2).unwrap();
        let alpha = Weight::from_ints(&[1, 1]);
        let s = b2.reflection(&alpha).unwrap();
        assert_eq!(s.apply(&alpha.coords), alpha.neg().coords);
        // (1,-1) is orthogonal to (1,1)
        let wall = Weight::from_ints(&[1, -1]);
        assert_eq!(s.apply(&wall.coords), wall.coords);
        assert!(b2.reflection(&Weight::from_ints(&[5, 7])).is_err());
    }

    #[test]
    fn g2_simple_reflection_product_has_order_six() {
        let g2 = build_root_system(Family::G, 2).unwrap();
        let refs = g2.simple_reflections();
        let rot = refs[0].compose(&refs[1]);
        let mut power = rot.clone();
        let mut order = 1;
        while power != LinearMap::identity(2) {
            power = power.compose(&rot);
            order += 1;
            assert!(order <= 12);
        }
        assert_eq!(order, 6);
    }

    #[test]
    fn g2_root_lengths_split_six_six() {
        let g2 = build_root_system(Family::G, 2).unwrap();
        let short: Vec<_> = g2
            .roots
            .iter()
            .filter(|r| g2.inner(r, r) == rat(2))
            .collect();
        let long: Vec<_> = g2
            .roots
            .iter()
            .filter(|r| g2.inner(r, r) == rat(6))
            .collect();
        assert_eq!(short.len(), 6);
        assert_eq!(long.len(), 6);
    }

    #[test]
    fn positive_roots_one_per_line() {
        let b2 = build_root_system(Family::B, 2).unwrap();
        assert_eq!(b2.positive_roots().len(), 4);
        let g2 = build_root_system(Family::G, 2).unwrap();
        assert_eq!(g2.positive_roots().len(), 6);
    }
}
