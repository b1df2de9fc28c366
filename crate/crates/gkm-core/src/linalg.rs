//! Exact rational linear algebra.
//!
//! Solver matrices are plain `Vec<Vec<Rat>>` rows; semantic maps (Weyl
//! elements, arrows, embeddings) are [`LinearMap`]s. Elimination is
//! fraction-free in the Bareiss style: rows are scaled to integers first
//! and all intermediate divisions are exact, which keeps coefficient
//! growth polynomial instead of exponential.

use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

use crate::poly::GradedSubspace;
use crate::rat::{rat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
}

/// Dense rational matrix viewed as a linear map `Q^cols -> Q^rows`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>, // row-major
}

impl LinearMap {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        LinearMap {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        LinearMap::new(r, c, rows.concat())
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let converted: Vec<Vec<Rat>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| rat(x)).collect())
            .collect();
        LinearMap::from_rows(&converted)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![rat(0); n * n];
        for i in 0..n {
            entries[i * n + i] = rat(1);
        }
        LinearMap {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            entries: vec![rat(0); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Matrix product `self * rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, rhs.rows, "composition shape mismatch");
        let mut entries = vec![rat(0); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * rhs.entry(k, j);
                    entries[i * rhs.cols + j] = &entries[i * rhs.cols + j] + &prod;
                }
            }
        }
        LinearMap::new(self.rows, rhs.cols, entries)
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(rat(0), |acc, (a, x)| acc + a * x)
            })
            .collect()
    }

    pub fn scale(&self, c: &Rat) -> LinearMap {
        LinearMap::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| e * c).collect(),
        )
    }

    pub fn transpose(&self) -> LinearMap {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.entry(i, j).clone());
            }
        }
        LinearMap::new(self.cols, self.rows, entries)
    }

    /// Exact inverse via Gauss-Jordan; `Err(Singular)` if not invertible.
    pub fn inverse(&self) -> Result<LinearMap, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape(format!(
                "inverse of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = LinearMap::identity(n).to_rows();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(LinalgError::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] = &a[col][j] / &p;
                inv[col][j] = &inv[col][j] / &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                    inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                }
            }
        }
        Ok(LinearMap::from_rows(&inv))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && rank(&self.to_rows()) == self.rows
    }

    pub fn rank(&self) -> usize {
        rank(&self.to_rows())
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = self.row(i).iter().map(crate::rat::format_rat).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Scales each row to a primitive integer vector; zero rows are dropped.
fn integer_rows(a: &[Vec<Rat>]) -> Vec<Vec<BigInt>> {
    a.iter()
        .filter_map(|row| crate::rat::primitive_integer_vector(row))
        .collect()
}

/// Fraction-free row echelon reduction (Bareiss). Returns the echelon
/// matrix together with its pivot columns.
fn bareiss_echelon(mut m: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..cols {
        if row >= m.len() {
            break;
        }
        let Some(pivot_row) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot_row);
        let pivot = m[row][col].clone();
        for r in row + 1..m.len() {
            let factor = m[r][col].clone();
            for c in 0..cols {
                let val = &m[r][c] * &pivot - &factor * &m[row][c];
                let (q, rem) = val.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[r][c] = q;
            }
        }
        prev = pivot;
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    (m, pivots)
}

/// Rank of a rational matrix.
pub fn rank(a: &[Vec<Rat>]) -> usize {
    let rows = integer_rows(a);
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    bareiss_echelon(rows, cols).1.len()
}

/// Basis of `{x : A x = 0}` via fraction-free elimination. Each basis
/// vector is a primitive integer vector (as rationals); the list is empty
/// exactly when the kernel is trivial. `cols` must be supplied so that
/// matrices with no rows still know their column count.
pub fn nullspace_with_cols(a: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    debug_assert!(a.iter().all(|row| row.len() == cols), "ragged rows");
    let rows = integer_rows(a);
    let (ech, pivots) = bareiss_echelon(rows, cols);
    let pivot_set: Vec<usize> = pivots.clone();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut x = vec![rat(0); cols];
        x[fc] = rat(1);
        // Back-substitute pivots from the bottom up.
        for (i, &pc) in pivot_set.iter().enumerate().rev() {
            let mut acc = rat(0);
            for c in pc + 1..cols {
                if !ech[i][c].is_zero() {
                    acc += Rat::from_integer(ech[i][c].clone()) * &x[c];
                }
            }
            x[pc] = -acc / Rat::from_integer(ech[i][pc].clone());
        }
        let prim =
            crate::rat::primitive_integer_vector(&x).expect("kernel basis vector is nonzero");
        basis.push(prim.into_iter().map(Rat::from_integer).collect());
    }
    basis
}

/// [`nullspace_with_cols`] with the column count taken from the first row.
/// Panics on a rowless matrix; use the explicit variant there.
pub fn nullspace(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let cols = a
        .first()
        .expect("nullspace of a rowless matrix needs explicit cols")
        .len();
    nullspace_with_cols(a, cols)
}

/// Constraint matrix `C` with `C v = 0` iff the degree-`d` coefficient
/// vector `v` lies in the span of `space.basis`. `C` has
/// `dim(monomial space) - dim(span)` rows — the left annihilator of the
/// basis written in rows.
pub fn membership_constraints(space: &GradedSubspace) -> Vec<Vec<Rat>> {
    let dim = crate::poly::monomial_basis(space.nvars, space.degree).len();
    // A row c annihilates span(basis) iff c is in the kernel of the
    // k x dim matrix whose rows are the basis coefficient vectors.
    let basis_rows: Vec<Vec<Rat>> = space
        .basis
        .iter()
        .map(|b| b.coefficient_vector(space.degree))
        .collect();
    nullspace_with_cols(&basis_rows, dim)
}

/// Hermite-normal-form basis of the integer kernel lattice
/// `{x in Z^cols : A x = 0}` of an integer matrix. Columns of the result
/// are the basis vectors; the form is canonical, so constraint matrices
/// built from it are reproducible.
pub fn integer_kernel_lattice(a: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    // Column-style unimodular reduction: maintain m = a * u.
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let rows = m.len();
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect(); // u stored as columns: u[j] is column j
    let mut lead = 0usize;
    for r in 0..rows {
        if lead >= cols {
            break;
        }
        loop {
            // Smallest nonzero |entry| in row r among columns lead..
            let mut best: Option<usize> = None;
            for j in lead..cols {
                if !m_entry(&m, r, j).is_zero()
                    && best.is_none_or(|b| m_entry(&m, r, j).abs() < m_entry(&m, r, b).abs())
                {
                    best = Some(j);
                }
            }
            let Some(bj) = best else { break };
            if bj != lead {
                swap_columns(&mut m, bj, lead);
                u.swap(bj, lead);
            }
            let mut reduced = true;
            let pivot = m_entry(&m, r, lead).clone();
            for j in lead + 1..cols {
                let e = m_entry(&m, r, j).clone();
                if e.is_zero() {
                    continue;
                }
                let q = div_round(&e, &pivot);
                if !q.is_zero() {
                    sub_scaled_column(&mut m, j, lead, &q);
                    let (cl, cj) = column_pair(&mut u, lead, j);
                    for (x, y) in cj.iter_mut().zip(cl.iter()) {
                        *x -= &q * y;
                    }
                }
                if !m_entry(&m, r, j).is_zero() {
                    reduced = false;
                }
            }
            if reduced {
                break;
            }
        }
        if !m_entry(&m, r, lead).is_zero() {
            lead += 1;
        }
    }
    // Columns lead..cols of u span the kernel lattice.
    let mut kernel: Vec<Vec<BigInt>> = u[lead..].to_vec();
    debug_assert!(kernel.iter().all(|col| {
        a.iter().all(|row| {
            row.iter()
                .zip(col)
                .fold(BigInt::zero(), |s, (x, y)| s + x * y)
                .is_zero()
        })
    }));
    hermite_normalize(&mut kernel, cols);
    kernel
}

fn m_entry(m: &[Vec<BigInt>], r: usize, col: usize) -> &BigInt {
    &m[r][col]
}

fn swap_columns(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn sub_scaled_column(m: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let delta = q * &row[source];
        row[target] -= delta;
    }
}

fn column_pair(u: &mut [Vec<BigInt>], a: usize, b: usize) -> (&Vec<BigInt>, &mut Vec<BigInt>) {
    assert!(a < b);
    let (left, right) = u.split_at_mut(b);
    (&left[a], &mut right[0])
}

/// Division rounded to nearest (ties toward zero), the right notion for
/// gcd-style column reduction.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    let two_r: BigInt = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Puts a lattice basis (given as columns of length `dim`) into a
/// canonical Hermite form: row-style HNF of the transposed matrix, pivots
/// positive, entries above each pivot reduced into `[0, pivot)`.
fn hermite_normalize(columns: &mut Vec<Vec<BigInt>>, dim: usize) {
    // Work on rows = the basis vectors.
    let mut rows: Vec<Vec<BigInt>> = columns.clone();
    let n = rows.len();
    let mut pivot_row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..dim {
        if pivot_row >= n {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..n {
                if !rows[r][col].is_zero()
                    && best.is_none_or(|b: usize| rows[r][col].abs() < rows[b][col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(br) = best else { break };
            rows.swap(pivot_row, br);
            let pivot = rows[pivot_row][col].clone();
            let mut reduced = true;
            for r in pivot_row + 1..n {
                let e = rows[r][col].clone();
                if e.is_zero() {
                    continue;
                }
                let q = div_round(&e, &pivot);
                if !q.is_zero() {
                    for c in 0..dim {
                        let delta = &q * &rows[pivot_row][c];
                        rows[r][c] -= delta;
                    }
                }
                if !rows[r][col].is_zero() {
                    reduced = false;
                }
            }
            if reduced {
                break;
            }
        }
        if !rows[pivot_row][col].is_zero() {
            if rows[pivot_row][col].is_negative() {
                for c in 0..dim {
                    rows[pivot_row][c] = -rows[pivot_row][c].clone();
                }
            }
            pivot_cols.push((pivot_row, col));
            pivot_row += 1;
        }
    }
    // Reduce entries above each pivot into [0, pivot).
    for &(pr, pc) in pivot_cols.iter() {
        let pivot = rows[pr][pc].clone();
        for r in 0..pr {
            let e = rows[r][pc].clone();
            let q = e.div_floor(&pivot);
            if !q.is_zero() {
                for c in 0..dim {
                    let delta = &q * &rows[pr][c];
                    rows[r][c] -= delta;
                }
            }
        }
    }
    *columns = rows;
}

/// Integer-basis embedding of `ker(weight) ∩ Z^r` as an `r x (r-1)` map:
/// the substitution used for restriction-to-kernel edge constraints.
/// `None` for the zero weight.
pub fn kernel_embedding(weight: &[Rat]) -> Option<LinearMap> {
    let prim = crate::rat::primitive_integer_vector(weight)?;
    let r = prim.len();
    let basis = integer_kernel_lattice(&[prim], r);
    let k = basis.len();
    let mut entries = vec![rat(0); r * k];
    for (j, col) in basis.iter().enumerate() {
        for i in 0..r {
            entries[i * k + j] = Rat::from_integer(col[i].clone());
        }
    }
    Some(LinearMap::new(r, k, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::rat::ratio;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn nullspace_identity_is_trivial() {
        let a = vec![ints(&[1, 0]), ints(&[0, 1])];
        assert!(nullspace(&a).is_empty());
    }

    #[test]
    fn nullspace_single_difference() {
        let a = vec![ints(&[1, -1])];
        let basis = nullspace(&a);
        assert_eq!(basis, vec![ints(&[1, 1])]);
    }

    #[test]
    fn nullspace_rank_one_system() {
        // [[1,2,3],[2,4,6]] has rank 1, so a 2-dimensional kernel.
        let a = vec![ints(&[1, 2, 3]), ints(&[2, 4, 6])];
        let basis = nullspace(&a);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            for row in &a {
                let dot = row.iter().zip(v).fold(rat(0), |s, (x, y)| s + x * y);
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn rank_nullity_on_rational_entries() {
        let a = vec![
            vec![ratio(1, 2), rat(1), rat(0), rat(3)],
            vec![rat(1), rat(2), rat(0), rat(6)],
            vec![rat(0), rat(0), rat(1), rat(-1)],
        ];
        let r = rank(&a);
        let n = nullspace(&a).len();
        assert_eq!(r + n, 4);
        assert_eq!(r, 2);
    }

    #[test]
    fn inverse_round_trip() {
        let m = LinearMap::from_int_rows(&[&[1, -3], &[1, -2]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv), LinearMap::identity(2));
        assert_eq!(inv.compose(&m), LinearMap::identity(2));
        let singular = LinearMap::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn membership_full_space_has_no_constraints() {
        let basis = crate::poly::monomial_basis(2, 2)
            .into_iter()
            .map(|m| Polynomial::from_terms(2, [(m, rat(1))]))
            .collect();
        let s = GradedSubspace::new(2, 2, basis).unwrap();
        assert!(membership_constraints(&s).is_empty());
    }

    #[test]
    fn membership_one_variable_square() {
        // span{x^2} is all of the degree-2 space in one variable
        let x2 = Polynomial::variable(1, 0).pow(2);
        let s = GradedSubspace::new(2, 1, vec![x2]).unwrap();
        assert!(membership_constraints(&s).is_empty());
    }

    #[test]
    fn membership_detects_outside_vectors() {
        // Empty subspace in degree 1, one variable: x is not a member.
        let s = GradedSubspace::new(1, 1, vec![]).unwrap();
        let c = membership_constraints(&s);
        assert_eq!(c.len(), 1);
        let v = Polynomial::variable(1, 0).coefficient_vector(1);
        let residual: Rat = c[0].iter().zip(&v).fold(rat(0), |s, (a, b)| s + a * b);
        assert!(!residual.is_zero());
        // Basis vectors themselves are annihilated.
        let x2 = Polynomial::variable(2, 0).pow(2);
        let s2 = GradedSubspace::new(2, 2, vec![x2.clone()]).unwrap();
        let c2 = membership_constraints(&s2);
        assert_eq!(c2.len(), 2);
        let b = x2.coefficient_vector(2);
        for row in &c2 {
            let dot = row.iter().zip(&b).fold(rat(0), |s, (a, x)| s + a * x);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn kernel_lattice_is_saturated() {
        // ker(2,3,5): the naive echelon basis misses (1,1,-1); HNF finds it.
        let a = vec![vec![BigInt::from(2), BigInt::from(3), BigInt::from(5)]];
        let basis = integer_kernel_lattice(&a, 3);
        assert_eq!(basis.len(), 2);
        // (1,1,-1) must be an integer combination of the basis.
        let target = [BigInt::from(1), BigInt::from(1), BigInt::from(-1)];
        // Solve with rational elimination and check integrality.
        let rows: Vec<Vec<Rat>> = (0..3)
            .map(|i| {
                basis
                    .iter()
                    .map(|col| Rat::from_integer(col[i].clone()))
                    .chain([Rat::from_integer(target[i].clone())])
                    .collect()
            })
            .collect();
        // Augmented system [B | t] must be consistent with integer solution:
        // rank([B|t]) == rank(B) and the unique solution is integral.
        assert_eq!(rank(&rows), 2);
        let combo = nullspace_with_cols(&rows, 3);
        assert_eq!(combo.len(), 1);
        let v = &combo[0];
        assert!(!v[2].is_zero());
        let c0 = -&v[0] / &v[2];
        let c1 = -&v[1] / &v[2];
        assert!(c0.is_integer() && c1.is_integer());
    }

    #[test]
    fn kernel_embedding_of_weight() {
        let ker = kernel_embedding(&ints(&[1, 1])).unwrap();
        assert_eq!((ker.rows(), ker.cols()), (2, 1));
        // column spans (1,-1) direction
        let col: Vec<Rat> = vec![ker.entry(0, 0).clone(), ker.entry(1, 0).clone()];
        let dot = col[0].clone() + col[1].clone();
        assert!(dot.is_zero());
        assert!(kernel_embedding(&ints(&[0, 0])).is_none());
        // scaling the weight leaves the canonical kernel unchanged
        assert_eq!(kernel_embedding(&ints(&[2, 2])).unwrap(), ker);
    }

    #[test]
    fn kernel_embedding_rank_three() {
        let ker = kernel_embedding(&[rat(2), rat(3), rat(5)]).unwrap();
        assert_eq!((ker.rows(), ker.cols()), (3, 2));
        for j in 0..2 {
            let dot =
                rat(2) * ker.entry(0, j) + rat(3) * ker.entry(1, j) + rat(5) * ker.entry(2, j);
            assert!(dot.is_zero());
        }
    }
}
