//! Exact-arithmetic computation of equivariant cohomology algebras from
//! GKM graphs.
//!
//! The crate is organized bottom-up:
//!
//! * [`rat`] — arbitrary-precision rational scalars (the coefficient field),
//! * [`poly`] — multivariate polynomials, graded monomial bases, pullbacks,
//! * [`linalg`] — exact linear maps, fraction-free nullspaces, integer
//!   kernel lattices in Hermite normal form,
//! * [`root`] — root systems of the classical families and G2,
//! * [`group`] — finite matrix groups, orbits, stabilizers, and graded
//!   bases of invariant rings via Reynolds averaging,
//! * [`abelian`] — torus-action GKM graphs (dots, weighted edges, stars)
//!   and their per-degree constraint solver,
//! * [`nonabelian`] — GKM graphs for non-abelian group actions (circles,
//!   arrows, edge spaces) and their solver, plus cohomogeneity-one
//!   builders and the freeness check for graded Hilbert series.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything can be shared freely across threads. With the default
//! `parallel` feature the per-degree solves behind the Hilbert-series
//! functions run on rayon; without it they run sequentially.

// Index-based loops are the norm in the exact linear algebra here; the
// indices usually address several matrices at once.
#![allow(clippy::needless_range_loop)]

pub mod abelian;
pub mod group;
pub mod linalg;
pub mod nonabelian;
pub mod poly;
pub mod rat;
pub mod root;

pub use rat::Rat;

/// Maps `f` over degrees `0..=max_degree`, in parallel when the `parallel`
/// feature is enabled.
pub(crate) fn map_degrees<T, F>(max_degree: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..=max_degree).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..=max_degree).map(f).collect()
    }
}
