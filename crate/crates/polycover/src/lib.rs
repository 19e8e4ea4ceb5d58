//! Exact polyhedral invariants of monomial ideals and their filtrations.
//!
//! The library computes, in exact rational arithmetic:
//!
//! * covering polyhedra Q(C) = {x ≥ 0 : xC ≥ 1} and their vertex sets;
//! * Newton, irreducible, and symbolic polyhedra of monomial ideals;
//! * Hilbert bases of Simis and Rees cones, hence Rees-algebra generators of
//!   the filtration I_n = ({t^a : a/n ∈ Q(C)}), integral closures of powers,
//!   symbolic powers, and normality certificates;
//! * Waldschmidt constants and the ic-resurgence of strict filtrations via an
//!   exact rational simplex over a family of linear programs;
//! * the graph invariants (cliques, covers, perfectness) that bound the
//!   resurgence of edge and cover ideals.
//!
//! Everything is deterministic: vertex and facet lists come out sorted, LP
//! optima carry certifying vertices, and no floating point is used anywhere.
//!
//! ```
//! use polycover::{Graph, MonomialIdeal};
//! use polycover::polyhedra::covering_polyhedron;
//! use polycover::semigroup::Filtration;
//!
//! # fn main() -> Result<(), polycover::Error> {
//! let ideal = MonomialIdeal::from_exponents(3, &[&[1, 2, 0], &[0, 1, 2], &[1, 0, 2]])?;
//! let q = covering_polyhedron(&ideal)?;
//! assert_eq!(q.vertices()?.len(), 4);
//!
//! let triangle = Graph::new(3, &[(0, 1), (1, 2), (0, 2)])?;
//! let f = Filtration::symbolic(&triangle.edge_ideal()?)?;
//! assert_eq!(f.waldschmidt()?, polycover::Rat::new(3, 2));
//! # Ok(())
//! # }
//! ```

pub mod exec;
pub mod graphs;
pub mod ideals;
pub mod linalg;
pub mod lp;
pub mod polyhedra;
pub mod rational;
pub mod semigroup;

pub use ideals::{Clutter, Graph, Monomial, MonomialIdeal};
pub use linalg::{QMatrix, QVector};
pub use polyhedra::{CoveringPolyhedron, IntCone, NewtonHRep, Vertex};
pub use rational::{Int, Rat};
pub use semigroup::{Filtration, HilbertBasis, NormalityReport};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("the zero ideal is not a valid input here")]
    ZeroIdeal,

    #[error("the unit ideal is not a valid input here")]
    UnitIdeal,

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("cone is not pointed")]
    NotPointed,

    #[error("size guard: {what} = {got} exceeds the limit {limit} (set POLYCOVER_MAX_DIM to raise it)")]
    SizeGuard {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("strictness violated or malformed input: a resurgence subproblem is unbounded")]
    ResurgenceUnbounded,

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// Default dimension cap for the exponential-cost kernels (vertex enumeration,
/// Hilbert bases, perfectness scans).
pub const DEFAULT_MAX_DIM: usize = 12;

/// Effective dimension cap: `POLYCOVER_MAX_DIM` when set and parseable,
/// otherwise [`DEFAULT_MAX_DIM`]. Read per call so tests and callers may
/// adjust the environment.
pub fn max_dim() -> usize {
    std::env::var("POLYCOVER_MAX_DIM")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

pub(crate) fn guard_dim(what: &'static str, got: usize) -> Result<(), Error> {
    let limit = max_dim();
    if got > limit {
        Err(Error::SizeGuard { what, got, limit })
    } else {
        Ok(())
    }
}
