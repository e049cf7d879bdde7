//! Exact lattice algebra on fuzzy-set families over `[0,1]`.
//!
//! Grades are rationals, intervals, tagged subsets of `[0,1]`, closed
//! subsets, and piecewise-affine grade functions. Every comparison is exact.

pub mod fuzzy_universe;
pub mod grade_lattices;
pub mod lattice;
pub mod law_harness;
pub mod piecewise;
pub mod rat;
pub mod set_algebra;

pub use lattice::Lattice;
pub use rat::{rat, ParseRatError, Rat};
pub use set_algebra::{canonicalize, Atom, RealSubset, SetError, Tag};
