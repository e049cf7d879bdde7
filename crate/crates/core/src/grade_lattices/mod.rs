//! Grade-level orders, lattice operators and embeddings.
//!
//! * closed intervals with `≤_I`, `∪_I`, `∩_I`;
//! * the unit-to-interval embeddings `φ`, `ω`, `γ` and the generic `(h1, h2)`
//!   construction;
//! * `ξ`, the interval-to-set embedding splitting rational and irrational parts;
//! * the order `≤_S` with `∪_S` / `∩_S` on nonempty sets, their restriction to
//!   nonempty closed sets, and the hesitant operators `∪_H` / `∩_H`.

mod closed;
mod monotone;

use std::fmt;

use thiserror::Error;

use crate::lattice::Lattice;
use crate::rat::Rat;
use crate::set_algebra::{Atom, RealSubset, SetError, Tag};

pub use closed::{closed_join, closed_meet, hesitant_inter, hesitant_union, s_inter, s_order, s_union, ClosedSubset};
pub use monotone::MonotonePwa;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradeError {
    #[error("invalid interval [{lo},{hi}]")]
    InvalidInterval { lo: Rat, hi: Rat },
    #[error("invalid monotone map: {0}")]
    InvalidMonotone(String),
    #[error("invalid embedding pair: {0}")]
    InvalidPair(String),
    #[error("invalid delta_f map: {0}")]
    InvalidF(String),
    #[error(transparent)]
    Set(#[from] SetError),
}

/// A closed subinterval `[lo, hi]` of `[0,1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rat,
    hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Result<Interval, GradeError> {
        if !lo.in_unit() || !hi.in_unit() || lo > hi {
            return Err(GradeError::InvalidInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(t: Rat) -> Result<Interval, GradeError> {
        Interval::new(t.clone(), t)
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    /// The interval viewed as a point set.
    pub fn to_set(&self) -> RealSubset {
        RealSubset::closed_interval(self.lo.clone(), self.hi.clone()).expect("valid interval")
    }

    pub fn to_closed(&self) -> ClosedSubset {
        ClosedSubset::new(self.to_set()).expect("intervals are closed and nonempty")
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `[a,b] ≤_I [c,d]` iff `a ≤ c` and `b ≤ d`.
pub fn interval_leq(a: &Interval, b: &Interval) -> bool {
    a.lo <= b.lo && a.hi <= b.hi
}

pub fn interval_join(a: &Interval, b: &Interval) -> Interval {
    Interval { lo: (&a.lo).max(&b.lo).clone(), hi: (&a.hi).max(&b.hi).clone() }
}

pub fn interval_meet(a: &Interval, b: &Interval) -> Interval {
    Interval { lo: (&a.lo).min(&b.lo).clone(), hi: (&a.hi).min(&b.hi).clone() }
}

impl Lattice for Interval {
    fn join(&self, other: &Interval) -> Interval {
        interval_join(self, other)
    }

    fn meet(&self, other: &Interval) -> Interval {
        interval_meet(self, other)
    }

    fn leq(&self, other: &Interval) -> bool {
        interval_leq(self, other)
    }
}

/// Two increasing maps `h1 <= h2`, at least one strictly increasing, giving
/// the lattice embedding `t -> [h1(t), h2(t)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairEmbedding {
    h1: MonotonePwa,
    h2: MonotonePwa,
}

impl PairEmbedding {
    pub fn new(h1: MonotonePwa, h2: MonotonePwa) -> Result<PairEmbedding, GradeError> {
        if !h1.is_strict() && !h2.is_strict() {
            return Err(GradeError::InvalidPair("neither map is strictly increasing".into()));
        }
        if !h1.below(&h2) {
            return Err(GradeError::InvalidPair("h1 exceeds h2 somewhere".into()));
        }
        Ok(PairEmbedding { h1, h2 })
    }

    pub fn h1(&self) -> &MonotonePwa {
        &self.h1
    }

    pub fn h2(&self) -> &MonotonePwa {
        &self.h2
    }
}

/// The embeddings of `[0,1]` into closed intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbedKind {
    /// `t -> [t,t]`
    Phi,
    /// `t -> [t,1]`
    Omega,
    /// `t -> [0,t]`
    Gamma,
    Pair(PairEmbedding),
}

pub fn embed_unit_to_interval(t: &Rat, kind: &EmbedKind) -> Interval {
    let (lo, hi) = match kind {
        EmbedKind::Phi => (t.clone(), t.clone()),
        EmbedKind::Omega => (t.clone(), Rat::one()),
        EmbedKind::Gamma => (Rat::zero(), t.clone()),
        EmbedKind::Pair(p) => (p.h1.eval(t), p.h2.eval(t)),
    };
    Interval::new(lo, hi).expect("embedding of a unit value")
}

/// `ξ([a,b]) = ([0,a] ∩ ℚ) ∪ ([0,b] ∩ 𝕀)`.
pub fn xi(interval: &Interval) -> RealSubset {
    let mut atoms = vec![Atom::new(Rat::zero(), interval.lo.clone(), true, true, Tag::QOnly).expect("valid")];
    if !interval.hi.is_zero() {
        atoms.push(Atom::new(Rat::zero(), interval.hi.clone(), true, true, Tag::IOnly).expect("valid"));
    }
    RealSubset::from_atoms(&atoms)
}
