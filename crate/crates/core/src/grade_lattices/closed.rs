use std::fmt;

use crate::lattice::Lattice;
use crate::set_algebra::{RealSubset, SetError, Tag};

/// A nonempty closed subset of `[0,1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ClosedSubset {
    inner: RealSubset,
}

impl ClosedSubset {
    pub fn new(set: RealSubset) -> Result<ClosedSubset, SetError> {
        if set.is_empty() {
            return Err(SetError::EmptySet);
        }
        if !set.is_closed() {
            return Err(SetError::NotClosed(set.to_string()));
        }
        debug_assert!(set.atoms().iter().all(|a| a.tag() == Tag::All && a.lo_closed() && a.hi_closed()));
        Ok(ClosedSubset { inner: set })
    }

    pub fn as_set(&self) -> &RealSubset {
        &self.inner
    }

    pub fn into_set(self) -> RealSubset {
        self.inner
    }

    /// Minimum (attained, since the set is closed).
    pub fn min(&self) -> crate::rat::Rat {
        self.inner.inf().expect("nonempty")
    }

    pub fn max(&self) -> crate::rat::Rat {
        self.inner.sup().expect("nonempty")
    }
}

impl fmt::Display for ClosedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.inner, f)
    }
}

impl fmt::Debug for ClosedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClosedSubset({})", self.inner)
    }
}

/// `S ≤_S T`: `sup S ≤ sup T`, `inf S ≤ inf T` and `S ∩ [inf T, sup S] ⊆ T`.
pub fn s_order(s: &RealSubset, t: &RealSubset) -> Result<bool, SetError> {
    let bs = s.bounds()?;
    let bt = t.bounds()?;
    Ok(bs.sup <= bt.sup && bs.inf <= bt.inf && s.intersect(&RealSubset::window(&bt.inf, &bs.sup)).subset_of(t))
}

/// `∪_S`. When the infima tie the first branch is taken.
pub fn s_union(s: &RealSubset, t: &RealSubset) -> Result<RealSubset, SetError> {
    let bs = s.bounds()?;
    let bt = t.bounds()?;
    Ok(if bs.inf <= bt.inf {
        s.intersect(&RealSubset::window(&bt.inf, &bs.sup)).union(t)
    } else {
        t.intersect(&RealSubset::window(&bs.inf, &bt.sup)).union(s)
    })
}

/// `∩_S`. May be empty on non-closed inputs. Ties take the first branch.
pub fn s_inter(s: &RealSubset, t: &RealSubset) -> Result<RealSubset, SetError> {
    let bs = s.bounds()?;
    let bt = t.bounds()?;
    Ok(if bs.inf <= bt.inf {
        s.intersect(&RealSubset::window(&bs.inf, &bt.inf).union(t))
    } else {
        t.intersect(&RealSubset::window(&bt.inf, &bs.inf).union(s))
    })
}

fn closed_result(set: RealSubset, op: &str) -> ClosedSubset {
    ClosedSubset::new(set).unwrap_or_else(|e| panic!("{op} left the closed nonempty sets: {e}"))
}

pub fn closed_join(s: &ClosedSubset, t: &ClosedSubset) -> ClosedSubset {
    closed_result(s_union(&s.inner, &t.inner).expect("nonempty"), "closed_join")
}

pub fn closed_meet(s: &ClosedSubset, t: &ClosedSubset) -> ClosedSubset {
    closed_result(s_inter(&s.inner, &t.inner).expect("nonempty"), "closed_meet")
}

impl Lattice for ClosedSubset {
    fn join(&self, other: &ClosedSubset) -> ClosedSubset {
        closed_join(self, other)
    }

    fn meet(&self, other: &ClosedSubset) -> ClosedSubset {
        closed_meet(self, other)
    }

    fn leq(&self, other: &ClosedSubset) -> bool {
        s_order(&self.inner, &other.inner).expect("nonempty")
    }
}

/// `S ∪_H T = {t ∈ S ∪ T | t ≥ inf S ∨ inf T}`.
pub fn hesitant_union(s: &RealSubset, t: &RealSubset) -> Result<RealSubset, SetError> {
    let floor = s.inf()?.max(t.inf()?);
    Ok(s.union(t).intersect(&RealSubset::window(&floor, &crate::rat::Rat::one())))
}

/// `S ∩_H T = {t ∈ S ∪ T | t ≤ sup S ∧ sup T}`.
pub fn hesitant_inter(s: &RealSubset, t: &RealSubset) -> Result<RealSubset, SetError> {
    let ceiling = s.sup()?.min(t.sup()?);
    Ok(s.union(t).intersect(&RealSubset::window(&crate::rat::Rat::zero(), &ceiling)))
}
