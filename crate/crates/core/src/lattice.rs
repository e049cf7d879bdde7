//! The lattice interface shared by every grade type.

use std::fmt::Debug;

use crate::rat::Rat;
use crate::set_algebra::RealSubset;

/// A lattice given by its join, meet and order.
///
/// Implementations must satisfy `a.leq(b) <=> a.join(b) == b <=> a.meet(b) == a`.
pub trait Lattice: Clone + PartialEq + Debug {
    fn join(&self, other: &Self) -> Self;
    fn meet(&self, other: &Self) -> Self;
    fn leq(&self, other: &Self) -> bool;
}

/// `([0,1], max, min)`.
impl Lattice for Rat {
    fn join(&self, other: &Rat) -> Rat {
        self.max(other).clone()
    }

    fn meet(&self, other: &Rat) -> Rat {
        self.min(other).clone()
    }

    fn leq(&self, other: &Rat) -> bool {
        self <= other
    }
}

/// `(𝒫([0,1]), ∪, ∩)` with inclusion.
impl Lattice for RealSubset {
    fn join(&self, other: &RealSubset) -> RealSubset {
        self.union(other)
    }

    fn meet(&self, other: &RealSubset) -> RealSubset {
        self.intersect(other)
    }

    fn leq(&self, other: &RealSubset) -> bool {
        self.subset_of(other)
    }
}
