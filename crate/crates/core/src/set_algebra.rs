//! Exact algebra of representable subsets of `[0,1]`.
//!
//! A [`RealSubset`] is a finite union of [`Atom`]s: intervals with rational
//! endpoints, each restricted to all reals, to the rationals only (`QQ`) or
//! to the irrationals only (`II`). This fragment is closed under union,
//! intersection, complement and closure, and has a unique canonical form, so
//! set equality is structural equality.
//!
//! Every Boolean operation runs the same sweep: collect the endpoints of the
//! operands, split `[0,1]` into elementary pieces (the endpoints themselves
//! and the open gaps between consecutive endpoints), combine per-piece
//! coverage, then drop every cut that no longer separates anything.

use std::fmt;

use thiserror::Error;

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("endpoint {0} lies outside [0,1]")]
    OutOfRange(Rat),
    #[error("inverted interval: {lo} > {hi}")]
    Inverted { lo: Rat, hi: Rat },
    #[error("empty atom: {0}")]
    EmptyAtom(String),
    #[error("operation undefined on the empty set")]
    EmptySet,
    #[error("set {0} is not closed")]
    NotClosed(String),
}

/// Which reals of an atom's span belong to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    All,
    /// Rationals only.
    QOnly,
    /// Irrationals only.
    IOnly,
}

impl Tag {
    pub(crate) fn cover(self) -> Cover {
        match self {
            Tag::All => Cover { q: true, i: true },
            Tag::QOnly => Cover { q: true, i: false },
            Tag::IOnly => Cover { q: false, i: true },
        }
    }

    pub fn admits_rationals(self) -> bool {
        self != Tag::IOnly
    }

    pub fn admits_irrationals(self) -> bool {
        self != Tag::QOnly
    }
}

/// Coverage of an open gap: which of its rationals / irrationals are present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub(crate) struct Cover {
    pub q: bool,
    pub i: bool,
}

impl Cover {
    pub(crate) fn tag(self) -> Option<Tag> {
        match (self.q, self.i) {
            (true, true) => Some(Tag::All),
            (true, false) => Some(Tag::QOnly),
            (false, true) => Some(Tag::IOnly),
            (false, false) => None,
        }
    }

    fn or(self, other: Cover) -> Cover {
        Cover { q: self.q || other.q, i: self.i || other.i }
    }
}

/// An interval with rational endpoints, endpoint flags and a [`Tag`].
///
/// A degenerate atom (`lo == hi`) is a closed single point and never carries
/// [`Tag::IOnly`]: a rational point has no irrational members.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Atom {
    lo: Rat,
    hi: Rat,
    lo_closed: bool,
    hi_closed: bool,
    tag: Tag,
}

impl Atom {
    pub fn new(lo: Rat, hi: Rat, lo_closed: bool, hi_closed: bool, tag: Tag) -> Result<Atom, SetError> {
        for end in [&lo, &hi] {
            if !end.in_unit() {
                return Err(SetError::OutOfRange(end.clone()));
            }
        }
        if lo > hi {
            return Err(SetError::Inverted { lo, hi });
        }
        if lo == hi {
            if !(lo_closed && hi_closed) {
                return Err(SetError::EmptyAtom(format!("degenerate non-closed interval at {lo}")));
            }
            if tag == Tag::IOnly {
                return Err(SetError::EmptyAtom(format!("irrational part of the point {lo}")));
            }
        }
        Ok(Atom { lo, hi, lo_closed, hi_closed, tag })
    }

    pub fn closed(lo: Rat, hi: Rat) -> Result<Atom, SetError> {
        Atom::new(lo, hi, true, true, Tag::All)
    }

    pub fn point(p: Rat) -> Result<Atom, SetError> {
        Atom::new(p.clone(), p, true, true, Tag::All)
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn tag(&self) -> Tag {
        self.tag
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Does the rational `q` belong to this atom?
    pub fn contains(&self, q: &Rat) -> bool {
        if !self.tag.admits_rationals() {
            return false;
        }
        let above = if self.lo_closed { *q >= self.lo } else { *q > self.lo };
        let below = if self.hi_closed { *q <= self.hi } else { *q < self.hi };
        above && below
    }

    /// Same span, different tag. Endpoint flags are dropped for `IOnly`.
    pub fn with_tag(&self, tag: Tag) -> Result<Atom, SetError> {
        Atom::new(self.lo.clone(), self.hi.clone(), self.lo_closed, self.hi_closed, tag)
    }

    /// Does the open gap `(a, b)` lie inside this atom's span?
    fn spans_gap(&self, a: &Rat, b: &Rat) -> bool {
        self.lo < self.hi && self.lo <= *a && self.hi >= *b
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{{{}}}", self.lo)?;
        } else {
            let open = if self.lo_closed { '[' } else { '(' };
            let close = if self.hi_closed { ']' } else { ')' };
            write!(f, "{open}{},{}{close}", self.lo, self.hi)?;
        }
        match self.tag {
            Tag::All => Ok(()),
            Tag::QOnly => f.write_str("&QQ"),
            Tag::IOnly => f.write_str("&II"),
        }
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sorted, deduplicated cut values for `sets`, always including 0 and 1.
pub(crate) fn cut_points<'a>(sets: impl IntoIterator<Item = &'a RealSubset>) -> Vec<Rat> {
    let mut cuts = vec![Rat::zero(), Rat::one()];
    for set in sets {
        for atom in &set.atoms {
            cuts.push(atom.lo.clone());
            cuts.push(atom.hi.clone());
        }
    }
    cuts.sort();
    cuts.dedup();
    cuts
}

/// A set described on a fixed cut grid: membership of every cut value plus
/// the coverage of every open gap between consecutive cuts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Layout {
    pub cuts: Vec<Rat>,
    pub points: Vec<bool>,
    pub gaps: Vec<Cover>,
}

impl Layout {
    /// `cuts` must be sorted and contain every endpoint of `atoms`.
    pub(crate) fn of_atoms(atoms: &[Atom], cuts: &[Rat]) -> Layout {
        let points = cuts.iter().map(|c| atoms.iter().any(|a| a.contains(c))).collect();
        let gaps = cuts
            .windows(2)
            .map(|w| atoms.iter().filter(|a| a.spans_gap(&w[0], &w[1])).fold(Cover::default(), |acc, a| acc.or(a.tag.cover())))
            .collect();
        Layout { cuts: cuts.to_vec(), points, gaps }
    }

    fn zip_with(&self, other: &Layout, op: impl Fn(bool, bool) -> bool) -> Layout {
        debug_assert_eq!(self.cuts, other.cuts);
        Layout {
            cuts: self.cuts.clone(),
            points: self.points.iter().zip(&other.points).map(|(&a, &b)| op(a, b)).collect(),
            gaps: self.gaps.iter().zip(&other.gaps).map(|(a, b)| Cover { q: op(a.q, b.q), i: op(a.i, b.i) }).collect(),
        }
    }

    /// Drops every interior cut whose neighbouring gaps agree and whose own
    /// membership matches their rational coverage.
    fn minimize(self) -> Layout {
        let n = self.cuts.len();
        let mut cuts = vec![self.cuts[0].clone()];
        let mut points = vec![self.points[0]];
        let mut gaps: Vec<Cover> = Vec::with_capacity(self.gaps.len());
        gaps.push(self.gaps[0]);
        for k in 1..n - 1 {
            let left = *gaps.last().expect("at least one gap");
            let right = self.gaps[k];
            if left == right && self.points[k] == right.q {
                continue;
            }
            cuts.push(self.cuts[k].clone());
            points.push(self.points[k]);
            gaps.push(right);
        }
        cuts.push(self.cuts[n - 1].clone());
        points.push(self.points[n - 1]);
        Layout { cuts, points, gaps }
    }

    /// Canonical atom list of a minimal layout. A present cut point joins the
    /// gap atom on its left when that atom admits rationals, else the one on
    /// its right, else it stands alone.
    fn render(&self) -> Vec<Atom> {
        let mut gap_atoms: Vec<Option<Atom>> = self
            .gaps
            .iter()
            .enumerate()
            .map(|(k, cover)| {
                cover.tag().map(|tag| Atom {
                    lo: self.cuts[k].clone(),
                    hi: self.cuts[k + 1].clone(),
                    lo_closed: false,
                    hi_closed: false,
                    tag,
                })
            })
            .collect();
        let mut lone_points: Vec<Option<Atom>> = vec![None; self.cuts.len()];
        for (k, &present) in self.points.iter().enumerate() {
            if !present {
                continue;
            }
            let rational = |slot: Option<&Option<Atom>>| matches!(slot, Some(Some(a)) if a.tag.admits_rationals());
            if k > 0 && rational(gap_atoms.get(k - 1)) {
                gap_atoms[k - 1].as_mut().expect("checked").hi_closed = true;
            } else if rational(gap_atoms.get(k)) {
                gap_atoms[k].as_mut().expect("checked").lo_closed = true;
            } else {
                let p = self.cuts[k].clone();
                lone_points[k] = Some(Atom { lo: p.clone(), hi: p, lo_closed: true, hi_closed: true, tag: Tag::All });
            }
        }
        let mut atoms = Vec::new();
        for (k, lone) in lone_points.into_iter().enumerate() {
            atoms.extend(lone);
            if let Some(Some(a)) = gap_atoms.get_mut(k).map(Option::take) {
                atoms.push(a);
            }
        }
        atoms
    }

    fn into_set(self) -> RealSubset {
        RealSubset { atoms: self.minimize().render() }
    }
}

/// Infimum and supremum of a nonempty set, with attainment flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub inf: Rat,
    pub sup: Rat,
    pub inf_attained: bool,
    pub sup_attained: bool,
}

/// A representable subset of `[0,1]` in canonical form.
///
/// Atoms are sorted, pairwise disjoint and non-mergeable, so two values
/// denote the same point set iff they compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RealSubset {
    atoms: Vec<Atom>,
}

/// Builds the canonical set denoting the union of `raw`.
pub fn canonicalize(raw: &[Atom]) -> RealSubset {
    let mut cuts = vec![Rat::zero(), Rat::one()];
    for a in raw {
        cuts.push(a.lo.clone());
        cuts.push(a.hi.clone());
    }
    cuts.sort();
    cuts.dedup();
    Layout::of_atoms(raw, &cuts).into_set()
}

impl RealSubset {
    pub fn empty() -> RealSubset {
        RealSubset { atoms: Vec::new() }
    }

    /// The whole unit interval.
    pub fn full() -> RealSubset {
        RealSubset::from_atom(Atom::closed(Rat::zero(), Rat::one()).expect("valid"))
    }

    /// `[0,1] ∩ ℚ`.
    pub fn rationals() -> RealSubset {
        RealSubset::from_atom(Atom::new(Rat::zero(), Rat::one(), true, true, Tag::QOnly).expect("valid"))
    }

    /// `[0,1] ∩ 𝕀`.
    pub fn irrationals() -> RealSubset {
        RealSubset::from_atom(Atom::new(Rat::zero(), Rat::one(), false, false, Tag::IOnly).expect("valid"))
    }

    pub fn from_atom(atom: Atom) -> RealSubset {
        canonicalize(std::slice::from_ref(&atom))
    }

    pub fn from_atoms(atoms: &[Atom]) -> RealSubset {
        canonicalize(atoms)
    }

    /// Closed interval `[lo, hi]`.
    pub fn closed_interval(lo: Rat, hi: Rat) -> Result<RealSubset, SetError> {
        Atom::closed(lo, hi).map(RealSubset::from_atom)
    }

    /// `[lo, hi]` when `lo <= hi`, otherwise the empty set.
    pub(crate) fn window(lo: &Rat, hi: &Rat) -> RealSubset {
        if lo <= hi {
            RealSubset::closed_interval(lo.clone(), hi.clone()).expect("bounds of unit subsets")
        } else {
            RealSubset::empty()
        }
    }

    pub fn interval(lo: Rat, hi: Rat, lo_closed: bool, hi_closed: bool, tag: Tag) -> Result<RealSubset, SetError> {
        Atom::new(lo, hi, lo_closed, hi_closed, tag).map(RealSubset::from_atom)
    }

    /// Finite set of rational points.
    pub fn points<I: IntoIterator<Item = Rat>>(points: I) -> Result<RealSubset, SetError> {
        let atoms = points.into_iter().map(Atom::point).collect::<Result<Vec<_>, _>>()?;
        Ok(canonicalize(&atoms))
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub(crate) fn layout(&self, cuts: &[Rat]) -> Layout {
        Layout::of_atoms(&self.atoms, cuts)
    }

    fn combine(&self, other: &RealSubset, op: impl Fn(bool, bool) -> bool) -> RealSubset {
        let cuts = cut_points([self, other]);
        self.layout(&cuts).zip_with(&other.layout(&cuts), op).into_set()
    }

    pub fn union(&self, other: &RealSubset) -> RealSubset {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &RealSubset) -> RealSubset {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &RealSubset) -> RealSubset {
        self.combine(other, |a, b| a && !b)
    }

    /// `[0,1] \ self`.
    pub fn complement(&self) -> RealSubset {
        let cuts = cut_points([self]);
        let mut layout = self.layout(&cuts);
        layout.points.iter_mut().for_each(|p| *p = !*p);
        layout.gaps.iter_mut().for_each(|g| *g = Cover { q: !g.q, i: !g.i });
        layout.into_set()
    }

    pub fn subset_of(&self, other: &RealSubset) -> bool {
        self.intersect(&other.complement()).is_empty()
    }

    pub fn contains(&self, q: &Rat) -> bool {
        self.atoms.iter().any(|a| a.contains(q))
    }

    pub fn bounds(&self) -> Result<Bounds, SetError> {
        let first = self.atoms.first().ok_or(SetError::EmptySet)?;
        let last = self.atoms.last().ok_or(SetError::EmptySet)?;
        // canonical atoms are sorted with disjoint spans, so the extreme
        // atoms hold the extreme endpoints
        let inf = first.lo.clone();
        let sup = self.atoms.iter().map(|a| &a.hi).max().unwrap_or(&last.hi).clone();
        Ok(Bounds { inf_attained: self.contains(&inf), sup_attained: self.contains(&sup), inf, sup })
    }

    pub fn inf(&self) -> Result<Rat, SetError> {
        self.bounds().map(|b| b.inf)
    }

    pub fn sup(&self) -> Result<Rat, SetError> {
        self.bounds().map(|b| b.sup)
    }

    /// Topological closure in `[0,1]`.
    pub fn closure(&self) -> RealSubset {
        let closed: Vec<Atom> = self
            .atoms
            .iter()
            .map(|a| Atom { lo: a.lo.clone(), hi: a.hi.clone(), lo_closed: true, hi_closed: true, tag: Tag::All })
            .collect();
        canonicalize(&closed)
    }

    pub fn is_closed(&self) -> bool {
        *self == self.closure()
    }

    /// True when the set is a finite set of points.
    pub fn is_finite(&self) -> bool {
        self.atoms.iter().all(Atom::is_point)
    }
}

impl fmt::Display for RealSubset {
    /// Prints in the set-expression grammar; the empty set prints as `![0,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("![0,1]");
        }
        for (k, atom) in self.atoms.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RealSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealSubset({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn closed(a: (i64, i64), b: (i64, i64)) -> RealSubset {
        RealSubset::closed_interval(rat(a.0, a.1), rat(b.0, b.1)).unwrap()
    }

    fn tagged(lo: Rat, hi: Rat, lc: bool, hc: bool, tag: Tag) -> RealSubset {
        RealSubset::interval(lo, hi, lc, hc, tag).unwrap()
    }

    #[test]
    fn rational_and_irrational_halves_merge() {
        let q = Atom::new(rat(0, 1), rat(1, 5), true, true, Tag::QOnly).unwrap();
        let i = Atom::new(rat(0, 1), rat(1, 5), true, true, Tag::IOnly).unwrap();
        assert_eq!(canonicalize(&[q, i]), closed((0, 1), (1, 5)));
    }

    #[test]
    fn overlapping_and_adjacent_merge() {
        let a = [Atom::closed(rat(1, 10), rat(3, 10)).unwrap(), Atom::closed(rat(1, 5), rat(1, 2)).unwrap()];
        assert_eq!(canonicalize(&a), closed((1, 10), (1, 2)));
        let b = [Atom::point(rat(1, 2)).unwrap(), Atom::new(rat(1, 2), rat(7, 10), false, true, Tag::All).unwrap()];
        assert_eq!(canonicalize(&b), closed((1, 2), (7, 10)));
    }

    #[test]
    fn union_of_tagged_parts() {
        let q = tagged(rat(0, 1), rat(1, 5), true, true, Tag::QOnly);
        let i = tagged(rat(0, 1), rat(1, 2), true, true, Tag::IOnly);
        let u = q.union(&i);
        let expected = [Atom::closed(rat(0, 1), rat(1, 5)).unwrap(), Atom::new(rat(1, 5), rat(1, 2), false, false, Tag::IOnly).unwrap()];
        assert_eq!(u.atoms(), &expected);
        assert_eq!(u.to_string(), "[0,1/5] | (1/5,1/2)&II");
        assert_eq!(q.union(&RealSubset::empty()), q);
    }

    #[test]
    fn intersections() {
        let a = closed((1, 10), (2, 5));
        let b = tagged(rat(1, 5), rat(3, 5), false, false, Tag::All);
        assert_eq!(a.intersect(&b), tagged(rat(1, 5), rat(2, 5), false, true, Tag::All));
        let q = tagged(rat(0, 1), rat(1, 2), true, true, Tag::QOnly);
        let i = tagged(rat(0, 1), rat(1, 2), true, true, Tag::IOnly);
        assert!(q.intersect(&i).is_empty());
    }

    #[test]
    fn complements() {
        let c = closed((1, 5), (1, 2)).complement();
        assert_eq!(c.to_string(), "[0,1/5) | (1/2,1]");
        assert_eq!(RealSubset::rationals().complement(), RealSubset::irrationals());
        assert_eq!(RealSubset::empty().complement(), RealSubset::full());
        assert_eq!(RealSubset::full().complement(), RealSubset::empty());
    }

    #[test]
    fn subset_queries() {
        let i_half = tagged(rat(0, 1), rat(1, 2), true, true, Tag::IOnly);
        assert!(!i_half.subset_of(&closed((0, 1), (2, 5))));
        let p = RealSubset::points([rat(3, 10)]).unwrap();
        assert!(p.subset_of(&closed((3, 10), (3, 10))));
        let q1 = tagged(rat(1, 5), rat(1, 2), true, true, Tag::QOnly);
        let q2 = tagged(rat(1, 10), rat(3, 5), true, true, Tag::QOnly);
        assert!(q1.subset_of(&q2));
        assert!(closed((1, 5), (1, 2)).subset_of(&closed((1, 10), (3, 5))));
    }

    #[test]
    fn bounds_examples() {
        let s = tagged(rat(1, 5), rat(2, 5), false, true, Tag::QOnly);
        let b = s.bounds().unwrap();
        assert_eq!((b.inf, b.sup, b.inf_attained, b.sup_attained), (rat(1, 5), rat(2, 5), false, true));
        let t = RealSubset::points([rat(2, 5), rat(1, 2), rat(3, 5)]).unwrap();
        let b = t.bounds().unwrap();
        assert_eq!((b.inf, b.sup, b.inf_attained, b.sup_attained), (rat(2, 5), rat(3, 5), true, true));
        let b = closed((3, 10), (7, 10)).bounds().unwrap();
        assert!(b.inf_attained && b.sup_attained);
        assert_eq!(RealSubset::empty().bounds(), Err(SetError::EmptySet));
        let irr = tagged(rat(1, 5), rat(2, 5), true, true, Tag::IOnly);
        let b = irr.bounds().unwrap();
        assert!(!b.inf_attained && !b.sup_attained);
    }

    #[test]
    fn closures() {
        let s = tagged(rat(1, 5), rat(2, 5), false, false, Tag::QOnly);
        assert_eq!(s.closure(), closed((1, 5), (2, 5)));
        let c = closed((3, 10), (7, 10));
        assert_eq!(c.closure(), c);
        assert!(c.is_closed());
        assert!(!s.is_closed());
        let xi = tagged(rat(0, 1), rat(1, 5), true, true, Tag::QOnly).union(&tagged(rat(0, 1), rat(1, 2), true, true, Tag::IOnly));
        assert_eq!(xi.closure(), closed((0, 1), (1, 2)));
    }

    #[test]
    fn membership() {
        let q = tagged(rat(1, 10), rat(2, 5), true, true, Tag::QOnly);
        assert!(q.contains(&rat(3, 10)));
        let i = tagged(rat(1, 10), rat(2, 5), true, true, Tag::IOnly);
        assert!(!i.contains(&rat(3, 10)));
        let h = tagged(rat(1, 2), rat(1, 1), false, true, Tag::All);
        assert!(!h.contains(&rat(1, 2)));
        assert!(h.contains(&rat(1, 1)));
    }

    #[test]
    fn atom_validation() {
        assert!(matches!(Atom::new(rat(1, 2), rat(1, 2), true, true, Tag::IOnly), Err(SetError::EmptyAtom(_))));
        assert!(matches!(Atom::new(rat(1, 2), rat(1, 2), false, true, Tag::All), Err(SetError::EmptyAtom(_))));
        assert!(matches!(Atom::closed(rat(1, 2), rat(1, 5)), Err(SetError::Inverted { .. })));
        assert!(matches!(Atom::closed(rat(0, 1), rat(3, 2)), Err(SetError::OutOfRange(_))));
    }

    #[test]
    fn irrational_gaps_with_an_isolated_point() {
        let i = RealSubset::irrationals();
        let p = RealSubset::points([rat(1, 2)]).unwrap();
        let s = i.union(&p);
        assert_eq!(s.to_string(), "(0,1/2)&II | {1/2} | (1/2,1)&II");
        assert_eq!(s.difference(&p), i);
    }
}
