//! Fuzzy-set families over finite universes.
//!
//! A [`FuzzySet<G>`] assigns a grade of type `G` to every label of a
//! [`Universe`]. The five families are
//!
//! | family | grade |
//! |--------|-------|
//! | FS     | [`Rat`] |
//! | IVFS   | [`Interval`] |
//! | SVFS   | [`RealSubset`] |
//! | CVFS   | [`ClosedSubset`] |
//! | T2FS   | [`PiecewiseFn`] |
//!
//! and every operation on them is the pointwise lifting of the grade-level
//! operation. [`AnyFuzzySet`] is the dynamically typed view used by documents
//! and the command line.

mod cuts;
pub mod embeddings;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::grade_lattices::{s_order, ClosedSubset, Interval};
use crate::lattice::Lattice;
use crate::piecewise::PiecewiseFn;
use crate::rat::Rat;
use crate::set_algebra::RealSubset;

pub use cuts::{cut, cut_family, cut_reconstruct, CutFamily, LabelSet};
pub use embeddings::{lift_grade_map, GradeMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuzzyError {
    #[error("a universe needs at least one label")]
    EmptyUniverse,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("no grade given for label `{0}`")]
    MissingLabel(String),
    #[error("fuzzy sets live on different universes")]
    UniverseMismatch,
    #[error("expected a {expected} fuzzy set, found {found}")]
    FamilyMismatch { expected: Family, found: Family },
    #[error("empty grade at `{0}` in a strict set-valued fuzzy set")]
    EmptyGrade(String),
    #[error("grade count {found} does not match universe size {expected}")]
    GradeCount { expected: usize, found: usize },
    #[error("invalid cut family: {0}")]
    InvalidNesting(String),
    #[error("invalid grade: {0}")]
    InvalidGrade(String),
}

/// A nonempty ordered list of distinct labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    labels: Arc<[String]>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Universe, FuzzyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(FuzzyError::EmptyUniverse);
        }
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                return Err(FuzzyError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe { labels: labels.into() })
    }

    /// `x1, …, xn`.
    pub fn numbered(n: usize) -> Universe {
        Universe::new((1..=n.max(1)).map(|k| format!("x{k}"))).expect("distinct labels")
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sub-universe keeping the labels at `keep` (in order).
    pub fn restrict(&self, keep: &[usize]) -> Result<Universe, FuzzyError> {
        Universe::new(keep.iter().map(|&k| self.labels[k].clone()))
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

/// A total map from a universe's labels to grades of type `G`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FuzzySet<G> {
    universe: Universe,
    grades: Vec<G>,
}

pub type Fs = FuzzySet<Rat>;
pub type Ivfs = FuzzySet<Interval>;
pub type Svfs = FuzzySet<RealSubset>;
pub type Cvfs = FuzzySet<ClosedSubset>;
pub type T2fs = FuzzySet<PiecewiseFn>;

impl<G> FuzzySet<G> {
    /// Grades in universe order.
    pub fn new(universe: Universe, grades: Vec<G>) -> Result<FuzzySet<G>, FuzzyError> {
        if grades.len() != universe.len() {
            return Err(FuzzyError::GradeCount { expected: universe.len(), found: grades.len() });
        }
        Ok(FuzzySet { universe, grades })
    }

    /// Grades by label; every label of the universe must appear exactly once.
    pub fn from_pairs<I, S>(universe: Universe, pairs: I) -> Result<FuzzySet<G>, FuzzyError>
    where
        I: IntoIterator<Item = (S, G)>,
        S: AsRef<str>,
    {
        let mut slots: Vec<Option<G>> = (0..universe.len()).map(|_| None).collect();
        for (label, grade) in pairs {
            let label = label.as_ref();
            let k = universe.index_of(label).ok_or_else(|| FuzzyError::UnknownLabel(label.to_string()))?;
            if slots[k].replace(grade).is_some() {
                return Err(FuzzyError::DuplicateLabel(label.to_string()));
            }
        }
        let grades = slots
            .into_iter()
            .enumerate()
            .map(|(k, g)| g.ok_or_else(|| FuzzyError::MissingLabel(universe.labels[k].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FuzzySet { universe, grades })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn grades(&self) -> &[G] {
        &self.grades
    }

    pub fn grade(&self, label: &str) -> Option<&G> {
        self.universe.index_of(label).map(|k| &self.grades[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &G)> {
        self.universe.labels.iter().map(String::as_str).zip(self.grades.iter())
    }

    /// Pointwise image `h ∘ A`.
    pub fn map<H>(&self, f: impl Fn(&G) -> H) -> FuzzySet<H> {
        FuzzySet { universe: self.universe.clone(), grades: self.grades.iter().map(f).collect() }
    }

    pub fn try_map<H, E>(&self, f: impl Fn(&G) -> Result<H, E>) -> Result<FuzzySet<H>, E> {
        let grades = self.grades.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(FuzzySet { universe: self.universe.clone(), grades })
    }

    pub fn zip_with<H>(&self, other: &FuzzySet<G>, f: impl Fn(&G, &G) -> H) -> Result<FuzzySet<H>, FuzzyError> {
        if self.universe != other.universe {
            return Err(FuzzyError::UniverseMismatch);
        }
        let grades = self.grades.iter().zip(&other.grades).map(|(a, b)| f(a, b)).collect();
        Ok(FuzzySet { universe: self.universe.clone(), grades })
    }

    /// Holds for every label.
    pub fn all_pairs(&self, other: &FuzzySet<G>, f: impl Fn(&G, &G) -> bool) -> Result<bool, FuzzyError> {
        if self.universe != other.universe {
            return Err(FuzzyError::UniverseMismatch);
        }
        Ok(self.grades.iter().zip(&other.grades).all(|(a, b)| f(a, b)))
    }

    /// Keeps the labels at `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Result<FuzzySet<G>, FuzzyError>
    where
        G: Clone,
    {
        Ok(FuzzySet { universe: self.universe.restrict(keep)?, grades: keep.iter().map(|&k| self.grades[k].clone()).collect() })
    }

    /// Replaces the grade at index `k`.
    pub fn with_grade(&self, k: usize, grade: G) -> FuzzySet<G>
    where
        G: Clone,
    {
        let mut grades = self.grades.clone();
        grades[k] = grade;
        FuzzySet { universe: self.universe.clone(), grades }
    }
}

impl<G: Lattice> FuzzySet<G> {
    pub fn join(&self, other: &FuzzySet<G>) -> Result<FuzzySet<G>, FuzzyError> {
        self.zip_with(other, G::join)
    }

    pub fn meet(&self, other: &FuzzySet<G>) -> Result<FuzzySet<G>, FuzzyError> {
        self.zip_with(other, G::meet)
    }

    pub fn leq(&self, other: &FuzzySet<G>) -> Result<bool, FuzzyError> {
        self.all_pairs(other, G::leq)
    }
}

impl Svfs {
    /// `⊓` on strict SVFS, where an empty grade is an error.
    pub fn meet_strict(&self, other: &Svfs) -> Result<Svfs, FuzzyError> {
        let m = self.meet(other)?;
        let empty = m.iter().find(|(_, g)| g.is_empty()).map(|(label, _)| label.to_string());
        match empty {
            Some(label) => Err(FuzzyError::EmptyGrade(label)),
            None => Ok(m),
        }
    }

    /// Pointwise `≤_S`; grades must be nonempty.
    pub fn s_leq(&self, other: &Svfs) -> Result<bool, FuzzyError> {
        if self.universe != other.universe {
            return Err(FuzzyError::UniverseMismatch);
        }
        let mut ok = true;
        for (a, b) in self.grades.iter().zip(&other.grades) {
            ok &= s_order(a, b).map_err(|e| FuzzyError::InvalidGrade(e.to_string()))?;
        }
        Ok(ok)
    }
}

impl<G: fmt::Display> fmt::Display for FuzzySet<G> {
    /// `x1: grade; x2: grade` in the document grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (label, g)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{label}: {g}")?;
        }
        Ok(())
    }
}

impl<G: fmt::Display> fmt::Debug for FuzzySet<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Fs,
    Ivfs,
    Svfs,
    Cvfs,
    T2fs,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Fs => "fs",
            Family::Ivfs => "ivfs",
            Family::Svfs => "svfs",
            Family::Cvfs => "cvfs",
            Family::T2fs => "t2fs",
        })
    }
}

/// A fuzzy set of any family. Set-valued sets carry the empty-grade policy:
/// strict sets (`empty_allowed == false`) reject empty grades.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyFuzzySet {
    Fs(Fs),
    Ivfs(Ivfs),
    Svfs { set: Svfs, empty_allowed: bool },
    Cvfs(Cvfs),
    T2fs(T2fs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineOp {
    Join,
    Meet,
}

impl AnyFuzzySet {
    /// A strict set-valued fuzzy set; fails on empty grades.
    pub fn strict_svfs(set: Svfs) -> Result<AnyFuzzySet, FuzzyError> {
        if let Some((label, _)) = set.iter().find(|(_, g)| g.is_empty()) {
            return Err(FuzzyError::EmptyGrade(label.to_string()));
        }
        Ok(AnyFuzzySet::Svfs { set, empty_allowed: false })
    }

    pub fn family(&self) -> Family {
        match self {
            AnyFuzzySet::Fs(_) => Family::Fs,
            AnyFuzzySet::Ivfs(_) => Family::Ivfs,
            AnyFuzzySet::Svfs { .. } => Family::Svfs,
            AnyFuzzySet::Cvfs(_) => Family::Cvfs,
            AnyFuzzySet::T2fs(_) => Family::T2fs,
        }
    }

    pub fn universe(&self) -> &Universe {
        match self {
            AnyFuzzySet::Fs(a) => a.universe(),
            AnyFuzzySet::Ivfs(a) => a.universe(),
            AnyFuzzySet::Svfs { set, .. } => set.universe(),
            AnyFuzzySet::Cvfs(a) => a.universe(),
            AnyFuzzySet::T2fs(a) => a.universe(),
        }
    }
}

impl fmt::Display for AnyFuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyFuzzySet::Fs(a) => write!(f, "{a}"),
            AnyFuzzySet::Ivfs(a) => write!(f, "{a}"),
            AnyFuzzySet::Svfs { set, .. } => write!(f, "{set}"),
            AnyFuzzySet::Cvfs(a) => write!(f, "{a}"),
            AnyFuzzySet::T2fs(a) => write!(f, "{a}"),
        }
    }
}

fn mismatch(a: &AnyFuzzySet, b: &AnyFuzzySet) -> FuzzyError {
    FuzzyError::FamilyMismatch { expected: a.family(), found: b.family() }
}

fn apply<G: Lattice>(op: CombineOp, a: &FuzzySet<G>, b: &FuzzySet<G>) -> Result<FuzzySet<G>, FuzzyError> {
    match op {
        CombineOp::Join => a.join(b),
        CombineOp::Meet => a.meet(b),
    }
}

/// Applies the family's grade-level join or meet label by label.
///
/// A strict SVFS meet that produces an empty grade fails with
/// [`FuzzyError::EmptyGrade`]; if either operand allows empty grades the
/// result does too.
pub fn pointwise_combine(op: CombineOp, a: &AnyFuzzySet, b: &AnyFuzzySet) -> Result<AnyFuzzySet, FuzzyError> {
    use AnyFuzzySet::*;
    Ok(match (a, b) {
        (Fs(x), Fs(y)) => Fs(apply(op, x, y)?),
        (Ivfs(x), Ivfs(y)) => Ivfs(apply(op, x, y)?),
        (Cvfs(x), Cvfs(y)) => Cvfs(apply(op, x, y)?),
        (T2fs(x), T2fs(y)) => T2fs(apply(op, x, y)?),
        (Svfs { set: x, empty_allowed: ex }, Svfs { set: y, empty_allowed: ey }) => {
            let empty_allowed = *ex || *ey;
            let set = match (op, empty_allowed) {
                (CombineOp::Meet, false) => x.meet_strict(y)?,
                _ => apply(op, x, y)?,
            };
            Svfs { set, empty_allowed }
        }
        _ => return Err(mismatch(a, b)),
    })
}

/// The family's pointwise order: `≤` for FS, `≤_I` for IVFS, inclusion for
/// SVFS, `≤_S` for CVFS, pointwise `≤` for T2FS.
pub fn pointwise_order(a: &AnyFuzzySet, b: &AnyFuzzySet) -> Result<bool, FuzzyError> {
    use AnyFuzzySet::*;
    match (a, b) {
        (Fs(x), Fs(y)) => x.leq(y),
        (Ivfs(x), Ivfs(y)) => x.leq(y),
        (Svfs { set: x, .. }, Svfs { set: y, .. }) => x.leq(y),
        (Cvfs(x), Cvfs(y)) => x.leq(y),
        (T2fs(x), T2fs(y)) => x.leq(y),
        _ => Err(mismatch(a, b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn u1() -> Universe {
        Universe::new(["x"]).unwrap()
    }

    fn closed(lo: Rat, hi: Rat) -> RealSubset {
        RealSubset::closed_interval(lo, hi).unwrap()
    }

    #[test]
    fn universe_validation() {
        assert_eq!(Universe::new(Vec::<String>::new()), Err(FuzzyError::EmptyUniverse));
        assert_eq!(Universe::new(["a", "a"]), Err(FuzzyError::DuplicateLabel("a".into())));
        let u = Universe::new(["a", "b"]).unwrap();
        assert_eq!(Fs::from_pairs(u.clone(), [("a", rat(1, 2))]), Err(FuzzyError::MissingLabel("b".into())));
        assert_eq!(Fs::from_pairs(u.clone(), [("a", rat(1, 2)), ("c", rat(1, 2))]), Err(FuzzyError::UnknownLabel("c".into())));
        let b_first = Fs::from_pairs(u.clone(), [("b", rat(1, 4)), ("a", rat(1, 2))]).unwrap();
        assert_eq!(b_first.grades(), &[rat(1, 2), rat(1, 4)]);
    }

    #[test]
    fn fs_meet() {
        let a = AnyFuzzySet::Fs(Fs::new(u1(), vec![rat(3, 10)]).unwrap());
        let b = AnyFuzzySet::Fs(Fs::new(u1(), vec![rat(1, 2)]).unwrap());
        assert_eq!(pointwise_combine(CombineOp::Meet, &a, &b).unwrap(), a);
    }

    #[test]
    fn strict_svfs_meet_reports_empty_grade() {
        let a = AnyFuzzySet::strict_svfs(Svfs::new(u1(), vec![RealSubset::points([rat(3, 10)]).unwrap()]).unwrap()).unwrap();
        let b = AnyFuzzySet::strict_svfs(Svfs::new(u1(), vec![RealSubset::points([rat(1, 2)]).unwrap()]).unwrap()).unwrap();
        assert_eq!(pointwise_combine(CombineOp::Meet, &a, &b), Err(FuzzyError::EmptyGrade("x".into())));
        let relaxed = match a {
            AnyFuzzySet::Svfs { set, .. } => AnyFuzzySet::Svfs { set, empty_allowed: true },
            _ => unreachable!(),
        };
        let m = pointwise_combine(CombineOp::Meet, &relaxed, &b).unwrap();
        assert!(matches!(m, AnyFuzzySet::Svfs { ref set, empty_allowed: true } if set.grades()[0].is_empty()));
    }

    #[test]
    fn cvfs_meet_of_interval_and_points() {
        let s = ClosedSubset::new(closed(rat(3, 10), rat(7, 10))).unwrap();
        let t = ClosedSubset::new(RealSubset::points([rat(2, 5), rat(1, 2), rat(3, 5)]).unwrap()).unwrap();
        let a = AnyFuzzySet::Cvfs(Cvfs::new(u1(), vec![s]).unwrap());
        let b = AnyFuzzySet::Cvfs(Cvfs::new(u1(), vec![t]).unwrap());
        let m = pointwise_combine(CombineOp::Meet, &a, &b).unwrap();
        assert_eq!(m.to_string(), "x: [3/10,2/5] | {1/2} | {3/5}");
    }

    #[test]
    fn orders() {
        let u = Universe::new(["x", "y"]).unwrap();
        let a = AnyFuzzySet::Fs(Fs::new(u.clone(), vec![rat(3, 10), rat(1, 5)]).unwrap());
        let b = AnyFuzzySet::Fs(Fs::new(u.clone(), vec![rat(2, 5), rat(1, 5)]).unwrap());
        assert!(pointwise_order(&a, &b).unwrap());
        let i = AnyFuzzySet::Ivfs(Ivfs::new(u1(), vec![Interval::new(rat(1, 5), rat(7, 10)).unwrap()]).unwrap());
        let j = AnyFuzzySet::Ivfs(Ivfs::new(u1(), vec![Interval::new(rat(3, 10), rat(3, 5)).unwrap()]).unwrap());
        assert!(!pointwise_order(&i, &j).unwrap());
        assert!(matches!(pointwise_order(&a, &i), Err(FuzzyError::FamilyMismatch { .. })));
    }

    #[test]
    fn universe_mismatch() {
        let a = Fs::new(u1(), vec![rat(1, 2)]).unwrap();
        let b = Fs::new(Universe::new(["y"]).unwrap(), vec![rat(1, 2)]).unwrap();
        assert_eq!(a.join(&b), Err(FuzzyError::UniverseMismatch));
    }
}
