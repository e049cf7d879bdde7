//! Level cuts `A_t = {x | A(x) ≥ t}` and the step map `t -> A_t`.

use std::collections::BTreeSet;

use crate::rat::Rat;

use super::{Fs, FuzzyError, Universe};

pub type LabelSet = BTreeSet<String>;

pub fn cut(a: &Fs, t: &Rat) -> LabelSet {
    a.iter().filter(|(_, g)| *g >= t).map(|(l, _)| l.to_string()).collect()
}

/// The antitone map `t -> A_t` of a fuzzy set over a finite universe, stored
/// as its jumps: `A_t` equals the universe at `t = 0`, and for `t > 0` it is
/// the set of the smallest threshold `>= t` (empty past the last one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutFamily {
    universe: Universe,
    levels: Vec<(Rat, LabelSet)>,
}

impl CutFamily {
    /// Thresholds must be strictly increasing in `(0,1]` with nested,
    /// shrinking label sets drawn from the universe.
    pub fn new(universe: Universe, levels: Vec<(Rat, LabelSet)>) -> Result<CutFamily, FuzzyError> {
        let bad = |msg: String| Err(FuzzyError::InvalidNesting(msg));
        for (k, (t, set)) in levels.iter().enumerate() {
            if t.is_zero() || t.is_negative() || !t.in_unit() {
                return bad(format!("threshold {t} outside (0,1]"));
            }
            if let Some(label) = set.iter().find(|l| universe.index_of(l).is_none()) {
                return bad(format!("unknown label `{label}`"));
            }
            if k > 0 {
                let (prev_t, prev_set) = &levels[k - 1];
                if prev_t >= t {
                    return bad(format!("thresholds {prev_t} and {t} out of order"));
                }
                if !set.is_subset(prev_set) {
                    return bad(format!("cut at {t} is not contained in the cut at {prev_t}"));
                }
            }
        }
        Ok(CutFamily { universe, levels })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn thresholds(&self) -> impl Iterator<Item = &Rat> {
        self.levels.iter().map(|(t, _)| t)
    }

    pub fn levels(&self) -> &[(Rat, LabelSet)] {
        &self.levels
    }

    /// `A_t` for any `t` in `[0,1]`.
    pub fn at(&self, t: &Rat) -> LabelSet {
        if t.is_zero() {
            return self.universe.labels().iter().cloned().collect();
        }
        let k = self.levels.partition_point(|(s, _)| s < t);
        self.levels.get(k).map(|(_, set)| set.clone()).unwrap_or_default()
    }
}

/// Jumps of `t -> A_t`: one level per distinct positive grade.
pub fn cut_family(a: &Fs) -> CutFamily {
    let mut thresholds: Vec<Rat> = a.grades().iter().filter(|g| !g.is_zero()).cloned().collect();
    thresholds.sort();
    thresholds.dedup();
    let levels = thresholds.into_iter().map(|t| {
        let set = cut(a, &t);
        (t, set)
    });
    CutFamily { universe: a.universe().clone(), levels: levels.collect() }
}

/// `A(x) = max {t | x ∈ A_t}`, or 0 when `x` is in no positive cut.
pub fn cut_reconstruct(cf: &CutFamily) -> Fs {
    let grades = cf
        .universe
        .labels()
        .iter()
        .map(|label| cf.levels.iter().rev().find(|(_, set)| set.contains(label)).map(|(t, _)| t.clone()).unwrap_or_else(Rat::zero))
        .collect();
    Fs::new(cf.universe.clone(), grades).expect("one grade per label")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn labels(ls: &[&str]) -> LabelSet {
        ls.iter().map(|s| s.to_string()).collect()
    }

    fn example() -> Fs {
        Fs::new(Universe::new(["x1", "x2"]).unwrap(), vec![rat(3, 10), rat(7, 10)]).unwrap()
    }

    #[test]
    fn cuts_of_example() {
        let a = example();
        assert_eq!(cut(&a, &rat(1, 2)), labels(&["x2"]));
        assert_eq!(cut(&a, &Rat::zero()), labels(&["x1", "x2"]));
        let cf = cut_family(&a);
        assert_eq!(cf.levels(), &[(rat(3, 10), labels(&["x1", "x2"])), (rat(7, 10), labels(&["x2"]))]);
        assert_eq!(cut_reconstruct(&cf), a);
        assert_eq!(cf.at(&rat(1, 2)), labels(&["x2"]));
        assert_eq!(cf.at(&rat(4, 5)), labels(&[]));
    }

    #[test]
    fn constant_zero_has_no_levels() {
        let a = Fs::new(Universe::numbered(3), vec![Rat::zero(); 3]).unwrap();
        let cf = cut_family(&a);
        assert!(cf.levels().is_empty());
        assert_eq!(cf.at(&Rat::zero()).len(), 3);
        assert_eq!(cut_reconstruct(&cf), a);
    }

    #[test]
    fn invalid_nesting_is_rejected() {
        let u = Universe::new(["x1", "x2"]).unwrap();
        let grow = vec![(rat(1, 5), labels(&["x1"])), (rat(1, 2), labels(&["x1", "x2"]))];
        assert!(matches!(CutFamily::new(u.clone(), grow), Err(FuzzyError::InvalidNesting(_))));
        let unordered = vec![(rat(1, 2), labels(&["x1"])), (rat(1, 5), labels(&["x1"]))];
        assert!(matches!(CutFamily::new(u.clone(), unordered), Err(FuzzyError::InvalidNesting(_))));
        let zero = vec![(Rat::zero(), labels(&["x1"]))];
        assert!(matches!(CutFamily::new(u.clone(), zero), Err(FuzzyError::InvalidNesting(_))));
        let ok = CutFamily::new(u, vec![(rat(1, 5), labels(&["x1", "x2"])), (rat(1, 2), labels(&["x2"]))]).unwrap();
        assert_eq!(cut_reconstruct(&ok).grades(), &[rat(1, 5), rat(1, 2)]);
    }
}
