use std::fmt;

use crate::grade_lattices::GradeError;
use crate::rat::Rat;

/// A continuous, nondecreasing, piecewise-affine map `[0,1] -> [0,1]` given
/// by its breakpoints `(t, value)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonotonePwa {
    breakpoints: Vec<(Rat, Rat)>,
    strict: bool,
}

impl MonotonePwa {
    /// Breakpoints must start at `t = 0`, end at `t = 1`, have strictly
    /// increasing abscissae and nondecreasing values in `[0,1]`.
    pub fn new(breakpoints: Vec<(Rat, Rat)>) -> Result<MonotonePwa, GradeError> {
        let bad = |msg: &str| Err(GradeError::InvalidMonotone(msg.to_string()));
        if breakpoints.len() < 2 {
            return bad("need at least two breakpoints");
        }
        if !breakpoints[0].0.is_zero() || breakpoints[breakpoints.len() - 1].0 != Rat::one() {
            return bad("breakpoints must span [0,1]");
        }
        if breakpoints.iter().any(|(_, v)| !v.in_unit()) {
            return bad("values must lie in [0,1]");
        }
        let mut strict = true;
        for w in breakpoints.windows(2) {
            if w[0].0 >= w[1].0 {
                return bad("abscissae must strictly increase");
            }
            if w[0].1 > w[1].1 {
                return bad("values must not decrease");
            }
            strict &= w[0].1 < w[1].1;
        }
        Ok(MonotonePwa { breakpoints, strict })
    }

    pub fn identity() -> MonotonePwa {
        MonotonePwa::new(vec![(Rat::zero(), Rat::zero()), (Rat::one(), Rat::one())]).expect("valid")
    }

    pub fn constant(c: Rat) -> Result<MonotonePwa, GradeError> {
        MonotonePwa::new(vec![(Rat::zero(), c.clone()), (Rat::one(), c)])
    }

    pub fn breakpoints(&self) -> &[(Rat, Rat)] {
        &self.breakpoints
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let k = self.breakpoints.partition_point(|(x, _)| x <= t);
        if k == 0 {
            return self.breakpoints[0].1.clone();
        }
        if k == self.breakpoints.len() {
            return self.breakpoints[k - 1].1.clone();
        }
        let (x0, y0) = &self.breakpoints[k - 1];
        let (x1, y1) = &self.breakpoints[k];
        y0 + (y1 - y0) * (t - x0) / (x1 - x0)
    }

    /// Checks `self(s) <= other(s)` on all of `[0,1]`. Both maps are affine
    /// between the union of their breakpoints, so those points suffice.
    pub fn below(&self, other: &MonotonePwa) -> bool {
        self.breakpoints.iter().chain(other.breakpoints.iter()).all(|(t, _)| self.eval(t) <= other.eval(t))
    }
}

impl fmt::Display for MonotonePwa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (t, v)) in self.breakpoints.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}:{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonotonePwa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonotonePwa({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn evaluation_interpolates() {
        let f = MonotonePwa::new(vec![(rat(0, 1), rat(0, 1)), (rat(1, 2), rat(1, 4)), (rat(1, 1), rat(1, 1))]).unwrap();
        assert!(f.is_strict());
        assert_eq!(f.eval(&rat(1, 2)), rat(1, 4));
        assert_eq!(f.eval(&rat(1, 4)), rat(1, 8));
        assert_eq!(f.eval(&rat(3, 4)), rat(5, 8));
        assert_eq!(f.eval(&rat(1, 1)), rat(1, 1));
    }

    #[test]
    fn constants_are_not_strict() {
        let c = MonotonePwa::constant(rat(1, 2)).unwrap();
        assert!(!c.is_strict());
        assert!(c.below(&MonotonePwa::constant(rat(1, 1)).unwrap()));
        assert!(!c.below(&MonotonePwa::identity()));
    }

    #[test]
    fn rejects_decreasing() {
        assert!(MonotonePwa::new(vec![(rat(0, 1), rat(1, 2)), (rat(1, 1), rat(0, 1))]).is_err());
        assert!(MonotonePwa::new(vec![(rat(0, 1), rat(0, 1)), (rat(1, 2), rat(1, 1))]).is_err());
    }
}
