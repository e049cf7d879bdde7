use std::collections::BTreeSet;
use std::fmt;

use num_traits::ToPrimitive;

use crate::grade_lattices::{closed_join, closed_meet, ClosedSubset};
use crate::lattice::Lattice;
use crate::rat::Rat;
use crate::set_algebra::RealSubset;

use super::{run_samples, GenParams, HarnessError, Report};

/// A finite subset of `{0, 1/n, …, 1}`, stored as numerators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSet {
    n: u32,
    elems: BTreeSet<u32>,
}

impl GridSet {
    pub fn new(n: u32, elems: impl IntoIterator<Item = u32>) -> Result<GridSet, HarnessError> {
        if n == 0 {
            return Err(HarnessError::NotOnGrid("grid size 0".into()));
        }
        let elems: BTreeSet<u32> = elems.into_iter().collect();
        if let Some(k) = elems.iter().find(|&&k| k > n) {
            return Err(HarnessError::NotOnGrid(format!("{k}/{n}")));
        }
        Ok(GridSet { n, elems })
    }

    /// Reads back a finite set of points of the grid.
    pub fn from_set(n: u32, set: &RealSubset) -> Result<GridSet, HarnessError> {
        let mut elems = BTreeSet::new();
        for atom in set.atoms() {
            if !atom.is_point() {
                return Err(HarnessError::NotOnGrid(atom.to_string()));
            }
            let scaled = atom.lo() * &Rat::from_integer(n.into());
            match scaled.is_integer().then(|| scaled.numer().to_u32()).flatten() {
                Some(k) if k <= n => elems.insert(k),
                _ => return Err(HarnessError::NotOnGrid(atom.lo().to_string())),
            };
        }
        Ok(GridSet { n, elems })
    }

    pub fn elems(&self) -> &BTreeSet<u32> {
        &self.elems
    }

    pub fn to_set(&self) -> RealSubset {
        RealSubset::points(self.elems.iter().map(|&k| Rat::new(k.into(), self.n.into()))).expect("grid points in [0,1]")
    }

    fn min(&self) -> u32 {
        *self.elems.first().expect("nonempty grid set")
    }

    fn max(&self) -> u32 {
        *self.elems.last().expect("nonempty grid set")
    }

    fn filter(&self, keep: impl Fn(u32) -> bool) -> GridSet {
        GridSet { n: self.n, elems: self.elems.iter().copied().filter(|&k| keep(k)).collect() }
    }
}

impl fmt::Display for GridSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_set(), f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridOp {
    Order,
    Union,
    Inter,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridValue {
    Bool(bool),
    Set(GridSet),
}

impl fmt::Display for GridValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridValue::Bool(b) => write!(f, "{b}"),
            GridValue::Set(s) => write!(f, "{s}"),
        }
    }
}

/// `≤_S`, `∪_S` and `∩_S` on nonempty grid sets by enumerating elements.
pub fn grid_oracle(op: GridOp, s: &GridSet, t: &GridSet) -> Result<GridValue, HarnessError> {
    if s.n != t.n {
        return Err(HarnessError::NotOnGrid(format!("grids 1/{} and 1/{} differ", s.n, t.n)));
    }
    if s.elems.is_empty() || t.elems.is_empty() {
        return Err(HarnessError::NotOnGrid("empty set".into()));
    }
    let (smin, smax, tmin, tmax) = (s.min(), s.max(), t.min(), t.max());
    let union = |x: &GridSet, y: &GridSet| GridSet { n: x.n, elems: x.elems.union(&y.elems).copied().collect() };
    Ok(match op {
        GridOp::Order => {
            let window_ok = s.elems.iter().filter(|&&k| tmin <= k && k <= smax).all(|k| t.elems.contains(k));
            GridValue::Bool(smax <= tmax && smin <= tmin && window_ok)
        }
        GridOp::Union if smin <= tmin => GridValue::Set(union(&s.filter(|k| tmin <= k && k <= smax), t)),
        GridOp::Union => GridValue::Set(union(&t.filter(|k| smin <= k && k <= tmax), s)),
        GridOp::Inter if smin <= tmin => GridValue::Set(s.filter(|k| k <= tmin || t.elems.contains(&k))),
        GridOp::Inter => GridValue::Set(t.filter(|k| k <= smin || s.elems.contains(&k))),
    })
}

fn symbolic(op: GridOp, s: &GridSet, t: &GridSet) -> Result<GridValue, HarnessError> {
    let cs = ClosedSubset::new(s.to_set()).map_err(|e| HarnessError::NotOnGrid(e.to_string()))?;
    let ct = ClosedSubset::new(t.to_set()).map_err(|e| HarnessError::NotOnGrid(e.to_string()))?;
    Ok(match op {
        GridOp::Order => GridValue::Bool(cs.leq(&ct)),
        GridOp::Union => GridValue::Set(GridSet::from_set(s.n, closed_join(&cs, &ct).as_set())?),
        GridOp::Inter => GridValue::Set(GridSet::from_set(s.n, closed_meet(&cs, &ct).as_set())?),
    })
}

/// Random grid pairs on `{0, 1/n, …, 1}` with `n = denominator_bound`:
/// the symbolic operators on point sets must match the enumeration.
pub fn compare_with_oracle(suite: &str, params: &GenParams) -> Report {
    let n = params.denominator_bound;
    run_samples(suite, params, |g, ch| {
        let s = GridSet::new(n, g.grid_elems(n)).expect("on grid");
        let t = if g.coin(0.1) { s.clone() } else { GridSet::new(n, g.grid_elems(n)).expect("on grid") };
        for (op, name) in [(GridOp::Order, "order"), (GridOp::Union, "union"), (GridOp::Inter, "intersection")] {
            let inputs = || format!("S = {s}; T = {t}");
            let expected = grid_oracle(op, &s, &t).map(|v| v.to_string()).unwrap_or_else(|e| e.to_string());
            let actual = symbolic(op, &s, &t).map(|v| v.to_string()).unwrap_or_else(|e| e.to_string());
            ch.eq(name, inputs, &expected, &actual);
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(ks: &[u32]) -> GridSet {
        GridSet::new(10, ks.iter().copied()).unwrap()
    }

    #[test]
    fn interval_points_on_the_tenths_grid() {
        let (s, t) = (grid(&[3, 5, 7]), grid(&[4, 5, 6]));
        for op in [GridOp::Order, GridOp::Union, GridOp::Inter] {
            assert_eq!(grid_oracle(op, &s, &t).unwrap(), symbolic(op, &s, &t).unwrap());
            assert_eq!(grid_oracle(op, &t, &s).unwrap(), symbolic(op, &t, &s).unwrap());
        }
        assert_eq!(grid_oracle(GridOp::Inter, &s, &t).unwrap(), GridValue::Set(grid(&[3, 5])));
    }

    #[test]
    fn idempotent_on_equal_inputs() {
        let s = grid(&[0, 2, 9]);
        assert_eq!(grid_oracle(GridOp::Union, &s, &s).unwrap(), GridValue::Set(s.clone()));
        assert_eq!(grid_oracle(GridOp::Inter, &s, &s).unwrap(), GridValue::Set(s.clone()));
        assert_eq!(grid_oracle(GridOp::Order, &s, &s).unwrap(), GridValue::Bool(true));
    }

    #[test]
    fn off_grid_values_are_rejected() {
        assert!(matches!(GridSet::new(10, [11]), Err(HarnessError::NotOnGrid(_))));
        let third = RealSubset::points([Rat::new(1, 3)]).unwrap();
        assert!(matches!(GridSet::from_set(10, &third), Err(HarnessError::NotOnGrid(_))));
        let interval = RealSubset::closed_interval(Rat::zero(), Rat::new(1, 2)).unwrap();
        assert!(matches!(GridSet::from_set(10, &interval), Err(HarnessError::NotOnGrid(_))));
    }
}
