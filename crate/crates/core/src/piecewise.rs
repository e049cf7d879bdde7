//! Grade functions `[0,1] -> [0,1]` as tagged-piecewise-affine maps.
//!
//! A [`PiecewiseFn`] is stored on a minimal cut grid `0 = c0 < … < cn = 1`:
//! one value per cut, and per open gap one affine map for the rationals and
//! one for the irrationals. Pointwise max/min split gaps at the rational
//! crossing point of two affine maps, so the class is closed under both and
//! equality stays structural.

use std::fmt;

use thiserror::Error;

use crate::grade_lattices::{ClosedSubset, MonotonePwa};
use crate::lattice::Lattice;
use crate::rat::Rat;
use crate::set_algebra::{cut_points, Atom, RealSubset, SetError, Tag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PiecewiseError {
    #[error("pieces do not partition [0,1]: {0}")]
    NotPartition(String),
    #[error("value outside [0,1]: {0}")]
    OutOfRange(String),
    #[error("invalid delta_f map: {0}")]
    InvalidF(String),
    #[error(transparent)]
    Set(#[from] SetError),
}

/// `t -> slope * t + offset`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Affine {
    pub slope: Rat,
    pub offset: Rat,
}

impl Affine {
    pub fn new(slope: Rat, offset: Rat) -> Affine {
        Affine { slope, offset }
    }

    pub fn constant(c: Rat) -> Affine {
        Affine { slope: Rat::zero(), offset: c }
    }

    pub fn identity() -> Affine {
        Affine { slope: Rat::one(), offset: Rat::zero() }
    }

    /// The affine map through `(x0, y0)` and `(x1, y1)`; `x0 != x1`.
    pub fn through(x0: &Rat, y0: &Rat, x1: &Rat, y1: &Rat) -> Affine {
        let slope = (y1 - y0) / (x1 - x0);
        let offset = y0 - &slope * x0;
        Affine { slope, offset }
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        &self.slope * t + &self.offset
    }

    /// Abscissa where `self` and `other` agree, if they are not parallel.
    fn crossing(&self, other: &Affine) -> Option<Rat> {
        if self.slope == other.slope {
            None
        } else {
            Some((&other.offset - &self.offset) / (&self.slope - &other.slope))
        }
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slope.is_zero() {
            return write!(f, "{}", self.offset);
        }
        if self.slope == Rat::one() {
            f.write_str("t")?;
        } else if self.slope == -Rat::one() {
            f.write_str("-t")?;
        } else {
            write!(f, "{}*t", self.slope)?;
        }
        if self.offset.is_negative() {
            write!(f, " - {}", self.offset.abs())
        } else if !self.offset.is_zero() {
            write!(f, " + {}", self.offset)
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Maps on one open gap: `q` applies to its rationals, `i` to its irrationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Channels {
    q: Affine,
    i: Affine,
}

impl Channels {
    fn uniform(map: Affine) -> Channels {
        Channels { q: map.clone(), i: map }
    }
}

/// One rendered piece: an atom of `[0,1]` and the affine map on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub atom: Atom,
    pub map: Affine,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PiecewiseFn {
    cuts: Vec<Rat>,
    values: Vec<Rat>,
    gaps: Vec<Channels>,
}

fn merge_cuts(lists: &[&[Rat]]) -> Vec<Rat> {
    let mut cuts: Vec<Rat> = lists.iter().flat_map(|l| l.iter().cloned()).collect();
    cuts.sort();
    cuts.dedup();
    cuts
}

impl PiecewiseFn {
    fn build(cuts: Vec<Rat>, values: Vec<Rat>, gaps: Vec<Channels>) -> PiecewiseFn {
        debug_assert_eq!(cuts.len(), values.len());
        debug_assert_eq!(cuts.len(), gaps.len() + 1);
        let n = cuts.len();
        let mut out_cuts = vec![cuts[0].clone()];
        let mut out_values = vec![values[0].clone()];
        let mut out_gaps: Vec<Channels> = vec![gaps[0].clone()];
        for k in 1..n - 1 {
            let left = out_gaps.last().expect("nonempty");
            if *left == gaps[k] && left.q.eval(&cuts[k]) == values[k] {
                continue;
            }
            out_cuts.push(cuts[k].clone());
            out_values.push(values[k].clone());
            out_gaps.push(gaps[k].clone());
        }
        out_cuts.push(cuts[n - 1].clone());
        out_values.push(values[n - 1].clone());
        PiecewiseFn { cuts: out_cuts, values: out_values, gaps: out_gaps }
    }

    fn check_range(&self) -> Result<(), PiecewiseError> {
        for (c, v) in self.cuts.iter().zip(&self.values) {
            if !v.in_unit() {
                return Err(PiecewiseError::OutOfRange(format!("value {v} at {c}")));
            }
        }
        for (k, ch) in self.gaps.iter().enumerate() {
            for map in [&ch.q, &ch.i] {
                for end in [&self.cuts[k], &self.cuts[k + 1]] {
                    let v = map.eval(end);
                    if !v.in_unit() {
                        return Err(PiecewiseError::OutOfRange(format!("{map} reaches {v} at {end}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn constant(c: Rat) -> PiecewiseFn {
        assert!(c.in_unit(), "constant grade {c} outside [0,1]");
        let map = Affine::constant(c.clone());
        PiecewiseFn::build(vec![Rat::zero(), Rat::one()], vec![c.clone(), c], vec![Channels::uniform(map)])
    }

    pub fn zero() -> PiecewiseFn {
        PiecewiseFn::constant(Rat::zero())
    }

    pub fn identity() -> PiecewiseFn {
        PiecewiseFn::build(vec![Rat::zero(), Rat::one()], vec![Rat::zero(), Rat::one()], vec![Channels::uniform(Affine::identity())])
    }

    pub fn from_monotone(m: &MonotonePwa) -> PiecewiseFn {
        let bps = m.breakpoints();
        let cuts = bps.iter().map(|(t, _)| t.clone()).collect();
        let values = bps.iter().map(|(_, v)| v.clone()).collect();
        let gaps = bps.windows(2).map(|w| Channels::uniform(Affine::through(&w[0].0, &w[0].1, &w[1].0, &w[1].1))).collect();
        PiecewiseFn::build(cuts, values, gaps)
    }

    /// Builds a function from explicit pieces, which must partition `[0,1]`:
    /// every rational lies in exactly one piece admitting rationals and every
    /// open gap's irrationals in exactly one piece admitting irrationals.
    pub fn from_pieces(pieces: &[Piece]) -> Result<PiecewiseFn, PiecewiseError> {
        let mut cuts = vec![Rat::zero(), Rat::one()];
        for p in pieces {
            cuts.push(p.atom.lo().clone());
            cuts.push(p.atom.hi().clone());
        }
        cuts.sort();
        cuts.dedup();
        let mut values = Vec::with_capacity(cuts.len());
        for c in &cuts {
            let mut holders = pieces.iter().filter(|p| p.atom.contains(c));
            match (holders.next(), holders.next()) {
                (Some(p), None) => values.push(p.map.eval(c)),
                (None, _) => return Err(PiecewiseError::NotPartition(format!("{c} is not covered"))),
                (Some(_), Some(_)) => return Err(PiecewiseError::NotPartition(format!("{c} is covered twice"))),
            }
        }
        let mut gaps = Vec::with_capacity(cuts.len() - 1);
        for w in cuts.windows(2) {
            let spanning: Vec<&Piece> =
                pieces.iter().filter(|p| !p.atom.is_point() && p.atom.lo() <= &w[0] && p.atom.hi() >= &w[1]).collect();
            let pick = |admits: fn(Tag) -> bool, what: &str| -> Result<Affine, PiecewiseError> {
                let mut it = spanning.iter().filter(|p| admits(p.atom.tag()));
                match (it.next(), it.next()) {
                    (Some(p), None) => Ok(p.map.clone()),
                    (None, _) => Err(PiecewiseError::NotPartition(format!("{what} of ({},{}) are not covered", w[0], w[1]))),
                    _ => Err(PiecewiseError::NotPartition(format!("{what} of ({},{}) are covered twice", w[0], w[1]))),
                }
            };
            let q = pick(Tag::admits_rationals, "rationals")?;
            let i = pick(Tag::admits_irrationals, "irrationals")?;
            gaps.push(Channels { q, i });
        }
        let f = PiecewiseFn::build(cuts, values, gaps);
        f.check_range()?;
        Ok(f)
    }

    /// Value at the rational `t`.
    pub fn eval(&self, t: &Rat) -> Rat {
        match self.cuts.binary_search(t) {
            Ok(k) => self.values[k].clone(),
            Err(k) => {
                assert!(k > 0 && k < self.cuts.len(), "{t} outside [0,1]");
                self.gaps[k - 1].q.eval(t)
            }
        }
    }

    /// Value of the irrational channel's map on the gap containing `t`, for
    /// `t` strictly inside a gap. Used by oracles probing irrational points.
    pub fn eval_irrational_near(&self, t: &Rat) -> Option<Rat> {
        match self.cuts.binary_search(t) {
            Ok(_) => None,
            Err(k) if k > 0 && k < self.cuts.len() => Some(self.gaps[k - 1].i.eval(t)),
            Err(_) => None,
        }
    }

    pub fn cuts(&self) -> &[Rat] {
        &self.cuts
    }

    /// Values and channel maps of `self` on the finer grid `cuts`.
    fn refine(&self, cuts: &[Rat]) -> (Vec<Rat>, Vec<Channels>) {
        let values = cuts.iter().map(|c| self.eval(c)).collect();
        let gaps = cuts
            .windows(2)
            .map(|w| {
                let k = self.cuts.partition_point(|c| c <= &w[0]);
                self.gaps[k - 1].clone()
            })
            .collect();
        (values, gaps)
    }

    fn envelope(&self, other: &PiecewiseFn, take_max: bool) -> PiecewiseFn {
        let base = merge_cuts(&[&self.cuts, &other.cuts]);
        let (_, fg) = self.refine(&base);
        let (_, gg) = other.refine(&base);
        let mut cuts = base.clone();
        for (k, w) in base.windows(2).enumerate() {
            for (a, b) in [(&fg[k].q, &gg[k].q), (&fg[k].i, &gg[k].i)] {
                if let Some(x) = a.crossing(b) {
                    if x > w[0] && x < w[1] {
                        cuts.push(x);
                    }
                }
            }
        }
        cuts.sort();
        cuts.dedup();
        let (fv, fg) = self.refine(&cuts);
        let (gv, gg) = other.refine(&cuts);
        let pick = |a: &Rat, b: &Rat| if (a >= b) == take_max { a.clone() } else { b.clone() };
        let values = fv.iter().zip(&gv).map(|(a, b)| pick(a, b)).collect();
        let gaps = cuts
            .windows(2)
            .enumerate()
            .map(|(k, w)| {
                let mid = w[0].midpoint(&w[1]);
                let choose = |a: &Affine, b: &Affine| {
                    if (a.eval(&mid) >= b.eval(&mid)) == take_max {
                        a.clone()
                    } else {
                        b.clone()
                    }
                };
                Channels { q: choose(&fg[k].q, &gg[k].q), i: choose(&fg[k].i, &gg[k].i) }
            })
            .collect();
        PiecewiseFn::build(cuts, values, gaps)
    }

    /// Pointwise `self <= other`: compares the values at every cut and each
    /// channel's affine map at both ends of every gap of the common grid.
    fn below(&self, other: &PiecewiseFn) -> bool {
        let cuts = merge_cuts(&[&self.cuts, &other.cuts]);
        let (fv, fg) = self.refine(&cuts);
        let (gv, gg) = other.refine(&cuts);
        fv.iter().zip(&gv).all(|(a, b)| a <= b)
            && cuts.windows(2).enumerate().all(|(k, w)| {
                [(&fg[k].q, &gg[k].q), (&fg[k].i, &gg[k].i)]
                    .iter()
                    .all(|(a, b)| a.eval(&w[0]) <= b.eval(&w[0]) && a.eval(&w[1]) <= b.eval(&w[1]))
            })
    }

    /// `on` inside `set`, `off` outside it.
    pub fn select(set: &RealSubset, on: &PiecewiseFn, off: &PiecewiseFn) -> PiecewiseFn {
        let cuts = merge_cuts(&[&cut_points([set]), &on.cuts, &off.cuts]);
        let layout = set.layout(&cuts);
        let (on_v, on_g) = on.refine(&cuts);
        let (off_v, off_g) = off.refine(&cuts);
        let values = (0..cuts.len()).map(|k| if layout.points[k] { on_v[k].clone() } else { off_v[k].clone() }).collect();
        let gaps = (0..cuts.len() - 1)
            .map(|k| Channels {
                q: if layout.gaps[k].q { on_g[k].q.clone() } else { off_g[k].q.clone() },
                i: if layout.gaps[k].i { on_g[k].i.clone() } else { off_g[k].i.clone() },
            })
            .collect();
        PiecewiseFn::build(cuts, values, gaps)
    }

    /// Canonical piece list. A gap whose two channels agree renders as one
    /// `All` piece, otherwise as a `QOnly` and an `IOnly` piece. A cut value
    /// joins the rational piece on its left if that map reaches it, else the
    /// one on its right, else it stands alone as a constant point piece.
    pub fn pieces(&self) -> Vec<Piece> {
        let n = self.cuts.len();
        let mut lo_closed = vec![false; n - 1];
        let mut hi_closed = vec![false; n - 1];
        let mut lone = vec![false; n];
        for k in 0..n {
            let c = &self.cuts[k];
            if k > 0 && self.gaps[k - 1].q.eval(c) == self.values[k] {
                hi_closed[k - 1] = true;
            } else if k < n - 1 && self.gaps[k].q.eval(c) == self.values[k] {
                lo_closed[k] = true;
            } else {
                lone[k] = true;
            }
        }
        let mut out = Vec::new();
        for k in 0..n {
            if lone[k] {
                out.push(Piece {
                    atom: Atom::point(self.cuts[k].clone()).expect("cut in [0,1]"),
                    map: Affine::constant(self.values[k].clone()),
                });
            }
            if k == n - 1 {
                break;
            }
            let (lo, hi) = (self.cuts[k].clone(), self.cuts[k + 1].clone());
            let ch = &self.gaps[k];
            if ch.q == ch.i {
                out.push(Piece { atom: Atom::new(lo, hi, lo_closed[k], hi_closed[k], Tag::All).expect("gap atom"), map: ch.q.clone() });
            } else {
                out.push(Piece {
                    atom: Atom::new(lo.clone(), hi.clone(), lo_closed[k], hi_closed[k], Tag::QOnly).expect("gap atom"),
                    map: ch.q.clone(),
                });
                out.push(Piece { atom: Atom::new(lo, hi, false, false, Tag::IOnly).expect("gap atom"), map: ch.i.clone() });
            }
        }
        out
    }
}

pub fn pw_eval(f: &PiecewiseFn, t: &Rat) -> Rat {
    f.eval(t)
}

pub fn pw_max(f: &PiecewiseFn, g: &PiecewiseFn) -> PiecewiseFn {
    f.envelope(g, true)
}

pub fn pw_min(f: &PiecewiseFn, g: &PiecewiseFn) -> PiecewiseFn {
    f.envelope(g, false)
}

pub fn pw_leq(f: &PiecewiseFn, g: &PiecewiseFn) -> bool {
    f.below(g)
}

pub fn pw_equal(f: &PiecewiseFn, g: &PiecewiseFn) -> bool {
    f == g
}

/// Indicator of `set`: 1 on it, 0 off it.
pub fn characteristic(set: &RealSubset) -> PiecewiseFn {
    PiecewiseFn::select(set, &PiecewiseFn::constant(Rat::one()), &PiecewiseFn::zero())
}

/// `δ` on any nonempty set: `inf C` on `[0, inf C]`, the identity on
/// `C ∩ (inf C, 1]`, 0 elsewhere. Injective only on closed sets.
pub fn delta_of_set(set: &RealSubset) -> Result<PiecewiseFn, SetError> {
    delta_with(set, &PiecewiseFn::identity(), |t| t.clone())
}

pub fn delta(c: &ClosedSubset) -> PiecewiseFn {
    delta_of_set(c.as_set()).expect("closed subsets are nonempty")
}

/// `δ_f` for a strictly increasing `f` with `f(0) = 0` and `f(1) = 1`.
pub fn delta_f(c: &ClosedSubset, f: &MonotonePwa) -> Result<PiecewiseFn, PiecewiseError> {
    check_delta_map(f)?;
    Ok(delta_with(c.as_set(), &PiecewiseFn::from_monotone(f), |t| f.eval(t))?)
}

pub fn check_delta_map(f: &MonotonePwa) -> Result<(), PiecewiseError> {
    if !f.is_strict() {
        return Err(PiecewiseError::InvalidF("not strictly increasing".into()));
    }
    if !f.eval(&Rat::zero()).is_zero() || f.eval(&Rat::one()) != Rat::one() {
        return Err(PiecewiseError::InvalidF("must fix 0 and 1".into()));
    }
    Ok(())
}

fn delta_with(set: &RealSubset, upper_map: &PiecewiseFn, at: impl Fn(&Rat) -> Rat) -> Result<PiecewiseFn, SetError> {
    let m = set.inf()?;
    let lower = RealSubset::closed_interval(Rat::zero(), m.clone())?;
    let above = if m < Rat::one() {
        set.intersect(&RealSubset::interval(m.clone(), Rat::one(), false, true, Tag::All)?)
    } else {
        RealSubset::empty()
    };
    let tail = PiecewiseFn::select(&above, upper_map, &PiecewiseFn::zero());
    Ok(PiecewiseFn::select(&lower, &PiecewiseFn::constant(at(&m)), &tail))
}

/// Which of the T2 grade shapes [`grade_constructor`] builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GradeShape {
    /// `t -> a`
    Const,
    /// 1 at `a`, 0 elsewhere.
    Singleton,
    /// 1 on `[0,a]`, 0 elsewhere.
    Below,
}

pub fn grade_constructor(a: &Rat, shape: GradeShape) -> Result<PiecewiseFn, SetError> {
    if !a.in_unit() {
        return Err(SetError::OutOfRange(a.clone()));
    }
    Ok(match shape {
        GradeShape::Const => PiecewiseFn::constant(a.clone()),
        GradeShape::Singleton => characteristic(&RealSubset::points([a.clone()])?),
        GradeShape::Below => characteristic(&RealSubset::closed_interval(Rat::zero(), a.clone())?),
    })
}

impl Lattice for PiecewiseFn {
    fn join(&self, other: &PiecewiseFn) -> PiecewiseFn {
        pw_max(self, other)
    }

    fn meet(&self, other: &PiecewiseFn) -> PiecewiseFn {
        pw_min(self, other)
    }

    fn leq(&self, other: &PiecewiseFn) -> bool {
        self.below(other)
    }
}

impl fmt::Display for PiecewiseFn {
    /// `pw(ATOM: MAP; …)` in the grade-expression grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("pw(")?;
        for (k, piece) in self.pieces().iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}: {}", piece.atom, piece.map)?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for PiecewiseFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn from_channels(cuts: Vec<Rat>, values: Vec<Rat>, gaps: Vec<(Affine, Affine)>) -> PiecewiseFn {
    let f = PiecewiseFn::build(cuts, values, gaps.into_iter().map(|(q, i)| Channels { q, i }).collect());
    debug_assert!(f.check_range().is_ok());
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn closed(lo: Rat, hi: Rat) -> RealSubset {
        RealSubset::closed_interval(lo, hi).unwrap()
    }

    fn closed_set(s: RealSubset) -> ClosedSubset {
        ClosedSubset::new(s).unwrap()
    }

    /// `[0.3,0.4] ∪ {0.6}`
    fn c_example() -> ClosedSubset {
        closed_set(closed(rat(3, 10), rat(2, 5)).union(&RealSubset::points([rat(3, 5)]).unwrap()))
    }

    fn piece(atom: Atom, slope: Rat, offset: Rat) -> Piece {
        Piece { atom, map: Affine::new(slope, offset) }
    }

    #[test]
    fn evaluation() {
        assert_eq!(PiecewiseFn::identity().eval(&rat(3, 10)), rat(3, 10));
        let chi = characteristic(&closed(rat(1, 5), rat(1, 2)));
        assert_eq!(chi.eval(&rat(3, 5)), Rat::zero());
        assert_eq!(chi.eval(&rat(1, 2)), Rat::one());
        assert_eq!(delta(&c_example()).eval(&rat(7, 20)), rat(7, 20));
    }

    #[test]
    fn max_splits_at_crossing() {
        let m = pw_max(&PiecewiseFn::identity(), &PiecewiseFn::constant(rat(1, 2)));
        assert_eq!(m.to_string(), "pw([0,1/2]: 1/2; (1/2,1]: t)");
        let n = pw_min(&PiecewiseFn::identity(), &PiecewiseFn::constant(rat(1, 2)));
        assert_eq!(n.to_string(), "pw([0,1/2]: t; (1/2,1]: 1/2)");
        let f = delta(&c_example());
        assert_eq!(pw_min(&f, &f), f);
    }

    #[test]
    fn delta_example_shape() {
        let f = delta(&c_example());
        assert_eq!(f.to_string(), "pw([0,3/10]: 3/10; (3/10,2/5]: t; (2/5,3/5): 0; {3/5}: 3/5; (3/5,1]: 0)");
        let expected = PiecewiseFn::from_pieces(&[
            piece(Atom::closed(rat(0, 1), rat(3, 10)).unwrap(), Rat::zero(), rat(3, 10)),
            piece(Atom::new(rat(3, 10), rat(2, 5), false, true, Tag::All).unwrap(), Rat::one(), Rat::zero()),
            piece(Atom::new(rat(2, 5), rat(3, 5), false, false, Tag::All).unwrap(), Rat::zero(), Rat::zero()),
            piece(Atom::point(rat(3, 5)).unwrap(), Rat::zero(), rat(3, 5)),
            piece(Atom::new(rat(3, 5), rat(1, 1), false, true, Tag::All).unwrap(), Rat::zero(), Rat::zero()),
        ])
        .unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn delta_of_a_point_and_of_everything() {
        let f = delta(&closed_set(RealSubset::points([rat(7, 10)]).unwrap()));
        assert_eq!(f.to_string(), "pw([0,7/10]: 7/10; (7/10,1]: 0)");
        assert_eq!(delta(&closed_set(RealSubset::full())), PiecewiseFn::identity());
    }

    #[test]
    fn delta_is_not_injective_off_closed_sets() {
        let half_open = RealSubset::interval(rat(1, 5), rat(1, 2), false, true, Tag::All).unwrap();
        let closed_iv = closed(rat(1, 5), rat(1, 2));
        assert_eq!(delta_of_set(&half_open).unwrap(), delta_of_set(&closed_iv).unwrap());
    }

    #[test]
    fn delta_f_examples() {
        let c = c_example();
        assert_eq!(delta_f(&c, &MonotonePwa::identity()).unwrap(), delta(&c));
        let f = MonotonePwa::new(vec![(rat(0, 1), rat(0, 1)), (rat(1, 2), rat(1, 4)), (rat(1, 1), rat(1, 1))]).unwrap();
        let g = delta_f(&closed_set(RealSubset::points([rat(1, 2)]).unwrap()), &f).unwrap();
        assert_eq!(g.to_string(), "pw([0,1/2]: 1/4; (1/2,1]: 0)");
        let not_strict = MonotonePwa::constant(rat(1, 2)).unwrap();
        assert!(matches!(delta_f(&c, &not_strict), Err(PiecewiseError::InvalidF(_))));
        let no_fix = MonotonePwa::new(vec![(rat(0, 1), rat(0, 1)), (rat(1, 1), rat(1, 2))]).unwrap();
        assert!(matches!(delta_f(&c, &no_fix), Err(PiecewiseError::InvalidF(_))));
    }

    #[test]
    fn delta_respects_closed_join_instance() {
        use crate::grade_lattices::{closed_join, closed_meet};
        let c = closed_set(closed(rat(1, 5), rat(3, 5)));
        let d = closed_set(closed(rat(3, 10), rat(1, 2)).union(&RealSubset::points([rat(4, 5)]).unwrap()));
        assert_eq!(pw_max(&delta(&c), &delta(&d)), delta(&closed_join(&c, &d)));
        assert_eq!(pw_min(&delta(&c), &delta(&d)), delta(&closed_meet(&c, &d)));
    }

    #[test]
    fn characteristic_shapes() {
        assert_eq!(characteristic(&RealSubset::empty()), PiecewiseFn::zero());
        let xi = RealSubset::interval(rat(0, 1), rat(1, 5), true, true, Tag::QOnly)
            .unwrap()
            .union(&RealSubset::interval(rat(0, 1), rat(1, 2), true, true, Tag::IOnly).unwrap());
        let chi = characteristic(&xi);
        assert_eq!(chi.to_string(), "pw([0,1/5]: 1; (1/5,1/2]&QQ: 0; (1/5,1/2)&II: 1; (1/2,1]: 0)");
        assert_ne!(characteristic(&RealSubset::rationals()), characteristic(&RealSubset::irrationals()));
    }

    #[test]
    fn grade_shapes() {
        let c = grade_constructor(&rat(1, 2), GradeShape::Const).unwrap();
        assert_eq!(c.to_string(), "pw([0,1]: 1/2)");
        let s = grade_constructor(&rat(1, 2), GradeShape::Singleton).unwrap();
        assert_eq!(s.to_string(), "pw([0,1/2): 0; {1/2}: 1; (1/2,1]: 0)");
        let b = grade_constructor(&rat(1, 2), GradeShape::Below).unwrap();
        assert_eq!(b.to_string(), "pw([0,1/2]: 1; (1/2,1]: 0)");
        assert!(grade_constructor(&rat(3, 2), GradeShape::Const).is_err());
    }

    #[test]
    fn from_pieces_rejects_gaps_and_overlaps() {
        let only_left = [piece(Atom::closed(rat(0, 1), rat(1, 2)).unwrap(), Rat::zero(), Rat::zero())];
        assert!(matches!(PiecewiseFn::from_pieces(&only_left), Err(PiecewiseError::NotPartition(_))));
        let overlap = [
            piece(Atom::closed(rat(0, 1), rat(1, 2)).unwrap(), Rat::zero(), Rat::zero()),
            piece(Atom::closed(rat(1, 2), rat(1, 1)).unwrap(), Rat::zero(), Rat::zero()),
        ];
        assert!(matches!(PiecewiseFn::from_pieces(&overlap), Err(PiecewiseError::NotPartition(_))));
        let too_high = [piece(Atom::closed(rat(0, 1), rat(1, 1)).unwrap(), rat(2, 1), Rat::zero())];
        assert!(matches!(PiecewiseFn::from_pieces(&too_high), Err(PiecewiseError::OutOfRange(_))));
    }

    #[test]
    fn pieces_roundtrip() {
        for f in [delta(&c_example()), characteristic(&RealSubset::rationals()), PiecewiseFn::identity()] {
            assert_eq!(PiecewiseFn::from_pieces(&f.pieces()).unwrap(), f);
        }
    }
}
