use std::collections::BTreeSet;
use std::fmt::{self, Display};

use crate::fuzzy_universe::embeddings::{
    closed_inclusion, delta_f_lift, delta_lift, gamma, inclusion, iota, lambda, lambda_bar, mu_bar, omega, pair, phi, phi_bar, theta,
    xi_lift,
};
use crate::fuzzy_universe::{cut, cut_family, cut_reconstruct, FuzzySet, LabelSet};
use crate::grade_lattices::{
    closed_join, closed_meet, hesitant_inter, hesitant_union, interval_join, interval_leq, interval_meet, s_order, s_union, xi,
    ClosedSubset, Interval, MonotonePwa,
};
use crate::lattice::Lattice;
use crate::piecewise::{characteristic, delta, delta_f, pw_max, pw_min, Affine, Piece, PiecewiseFn};
use crate::rat::Rat;
use crate::set_algebra::{Atom, RealSubset, Tag};

use super::{run_samples, Checks, GenParams, Report};

fn show3(a: &impl Display, b: &impl Display, c: &impl Display) -> String {
    format!("a = {a}; b = {b}; c = {c}")
}

fn show2(a: &impl Display, b: &impl Display) -> String {
    format!("a = {a}; b = {b}")
}

/// Commutativity, associativity, idempotence, absorption and agreement of
/// `leq` with both operations, on one triple.
fn axioms<T, J, M, L>(ch: &mut Checks, join: J, meet: M, leq: L, a: &T, b: &T, c: &T)
where
    T: PartialEq + Display,
    J: Fn(&T, &T) -> T,
    M: Fn(&T, &T) -> T,
    L: Fn(&T, &T) -> bool,
{
    let inputs = || show3(a, b, c);
    let ab = join(a, b);
    let mab = meet(a, b);
    ch.eq("join commutes", inputs, &ab, &join(b, a));
    ch.eq("meet commutes", inputs, &mab, &meet(b, a));
    ch.eq("join associates", inputs, &join(&ab, c), &join(a, &join(b, c)));
    ch.eq("meet associates", inputs, &meet(&mab, c), &meet(a, &meet(b, c)));
    ch.eq("join idempotent", inputs, a, &join(a, a));
    ch.eq("meet idempotent", inputs, a, &meet(a, a));
    ch.eq("join absorbs meet", inputs, a, &join(a, &mab));
    ch.eq("meet absorbs join", inputs, a, &meet(a, &ab));
    let le = leq(a, b);
    ch.eq("a <= b iff a join b = b", inputs, &le, &(ab == *b));
    ch.eq("a <= b iff a meet b = a", inputs, &le, &(mab == *a));
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Structure {
    Interval,
    Closed,
    Powerset,
    Piecewise,
    Fs,
    Ivfs,
    /// Set-valued with empty grades allowed.
    Svfs,
    Cvfs,
    T2fs,
    /// `(∪_H, ∩_H)` on closed sets, ordered by `≤_S`. Not a lattice.
    Hesitant,
}

fn lift_join<G: Lattice>(a: &FuzzySet<G>, b: &FuzzySet<G>) -> FuzzySet<G> {
    a.join(b).expect("one universe")
}

fn lift_meet<G: Lattice>(a: &FuzzySet<G>, b: &FuzzySet<G>) -> FuzzySet<G> {
    a.meet(b).expect("one universe")
}

fn lift_leq<G: Lattice>(a: &FuzzySet<G>, b: &FuzzySet<G>) -> bool {
    a.leq(b).expect("one universe")
}

fn lattice_on<T, F>(ch: &mut Checks, mut gen: F)
where
    T: Lattice + Display,
    F: FnMut() -> T,
{
    let (a, b, c) = (gen(), gen(), gen());
    axioms(ch, T::join, T::meet, T::leq, &a, &b, &c);
}

fn fuzzy_lattice_on<G, F>(ch: &mut Checks, mut gen: F)
where
    G: Lattice + Display,
    F: FnMut() -> FuzzySet<G>,
{
    let (a, b, c) = (gen(), gen(), gen());
    axioms(ch, lift_join, lift_meet, lift_leq, &a, &b, &c);
}

/// Bounds and the sampled least/greatest bound property of `(∪_S, ∩_S)`
/// on closed sets.
fn closed_bounds(ch: &mut Checks, a: &ClosedSubset, b: &ClosedSubset, c: &ClosedSubset) {
    let inputs = || show3(a, b, c);
    let j = closed_join(a, b);
    let m = closed_meet(a, b);
    ch.holds("a <= a join b", inputs, a.leq(&j));
    ch.holds("b <= a join b", inputs, b.leq(&j));
    ch.holds("a meet b <= a", inputs, m.leq(a));
    ch.holds("a meet b <= b", inputs, m.leq(b));
    for u in [c.clone(), closed_join(c, a), closed_join(&j, c)] {
        if a.leq(&u) && b.leq(&u) {
            ch.holds("join below every upper bound", || format!("{}; u = {u}", inputs()), j.leq(&u));
        }
    }
    for l in [c.clone(), closed_meet(c, a), closed_meet(&m, c)] {
        if l.leq(a) && l.leq(b) {
            ch.holds("meet above every lower bound", || format!("{}; l = {l}", inputs()), l.leq(&m));
        }
    }
}

pub fn check_lattice_axioms(structure: Structure, suite: &str, params: &GenParams) -> Report {
    run_samples(suite, params, |g, ch| match structure {
        Structure::Interval => lattice_on(ch, || g.interval()),
        Structure::Closed => {
            let (a, b, c) = (g.closed_subset(), g.closed_subset(), g.closed_subset());
            axioms(ch, ClosedSubset::join, ClosedSubset::meet, ClosedSubset::leq, &a, &b, &c);
            closed_bounds(ch, &a, &b, &c);
        }
        Structure::Powerset => lattice_on(ch, || g.real_subset_or_empty()),
        Structure::Piecewise => lattice_on(ch, || g.piecewise()),
        Structure::Fs => fuzzy_lattice_on(ch, || g.fs()),
        Structure::Ivfs => fuzzy_lattice_on(ch, || g.ivfs()),
        Structure::Svfs => fuzzy_lattice_on(ch, || g.svfs_or_empty()),
        Structure::Cvfs => fuzzy_lattice_on(ch, || g.cvfs()),
        Structure::T2fs => fuzzy_lattice_on(ch, || g.t2fs()),
        Structure::Hesitant => {
            let (a, b, c) = (g.closed_subset(), g.closed_subset(), g.closed_subset());
            let (a, b, c) = (a.as_set(), b.as_set(), c.as_set());
            let join = |x: &RealSubset, y: &RealSubset| hesitant_union(x, y).expect("nonempty");
            let meet = |x: &RealSubset, y: &RealSubset| hesitant_inter(x, y).expect("nonempty");
            let leq = |x: &RealSubset, y: &RealSubset| s_order(x, y).expect("nonempty");
            axioms(ch, join, meet, leq, a, b, c);
        }
    })
}

/// `map(a ∨ b) = map(a) ∨ map(b)`, the same for meets, and `a ≠ b ⟹ map(a) ≠ map(b)`.
#[allow(clippy::too_many_arguments)]
fn preserves<S, T>(
    ch: &mut Checks,
    map: impl Fn(&S) -> T,
    src_join: impl Fn(&S, &S) -> S,
    src_meet: impl Fn(&S, &S) -> S,
    tgt_join: impl Fn(&T, &T) -> T,
    tgt_meet: impl Fn(&T, &T) -> T,
    a: &S,
    b: &S,
) where
    S: PartialEq + Display,
    T: PartialEq + Display,
{
    let inputs = || show2(a, b);
    let (fa, fb) = (map(a), map(b));
    ch.eq("preserves join", inputs, &map(&src_join(a, b)), &tgt_join(&fa, &fb));
    ch.eq("preserves meet", inputs, &map(&src_meet(a, b)), &tgt_meet(&fa, &fb));
    if a != b && fa == fb {
        ch.fail("injective", inputs(), "distinct images", format!("both map to {fa}"));
    }
}

fn lattice_map<S, T>(ch: &mut Checks, map: impl Fn(&S) -> T, a: &S, b: &S)
where
    S: Lattice + Display,
    T: Lattice + Display,
{
    preserves(ch, map, S::join, S::meet, T::join, T::meet, a, b);
}

fn fuzzy_map<G, H>(ch: &mut Checks, map: impl Fn(&FuzzySet<G>) -> FuzzySet<H>, a: &FuzzySet<G>, b: &FuzzySet<G>)
where
    G: Lattice + Display,
    H: Lattice + Display,
{
    preserves(ch, map, lift_join, lift_meet, lift_join, lift_meet, a, b);
}

/// The named maps checked for lattice-embedding behavior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomMap {
    /// FS to SVFS, `[0, A(x)]`.
    Theta,
    /// IVFS to SVFS, lifted `ξ`.
    XiLift,
    /// Intervals to subsets of `[0,1]`.
    Xi,
    Phi,
    Omega,
    Lambda,
    /// A random `(h1, h2)` pair per sample.
    Pair,
    /// IVFS to CVFS.
    Inclusion,
    /// FS to CVFS through `Φ` then the inclusion.
    PhiThenInclusion,
    /// Closed sets to grade functions.
    Delta,
    DeltaLift,
    DeltaF(MonotonePwa),
    /// A random valid `f` per sample.
    DeltaFRandom,
    Gamma,
    /// Empty-allowed SVFS to T2FS.
    MuBar,
    /// Subsets of `[0,1]` to indicator functions.
    Chi,
    Iota,
    PhiBar,
}

/// The fixed `f` through `(0,0)`, `(1/2,1/4)`, `(1,1)`.
pub fn sample_delta_map() -> MonotonePwa {
    MonotonePwa::new(vec![(Rat::zero(), Rat::zero()), (Rat::new(1, 2), Rat::new(1, 4)), (Rat::one(), Rat::one())])
        .expect("strictly increasing")
}

pub fn check_homomorphism(map: &HomMap, suite: &str, params: &GenParams) -> Report {
    run_samples(suite, params, |g, ch| {
        let fs_pair = |g: &mut super::Gen| (g.fs(), g.fs());
        match map {
            HomMap::Theta => {
                let (a, b) = fs_pair(g);
                fuzzy_map(ch, theta, &a, &b);
            }
            HomMap::Phi => {
                let (a, b) = fs_pair(g);
                fuzzy_map(ch, phi, &a, &b);
            }
            HomMap::Omega => {
                let (a, b) = fs_pair(g);
                fuzzy_map(ch, omega, &a, &b);
            }
            HomMap::Lambda => {
                let (a, b) = fs_pair(g);
                fuzzy_map(ch, lambda, &a, &b);
            }
            HomMap::Pair => {
                let p = g.pair_embedding();
                let (a, b) = fs_pair(g);
                fuzzy_map(ch, |x| pair(x, &p), &a, &b);
            }
            HomMap::Gamma => {
                let (a, b) = fs_pair(g);
                fuzzy_map(ch, gamma, &a, &b);
            }
            HomMap::PhiThenInclusion => {
                let (a, b) = fs_pair(g);
                fuzzy_map(ch, |x| closed_inclusion(&phi(x)), &a, &b);
            }
            HomMap::Iota => {
                let (a, b) = fs_pair(g);
                fuzzy_map(ch, iota, &a, &b);
            }
            HomMap::PhiBar => {
                let (a, b) = fs_pair(g);
                fuzzy_map(ch, phi_bar, &a, &b);
            }
            HomMap::XiLift => {
                let (a, b) = (g.ivfs(), g.ivfs());
                fuzzy_map(ch, xi_lift, &a, &b);
            }
            HomMap::Inclusion => {
                let (a, b) = (g.ivfs(), g.ivfs());
                fuzzy_map(ch, closed_inclusion, &a, &b);
            }
            HomMap::Xi => {
                let (a, b) = (g.interval(), g.interval());
                lattice_map(ch, xi, &a, &b);
            }
            HomMap::Delta => {
                let (a, b) = (g.closed_subset(), g.closed_subset());
                lattice_map(ch, delta, &a, &b);
            }
            HomMap::DeltaLift => {
                let (a, b) = (g.cvfs(), g.cvfs());
                fuzzy_map(ch, delta_lift, &a, &b);
            }
            HomMap::DeltaF(f) => {
                let (a, b) = (g.cvfs(), g.cvfs());
                fuzzy_map(ch, |x| delta_f_lift(x, f), &a, &b);
            }
            HomMap::DeltaFRandom => {
                let f = g.strict_monotone(true);
                let (a, b) = (g.closed_subset(), g.closed_subset());
                lattice_map(ch, |x| delta_f(x, &f).expect("valid f"), &a, &b);
            }
            HomMap::MuBar => {
                let (a, b) = (g.svfs_or_empty(), g.svfs_or_empty());
                fuzzy_map(ch, mu_bar, &a, &b);
            }
            HomMap::Chi => {
                let (a, b) = (g.real_subset_or_empty(), g.real_subset_or_empty());
                lattice_map(ch, characteristic, &a, &b);
            }
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diagram {
    /// `Ξ ∘ Φ = Θ`
    XiPhi,
    /// `μ̄ ∘ Θ = Λ̄ = μ̄ ∘ i ∘ Λ`
    MuTheta,
    /// `μ̄ ∘ ι = Φ̄`
    MuIota,
    /// `Δ ∘ i ∘ Φ` against the grade `a` on `[0,a]`, 0 after, built piece by piece.
    DeltaPhi,
}

fn point_delta_direct(a: &Rat) -> PiecewiseFn {
    let mut pieces = vec![Piece { atom: Atom::closed(Rat::zero(), a.clone()).expect("unit"), map: Affine::constant(a.clone()) }];
    if *a < Rat::one() {
        pieces.push(Piece {
            atom: Atom::new(a.clone(), Rat::one(), false, true, Tag::All).expect("nonempty"),
            map: Affine::constant(Rat::zero()),
        });
    }
    PiecewiseFn::from_pieces(&pieces).expect("partition of [0,1]")
}

pub fn check_diagram(diagram: Diagram, suite: &str, params: &GenParams) -> Report {
    run_samples(suite, params, |g, ch| {
        let a = g.fs();
        let inputs = || format!("A = {a}");
        match diagram {
            Diagram::XiPhi => ch.eq("Xi after Phi equals Theta", inputs, &theta(&a), &xi_lift(&phi(&a))),
            Diagram::MuTheta => {
                let expected = lambda_bar(&a);
                ch.eq("mu-bar after Theta equals Lambda-bar", inputs, &expected, &mu_bar(&theta(&a)));
                ch.eq("mu-bar after i after Lambda equals Lambda-bar", inputs, &expected, &mu_bar(&inclusion(&lambda(&a))));
            }
            Diagram::MuIota => ch.eq("mu-bar after iota equals Phi-bar", inputs, &phi_bar(&a), &mu_bar(&iota(&a))),
            Diagram::DeltaPhi => {
                let direct = a.map(point_delta_direct);
                ch.eq("Delta after i after Phi equals the direct grade", inputs, &direct, &delta_lift(&closed_inclusion(&phi(&a))));
            }
        }
    })
}

struct Labels<'a>(&'a LabelSet);

impl Display for Labels<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<&str> = self.0.iter().map(String::as_str).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Cut roundtrip and cut-wise union and intersection.
pub(crate) fn check_cuts(suite: &str, params: &GenParams) -> Report {
    run_samples(suite, params, |g, ch| {
        let (a, b) = (g.fs(), g.fs());
        let inputs = || show2(&a, &b);
        let fam = cut_family(&a);
        ch.eq("reconstruct after cut family", inputs, &a, &cut_reconstruct(&fam));
        let (join, meet) = (lift_join(&a, &b), lift_meet(&a, &b));
        let mut levels: BTreeSet<Rat> = a.grades().iter().chain(b.grades()).cloned().collect();
        levels.insert(Rat::zero());
        levels.insert(g.unit());
        let mut prev: Option<LabelSet> = None;
        for t in &levels {
            let (at, bt) = (cut(&a, t), cut(&b, t));
            let at_t = || format!("{}; t = {t}", inputs());
            let union: LabelSet = at.union(&bt).cloned().collect();
            let inter: LabelSet = at.intersection(&bt).cloned().collect();
            ch.eq("cut of join is union of cuts", at_t, &Labels(&union), &Labels(&cut(&join, t)));
            ch.eq("cut of meet is intersection of cuts", at_t, &Labels(&inter), &Labels(&cut(&meet, t)));
            ch.eq("cut family agrees with cut", at_t, &Labels(&at), &Labels(&fam.at(t)));
            if let Some(p) = &prev {
                ch.holds("cuts shrink as t grows", at_t, at.is_subset(p));
            }
            prev = Some(at);
        }
    })
}

impl PartialEq for Labels<'_> {
    fn eq(&self, other: &Labels<'_>) -> bool {
        self.0 == other.0
    }
}

/// `∪_S`, `∩_S`, `≤_S` on interval-shaped closed sets against `∪_I`, `∩_I`, `≤_I`.
pub(crate) fn check_restriction(suite: &str, params: &GenParams) -> Report {
    run_samples(suite, params, |g, ch| {
        let (i, j) = (g.interval(), g.interval());
        let inputs = || show2(&i, &j);
        let (ci, cj) = (i.to_closed(), j.to_closed());
        ch.eq("closed join is interval join", inputs, &interval_join(&i, &j).to_closed(), &closed_join(&ci, &cj));
        ch.eq("closed meet is interval meet", inputs, &interval_meet(&i, &j).to_closed(), &closed_meet(&ci, &cj));
        ch.eq("s-order is interval order", inputs, &interval_leq(&i, &j), &ci.leq(&cj));
    })
}

/// Reflexivity, antisymmetry and transitivity of `≤_S` on nonempty sets.
pub(crate) fn check_s_order_poset(suite: &str, params: &GenParams) -> Report {
    run_samples(suite, params, |g, ch| {
        let (s, t, u) = (g.real_subset(), g.real_subset(), g.real_subset());
        let le = |x: &RealSubset, y: &RealSubset| s_order(x, y).expect("nonempty");
        let inputs = || show3(&s, &t, &u);
        ch.holds("reflexive", inputs, le(&s, &s));
        if le(&s, &t) && le(&t, &s) {
            ch.eq("antisymmetric", inputs, &s, &t);
        }
        // chains are rare among random triples; closed joins supply some
        let chain_t = s.closure().union(&t.closure());
        for (x, y, z) in [(&s, &t, &u), (&s, &chain_t, &u)] {
            if le(x, y) && le(y, z) {
                ch.holds("transitive", inputs, le(x, z));
            }
        }
    })
}

/// For a non-degenerate closed interval `I`: `I ⊆ J ⟺ I∩ℚ ⊆ J∩ℚ ⟺ I∩𝕀 ⊆ J∩𝕀`.
pub(crate) fn check_density(suite: &str, params: &GenParams) -> Report {
    run_samples(suite, params, |g, ch| {
        let i = g.interval();
        if i.lo() == i.hi() {
            return;
        }
        let j = if g.coin(0.5) {
            g.interval()
        } else {
            // widen or shrink `i` a little so that containment is often close
            let lo = g.unit_between(&Rat::zero(), i.lo());
            let hi = g.unit_between(i.hi(), &Rat::one());
            Interval::new(lo, hi).expect("ordered")
        };
        let (si, sj) = (i.to_set(), j.to_set());
        let q = RealSubset::rationals();
        let irr = RealSubset::irrationals();
        let inputs = || show2(&i, &j);
        let whole = si.subset_of(&sj);
        ch.eq("rational parts decide containment", inputs, &whole, &si.intersect(&q).subset_of(&sj.intersect(&q)));
        ch.eq("irrational parts decide containment", inputs, &whole, &si.intersect(&irr).subset_of(&sj.intersect(&irr)));
    })
}

/// Boolean algebra laws of the tagged set algebra, cross-checked by probing
/// membership at random rationals.
pub(crate) fn check_set_algebra(suite: &str, params: &GenParams) -> Report {
    run_samples(suite, params, |g, ch| {
        let (a, b, c) = (g.real_subset_or_empty(), g.real_subset_or_empty(), g.real_subset_or_empty());
        let inputs = || show3(&a, &b, &c);
        let full = RealSubset::full();
        ch.eq("union distributes", inputs, &a.union(&b.intersect(&c)), &a.union(&b).intersect(&a.union(&c)));
        ch.eq("intersection distributes", inputs, &a.intersect(&b.union(&c)), &a.intersect(&b).union(&a.intersect(&c)));
        ch.eq("de Morgan", inputs, &a.union(&b).complement(), &a.complement().intersect(&b.complement()));
        ch.eq("complement is involutive", inputs, &a, &a.complement().complement());
        ch.eq("excluded middle", inputs, &full, &a.union(&a.complement()));
        ch.eq("noncontradiction", inputs, &RealSubset::empty(), &a.intersect(&a.complement()));
        ch.eq("difference", inputs, &a.intersect(&b.complement()), &a.difference(&b));
        ch.eq("subset iff union", inputs, &a.subset_of(&b), &(a.union(&b) == b));
        let cl = a.closure();
        ch.holds("closure contains the set", inputs, a.subset_of(&cl));
        ch.holds("closure is closed", inputs, cl.is_closed());
        ch.eq("closure is idempotent", inputs, &cl, &cl.closure());
        let (u, i) = (a.union(&b), a.intersect(&b));
        for _ in 0..4 {
            let q = g.unit();
            let at = || format!("{}; q = {q}", inputs());
            ch.eq("union membership", at, &(a.contains(&q) || b.contains(&q)), &u.contains(&q));
            ch.eq("intersection membership", at, &(a.contains(&q) && b.contains(&q)), &i.contains(&q));
            ch.eq("complement membership", at, &!a.contains(&q), &a.complement().contains(&q));
        }
    })
}

/// `∪_H = ∪_S` on nonempty sets.
pub(crate) fn check_hesitant_union(suite: &str, params: &GenParams) -> Report {
    run_samples(suite, params, |g, ch| {
        let (s, t) = (g.real_subset(), g.real_subset());
        let inputs = || show2(&s, &t);
        ch.eq("hesitant union equals s-union", inputs, &s_union(&s, &t).expect("nonempty"), &hesitant_union(&s, &t).expect("nonempty"));
    })
}

/// Whether `∪_S` is a least upper bound for `≤_S` beyond closed sets.
pub(crate) fn check_s_union_lub(suite: &str, params: &GenParams) -> Report {
    run_samples(suite, params, |g, ch| {
        let (s, t, u) = (g.real_subset(), g.real_subset(), g.real_subset());
        let le = |x: &RealSubset, y: &RealSubset| s_order(x, y).expect("nonempty");
        let j = s_union(&s, &t).expect("nonempty");
        let inputs = || show3(&s, &t, &u);
        ch.holds("a <= a s-union b", inputs, le(&s, &j));
        ch.holds("b <= a s-union b", inputs, le(&t, &j));
        let u2 = s_union(&j, &u).expect("nonempty");
        for v in [&u, &u2] {
            if le(&s, v) && le(&t, v) {
                ch.holds("s-union below every upper bound", || format!("{}; u = {v}", inputs()), le(&j, v));
            }
        }
    })
}

/// Spot checks of `pw_max`/`pw_min` against pointwise evaluation.
pub(crate) fn check_piecewise_eval(suite: &str, params: &GenParams) -> Report {
    run_samples(suite, params, |g, ch| {
        let (f, h) = (g.piecewise(), g.piecewise());
        let (mx, mn) = (pw_max(&f, &h), pw_min(&f, &h));
        for _ in 0..6 {
            let t = g.unit();
            let at = || format!("{}; t = {t}", show2(&f, &h));
            let (a, b) = (f.eval(&t), h.eval(&t));
            ch.eq("max evaluates pointwise", at, &(&a).max(&b).clone(), &mx.eval(&t));
            ch.eq("min evaluates pointwise", at, &(&a).min(&b).clone(), &mn.eval(&t));
            if let (Some(a), Some(b), Some(m)) = (f.eval_irrational_near(&t), h.eval_irrational_near(&t), mx.eval_irrational_near(&t)) {
                ch.eq("max evaluates pointwise off the rationals", at, &(&a).max(&b).clone(), &m);
            }
        }
    })
}
