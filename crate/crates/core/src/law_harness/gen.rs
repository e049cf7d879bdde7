use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fuzzy_universe::{Cvfs, Fs, FuzzySet, Ivfs, Svfs, T2fs, Universe};
use crate::grade_lattices::{ClosedSubset, Interval, MonotonePwa, PairEmbedding};
use crate::piecewise::{from_channels, Affine, PiecewiseFn};
use crate::rat::Rat;
use crate::set_algebra::{Atom, RealSubset, Tag};

use super::GenParams;

/// FNV-1a, so stream keys stay stable across toolchains.
fn name_hash(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

/// Random values for one sample. Each `(seed, stream name, index)` triple
/// owns an independent ChaCha stream, so samples can run in any order.
pub struct Gen {
    rng: ChaCha8Rng,
    params: GenParams,
    universe: Universe,
}

impl Gen {
    pub fn new(params: &GenParams, stream: &str, index: u64) -> Gen {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ name_hash(stream));
        rng.set_stream(index);
        Gen { rng, params: params.clone(), universe: Universe::numbered(params.universe_size) }
    }

    pub fn params(&self) -> &GenParams {
        &self.params
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    fn denominator(&mut self) -> u32 {
        self.rng.gen_range(1..=self.params.denominator_bound)
    }

    /// A value `k/d` in `[0,1]` with `d <= denominator_bound`.
    pub fn unit(&mut self) -> Rat {
        let d = self.denominator();
        let k = self.rng.gen_range(0..=d);
        Rat::new(k.into(), d.into())
    }

    /// A bounded-denominator value in `[lo, hi]`, or `lo` if the draw finds none.
    pub fn unit_between(&mut self, lo: &Rat, hi: &Rat) -> Rat {
        for _ in 0..8 {
            let d = self.denominator();
            let lo_k = ceil_times(lo, d);
            let hi_k = floor_times(hi, d);
            if lo_k <= hi_k {
                let k = self.rng.gen_range(lo_k..=hi_k);
                return Rat::new(k, d.into());
            }
        }
        lo.clone()
    }

    /// `n` distinct values in `(0,1)`, sorted.
    fn interior(&mut self, n: usize) -> Vec<Rat> {
        let mut out: Vec<Rat> = Vec::with_capacity(n);
        let mut tries = 0;
        while out.len() < n && tries < 64 * n.max(1) {
            tries += 1;
            let t = self.unit();
            if !t.is_zero() && t != Rat::one() && !out.contains(&t) {
                out.push(t);
            }
        }
        out.sort();
        out
    }

    fn distinct_pair(&mut self) -> (Rat, Rat) {
        loop {
            let (a, b) = (self.unit(), self.unit());
            if a != b {
                return if a < b { (a, b) } else { (b, a) };
            }
        }
    }

    fn atom_count(&mut self) -> usize {
        self.rng.gen_range(1..=self.params.max_atoms)
    }

    pub fn interval(&mut self) -> Interval {
        let (a, b) = (self.unit(), self.unit());
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Interval::new(lo, hi).expect("ordered unit endpoints")
    }

    /// Raw atoms of a closed set: points and closed intervals.
    pub fn closed_atoms(&mut self) -> Vec<Atom> {
        (0..self.atom_count())
            .map(|_| {
                if self.coin(0.4) {
                    Atom::point(self.unit()).expect("unit point")
                } else {
                    let (lo, hi) = self.distinct_pair();
                    Atom::closed(lo, hi).expect("ordered")
                }
            })
            .collect()
    }

    pub fn closed_subset(&mut self) -> ClosedSubset {
        let atoms = self.closed_atoms();
        ClosedSubset::new(RealSubset::from_atoms(&atoms)).expect("nonempty union of closed atoms")
    }

    fn tag(&mut self) -> Tag {
        *[Tag::All, Tag::All, Tag::QOnly, Tag::IOnly].choose(&mut self.rng).expect("nonempty")
    }

    /// One nonempty atom with random tag and endpoint flags.
    pub fn tagged_atom(&mut self) -> Atom {
        loop {
            let tag = self.tag();
            let candidate = if self.coin(0.25) {
                let p = self.unit();
                Atom::new(p.clone(), p, true, true, tag)
            } else {
                let (lo, hi) = self.distinct_pair();
                Atom::new(lo, hi, self.coin(0.5), self.coin(0.5), tag)
            };
            if let Ok(atom) = candidate {
                return atom;
            }
        }
    }

    pub fn tagged_atoms(&mut self) -> Vec<Atom> {
        (0..self.atom_count()).map(|_| self.tagged_atom()).collect()
    }

    /// A nonempty subset built from tagged, possibly half-open atoms.
    pub fn real_subset(&mut self) -> RealSubset {
        RealSubset::from_atoms(&self.tagged_atoms())
    }

    /// Like [`Gen::real_subset`] but empty with small probability.
    pub fn real_subset_or_empty(&mut self) -> RealSubset {
        if self.coin(0.1) {
            RealSubset::empty()
        } else {
            self.real_subset()
        }
    }

    fn endpoint_map(&mut self, lo: &Rat, hi: &Rat) -> Affine {
        let (y0, y1) = (self.unit(), self.unit());
        Affine::through(lo, &y0, hi, &y1)
    }

    /// A grade function with up to `max_atoms` spans, independent values at
    /// the cuts and, on some spans, a separate map for irrational arguments.
    pub fn piecewise(&mut self) -> PiecewiseFn {
        let inner = self.rng.gen_range(0..self.params.max_atoms);
        let mut cuts = vec![Rat::zero()];
        cuts.extend(self.interior(inner));
        cuts.push(Rat::one());
        let values = cuts.iter().map(|_| self.unit()).collect();
        let gaps = cuts
            .windows(2)
            .map(|w| {
                let q = self.endpoint_map(&w[0], &w[1]);
                let i = if self.coin(0.6) { q.clone() } else { self.endpoint_map(&w[0], &w[1]) };
                (q, i)
            })
            .collect();
        from_channels(cuts, values, gaps)
    }

    /// A strictly increasing map; with `fix_ends` it also fixes 0 and 1.
    pub fn strict_monotone(&mut self, fix_ends: bool) -> MonotonePwa {
        let inner = self.rng.gen_range(0..=3);
        let xs = self.interior(inner);
        let n = xs.len();
        let values = if fix_ends {
            let mut v = vec![Rat::zero()];
            v.extend(self.interior(n));
            v.push(Rat::one());
            v
        } else {
            let mut v = self.interior(n + 2);
            v.sort();
            v
        };
        if values.len() != n + 2 {
            return MonotonePwa::identity();
        }
        let mut abscissae = vec![Rat::zero()];
        abscissae.extend(xs);
        abscissae.push(Rat::one());
        MonotonePwa::new(abscissae.into_iter().zip(values).collect()).expect("strictly increasing by construction")
    }

    /// `h1` strictly increasing, `h2 >= h1` nondecreasing on the same breakpoints.
    pub fn pair_embedding(&mut self) -> PairEmbedding {
        let h1 = self.strict_monotone(false);
        let mut floor = Rat::zero();
        let upper: Vec<(Rat, Rat)> = h1
            .breakpoints()
            .iter()
            .map(|(x, v)| {
                let lo = if *v > floor { v.clone() } else { floor.clone() };
                floor = self.unit_between(&lo, &Rat::one());
                (x.clone(), floor.clone())
            })
            .collect();
        let h2 = MonotonePwa::new(upper).expect("nondecreasing by construction");
        PairEmbedding::new(h1, h2).expect("h1 strict and below h2")
    }

    fn family<G>(&mut self, mut grade: impl FnMut(&mut Gen) -> G) -> FuzzySet<G> {
        let grades = (0..self.universe.len()).map(|_| grade(self)).collect();
        FuzzySet::new(self.universe.clone(), grades).expect("one grade per label")
    }

    pub fn fs(&mut self) -> Fs {
        self.family(Gen::unit)
    }

    pub fn ivfs(&mut self) -> Ivfs {
        self.family(Gen::interval)
    }

    /// Strict SVFS: every grade nonempty.
    pub fn svfs(&mut self) -> Svfs {
        self.family(Gen::real_subset)
    }

    pub fn svfs_or_empty(&mut self) -> Svfs {
        self.family(Gen::real_subset_or_empty)
    }

    pub fn cvfs(&mut self) -> Cvfs {
        self.family(Gen::closed_subset)
    }

    pub fn t2fs(&mut self) -> T2fs {
        self.family(Gen::piecewise)
    }

    /// A nonempty subset of `{0, …, n}`.
    pub fn grid_elems(&mut self, n: u32) -> Vec<u32> {
        let size = self.rng.gen_range(1..=2 * self.params.max_atoms);
        let mut elems: Vec<u32> = (0..size).map(|_| self.rng.gen_range(0..=n)).collect();
        elems.sort_unstable();
        elems.dedup();
        elems
    }
}

fn floor_times(r: &Rat, d: u32) -> i64 {
    i64::try_from((r * &Rat::from_integer(d.into())).floor()).expect("small numerator")
}

fn ceil_times(r: &Rat, d: u32) -> i64 {
    i64::try_from((r * &Rat::from_integer(d.into())).ceil()).expect("small numerator")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> GenParams {
        GenParams { seed: 1, max_atoms: 3, ..GenParams::default() }
    }

    #[test]
    fn streams_are_deterministic() {
        let run = || {
            let mut g = Gen::new(&params(), "closed", 5);
            (0..20).map(|_| g.closed_subset()).collect::<Vec<_>>()
        };
        assert_eq!(run(), run());
        let mut other = Gen::new(&params(), "closed", 6);
        assert_ne!(run(), (0..20).map(|_| other.closed_subset()).collect::<Vec<_>>());
    }

    #[test]
    fn generated_values_respect_bounds() {
        let p = params();
        let mut g = Gen::new(&p, "bounds", 0);
        let bound = num_bigint::BigInt::from(p.denominator_bound);
        for _ in 0..200 {
            let i = g.interval();
            assert!(i.lo() <= i.hi());
            assert!(i.lo().denom() <= bound && i.hi().denom() <= bound);
            let s = g.real_subset();
            assert!(!s.is_empty());
            let f = g.strict_monotone(true);
            assert!(f.is_strict());
            let pair = g.pair_embedding();
            assert!(pair.h1().is_strict());
            let _ = g.piecewise();
        }
    }
}
