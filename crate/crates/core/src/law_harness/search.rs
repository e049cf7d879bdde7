use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::fuzzy_universe::embeddings::{iota, phi_bar};
use crate::fuzzy_universe::{Fs, Universe};
use crate::grade_lattices::{hesitant_inter, hesitant_union, s_inter};
use crate::rat::Rat;
use crate::set_algebra::{Atom, RealSubset};

use super::{Gen, GenParams};

/// Properties searched for counterexamples. A witness refutes the property
/// named by the variant: e.g. an `IotaMeet` witness is a pair on which `ι`
/// fails to preserve meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    IotaMeet,
    PhiBarMeet,
    HesitantAbsorption,
    /// `∩_S` of two nonempty tagged sets is empty.
    SInterEmpty,
    /// `∩_S` of two nonempty closed sets is empty; no witness may exist.
    ClosedMeetEmpty,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::IotaMeet => "iota-meet",
            Property::PhiBarMeet => "phi-bar-meet",
            Property::HesitantAbsorption => "hesitant-absorption",
            Property::SInterEmpty => "s-inter-empty",
            Property::ClosedMeetEmpty => "closed-meet-empty",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub property: String,
    /// 1-based index of the first failing candidate.
    pub candidate: usize,
    pub inputs: Vec<(String, String)>,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        write!(f, "{} (candidate {}): {}; {}", self.property, self.candidate, inputs.join("; "), self.detail)
    }
}

#[derive(Debug, Clone)]
enum Candidate {
    Sets(Vec<Atom>, Vec<Atom>),
    Grades(Vec<Rat>, Vec<Rat>),
}

impl Candidate {
    fn inputs(&self) -> Vec<(String, String)> {
        match self {
            Candidate::Sets(s, t) => {
                vec![("S".into(), RealSubset::from_atoms(s).to_string()), ("T".into(), RealSubset::from_atoms(t).to_string())]
            }
            Candidate::Grades(a, b) => vec![("A".into(), fs(a).to_string()), ("B".into(), fs(b).to_string())],
        }
    }

    fn size(&self) -> (usize, u64) {
        let (count, ends): (usize, Vec<&Rat>) = match self {
            Candidate::Sets(s, t) => (s.len() + t.len(), s.iter().chain(t).flat_map(|a| [a.lo(), a.hi()]).collect()),
            Candidate::Grades(a, b) => (a.len(), a.iter().chain(b).collect()),
        };
        let den = ends.iter().map(|r| r.denom().to_string().parse::<u64>().unwrap_or(u64::MAX)).max().unwrap_or(1);
        (count, den)
    }
}

fn fs(grades: &[Rat]) -> Fs {
    Fs::new(Universe::numbered(grades.len()), grades.to_vec()).expect("one grade per label")
}

fn draw(property: Property, g: &mut Gen) -> Candidate {
    match property {
        Property::IotaMeet | Property::PhiBarMeet => {
            let n = g.universe().len();
            let mut grades = || (0..n).map(|_| g.unit()).collect::<Vec<_>>();
            let a = grades();
            Candidate::Grades(a, grades())
        }
        Property::HesitantAbsorption | Property::ClosedMeetEmpty => Candidate::Sets(g.closed_atoms(), g.closed_atoms()),
        Property::SInterEmpty => Candidate::Sets(g.tagged_atoms(), g.tagged_atoms()),
    }
}

/// `Some(detail)` when `c` refutes the property.
fn refutes(property: Property, c: &Candidate) -> Option<String> {
    match (property, c) {
        (Property::IotaMeet, Candidate::Grades(a, b)) => {
            let (a, b) = (fs(a), fs(b));
            let lhs = iota(&a.meet(&b).ok()?);
            let rhs = iota(&a).meet(&iota(&b)).ok()?;
            (lhs != rhs).then(|| format!("iota(A meet B) = {lhs} but iota(A) meet iota(B) = {rhs}"))
        }
        (Property::PhiBarMeet, Candidate::Grades(a, b)) => {
            let (a, b) = (fs(a), fs(b));
            let lhs = phi_bar(&a.meet(&b).ok()?);
            let rhs = phi_bar(&a).meet(&phi_bar(&b)).ok()?;
            (lhs != rhs).then(|| format!("Phi-bar(A meet B) = {lhs} but Phi-bar(A) meet Phi-bar(B) = {rhs}"))
        }
        (Property::HesitantAbsorption, Candidate::Sets(s, t)) => {
            let (s, t) = (RealSubset::from_atoms(s), RealSubset::from_atoms(t));
            let joined = hesitant_union(&t, &hesitant_inter(&t, &s).ok()?).ok()?;
            if joined != t {
                return Some(format!("T join_H (T meet_H S) = {joined}, not T"));
            }
            let met = hesitant_inter(&t, &hesitant_union(&t, &s).ok()?).ok()?;
            (met != t).then(|| format!("T meet_H (T join_H S) = {met}, not T"))
        }
        (Property::SInterEmpty | Property::ClosedMeetEmpty, Candidate::Sets(s, t)) => {
            let (s, t) = (RealSubset::from_atoms(s), RealSubset::from_atoms(t));
            if s.is_empty() || t.is_empty() {
                return None;
            }
            s_inter(&s, &t).ok()?.is_empty().then(|| "S s-meet T is empty".to_string())
        }
        _ => None,
    }
}

fn round_atoms(atoms: &[Atom], den: u32) -> Option<Vec<Atom>> {
    atoms
        .iter()
        .map(|a| Atom::new(a.lo().round_to_denominator(den), a.hi().round_to_denominator(den), a.lo_closed(), a.hi_closed(), a.tag()).ok())
        .collect()
}

/// Smaller variants of `c`: fewer atoms or labels first, then coarser denominators.
fn shrinks(c: &Candidate, max_den: u32) -> Vec<Candidate> {
    let mut out = Vec::new();
    match c {
        Candidate::Sets(s, t) => {
            for k in 0..s.len() {
                if s.len() > 1 {
                    let mut s2 = s.clone();
                    s2.remove(k);
                    out.push(Candidate::Sets(s2, t.clone()));
                }
            }
            for k in 0..t.len() {
                if t.len() > 1 {
                    let mut t2 = t.clone();
                    t2.remove(k);
                    out.push(Candidate::Sets(s.clone(), t2));
                }
            }
            for den in 1..=max_den {
                if let (Some(s2), Some(t2)) = (round_atoms(s, den), round_atoms(t, den)) {
                    out.push(Candidate::Sets(s2, t2));
                }
            }
        }
        Candidate::Grades(a, b) => {
            if a.len() > 1 {
                for k in 0..a.len() {
                    out.push(Candidate::Grades(vec![a[k].clone()], vec![b[k].clone()]));
                }
            }
            for den in 1..=max_den {
                let round = |v: &[Rat]| v.iter().map(|r| r.round_to_denominator(den)).collect();
                out.push(Candidate::Grades(round(a), round(b)));
            }
        }
    }
    out
}

/// Greedy: take the first strictly smaller variant that still refutes the
/// property until none does.
fn minimize(property: Property, mut c: Candidate, mut detail: String, max_den: u32) -> (Candidate, String) {
    loop {
        let current = c.size();
        let next = shrinks(&c, max_den).into_iter().filter(|s| s.size() < current).find_map(|s| refutes(property, &s).map(|d| (s, d)));
        match next {
            Some((s, d)) => {
                c = s;
                detail = d;
            }
            None => return (c, detail),
        }
    }
}

/// Searches `budget` candidates drawn from `seed` for a refutation of
/// `property`; the first one found (in candidate order) is minimized.
pub fn find_counterexample(property: Property, budget: usize, params: &GenParams) -> Option<Witness> {
    let stream = format!("search-{}", property.name());
    let (index, found, detail) = (0..budget).into_par_iter().find_map_first(|k| {
        let mut g = Gen::new(params, &stream, k as u64);
        let c = draw(property, &mut g);
        refutes(property, &c).map(|d| (k, c, d))
    })?;
    let (c, detail) = minimize(property, found, detail, params.denominator_bound);
    Some(Witness { property: property.name().to_string(), candidate: index + 1, inputs: c.inputs(), detail })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn closed(a: Rat, b: Rat) -> Atom {
        Atom::closed(a, b).unwrap()
    }

    #[test]
    fn known_witnesses_refute() {
        let s = vec![closed(rat(3, 10), rat(7, 10))];
        let t = [4, 5, 6].iter().map(|&k| Atom::point(rat(k, 10)).unwrap()).collect();
        assert!(refutes(Property::HesitantAbsorption, &Candidate::Sets(s, t)).is_some());
        let pair = Candidate::Grades(vec![rat(3, 10)], vec![rat(1, 2)]);
        assert!(refutes(Property::IotaMeet, &pair).is_some());
        assert!(refutes(Property::PhiBarMeet, &pair).is_some());
    }

    #[test]
    fn minimized_grades_use_one_label() {
        let params = GenParams::default();
        let w = find_counterexample(Property::IotaMeet, 100, &params).unwrap();
        assert_eq!(w.inputs[0].1.matches(':').count(), 1, "{w}");
    }
}
