use super::laws::{self, sample_delta_map, Diagram, HomMap, Structure};
use super::search::{find_counterexample, Property};
use super::{compare_with_oracle, Failure, GenParams, HarnessError, Report};

/// Candidates tried by the counterexample suites.
pub const SEARCH_BUDGET: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Lattice,
    Homomorphism,
    Diagram,
    /// Passes when the search finds a witness.
    Counterexample,
    /// Passes when the search finds no witness.
    NoCounterexample,
    Oracle,
    Property,
    /// Checks a law that is known to fail; expected to report failures.
    KnownFailure,
    /// Reports the empirical status of an unsettled claim.
    Exploratory,
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub kind: SuiteKind,
    pub about: &'static str,
}

impl SuiteInfo {
    /// Whether `check all` runs the suite.
    pub fn in_all(&self) -> bool {
        !matches!(self.kind, K::KnownFailure | K::Exploratory)
    }
}

const fn info(name: &'static str, kind: SuiteKind, about: &'static str) -> SuiteInfo {
    SuiteInfo { name, kind, about }
}

use SuiteKind as K;

const SUITES: &[SuiteInfo] = &[
    info("interval-lattice", K::Lattice, "closed intervals under componentwise max/min"),
    info("closed-lattice", K::Lattice, "closed subsets under s-union/s-meet, with sampled least-bound checks"),
    info("powerset-lattice", K::Lattice, "tagged subsets under union/intersection"),
    info("piecewise-lattice", K::Lattice, "grade functions under pointwise max/min"),
    info("fs-lattice", K::Lattice, "fuzzy sets"),
    info("ivfs-lattice", K::Lattice, "interval-valued fuzzy sets"),
    info("svfs-lattice", K::Lattice, "set-valued fuzzy sets with empty grades allowed"),
    info("cvfs-lattice", K::Lattice, "closed-valued fuzzy sets"),
    info("t2fs-lattice", K::Lattice, "type-2 fuzzy sets"),
    info("hom-theta", K::Homomorphism, "FS to SVFS, A(x) to [0,A(x)]"),
    info("hom-xi-lift", K::Homomorphism, "IVFS to SVFS through xi"),
    info("hom-xi", K::Homomorphism, "intervals to subsets through xi"),
    info("hom-phi", K::Homomorphism, "FS to IVFS, t to [t,t]"),
    info("hom-omega", K::Homomorphism, "FS to IVFS, t to [t,1]"),
    info("hom-lambda", K::Homomorphism, "FS to IVFS, t to [0,t]"),
    info("hom-pair", K::Homomorphism, "FS to IVFS, t to [h1(t),h2(t)] for random h1 <= h2"),
    info("hom-i", K::Homomorphism, "IVFS to CVFS"),
    info("hom-phi-i", K::Homomorphism, "FS to CVFS through IVFS"),
    info("hom-delta", K::Homomorphism, "closed subsets to grade functions"),
    info("hom-delta-lift", K::Homomorphism, "CVFS to T2FS"),
    info("hom-delta-f", K::Homomorphism, "CVFS to T2FS with f through (0,0), (1/2,1/4), (1,1)"),
    info("hom-delta-f-random", K::Homomorphism, "closed subsets to grade functions with a random f per sample"),
    info("hom-gamma", K::Homomorphism, "FS to T2FS, constant grades"),
    info("hom-mu-bar", K::Homomorphism, "SVFS to T2FS, indicator grades"),
    info("hom-chi", K::Homomorphism, "subsets to indicator functions"),
    info("diagram-xi-phi", K::Diagram, "Xi after Phi equals Theta"),
    info("diagram-mu-theta", K::Diagram, "mu-bar after Theta equals Lambda-bar equals mu-bar after i after Lambda"),
    info("diagram-mu-iota", K::Diagram, "mu-bar after iota equals Phi-bar"),
    info("diagram-delta-phi", K::Diagram, "Delta after i after Phi equals the grade a on [0,a], 0 after"),
    info("neg-iota-meet", K::Counterexample, "iota does not preserve meets"),
    info("neg-phi-bar-meet", K::Counterexample, "Phi-bar does not preserve meets"),
    info("neg-hesitant-absorption", K::Counterexample, "hesitant operators violate absorption"),
    info("neg-s-inter-empty", K::Counterexample, "s-meet of non-closed sets can be empty"),
    info("closed-meet-nonempty", K::NoCounterexample, "s-meet of closed sets is never empty"),
    info("grid-oracle", K::Oracle, "s-order, s-union, s-meet against enumeration on a grid"),
    info("cut-roundtrip", K::Property, "level cuts determine a fuzzy set and commute with join/meet"),
    info("restriction", K::Property, "closed-set operations agree with interval operations"),
    info("s-order-poset", K::Property, "s-order is a partial order on nonempty sets"),
    info("density", K::Property, "containment of intervals is decided by rational or irrational parts"),
    info("set-algebra", K::Property, "Boolean laws and membership of the tagged set algebra"),
    info("hesitant-union", K::Property, "hesitant union equals s-union"),
    info("piecewise-eval", K::Property, "pointwise max/min agree with evaluation"),
    info("hesitant-lattice", K::KnownFailure, "lattice laws for the hesitant operators"),
    info("hom-iota", K::KnownFailure, "FS to SVFS, singleton grades"),
    info("hom-phi-bar", K::KnownFailure, "FS to T2FS, singleton indicator grades"),
    info("s-union-lub", K::Exploratory, "whether s-union is a least upper bound on arbitrary nonempty sets"),
];

pub fn suites() -> &'static [SuiteInfo] {
    SUITES
}

pub fn suite(name: &str) -> Option<&'static SuiteInfo> {
    SUITES.iter().find(|s| s.name == name)
}

fn structure(name: &str) -> Option<Structure> {
    Some(match name {
        "interval-lattice" => Structure::Interval,
        "closed-lattice" => Structure::Closed,
        "powerset-lattice" => Structure::Powerset,
        "piecewise-lattice" => Structure::Piecewise,
        "fs-lattice" => Structure::Fs,
        "ivfs-lattice" => Structure::Ivfs,
        "svfs-lattice" => Structure::Svfs,
        "cvfs-lattice" => Structure::Cvfs,
        "t2fs-lattice" => Structure::T2fs,
        "hesitant-lattice" => Structure::Hesitant,
        _ => return None,
    })
}

fn hom_map(name: &str) -> Option<HomMap> {
    Some(match name {
        "hom-theta" => HomMap::Theta,
        "hom-xi-lift" => HomMap::XiLift,
        "hom-xi" => HomMap::Xi,
        "hom-phi" => HomMap::Phi,
        "hom-omega" => HomMap::Omega,
        "hom-lambda" => HomMap::Lambda,
        "hom-pair" => HomMap::Pair,
        "hom-i" => HomMap::Inclusion,
        "hom-phi-i" => HomMap::PhiThenInclusion,
        "hom-delta" => HomMap::Delta,
        "hom-delta-lift" => HomMap::DeltaLift,
        "hom-delta-f" => HomMap::DeltaF(sample_delta_map()),
        "hom-delta-f-random" => HomMap::DeltaFRandom,
        "hom-gamma" => HomMap::Gamma,
        "hom-mu-bar" => HomMap::MuBar,
        "hom-chi" => HomMap::Chi,
        "hom-iota" => HomMap::Iota,
        "hom-phi-bar" => HomMap::PhiBar,
        _ => return None,
    })
}

fn diagram(name: &str) -> Option<Diagram> {
    Some(match name {
        "diagram-xi-phi" => Diagram::XiPhi,
        "diagram-mu-theta" => Diagram::MuTheta,
        "diagram-mu-iota" => Diagram::MuIota,
        "diagram-delta-phi" => Diagram::DeltaPhi,
        _ => return None,
    })
}

fn property(name: &str) -> Option<Property> {
    Some(match name {
        "neg-iota-meet" | "hom-iota" => Property::IotaMeet,
        "neg-phi-bar-meet" | "hom-phi-bar" => Property::PhiBarMeet,
        "neg-hesitant-absorption" | "hesitant-lattice" => Property::HesitantAbsorption,
        "neg-s-inter-empty" => Property::SInterEmpty,
        "closed-meet-nonempty" => Property::ClosedMeetEmpty,
        _ => return None,
    })
}

fn search_report(name: &str, kind: SuiteKind, prop: Property, params: &GenParams) -> Report {
    let witness = find_counterexample(prop, SEARCH_BUDGET, params);
    let mut failures = Vec::new();
    match (&witness, kind) {
        (None, K::Counterexample) => failures.push(Failure {
            sample: SEARCH_BUDGET,
            check: "witness found".into(),
            inputs: format!("{SEARCH_BUDGET} candidates"),
            expected: "a witness".into(),
            actual: "none".into(),
        }),
        (Some(w), K::NoCounterexample) => failures.push(Failure {
            sample: w.candidate - 1,
            check: "no witness exists".into(),
            inputs: w.inputs.iter().map(|(k, v)| format!("{k} = {v}")).collect::<Vec<_>>().join("; "),
            expected: "none".into(),
            actual: w.detail.clone(),
        }),
        _ => {}
    }
    let tried = match (&witness, kind) {
        (Some(w), K::Counterexample) => w.candidate,
        _ => SEARCH_BUDGET,
    };
    let mut report = Report::new(name, tried, params.seed, failures);
    report.witness = witness;
    report
}

pub fn run_suite(name: &str, params: &GenParams) -> Result<Report, HarnessError> {
    params.validate()?;
    let info = suite(name).ok_or_else(|| HarnessError::UnknownSuite(name.to_string()))?;
    let report = match info.kind {
        K::Lattice => laws::check_lattice_axioms(structure(name).expect("registered"), name, params),
        K::Homomorphism => laws::check_homomorphism(&hom_map(name).expect("registered"), name, params),
        K::Diagram => laws::check_diagram(diagram(name).expect("registered"), name, params),
        K::Counterexample | K::NoCounterexample => search_report(name, info.kind, property(name).expect("registered"), params),
        K::Oracle => compare_with_oracle(name, params),
        K::KnownFailure => {
            let mut report = match structure(name) {
                Some(s) => laws::check_lattice_axioms(s, name, params),
                None => laws::check_homomorphism(&hom_map(name).expect("registered"), name, params),
            };
            report.witness = find_counterexample(property(name).expect("registered"), SEARCH_BUDGET, params);
            report
        }
        K::Property | K::Exploratory => match name {
            "cut-roundtrip" => laws::check_cuts(name, params),
            "restriction" => laws::check_restriction(name, params),
            "s-order-poset" => laws::check_s_order_poset(name, params),
            "density" => laws::check_density(name, params),
            "set-algebra" => laws::check_set_algebra(name, params),
            "hesitant-union" => laws::check_hesitant_union(name, params),
            "piecewise-eval" => laws::check_piecewise_eval(name, params),
            "s-union-lub" => laws::check_s_union_lub(name, params),
            _ => unreachable!("registered suite without a runner: {name}"),
        },
    };
    Ok(report)
}

/// Every suite that `check all` runs, in registry order.
pub fn run_all(params: &GenParams) -> Result<Vec<Report>, HarnessError> {
    SUITES.iter().filter(|s| s.in_all()).map(|s| run_suite(s.name, params)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_has_a_runner() {
        let params = GenParams { samples: 2, ..GenParams::default() };
        for s in suites() {
            if matches!(s.kind, K::Counterexample | K::NoCounterexample | K::KnownFailure) {
                continue;
            }
            let report = run_suite(s.name, &params).unwrap();
            assert_eq!(report.samples, 2, "{}", s.name);
        }
        assert_eq!(run_suite("nope", &params), Err(HarnessError::UnknownSuite("nope".into())));
    }
}
