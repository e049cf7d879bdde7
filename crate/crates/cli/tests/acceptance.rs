//! The nine acceptance criteria, run in order with their time limits.
//! Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

use std::process::Command;
use std::time::{Duration, Instant};

use fuzzlat::grade_lattices::{hesitant_inter, s_inter};
use fuzzlat::law_harness::{run_suite, suites, GenParams, Report, SuiteKind, SEARCH_BUDGET};
use fuzzlat::{rat, RealSubset};

type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn suites_of(kind: SuiteKind) -> Vec<&'static str> {
    suites().iter().filter(|s| s.kind == kind).map(|s| s.name).collect()
}

fn run_many(names: &[&str], params: &GenParams) -> Vec<Report> {
    names.iter().map(|n| run_suite(n, params).expect("registered suite")).collect()
}

fn all_pass(reports: &[Report]) -> Outcome {
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    let samples: usize = reports.iter().map(|r| r.samples).sum();
    Outcome {
        ok: failed.is_empty(),
        detail: if failed.is_empty() { format!("{} suites, {samples} samples, 0 failures", reports.len()) } else { failed.join("\n") },
    }
}

fn interval_meets_points() -> Outcome {
    let s = RealSubset::closed_interval(rat(3, 10), rat(7, 10)).unwrap();
    let t = RealSubset::points([rat(4, 10), rat(5, 10), rat(6, 10)]).unwrap();
    let meet = s_inter(&s, &t).unwrap();
    let hesitant = hesitant_inter(&s, &t).unwrap();
    let want_meet =
        RealSubset::closed_interval(rat(3, 10), rat(4, 10)).unwrap().union(&RealSubset::points([rat(1, 2), rat(3, 5)]).unwrap());
    let want_hesitant = RealSubset::closed_interval(rat(3, 10), rat(3, 5)).unwrap();
    Outcome { ok: meet == want_meet && hesitant == want_hesitant, detail: format!("s_inter = {meet}, hesitant_inter = {hesitant}") }
}

fn negative_results(params: &GenParams) -> Outcome {
    let mut ok = true;
    let mut lines = Vec::new();
    for name in suites_of(SuiteKind::Counterexample) {
        let r = run_suite(name, params).unwrap();
        match &r.witness {
            Some(w) if r.passed() && w.candidate <= SEARCH_BUDGET => lines.push(format!("{name}: witness at candidate {}", w.candidate)),
            _ => {
                ok = false;
                lines.push(format!("{r}"));
            }
        }
    }
    let r = run_suite("closed-meet-nonempty", params).unwrap();
    ok &= r.passed() && r.witness.is_none() && r.samples == SEARCH_BUDGET;
    lines.push(format!("closed-meet-nonempty: {} witnesses in {} tries", usize::from(r.witness.is_some()), r.samples));
    Outcome { ok, detail: lines.join("; ") }
}

fn check_all() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_fuzzlat");
    let run = || Command::new(bin).args(["check", "all"]).output().expect("spawn fuzzlat");
    let first = run();
    let second = run();
    let same = first.stdout == second.stdout;
    let summary = String::from_utf8_lossy(&first.stdout).lines().last().unwrap_or("").to_string();
    Outcome {
        ok: first.status.code() == Some(0) && same,
        detail: format!("exit {:?}, {summary}, identical reruns: {same}", first.status.code()),
    }
}

fn main() {
    let base = GenParams::default();
    let criteria: Vec<Criterion> = vec![
        ("C1 s-meet and hesitant meet of [0.3,0.7] and {0.4,0.5,0.6}", Duration::from_millis(1), Box::new(interval_meets_points)),
        (
            "C2 closed-set lattice, 1000 samples",
            Duration::from_secs(10),
            Box::new(|| all_pass(&run_many(&["closed-lattice"], &base.with_samples(1000)))),
        ),
        (
            "C3 homomorphisms, 500 samples each",
            Duration::from_secs(20),
            Box::new(|| all_pass(&run_many(&suites_of(SuiteKind::Homomorphism), &base.with_samples(500)))),
        ),
        ("C4 negative results", Duration::from_secs(15), Box::new(|| negative_results(&base))),
        (
            "C5 commuting diagrams, 500 samples each",
            Duration::MAX,
            Box::new(|| all_pass(&run_many(&suites_of(SuiteKind::Diagram), &base.with_samples(500)))),
        ),
        (
            "C6 grid oracle, 1000 pairs, denominator 64",
            Duration::from_secs(10),
            Box::new(|| {
                let params = GenParams { denominator_bound: 64, ..base.with_samples(1000) };
                all_pass(&run_many(&["grid-oracle"], &params))
            }),
        ),
        (
            "C7 cut roundtrip, 200 sets over 8 labels",
            Duration::MAX,
            Box::new(|| {
                let params = GenParams { universe_size: 8, ..base.with_samples(200) };
                all_pass(&run_many(&["cut-roundtrip"], &params))
            }),
        ),
        ("C8 restriction coherence, 500 pairs", Duration::MAX, Box::new(|| all_pass(&run_many(&["restriction"], &base.with_samples(500))))),
        ("C9 check all, deterministic", Duration::from_secs(60), Box::new(check_all)),
    ];
    let mut failed = 0;
    for (name, limit, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        // C9 runs `check all` twice; the limit applies to one run.
        let budget = if name.starts_with("C9") { elapsed / 2 } else { elapsed };
        let in_time = budget <= *limit;
        let ok = outcome.ok && in_time;
        failed += usize::from(!ok);
        let limit = if *limit == Duration::MAX { String::new() } else { format!(", limit {limit:?}") };
        println!("{} {name}: {} ({budget:.2?}{limit})", if ok { "PASS" } else { "FAIL" }, outcome.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
