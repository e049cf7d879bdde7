use std::process::Command;

use fuzzlat::grade_lattices::{xi, Interval};
use fuzzlat::piecewise::{characteristic, delta_of_set, pw_max, pw_min, PiecewiseFn};
use fuzzlat::{canonicalize, rat, Atom, Rat, Tag};
use fuzzlat_cli::{parse_grade_expr, parse_set_expr, run, ParseError};
use proptest::prelude::*;

fn fuzzlat(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fuzzlat").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn eval_prints_the_s_meet_of_interval_and_points() {
    let (code, out, _) = fuzzlat(&["eval", "s_inter", "[0.3,0.7]", "{0.4,0.5,0.6}"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[3/10,2/5] | {1/2} | {3/5}\n");
}

#[test]
fn order_and_json_output() {
    assert_eq!(fuzzlat(&["order", "s_order", "[0.3,0.7]", "[0.4,0.8]"]).1, "true\n");
    assert_eq!(fuzzlat(&["order", "subset", "{0.5}", "[0.3,0.4]"]).1, "false\n");
    let (code, out, _) = fuzzlat(&["--format", "json", "eval", "union", "[0,0.5]", "[0.5,1]"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"], "[0,1]");
}

#[test]
fn parse_errors_exit_two_with_json_objects() {
    let (code, _, err) = fuzzlat(&["eval", "union", "[0.4,0.2]", "[0,1]"]);
    assert_eq!(code, 2);
    assert!(err.contains("empty atom"), "{err}");
    let (code, _, err) = fuzzlat(&["eval", "union", "[0,1.5]", "[0,1]", "--format", "json"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["error"]["kind"], "range");
    assert_eq!(v["error"]["position"], 4);
    assert_eq!(fuzzlat(&["frobnicate"]).0, 2);
    assert_eq!(fuzzlat(&["check", "no-such-suite"]).0, 2);
    assert_eq!(fuzzlat(&["check", "closed-lattice", "--samples", "0"]).0, 2);
}

#[test]
fn check_exit_codes_follow_verdicts() {
    let (code, out, _) = fuzzlat(&["check", "closed-lattice", "--samples", "200", "--seed", "7"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = fuzzlat(&["check", "hesitant-lattice", "--samples", "50"]);
    assert_eq!(code, 1);
    assert!(out.contains("witness: hesitant-absorption"), "{out}");
    let (code, out, _) = fuzzlat(&["check", "hom-iota", "--samples", "50", "--format", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "fail");
    assert_eq!(v["suite"], "hom-iota");
    assert!(v["failures"][0]["inputs"].is_string());
}

#[test]
fn diagram_and_oracle_subcommands() {
    assert_eq!(fuzzlat(&["diagram", "mu-iota", "--samples", "50"]).0, 0);
    assert_eq!(fuzzlat(&["diagram", "nope"]).0, 2);
    let (code, out, _) = fuzzlat(&["oracle", "--grid", "10", "--samples", "100"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("grid-oracle: pass (100 samples"), "{out}");
}

#[test]
fn embed_reads_documents() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sets.fz");
    std::fs::write(&path, "universe x1, x2\nfs A = x1: 0.3; x2: 1\nivfs B = x1: [0.2,0.5]; x2: [0,1]\n").unwrap();
    let file = path.to_str().unwrap();
    let (code, out, _) = fuzzlat(&["embed", "theta", file, "A"]);
    assert_eq!((code, out.as_str()), (0, "svfs theta(A) = x1: [0,3/10]; x2: [0,1]\n"));
    let (code, out, _) = fuzzlat(&["embed", "xi", file, "B"]);
    assert_eq!(code, 0);
    assert_eq!(out, "svfs xi(B) = x1: [0,1/5] | (1/5,1/2)&II; x2: {0} | (0,1)&II\n");
    assert_eq!(fuzzlat(&["embed", "delta", file, "A"]).0, 2);
    assert_eq!(fuzzlat(&["embed", "theta", file, "Z"]).0, 2);
    assert_eq!(fuzzlat(&["embed", "theta", "/nonexistent/file", "A"]).0, 2);
}

#[test]
fn plot_writes_identical_svg_twice() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for path in [&a, &b] {
        let (code, _, err) = fuzzlat(&["plot", "delta([0.3,0.4] | {0.6})", "--out", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{err}");
    }
    let svg = std::fs::read(&a).unwrap();
    assert_eq!(svg, std::fs::read(&b).unwrap());
    assert!(String::from_utf8(svg).unwrap().starts_with("<?xml"));
    let set = dir.path().join("s.svg");
    assert_eq!(fuzzlat(&["plot", "--set", "[0.3,0.7] | {0.9}", "--out", set.to_str().unwrap()]).0, 0);
    assert_eq!(fuzzlat(&["plot", "const(2)", "--out", set.to_str().unwrap()]).0, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_fuzzlat");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["eval", "s_union", "[0.3,0.7]", "{0.4,0.5,0.6}"]), Some(0));
    assert_eq!(status(&["check", "hom-phi-bar", "--samples", "20"]), Some(1));
    assert_eq!(status(&["eval", "s_union", "[0.3", "{0.4}"]), Some(2));
}

#[test]
fn parser_examples() {
    let xi_image = parse_set_expr("([0,1/5]&QQ)|([0,1/2]&II)").unwrap();
    assert_eq!(xi_image, xi(&Interval::new(rat(1, 5), rat(1, 2)).unwrap()));
    assert!(matches!(parse_set_expr("[0.4,0.2]"), Err(ParseError::EmptyAtom { .. })));
}

fn unit() -> impl Strategy<Value = Rat> {
    (1i64..=16).prop_flat_map(|d| (0..=d).prop_map(move |n| Rat::new(n, d)))
}

fn atom() -> impl Strategy<Value = Atom> {
    let tag = prop_oneof![Just(Tag::All), Just(Tag::QOnly), Just(Tag::IOnly)];
    (unit(), unit(), any::<bool>(), any::<bool>(), tag).prop_filter_map("empty atom", |(a, b, lc, hc, t)| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Atom::new(lo, hi, lc, hc, t).ok()
    })
}

fn grade() -> impl Strategy<Value = PiecewiseFn> {
    let leaf = prop_oneof![
        unit().prop_map(PiecewiseFn::constant),
        Just(PiecewiseFn::identity()),
        prop::collection::vec(atom(), 0..4).prop_map(|a| characteristic(&canonicalize(&a))),
        prop::collection::vec(atom(), 1..4).prop_filter_map("empty", |a| delta_of_set(&canonicalize(&a)).ok()),
    ];
    leaf.prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(f, g)| pw_max(&f, &g)),
            (inner.clone(), inner).prop_map(|(f, g)| pw_min(&f, &g)),
        ]
    })
}

proptest! {
    #[test]
    fn set_expressions_round_trip(atoms in prop::collection::vec(atom(), 0..6)) {
        let set = canonicalize(&atoms);
        let text = set.to_string();
        prop_assert_eq!(parse_set_expr(&text).unwrap(), set, "{}", text);
    }

    #[test]
    fn grade_expressions_round_trip(f in grade()) {
        let text = f.to_string();
        prop_assert_eq!(parse_grade_expr(&text).unwrap(), f, "{}", text);
    }

    #[test]
    fn whitespace_is_insignificant(atoms in prop::collection::vec(atom(), 1..4)) {
        let set = canonicalize(&atoms);
        let spaced: String = set
            .to_string()
            .chars()
            .map(|c| if "[](){},|&!".contains(c) { format!("  {c}\t") } else { c.to_string() })
            .collect();
        prop_assert_eq!(parse_set_expr(&spaced).unwrap(), set);
    }
}
