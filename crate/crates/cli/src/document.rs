//! Text documents declaring a universe and named fuzzy sets.
//!
//! ```text
//! # comment
//! universe x1, x2, x3
//! fs A = x1: 0.3; x2: 0.7; x3: 0
//! ivfs B = x1: [0.2,0.5]; x2: [0,1]; x3: [1/3,1/3]
//! svfs C = x1: {0.5} | [0.6,0.7]; x2: QQ; x3: [0,1]
//! svfs[empty] D = x1: ![0,1]; x2: {1}; x3: [0,1]
//! cvfs E = x1: [0.3,0.7]; x2: {0.4,0.5}; x3: {1}
//! t2fs F = x1: const(1/2); x2: delta([0.3,0.4] | {0.6}); x3: id
//! ```
//!
//! Every set gives one grade per declared label.

use std::fmt;

use fuzzlat::fuzzy_universe::{AnyFuzzySet, Family, FuzzySet, Universe};
use fuzzlat::grade_lattices::{ClosedSubset, Interval};
use thiserror::Error;

use crate::parse::{ParseError, Parser};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct DocumentError {
    pub line: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    universe: Universe,
    sets: Vec<(String, AnyFuzzySet)>,
}

impl Document {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn sets(&self) -> &[(String, AnyFuzzySet)] {
        &self.sets
    }

    pub fn get(&self, name: &str) -> Option<&AnyFuzzySet> {
        self.sets.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "universe {}", self.universe.labels().join(", "))?;
        for (name, set) in &self.sets {
            let tag = match set {
                AnyFuzzySet::Svfs { empty_allowed: true, .. } => "svfs[empty]".to_string(),
                other => other.family().to_string(),
            };
            writeln!(f, "{tag} {name} = {set}")?;
        }
        Ok(())
    }
}

fn family_tag(word: &str) -> Option<(Family, bool)> {
    Some(match word {
        "fs" => (Family::Fs, false),
        "ivfs" => (Family::Ivfs, false),
        "svfs" => (Family::Svfs, false),
        "svfs[empty]" => (Family::Svfs, true),
        "cvfs" => (Family::Cvfs, false),
        "t2fs" => (Family::T2fs, false),
        _ => return None,
    })
}

/// `label: grade (; label: grade)*`, each grade read by `grade`.
fn pairs<G>(p: &mut Parser, mut grade: impl FnMut(&mut Parser) -> Result<G, String>) -> Result<Vec<(String, G)>, String> {
    let mut out = Vec::new();
    loop {
        let label = p.ident().map_err(|e| e.to_string())?;
        p.expect(':').map_err(|e| e.to_string())?;
        let g = grade(p).map_err(|e| format!("grade of `{label}`: {e}"))?;
        out.push((label, g));
        if !p.eat(';') {
            break;
        }
        if p.at_end() {
            break;
        }
    }
    p.finish().map_err(|e| e.to_string())?;
    Ok(out)
}

fn build<G>(universe: &Universe, pairs: Vec<(String, G)>) -> Result<FuzzySet<G>, String> {
    FuzzySet::from_pairs(universe.clone(), pairs).map_err(|e| e.to_string())
}

fn parse_set(universe: &Universe, family: Family, empty_allowed: bool, body: &str) -> Result<AnyFuzzySet, String> {
    let mut p = Parser::new(body);
    let err = |e: ParseError| e.to_string();
    Ok(match family {
        Family::Fs => AnyFuzzySet::Fs(build(universe, pairs(&mut p, |p| p.unit_rat().map_err(err))?)?),
        Family::Ivfs => {
            let grades = pairs(&mut p, |p| {
                let set = p.expr().map_err(err)?.eval();
                match set.atoms() {
                    [a] if a.lo_closed() && a.hi_closed() && a.tag() == fuzzlat::Tag::All => {
                        Interval::new(a.lo().clone(), a.hi().clone()).map_err(|e| e.to_string())
                    }
                    _ => Err(format!("{set} is not a closed interval")),
                }
            })?;
            AnyFuzzySet::Ivfs(build(universe, grades)?)
        }
        Family::Svfs => {
            let set = build(universe, pairs(&mut p, |p| Ok(p.expr().map_err(err)?.eval()))?)?;
            if empty_allowed {
                AnyFuzzySet::Svfs { set, empty_allowed }
            } else {
                AnyFuzzySet::strict_svfs(set).map_err(|e| e.to_string())?
            }
        }
        Family::Cvfs => {
            let grades = pairs(&mut p, |p| ClosedSubset::new(p.expr().map_err(err)?.eval()).map_err(|e| e.to_string()))?;
            AnyFuzzySet::Cvfs(build(universe, grades)?)
        }
        Family::T2fs => AnyFuzzySet::T2fs(build(universe, pairs(&mut p, |p| p.grade().map_err(err))?)?),
    })
}

pub fn parse_document(text: &str) -> Result<Document, DocumentError> {
    let mut universe: Option<Universe> = None;
    let mut sets: Vec<(String, AnyFuzzySet)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let fail = |msg: String| DocumentError { line, msg };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        if head == "universe" {
            if universe.is_some() {
                return Err(fail("universe declared twice".into()));
            }
            let labels: Vec<&str> = rest.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
            if let Some(bad) = labels.iter().find(|l| !l.chars().all(|c| c.is_alphanumeric() || c == '_')) {
                return Err(fail(format!("invalid label `{bad}`")));
            }
            universe = Some(Universe::new(labels).map_err(|e| fail(e.to_string()))?);
            continue;
        }
        let (family, empty_allowed) = family_tag(head).ok_or_else(|| fail(format!("unknown declaration `{head}`")))?;
        let u = universe.as_ref().ok_or_else(|| fail("fuzzy set declared before the universe".into()))?;
        let (name, body) = rest.split_once('=').ok_or_else(|| fail("expected `name = grades`".into()))?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(fail(format!("invalid set name `{name}`")));
        }
        if sets.iter().any(|(n, _)| n == name) {
            return Err(fail(format!("set `{name}` declared twice")));
        }
        let set = parse_set(u, family, empty_allowed, body).map_err(fail)?;
        sets.push((name.to_string(), set));
    }
    let universe = universe.ok_or(DocumentError { line: 0, msg: "no universe declared".into() })?;
    Ok(Document { universe, sets })
}
