//! Lifted grade maps `A -> h ∘ A` between fuzzy-set families.

use std::fmt;

use crate::grade_lattices::{embed_unit_to_interval, xi, ClosedSubset, EmbedKind, MonotonePwa, PairEmbedding};
use crate::piecewise::{characteristic, check_delta_map, delta, delta_f, grade_constructor, GradeShape, PiecewiseFn};
use crate::set_algebra::RealSubset;

use super::{AnyFuzzySet, Cvfs, Family, Fs, FuzzyError, Ivfs, Svfs, T2fs};

/// `Φ(A)(x) = [A(x), A(x)]`
pub fn phi(a: &Fs) -> Ivfs {
    a.map(|t| embed_unit_to_interval(t, &EmbedKind::Phi))
}

/// `Ω(A)(x) = [A(x), 1]`
pub fn omega(a: &Fs) -> Ivfs {
    a.map(|t| embed_unit_to_interval(t, &EmbedKind::Omega))
}

/// `Λ(A)(x) = [0, A(x)]`
pub fn lambda(a: &Fs) -> Ivfs {
    a.map(|t| embed_unit_to_interval(t, &EmbedKind::Gamma))
}

/// `A(x) -> [h1(A(x)), h2(A(x))]`
pub fn pair(a: &Fs, p: &PairEmbedding) -> Ivfs {
    let kind = EmbedKind::Pair(p.clone());
    a.map(|t| embed_unit_to_interval(t, &kind))
}

/// `ι(A)(x) = {A(x)}`
pub fn iota(a: &Fs) -> Svfs {
    a.map(|t| RealSubset::points([t.clone()]).expect("grade in [0,1]"))
}

/// Interval grades viewed as sets.
pub fn inclusion(a: &Ivfs) -> Svfs {
    a.map(|i| i.to_set())
}

/// Interval grades viewed as closed sets.
pub fn closed_inclusion(a: &Ivfs) -> Cvfs {
    a.map(|i| i.to_closed())
}

/// `Θ(A)(x) = [0, A(x)]`
pub fn theta(a: &Fs) -> Svfs {
    a.map(|t| RealSubset::closed_interval(crate::rat::Rat::zero(), t.clone()).expect("grade in [0,1]"))
}

/// `Ξ(A) = ξ ∘ A`
pub fn xi_lift(a: &Ivfs) -> Svfs {
    a.map(xi)
}

/// `Γ(A)(x)(t) = A(x)`
pub fn gamma(a: &Fs) -> T2fs {
    a.map(|t| PiecewiseFn::constant(t.clone()))
}

/// Singleton indicator at `A(x)`.
pub fn phi_bar(a: &Fs) -> T2fs {
    a.map(|t| grade_constructor(t, GradeShape::Singleton).expect("grade in [0,1]"))
}

/// Indicator of `[0, A(x)]`.
pub fn lambda_bar(a: &Fs) -> T2fs {
    a.map(|t| grade_constructor(t, GradeShape::Below).expect("grade in [0,1]"))
}

/// Characteristic function of each grade.
pub fn mu_bar(a: &Svfs) -> T2fs {
    a.map(characteristic)
}

/// `Δ(A)(x) = δ(A(x))`
pub fn delta_lift(a: &Cvfs) -> T2fs {
    a.map(delta)
}

/// `Δ_f(A)(x) = δ_f(A(x))`; `f` must already satisfy the `δ_f` conditions.
pub fn delta_f_lift(a: &Cvfs, f: &MonotonePwa) -> T2fs {
    a.map(|c: &ClosedSubset| delta_f(c, f).expect("validated map"))
}

/// The named grade maps, for dynamic dispatch on [`AnyFuzzySet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradeMap {
    Phi,
    Omega,
    Lambda,
    Pair(PairEmbedding),
    Iota,
    /// IVFS to SVFS.
    Inclusion,
    /// IVFS to CVFS.
    ClosedInclusion,
    Theta,
    Xi,
    Gamma,
    PhiBar,
    LambdaBar,
    MuBar,
    Delta,
    DeltaF(MonotonePwa),
}

impl GradeMap {
    pub fn source(&self) -> Family {
        match self {
            GradeMap::Phi
            | GradeMap::Omega
            | GradeMap::Lambda
            | GradeMap::Pair(_)
            | GradeMap::Iota
            | GradeMap::Theta
            | GradeMap::Gamma
            | GradeMap::PhiBar
            | GradeMap::LambdaBar => Family::Fs,
            GradeMap::Inclusion | GradeMap::ClosedInclusion | GradeMap::Xi => Family::Ivfs,
            GradeMap::MuBar => Family::Svfs,
            GradeMap::Delta | GradeMap::DeltaF(_) => Family::Cvfs,
        }
    }

    pub fn target(&self) -> Family {
        match self {
            GradeMap::Phi | GradeMap::Omega | GradeMap::Lambda | GradeMap::Pair(_) => Family::Ivfs,
            GradeMap::Iota | GradeMap::Inclusion | GradeMap::Theta | GradeMap::Xi => Family::Svfs,
            GradeMap::ClosedInclusion => Family::Cvfs,
            _ => Family::T2fs,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GradeMap::Phi => "phi",
            GradeMap::Omega => "omega",
            GradeMap::Lambda => "lambda",
            GradeMap::Pair(_) => "pair",
            GradeMap::Iota => "iota",
            GradeMap::Inclusion => "i",
            GradeMap::ClosedInclusion => "i-closed",
            GradeMap::Theta => "theta",
            GradeMap::Xi => "xi",
            GradeMap::Gamma => "gamma",
            GradeMap::PhiBar => "phi-bar",
            GradeMap::LambdaBar => "lambda-bar",
            GradeMap::MuBar => "mu-bar",
            GradeMap::Delta => "delta",
            GradeMap::DeltaF(_) => "delta-f",
        }
    }
}

impl fmt::Display for GradeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Applies `map` label by label. Set-valued results are strict SVFS since
/// every embedding into SVFS produces nonempty grades.
pub fn lift_grade_map(a: &AnyFuzzySet, map: &GradeMap) -> Result<AnyFuzzySet, FuzzyError> {
    let wrong = || FuzzyError::FamilyMismatch { expected: map.source(), found: a.family() };
    let svfs = |set: Svfs| AnyFuzzySet::Svfs { set, empty_allowed: false };
    Ok(match (a, map) {
        (AnyFuzzySet::Fs(x), GradeMap::Phi) => AnyFuzzySet::Ivfs(phi(x)),
        (AnyFuzzySet::Fs(x), GradeMap::Omega) => AnyFuzzySet::Ivfs(omega(x)),
        (AnyFuzzySet::Fs(x), GradeMap::Lambda) => AnyFuzzySet::Ivfs(lambda(x)),
        (AnyFuzzySet::Fs(x), GradeMap::Pair(p)) => AnyFuzzySet::Ivfs(pair(x, p)),
        (AnyFuzzySet::Fs(x), GradeMap::Iota) => svfs(iota(x)),
        (AnyFuzzySet::Fs(x), GradeMap::Theta) => svfs(theta(x)),
        (AnyFuzzySet::Fs(x), GradeMap::Gamma) => AnyFuzzySet::T2fs(gamma(x)),
        (AnyFuzzySet::Fs(x), GradeMap::PhiBar) => AnyFuzzySet::T2fs(phi_bar(x)),
        (AnyFuzzySet::Fs(x), GradeMap::LambdaBar) => AnyFuzzySet::T2fs(lambda_bar(x)),
        (AnyFuzzySet::Ivfs(x), GradeMap::Inclusion) => svfs(inclusion(x)),
        (AnyFuzzySet::Ivfs(x), GradeMap::ClosedInclusion) => AnyFuzzySet::Cvfs(closed_inclusion(x)),
        (AnyFuzzySet::Ivfs(x), GradeMap::Xi) => svfs(xi_lift(x)),
        (AnyFuzzySet::Svfs { set, .. }, GradeMap::MuBar) => AnyFuzzySet::T2fs(mu_bar(set)),
        (AnyFuzzySet::Cvfs(x), GradeMap::Delta) => AnyFuzzySet::T2fs(delta_lift(x)),
        (AnyFuzzySet::Cvfs(x), GradeMap::DeltaF(f)) => {
            check_delta_map(f).map_err(|e| FuzzyError::InvalidGrade(e.to_string()))?;
            AnyFuzzySet::T2fs(delta_f_lift(x, f))
        }
        _ => return Err(wrong()),
    })
}
