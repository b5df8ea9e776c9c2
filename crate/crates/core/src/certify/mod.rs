//! Trivial-center certification. [`certify_trivial_center`] builds a proof
//! trace whose every computational premise is re-evaluated by [`replay`].

mod engine;
pub mod fact;
pub mod kpi1;
pub mod replay;
pub mod rules;
pub mod trace;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::citation::Citation;
use crate::diagram::{CoxeterDiagram, Subset};
use crate::spherical::spherical_factors;

pub use fact::{ChildRelation, Fact, Premise};
pub use kpi1::{is_fc, kpi1_class, kpi1_status, Kpi1Class, Kpi1Status};
pub use replay::{replay, replay_checked, ReplayFailure};
pub use trace::{Goal, ProofTrace, Rule, Step, StepData, WitnessPair};

/// A premise the engine expected to hold but which evaluated false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Error)]
#[error("verification failure ({citation}): {detail}{}", .fact.as_ref().map(|f| format!("; failed fact {f:?}")).unwrap_or_default())]
pub struct VerificationFailure {
    pub fact: Option<Box<Fact>>,
    pub citation: Citation,
    pub detail: String,
}

/// Hypotheses that do not hold, so no trace is attempted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Error)]
#[serde(tag = "refusal")]
pub enum Refusal {
    #[error("spherical factors {} each contribute an infinite cyclic central subgroup", display_factors(.factors))]
    SphericalFactorObstruction {
        factors: Vec<Subset>,
        center_generators: Vec<String>,
    },
    #[error("K(pi,1) status is {status}; pass the assumption flag to proceed")]
    NoKpi1 { status: Kpi1Status },
}

fn display_factors(factors: &[Subset]) -> String {
    factors
        .iter()
        .map(Subset::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("refused: {0}")]
    Refused(#[from] Refusal),
    #[error(transparent)]
    Verification(#[from] VerificationFailure),
}

/// Symbol for the central generator contributed by an irreducible spherical factor.
pub fn center_symbol(factor: &Subset) -> String {
    format!("z{{{}}}", factor.names().join(","))
}

fn root_assumptions(status: &Kpi1Status) -> Vec<String> {
    let mut out = vec![
        "cohomological dimension of every standard parabolic subgroup equals the size of its largest spherical subset"
            .to_string(),
        "FC type: every subset with no inf label is spherical".to_string(),
        "two-dimensional: every spherical subset has at most two generators".to_string(),
        "locally reducible: every irreducible spherical subset has at most two generators".to_string(),
    ];
    if matches!(status, Kpi1Status::Assumed) {
        out.push(
            "K(pi,1) conjecture assumed: the diagram lies in none of the decided classes, and no checkable \
             criterion is available for the class the cited result covers"
                .to_string(),
        );
    }
    out
}

/// Certifies that `A_d` has trivial center, or explains why it will not try.
pub fn certify_trivial_center(d: &CoxeterDiagram, assume: bool) -> Result<ProofTrace, CertifyError> {
    let split = spherical_factors(d);
    if !split.spherical.is_empty() {
        let center_generators = split.spherical.iter().map(center_symbol).collect();
        return Err(Refusal::SphericalFactorObstruction {
            factors: split.spherical,
            center_generators,
        }
        .into());
    }
    let status = kpi1_status(d, assume);
    if status == Kpi1Status::Unknown {
        return Err(Refusal::NoKpi1 { status }.into());
    }
    let mut root = engine::prove_trivial_center(d)?;
    root.assumptions = root_assumptions(&status);
    Ok(ProofTrace { kpi1: status, root })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conditionality {
    /// No infinite part, or its trace bottoms out in free groups and the empty diagram.
    Unconditional,
    ConditionalOnKpi1,
    /// The infinite part could not be certified.
    ConditionalOnCenterConjecture,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterReport {
    pub rank: usize,
    pub generators: Vec<String>,
    pub conditionality: Conditionality,
}

/// Rank of the center: one infinite cyclic factor per spherical component,
/// provided the infinite-type part has trivial center.
pub fn center_of(d: &CoxeterDiagram, assume: bool) -> CenterReport {
    let split = spherical_factors(d);
    let generators: Vec<String> = split.spherical.iter().map(center_symbol).collect();
    let infinite = split.infinite_union();
    let conditionality = if infinite.is_empty() {
        Conditionality::Unconditional
    } else {
        let sub = d.induced(&infinite).expect("union of components");
        match certify_trivial_center(&sub, assume) {
            Ok(trace)
                if trace
                    .root
                    .leaves()
                    .iter()
                    .all(|r| matches!(r, Rule::FreeGroupBase | Rule::EmptyBase)) =>
            {
                Conditionality::Unconditional
            }
            Ok(_) => Conditionality::ConditionalOnKpi1,
            Err(_) => Conditionality::ConditionalOnCenterConjecture,
        }
    };
    CenterReport {
        rank: generators.len(),
        generators,
        conditionality,
    }
}
