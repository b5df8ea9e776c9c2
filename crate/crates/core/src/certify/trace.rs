//! Proof-trace data model.

use serde::{Deserialize, Serialize};

use super::fact::Premise;
use super::kpi1::Kpi1Status;
use crate::diagram::{CoxeterDiagram, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    EmptyBase,
    FreeOfInfinityBase,
    FreeGroupBase,
    AmalgamSplit,
    SphericalPeel,
    LabelSevenQuotient,
}

impl Rule {
    pub fn is_leaf(self) -> bool {
        matches!(
            self,
            Rule::EmptyBase | Rule::FreeOfInfinityBase | Rule::FreeGroupBase
        )
    }
}

/// What a step establishes about its diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Goal {
    TrivialCenter,
    /// `generator` commutes with no nontrivial element of the center of
    /// `A_witness`, where the diagram is `witness` plus `generator`.
    NoCommutingCenter {
        generator: String,
        witness: Subset,
    },
}

impl Goal {
    pub(crate) fn weight(&self) -> u8 {
        match self {
            Goal::TrivialCenter => 1,
            Goal::NoCommutingCenter { .. } => 0,
        }
    }
}

/// Generator outside the witness that fails to commute with a component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub part: Subset,
    pub s: String,
    pub t: String,
    /// For small-type diagrams: whether the homology actions of `s` and of
    /// the squared central element of `part` already fail to commute.
    pub h1_noncommuting: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StepData {
    Empty,
    FreeOfInfinity {
        witness: Subset,
        parts: Vec<Subset>,
        pairs: Vec<WitnessPair>,
    },
    Amalgam {
        v: String,
        w: String,
        witness: Subset,
    },
    Peel {
        v: String,
        w: String,
        witness: Subset,
        factors: Vec<Subset>,
        infinite: Vec<Subset>,
        component: Subset,
    },
    LabelSeven {
        quotient: CoxeterDiagram,
    },
    FreeGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub diagram: CoxeterDiagram,
    #[serde(default)]
    pub assumptions: Vec<String>,
    pub goal: Goal,
    pub rule: Rule,
    pub data: StepData,
    pub premises: Vec<Premise>,
    pub children: Vec<Step>,
}

impl Step {
    pub fn leaves(&self) -> Vec<Rule> {
        if self.children.is_empty() {
            vec![self.rule]
        } else {
            self.children.iter().flat_map(Step::leaves).collect()
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Step::size).sum::<usize>()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTrace {
    pub kpi1: Kpi1Status,
    #[serde(flatten)]
    pub root: Step,
}
