//! Independent trace checker. It trusts nothing recorded in the trace except
//! the shape of the tree: premises are re-derived from each step's data and
//! re-evaluated from scratch.

use std::fmt;

use super::kpi1::{kpi1_class, Kpi1Status};
use super::rules::{required_premises, rule_fits_goal};
use super::trace::{Goal, ProofTrace, Rule, Step};
use crate::diagram::{CoxeterDiagram, Label};

/// First problem found, with the path of child indices from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayFailure {
    pub path: Vec<usize>,
    pub reason: String,
}

impl fmt::Display for ReplayFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self.path.iter().map(usize::to_string).collect();
        write!(f, "at root/{}: {}", path.join("/"), self.reason)
    }
}

/// Whether every premise re-checks and the rule tree is well founded.
pub fn replay(trace: &ProofTrace) -> bool {
    replay_checked(trace).is_ok()
}

pub fn replay_checked(trace: &ProofTrace) -> Result<(), ReplayFailure> {
    let root = &trace.root;
    let at_root = |reason: String| ReplayFailure { path: vec![], reason };
    if root.goal != Goal::TrivialCenter {
        return Err(at_root("root goal is not a trivial center".into()));
    }
    let status_ok = match (&trace.kpi1, kpi1_class(&root.diagram)) {
        (Kpi1Status::Assumed, Kpi1Status::Unknown) => true,
        (recorded @ Kpi1Status::Known { .. }, actual) => *recorded == actual,
        _ => false,
    };
    if !status_ok {
        return Err(at_root(format!(
            "recorded K(pi,1) status {} does not re-check",
            trace.kpi1
        )));
    }
    let mut path = Vec::new();
    check_step(root, &mut path)
}

fn measure(step: &Step) -> (usize, usize, u8) {
    (
        step.diagram.rank(),
        infinite_labels(&step.diagram),
        step.goal.weight(),
    )
}

fn infinite_labels(d: &CoxeterDiagram) -> usize {
    let n = d.rank();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| d.label(i, j) == Label::Infinity)
        .count()
}

fn child_count(rule: Rule) -> usize {
    match rule {
        Rule::EmptyBase | Rule::FreeOfInfinityBase | Rule::FreeGroupBase => 0,
        Rule::AmalgamSplit | Rule::LabelSevenQuotient => 1,
        Rule::SphericalPeel => 2,
    }
}

fn check_step(step: &Step, path: &mut Vec<usize>) -> Result<(), ReplayFailure> {
    let here = path.clone();
    let fail = |reason: String| ReplayFailure {
        path: here.clone(),
        reason,
    };
    if !rule_fits_goal(step.rule, &step.goal) {
        return Err(fail(format!("{:?} cannot establish {:?}", step.rule, step.goal)));
    }
    if step.children.len() != child_count(step.rule) {
        return Err(fail(format!(
            "{:?} needs {} children, trace has {}",
            step.rule,
            child_count(step.rule),
            step.children.len()
        )));
    }
    let required = required_premises(&step.diagram, &step.goal, step.rule, &step.data)
        .ok_or_else(|| fail(format!("data does not fit {:?}", step.rule)))?;
    if required.len() != step.premises.len() {
        return Err(fail(format!(
            "{} premises recorded, {} required",
            step.premises.len(),
            required.len()
        )));
    }
    for ((fact, citation), premise) in required.iter().zip(&step.premises) {
        if &premise.fact != fact || &premise.citation != citation {
            return Err(fail(format!(
                "recorded premise {:?} differs from required {fact:?}",
                premise.fact
            )));
        }
        if !premise.ok || !fact.check(&step.diagram, &step.children) {
            return Err(fail(format!("premise fails: {fact:?} [{citation}]")));
        }
    }
    let parent = measure(step);
    for (i, child) in step.children.iter().enumerate() {
        if measure(child) >= parent {
            return Err(fail(format!("child {i} does not decrease the induction measure")));
        }
        path.push(i);
        check_step(child, path)?;
        path.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{certify_trivial_center, StepData};
    use crate::diagram::{parse_diagram, Subset};

    const SQUARE_DIAGONAL: &str = "generators: a b c d\na b 3\nb c 3\nc d 3\nd a 3\nb d 3";

    fn square_diagonal() -> ProofTrace {
        certify_trivial_center(&parse_diagram(SQUARE_DIAGONAL).unwrap(), true).unwrap()
    }

    #[test]
    fn tampered_witness_pair_fails() {
        let mut trace = square_diagonal();
        let StepData::FreeOfInfinity { pairs, .. } = &mut trace.root.data else {
            unreachable!()
        };
        pairs[0].t = "x".into();
        assert!(!replay(&trace));
        // Keep the recorded premise consistent with the data: the fact itself must fail.
        let mut trace = square_diagonal();
        let StepData::FreeOfInfinity { pairs, .. } = &mut trace.root.data else {
            unreachable!()
        };
        pairs[0].s = "a".into();
        pairs[0].t = "b".into();
        trace.root.premises = required_premises(
            &trace.root.diagram,
            &trace.root.goal,
            trace.root.rule,
            &trace.root.data,
        )
        .unwrap()
        .into_iter()
        .map(|(fact, citation)| crate::certify::Premise {
            fact,
            citation,
            ok: true,
        })
        .collect();
        let err = replay_checked(&trace).unwrap_err();
        assert!(err.reason.contains("NonCommutingPair"), "{err}");
    }

    #[test]
    fn non_maximal_witness_fails() {
        let mut trace = square_diagonal();
        let StepData::FreeOfInfinity {
            witness,
            parts,
            pairs,
        } = &mut trace.root.data
        else {
            unreachable!()
        };
        *witness = Subset::new(["a", "b"]);
        *parts = vec![witness.clone()];
        pairs[0].part = witness.clone();
        trace.root.premises = required_premises(
            &trace.root.diagram,
            &trace.root.goal,
            trace.root.rule,
            &trace.root.data,
        )
        .unwrap()
        .into_iter()
        .map(|(fact, citation)| crate::certify::Premise {
            fact,
            citation,
            ok: true,
        })
        .collect();
        let err = replay_checked(&trace).unwrap_err();
        assert!(err.reason.contains("MaximalSpherical"), "{err}");
    }

    #[test]
    fn flipped_ok_flag_and_status_fail() {
        let mut trace = square_diagonal();
        trace.root.premises[0].ok = false;
        assert!(!replay(&trace));
        let mut trace = square_diagonal();
        trace.kpi1 = Kpi1Status::Unknown;
        assert!(!replay(&trace));
    }

    #[test]
    fn dropped_child_fails() {
        let mut trace =
            certify_trivial_center(&parse_diagram("generators: a b\na b inf").unwrap(), false).unwrap();
        assert!(replay(&trace));
        trace.root.children.pop();
        assert!(!replay(&trace));
    }
}
