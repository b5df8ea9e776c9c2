//! Builds proof traces by induction on the number of generators. All choices
//! are resolved lexicographically.

use super::fact::{seven_quotient, Premise};
use super::rules::required_premises;
use super::trace::{Goal, Rule, Step, StepData, WitnessPair};
use super::VerificationFailure;
use crate::citation::Citation;
use crate::diagram::{CoxeterDiagram, Label, Subset};
use crate::spherical::{max_spherical, spherical_factors};
use crate::surface::{build_surface, center_h1, twist_h1};

fn fail(detail: impl Into<String>) -> VerificationFailure {
    VerificationFailure {
        fact: None,
        citation: Citation::Computation,
        detail: detail.into(),
    }
}

/// Evaluates the rule's premises; the first false one aborts.
fn step(
    d: CoxeterDiagram,
    goal: Goal,
    rule: Rule,
    data: StepData,
    children: Vec<Step>,
) -> Result<Step, VerificationFailure> {
    let required = required_premises(&d, &goal, rule, &data)
        .ok_or_else(|| fail(format!("{rule:?} does not apply to the recorded data")))?;
    let mut premises = Vec::with_capacity(required.len());
    for (fact, citation) in required {
        let ok = fact.check(&d, &children);
        if !ok {
            return Err(VerificationFailure {
                fact: Some(Box::new(fact)),
                citation,
                detail: format!("premise of {rule:?} on {}", d.all_generators()),
            });
        }
        premises.push(Premise { fact, citation, ok });
    }
    Ok(Step {
        diagram: d,
        assumptions: Vec::new(),
        goal,
        rule,
        data,
        premises,
        children,
    })
}

fn sorted_names(d: &CoxeterDiagram) -> Vec<String> {
    d.all_generators().names().to_vec()
}

/// Lexicographically least spherical subset of maximal size.
fn least_witness(d: &CoxeterDiagram) -> Subset {
    max_spherical(d)
        .witnesses
        .into_iter()
        .next()
        .unwrap_or_else(Subset::empty)
}

pub(crate) fn prove_trivial_center(d: &CoxeterDiagram) -> Result<Step, VerificationFailure> {
    if d.rank() == 0 {
        return step(
            d.clone(),
            Goal::TrivialCenter,
            Rule::EmptyBase,
            StepData::Empty,
            vec![],
        );
    }
    let witness = least_witness(d);
    if d.is_free_of_infinity() {
        return free_of_infinity(d, Goal::TrivialCenter, witness);
    }

    let names = sorted_names(d);
    let (v, w) = names
        .iter()
        .flat_map(|v| names.iter().map(move |w| (v, w)))
        .find(|(v, w)| {
            v != w && !witness.contains(v) && d.label_between(v, w).is_ok_and(|l| l == Label::Infinity)
        })
        .map(|(v, w)| (v.clone(), w.clone()))
        .ok_or_else(|| fail("no inf label with an endpoint outside the witness"))?;

    let rest = d.all_generators().without(&v);
    let rest_diagram = d.induced(&rest).map_err(|e| fail(e.to_string()))?;
    let split = spherical_factors(&rest_diagram);
    if split.spherical.is_empty() {
        let child = prove_trivial_center(&rest_diagram)?;
        return step(
            d.clone(),
            Goal::TrivialCenter,
            Rule::AmalgamSplit,
            StepData::Amalgam { v, w, witness },
            vec![child],
        );
    }

    let infinite = split.infinite_union();
    let within = witness.with(&v);
    let within_diagram = d.induced(&within).map_err(|e| fail(e.to_string()))?;
    let component = within_diagram
        .components()
        .into_iter()
        .find(|c| c.contains(&v))
        .ok_or_else(|| fail("generator missing from its own component"))?;
    let infinite_diagram = d.induced(&infinite).map_err(|e| fail(e.to_string()))?;
    let component_diagram = d.induced(&component).map_err(|e| fail(e.to_string()))?;
    let children = vec![
        prove_trivial_center(&infinite_diagram)?,
        prove_no_commuting(&component_diagram, &v, component.without(&v))?,
    ];
    step(
        d.clone(),
        Goal::TrivialCenter,
        Rule::SphericalPeel,
        StepData::Peel {
            v,
            w,
            witness,
            factors: split.spherical,
            infinite: split.infinite,
            component,
        },
        children,
    )
}

/// `d` is `witness` plus `v`; shows `v` commutes with no nontrivial element
/// of the center of `A_witness`.
fn prove_no_commuting(d: &CoxeterDiagram, v: &str, witness: Subset) -> Result<Step, VerificationFailure> {
    let goal = Goal::NoCommutingCenter {
        generator: v.to_string(),
        witness: witness.clone(),
    };
    if d.is_free_of_infinity() {
        return free_of_infinity(d, goal, witness);
    }
    let quotient = seven_quotient(d);
    let child = if quotient.rank() == 2 {
        step(
            quotient.clone(),
            goal.clone(),
            Rule::FreeGroupBase,
            StepData::FreeGroup,
            vec![],
        )?
    } else {
        free_of_infinity(&quotient, goal.clone(), witness)?
    };
    step(
        d.clone(),
        goal,
        Rule::LabelSevenQuotient,
        StepData::LabelSeven { quotient },
        vec![child],
    )
}

fn free_of_infinity(d: &CoxeterDiagram, goal: Goal, witness: Subset) -> Result<Step, VerificationFailure> {
    let mask = d.mask_of(&witness).map_err(|e| fail(e.to_string()))?;
    let parts: Vec<Subset> = d
        .component_masks(mask)
        .into_iter()
        .map(|m| d.subset_of_mask(m))
        .collect();
    let outside: Vec<String> = sorted_names(d)
        .into_iter()
        .filter(|s| !witness.contains(s))
        .collect();
    let surface = if d.is_small_type() {
        Some(build_surface(d).map_err(|e| fail(e.to_string()))?)
    } else {
        None
    };
    let mut pairs = Vec::with_capacity(parts.len());
    for part in &parts {
        let (s, t) = outside
            .iter()
            .flat_map(|s| part.names().iter().map(move |t| (s, t)))
            .find(|(s, t)| d.label_between(s, t).is_ok_and(|l| l != Label::TWO))
            .ok_or_else(|| VerificationFailure {
                fact: None,
                citation: Citation::Computation,
                detail: format!(
                    "{part} commutes with every generator outside {witness}, so it is a spherical factor"
                ),
            })?;
        let h1_noncommuting = match &surface {
            Some(cs) => {
                let z = center_h1(cs, part).map_err(|e| fail(e.to_string()))?;
                let si = d.index_of(s).expect("generator of d");
                Some(!z.commutes_with(&twist_h1(cs, &cs.core_class(si))))
            }
            None => None,
        };
        pairs.push(WitnessPair {
            part: part.clone(),
            s: s.clone(),
            t: t.clone(),
            h1_noncommuting,
        });
    }
    step(
        d.clone(),
        goal,
        Rule::FreeOfInfinityBase,
        StepData::FreeOfInfinity {
            witness,
            parts,
            pairs,
        },
        vec![],
    )
}
