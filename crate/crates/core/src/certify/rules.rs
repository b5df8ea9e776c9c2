//! The premises each rule needs, derived from a step's recorded data. The
//! emitter evaluates them while building a trace; replay re-derives and
//! re-evaluates them.

use super::fact::{ChildRelation, Fact};
use super::trace::{Goal, Rule, StepData};
use crate::citation::Citation;
use crate::diagram::{CoxeterDiagram, Subset};
use crate::spherical::FiniteFamily;

fn computed(fact: Fact) -> (Fact, Citation) {
    (fact, Citation::Computation)
}

fn cited(c: Citation) -> (Fact, Citation) {
    (Fact::Cited, c)
}

/// Rules admissible for a goal.
pub fn rule_fits_goal(rule: Rule, goal: &Goal) -> bool {
    match goal {
        Goal::TrivialCenter => matches!(
            rule,
            Rule::EmptyBase | Rule::FreeOfInfinityBase | Rule::AmalgamSplit | Rule::SphericalPeel
        ),
        Goal::NoCommutingCenter { .. } => matches!(
            rule,
            Rule::FreeOfInfinityBase | Rule::LabelSevenQuotient | Rule::FreeGroupBase
        ),
    }
}

fn goal_premises(goal: &Goal, all: &Subset) -> Vec<(Fact, Citation)> {
    match goal {
        Goal::TrivialCenter => vec![computed(Fact::NoSphericalFactor { subset: all.clone() })],
        Goal::NoCommutingCenter { generator, witness } => vec![computed(Fact::GoalShape {
            generator: generator.clone(),
            witness: witness.clone(),
        })],
    }
}

/// Premises for `rule` with `data` on diagram `d`, or `None` when the data
/// does not belong to the rule or contradicts the goal.
pub fn required_premises(
    d: &CoxeterDiagram,
    goal: &Goal,
    rule: Rule,
    data: &StepData,
) -> Option<Vec<(Fact, Citation)>> {
    if !rule_fits_goal(rule, goal) {
        return None;
    }
    let all = d.all_generators();
    let mut out = Vec::new();
    match (rule, data) {
        (Rule::EmptyBase, StepData::Empty) => out.push(computed(Fact::EmptyDiagram)),

        (
            Rule::FreeOfInfinityBase,
            StepData::FreeOfInfinity {
                witness,
                parts,
                pairs,
            },
        ) => {
            if let Goal::NoCommutingCenter {
                generator,
                witness: w,
            } = goal
            {
                if w != witness || pairs.iter().any(|p| &p.s != generator) {
                    return None;
                }
            }
            if pairs.len() != parts.len() || pairs.iter().zip(parts).any(|(p, q)| &p.part != q) {
                return None;
            }
            out.extend(goal_premises(goal, &all));
            if matches!(goal, Goal::NoCommutingCenter { .. }) {
                out.push(computed(Fact::NoSphericalFactor { subset: all.clone() }));
            }
            out.push(computed(Fact::FreeOfInfinity { subset: all.clone() }));
            out.push(computed(Fact::MaximalSpherical {
                ambient: all.clone(),
                witness: witness.clone(),
            }));
            out.push(computed(Fact::Decomposition {
                witness: witness.clone(),
                parts: parts.clone(),
            }));
            for p in pairs {
                out.push(computed(Fact::NonCommutingPair {
                    witness: witness.clone(),
                    part: p.part.clone(),
                    s: p.s.clone(),
                    t: p.t.clone(),
                }));
            }
            let small = d.is_small_type();
            if small {
                for p in pairs {
                    let noncommuting = p.h1_noncommuting?;
                    out.push((
                        Fact::BoundaryMeetsCore {
                            part: p.part.clone(),
                            generator: p.s.clone(),
                        },
                        Citation::BoundaryIntersection,
                    ));
                    out.push((
                        Fact::CenterTwistAction {
                            part: p.part.clone(),
                            generator: p.s.clone(),
                            noncommuting,
                        },
                        if noncommuting {
                            Citation::Computation
                        } else {
                            Citation::MultitwistCommutation
                        },
                    ));
                }
            } else if pairs.iter().any(|p| p.h1_noncommuting.is_some()) {
                return None;
            }
            out.push(cited(Citation::DimensionFromSpherical));
            out.push(cited(Citation::CentralElementDimension));
            out.push(cited(Citation::SphericalCenter));
            out.push(cited(if small {
                Citation::CoreCurves
            } else {
                Citation::SmallTypeFolding
            }));
            out.push(cited(Citation::CenterMultitwist));
            out.push(cited(Citation::DisjointBoundaries));
            out.push(cited(Citation::MultitwistCommutation));
        }

        (Rule::AmalgamSplit, StepData::Amalgam { v, w, witness }) => {
            let rest = all.without(v);
            out.extend(goal_premises(goal, &all));
            out.extend(split_premises(&all, v, w, witness));
            out.push(computed(Fact::NoSphericalFactor { subset: rest.clone() }));
            out.push(computed(Fact::Child {
                index: 0,
                relation: ChildRelation::Induced { subset: rest },
                goal: Goal::TrivialCenter,
            }));
            out.push(cited(Citation::AmalgamSplitting));
            out.push(cited(Citation::AmalgamCenter));
        }

        (
            Rule::SphericalPeel,
            StepData::Peel {
                v,
                w,
                witness,
                factors,
                infinite,
                component,
            },
        ) => {
            let rest = all.without(v);
            let inf_union = infinite.iter().fold(Subset::empty(), |acc, x| acc.union(x));
            out.extend(goal_premises(goal, &all));
            out.extend(split_premises(&all, v, w, witness));
            out.push(computed(Fact::FactorSplit {
                subset: rest,
                spherical: factors.clone(),
                infinite: infinite.clone(),
            }));
            out.push(computed(Fact::ContainedIn {
                parts: factors.clone(),
                witness: witness.clone(),
            }));
            out.push((
                Fact::Dimension {
                    subset: inf_union.clone(),
                    value: inf_union.intersection(witness).len(),
                },
                Citation::DimensionAdditivity,
            ));
            out.push(computed(Fact::AdjacentToAll {
                generator: v.clone(),
                parts: factors.clone(),
            }));
            out.push(computed(Fact::ComponentOf {
                component: component.clone(),
                within: witness.with(v),
                generator: v.clone(),
            }));
            out.push(computed(Fact::NotSpherical {
                subset: component.clone(),
            }));
            out.push(computed(Fact::Child {
                index: 0,
                relation: ChildRelation::Induced { subset: inf_union },
                goal: Goal::TrivialCenter,
            }));
            out.push(computed(Fact::Child {
                index: 1,
                relation: ChildRelation::Induced {
                    subset: component.clone(),
                },
                goal: Goal::NoCommutingCenter {
                    generator: v.clone(),
                    witness: component.without(v),
                },
            }));
            out.push(cited(Citation::AmalgamSplitting));
            out.push(cited(Citation::AmalgamCenter));
        }

        (Rule::LabelSevenQuotient, StepData::LabelSeven { quotient }) => {
            let Goal::NoCommutingCenter { generator, .. } = goal else {
                return None;
            };
            let family = (quotient.rank() == 2).then_some(FiniteFamily::I2(7));
            out.extend(goal_premises(goal, &all));
            out.push(computed(Fact::HasInfiniteLabel { subset: all.clone() }));
            out.push(computed(Fact::InfinityOnlyAt {
                generator: generator.clone(),
            }));
            out.push((
                Fact::Quotient {
                    quotient: quotient.clone(),
                },
                Citation::LabelSevenQuotient,
            ));
            out.push(computed(Fact::Classified {
                diagram: quotient.clone(),
                family,
            }));
            out.push((Fact::SevenOnlyDihedral, Citation::LabelSevenDihedral));
            out.push(computed(Fact::Child {
                index: 0,
                relation: ChildRelation::Quotient,
                goal: goal.clone(),
            }));
        }

        (Rule::FreeGroupBase, StepData::FreeGroup) => {
            out.extend(goal_premises(goal, &all));
            out.push(computed(Fact::Classified {
                diagram: d.clone(),
                family: Some(FiniteFamily::I2(7)),
            }));
            out.push((Fact::SevenOnlyDihedral, Citation::LabelSevenDihedral));
            out.push(cited(Citation::FreeGroupCenter));
        }

        _ => return None,
    }
    Some(out)
}

/// Shared premises of the two rules splitting along an `inf` label.
fn split_premises(all: &Subset, v: &str, w: &str, witness: &Subset) -> Vec<(Fact, Citation)> {
    vec![
        (
            Fact::MaximalSpherical {
                ambient: all.clone(),
                witness: witness.clone(),
            },
            Citation::Computation,
        ),
        (
            Fact::InfiniteLabel {
                v: v.to_string(),
                w: w.to_string(),
            },
            Citation::Computation,
        ),
        (
            Fact::Avoids {
                witness: witness.clone(),
                generator: v.to_string(),
            },
            Citation::Computation,
        ),
        (
            Fact::Dimension {
                subset: all.without(v),
                value: witness.len(),
            },
            Citation::Computation,
        ),
    ]
}
