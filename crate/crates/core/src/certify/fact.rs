//! Machine-checkable premises. Every fact is re-evaluated from scratch
//! against the diagram of the step that states it.

use serde::{Deserialize, Serialize};

use super::trace::{Goal, Step};
use crate::citation::Citation;
use crate::diagram::{CoxeterDiagram, Label, Subset};
use crate::spherical::{
    classify_connected, families_admitting_label, is_spherical_mask, max_spherical, spherical_factors,
    FiniteFamily,
};
use crate::surface::{build_surface, center_h1, check_boundary_intersection, twist_h1};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Fact {
    EmptyDiagram,
    /// `induced(subset)` is nonempty with no spherical component.
    NoSphericalFactor {
        subset: Subset,
    },
    FreeOfInfinity {
        subset: Subset,
    },
    HasInfiniteLabel {
        subset: Subset,
    },
    /// `witness` is spherical and as large as any spherical subset of `ambient`.
    MaximalSpherical {
        ambient: Subset,
        witness: Subset,
    },
    /// Largest spherical subset of `subset` has `value` elements.
    Dimension {
        subset: Subset,
        value: usize,
    },
    /// `parts` are the irreducible components of `witness`.
    Decomposition {
        witness: Subset,
        parts: Vec<Subset>,
    },
    /// `s` lies outside `witness`, `t` in `part`, and `m_st` is not 2.
    NonCommutingPair {
        witness: Subset,
        part: Subset,
        s: String,
        t: String,
    },
    InfiniteLabel {
        v: String,
        w: String,
    },
    Avoids {
        witness: Subset,
        generator: String,
    },
    /// Components of `induced(subset)` split into spherical and infinite ones.
    FactorSplit {
        subset: Subset,
        spherical: Vec<Subset>,
        infinite: Vec<Subset>,
    },
    ContainedIn {
        parts: Vec<Subset>,
        witness: Subset,
    },
    /// Every part has an element joined to `generator` by an edge.
    AdjacentToAll {
        generator: String,
        parts: Vec<Subset>,
    },
    /// `component` is the component of `within` containing `generator`.
    ComponentOf {
        component: Subset,
        within: Subset,
        generator: String,
    },
    NotSpherical {
        subset: Subset,
    },
    /// The diagram is exactly `witness` plus `generator`.
    GoalShape {
        generator: String,
        witness: Subset,
    },
    /// Every `inf` label involves `generator`.
    InfinityOnlyAt {
        generator: String,
    },
    /// `quotient` is the diagram with every `inf` replaced by 7.
    Quotient {
        quotient: CoxeterDiagram,
    },
    /// `diagram` is connected and its finite-type family is `family`.
    Classified {
        diagram: CoxeterDiagram,
        family: Option<FiniteFamily>,
    },
    /// Scanning the family table, only the dihedral family admits label 7.
    SevenOnlyDihedral,
    /// Small type: `gamma_generator` meets the boundary of the subsurface of
    /// `part`, by both the label criterion and the homology-support side.
    BoundaryMeetsCore {
        part: Subset,
        generator: String,
    },
    /// Small type: whether the squared center of `part` and the twist about
    /// `gamma_generator` fail to commute on homology.
    CenterTwistAction {
        part: Subset,
        generator: String,
        noncommuting: bool,
    },
    /// Child `index` has the given goal and its diagram is derived as stated.
    Child {
        index: usize,
        relation: ChildRelation,
        goal: Goal,
    },
    /// Taken from the literature; see the citation.
    Cited,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ChildRelation {
    Induced { subset: Subset },
    Quotient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Premise {
    pub fact: Fact,
    pub citation: Citation,
    pub ok: bool,
}

pub(crate) fn seven_quotient(d: &CoxeterDiagram) -> CoxeterDiagram {
    d.relabel(|_, _, l| if l == Label::Infinity { Label::Finite(7) } else { l })
}

fn induced(d: &CoxeterDiagram, s: &Subset) -> Option<CoxeterDiagram> {
    d.induced(s).ok()
}

fn mask(d: &CoxeterDiagram, s: &Subset) -> Option<u64> {
    d.mask_of(s).ok()
}

fn label(d: &CoxeterDiagram, a: &str, b: &str) -> Option<Label> {
    if a == b {
        return None;
    }
    d.label_between(a, b).ok()
}

fn no_spherical_factor(d: &CoxeterDiagram) -> bool {
    d.rank() > 0 && spherical_factors(d).spherical.is_empty()
}

impl Fact {
    /// Re-evaluates the fact on the step's diagram.
    pub fn check(&self, d: &CoxeterDiagram, children: &[Step]) -> bool {
        self.eval(d, children).unwrap_or(false)
    }

    fn eval(&self, d: &CoxeterDiagram, children: &[Step]) -> Option<bool> {
        Some(match self {
            Fact::EmptyDiagram => d.rank() == 0,
            Fact::NoSphericalFactor { subset } => no_spherical_factor(&induced(d, subset)?),
            Fact::FreeOfInfinity { subset } => induced(d, subset)?.is_free_of_infinity(),
            Fact::HasInfiniteLabel { subset } => !induced(d, subset)?.is_free_of_infinity(),
            Fact::MaximalSpherical { ambient, witness } => {
                let sub = induced(d, ambient)?;
                witness.is_subset_of(ambient)
                    && is_spherical_mask(&sub, mask(&sub, witness)?)
                    && max_spherical(&sub).value == witness.len()
            }
            Fact::Dimension { subset, value } => max_spherical(&induced(d, subset)?).value == *value,
            Fact::Decomposition { witness, parts } => {
                let sub = induced(d, witness)?;
                &sub.components() == parts
                    && parts
                        .iter()
                        .all(|p| sub.mask_of(p).is_ok_and(|m| is_spherical_mask(&sub, m)))
            }
            Fact::NonCommutingPair { witness, part, s, t } => {
                !witness.contains(s)
                    && part.is_subset_of(witness)
                    && part.contains(t)
                    && label(d, s, t)? != Label::TWO
            }
            Fact::InfiniteLabel { v, w } => label(d, v, w)? == Label::Infinity,
            Fact::Avoids { witness, generator } => {
                d.index_of(generator)?;
                witness.is_subset_of(&d.all_generators()) && !witness.contains(generator)
            }
            Fact::FactorSplit {
                subset,
                spherical,
                infinite,
            } => {
                let split = spherical_factors(&induced(d, subset)?);
                &split.spherical == spherical && &split.infinite == infinite
            }
            Fact::ContainedIn { parts, witness } => parts.iter().all(|p| p.is_subset_of(witness)),
            Fact::AdjacentToAll { generator, parts } => parts.iter().all(|p| {
                p.names()
                    .iter()
                    .any(|u| label(d, generator, u).is_some_and(|l| l != Label::TWO))
            }),
            Fact::ComponentOf {
                component,
                within,
                generator,
            } => {
                let sub = induced(d, within)?;
                within.contains(generator)
                    && sub
                        .components()
                        .iter()
                        .any(|c| c == component && c.contains(generator))
            }
            Fact::NotSpherical { subset } => !is_spherical_mask(d, mask(d, subset)?),
            Fact::GoalShape { generator, witness } => {
                !witness.contains(generator) && witness.with(generator) == d.all_generators()
            }
            Fact::InfinityOnlyAt { generator } => {
                let g = d.index_of(generator)?;
                let n = d.rank();
                (0..n).all(|i| (i + 1..n).all(|j| d.label(i, j) != Label::Infinity || i == g || j == g))
            }
            Fact::Quotient { quotient } => &seven_quotient(d) == quotient,
            Fact::Classified { diagram, family } => {
                diagram.rank() > 0
                    && diagram.is_irreducible()
                    && classify_connected(diagram, diagram.full_mask()) == *family
            }
            Fact::SevenOnlyDihedral => families_admitting_label(7) == ["I_2(m)"],
            Fact::BoundaryMeetsCore { part, generator } => {
                let cs = build_surface(d).ok()?;
                let c = check_boundary_intersection(&cs, part, generator).ok()?;
                c.criterion && c.agrees()
            }
            Fact::CenterTwistAction {
                part,
                generator,
                noncommuting,
            } => {
                let cs = build_surface(d).ok()?;
                let z = center_h1(&cs, part).ok()?;
                let s = d.index_of(generator)?;
                let twist = twist_h1(&cs, &cs.core_class(s));
                !z.commutes_with(&twist) == *noncommuting
            }
            Fact::Child {
                index,
                relation,
                goal,
            } => {
                let child = children.get(*index)?;
                let expected = match relation {
                    ChildRelation::Induced { subset } => induced(d, subset)?,
                    ChildRelation::Quotient => seven_quotient(d),
                };
                child.diagram == expected && &child.goal == goal
            }
            Fact::Cited => true,
        })
    }
}
