//! Curves, multicurves and multitwists in the surface model, their action on
//! homology, and commutation decisions.

use serde::{Deserialize, Serialize};

use super::ribbon::Walk;
use super::{CurveSystem, SurfaceError};
use crate::citation::Citation;
use crate::diagram::{bits, Label, Subset};
use crate::linalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CurveSource {
    Core { generator: String },
    Boundary { subset: Subset, index: usize },
}

/// A closed walk in `K_S` standing for a simple closed curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Curve {
    pub name: String,
    pub source: CurveSource,
    pub walk: Walk,
    pub class: Vec<i64>,
}

pub fn core_curve(cs: &CurveSystem, s: usize) -> Curve {
    let generator = cs.diagram().name(s).to_string();
    Curve {
        name: format!("gamma_{generator}"),
        source: CurveSource::Core { generator },
        walk: cs.core(s).clone(),
        class: cs.core_class(s),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MulticurveSource {
    Core { generator: String },
    GammaT { subset: Subset },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multicurve {
    pub source: MulticurveSource,
    pub components: Vec<Curve>,
    /// Components grouped by isotopy class (equal unoriented cyclic walks).
    pub parallel_classes: Vec<Vec<usize>>,
    /// Why the components are pairwise disjoint.
    pub evidence: String,
}

impl Multicurve {
    pub fn core(cs: &CurveSystem, s: usize) -> Self {
        let c = core_curve(cs, s);
        Multicurve {
            source: MulticurveSource::Core {
                generator: cs.diagram().name(s).to_string(),
            },
            components: vec![c],
            parallel_classes: vec![vec![0]],
            evidence: "single curve".to_string(),
        }
    }
}

fn parallel_classes(curves: &[Curve]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, c) in curves.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|cl| curves[cl[0]].walk.same_cycle(&c.walk))
        {
            Some(cl) => cl.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}

/// Boundary multicurve of the subsurface of an irreducible spherical `T`:
/// the faces of the sub-ribbon graph `K_T`, realised as walks in `K_S`.
pub fn gamma_t(cs: &CurveSystem, t: &Subset) -> Result<Multicurve, SurfaceError> {
    let mask = cs.irreducible_spherical_mask(t)?;
    let sub = cs.sub_ribbon(mask);
    let components: Vec<Curve> = sub
        .ribbon
        .faces()
        .iter()
        .enumerate()
        .map(|(index, face)| {
            let walk = sub.lift(face);
            Curve {
                name: format!("Gamma{t}#{index}"),
                source: CurveSource::Boundary {
                    subset: t.clone(),
                    index,
                },
                class: cs.class_of(&walk),
                walk,
            }
        })
        .collect();
    Ok(Multicurve {
        source: MulticurveSource::GammaT { subset: t.clone() },
        parallel_classes: parallel_classes(&components),
        components,
        evidence: "distinct boundary circles of a thickened subgraph".to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum DisjointRule {
    /// Two copies of one curve, or components of one multicurve.
    SameMulticurve,
    /// Core curves are disjoint iff their label is 2.
    CoreLabel { label: Label },
    /// A core of `T` lies inside the subsurface bounded by `Gamma_T`.
    CoreInside,
    /// A core outside `T` misses `Gamma_T` iff it commutes with all of `T`.
    BoundaryCriterion { adjacent: Vec<String> },
    /// Disjoint subsets with no edge between them bound disjoint subsurfaces.
    SeparatedSubsets,
}

impl DisjointRule {
    pub fn citation(&self) -> Citation {
        match self {
            DisjointRule::SameMulticurve | DisjointRule::CoreInside => Citation::Computation,
            DisjointRule::CoreLabel { .. } => Citation::CoreCurves,
            DisjointRule::BoundaryCriterion { .. } => Citation::BoundaryIntersection,
            DisjointRule::SeparatedSubsets => Citation::DisjointBoundaries,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disjointness {
    pub disjoint: bool,
    pub rule: DisjointRule,
}

fn index(cs: &CurveSystem, name: &str) -> Result<usize, SurfaceError> {
    cs.diagram()
        .index_of(name)
        .ok_or_else(|| crate::diagram::DiagramError::UnknownGenerator(name.to_string()).into())
}

fn core_vs_boundary(cs: &CurveSystem, s: &str, t: &Subset) -> Result<Disjointness, SurfaceError> {
    if t.contains(s) {
        return Ok(Disjointness {
            disjoint: true,
            rule: DisjointRule::CoreInside,
        });
    }
    let d = cs.diagram();
    let si = index(cs, s)?;
    let adjacent: Vec<String> = t
        .names()
        .iter()
        .filter(|u| d.index_of(u).is_some_and(|ui| d.label(si, ui) != Label::TWO))
        .cloned()
        .collect();
    Ok(Disjointness {
        disjoint: adjacent.is_empty(),
        rule: DisjointRule::BoundaryCriterion { adjacent },
    })
}

fn source_pair(cs: &CurveSystem, a: &CurveSource, b: &CurveSource) -> Result<Disjointness, SurfaceError> {
    use CurveSource::*;
    match (a, b) {
        (Core { generator: s }, Core { generator: t }) => {
            if s == t {
                return Ok(Disjointness {
                    disjoint: true,
                    rule: DisjointRule::SameMulticurve,
                });
            }
            let label = cs.diagram().label(index(cs, s)?, index(cs, t)?);
            Ok(Disjointness {
                disjoint: label == Label::TWO,
                rule: DisjointRule::CoreLabel { label },
            })
        }
        (Core { generator: s }, Boundary { subset, .. })
        | (Boundary { subset, .. }, Core { generator: s }) => core_vs_boundary(cs, s, subset),
        (Boundary { subset: t1, .. }, Boundary { subset: t2, .. }) => {
            if t1 == t2 {
                return Ok(Disjointness {
                    disjoint: true,
                    rule: DisjointRule::SameMulticurve,
                });
            }
            let d = cs.diagram();
            let (m1, m2) = (d.mask_of(t1)?, d.mask_of(t2)?);
            let linked = bits(m1).any(|i| d.neighbours(i) & m2 != 0);
            if m1 & m2 != 0 || linked {
                return Err(SurfaceError::UnsupportedPair(format!(
                    "boundaries of {t1} and {t2}: subsets must be disjoint with no edge between them"
                )));
            }
            Ok(Disjointness {
                disjoint: true,
                rule: DisjointRule::SeparatedSubsets,
            })
        }
    }
}

/// Whether two curves are disjoint up to isotopy, for the pairs the model
/// characterises.
pub fn curves_disjoint(cs: &CurveSystem, a: &Curve, b: &Curve) -> Result<Disjointness, SurfaceError> {
    source_pair(cs, &a.source, &b.source)
}

/// Disjointness of two multicurves: every pair of components is disjoint.
pub fn disjoint(cs: &CurveSystem, a: &Multicurve, b: &Multicurve) -> Result<Disjointness, SurfaceError> {
    let mut first = None;
    for x in &a.components {
        for y in &b.components {
            let r = curves_disjoint(cs, x, y)?;
            if !r.disjoint {
                return Ok(r);
            }
            first.get_or_insert(r);
        }
    }
    first.ok_or_else(|| SurfaceError::UnsupportedPair("empty multicurve".to_string()))
}

/// Transvection `x -> x + <x, g> g` in the homology basis, i.e. `I + g (P g)^T`.
pub fn twist_h1(cs: &CurveSystem, class: &[i64]) -> IntMatrix {
    let h = cs.homology();
    let pg = h.pairing().apply(class);
    IntMatrix::identity(h.rank()).add(&IntMatrix::outer(class, &pg))
}

/// `k`-th power of a transvection; the rank-one part squares to zero.
pub fn twist_power_h1(cs: &CurveSystem, class: &[i64], k: i64) -> IntMatrix {
    let h = cs.homology();
    let pg = h.pairing().apply(class);
    IntMatrix::identity(h.rank()).add(&IntMatrix::outer(class, &pg).scale(k))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistFactor {
    pub curve: Curve,
    pub exponent: i64,
}

/// Product of nonzero twist powers about curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multitwist {
    pub factors: Vec<TwistFactor>,
}

impl Multitwist {
    pub fn new(factors: Vec<TwistFactor>) -> Result<Self, SurfaceError> {
        if let Some(f) = factors.iter().find(|f| f.exponent == 0) {
            return Err(SurfaceError::Precondition(format!(
                "zero exponent on {}",
                f.curve.name
            )));
        }
        Ok(Multitwist { factors })
    }

    pub fn single(curve: Curve, exponent: i64) -> Result<Self, SurfaceError> {
        Self::new(vec![TwistFactor { curve, exponent }])
    }

    /// Same exponent on every component of a multicurve.
    pub fn uniform(mc: &Multicurve, exponent: i64) -> Result<Self, SurfaceError> {
        Self::new(
            mc.components
                .iter()
                .map(|c| TwistFactor {
                    curve: c.clone(),
                    exponent,
                })
                .collect(),
        )
    }

    pub fn h1_matrix(&self, cs: &CurveSystem) -> IntMatrix {
        self.factors
            .iter()
            .fold(IntMatrix::identity(cs.homology().rank()), |acc, f| {
                &acc * &twist_power_h1(cs, &f.curve.class, f.exponent)
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum CommuteCheck {
    /// Every pair of components is disjoint.
    Commute { rules: Vec<DisjointRule> },
    /// The homology actions do not commute; `witness = AB - BA`.
    NotCommute { witness: IntMatrix },
    /// Homology cannot tell. When some pair is known to intersect and no
    /// curve is shared, the commutation criterion for multitwists still
    /// rules out commuting, and `citation` records it.
    Inconclusive {
        intersecting: Vec<(String, String)>,
        citation: Option<Citation>,
    },
}

impl CommuteCheck {
    /// Whether the mapping classes are known not to commute.
    pub fn known_noncommuting(&self) -> bool {
        match self {
            CommuteCheck::NotCommute { .. } => true,
            CommuteCheck::Inconclusive { citation, .. } => citation.is_some(),
            CommuteCheck::Commute { .. } => false,
        }
    }
}

pub fn commute_check(cs: &CurveSystem, a: &Multitwist, b: &Multitwist) -> CommuteCheck {
    let mut rules = Vec::new();
    let mut intersecting = Vec::new();
    let mut unknown = false;
    let mut shared = false;
    for x in &a.factors {
        for y in &b.factors {
            if x.curve.walk.same_cycle(&y.curve.walk) {
                shared = true;
            }
            match curves_disjoint(cs, &x.curve, &y.curve) {
                Ok(r) if r.disjoint => rules.push(r.rule),
                Ok(_) => intersecting.push((x.curve.name.clone(), y.curve.name.clone())),
                Err(_) => unknown = true,
            }
        }
    }
    if intersecting.is_empty() && !unknown {
        return CommuteCheck::Commute { rules };
    }
    let (ma, mb) = (a.h1_matrix(cs), b.h1_matrix(cs));
    let witness = ma.commutator_difference(&mb);
    if witness.entries().iter().any(|&x| x != 0) {
        return CommuteCheck::NotCommute { witness };
    }
    let citation = (!intersecting.is_empty() && !shared).then_some(Citation::MultitwistCommutation);
    CommuteCheck::Inconclusive {
        intersecting,
        citation,
    }
}
