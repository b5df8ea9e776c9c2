//! Ribbon-graph model of the surface attached to a small-type diagram.
//!
//! Every generator `s` contributes an annulus whose core curve `gamma_s`
//! is a closed cycle in a graph `K_S`. Two cores cross once, at a shared
//! vertex, exactly when the label between them is 3. The surface is the
//! thickening of `K_S`, so its homology, boundary and twist actions are all
//! read off the graph and its rotation system.

pub mod center;
pub mod checks;
pub mod curves;
pub mod homology;
pub mod ribbon;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{CoxeterDiagram, DiagramError, Label, Subset};
use crate::spherical::{is_spherical_mask, OracleError};
pub use center::{center_h1, center_word, multitwist_match, CenterWord, MultitwistMatch};
pub use checks::{
    check_boundary_intersection, check_disjoint_boundaries, run_surface_suite, BoundaryCheck, CheckResult,
    DisjointBoundaryCheck, SurfaceReport,
};
pub use curves::{
    commute_check, disjoint, gamma_t, twist_h1, CommuteCheck, Curve, CurveSource, DisjointRule, Disjointness,
    Multicurve, MulticurveSource, Multitwist, TwistFactor,
};
pub use homology::HomologyModel;
pub use ribbon::{Dart, Edge, Ribbon, Walk};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("not small type: {s} {t} has label {label}")]
    NotSmallType { s: String, t: String, label: Label },
    #[error("{0} is not an irreducible spherical subset")]
    NotIrreducibleSpherical(Subset),
    #[error("unsupported multicurve pair: {0}")]
    UnsupportedPair(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VertexKind {
    /// Where `gamma_s` and `gamma_t` cross (`s` before `t` by name).
    Crossing { s: usize, t: usize },
    /// The vertex only `gamma_s` passes through.
    Private { s: usize },
}

/// `K_S` with its rotation system, core curves and homology.
#[derive(Clone, Debug)]
pub struct CurveSystem {
    diagram: CoxeterDiagram,
    vertices: Vec<VertexKind>,
    ribbon: Ribbon,
    cores: Vec<Walk>,
    homology: HomologyModel,
}

pub fn build_surface(d: &CoxeterDiagram) -> Result<CurveSystem, SurfaceError> {
    let n = d.rank();
    for i in 0..n {
        for j in i + 1..n {
            let label = d.label(i, j);
            if label != Label::TWO && label != Label::THREE {
                return Err(SurfaceError::NotSmallType {
                    s: d.name(i).to_string(),
                    t: d.name(j).to_string(),
                    label,
                });
            }
        }
    }

    let by_name = |a: usize, b: usize| d.name(a).cmp(d.name(b));
    let mut vertices = Vec::new();
    let mut crossing = vec![vec![usize::MAX; n]; n];
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in i + 1..n {
            if d.label(i, j) == Label::THREE {
                let (s, t) = if by_name(i, j).is_lt() { (i, j) } else { (j, i) };
                crossing[i][j] = vertices.len();
                crossing[j][i] = vertices.len();
                vertices.push(VertexKind::Crossing { s, t });
            }
        }
    }
    let private: Vec<usize> = (0..n)
        .map(|s| {
            vertices.push(VertexKind::Private { s });
            vertices.len() - 1
        })
        .collect();

    let mut edges = Vec::new();
    let mut cores = Vec::with_capacity(n);
    // Darts of gamma_s leaving and entering each of its vertices.
    let mut leave = vec![vec![usize::MAX; vertices.len()]; n];
    let mut arrive = vec![vec![usize::MAX; vertices.len()]; n];
    for s in 0..n {
        let mut partners: Vec<usize> = (0..n).filter(|&t| d.label(s, t) == Label::THREE).collect();
        partners.sort_by(|&a, &b| by_name(a, b));
        let mut stops: Vec<usize> = partners.iter().map(|&t| crossing[s][t]).collect();
        stops.push(private[s]);
        let mut walk = Vec::with_capacity(stops.len());
        for k in 0..stops.len() {
            let (tail, head) = (stops[k], stops[(k + 1) % stops.len()]);
            let e = edges.len();
            edges.push(Edge { curve: s, tail, head });
            leave[s][tail] = 2 * e;
            arrive[s][head] = 2 * e + 1;
            walk.push(2 * e);
        }
        cores.push(Walk(walk));
    }

    let rotation = vertices
        .iter()
        .enumerate()
        .map(|(v, kind)| match *kind {
            VertexKind::Crossing { s, t } => vec![leave[s][v], leave[t][v], arrive[s][v], arrive[t][v]],
            VertexKind::Private { s } => vec![leave[s][v], arrive[s][v]],
        })
        .collect();
    let ribbon = Ribbon { edges, rotation };
    let homology = HomologyModel::build(&ribbon);
    Ok(CurveSystem {
        diagram: d.clone(),
        vertices,
        ribbon,
        cores,
        homology,
    })
}

impl CurveSystem {
    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn ribbon(&self) -> &Ribbon {
        &self.ribbon
    }

    pub fn homology(&self) -> &HomologyModel {
        &self.homology
    }

    pub fn vertices(&self) -> &[VertexKind] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ribbon.edges.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64
    }

    /// Core curve `gamma_s` as a walk.
    pub fn core(&self, s: usize) -> &Walk {
        &self.cores[s]
    }

    pub fn core_by_name(&self, name: &str) -> Result<&Walk, SurfaceError> {
        let i = self
            .diagram
            .index_of(name)
            .ok_or_else(|| DiagramError::UnknownGenerator(name.to_string()))?;
        Ok(&self.cores[i])
    }

    /// Homology coordinates of a closed walk.
    pub fn class_of(&self, walk: &Walk) -> Vec<i64> {
        self.homology.coordinates(&walk.edge_vector(self.edge_count()))
    }

    pub fn core_class(&self, s: usize) -> Vec<i64> {
        self.class_of(&self.cores[s])
    }

    /// Boundary circles of the thickened surface.
    pub fn boundary_components(&self) -> Vec<Walk> {
        self.ribbon.faces()
    }

    /// Genus from `chi = sum over components (2 - 2 g_i) - B`.
    pub fn genus(&self) -> Option<u64> {
        let c = self.ribbon.component_count() as i64;
        let b = self.boundary_components().len() as i64;
        let twice = 2 * c - self.euler_characteristic() - b;
        (twice >= 0 && twice % 2 == 0).then_some((twice / 2) as u64)
    }

    /// `K_T` as a sub-ribbon graph, edges mapped back to ambient ids.
    pub fn sub_ribbon(&self, mask: u64) -> SubRibbon {
        let (ribbon, ids) = self.ribbon.restrict(|e| mask >> e.curve & 1 == 1);
        SubRibbon { ribbon, ids }
    }

    /// Vertices met by a walk.
    pub fn walk_vertices(&self, walk: &Walk) -> Vec<usize> {
        let mut vs: Vec<usize> = walk.darts().iter().map(|&d| self.ribbon.vertex_of(d)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub(crate) fn irreducible_spherical_mask(&self, t: &Subset) -> Result<u64, SurfaceError> {
        let mask = self.diagram.mask_of(t)?;
        if mask == 0 || !self.diagram.is_connected_mask(mask) || !is_spherical_mask(&self.diagram, mask) {
            return Err(SurfaceError::NotIrreducibleSpherical(t.clone()));
        }
        Ok(mask)
    }
}

/// A sub-ribbon graph together with its edge embedding into `K_S`.
#[derive(Clone, Debug)]
pub struct SubRibbon {
    pub ribbon: Ribbon,
    pub ids: Vec<usize>,
}

impl SubRibbon {
    /// Lift a walk of the sub-ribbon graph to `K_S`.
    pub fn lift(&self, w: &Walk) -> Walk {
        Walk(w.darts().iter().map(|&d| 2 * self.ids[d / 2] + d % 2).collect())
    }
}
