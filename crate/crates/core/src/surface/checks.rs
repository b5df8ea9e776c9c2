//! Executable checks of the surface model: each claim is tested by comparing
//! a combinatorial criterion on labels with an independent computation on
//! the ribbon graph or its homology.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::center::{center_h1, multitwist_match, MultitwistMatch};
use super::curves::{commute_check, core_curve, gamma_t, twist_h1, CommuteCheck, Multitwist};
use super::homology::HomologyModel;
use super::{CurveSystem, SurfaceError, VertexKind};
use crate::diagram::{bits, Label, Subset};
use crate::linalg::{in_span, IntMatrix};
use crate::spherical::{irreducible_spherical_subsets, is_spherical_mask};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, failures: Vec<String>, cases: usize) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: failures.is_empty(),
            detail: if failures.is_empty() {
                format!("{cases} cases")
            } else {
                format!("{} of {cases} failed; first: {}", failures.len(), failures[0])
            },
        }
    }
}

/// Both sides of the boundary-intersection criterion for `(T, s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryCheck {
    pub subset: Subset,
    pub generator: String,
    /// Some `t` in `T` has `m_st = 3`.
    pub criterion: bool,
    /// `gamma_s` passes through a vertex of `K_T`.
    pub meets_subgraph: bool,
    /// `[gamma_s]` lies outside the image of `H1(K_T)`.
    pub escapes_subsurface: bool,
}

impl BoundaryCheck {
    /// The homology-support side: `gamma_s` cannot be isotoped off `Gamma_T`.
    pub fn oracle(&self) -> bool {
        self.meets_subgraph && self.escapes_subsurface
    }

    pub fn agrees(&self) -> bool {
        self.criterion == self.oracle()
    }
}

/// Ambient classes spanning the image of `H1(K_T)`.
fn subsurface_classes(cs: &CurveSystem, mask: u64) -> Vec<Vec<i64>> {
    let sub = cs.sub_ribbon(mask);
    HomologyModel::build(&sub.ribbon)
        .basis()
        .iter()
        .map(|w| cs.class_of(&sub.lift(w)))
        .collect()
}

pub fn check_boundary_intersection(
    cs: &CurveSystem,
    t: &Subset,
    s: &str,
) -> Result<BoundaryCheck, SurfaceError> {
    let mask = cs.irreducible_spherical_mask(t)?;
    let d = cs.diagram();
    let si = d
        .index_of(s)
        .ok_or_else(|| crate::diagram::DiagramError::UnknownGenerator(s.to_string()))?;
    if mask >> si & 1 == 1 {
        return Err(SurfaceError::Precondition(format!("{s} lies in {t}")));
    }
    let criterion = bits(mask).any(|u| d.label(si, u) == Label::THREE);
    let sub = cs.sub_ribbon(mask);
    let sub_vertices = sub.ribbon.used_vertices();
    let meets_subgraph = cs
        .walk_vertices(cs.core(si))
        .iter()
        .any(|v| sub_vertices.binary_search(v).is_ok());
    let escapes_subsurface = !in_span(&subsurface_classes(cs, mask), &cs.core_class(si));
    Ok(BoundaryCheck {
        subset: t.clone(),
        generator: s.to_string(),
        criterion,
        meets_subgraph,
        escapes_subsurface,
    })
}

/// Disjointness of the boundaries of two separated irreducible spherical subsets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisjointBoundaryCheck {
    pub first: Subset,
    pub second: Subset,
    /// No component of one passes through a vertex of the other.
    pub vertex_disjoint: bool,
    /// No component of one equals a component of the other as a cyclic walk.
    pub non_isotopic: bool,
    /// The cycles representing the classes use disjoint edge sets.
    pub supports_disjoint: bool,
}

impl DisjointBoundaryCheck {
    pub fn holds(&self) -> bool {
        self.vertex_disjoint && self.non_isotopic && self.supports_disjoint
    }
}

/// Requires `T1`, `T2` disjoint with every label between them equal to 2;
/// for adjacent subsets the boundaries can cross.
pub fn check_disjoint_boundaries(
    cs: &CurveSystem,
    t1: &Subset,
    t2: &Subset,
) -> Result<DisjointBoundaryCheck, SurfaceError> {
    let m1 = cs.irreducible_spherical_mask(t1)?;
    let m2 = cs.irreducible_spherical_mask(t2)?;
    let d = cs.diagram();
    if m1 & m2 != 0 || bits(m1).any(|i| d.neighbours(i) & m2 != 0) {
        return Err(SurfaceError::Precondition(format!(
            "{t1} and {t2} must be disjoint with no edge between them"
        )));
    }
    let (g1, g2) = (gamma_t(cs, t1)?, gamma_t(cs, t2)?);
    let vertices = |mc: &super::Multicurve| -> Vec<usize> {
        let mut vs: Vec<usize> = mc
            .components
            .iter()
            .flat_map(|c| cs.walk_vertices(&c.walk))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    };
    let (v1, v2) = (vertices(&g1), vertices(&g2));
    let vertex_disjoint = v1.iter().all(|v| v2.binary_search(v).is_err());
    let non_isotopic = g1
        .components
        .iter()
        .all(|a| g2.components.iter().all(|b| !a.walk.same_cycle(&b.walk)));
    let ecount = cs.edge_count();
    let support = |mc: &super::Multicurve| -> Vec<bool> {
        let mut used = vec![false; ecount];
        for c in &mc.components {
            for (u, x) in used.iter_mut().zip(cs.homology().edge_vector(&c.class, ecount)) {
                *u |= x != 0;
            }
        }
        used
    };
    let (s1, s2) = (support(&g1), support(&g2));
    let supports_disjoint = s1.iter().zip(&s2).all(|(a, b)| !(a & b));
    Ok(DisjointBoundaryCheck {
        first: t1.clone(),
        second: t2.clone(),
        vertex_disjoint,
        non_isotopic,
        supports_disjoint,
    })
}

/// `rho(z_T^2)` and `rho(z_T^4)` against multitwists about `Gamma_T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterRecord {
    pub square: MultitwistMatch,
    pub fourth: MultitwistMatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport {
    pub generators: usize,
    pub vertices: usize,
    pub edges: usize,
    pub euler_characteristic: i64,
    pub components: usize,
    pub boundary_components: usize,
    pub genus: Option<u64>,
    pub h1_rank: usize,
    pub checks: Vec<CheckResult>,
    pub center_records: Vec<CenterRecord>,
}

impl SurfaceReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn preserves_pairing(m: &IntMatrix, p: &IntMatrix) -> bool {
    &(&m.transpose() * p) * m == *p
}

/// Runs every check on one curve system. `seed` drives the sampled
/// multitwist commutation check.
pub fn run_surface_suite(cs: &CurveSystem, seed: u64) -> Result<SurfaceReport, SurfaceError> {
    let d = cs.diagram();
    let n = d.rank();
    let r = cs.ribbon();
    let h = cs.homology();
    let p = h.pairing();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut checks = Vec::new();

    // Each core is a closed cycle through its private vertex and its crossings once each.
    let mut fails = Vec::new();
    for s in 0..n {
        let w = cs.core(s).darts();
        let closed = (0..w.len()).all(|k| r.vertex_of(w[k] ^ 1) == r.vertex_of(w[(k + 1) % w.len()]));
        let visits: Vec<usize> = w.iter().map(|&x| r.vertex_of(x)).collect();
        let mut expected: Vec<usize> = cs
            .vertices()
            .iter()
            .enumerate()
            .filter(|(_, k)| match **k {
                VertexKind::Crossing { s: a, t: b } => a == s || b == s,
                VertexKind::Private { s: a } => a == s,
            })
            .map(|(v, _)| v)
            .collect();
        let mut sorted = visits.clone();
        sorted.sort_unstable();
        expected.sort_unstable();
        if !closed || sorted != expected {
            fails.push(d.name(s).to_string());
        }
    }
    checks.push(CheckResult::new("core-cycles", fails, n));

    let mut fails = Vec::new();
    for (v, kind) in cs.vertices().iter().enumerate() {
        if let VertexKind::Crossing { s, t } = *kind {
            let curves: Vec<usize> = r.rotation[v].iter().map(|&x| r.edges[x / 2].curve).collect();
            if curves != [s, t, s, t] {
                fails.push(format!("vertex {v}"));
            }
        }
    }
    checks.push(CheckResult::new("crossings-alternate", fails, cs.vertex_count()));

    let threes = pairs
        .iter()
        .filter(|&&(i, j)| d.label(i, j) == Label::THREE)
        .count() as i64;
    let chi = cs.euler_characteristic();
    checks.push(CheckResult::new(
        "euler-characteristic",
        if chi == -threes {
            vec![]
        } else {
            vec![format!("V-E = {chi}, expected {}", -threes)]
        },
        1,
    ));

    let boundary = cs.boundary_components();
    let genus = cs.genus();
    checks.push(CheckResult::new(
        "boundary-count",
        if genus.is_some() {
            vec![]
        } else {
            vec![format!("B = {} incompatible with chi = {chi}", boundary.len())]
        },
        1,
    ));

    let components = r.component_count();
    let mut fails = Vec::new();
    if h.rank() as i64 != cs.edge_count() as i64 - cs.vertex_count() as i64 + components as i64 {
        fails.push(format!("rank {}", h.rank()));
    }
    if is_spherical_mask(d, d.full_mask()) && h.rank() != n {
        fails.push(format!("spherical diagram with rank {} != {n}", h.rank()));
    }
    checks.push(CheckResult::new("homology-rank", fails, 1));

    let antisym = p.transpose() == p.scale(-1);
    checks.push(CheckResult::new(
        "pairing-antisymmetric",
        if antisym { vec![] } else { vec!["P^T != -P".into()] },
        1,
    ));

    let classes: Vec<Vec<i64>> = (0..n).map(|s| cs.core_class(s)).collect();
    let mut fails = Vec::new();
    for &(i, j) in &pairs {
        let x = h.pair(&classes[i], &classes[j]);
        let expected = i64::from(d.label(i, j) == Label::THREE);
        if x.abs() != expected || x != r.intersection(cs.core(i), cs.core(j)) {
            fails.push(format!("<{},{}> = {x}", d.name(i), d.name(j)));
        }
    }
    checks.push(CheckResult::new("core-pairing", fails, pairs.len()));

    let mut fails = Vec::new();
    for &(i, j) in &pairs {
        let (vi, vj) = (cs.walk_vertices(cs.core(i)), cs.walk_vertices(cs.core(j)));
        let shared = vi.iter().filter(|v| vj.binary_search(v).is_ok()).count();
        let expected = usize::from(d.label(i, j) == Label::THREE);
        if shared != expected {
            fails.push(format!("{} {} share {shared} vertices", d.name(i), d.name(j)));
        }
    }
    checks.push(CheckResult::new("core-disjointness", fails, pairs.len()));

    let irreducible: Vec<Subset> = irreducible_spherical_subsets(d)
        .into_iter()
        .filter(|t| !t.is_empty())
        .collect();
    let masks: Vec<u64> = irreducible
        .iter()
        .map(|t| d.mask_of(t))
        .collect::<Result<_, _>>()?;
    let rho: Vec<IntMatrix> = classes.iter().map(|g| twist_h1(cs, g)).collect();

    let mut fails = Vec::new();
    let mut cases = 0;
    for (s, m) in rho.iter().enumerate() {
        cases += 1;
        if !preserves_pairing(m, p) {
            fails.push(format!("twist about gamma_{}", d.name(s)));
        }
    }
    for t in &irreducible {
        for c in gamma_t(cs, t)?.components {
            cases += 1;
            if !preserves_pairing(&twist_h1(cs, &c.class), p) {
                fails.push(format!("twist about {}", c.name));
            }
        }
    }
    checks.push(CheckResult::new("transvections-preserve-pairing", fails, cases));

    let mut fails = Vec::new();
    for &(i, j) in &pairs {
        let (a, b) = (&rho[i], &rho[j]);
        let ok = if d.label(i, j) == Label::TWO {
            a * b == b * a
        } else {
            &(a * b) * a == &(b * a) * b
        };
        if !ok {
            fails.push(format!("{} {}", d.name(i), d.name(j)));
        }
    }
    checks.push(CheckResult::new("braid-relations", fails, pairs.len()));

    let mut fails = Vec::new();
    let mut cases = 0;
    for (t, &mask) in irreducible.iter().zip(&masks) {
        for s in (0..n).filter(|&s| mask >> s & 1 == 0) {
            cases += 1;
            let c = check_boundary_intersection(cs, t, d.name(s))?;
            if !c.agrees() {
                fails.push(format!("{t} vs {}", d.name(s)));
            }
        }
    }
    checks.push(CheckResult::new("boundary-intersection", fails, cases));

    let mut fails = Vec::new();
    let mut cases = 0;
    for a in 0..irreducible.len() {
        for b in a + 1..irreducible.len() {
            let (m1, m2) = (masks[a], masks[b]);
            if m1 & m2 != 0 || bits(m1).any(|i| d.neighbours(i) & m2 != 0) {
                continue;
            }
            cases += 1;
            if !check_disjoint_boundaries(cs, &irreducible[a], &irreducible[b])?.holds() {
                fails.push(format!("{} {}", irreducible[a], irreducible[b]));
            }
        }
    }
    checks.push(CheckResult::new("disjoint-boundaries", fails, cases));

    let mut center_records = Vec::new();
    let mut commute_fails = Vec::new();
    let mut match_fails = Vec::new();
    let mut commute_cases = 0;
    for (t, &mask) in irreducible.iter().zip(&masks) {
        let z = center_h1(cs, t)?;
        for s in (0..n).filter(|&s| mask >> s & 1 == 0 && bits(mask).all(|u| d.label(s, u) == Label::TWO)) {
            commute_cases += 1;
            if !z.commutes_with(&rho[s]) {
                commute_fails.push(format!("{t} vs {}", d.name(s)));
            }
        }
        let record = CenterRecord {
            square: multitwist_match(cs, t, 2)?,
            fourth: multitwist_match(cs, t, 4)?,
        };
        if !record.square.matches {
            match_fails.push(t.to_string());
        }
        center_records.push(record);
    }
    checks.push(CheckResult::new(
        "center-commutes-with-distant-cores",
        commute_fails,
        commute_cases,
    ));
    checks.push(CheckResult::new(
        "center-multitwist",
        match_fails,
        irreducible.len(),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fails = Vec::new();
    let samples = if n >= 2 { 16 } else { 0 };
    for _ in 0..samples {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let mut exp = || {
            let e: i64 = rng.gen_range(1..=3);
            if rng.gen_bool(0.5) {
                e
            } else {
                -e
            }
        };
        let a = Multitwist::single(core_curve(cs, i), exp())?;
        let b = Multitwist::single(core_curve(cs, j), exp())?;
        let verdict = commute_check(cs, &a, &b);
        let ok = match d.label(i, j) {
            Label::Finite(2) => matches!(verdict, CommuteCheck::Commute { .. }),
            _ => matches!(verdict, CommuteCheck::NotCommute { .. }),
        };
        if !ok {
            fails.push(format!("{} {}", d.name(i), d.name(j)));
        }
    }
    checks.push(CheckResult::new("sampled-multitwist-commutation", fails, samples));

    Ok(SurfaceReport {
        generators: n,
        vertices: cs.vertex_count(),
        edges: cs.edge_count(),
        euler_characteristic: chi,
        components,
        boundary_components: boundary.len(),
        genus,
        h1_rank: h.rank(),
        checks,
        center_records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_diagram;
    use crate::surface::build_surface;

    const SQUARE_DIAGONAL: &str = "generators: a b c d\na b 3\nb c 3\nc d 3\nd a 3\nb d 3\n";

    fn system(text: &str) -> CurveSystem {
        build_surface(&parse_diagram(text).unwrap()).unwrap()
    }

    #[test]
    fn square_diagonal_suite_passes() {
        let cs = system(SQUARE_DIAGONAL);
        let report = run_surface_suite(&cs, 7).unwrap();
        for c in &report.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        // chi = -5 on one component.
        assert_eq!(report.euler_characteristic, -5);
        let g = report.genus.unwrap() as i64;
        assert_eq!(2 - 2 * g - report.boundary_components as i64, -5);
    }

    #[test]
    fn boundary_criterion_both_sides() {
        let cs = system("generators: a b c\na b 3\nb c 3");
        let c = check_boundary_intersection(&cs, &Subset::new(["a", "b"]), "c").unwrap();
        assert!(c.criterion && c.oracle());
        let cs = system("generators: a b c\na b 3");
        let c = check_boundary_intersection(&cs, &Subset::new(["a", "b"]), "c").unwrap();
        assert!(!c.criterion && !c.oracle());
    }

    #[test]
    fn separated_boundaries() {
        let cs = system(SQUARE_DIAGONAL);
        let c = check_disjoint_boundaries(&cs, &Subset::new(["a"]), &Subset::new(["c"])).unwrap();
        assert!(c.holds());
        assert!(check_disjoint_boundaries(&cs, &Subset::new(["a"]), &Subset::new(["b"])).is_err());
    }

    #[test]
    fn adjacent_singletons_have_crossing_boundaries() {
        // Disjoint but adjacent subsets: the annulus boundaries of a and b
        // pair to +-1 in homology, so they cannot be disjoint.
        let cs = system("generators: a b\na b 3");
        let ga = gamma_t(&cs, &Subset::new(["a"])).unwrap();
        let gb = gamma_t(&cs, &Subset::new(["b"])).unwrap();
        let x = cs
            .homology()
            .pair(&ga.components[0].class, &gb.components[0].class);
        assert_eq!(x.abs(), 1);
    }

    #[test]
    fn suite_reports_rank_one() {
        let report = run_surface_suite(&system("generators: s"), 0).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.boundary_components, 2);
    }
}
