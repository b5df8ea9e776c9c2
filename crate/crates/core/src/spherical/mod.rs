//! Spherical (finite type) recognition, spherical subset enumeration and
//! spherical factors.

pub mod family;
pub mod field;
pub mod oracle;

use std::collections::HashSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::diagram::{bits, CoxeterDiagram, DiagramError, Subset};
pub use family::{classify_connected, families_admitting_label, FiniteFamily, FAMILY_TABLE};
pub use oracle::{
    coxeter_order_bfs, coxeter_order_bfs_mask, gram_positive_definite, OracleError, OrderOutcome,
    DEFAULT_BFS_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Spherical,
    InfiniteType,
}

/// Classification of one subset of generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalReport {
    pub subset: Subset,
    pub verdict: Verdict,
    /// Irreducible components with their family, when spherical.
    pub families: Vec<(FiniteFamily, Subset)>,
    #[serde(with = "biguint_text")]
    pub coxeter_order: Option<BigUint>,
}

impl SphericalReport {
    pub fn is_spherical(&self) -> bool {
        self.verdict == Verdict::Spherical
    }
}

/// Families of the components of `induced(d, mask)`, or `None` if some
/// component is of infinite type.
pub fn classify_mask(d: &CoxeterDiagram, mask: u64) -> Option<Vec<(FiniteFamily, u64)>> {
    d.component_masks(mask)
        .into_iter()
        .map(|c| classify_connected(d, c).map(|f| (f, c)))
        .collect()
}

pub fn is_spherical_mask(d: &CoxeterDiagram, mask: u64) -> bool {
    d.component_masks(mask)
        .into_iter()
        .all(|c| classify_connected(d, c).is_some())
}

pub fn is_spherical(d: &CoxeterDiagram, subset: &Subset) -> Result<SphericalReport, DiagramError> {
    let mask = d.mask_of(subset)?;
    Ok(match classify_mask(d, mask) {
        Some(families) => {
            let order = families.iter().map(|(f, _)| f.order()).product();
            SphericalReport {
                subset: subset.clone(),
                verdict: Verdict::Spherical,
                families: families
                    .into_iter()
                    .map(|(f, c)| (f, d.subset_of_mask(c)))
                    .collect(),
                coxeter_order: Some(order),
            }
        }
        None => SphericalReport {
            subset: subset.clone(),
            verdict: Verdict::InfiniteType,
            families: Vec::new(),
            coxeter_order: None,
        },
    })
}

/// Spherical subsets as masks, level by level. A subset is only tested once
/// all of its maximal proper subsets are known to be spherical.
pub fn spherical_masks(d: &CoxeterDiagram) -> Vec<u64> {
    let n = d.rank();
    let mut all = vec![0u64];
    let mut level: Vec<u64> = vec![0];
    while !level.is_empty() {
        let known: HashSet<u64> = level.iter().copied().collect();
        let mut next = Vec::new();
        for &m in &level {
            let start = if m == 0 {
                0
            } else {
                64 - m.leading_zeros() as usize
            };
            for j in start..n {
                let cand = m | (1 << j);
                let hereditary = bits(cand).all(|i| known.contains(&(cand & !(1 << i))));
                if hereditary && is_spherical_mask(d, cand) {
                    next.push(cand);
                }
            }
        }
        all.extend(&next);
        level = next;
    }
    all
}

/// All spherical subsets (including the empty one) in graded lexicographic order.
pub fn spherical_subsets(d: &CoxeterDiagram) -> Vec<Subset> {
    let mut out: Vec<Subset> = spherical_masks(d)
        .into_iter()
        .map(|m| d.subset_of_mask(m))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Largest size of a spherical subset and every subset realising it.
///
/// Under the K(pi,1) assumption this is the cohomological dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CdReport {
    pub value: usize,
    pub witnesses: Vec<Subset>,
}

pub fn max_spherical(d: &CoxeterDiagram) -> CdReport {
    let masks = spherical_masks(d);
    let value = masks.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
    let mut witnesses: Vec<Subset> = masks
        .into_iter()
        .filter(|m| m.count_ones() as usize == value)
        .map(|m| d.subset_of_mask(m))
        .collect();
    witnesses.sort();
    CdReport { value, witnesses }
}

/// Spherical dimension of `induced(d, mask)`.
pub fn spherical_dimension_mask(d: &CoxeterDiagram, mask: u64) -> usize {
    max_spherical(&d.induced_mask(mask)).value
}

/// Components split into spherical factors `U_i` and infinite-type ones `V_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSplit {
    pub spherical: Vec<Subset>,
    pub infinite: Vec<Subset>,
}

impl FactorSplit {
    pub fn infinite_union(&self) -> Subset {
        self.infinite.iter().fold(Subset::empty(), |acc, v| acc.union(v))
    }
}

pub fn spherical_factors(d: &CoxeterDiagram) -> FactorSplit {
    let mut split = FactorSplit::default();
    for c in d.component_masks(d.full_mask()) {
        let subset = d.subset_of_mask(c);
        if classify_connected(d, c).is_some() {
            split.spherical.push(subset);
        } else {
            split.infinite.push(subset);
        }
    }
    split
}

/// Irreducible spherical subsets (connected and finite type), graded lexicographic.
pub fn irreducible_spherical_subsets(d: &CoxeterDiagram) -> Vec<Subset> {
    let mut out: Vec<Subset> = spherical_masks(d)
        .into_iter()
        .filter(|&m| d.is_connected_mask(m))
        .map(|m| d.subset_of_mask(m))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

mod biguint_text {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(n) => s.collect_str(n),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| t.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_diagram;

    const SQUARE_DIAGONAL: &str = "generators: a b c d\na b 3\nb c 3\nc d 3\nd a 3\nb d 3\n";

    fn all(d: &CoxeterDiagram) -> Subset {
        d.all_generators()
    }

    #[test]
    fn recognises_small_cases() {
        let a3 = parse_diagram("generators: a b c\na b 3\nb c 3").unwrap();
        let r = is_spherical(&a3, &all(&a3)).unwrap();
        assert!(r.is_spherical());
        assert_eq!(r.families, vec![(FiniteFamily::A(3), all(&a3))]);
        assert_eq!(r.coxeter_order, Some(BigUint::from(24u32)));

        let tri = parse_diagram("generators: a b c\na b 3\nb c 3\na c 3").unwrap();
        assert_eq!(
            is_spherical(&tri, &all(&tri)).unwrap().verdict,
            Verdict::InfiniteType
        );

        let s = parse_diagram("generators: s").unwrap();
        let r = is_spherical(&s, &all(&s)).unwrap();
        assert_eq!(r.families[0].0, FiniteFamily::A(1));
        assert_eq!(r.coxeter_order, Some(BigUint::from(2u32)));

        let i27 = parse_diagram("generators: a b\na b 7").unwrap();
        let r = is_spherical(&i27, &all(&i27)).unwrap();
        assert_eq!(r.families[0].0, FiniteFamily::I2(7));
        assert_eq!(r.coxeter_order, Some(BigUint::from(14u32)));
    }

    #[test]
    fn product_orders_multiply() {
        let d = parse_diagram("generators: a b c d e\na b 3\nc d 4").unwrap();
        let r = is_spherical(&d, &all(&d)).unwrap();
        assert_eq!(r.coxeter_order, Some(BigUint::from(6u32 * 8 * 2)));
        assert_eq!(r.families.len(), 3);
    }

    #[test]
    fn square_diagonal_spherical_dimension() {
        let d = parse_diagram(SQUARE_DIAGONAL).unwrap();
        let cd = max_spherical(&d);
        assert_eq!(cd.value, 3);
        assert_eq!(
            cd.witnesses,
            vec![Subset::new(["a", "b", "c"]), Subset::new(["a", "c", "d"])]
        );
    }

    #[test]
    fn square_diagonal_witnesses_match_exhaustive_check() {
        // Independent of the pruned enumeration: test every one of the 16 subsets.
        let d = parse_diagram(SQUARE_DIAGONAL).unwrap();
        let mut best = 0;
        let mut found = Vec::new();
        for mask in 0u64..16 {
            let subset = d.subset_of_mask(mask);
            if is_spherical(&d, &subset).unwrap().is_spherical() {
                let k = subset.len();
                if k > best {
                    best = k;
                    found.clear();
                }
                if k == best {
                    found.push(subset);
                }
            }
        }
        found.sort();
        assert_eq!(
            max_spherical(&d),
            CdReport {
                value: best,
                witnesses: found
            }
        );
    }

    #[test]
    fn free_pair_has_dimension_one() {
        let d = parse_diagram("generators: a b\na b inf").unwrap();
        assert_eq!(max_spherical(&d).value, 1);
        let a3 = parse_diagram("generators: a b c\na b 3\nb c 3").unwrap();
        assert_eq!(max_spherical(&a3).witnesses, vec![all(&a3)]);
        assert_eq!(max_spherical(&CoxeterDiagram::empty()).value, 0);
    }

    #[test]
    fn graded_lexicographic_enumeration() {
        let d = parse_diagram("generators: b a\na b inf").unwrap();
        let subsets = spherical_subsets(&d);
        assert_eq!(
            subsets,
            vec![Subset::empty(), Subset::new(["a"]), Subset::new(["b"])]
        );
    }

    #[test]
    fn factors() {
        let d = parse_diagram("generators: a b x y z\na b 3\nx y 3\ny z 3\nx z 3").unwrap();
        let split = spherical_factors(&d);
        assert_eq!(split.spherical, vec![Subset::new(["a", "b"])]);
        assert_eq!(split.infinite, vec![Subset::new(["x", "y", "z"])]);

        let square_diagonal = parse_diagram(SQUARE_DIAGONAL).unwrap();
        let split = spherical_factors(&square_diagonal);
        assert!(split.spherical.is_empty());
        assert_eq!(split.infinite.len(), 1);

        assert_eq!(
            spherical_factors(&CoxeterDiagram::empty()),
            FactorSplit::default()
        );
    }

    #[test]
    fn report_json_round_trip() {
        let d = parse_diagram("generators: a b c\na b 3\nb c 3").unwrap();
        let r = is_spherical(&d, &all(&d)).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""coxeter_order":"24""#));
        assert_eq!(serde_json::from_str::<SphericalReport>(&json).unwrap(), r);
    }
}
