//! Classes of Artin groups for which the K(pi,1) conjecture is known, decided
//! from the diagram.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{bits, CoxeterDiagram};
use crate::spherical::{is_spherical_mask, max_spherical, spherical_masks};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kpi1Class {
    Spherical,
    /// Every free-of-infinity subset is spherical.
    FC,
    /// Every spherical subset has at most two generators.
    TwoDimensional,
    /// Every irreducible spherical subset has at most two generators.
    LocallyReducible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Kpi1Status {
    /// Every class the diagram belongs to, in declaration order.
    Known {
        classes: Vec<Kpi1Class>,
    },
    Assumed,
    Unknown,
}

impl Kpi1Status {
    pub fn is_known(&self) -> bool {
        matches!(self, Kpi1Status::Known { .. })
    }
}

impl fmt::Display for Kpi1Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kpi1Status::Known { classes } => {
                let names: Vec<String> = classes.iter().map(|c| format!("{c:?}")).collect();
                write!(f, "Known ({})", names.join(", "))
            }
            Kpi1Status::Assumed => f.write_str("Assumed"),
            Kpi1Status::Unknown => f.write_str("Unknown"),
        }
    }
}

/// Maximal cliques of the graph joining generators with a finite label
/// (Bron-Kerbosch with pivoting).
fn maximal_finite_cliques(d: &CoxeterDiagram) -> Vec<u64> {
    let n = d.rank();
    let adj: Vec<u64> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && d.label(i, j).is_finite())
                .fold(0, |m, j| m | 1 << j)
        })
        .collect();
    let mut out = Vec::new();
    fn grow(r: u64, p: u64, x: u64, adj: &[u64], out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = bits(p | x)
            .max_by_key(|&u| (adj[u] & p).count_ones())
            .expect("p or x nonempty");
        let (mut p, mut x) = (p, x);
        for v in bits(p & !adj[pivot]) {
            grow(r | 1 << v, p & adj[v], x & adj[v], adj, out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    if n > 0 {
        grow(0, d.full_mask(), 0, &adj, &mut out);
    }
    out
}

pub fn is_fc(d: &CoxeterDiagram) -> bool {
    maximal_finite_cliques(d)
        .into_iter()
        .all(|c| is_spherical_mask(d, c))
}

pub fn kpi1_class(d: &CoxeterDiagram) -> Kpi1Status {
    let mut classes = Vec::new();
    if is_spherical_mask(d, d.full_mask()) {
        classes.push(Kpi1Class::Spherical);
    }
    if is_fc(d) {
        classes.push(Kpi1Class::FC);
    }
    if max_spherical(d).value <= 2 {
        classes.push(Kpi1Class::TwoDimensional);
    }
    if spherical_masks(d)
        .into_iter()
        .all(|m| m.count_ones() <= 2 || !d.is_connected_mask(m))
    {
        classes.push(Kpi1Class::LocallyReducible);
    }
    if classes.is_empty() {
        Kpi1Status::Unknown
    } else {
        Kpi1Status::Known { classes }
    }
}

/// Status used for certification: known classes win over the assumption flag.
pub fn kpi1_status(d: &CoxeterDiagram, assume: bool) -> Kpi1Status {
    match kpi1_class(d) {
        Kpi1Status::Unknown if assume => Kpi1Status::Assumed,
        s => s,
    }
}
