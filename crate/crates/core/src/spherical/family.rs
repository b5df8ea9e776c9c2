//! The finite-type (spherical) irreducible Coxeter diagrams and a matcher
//! that recognises them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::{bits, CoxeterDiagram, Label};

/// Irreducible finite Coxeter type.
///
/// Rank-two diagrams are tagged `A_2` (m=3), `B_2` (m=4) and `I_2(m)` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteFamily {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl FiniteFamily {
    pub fn rank(self) -> usize {
        match self {
            FiniteFamily::A(n) | FiniteFamily::B(n) | FiniteFamily::D(n) => n,
            FiniteFamily::E6 => 6,
            FiniteFamily::E7 => 7,
            FiniteFamily::E8 => 8,
            FiniteFamily::F4 | FiniteFamily::H4 => 4,
            FiniteFamily::H3 => 3,
            FiniteFamily::I2(_) => 2,
        }
    }

    /// Order of the Coxeter group.
    pub fn order(self) -> BigUint {
        let factorial = |n: usize| (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k);
        match self {
            FiniteFamily::A(n) => factorial(n + 1),
            FiniteFamily::B(n) => (BigUint::from(1u32) << n) * factorial(n),
            FiniteFamily::D(n) => (BigUint::from(1u32) << (n - 1)) * factorial(n),
            FiniteFamily::E6 => BigUint::from(51_840u32),
            FiniteFamily::E7 => BigUint::from(2_903_040u32),
            FiniteFamily::E8 => BigUint::from(696_729_600u32),
            FiniteFamily::F4 => BigUint::from(1_152u32),
            FiniteFamily::H3 => BigUint::from(120u32),
            FiniteFamily::H4 => BigUint::from(14_400u32),
            FiniteFamily::I2(m) => BigUint::from(2 * m),
        }
    }
}

impl fmt::Display for FiniteFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteFamily::A(n) => write!(f, "A_{n}"),
            FiniteFamily::B(n) => write!(f, "B_{n}"),
            FiniteFamily::D(n) => write!(f, "D_{n}"),
            FiniteFamily::E6 => f.write_str("E_6"),
            FiniteFamily::E7 => f.write_str("E_7"),
            FiniteFamily::E8 => f.write_str("E_8"),
            FiniteFamily::F4 => f.write_str("F_4"),
            FiniteFamily::H3 => f.write_str("H_3"),
            FiniteFamily::H4 => f.write_str("H_4"),
            FiniteFamily::I2(m) => write!(f, "I_2({m})"),
        }
    }
}

impl FromStr for FiniteFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("unknown family tag `{s}`");
        Ok(match s {
            "E_6" => FiniteFamily::E6,
            "E_7" => FiniteFamily::E7,
            "E_8" => FiniteFamily::E8,
            "F_4" => FiniteFamily::F4,
            "H_3" => FiniteFamily::H3,
            "H_4" => FiniteFamily::H4,
            _ => {
                if let Some(m) = s.strip_prefix("I_2(").and_then(|r| r.strip_suffix(')')) {
                    FiniteFamily::I2(m.parse().map_err(|_| bad())?)
                } else {
                    let (head, n) = s.split_once('_').ok_or_else(bad)?;
                    let n: usize = n.parse().map_err(|_| bad())?;
                    match head {
                        "A" if n >= 1 => FiniteFamily::A(n),
                        "B" if n >= 2 => FiniteFamily::B(n),
                        "D" if n >= 4 => FiniteFamily::D(n),
                        _ => return Err(bad()),
                    }
                }
            }
        })
    }
}

impl Serialize for FiniteFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FiniteFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Which edge labels a row of the classification table may carry.
#[derive(Clone, Copy, Debug)]
pub enum LabelRule {
    Exactly(&'static [u32]),
    AnyFrom(u32),
}

/// The classification table: each irreducible finite family and the labels
/// (`>= 3`) its diagram can carry.
pub const FAMILY_TABLE: &[(&str, LabelRule)] = &[
    ("A_n", LabelRule::Exactly(&[3])),
    ("B_n", LabelRule::Exactly(&[3, 4])),
    ("D_n", LabelRule::Exactly(&[3])),
    ("E_6", LabelRule::Exactly(&[3])),
    ("E_7", LabelRule::Exactly(&[3])),
    ("E_8", LabelRule::Exactly(&[3])),
    ("F_4", LabelRule::Exactly(&[3, 4])),
    ("H_3", LabelRule::Exactly(&[3, 5])),
    ("H_4", LabelRule::Exactly(&[3, 5])),
    ("I_2(m)", LabelRule::AnyFrom(5)),
];

/// Rows of the table whose diagrams can carry the label `m`.
pub fn families_admitting_label(m: u32) -> Vec<&'static str> {
    FAMILY_TABLE
        .iter()
        .filter(|(_, rule)| match rule {
            LabelRule::Exactly(ls) => ls.contains(&m),
            LabelRule::AnyFrom(lo) => m >= *lo,
        })
        .map(|(name, _)| *name)
        .collect()
}

/// Matches a connected induced subdiagram against the table.
/// Returns `None` for infinite type.
pub fn classify_connected(d: &CoxeterDiagram, mask: u64) -> Option<FiniteFamily> {
    let verts: Vec<usize> = bits(mask).collect();
    let n = verts.len();
    let mut edges = Vec::new();
    for (a, &i) in verts.iter().enumerate() {
        for &j in &verts[a + 1..] {
            match d.label(i, j) {
                Label::Infinity => return None,
                Label::Finite(2) => {}
                Label::Finite(m) => edges.push((i, j, m)),
            }
        }
    }
    match n {
        0 => return None,
        1 => return Some(FiniteFamily::A(1)),
        2 => {
            let (_, _, m) = *edges.first()?;
            return Some(match m {
                3 => FiniteFamily::A(2),
                4 => FiniteFamily::B(2),
                m => FiniteFamily::I2(m),
            });
        }
        _ => {}
    }
    // Connected with n-1 edges means a tree.
    if edges.len() != n - 1 {
        return None;
    }
    let degree = |v: usize| edges.iter().filter(|&&(i, j, _)| i == v || j == v).count();
    if verts.iter().any(|&v| degree(v) > 3) {
        return None;
    }
    let heavy: Vec<_> = edges.iter().filter(|e| e.2 > 3).collect();
    let branches: Vec<usize> = verts.iter().copied().filter(|&v| degree(v) == 3).collect();
    let neighbours = |v: usize| -> Vec<usize> {
        edges
            .iter()
            .filter_map(|&(i, j, _)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect()
    };

    match branches.len() {
        0 => {
            let start = *verts.iter().find(|&&v| degree(v) == 1)?;
            let mut path = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while let Some(&next) = neighbours(cur).iter().find(|&&x| x != prev) {
                path.push(next);
                prev = cur;
                cur = next;
            }
            if heavy.is_empty() {
                return Some(FiniteFamily::A(n));
            }
            if heavy.len() > 1 {
                return None;
            }
            let (hi, hj, m) = *heavy[0];
            let pos = path
                .windows(2)
                .position(|w| (w[0] == hi && w[1] == hj) || (w[0] == hj && w[1] == hi))?;
            let at_end = pos == 0 || pos == n - 2;
            match (m, n) {
                (4, _) if at_end => Some(FiniteFamily::B(n)),
                (4, 4) if pos == 1 => Some(FiniteFamily::F4),
                (5, 3) => Some(FiniteFamily::H3),
                (5, 4) if at_end => Some(FiniteFamily::H4),
                _ => None,
            }
        }
        1 if heavy.is_empty() => {
            let centre = branches[0];
            let mut arms: Vec<usize> = neighbours(centre)
                .into_iter()
                .map(|first| {
                    let mut len = 1;
                    let (mut prev, mut cur) = (centre, first);
                    while let Some(&next) = neighbours(cur).iter().find(|&&x| x != prev) {
                        len += 1;
                        prev = cur;
                        cur = next;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms[..] {
                [1, 1, r] => Some(FiniteFamily::D(r + 3)),
                [1, 2, 2] => Some(FiniteFamily::E6),
                [1, 2, 3] => Some(FiniteFamily::E7),
                [1, 2, 4] => Some(FiniteFamily::E8),
                _ => None,
            }
        }
        _ => None,
    }
}
