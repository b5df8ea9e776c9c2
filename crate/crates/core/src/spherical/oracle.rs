//! Exact orbit enumeration for Coxeter groups.
//!
//! `W` acts on the dual of its canonical geometric representation; the orbit
//! of a point in the open fundamental chamber is in bijection with `W`, so
//! counting that orbit counts the group. With labels in `{2, 3, 4, 6, inf}`
//! the orbit coordinates are exact elements of `Z[sqrt2, sqrt3]`.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::field::QuadInt;
use crate::diagram::{bits, CoxeterDiagram, DiagramError, Label, Subset};

/// Default enumeration cap, above `|H_4| = 14400`.
pub const DEFAULT_BFS_CAP: u64 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderOutcome {
    Exact(u64),
    ExceededCap,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no exact representation for labels {labels:?} at rank {rank}")]
    UnsupportedLabels { rank: usize, labels: Vec<Label> },
    #[error("coordinate overflow during orbit enumeration")]
    Overflow,
    #[error("cap must be positive")]
    ZeroCap,
    #[error("Coxeter group is infinite (no longest element)")]
    Infinite,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Dual action of the simple reflections of an induced subdiagram.
#[derive(Clone, Debug)]
pub struct ChamberAction {
    verts: Vec<usize>,
    // coeff[s * n + t] = 2cos(pi / m_st), s != t
    coeff: Vec<QuadInt>,
}

impl ChamberAction {
    pub fn new(d: &CoxeterDiagram, mask: u64) -> Result<Self, OracleError> {
        let verts: Vec<usize> = bits(mask).collect();
        let n = verts.len();
        let mut coeff = vec![QuadInt::ZERO; n * n];
        let mut bad = Vec::new();
        for s in 0..n {
            for t in 0..n {
                if s == t {
                    continue;
                }
                let m = d.label(verts[s], verts[t]);
                match QuadInt::two_cos_pi_over(m) {
                    Some(c) => coeff[s * n + t] = c,
                    None => bad.push(m),
                }
            }
        }
        if !bad.is_empty() {
            bad.sort();
            bad.dedup();
            return Err(OracleError::UnsupportedLabels { rank: n, labels: bad });
        }
        Ok(ChamberAction { verts, coeff })
    }

    pub fn rank(&self) -> usize {
        self.verts.len()
    }

    /// Ambient generator index of local generator `s`.
    pub fn generator(&self, s: usize) -> usize {
        self.verts[s]
    }

    /// `s . f` where `(s.f)_s = -f_s` and `(s.f)_t = f_t + 2cos(pi/m_st) f_s`.
    pub fn reflect(&self, s: usize, f: &[QuadInt]) -> Result<Vec<QuadInt>, OracleError> {
        let n = self.rank();
        let fs = f[s];
        let mut out = f.to_vec();
        out[s] = -fs;
        for (t, x) in out.iter_mut().enumerate() {
            let c = self.coeff[s * n + t];
            if t != s && !c.is_zero() {
                let delta = c.checked_mul(fs).ok_or(OracleError::Overflow)?;
                *x = x.checked_add(delta).ok_or(OracleError::Overflow)?;
            }
        }
        Ok(out)
    }

    /// `w . f` for `w` given as a word (leftmost letter acts last).
    pub fn act_word(&self, word: &[usize], f: &[QuadInt]) -> Result<Vec<QuadInt>, OracleError> {
        word.iter()
            .rev()
            .try_fold(f.to_vec(), |acc, &s| self.reflect(s, &acc))
    }

    fn dominant(&self) -> Vec<QuadInt> {
        vec![QuadInt::ONE; self.rank()]
    }

    /// A chamber point with distinct coordinates, so that diagram symmetries move it.
    fn generic(&self) -> Vec<QuadInt> {
        (1..=self.rank() as i64).map(QuadInt::int).collect()
    }
}

/// Orbit point with its parent index and the generator that reached it.
type OrbitNode = (Vec<QuadInt>, usize, usize);

/// Breadth-first closure of the chamber orbit.
fn orbit(action: &ChamberAction, cap: u64) -> Result<Option<Vec<OrbitNode>>, OracleError> {
    let start = action.dominant();
    let mut index: FxHashMap<Vec<QuadInt>, usize> = FxHashMap::default();
    let mut nodes = vec![(start.clone(), usize::MAX, usize::MAX)];
    index.insert(start, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let back = nodes[i].2;
        for s in 0..action.rank() {
            if s == back {
                continue;
            }
            let next = action.reflect(s, &nodes[i].0)?;
            if index.contains_key(&next) {
                continue;
            }
            if nodes.len() as u64 >= cap {
                return Ok(None);
            }
            index.insert(next.clone(), nodes.len());
            queue.push_back(nodes.len());
            nodes.push((next, i, s));
        }
    }
    Ok(Some(nodes))
}

/// Order of the Coxeter group of `induced(d, mask)` by exact enumeration, or
/// `ExceededCap` once more than `cap` elements have been found.
///
/// Rank at most two is answered by `|W| = 2m`; from rank three on, labels must
/// lie in `{2, 3, 4, 6, inf}`.
pub fn coxeter_order_bfs_mask(d: &CoxeterDiagram, mask: u64, cap: u64) -> Result<OrderOutcome, OracleError> {
    if cap == 0 {
        return Err(OracleError::ZeroCap);
    }
    let verts: Vec<usize> = bits(mask).collect();
    let by_formula = match verts[..] {
        [] => Some(Some(1)),
        [_] => Some(Some(2)),
        [a, b] => Some(d.label(a, b).finite().map(|m| 2 * u64::from(m))),
        _ => None,
    };
    if let Some(order) = by_formula {
        return Ok(match order {
            Some(o) if o <= cap => OrderOutcome::Exact(o),
            _ => OrderOutcome::ExceededCap,
        });
    }
    let action = ChamberAction::new(d, mask)?;
    Ok(match orbit(&action, cap)? {
        Some(nodes) => OrderOutcome::Exact(nodes.len() as u64),
        None => OrderOutcome::ExceededCap,
    })
}

pub fn coxeter_order_bfs(d: &CoxeterDiagram, subset: &Subset, cap: u64) -> Result<OrderOutcome, OracleError> {
    coxeter_order_bfs_mask(d, d.mask_of(subset)?, cap)
}

/// Longest element found as the last point of the breadth-first orbit, as a
/// reduced word of ambient generator indices.
pub fn longest_word_bfs(d: &CoxeterDiagram, mask: u64, cap: u64) -> Result<Vec<usize>, OracleError> {
    let action = ChamberAction::new(d, mask)?;
    let nodes = orbit(&action, cap)?.ok_or(OracleError::Infinite)?;
    let mut word = Vec::new();
    let mut i = nodes.len() - 1;
    while i != 0 {
        let (_, parent, s) = nodes[i];
        word.push(action.generator(s));
        i = parent;
    }
    Ok(word)
}

/// Longest element by descending through the chamber orbit: while some
/// coordinate is positive, reflecting in it lengthens the element by one.
pub fn longest_word(d: &CoxeterDiagram, mask: u64) -> Result<Vec<usize>, OracleError> {
    let action = ChamberAction::new(d, mask)?;
    // Past the largest finite length at this rank the group cannot be finite.
    let limit = 64 * action.rank() * action.rank() + 64;
    let mut f = action.dominant();
    let mut applied = Vec::new();
    while let Some(s) = (0..action.rank()).find(|&s| f[s].signum() > 0) {
        if applied.len() > limit {
            return Err(OracleError::Infinite);
        }
        f = action.reflect(s, &f)?;
        applied.push(s);
    }
    Ok(applied.iter().rev().map(|&s| action.generator(s)).collect())
}

/// Whether the element spelled by `word` (ambient indices) is central in `W`,
/// tested by `w0 . f = -f` on a chamber point with distinct coordinates.
pub fn is_central_longest(d: &CoxeterDiagram, mask: u64, word: &[usize]) -> Result<bool, OracleError> {
    let action = ChamberAction::new(d, mask)?;
    let local: Vec<usize> = word
        .iter()
        .map(|&g| bits(mask).position(|v| v == g).expect("letter in subset"))
        .collect();
    let f = action.generic();
    let image = action.act_word(&local, &f)?;
    Ok(image.iter().zip(&f).all(|(x, y)| *x == -*y))
}

/// Floating-point positive-definiteness of the Gram matrix `-cos(pi/m_st)`,
/// used only as a cross-check for labels without an exact representation.
pub fn gram_positive_definite(d: &CoxeterDiagram, mask: u64) -> bool {
    let verts: Vec<usize> = bits(mask).collect();
    let n = verts.len();
    let mut g = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            g[i * n + j] = if i == j {
                1.0
            } else {
                match d.label(verts[i], verts[j]) {
                    Label::Finite(m) => -(std::f64::consts::PI / f64::from(m)).cos(),
                    Label::Infinity => -1.0,
                }
            };
        }
    }
    // Cholesky
    let mut l = vec![0.0f64; n * n];
    for j in 0..n {
        let mut diag = g[j * n + j];
        for k in 0..j {
            diag -= l[j * n + k] * l[j * n + k];
        }
        if diag <= 1e-9 {
            return false;
        }
        let root = diag.sqrt();
        l[j * n + j] = root;
        for i in j + 1..n {
            let mut v = g[i * n + j];
            for k in 0..j {
                v -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = v / root;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_diagram;

    fn order(text: &str, cap: u64) -> OrderOutcome {
        let d = parse_diagram(text).unwrap();
        coxeter_order_bfs_mask(&d, d.full_mask(), cap).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(
            order("generators: a b c\na b 3\nb c 3", 10_000),
            OrderOutcome::Exact(24)
        );
        assert_eq!(
            order("generators: a b c\na b 4\nb c 3", 10_000),
            OrderOutcome::Exact(48)
        );
        assert_eq!(order("generators: a b c\na b 6", 10_000), OrderOutcome::Exact(24));
        assert_eq!(order("generators: s", 2), OrderOutcome::Exact(2));
        assert_eq!(order("generators: s", 1), OrderOutcome::ExceededCap);
        assert_eq!(order("generators: a b\na b 7", 100), OrderOutcome::Exact(14));
        assert_eq!(order("generators: a b\na b inf", 100), OrderOutcome::ExceededCap);
    }

    #[test]
    fn affine_triangle_exceeds_cap() {
        assert_eq!(
            order("generators: a b c\na b 3\nb c 3\na c 3", 10_000),
            OrderOutcome::ExceededCap
        );
    }

    #[test]
    fn exact_cap_boundary() {
        let text = "generators: a b c\na b 3\nb c 3";
        assert_eq!(order(text, 24), OrderOutcome::Exact(24));
        assert_eq!(order(text, 23), OrderOutcome::ExceededCap);
    }

    #[test]
    fn unsupported_labels_at_rank_three() {
        let d = parse_diagram("generators: a b c\na b 5\nb c 3").unwrap();
        assert!(matches!(
            coxeter_order_bfs_mask(&d, d.full_mask(), 1000),
            Err(OracleError::UnsupportedLabels { rank: 3, .. })
        ));
        // H_3 is finite: the Gram cross-check agrees.
        assert!(gram_positive_definite(&d, d.full_mask()));
        let hyperbolic = parse_diagram("generators: a b c\na b 7\nb c 3").unwrap();
        assert!(!gram_positive_definite(&hyperbolic, hyperbolic.full_mask()));
    }

    #[test]
    fn longest_elements() {
        let a3 = parse_diagram("generators: a b c\na b 3\nb c 3").unwrap();
        let w = longest_word(&a3, a3.full_mask()).unwrap();
        assert_eq!(w.len(), 6);
        assert!(!is_central_longest(&a3, a3.full_mask(), &w).unwrap());
        let bfs = longest_word_bfs(&a3, a3.full_mask(), 100).unwrap();
        assert_eq!(bfs.len(), 6);

        let a1 = parse_diagram("generators: s").unwrap();
        let w = longest_word(&a1, 1).unwrap();
        assert_eq!(w, vec![0]);
        assert!(is_central_longest(&a1, 1, &w).unwrap());

        let d4 = parse_diagram("generators: c x y z\nc x 3\nc y 3\nc z 3").unwrap();
        let w = longest_word(&d4, d4.full_mask()).unwrap();
        assert_eq!(w.len(), 12);
        assert!(is_central_longest(&d4, d4.full_mask(), &w).unwrap());

        let b3 = parse_diagram("generators: a b c\na b 4\nb c 3").unwrap();
        let w = longest_word(&b3, b3.full_mask()).unwrap();
        assert_eq!(w.len(), 9);
        assert!(is_central_longest(&b3, b3.full_mask(), &w).unwrap());

        let affine = parse_diagram("generators: a b c\na b 3\nb c 3\na c 3").unwrap();
        assert_eq!(
            longest_word(&affine, affine.full_mask()),
            Err(OracleError::Infinite)
        );
    }

    #[test]
    fn both_longest_words_act_the_same() {
        let f4 = parse_diagram("generators: a b c d\na b 3\nb c 4\nc d 3").unwrap();
        let mask = f4.full_mask();
        let fast = longest_word(&f4, mask).unwrap();
        let bfs = longest_word_bfs(&f4, mask, 2000).unwrap();
        assert_eq!(fast.len(), 24);
        assert_eq!(bfs.len(), 24);
        let action = ChamberAction::new(&f4, mask).unwrap();
        let f = action.generic();
        assert_eq!(
            action.act_word(&fast, &f).unwrap(),
            action.act_word(&bfs, &f).unwrap()
        );
    }
}
