//! Ribbon-graph primitives: darts, closed walks, face tracing and the
//! algebraic intersection number of closed walks.
//!
//! A dart is a half-edge: `2e` sits at the tail of edge `e` and traverses it
//! forwards, `2e + 1` sits at the head and traverses it backwards. A closed
//! walk is the cyclic sequence of darts it traverses.

use serde::{Deserialize, Serialize};

pub type Dart = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    /// Generator index of the curve this arc belongs to.
    pub curve: usize,
    pub tail: usize,
    pub head: usize,
}

/// The reverse dart of the same edge.
pub fn opposite(d: Dart) -> Dart {
    d ^ 1
}

pub fn edge_of(d: Dart) -> usize {
    d / 2
}

/// A closed walk, stored as the darts it leaves from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Walk(pub Vec<Dart>);

impl Walk {
    pub fn darts(&self) -> &[Dart] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Signed edge counts.
    pub fn edge_vector(&self, edge_count: usize) -> Vec<i64> {
        let mut v = vec![0; edge_count];
        for &d in &self.0 {
            v[edge_of(d)] += if d % 2 == 0 { 1 } else { -1 };
        }
        v
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&d| edge_of(d))
    }

    pub fn reversed(&self) -> Walk {
        Walk(self.0.iter().rev().map(|&d| opposite(d)).collect())
    }

    /// Equal as unoriented cyclic walks. For reduced closed walks in a graph
    /// this is equality of free homotopy classes of unoriented curves.
    pub fn same_cycle(&self, other: &Walk) -> bool {
        if self.len() != other.len() {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        let rotations_match =
            |w: &Walk| (0..w.len()).any(|k| (0..w.len()).all(|i| self.0[i] == w.0[(i + k) % w.len()]));
        rotations_match(other) || rotations_match(&other.reversed())
    }
}

/// A graph with a cyclic order of darts at every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ribbon {
    pub edges: Vec<Edge>,
    /// Counter-clockwise order of darts around each vertex.
    pub rotation: Vec<Vec<Dart>>,
}

impl Ribbon {
    pub fn vertex_of(&self, d: Dart) -> usize {
        let e = self.edges[edge_of(d)];
        if d.is_multiple_of(2) {
            e.tail
        } else {
            e.head
        }
    }

    /// Position of every dart in its vertex rotation.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; 2 * self.edges.len()];
        for rot in &self.rotation {
            for (i, &d) in rot.iter().enumerate() {
                pos[d] = i;
            }
        }
        pos
    }

    /// Restriction to the edges selected by `keep`, with the induced rotation.
    /// Vertex numbering is preserved; edges are renumbered but the returned
    /// map sends new edge ids to old ones.
    pub fn restrict(&self, keep: impl Fn(&Edge) -> bool) -> (Ribbon, Vec<usize>) {
        let old_ids: Vec<usize> = (0..self.edges.len()).filter(|&e| keep(&self.edges[e])).collect();
        let mut new_id = vec![usize::MAX; self.edges.len()];
        for (i, &e) in old_ids.iter().enumerate() {
            new_id[e] = i;
        }
        let edges = old_ids.iter().map(|&e| self.edges[e]).collect();
        let rotation = self
            .rotation
            .iter()
            .map(|rot| {
                rot.iter()
                    .filter(|&&d| new_id[edge_of(d)] != usize::MAX)
                    .map(|&d| 2 * new_id[edge_of(d)] + d % 2)
                    .collect()
            })
            .collect();
        (Ribbon { edges, rotation }, old_ids)
    }

    /// Boundary cycles of the thickened surface: orbits of
    /// `d -> next-in-rotation(opposite(d))`.
    pub fn faces(&self) -> Vec<Walk> {
        let pos = self.positions();
        let next = |d: Dart| {
            let h = opposite(d);
            let rot = &self.rotation[self.vertex_of(h)];
            rot[(pos[h] + 1) % rot.len()]
        };
        let mut seen = vec![false; 2 * self.edges.len()];
        let mut faces = Vec::new();
        for start in 0..seen.len() {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                walk.push(d);
                d = next(d);
            }
            faces.push(Walk(walk));
        }
        faces
    }

    pub fn used_vertices(&self) -> Vec<usize> {
        (0..self.rotation.len())
            .filter(|&v| !self.rotation[v].is_empty())
            .collect()
    }

    /// Connected components of the underlying graph (vertices with at least one dart).
    pub fn component_count(&self) -> usize {
        let n = self.rotation.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nxt = p[y];
                p[y] = r;
                y = nxt;
            }
            r
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.tail), find(&mut parent, e.head));
            parent[a] = b;
        }
        let used = self.used_vertices();
        let mut roots: Vec<usize> = used.iter().map(|&v| find(&mut parent, v)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.used_vertices().len() as i64 - self.edges.len() as i64
    }

    /// Algebraic intersection number of the left push-off of `first` with
    /// `second`.
    ///
    /// Around a vertex of degree `k`, dart positions are placed on a circle at
    /// `4 * pos`. A passage of `second` is the chord between its two darts; a
    /// passage of `first`, pushed to its left, runs from just clockwise of the
    /// arriving dart to just counter-clockwise of the leaving dart. Chords
    /// cross iff their endpoints interleave; the sign records the direction.
    pub fn intersection(&self, first: &Walk, second: &Walk) -> i64 {
        let pos = self.positions();
        let turns = |w: &Walk| -> Vec<(usize, Dart, Dart)> {
            let k = w.len();
            (0..k)
                .map(|i| {
                    let arrive = opposite(w.0[i]);
                    let leave = w.0[(i + 1) % k];
                    (self.vertex_of(leave), arrive, leave)
                })
                .collect()
        };
        let second_turns = turns(second);
        let mut total = 0;
        for (v, c, d) in turns(first) {
            let n = 4 * self.rotation[v].len() as i64;
            let x1 = (4 * pos[c] as i64 - 1).rem_euclid(n);
            let x2 = (4 * pos[d] as i64 + 1).rem_euclid(n);
            let span = (x2 - x1).rem_euclid(n);
            let inside = |y: i64| (y - x1).rem_euclid(n) < span;
            for &(w, a, b) in &second_turns {
                if w != v {
                    continue;
                }
                let (y1, y2) = (4 * pos[a] as i64, 4 * pos[b] as i64);
                match (inside(y1), inside(y2)) {
                    (true, false) => total += 1,
                    (false, true) => total -= 1,
                    _ => {}
                }
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One loop at one vertex: the annulus.
    fn annulus() -> Ribbon {
        Ribbon {
            edges: vec![Edge {
                curve: 0,
                tail: 0,
                head: 0,
            }],
            rotation: vec![vec![0, 1]],
        }
    }

    #[test]
    fn annulus_has_two_boundary_circles() {
        let r = annulus();
        let faces = r.faces();
        assert_eq!(faces, vec![Walk(vec![0]), Walk(vec![1])]);
        assert_eq!(r.euler_characteristic(), 0);
        assert_eq!(r.component_count(), 1);
    }

    #[test]
    fn self_intersection_vanishes() {
        let r = annulus();
        let core = Walk(vec![0]);
        assert_eq!(r.intersection(&core, &core), 0);
        assert_eq!(r.intersection(&core, &core.reversed()), 0);
    }

    #[test]
    fn same_cycle_up_to_rotation_and_reversal() {
        let w = Walk(vec![0, 2, 4]);
        assert!(w.same_cycle(&Walk(vec![2, 4, 0])));
        assert!(w.same_cycle(&Walk(vec![5, 3, 1])));
        assert!(!w.same_cycle(&Walk(vec![0, 4, 2])));
    }

    #[test]
    fn restriction_keeps_cyclic_order() {
        let r = Ribbon {
            edges: vec![
                Edge {
                    curve: 0,
                    tail: 0,
                    head: 0,
                },
                Edge {
                    curve: 1,
                    tail: 0,
                    head: 0,
                },
            ],
            rotation: vec![vec![0, 2, 1, 3]],
        };
        let (sub, ids) = r.restrict(|e| e.curve == 1);
        assert_eq!(ids, vec![1]);
        assert_eq!(sub.rotation, vec![vec![0, 1]]);
        // Two loops crossing at a single vertex: a once-punctured torus.
        assert_eq!(r.faces().len(), 1);
        let (a, b) = (Walk(vec![0]), Walk(vec![2]));
        assert_eq!(r.intersection(&a, &b).abs(), 1);
        assert_eq!(r.intersection(&a, &b), -r.intersection(&b, &a));
    }
}
