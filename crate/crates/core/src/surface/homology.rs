//! First homology of a ribbon graph with its intersection pairing.
//!
//! The basis is the set of fundamental cycles of a breadth-first spanning
//! forest, one per non-tree edge. A cycle's coordinates are its entries on
//! the non-tree edges.

use serde::{Deserialize, Serialize};

use super::ribbon::{opposite, Ribbon, Walk};
use crate::linalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyModel {
    tree: Vec<bool>,
    basis_edges: Vec<usize>,
    basis: Vec<Walk>,
    pairing: IntMatrix,
}

impl HomologyModel {
    pub fn build(r: &Ribbon) -> Self {
        let vcount = r.rotation.len();
        let mut tree = vec![false; r.edges.len()];
        let mut seen = vec![false; vcount];
        let mut depth = vec![0usize; vcount];
        // Dart at a vertex pointing to its parent.
        let mut up = vec![usize::MAX; vcount];
        for root in 0..vcount {
            if seen[root] || r.rotation[root].is_empty() {
                continue;
            }
            seen[root] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &d in &r.rotation[v] {
                    let w = r.vertex_of(opposite(d));
                    if !seen[w] {
                        seen[w] = true;
                        tree[d / 2] = true;
                        up[w] = opposite(d);
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }

        let basis_edges: Vec<usize> = (0..r.edges.len()).filter(|&e| !tree[e]).collect();
        let basis: Vec<Walk> = basis_edges
            .iter()
            .map(|&e| {
                let (mut a, mut b) = (r.edges[e].head, r.edges[e].tail);
                let (mut from_a, mut from_b) = (Vec::new(), Vec::new());
                while a != b {
                    if depth[a] >= depth[b] {
                        from_a.push(up[a]);
                        a = r.vertex_of(opposite(up[a]));
                    } else {
                        from_b.push(up[b]);
                        b = r.vertex_of(opposite(up[b]));
                    }
                }
                let mut walk = vec![2 * e];
                walk.extend(from_a);
                walk.extend(from_b.into_iter().rev().map(opposite));
                Walk(walk)
            })
            .collect();

        let k = basis.len();
        let mut pairing = IntMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    pairing.set(i, j, r.intersection(&basis[i], &basis[j]));
                }
            }
        }
        HomologyModel {
            tree,
            basis_edges,
            basis,
            pairing,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Walk] {
        &self.basis
    }

    pub fn is_tree_edge(&self, e: usize) -> bool {
        self.tree[e]
    }

    pub fn pairing(&self) -> &IntMatrix {
        &self.pairing
    }

    /// Coordinates of a cycle given by its signed edge counts.
    pub fn coordinates(&self, edge_vector: &[i64]) -> Vec<i64> {
        self.basis_edges.iter().map(|&e| edge_vector[e]).collect()
    }

    /// Signed edge counts of the cycle with the given coordinates.
    pub fn edge_vector(&self, coords: &[i64], edge_count: usize) -> Vec<i64> {
        let mut v = vec![0; edge_count];
        for (c, w) in coords.iter().zip(&self.basis) {
            for (x, y) in v.iter_mut().zip(w.edge_vector(edge_count)) {
                *x += c * y;
            }
        }
        v
    }

    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        let py = self.pairing.apply(y);
        x.iter().zip(py).map(|(a, b)| a * b).sum()
    }
}

/// Whether signed edge counts form a cycle (zero boundary at every vertex).
pub fn is_cycle(r: &Ribbon, edge_vector: &[i64]) -> bool {
    let mut boundary = vec![0i64; r.rotation.len()];
    for (e, &c) in edge_vector.iter().enumerate() {
        boundary[r.edges[e].head] += c;
        boundary[r.edges[e].tail] -= c;
    }
    boundary.iter().all(|&b| b == 0)
}
