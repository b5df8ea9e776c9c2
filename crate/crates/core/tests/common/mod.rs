//! Diagram enumeration and sampling shared by the integration tests.
#![allow(dead_code)]

use artin::diagram::{CoxeterDiagram, Label};
use rand::Rng;

pub const NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

pub const INF: Label = Label::Infinity;

pub fn lab(m: u32) -> Label {
    Label::Finite(m)
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn from_labels(n: usize, labels: &[Label]) -> CoxeterDiagram {
    let index: Vec<(usize, usize)> = pairs(n);
    CoxeterDiagram::from_fn(&NAMES[..n], |i, j| {
        labels[index.iter().position(|&p| p == (i, j)).expect("pair")]
    })
    .expect("valid diagram")
}

/// Every diagram on `n` generators with labels drawn from `alphabet`.
pub fn all_diagrams(n: usize, alphabet: &[Label]) -> Vec<CoxeterDiagram> {
    let k = pairs(n).len();
    let total = alphabet.len().pow(k as u32);
    (0..total)
        .map(|mut code| {
            let labels: Vec<Label> = (0..k)
                .map(|_| {
                    let l = alphabet[code % alphabet.len()];
                    code /= alphabet.len();
                    l
                })
                .collect();
            from_labels(n, &labels)
        })
        .collect()
}

pub fn random_diagram(rng: &mut impl Rng, n: usize, alphabet: &[Label]) -> CoxeterDiagram {
    let labels: Vec<Label> = pairs(n)
        .iter()
        .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
        .collect();
    from_labels(n, &labels)
}

/// Same diagram with generator names prefixed, for disjoint unions.
pub fn renamed(d: &CoxeterDiagram, prefix: &str) -> CoxeterDiagram {
    let names: Vec<String> = d.generators().iter().map(|g| format!("{prefix}{g}")).collect();
    CoxeterDiagram::from_fn(&names, |i, j| d.label(i, j)).expect("valid diagram")
}
