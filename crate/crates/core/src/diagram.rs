//! Coxeter diagrams: named generators with a symmetric label matrix.
//!
//! A diagram is the single source of truth for a Coxeter/Artin presentation.
//! Pairs that are not listed explicitly carry the label `2` (commuting
//! generators), unless the file opts into `default: inf`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Generator sets are indexed by `u64` bitmasks internally.
pub const MAX_GENERATORS: usize = 64;

/// A Coxeter label `m_st`, either a finite integer `>= 2` or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub const TWO: Label = Label::Finite(2);
    pub const THREE: Label = Label::Finite(3);

    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }

    /// Diagram edges are the pairs with `m > 2`.
    pub fn is_edge(self) -> bool {
        self != Label::TWO
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Label {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(Label::Infinity);
        }
        let m: u32 = s
            .parse()
            .map_err(|_| DiagramError::MalformedLabel(s.to_string()))?;
        if m < 2 {
            return Err(DiagramError::LabelBelowTwo(m));
        }
        Ok(Label::Finite(m))
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Label::Finite(m) => serializer.serialize_u32(*m),
            Label::Infinity => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        let label = match Raw::deserialize(deserializer)? {
            Raw::Num(m) => u32::try_from(m)
                .map_err(|_| DiagramError::MalformedLabel(m.to_string()))
                .and_then(|m| m.to_string().parse()),
            Raw::Text(s) => s.parse(),
        };
        label.map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<DiagramError>,
    },
    #[error("missing `generators:` line")]
    MissingGenerators,
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("too many generators ({0}, at most {MAX_GENERATORS} supported)")]
    TooManyGenerators(usize),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("label below 2: {0}")]
    LabelBelowTwo(u32),
    #[error("malformed label `{0}`")]
    MalformedLabel(String),
    #[error("a generator cannot be labelled against itself (`{0}`)")]
    SelfLabel(String),
    #[error("conflicting labels for {0} {1}: {2} and {3}")]
    ConflictingLabel(String, String, Label, Label),
    #[error("malformed line `{0}`")]
    MalformedLine(String),
    #[error("invalid default `{0}` (expected 2 or inf)")]
    InvalidDefault(String),
}

impl DiagramError {
    fn at(self, line: usize) -> Self {
        DiagramError::AtLine {
            line,
            source: Box::new(self),
        }
    }
}

/// A subset of generator names, always kept sorted and deduplicated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(Vec<String>);

impl Subset {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        names.sort();
        names.dedup();
        Subset(names)
    }

    pub fn empty() -> Self {
        Subset(Vec::new())
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.binary_search_by(|n| n.as_str().cmp(name)).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.0.iter().all(|n| other.contains(n))
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset::new(self.0.iter().chain(other.0.iter()).cloned())
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset::new(self.0.iter().filter(|n| other.contains(n)).cloned())
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        Subset::new(self.0.iter().filter(|n| !other.contains(n)).cloned())
    }

    pub fn with(&self, name: &str) -> Subset {
        Subset::new(self.0.iter().cloned().chain(std::iter::once(name.to_string())))
    }

    pub fn without(&self, name: &str) -> Subset {
        Subset::new(self.0.iter().filter(|n| *n != name).cloned())
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.0.iter().all(|n| !other.contains(n))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.join(","))
    }
}

impl<'a> FromIterator<&'a str> for Subset {
    fn from_iter<T: IntoIterator<Item = &'a str>>(iter: T) -> Self {
        Subset::new(iter)
    }
}

/// Generators (in file order) and the labels `m_st` on unordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterDiagram {
    generators: Vec<String>,
    index: HashMap<String, usize>,
    // Row-major `n x n`; the diagonal is never read.
    labels: Vec<Label>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.contains('#') && !name.chars().any(char::is_whitespace)
}

impl CoxeterDiagram {
    /// Empty diagram with no generators.
    pub fn empty() -> Self {
        CoxeterDiagram {
            generators: Vec::new(),
            index: HashMap::new(),
            labels: Vec::new(),
        }
    }

    /// Builds a diagram where every pair defaults to `default` and the listed
    /// pairs override it. Duplicate pairs must agree.
    pub fn with_default<S: AsRef<str>>(
        generators: &[S],
        default: Label,
        labels: &[(&str, &str, Label)],
    ) -> Result<Self, DiagramError> {
        let mut d = Self::unlabelled(generators.iter().map(|g| g.as_ref().to_string()), default)?;
        let mut seen = HashMap::new();
        for &(a, b, m) in labels {
            d.set_label_checked(a, b, m, &mut seen)?;
        }
        Ok(d)
    }

    /// Builds a diagram with unlisted pairs labelled 2.
    pub fn new<S: AsRef<str>>(
        generators: &[S],
        labels: &[(&str, &str, Label)],
    ) -> Result<Self, DiagramError> {
        Self::with_default(generators, Label::TWO, labels)
    }

    /// Builds a diagram from a label function on index pairs `i < j`.
    pub fn from_fn<S: AsRef<str>>(
        generators: &[S],
        mut label: impl FnMut(usize, usize) -> Label,
    ) -> Result<Self, DiagramError> {
        let mut d = Self::unlabelled(generators.iter().map(|g| g.as_ref().to_string()), Label::TWO)?;
        let n = d.rank();
        for i in 0..n {
            for j in i + 1..n {
                let m = label(i, j);
                if let Label::Finite(v) = m {
                    if v < 2 {
                        return Err(DiagramError::LabelBelowTwo(v));
                    }
                }
                d.labels[i * n + j] = m;
                d.labels[j * n + i] = m;
            }
        }
        Ok(d)
    }

    fn unlabelled(
        generators: impl IntoIterator<Item = String>,
        default: Label,
    ) -> Result<Self, DiagramError> {
        let generators: Vec<String> = generators.into_iter().collect();
        if generators.len() > MAX_GENERATORS {
            return Err(DiagramError::TooManyGenerators(generators.len()));
        }
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if !valid_name(g) {
                return Err(DiagramError::InvalidName(g.clone()));
            }
            if index.insert(g.clone(), i).is_some() {
                return Err(DiagramError::DuplicateGenerator(g.clone()));
            }
        }
        let n = generators.len();
        let mut labels = vec![default; n * n];
        for i in 0..n {
            labels[i * n + i] = Label::Finite(1);
        }
        Ok(CoxeterDiagram {
            generators,
            index,
            labels,
        })
    }

    fn set_label_checked(
        &mut self,
        a: &str,
        b: &str,
        m: Label,
        seen: &mut HashMap<(usize, usize), Label>,
    ) -> Result<(), DiagramError> {
        let i = self.require(a)?;
        let j = self.require(b)?;
        if i == j {
            return Err(DiagramError::SelfLabel(a.to_string()));
        }
        if let Label::Finite(v) = m {
            if v < 2 {
                return Err(DiagramError::LabelBelowTwo(v));
            }
        }
        let key = (i.min(j), i.max(j));
        if let Some(&prev) = seen.get(&key) {
            if prev != m {
                let (x, y) = (&self.generators[key.0], &self.generators[key.1]);
                return Err(DiagramError::ConflictingLabel(x.clone(), y.clone(), prev, m));
            }
        }
        seen.insert(key, m);
        let n = self.rank();
        self.labels[i * n + j] = m;
        self.labels[j * n + i] = m;
        Ok(())
    }

    fn require(&self, name: &str) -> Result<usize, DiagramError> {
        self.index_of(name)
            .ok_or_else(|| DiagramError::UnknownGenerator(name.to_string()))
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn name(&self, i: usize) -> &str {
        &self.generators[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Label between two generator indices. Undefined (returns 1) on the diagonal.
    pub fn label(&self, i: usize, j: usize) -> Label {
        self.labels[i * self.rank() + j]
    }

    pub fn label_between(&self, a: &str, b: &str) -> Result<Label, DiagramError> {
        let (i, j) = (self.require(a)?, self.require(b)?);
        if i == j {
            return Err(DiagramError::SelfLabel(a.to_string()));
        }
        Ok(self.label(i, j))
    }

    pub fn all_generators(&self) -> Subset {
        Subset::new(self.generators.iter().cloned())
    }

    /// Bitmask with one bit per generator.
    pub fn full_mask(&self) -> u64 {
        mask_below(self.rank())
    }

    pub fn mask_of(&self, subset: &Subset) -> Result<u64, DiagramError> {
        subset
            .names()
            .iter()
            .try_fold(0u64, |acc, n| Ok(acc | (1u64 << self.require(n)?)))
    }

    pub fn subset_of_mask(&self, mask: u64) -> Subset {
        Subset::new(bits(mask).map(|i| self.generators[i].clone()))
    }

    /// Induced subdiagram on `subset`, keeping the ambient generator order.
    pub fn induced(&self, subset: &Subset) -> Result<CoxeterDiagram, DiagramError> {
        Ok(self.induced_mask(self.mask_of(subset)?))
    }

    pub fn induced_mask(&self, mask: u64) -> CoxeterDiagram {
        let keep: Vec<usize> = bits(mask).filter(|&i| i < self.rank()).collect();
        let names: Vec<&str> = keep.iter().map(|&i| self.generators[i].as_str()).collect();
        CoxeterDiagram::from_fn(&names, |a, b| self.label(keep[a], keep[b]))
            .expect("restriction of a valid diagram is valid")
    }

    /// Bitmask of the diagram neighbours (`m > 2`) of generator `i`.
    pub fn neighbours(&self, i: usize) -> u64 {
        (0..self.rank())
            .filter(|&j| j != i && self.label(i, j).is_edge())
            .fold(0, |acc, j| acc | (1 << j))
    }

    /// Connected components of the induced diagram on `mask`, ordered by their
    /// least generator name.
    pub fn component_masks(&self, mask: u64) -> Vec<u64> {
        let mut remaining = mask;
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let i = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let next = self.neighbours(i) & mask & !comp;
                comp |= next;
                frontier |= next;
            }
            remaining &= !comp;
            out.push(comp);
        }
        out.sort_by(|&a, &b| self.min_name(a).cmp(self.min_name(b)));
        out
    }

    fn min_name(&self, mask: u64) -> &str {
        bits(mask)
            .map(|i| self.generators[i].as_str())
            .min()
            .unwrap_or("")
    }

    pub fn components(&self) -> Vec<Subset> {
        self.component_masks(self.full_mask())
            .into_iter()
            .map(|m| self.subset_of_mask(m))
            .collect()
    }

    pub fn is_connected_mask(&self, mask: u64) -> bool {
        mask != 0 && self.component_masks(mask).len() == 1
    }

    /// Irreducible means a connected diagram.
    pub fn is_irreducible(&self) -> bool {
        self.is_connected_mask(self.full_mask())
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.rank();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }

    /// Every label is 2 or 3.
    pub fn is_small_type(&self) -> bool {
        self.pairs()
            .all(|(i, j)| matches!(self.label(i, j), Label::Finite(2) | Label::Finite(3)))
    }

    /// No label is infinite.
    pub fn is_free_of_infinity(&self) -> bool {
        self.pairs().all(|(i, j)| self.label(i, j).is_finite())
    }

    pub fn is_free_of_infinity_mask(&self, mask: u64) -> bool {
        bits(mask).all(|i| bits(mask).all(|j| i == j || self.label(i, j).is_finite()))
    }

    /// Disjoint union; generator names must not clash.
    pub fn disjoint_union(&self, other: &CoxeterDiagram) -> Result<CoxeterDiagram, DiagramError> {
        let names: Vec<&str> = self
            .generators
            .iter()
            .chain(other.generators.iter())
            .map(String::as_str)
            .collect();
        let n = self.rank();
        CoxeterDiagram::from_fn(&names, |i, j| {
            if j < n {
                self.label(i, j)
            } else if i >= n {
                other.label(i - n, j - n)
            } else {
                Label::TWO
            }
        })
    }

    /// Same generators with some labels replaced.
    pub fn relabel(&self, mut f: impl FnMut(usize, usize, Label) -> Label) -> CoxeterDiagram {
        CoxeterDiagram::from_fn(&self.generators, |i, j| f(i, j, self.label(i, j)))
            .expect("relabelling keeps valid labels")
    }

    /// Canonical text form: `generators:` line plus every label other than 2.
    pub fn to_text(&self) -> String {
        let mut out = format!("generators: {}\n", self.generators.join(" "));
        for (i, j) in self.pairs() {
            let m = self.label(i, j);
            if m != Label::TWO {
                out.push_str(&format!("{} {} {}\n", self.generators[i], self.generators[j], m));
            }
        }
        out
    }

    /// Non-default labels as `(a, b, m)` triples in generator order.
    pub fn label_triples(&self) -> Vec<(String, String, Label)> {
        self.pairs()
            .filter(|&(i, j)| self.label(i, j) != Label::TWO)
            .map(|(i, j)| {
                (
                    self.generators[i].clone(),
                    self.generators[j].clone(),
                    self.label(i, j),
                )
            })
            .collect()
    }
}

impl fmt::Display for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses the diagram file format.
///
/// ```text
/// generators: a b c d
/// default: 2          # optional, `2` or `inf`
/// a b 3
/// b c inf
/// ```
pub fn parse_diagram(text: &str) -> Result<CoxeterDiagram, DiagramError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (gen_line, first) = lines.next().ok_or(DiagramError::MissingGenerators)?;
    let rest = first
        .strip_prefix("generators:")
        .ok_or(DiagramError::MissingGenerators)
        .map_err(|e| e.at(gen_line))?;
    let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
    if names.is_empty() {
        return Err(DiagramError::EmptyGenerators.at(gen_line));
    }

    let mut pending: Vec<(usize, &str)> = Vec::new();
    let mut default = Label::TWO;
    for (k, (line_no, line)) in lines.enumerate() {
        if let Some(value) = line.strip_prefix("default:") {
            if k != 0 {
                return Err(DiagramError::MalformedLine(line.to_string()).at(line_no));
            }
            default = match value.trim() {
                "2" => Label::TWO,
                "inf" => Label::Infinity,
                other => return Err(DiagramError::InvalidDefault(other.to_string()).at(line_no)),
            };
            continue;
        }
        pending.push((line_no, line));
    }

    let mut d = CoxeterDiagram::unlabelled(names, default).map_err(|e| e.at(gen_line))?;
    let mut seen = HashMap::new();
    for (line_no, line) in pending {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [a, b, m] = tokens[..] else {
            return Err(DiagramError::MalformedLine(line.to_string()).at(line_no));
        };
        let m: Label = m.parse().map_err(|e: DiagramError| e.at(line_no))?;
        d.set_label_checked(a, b, m, &mut seen)
            .map_err(|e| e.at(line_no))?;
    }
    Ok(d)
}

impl FromStr for CoxeterDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_diagram(s)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    generators: Vec<String>,
    labels: Vec<(String, String, Label)>,
}

impl Serialize for CoxeterDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        DiagramRepr {
            generators: self.generators.clone(),
            labels: self.label_triples(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CoxeterDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = DiagramRepr::deserialize(deserializer)?;
        let labels: Vec<(&str, &str, Label)> = repr
            .labels
            .iter()
            .map(|(a, b, m)| (a.as_str(), b.as_str(), *m))
            .collect();
        CoxeterDiagram::new(&repr.generators, &labels).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bit positions of a mask in increasing order.
pub fn bits(mask: u64) -> impl Iterator<Item = usize> + Clone {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const SQUARE_DIAGONAL: &str = "generators: a b c d\na b 3\nb c 3\nc d 3\nd a 3\nb d 3\n";

    #[test]
    fn parses_square_diagonal_with_default_two() {
        let d = parse_diagram(SQUARE_DIAGONAL).unwrap();
        assert_eq!(d.rank(), 4);
        assert_eq!(d.label_between("a", "c").unwrap(), Label::TWO);
        assert_eq!(d.label_between("d", "a").unwrap(), Label::THREE);
        assert_eq!(d.label_between("b", "d").unwrap(), Label::THREE);
    }

    #[test]
    fn rank_one_without_labels() {
        let d = parse_diagram("generators: s").unwrap();
        assert_eq!(d.rank(), 1);
        assert!(d.is_small_type() && d.is_free_of_infinity());
    }

    #[test]
    fn parse_errors() {
        let err = |t: &str| parse_diagram(t).unwrap_err();
        assert!(matches!(
            err("generators: a b\na b 1"),
            DiagramError::AtLine { line: 2, source } if *source == DiagramError::LabelBelowTwo(1)
        ));
        assert!(err("generators: a a").to_string().contains("duplicate"));
        assert!(err("generators: a b\na x 3")
            .to_string()
            .contains("unknown generator"));
        assert!(err("generators: a b\na b 3\nb a 4")
            .to_string()
            .contains("conflicting"));
        assert!(err("generators: a b\na b three")
            .to_string()
            .contains("malformed"));
        assert!(err("generators:\n").to_string().contains("empty"));
        assert!(err("# nothing\n").to_string().contains("missing"));
        assert!(err("generators: a b\na b 3\ndefault: inf")
            .to_string()
            .contains("malformed"));
        // Repeating an identical label line is fine.
        assert!(parse_diagram("generators: a b\na b 3\nb a 3").is_ok());
    }

    #[test]
    fn comments_blank_lines_and_default_inf() {
        let d = parse_diagram("# header\n\ngenerators: x y z  # three\ndefault: inf\nx y 2\n").unwrap();
        assert_eq!(d.label_between("x", "y").unwrap(), Label::TWO);
        assert_eq!(d.label_between("x", "z").unwrap(), Label::Infinity);
        assert!(!d.is_free_of_infinity());
    }

    #[test]
    fn induced_subdiagrams() {
        let d = parse_diagram(SQUARE_DIAGONAL).unwrap();
        let abc = d.induced(&Subset::new(["a", "b", "c"])).unwrap();
        assert_eq!(abc.generators(), &["a", "b", "c"]);
        assert_eq!(abc.label_between("a", "b").unwrap(), Label::THREE);
        assert_eq!(abc.label_between("b", "c").unwrap(), Label::THREE);
        assert_eq!(abc.label_between("a", "c").unwrap(), Label::TWO);
        assert_eq!(d.induced(&d.all_generators()).unwrap(), d);
        assert!(d.induced(&Subset::empty()).unwrap().is_empty());
        assert!(d.induced(&Subset::new(["q"])).is_err());
    }

    #[test]
    fn components_in_name_order() {
        let d = parse_diagram(SQUARE_DIAGONAL).unwrap();
        assert_eq!(d.components(), vec![Subset::new(["a", "b", "c", "d"])]);
        let d = parse_diagram("generators: a b c").unwrap();
        assert_eq!(d.components().len(), 3);
        let d = parse_diagram("generators: c b a\na b 3").unwrap();
        assert_eq!(d.components(), vec![Subset::new(["a", "b"]), Subset::new(["c"])]);
    }

    #[test]
    fn predicates() {
        let d = parse_diagram(SQUARE_DIAGONAL).unwrap();
        assert!(d.is_small_type());
        let free = parse_diagram("generators: a b\na b inf").unwrap();
        assert!(!free.is_free_of_infinity());
        assert!(!free.is_small_type());
    }

    #[test]
    fn canonical_text_round_trip() {
        let d = parse_diagram("generators: b a c\ndefault: inf\nb a 3\n").unwrap();
        let text = d.to_text();
        assert_eq!(text, "generators: b a c\nb a 3\nb c inf\na c inf\n");
        assert_eq!(parse_diagram(&text).unwrap(), d);
    }

    #[test]
    fn json_round_trip() {
        let d = parse_diagram("generators: a b c\na b inf\nb c 5").unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"generators":["a","b","c"],"labels":[["a","b","inf"],["b","c",5]]}"#
        );
        assert_eq!(serde_json::from_str::<CoxeterDiagram>(&json).unwrap(), d);
        assert!(
            serde_json::from_str::<CoxeterDiagram>(r#"{"generators":["a","b"],"labels":[["a","b",1]]}"#)
                .is_err()
        );
    }

    #[test]
    fn subset_order_is_lexicographic() {
        let x = Subset::new(["c", "a", "b"]);
        assert_eq!(x.to_string(), "{a,b,c}");
        assert!(Subset::new(["a", "b", "c"]) < Subset::new(["a", "c", "d"]));
    }
}
