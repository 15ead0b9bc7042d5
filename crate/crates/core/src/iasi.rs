//! Integer sumsets and verification of (weak) integer additive set-indexers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Integer element of a set-label.
pub type Element = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelError {
    #[error("set-labels must be nonempty")]
    Empty,
    #[error("vertex {0} has no label")]
    MissingLabel(Vertex),
    #[error("label for vertex {vertex} is not sorted and duplicate-free: {elements:?}")]
    NotCanonical {
        vertex: Vertex,
        elements: Vec<Element>,
    },
    #[error("labeling key {0:?} is not a vertex id")]
    BadKey(String),
    #[error("invalid labeling JSON: {0}")]
    Json(String),
}

/// Nonempty finite set of non-negative integers, kept sorted and
/// duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Element>", into = "Vec<Element>")]
pub struct SetLabel(Vec<Element>);

impl SetLabel {
    pub fn new<I: IntoIterator<Item = Element>>(elements: I) -> Result<Self, LabelError> {
        let mut v: Vec<Element> = elements.into_iter().collect();
        if v.is_empty() {
            return Err(LabelError::Empty);
        }
        v.sort_unstable();
        v.dedup();
        Ok(Self(v))
    }

    pub fn singleton(x: Element) -> Self {
        Self(vec![x])
    }

    pub fn elements(&self) -> &[Element] {
        &self.0
    }

    /// Set-indexing number.
    pub fn cardinality(&self) -> usize {
        self.0.len()
    }

    pub fn is_mono(&self) -> bool {
        self.0.len() == 1
    }

    /// `{k·a : a ∈ A}`.
    pub fn integral_multiple(&self, k: Element) -> Self {
        let mut v: Vec<Element> = self.0.iter().map(|&a| a * k).collect();
        v.dedup();
        Self(v)
    }
}

impl TryFrom<Vec<Element>> for SetLabel {
    type Error = LabelError;

    fn try_from(v: Vec<Element>) -> Result<Self, Self::Error> {
        Self::new(v)
    }
}

impl From<SetLabel> for Vec<Element> {
    fn from(s: SetLabel) -> Self {
        s.0
    }
}

impl fmt::Display for SetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// `A + B = {a + b : a ∈ A, b ∈ B}`.
pub fn sumset(a: &SetLabel, b: &SetLabel) -> SetLabel {
    let mut sums = Vec::with_capacity(a.cardinality() * b.cardinality());
    for &x in a.elements() {
        for &y in b.elements() {
            sums.push(x + y);
        }
    }
    sums.sort_unstable();
    sums.dedup();
    SetLabel(sums)
}

/// Assignment of a set-label to each vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexLabeling {
    labels: BTreeMap<Vertex, SetLabel>,
}

impl VertexLabeling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_labels<I: IntoIterator<Item = SetLabel>>(labels: I) -> Self {
        Self {
            labels: labels.into_iter().enumerate().collect(),
        }
    }

    pub fn insert(&mut self, v: Vertex, label: SetLabel) -> Option<SetLabel> {
        self.labels.insert(v, label)
    }

    pub fn get(&self, v: Vertex) -> Option<&SetLabel> {
        self.labels.get(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &SetLabel)> {
        self.labels.iter().map(|(&v, l)| (v, l))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    fn require(&self, v: Vertex) -> Result<&SetLabel, LabelError> {
        self.get(v).ok_or(LabelError::MissingLabel(v))
    }

    /// Checks that every vertex of `g` is labeled.
    pub fn check_total(&self, g: &Graph) -> Result<(), LabelError> {
        g.vertices().try_for_each(|v| self.require(v).map(|_| ()))
    }

    /// Labeling JSON: `{"vertex_labels": {"0": [3], "1": [1, 4]}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .labels
            .iter()
            .map(|(v, l)| (v.to_string(), serde_json::json!(l.elements())))
            .collect();
        serde_json::json!({ "vertex_labels": map })
    }

    /// Parses the labeling JSON. Arrays must already be sorted and
    /// duplicate-free.
    pub fn from_json(text: &str) -> Result<Self, LabelError> {
        #[derive(Deserialize)]
        struct Raw {
            vertex_labels: BTreeMap<String, Vec<Element>>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| LabelError::Json(e.to_string()))?;
        let mut labels = BTreeMap::new();
        for (key, elements) in raw.vertex_labels {
            let vertex: Vertex = key.parse().map_err(|_| LabelError::BadKey(key.clone()))?;
            if elements.windows(2).any(|w| w[0] >= w[1]) {
                return Err(LabelError::NotCanonical { vertex, elements });
            }
            labels.insert(vertex, SetLabel::new(elements)?);
        }
        Ok(Self { labels })
    }
}

pub type EdgeLabel = ((Vertex, Vertex), SetLabel);

/// Induced edge labels `f⁺(uv) = f(u) + f(v)`, in canonical edge order.
pub fn induced_edge_labels(g: &Graph, f: &VertexLabeling) -> Result<Vec<EdgeLabel>, LabelError> {
    f.check_total(g)?;
    g.edges()
        .iter()
        .map(|&(u, v)| Ok(((u, v), sumset(f.require(u)?, f.require(v)?))))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Two vertices share a label.
    DuplicateVertexLabel { u: Vertex, v: Vertex },
    /// Two edges induce the same sumset.
    DuplicateEdgeLabel {
        e1: (Vertex, Vertex),
        e2: (Vertex, Vertex),
    },
    /// `|f⁺(uv)| ≠ max(|f(u)|, |f(v)|)`.
    WeakCondition {
        edge: (Vertex, Vertex),
        edge_cardinality: usize,
        max_endpoint: usize,
    },
}

/// Outcome of checking a labeling against the IASI / weak IASI conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IasiVerdict {
    pub vertex_injective: bool,
    pub edge_injective: bool,
    pub weak_condition: bool,
    pub mono_vertex_count: usize,
    pub mono_edge_count: usize,
    pub first_violation: Option<Violation>,
}

impl IasiVerdict {
    pub fn is_iasi(&self) -> bool {
        self.vertex_injective && self.edge_injective
    }

    pub fn is_weak_iasi(&self) -> bool {
        self.is_iasi() && self.weak_condition
    }
}

/// Verifies `f` on `g` using the actual sumsets of every edge.
pub fn verify(g: &Graph, f: &VertexLabeling) -> Result<IasiVerdict, LabelError> {
    let edge_labels = induced_edge_labels(g, f)?;
    let mut first_violation = None;

    let mut seen_vertex: HashMap<&SetLabel, Vertex> = HashMap::new();
    let mut vertex_injective = true;
    for v in g.vertices() {
        let label = f.require(v)?;
        if let Some(&u) = seen_vertex.get(label) {
            if vertex_injective {
                first_violation.get_or_insert(Violation::DuplicateVertexLabel { u, v });
            }
            vertex_injective = false;
        } else {
            seen_vertex.insert(label, v);
        }
    }

    let mut seen_edge: HashMap<&SetLabel, (Vertex, Vertex)> = HashMap::new();
    let mut edge_injective = true;
    let mut weak_condition = true;
    let mut mono_edge_count = 0;
    for (edge, label) in &edge_labels {
        if let Some(&e1) = seen_edge.get(label) {
            if edge_injective {
                first_violation.get_or_insert(Violation::DuplicateEdgeLabel { e1, e2: *edge });
            }
            edge_injective = false;
        } else {
            seen_edge.insert(label, *edge);
        }
        let max_endpoint = f
            .require(edge.0)?
            .cardinality()
            .max(f.require(edge.1)?.cardinality());
        if label.cardinality() != max_endpoint {
            if weak_condition {
                first_violation.get_or_insert(Violation::WeakCondition {
                    edge: *edge,
                    edge_cardinality: label.cardinality(),
                    max_endpoint,
                });
            }
            weak_condition = false;
        }
        if label.is_mono() {
            mono_edge_count += 1;
        }
    }

    let mono_vertex_count = g.vertices().filter(|&v| f.labels[&v].is_mono()).count();
    Ok(IasiVerdict {
        vertex_injective,
        edge_injective,
        weak_condition,
        mono_vertex_count,
        mono_edge_count,
        first_violation,
    })
}

/// `(mono vertices, mono edges)`. An edge is mono-indexed when its sumset
/// is a singleton, which happens exactly when both endpoints are.
pub fn count_mono_elements(g: &Graph, f: &VertexLabeling) -> Result<(usize, usize), LabelError> {
    f.check_total(g)?;
    let mono_vertices = g.vertices().filter(|&v| f.labels[&v].is_mono()).count();
    let mono_edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| f.labels[&u].is_mono() && f.labels[&v].is_mono())
        .count();
    Ok((mono_vertices, mono_edges))
}
