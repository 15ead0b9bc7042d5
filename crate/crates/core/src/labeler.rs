//! Explicit weak IASIs realising a mono pattern.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::iasi::{
    count_mono_elements, sumset, verify, Element, IasiVerdict, LabelError, SetLabel, VertexLabeling,
};
use crate::sparing::{
    pattern_mono_edges, sparing_exact, MonoPattern, SolveError, SolverConfig, SparingResult,
};

/// Candidate `(start, offset)` pairs tried per non-mono-indexed vertex
/// before giving up.
const MAX_ATTEMPTS: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LabelerError {
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error("no injective label found for vertex {0} within the retry budget")]
    RetryExhausted(Vertex),
    #[error("constructed labeling failed verification: {0:?}")]
    VerificationFailed(Box<IasiVerdict>),
    #[error("constructed labeling has {labeled} mono-indexed edges, pattern has {expected}")]
    CountMismatch { labeled: usize, expected: usize },
}

/// Strictly increasing positive integers whose pairwise sums of distinct
/// terms are all distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SidonSequence {
    terms: Vec<Element>,
}

impl SidonSequence {
    pub fn terms(&self) -> &[Element] {
        &self.terms
    }

    pub fn is_sidon(terms: &[Element]) -> bool {
        let mut sums = HashSet::new();
        for i in 0..terms.len() {
            for j in i + 1..terms.len() {
                if !sums.insert(terms[i] + terms[j]) {
                    return false;
                }
            }
        }
        terms.windows(2).all(|w| w[0] < w[1])
    }
}

/// First `k` terms of the greedy Sidon sequence starting at 1.
pub fn sidon(k: usize) -> SidonSequence {
    let mut terms: Vec<Element> = Vec::with_capacity(k);
    let mut sums: HashSet<Element> = HashSet::new();
    let mut candidate = 1;
    while terms.len() < k {
        if terms.iter().all(|&t| !sums.contains(&(t + candidate))) {
            sums.extend(terms.iter().map(|&t| t + candidate));
            terms.push(candidate);
        }
        candidate += 1;
    }
    SidonSequence { terms }
}

/// Labels `g` so that exactly the vertices outside `p.non_mono` are
/// mono-indexed: those get distinct Sidon singletons, the rest get
/// two-element sets `{x, x + d}` with a distinct offset `d` per vertex,
/// advanced greedily until every vertex and edge label is new. The result
/// is checked with [`verify`] before it is returned.
pub fn construct_weak_iasi(g: &Graph, p: &MonoPattern) -> Result<VertexLabeling, LabelerError> {
    if let Err(e) = pattern_mono_edges(g, p) {
        return Err(e.into());
    }

    let mono: Vec<Vertex> = g.vertices().filter(|&v| p.is_mono(v)).collect();
    let singletons = sidon(mono.len());
    let mut f = VertexLabeling::new();
    for (&v, &s) in mono.iter().zip(singletons.terms()) {
        f.insert(v, SetLabel::singleton(s));
    }

    let mut used_vertex: HashSet<SetLabel> =
        mono.iter().map(|&v| f.get(v).unwrap().clone()).collect();
    let mut used_edge: HashSet<SetLabel> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| p.is_mono(u) && p.is_mono(v))
        .map(|&(u, v)| sumset(f.get(u).unwrap(), f.get(v).unwrap()))
        .collect();

    let mut used_offsets: HashSet<Element> = HashSet::new();
    let mut next_offset: Element = 1;
    for &v in &p.non_mono {
        let neighbor_labels: Vec<SetLabel> = g
            .neighbors(v)
            .iter()
            .map(|&u| f.get(u).unwrap().clone())
            .collect();
        let mut offset = next_offset;
        let mut start: Element = 1;
        let mut found = None;
        for _ in 0..MAX_ATTEMPTS {
            if used_offsets.contains(&offset) {
                offset += 1;
                continue;
            }
            let label = SetLabel::new([start, start + offset]).expect("nonempty");
            if let Some(edges) = fresh_edge_labels(&label, &neighbor_labels, &used_edge) {
                if !used_vertex.contains(&label) {
                    found = Some((label, edges));
                    break;
                }
            }
            // widen the start first, then move to a new offset
            start += 1;
            if start > offset + 1 {
                start = 1;
                offset += 1;
            }
        }
        let (label, edges) = found.ok_or(LabelerError::RetryExhausted(v))?;
        used_offsets.insert(offset);
        next_offset = offset + 1;
        used_vertex.insert(label.clone());
        used_edge.extend(edges);
        f.insert(v, label);
    }

    let verdict = verify(g, &f)?;
    if !verdict.is_weak_iasi() {
        return Err(LabelerError::VerificationFailed(Box::new(verdict)));
    }
    Ok(f)
}

/// Edge labels `label + n` for each neighbour label, if they are pairwise
/// distinct and unused.
fn fresh_edge_labels(
    label: &SetLabel,
    neighbors: &[SetLabel],
    used: &HashSet<SetLabel>,
) -> Option<Vec<SetLabel>> {
    let mut local = HashSet::new();
    let mut out = Vec::with_capacity(neighbors.len());
    for n in neighbors {
        let e = sumset(label, n);
        if used.contains(&e) || !local.insert(e.clone()) {
            return None;
        }
        out.push(e);
    }
    Some(out)
}

/// Optimal pattern from [`sparing_exact`] together with a verified labeling
/// realising it.
pub fn construct_optimal(
    g: &Graph,
    config: &SolverConfig,
) -> Result<(SparingResult, VertexLabeling), LabelerError> {
    let result = sparing_exact(g, config)?;
    let f = construct_weak_iasi(g, &result.witness)?;
    let (_, labeled) = count_mono_elements(g, &f)?;
    if labeled != result.value {
        return Err(LabelerError::CountMismatch {
            labeled,
            expected: result.value,
        });
    }
    Ok((result, f))
}
