//! Exact sparing numbers.
//!
//! A weak IASI exists with a given set of non-mono-indexed vertices exactly
//! when that set is independent, so the sparing number is the least number
//! of edges left with both endpoints mono-indexed over all independent sets.

mod bitset;
mod search;

pub mod audit;
pub mod formula;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{is_bipartite, Graph, Vertex};
use bitset::VertexSet;
use search::{Search, Timeout, WeightedGraph};

pub use audit::{check_theorem, instance_graphs, AuditRanges, ReportRow, RowStatus, TheoremReport};
pub use formula::{formula_eval, formula_value, FormulaError, Params, TheoremId};

/// Default vertex cap for literal enumeration.
pub const DEFAULT_BRUTEFORCE_CAP: usize = 24;
/// Default per-instance time limit.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(30);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has {vertices} vertices, above the enumeration cap of {cap}")]
    CapExceeded { vertices: usize, cap: usize },
    #[error("solver timed out after {0:?}")]
    Timeout(Duration),
    #[error("vertex {vertex} is not in a graph with {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("pattern is not independent: edge ({0}, {1}) has two non-mono-indexed ends")]
    InvalidPattern(Vertex, Vertex),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest vertex count accepted by [`sparing_bruteforce`].
    pub cap: usize,
    /// `None` disables the limit.
    pub timeout: Option<Duration>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_BRUTEFORCE_CAP,
            timeout: Some(DEFAULT_TIMEOUT),
        }
    }
}

impl SolverConfig {
    fn deadline(&self, start: Instant) -> Option<Instant> {
        self.timeout.map(|t| start + t)
    }
}

/// Vertices designated to carry non-singleton labels; everything else is
/// mono-indexed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonoPattern {
    pub non_mono: BTreeSet<Vertex>,
}

impl MonoPattern {
    pub fn all_mono() -> Self {
        Self::default()
    }

    pub fn new<I: IntoIterator<Item = Vertex>>(non_mono: I) -> Self {
        Self {
            non_mono: non_mono.into_iter().collect(),
        }
    }

    pub fn is_mono(&self, v: Vertex) -> bool {
        !self.non_mono.contains(&v)
    }

    pub fn mono_vertex_count(&self, g: &Graph) -> usize {
        g.vertex_count() - self.non_mono.len()
    }

    fn check_range(&self, g: &Graph) -> Result<(), SolveError> {
        match self.non_mono.iter().next_back() {
            Some(&vertex) if vertex >= g.vertex_count() => Err(SolveError::OutOfRange {
                vertex,
                n: g.vertex_count(),
            }),
            _ => Ok(()),
        }
    }
}

/// True iff no edge has both ends outside the mono-indexed set.
pub fn pattern_is_valid(g: &Graph, p: &MonoPattern) -> Result<bool, SolveError> {
    p.check_range(g)?;
    Ok(first_conflict(g, p).is_none())
}

fn first_conflict(g: &Graph, p: &MonoPattern) -> Option<(Vertex, Vertex)> {
    g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| !p.is_mono(u) && !p.is_mono(v))
}

/// Number of edges whose ends are both mono-indexed under `p`.
pub fn pattern_mono_edges(g: &Graph, p: &MonoPattern) -> Result<usize, SolveError> {
    p.check_range(g)?;
    if let Some((u, v)) = first_conflict(g, p) {
        return Err(SolveError::InvalidPattern(u, v));
    }
    Ok(g.edges()
        .iter()
        .filter(|&&(u, v)| p.is_mono(u) && p.is_mono(v))
        .count())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Bruteforce,
    BranchAndBound,
    BipartiteShortcut,
    /// Unpruned include/exclude search with component splitting.
    ComponentEnumeration,
}

/// Optimal sparing value with a witness pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparingResult {
    pub value: usize,
    pub witness: MonoPattern,
    pub method: Method,
    /// Search nodes or enumerated patterns.
    pub explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SparingResult {
    /// JSON with the deterministic fields at the top level and the wall
    /// clock time segregated under `"timing"`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut value = serde_json::to_value(self).expect("serializable");
        value["timing"] = serde_json::json!({ "elapsed_secs": self.elapsed.as_secs_f64() });
        value
    }
}

/// Literal minimisation over every independent set, keeping the
/// lexicographically smallest optimal set.
pub fn sparing_bruteforce(g: &Graph, config: &SolverConfig) -> Result<SparingResult, SolveError> {
    let n = g.vertex_count();
    if n > config.cap {
        return Err(SolveError::CapExceeded {
            vertices: n,
            cap: config.cap,
        });
    }
    let start = Instant::now();
    let deadline = config.deadline(start);
    let mut state = Enumeration {
        g,
        deadline,
        timeout: config.timeout.unwrap_or_default(),
        chosen: vec![false; n],
        current: Vec::new(),
        best: None,
        explored: 0,
    };
    state.visit(0)?;
    let (value, witness) = state.best.expect("the empty set is always enumerated");
    Ok(SparingResult {
        value,
        witness: MonoPattern::new(witness),
        method: Method::Bruteforce,
        explored: state.explored,
        elapsed: start.elapsed(),
    })
}

struct Enumeration<'a> {
    g: &'a Graph,
    deadline: Option<Instant>,
    timeout: Duration,
    chosen: Vec<bool>,
    current: Vec<Vertex>,
    best: Option<(usize, Vec<Vertex>)>,
    explored: u64,
}

impl Enumeration<'_> {
    fn visit(&mut self, v: Vertex) -> Result<(), SolveError> {
        if v == self.g.vertex_count() {
            self.explored += 1;
            if self.explored.is_multiple_of(4096) {
                if let Some(deadline) = self.deadline {
                    if Instant::now() >= deadline {
                        return Err(SolveError::Timeout(self.timeout));
                    }
                }
            }
            let mono_edges = self
                .g
                .edges()
                .iter()
                .filter(|&&(a, b)| !self.chosen[a] && !self.chosen[b])
                .count();
            let better = match &self.best {
                None => true,
                Some((value, set)) => {
                    mono_edges < *value || (mono_edges == *value && self.current < *set)
                }
            };
            if better {
                self.best = Some((mono_edges, self.current.clone()));
            }
            return Ok(());
        }
        if self.g.neighbors(v).iter().all(|&u| !self.chosen[u]) {
            self.chosen[v] = true;
            self.current.push(v);
            self.visit(v + 1)?;
            self.current.pop();
            self.chosen[v] = false;
        }
        self.visit(v + 1)
    }
}

fn timeout_error(config: &SolverConfig) -> impl Fn(Timeout) -> SolveError + '_ {
    move |_| SolveError::Timeout(config.timeout.unwrap_or_default())
}

/// Branch and bound over independent sets weighted by degree, with the
/// same lexicographic witness as [`sparing_bruteforce`]. Bipartite graphs
/// skip the optimisation (their value is 0) and only reconstruct the
/// witness.
pub fn sparing_exact(g: &Graph, config: &SolverConfig) -> Result<SparingResult, SolveError> {
    let start = Instant::now();
    let wg = WeightedGraph::degree_weighted(g);
    let mut search = Search::new(&wg, config.deadline(start));
    let all = wg.all();
    let edges = g.edge_count() as i64;

    let (covered, method) = if is_bipartite(g).0 {
        (edges, Method::BipartiteShortcut)
    } else {
        (
            search.optimum(&all).map_err(timeout_error(config))?,
            Method::BranchAndBound,
        )
    };
    let witness = search
        .lex_smallest_optimum(&all, covered)
        .map_err(timeout_error(config))?;
    Ok(SparingResult {
        value: (edges - covered) as usize,
        witness: MonoPattern::new(witness),
        method,
        explored: search.nodes,
        elapsed: start.elapsed(),
    })
}

/// Exhaustive search without bounds, usable past the enumeration cap when
/// the graph splits into small pieces once a few vertices are fixed. The
/// witness is optimal but not necessarily lexicographically smallest.
pub fn sparing_by_components(
    g: &Graph,
    config: &SolverConfig,
) -> Result<SparingResult, SolveError> {
    let start = Instant::now();
    let wg = WeightedGraph::degree_weighted(g);
    let mut search = Search::new(&wg, config.deadline(start));
    let (covered, witness) = search.enumerate(&wg.all()).map_err(timeout_error(config))?;
    Ok(SparingResult {
        value: g.edge_count() - covered as usize,
        witness: MonoPattern::new(witness),
        method: Method::ComponentEnumeration,
        explored: search.nodes,
        elapsed: start.elapsed(),
    })
}

/// Independence number with the lexicographically smallest maximum
/// independent set.
pub fn max_independent_set(
    g: &Graph,
    config: &SolverConfig,
) -> Result<(usize, Vec<Vertex>), SolveError> {
    let start = Instant::now();
    let wg = WeightedGraph::unit_weighted(g);
    let mut search = Search::new(&wg, config.deadline(start));
    let all = wg.all();
    let alpha = search.optimum(&all).map_err(timeout_error(config))?;
    let witness = search
        .lex_smallest_optimum(&all, alpha)
        .map_err(timeout_error(config))?;
    Ok((alpha as usize, witness))
}

/// Fewest mono-indexed vertices any weak IASI of `g` can have: `n - α(g)`.
pub fn min_mono_vertices(g: &Graph, config: &SolverConfig) -> Result<usize, SolveError> {
    Ok(g.vertex_count() - max_independent_set(g, config)?.0)
}

/// Mono-edge counts of every valid pattern, by enumeration of all
/// independent sets.
pub fn all_pattern_mono_counts(g: &Graph, cap: usize) -> Result<BTreeSet<usize>, SolveError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(SolveError::CapExceeded { vertices: n, cap });
    }
    let mut counts = BTreeSet::new();
    let mut chosen = VertexSet::empty(n);
    collect_counts(g, 0, &mut chosen, &mut counts);
    Ok(counts)
}

fn collect_counts(g: &Graph, v: Vertex, chosen: &mut VertexSet, counts: &mut BTreeSet<usize>) {
    if v == g.vertex_count() {
        let mono = g
            .edges()
            .iter()
            .filter(|&&(a, b)| !chosen.contains(a) && !chosen.contains(b))
            .count();
        counts.insert(mono);
        return;
    }
    if g.neighbors(v).iter().all(|&u| !chosen.contains(u)) {
        chosen.insert(v);
        collect_counts(g, v + 1, chosen, counts);
        chosen.remove(v);
    }
    collect_counts(g, v + 1, chosen, counts);
}

/// Every valid pattern on `C_n` leaves a number of mono-indexed edges with
/// the same parity as `n`.
pub fn odd_cycle_parity_check(n: usize, cap: usize) -> Result<bool, SolveError> {
    let g = crate::graph::cycle(n).map_err(|e| SolveError::InvalidInput(e.to_string()))?;
    let counts = all_pattern_mono_counts(&g, cap)?;
    Ok(counts.iter().all(|c| c % 2 == n % 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, edge_corona, path};

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn pattern_validity() {
        let k2 = path(2).unwrap();
        assert!(pattern_is_valid(&k2, &MonoPattern::all_mono()).unwrap());
        assert!(!pattern_is_valid(&k2, &MonoPattern::new([0, 1])).unwrap());
        assert!(pattern_is_valid(&cycle(4).unwrap(), &MonoPattern::new([0, 2])).unwrap());
        assert_eq!(
            pattern_is_valid(&k2, &MonoPattern::new([5])),
            Err(SolveError::OutOfRange { vertex: 5, n: 2 })
        );
    }

    #[test]
    fn pattern_objective() {
        let c4 = cycle(4).unwrap();
        assert_eq!(
            pattern_mono_edges(&c4, &MonoPattern::all_mono()).unwrap(),
            4
        );
        assert_eq!(
            pattern_mono_edges(&c4, &MonoPattern::new([0, 2])).unwrap(),
            0
        );
        assert_eq!(
            pattern_mono_edges(&cycle(5).unwrap(), &MonoPattern::new([0, 2])).unwrap(),
            1
        );
        assert_eq!(
            pattern_mono_edges(&c4, &MonoPattern::new([0, 1])),
            Err(SolveError::InvalidPattern(0, 1))
        );
    }

    #[test]
    fn bruteforce_examples() {
        let k4 = sparing_bruteforce(&complete(4).unwrap(), &cfg()).unwrap();
        assert_eq!(k4.value, 3);
        assert_eq!(k4.witness, MonoPattern::new([0]));
        // K4 has 5 independent sets: {} and four singletons
        assert_eq!(k4.explored, 5);
        assert_eq!(
            sparing_bruteforce(&cycle(4).unwrap(), &cfg())
                .unwrap()
                .value,
            0
        );
        assert_eq!(
            sparing_bruteforce(&cycle(5).unwrap(), &cfg())
                .unwrap()
                .value,
            1
        );
    }

    #[test]
    fn bruteforce_cap() {
        let config = SolverConfig { cap: 4, ..cfg() };
        assert_eq!(
            sparing_bruteforce(&path(5).unwrap(), &config),
            Err(SolveError::CapExceeded {
                vertices: 5,
                cap: 4
            })
        );
    }

    #[test]
    fn exact_examples() {
        let r = sparing_exact(&path(10).unwrap(), &cfg()).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.method, Method::BipartiteShortcut);
        assert_eq!(r.witness, MonoPattern::new([0, 2, 4, 6, 8]));

        let (p2p2, _) = edge_corona(&path(2).unwrap(), &path(2).unwrap());
        assert_eq!(sparing_exact(&p2p2, &cfg()).unwrap().value, 3);

        let (p3p2, _) = edge_corona(&path(3).unwrap(), &path(2).unwrap());
        assert_eq!((p3p2.vertex_count(), p3p2.edge_count()), (7, 12));
        let exact = sparing_exact(&p3p2, &cfg()).unwrap();
        let brute = sparing_bruteforce(&p3p2, &cfg()).unwrap();
        assert_eq!(exact.value, 6);
        assert_eq!(exact.value, brute.value);
        assert_eq!(exact.witness, brute.witness);
    }

    #[test]
    fn exact_on_graph_without_edges() {
        let g = Graph::empty(3);
        let r = sparing_exact(&g, &cfg()).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.witness, sparing_bruteforce(&g, &cfg()).unwrap().witness);
        let r = sparing_exact(&Graph::empty(0), &cfg()).unwrap();
        assert_eq!(r.value, 0);
    }

    #[test]
    fn exact_timeout_is_distinct() {
        let (g, _) = edge_corona(&complete(5).unwrap(), &complete(5).unwrap());
        let config = SolverConfig {
            timeout: Some(Duration::ZERO),
            ..cfg()
        };
        assert!(matches!(
            sparing_exact(&g, &config),
            Err(SolveError::Timeout(_))
        ));
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(
            max_independent_set(&complete(6).unwrap(), &cfg()).unwrap(),
            (1, vec![0])
        );
        assert_eq!(
            max_independent_set(&cycle(6).unwrap(), &cfg()).unwrap(),
            (3, vec![0, 2, 4])
        );
        assert_eq!(
            max_independent_set(&path(5).unwrap(), &cfg()).unwrap(),
            (3, vec![0, 2, 4])
        );
        assert_eq!(min_mono_vertices(&complete(4).unwrap(), &cfg()).unwrap(), 3);
        assert_eq!(min_mono_vertices(&cycle(4).unwrap(), &cfg()).unwrap(), 2);
        assert_eq!(min_mono_vertices(&cycle(5).unwrap(), &cfg()).unwrap(), 3);
    }

    #[test]
    fn cycle_parity() {
        assert_eq!(
            all_pattern_mono_counts(&cycle(3).unwrap(), 24).unwrap(),
            BTreeSet::from([1, 3])
        );
        assert!(all_pattern_mono_counts(&cycle(4).unwrap(), 24)
            .unwrap()
            .iter()
            .all(|c| c % 2 == 0));
        for n in [3, 4, 7] {
            assert!(odd_cycle_parity_check(n, 24).unwrap());
        }
        assert!(odd_cycle_parity_check(2, 24).is_err());
        assert!(matches!(
            odd_cycle_parity_check(30, 24),
            Err(SolveError::CapExceeded { .. })
        ));
    }

    #[test]
    fn component_enumeration_agrees() {
        let (g, _) = edge_corona(&cycle(5).unwrap(), &complete(4).unwrap());
        let a = sparing_by_components(&g, &cfg()).unwrap();
        let b = sparing_exact(&g, &cfg()).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(pattern_mono_edges(&g, &a.witness).unwrap(), a.value);
    }

    #[test]
    fn result_json_segregates_timing() {
        let r = sparing_exact(&complete(4).unwrap(), &cfg()).unwrap();
        let json = r.to_json();
        assert_eq!(json["value"], 3);
        assert_eq!(json["witness"], serde_json::json!([0]));
        assert_eq!(json["method"], "branch_and_bound");
        assert!(json["timing"]["elapsed_secs"].is_number());
    }
}
