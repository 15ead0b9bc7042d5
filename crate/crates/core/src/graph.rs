//! Simple undirected graphs, standard families, the edge corona product and
//! the edge-list / DOT text formats.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::iasi::VertexLabeling;

/// Vertex index.
pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(Vertex, Vertex),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
}

/// Simple finite undirected graph on vertices `0..vertex_count`.
///
/// Edges are stored as ordered pairs `(u, v)` with `u < v`, sorted
/// lexicographically, so two graphs are equal iff they have the same vertex
/// count and edge set. Isolated vertices are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Graph without edges.
    pub fn empty(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// duplicates (in either orientation).
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u, v));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::OutOfRange {
                    u,
                    v,
                    n: vertex_count,
                });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        Ok(Self::from_canonical(
            vertex_count,
            seen.into_iter().collect(),
        ))
    }

    /// Like [`Graph::new`] but silently merges duplicate edges.
    pub fn from_edges_dedup<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let set: BTreeSet<_> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        Self::new(vertex_count, set)
    }

    fn from_canonical(vertex_count: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self {
            vertex_count,
            edges,
            adjacency,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic) order. The position of an edge in
    /// this slice is its index for the edge corona.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count
    }

    /// Sorted neighbour list.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices().filter(|&v| self.degree(v) == 0)
    }

    /// Copy of this graph placed in a larger id space, vertex `v` becoming
    /// `v + offset`.
    pub fn embed(&self, offset: usize, vertex_count: usize) -> Result<Self, GraphError> {
        Self::new(
            vertex_count,
            self.edges.iter().map(|&(u, v)| (u + offset, v + offset)),
        )
    }

    /// Subgraph induced by `keep`, with vertices renumbered in increasing
    /// order of their original ids.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Self {
        let mut index = vec![usize::MAX; self.vertex_count];
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (i, &v) in sorted.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect::<BTreeSet<_>>();
        Self::from_canonical(sorted.len(), edges.into_iter().collect())
    }
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// Standard graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

impl Family {
    /// Short name such as `P4`, `C5`, `K3` or `K2,3`.
    pub fn name(&self) -> String {
        match *self {
            Family::Path(n) => format!("P{n}"),
            Family::Cycle(n) => format!("C{n}"),
            Family::Complete(n) => format!("K{n}"),
            Family::CompleteBipartite(a, b) => format!("K{a},{b}"),
        }
    }
}

pub fn generate(family: Family) -> Result<Graph, GraphError> {
    match family {
        Family::Path(n) => path(n),
        Family::Cycle(n) => cycle(n),
        Family::Complete(n) => complete(n),
        Family::CompleteBipartite(a, b) => complete_bipartite(a, b),
    }
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameters(
            "path needs at least 1 vertex".into(),
        ));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameters(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameters(
            "complete graph needs at least 1 vertex".into(),
        ));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(GraphError::InvalidParameters(format!(
            "complete bipartite parts must be nonempty, got {a},{b}"
        )));
    }
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_canonical(n, edges)
}

// ---------------------------------------------------------------------------
// Edge corona
// ---------------------------------------------------------------------------

/// Where every vertex of an edge corona came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaProvenance {
    /// `base[v]` is the result id of vertex `v` of the first operand.
    pub base: Vec<Vertex>,
    /// `copies[j][u]` is the result id of vertex `u` in the copy of the
    /// second operand attached to edge `j` of the first operand.
    pub copies: Vec<Vec<Vertex>>,
}

/// Edge corona `g1 ⋄ g2`: one copy of `g2` per edge of `g1`, both endpoints
/// of the edge joined to every vertex of its copy.
///
/// Base vertices keep their ids; copy `j` (in canonical edge order of `g1`)
/// occupies ids `n1 + j*n2 .. n1 + (j+1)*n2` in `g2` vertex order.
pub fn edge_corona(g1: &Graph, g2: &Graph) -> (Graph, CoronaProvenance) {
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let m1 = g1.edge_count();
    let total = n1 + m1 * n2;

    let base: Vec<Vertex> = (0..n1).collect();
    let copies: Vec<Vec<Vertex>> = (0..m1)
        .map(|j| (0..n2).map(|u| n1 + j * n2 + u).collect())
        .collect();

    let mut edges = Vec::with_capacity(m1 + m1 * g2.edge_count() + 2 * m1 * n2);
    edges.extend_from_slice(g1.edges());
    for (j, &(r, s)) in g1.edges().iter().enumerate() {
        let copy = &copies[j];
        for &(a, b) in g2.edges() {
            edges.push((copy[a], copy[b]));
        }
        for &w in copy {
            edges.push((r, w));
            edges.push((s, w));
        }
    }
    edges.sort_unstable();
    debug_assert!(edges.windows(2).all(|w| w[0] != w[1]));

    (
        Graph::from_canonical(total, edges),
        CoronaProvenance { base, copies },
    )
}

// ---------------------------------------------------------------------------
// Union / intersection
// ---------------------------------------------------------------------------

/// Union over a shared id space: `vertex_count` is the larger of the two.
pub fn union(g1: &Graph, g2: &Graph) -> Graph {
    let n = g1.vertex_count().max(g2.vertex_count());
    let edges: BTreeSet<_> = g1.edges().iter().chain(g2.edges()).copied().collect();
    Graph::from_canonical(n, edges.into_iter().collect())
}

/// Intersection over a shared id space: vertices are the common prefix
/// `0..min(n1, n2)`, edges are those present in both.
pub fn intersection(g1: &Graph, g2: &Graph) -> Graph {
    let n = g1.vertex_count().min(g2.vertex_count());
    let edges = g1
        .edges()
        .iter()
        .filter(|&&(u, v)| g2.has_edge(u, v))
        .copied()
        .collect();
    Graph::from_canonical(n, edges)
}

// ---------------------------------------------------------------------------
// Structure queries
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BipartiteCertificate {
    /// `coloring[v]` is 0 or 1; every edge joins different colours.
    TwoColoring(Vec<u8>),
    /// Vertices of an odd cycle, in cycle order.
    OddCycle(Vec<Vertex>),
}

/// BFS 2-colouring; on failure returns an odd cycle built from the two BFS
/// tree paths meeting at the offending edge.
pub fn is_bipartite(g: &Graph) -> (bool, BipartiteCertificate) {
    let n = g.vertex_count();
    let mut color: Vec<Option<u8>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();

    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(0);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(1 - cu);
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => {
                        return (
                            false,
                            BipartiteCertificate::OddCycle(odd_cycle(u, w, &parent, &depth)),
                        );
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let coloring = color.into_iter().map(|c| c.unwrap_or(0)).collect();
    (true, BipartiteCertificate::TwoColoring(coloring))
}

fn odd_cycle(u: Vertex, w: Vertex, parent: &[usize], depth: &[usize]) -> Vec<Vertex> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    // both paths end at the common ancestor; keep it once
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Common degree if the graph is regular. The empty graph on zero vertices
/// has no degree.
pub fn regularity(g: &Graph) -> Option<usize> {
    let mut degrees = g.vertices().map(|v| g.degree(v));
    let first = degrees.next()?;
    degrees.all(|d| d == first).then_some(first)
}

/// Brute-force isomorphism test for small graphs, used to check corona
/// copies and small constructions.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<_> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<_> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let n = a.vertex_count();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_isomorphism(a, b, 0, &mut map, &mut used)
}

fn extend_isomorphism(
    a: &Graph,
    b: &Graph,
    v: Vertex,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == a.vertex_count() {
        return true;
    }
    for image in 0..b.vertex_count() {
        if used[image] || a.degree(v) != b.degree(image) {
            continue;
        }
        let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], image));
        if consistent {
            map[v] = image;
            used[image] = true;
            if extend_isomorphism(a, b, v + 1, map, used) {
                return true;
            }
            used[image] = false;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: vertex {vertex} out of range 0..{n}")]
    OutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v}) (first at line {first})")]
    DuplicateEdge {
        line: usize,
        u: usize,
        v: usize,
        first: usize,
    },
    #[error("line {line}: edge ({u}, {v}) must be written with u < v")]
    Reversed { line: usize, u: usize, v: usize },
    #[error("missing vertex count")]
    MissingHeader,
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match *self {
            ParseError::Malformed { line, .. }
            | ParseError::OutOfRange { line, .. }
            | ParseError::SelfLoop { line, .. }
            | ParseError::DuplicateEdge { line, .. }
            | ParseError::Reversed { line, .. } => Some(line),
            ParseError::MissingHeader => None,
        }
    }
}

/// Parses the edge-list format: the first non-comment line is the vertex
/// count, then one `u v` pair per line with `u < v`. Lines starting with
/// `#` and blank lines are skipped.
pub fn read_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut first_seen = std::collections::HashMap::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_ascii_whitespace().collect();
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|_| ParseError::Malformed {
                line,
                message: format!("expected a non-negative integer, got {tok:?}"),
            })
        };
        let Some(count) = n else {
            if tokens.len() != 1 {
                return Err(ParseError::Malformed {
                    line,
                    message: "expected the vertex count alone on the first line".into(),
                });
            }
            n = Some(parse(tokens[0])?);
            continue;
        };
        if tokens.len() != 2 {
            return Err(ParseError::Malformed {
                line,
                message: format!("expected \"u v\", got {trimmed:?}"),
            });
        }
        let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
        for vertex in [u, v] {
            if vertex >= count {
                return Err(ParseError::OutOfRange {
                    line,
                    vertex,
                    n: count,
                });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if let Some(&first) = first_seen.get(&key) {
            return Err(ParseError::DuplicateEdge { line, u, v, first });
        }
        if u > v {
            return Err(ParseError::Reversed { line, u, v });
        }
        first_seen.insert(key, line);
        edges.push(key);
    }

    let n = n.ok_or(ParseError::MissingHeader)?;
    edges.sort_unstable();
    Ok(Graph::from_canonical(n, edges))
}

/// Canonical edge-list text; `read_edge_list(&write_edge_list(g)) == g`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Graphviz DOT. With a labeling, vertices show their set-labels and
/// mono-indexed vertices are filled grey; mono-indexed edges are bold.
pub fn to_dot(g: &Graph, labeling: Option<&VertexLabeling>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match labeling.and_then(|f| f.get(v)) {
            Some(label) => {
                let mono = if label.is_mono() {
                    ", style=filled, fillcolor=lightgray, mono=true"
                } else {
                    ""
                };
                let _ = writeln!(out, "  {v} [label=\"{v}: {label}\"{mono}];");
            }
            None => {
                let _ = writeln!(out, "  {v} [label=\"{v}\"];");
            }
        }
    }
    for &(u, v) in g.edges() {
        let mono_edge = labeling
            .and_then(|f| Some(f.get(u)?.is_mono() && f.get(v)?.is_mono()))
            .unwrap_or(false);
        if mono_edge {
            let _ = writeln!(out, "  {u} -- {v} [style=bold];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let p = path(5).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (5, 4));
        let c = cycle(5).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (5, 5));
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert_eq!(complete_bipartite(2, 3).unwrap().edge_count(), 6);
        assert_eq!(path(1).unwrap().edge_count(), 0);
    }

    #[test]
    fn family_errors() {
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(complete(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn new_rejects_bad_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::SelfLoop(0, 0)));
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::OutOfRange { .. })
        ));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
    }

    #[test]
    fn corona_c5_c3() {
        let (g, prov) = edge_corona(&cycle(5).unwrap(), &cycle(3).unwrap());
        assert_eq!(g.vertex_count(), 20);
        assert_eq!(g.edge_count(), 50);
        assert_eq!(prov.base.len(), 5);
        assert_eq!(prov.copies.len(), 5);
    }

    #[test]
    fn corona_p2_p2_is_k4() {
        let (g, _) = edge_corona(&path(2).unwrap(), &path(2).unwrap());
        assert_eq!(g, complete(4).unwrap());
    }

    #[test]
    fn corona_with_edgeless_first_operand() {
        let g1 = Graph::empty(3);
        let (g, prov) = edge_corona(&g1, &cycle(4).unwrap());
        assert_eq!(g, g1);
        assert!(prov.copies.is_empty());
    }

    #[test]
    fn corona_with_empty_second_operand() {
        let g1 = cycle(4).unwrap();
        let (g, prov) = edge_corona(&g1, &Graph::empty(0));
        assert_eq!(g, g1);
        assert_eq!(prov.copies.len(), 4);
        assert!(prov.copies.iter().all(Vec::is_empty));
    }

    #[test]
    fn corona_is_deterministic() {
        let a = edge_corona(&cycle(4).unwrap(), &path(3).unwrap());
        let b = edge_corona(&cycle(4).unwrap(), &path(3).unwrap());
        assert_eq!(a, b);
        // copy of the first edge (0,1) starts right after the base
        assert_eq!(a.1.copies[0], vec![4, 5, 6]);
        assert!(a.0.has_edge(0, 4) && a.0.has_edge(1, 6));
    }

    #[test]
    fn union_and_intersection() {
        let k4 = complete(4).unwrap();
        assert_eq!(union(&k4, &k4), k4);

        let a = k4.embed(0, 7).unwrap();
        let b = k4.embed(3, 7).unwrap();
        let u = union(&a, &b);
        assert_eq!((u.vertex_count(), u.edge_count()), (7, 12));
        assert_eq!(intersection(&a, &b).edge_count(), 0);

        let p = path(4).unwrap();
        let q = Graph::new(4, [(0, 2), (1, 3)]).unwrap();
        assert_eq!(intersection(&p, &q).edge_count(), 0);
    }

    #[test]
    fn bipartite_certificates() {
        let (ok, cert) = is_bipartite(&cycle(4).unwrap());
        assert!(ok);
        let BipartiteCertificate::TwoColoring(col) = cert else {
            panic!()
        };
        for &(u, v) in cycle(4).unwrap().edges() {
            assert_ne!(col[u], col[v]);
        }

        let c5 = cycle(5).unwrap();
        let (ok, cert) = is_bipartite(&c5);
        assert!(!ok);
        let BipartiteCertificate::OddCycle(cyc) = cert else {
            panic!()
        };
        assert_eq!(cyc.len(), 5);
        for i in 0..cyc.len() {
            assert!(c5.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
        }

        assert!(!is_bipartite(&complete(4).unwrap()).0);
    }

    #[test]
    fn odd_cycle_certificate_is_a_cycle_in_larger_graph() {
        // triangle hanging off a path
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let (ok, BipartiteCertificate::OddCycle(cyc)) = is_bipartite(&g) else {
            panic!()
        };
        assert!(!ok);
        assert_eq!(cyc.len() % 2, 1);
        let distinct: BTreeSet<_> = cyc.iter().collect();
        assert_eq!(distinct.len(), cyc.len());
        for i in 0..cyc.len() {
            assert!(g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
        }
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(regularity(&cycle(6).unwrap()), Some(2));
        assert_eq!(regularity(&path(3).unwrap()), None);
        assert_eq!(regularity(&complete(5).unwrap()), Some(4));
    }

    #[test]
    fn edge_list_parse() {
        assert_eq!(read_edge_list("3\n0 1\n1 2").unwrap(), path(3).unwrap());
        assert_eq!(
            read_edge_list("2\n0 0"),
            Err(ParseError::SelfLoop { line: 2, vertex: 0 })
        );
        let with_comments = "# a path\n3\n# edges\n0 1\n\n1 2\n";
        assert_eq!(read_edge_list(with_comments).unwrap(), path(3).unwrap());
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(read_edge_list("3\n0 5").unwrap_err().line(), Some(2));
        assert!(matches!(
            read_edge_list("3\n0 1\n0 1"),
            Err(ParseError::DuplicateEdge {
                line: 3,
                first: 2,
                ..
            })
        ));
        assert!(matches!(
            read_edge_list("3\n0 1\n1 0"),
            Err(ParseError::DuplicateEdge { line: 3, .. })
        ));
        assert!(matches!(
            read_edge_list("3\n2 1"),
            Err(ParseError::Reversed { line: 2, .. })
        ));
        assert!(matches!(
            read_edge_list("3\n0 x"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            read_edge_list("3\n0 1 2"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert_eq!(
            read_edge_list("# nothing\n"),
            Err(ParseError::MissingHeader)
        );
    }

    #[test]
    fn edge_list_canonicalizes_order() {
        let g = read_edge_list("4\n2 3\n0 1\n1 2\n").unwrap();
        assert_eq!(write_edge_list(&g), "4\n0 1\n1 2\n2 3\n");
    }

    #[test]
    fn isomorphism_smoke() {
        assert!(is_isomorphic(
            &cycle(4).unwrap(),
            &complete_bipartite(2, 2).unwrap()
        ));
        assert!(!is_isomorphic(
            &path(4).unwrap(),
            &complete_bipartite(1, 3).unwrap()
        ));
    }

    #[test]
    fn dot_without_labels() {
        let dot = to_dot(&path(2).unwrap(), None);
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 -- 1;"));
    }
}
