//! Maximum-weight independent set search over bitset graphs.
//!
//! The sparing number is `|E| - max_S w(S)` where `S` ranges over
//! independent sets and `w(v) = deg(v)`; the unweighted case gives the
//! independence number.

use std::time::Instant;

use super::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Timeout;

pub(crate) struct WeightedGraph {
    n: usize,
    adj: Vec<VertexSet>,
    weight: Vec<i64>,
    /// Vertices by descending weight, ties by id.
    by_weight: Vec<usize>,
}

impl WeightedGraph {
    pub fn new(g: &Graph, weight: Vec<i64>) -> Self {
        let n = g.vertex_count();
        let adj = g
            .vertices()
            .map(|v| {
                let mut s = VertexSet::empty(n);
                for &u in g.neighbors(v) {
                    s.insert(u);
                }
                s
            })
            .collect();
        let mut by_weight: Vec<usize> = (0..n).collect();
        by_weight.sort_by_key(|&v| (std::cmp::Reverse(weight[v]), v));
        Self {
            n,
            adj,
            weight,
            by_weight,
        }
    }

    pub fn degree_weighted(g: &Graph) -> Self {
        Self::new(g, g.vertices().map(|v| g.degree(v) as i64).collect())
    }

    pub fn unit_weighted(g: &Graph) -> Self {
        Self::new(g, vec![1; g.vertex_count()])
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn closed_neighborhood_removed(&self, cand: &VertexSet, v: usize) -> VertexSet {
        let mut rest = cand.clone();
        rest.difference_with(&self.adj[v]);
        rest.remove(v);
        rest
    }

    fn components(&self, cand: &VertexSet) -> Vec<VertexSet> {
        let mut left = cand.clone();
        let mut comps = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::empty(self.n);
            comp.insert(start);
            let mut frontier = comp.clone();
            loop {
                let mut next = VertexSet::empty(self.n);
                for u in frontier.iter() {
                    next.union_with(&self.adj[u]);
                }
                next.intersect_with(&left);
                next.difference_with(&comp);
                if next.is_empty() {
                    break;
                }
                comp.union_with(&next);
                frontier = next;
            }
            left.difference_with(&comp);
            comps.push(comp);
        }
        comps
    }
}

pub(crate) struct Search<'a> {
    graph: &'a WeightedGraph,
    deadline: Option<Instant>,
    pub nodes: u64,
}

impl<'a> Search<'a> {
    pub fn new(graph: &'a WeightedGraph, deadline: Option<Instant>) -> Self {
        Self {
            graph,
            deadline,
            nodes: 0,
        }
    }

    fn tick(&mut self) -> Result<(), Timeout> {
        self.nodes += 1;
        if self.nodes % 1024 == 1 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Timeout);
                }
            }
        }
        Ok(())
    }

    /// Greedy weighted clique cover: each clique contributes at most its
    /// heaviest member to an independent set.
    fn upper_bound(&self, cand: &VertexSet) -> i64 {
        let g = self.graph;
        let mut cliques: Vec<VertexSet> = Vec::new();
        let mut bound = 0;
        for &v in &g.by_weight {
            if !cand.contains(v) {
                continue;
            }
            match cliques.iter_mut().find(|common| common.contains(v)) {
                Some(common) => common.intersect_with(&g.adj[v]),
                None => {
                    bound += g.weight[v];
                    let mut common = g.adj[v].clone();
                    common.intersect_with(cand);
                    cliques.push(common);
                }
            }
        }
        bound
    }

    fn branching_vertex(&self, cand: &VertexSet) -> usize {
        let g = self.graph;
        cand.iter()
            .max_by_key(|&v| {
                let mut local = g.adj[v].clone();
                local.intersect_with(cand);
                (g.weight[v], local.len(), std::cmp::Reverse(v))
            })
            .expect("nonempty candidate set")
    }

    /// Fail-soft branch and bound: returns the optimum over `cand` when it
    /// exceeds `floor`, otherwise some value `<= floor`.
    pub fn best(&mut self, cand: &VertexSet, floor: i64) -> Result<i64, Timeout> {
        self.tick()?;
        if cand.is_empty() {
            return Ok(0);
        }
        let bound = self.upper_bound(cand);
        if bound <= floor {
            return Ok(bound);
        }

        let comps = self.graph.components(cand);
        if comps.len() > 1 {
            let bounds: Vec<i64> = comps.iter().map(|c| self.upper_bound(c)).collect();
            let mut remaining: i64 = bounds.iter().sum();
            let mut exact = 0;
            for (comp, b) in comps.iter().zip(&bounds) {
                remaining -= b;
                let local_floor = floor - exact - remaining;
                let r = self.best(comp, local_floor)?;
                if r <= local_floor {
                    return Ok(floor);
                }
                exact += r;
            }
            return Ok(exact);
        }

        let v = self.branching_vertex(cand);
        let w = self.graph.weight[v];
        let with_v = w + self.best(&self.graph.closed_neighborhood_removed(cand, v), floor - w)?;
        let floor = floor.max(with_v);
        let mut without = cand.clone();
        without.remove(v);
        let without_v = self.best(&without, floor)?;
        Ok(with_v.max(without_v))
    }

    pub fn optimum(&mut self, cand: &VertexSet) -> Result<i64, Timeout> {
        self.best(cand, -1)
    }

    /// Lexicographically smallest (as a sorted id sequence) independent set
    /// of weight `target`, which must be the optimum over `cand`.
    pub fn lex_smallest_optimum(
        &mut self,
        cand: &VertexSet,
        target: i64,
    ) -> Result<Vec<usize>, Timeout> {
        let mut chosen = Vec::new();
        let mut allowed = cand.clone();
        let mut weight = 0;
        while weight < target {
            let mut extended = false;
            let order: Vec<usize> = allowed.iter().collect();
            for x in order {
                let need = target - weight - self.graph.weight[x];
                if need < 0 {
                    continue;
                }
                let mut rest = self.graph.closed_neighborhood_removed(&allowed, x);
                rest.retain_above(x);
                if self.best(&rest, need - 1)? >= need {
                    chosen.push(x);
                    weight += self.graph.weight[x];
                    allowed = rest;
                    extended = true;
                    break;
                }
            }
            assert!(extended, "target weight {target} is not attainable");
        }
        Ok(chosen)
    }

    /// Exhaustive include/exclude search in vertex-id order, splitting into
    /// connected components but never pruning. Returns an optimum and one
    /// optimal set.
    pub fn enumerate(&mut self, cand: &VertexSet) -> Result<(i64, Vec<usize>), Timeout> {
        self.tick()?;
        let Some(v) = cand.first() else {
            return Ok((0, Vec::new()));
        };
        let comps = self.graph.components(cand);
        if comps.len() > 1 {
            let mut total = 0;
            let mut set = Vec::new();
            for comp in &comps {
                let (w, s) = self.enumerate(comp)?;
                total += w;
                set.extend(s);
            }
            set.sort_unstable();
            return Ok((total, set));
        }
        let (w_in, mut s_in) = self.enumerate(&self.graph.closed_neighborhood_removed(cand, v))?;
        let w_in = w_in + self.graph.weight[v];
        let mut without = cand.clone();
        without.remove(v);
        let (w_out, s_out) = self.enumerate(&without)?;
        if w_in >= w_out {
            s_in.push(v);
            s_in.sort_unstable();
            Ok((w_in, s_in))
        } else {
            Ok((w_out, s_out))
        }
    }
}
