//! Simple undirected graphs, multigraphs and the text format used on disk.

use std::fmt::Write as _;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{DomError, Result};

/// Immutable simple graph on vertices `0..n` stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

/// Multigraph given as an edge list; parallel edges appear repeatedly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl Graph {
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(DomError::IndexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(DomError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let g = Graph { n, adj };
        debug_assert!(g.invariants_hold());
        Ok(g)
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check(v)?;
        Ok(self.adj[v].clone())
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check(v)?;
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        Ok(out)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(DomError::IndexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Minimum degree; 0 for the null graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn invariants_hold(&self) -> bool {
        self.adj.len() == self.n
            && (0..self.n).all(|v| {
                let list = &self.adj[v];
                list.windows(2).all(|w| w[0] < w[1])
                    && list.iter().all(|&u| u < self.n && u != v && self.adj[u].binary_search(&v).is_ok())
            })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices` (sorted, distinct); vertex `i` of the
    /// result corresponds to `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> =
                    self.adj[v].iter().filter(|&&u| index[u] != usize::MAX).map(|&u| index[u]).collect();
                l.sort_unstable();
                l
            })
            .collect();
        Graph { n: vertices.len(), adj }
    }

    /// `k` disjoint copies; copy `i` occupies ids `i*n .. (i+1)*n`.
    pub fn disjoint_union(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(DomError::InvalidInstance("k must be positive".into()));
        }
        let mut adj = Vec::with_capacity(self.n * k);
        for i in 0..k {
            let off = i * self.n;
            for list in &self.adj {
                adj.push(list.iter().map(|&u| u + off).collect());
            }
        }
        Ok(Graph { n: self.n * k, adj })
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Split partition from the degree sequence, verified directly.
    /// Clique vertices with no neighbour in the independent side are moved
    /// across, so the clique is as small as the characterization allows.
    pub fn is_split(&self) -> Option<SplitPartition> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| self.degree(b).cmp(&self.degree(a)).then(a.cmp(&b)));
        let deg: Vec<usize> = order.iter().map(|&v| self.degree(v)).collect();
        let mut m = 0;
        for (i, &d) in deg.iter().enumerate() {
            if d >= i {
                m = i + 1;
            }
        }
        let head: usize = deg[..m].iter().sum();
        let tail: usize = deg[m..].iter().sum();
        if head != m * m.saturating_sub(1) + tail {
            return None;
        }
        let mut in_clique = vec![false; self.n];
        for &v in &order[..m] {
            in_clique[v] = true;
        }
        let mut by_degree: Vec<usize> = order[..m].to_vec();
        by_degree.sort_by(|&a, &b| self.degree(a).cmp(&self.degree(b)).then(a.cmp(&b)));
        for v in by_degree {
            if self.adj[v].iter().all(|&u| in_clique[u]) {
                in_clique[v] = false;
            }
        }
        let part = SplitPartition {
            clique: (0..self.n).filter(|&v| in_clique[v]).collect(),
            independent: (0..self.n).filter(|&v| !in_clique[v]).collect(),
        };
        if self.is_split_partition(&part) {
            Some(part)
        } else {
            None
        }
    }

    pub fn is_split_partition(&self, p: &SplitPartition) -> bool {
        let covers = p.clique.len() + p.independent.len() == self.n;
        let clique = p.clique.iter().enumerate().all(|(i, &u)| p.clique[i + 1..].iter().all(|&v| self.has_edge(u, v)));
        let indep =
            p.independent.iter().enumerate().all(|(i, &u)| p.independent[i + 1..].iter().all(|&v| !self.has_edge(u, v)));
        covers && clique && indep
    }

    /// Erdős–Rényi graph drawn from a ChaCha8 stream seeded with `seed`.
    pub fn random(n: usize, p: f64, seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::build(n, &edges).expect("random edges are in range")
    }

    /// DIMACS-style text: `p edge n m` then `e u v`, 1-indexed, edges sorted.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "p edge {} {}", self.n, self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "e {} {}", u + 1, v + 1);
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Graph> {
        let mut n = None;
        let mut declared_m = 0;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let bad = || DomError::Parse(format!("line {}: {raw:?}", lineno + 1));
            match parts.as_slice() {
                ["p", "edge", nn, mm] => {
                    n = Some(nn.parse::<usize>().map_err(|_| bad())?);
                    declared_m = mm.parse::<usize>().map_err(|_| bad())?;
                }
                ["e", u, v] => {
                    let u: usize = u.parse().map_err(|_| bad())?;
                    let v: usize = v.parse().map_err(|_| bad())?;
                    if u == 0 || v == 0 {
                        return Err(bad());
                    }
                    edges.push((u - 1, v - 1));
                }
                _ => return Err(bad()),
            }
        }
        let n = n.ok_or_else(|| DomError::Parse("missing `p edge` header".into()))?;
        if edges.len() != declared_m {
            return Err(DomError::Parse(format!("header declares {declared_m} edges, found {}", edges.len())));
        }
        Graph::build(n, &edges)
    }
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<MultiGraph> {
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= n {
                    return Err(DomError::IndexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(DomError::SelfLoop(u));
            }
        }
        Ok(MultiGraph { n, edges })
    }

    /// Each edge of `g` repeated `k` times.
    pub fn from_graph(g: &Graph, k: usize) -> MultiGraph {
        let edges = g.edges().into_iter().flat_map(|e| std::iter::repeat(e).take(k)).collect();
        MultiGraph { n: g.n(), edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edge indices incident to each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(i);
            inc[v].push(i);
        }
        inc
    }

    /// Replaces every edge by a path of length two. Original vertices keep
    /// their ids; new vertices follow, sorted by (min end, max end, copy).
    pub fn subdivide(&self) -> Graph {
        let mut norm: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        norm.sort();
        let mut edges = Vec::with_capacity(2 * norm.len());
        for (i, &(u, v)) in norm.iter().enumerate() {
            let s = self.n + i;
            edges.push((u, s));
            edges.push((v, s));
        }
        Graph::build(self.n + norm.len(), &edges).expect("subdivision edges are valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighborhoods() {
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.closed_neighborhood(1).unwrap(), vec![0, 1, 2]);
        assert_eq!(c4.open_neighborhood(1).unwrap(), vec![0, 2]);
        assert!(c4.closed_neighborhood(4).is_err());
        assert_eq!((c4.min_degree(), c4.max_degree()), (2, 2));
    }

    #[test]
    fn build_errors() {
        assert_eq!(Graph::build(2, &[(0, 2)]), Err(DomError::IndexOutOfRange { vertex: 2, n: 2 }));
        assert_eq!(Graph::build(2, &[(1, 1)]), Err(DomError::SelfLoop(1)));
        let g = Graph::build(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn text_roundtrip() {
        let g = Graph::build(4, &[(2, 3), (0, 1), (1, 3)]).unwrap();
        let t = g.to_text();
        assert_eq!(t, "p edge 4 3\ne 1 2\ne 2 4\ne 3 4\n");
        assert_eq!(Graph::from_text(&format!("c hi\n\n{t}")).unwrap(), g);
        assert!(Graph::from_text("p edge 2 1\ne 0 1\n").is_err());
    }

    #[test]
    fn split_examples() {
        let star = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = star.is_split().unwrap();
        assert_eq!(p.clique, vec![0]);
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.is_split().is_none());
    }
}
