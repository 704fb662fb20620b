//! Split-graph gadgets: set cover to rainbow 2-domination and hypergraph
//! 2-colourability to rainbow total double domination, with extraction of
//! solutions back to the source problem.

use serde::{Deserialize, Serialize};

use crate::error::{DomError, Result};
use crate::feasibility::{is_feasible, ParameterId, Witness, A, B, EMPTY};
use crate::graph::{Graph, SplitPartition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCoverInstance {
    pub ground: usize,
    pub sets: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn validate(&self) -> Result<()> {
        if self.sets.is_empty() {
            return Err(DomError::InvalidInstance("empty family".into()));
        }
        let mut covered = vec![false; self.ground];
        for s in &self.sets {
            for &x in s {
                if x >= self.ground {
                    return Err(DomError::InvalidInstance(format!("element {x} outside ground set")));
                }
                covered[x] = true;
            }
        }
        if let Some(x) = covered.iter().position(|&c| !c) {
            return Err(DomError::InvalidInstance(format!("element {x} is in no set")));
        }
        Ok(())
    }

    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut covered = vec![false; self.ground];
        for &i in chosen {
            for &x in &self.sets[i] {
                covered[x] = true;
            }
        }
        covered.iter().all(|&c| c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    #[serde(alias = "ground")]
    pub vertices: usize,
    #[serde(alias = "sets")]
    pub edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn validate(&self) -> Result<()> {
        for e in &self.edges {
            if e.is_empty() {
                return Err(DomError::InvalidInstance("empty hyperedge".into()));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= self.vertices) {
                return Err(DomError::InvalidInstance(format!("vertex {v} outside vertex set")));
            }
        }
        Ok(())
    }

    /// Whether `side` (true = first class) leaves no hyperedge monochromatic.
    pub fn is_proper_coloring(&self, side: &[bool]) -> bool {
        self.edges.iter().all(|e| e.iter().any(|&v| side[v]) && e.iter().any(|&v| !side[v]))
    }

    /// Whether some proper 2-colouring has a class with fewer than two
    /// vertices; such inputs fall outside the gadget's domain.
    pub fn is_degenerate(&self) -> bool {
        if self.edges.is_empty() {
            return true;
        }
        (0..self.vertices).any(|v| self.edges.iter().all(|e| e.contains(&v) && e.len() > 1))
    }
}

/// Split graph built from a set system, with the roles of its vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetCoverGadget {
    #[serde(skip)]
    pub graph: Graph,
    /// `a_F` per set
    pub a: Vec<usize>,
    /// `b_F` per set
    pub b: Vec<usize>,
    /// three copies of each element
    pub copies: [Vec<usize>; 3],
}

impl SetCoverGadget {
    pub fn partition(&self) -> SplitPartition {
        let mut clique: Vec<usize> = self.a.iter().chain(&self.b).copied().collect();
        clique.sort_unstable();
        let mut independent: Vec<usize> = self.copies.iter().flatten().copied().collect();
        independent.sort_unstable();
        SplitPartition { clique, independent }
    }
}

/// Clique on `a_F, b_F` (ids `0..m` and `m..2m`), independent set of three
/// element copies (ids `2m + j·|S| + s`), and `a_F, b_F ~ s_j` iff `s ∈ F`.
pub fn set_cover_to_split(j: &SetCoverInstance) -> Result<SetCoverGadget> {
    j.validate()?;
    let m = j.sets.len();
    let s = j.ground;
    let a: Vec<usize> = (0..m).collect();
    let b: Vec<usize> = (m..2 * m).collect();
    let copies = [0, 1, 2].map(|c| (0..s).map(|x| 2 * m + c * s + x).collect::<Vec<_>>());
    let mut edges = Vec::new();
    for u in 0..2 * m {
        for v in u + 1..2 * m {
            edges.push((u, v));
        }
    }
    for (f, set) in j.sets.iter().enumerate() {
        for &x in set {
            for c in &copies {
                edges.push((a[f], c[x]));
                edges.push((b[f], c[x]));
            }
        }
    }
    let graph = Graph::build(2 * m + 3 * s, &edges)?;
    Ok(SetCoverGadget { graph, a, b, copies })
}

fn checked(g: &Graph, f: &[u8]) -> Result<()> {
    if is_feasible(ParameterId::Rainbow2, g, &Witness::Rainbow(f.to_vec()))? {
        Ok(())
    } else {
        Err(DomError::InfeasibleWitness)
    }
}

/// Set cover of size at most half the weight of a rainbow 2-dominating
/// function of the gadget graph.
pub fn split_witness_to_cover(j: &SetCoverInstance, w: &Witness) -> Result<Vec<usize>> {
    let gadget = set_cover_to_split(j)?;
    let g = &gadget.graph;
    if w.len() != g.n() || !matches!(w, Witness::Rainbow(_)) {
        return Err(DomError::InfeasibleWitness);
    }
    let mut f = w.values().to_vec();
    checked(g, &f)?;
    // an element whose three copies are all labelled is handed to the
    // twins of its first set instead, lowering the weight
    for x in 0..j.ground {
        if gadget.copies.iter().all(|c| f[c[x]] != EMPTY) {
            for c in &gadget.copies {
                f[c[x]] = EMPTY;
            }
            let set = j.sets.iter().position(|s| s.contains(&x)).expect("valid instance");
            f[gadget.a[set]] = A;
            f[gadget.b[set]] = B;
            checked(g, &f)?;
        }
    }
    // a_F and b_F are closed twins: keep one `a` on a_F and one `b` on b_F
    for set in 0..j.sets.len() {
        let (u, v) = (gadget.a[set], gadget.b[set]);
        let seen = f[u] | f[v];
        f[u] = seen & A;
        f[v] = seen & B;
        checked(g, &f)?;
    }
    let with_a: Vec<usize> = (0..j.sets.len()).filter(|&i| f[gadget.a[i]] == A).collect();
    let with_b: Vec<usize> = (0..j.sets.len()).filter(|&i| f[gadget.b[i]] == B).collect();
    let cover = if with_a.len() <= with_b.len() { with_a } else { with_b };
    debug_assert!(j.is_cover(&cover));
    Ok(cover)
}

/// Canonical labelling for a cover: `{a}` on `a_F`, `{b}` on `b_F`.
pub fn cover_to_witness(j: &SetCoverInstance, cover: &[usize]) -> Result<Witness> {
    let gadget = set_cover_to_split(j)?;
    let mut f = vec![EMPTY; gadget.graph.n()];
    for &i in cover {
        f[gadget.a[i]] = A;
        f[gadget.b[i]] = B;
    }
    Ok(Witness::Rainbow(f))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypergraphGadget {
    #[serde(skip)]
    pub graph: Graph,
    pub clique: Vec<usize>,
    pub edge_vertices: Vec<usize>,
}

/// Clique on the hypergraph's vertices (same ids), one independent vertex per
/// hyperedge (ids after them), adjacent to the members of the hyperedge.
pub fn hypergraph_to_split(h: &Hypergraph) -> Result<HypergraphGadget> {
    h.validate()?;
    if h.is_degenerate() {
        return Err(DomError::DegenerateHypergraph);
    }
    let n = h.vertices;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    for (i, e) in h.edges.iter().enumerate() {
        for &v in e {
            edges.push((v, n + i));
        }
    }
    let graph = Graph::build(n + h.edges.len(), &edges)?;
    Ok(HypergraphGadget { graph, clique: (0..n).collect(), edge_vertices: (n..n + h.edges.len()).collect() })
}

/// Canonical labelling for a colouring: `{a}` on the first class, `{b}`
/// on the second, nothing on hyperedge vertices.
pub fn coloring_to_witness(h: &Hypergraph, side: &[bool]) -> Witness {
    let mut f: Vec<u8> = side.iter().map(|&s| if s { A } else { B }).collect();
    f.extend(std::iter::repeat(EMPTY).take(h.edges.len()));
    Witness::Rainbow(f)
}

/// Recovers a proper 2-colouring (true = first class) from a rainbow total
/// double dominating function of the gadget graph.
pub fn coloring_extraction(h: &Hypergraph, w: &Witness) -> Result<Vec<bool>> {
    let gadget = hypergraph_to_split(h)?;
    if w.len() != gadget.graph.n() || !is_feasible(ParameterId::RainbowTX2, &gadget.graph, w)? {
        return Err(DomError::InfeasibleWitness);
    }
    let mut f = w.values().to_vec();
    for &v in &gadget.clique {
        if f[v] == EMPTY {
            f[v] = A;
        }
    }
    if !is_feasible(ParameterId::RainbowTX2, &gadget.graph, &Witness::Rainbow(f.clone()))? {
        return Err(DomError::InfeasibleWitness);
    }
    let side: Vec<bool> = (0..h.vertices).map(|v| f[v] == A).collect();
    debug_assert!(h.is_proper_coloring(&side));
    Ok(side)
}
