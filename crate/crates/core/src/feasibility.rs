//! Parameter identifiers, witness types and the per-parameter feasibility
//! conditions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{DomError, Result};
use crate::graph::{Graph, MultiGraph};

/// Rainbow labels are two-bit sets: bit 0 is `a`, bit 1 is `b`.
pub const EMPTY: u8 = 0;
pub const A: u8 = 1;
pub const B: u8 = 2;
pub const AB: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ParameterId {
    Gamma,
    GammaT,
    GammaW2,
    GammaSet2,
    GammaTSet2,
    Gamma2,
    GammaX2,
    GammaTX2,
    RainbowW2,
    Rainbow2,
    RainbowX2,
    RainbowTX2,
    Roman,
    RainbowSet2,
    RainbowTSet2,
    Rho,
    Rho2,
    Tau2,
    GammaGamma,
    GammaTGammaT,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Codomain {
    /// {0,1}
    Binary,
    /// {0,1,2}
    Ternary,
    /// all subsets of {a,b}
    RainbowFull,
    /// {∅,{a},{b}}
    RainbowRestricted,
    EdgeBinary,
    EdgeTernary,
    /// pair of disjoint vertex sets
    Pair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Neighborhood {
    /// condition only applies to vertices of value zero / empty label
    Outer,
    Closed,
    Open,
}

/// Per-vertex condition shared by the checkers and the exact solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Sum { closed: bool, demand: u8 },
    /// own value positive, or open sum at least 2
    OuterSum,
    Rainbow { closed: bool },
    /// own label nonempty, or open union is {a,b}
    OuterRainbow,
    Roman,
}

pub const MAIN: [ParameterId; 13] = [
    ParameterId::Gamma,
    ParameterId::GammaT,
    ParameterId::GammaW2,
    ParameterId::GammaSet2,
    ParameterId::GammaTSet2,
    ParameterId::Gamma2,
    ParameterId::GammaX2,
    ParameterId::GammaTX2,
    ParameterId::RainbowW2,
    ParameterId::Rainbow2,
    ParameterId::RainbowX2,
    ParameterId::RainbowTX2,
    ParameterId::Roman,
];

pub const ALL: [ParameterId; 20] = [
    ParameterId::Gamma,
    ParameterId::GammaT,
    ParameterId::GammaW2,
    ParameterId::GammaSet2,
    ParameterId::GammaTSet2,
    ParameterId::Gamma2,
    ParameterId::GammaX2,
    ParameterId::GammaTX2,
    ParameterId::RainbowW2,
    ParameterId::Rainbow2,
    ParameterId::RainbowX2,
    ParameterId::RainbowTX2,
    ParameterId::Roman,
    ParameterId::RainbowSet2,
    ParameterId::RainbowTSet2,
    ParameterId::Rho,
    ParameterId::Rho2,
    ParameterId::Tau2,
    ParameterId::GammaGamma,
    ParameterId::GammaTGammaT,
];

impl ParameterId {
    /// Row/column index 1..=13 in the bound matrix, 14 and 15 for the two
    /// rainbow {2} variants.
    pub fn index(self) -> Option<usize> {
        use ParameterId::*;
        Some(match self {
            Gamma => 1,
            GammaT => 2,
            GammaW2 => 3,
            GammaSet2 => 4,
            GammaTSet2 => 5,
            Gamma2 => 6,
            GammaX2 => 7,
            GammaTX2 => 8,
            RainbowW2 => 9,
            Rainbow2 => 10,
            RainbowX2 => 11,
            RainbowTX2 => 12,
            Roman => 13,
            RainbowSet2 => 14,
            RainbowTSet2 => 15,
            _ => return None,
        })
    }

    pub fn from_index(i: usize) -> Option<ParameterId> {
        (1..=15).contains(&i).then(|| ALL[i - 1])
    }

    pub fn name(self) -> &'static str {
        use ParameterId::*;
        match self {
            Gamma => "gamma",
            GammaT => "gamma_t",
            GammaW2 => "gamma_w2",
            GammaSet2 => "gamma_set2",
            GammaTSet2 => "gamma_tset2",
            Gamma2 => "gamma_2",
            GammaX2 => "gamma_x2",
            GammaTX2 => "gamma_tx2",
            RainbowW2 => "rgamma_w2",
            Rainbow2 => "rgamma_2",
            RainbowX2 => "rgamma_x2",
            RainbowTX2 => "rgamma_tx2",
            Roman => "gamma_r",
            RainbowSet2 => "rgamma_set2",
            RainbowTSet2 => "rgamma_tset2",
            Rho => "rho",
            Rho2 => "rho_2",
            Tau2 => "tau_2",
            GammaGamma => "gamma_gamma",
            GammaTGammaT => "gamma_t_gamma_t",
        }
    }

    pub fn symbol(self) -> &'static str {
        use ParameterId::*;
        match self {
            Gamma => "γ",
            GammaT => "γt",
            GammaW2 => "γw2",
            GammaSet2 => "γ{2}",
            GammaTSet2 => "γt{2}",
            Gamma2 => "γ2",
            GammaX2 => "γ×2",
            GammaTX2 => "γt×2",
            RainbowW2 => "γ̃w2",
            Rainbow2 => "γ̃2",
            RainbowX2 => "γ̃×2",
            RainbowTX2 => "γ̃t×2",
            Roman => "γR",
            RainbowSet2 => "γ̃{2}",
            RainbowTSet2 => "γ̃t{2}",
            Rho => "ρ",
            Rho2 => "ρ2",
            Tau2 => "τ2",
            GammaGamma => "γγ",
            GammaTGammaT => "γtγt",
        }
    }

    pub fn codomain(self) -> Codomain {
        use ParameterId::*;
        match self {
            Gamma | GammaT | Gamma2 | GammaX2 | GammaTX2 => Codomain::Binary,
            GammaW2 | GammaSet2 | GammaTSet2 | Roman | Tau2 => Codomain::Ternary,
            RainbowW2 | RainbowSet2 | RainbowTSet2 => Codomain::RainbowFull,
            Rainbow2 | RainbowX2 | RainbowTX2 => Codomain::RainbowRestricted,
            Rho => Codomain::EdgeBinary,
            Rho2 => Codomain::EdgeTernary,
            GammaGamma | GammaTGammaT => Codomain::Pair,
        }
    }

    pub fn neighborhood(self) -> Neighborhood {
        use ParameterId::*;
        match self {
            GammaW2 | Gamma2 | RainbowW2 | Rainbow2 | Roman => Neighborhood::Outer,
            Gamma | GammaSet2 | GammaX2 | RainbowX2 | RainbowSet2 | GammaGamma => Neighborhood::Closed,
            _ => Neighborhood::Open,
        }
    }

    pub fn is_rainbow(self) -> bool {
        matches!(self.codomain(), Codomain::RainbowFull | Codomain::RainbowRestricted)
    }

    /// The two rainbow {2} parameters are computed through 2γ and 2γt.
    pub fn identity_only(self) -> bool {
        matches!(self, ParameterId::RainbowSet2 | ParameterId::RainbowTSet2)
    }

    pub fn rule(self) -> Option<Rule> {
        use ParameterId::*;
        Some(match self {
            Gamma => Rule::Sum { closed: true, demand: 1 },
            GammaT => Rule::Sum { closed: false, demand: 1 },
            GammaSet2 | GammaX2 => Rule::Sum { closed: true, demand: 2 },
            GammaTSet2 | GammaTX2 => Rule::Sum { closed: false, demand: 2 },
            GammaW2 | Gamma2 => Rule::OuterSum,
            RainbowW2 | Rainbow2 => Rule::OuterRainbow,
            RainbowX2 | RainbowSet2 => Rule::Rainbow { closed: true },
            RainbowTX2 | RainbowTSet2 => Rule::Rainbow { closed: false },
            Roman => Rule::Roman,
            _ => return None,
        })
    }

    /// Largest value (or label bits) a single vertex may carry.
    pub fn max_value(self) -> u8 {
        match self.codomain() {
            Codomain::Binary | Codomain::EdgeBinary => 1,
            Codomain::Ternary | Codomain::EdgeTernary => 2,
            Codomain::RainbowFull => AB,
            Codomain::RainbowRestricted => B,
            Codomain::Pair => 2,
        }
    }
}

impl fmt::Display for ParameterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParameterId {
    type Err = DomError;
    fn from_str(s: &str) -> Result<ParameterId> {
        ALL.iter()
            .copied()
            .find(|p| p.name() == s || p.symbol() == s)
            .ok_or_else(|| DomError::Parse(format!("unknown parameter {s:?}")))
    }
}

/// Feasible-solution witness. Pair witnesses give each vertex 0 (unused),
/// 1 (first set) or 2 (second set).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Witness {
    Int(Vec<u8>),
    Rainbow(Vec<u8>),
    Edge(Vec<u8>),
    Pair(Vec<u8>),
}

impl Witness {
    pub fn values(&self) -> &[u8] {
        match self {
            Witness::Int(v) | Witness::Rainbow(v) | Witness::Edge(v) | Witness::Pair(v) => v,
        }
    }

    pub fn len(&self) -> usize {
        self.values().len()
    }

    pub fn is_empty(&self) -> bool {
        self.values().is_empty()
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Int(_) => "int",
            Witness::Rainbow(_) => "rainbow",
            Witness::Edge(_) => "edge",
            Witness::Pair(_) => "pair",
        }
    }

    /// Vertices (or edges) with a nonzero value.
    pub fn support(&self) -> Vec<usize> {
        self.values().iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect()
    }
}

/// Total weight: sum of values, label sizes for rainbow labelings, and the
/// number of used vertices for pairs.
pub fn witness_weight(w: &Witness) -> u64 {
    match w {
        Witness::Rainbow(v) => v.iter().map(|&x| x.count_ones() as u64).sum(),
        Witness::Pair(v) => v.iter().filter(|&&x| x != 0).count() as u64,
        Witness::Int(v) | Witness::Edge(v) => v.iter().map(|&x| x as u64).sum(),
    }
}

pub fn label_str(x: u8) -> &'static str {
    match x {
        EMPTY => "",
        A => "a",
        B => "b",
        _ => "ab",
    }
}

pub fn parse_label(s: &str) -> Result<u8> {
    match s {
        "" => Ok(EMPTY),
        "a" => Ok(A),
        "b" => Ok(B),
        "ab" | "ba" => Ok(AB),
        _ => Err(DomError::Parse(format!("bad rainbow label {s:?}"))),
    }
}

fn check_shape(p: ParameterId, g_n: usize, w: &Witness) -> Result<()> {
    let kind_ok = match p.codomain() {
        Codomain::Binary | Codomain::Ternary => matches!(w, Witness::Int(_)),
        Codomain::RainbowFull | Codomain::RainbowRestricted => matches!(w, Witness::Rainbow(_)),
        Codomain::EdgeBinary | Codomain::EdgeTernary => matches!(w, Witness::Edge(_)),
        Codomain::Pair => matches!(w, Witness::Pair(_)),
    };
    if !kind_ok {
        return Err(DomError::WitnessShapeMismatch(format!("{} witness for {}", w.kind(), p.name())));
    }
    if w.len() != g_n {
        return Err(DomError::WitnessShapeMismatch(format!("length {} but expected {g_n}", w.len())));
    }
    if w.values().iter().any(|&x| x > p.max_value()) {
        return Err(DomError::CodomainViolation(p.name().into()));
    }
    Ok(())
}

/// Whether vertex `v` satisfies `rule` under the complete assignment `f`.
pub fn vertex_ok(rule: Rule, g: &Graph, f: &[u8], v: usize) -> bool {
    let nb = g.neighbors(v);
    match rule {
        Rule::Sum { closed, demand } => {
            let s: u32 = nb.iter().map(|&u| f[u] as u32).sum::<u32>() + if closed { f[v] as u32 } else { 0 };
            s >= demand as u32
        }
        Rule::OuterSum => f[v] > 0 || nb.iter().map(|&u| f[u] as u32).sum::<u32>() >= 2,
        Rule::Rainbow { closed } => {
            let u = nb.iter().fold(if closed { f[v] } else { 0 }, |acc, &u| acc | f[u]);
            u == AB
        }
        Rule::OuterRainbow => f[v] != EMPTY || nb.iter().fold(0, |acc, &u| acc | f[u]) == AB,
        Rule::Roman => f[v] > 0 || nb.iter().any(|&u| f[u] == 2),
    }
}

pub fn is_feasible(p: ParameterId, g: &Graph, w: &Witness) -> Result<bool> {
    check_shape(p, g.n(), w)?;
    let f = w.values();
    match p {
        ParameterId::GammaGamma | ParameterId::GammaTGammaT => {
            let closed = p == ParameterId::GammaGamma;
            Ok((0..g.n()).all(|v| {
                let mut seen = if closed { 1u8 << f[v] } else { 0 };
                for &u in g.neighbors(v) {
                    seen |= 1 << f[u];
                }
                seen & 0b110 == 0b110
            }))
        }
        ParameterId::Rho | ParameterId::Rho2 | ParameterId::Tau2 => Err(DomError::WitnessShapeMismatch(
            "cover parameters are checked with is_cover_feasible".into(),
        )),
        _ => {
            let rule = p.rule().expect("vertex parameter");
            Ok((0..g.n()).all(|v| vertex_ok(rule, g, f, v)))
        }
    }
}

/// Host for the cover parameters: edge weights are indexed by the
/// multigraph's edge list (for a simple graph, `Graph::edges()` order).
pub fn is_cover_feasible(p: ParameterId, g: &MultiGraph, w: &Witness) -> Result<bool> {
    match p {
        ParameterId::Rho | ParameterId::Rho2 => {
            let inc = g.incidence();
            if let Some(v) = (0..g.n()).find(|&v| inc[v].is_empty()) {
                return Err(DomError::IsolatedVertex(v));
            }
            check_shape(p, g.edges().len(), w)?;
            let demand = if p == ParameterId::Rho { 1 } else { 2 };
            let f = w.values();
            Ok(inc.iter().all(|es| es.iter().map(|&e| f[e] as u32).sum::<u32>() >= demand))
        }
        ParameterId::Tau2 => {
            check_shape(p, g.n(), w)?;
            let f = w.values();
            Ok(g.edges().iter().all(|&(u, v)| f[u] + f[v] >= 2))
        }
        _ => Err(DomError::WitnessShapeMismatch(format!("{} is not a cover parameter", p.name()))),
    }
}

/// Whether `p` has a finite value on `g`.
pub fn defined_on(p: ParameterId, g: &Graph) -> bool {
    use ParameterId::*;
    let delta = if g.n() == 0 { usize::MAX } else { g.min_degree() };
    match p {
        Gamma | GammaW2 | GammaSet2 | Gamma2 | RainbowW2 | Rainbow2 | Roman | RainbowSet2 | Tau2 | GammaGamma => true,
        GammaT | GammaTSet2 | GammaX2 | RainbowX2 | RainbowTSet2 | Rho | Rho2 => delta >= 1,
        GammaTX2 => delta >= 2,
        RainbowTX2 | GammaTGammaT => delta >= 2 && two_total_partition(g).is_some(),
    }
}

/// Splits `V` into two total dominating sets if possible. Returns side
/// labels (`A` or `B`) per vertex, found by backtracking in id order with a
/// check on every vertex whose neighbourhood is complete.
pub fn two_total_partition(g: &Graph) -> Option<Vec<u8>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if g.min_degree() < 2 {
        return None;
    }
    // last[v]: largest id in N(v); once it is assigned, v can be checked
    let last: Vec<usize> = (0..n).map(|v| *g.neighbors(v).last().unwrap()).collect();
    let mut closes: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        closes[last[v]].push(v);
    }
    let mut f = vec![EMPTY; n];
    fn rec(g: &Graph, closes: &[Vec<usize>], f: &mut [u8], i: usize) -> bool {
        if i == f.len() {
            return true;
        }
        let choices: &[u8] = if i == 0 { &[A] } else { &[A, B] };
        for &c in choices {
            f[i] = c;
            let ok = closes[i].iter().all(|&v| g.neighbors(v).iter().fold(0, |acc, &u| acc | f[u]) == AB);
            if ok && rec(g, closes, f, i + 1) {
                return true;
            }
        }
        f[i] = EMPTY;
        false
    }
    rec(g, &closes, &mut f, 0).then_some(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Graph {
        Graph::build(2, &[(0, 1)]).unwrap()
    }
    fn c4() -> Graph {
        Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn examples() {
        use ParameterId::*;
        assert!(is_feasible(Gamma, &k2(), &Witness::Int(vec![1, 0])).unwrap());
        assert!(!is_feasible(GammaT, &k2(), &Witness::Int(vec![1, 0])).unwrap());
        assert!(is_feasible(GammaT, &k2(), &Witness::Int(vec![1, 1])).unwrap());
        assert!(is_feasible(RainbowX2, &c4(), &Witness::Rainbow(vec![A, B, A, B])).unwrap());
        let star = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let w = Witness::Int(vec![2, 0, 0, 0]);
        assert!(is_feasible(Roman, &star, &w).unwrap());
        assert_eq!(witness_weight(&w), 2);
    }

    #[test]
    fn shape_errors() {
        use ParameterId::*;
        assert!(matches!(
            is_feasible(Gamma, &k2(), &Witness::Int(vec![2, 0])),
            Err(DomError::CodomainViolation(_))
        ));
        assert!(matches!(
            is_feasible(Gamma, &k2(), &Witness::Rainbow(vec![1, 0])),
            Err(DomError::WitnessShapeMismatch(_))
        ));
        assert!(matches!(
            is_feasible(RainbowX2, &c4(), &Witness::Rainbow(vec![AB, 0, 0, 0])),
            Err(DomError::CodomainViolation(_))
        ));
    }

    #[test]
    fn weights() {
        assert_eq!(witness_weight(&Witness::Int(vec![0, 1, 2])), 3);
        assert_eq!(witness_weight(&Witness::Rainbow(vec![AB, EMPTY, B])), 3);
        assert_eq!(witness_weight(&Witness::Int(vec![0; 5])), 0);
    }

    #[test]
    fn covers() {
        let k2m = MultiGraph::from_graph(&k2(), 1);
        assert!(is_cover_feasible(ParameterId::Rho, &k2m, &Witness::Edge(vec![1])).unwrap());
        assert!(is_cover_feasible(ParameterId::Tau2, &k2m, &Witness::Int(vec![2, 0])).unwrap());
        assert!(!is_cover_feasible(ParameterId::Tau2, &k2m, &Witness::Int(vec![1, 0])).unwrap());
        let c4m = MultiGraph::from_graph(&c4(), 1);
        assert!(is_cover_feasible(ParameterId::Rho2, &c4m, &Witness::Edge(vec![1; 4])).unwrap());
        let iso = MultiGraph::new(2, vec![]).unwrap();
        assert_eq!(is_cover_feasible(ParameterId::Rho, &iso, &Witness::Edge(vec![])), Err(DomError::IsolatedVertex(0)));
    }

    #[test]
    fn definedness() {
        let two_k2 = k2().disjoint_union(2).unwrap();
        assert!(!defined_on(ParameterId::GammaTX2, &two_k2));
        assert!(defined_on(ParameterId::RainbowTX2, &c4()));
        assert!(defined_on(ParameterId::Gamma, &Graph::empty(1)));
        let k3 = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!defined_on(ParameterId::RainbowTX2, &k3));
    }

    #[test]
    fn names_roundtrip() {
        for p in ALL {
            assert_eq!(p.name().parse::<ParameterId>().unwrap(), p);
        }
        for (i, p) in MAIN.iter().enumerate() {
            assert_eq!(p.index(), Some(i + 1));
            assert_eq!(ParameterId::from_index(i + 1), Some(*p));
        }
    }
}
