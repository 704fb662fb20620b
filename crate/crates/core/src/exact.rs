//! Exact optima by branch and bound, with canonical (lexicographically
//! least) optimal witnesses.

use serde::Serialize;

use crate::approx;
use crate::error::{DomError, Result};
use crate::feasibility::{
    defined_on, is_feasible, two_total_partition, witness_weight, Codomain, ParameterId, Rule, Witness, A, AB, B,
    EMPTY,
};
use crate::graph::{Graph, MultiGraph};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Value {
    Finite(u64),
    Infinite,
}

impl Value {
    pub fn finite(self) -> Option<u64> {
        match self {
            Value::Finite(x) => Some(x),
            Value::Infinite => None,
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Finite(x) => write!(f, "{x}"),
            Value::Infinite => f.write_str("infinity"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub value: Value,
    pub witness: Option<Witness>,
}

impl Solution {
    pub fn infinite() -> Solution {
        Solution { value: Value::Infinite, witness: None }
    }

    fn of(w: Witness) -> Solution {
        Solution { value: Value::Finite(witness_weight(&w)), witness: Some(w) }
    }
}

/// Optimum of `p` on `g`. Components are solved independently; within a
/// component the search visits vertices in id order and values in
/// ascending order, so the first optimum reached is the least one.
pub fn solve(p: ParameterId, g: &Graph, budget: Option<u64>) -> Result<Solution> {
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    match p {
        ParameterId::RainbowSet2 | ParameterId::RainbowTSet2 => {
            let base = if p == ParameterId::RainbowSet2 { ParameterId::Gamma } else { ParameterId::GammaT };
            let s = solve(base, g, Some(budget))?;
            Ok(match s.witness {
                Some(w) => Solution::of(Witness::Rainbow(w.values().iter().map(|&x| if x > 0 { AB } else { EMPTY }).collect())),
                None => Solution::infinite(),
            })
        }
        ParameterId::Rho | ParameterId::Rho2 | ParameterId::Tau2 => solve_cover(p, &MultiGraph::from_graph(g, 1)),
        ParameterId::GammaGamma | ParameterId::GammaTGammaT => Ok(solve_disjoint(p, g)),
        _ => solve_vertex(p, g, budget),
    }
}

fn solve_vertex(p: ParameterId, g: &Graph, budget: u64) -> Result<Solution> {
    if !defined_on(p, g) {
        return Ok(Solution::infinite());
    }
    let rule = p.rule().expect("vertex parameter");
    let comps = g.components();
    let subs: Vec<Graph> = comps.iter().map(|c| g.induced(c)).collect();
    for c in &comps {
        if c.len() > 128 {
            return Err(DomError::Unsupported(format!("component with {} vertices", c.len())));
        }
    }
    let mut parts: Vec<Vec<u8>> = subs.iter().map(|h| upper_witness(p, h)).collect();
    let mut nodes = 0u64;
    for (i, h) in subs.iter().enumerate() {
        let mut s = Search::new(p, rule, h, budget, nodes);
        let ub = witness_weight(&wrap(p, parts[i].clone()));
        let found = s.run(ub + 1);
        nodes = s.nodes;
        match found {
            Ok(Some(f)) => parts[i] = f,
            Ok(None) => {}
            Err(()) => {
                let w = wrap(p, merge(&comps, &parts, g.n()));
                return Err(DomError::BudgetExhausted { incumbent: Some(Box::new(Solution::of(w))) });
            }
        }
    }
    let w = wrap(p, merge(&comps, &parts, g.n()));
    debug_assert!(is_feasible(p, g, &w).unwrap_or(false));
    Ok(Solution::of(w))
}

fn wrap(p: ParameterId, v: Vec<u8>) -> Witness {
    if p.is_rainbow() {
        Witness::Rainbow(v)
    } else {
        Witness::Int(v)
    }
}

fn merge(comps: &[Vec<usize>], parts: &[Vec<u8>], n: usize) -> Vec<u8> {
    let mut out = vec![0; n];
    for (c, f) in comps.iter().zip(parts) {
        for (i, &v) in c.iter().enumerate() {
            out[v] = f[i];
        }
    }
    out
}

fn label_weight(p: ParameterId, x: u8) -> u64 {
    if p.is_rainbow() {
        x.count_ones() as u64
    } else {
        x as u64
    }
}

fn domain(p: ParameterId) -> &'static [u8] {
    match p.codomain() {
        Codomain::Binary => &[0, 1],
        Codomain::Ternary => &[0, 1, 2],
        Codomain::RainbowFull => &[EMPTY, A, B, AB],
        Codomain::RainbowRestricted => &[EMPTY, A, B],
        _ => unreachable!("vertex parameters only"),
    }
}

enum Need {
    Sat,
    Dead,
    Cost(u32, bool),
}

struct Search<'a> {
    p: ParameterId,
    rule: Rule,
    g: &'a Graph,
    n: usize,
    closed_mask: Vec<u128>,
    open_mask: Vec<u128>,
    max_closed: u32,
    f: Vec<u8>,
    sum: Vec<u32>,
    twos: Vec<u32>,
    ca: Vec<u32>,
    cb: Vec<u32>,
    free: Vec<u32>,
    weight: u64,
    best: u64,
    best_f: Option<Vec<u8>>,
    nodes: u64,
    budget: u64,
    colours_used: u32,
    items: Vec<(u32, u32, u128)>,
}

impl<'a> Search<'a> {
    fn new(p: ParameterId, rule: Rule, g: &'a Graph, budget: u64, nodes: u64) -> Search<'a> {
        let n = g.n();
        let open_mask: Vec<u128> = (0..n).map(|v| g.neighbors(v).iter().fold(0u128, |m, &u| m | 1 << u)).collect();
        let closed_mask: Vec<u128> = (0..n).map(|v| open_mask[v] | 1 << v).collect();
        Search {
            p,
            rule,
            g,
            n,
            closed_mask,
            open_mask,
            max_closed: (g.max_degree() + 1) as u32,
            f: vec![0; n],
            sum: vec![0; n],
            twos: vec![0; n],
            ca: vec![0; n],
            cb: vec![0; n],
            free: (0..n).map(|v| g.degree(v) as u32).collect(),
            weight: 0,
            best: u64::MAX,
            best_f: None,
            nodes,
            budget,
            colours_used: 0,
            items: Vec::with_capacity(n),
        }
    }

    /// Returns the least witness of weight below `bound`, `None` if there is
    /// none, or `Err` on budget exhaustion.
    fn run(&mut self, bound: u64) -> std::result::Result<Option<Vec<u8>>, ()> {
        self.best = bound;
        if (0..self.n).any(|v| matches!(self.need(v, 0), Need::Dead)) {
            return Ok(None);
        }
        self.dfs(0)?;
        Ok(self.best_f.take())
    }

    fn need(&self, v: usize, depth: usize) -> Need {
        let own = v < depth;
        let fv = self.f[v];
        let free_open = self.free[v];
        let free_closed = free_open + u32::from(!own);
        let mv = self.p.max_value() as u32;
        match self.rule {
            Rule::Sum { closed, demand } => {
                let s = self.sum[v] + if closed && own { fv as u32 } else { 0 };
                if s >= demand as u32 {
                    return Need::Sat;
                }
                let r = demand as u32 - s;
                let k = if closed { free_closed } else { free_open };
                if r > mv * k {
                    Need::Dead
                } else {
                    Need::Cost(r, closed)
                }
            }
            Rule::OuterSum => {
                if (own && fv > 0) || self.sum[v] >= 2 {
                    Need::Sat
                } else if !own {
                    Need::Cost(1, true)
                } else {
                    let r = 2 - self.sum[v];
                    if r > mv * free_open {
                        Need::Dead
                    } else {
                        Need::Cost(r, false)
                    }
                }
            }
            Rule::Rainbow { closed } => {
                let have = self.have(v) | if closed && own { fv } else { 0 };
                let missing = (AB & !have).count_ones();
                if missing == 0 {
                    return Need::Sat;
                }
                let k = if closed { free_closed } else { free_open };
                if (self.p.codomain() == Codomain::RainbowRestricted && missing > k) || k == 0 {
                    Need::Dead
                } else {
                    Need::Cost(missing, closed)
                }
            }
            Rule::OuterRainbow => {
                let have = self.have(v);
                if (own && fv != EMPTY) || have == AB {
                    Need::Sat
                } else if !own {
                    Need::Cost(1, true)
                } else {
                    let missing = (AB & !have).count_ones();
                    if (self.p.codomain() == Codomain::RainbowRestricted && missing > free_open) || free_open == 0 {
                        Need::Dead
                    } else {
                        Need::Cost(missing, false)
                    }
                }
            }
            Rule::Roman => {
                if (own && fv > 0) || self.twos[v] > 0 {
                    Need::Sat
                } else if !own {
                    Need::Cost(1, true)
                } else if free_open == 0 {
                    Need::Dead
                } else {
                    Need::Cost(2, false)
                }
            }
        }
    }

    fn have(&self, v: usize) -> u8 {
        (if self.ca[v] > 0 { A } else { 0 }) | (if self.cb[v] > 0 { B } else { 0 })
    }

    fn assign(&mut self, i: usize, x: u8, sign: i32) {
        let g = self.g;
        for &u in g.neighbors(i) {
            if sign > 0 {
                self.sum[u] += x as u32;
                self.twos[u] += u32::from(x == 2);
                self.ca[u] += u32::from(x & A != 0);
                self.cb[u] += u32::from(x & B != 0);
                self.free[u] -= 1;
            } else {
                self.sum[u] -= x as u32;
                self.twos[u] -= u32::from(x == 2);
                self.ca[u] -= u32::from(x & A != 0);
                self.cb[u] -= u32::from(x & B != 0);
                self.free[u] += 1;
            }
        }
    }

    fn lower_bound(&mut self, depth: usize) -> u64 {
        let free_mask: u128 = if depth >= 128 { 0 } else { !0u128 << depth };
        let mut items = std::mem::take(&mut self.items);
        items.clear();
        let mut total = 0u64;
        for v in 0..self.n {
            if let Need::Cost(c, closed) = self.need(v, depth) {
                let m = free_mask & if closed { self.closed_mask[v] } else { self.open_mask[v] };
                items.push((m.count_ones(), c, m));
                total += c as u64;
            }
        }
        items.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let mut used = 0u128;
        let mut packed = 0u64;
        for &(_, c, m) in &items {
            if m & used == 0 {
                used |= m;
                packed += c as u64;
            }
        }
        self.items = items;
        packed.max(total.div_ceil(self.max_closed as u64))
    }

    fn dfs(&mut self, depth: usize) -> std::result::Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        if depth == self.n {
            self.best = self.weight;
            self.best_f = Some(self.f.clone());
            return Ok(());
        }
        let rainbow = self.p.is_rainbow();
        for &x in domain(self.p) {
            if rainbow && x == B && self.colours_used == 0 {
                continue;
            }
            let w = label_weight(self.p, x);
            if self.weight + w >= self.best {
                break;
            }
            self.f[depth] = x;
            self.weight += w;
            self.assign(depth, x, 1);
            let fresh = rainbow && x != EMPTY && self.colours_used == 0;
            if fresh {
                self.colours_used = 1;
            }
            let alive = std::iter::once(&depth)
                .chain(self.g.neighbors(depth))
                .all(|&v| !matches!(self.need(v, depth + 1), Need::Dead));
            if alive && self.weight + self.lower_bound(depth + 1) < self.best {
                self.dfs(depth + 1)?;
            }
            if fresh {
                self.colours_used = 0;
            }
            self.assign(depth, x, -1);
            self.weight -= w;
            self.f[depth] = 0;
        }
        Ok(())
    }
}

/// Feasible witness from a fast heuristic, polished by lowering single
/// values while feasibility survives.
pub fn upper_witness(p: ParameterId, g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut f: Vec<u8> = match p {
        ParameterId::RainbowW2 => {
            approx::approximate(ParameterId::Roman, g).values().iter().map(|&x| [EMPTY, A, AB][x as usize]).collect()
        }
        ParameterId::Rainbow2 | ParameterId::RainbowX2 => disjoint_pair_labels(g),
        ParameterId::RainbowTX2 => two_total_partition(g).unwrap_or_else(|| vec![A; n]),
        _ => approx::approximate(p, g).values().to_vec(),
    };
    let rule = p.rule().expect("vertex parameter");
    let w = wrap(p, f.clone());
    if !is_feasible(p, g, &w).unwrap_or(false) {
        // fall back to a trivially feasible all-max witness
        f = vec![p.max_value().min(if p.is_rainbow() { AB } else { 2 }); n];
        if p.codomain() == Codomain::RainbowRestricted {
            f = vec![A; n];
        }
    }
    polish(rule, g, &mut f, p.is_rainbow());
    f
}

/// Lowers values in descending vertex order while every affected vertex
/// stays satisfied.
pub fn polish(rule: Rule, g: &Graph, f: &mut [u8], rainbow: bool) {
    for v in (0..g.n()).rev() {
        let cur = f[v];
        let options: &[u8] = if rainbow {
            match cur {
                AB => &[EMPTY, A, B],
                A | B => &[EMPTY],
                _ => &[],
            }
        } else {
            match cur {
                2 => &[0, 1],
                1 => &[0],
                _ => &[],
            }
        };
        for &x in options {
            f[v] = x;
            let ok = std::iter::once(&v).chain(g.neighbors(v)).all(|&u| crate::feasibility::vertex_ok(rule, g, f, u));
            if ok {
                break;
            }
            f[v] = cur;
        }
    }
}

/// Labels a minimal dominating set `a` and a dominating set inside its
/// complement `b`; isolated vertices get `a`.
fn disjoint_pair_labels(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let d1 = approx::approximate(ParameterId::Gamma, g).values().to_vec();
    let mut d1 = d1;
    polish(Rule::Sum { closed: true, demand: 1 }, g, &mut d1, false);
    let mut f: Vec<u8> = d1.iter().map(|&x| if x > 0 { A } else { EMPTY }).collect();
    let dominated_b = |f: &[u8], v: usize| f[v] == B || g.neighbors(v).iter().any(|&u| f[u] == B);
    for v in 0..n {
        if g.degree(v) == 0 {
            continue;
        }
        if !dominated_b(&f, v) {
            let pick = std::iter::once(v).chain(g.neighbors(v).iter().copied()).find(|&u| f[u] == EMPTY);
            match pick {
                Some(u) => f[u] = B,
                None => return vec![A; n],
            }
        }
    }
    f
}

/// Optimum of a cover parameter on a multigraph. Edge witnesses follow the
/// multigraph's edge order.
pub fn solve_cover(p: ParameterId, g: &MultiGraph) -> Result<Solution> {
    let (nvars, maxv, cons): (usize, u8, Vec<(Vec<usize>, u32)>) = match p {
        ParameterId::Rho | ParameterId::Rho2 => {
            let inc = g.incidence();
            if let Some(v) = (0..g.n()).find(|&v| inc[v].is_empty()) {
                return Err(DomError::IsolatedVertex(v));
            }
            let d = if p == ParameterId::Rho { 1 } else { 2 };
            (g.edges().len(), d as u8, inc.into_iter().map(|es| (es, d)).collect())
        }
        ParameterId::Tau2 => (g.n(), 2, g.edges().iter().map(|&(u, v)| (vec![u, v], 2)).collect()),
        _ => return Err(DomError::WitnessShapeMismatch(format!("{} is not a cover parameter", p.name()))),
    };
    let f = cover_search(nvars, maxv, &cons);
    let w = if p == ParameterId::Tau2 { Witness::Int(f) } else { Witness::Edge(f) };
    Ok(Solution::of(w))
}

/// Least-weight nonnegative integer vector (entries ≤ `maxv`) meeting every
/// `sum over vars >= demand`; lexicographically least among optima.
fn cover_search(nvars: usize, maxv: u8, cons: &[(Vec<usize>, u32)]) -> Vec<u8> {
    let mut of_var: Vec<Vec<usize>> = vec![Vec::new(); nvars];
    for (ci, (vars, _)) in cons.iter().enumerate() {
        for &x in vars {
            of_var[x].push(ci);
        }
    }
    let last: Vec<usize> = cons.iter().map(|(vars, _)| vars.iter().copied().max().unwrap_or(0)).collect();
    struct St<'c> {
        cons: &'c [(Vec<usize>, u32)],
        of_var: Vec<Vec<usize>>,
        last: Vec<usize>,
        maxv: u8,
        f: Vec<u8>,
        got: Vec<u32>,
        weight: u64,
        best: u64,
        best_f: Vec<u8>,
    }
    impl St<'_> {
        fn lb(&self, depth: usize) -> u64 {
            let mut used = vec![false; self.f.len()];
            let mut total = 0;
            let mut order: Vec<usize> = (0..self.cons.len()).filter(|&c| self.got[c] < self.cons[c].1).collect();
            order.sort_by_key(|&c| self.cons[c].0.iter().filter(|&&x| x >= depth).count());
            for c in order {
                let free: Vec<usize> = self.cons[c].0.iter().copied().filter(|&x| x >= depth).collect();
                if free.iter().all(|&x| !used[x]) {
                    for &x in &free {
                        used[x] = true;
                    }
                    total += (self.cons[c].1 - self.got[c]) as u64;
                }
            }
            total
        }
        fn dfs(&mut self, depth: usize) {
            if depth == self.f.len() {
                self.best = self.weight;
                self.best_f = self.f.clone();
                return;
            }
            for x in 0..=self.maxv {
                if self.weight + x as u64 >= self.best {
                    break;
                }
                self.f[depth] = x;
                self.weight += x as u64;
                for &c in &self.of_var[depth] {
                    self.got[c] += x as u32;
                }
                let dead = self.of_var[depth].iter().any(|&c| {
                    self.last[c] == depth && self.got[c] < self.cons[c].1
                        || self.got[c] + (self.maxv as u32) * (self.cons[c].0.iter().filter(|&&y| y > depth).count() as u32)
                            < self.cons[c].1
                });
                if !dead && self.weight + self.lb(depth + 1) < self.best {
                    self.dfs(depth + 1);
                }
                for &c in &self.of_var[depth] {
                    self.got[c] -= x as u32;
                }
                self.weight -= x as u64;
                self.f[depth] = 0;
            }
        }
    }
    let mut st = St {
        cons,
        of_var,
        last,
        maxv,
        f: vec![0; nvars],
        got: vec![0; cons.len()],
        weight: 0,
        best: maxv as u64 * nvars as u64 + 1,
        best_f: vec![maxv; nvars],
    };
    st.dfs(0);
    st.best_f
}

/// Minimum |A|+|B| over disjoint dominating (or total dominating) pairs by
/// plain enumeration of none/first/second per vertex, with the first set's
/// least element preceding the second's.
pub fn solve_disjoint(p: ParameterId, g: &Graph) -> Solution {
    let n = g.n();
    let closed = p == ParameterId::GammaGamma;
    let ok = |f: &[u8]| {
        (0..n).all(|v| {
            let mut seen = if closed { 1u8 << f[v] } else { 0 };
            for &u in g.neighbors(v) {
                seen |= 1 << f[u];
            }
            seen & 0b110 == 0b110
        })
    };
    let mut best: Option<(u64, Vec<u8>)> = None;
    let mut f = vec![0u8; n];
    fn rec(
        i: usize,
        f: &mut Vec<u8>,
        used: u64,
        first_seen: bool,
        best: &mut Option<(u64, Vec<u8>)>,
        ok: &dyn Fn(&[u8]) -> bool,
    ) {
        if let Some((b, _)) = best {
            if used >= *b {
                return;
            }
        }
        if i == f.len() {
            if ok(f) {
                *best = Some((used, f.clone()));
            }
            return;
        }
        for x in 0..=2u8 {
            if x == 2 && !first_seen {
                continue;
            }
            f[i] = x;
            rec(i + 1, f, used + u64::from(x > 0), first_seen || x == 1, best, ok);
        }
        f[i] = 0;
    }
    rec(0, &mut f, 0, false, &mut best, &ok);
    match best {
        Some((w, f)) => Solution { value: Value::Finite(w), witness: Some(Witness::Pair(f)) },
        None => Solution::infinite(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(k: usize) -> Graph {
        Graph::build(k + 1, &(1..=k).map(|i| (0, i)).collect::<Vec<_>>()).unwrap()
    }
    fn c4() -> Graph {
        Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn spot_values() {
        let s = solve(ParameterId::Gamma, &star(5), None).unwrap();
        assert_eq!(s.value, Value::Finite(1));
        assert_eq!(s.witness, Some(Witness::Int(vec![1, 0, 0, 0, 0, 0])));
        let p3 = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(solve(ParameterId::Gamma, &p3, None).unwrap().value, Value::Finite(1));
        assert_eq!(solve(ParameterId::GammaTX2, &Graph::build(2, &[(0, 1)]).unwrap(), None).unwrap().value, Value::Infinite);
    }

    #[test]
    fn covers_and_gallai_on_c4() {
        let m = MultiGraph::from_graph(&c4(), 1);
        assert_eq!(solve_cover(ParameterId::Rho2, &m).unwrap().value, Value::Finite(4));
        assert_eq!(solve_cover(ParameterId::Tau2, &m).unwrap().value, Value::Finite(4));
        let k2 = MultiGraph::from_graph(&Graph::build(2, &[(0, 1)]).unwrap(), 1);
        assert_eq!(solve_cover(ParameterId::Tau2, &k2).unwrap().value, Value::Finite(2));
        let m3 = MultiGraph::from_graph(&star(3), 1);
        assert_eq!(solve_cover(ParameterId::Rho, &m3).unwrap().value, Value::Finite(3));
    }

    #[test]
    fn disjoint_examples() {
        assert_eq!(solve_disjoint(ParameterId::GammaGamma, &c4()).value, Value::Finite(4));
        assert_eq!(solve_disjoint(ParameterId::GammaGamma, &Graph::build(2, &[(0, 1)]).unwrap()).value, Value::Finite(2));
        assert_eq!(solve_disjoint(ParameterId::GammaTGammaT, &star(3)).value, Value::Infinite);
    }

    #[test]
    fn budget_error_carries_incumbent() {
        let edges: Vec<(usize, usize)> = (0..20).map(|i| (i, (i + 1) % 20)).collect();
        let g = Graph::build(20, &edges).unwrap();
        match solve(ParameterId::Gamma, &g, Some(3)) {
            Err(DomError::BudgetExhausted { incumbent: Some(s) }) => {
                assert!(is_feasible(ParameterId::Gamma, &g, s.witness.as_ref().unwrap()).unwrap())
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
