//! One runner per acceptance criterion. Each returns the number of checks
//! performed and a description of every failure.

use std::collections::HashMap;

use dominion::approx::{ratio_bound, try_approximate};
use dominion::audit::{all_values, audit_values, hasse_and_classes, no_bound_evidence, sharpness_assignments, sharpness_check};
use dominion::error::DomError;
use dominion::exact::{solve, solve_disjoint, Value};
use dominion::families::{expected_value, generate, FamilyId};
use dominion::feasibility::{defined_on, is_feasible, ParameterId, MAIN};
use dominion::reductions::{
    coloring_extraction, hypergraph_to_split, set_cover_to_split, split_witness_to_cover, Hypergraph, SetCoverInstance,
};
use dominion::transforms::{apply, verify_guarantee, TransformId};
use dominion::Graph;

use super::*;

pub type Outcome = (usize, Vec<String>);

/// Absolute slack allowed when comparing a greedy weight against
/// `ratio · optimum` in floating point.
pub const RATIO_TOLERANCE: f64 = 1e-9;

/// Seed of the random corpus.
pub const CORPUS_SEED: u64 = 0;
pub const CORPUS_SIZE: u64 = 200;

pub fn family_oracles() -> Outcome {
    let mut checks = 0;
    let mut bad = Vec::new();
    for f in TABLE_FAMILIES {
        for size in family_sizes(f) {
            let g = generate(f, size).unwrap();
            for p in MAIN {
                let Some(expected) = expected_value(f, size, p) else { continue };
                let sol = solve(p, &g, None).unwrap();
                checks += 1;
                let feasible = sol.witness.as_ref().map_or(true, |w| is_feasible(p, &g, w).unwrap());
                if sol.value != expected || !feasible {
                    bad.push(format!("{f} size {size} {}: got {} expected {expected}", p.name(), sol.value));
                }
            }
        }
    }
    (checks, bad)
}

pub fn auxiliary_values() -> Outcome {
    use ParameterId::*;
    let n64 = |n: usize| n as u64;
    let mut cases: Vec<(FamilyId, usize, ParameterId, u64)> = Vec::new();
    for n in [2, 3] {
        cases.push((FamilyId::SubdividedOddClique, n, GammaT, 3 * n64(n) + 1));
        cases.push((FamilyId::SubdividedOddClique, n, Gamma2, 2 * n64(n) + 1));
        cases.push((FamilyId::SubdividedOddClique, n, GammaW2, 2 * n64(n) + 1));
    }
    for n in [3, 4] {
        cases.push((FamilyId::SubdividedDoubledClique, n, Roman, 2 * n64(n) - 1));
        cases.push((FamilyId::SubdividedDoubledClique, n, GammaW2, n64(n)));
        cases.push((FamilyId::SubdividedDoubledClique, n, Gamma2, n64(n)));
    }
    for n in [3, 4, 5] {
        cases.push((FamilyId::SubdividedStarMinus, n, Roman, n64(n) + 1));
        cases.push((FamilyId::SubdividedStarMinus, n, Gamma, n64(n)));
        cases.push((FamilyId::SubdividedStarMinus, n, GammaSet2, 2 * n64(n)));
    }
    for n in [3, 4] {
        cases.push((FamilyId::KnStarStar, n, RainbowW2, 2 * n64(n) - 2));
        cases.push((FamilyId::KnStarStar, n, Roman, 2 * n64(n) - 2));
        for p in [GammaW2, GammaSet2, GammaTSet2, Gamma2, GammaX2, GammaTX2] {
            cases.push((FamilyId::KnStarStar, n, p, n64(n)));
        }
    }
    let mut bad = Vec::new();
    for &(f, n, p, expected) in &cases {
        let g = generate(f, n).unwrap();
        let got = solve(p, &g, None).unwrap().value;
        if got != Value::Finite(expected) {
            bad.push(format!("{} on {f} n={n}: got {got} expected {expected}", p.name()));
        }
    }
    (cases.len(), bad)
}

/// The random corpus followed by every family instance of the oracle suite.
pub fn audit_corpus() -> Vec<Graph> {
    let mut out = random_corpus(CORPUS_SIZE, CORPUS_SEED);
    for f in TABLE_FAMILIES {
        for size in family_sizes(f) {
            out.push(generate(f, size).unwrap());
        }
    }
    out
}

pub fn corpus_values(corpus: &[Graph]) -> Vec<Vec<Value>> {
    corpus.iter().map(|g| all_values(g, None).unwrap()).collect()
}

pub fn bound_audit(corpus: &[Graph], values: &[Vec<Value>]) -> Outcome {
    let mut bad = Vec::new();
    for (i, (g, v)) in corpus.iter().zip(values).enumerate() {
        for violation in audit_values(g, v) {
            bad.push(format!("graph {i}: {violation:?}"));
        }
    }
    (corpus.len(), bad)
}

pub fn sharpness() -> Outcome {
    let mut checks = 0;
    let mut bad = Vec::new();
    for s in sharpness_assignments() {
        let e = dominion::audit::entry(s.row, s.col);
        if e.kind == dominion::audit::BoundKind::NoBound {
            let r = no_bound_evidence(&s).unwrap();
            checks += 1;
            if !r.pass {
                bad.push(format!("no-bound evidence ({},{}): {r:?}", s.row, s.col));
            }
            continue;
        }
        for size in s.sizes() {
            let r = sharpness_check(&s, size).unwrap();
            checks += 1;
            if !r.pass {
                bad.push(format!("sharpness ({},{}) {} size {size}: {r:?}", s.row, s.col, r.family));
            }
        }
    }
    (checks, bad)
}

/// Feasible witnesses of weight at most optimum + 1.
fn near_optimal(p: ParameterId, g: &Graph) -> Vec<Vec<u8>> {
    let all = brute_all(p, g);
    let Some(opt) = all.iter().map(|(w, _)| *w).min() else { return Vec::new() };
    all.into_iter().filter(|(w, _)| *w <= opt + 1).map(|(_, f)| f).collect()
}

pub fn transform_soundness(max_n: usize) -> Outcome {
    let transforms = TransformId::all();
    let mut checks = 0;
    let mut bad = Vec::new();
    for g in small_graphs(max_n) {
        let mut cache: HashMap<ParameterId, Vec<Vec<u8>>> = HashMap::new();
        for &t in &transforms {
            let src = cache.entry(t.source()).or_insert_with(|| near_optimal(t.source(), &g));
            if !t.side_condition().holds(t.target(), &g) {
                if let Some(f) = src.first() {
                    checks += 1;
                    if !matches!(apply(t, &g, &witness_for(t.source(), f.clone())), Err(DomError::SideConditionViolated(_))) {
                        bad.push(format!("{} on {:?}: side condition not enforced", t.label(), g.edges()));
                    }
                }
                continue;
            }
            for f in src.iter() {
                checks += 1;
                let r = verify_guarantee(t, &g, &witness_for(t.source(), f.clone())).unwrap();
                if !r.pass {
                    bad.push(format!("{} on {:?} from {f:?}: {r:?}", t.label(), g.edges()));
                }
            }
        }
    }
    (checks, bad)
}

/// Graphs of the identity suite: the corpus and all small graphs, without
/// isolated vertices.
pub fn identity_corpus() -> Vec<Graph> {
    random_corpus(CORPUS_SIZE, CORPUS_SEED)
        .into_iter()
        .chain(small_graphs(5))
        .filter(|g| g.n() > 0 && g.min_degree() >= 1)
        .collect()
}

pub fn identities(corpus: &[Graph]) -> Outcome {
    use ParameterId::*;
    let mut checks = 0;
    let mut bad = Vec::new();
    for (i, g) in corpus.iter().enumerate() {
        for (rainbow, pair) in [(RainbowX2, GammaGamma), (RainbowTX2, GammaTGammaT)] {
            let lhs = solve(rainbow, g, None).unwrap().value;
            let rhs = solve_disjoint(pair, g).value;
            checks += 1;
            if lhs != rhs {
                bad.push(format!("graph {i}: {} = {lhs}, {} = {rhs}", rainbow.name(), pair.name()));
            }
        }
        let rho2 = solve(Rho2, g, None).unwrap().value.finite();
        let tau2 = solve(Tau2, g, None).unwrap().value.finite();
        checks += 1;
        if rho2.zip(tau2).map(|(a, b)| a + b) != Some(2 * g.n() as u64) {
            bad.push(format!("graph {i}: rho_2 {rho2:?} + tau_2 {tau2:?} != 2n"));
        }
    }
    (checks, bad)
}

pub const GREEDY_PARAMETERS: [ParameterId; 12] = [
    ParameterId::Gamma,
    ParameterId::GammaT,
    ParameterId::GammaX2,
    ParameterId::GammaTX2,
    ParameterId::Gamma2,
    ParameterId::GammaW2,
    ParameterId::GammaSet2,
    ParameterId::GammaTSet2,
    ParameterId::Roman,
    ParameterId::RainbowW2,
    ParameterId::RainbowSet2,
    ParameterId::RainbowTSet2,
];

pub fn greedy_ratio(corpus: &[Graph], values: &[Vec<Value>]) -> Outcome {
    use ParameterId::*;
    let mut checks = 0;
    let mut bad = Vec::new();
    for (i, (g, v)) in corpus.iter().zip(values).enumerate() {
        let delta = g.max_degree();
        for p in GREEDY_PARAMETERS {
            if !defined_on(p, g) {
                continue;
            }
            let total = matches!(p, GammaT | GammaTX2 | GammaTSet2 | RainbowTSet2);
            if total && delta < 2 {
                continue;
            }
            let opt = match p.index() {
                Some(k) if k <= 13 => v[k - 1],
                _ => solve(p, g, None).unwrap().value,
            }
            .finite()
            .unwrap();
            let a = try_approximate(p, g).unwrap();
            checks += 1;
            let feasible = is_feasible(p, g, &a.witness).unwrap();
            let bound = ratio_bound(p, delta) * opt as f64;
            if !feasible || a.weight as f64 > bound + RATIO_TOLERANCE {
                bad.push(format!("graph {i} {}: greedy {} opt {opt} bound {bound} feasible {feasible}", p.name(), a.weight));
            }
        }
    }
    (checks, bad)
}

pub fn reductions(max_ground: usize, max_sets: usize, max_vertices: usize, max_edges: usize) -> Outcome {
    let mut checks = 0;
    let mut bad = Vec::new();
    for ground in 1..=max_ground {
        for sets in set_systems(ground, max_sets) {
            let opt = brute_set_cover(ground, &sets).unwrap() as u64;
            let j = SetCoverInstance { ground, sets };
            let gadget = set_cover_to_split(&j).unwrap();
            let two = solve(ParameterId::Rainbow2, &gadget.graph, None).unwrap();
            let double = solve(ParameterId::RainbowX2, &gadget.graph, None).unwrap().value;
            checks += 1;
            if two.value != Value::Finite(2 * opt) || double != Value::Finite(2 * opt) {
                bad.push(format!("{j:?}: rgamma_2 {} rgamma_x2 {double} opt {opt}", two.value));
            }
            if !gadget.graph.is_split_partition(&gadget.partition()) {
                bad.push(format!("{j:?}: gadget is not split"));
            }
            let cover = split_witness_to_cover(&j, two.witness.as_ref().unwrap()).unwrap();
            if !j.is_cover(&cover) || cover.len() as u64 != opt {
                bad.push(format!("{j:?}: extracted {cover:?}"));
            }
        }
    }
    for vertices in 1..=max_vertices {
        for edges in hypergraphs(vertices, max_edges) {
            let h = Hypergraph { vertices, edges };
            let colorable = brute_two_colorable(vertices, &h.edges);
            checks += 1;
            match hypergraph_to_split(&h) {
                Err(DomError::DegenerateHypergraph) => {
                    if !h.is_degenerate() {
                        bad.push(format!("{h:?}: rejected"));
                    }
                }
                Err(e) => bad.push(format!("{h:?}: {e}")),
                Ok(gadget) => {
                    let balanced = brute_two_colorable_balanced(vertices, &h.edges);
                    let sol = solve(ParameterId::RainbowTX2, &gadget.graph, None).unwrap();
                    let finite = sol.value != Value::Infinite;
                    if finite != colorable || finite != balanced || finite != defined_on(ParameterId::RainbowTX2, &gadget.graph) {
                        bad.push(format!("{h:?}: finite {finite} colorable {colorable} balanced {balanced}"));
                    }
                    if let Some(w) = &sol.witness {
                        let side = coloring_extraction(&h, w).unwrap();
                        if !h.is_proper_coloring(&side) {
                            bad.push(format!("{h:?}: extracted {side:?}"));
                        }
                    }
                }
            }
        }
    }
    (checks, bad)
}

/// Committed class partition of the boundedness preorder, bottom first.
pub const CLASSES_FIXTURE: &str = include_str!("../fixtures/classes.json");

pub fn structure() -> Outcome {
    let s = hasse_and_classes();
    let expected: Vec<Vec<usize>> = serde_json::from_str(CLASSES_FIXTURE).unwrap();
    let mut bad = Vec::new();
    if s.classes != expected {
        bad.push(format!("classes {:?} differ from fixture {expected:?}", s.classes));
    }
    if !s.linear {
        bad.push("classes are not linearly ordered".into());
    }
    if s.classes.len() != 4 || s.classes.last() != Some(&vec![12]) {
        bad.push(format!("expected four classes with index 12 alone on top, got {:?}", s.classes));
    }
    (1, bad)
}
