#![allow(dead_code)]

pub mod criteria;

use std::collections::BTreeSet;

use dominion::families::FamilyId;
use dominion::feasibility::{ParameterId, Witness};
use dominion::graph::Graph;

/// Exhaustive minimum over every function into the parameter's codomain,
/// checked against the definitions directly. `None` means no feasible
/// function exists.
pub fn brute_value(p: ParameterId, g: &Graph) -> Option<u64> {
    brute_all(p, g).into_iter().map(|(w, _)| w).min()
}

/// All feasible functions with their weights. Values are integers for the
/// integer parameters and label bitmasks (bit 0 = a, bit 1 = b) for the
/// rainbow ones.
pub fn brute_all(p: ParameterId, g: &Graph) -> Vec<(u64, Vec<u8>)> {
    use ParameterId::*;
    let n = g.n();
    let values: &[u8] = match p {
        Gamma | GammaT | Gamma2 | GammaX2 | GammaTX2 => &[0, 1],
        GammaW2 | GammaSet2 | GammaTSet2 | Roman => &[0, 1, 2],
        RainbowW2 | RainbowSet2 | RainbowTSet2 => &[0, 1, 2, 3],
        Rainbow2 | RainbowX2 | RainbowTX2 => &[0, 1, 2],
        _ => panic!("vertex parameter expected"),
    };
    let rainbow = p.is_rainbow();
    let weight = |f: &[u8]| -> u64 {
        f.iter().map(|&x| if rainbow { x.count_ones() as u64 } else { x as u64 }).sum()
    };
    let mut out = Vec::new();
    let mut f = vec![0u8; n];
    let mut idx = vec![0usize; n];
    loop {
        for i in 0..n {
            f[i] = values[idx[i]];
        }
        if satisfies(p, g, &f) {
            out.push((weight(&f), f.clone()));
        }
        let mut i = 0;
        while i < n && idx[i] + 1 == values.len() {
            idx[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        idx[i] += 1;
    }
    out
}

fn satisfies(p: ParameterId, g: &Graph, f: &[u8]) -> bool {
    use ParameterId::*;
    (0..g.n()).all(|v| {
        let open: u32 = g.neighbors(v).iter().map(|&u| f[u] as u32).sum();
        let closed = open + f[v] as u32;
        let open_labels = g.neighbors(v).iter().fold(0u8, |acc, &u| acc | f[u]);
        let closed_labels = open_labels | f[v];
        match p {
            Gamma => closed >= 1,
            GammaT => open >= 1,
            GammaW2 | Gamma2 => f[v] != 0 || open >= 2,
            GammaSet2 | GammaX2 => closed >= 2,
            GammaTSet2 | GammaTX2 => open >= 2,
            RainbowW2 | Rainbow2 => f[v] != 0 || open_labels == 3,
            RainbowX2 | RainbowSet2 => closed_labels == 3,
            RainbowTX2 | RainbowTSet2 => open_labels == 3,
            Roman => f[v] != 0 || g.neighbors(v).iter().any(|&u| f[u] == 2),
            _ => unreachable!(),
        }
    })
}

pub fn witness_for(p: ParameterId, f: Vec<u8>) -> Witness {
    if p.is_rainbow() {
        Witness::Rainbow(f)
    } else {
        Witness::Int(f)
    }
}

/// Smallest number of sets covering the ground set, by trying all subfamilies.
pub fn brute_set_cover(ground: usize, sets: &[Vec<usize>]) -> Option<usize> {
    let masks: Vec<u32> = sets.iter().map(|s| s.iter().fold(0, |m, &x| m | 1 << x)).collect();
    let full = (1u32 << ground) - 1;
    (0u32..1 << sets.len())
        .filter(|&sub| (0..sets.len()).filter(|&i| sub >> i & 1 == 1).fold(0, |m, i| m | masks[i]) == full)
        .map(|sub| sub.count_ones() as usize)
        .min()
}

/// Whether some partition of the vertices leaves no hyperedge inside one class.
pub fn brute_two_colorable(vertices: usize, edges: &[Vec<usize>]) -> bool {
    (0u32..1 << vertices).any(|side| {
        edges.iter().all(|e| e.iter().any(|&v| side >> v & 1 == 1) && e.iter().any(|&v| side >> v & 1 == 0))
    })
}

/// The seeded random corpus: `count` graphs on 2..=8 vertices with edge
/// probability cycling through 0.2, 0.5, 0.8.
pub fn random_corpus(count: u64, seed: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let n = 2 + (i % 7) as usize;
            let p = [0.2, 0.5, 0.8][(i % 3) as usize];
            Graph::random(n, p, seed.wrapping_mul(1_000_003).wrapping_add(i))
        })
        .collect()
}

/// One representative per isomorphism class of graphs on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> =
                    edges.iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap_or_default();
        if seen.insert(canon.clone()) {
            out.push(Graph::build(n, &canon).unwrap());
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every graph on at most `n` vertices up to isomorphism (at least one vertex).
pub fn small_graphs(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(all_graphs).collect()
}

/// Sizes exercised for each family: `k` in 1..=3 or `n` in 3..=5.
pub fn family_sizes(f: FamilyId) -> Vec<usize> {
    if f.is_multiple() {
        vec![1, 2, 3]
    } else {
        (3..=5).filter(|&n| n >= f.min_size()).collect()
    }
}

/// Families with a row in the table of known values.
pub const TABLE_FAMILIES: [FamilyId; 11] = [
    FamilyId::KK2,
    FamilyId::KC4,
    FamilyId::KnStarStar,
    FamilyId::KH,
    FamilyId::KK44,
    FamilyId::F3,
    FamilyId::F4,
    FamilyId::Star,
    FamilyId::SubdividedK3Multi,
    FamilyId::Q,
    FamilyId::T,
];

/// Canonical set systems up to relabelling of elements: distinct nonempty
/// subsets of `[0, ground)` covering every element, at most `max_sets` of
/// them.
pub fn set_systems(ground: usize, max_sets: usize) -> Vec<Vec<Vec<usize>>> {
    let perms = permutations(ground);
    let subsets: Vec<u32> = (1u32..1 << ground).collect();
    let full = (1u32 << ground) - 1;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    fn rec(
        start: usize,
        max_sets: usize,
        subsets: &[u32],
        chosen: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if !chosen.is_empty() {
            visit(chosen);
        }
        if chosen.len() == max_sets {
            return;
        }
        for i in start..subsets.len() {
            chosen.push(subsets[i]);
            rec(i + 1, max_sets, subsets, chosen, visit);
            chosen.pop();
        }
    }
    let mut visit = |family: &[u32]| {
        if family.iter().fold(0, |m, &s| m | s) != full {
            return;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut f: Vec<u32> = family
                    .iter()
                    .map(|&s| (0..ground).filter(|&x| s >> x & 1 == 1).fold(0, |m, x| m | 1 << p[x]))
                    .collect();
                f.sort_unstable();
                f
            })
            .min()
            .unwrap();
        if seen.insert(canon.clone()) {
            out.push(canon.iter().map(|&s| (0..ground).filter(|&x| s >> x & 1 == 1).collect()).collect());
        }
    };
    rec(0, max_sets, &subsets, &mut chosen, &mut visit);
    out
}

/// All hypergraphs on `vertices` vertices with at most `max_edges` distinct
/// nonempty hyperedges.
pub fn hypergraphs(vertices: usize, max_edges: usize) -> Vec<Vec<Vec<usize>>> {
    let subsets: Vec<Vec<usize>> =
        (1u32..1 << vertices).map(|s| (0..vertices).filter(|&x| s >> x & 1 == 1).collect()).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(start: usize, max: usize, total: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(chosen.clone());
        if chosen.len() == max {
            return;
        }
        for i in start..total {
            chosen.push(i);
            rec(i + 1, max, total, chosen, out);
            chosen.pop();
        }
    }
    let mut idx = Vec::new();
    rec(0, max_edges, subsets.len(), &mut chosen, &mut idx);
    for choice in idx {
        out.push(choice.iter().map(|&i| subsets[i].clone()).collect());
    }
    out
}

/// Whether some proper 2-colouring has both classes of size at least two.
pub fn brute_two_colorable_balanced(vertices: usize, edges: &[Vec<usize>]) -> bool {
    (0u32..1 << vertices).any(|side| {
        let ones = side.count_ones() as usize;
        ones >= 2
            && vertices - ones >= 2
            && edges.iter().all(|e| e.iter().any(|&v| side >> v & 1 == 1) && e.iter().any(|&v| side >> v & 1 == 0))
    })
}
