//! Greedy approximations: multicover greedy for the {0,1} closed/open
//! parameters, unit-step greedy for the outer parameters, and doubled or
//! relabelled base solutions for the derived parameters.

use serde::Serialize;

use crate::error::{DomError, Result};
use crate::feasibility::{defined_on, witness_weight, ParameterId, Witness, AB, EMPTY};
use crate::graph::Graph;
use crate::transforms;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Approximation {
    #[serde(skip)]
    pub witness: Witness,
    pub weight: u64,
    pub ratio_bound: f64,
}

impl Approximation {
    pub fn values(&self) -> &[u8] {
        self.witness.values()
    }
}

fn harmonic_ratio(p: ParameterId, max_degree: usize) -> f64 {
    let d = max_degree as f64;
    use ParameterId::*;
    match p {
        Gamma | GammaX2 => (d + 1.0).ln() + 1.0,
        GammaT | GammaTX2 => d.max(1.0).ln() + 1.0,
        Gamma2 | GammaW2 => (d + 2.0).ln() + 1.0,
        GammaSet2 | Roman | RainbowSet2 => 2.0 * harmonic_ratio(Gamma, max_degree),
        GammaTSet2 | RainbowTSet2 => 2.0 * harmonic_ratio(GammaT, max_degree),
        RainbowW2 => 2.0 * harmonic_ratio(GammaW2, max_degree),
        _ => f64::INFINITY,
    }
}

/// Proven approximation ratio for `p` on graphs of maximum degree `max_degree`.
pub fn ratio_bound(p: ParameterId, max_degree: usize) -> f64 {
    harmonic_ratio(p, max_degree)
}

fn finish(p: ParameterId, g: &Graph, witness: Witness) -> Approximation {
    Approximation { weight: witness_weight(&witness), witness, ratio_bound: ratio_bound(p, g.max_degree()) }
}

/// Repeatedly selects the vertex covering the most residual demand.
pub fn greedy_multicover(p: ParameterId, g: &Graph) -> Result<Approximation> {
    let (closed, demand) = match p {
        ParameterId::Gamma => (true, 1),
        ParameterId::GammaT => (false, 1),
        ParameterId::GammaX2 => (true, 2),
        ParameterId::GammaTX2 => (false, 2),
        _ => return Err(DomError::Unsupported(format!("multicover greedy for {}", p.name()))),
    };
    if !defined_on(p, g) {
        return Err(DomError::UndefinedParameter(p.name().into()));
    }
    let n = g.n();
    let mut residual: Vec<u32> = vec![demand; n];
    let mut chosen = vec![0u8; n];
    let covered_by = |u: usize| -> Vec<usize> {
        let mut l = g.neighbors(u).to_vec();
        if closed {
            l.push(u);
        }
        l
    };
    loop {
        let mut best = (0usize, usize::MAX);
        for u in 0..n {
            if chosen[u] == 1 {
                continue;
            }
            let gain = covered_by(u).iter().filter(|&&v| residual[v] > 0).count();
            if gain > best.0 {
                best = (gain, u);
            }
        }
        if best.0 == 0 {
            break;
        }
        let u = best.1;
        chosen[u] = 1;
        for v in covered_by(u) {
            residual[v] = residual[v].saturating_sub(1);
        }
    }
    Ok(finish(p, g, Witness::Int(chosen)))
}

/// Unit-step greedy for 2-domination and weak 2-domination. For
/// 2-domination a step selects a vertex; for weak 2-domination a step
/// raises a vertex's weight by one. Each step maximizes the drop in total
/// residual demand, ties going to the smallest vertex.
pub fn greedy_vector(p: ParameterId, g: &Graph) -> Result<Approximation> {
    let cap = match p {
        ParameterId::Gamma2 => 1,
        ParameterId::GammaW2 => 2,
        _ => return Err(DomError::Unsupported(format!("vector greedy for {}", p.name()))),
    };
    let n = g.n();
    let mut f = vec![0u8; n];
    let residual = |f: &[u8], v: usize| -> u32 {
        if f[v] > 0 {
            0
        } else {
            2u32.saturating_sub(g.neighbors(v).iter().map(|&u| f[u] as u32).sum())
        }
    };
    loop {
        let mut best = (0u32, usize::MAX);
        for u in 0..n {
            if f[u] >= cap {
                continue;
            }
            let mut gain = if f[u] == 0 { residual(&f, u) } else { 0 };
            gain += g.neighbors(u).iter().filter(|&&v| residual(&f, v) > 0).count() as u32;
            if gain > best.0 {
                best = (gain, u);
            }
        }
        if best.0 == 0 {
            break;
        }
        f[best.1] += 1;
    }
    Ok(finish(p, g, Witness::Int(f)))
}

/// Base greedy followed by the matching doubling or relabelling.
pub fn derived_approx(p: ParameterId, g: &Graph) -> Result<Approximation> {
    if !defined_on(p, g) {
        return Err(DomError::UndefinedParameter(p.name().into()));
    }
    let w = match p {
        ParameterId::GammaSet2 | ParameterId::Roman => double(&greedy_multicover(ParameterId::Gamma, g)?),
        ParameterId::GammaTSet2 => double(&greedy_multicover(ParameterId::GammaT, g)?),
        ParameterId::RainbowSet2 => both_labels(&greedy_multicover(ParameterId::Gamma, g)?),
        ParameterId::RainbowTSet2 => both_labels(&greedy_multicover(ParameterId::GammaT, g)?),
        ParameterId::RainbowW2 => {
            let base = greedy_vector(ParameterId::GammaW2, g)?;
            transforms::weak_to_rainbow_weak(g, base.values())
        }
        _ => return Err(DomError::Unsupported(format!("derived approximation for {}", p.name()))),
    };
    Ok(finish(p, g, w))
}

fn double(a: &Approximation) -> Witness {
    Witness::Int(a.values().iter().map(|&x| 2 * x).collect())
}

fn both_labels(a: &Approximation) -> Witness {
    Witness::Rainbow(a.values().iter().map(|&x| if x > 0 { AB } else { EMPTY }).collect())
}

/// Dispatches to the approximation for `p`. Rainbow 2-domination and
/// rainbow (total) double domination have none.
pub fn approximate(p: ParameterId, g: &Graph) -> Approximation {
    try_approximate(p, g).expect("parameter defined on graph")
}

pub fn try_approximate(p: ParameterId, g: &Graph) -> Result<Approximation> {
    use ParameterId::*;
    match p {
        Gamma | GammaT | GammaX2 | GammaTX2 => greedy_multicover(p, g),
        Gamma2 | GammaW2 => greedy_vector(p, g),
        GammaSet2 | GammaTSet2 | Roman | RainbowSet2 | RainbowTSet2 | RainbowW2 => derived_approx(p, g),
        _ => Err(DomError::Unsupported(format!("no approximation for {}", p.name()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feasibility::is_feasible;

    fn star(k: usize) -> Graph {
        Graph::build(k + 1, &(1..=k).map(|i| (0, i)).collect::<Vec<_>>()).unwrap()
    }
    fn c4() -> Graph {
        Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn examples() {
        let a = greedy_multicover(ParameterId::Gamma, &star(5)).unwrap();
        assert_eq!(a.values(), &[1, 0, 0, 0, 0, 0]);
        assert_eq!(greedy_multicover(ParameterId::GammaX2, &c4()).unwrap().weight, 3);
        let two_c4 = c4().disjoint_union(2).unwrap();
        let t = greedy_multicover(ParameterId::GammaTX2, &two_c4).unwrap();
        assert!(t.weight as f64 <= (2f64.ln() + 1.0) * 8.0);
        let s = greedy_vector(ParameterId::Gamma2, &star(4)).unwrap();
        assert_eq!(s.values(), &[1, 1, 1, 1, 1]);
        assert!(is_feasible(ParameterId::Gamma2, &star(4), &s.witness).unwrap());
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(greedy_vector(ParameterId::GammaW2, &k2).unwrap().weight, 2);
        assert_eq!(greedy_vector(ParameterId::GammaW2, &c4()).unwrap().weight, 2);
        assert_eq!(derived_approx(ParameterId::GammaSet2, &star(5)).unwrap().weight, 2);
        assert_eq!(derived_approx(ParameterId::Roman, &k2.disjoint_union(2).unwrap()).unwrap().weight, 4);
        let r = derived_approx(ParameterId::RainbowW2, &c4()).unwrap();
        assert!(is_feasible(ParameterId::RainbowW2, &c4(), &r.witness).unwrap());
        assert!(r.weight <= 2 * greedy_vector(ParameterId::GammaW2, &c4()).unwrap().weight);
    }

    #[test]
    fn undefined_is_an_error() {
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        assert!(matches!(greedy_multicover(ParameterId::GammaTX2, &k2), Err(DomError::UndefinedParameter(_))));
        assert!(try_approximate(ParameterId::Rainbow2, &k2).is_err());
    }
}
