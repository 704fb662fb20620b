//! Named extremal graph families and their known parameter values.
//!
//! Vertex layouts (ids are dense and assigned in the listed order):
//!
//! | family | layout |
//! |---|---|
//! | `kK2` | component `i`: `2i, 2i+1` |
//! | `kC4` | component `i`: cycle `4i, 4i+1, 4i+2, 4i+3` |
//! | `Kn**` | originals `0..n`, then two triangle vertices per pair `x<y` in lex order |
//! | `kH` | component `i` at offset `6i`: hubs `0,1`; leaves `2,3` on `0`, `4,5` on `1` |
//! | `kK44` | component `i` at offset `8i`: sides `0..4` and `4..8` |
//! | `Fn3` | centre `0`; triangle `i` adds `1+2i, 2+2i` |
//! | `Fn4` | centre `0`; square `i` is `0, 1+3i, 2+3i, 3+3i` |
//! | `K1n` | centre `0`, leaves `1..=n` |
//! | `S(K3n)` | originals `0,1,2`; subdivision vertices by (pair, copy) |
//! | `Qn` | hubs `0,1`; path `i` is `0, 2+2i, 3+2i, 1` |
//! | `Tn` | `v1..vn, w1..wn, s1..s3, t1..t5` |
//! | `S(K2n+1)`, `S(Kn2)` | originals first, then subdivision vertices by (pair, copy) |
//! | `S(K1n)-` | `S(K1n)` (centre, leaves, subdivision vertices) without leaf `n` |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{DomError, Result};
use crate::exact::Value;
use crate::feasibility::{defined_on, ParameterId};
use crate::graph::{Graph, MultiGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    KK2,
    KC4,
    KnStarStar,
    KH,
    KK44,
    F3,
    F4,
    Star,
    SubdividedK3Multi,
    Q,
    T,
    SubdividedOddClique,
    SubdividedDoubledClique,
    SubdividedStarMinus,
}

impl FamilyId {
    pub const ALL: [FamilyId; 14] = [
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
        FamilyId::SubdividedOddClique,
        FamilyId::SubdividedDoubledClique,
        FamilyId::SubdividedStarMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::KK2 => "kK2",
            FamilyId::KC4 => "kC4",
            FamilyId::KnStarStar => "Kn**",
            FamilyId::KH => "kH",
            FamilyId::KK44 => "kK44",
            FamilyId::F3 => "Fn3",
            FamilyId::F4 => "Fn4",
            FamilyId::Star => "K1n",
            FamilyId::SubdividedK3Multi => "S(K3n)",
            FamilyId::Q => "Qn",
            FamilyId::T => "Tn",
            FamilyId::SubdividedOddClique => "S(K2n+1)",
            FamilyId::SubdividedDoubledClique => "S(Kn2)",
            FamilyId::SubdividedStarMinus => "S(K1n)-",
        }
    }

    /// Smallest admissible size.
    pub fn min_size(self) -> usize {
        match self {
            FamilyId::KK2 | FamilyId::KC4 | FamilyId::KH | FamilyId::KK44 | FamilyId::T => 1,
            FamilyId::F3 | FamilyId::Star | FamilyId::SubdividedOddClique => 2,
            FamilyId::KnStarStar
            | FamilyId::F4
            | FamilyId::SubdividedK3Multi
            | FamilyId::Q
            | FamilyId::SubdividedDoubledClique
            | FamilyId::SubdividedStarMinus => 3,
        }
    }

    /// Whether the size counts disjoint copies (`k`) rather than an order (`n`).
    pub fn is_multiple(self) -> bool {
        matches!(self, FamilyId::KK2 | FamilyId::KC4 | FamilyId::KH | FamilyId::KK44)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = DomError;

    fn from_str(s: &str) -> Result<FamilyId> {
        FamilyId::ALL
            .iter()
            .copied()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| DomError::Parse(format!("unknown family '{s}'")))
    }
}

fn clique_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect()
}

fn copies(base: &Graph, k: usize) -> Graph {
    base.disjoint_union(k).expect("k >= 1")
}

/// Builds the family member of the given size.
pub fn generate(f: FamilyId, size: usize) -> Result<Graph> {
    if size < f.min_size() {
        return Err(DomError::SizeBelowThreshold { family: f.name().into(), size, min: f.min_size() });
    }
    let n = size;
    let g = match f {
        FamilyId::KK2 => copies(&Graph::build(2, &[(0, 1)])?, n),
        FamilyId::KC4 => copies(&Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?, n),
        FamilyId::KH => copies(&Graph::build(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])?, n),
        FamilyId::KK44 => {
            let e: Vec<_> = (0..4).flat_map(|a| (4..8).map(move |b| (a, b))).collect();
            copies(&Graph::build(8, &e)?, n)
        }
        FamilyId::KnStarStar => {
            let mut e = clique_edges(n);
            let mut next = n;
            for (x, y) in clique_edges(n) {
                for _ in 0..2 {
                    e.push((x, next));
                    e.push((y, next));
                    next += 1;
                }
            }
            Graph::build(next, &e)?
        }
        FamilyId::F3 => {
            let mut e = Vec::new();
            for i in 0..n {
                let (a, b) = (1 + 2 * i, 2 + 2 * i);
                e.extend([(0, a), (0, b), (a, b)]);
            }
            Graph::build(2 * n + 1, &e)?
        }
        FamilyId::F4 => {
            let mut e = Vec::new();
            for i in 0..n {
                let (a, b, c) = (1 + 3 * i, 2 + 3 * i, 3 + 3 * i);
                e.extend([(0, a), (a, b), (b, c), (c, 0)]);
            }
            Graph::build(3 * n + 1, &e)?
        }
        FamilyId::Star => Graph::build(n + 1, &(1..=n).map(|i| (0, i)).collect::<Vec<_>>())?,
        FamilyId::SubdividedK3Multi => MultiGraph::from_graph(&Graph::build(3, &clique_edges(3))?, n).subdivide(),
        FamilyId::Q => {
            let mut e = Vec::new();
            for i in 0..n {
                let (a, b) = (2 + 2 * i, 3 + 2 * i);
                e.extend([(0, a), (a, b), (b, 1)]);
            }
            Graph::build(2 * n + 2, &e)?
        }
        FamilyId::T => {
            let v = |i: usize| i;
            let w = |i: usize| n + i;
            let s = |i: usize| 2 * n + i;
            let t = |i: usize| 2 * n + 3 + i;
            let mut e = vec![(s(0), s(1)), (s(1), s(2)), (s(0), s(2))];
            for i in 0..5 {
                e.push((t(i), t((i + 1) % 5)));
            }
            for i in 0..n {
                e.extend([(s(0), v(i)), (s(2), v(i)), (t(0), w(i)), (t(4), w(i)), (v(i), w(i))]);
            }
            Graph::build(2 * n + 8, &e)?
        }
        FamilyId::SubdividedOddClique => {
            let k = 2 * n + 1;
            MultiGraph::from_graph(&Graph::build(k, &clique_edges(k))?, 1).subdivide()
        }
        FamilyId::SubdividedDoubledClique => MultiGraph::from_graph(&Graph::build(n, &clique_edges(n))?, 2).subdivide(),
        FamilyId::SubdividedStarMinus => {
            let star = generate(FamilyId::Star, n)?;
            let s = MultiGraph::from_graph(&star, 1).subdivide();
            let keep: Vec<usize> = (0..s.n()).filter(|&v| v != n).collect();
            s.induced(&keep)
        }
    };
    Ok(g)
}

/// Closed-form value `a·size + b` of a known cell, as `(a, b)`.
fn cell(f: FamilyId, p: ParameterId) -> Option<(u64, i64)> {
    let col = p.index()?;
    if col > 13 {
        return None;
    }
    // per family: thirteen cells, "-" when unknown, else "a,b"
    let row: [&str; 13] = match f {
        FamilyId::KK2 => ["1,0", "2,0", "2,0", "2,0", "4,0", "2,0", "2,0", "-", "2,0", "2,0", "2,0", "-", "2,0"],
        FamilyId::KC4 => ["2,0", "2,0", "2,0", "-", "4,0", "2,0", "-", "4,0", "2,0", "2,0", "4,0", "4,0", "3,0"],
        FamilyId::KnStarStar => {
            ["1,-1", "1,-1", "1,0", "1,0", "1,0", "1,0", "1,0", "1,0", "2,-2", "-", "-", "-", "2,-2"]
        }
        FamilyId::KH => ["-", "2,0", "4,0", "4,0", "4,0", "-", "-", "-", "4,0", "-", "-", "-", "4,0"],
        FamilyId::KK44 => ["-", "-", "4,0", "4,0", "4,0", "4,0", "4,0", "4,0", "4,0", "4,0", "4,0", "4,0", "4,0"],
        FamilyId::F3 => ["-", "-", "-", "-", "-", "-", "1,1", "2,1", "-", "-", "1,1", "-", "-"],
        FamilyId::F4 => ["-", "-", "1,1", "2,1", "-", "1,1", "2,1", "3,1", "1,1", "1,1", "-", "-", "-"],
        FamilyId::Star => ["0,1", "0,2", "0,2", "0,2", "0,4", "1,0", "1,1", "-", "0,2", "1,0", "1,1", "-", "0,2"],
        FamilyId::SubdividedK3Multi => ["-", "-", "-", "-", "-", "0,3", "0,5", "0,6", "-", "1,3", "1,4", "-", "-"],
        FamilyId::Q => ["0,2", "0,4", "0,4", "0,4", "0,8", "-", "-", "2,2", "0,4", "-", "-", "-", "0,4"],
        FamilyId::T => ["0,3", "0,5", "0,5", "0,6", "0,8", "0,5", "0,6", "0,8", "0,6", "0,6", "0,6", "1,9", "0,6"],
        FamilyId::SubdividedOddClique => ["-", "3,1", "2,1", "-", "-", "2,1", "-", "-", "-", "-", "-", "-", "-"],
        FamilyId::SubdividedDoubledClique => ["-", "-", "1,0", "-", "-", "1,0", "-", "-", "-", "-", "-", "-", "2,-1"],
        FamilyId::SubdividedStarMinus => ["1,0", "-", "-", "2,0", "-", "-", "-", "-", "-", "-", "-", "-", "1,1"],
    };
    let s = row[col - 1];
    if s == "-" {
        return None;
    }
    let (a, b) = s.split_once(',').expect("a,b");
    Some((a.parse().expect("int"), b.parse().expect("int")))
}

/// Known value of `p` on the family member of the given size. Unknown
/// cells are `None`, except that a parameter undefined on the graph is
/// `Infinite`.
pub fn expected_value(f: FamilyId, size: usize, p: ParameterId) -> Option<Value> {
    if let Some((a, b)) = cell(f, p) {
        return Some(Value::Finite((a as i64 * size as i64 + b) as u64));
    }
    let g = generate(f, size).ok()?;
    (!defined_on(p, &g)).then_some(Value::Infinite)
}

/// All `(parameter, value)` pairs with a known value on the member.
pub fn known_values(f: FamilyId, size: usize) -> Vec<(ParameterId, Value)> {
    crate::feasibility::MAIN.iter().filter_map(|&p| expected_value(f, size, p).map(|v| (p, v))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let g = generate(FamilyId::F4, 3).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.degree(0), 6);
        let q = generate(FamilyId::Q, 3).unwrap();
        assert_eq!(q.n(), 8);
        assert_eq!((q.degree(0), q.degree(1)), (3, 3));
        let k = generate(FamilyId::KnStarStar, 3).unwrap();
        assert_eq!(k.n(), 9);
        assert!((3..9).all(|v| k.degree(v) == 2));
        assert_eq!(expected_value(FamilyId::KnStarStar, 4, ParameterId::RainbowW2), Some(Value::Finite(6)));
        assert_eq!(expected_value(FamilyId::F3, 3, ParameterId::GammaX2), Some(Value::Finite(4)));
        assert_eq!(expected_value(FamilyId::KK2, 2, ParameterId::GammaTX2), Some(Value::Infinite));
        assert_eq!(expected_value(FamilyId::KC4, 2, ParameterId::GammaSet2), None);
        assert_eq!(expected_value(FamilyId::T, 3, ParameterId::RainbowTX2), Some(Value::Finite(12)));
    }

    #[test]
    fn thresholds_and_names() {
        assert!(matches!(generate(FamilyId::KnStarStar, 2), Err(DomError::SizeBelowThreshold { .. })));
        for f in FamilyId::ALL {
            assert_eq!(f.name().parse::<FamilyId>().unwrap(), f);
        }
    }

    #[test]
    fn structure() {
        let t = generate(FamilyId::T, 2).unwrap();
        assert_eq!((t.n(), t.m()), (12, 3 + 5 + 10));
        let s = generate(FamilyId::SubdividedStarMinus, 4).unwrap();
        assert_eq!((s.n(), s.m()), (8, 7));
        let y = generate(FamilyId::SubdividedK3Multi, 3).unwrap();
        assert_eq!((y.n(), y.m()), (12, 18));
        let z = generate(FamilyId::SubdividedDoubledClique, 3).unwrap();
        assert_eq!((z.n(), z.m()), (9, 12));
    }
}
