//! The 13×13 bound table, its sharpness families, and engines that check
//! both against exact values.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::exact::{solve, Value};
use crate::families::{generate, FamilyId};
use crate::feasibility::{ParameterId, MAIN};
use crate::graph::Graph;
use crate::transforms::{hasse13, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    All,
    AtLeastOneEdge,
    NotK1,
}

impl Condition {
    pub fn holds(self, g: &Graph) -> bool {
        match self {
            Condition::All => true,
            Condition::AtLeastOneEdge => g.m() >= 1,
            Condition::NotK1 => g.n() != 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Equal,
    Linear { a: Q, b: Q },
    NoBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundEntry {
    pub row: ParameterId,
    pub col: ParameterId,
    pub kind: BoundKind,
    pub condition: Condition,
}

impl BoundEntry {
    /// Upper bound on the row parameter given the column value.
    pub fn limit(&self, col_value: u64) -> Option<Q> {
        let x = Q::from_integer(col_value as i64);
        match self.kind {
            BoundKind::Equal => Some(x),
            BoundKind::Linear { a, b } => Some(a * x + b),
            BoundKind::NoBound => None,
        }
    }
}

impl fmt::Display for BoundEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BoundKind::Equal => write!(f, "=")?,
            BoundKind::NoBound => write!(f, "NB")?,
            BoundKind::Linear { a, b } => {
                write!(f, "{a}x")?;
                if b > Q::from_integer(0) {
                    write!(f, "+{b}")?;
                } else if b < Q::from_integer(0) {
                    write!(f, "{b}")?;
                }
            }
        }
        match self.condition {
            Condition::All => Ok(()),
            Condition::AtLeastOneEdge => write!(f, "*"),
            Condition::NotK1 => write!(f, "!"),
        }
    }
}

// a row per parameter; cells "a" or "a,b" with a, b possibly fractional,
// "=" on the diagonal, "N" for no bound; a trailing '*' requires an edge and
// '!' excludes K1
const TABLE: [&str; 13] = [
    "= 1 1 1,-1 1,-1 1 1,-1 1,-1 1 1 1/2 1/2 1,-1*",
    "2 = 3/2,-1/2 1 1,-1 3/2,-1/2 1 1,-1 1 1 1 1/2 1",
    "2 2 = 1 1 1 1 1 1 1 1 1 1",
    "2 2 2,-1* = 1 2,-1* 1 1 2,-1* 2,-1* 1 1 2,-2*",
    "4 2 2 2 = 2 2 1 2 2 2 1 2",
    "N N N N N = 1 1 N 1 1 1 N",
    "N N N N N 2,-1 = 1 N 2,-1 1 1 N",
    "N N N N N 3,-2 2,-1 = N 3,-2 2,-1 1 N",
    "2 2 2,-2! 2,-2 2,-2 2,-2! 2,-2 2,-2 = 1 1 1 1",
    "N N N N N N N N N = 1 1 N",
    "N N N N N N N N N 2 = 1 N",
    "N N N N N N N N N N N = N",
    "2 2 2,-1 2,-2 2,-2 2,-1 2,-2 2,-2 3/2 3/2 1 1 =",
];

fn parse_q(s: &str) -> Q {
    match s.split_once('/') {
        Some((n, d)) => Q::new(n.parse().expect("numerator"), d.parse().expect("denominator")),
        None => Q::from_integer(s.parse().expect("integer")),
    }
}

fn parse_cell(row: usize, col: usize, cell: &str) -> BoundEntry {
    let (body, condition) = if let Some(b) = cell.strip_suffix('*') {
        (b, Condition::AtLeastOneEdge)
    } else if let Some(b) = cell.strip_suffix('!') {
        (b, Condition::NotK1)
    } else {
        (cell, Condition::All)
    };
    let kind = match body {
        "=" => BoundKind::Equal,
        "N" => BoundKind::NoBound,
        _ => {
            let (a, b) = body.split_once(',').unwrap_or((body, "0"));
            BoundKind::Linear { a: parse_q(a), b: parse_q(b) }
        }
    };
    BoundEntry { row: MAIN[row], col: MAIN[col], kind, condition }
}

/// The full bound table, indexed `[row-1][col-1]`.
pub fn bound_table() -> Vec<Vec<BoundEntry>> {
    TABLE
        .iter()
        .enumerate()
        .map(|(r, line)| line.split(' ').enumerate().map(|(c, cell)| parse_cell(r, c, cell)).collect())
        .collect()
}

pub fn entry(row: usize, col: usize) -> BoundEntry {
    bound_table()[row - 1][col - 1]
}

/// One line per row, cells separated by tabs.
pub fn render_table() -> String {
    let mut out = String::new();
    for row in bound_table() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&cells.join("\t"));
        out.push('\n');
    }
    out
}

/// FNV-1a hash of the rendered table.
pub fn table_checksum() -> u64 {
    render_table().bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub row: usize,
    pub col: usize,
    pub row_value: String,
    pub col_value: String,
    pub bound: String,
}

/// Exact values of the thirteen parameters, solved in parallel.
pub fn all_values(g: &Graph, budget: Option<u64>) -> Result<Vec<Value>> {
    MAIN.par_iter().map(|&p| solve(p, g, budget).map(|s| s.value)).collect()
}

/// Checks every applicable bound on `g`; an empty list means all hold.
pub fn audit_graph(g: &Graph, budget: Option<u64>) -> Result<Vec<Violation>> {
    let values = all_values(g, budget)?;
    Ok(audit_values(g, &values))
}

pub fn audit_values(g: &Graph, values: &[Value]) -> Vec<Violation> {
    let mut out = Vec::new();
    let edgeless = g.m() == 0;
    for row in bound_table() {
        for e in row {
            let (r, c) = (e.row.index().unwrap(), e.col.index().unwrap());
            if !e.condition.holds(g) {
                continue;
            }
            let (Value::Finite(rv), Value::Finite(cv)) = (values[r - 1], values[c - 1]) else { continue };
            let Some(limit) = e.limit(cv) else { continue };
            let rq = Q::from_integer(rv as i64);
            let ok = match e.kind {
                BoundKind::Equal => rq == limit,
                _ => rq <= limit,
            };
            if !ok {
                out.push(Violation { row: r, col: c, row_value: rv.to_string(), col_value: cv.to_string(), bound: e.to_string() });
            }
        }
    }
    if edgeless && g.n() > 0 {
        // without edges: γ = γR and γ{2} = 2γw2 = 2γ2 = 2γ̃w2 = 2γ̃2 = 2γR
        let v = |i: usize| values[i - 1].finite().unwrap_or(u64::MAX);
        let mut check = |r: usize, c: usize, factor: u64| {
            if v(r) != factor * v(c) {
                out.push(Violation {
                    row: r,
                    col: c,
                    row_value: v(r).to_string(),
                    col_value: v(c).to_string(),
                    bound: format!("={factor}x (edgeless)"),
                });
            }
        };
        check(1, 13, 1);
        for c in [3, 6, 9, 10, 13] {
            check(4, c, 2);
        }
    }
    out
}

/// A family that attains a bound, or witnesses that none exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SharpnessAssignment {
    pub row: usize,
    pub col: usize,
    pub family: FamilyId,
    /// sharpness established only in the at-least-one-edge regime
    pub bracketed: bool,
}

impl SharpnessAssignment {
    pub fn sizes(&self) -> std::ops::RangeInclusive<usize> {
        let lo = self.family.min_size();
        if self.family.is_multiple() {
            lo..=3
        } else {
            lo.max(3)..=5
        }
    }
}

const FAMILIES: [&str; 13] = [
    "= kC4 kC4 Kn** Kn** kC4 Kn** Kn** kC4 kC4 kK2 kC4 [S(K1n)-]",
    "kK2 = S(K2n+1) kK2 Kn** S(K2n+1) kK2 Kn** kK2 kK2 kK2 kC4 kK2",
    "kK2 kH = kK2 kH kK2 kK2 Kn** kK2 kK2 kK2 kK44 kK2",
    "kK2 kH [Fn4] = Kn** [Fn4] kK2 Kn** [Fn4] [Fn4] kK2 kK44 [S(K1n)-]",
    "kK2 kK2 kK2 kK2 = kK2 kK2 Kn** kK2 kK2 kK2 kC4 kK2",
    "K1n K1n K1n K1n K1n = kK2 Kn** K1n kK2 kK2 kK44 K1n",
    "K1n K1n K1n K1n K1n Fn4 = Kn** K1n Fn4 kK2 kK44 K1n",
    "Qn Qn Qn Qn Qn Fn4 Fn3 = Qn Fn4 Fn3 kC4 Qn",
    "kK2 kH Kn** Kn** Kn** Kn** Kn** Kn** = kK2 kK2 kK44 kK2",
    "K1n K1n K1n K1n K1n S(K3n) S(K3n) S(K3n) K1n = kK2 kK44 K1n",
    "K1n K1n K1n K1n K1n S(K3n) S(K3n) S(K3n) K1n kC4 = kC4 K1n",
    "Tn Tn Tn Tn Tn Tn Tn Tn Tn Tn Tn = Tn",
    "kK2 kH S(Kn2) Kn** Kn** S(Kn2) Kn** Kn** kC4 kC4 kK2 kK44 =",
];

/// Family assignments for all off-diagonal cells.
pub fn sharpness_assignments() -> Vec<SharpnessAssignment> {
    let mut out = Vec::new();
    for (r, line) in FAMILIES.iter().enumerate() {
        for (c, cell) in line.split(' ').enumerate() {
            if cell == "=" {
                continue;
            }
            let bracketed = cell.starts_with('[');
            let name = cell.trim_start_matches('[').trim_end_matches(']');
            let family = name.parse().expect("known family");
            out.push(SharpnessAssignment { row: r + 1, col: c + 1, family, bracketed });
        }
    }
    out
}

pub fn assignment(row: usize, col: usize) -> Option<SharpnessAssignment> {
    sharpness_assignments().into_iter().find(|s| s.row == row && s.col == col)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpnessReport {
    pub row: usize,
    pub col: usize,
    pub family: String,
    pub size: usize,
    pub row_value: String,
    pub col_value: String,
    pub bound: String,
    pub pass: bool,
}

/// Checks that the bound of the assignment's cell holds with equality on
/// the family member of the given size.
pub fn sharpness_check(s: &SharpnessAssignment, size: usize) -> Result<SharpnessReport> {
    let g = generate(s.family, size)?;
    let e = entry(s.row, s.col);
    let rv = solve(MAIN[s.row - 1], &g, None)?.value;
    let cv = solve(MAIN[s.col - 1], &g, None)?.value;
    let pass = match (rv, cv, e.kind) {
        (Value::Finite(r), Value::Finite(c), BoundKind::Linear { .. }) => {
            Some(Q::from_integer(r as i64)) == e.limit(c)
        }
        _ => false,
    };
    Ok(SharpnessReport {
        row: s.row,
        col: s.col,
        family: s.family.name().into(),
        size,
        row_value: rv.to_string(),
        col_value: cv.to_string(),
        bound: e.to_string(),
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NoBoundReport {
    pub row: usize,
    pub col: usize,
    pub family: String,
    pub row_values: Vec<String>,
    pub col_values: Vec<String>,
    pub pass: bool,
}

/// Evidence for a missing bound: on sizes 3, 4, 5 the row parameter grows
/// strictly while the column parameter stays fixed.
pub fn no_bound_evidence(s: &SharpnessAssignment) -> Result<NoBoundReport> {
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    for size in 3..=5 {
        let g = generate(s.family, size)?;
        rows.push(solve(MAIN[s.row - 1], &g, None)?.value);
        cols.push(solve(MAIN[s.col - 1], &g, None)?.value);
    }
    let finite = rows.iter().chain(&cols).all(|v| v.finite().is_some());
    let growing = rows.windows(2).all(|w| w[0].finite() < w[1].finite());
    let fixed = cols.windows(2).all(|w| w[0] == w[1]);
    Ok(NoBoundReport {
        row: s.row,
        col: s.col,
        family: s.family.name().into(),
        row_values: rows.iter().map(|v| v.to_string()).collect(),
        col_values: cols.iter().map(|v| v.to_string()).collect(),
        pass: finite && growing && fixed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Structure {
    /// `(lower, upper)` covering pairs of the pointwise order
    pub covering_pairs: Vec<(usize, usize)>,
    /// equivalence classes of mutual boundedness, from bottom to top
    pub classes: Vec<Vec<usize>>,
    pub linear: bool,
}

/// Covering pairs and the classes of the boundedness preorder, where `ρ`
/// sits below `ρ′` when the table bounds `ρ` by a function of `ρ′`.
pub fn hasse_and_classes() -> Structure {
    let t = bound_table();
    let mut reach = [[false; 13]; 13];
    for r in 0..13 {
        for c in 0..13 {
            reach[r][c] = t[r][c].kind != BoundKind::NoBound;
        }
    }
    for k in 0..13 {
        for i in 0..13 {
            for j in 0..13 {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut placed = [false; 13];
    for i in 0..13 {
        if placed[i] {
            continue;
        }
        let class: Vec<usize> = (0..13).filter(|&j| reach[i][j] && reach[j][i]).collect();
        for &j in &class {
            placed[j] = true;
        }
        classes.push(class.iter().map(|&j| j + 1).collect());
    }
    // a class lies lower when it is bounded by more classes
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    classes.sort_by_key(|c| std::cmp::Reverse(reps.iter().filter(|&&d| reach[c[0] - 1][d - 1]).count()));
    let linear = classes.windows(2).all(|w| reach[w[0][0] - 1][w[1][0] - 1] && !reach[w[1][0] - 1][w[0][0] - 1]);
    Structure { covering_pairs: hasse13(), classes, linear }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(entry(2, 3).kind, BoundKind::Linear { a: Q::new(3, 2), b: Q::new(-1, 2) });
        assert_eq!(entry(6, 1).kind, BoundKind::NoBound);
        assert_eq!(entry(1, 1).kind, BoundKind::Equal);
        assert_eq!(entry(9, 3).condition, Condition::NotK1);
        assert_eq!(entry(4, 13).condition, Condition::AtLeastOneEdge);
    }

    #[test]
    fn table_shape() {
        let t = bound_table();
        let nb = t.iter().flatten().filter(|e| e.kind == BoundKind::NoBound).count();
        assert_eq!(nb, 53);
        for (i, row) in t.iter().enumerate() {
            assert_eq!(row.len(), 13);
            assert_eq!(row[i].kind, BoundKind::Equal);
            for e in row {
                if let BoundKind::Linear { a, .. } = e.kind {
                    assert!(a > Q::from_integer(0));
                }
            }
        }
        let stars = t.iter().flatten().filter(|e| e.condition == Condition::AtLeastOneEdge).count();
        assert_eq!(stars, 6);
    }

    #[test]
    fn c4_audit_is_clean() {
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(audit_graph(&c4, None).unwrap().is_empty());
        assert!(audit_graph(&Graph::empty(3), None).unwrap().is_empty());
    }

    #[test]
    fn structure() {
        let s = hasse_and_classes();
        assert_eq!(s.classes, vec![vec![1, 2, 3, 4, 5, 9, 13], vec![6, 7, 8], vec![10, 11], vec![12]]);
        assert!(s.linear);
        assert!(s.covering_pairs.contains(&(1, 3)));
    }
}
