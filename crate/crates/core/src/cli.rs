//! Command-line front end. `run` parses arguments, dispatches, and returns
//! the exit code with everything destined for stdout and stderr.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value as Json};

use crate::approx::try_approximate;
use crate::audit::{
    all_values, assignment, audit_values, entry, no_bound_evidence, sharpness_assignments, sharpness_check, BoundKind,
    SharpnessAssignment,
};
use crate::error::{DomError, Result};
use crate::exact::{solve, solve_cover, solve_disjoint, Solution, Value};
use crate::families::{generate, FamilyId};
use crate::feasibility::{label_str, parse_label, ParameterId, Witness};
use crate::graph::{Graph, MultiGraph};
use crate::reductions::{hypergraph_to_split, set_cover_to_split, Hypergraph, SetCoverInstance};
use crate::transforms::{self, composed_bound, route_steps, TransformId, Q};

#[derive(Parser, Debug)]
#[command(name = "dominion", version, about = "Exact, approximate and transformed graph domination parameters")]
struct Cli {
    /// Output format for structured results
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact value of a parameter
    Compute(ComputeArgs),
    /// Greedy approximation with its proven ratio
    Approx(ParamGraph),
    /// Map a witness along a bound-table entry
    Transform(TransformArgs),
    /// Write a member of a graph family
    Generate(GenerateArgs),
    /// Check every applicable bound on a graph or a seeded random corpus
    Audit(AuditArgs),
    /// Check that bounds are attained on their sharpness families
    Sharpness(SharpnessArgs),
    /// Build the split-graph gadget of a set cover or hypergraph instance
    Reduce(ReduceArgs),
    /// Edge cover, double edge cover and vertex 2-cover numbers
    Covers(CoversArgs),
    /// Cross-check the rainbow and Gallai identities on a graph
    Identities(GraphArg),
}

#[derive(Args, Debug)]
struct GraphArg {
    /// Graph file (`p edge n m` header, `e u v` lines, 1-indexed)
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args, Debug)]
struct ParamGraph {
    /// Parameter name, e.g. gamma_t or rgamma_x2
    #[arg(long)]
    param: String,
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    target: ParamGraph,
    /// Include an optimal witness
    #[arg(long)]
    witness: bool,
    /// Branch node budget
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct TransformArgs {
    /// Table cell as `row,col`
    #[arg(long)]
    entry: String,
    #[arg(long)]
    graph: PathBuf,
    /// Source witness as a JSON array, inline or a file path
    #[arg(long)]
    witness: String,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    /// Family name, e.g. Kn**, kC4, Fn4
    #[arg(long)]
    family: String,
    #[arg(long)]
    size: usize,
    /// Destination file; the graph is printed when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct AuditArgs {
    #[arg(long, conflicts_with = "random")]
    graph: Option<PathBuf>,
    /// Audit this many seeded random graphs instead
    #[arg(long)]
    random: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct SharpnessArgs {
    /// Every assigned cell
    #[arg(long, conflicts_with = "entry")]
    all: bool,
    /// A single cell as `row,col`
    #[arg(long)]
    entry: Option<String>,
    #[arg(long, default_value_t = 5)]
    max_size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReduceKind {
    Setcover,
    Hyp2col,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    kind: ReduceKind,
    /// Instance JSON: `{"ground": n, "sets": [[...], ...]}`
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CoversArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Replace every edge by this many parallel copies
    #[arg(long, default_value_t = 1)]
    multiplicity: usize,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => Outcome { code: 0, stdout: out, stderr: String::new() },
        Err(e) => Outcome { code: 1, stdout: format!("{}\n", json!({ "error": e.to_string() })), stderr: String::new() },
    }
}

fn dispatch(cli: &Cli) -> Result<String> {
    let data = match &cli.command {
        Command::Compute(a) => compute(a)?,
        Command::Approx(a) => approx(a)?,
        Command::Transform(a) => transform(a)?,
        Command::Generate(a) => return generate_cmd(a, cli.format),
        Command::Audit(a) => audit(a)?,
        Command::Sharpness(a) => sharpness(a)?,
        Command::Reduce(a) => reduce(a)?,
        Command::Covers(a) => covers(a)?,
        Command::Identities(a) => identities(&read_graph(&a.graph)?),
    };
    Ok(render(&data, cli.format))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| DomError::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| DomError::Io(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::from_text(&read(path)?)
}

fn parse_entry(s: &str) -> Result<(usize, usize)> {
    let bad = || DomError::Parse(format!("entry {s:?} is not `row,col`"));
    let (r, c) = s.split_once(',').ok_or_else(bad)?;
    let r: usize = r.trim().parse().map_err(|_| bad())?;
    let c: usize = c.trim().parse().map_err(|_| bad())?;
    if !(1..=15).contains(&r) || !(1..=15).contains(&c) {
        return Err(bad());
    }
    Ok((r, c))
}

pub fn value_json(v: Value) -> Json {
    match v {
        Value::Finite(x) => json!(x),
        Value::Infinite => json!("infinity"),
    }
}

pub fn witness_json(w: &Witness) -> Json {
    match w {
        Witness::Rainbow(v) => Json::Array(v.iter().map(|&x| json!(label_str(x))).collect()),
        _ => json!(w.values()),
    }
}

/// Reads a witness for `p`: integers for integer parameters, label strings
/// (`""`, `"a"`, `"b"`, `"ab"`) for rainbow ones.
pub fn parse_witness(p: ParameterId, text: &str) -> Result<Witness> {
    let j: Json = serde_json::from_str(text).map_err(|e| DomError::Parse(format!("witness: {e}")))?;
    let items = j.as_array().ok_or_else(|| DomError::Parse("witness must be a JSON array".into()))?;
    if p.is_rainbow() {
        let labels = items
            .iter()
            .map(|x| x.as_str().ok_or_else(|| DomError::Parse("rainbow labels are strings".into())).and_then(parse_label))
            .collect::<Result<Vec<u8>>>()?;
        Ok(Witness::Rainbow(labels))
    } else {
        let values = items
            .iter()
            .map(|x| {
                x.as_u64()
                    .filter(|&v| v <= u8::MAX as u64)
                    .map(|v| v as u8)
                    .ok_or_else(|| DomError::Parse("witness values are small integers".into()))
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Witness::Int(values))
    }
}

fn solution_json(sol: &Solution, with_witness: bool) -> Json {
    let mut m = Map::new();
    m.insert("value".into(), value_json(sol.value));
    if with_witness {
        m.insert("witness".into(), sol.witness.as_ref().map_or(Json::Null, witness_json));
    }
    Json::Object(m)
}

fn compute(a: &ComputeArgs) -> Result<Json> {
    let p: ParameterId = a.target.param.parse()?;
    let g = read_graph(&a.target.graph)?;
    Ok(solution_json(&solve(p, &g, a.budget)?, a.witness))
}

fn approx(a: &ParamGraph) -> Result<Json> {
    let p: ParameterId = a.param.parse()?;
    let g = read_graph(&a.graph)?;
    let r = try_approximate(p, &g)?;
    Ok(json!({ "weight": r.weight, "ratio_bound": r.ratio_bound, "witness": witness_json(&r.witness) }))
}

fn transform(a: &TransformArgs) -> Result<Json> {
    let (r, c) = parse_entry(&a.entry)?;
    let g = read_graph(&a.graph)?;
    let text = if a.witness.trim_start().starts_with('[') { a.witness.clone() } else { read(Path::new(&a.witness))? };
    let steps = match TransformId::lookup(r, c) {
        Some(t) => vec![t],
        None if r <= 13 && c <= 13 => route_steps(r, c),
        None => Vec::new(),
    };
    let Some(first) = steps.first() else {
        return Err(DomError::Unsupported(format!("no transform for entry ({r},{c})")));
    };
    let src = parse_witness(first.source(), &text)?;
    let out = transforms::apply_chain(&steps, &g, &src)?;
    let target = steps.last().expect("nonempty").target();
    let feasible = crate::feasibility::is_feasible(target, &g, &out)?;
    let (ka, kb) = composed_bound(&steps);
    let sw = crate::feasibility::witness_weight(&src);
    let tw = crate::feasibility::witness_weight(&out);
    let limit = ka * Q::from_integer(sw as i64) + kb;
    Ok(json!({
        "witness": witness_json(&out),
        "report": {
            "entry": format!("({r},{c})"),
            "steps": steps.iter().map(|t| t.label()).collect::<Vec<_>>(),
            "source_weight": sw,
            "target_weight": tw,
            "bound": limit.to_string(),
            "feasible": feasible,
            "pass": feasible && Q::from_integer(tw as i64) <= limit,
        }
    }))
}

fn generate_cmd(a: &GenerateArgs, format: Format) -> Result<String> {
    let f: FamilyId = a.family.parse()?;
    let g = generate(f, a.size)?;
    match &a.out {
        None => Ok(g.to_text()),
        Some(path) => {
            write(path, &g.to_text())?;
            Ok(render(&json!({ "family": f.name(), "size": a.size, "n": g.n(), "m": g.m() }), format))
        }
    }
}

fn audit_one(g: &Graph, budget: Option<u64>) -> Result<Vec<Json>> {
    let values = all_values(g, budget)?;
    Ok(audit_values(g, &values).into_iter().map(|v| serde_json::to_value(v).expect("serializable")).collect())
}

fn audit(a: &AuditArgs) -> Result<Json> {
    match (&a.graph, a.random) {
        (Some(path), _) => Ok(Json::Array(audit_one(&read_graph(path)?, a.budget)?)),
        (None, Some(count)) => {
            let mut out = Vec::new();
            for i in 0..count {
                let n = 2 + (i % 7) as usize;
                let p = [0.2, 0.5, 0.8][(i % 3) as usize];
                let g = Graph::random(n, p, a.seed.wrapping_mul(1_000_003).wrapping_add(i));
                for mut v in audit_one(&g, a.budget)? {
                    v.as_object_mut().expect("object").insert("graph".into(), json!(i));
                    out.push(v);
                }
            }
            Ok(Json::Array(out))
        }
        (None, None) => Err(DomError::Parse("audit needs --graph or --random".into())),
    }
}

fn sharpness_rows(s: &SharpnessAssignment, max_size: usize) -> Result<Vec<Json>> {
    let cell = entry(s.row, s.col);
    if cell.kind == BoundKind::NoBound {
        let r = no_bound_evidence(s)?;
        let mut j = serde_json::to_value(r).expect("serializable");
        j.as_object_mut().expect("object").insert("kind".into(), json!("no_bound"));
        return Ok(vec![j]);
    }
    let mut out = Vec::new();
    for size in s.sizes().filter(|&k| k <= max_size) {
        let mut j = serde_json::to_value(sharpness_check(s, size)?).expect("serializable");
        j.as_object_mut().expect("object").insert("kind".into(), json!("sharp"));
        out.push(j);
    }
    Ok(out)
}

fn sharpness(a: &SharpnessArgs) -> Result<Json> {
    let cells: Vec<SharpnessAssignment> = match (&a.entry, a.all) {
        (Some(e), _) => {
            let (r, c) = parse_entry(e)?;
            vec![assignment(r, c).ok_or_else(|| DomError::Unsupported(format!("no family assigned to ({r},{c})")))?]
        }
        (None, true) => sharpness_assignments(),
        (None, false) => return Err(DomError::Parse("sharpness needs --all or --entry".into())),
    };
    let mut rows = Vec::new();
    for s in &cells {
        rows.extend(sharpness_rows(s, a.max_size)?);
    }
    Ok(Json::Array(rows))
}

fn reduce(a: &ReduceArgs) -> Result<Json> {
    let text = read(&a.input)?;
    let parse_err = |e: serde_json::Error| DomError::Parse(format!("instance: {e}"));
    let (graph, summary) = match a.kind {
        ReduceKind::Setcover => {
            let j: SetCoverInstance = serde_json::from_str(&text).map_err(parse_err)?;
            let gadget = set_cover_to_split(&j)?;
            let p = gadget.partition();
            let s = json!({ "kind": "setcover", "n": gadget.graph.n(), "m": gadget.graph.m(),
                            "clique": p.clique, "independent": p.independent });
            (gadget.graph, s)
        }
        ReduceKind::Hyp2col => {
            let h: Hypergraph = serde_json::from_str(&text).map_err(parse_err)?;
            let gadget = hypergraph_to_split(&h)?;
            let s = json!({ "kind": "hyp2col", "n": gadget.graph.n(), "m": gadget.graph.m(),
                            "clique": gadget.clique, "independent": gadget.edge_vertices });
            (gadget.graph, s)
        }
    };
    match &a.out {
        Some(path) => write(path, &graph.to_text())?,
        None => return Ok(json!({ "summary": summary, "graph": graph.to_text() })),
    }
    Ok(summary)
}

fn covers(a: &CoversArgs) -> Result<Json> {
    let g = read_graph(&a.graph)?;
    let m = MultiGraph::from_graph(&g, a.multiplicity);
    let rho = solve_cover(ParameterId::Rho, &m)?.value;
    let rho2 = solve_cover(ParameterId::Rho2, &m)?.value;
    let tau2 = solve_cover(ParameterId::Tau2, &m)?.value;
    Ok(json!({ "rho": value_json(rho), "rho_2": value_json(rho2), "tau_2": value_json(tau2) }))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn identities(g: &Graph) -> Json {
    use ParameterId::*;
    let mut rows = Vec::new();
    for (rainbow, pair) in [(RainbowX2, GammaGamma), (RainbowTX2, GammaTGammaT)] {
        let lhs = solve(rainbow, g, None).map(|s| s.value).unwrap_or(Value::Infinite);
        let rhs = solve_disjoint(pair, g).value;
        rows.push(json!({ "identity": format!("{} = {}", rainbow.name(), pair.name()),
                          "lhs": value_json(lhs), "rhs": value_json(rhs), "status": verdict(lhs == rhs) }));
    }
    for (rainbow, base) in [(RainbowSet2, Gamma), (RainbowTSet2, GammaT)] {
        let lhs = solve(rainbow, g, None).map(|s| s.value).unwrap_or(Value::Infinite);
        let rhs = solve(base, g, None).map(|s| s.value).unwrap_or(Value::Infinite);
        let doubled = match rhs {
            Value::Finite(x) => Value::Finite(2 * x),
            Value::Infinite => Value::Infinite,
        };
        rows.push(json!({ "identity": format!("{} = 2 {}", rainbow.name(), base.name()),
                          "lhs": value_json(lhs), "rhs": value_json(doubled), "status": verdict(lhs == doubled) }));
    }
    let m = MultiGraph::from_graph(g, 1);
    let rho2 = solve_cover(Rho2, &m).map(|s| s.value).unwrap_or(Value::Infinite);
    let tau2 = solve_cover(Tau2, &m).map(|s| s.value).unwrap_or(Value::Infinite);
    let status = if g.n() > 0 && g.min_degree() == 0 {
        "skipped"
    } else {
        verdict(rho2.finite().zip(tau2.finite()).map(|(a, b)| a + b) == Some(2 * g.n() as u64))
    };
    rows.push(json!({ "identity": "rho_2 + tau_2 = 2n", "lhs": value_json(rho2), "rhs": value_json(tau2),
                      "n": g.n(), "status": status }));
    Json::Array(rows)
}

fn csv_field(v: &Json) -> String {
    let s = match v {
        Json::String(s) => s.clone(),
        Json::Null => String::new(),
        other => other.to_string(),
    };
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

/// JSON on one line, or CSV: a header plus one row per array element, or
/// `key,value` rows for a single object.
fn render(data: &Json, format: Format) -> String {
    match format {
        Format::Json => format!("{data}\n"),
        Format::Csv => {
            let mut out = String::new();
            match data {
                Json::Array(rows) => {
                    let mut keys: Vec<String> = Vec::new();
                    for r in rows {
                        if let Json::Object(m) = r {
                            for k in m.keys() {
                                if !keys.contains(k) {
                                    keys.push(k.clone());
                                }
                            }
                        }
                    }
                    out.push_str(&keys.join(","));
                    out.push('\n');
                    for r in rows {
                        let cells: Vec<String> = keys.iter().map(|k| csv_field(r.get(k).unwrap_or(&Json::Null))).collect();
                        out.push_str(&cells.join(","));
                        out.push('\n');
                    }
                }
                Json::Object(m) => {
                    out.push_str("key,value\n");
                    for (k, v) in m {
                        out.push_str(&format!("{},{}\n", csv_field(&json!(k)), csv_field(v)));
                    }
                }
                other => {
                    out.push_str(&csv_field(other));
                    out.push('\n');
                }
            }
            out
        }
    }
}
