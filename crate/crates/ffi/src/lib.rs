//! C ABI over the dominion library.
//!
//! Graphs live behind opaque `DomGraph` handles created by the library and
//! released with `dom_graph_free`. Every fallible call returns a `DomStatus`
//! and writes results through out-pointers; out-pointers are left untouched
//! on failure. Parameters are addressed by their position in
//! `dom_param_name` order (0 = gamma, 1 = gamma_t, ...).

use std::ffi::{c_char, CStr};
use std::ptr;

use dominion::error::DomError;
use dominion::exact::{solve, Value};
use dominion::families::{generate, FamilyId};
use dominion::feasibility::{is_feasible, ParameterId, Witness, ALL};
use dominion::Graph;

/// Opaque graph handle.
pub struct DomGraph {
    graph: Graph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidGraph = 2,
    Parse = 3,
    UnknownParameter = 4,
    Undefined = 5,
    BudgetExhausted = 6,
    InfeasibleWitness = 7,
    BufferTooSmall = 8,
    Unsupported = 9,
    InvalidArgument = 10,
}

fn status_of(e: &DomError) -> DomStatus {
    match e {
        DomError::IndexOutOfRange { .. } | DomError::SelfLoop(_) => DomStatus::InvalidGraph,
        DomError::Parse(_) | DomError::Io(_) => DomStatus::Parse,
        DomError::UndefinedParameter(_) | DomError::IsolatedVertex(_) => DomStatus::Undefined,
        DomError::BudgetExhausted { .. } => DomStatus::BudgetExhausted,
        DomError::WitnessShapeMismatch(_) | DomError::CodomainViolation(_) | DomError::InfeasibleWitness => {
            DomStatus::InfeasibleWitness
        }
        DomError::Unsupported(_) | DomError::IdentityOnly(_) => DomStatus::Unsupported,
        _ => DomStatus::InvalidArgument,
    }
}

fn param(id: u32) -> Option<ParameterId> {
    ALL.get(id as usize).copied()
}

fn boxed(graph: Graph) -> *mut DomGraph {
    Box::into_raw(Box::new(DomGraph { graph }))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn dom_status_message(status: DomStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        DomStatus::Ok => b"ok\0",
        DomStatus::NullPointer => b"null pointer argument\0",
        DomStatus::InvalidGraph => b"invalid graph\0",
        DomStatus::Parse => b"parse error\0",
        DomStatus::UnknownParameter => b"unknown parameter\0",
        DomStatus::Undefined => b"parameter undefined on this graph\0",
        DomStatus::BudgetExhausted => b"node budget exhausted\0",
        DomStatus::InfeasibleWitness => b"witness is not feasible\0",
        DomStatus::BufferTooSmall => b"buffer too small\0",
        DomStatus::Unsupported => b"unsupported operation\0",
        DomStatus::InvalidArgument => b"invalid argument\0",
    };
    s.as_ptr() as *const c_char
}

/// Number of parameters addressable by id.
#[no_mangle]
pub extern "C" fn dom_param_count() -> u32 {
    ALL.len() as u32
}

/// Canonical name of parameter `id`, or null when out of range.
#[no_mangle]
pub extern "C" fn dom_param_name(id: u32) -> *const c_char {
    const NAMES: [&[u8]; 20] = [
        b"gamma\0",
        b"gamma_t\0",
        b"gamma_w2\0",
        b"gamma_set2\0",
        b"gamma_tset2\0",
        b"gamma_2\0",
        b"gamma_x2\0",
        b"gamma_tx2\0",
        b"rgamma_w2\0",
        b"rgamma_2\0",
        b"rgamma_x2\0",
        b"rgamma_tx2\0",
        b"gamma_r\0",
        b"rgamma_set2\0",
        b"rgamma_tset2\0",
        b"rho\0",
        b"rho_2\0",
        b"tau_2\0",
        b"gamma_gamma\0",
        b"gamma_t_gamma_t\0",
    ];
    NAMES.get(id as usize).map_or(ptr::null(), |s| s.as_ptr() as *const c_char)
}

/// Looks up a parameter id by name.
///
/// # Safety
/// `name` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn dom_param_from_name(name: *const c_char, out_id: *mut u32) -> DomStatus {
    if name.is_null() || out_id.is_null() {
        return DomStatus::NullPointer;
    }
    let Ok(s) = CStr::from_ptr(name).to_str() else { return DomStatus::Parse };
    match s.parse::<ParameterId>() {
        Ok(p) => {
            *out_id = ALL.iter().position(|&q| q == p).expect("listed") as u32;
            DomStatus::Ok
        }
        Err(_) => DomStatus::UnknownParameter,
    }
}

/// Builds a graph on `n` vertices from `m` edges stored as `2m` endpoint
/// ids in `edges` (0-indexed).
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or be null when `m` is 0).
#[no_mangle]
pub unsafe extern "C" fn dom_graph_new(n: usize, edges: *const u32, m: usize, out: *mut *mut DomGraph) -> DomStatus {
    if out.is_null() || (edges.is_null() && m > 0) {
        return DomStatus::NullPointer;
    }
    let raw = if m == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * m) };
    let pairs: Vec<(usize, usize)> = raw.chunks(2).map(|c| (c[0] as usize, c[1] as usize)).collect();
    match Graph::build(n, &pairs) {
        Ok(g) => {
            *out = boxed(g);
            DomStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Parses a graph in `p edge n m` / `e u v` text form.
///
/// # Safety
/// `text` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn dom_graph_from_text(text: *const c_char, out: *mut *mut DomGraph) -> DomStatus {
    if text.is_null() || out.is_null() {
        return DomStatus::NullPointer;
    }
    let Ok(s) = CStr::from_ptr(text).to_str() else { return DomStatus::Parse };
    match Graph::from_text(s) {
        Ok(g) => {
            *out = boxed(g);
            DomStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Builds a member of a named graph family.
///
/// # Safety
/// `family` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn dom_graph_family(family: *const c_char, size: usize, out: *mut *mut DomGraph) -> DomStatus {
    if family.is_null() || out.is_null() {
        return DomStatus::NullPointer;
    }
    let Ok(s) = CStr::from_ptr(family).to_str() else { return DomStatus::Parse };
    let Ok(f) = s.parse::<FamilyId>() else { return DomStatus::Parse };
    match generate(f, size) {
        Ok(g) => {
            *out = boxed(g);
            DomStatus::Ok
        }
        Err(_) => DomStatus::InvalidArgument,
    }
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dom_graph_free(g: *mut DomGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dom_graph_order(g: *const DomGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.n())
}

/// Edge count, 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dom_graph_size(g: *const DomGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.m())
}

/// Exact value of parameter `id`. `budget` 0 selects the default node
/// budget. `*out_finite` is 0 when the parameter is undefined on the graph
/// (then `*out_value` is 0). When `witness` is non-null and `witness_len`
/// is large enough, an optimal witness is written there: integer values,
/// or label bitmasks (1 = a, 2 = b) for rainbow parameters, one per vertex
/// (one per edge for edge covers).
///
/// # Safety
/// `g` must be a live handle; `witness` must point to `witness_len`
/// writable bytes when non-null.
#[no_mangle]
pub unsafe extern "C" fn dom_solve(
    g: *const DomGraph,
    id: u32,
    budget: u64,
    out_value: *mut u64,
    out_finite: *mut u8,
    witness: *mut u8,
    witness_len: usize,
) -> DomStatus {
    let Some(h) = g.as_ref() else { return DomStatus::NullPointer };
    if out_value.is_null() || out_finite.is_null() {
        return DomStatus::NullPointer;
    }
    let Some(p) = param(id) else { return DomStatus::UnknownParameter };
    let sol = match solve(p, &h.graph, (budget > 0).then_some(budget)) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    if let (false, Some(w)) = (witness.is_null(), &sol.witness) {
        if w.len() > witness_len {
            return DomStatus::BufferTooSmall;
        }
        ptr::copy_nonoverlapping(w.values().as_ptr(), witness, w.len());
    }
    match sol.value {
        Value::Finite(v) => {
            *out_value = v;
            *out_finite = 1;
        }
        Value::Infinite => {
            *out_value = 0;
            *out_finite = 0;
        }
    }
    DomStatus::Ok
}

/// Checks a vertex witness of `len` values against parameter `id`.
///
/// # Safety
/// `g` must be a live handle and `values` must point to `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn dom_is_feasible(
    g: *const DomGraph,
    id: u32,
    values: *const u8,
    len: usize,
    out_feasible: *mut u8,
) -> DomStatus {
    let Some(h) = g.as_ref() else { return DomStatus::NullPointer };
    if out_feasible.is_null() || (values.is_null() && len > 0) {
        return DomStatus::NullPointer;
    }
    let Some(p) = param(id) else { return DomStatus::UnknownParameter };
    let f = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(values, len).to_vec() };
    let w = if p.is_rainbow() { Witness::Rainbow(f) } else { Witness::Int(f) };
    match is_feasible(p, &h.graph, &w) {
        Ok(b) => {
            *out_feasible = b as u8;
            DomStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Greedy approximation: weight and the proven ratio for the graph's
/// maximum degree.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn dom_approximate(g: *const DomGraph, id: u32, out_weight: *mut u64, out_ratio: *mut f64) -> DomStatus {
    let Some(h) = g.as_ref() else { return DomStatus::NullPointer };
    if out_weight.is_null() || out_ratio.is_null() {
        return DomStatus::NullPointer;
    }
    let Some(p) = param(id) else { return DomStatus::UnknownParameter };
    match dominion::approx::try_approximate(p, &h.graph) {
        Ok(a) => {
            *out_weight = a.weight;
            *out_ratio = a.ratio_bound;
            DomStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Number of bound-table inequalities violated on the graph (0 expected).
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn dom_audit(g: *const DomGraph, budget: u64, out_violations: *mut usize) -> DomStatus {
    let Some(h) = g.as_ref() else { return DomStatus::NullPointer };
    if out_violations.is_null() {
        return DomStatus::NullPointer;
    }
    match dominion::audit::audit_graph(&h.graph, (budget > 0).then_some(budget)) {
        Ok(v) => {
            *out_violations = v.len();
            DomStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}
