//! Domination parameters of graphs: feasibility checks, exact and greedy
//! solvers, bound-realizing transforms, extremal families, bound audits and
//! complexity reductions.

pub mod approx;
pub mod audit;
pub mod cli;
pub mod error;
pub mod exact;
pub mod families;
pub mod feasibility;
pub mod graph;
pub mod reductions;
pub mod transforms;

pub use error::{DomError, Result};
pub use exact::{solve, Solution, Value};
pub use feasibility::{is_feasible, ParameterId, Witness};
pub use graph::{Graph, MultiGraph};
