//! Heuristics for the minimum 2-connected m-dominating set problem: find a
//! node set `D` whose induced subgraph is 2-connected and such that every
//! node outside `D` has at least `m` neighbors in `D`.
//!
//! Solutions are built by growing a 2-connected subgraph with open ears
//! found by an adapted BFS ([`ear_growth`]), choosing among candidate ears
//! with a domination heuristic ([`greedy`]), and pruning redundant nodes in a
//! GRASP loop ([`grasp`]). [`oracle`] provides an independent verifier and a
//! brute-force optimum for small graphs.

pub mod biconnect;
pub mod ear_growth;
pub mod error;
pub mod graph;
pub mod grasp;
pub mod greedy;
pub mod oracle;

pub use biconnect::InducedView;
pub use ear_growth::{Ear, GrowthState};
pub use error::{Error, Result};
pub use graph::{Graph, InstanceSpec};
pub use grasp::{correct, grasp_solve, grc_solve, necessary_set, GraspParams, RunStats, Solution};
pub use greedy::{greedy_construct, GreedyParams};
pub use oracle::{exact_minimum, verify, FailureReason, Feasibility};
