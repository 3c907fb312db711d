//! Feasibility checking and exhaustive minimization for small graphs.
//!
//! Nothing here touches the growth or greedy code, so these functions can
//! serve as ground truth for them.

use std::fmt;

use crate::biconnect::{BiconnectivityChecker, InducedView};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default size limit for [`exact_minimum`].
pub const DEFAULT_NODE_LIMIT: usize = 16;
/// Hard limit imposed by the 64-bit subset encoding.
pub const MAX_NODE_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// Node id outside the graph.
    InvalidNode(usize),
    TooSmall,
    NotConnected,
    HasArticulationPoint(usize),
    UnderDominated(usize),
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidNode(v) => write!(f, "node {v} is not in the graph"),
            Self::TooSmall => write!(f, "fewer than 3 nodes"),
            Self::NotConnected => write!(f, "induced subgraph is not connected"),
            Self::HasArticulationPoint(v) => write!(f, "node {v} is an articulation point"),
            Self::UnderDominated(v) => write!(f, "node {v} has too few neighbors in the set"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Feasibility {
    pub is_feasible: bool,
    pub failure_reason: Option<FailureReason>,
}

impl Feasibility {
    fn ok() -> Self {
        Self {
            is_feasible: true,
            failure_reason: None,
        }
    }

    fn fail(reason: FailureReason) -> Self {
        Self {
            is_feasible: false,
            failure_reason: Some(reason),
        }
    }
}

/// Checks that `nodes` induces a 2-connected subgraph and that every other
/// node has at least `m` neighbors in it. Duplicates in `nodes` are ignored.
pub fn verify(g: &Graph, nodes: &[usize], m: usize) -> Feasibility {
    let n = g.node_count();
    if let Some(&v) = nodes.iter().find(|&&v| v >= n) {
        return Feasibility::fail(FailureReason::InvalidNode(v));
    }
    let view = InducedView::new(g, nodes);
    if view.len() < 3 {
        return Feasibility::fail(FailureReason::TooSmall);
    }
    match view.articulation_points() {
        Err(_) => return Feasibility::fail(FailureReason::NotConnected),
        Ok(cuts) => {
            if let Some(&v) = cuts.first() {
                return Feasibility::fail(FailureReason::HasArticulationPoint(v));
            }
        }
    }
    for v in 0..n {
        if view.contains(v) {
            continue;
        }
        let inside = g.neighbors(v).iter().filter(|&&w| view.contains(w)).count();
        if inside < m {
            return Feasibility::fail(FailureReason::UnderDominated(v));
        }
    }
    Feasibility::ok()
}

/// Smallest feasible set, lexicographically first among those of minimum
/// size, or `None` when no feasible set exists.
///
/// Nodes of degree below `m` can never be dominated and are forced into
/// every candidate subset; the rest is enumerated by increasing size.
pub fn exact_minimum(g: &Graph, m: usize, node_limit: usize) -> Result<Option<Vec<usize>>> {
    let limit = node_limit.min(MAX_NODE_LIMIT);
    let n = g.node_count();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    let forced: Vec<usize> = (0..n).filter(|&v| g.degree(v) < m).collect();
    Ok(Enumerator::new(g, m).search(&forced))
}

struct Enumerator<'g> {
    g: &'g Graph,
    m: usize,
    nbr_masks: Vec<u64>,
    checker: BiconnectivityChecker,
}

impl<'g> Enumerator<'g> {
    fn new(g: &'g Graph, m: usize) -> Self {
        let nbr_masks = (0..g.node_count())
            .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | (1 << w)))
            .collect();
        Self {
            g,
            m,
            nbr_masks,
            checker: BiconnectivityChecker::new(g.node_count()),
        }
    }

    fn feasible(&mut self, set: u64) -> bool {
        let n = self.g.node_count();
        let m = self.m as u32;
        let dominated = (0..n)
            .filter(|&v| set & (1 << v) == 0)
            .all(|v| (self.nbr_masks[v] & set).count_ones() >= m);
        if !dominated {
            return false;
        }
        let start = set.trailing_zeros() as usize;
        let size = set.count_ones() as usize;
        self.checker
            .is_biconnected_counted(self.g, start, size, |v| set & (1 << v) != 0)
    }

    /// Enumerates supersets of `forced` by size; within a size, the free part
    /// goes in lexicographic order, which keeps the union in lexicographic
    /// order as well.
    fn search(&mut self, forced: &[usize]) -> Option<Vec<usize>> {
        let n = self.g.node_count();
        let forced_mask = forced.iter().fold(0u64, |acc, &v| acc | (1 << v));
        let free: Vec<usize> = (0..n).filter(|&v| forced_mask & (1 << v) == 0).collect();
        for size in forced.len().max(3)..=n {
            let k = size - forced.len();
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                let set = idx.iter().fold(forced_mask, |acc, &i| acc | (1 << free[i]));
                if self.feasible(set) {
                    return Some((0..n).filter(|&v| set & (1 << v) != 0).collect());
                }
                if !next_combination(&mut idx, free.len()) {
                    break;
                }
            }
        }
        None
    }
}

/// Advances `idx` to the next k-combination of `0..len` in lexicographic
/// order. Returns `false` after the last one.
fn next_combination(idx: &mut [usize], len: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < len - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in (i + 1)..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}
