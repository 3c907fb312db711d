//! GRASP driver: randomized greedy constructions from random start nodes,
//! each followed by a correction pass that drops unnecessary nodes, keeping
//! the smallest feasible set found.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant};

use log::debug;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::biconnect::BiconnectivityChecker;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::greedy::{greedy_construct, GreedyParams};
use crate::oracle;

/// Number of constructions used by the reference experiments.
pub const DEFAULT_MAX_SOLUTIONS: usize = 25_000;

#[derive(Clone, Debug, PartialEq)]
pub struct GraspParams {
    pub greedy: GreedyParams,
    pub max_solutions: usize,
    pub seed: u64,
    pub parallel_workers: usize,
    pub time_limit: Option<Duration>,
}

impl GraspParams {
    pub fn new(greedy: GreedyParams, max_solutions: usize, seed: u64) -> Self {
        Self {
            greedy,
            max_solutions,
            seed,
            parallel_workers: 1,
            time_limit: None,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.parallel_workers = workers;
        self
    }

    pub fn with_time_limit(mut self, limit: Option<Duration>) -> Self {
        self.time_limit = limit;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.max_solutions == 0 {
            return Err(Error::InvalidSpec("max_solutions must be at least 1".into()));
        }
        if self.parallel_workers == 0 {
            return Err(Error::InvalidSpec("need at least one worker".into()));
        }
        GreedyParams::new(self.greedy.m, self.greedy.candidate_target, self.greedy.alpha0).map(|_| ())
    }
}

/// A verified 2-connected m-dominating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// Ascending.
    pub nodes: Vec<usize>,
    /// 1-based construction index that produced it.
    pub iteration_found: usize,
    /// Wall time from run start until it was found.
    pub elapsed: Duration,
    pub seed: u64,
}

impl Solution {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    pub iterations_run: usize,
    pub feasible_count: usize,
    pub best_iteration: Option<usize>,
    pub best_time: Option<Duration>,
    /// Solution size after correction -> number of constructions.
    pub size_histogram: BTreeMap<usize, usize>,
    /// `(iteration, size)` each time the incumbent improved, in iteration
    /// order.
    pub incumbent_trace: Vec<(usize, usize)>,
}

/// Incumbent change reported to a progress hook.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progress {
    pub iteration: usize,
    pub incumbent_size: usize,
}

/// Nodes of `S` that some outside node with exactly `m` neighbors in `S`
/// depends on. Ascending.
pub fn necessary_set(g: &Graph, s: &[usize], m: usize) -> Vec<usize> {
    let mut in_s = vec![false; g.node_count()];
    for &v in s {
        in_s[v] = true;
    }
    let mut necessary = vec![false; g.node_count()];
    for u in 0..g.node_count() {
        if in_s[u] {
            continue;
        }
        let inside = g.neighbors(u).iter().filter(|&&w| in_s[w]).count();
        if inside == m {
            for &w in g.neighbors(u) {
                necessary[w] |= in_s[w];
            }
        }
    }
    (0..g.node_count()).filter(|&v| necessary[v]).collect()
}

/// Removes nodes from a feasible set one at a time while it stays feasible.
///
/// Each pass scans `S \ Q` in ascending order and drops the first node whose
/// removal keeps `S` 2-connected (and leaves that node itself m-dominated),
/// then starts over. `Q` only grows: removals never add domination slack.
pub fn correct(g: &Graph, s: &[usize], m: usize) -> Result<Vec<usize>> {
    if !oracle::verify(g, s, m).is_feasible {
        return Err(Error::InfeasibleInput { m });
    }
    let n = g.node_count();
    let mut in_s = vec![false; n];
    for &v in s {
        in_s[v] = true;
    }
    let mut size = in_s.iter().filter(|&&b| b).count();
    let mut inside: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&w| in_s[w]).count())
        .collect();
    let mut necessary = vec![false; n];
    let mark = |necessary: &mut Vec<bool>, in_s: &[bool], u: usize| {
        for &w in g.neighbors(u) {
            necessary[w] |= in_s[w];
        }
    };
    for u in 0..n {
        if !in_s[u] && inside[u] == m {
            mark(&mut necessary, &in_s, u);
        }
    }

    let mut checker = BiconnectivityChecker::new(n);
    'passes: loop {
        for u in 0..n {
            if !in_s[u] || necessary[u] || inside[u] < m {
                continue;
            }
            let Some(start) = (0..n).find(|&v| in_s[v] && v != u) else {
                break 'passes;
            };
            if !checker.is_biconnected_counted(g, start, size - 1, |v| in_s[v] && v != u) {
                continue;
            }
            in_s[u] = false;
            size -= 1;
            for &w in g.neighbors(u) {
                inside[w] -= 1;
            }
            for &w in g.neighbors(u) {
                if !in_s[w] && inside[w] == m {
                    mark(&mut necessary, &in_s, w);
                }
            }
            if inside[u] == m {
                mark(&mut necessary, &in_s, u);
            }
            continue 'passes;
        }
        break;
    }

    let out: Vec<usize> = (0..n).filter(|&v| in_s[v]).collect();
    debug_assert!(oracle::verify(g, &out, m).is_feasible);
    Ok(out)
}

/// Per-construction random stream: the run seed picks the key, the
/// iteration picks the stream, so results do not depend on scheduling.
pub fn iteration_rng(seed: u64, iteration: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(iteration as u64);
    rng
}

/// The randomized construction of one GRASP iteration, before correction.
pub fn grasp_construct(g: &Graph, params: &GraspParams, iteration: usize) -> Option<Vec<usize>> {
    let n = g.node_count();
    if n == 0 {
        return None;
    }
    let mut rng = iteration_rng(params.seed, iteration);
    let root = rng.random_range(0..n);
    greedy_construct(g, &params.greedy, root, &mut rng)
}

/// One GRASP iteration: random start node, randomized greedy, correction.
pub fn grasp_iteration(g: &Graph, params: &GraspParams, iteration: usize) -> Option<Vec<usize>> {
    let built = grasp_construct(g, params, iteration)?;
    let corrected = correct(g, &built, params.greedy.m).expect("greedy output is feasible");
    debug_assert!(corrected.len() <= built.len());
    Some(corrected)
}

struct Outcome {
    iteration: usize,
    size: Option<usize>,
    finished: Duration,
    nodes: Option<Vec<usize>>,
}

struct Shared {
    incumbent: Option<(usize, usize)>,
}

pub fn grasp_solve(g: &Graph, params: &GraspParams) -> Result<(Option<Solution>, RunStats)> {
    grasp_solve_with_progress(g, params, |_| {})
}

/// Runs `params.max_solutions` constructions (fewer if the time limit hits)
/// and returns the smallest feasible set, ties going to the earliest
/// iteration. `progress` sees every improvement of the shared incumbent.
pub fn grasp_solve_with_progress<P>(
    g: &Graph,
    params: &GraspParams,
    progress: P,
) -> Result<(Option<Solution>, RunStats)>
where
    P: Fn(Progress) + Sync,
{
    params.validate()?;
    let start = Instant::now();
    let next = AtomicUsize::new(1);
    let shared = Mutex::new(Shared { incumbent: None });

    let worker = || {
        let mut outcomes = Vec::new();
        let mut local_best: Option<usize> = None;
        loop {
            if params.time_limit.is_some_and(|limit| start.elapsed() >= limit) {
                break;
            }
            let iteration = next.fetch_add(1, Ordering::Relaxed);
            if iteration > params.max_solutions {
                break;
            }
            let found = grasp_iteration(g, params, iteration);
            let size = found.as_ref().map(Vec::len);
            let finished = start.elapsed();
            // Keep node lists only for local improvements.
            let improves = size.is_some_and(|s| local_best.is_none_or(|b| s < b));
            if improves {
                local_best = size;
                let s = size.expect("checked");
                let mut shared = shared.lock().expect("poisoned");
                let better = shared
                    .incumbent
                    .is_none_or(|(best, at)| s < best || (s == best && iteration < at));
                if better {
                    shared.incumbent = Some((s, iteration));
                    progress(Progress {
                        iteration,
                        incumbent_size: s,
                    });
                }
            }
            outcomes.push(Outcome {
                iteration,
                size,
                finished,
                nodes: if improves { found } else { None },
            });
        }
        outcomes
    };

    let mut outcomes: Vec<Outcome> = if params.parallel_workers == 1 {
        worker()
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..params.parallel_workers).map(|_| scope.spawn(worker)).collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };
    outcomes.sort_by_key(|o| o.iteration);

    let mut stats = RunStats {
        iterations_run: outcomes.len(),
        ..RunStats::default()
    };
    let mut best: Option<Solution> = None;
    for o in outcomes {
        let Some(size) = o.size else { continue };
        stats.feasible_count += 1;
        *stats.size_histogram.entry(size).or_default() += 1;
        if best.as_ref().is_none_or(|b| size < b.size()) {
            let nodes = o.nodes.expect("local improvements keep their nodes");
            debug_assert!(oracle::verify(g, &nodes, params.greedy.m).is_feasible);
            stats.incumbent_trace.push((o.iteration, size));
            best = Some(Solution {
                nodes,
                iteration_found: o.iteration,
                elapsed: o.finished,
                seed: params.seed,
            });
        }
    }
    if let Some(b) = &best {
        stats.best_iteration = Some(b.iteration_found);
        stats.best_time = Some(b.elapsed);
    }
    debug!(
        "grasp: {} iterations, {} feasible, best {:?}",
        stats.iterations_run,
        stats.feasible_count,
        best.as_ref().map(Solution::size)
    );
    Ok((best, stats))
}

/// Single deterministic construction from the highest-degree node followed
/// by correction.
pub fn grc_solve(g: &Graph, m: usize, candidate_target: usize) -> Option<Solution> {
    let start = Instant::now();
    let root = g.max_degree_node()?;
    let params = GreedyParams::deterministic(m, candidate_target);
    // Selection with alpha0 = 1 never draws from the generator.
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let built = greedy_construct(g, &params, root, &mut rng)?;
    let nodes = correct(g, &built, m).expect("greedy output is feasible");
    Some(Solution {
        nodes,
        iteration_found: 1,
        elapsed: start.elapsed(),
        seed: 0,
    })
}
