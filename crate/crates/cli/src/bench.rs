//! Benchmark suites: a grid of generated instances, each solved with GrC,
//! GRASP and (for small graphs) the exact oracle, reported as CSV.

use std::fmt::Write as _;
use std::time::Instant;

use cds2m::greedy::GreedyParams;
use cds2m::{exact_minimum, grasp_solve, grc_solve, Graph, GraspParams, InstanceSpec};
use log::{info, warn};

pub const COLUMNS: &str = "instance,m,seed,grc_size,grasp_size,grasp_best_iteration,grasp_time_ms,exact_size";

const FULL_NODES: [usize; 7] = [30, 50, 70, 100, 120, 150, 200];
const FULL_DENSITIES: [u32; 6] = [5, 10, 20, 30, 50, 70];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suite {
    pub nodes: Vec<usize>,
    pub densities: Vec<u32>,
    pub ms: Vec<usize>,
    pub seeds: Vec<u64>,
}

impl Suite {
    /// Parses `key=v1,v2;key=...` with keys `n`, `d`, `m` and `seed`.
    /// `full` selects the full v30..v200 / d5..d70 grid. Missing `m` and
    /// `seed` lists fall back to the given defaults.
    pub fn parse(text: &str, default_ms: &[usize], default_seeds: &[u64]) -> Result<Self, String> {
        let mut suite = Suite {
            nodes: Vec::new(),
            densities: Vec::new(),
            ms: Vec::new(),
            seeds: Vec::new(),
        };
        if text.trim() == "full" {
            suite.nodes = FULL_NODES.to_vec();
            suite.densities = FULL_DENSITIES.to_vec();
        } else {
            for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
                let (key, values) = part
                    .split_once('=')
                    .ok_or_else(|| format!("expected key=values, got {part:?}"))?;
                match key.trim() {
                    "n" => suite.nodes = parse_list(values)?,
                    "d" => suite.densities = parse_list(values)?,
                    "m" => suite.ms = parse_list(values)?,
                    "seed" | "seeds" => suite.seeds = parse_list(values)?,
                    other => return Err(format!("unknown suite key {other:?}")),
                }
            }
        }
        if suite.ms.is_empty() {
            suite.ms = default_ms.to_vec();
        }
        if suite.seeds.is_empty() {
            suite.seeds = default_seeds.to_vec();
        }
        if suite.nodes.is_empty() || suite.densities.is_empty() || suite.ms.is_empty() || suite.seeds.is_empty() {
            return Err("suite needs at least one value for n, d, m and seed".into());
        }
        if suite.ms.contains(&0) {
            return Err("m must be at least 1".into());
        }
        for &n in &suite.nodes {
            for &d in &suite.densities {
                InstanceSpec::new(n, d, 0).map_err(|e| e.to_string())?;
            }
        }
        Ok(suite)
    }
}

fn parse_list<T: std::str::FromStr>(values: &str) -> Result<Vec<T>, String> {
    values
        .split(',')
        .map(|v| v.trim().parse().map_err(|_| format!("invalid value {v:?}")))
        .collect()
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub iterations: usize,
    pub alpha: f64,
    pub candidates: usize,
    pub workers: usize,
    pub exact_limit: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub instance: String,
    pub m: usize,
    pub seed: u64,
    pub grc_size: Option<usize>,
    pub grasp_size: Option<usize>,
    pub grasp_best_iteration: Option<usize>,
    pub grasp_time_ms: Option<u128>,
    /// `None` when the oracle was not run, `Some(None)` when it proved the
    /// instance infeasible.
    pub exact_size: Option<Option<usize>>,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        fn cell<T: ToString>(v: Option<T>) -> String {
            v.map_or_else(|| "-".to_string(), |v| v.to_string())
        }
        let exact = match self.exact_size {
            None => String::new(),
            Some(size) => cell(size),
        };
        format!(
            "{},{},{},{},{},{},{},{}",
            self.instance,
            self.m,
            self.seed,
            cell(self.grc_size),
            cell(self.grasp_size),
            cell(self.grasp_best_iteration),
            cell(self.grasp_time_ms),
            exact
        )
    }
}

pub fn header(suite_text: &str, settings: &Settings) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# suite: {suite_text}");
    let _ = writeln!(
        out,
        "# grasp: iterations={} alpha={} candidates={} workers={}",
        settings.iterations, settings.alpha, settings.candidates, settings.workers
    );
    let _ = writeln!(out, "# grc: max-degree start node, candidates={}", settings.candidates);
    let _ = writeln!(
        out,
        "# exact_size: brute-force optimum for n <= {}, blank otherwise; '-' marks infeasible",
        settings.exact_limit
    );
    let _ = writeln!(out, "# grasp_time_ms: wall time until the best solution was found");
    out.push_str(COLUMNS);
    out
}

/// Solves one instance; failures are recorded in the row instead of
/// aborting the suite.
pub fn run_row(g: &Graph, spec: &InstanceSpec, m: usize, settings: &Settings) -> BenchRow {
    let grc_size = grc_solve(g, m, settings.candidates).map(|s| s.size());
    let mut row = BenchRow {
        instance: spec.name(),
        m,
        seed: spec.seed,
        grc_size,
        grasp_size: None,
        grasp_best_iteration: None,
        grasp_time_ms: None,
        exact_size: None,
    };
    let greedy = match GreedyParams::new(m, settings.candidates, settings.alpha) {
        Ok(p) => p,
        Err(e) => {
            warn!("{}: {e}", row.instance);
            return row;
        }
    };
    let params = GraspParams::new(greedy, settings.iterations, spec.seed).with_workers(settings.workers);
    let start = Instant::now();
    match grasp_solve(g, &params) {
        Ok((Some(best), _)) => {
            row.grasp_size = Some(best.size());
            row.grasp_best_iteration = Some(best.iteration_found);
            row.grasp_time_ms = Some(best.elapsed.as_millis());
        }
        Ok((None, _)) => {}
        Err(e) => warn!("{}: {e}", row.instance),
    }
    info!("{} m={m}: grasp finished in {:?}", row.instance, start.elapsed());
    if g.node_count() <= settings.exact_limit {
        match exact_minimum(g, m, settings.exact_limit) {
            Ok(found) => row.exact_size = Some(found.map(|s| s.len())),
            Err(e) => warn!("{}: {e}", row.instance),
        }
    }
    row
}

/// Runs the whole grid in order n, d, seed, m and returns the CSV text.
pub fn run_suite(suite_text: &str, suite: &Suite, settings: &Settings) -> String {
    let mut out = header(suite_text, settings);
    out.push('\n');
    for &n in &suite.nodes {
        for &d in &suite.densities {
            for &seed in &suite.seeds {
                let spec = InstanceSpec::new(n, d, seed).expect("validated while parsing");
                let g = Graph::generate_random(&spec);
                for &m in &suite.ms {
                    out.push_str(&run_row(&g, &spec, m, settings).to_csv());
                    out.push('\n');
                }
            }
        }
    }
    out
}
