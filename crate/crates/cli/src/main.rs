mod bench;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cds2m::graph::{load_solution, save_solution};
use cds2m::grasp::DEFAULT_MAX_SOLUTIONS;
use cds2m::greedy::{GreedyParams, DEFAULT_ALPHA0, DEFAULT_CANDIDATES};
use cds2m::oracle::DEFAULT_NODE_LIMIT;
use cds2m::{exact_minimum, grasp_solve, grc_solve, verify, Error, Graph, GraspParams, InstanceSpec};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

const EXIT_USAGE: u8 = 1;
const EXIT_INFEASIBLE: u8 = 2;
const EXIT_TOO_LARGE: u8 = 3;

/// Minimum 2-connected m-dominating sets: instance generation, GRASP and
/// greedy solvers, exact oracle and verification.
///
/// Exit codes: 0 feasible, 1 usage or input error, 2 infeasible, 3 instance
/// too large for the exact oracle. Set CDS2M_LOG (e.g. `debug`) for logs.
#[derive(Parser)]
#[command(name = "cds2m", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random G(n, p) instance with p = density / 100.
    Generate {
        #[arg(long)]
        nodes: usize,
        /// Edge density in percent (1..=100).
        #[arg(long)]
        density: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Instance file to write; the instance goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run GRASP on an instance.
    Solve {
        input: PathBuf,
        #[command(flatten)]
        common: SolveArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_SOLUTIONS)]
        iterations: usize,
        /// Randomization parameter; 1 makes every construction greedy.
        #[arg(long, default_value_t = DEFAULT_ALPHA0)]
        alpha: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Stop starting new constructions after this many milliseconds.
        #[arg(long)]
        time_limit_ms: Option<u64>,
    },
    /// Single greedy construction from the highest-degree node, then correction.
    Grc {
        input: PathBuf,
        #[command(flatten)]
        common: SolveArgs,
    },
    /// Exhaustive optimum for small instances.
    Exact {
        input: PathBuf,
        #[arg(short, long, default_value_t = 1)]
        m: usize,
        /// Largest node count the oracle accepts.
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        limit: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a solution file against an instance.
    Verify {
        input: PathBuf,
        solution: PathBuf,
        #[arg(short, long, default_value_t = 1)]
        m: usize,
    },
    /// Run GrC, GRASP and the exact oracle over a grid of generated instances.
    Bench {
        /// Grid such as "n=30;d=30,50,70;m=1;seed=1", or "full".
        #[arg(long)]
        suite: String,
        /// Values of m used when the suite has no `m` key.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        m: Vec<usize>,
        /// Seeds used when the suite has no `seed` key.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        seeds: Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_MAX_SOLUTIONS)]
        iterations: usize,
        #[arg(long, default_value_t = DEFAULT_ALPHA0)]
        alpha: f64,
        #[arg(long, default_value_t = DEFAULT_CANDIDATES)]
        candidates: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        exact_limit: usize,
        /// CSV file to write; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SolveArgs {
    #[arg(short, long, default_value_t = 1)]
    m: usize,
    /// Candidate list size.
    #[arg(long, default_value_t = DEFAULT_CANDIDATES)]
    candidates: usize,
    /// Print a JSON record instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the solution nodes to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure carrying the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::TooLarge { .. } => EXIT_TOO_LARGE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("CDS2M_LOG", "warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Generate {
            nodes,
            density,
            seed,
            out,
        } => generate(nodes, density, seed, out),
        Command::Solve {
            input,
            common,
            iterations,
            alpha,
            seed,
            workers,
            time_limit_ms,
        } => {
            let g = Graph::load(&input)?;
            let greedy = GreedyParams::new(common.m, common.candidates, alpha)?;
            let params = GraspParams::new(greedy, iterations, seed)
                .with_workers(workers)
                .with_time_limit(time_limit_ms.map(Duration::from_millis));
            let start = Instant::now();
            let (best, stats) = grasp_solve(&g, &params)?;
            eprintln!("elapsed_ms: {}", start.elapsed().as_millis());
            if let Some(b) = &best {
                eprintln!("best_time_ms: {}", b.elapsed.as_millis());
            }
            let extra = json!({
                "seed": seed,
                "iterations_run": stats.iterations_run,
                "feasible_count": stats.feasible_count,
                "best_iteration": stats.best_iteration,
            });
            let mut text = Vec::new();
            if let Some(b) = &best {
                text.push(format!("best_iteration: {}", b.iteration_found));
            }
            text.push(format!(
                "iterations: {} ({} feasible)",
                stats.iterations_run, stats.feasible_count
            ));
            report(&common, best.map(|b| b.nodes), extra, &text, "infeasible")
        }
        Command::Grc { input, common } => {
            let g = Graph::load(&input)?;
            let start = Instant::now();
            let best = grc_solve(&g, common.m, common.candidates);
            eprintln!("elapsed_ms: {}", start.elapsed().as_millis());
            report(&common, best.map(|b| b.nodes), json!({}), &[], "infeasible")
        }
        Command::Exact {
            input,
            m,
            limit,
            json,
            out,
        } => {
            let g = Graph::load(&input)?;
            let found = exact_minimum(&g, m, limit)?;
            let common = SolveArgs {
                m,
                candidates: DEFAULT_CANDIDATES,
                json,
                out,
            };
            report(&common, found, json!({}), &[], "no feasible solution")
        }
        Command::Verify { input, solution, m } => {
            let g = Graph::load(&input)?;
            let nodes = load_solution(&solution, g.node_count())?;
            let check = verify(&g, &nodes, m);
            match check.failure_reason {
                None => {
                    println!("feasible (size {})", nodes.len());
                    Ok(0)
                }
                Some(reason) => {
                    println!("infeasible: {reason}");
                    Ok(EXIT_INFEASIBLE)
                }
            }
        }
        Command::Bench {
            suite,
            m,
            seeds,
            iterations,
            alpha,
            candidates,
            workers,
            exact_limit,
            out,
        } => {
            let parsed = bench::Suite::parse(&suite, &m, &seeds).map_err(usage)?;
            GreedyParams::new(parsed.ms[0], candidates, alpha)?;
            if iterations == 0 || workers == 0 {
                return Err(usage("iterations and workers must be positive"));
            }
            let settings = bench::Settings {
                iterations,
                alpha,
                candidates,
                workers,
                exact_limit,
            };
            let start = Instant::now();
            let csv = bench::run_suite(&suite, &parsed, &settings);
            eprintln!("elapsed_ms: {}", start.elapsed().as_millis());
            match out {
                Some(path) => fs::write(&path, csv).map_err(Error::from)?,
                None => print!("{csv}"),
            }
            Ok(0)
        }
    }
}

fn generate(nodes: usize, density: u32, seed: u64, out: Option<PathBuf>) -> Outcome {
    let spec = InstanceSpec::new(nodes, density, seed)?;
    let g = Graph::generate_random(&spec);
    match out {
        Some(path) => {
            g.save(&path)?;
            println!("{}: {} nodes, {} edges", spec.name(), g.node_count(), g.edge_count());
        }
        None => {
            print!("{}", g.to_instance_string());
            eprintln!("{}: {} nodes, {} edges", spec.name(), g.node_count(), g.edge_count());
        }
    }
    Ok(0)
}

/// Prints a result in text or JSON form and writes the optional solution
/// file. `extra` fields are merged into the JSON record; `text` lines are
/// appended to the text form, which says `none` when there is no solution.
fn report(
    args: &SolveArgs,
    nodes: Option<Vec<usize>>,
    extra: serde_json::Value,
    text: &[String],
    none: &str,
) -> Outcome {
    if let (Some(path), Some(nodes)) = (&args.out, &nodes) {
        save_solution(nodes, path)?;
    }
    if args.json {
        let mut record = json!({
            "m": args.m,
            "feasible": nodes.is_some(),
            "size": nodes.as_ref().map(Vec::len),
            "nodes": nodes,
        });
        if let (Some(obj), serde_json::Value::Object(more)) = (record.as_object_mut(), extra) {
            obj.extend(more);
        }
        println!("{record}");
    } else {
        match &nodes {
            Some(nodes) => {
                println!("size: {}", nodes.len());
                let list: Vec<String> = nodes.iter().map(usize::to_string).collect();
                println!("nodes: {}", list.join(" "));
            }
            None => println!("{none}"),
        }
        for line in text {
            println!("{line}");
        }
    }
    Ok(if nodes.is_some() { 0 } else { EXIT_INFEASIBLE })
}
