//! Simple undirected graphs, the plain-text instance and solution formats, and
//! the seeded `G(n, p)` generator behind the `v{n}_d{density}` instances.
//!
//! Instance files look like
//!
//! ```text
//! # optional comment lines
//! <n> <edge_count>
//! <u> <v>
//! ...
//! ```
//!
//! with exactly `edge_count` edge lines and `0 <= u < v < n`. Solution files
//! hold one node id per line in ascending order.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Immutable simple undirected graph on the nodes `0..n`.
///
/// Adjacency lists are sorted ascending and free of duplicates and
/// self-loops; every edge is stored in both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, dropping duplicate and mirrored edges.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut twice = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Ok(Self {
            adjacency,
            edge_count: twice / 2,
        })
    }

    /// Erdős–Rényi `G(n, p)` with `p = density_percent / 100`.
    ///
    /// Pairs `(u, v)` with `u < v` are visited in lexicographic order and each
    /// consumes one `f64` draw from a ChaCha8 stream seeded with `spec.seed`,
    /// so the output depends only on `spec`.
    pub fn generate_random(spec: &InstanceSpec) -> Self {
        let n = spec.nodes;
        let p = f64::from(spec.density_percent) / 100.0;
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random::<f64>() < p {
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                    edge_count += 1;
                }
            }
        }
        // Pushed in ascending order on both sides already.
        Self { adjacency, edge_count }
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
        Self::from_edge_list(n, &edges).expect("complete graph edges are valid")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`. Needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 nodes");
        let edges: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
        Self::from_edge_list(n, &edges).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|u| (u - 1, u)).collect();
        Self::from_edge_list(n, &edges).expect("path edges are valid")
    }

    /// Star with center `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edge_list(leaves + 1, &edges).expect("star edges are valid")
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Node of maximum degree, lowest id on ties. `None` for the empty graph.
    pub fn max_degree_node(&self) -> Option<usize> {
        (0..self.node_count()).min_by_key(|&u| (std::cmp::Reverse(self.degree(u)), u))
    }

    /// Parses the instance format described in the module docs.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            message: "missing header \"<n> <edge_count>\"".into(),
        })?;
        let [n, m] = parse_pair(header_line, header)?;

        let mut edges = Vec::with_capacity(m);
        for (line, content) in lines {
            if edges.len() == m {
                return Err(Error::Parse {
                    line,
                    message: format!("more than the declared {m} edges"),
                });
            }
            let [u, v] = parse_pair(line, content)?;
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("edge ({u}, {v}) out of range for {n} nodes"),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line,
                    message: format!("self-loop on node {u}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count(),
                message: format!("expected {m} edges, found {}", edges.len()),
            });
        }
        Self::from_edge_list(n, &edges)
    }

    /// Renders the instance format, edges in lexicographic order.
    pub fn to_instance_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.node_count(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_instance_string())?;
        Ok(())
    }
}

fn parse_pair(line: usize, content: &str) -> Result<[usize; 2]> {
    let mut fields = content.split_whitespace();
    let mut next = || -> Result<usize> {
        let field = fields.next().ok_or_else(|| Error::Parse {
            line,
            message: "expected two integers".into(),
        })?;
        field.parse().map_err(|_| Error::Parse {
            line,
            message: format!("not a node id: {field:?}"),
        })
    };
    let pair = [next()?, next()?];
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "trailing fields".into(),
        });
    }
    Ok(pair)
}

/// Parameters of one random benchmark instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InstanceSpec {
    pub nodes: usize,
    pub density_percent: u32,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn new(nodes: usize, density_percent: u32, seed: u64) -> Result<Self> {
        if nodes < 3 {
            return Err(Error::InvalidSpec(format!("need at least 3 nodes, got {nodes}")));
        }
        if !(1..=100).contains(&density_percent) {
            return Err(Error::InvalidSpec(format!(
                "density must be in 1..=100, got {density_percent}"
            )));
        }
        Ok(Self {
            nodes,
            density_percent,
            seed,
        })
    }

    /// `v{n}_d{density}`.
    pub fn name(&self) -> String {
        format!("v{}_d{}", self.nodes, self.density_percent)
    }
}

/// One node id per line, ascending.
pub fn solution_to_string(nodes: &[usize]) -> String {
    let mut sorted = nodes.to_vec();
    sorted.sort_unstable();
    sorted.iter().fold(String::new(), |mut out, v| {
        let _ = writeln!(out, "{v}");
        out
    })
}

/// Reads node ids separated by whitespace or newlines; `#` starts a comment
/// line. The result is sorted and free of duplicates.
pub fn parse_solution(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut nodes = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for token in line.split_whitespace() {
            let v: usize = token.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("not a node id: {token:?}"),
            })?;
            if v >= n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("node {v} out of range for {n} nodes"),
                });
            }
            nodes.push(v);
        }
    }
    nodes.sort_unstable();
    nodes.dedup();
    Ok(nodes)
}

pub fn save_solution(nodes: &[usize], path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, solution_to_string(nodes))?;
    Ok(())
}

pub fn load_solution(path: impl AsRef<Path>, n: usize) -> Result<Vec<usize>> {
    parse_solution(&fs::read_to_string(path)?, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_edges() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn mirrored_duplicate_is_dropped() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.neighbors(3).is_empty());
    }

    #[test]
    fn self_loop_rejected() {
        assert!(matches!(Graph::from_edge_list(2, &[(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::InvalidEdge { .. })
        ));
    }

    #[test]
    fn full_density_is_complete() {
        let spec = InstanceSpec::new(30, 100, 12345).unwrap();
        let g = Graph::generate_random(&spec);
        assert_eq!(g.edge_count(), 435);
        assert_eq!(g, Graph::complete(30));
    }

    #[test]
    fn generator_is_deterministic() {
        let spec = InstanceSpec::new(30, 50, 7).unwrap();
        assert_eq!(Graph::generate_random(&spec), Graph::generate_random(&spec));
        let other = InstanceSpec::new(30, 50, 8).unwrap();
        assert_ne!(Graph::generate_random(&spec), Graph::generate_random(&other));
    }

    #[test]
    fn sparse_edge_count_within_three_sigma() {
        // Binomial(19900, 0.05): mean 995, sigma ~30.7.
        let g = Graph::generate_random(&InstanceSpec::new(200, 5, 1).unwrap());
        let sigma = (19900.0_f64 * 0.05 * 0.95).sqrt();
        assert!(
            (g.edge_count() as f64 - 995.0).abs() <= 3.0 * sigma,
            "{}",
            g.edge_count()
        );
    }

    #[test]
    fn spec_validation() {
        assert!(InstanceSpec::new(2, 50, 0).is_err());
        assert!(InstanceSpec::new(10, 0, 0).is_err());
        assert!(InstanceSpec::new(10, 101, 0).is_err());
        assert_eq!(InstanceSpec::new(30, 70, 0).unwrap().name(), "v30_d70");
    }

    #[test]
    fn parse_path_graph() {
        let g = Graph::parse("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn parse_with_comments() {
        let g = Graph::parse("# triangle\n3 3\n0 1\n# middle\n1 2\n0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match Graph::parse("3 1\n0 5\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match Graph::parse("3 x\n") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(Graph::parse("3 2\n0 1\n").is_err());
        assert!(Graph::parse("3 1\n0 1\n1 2\n").is_err());
        assert!(Graph::parse("3 1\n1 1\n").is_err());
        assert!(Graph::parse("").is_err());
    }

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("k3.txt");
        let g = Graph::complete(3);
        g.save(&path).unwrap();
        assert_eq!(Graph::load(&path).unwrap(), g);
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn solution_format() {
        assert_eq!(solution_to_string(&[4, 0, 2]), "0\n2\n4\n");
        assert_eq!(parse_solution("4\n0\n2\n", 5).unwrap(), vec![0, 2, 4]);
        assert!(parse_solution("7\n", 5).is_err());
        assert_eq!(parse_solution("# best\n3 1\n1\n", 5).unwrap(), vec![1, 3]);
        assert!(parse_solution("1 x\n", 5).is_err());
    }

    #[test]
    fn max_degree_prefers_lowest_id() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3), (2, 1)]).unwrap();
        assert_eq!(g.max_degree_node(), Some(1));
        assert_eq!(Graph::complete(4).max_degree_node(), Some(0));
    }
}
