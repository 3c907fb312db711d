//! Brute-force reference implementations shared by the integration tests.
//! Everything here works straight from the problem definitions and avoids
//! the library's own algorithms.

#![allow(dead_code)]

use std::collections::VecDeque;

use cds2m::Graph;

/// BFS connectivity of the subgraph induced by `mask`. The empty set counts
/// as connected.
pub fn connected(g: &Graph, mask: &[bool]) -> bool {
    let Some(start) = mask.iter().position(|&b| b) else {
        return true;
    };
    let mut seen = vec![false; mask.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if mask[w] && !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == mask.iter().filter(|&&b| b).count()
}

/// 2-connectivity by deleting each member in turn.
pub fn biconnected(g: &Graph, nodes: &[usize]) -> bool {
    let mut mask = vec![false; g.node_count()];
    for &v in nodes {
        mask[v] = true;
    }
    if mask.iter().filter(|&&b| b).count() < 3 || !connected(g, &mask) {
        return false;
    }
    let members: Vec<usize> = (0..g.node_count()).filter(|&v| mask[v]).collect();
    members.into_iter().all(|v| {
        mask[v] = false;
        let ok = connected(g, &mask);
        mask[v] = true;
        ok
    })
}

pub fn feasible(g: &Graph, nodes: &[usize], m: usize) -> bool {
    if !biconnected(g, nodes) {
        return false;
    }
    (0..g.node_count())
        .filter(|v| !nodes.contains(v))
        .all(|v| g.neighbors(v).iter().filter(|w| nodes.contains(w)).count() >= m)
}

/// Exact hop distance from every node to the set `in_s`.
pub fn distances_to_set(g: &Graph, in_s: &[bool]) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.node_count()];
    let mut queue = VecDeque::new();
    for v in (0..g.node_count()).filter(|&v| in_s[v]) {
        dist[v] = Some(0);
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Numerator of the ear value: the sum over N[inner] \ S of the node scores,
/// skipping nodes that already have `m` neighbours in S. The denominator is
/// `inner.len()`.
pub fn ear_value(g: &Graph, in_s: &[bool], inner: &[usize], m: usize) -> i64 {
    let mut total = 0i64;
    for u in 0..g.node_count() {
        if in_s[u] {
            continue;
        }
        let in_closed = inner.contains(&u) || g.neighbors(u).iter().any(|w| inner.contains(w));
        if !in_closed {
            continue;
        }
        let dc = g.neighbors(u).iter().filter(|&&w| in_s[w]).count();
        if dc >= m {
            continue;
        }
        let room = (m - dc) as i64;
        total += if inner.contains(&u) {
            room
        } else {
            let links = g.neighbors(u).iter().filter(|w| inner.contains(w)).count() as i64;
            links.min(room)
        };
    }
    total
}

/// Every node set of `g`, as ascending vectors, smallest first.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&v| mask & (1 << v) != 0).collect())
}
