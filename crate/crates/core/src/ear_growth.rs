//! Growing a 2-connected subgraph `S` one open ear at a time with an adapted
//! breadth-first search.
//!
//! The search keeps a BFS forest hanging off the start node `r`. For every
//! visited node it tracks `root(u)`, the nearest ancestor on the parent chain
//! that lies in `S`, and `dist(u)`, the length of the tree path to that
//! ancestor. A non-tree edge `(s, t)` with at least one endpoint outside `S`
//! and `root(s) != root(t)` closes the open ear
//! `root(s) .. s, t .. root(t)`. Before `S` exists, the neighbors of `r` act
//! as roots of their own branches, so the first such edge closes a cycle
//! through `r`.
//!
//! Finding an ear never changes `S`; callers decide which ears to apply.
//! Applying an ear resets `root`/`dist` on the ear and re-roots the affected
//! subtrees, then re-enqueues those nodes because edges that did not close an
//! ear before may do so now.

use std::collections::VecDeque;

use log::trace;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Per-node search bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeState {
    /// Tree-path length to `root`; an upper bound on the distance to `S`.
    pub dist: usize,
    pub root: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    /// Set while the node waits in the queue for (re)evaluation.
    pub eval: bool,
    pub visited: bool,
}

/// An ear as an explicit node sequence.
///
/// Open ears run from one node of `S` to another through nodes outside `S`.
/// A closed ear is the initial cycle; its path lists every cycle node once
/// and the closing edge runs from the last node back to the first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ear {
    path: Vec<usize>,
    closed: bool,
}

impl Ear {
    pub fn open(path: Vec<usize>) -> Self {
        Self { path, closed: false }
    }

    pub fn cycle(path: Vec<usize>) -> Self {
        Self { path, closed: true }
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    pub fn is_cycle(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    /// `None` for cycles.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        match (self.closed, self.path.first(), self.path.last()) {
            (false, Some(&a), Some(&b)) => Some((a, b)),
            _ => None,
        }
    }

    /// Nodes that join `S` when the ear is applied: all cycle nodes, or the
    /// interior of an open ear.
    pub fn inner(&self) -> &[usize] {
        if self.closed {
            &self.path
        } else if self.path.len() >= 2 {
            &self.path[1..self.path.len() - 1]
        } else {
            &[]
        }
    }

    /// Orientation- and rotation-independent form, used for deduplication.
    pub fn canonical(&self) -> Vec<usize> {
        let p = &self.path;
        if p.is_empty() {
            return Vec::new();
        }
        if !self.closed {
            return if p[0] <= p[p.len() - 1] {
                p.clone()
            } else {
                p.iter().rev().copied().collect()
            };
        }
        let n = p.len();
        let start = (0..n).min_by_key(|&i| p[i]).unwrap_or(0);
        let forward: Vec<usize> = (0..n).map(|k| p[(start + k) % n]).collect();
        let backward: Vec<usize> = (0..n).map(|k| p[(start + n - k) % n]).collect();
        forward.min(backward)
    }
}

#[derive(Clone, Copy, Debug)]
struct Scan {
    node: usize,
    next: usize,
    requeued: bool,
}

/// Search state plus the current 2-connected subgraph `S`.
#[derive(Clone, Debug)]
pub struct GrowthState<'g> {
    graph: &'g Graph,
    root_node: usize,
    nodes: Vec<NodeState>,
    queue: VecDeque<usize>,
    in_s: Vec<bool>,
    s_size: usize,
    dominated: Vec<usize>,
    scan: Option<Scan>,
}

impl<'g> GrowthState<'g> {
    /// Starts the search at `root`: `root` gets distance 0, each neighbor
    /// becomes the root of its own branch at distance 1 and is enqueued in
    /// ascending order. Panics if `root` is not a node of `graph`.
    pub fn new(graph: &'g Graph, root: usize) -> Self {
        let n = graph.node_count();
        assert!(root < n, "root {root} out of range for {n} nodes");
        let mut nodes: Vec<NodeState> = (0..n)
            .map(|u| NodeState {
                dist: usize::MAX,
                root: u,
                parent: None,
                children: Vec::new(),
                eval: true,
                visited: false,
            })
            .collect();
        let mut queue = VecDeque::with_capacity(n);

        nodes[root].dist = 0;
        nodes[root].visited = true;
        nodes[root].eval = false;
        for &u in graph.neighbors(root) {
            let state = &mut nodes[u];
            state.parent = Some(root);
            state.dist = 1;
            state.root = u;
            state.visited = true;
            queue.push_back(u);
        }
        nodes[root].children = graph.neighbors(root).to_vec();

        Self {
            graph,
            root_node: root,
            nodes,
            queue,
            in_s: vec![false; n],
            s_size: 0,
            dominated: vec![0; n],
            scan: None,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn root_node(&self) -> usize {
        self.root_node
    }

    pub fn node(&self, u: usize) -> &NodeState {
        &self.nodes[u]
    }

    pub fn queue(&self) -> impl Iterator<Item = usize> + '_ {
        self.queue.iter().copied()
    }

    #[inline]
    pub fn in_s(&self, u: usize) -> bool {
        self.in_s[u]
    }

    pub fn s_mask(&self) -> &[bool] {
        &self.in_s
    }

    pub fn s_size(&self) -> usize {
        self.s_size
    }

    /// Members of `S` in ascending order.
    pub fn s_nodes(&self) -> Vec<usize> {
        (0..self.in_s.len()).filter(|&u| self.in_s[u]).collect()
    }

    /// `|N(u) ∩ S|`.
    #[inline]
    pub fn dominated_count(&self, u: usize) -> usize {
        self.dominated[u]
    }

    /// True once `S` is non-empty and every node outside it has at least `m`
    /// neighbors inside.
    pub fn is_m_dominating(&self, m: usize) -> bool {
        self.s_size > 0 && (0..self.in_s.len()).all(|u| self.in_s[u] || self.dominated[u] >= m)
    }

    /// Advances the search until a non-tree edge closes an ear of the current
    /// `S` (or the initial cycle while `S` is empty). Returns `None` once the
    /// queue runs dry; applying an ear may refill it.
    ///
    /// A node's neighbor scan can be suspended when an ear is found and is
    /// resumed by the next call.
    pub fn find_next_ear(&mut self) -> Option<Ear> {
        loop {
            if let Some(mut scan) = self.scan.take() {
                let current = scan.node;
                let graph = self.graph;
                let nbrs = graph.neighbors(current);
                while scan.next < nbrs.len() {
                    let u = nbrs[scan.next];
                    scan.next += 1;
                    if !self.nodes[u].visited {
                        self.attach(current, u);
                        continue;
                    }
                    if self.nodes[current].parent == Some(u) || self.nodes[u].parent == Some(current) {
                        continue;
                    }
                    if let Some(ear) = self.ear_through(current, u) {
                        trace!("ear found via back-edge ({current}, {u}): {:?}", ear.path());
                        self.scan = Some(scan);
                        return Some(ear);
                    }
                }
                // A node re-enqueued while it was being scanned stays flagged
                // for its queued re-evaluation.
                if !scan.requeued {
                    self.nodes[current].eval = false;
                }
                continue;
            }

            let current = self.queue.pop_front()?;
            if !self.nodes[current].eval {
                continue;
            }
            trace!(
                "exploring {current} (root {}, dist {})",
                self.nodes[current].root,
                self.nodes[current].dist
            );
            self.scan = Some(Scan {
                node: current,
                next: 0,
                requeued: false,
            });
        }
    }

    fn attach(&mut self, parent: usize, child: usize) {
        let (root, dist) = {
            let p = &self.nodes[parent];
            (p.root, p.dist + 1)
        };
        let c = &mut self.nodes[child];
        c.parent = Some(parent);
        c.root = root;
        c.dist = dist;
        c.visited = true;
        c.eval = true;
        self.nodes[parent].children.push(child);
        self.queue.push_back(child);
    }

    /// Appends the tree path from `u` up to `stop` (inclusive) to `out`.
    fn climb(&self, out: &mut Vec<usize>, u: usize, stop: usize) {
        out.push(u);
        let mut v = u;
        while v != stop {
            v = self.nodes[v].parent.expect("stop node lies on the parent chain");
            out.push(v);
        }
    }

    fn ear_through(&self, s: usize, t: usize) -> Option<Ear> {
        let (rs, rt) = (self.nodes[s].root, self.nodes[t].root);
        if rs == rt {
            return None;
        }
        let mut path = Vec::with_capacity(self.nodes[s].dist + self.nodes[t].dist + 3);
        if self.s_size == 0 {
            // Both branches hang off the start node: close a cycle through it.
            let r = self.root_node;
            self.climb(&mut path, s, r);
            path.reverse(); // r, rs, .., s
            self.climb(&mut path, t, r);
            path.pop(); // r again
            return Some(Ear::cycle(path));
        }
        if self.in_s[s] && self.in_s[t] {
            return None;
        }
        self.climb(&mut path, s, rs);
        path.reverse();
        self.climb(&mut path, t, rt);
        Some(Ear::open(path))
    }

    /// Checks that `ear` can be merged into the current `S`.
    pub fn validate_ear(&self, ear: &Ear) -> Result<()> {
        let n = self.graph.node_count();
        let path = ear.path();
        let bad = |msg: String| Err(Error::EarNotOpen(msg));
        if let Some(&v) = path.iter().find(|&&v| v >= n) {
            return bad(format!("node {v} out of range"));
        }
        let mut seen = vec![false; n];
        for &v in path {
            if std::mem::replace(&mut seen[v], true) {
                return bad(format!("node {v} repeated"));
            }
        }
        if let Some(w) = path.windows(2).find(|w| !self.graph.has_edge(w[0], w[1])) {
            return bad(format!("({}, {}) is not an edge", w[0], w[1]));
        }
        if ear.is_cycle() {
            if self.s_size != 0 {
                return bad("a cycle can only start an empty subgraph".into());
            }
            if path.len() < 3 || !self.graph.has_edge(path[path.len() - 1], path[0]) {
                return bad("not a cycle of at least 3 nodes".into());
            }
            if !path.contains(&self.root_node) {
                return bad(format!(
                    "initial cycle must pass through the start node {}",
                    self.root_node
                ));
            }
            return Ok(());
        }
        if self.s_size == 0 {
            return bad("the first ear must be a cycle".into());
        }
        if path.len() < 3 {
            return bad("an open ear needs at least one inner node".into());
        }
        let (a, b) = ear.endpoints().expect("open ear with >= 3 nodes");
        if !self.in_s[a] || !self.in_s[b] {
            return bad(format!("endpoints ({a}, {b}) must lie in S"));
        }
        if let Some(&v) = ear.inner().iter().find(|&&v| self.in_s[v]) {
            return bad(format!("inner node {v} already in S"));
        }
        Ok(())
    }

    /// Merges `ear` into `S` and repairs `root`/`dist` below it.
    ///
    /// Every ear node becomes its own root at distance 0. A node `v` outside
    /// `S` below an inner node takes its nearest ear ancestor `p` as root and
    /// `dist(v) - dist(p)` as distance (both values from before the update).
    /// Ear nodes and those descendants are re-enqueued for evaluation.
    pub fn apply_ear(&mut self, ear: &Ear) -> Result<()> {
        self.validate_ear(ear)?;
        let added: Vec<usize> = ear.inner().to_vec();
        trace!("applying ear {:?}", ear.path());

        self.thread_tree(ear);

        let old_dist: Vec<usize> = added.iter().map(|&p| self.nodes[p].dist).collect();
        for &p in &added {
            self.in_s[p] = true;
        }
        self.s_size += added.len();
        let graph = self.graph;
        for &p in &added {
            for &w in graph.neighbors(p) {
                self.dominated[w] += 1;
            }
        }

        let mut affected: Vec<usize> = ear.path().to_vec();
        let mut stack = Vec::new();
        for (&p, &base) in added.iter().zip(&old_dist) {
            let node = &mut self.nodes[p];
            node.root = p;
            node.dist = 0;
            stack.extend(node.children.iter().copied());
            while let Some(v) = stack.pop() {
                // Ear nodes are handled as their own roots; older members of S
                // keep their subtrees.
                if self.in_s[v] {
                    continue;
                }
                let node = &mut self.nodes[v];
                node.root = p;
                node.dist = node.dist.saturating_sub(base);
                affected.push(v);
                stack.extend(node.children.iter().copied());
            }
        }

        for &v in &affected {
            self.nodes[v].eval = true;
            self.queue.push_back(v);
            if let Some(scan) = self.scan.as_mut() {
                if scan.node == v {
                    scan.requeued = true;
                }
            }
        }
        trace!("re-enqueued {} nodes, |S| = {}", affected.len(), self.s_size);

        debug_assert!(
            crate::biconnect::InducedView::from_mask(self.graph, self.in_s.clone()).is_biconnected(),
            "S lost 2-connectivity after applying {:?}",
            ear.path()
        );
        Ok(())
    }

    /// Makes every node joining `S` hang off `S` or an earlier ear node, so
    /// that `S` stays closed under taking parents. Ears produced by the search
    /// already have this shape; externally built ears are threaded along
    /// their path.
    fn thread_tree(&mut self, ear: &Ear) {
        let path = ear.path();
        let joins = |state: &Self, v: usize| ear.inner().contains(&v) || state.in_s[v];
        let (order, anchor): (Vec<usize>, usize) = if ear.is_cycle() {
            let r = self.root_node;
            let at = path.iter().position(|&v| v == r).expect("validated");
            let rotated = (1..path.len()).map(|k| path[(at + k) % path.len()]).collect();
            (rotated, r)
        } else {
            (ear.inner().to_vec(), path[0])
        };
        let consistent = order.iter().all(|&v| {
            self.nodes[v].visited
                && match self.nodes[v].parent {
                    Some(p) => p == anchor || joins(self, p),
                    None => false,
                }
        });
        if consistent {
            return;
        }
        let mut prev = anchor;
        for &v in &order {
            if let Some(old) = self.nodes[v].parent {
                self.nodes[old].children.retain(|&c| c != v);
            }
            if !self.nodes[v].visited {
                self.nodes[v].visited = true;
                self.nodes[v].dist = self.nodes[prev].dist.saturating_add(1);
            }
            self.nodes[v].parent = Some(prev);
            self.nodes[prev].children.push(v);
            prev = v;
        }
    }
}
