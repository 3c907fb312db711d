//! Biconnectivity of induced subgraphs via an iterative articulation-point
//! search (Hopcroft–Tarjan lowpoints).

use crate::error::{Error, Result};
use crate::graph::Graph;

const UNSEEN: usize = usize::MAX;

/// The subgraph of `base` induced by a node subset.
#[derive(Clone, Debug)]
pub struct InducedView<'g> {
    base: &'g Graph,
    mask: Vec<bool>,
    members: Vec<usize>,
}

impl<'g> InducedView<'g> {
    /// Panics if a member is not a node of `base`.
    pub fn new(base: &'g Graph, nodes: &[usize]) -> Self {
        let mut mask = vec![false; base.node_count()];
        for &v in nodes {
            mask[v] = true;
        }
        Self::from_mask(base, mask)
    }

    pub fn from_mask(base: &'g Graph, mask: Vec<bool>) -> Self {
        assert_eq!(mask.len(), base.node_count());
        let members = (0..mask.len()).filter(|&v| mask[v]).collect();
        Self { base, mask, members }
    }

    pub fn base(&self) -> &'g Graph {
        self.base
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// True iff the view has at least 3 nodes, is connected and has no
    /// articulation point.
    pub fn is_biconnected(&self) -> bool {
        BiconnectivityChecker::new(self.base.node_count()).is_biconnected(self.base, &self.members, |v| self.mask[v])
    }

    /// Articulation points in ascending order.
    pub fn articulation_points(&self) -> Result<Vec<usize>> {
        let mut checker = BiconnectivityChecker::new(self.base.node_count());
        let Some(&start) = self.members.first() else {
            return Ok(Vec::new());
        };
        let mut cuts = Vec::new();
        let reached = checker.search(
            self.base,
            start,
            |v| self.mask[v],
            |v| {
                cuts.push(v);
                true
            },
        );
        if reached != self.members.len() {
            return Err(Error::DisconnectedInput);
        }
        cuts.sort_unstable();
        cuts.dedup();
        Ok(cuts)
    }
}

pub fn is_biconnected(view: &InducedView<'_>) -> bool {
    view.is_biconnected()
}

pub fn articulation_points(view: &InducedView<'_>) -> Result<Vec<usize>> {
    view.articulation_points()
}

/// Reusable scratch space for repeated biconnectivity tests on one graph.
///
/// Membership is passed as a predicate so callers can test `S \ {u}` without
/// materializing a new mask.
#[derive(Clone, Debug)]
pub struct BiconnectivityChecker {
    disc: Vec<usize>,
    low: Vec<usize>,
    touched: Vec<usize>,
    stack: Vec<Frame>,
}

#[derive(Clone, Copy, Debug)]
struct Frame {
    node: usize,
    parent: usize,
    next: usize,
    children: usize,
}

impl BiconnectivityChecker {
    pub fn new(n: usize) -> Self {
        Self {
            disc: vec![UNSEEN; n],
            low: vec![0; n],
            touched: Vec::new(),
            stack: Vec::new(),
        }
    }

    /// `members` must list exactly the nodes accepted by `in_set`.
    pub fn is_biconnected<F>(&mut self, g: &Graph, members: &[usize], in_set: F) -> bool
    where
        F: Fn(usize) -> bool,
    {
        if members.len() < 3 {
            return false;
        }
        self.is_biconnected_counted(g, members[0], members.len(), in_set)
    }

    /// Like [`Self::is_biconnected`] but only needs one member and the size.
    pub fn is_biconnected_counted<F>(&mut self, g: &Graph, start: usize, size: usize, in_set: F) -> bool
    where
        F: Fn(usize) -> bool,
    {
        if size < 3 {
            return false;
        }
        let mut has_cut = false;
        let reached = self.search(g, start, in_set, |_| {
            has_cut = true;
            false
        });
        !has_cut && reached == size
    }

    /// Depth-first search from `start` over nodes accepted by `in_set`,
    /// reporting articulation points to `on_cut` (which returns whether to
    /// keep going). Returns the number of nodes reached.
    fn search<F, C>(&mut self, g: &Graph, start: usize, in_set: F, mut on_cut: C) -> usize
    where
        F: Fn(usize) -> bool,
        C: FnMut(usize) -> bool,
    {
        for &v in &self.touched {
            self.disc[v] = UNSEEN;
        }
        self.touched.clear();
        self.stack.clear();

        let mut time = 0;
        self.disc[start] = time;
        self.low[start] = time;
        self.touched.push(start);
        self.stack.push(Frame {
            node: start,
            parent: UNSEEN,
            next: 0,
            children: 0,
        });

        while let Some(top) = self.stack.last_mut() {
            let v = top.node;
            let nbrs = g.neighbors(v);
            if top.next < nbrs.len() {
                let w = nbrs[top.next];
                top.next += 1;
                if !in_set(w) {
                    continue;
                }
                if self.disc[w] == UNSEEN {
                    top.children += 1;
                    time += 1;
                    self.disc[w] = time;
                    self.low[w] = time;
                    self.touched.push(w);
                    self.stack.push(Frame {
                        node: w,
                        parent: v,
                        next: 0,
                        children: 0,
                    });
                } else if w != top.parent {
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
                continue;
            }

            let done = self.stack.pop().expect("non-empty stack");
            if let Some(parent) = self.stack.last() {
                let p = parent.node;
                self.low[p] = self.low[p].min(self.low[v]);
                // The root is handled by its child count below.
                if parent.parent != UNSEEN && self.low[v] >= self.disc[p] && !on_cut(p) {
                    return self.touched.len();
                }
            } else if done.children > 1 && !on_cut(v) {
                return self.touched.len();
            }
        }
        self.touched.len()
    }
}
