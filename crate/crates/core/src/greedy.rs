//! Greedy construction: score candidate ears, keep a bounded candidate list
//! and grow `S` with the best ear until every outside node is m-dominated.
//!
//! For a node `u` and a set `A` (the inner nodes of an ear), the node score is
//!
//! ```text
//! dom(u, A) = m - dom(u, S)                      if u in A
//!           = min(|N(u) ∩ A|, m - dom(u, S))     otherwise
//! ```
//!
//! and an ear is worth the sum of node scores over the not yet m-dominated
//! part of `N[In(P)] \ S`, divided by `|In(P)|`.

use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use rand::Rng;

use crate::ear_growth::{Ear, GrowthState};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Candidate list size used by the reference experiments.
pub const DEFAULT_CANDIDATES: usize = 500;
/// Upper end of the randomization interval used by the reference experiments.
pub const DEFAULT_ALPHA0: f64 = 1.25;

/// Exact non-negative-denominator fraction, compared by cross-multiplication.
#[derive(Clone, Copy, Debug)]
pub struct Ratio {
    num: i64,
    den: u64,
}

impl Ratio {
    /// Panics on a zero denominator.
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        Self { num, den }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Ratio {}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = i128::from(self.num) * i128::from(other.den);
        let rhs = i128::from(other.num) * i128::from(self.den);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GreedyParams {
    /// Domination requirement.
    pub m: usize,
    /// Candidate list size that triggers a selection; also its capacity.
    pub candidate_target: usize,
    /// Scores are multiplied by a factor drawn from `(1, alpha0)`; `1` turns
    /// randomization off.
    pub alpha0: f64,
}

impl GreedyParams {
    pub fn new(m: usize, candidate_target: usize, alpha0: f64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSpec("m must be at least 1".into()));
        }
        if candidate_target == 0 {
            return Err(Error::InvalidSpec("candidate list size must be at least 1".into()));
        }
        if !(alpha0 >= 1.0 && alpha0.is_finite()) {
            return Err(Error::InvalidSpec(format!(
                "alpha0 must be a finite value >= 1, got {alpha0}"
            )));
        }
        Ok(Self {
            m,
            candidate_target,
            alpha0,
        })
    }

    /// Unrandomized selection.
    pub fn deterministic(m: usize, candidate_target: usize) -> Self {
        Self {
            m,
            candidate_target,
            alpha0: 1.0,
        }
    }
}

impl Default for GreedyParams {
    fn default() -> Self {
        Self {
            m: 1,
            candidate_target: DEFAULT_CANDIDATES,
            alpha0: DEFAULT_ALPHA0,
        }
    }
}

/// Score of a single node from its link count into `A`, membership in `A`
/// and current domination. Negative once `u` is over-dominated.
#[inline]
pub fn node_score(links: usize, in_a: bool, dominated: usize, m: usize) -> i64 {
    let missing = m as i64 - dominated as i64;
    if in_a {
        missing
    } else {
        missing.min(links as i64)
    }
}

/// `dom(u, A)` against the current `S` of `state`.
pub fn dom_node(state: &GrowthState<'_>, u: usize, a: &[usize], m: usize) -> i64 {
    let g = state.graph();
    let in_a = a.contains(&u);
    let links = if in_a {
        0
    } else {
        a.iter().filter(|&&x| g.has_edge(u, x)).count()
    };
    node_score(links, in_a, state.dominated_count(u), m)
}

/// Heuristic value of `ear` for the current `S`.
pub fn dom_ear(ear: &Ear, state: &GrowthState<'_>, m: usize) -> Result<Ratio> {
    if ear.inner().is_empty() {
        return Err(Error::EmptyInner);
    }
    let mut eval = Evaluator::new(state.graph().node_count());
    let (value, _) = eval.score(ear, state, m);
    Ok(value)
}

/// A node of `N[In(P)]` that is outside `S` and not yet m-dominated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UncoveredNode {
    pub node: usize,
    /// `|N(node) ∩ In(P)|`, unused for inner nodes.
    pub links: usize,
    pub inner: bool,
}

impl UncoveredNode {
    fn score(&self, dominated: usize, m: usize) -> i64 {
        node_score(self.links, self.inner, dominated, m)
    }
}

/// An ear with its heuristic value and the set `U(P)` it was computed from.
#[derive(Clone, Debug)]
pub struct Candidate {
    ear: Ear,
    dom_value: Ratio,
    uncovered: Vec<UncoveredNode>,
}

impl Candidate {
    pub fn ear(&self) -> &Ear {
        &self.ear
    }

    pub fn into_ear(self) -> Ear {
        self.ear
    }

    pub fn dom_value(&self) -> Ratio {
        self.dom_value
    }

    pub fn uncovered(&self) -> &[UncoveredNode] {
        &self.uncovered
    }

    /// Drops members that joined `S` or became m-dominated and recomputes
    /// the value from what is left.
    fn refresh(&mut self, state: &GrowthState<'_>, m: usize) {
        self.uncovered
            .retain(|u| !state.in_s(u.node) && state.dominated_count(u.node) < m);
        let sum: i64 = self
            .uncovered
            .iter()
            .map(|u| u.score(state.dominated_count(u.node), m))
            .sum();
        self.dom_value = Ratio::new(sum, self.dom_value.den);
    }
}

/// Scratch buffers for scoring ears without reallocating per ear.
#[derive(Clone, Debug)]
struct Evaluator {
    stamp: u32,
    inner_mark: Vec<u32>,
    seen: Vec<u32>,
    links: Vec<usize>,
    touched: Vec<usize>,
}

impl Evaluator {
    fn new(n: usize) -> Self {
        Self {
            stamp: 0,
            inner_mark: vec![0; n],
            seen: vec![0; n],
            links: vec![0; n],
            touched: Vec::new(),
        }
    }

    fn next_stamp(&mut self) -> u32 {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.inner_mark.fill(0);
            self.seen.fill(0);
            self.stamp = 1;
        }
        self.stamp
    }

    fn score(&mut self, ear: &Ear, state: &GrowthState<'_>, m: usize) -> (Ratio, Vec<UncoveredNode>) {
        let g: &Graph = state.graph();
        let inner = ear.inner();
        let stamp = self.next_stamp();
        self.touched.clear();
        for &x in inner {
            self.inner_mark[x] = stamp;
        }
        for &x in inner {
            if self.seen[x] != stamp {
                self.seen[x] = stamp;
                self.links[x] = 0;
                self.touched.push(x);
            }
            for &w in g.neighbors(x) {
                if state.in_s(w) || self.inner_mark[w] == stamp {
                    continue;
                }
                if self.seen[w] != stamp {
                    self.seen[w] = stamp;
                    self.links[w] = 0;
                    self.touched.push(w);
                }
                self.links[w] += 1;
            }
        }
        let open = |u: usize| !state.in_s(u) && state.dominated_count(u) < m;
        let entry = |u: usize| UncoveredNode {
            node: u,
            links: self.links[u],
            inner: self.inner_mark[u] == stamp,
        };
        let mut sum = 0i64;
        let mut count = 0;
        for &u in self.touched.iter().filter(|&&u| open(u)) {
            sum += entry(u).score(state.dominated_count(u), m);
            count += 1;
        }
        let value = Ratio::new(sum, inner.len().max(1) as u64);
        if sum <= 0 {
            return (value, Vec::new());
        }
        let mut uncovered = Vec::with_capacity(count);
        uncovered.extend(self.touched.iter().copied().filter(|&u| open(u)).map(entry));
        (value, uncovered)
    }
}

fn ear_key(ear: &Ear) -> u64 {
    let mut h = DefaultHasher::new();
    ear.is_cycle().hash(&mut h);
    let p = ear.path();
    let n = p.len();
    if n == 0 {
        return h.finish();
    }
    // Same sequence as `Ear::canonical`, without building it.
    let (start, forward) = if !ear.is_cycle() {
        if p[0] <= p[n - 1] {
            (0, true)
        } else {
            (n - 1, false)
        }
    } else {
        let start = (0..n).min_by_key(|&i| p[i]).unwrap_or(0);
        (start, p[(start + 1) % n] <= p[(start + n - 1) % n])
    };
    for k in 0..n {
        let i = if forward { (start + k) % n } else { (start + n - k) % n };
        p[i].hash(&mut h);
    }
    h.finish()
}

/// Bounded list of positive-value candidate ears, in insertion order and
/// free of duplicates.
#[derive(Clone, Debug)]
pub struct CandidateList {
    items: Vec<Candidate>,
    keys: HashSet<u64>,
    capacity: usize,
    eval: Evaluator,
}

impl CandidateList {
    pub fn new(node_count: usize, capacity: usize) -> Self {
        Self {
            items: Vec::new(),
            keys: HashSet::new(),
            capacity: capacity.max(1),
            eval: Evaluator::new(node_count),
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn items(&self) -> &[Candidate] {
        &self.items
    }

    /// Scores `ear` and stores it when it is new, valuable and there is room.
    pub fn offer(&mut self, ear: Ear, state: &GrowthState<'_>, m: usize) -> bool {
        if self.items.len() >= self.capacity || ear.inner().is_empty() {
            return false;
        }
        if ear.inner().iter().any(|&v| state.in_s(v)) {
            return false;
        }
        let key = ear_key(&ear);
        if self.keys.contains(&key) {
            return false;
        }
        let (dom_value, uncovered) = self.eval.score(&ear, state, m);
        if !dom_value.is_positive() {
            return false;
        }
        self.keys.insert(key);
        self.items.push(Candidate {
            ear,
            dom_value,
            uncovered,
        });
        true
    }

    /// Removes and returns the candidate at `index`.
    pub fn take(&mut self, index: usize) -> Candidate {
        let cand = self.items.remove(index);
        self.keys.remove(&ear_key(&cand.ear));
        cand
    }

    /// Brings the list in line with `S` after an ear was merged: splits ears
    /// whose inner nodes joined `S`, refreshes the others from their stored
    /// uncovered sets and drops everything no longer worth anything.
    pub fn update(&mut self, state: &GrowthState<'_>, m: usize) {
        let old = std::mem::take(&mut self.items);
        self.keys.clear();
        for mut cand in old {
            let broken = cand.ear.is_cycle() || cand.ear.inner().iter().any(|&v| state.in_s(v));
            if broken {
                for piece in split_at_s(&cand.ear, state.s_mask()) {
                    self.offer(piece, state, m);
                }
                continue;
            }
            cand.refresh(state, m);
            if cand.dom_value.is_positive() && self.keys.insert(ear_key(&cand.ear)) {
                self.items.push(cand);
            }
        }
    }
}

/// Cuts an ear at every node of `S`, keeping the pieces with at least one
/// inner node. A cycle needs two nodes in `S` to produce anything.
pub fn split_at_s(ear: &Ear, in_s: &[bool]) -> Vec<Ear> {
    let path = ear.path();
    let seq: Vec<usize> = if ear.is_cycle() {
        let hits: Vec<usize> = (0..path.len()).filter(|&i| in_s[path[i]]).collect();
        if hits.len() < 2 {
            return Vec::new();
        }
        let start = hits[0];
        (0..=path.len()).map(|k| path[(start + k) % path.len()]).collect()
    } else {
        path.to_vec()
    };
    let mut pieces = Vec::new();
    let mut start = None;
    for (i, &v) in seq.iter().enumerate() {
        if !in_s[v] {
            continue;
        }
        if let Some(s) = start {
            if i - s >= 2 {
                pieces.push(Ear::open(seq[s..=i].to_vec()));
            }
        }
        start = Some(i);
    }
    pieces
}

/// Index of the candidate maximizing `alpha_P * dom(P)`, one independent
/// `alpha_P` from `(1, alpha0)` per candidate. Earliest wins ties. With
/// `alpha0 == 1` the comparison is exact and no randomness is consumed.
pub fn select_best<R: Rng + ?Sized>(items: &[Candidate], alpha0: f64, rng: &mut R) -> Result<usize> {
    if items.is_empty() {
        return Err(Error::EmptyList);
    }
    if alpha0 <= 1.0 {
        let mut best = 0;
        for (i, c) in items.iter().enumerate().skip(1) {
            if c.dom_value > items[best].dom_value {
                best = i;
            }
        }
        return Ok(best);
    }
    let mut best = 0;
    let mut best_score = f64::NEG_INFINITY;
    for (i, c) in items.iter().enumerate() {
        let alpha: f64 = rng.random_range(1.0..alpha0);
        let score = alpha * c.dom_value.to_f64();
        if score > best_score {
            best = i;
            best_score = score;
        }
    }
    Ok(best)
}

/// Pulls ears from the search until the list holds `target` candidates or
/// the search runs dry. Returns `true` in the latter case.
pub fn collect_candidates(state: &mut GrowthState<'_>, list: &mut CandidateList, target: usize, m: usize) -> bool {
    let target = target.min(list.capacity());
    while list.len() < target {
        match state.find_next_ear() {
            Some(ear) => {
                list.offer(ear, state, m);
            }
            None => return true,
        }
    }
    false
}

/// Grows `S` from `root` until it m-dominates the graph. `None` when the
/// candidate ears run out first.
pub fn greedy_construct<R: Rng + ?Sized>(
    g: &Graph,
    params: &GreedyParams,
    root: usize,
    rng: &mut R,
) -> Option<Vec<usize>> {
    greedy_construct_observed(g, params, root, rng, |_, _| {})
}

/// [`greedy_construct`] with a hook called after every merged ear.
pub fn greedy_construct_observed<R, F>(
    g: &Graph,
    params: &GreedyParams,
    root: usize,
    rng: &mut R,
    mut on_apply: F,
) -> Option<Vec<usize>>
where
    R: Rng + ?Sized,
    F: FnMut(&GrowthState<'_>, &Ear),
{
    let m = params.m;
    let mut state = GrowthState::new(g, root);
    let mut list = CandidateList::new(g.node_count(), params.candidate_target);
    loop {
        if state.is_m_dominating(m) {
            return Some(state.s_nodes());
        }
        collect_candidates(&mut state, &mut list, params.candidate_target, m);
        if list.is_empty() {
            return None;
        }
        let index = select_best(list.items(), params.alpha0, rng).expect("non-empty list");
        let chosen = list.take(index);
        if let Err(err) = state.apply_ear(chosen.ear()) {
            debug_assert!(false, "selected candidate no longer applies: {err}");
            continue;
        }
        on_apply(&state, chosen.ear());
        list.update(&state, m);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cand(num: i64, den: u64) -> Candidate {
        Candidate {
            ear: Ear::open(vec![0, 1, 2]),
            dom_value: Ratio::new(num, den),
            uncovered: Vec::new(),
        }
    }

    #[test]
    fn ratio_ordering_is_exact() {
        assert_eq!(Ratio::new(2, 4), Ratio::new(1, 2));
        assert!(Ratio::new(1, 3) < Ratio::new(34, 100));
        assert!(Ratio::new(-1, 2) < Ratio::new(0, 7));
    }

    #[test]
    fn node_score_cases() {
        assert_eq!(node_score(2, false, 1, 2), 1);
        assert_eq!(node_score(0, true, 0, 2), 2);
        assert_eq!(node_score(3, false, 1, 1), 0);
        assert_eq!(node_score(3, false, 3, 1), -2);
    }

    #[test]
    fn dom_node_against_state() {
        // Triangle 0-1-2 in S; node 3 adjacent to 0 only, node 4 to 3.
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 1)]).unwrap();
        let mut state = GrowthState::new(&g, 0);
        state.apply_ear(&Ear::cycle(vec![0, 1, 2])).unwrap();
        assert_eq!(dom_node(&state, 3, &[4], 2), 1);
        assert_eq!(dom_node(&state, 4, &[4], 2), 1);
        assert_eq!(dom_node(&state, 3, &[3, 4], 2), 1);
    }

    #[test]
    fn dom_ear_single_inner() {
        // S = {0,1,2}; x = 3 with outside neighbors a = 4, b = 5.
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 1), (3, 4), (3, 5)]).unwrap();
        let mut state = GrowthState::new(&g, 0);
        state.apply_ear(&Ear::cycle(vec![0, 1, 2])).unwrap();
        // x has 2 dominators already, so with m = 1 only a and b count.
        let v = dom_ear(&Ear::open(vec![0, 3, 1]), &state, 1).unwrap();
        assert_eq!(v, Ratio::new(2, 1));
        // m = 3: x contributes 3 - 2 = 1, a and b min(1, 3) = 1 each.
        let v = dom_ear(&Ear::open(vec![0, 3, 1]), &state, 3).unwrap();
        assert_eq!(v, Ratio::new(3, 1));
    }

    #[test]
    fn dom_ear_undominated_inner_and_neighbors() {
        // x = 3 attached to S through 0 only is at dom 1; with m = 2 it
        // contributes 1, its private neighbors 4 and 5 contribute 1 each.
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (3, 5), (4, 1), (5, 2)]).unwrap();
        let mut state = GrowthState::new(&g, 0);
        state.apply_ear(&Ear::cycle(vec![0, 1, 2])).unwrap();
        // Ear 0-3-4-1: In = {3, 4}. 3: 2-1 = 1; 4: 2-1 = 1; 5: min(1, 2-1) = 1.
        assert_eq!(
            dom_ear(&Ear::open(vec![0, 3, 4, 1]), &state, 2).unwrap(),
            Ratio::new(3, 2)
        );
    }

    #[test]
    fn dom_ear_rejects_empty_inner() {
        let g = Graph::complete(4);
        let mut state = GrowthState::new(&g, 0);
        state.apply_ear(&Ear::cycle(vec![0, 1, 2])).unwrap();
        assert!(matches!(
            dom_ear(&Ear::open(vec![0, 1]), &state, 1),
            Err(Error::EmptyInner)
        ));
    }

    #[test]
    fn fully_dominated_ear_is_not_stored() {
        let g = Graph::complete(4);
        let mut state = GrowthState::new(&g, 0);
        state.apply_ear(&Ear::cycle(vec![0, 1, 2])).unwrap();
        let ear = Ear::open(vec![0, 3, 1]);
        assert_eq!(dom_ear(&ear, &state, 1).unwrap(), Ratio::new(0, 1));
        let mut list = CandidateList::new(4, 10);
        assert!(!list.offer(ear, &state, 1));
        assert!(list.is_empty());
    }

    #[test]
    fn select_best_deterministic_first_max() {
        let items = [cand(2, 1), cand(3, 1), cand(3, 1)];
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(select_best(&items, 1.0, &mut rng).unwrap(), 1);
        assert!(matches!(select_best(&[], 1.0, &mut rng), Err(Error::EmptyList)));
    }

    #[test]
    fn select_best_disjoint_ranges() {
        let items = [cand(4, 1), cand(1, 1)];
        for seed in 0..200 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            assert_eq!(select_best(&items, 1.25, &mut rng).unwrap(), 0);
        }
    }

    #[test]
    fn select_best_overlapping_ranges_mixes() {
        // P(3.5 a1 > 4 a0) for a0, a1 ~ U(1, 1.25) is 16 * (0.5 * (1.25 - 8/7) * (1.25 * 7/8 - 1))
        // ~= 0.0804.
        let items = [cand(4, 1), cand(7, 2)];
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let draws = 10_000;
        let hits = (0..draws)
            .filter(|_| select_best(&items, 1.25, &mut rng).unwrap() == 1)
            .count();
        assert!(hits > 0 && hits < draws, "{hits}");
        let freq = hits as f64 / draws as f64;
        assert!((freq - 0.0804).abs() < 0.01, "{freq}");
    }

    #[test]
    fn split_examples() {
        let mut in_s = vec![false; 8];
        for v in [0, 1, 5] {
            in_s[v] = true;
        }
        // (a, u, b) with u now in S: both halves are chords.
        assert!(split_at_s(&Ear::open(vec![0, 5, 1]), &in_s).is_empty());
        // (a, x, u, y, b): halves of 3 nodes survive.
        assert_eq!(
            split_at_s(&Ear::open(vec![0, 2, 5, 3, 1]), &in_s),
            vec![Ear::open(vec![0, 2, 5]), Ear::open(vec![5, 3, 1])]
        );
        // Two shared nodes give three pieces, the middle one a chord.
        in_s[6] = true;
        assert_eq!(
            split_at_s(&Ear::open(vec![0, 2, 5, 6, 3, 1]), &in_s),
            vec![Ear::open(vec![0, 2, 5]), Ear::open(vec![6, 3, 1])]
        );
        // Cycles.
        let mut in_s = vec![false; 6];
        in_s[0] = true;
        assert!(split_at_s(&Ear::cycle(vec![0, 1, 2]), &in_s).is_empty());
        in_s[2] = true;
        assert_eq!(
            split_at_s(&Ear::cycle(vec![0, 1, 2, 3]), &in_s),
            vec![Ear::open(vec![0, 1, 2]), Ear::open(vec![2, 3, 0])]
        );
    }

    #[test]
    fn update_drops_candidates_whose_uncovered_set_empties() {
        // S = triangle 0-1-2. Node 5 is only reachable through 3 or 4.
        let g = Graph::from_edge_list(
            6,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 1), (0, 4), (4, 2), (3, 5), (4, 5)],
        )
        .unwrap();
        let mut state = GrowthState::new(&g, 0);
        state.apply_ear(&Ear::cycle(vec![0, 1, 2])).unwrap();
        let mut list = CandidateList::new(6, 10);
        assert!(list.offer(Ear::open(vec![0, 3, 1]), &state, 1));
        assert!(list.offer(Ear::open(vec![0, 4, 2]), &state, 1));
        let first = list.take(0);
        state.apply_ear(first.ear()).unwrap();
        list.update(&state, 1);
        assert!(list.is_empty());
    }

    #[test]
    fn duplicates_are_ignored() {
        let g = Graph::complete(5);
        let mut state = GrowthState::new(&g, 0);
        state.apply_ear(&Ear::cycle(vec![0, 1, 2])).unwrap();
        // m = 4 leaves nodes 3 and 4 one dominator short.
        let mut list = CandidateList::new(5, 10);
        assert!(list.offer(Ear::open(vec![0, 3, 4, 1]), &state, 4));
        assert!(!list.offer(Ear::open(vec![1, 4, 3, 0]), &state, 4));
        assert_eq!(list.len(), 1);
    }

    #[test]
    fn collect_respects_target_and_exhaustion() {
        let g = Graph::complete(6);
        let mut state = GrowthState::new(&g, 0);
        let mut list = CandidateList::new(6, 500);
        assert!(!collect_candidates(&mut state, &mut list, 1, 1));
        assert_eq!(list.len(), 1);
        assert!(collect_candidates(&mut state, &mut list, 500, 1));
        assert!(list.len() > 1);

        let tree = Graph::star(4);
        let mut state = GrowthState::new(&tree, 0);
        let mut list = CandidateList::new(5, 500);
        assert!(collect_candidates(&mut state, &mut list, 500, 1));
        assert!(list.is_empty());
    }

    #[test]
    fn k4_after_initial_triangle() {
        // With S = {0, 1, 2} the only ears are (a, 3, b) for a != b in S; the
        // search reaches those whose tree side runs through 3's parent 0.
        let g = Graph::complete(4);
        for (m, expected) in [(1, 0), (4, 2)] {
            let mut state = GrowthState::new(&g, 0);
            state.apply_ear(&Ear::cycle(vec![0, 1, 2])).unwrap();
            let mut list = CandidateList::new(4, 500);
            assert!(collect_candidates(&mut state, &mut list, 500, m));
            assert_eq!(list.len(), expected, "m = {m}");
            for c in list.items() {
                assert_eq!(c.ear().inner(), &[3]);
                let (a, b) = c.ear().endpoints().unwrap();
                assert!(a != b && a < 3 && b < 3);
            }
        }
    }

    #[test]
    fn greedy_small_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let params = GreedyParams::deterministic(1, 500);
        assert_eq!(
            greedy_construct(&Graph::complete(5), &params, 0, &mut rng)
                .unwrap()
                .len(),
            3
        );
        assert_eq!(
            greedy_construct(&Graph::cycle(5), &params, 0, &mut rng).unwrap(),
            vec![0, 1, 2, 3, 4]
        );
        assert!(greedy_construct(&Graph::star(5), &params, 0, &mut rng).is_none());
        assert!(greedy_construct(&Graph::star(5), &params, 3, &mut rng).is_none());
    }

    #[test]
    fn params_validation() {
        assert!(GreedyParams::new(0, 5, 1.0).is_err());
        assert!(GreedyParams::new(1, 0, 1.0).is_err());
        assert!(GreedyParams::new(1, 5, 0.5).is_err());
        assert!(GreedyParams::new(1, 5, f64::NAN).is_err());
        assert!(GreedyParams::new(2, 500, 1.25).is_ok());
    }
}
