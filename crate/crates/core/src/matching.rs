//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm) and the predicates built on it.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexSet};

const NONE: usize = usize::MAX;

/// A matching of a host graph, stored as a mate table.
#[derive(Debug, Clone)]
pub struct Matching<'g> {
    host: &'g Graph,
    mate: Vec<Option<usize>>,
    size: usize,
}

impl<'g> Matching<'g> {
    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_saturated(&self, v: usize) -> bool {
        self.mate[v].is_some()
    }

    /// Matched pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
    }

    pub fn exposed(&self) -> VertexSet {
        (0..self.mate.len())
            .filter(|&v| self.mate[v].is_none())
            .collect()
    }

    pub fn is_perfect(&self) -> bool {
        2 * self.size == self.host.n()
    }

    pub fn is_near_perfect(&self) -> bool {
        2 * self.size + 1 == self.host.n()
    }
}

/// Reusable blossom search state. One instance can run many searches on
/// graphs of the same order without reallocating.
pub(crate) struct Blossom {
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    outer: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom {
    pub(crate) fn new(n: usize) -> Self {
        Blossom {
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            outer: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    /// Maximum matching of `g` with vertex `removed` (if any) deleted.
    /// Returns the matching size; the mate table stays readable afterwards.
    pub(crate) fn solve(&mut self, g: &Graph, removed: Option<usize>) -> usize {
        let n = g.n();
        if self.mate.len() != n {
            *self = Blossom::new(n);
        }
        let removed = removed.unwrap_or(NONE);
        self.mate.fill(NONE);

        // Greedy start in ascending order.
        let mut size = 0;
        for u in 0..n {
            if u == removed || self.mate[u] != NONE {
                continue;
            }
            if let Some(&v) = g
                .neighbors(u)
                .iter()
                .find(|&&v| v != removed && self.mate[v] == NONE)
            {
                self.mate[u] = v;
                self.mate[v] = u;
                size += 1;
            }
        }

        for root in 0..n {
            if root == removed || self.mate[root] != NONE {
                continue;
            }
            if let Some(end) = self.augmenting_path(g, root, removed) {
                self.augment(end);
                size += 1;
            }
        }
        size
    }

    pub(crate) fn mate_table(&self) -> Vec<Option<usize>> {
        self.mate
            .iter()
            .map(|&m| (m != NONE).then_some(m))
            .collect()
    }

    /// Breadth-first alternating search from an exposed `root`, contracting
    /// odd cycles by relabeling their vertices with the blossom base. Returns
    /// the exposed endpoint of an augmenting path; `parent` then encodes it.
    fn augmenting_path(&mut self, g: &Graph, root: usize, removed: usize) -> Option<usize> {
        let n = g.n();
        self.parent.fill(NONE);
        self.outer.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.outer[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in g.neighbors(v) {
                if to == removed || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // `to` is outer as well: an odd cycle closes.
                    let tip = self.common_base(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, tip, to);
                    self.mark_path(to, tip, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = tip;
                            if !self.outer[i] {
                                self.outer[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.outer[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    /// Base of the innermost blossom containing both `a` and `b` in the
    /// alternating tree.
    fn common_base(&mut self, mut a: usize, mut b: usize) -> usize {
        self.on_path.fill(false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, tip: usize, mut child: usize) {
        while self.base[v] != tip {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn augment(&mut self, end: usize) {
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// A maximum matching of `g`. Deterministic for a fixed labeling.
pub fn maximum_matching(g: &Graph) -> Matching<'_> {
    let mut search = Blossom::new(g.n());
    let size = search.solve(g, None);
    Matching {
        host: g,
        mate: search.mate_table(),
        size,
    }
}

/// The matching number.
pub fn mu(g: &Graph) -> usize {
    Blossom::new(g.n()).solve(g, None)
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n() % 2 == 0 && 2 * mu(g) == g.n()
}

/// True iff `g` has odd order and every vertex-deleted subgraph has a perfect
/// matching.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.n();
    if n % 2 == 0 {
        return false;
    }
    let mut search = Blossom::new(n);
    (0..n).all(|v| 2 * search.solve(g, Some(v)) == n - 1)
}

/// `μ(G − v)` for every vertex `v`, each from a fresh search.
pub fn mu_vertex_deleted(g: &Graph) -> Vec<usize> {
    let mut search = Blossom::new(g.n());
    (0..g.n()).map(|v| search.solve(g, Some(v))).collect()
}
