//! Exact maximum independent sets by branch and bound.
//!
//! The search branches on a maximum-degree vertex (take it, or drop it),
//! prunes with a greedy clique cover of the remaining candidates, and solves
//! connected components of the candidate set independently.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::mask::{Mask, WideMask};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndependenceError {
    #[error("vertex {0} is outside 0..{1}")]
    VertexOutOfRange(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceResult {
    pub alpha: usize,
    /// One maximum independent set.
    pub witness: VertexSet,
    /// Vertices lying in every maximum independent set, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forced: Option<VertexSet>,
}

pub(crate) struct Search<M> {
    n: usize,
    adj: Vec<M>,
}

impl<M: Mask> Search<M> {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let adj = (0..n)
            .map(|u| {
                let mut row = M::empty(n);
                for &v in g.neighbors(u) {
                    row.insert(v);
                }
                row
            })
            .collect();
        Search { n, adj }
    }

    fn mask_of(&self, vertices: impl IntoIterator<Item = usize>) -> M {
        let mut m = M::empty(self.n);
        for v in vertices {
            m.insert(v);
        }
        m
    }

    /// A maximum independent set inside `cands`.
    fn solve(&self, cands: &M) -> M {
        let mut out = M::empty(self.n);
        for component in self.components(cands) {
            out = out.or(&self.solve_connected(&component));
        }
        out
    }

    fn solve_connected(&self, cands: &M) -> M {
        let mut best = self.greedy(cands);
        let mut best_len = best.count();
        self.branch(M::empty(self.n), 0, cands.clone(), &mut best, &mut best_len);
        best
    }

    fn branch(&self, chosen: M, size: usize, cands: M, best: &mut M, best_len: &mut usize) {
        if cands.is_empty() {
            if size > *best_len {
                *best = chosen;
                *best_len = size;
            }
            return;
        }
        if size + self.clique_cover(&cands) <= *best_len {
            return;
        }
        let components = self.components(&cands);
        if components.len() > 1 {
            let mut chosen = chosen;
            let mut size = size;
            for component in &components {
                let part = self.solve_connected(component);
                size += part.count();
                chosen = chosen.or(&part);
            }
            if size > *best_len {
                *best = chosen;
                *best_len = size;
            }
            return;
        }

        let (pivot, _) = self.max_degree_vertex(&cands);
        let mut closed = self.adj[pivot].clone();
        closed.insert(pivot);

        let mut with_pivot = chosen.clone();
        with_pivot.insert(pivot);
        self.branch(with_pivot, size + 1, cands.and_not(&closed), best, best_len);

        let mut without = cands;
        without.remove(pivot);
        self.branch(chosen, size, without, best, best_len);
    }

    /// Lowest-id vertex of maximum degree within `cands`.
    fn max_degree_vertex(&self, cands: &M) -> (usize, usize) {
        let mut pick = (usize::MAX, 0);
        cands.for_each(|v| {
            let d = self.adj[v].and(cands).count();
            if pick.0 == usize::MAX || d > pick.1 {
                pick = (v, d);
            }
        });
        pick
    }

    /// Number of cliques in a greedy clique cover; bounds α from above.
    fn clique_cover(&self, cands: &M) -> usize {
        // Each entry is the common neighborhood of a clique's members.
        let mut cliques: Vec<M> = Vec::new();
        cands.for_each(|v| match cliques.iter_mut().find(|c| c.contains(v)) {
            Some(common) => *common = common.and(&self.adj[v]),
            None => cliques.push(self.adj[v].clone()),
        });
        cliques.len()
    }

    /// Repeatedly takes a minimum-degree vertex.
    fn greedy(&self, cands: &M) -> M {
        let mut rest = cands.clone();
        let mut out = M::empty(self.n);
        while !rest.is_empty() {
            let mut pick = (usize::MAX, usize::MAX);
            rest.for_each(|v| {
                let d = self.adj[v].and(&rest).count();
                if d < pick.1 {
                    pick = (v, d);
                }
            });
            out.insert(pick.0);
            rest = rest.and_not(&self.adj[pick.0]);
            rest.remove(pick.0);
        }
        out
    }

    fn components(&self, cands: &M) -> Vec<M> {
        let mut rest = cands.clone();
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut component = M::empty(self.n);
            component.insert(start);
            let mut frontier = component.clone();
            loop {
                let mut reach = M::empty(self.n);
                frontier.for_each(|u| reach = reach.or(&self.adj[u]));
                let fresh = reach.and(&rest).and_not(&component);
                if fresh.is_empty() {
                    break;
                }
                component = component.or(&fresh);
                frontier = fresh;
            }
            rest = rest.and_not(&component);
            out.push(component);
        }
        out
    }
}

/// Solver over a fixed host graph; picks the bitset width from its order.
pub(crate) enum Solver {
    Narrow(Search<u64>),
    Wide(Search<WideMask>),
}

impl Solver {
    pub(crate) fn new(g: &Graph) -> Self {
        if g.n() <= 64 {
            Solver::Narrow(Search::new(g))
        } else {
            Solver::Wide(Search::new(g))
        }
    }

    /// A maximum independent set of the subgraph induced by `allowed`, in
    /// host labels.
    pub(crate) fn best_within(&self, allowed: impl IntoIterator<Item = usize>) -> Vec<usize> {
        match self {
            Solver::Narrow(s) => s.solve(&s.mask_of(allowed)).to_vec(),
            Solver::Wide(s) => s.solve(&s.mask_of(allowed)).to_vec(),
        }
    }

    pub(crate) fn alpha_within(&self, allowed: impl IntoIterator<Item = usize>) -> usize {
        match self {
            Solver::Narrow(s) => s.solve(&s.mask_of(allowed)).count(),
            Solver::Wide(s) => s.solve(&s.mask_of(allowed)).count(),
        }
    }
}

pub fn max_independent_set(g: &Graph) -> IndependenceResult {
    let witness = VertexSet::from(Solver::new(g).best_within(0..g.n()));
    IndependenceResult {
        alpha: witness.len(),
        witness,
        forced: None,
    }
}

/// Like [`max_independent_set`], with the forced-vertex set filled in.
pub fn max_independent_set_with_forced(g: &Graph) -> IndependenceResult {
    let solver = Solver::new(g);
    let witness = VertexSet::from(solver.best_within(0..g.n()));
    let forced = forced_with(&solver, g.n(), witness.len());
    IndependenceResult {
        alpha: witness.len(),
        witness,
        forced: Some(forced),
    }
}

/// The independence number.
pub fn alpha(g: &Graph) -> usize {
    Solver::new(g).alpha_within(0..g.n())
}

/// The independence number of the subgraph induced by `allowed`.
pub fn alpha_within(g: &Graph, allowed: &VertexSet) -> usize {
    Solver::new(g).alpha_within(allowed.iter())
}

/// Whether `v` belongs to every maximum independent set, decided by
/// `α(G − v) = α(G) − 1`.
pub fn in_every_max_is(g: &Graph, v: usize) -> Result<bool, IndependenceError> {
    let n = g.n();
    if v >= n {
        return Err(IndependenceError::VertexOutOfRange(v, n));
    }
    let solver = Solver::new(g);
    let full = solver.alpha_within(0..n);
    Ok(solver.alpha_within((0..n).filter(|&u| u != v)) + 1 == full)
}

/// All vertices lying in every maximum independent set.
pub fn forced_vertices(g: &Graph) -> VertexSet {
    let solver = Solver::new(g);
    let full = solver.alpha_within(0..g.n());
    forced_with(&solver, g.n(), full)
}

fn forced_with(solver: &Solver, n: usize, full: usize) -> VertexSet {
    (0..n)
        .filter(|&v| solver.alpha_within((0..n).filter(|&u| u != v)) + 1 == full)
        .collect()
}
