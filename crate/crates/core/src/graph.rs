//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} is outside 0..{1}")]
    VertexOutOfRange(usize, usize),
    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),
}

/// A set of vertex ids, stored sorted and without duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    /// Membership as a dense boolean vector of length `n`.
    pub fn indicator(&self, n: usize) -> Vec<bool> {
        let mut flags = vec![false; n];
        for v in self.iter() {
            flags[v] = true;
        }
        flags
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&v) if v >= n => Err(GraphError::VertexOutOfRange(v, n)),
            _ => Ok(()),
        }
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(set: VertexSet) -> Self {
        set.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted, symmetric, loop-free and duplicate-free; every
/// constructor upholds this so the algorithms downstream never re-check it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn build<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut lists: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        for (u, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph::from_sorted_lists(&lists))
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            m: 0,
            offsets: vec![0; n + 1],
            neighbors: Vec::new(),
        }
    }

    /// Caller guarantees the lists already satisfy every graph invariant.
    pub(crate) fn from_sorted_lists(lists: &[Vec<usize>]) -> Graph {
        let n = lists.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut neighbors = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        offsets.push(0);
        for list in lists {
            neighbors.extend_from_slice(list);
            offsets.push(neighbors.len());
        }
        debug_assert!(neighbors.len() % 2 == 0, "handshake violated");
        Graph {
            n,
            m: neighbors.len() / 2,
            offsets,
            neighbors,
        }
    }

    /// Builds from per-vertex adjacency bit rows (`n <= 64`). Rows must be
    /// symmetric with a zero diagonal.
    pub(crate) fn from_rows(rows: &[u64]) -> Graph {
        let n = rows.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        for &row in rows {
            let mut bits = row;
            while bits != 0 {
                neighbors.push(bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
            offsets.push(neighbors.len());
        }
        Graph {
            n,
            m: neighbors.len() / 2,
            offsets,
            neighbors,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n).collect())
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// True iff a traversal from vertex 0 reaches every vertex. The empty
    /// graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// The common degree when every vertex has the same degree.
    pub fn regularity(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let r = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == r).then_some(r)
    }

    /// Two-coloring by breadth-first search, or `None` if an odd cycle exists.
    /// Isolated vertices and the first vertex of every component land on the
    /// first side.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let first = (0..self.n).filter(|&v| color[v] == Some(false)).collect();
        let second = (0..self.n).filter(|&v| color[v] == Some(true)).collect();
        Some((VertexSet(first), VertexSet(second)))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The subgraph induced by `s`, relabeled to `0..|s|` in ascending order.
    pub fn induced(&self, s: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        s.check_range(self.n)?;
        let mut to_sub = vec![None; self.n];
        for (i, v) in s.iter().enumerate() {
            to_sub[v] = Some(i);
        }
        let lists: Vec<Vec<usize>> = s
            .iter()
            .map(|u| {
                self.neighbors(u)
                    .iter()
                    .filter_map(|&v| to_sub[v])
                    .collect()
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Graph::from_sorted_lists(&lists),
            to_sub,
            to_host: s.as_slice().to_vec(),
        })
    }

    /// The graph with vertex `v` deleted; remaining vertices keep their
    /// relative order.
    pub fn without_vertex(&self, v: usize) -> Result<InducedSubgraph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        self.induced(&VertexSet((0..self.n).filter(|&u| u != v).collect()))
    }

    /// Number of edges with one endpoint in `s` and the other in `t`.
    pub fn edges_between(&self, s: &VertexSet, t: &VertexSet) -> Result<usize, GraphError> {
        s.check_range(self.n)?;
        t.check_range(self.n)?;
        let in_t = t.indicator(self.n);
        if let Some(v) = s.iter().find(|&v| in_t[v]) {
            return Err(GraphError::OverlappingSets(v));
        }
        Ok(s.iter()
            .map(|u| self.neighbors(u).iter().filter(|&&v| in_t[v]).count())
            .sum())
    }

    /// Union of neighborhoods of `s`, minus `s` itself.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let inside = s.indicator(self.n);
        let mut out = vec![false; self.n];
        for u in s.iter() {
            for &v in self.neighbors(u) {
                if !inside[v] {
                    out[v] = true;
                }
            }
        }
        VertexSet((0..self.n).filter(|&v| out[v]).collect())
    }

    /// Connected components of the subgraph induced by `s`, each sorted, in
    /// order of their smallest vertex.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let inside = s.indicator(self.n);
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in s.iter() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in self.neighbors(u) {
                    if inside[v] && !seen[v] {
                        seen[v] = true;
                        members.push(v);
                        stack.push(v);
                    }
                }
            }
            components.push(VertexSet::from(members));
        }
        components
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|u| self.neighbors(u).iter().all(|&v| !s.contains(v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Result of [`Graph::induced`]: the subgraph plus the relabeling in both
/// directions.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// Host vertex to subgraph vertex, `None` outside the set.
    pub to_sub: Vec<Option<usize>>,
    /// Subgraph vertex to host vertex.
    pub to_host: Vec<usize>,
}

/// Small named graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::build(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::build(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        complete_bipartite(1, leaves)
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        Graph::build(10, outer.chain(inner).chain(spokes)).unwrap()
    }

    /// Cubic graph on 16 vertices without a perfect matching: a hub joined to
    /// three copies of `K4` with one edge subdivided.
    pub fn cubic_without_perfect_matching() -> Graph {
        let mut edges = Vec::new();
        for k in 0..3 {
            let base = 1 + 5 * k;
            let (a, b, c, d, s) = (base, base + 1, base + 2, base + 3, base + 4);
            edges.extend([
                (a, c),
                (a, d),
                (b, c),
                (b, d),
                (c, d),
                (a, s),
                (b, s),
                (0, s),
            ]);
        }
        Graph::build(16, edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn build_path_and_cycle() {
        let p3 = Graph::build(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.m(), 2);
        assert_eq!(p3.neighbors(1), &[0, 2]);
        let c5 = Graph::build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(c5.m(), 5);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::build(4, [(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::build(4, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::build(4, [(2, 2)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            Graph::build(3, [(0, 3)]),
            Err(GraphError::EndpointOutOfRange(0, 3, 3))
        );
    }

    #[test]
    fn connectivity() {
        assert!(cycle(5).is_connected());
        assert!(!Graph::build(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn regularity_cases() {
        assert_eq!(cycle(5).regularity(), Some(2));
        assert_eq!(path(3).regularity(), None);
        assert_eq!(complete(4).regularity(), Some(3));
        assert_eq!(Graph::empty(3).regularity(), Some(0));
    }

    #[test]
    fn bipartition_cases() {
        let (a, b) = complete_bipartite(3, 3).bipartition().unwrap();
        assert_eq!(a, VertexSet::from(vec![0, 1, 2]));
        assert_eq!(b, VertexSet::from(vec![3, 4, 5]));
        assert!(cycle(5).bipartition().is_none());
        let (a, b) = Graph::empty(3).bipartition().unwrap();
        assert_eq!(a, VertexSet::from(vec![0, 1, 2]));
        assert!(b.is_empty());
    }

    #[test]
    fn induced_subgraphs() {
        let sub = cycle(5).induced(&VertexSet::from(vec![0, 1, 2])).unwrap();
        assert_eq!(sub.graph, path(3));
        assert_eq!(sub.to_host, vec![0, 1, 2]);
        let single = complete(4).induced(&VertexSet::from(vec![0])).unwrap();
        assert_eq!(single.graph, Graph::empty(1));
        let k4 = complete(4);
        assert_eq!(k4.induced(&k4.vertices()).unwrap().graph, k4);
        assert_eq!(
            k4.induced(&VertexSet::from(vec![1, 7])).unwrap_err(),
            GraphError::VertexOutOfRange(7, 4)
        );
    }

    #[test]
    fn edges_between_sets() {
        let c5 = cycle(5);
        let s = VertexSet::from(vec![0]);
        assert_eq!(c5.edges_between(&s, &VertexSet::from(vec![1, 4])), Ok(2));
        assert_eq!(c5.edges_between(&s, &VertexSet::from(vec![2, 3])), Ok(0));
        let (a, b) = complete_bipartite(3, 3).bipartition().unwrap();
        assert_eq!(complete_bipartite(3, 3).edges_between(&a, &b), Ok(9));
        assert_eq!(
            c5.edges_between(&VertexSet::from(vec![0, 1]), &VertexSet::from(vec![1, 2])),
            Err(GraphError::OverlappingSets(1))
        );
    }

    #[test]
    fn named_graphs_are_as_advertised() {
        let p = petersen();
        assert_eq!((p.n(), p.m(), p.regularity()), (10, 15, Some(3)));
        let h = cubic_without_perfect_matching();
        assert_eq!((h.n(), h.m(), h.regularity()), (16, 24, Some(3)));
        assert!(h.is_connected());
    }

    #[test]
    fn vertex_set_normalizes() {
        let s = VertexSet::from(vec![3, 1, 3, 2]);
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert_eq!(s.to_string(), "{1,2,3}");
    }
}
