//! Graph corpora: every labeled `r`-regular graph of a small order, seeded
//! random regular graphs from the pairing model, seeded `G(n, p)` graphs, and
//! graph6 files.

use std::collections::HashSet;
use std::io::BufRead;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::{parse_graph6, Graph6Error};

/// Pairing-model attempts allowed per sample before giving up.
pub const REJECTION_BUDGET: usize = 10_000;
/// Largest order for isomorphism deduplication.
pub const DEDUP_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("n * r = {n} * {r} is odd; no {r}-regular graph on {n} vertices exists")]
    Parity { n: usize, r: usize },
    #[error("degree {r} needs more than {n} vertices")]
    DegreeTooLarge { n: usize, r: usize },
    #[error("exhaustive enumeration of {r}-regular graphs is capped at n = {max} (asked for {n})")]
    Capacity { n: usize, r: usize, max: usize },
    #[error("isomorphism deduplication is capped at n = {DEDUP_MAX_ORDER} (asked for {0})")]
    DedupCapacity(usize),
    #[error("random mode needs count >= 1")]
    ZeroCount,
    #[error(
        "no simple {r}-regular graph on {n} vertices after {REJECTION_BUDGET} pairing attempts"
    )]
    RejectionBudget { n: usize, r: usize },
    #[error("operation needs {expected:?} mode, got {found:?}")]
    WrongMode { expected: GenMode, found: GenMode },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenMode {
    Exhaustive,
    Random,
    Ingest,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub r: usize,
    pub mode: GenMode,
    pub count: usize,
    pub seed: u64,
    pub dedup: bool,
}

impl GenSpec {
    pub fn exhaustive(n: usize, r: usize) -> Self {
        GenSpec {
            n,
            r,
            mode: GenMode::Exhaustive,
            count: 0,
            seed: 0,
            dedup: false,
        }
    }

    pub fn random(n: usize, r: usize, count: usize, seed: u64) -> Self {
        GenSpec {
            n,
            r,
            mode: GenMode::Random,
            count,
            seed,
            dedup: false,
        }
    }

    pub fn with_dedup(mut self) -> Self {
        self.dedup = true;
        self
    }

    /// Checks the parameters of the regular generation modes.
    pub fn validate(&self) -> Result<(), GenError> {
        let (n, r) = (self.n, self.r);
        if r >= n {
            return Err(GenError::DegreeTooLarge { n, r });
        }
        if (n * r) % 2 == 1 {
            return Err(GenError::Parity { n, r });
        }
        match self.mode {
            GenMode::Exhaustive => {
                let max = max_exhaustive_order(r);
                if n > max {
                    return Err(GenError::Capacity { n, r, max });
                }
                if self.dedup && n > DEDUP_MAX_ORDER {
                    return Err(GenError::DedupCapacity(n));
                }
            }
            GenMode::Random if self.count == 0 => return Err(GenError::ZeroCount),
            _ => {}
        }
        Ok(())
    }

    fn expect_mode(&self, expected: GenMode) -> Result<(), GenError> {
        if self.mode == expected {
            Ok(())
        } else {
            Err(GenError::WrongMode {
                expected,
                found: self.mode,
            })
        }
    }
}

/// Largest order accepted for exhaustive enumeration at degree `r`.
pub fn max_exhaustive_order(r: usize) -> usize {
    if r <= 3 {
        12
    } else {
        10
    }
}

/// Every labeled `r`-regular graph on `n` vertices, exactly once; with
/// `dedup`, one canonical representative per isomorphism class instead.
pub fn enumerate_regular(
    spec: &GenSpec,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>, GenError> {
    spec.expect_mode(GenMode::Exhaustive)?;
    spec.validate()?;
    let labeled = RegularGraphs::new(spec.n, spec.r);
    if !spec.dedup {
        return Ok(Box::new(labeled));
    }
    let mut seen = HashSet::new();
    Ok(Box::new(labeled.filter_map(move |g| {
        let (code, canonical) = canonical_form(&g);
        seen.insert(code).then_some(canonical)
    })))
}

/// Backtracking over the upper triangle of the adjacency matrix, row by row,
/// deciding each pair in or out with degree-feasibility pruning.
pub struct RegularGraphs {
    n: usize,
    r: usize,
    pairs: Vec<(usize, usize)>,
    rows: Vec<u64>,
    degree: Vec<usize>,
    /// Option taken at each decided pair: 0 = edge, 1 = no edge.
    taken: Vec<u8>,
    started: bool,
    done: bool,
}

impl RegularGraphs {
    fn new(n: usize, r: usize) -> Self {
        assert!(n <= 64, "adjacency rows are 64-bit");
        RegularGraphs {
            n,
            r,
            pairs: (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
            rows: vec![0; n],
            degree: vec![0; n],
            taken: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn feasible(&self, k: usize, option: u8) -> bool {
        let (u, v) = self.pairs[k];
        let add = usize::from(option == 0);
        let (du, dv) = (self.degree[u] + add, self.degree[v] + add);
        // Pairs still open to u after (u, v), and to v.
        let left_u = self.n - 1 - v;
        let left_v = self.n - u - 2;
        du <= self.r && dv <= self.r && self.r - du <= left_u && self.r - dv <= left_v
    }

    fn apply(&mut self, k: usize, option: u8, sign: bool) {
        if option != 0 {
            return;
        }
        let (u, v) = self.pairs[k];
        self.rows[u] ^= 1 << v;
        self.rows[v] ^= 1 << u;
        if sign {
            self.degree[u] += 1;
            self.degree[v] += 1;
        } else {
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
    }

    fn try_from(&mut self, k: usize, first: u8) -> bool {
        for option in first..2 {
            if self.feasible(k, option) {
                self.apply(k, option, true);
                self.taken.push(option);
                return true;
            }
        }
        false
    }

    fn backtrack(&mut self) -> bool {
        while let Some(option) = self.taken.pop() {
            let k = self.taken.len();
            self.apply(k, option, false);
            if self.try_from(k, option + 1) {
                return true;
            }
        }
        false
    }

    fn descend(&mut self) -> bool {
        while self.taken.len() < self.pairs.len() {
            let k = self.taken.len();
            if !self.try_from(k, 0) && !self.backtrack() {
                return false;
            }
        }
        true
    }
}

impl Iterator for RegularGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let found = if self.started {
            self.backtrack() && self.descend()
        } else {
            self.started = true;
            // n = 0 has nothing to enumerate and no empty graph to emit.
            self.n > 0 && self.descend()
        };
        if !found {
            self.done = true;
            return None;
        }
        debug_assert!(self.degree.iter().all(|&d| d == self.r));
        Some(Graph::from_rows(&self.rows))
    }
}

/// Canonical labeling by minimizing the adjacency bit-string (graph6 column
/// order, first pair most significant) over all vertex orderings. The
/// search fixes positions one at a time and abandons any ordering whose
/// prefix already exceeds the best found. Returns the code and the relabeled
/// graph. Supports `n <= 11`.
pub fn canonical_form(g: &Graph) -> (u64, Graph) {
    let n = g.n();
    assert!(n <= 11, "canonical codes are 64-bit");
    let total = n * n.saturating_sub(1) / 2;
    let rows: Vec<u64> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u64, |acc, &v| acc | 1 << v))
        .collect();

    struct State<'a> {
        n: usize,
        total: usize,
        rows: &'a [u64],
        order: Vec<usize>,
        best: Option<(u64, Vec<usize>)>,
    }

    fn place(s: &mut State<'_>, k: usize, used: u64, code: u64, filled: usize) {
        if k == s.n {
            if s.best.as_ref().is_none_or(|(b, _)| code < *b) {
                s.best = Some((code, s.order.clone()));
            }
            return;
        }
        for x in 0..s.n {
            if used >> x & 1 == 1 {
                continue;
            }
            let mut next = code;
            for (i, &y) in s.order.iter().enumerate() {
                if s.rows[y] >> x & 1 == 1 {
                    next |= 1 << (s.total - 1 - (filled + i));
                }
            }
            let now = filled + k;
            if let Some((b, _)) = &s.best {
                let shift = s.total - now;
                let mask = if now == 0 { 0 } else { u64::MAX << shift };
                if next & mask > b & mask {
                    continue;
                }
            }
            s.order.push(x);
            place(s, k + 1, used | 1 << x, next, now);
            s.order.pop();
        }
    }

    let mut state = State {
        n,
        total,
        rows: &rows,
        order: Vec::with_capacity(n),
        best: None,
    };
    place(&mut state, 0, 0, 0, 0);
    let (code, order) = state.best.unwrap_or((0, Vec::new()));
    let mut position = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    let relabeled = Graph::build(n, g.edges().map(|(u, v)| (position[u], position[v])))
        .expect("relabeling preserves simplicity");
    (code, relabeled)
}

/// One pairing-model sample: `r` stubs per vertex, a uniformly shuffled
/// pairing, and full rejection of loops and parallel edges.
pub fn random_regular_graph<R: Rng + ?Sized>(
    n: usize,
    r: usize,
    rng: &mut R,
) -> Result<Graph, GenError> {
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    'attempt: for _ in 0..REJECTION_BUDGET {
        stubs.shuffle(rng);
        let mut lists: Vec<Vec<usize>> = vec![Vec::with_capacity(r); n];
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || lists[u].contains(&v) {
                continue 'attempt;
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        for list in &mut lists {
            list.sort_unstable();
        }
        return Ok(Graph::from_sorted_lists(&lists));
    }
    Err(GenError::RejectionBudget { n, r })
}

/// `spec.count` seeded pairing-model samples. The stream is a pure function
/// of the spec.
pub fn random_regular(
    spec: &GenSpec,
) -> Result<impl Iterator<Item = Result<Graph, GenError>>, GenError> {
    spec.expect_mode(GenMode::Random)?;
    spec.validate()?;
    let (n, r) = (spec.n, spec.r);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    Ok((0..spec.count).map(move |_| random_regular_graph(n, r, &mut rng)))
}

/// Erdős–Rényi `G(n, p)`: each pair independently an edge with probability `p`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::build(n, edges).expect("pairs are distinct")
}

/// Every labeled graph on `n <= 8` vertices, indexed by its adjacency bits in
/// graph6 column order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "2^(n choose 2) graphs is too many beyond n = 8");
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        let mut rows = vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if bits >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        Graph::from_rows(&rows)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IngestError {
    #[error("line {line}: {error}")]
    Parse { line: usize, error: Graph6Error },
    #[error("line {line}: read failed: {message}")]
    Io { line: usize, message: String },
}

/// Graphs parsed from graph6 lines, paired with their 1-based line numbers.
/// Blank lines are skipped; a malformed line yields an error item and
/// reading continues.
pub fn ingest<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, Graph), IngestError>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line_no = i + 1;
        match line {
            Err(e) => Some(Err(IngestError::Io {
                line: line_no,
                message: e.to_string(),
            })),
            Ok(text) if text.trim().is_empty() => None,
            Ok(text) => Some(
                parse_graph6(text.trim())
                    .map(|g| (line_no, g))
                    .map_err(|error| IngestError::Parse {
                        line: line_no,
                        error,
                    }),
            ),
        }
    })
}

/// [`ingest`] over a file path.
pub fn ingest_path(
    path: &std::path::Path,
) -> std::io::Result<impl Iterator<Item = Result<(usize, Graph), IngestError>>> {
    let file = std::fs::File::open(path)?;
    Ok(ingest(std::io::BufReader::new(file)))
}
