//! Brute-force oracles. Nothing here calls into the solvers it is used to
//! check; only `Graph` accessors are shared.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regmatch::graphgen::gnp;
use regmatch::Graph;

pub fn rows(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32);
    (0..g.n())
        .map(|u| g.neighbors(u).iter().fold(0u32, |acc, &v| acc | 1 << v))
        .collect()
}

/// Every matching of `g` (as a mate-free vertex bitmask of covered vertices
/// plus size), visited by recursion on the lowest undecided vertex.
fn for_each_matching(rows: &[u32], n: usize, f: &mut impl FnMut(u32, usize)) {
    fn go(
        rows: &[u32],
        n: usize,
        v: usize,
        covered: u32,
        size: usize,
        f: &mut impl FnMut(u32, usize),
    ) {
        if v == n {
            f(covered, size);
            return;
        }
        if covered >> v & 1 == 1 {
            go(rows, n, v + 1, covered, size, f);
            return;
        }
        // v stays exposed
        go(rows, n, v + 1, covered, size, f);
        let mut options = rows[v] & !covered & !((1u32 << (v + 1)) - 1);
        while options != 0 {
            let u = options.trailing_zeros() as usize;
            options &= options - 1;
            go(rows, n, v + 1, covered | 1 << v | 1 << u, size + 1, f);
        }
    }
    go(rows, n, 0, 0, 0, f);
}

pub fn brute_mu(g: &Graph) -> usize {
    let mut best = 0;
    for_each_matching(&rows(g), g.n(), &mut |_, size| best = best.max(size));
    best
}

/// Union of vertices left exposed by some maximum matching.
pub fn brute_exposed_union(g: &Graph) -> Vec<usize> {
    let r = rows(g);
    let n = g.n();
    let mut best = 0;
    let mut union = 0u32;
    for_each_matching(&r, n, &mut |covered, size| {
        let exposed = !covered & ((1u64 << n) - 1) as u32;
        if size > best {
            best = size;
            union = exposed;
        } else if size == best {
            union |= exposed;
        }
    });
    (0..n).filter(|&v| union >> v & 1 == 1).collect()
}

/// Maximum independent set size over all subsets, abandoning a branch as
/// soon as it stops being independent.
pub fn brute_alpha(g: &Graph) -> usize {
    let r = rows(g);
    fn go(r: &[u32], v: usize, chosen: u32, size: usize, best: &mut usize) {
        if v == r.len() {
            *best = (*best).max(size);
            return;
        }
        if r[v] & chosen == 0 {
            go(r, v + 1, chosen | 1 << v, size + 1, best);
        }
        go(r, v + 1, chosen, size, best);
    }
    let mut best = 0;
    go(&r, 0, 0, 0, &mut best);
    best
}

/// All maximum independent sets as bitmasks.
pub fn all_maximum_independent_sets(g: &Graph) -> Vec<u32> {
    let r = rows(g);
    let mut sets: Vec<u32> = Vec::new();
    let mut best = 0;
    fn go(r: &[u32], v: usize, chosen: u32, sets: &mut Vec<u32>, best: &mut u32) {
        if v == r.len() {
            let size = chosen.count_ones();
            if size > *best {
                *best = size;
                sets.clear();
            }
            if size == *best {
                sets.push(chosen);
            }
            return;
        }
        if r[v] & chosen == 0 {
            go(r, v + 1, chosen | 1 << v, sets, best);
        }
        go(r, v + 1, chosen, sets, best);
    }
    go(&r, 0, 0, &mut sets, &mut best);
    sets
}

/// Vertices in every maximum independent set, by explicit enumeration.
pub fn brute_forced(g: &Graph) -> Vec<usize> {
    let all = all_maximum_independent_sets(g);
    let common = all.iter().fold(u32::MAX, |acc, &s| acc & s);
    (0..g.n()).filter(|&v| common >> v & 1 == 1).collect()
}

/// Whether some simple alternating path joins two exposed vertices.
pub fn has_augmenting_path(g: &Graph, mate: &[Option<usize>]) -> bool {
    fn extend(g: &Graph, mate: &[Option<usize>], v: usize, visited: &mut Vec<bool>) -> bool {
        // v is reached via a matched edge (or is the root); leave by a non-matching edge.
        for &u in g.neighbors(v) {
            if visited[u] || mate[v] == Some(u) {
                continue;
            }
            match mate[u] {
                None => return true,
                Some(w) if !visited[w] => {
                    visited[u] = true;
                    visited[w] = true;
                    if extend(g, mate, w, visited) {
                        return true;
                    }
                    visited[u] = false;
                    visited[w] = false;
                }
                Some(_) => {}
            }
        }
        false
    }
    (0..g.n()).filter(|&v| mate[v].is_none()).any(|root| {
        let mut visited = vec![false; g.n()];
        visited[root] = true;
        extend(g, mate, root, &mut visited)
    })
}

/// Backtracking search for an isomorphism `g -> h`.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    count_isomorphisms(g, h, true) > 0
}

/// Number of automorphisms of `g`.
pub fn automorphisms(g: &Graph) -> usize {
    count_isomorphisms(g, g, false)
}

fn count_isomorphisms(g: &Graph, h: &Graph, stop_at_first: bool) -> usize {
    let (rg, rh) = (rows(g), rows(h));
    let n = g.n();
    let mut image = vec![0usize; n];
    fn go(
        rg: &[u32],
        rh: &[u32],
        image: &mut Vec<usize>,
        k: usize,
        used: u32,
        stop: bool,
    ) -> usize {
        let n = rg.len();
        if k == n {
            return 1;
        }
        let mut total = 0;
        for x in 0..n {
            if used >> x & 1 == 1 || rg[k].count_ones() != rh[x].count_ones() {
                continue;
            }
            if (0..k).any(|i| (rg[k] >> i & 1) != (rh[x] >> image[i] & 1)) {
                continue;
            }
            image[k] = x;
            total += go(rg, rh, image, k + 1, used | 1 << x, stop);
            if stop && total > 0 {
                return total;
            }
        }
        total
    }
    go(&rg, &rh, &mut image, 0, 0, stop_at_first)
}

/// graph6 encoder written from the format description using a textual bit
/// string, independent of the library encoder.
pub fn reference_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62);
    let mut bits = String::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while bits.len() % 6 != 0 {
        bits.push('0');
    }
    let mut out = String::new();
    out.push(char::from(n as u8 + 63));
    for chunk in bits.as_bytes().chunks(6) {
        let value = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push(char::from(value + 63));
    }
    out
}

/// Seeded `G(n, p)` graphs with `n` uniform in `orders` and `p` uniform in
/// `[0.1, 0.9)`.
pub fn random_graphs(
    count: usize,
    orders: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(orders.clone());
            let p = rng.gen_range(0.1..0.9);
            gnp(n, p, &mut rng)
        })
        .collect()
}
