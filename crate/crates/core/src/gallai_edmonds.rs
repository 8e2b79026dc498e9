//! The Gallai-Edmonds canonical decomposition `(D, A, C)` and a checker for
//! the structure it is guaranteed to have.
//!
//! `D` holds the vertices missed by at least one maximum matching, `A` the
//! neighbors of `D` outside it, and `C` everything else. `D` is computed
//! directly from that definition: `v ∈ D` iff `μ(G − v) = μ(G)`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::mask::{Mask, WideMask};
use crate::matching::{self, Blossom};

/// Largest `|A|` for which the surplus condition is checked by subset
/// enumeration.
pub const SURPLUS_ENUMERATION_LIMIT: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("decomposition does not belong to this graph: {0}")]
    Mismatch(String),
    #[error("|A| = {0} exceeds the subset enumeration limit of {SURPLUS_ENUMERATION_LIMIT}; use a matching-based surplus check")]
    SurplusCapacity(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GEDecomposition {
    pub n: usize,
    pub d: VertexSet,
    pub a: VertexSet,
    pub c: VertexSet,
    /// Connected components of `G[D]`, ordered by smallest member.
    pub components: Vec<VertexSet>,
    /// `trivial[i]` iff `components[i]` is a single vertex.
    pub trivial: Vec<bool>,
}

impl GEDecomposition {
    pub fn nontrivial_components(&self) -> impl Iterator<Item = (usize, &VertexSet)> {
        self.components
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.trivial[*i])
    }

    pub fn trivial_count(&self) -> usize {
        self.trivial.iter().filter(|&&t| t).count()
    }

    /// `Σ (|D_i| − 1) / 2` over all components of `G[D]`.
    pub fn half_deficiency_sum(&self) -> usize {
        self.components.iter().map(|k| (k.len() - 1) / 2).sum()
    }
}

pub fn decompose(g: &Graph) -> GEDecomposition {
    let n = g.n();
    let mut search = Blossom::new(n);
    let mu = search.solve(g, None);
    let d: VertexSet = (0..n).filter(|&v| search.solve(g, Some(v)) == mu).collect();
    let a = g.open_neighborhood(&d);
    let in_d_or_a: Vec<bool> = {
        let mut flags = d.indicator(n);
        for v in a.iter() {
            flags[v] = true;
        }
        flags
    };
    let c = (0..n).filter(|&v| !in_d_or_a[v]).collect();
    let components = g.components_within(&d);
    let trivial = components.iter().map(|k| k.len() == 1).collect();
    GEDecomposition {
        n,
        d,
        a,
        c,
        components,
        trivial,
    }
}

/// Outcome of each structural clause; every field is expected to be true.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    /// Every component of `G[D]` is factor-critical.
    pub components_factor_critical: bool,
    /// `G[C]` has a perfect matching.
    pub c_perfectly_matchable: bool,
    /// The computed maximum matching is near-perfect on each `D` component,
    /// perfect on `C`, and matches `A` into distinct `D` components.
    pub matching_shape: bool,
    /// The contracted bipartite graph has positive surplus viewed from `A`.
    pub positive_surplus: bool,
    /// No edge joins `C` and `D`.
    pub no_c_d_edges: bool,
}

impl StructureReport {
    pub fn all(&self) -> bool {
        self.components_factor_critical
            && self.c_perfectly_matchable
            && self.matching_shape
            && self.positive_surplus
            && self.no_c_d_edges
    }
}

pub fn verify_structure(
    g: &Graph,
    d: &GEDecomposition,
) -> Result<StructureReport, DecompositionError> {
    validate(g, d)?;
    let components_factor_critical = d.components.iter().all(|k| {
        k.len() == 1 || matching::is_factor_critical(&g.induced(k).expect("validated").graph)
    });
    let c_perfectly_matchable =
        matching::has_perfect_matching(&g.induced(&d.c).expect("validated").graph);
    let matching_shape = matching_shape(g, d);
    let positive_surplus = positive_surplus(g, d)?;
    let no_c_d_edges = g.edges_between(&d.c, &d.d).expect("validated") == 0;
    Ok(StructureReport {
        components_factor_critical,
        c_perfectly_matchable,
        matching_shape,
        positive_surplus,
        no_c_d_edges,
    })
}

fn matching_shape(g: &Graph, d: &GEDecomposition) -> bool {
    let m = matching::maximum_matching(g);
    let n = g.n();
    let mut component_of = vec![usize::MAX; n];
    for (i, k) in d.components.iter().enumerate() {
        for v in k.iter() {
            component_of[v] = i;
        }
    }
    let in_c = d.c.indicator(n);

    let mut inside = vec![0usize; d.components.len()];
    let mut inside_c = 0;
    for (u, v) in m.edges() {
        if component_of[u] != usize::MAX && component_of[u] == component_of[v] {
            inside[component_of[u]] += 1;
        } else if in_c[u] && in_c[v] {
            inside_c += 1;
        }
    }
    let near_perfect = d
        .components
        .iter()
        .zip(&inside)
        .all(|(k, &count)| 2 * count + 1 == k.len());
    let perfect_on_c = 2 * inside_c == d.c.len();

    let mut used = vec![false; d.components.len()];
    let a_into_distinct = d.a.iter().all(|a| match m.mate(a) {
        Some(x) if component_of[x] != usize::MAX && !used[component_of[x]] => {
            used[component_of[x]] = true;
            true
        }
        _ => false,
    });
    near_perfect && perfect_on_c && a_into_distinct
}

/// Whether every nonempty `X ⊆ A` has more neighboring `D` components than
/// members, in the bipartite graph with each `D` component contracted.
pub fn positive_surplus(g: &Graph, d: &GEDecomposition) -> Result<bool, DecompositionError> {
    let k = d.a.len();
    if k > SURPLUS_ENUMERATION_LIMIT {
        return Err(DecompositionError::SurplusCapacity(k));
    }
    let mut component_of = vec![usize::MAX; g.n()];
    for (i, comp) in d.components.iter().enumerate() {
        for v in comp.iter() {
            component_of[v] = i;
        }
    }
    let q = d.components.len();
    let reach: Vec<WideMask> =
        d.a.iter()
            .map(|a| {
                let mut row = WideMask::empty(q);
                for &v in g.neighbors(a) {
                    if component_of[v] != usize::MAX {
                        row.insert(component_of[v]);
                    }
                }
                row
            })
            .collect();

    fn grow(reach: &[WideMask], start: usize, size: usize, union: &WideMask) -> bool {
        (start..reach.len()).all(|i| {
            let wider = union.or(&reach[i]);
            wider.count() > size + 1 && grow(reach, i + 1, size + 1, &wider)
        })
    }
    Ok(grow(&reach, 0, 0, &WideMask::empty(q)))
}

/// Checks `μ(G) = |C|/2 + |A| + Σ (|D_i| − 1)/2`.
pub fn mu_formula_check(g: &Graph, d: &GEDecomposition) -> bool {
    mu_formula_holds(matching::mu(g), d)
}

pub(crate) fn mu_formula_holds(mu: usize, d: &GEDecomposition) -> bool {
    d.c.len() % 2 == 0 && mu == d.c.len() / 2 + d.a.len() + d.half_deficiency_sum()
}

fn validate(g: &Graph, d: &GEDecomposition) -> Result<(), DecompositionError> {
    let mismatch = |why: &str| Err(DecompositionError::Mismatch(why.to_string()));
    let n = g.n();
    if d.n != n {
        return mismatch("vertex count differs");
    }
    let mut seen = vec![0u8; n];
    for v in d.d.iter().chain(d.a.iter()).chain(d.c.iter()) {
        if v >= n {
            return mismatch("vertex out of range");
        }
        seen[v] += 1;
    }
    if seen.iter().any(|&s| s != 1) {
        return mismatch("D, A, C do not partition the vertices");
    }
    if g.open_neighborhood(&d.d) != d.a {
        return mismatch("A is not the neighborhood of D");
    }
    if g.components_within(&d.d) != d.components {
        return mismatch("components are not those of G[D]");
    }
    if d.trivial.len() != d.components.len()
        || d.components
            .iter()
            .zip(&d.trivial)
            .any(|(k, &t)| t != (k.len() == 1))
    {
        return mismatch("trivial flags disagree with component sizes");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from(v.to_vec())
    }

    #[test]
    fn c5_is_all_d() {
        let g = cycle(5);
        let d = decompose(&g);
        assert_eq!(d.d, set(&[0, 1, 2, 3, 4]));
        assert!(d.a.is_empty() && d.c.is_empty());
        assert_eq!(d.trivial, vec![false]);
        assert!(verify_structure(&g, &d).unwrap().all());
        assert!(mu_formula_check(&g, &d));
        assert_eq!(positive_surplus(&g, &d), Ok(true));
    }

    #[test]
    fn path3() {
        let g = path(3);
        let d = decompose(&g);
        assert_eq!(
            (d.d.clone(), d.a.clone(), d.c.clone()),
            (set(&[0, 2]), set(&[1]), set(&[]))
        );
        assert_eq!(d.components, vec![set(&[0]), set(&[2])]);
        assert_eq!(d.trivial, vec![true, true]);
        assert!(verify_structure(&g, &d).unwrap().all());
        assert_eq!(positive_surplus(&g, &d), Ok(true));
        assert!(mu_formula_check(&g, &d));
    }

    #[test]
    fn k4_is_all_c() {
        let g = complete(4);
        let d = decompose(&g);
        assert!(d.d.is_empty() && d.a.is_empty());
        assert_eq!(d.c, set(&[0, 1, 2, 3]));
        assert!(verify_structure(&g, &d).unwrap().all());
        assert!(mu_formula_check(&g, &d));
    }

    #[test]
    fn hub_with_three_gadgets() {
        let g = cubic_without_perfect_matching();
        let d = decompose(&g);
        assert_eq!(d.a, set(&[0]));
        assert!(d.c.is_empty());
        assert_eq!(d.components.len(), 3);
        assert!(d.trivial.iter().all(|&t| !t));
        assert!(verify_structure(&g, &d).unwrap().all());
        assert!(mu_formula_check(&g, &d));
    }

    #[test]
    fn star_surplus_fails_when_tampered() {
        // K_{1,3}: D = leaves, A = centre; surplus 3 > 1.
        let g = star(3);
        let d = decompose(&g);
        assert_eq!(d.a, set(&[0]));
        assert_eq!(positive_surplus(&g, &d), Ok(true));

        // An A vertex seeing a single component has zero surplus.
        let fake = GEDecomposition {
            n: 2,
            d: set(&[1]),
            a: set(&[0]),
            c: set(&[]),
            components: vec![set(&[1])],
            trivial: vec![true],
        };
        assert_eq!(positive_surplus(&path(2), &fake), Ok(false));
    }

    #[test]
    fn rejects_foreign_decomposition() {
        let d = decompose(&cycle(5));
        assert!(matches!(
            verify_structure(&complete(4), &d),
            Err(DecompositionError::Mismatch(_))
        ));
        let mut d = decompose(&path(3));
        d.a = set(&[]);
        d.c = set(&[1]);
        assert!(matches!(
            verify_structure(&path(3), &d),
            Err(DecompositionError::Mismatch(_))
        ));
    }

    #[test]
    fn surplus_refuses_large_a() {
        // Star-of-stars: 26 centres each with two private leaves, all joined
        // to a common root; every centre lands in A.
        let mut edges = Vec::new();
        let mut next = 27;
        for c in 1..=26 {
            edges.push((0, c));
            edges.push((c, next));
            edges.push((c, next + 1));
            next += 2;
        }
        let g = Graph::build(next, edges).unwrap();
        let d = decompose(&g);
        assert_eq!(d.a.len(), 26);
        assert_eq!(
            positive_surplus(&g, &d),
            Err(DecompositionError::SurplusCapacity(26))
        );
    }
}
