//! When does a connected regular graph have `α(G) = μ(G)`?
//!
//! Structurally: exactly when the graph is bipartite, or its Gallai-Edmonds
//! decomposition has `C = ∅`, every vertex of `A` lies in every maximum
//! independent set, and every nontrivial component of `G[D]` is *good*. A
//! component `D_i` is good when `α(D_i) = (|D_i| − 1)/2` and some maximum
//! independent set of `D_i` has no edge into `A`.
//!
//! [`check`] evaluates that structural test and the direct comparison of
//! `α` and `μ`, and reports whether the two agree.

use serde::Serialize;
use thiserror::Error;

use crate::gallai_edmonds::{self, GEDecomposition};
use crate::graph::{Graph, VertexSet};
use crate::independence::Solver;
use crate::matching;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterizationError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is 0-regular")]
    ZeroDegree,
    #[error("graph has a perfect matching")]
    HasPerfectMatching,
    #[error("alpha = {alpha} differs from mu = {mu}")]
    AlphaDiffersFromMu { alpha: usize, mu: usize },
    #[error("component {0} does not exist")]
    NoSuchComponent(usize),
    #[error("component {0} is a single vertex")]
    TrivialComponent(usize),
}

/// Diagnostics for one component of `G[D]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentDiagnostics {
    pub id: usize,
    pub size: usize,
    pub trivial: bool,
    /// `None` for trivial components, which are exempt.
    pub good: Option<bool>,
    pub alpha: usize,
    /// `(|D_i| − 1) / 2`.
    pub target: usize,
    /// `α` of the component after deleting its vertices adjacent to `A`.
    pub restricted_alpha: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictPath {
    Bipartite,
    Conditions,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    pub n: usize,
    pub r: usize,
    pub is_bipartite: bool,
    pub has_pm: bool,
    pub path: VerdictPath,
    /// The three conditions; `None` on the bipartite path.
    pub cond_c_empty: Option<bool>,
    pub cond_a_forced: Option<bool>,
    pub cond_components_good: Option<bool>,
    pub trivial_components: usize,
    /// Components of `G[D]` with at least three vertices.
    pub nontrivial_components: usize,
    pub per_component: Vec<ComponentDiagnostics>,
    pub structural_verdict: bool,
    pub direct_alpha: Option<usize>,
    pub direct_mu: Option<usize>,
    pub direct_verdict: Option<bool>,
    pub agree: Option<bool>,
}

/// Checks the preconditions shared by every operation here; returns `r`.
pub fn require_connected_regular(g: &Graph) -> Result<usize, CharacterizationError> {
    if g.n() == 0 {
        return Err(CharacterizationError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(CharacterizationError::Disconnected);
    }
    match g.regularity() {
        None => Err(CharacterizationError::NotRegular),
        Some(0) => Err(CharacterizationError::ZeroDegree),
        Some(r) => Ok(r),
    }
}

/// Decides whether component `i` of `G[D]` is good.
pub fn is_good_component(
    g: &Graph,
    d: &GEDecomposition,
    i: usize,
) -> Result<(bool, ComponentDiagnostics), CharacterizationError> {
    let component = d
        .components
        .get(i)
        .ok_or(CharacterizationError::NoSuchComponent(i))?;
    if d.trivial[i] {
        return Err(CharacterizationError::TrivialComponent(i));
    }
    let diag = diagnose_component(g, d, i, &Solver::new(g));
    debug_assert_eq!(diag.size, component.len());
    Ok((diag.good == Some(true), diag))
}

fn diagnose_component(
    g: &Graph,
    d: &GEDecomposition,
    i: usize,
    solver: &Solver,
) -> ComponentDiagnostics {
    let component = &d.components[i];
    let trivial = d.trivial[i];
    let target = (component.len() - 1) / 2;
    let alpha = solver.alpha_within(component.iter());
    // Restricting never raises α, so a maximum independent set avoiding A
    // exists iff the restricted α still reaches the target.
    let restricted = component
        .iter()
        .filter(|&v| !g.neighbors(v).iter().any(|&u| d.a.contains(u)));
    let restricted_alpha = solver.alpha_within(restricted);
    ComponentDiagnostics {
        id: i,
        size: component.len(),
        trivial,
        good: (!trivial).then_some(alpha == target && restricted_alpha == target),
        alpha,
        target,
        restricted_alpha,
    }
}

/// The structural side only; the direct fields are left empty.
pub fn structural_verdict(g: &Graph) -> Result<CharacterizationReport, CharacterizationError> {
    let r = require_connected_regular(g)?;
    if g.is_bipartite() {
        return Ok(bipartite_report(g, r));
    }
    let d = gallai_edmonds::decompose(g);
    Ok(structural_from(g, r, &d, &Solver::new(g)))
}

fn bipartite_report(g: &Graph, r: usize) -> CharacterizationReport {
    CharacterizationReport {
        n: g.n(),
        r,
        is_bipartite: true,
        has_pm: matching::has_perfect_matching(g),
        path: VerdictPath::Bipartite,
        cond_c_empty: None,
        cond_a_forced: None,
        cond_components_good: None,
        trivial_components: 0,
        nontrivial_components: 0,
        per_component: Vec::new(),
        structural_verdict: true,
        direct_alpha: None,
        direct_mu: None,
        direct_verdict: None,
        agree: None,
    }
}

fn structural_from(
    g: &Graph,
    r: usize,
    d: &GEDecomposition,
    solver: &Solver,
) -> CharacterizationReport {
    let n = g.n();
    let cond_c_empty = d.c.is_empty();
    let cond_a_forced = if d.a.is_empty() {
        true
    } else {
        let alpha = solver.alpha_within(0..n);
        d.a.iter()
            .all(|a| solver.alpha_within((0..n).filter(|&u| u != a)) + 1 == alpha)
    };
    let per_component: Vec<_> = (0..d.components.len())
        .map(|i| diagnose_component(g, d, i, solver))
        .collect();
    let cond_components_good = per_component.iter().all(|c| c.good != Some(false));
    CharacterizationReport {
        n,
        r,
        is_bipartite: false,
        has_pm: d.d.is_empty(),
        path: VerdictPath::Conditions,
        cond_c_empty: Some(cond_c_empty),
        cond_a_forced: Some(cond_a_forced),
        cond_components_good: Some(cond_components_good),
        trivial_components: d.trivial_count(),
        nontrivial_components: d.components.len() - d.trivial_count(),
        per_component,
        structural_verdict: cond_c_empty && cond_a_forced && cond_components_good,
        direct_alpha: None,
        direct_mu: None,
        direct_verdict: None,
        agree: None,
    }
}

/// Exact `α` and `μ`, and whether they are equal.
pub fn direct_verdict(g: &Graph) -> Result<(usize, usize, bool), CharacterizationError> {
    require_connected_regular(g)?;
    let alpha = Solver::new(g).alpha_within(0..g.n());
    let mu = matching::mu(g);
    Ok((alpha, mu, alpha == mu))
}

/// Both verdicts and whether they agree. Disagreement means a defect in this
/// crate, not a property of the graph.
pub fn check(g: &Graph) -> Result<CharacterizationReport, CharacterizationError> {
    require_connected_regular(g)?;
    check_with(g, &gallai_edmonds::decompose(g))
}

/// [`check`] reusing an already computed decomposition of `g`.
pub fn check_with(
    g: &Graph,
    d: &GEDecomposition,
) -> Result<CharacterizationReport, CharacterizationError> {
    let r = require_connected_regular(g)?;
    let solver = Solver::new(g);
    let mut report = if g.is_bipartite() {
        bipartite_report(g, r)
    } else {
        structural_from(g, r, d, &solver)
    };
    let alpha = solver.alpha_within(0..g.n());
    let mu = matching::mu(g);
    report.direct_alpha = Some(alpha);
    report.direct_mu = Some(mu);
    report.direct_verdict = Some(alpha == mu);
    report.agree = Some(report.structural_verdict == (alpha == mu));
    Ok(report)
}

/// Conclusions that must hold for a connected regular graph without a perfect
/// matching and with `α = μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DeficientEqualityReport {
    /// Every vertex of `A` is in every maximum independent set.
    pub a_forced: bool,
    pub c_empty: bool,
    /// `α = |A| + Σ (|D_i| − 1)/2` over nontrivial components.
    pub alpha_formula: bool,
    /// A maximum independent set built around `A` avoids every trivial
    /// component of `G[D]`.
    pub trivial_components_avoided: bool,
}

impl DeficientEqualityReport {
    pub fn holds(&self) -> bool {
        self.a_forced && self.c_empty && self.alpha_formula && self.trivial_components_avoided
    }
}

pub fn deficient_equality_invariants(
    g: &Graph,
) -> Result<DeficientEqualityReport, CharacterizationError> {
    require_connected_regular(g)?;
    deficient_equality_with(g, &gallai_edmonds::decompose(g))
}

pub fn deficient_equality_with(
    g: &Graph,
    d: &GEDecomposition,
) -> Result<DeficientEqualityReport, CharacterizationError> {
    require_connected_regular(g)?;
    let n = g.n();
    if d.d.is_empty() {
        return Err(CharacterizationError::HasPerfectMatching);
    }
    let solver = Solver::new(g);
    let alpha = solver.alpha_within(0..n);
    let mu = matching::mu(g);
    if alpha != mu {
        return Err(CharacterizationError::AlphaDiffersFromMu { alpha, mu });
    }

    let a_forced =
        d.a.iter()
            .all(|a| solver.alpha_within((0..n).filter(|&u| u != a)) + 1 == alpha);
    let nontrivial_sum: usize = d
        .nontrivial_components()
        .map(|(_, k)| (k.len() - 1) / 2)
        .sum();
    let alpha_formula = alpha == d.a.len() + nontrivial_sum;

    let closed = {
        let mut s = d.a.clone();
        for v in g.open_neighborhood(&d.a).iter() {
            s.insert(v);
        }
        s
    };
    let mut around_a: VertexSet = solver
        .best_within((0..n).filter(|&v| !closed.contains(v)))
        .into_iter()
        .collect();
    for a in d.a.iter() {
        around_a.insert(a);
    }
    let trivial_components_avoided = g.is_independent(&around_a)
        && around_a.len() == alpha
        && d.components
            .iter()
            .zip(&d.trivial)
            .filter(|(_, &t)| t)
            .all(|(k, _)| !k.iter().any(|v| around_a.contains(v)));

    Ok(DeficientEqualityReport {
        a_forced,
        c_empty: d.c.is_empty(),
        alpha_formula,
        trivial_components_avoided,
    })
}
