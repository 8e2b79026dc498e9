//! Per-graph audits: every property the toolkit promises, evaluated on one
//! graph, plus the run-level tally used by the `verify` command and the
//! acceptance suite.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::characterization::{self, CharacterizationReport};
use crate::gallai_edmonds::{self, StructureReport};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::independence;
use crate::matching;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    /// Structural and direct verdicts agree.
    Agreement,
    /// All five Gallai-Edmonds clauses hold.
    Structure,
    /// `μ = |C|/2 + |A| + Σ (|D_i| − 1)/2`.
    MuFormula,
    /// `δ·α ≤ Δ·μ` (graphs with an edge).
    MinMaxDegree,
    /// `α ≤ μ` (connected regular, `r ≥ 1`).
    AlphaAtMostMu,
    /// `⌊n/2⌋ + 1 ≤ α + μ ≤ n ≤ α + 2μ`.
    Sandwich,
    /// A regular graph with a perfect matching and `α = μ` is bipartite.
    PerfectMatchingForcesBipartite,
    /// Connected regular bipartite graphs have `α = μ`.
    BipartiteEqual,
    /// Conclusions for `α = μ` without a perfect matching.
    DeficientEquality,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphAudit {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub mu: usize,
    pub structure: Option<StructureReport>,
    /// Present for connected regular graphs with `r >= 1`.
    pub report: Option<CharacterizationReport>,
    pub checked: Vec<Property>,
    pub failed: Vec<Property>,
    /// Why a check could not run (e.g. the surplus enumeration limit).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
}

impl GraphAudit {
    pub fn passed(&self) -> bool {
        self.failed.is_empty() && self.errors.is_empty()
    }

    pub fn agrees(&self) -> Option<bool> {
        self.report.as_ref().and_then(|r| r.agree)
    }

    fn record(&mut self, property: Property, ok: bool) {
        self.checked.push(property);
        if !ok {
            self.failed.push(property);
        }
    }
}

/// `⌊n/2⌋ + 1 ≤ α + μ ≤ n ≤ α + 2μ`; needs `n ≥ 1`.
pub fn sandwich_holds(n: usize, alpha: usize, mu: usize) -> bool {
    n / 2 + 1 <= alpha + mu && alpha + mu <= n && n <= alpha + 2 * mu
}

/// Audits `g`. General properties apply to every graph; the
/// characterization ones only to connected regular graphs with `r >= 1`.
pub fn audit(g: &Graph) -> GraphAudit {
    let d = gallai_edmonds::decompose(g);
    let mu = matching::mu(g);
    let alpha = independence::alpha(g);
    let mut audit = GraphAudit {
        graph6: to_graph6(g),
        n: g.n(),
        m: g.m(),
        alpha,
        mu,
        structure: None,
        report: None,
        checked: Vec::new(),
        failed: Vec::new(),
        errors: Vec::new(),
    };

    match gallai_edmonds::verify_structure(g, &d) {
        Ok(s) => {
            audit.structure = Some(s);
            audit.record(Property::Structure, s.all());
        }
        Err(e) => audit.errors.push(e.to_string()),
    }
    audit.record(
        Property::MuFormula,
        gallai_edmonds::mu_formula_holds(mu, &d),
    );
    if g.n() > 0 {
        audit.record(Property::Sandwich, sandwich_holds(g.n(), alpha, mu));
    }
    if g.m() > 0 {
        audit.record(
            Property::MinMaxDegree,
            g.min_degree() * alpha <= g.max_degree() * mu,
        );
    }

    if characterization::require_connected_regular(g).is_err() {
        return audit;
    }
    let report = match characterization::check_with(g, &d) {
        Ok(report) => report,
        Err(e) => {
            audit.errors.push(e.to_string());
            return audit;
        }
    };
    audit.record(Property::Agreement, report.agree == Some(true));
    audit.record(Property::AlphaAtMostMu, alpha <= mu);
    let equal = alpha == mu;
    if report.has_pm && equal {
        audit.record(
            Property::PerfectMatchingForcesBipartite,
            report.is_bipartite,
        );
    }
    if report.is_bipartite {
        audit.record(Property::BipartiteEqual, equal);
    }
    if !report.has_pm && equal {
        match characterization::deficient_equality_with(g, &d) {
            Ok(lemma) => audit.record(Property::DeficientEquality, lemma.holds()),
            Err(e) => audit.errors.push(e.to_string()),
        }
    }
    audit.report = Some(report);
    audit
}

/// Aggregate over a run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RunSummary {
    pub processed: usize,
    /// Graphs on which every checked property held.
    pub agreements: usize,
    /// Graphs with at least one failed property or check error.
    pub disagreements: usize,
    /// Inputs outside the scope of the command (e.g. disconnected).
    pub skipped: usize,
    /// Input or generation errors.
    pub errors: usize,
    /// Graphs where the characterization ran.
    pub characterized: usize,
    /// Of those, how many have `α = μ`.
    pub equal: usize,
    pub failures: BTreeMap<Property, usize>,
}

impl RunSummary {
    pub fn add(&mut self, audit: &GraphAudit) {
        self.processed += 1;
        if audit.passed() {
            self.agreements += 1;
        } else {
            self.disagreements += 1;
        }
        for &p in &audit.failed {
            *self.failures.entry(p).or_default() += 1;
        }
        if let Some(report) = &audit.report {
            self.characterized += 1;
            if report.direct_verdict == Some(true) {
                self.equal += 1;
            }
        }
    }

    pub fn merge(&mut self, other: &RunSummary) {
        self.processed += other.processed;
        self.agreements += other.agreements;
        self.disagreements += other.disagreements;
        self.skipped += other.skipped;
        self.errors += other.errors;
        self.characterized += other.characterized;
        self.equal += other.equal;
        for (&p, &k) in &other.failures {
            *self.failures.entry(p).or_default() += k;
        }
    }

    pub fn failures_of(&self, property: Property) -> usize {
        self.failures.get(&property).copied().unwrap_or(0)
    }

    /// 0 clean, 1 property failure, 2 input or generation error.
    pub fn exit_code(&self) -> i32 {
        if self.errors > 0 {
            2
        } else if self.disagreements > 0 {
            1
        } else {
            0
        }
    }
}
