//! Exhaustive property sweeps over small graphs.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::closed_forms::{snf_complete, snf_star, snf_tree_distance, tree_distance_determinant};
use crate::error::{Error, Result};
use crate::generate::{
    generate_connected_graphs, generate_trees, MAX_BUILTIN_CONNECTED, MAX_TREE_ORDER,
};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::linalg::{determinant, snf};
use crate::matrix::{build, MatrixKind};
use crate::sandpile::{cone_graph, cross_check, reduced_determinant, sandpile_group};
use crate::spectra::{
    check_conductance_bracket, check_extreme_bounds, check_lambda1_bracket, check_moments,
    check_shift_lemmas, check_weyl_all, default_tol, BoundReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Bounds,
    Shifts,
    ClosedForms,
    Sandpile,
    Moments,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Bounds,
        Suite::Shifts,
        Suite::ClosedForms,
        Suite::Sandpile,
        Suite::Moments,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bounds => "bounds",
            Suite::Shifts => "shifts",
            Suite::ClosedForms => "closed-forms",
            Suite::Sandpile => "sandpile",
            Suite::Moments => "moments",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteOutcome {
    /// Individual checks performed.
    pub checks: u64,
    pub failures: Vec<String>,
    /// Informational lines, e.g. which third-moment form held.
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, other: SuiteOutcome) -> SuiteOutcome {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
        self
    }
}

fn corpus(n_max: usize) -> Result<Vec<Graph>> {
    if n_max > MAX_BUILTIN_CONNECTED {
        return Err(Error::InvalidParameter(format!(
            "n-max {n_max} exceeds the built-in corpus limit {MAX_BUILTIN_CONNECTED}"
        )));
    }
    let mut all = Vec::new();
    for n in 1..=n_max {
        all.extend(generate_connected_graphs(n)?);
    }
    Ok(all)
}

fn record(out: &mut SuiteOutcome, g: &Graph, report: &BoundReport) {
    out.checks += report.checks.len() as u64;
    for c in report.failures() {
        out.failures.push(format!(
            "{}: {} (left {}, right {})",
            write_graph6(g),
            c.name,
            c.left,
            c.right
        ));
    }
}

/// Tolerance for the numeric checks on `g`, from the largest entry among
/// the matrices involved.
pub fn graph_tol(g: &Graph) -> Result<f64> {
    let mut tol: f64 = 0.0;
    for kind in [
        MatrixKind::A,
        MatrixKind::D,
        MatrixKind::L,
        MatrixKind::Atr,
        MatrixKind::Ddeg,
    ] {
        tol = tol.max(default_tol(&build(g, kind)?));
    }
    Ok(tol)
}

fn bounds_one(g: &Graph) -> Result<SuiteOutcome> {
    let tol = graph_tol(g)?;
    let mut out = SuiteOutcome::default();
    record(&mut out, g, &check_extreme_bounds(g, tol)?);
    record(&mut out, g, &check_lambda1_bracket(g, tol)?);
    record(&mut out, g, &check_weyl_all(g, tol)?);
    if g.n() >= 2 {
        record(&mut out, g, &check_conductance_bracket(g, tol)?);
    }
    Ok(out)
}

/// Spectral inequalities over every connected graph with `n <= n_max`.
pub fn bounds_suite(n_max: usize) -> Result<SuiteOutcome> {
    corpus(n_max)?
        .par_iter()
        .map(bounds_one)
        .try_reduce(SuiteOutcome::default, |a, b| Ok(a.merge(b)))
}

/// Shift identities on `C_3..C_{n_max}`, `K_1..K_{min(n_max, 8)}` and the
/// Petersen graph. `n_max` is not bounded by the corpus here.
pub fn shifts_suite(n_max: usize) -> Result<SuiteOutcome> {
    let mut graphs = Vec::new();
    for n in 3..=n_max {
        graphs.push(Graph::cycle(n)?);
    }
    for n in 1..=n_max.min(8) {
        graphs.push(Graph::complete(n)?);
    }
    graphs.push(Graph::petersen());
    let mut out = SuiteOutcome::default();
    for g in &graphs {
        let r = check_shift_lemmas(g, graph_tol(g)?)?;
        if r.checks.len() != 2 {
            out.failures.push(format!(
                "{}: expected both shifts to apply: {:?}",
                write_graph6(g),
                r.not_applicable
            ));
        }
        record(&mut out, g, &r);
    }
    Ok(out)
}

/// Closed-form Smith forms against direct computation.
pub fn closed_forms_suite(n_max: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    let mut expect = |label: String, ok: bool| {
        out.checks += 1;
        if !ok {
            out.failures.push(label);
        }
    };
    for n in 2..=n_max {
        let k = Graph::complete(n)?;
        for kind in [
            MatrixKind::L,
            MatrixKind::Atr,
            MatrixKind::Ddeg,
            MatrixKind::Q,
            MatrixKind::AtrPlus,
            MatrixKind::DdegPlus,
        ] {
            expect(
                format!("snf_complete({kind}, {n})"),
                snf(&build(&k, kind)?) == snf_complete(kind, n)?,
            );
        }
    }
    for m in 1..=n_max {
        let s = Graph::star(m)?;
        for kind in [MatrixKind::Ddeg, MatrixKind::DdegPlus] {
            expect(
                format!("snf_star({kind}, {m})"),
                snf(&build(&s, kind)?) == snf_star(kind, m)?,
            );
        }
    }
    for order in 2..=n_max.min(MAX_TREE_ORDER) {
        let formula = snf_tree_distance(order)?;
        let det = tree_distance_determinant(order)?;
        for t in generate_trees(order)? {
            let d = build(&t, MatrixKind::D)?;
            expect(
                format!("snf_tree_distance on {}", write_graph6(&t)),
                snf(&d) == formula,
            );
            expect(
                format!("det D on {}", write_graph6(&t)),
                determinant(&d) == det,
            );
        }
    }
    Ok(out)
}

fn sandpile_one(g: &Graph) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    if g.n() < 2 || g.is_complete() {
        return Ok(out);
    }
    let label = write_graph6(g);
    let cc = cross_check(g);
    out.checks += 1;
    out.failures
        .extend(cc.diagnostics.into_iter().map(|d| format!("{label}: {d}")));
    let cone = cone_graph(g)?;
    let tau = sandpile_group(g)?.spanning_trees;
    for k in 0..cone.n() {
        out.checks += 1;
        let det = reduced_determinant(&cone, k);
        if det != tau {
            out.failures.push(format!(
                "{label}: reduced determinant at {k} is {det}, expected {tau}"
            ));
        }
    }
    Ok(out)
}

/// Cone construction and matrix-tree agreement for every connected,
/// non-complete graph with `n <= n_max`.
pub fn sandpile_suite(n_max: usize) -> Result<SuiteOutcome> {
    corpus(n_max)?
        .par_iter()
        .map(sandpile_one)
        .try_reduce(SuiteOutcome::default, |a, b| Ok(a.merge(b)))
}

/// Trace identities for powers of `Atr`. The first two are exact
/// requirements. For the third, the expansion form is required and the
/// number of graphs satisfying each candidate form is reported.
pub fn moments_suite(n_max: usize) -> Result<SuiteOutcome> {
    let graphs = corpus(n_max)?;
    let mut out = SuiteOutcome::default();
    let (mut published, mut coeff3, mut expanded) = (0u64, 0u64, 0u64);
    for g in &graphs {
        let r = check_moments(g)?;
        let label = write_graph6(g);
        out.checks += 3;
        if !r.first_holds() {
            out.failures.push(format!(
                "{label}: trace(Atr) = {} vs W = {}",
                r.trace1, r.wiener
            ));
        }
        if !r.second_holds() {
            out.failures.push(format!(
                "{label}: trace(Atr^2) = {} vs 2m + sum tr^2 = {}",
                r.trace2,
                &r.sum_tr2 + 2 * r.edges
            ));
        }
        if !r.third_expanded_holds() {
            out.failures.push(format!(
                "{label}: trace(Atr^3) = {} vs expansion {}",
                r.trace3,
                r.third_expanded()
            ));
        }
        published += u64::from(r.third_published_holds());
        coeff3 += u64::from(r.third_residual_coefficient_three() == 0.into());
        expanded += u64::from(r.third_expanded_holds());
    }
    let total = graphs.len();
    out.notes.push(format!(
        "third moment, published form 6T + Wdeg + sum tr^3: {published}/{total} graphs"
    ));
    out.notes.push(format!(
        "third moment, 6T + 3 Wdeg + sum tr^3: {coeff3}/{total} graphs"
    ));
    out.notes.push(format!(
        "third moment, expansion sum tr^3 + 3 Wdeg - 6T: {expanded}/{total} graphs"
    ));
    Ok(out)
}

pub fn run_suite(suite: Suite, n_max: usize) -> Result<SuiteOutcome> {
    match suite {
        Suite::Bounds => bounds_suite(n_max),
        Suite::Shifts => shifts_suite(n_max),
        Suite::ClosedForms => closed_forms_suite(n_max),
        Suite::Sandpile => sandpile_suite(n_max),
        Suite::Moments => moments_suite(n_max),
    }
}
