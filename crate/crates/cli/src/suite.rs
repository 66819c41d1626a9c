//! Input selection and execution of the statement checkers for one graph.

use std::collections::{BTreeMap, BTreeSet};

use corona_core::lemma::{CheckReport, Error, Lab, Statement};
use corona_core::mis::FamilyKind;
use corona_core::{CapOverflow, Graph, MisFamily, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::report::{CheckRecord, Counts, ErrorRecord, GraphResult};

/// Largest graph for which `--exhaustive` scans every independent set.
pub const EXHAUSTIVE_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementSet(BTreeSet<Statement>);

impl StatementSet {
    pub fn all() -> Self {
        StatementSet(Statement::ALL.into_iter().collect())
    }

    /// `all`, or a comma-separated list of statement ids.
    pub fn parse(text: &str) -> Result<Self, String> {
        if text.trim() == "all" {
            return Ok(Self::all());
        }
        let set = text.split(',').map(|s| s.trim().parse::<Statement>()).collect::<Result<BTreeSet<_>, _>>()?;
        if set.is_empty() {
            return Err("no statements selected".into());
        }
        Ok(StatementSet(set))
    }

    pub fn contains(&self, s: Statement) -> bool {
        self.0.contains(&s)
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.0.iter().map(|s| s.id()).collect()
    }
}

/// Inputs fed to the checkers for one graph.
#[derive(Debug, Clone, Default)]
pub struct Plan {
    /// Independent sets `S` for the matching and set-and-collection checks.
    pub sets: Vec<VertexSet>,
    /// Collections `Λ ⊆ Ω` with the index of `X ∈ Λ`.
    pub collections: Vec<(MisFamily, usize)>,
    /// Collections of maximum cliques.
    pub clique_collections: Vec<MisFamily>,
    /// Independent sets tested against the maximum stable set criterion.
    pub stable_candidates: Vec<VertexSet>,
}

/// `S` over Ω and ∅ (or every independent set), `Λ = Ω` with `X` its first
/// member, `Γ` all maximum cliques, and every `S` as a stable-set candidate.
pub fn verify_plan(lab: &Lab<'_>, exhaustive: bool) -> Result<Plan, CapOverflow> {
    let g = lab.graph();
    let omega = lab.omega()?.clone();
    let sets = if exhaustive {
        all_independent_sets(g)
    } else {
        let mut sets = omega.members().to_vec();
        sets.push(VertexSet::empty(g.n()));
        sets
    };
    Ok(Plan {
        stable_candidates: sets.clone(),
        sets,
        collections: vec![(omega, 0)],
        clique_collections: vec![lab.max_cliques()?],
    })
}

fn all_independent_sets(g: &Graph) -> Vec<VertexSet> {
    assert!(g.n() <= EXHAUSTIVE_MAX_N, "exhaustive scan limited to {EXHAUSTIVE_MAX_N} vertices");
    (0u64..1 << g.n()).map(|m| VertexSet::from_mask(g.n(), m)).filter(|s| g.is_independent(s)).collect()
}

/// Singleton, full and random sub-collections of `family`, each paired with a
/// random member index.
fn sample_collections<R: Rng>(family: &MisFamily, rng: &mut R) -> Vec<(MisFamily, usize)> {
    let n = family.universe();
    let members = family.members();
    let single = members[rng.gen_range(0..members.len())].clone();
    let mut subset: Vec<VertexSet> = members.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    if subset.is_empty() {
        subset.push(members.choose(rng).expect("non-empty family").clone());
    }
    let subset = MisFamily::new(n, family.kind(), subset);
    let x = rng.gen_range(0..subset.len());
    let full_x = rng.gen_range(0..family.len());
    vec![(MisFamily::new(n, family.kind(), vec![single]), 0), (family.clone(), full_x), (subset, x)]
}

/// `S` over Ω and ∅; Λ and Γ each a random singleton, the full family and a
/// random subset; stable-set candidates Ω, ∅ and one member minus a vertex.
pub fn campaign_plan<R: Rng>(lab: &Lab<'_>, rng: &mut R) -> Result<Plan, CapOverflow> {
    let n = lab.graph().n();
    let omega = lab.omega()?.clone();
    let cliques = lab.max_cliques()?;
    let mut sets = omega.members().to_vec();
    sets.push(VertexSet::empty(n));
    let mut stable_candidates = sets.clone();
    let mut shrunk = omega.members()[rng.gen_range(0..omega.len())].clone();
    if let Some(v) = shrunk.first() {
        shrunk.remove(v);
        stable_candidates.push(shrunk);
    }
    Ok(Plan {
        sets,
        collections: sample_collections(&omega, rng),
        clique_collections: sample_collections(&cliques, rng).into_iter().map(|(f, _)| f).collect(),
        stable_candidates,
    })
}

/// Result of running a plan on one graph.
#[derive(Debug, Clone)]
pub struct GraphRun {
    pub result: GraphResult,
    pub by_statement: BTreeMap<String, Counts>,
}

struct Recorder<'a> {
    g: &'a Graph,
    statements: &'a StatementSet,
    keep_passing: bool,
    result: GraphResult,
    by_statement: BTreeMap<String, Counts>,
}

impl Recorder<'_> {
    fn record(&mut self, statement: Statement, outcome: Result<CheckReport, Error>) {
        if !self.statements.contains(statement) {
            return;
        }
        let counts = self.by_statement.entry(statement.id().to_string()).or_default();
        match outcome {
            Ok(report) => {
                counts.record(Some(report.verdict));
                self.result.counts.record(Some(report.verdict));
                if self.keep_passing || !report.passed() && report.verdict != corona_core::lemma::Verdict::Skipped {
                    self.result.checks.push(CheckRecord::from_report(self.g, &report));
                }
            }
            Err(e) => {
                counts.record(None);
                self.result.counts.record(None);
                self.result
                    .errors
                    .push(ErrorRecord { statement: Some(statement.id().to_string()), message: e.to_string() });
            }
        }
    }

    fn wants(&self, any: &[Statement]) -> bool {
        any.iter().any(|&s| self.statements.contains(s))
    }
}

/// Runs every selected checker on `plan`. With `keep_passing` false only
/// failing check records are kept; counts always cover every check.
pub fn run_plan(
    graph_id: String,
    lab: &Lab<'_>,
    plan: &Plan,
    statements: &StatementSet,
    keep_passing: bool,
) -> GraphRun {
    let g = lab.graph();
    let mut result = GraphResult::new(graph_id, g);
    result.alpha = Some(lab.alpha());
    result.omega_size = lab.omega().ok().map(MisFamily::len);
    let mut rec = Recorder { g, statements, keep_passing, result, by_statement: BTreeMap::new() };

    use Statement::*;
    let matching_parts = [MatchingIntoUnion, MatchingIntoMember, MatchingOutsideMember];
    for s in &plan.sets {
        for (lam, x) in &plan.collections {
            if rec.wants(&matching_parts) {
                match lab.check_matching_lemma(s, lam, *x) {
                    Ok(reports) => {
                        for r in reports {
                            rec.record(r.statement, Ok(r));
                        }
                    }
                    Err(e) => {
                        for part in matching_parts {
                            rec.record(part, Err(e.clone()));
                        }
                    }
                }
            }
            if rec.wants(&[SetCollection]) {
                rec.record(SetCollection, lab.check_set_collection(s, lam));
            }
        }
    }
    if rec.wants(&[CollectionBound]) {
        for (lam, _) in &plan.collections {
            rec.record(CollectionBound, lab.check_collection_bound(lam));
        }
    }
    if rec.wants(&[CoreCoronaLower, CoreCoronaUpper]) {
        match lab.check_core_corona_bounds() {
            Ok([lo, hi]) => {
                rec.record(CoreCoronaLower, Ok(lo));
                rec.record(CoreCoronaUpper, Ok(hi));
            }
            Err(e) => {
                rec.record(CoreCoronaLower, Err(e.clone()));
                rec.record(CoreCoronaUpper, Err(e));
            }
        }
    }
    if rec.wants(&[KeEquality]) {
        rec.record(KeEquality, lab.check_ke_equality());
    }
    if rec.wants(&[CoverGap]) {
        rec.record(CoverGap, lab.check_gitval());
    }
    if rec.wants(&[CoreMatching]) {
        let members = lab.omega().map(MisFamily::len).unwrap_or(0);
        for i in 0..members {
            rec.record(CoreMatching, lab.check_core_matching(i));
        }
    }
    if rec.wants(&[CliqueCollection]) {
        for gamma in &plan.clique_collections {
            debug_assert_eq!(gamma.kind(), FamilyKind::MaximumClique);
            rec.record(CliqueCollection, lab.check_hajnal(gamma));
        }
    }
    if rec.wants(&[MaximumStableSet]) {
        for x in &plan.stable_candidates {
            rec.record(MaximumStableSet, lab.check_berge(x));
        }
    }
    GraphRun { result: rec.result, by_statement: rec.by_statement }
}

/// A graph whose Ω or clique family overflowed the cap: no checks run.
pub fn overflow_run(graph_id: String, g: &Graph, e: &CapOverflow) -> GraphRun {
    let mut result = GraphResult::new(graph_id, g);
    result.status = "cap_overflow".into();
    result.errors.push(ErrorRecord { statement: None, message: e.to_string() });
    GraphRun { result, by_statement: BTreeMap::new() }
}

pub fn merge_counts(into: &mut BTreeMap<String, Counts>, from: &BTreeMap<String, Counts>) {
    for (k, c) in from {
        into.entry(k.clone()).or_default().add(c);
    }
}
