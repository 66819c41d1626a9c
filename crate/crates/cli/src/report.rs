//! JSON report schema and the conversions to and from lemma-lab reports.
//!
//! Vertex sets are written as label arrays sorted by vertex index; matching
//! edges as `[from_side, into_side]` pairs sorted by their first vertex.

use std::collections::BTreeMap;

use corona_core::io::{parse_graph6, serialize_graph6};
use corona_core::lemma::{CheckReport, Statement, Verdict, Witness};
use corona_core::mis::FamilyKind;
use corona_core::{Graph, Matching, MisFamily, VertexSet};
use serde::{Deserialize, Serialize};

pub const REPORT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub spec: serde_json::Value,
    pub results: Vec<GraphResult>,
    pub summary: Summary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphResult {
    pub graph_id: String,
    pub graph6: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// `ok`, or `cap_overflow` when Ω or the clique family exceeded the cap.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_size: Option<usize>,
    pub counts: Counts,
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<ErrorRecord>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub run: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub errors: usize,
}

impl Counts {
    pub fn add(&mut self, other: &Counts) {
        self.run += other.run;
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        self.errors += other.errors;
    }

    pub fn record(&mut self, verdict: Option<Verdict>) {
        self.run += 1;
        match verdict {
            Some(Verdict::Pass) => self.passed += 1,
            Some(Verdict::Fail) => self.failed += 1,
            Some(Verdict::Skipped) => self.skipped += 1,
            None => self.errors += 1,
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.passed + self.failed + self.skipped + self.errors == self.run
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub graphs_skipped: usize,
    pub checks: Counts,
    pub by_statement: BTreeMap<String, Counts>,
    pub wall_time_ms: u64,
}

impl Summary {
    pub fn from_results(results: &[GraphResult], by_statement: BTreeMap<String, Counts>, wall_time_ms: u64) -> Self {
        let mut checks = Counts::default();
        for r in results {
            checks.add(&r.counts);
        }
        Summary {
            graphs: results.len(),
            graphs_skipped: results.iter().filter(|r| r.status != "ok").count(),
            checks,
            by_statement,
            wall_time_ms,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub statement: Option<String>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub statement: String,
    pub verdict: String,
    pub lhs: i64,
    pub rhs: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equality: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
    pub inputs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessRecord {
    Matching { from: Vec<String>, into: Vec<String>, edges: Vec<[String; 2]> },
    HallViolator { from: Vec<String>, into: Vec<String>, violator: Vec<String> },
    Family { family: String, members: Vec<Vec<String>> },
}

pub fn labels_of(g: &Graph, s: &VertexSet) -> Vec<String> {
    s.iter().map(|v| g.label(v)).collect()
}

fn set_from(g: &Graph, labels: &[String]) -> Result<VertexSet, String> {
    let mut s = VertexSet::empty(g.n());
    for l in labels {
        s.insert(g.vertex_by_label(l).ok_or_else(|| format!("unknown vertex label {l:?}"))?);
    }
    Ok(s)
}

fn vertex(g: &Graph, label: &str) -> Result<usize, String> {
    g.vertex_by_label(label).ok_or_else(|| format!("unknown vertex label {label:?}"))
}

fn kind_name(kind: FamilyKind) -> &'static str {
    match kind {
        FamilyKind::MaximumIndependent => "maximum_independent",
        FamilyKind::MaximumClique => "maximum_clique",
        FamilyKind::Arbitrary => "arbitrary",
    }
}

fn kind_from(name: &str) -> Result<FamilyKind, String> {
    match name {
        "maximum_independent" => Ok(FamilyKind::MaximumIndependent),
        "maximum_clique" => Ok(FamilyKind::MaximumClique),
        "arbitrary" => Ok(FamilyKind::Arbitrary),
        other => Err(format!("unknown family kind {other:?}")),
    }
}

fn verdict_from(name: &str) -> Result<Verdict, String> {
    match name {
        "pass" => Ok(Verdict::Pass),
        "fail" => Ok(Verdict::Fail),
        "skipped" => Ok(Verdict::Skipped),
        other => Err(format!("unknown verdict {other:?}")),
    }
}

impl CheckRecord {
    pub fn from_report(g: &Graph, r: &CheckReport) -> Self {
        let witness = r.witness.as_ref().map(|w| match w {
            Witness::Saturation { from, into, matching } => {
                let mut edges = matching.edges.clone();
                edges.sort_unstable();
                WitnessRecord::Matching {
                    from: labels_of(g, from),
                    into: labels_of(g, into),
                    edges: edges.into_iter().map(|(a, b)| [g.label(a), g.label(b)]).collect(),
                }
            }
            Witness::HallViolator { from, into, violator } => WitnessRecord::HallViolator {
                from: labels_of(g, from),
                into: labels_of(g, into),
                violator: labels_of(g, violator),
            },
            Witness::Family(f) => WitnessRecord::Family {
                family: kind_name(f.kind()).to_string(),
                members: f.iter().map(|m| labels_of(g, m)).collect(),
            },
        });
        CheckRecord {
            statement: r.statement.id().to_string(),
            verdict: r.verdict.as_str().to_string(),
            lhs: r.lhs,
            rhs: r.rhs,
            condition: r.condition,
            equality: r.equality,
            witness,
            inputs: r.inputs.clone(),
            note: r.note.clone(),
        }
    }

    pub fn to_report(&self, g: &Graph) -> Result<CheckReport, String> {
        let witness = match &self.witness {
            None => None,
            Some(WitnessRecord::Matching { from, into, edges }) => {
                let from = set_from(g, from)?;
                let edges = edges
                    .iter()
                    .map(|[a, b]| Ok((vertex(g, a)?, vertex(g, b)?)))
                    .collect::<Result<Vec<_>, String>>()?;
                Some(Witness::Saturation {
                    into: set_from(g, into)?,
                    matching: Matching { edges, saturates: Some(from.clone()) },
                    from,
                })
            }
            Some(WitnessRecord::HallViolator { from, into, violator }) => Some(Witness::HallViolator {
                from: set_from(g, from)?,
                into: set_from(g, into)?,
                violator: set_from(g, violator)?,
            }),
            Some(WitnessRecord::Family { family, members }) => {
                let members = members.iter().map(|m| set_from(g, m)).collect::<Result<Vec<_>, String>>()?;
                Some(Witness::Family(MisFamily::new(g.n(), kind_from(family)?, members)))
            }
        };
        Ok(CheckReport {
            statement: self.statement.parse::<Statement>()?,
            verdict: verdict_from(&self.verdict)?,
            lhs: self.lhs,
            rhs: self.rhs,
            condition: self.condition,
            equality: self.equality,
            witness,
            inputs: self.inputs.clone(),
            note: self.note.clone(),
        })
    }
}

impl GraphResult {
    pub fn new(graph_id: String, g: &Graph) -> Self {
        GraphResult {
            graph_id,
            graph6: serialize_graph6(g),
            labels: g.labels().map(<[String]>::to_vec),
            status: "ok".into(),
            alpha: None,
            omega_size: None,
            counts: Counts::default(),
            checks: Vec::new(),
            errors: Vec::new(),
        }
    }

    pub fn graph(&self) -> Result<Graph, String> {
        let g = parse_graph6(&self.graph6).map_err(|e| e.to_string())?;
        Ok(match &self.labels {
            Some(l) if l.len() == g.n() => g.with_labels(l.iter().cloned()),
            Some(_) => return Err("label count does not match the graph".into()),
            None => g,
        })
    }
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    /// Rebuilds every graph from its graph6 string and re-checks every
    /// recorded verdict and witness. Returns the number of checks replayed.
    pub fn revalidate(&self) -> Result<usize, String> {
        let mut replayed = 0;
        let mut total = Counts::default();
        for r in &self.results {
            let g = r.graph()?;
            if !r.counts.is_consistent() {
                return Err(format!("{}: counts do not add up", r.graph_id));
            }
            total.add(&r.counts);
            for c in &r.checks {
                c.to_report(&g)?.revalidate(&g).map_err(|e| format!("{}: {}: {e}", r.graph_id, c.statement))?;
                replayed += 1;
            }
        }
        if total != self.summary.checks || !self.summary.checks.is_consistent() {
            return Err("summary counts do not match the per-graph counts".into());
        }
        Ok(replayed)
    }
}
