//! Witness-producing checkers for the matching and counting statements
//! about maximum independent sets, their intersections and unions.
//!
//! Each checker returns a [`CheckReport`]. A precondition breach (a
//! dependent `S`, a collection that is not made of maximum independent
//! sets, an empty collection) is an [`Error`], never a failed check: those
//! statements can be false outside their hypotheses, which is what
//! [`demonstrate_necessity`] shows.

use std::cell::OnceCell;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use thiserror::Error;

use crate::error::CapOverflow;
use crate::graph::Graph;
use crate::io::serialize_graph6;
use crate::matching::{
    maximum_matching_size, saturating_matching, violates_hall, HallCertificate, Matching, MatchingError,
};
use crate::mis::{
    enumerate_max_cliques, enumerate_omega, for_each_maximal_independent, independence_number, FamilyKind, MisFamily,
    DEFAULT_OMEGA_CAP,
};
use crate::set::VertexSet;

/// The checked statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    /// A matching from `S − ∩Λ` into `∪Λ − S`.
    MatchingIntoUnion,
    /// A matching from `S − X` into `X − S`, `X ∈ Λ`.
    MatchingIntoMember,
    /// A matching from `(S ∩ X) − ∩Λ` into `∪Λ − (X ∪ S)`.
    MatchingOutsideMember,
    /// `|S| + α ≤ |∩Λ ∩ S| + |∪Λ ∪ S|`.
    SetCollection,
    /// `2α ≤ |∩Λ| + |∪Λ|`.
    CollectionBound,
    /// `2α ≤ |core| + |corona|`.
    CoreCoronaLower,
    /// `|core| + |corona| ≤ α + |V| − 1` for graphs with an edge.
    CoreCoronaUpper,
    /// König–Egerváry graphs have `2α = |core| + |corona|`.
    KeEquality,
    /// `α − |core| ≤ τ − |∩{V − S : S ∈ Ω}|`.
    CoverGap,
    /// A matching from `S − core` into `corona − S`, `S ∈ Ω`.
    CoreMatching,
    /// `|∩Γ| ≥ 2ω − |∪Γ|` for a collection Γ of maximum cliques.
    CliqueCollection,
    /// An independent `X` is maximum iff every independent set disjoint
    /// from `X` can be matched into `X`.
    MaximumStableSet,
}

impl Statement {
    pub const ALL: [Statement; 12] = [
        Statement::MatchingIntoUnion,
        Statement::MatchingIntoMember,
        Statement::MatchingOutsideMember,
        Statement::SetCollection,
        Statement::CollectionBound,
        Statement::CoreCoronaLower,
        Statement::CoreCoronaUpper,
        Statement::KeEquality,
        Statement::CoverGap,
        Statement::CoreMatching,
        Statement::CliqueCollection,
        Statement::MaximumStableSet,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::MatchingIntoUnion => "matching_into_union",
            Statement::MatchingIntoMember => "matching_into_member",
            Statement::MatchingOutsideMember => "matching_outside_member",
            Statement::SetCollection => "set_collection",
            Statement::CollectionBound => "collection_bound",
            Statement::CoreCoronaLower => "core_corona_lower",
            Statement::CoreCoronaUpper => "core_corona_upper",
            Statement::KeEquality => "ke_equality",
            Statement::CoverGap => "cover_gap",
            Statement::CoreMatching => "core_matching",
            Statement::CliqueCollection => "clique_collection",
            Statement::MaximumStableSet => "maximum_stable_set",
        }
    }

    fn is_matching(self) -> bool {
        matches!(
            self,
            Statement::MatchingIntoUnion
                | Statement::MatchingIntoMember
                | Statement::MatchingOutsideMember
                | Statement::CoreMatching
        )
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Statement::ALL.into_iter().find(|st| st.id() == s).ok_or_else(|| format!("unknown statement id {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A matching saturating `from` into `into`.
    Saturation {
        from: VertexSet,
        into: VertexSet,
        matching: Matching,
    },
    /// An inclusion-minimal subset of `from` with too few neighbours in `into`.
    HallViolator {
        from: VertexSet,
        into: VertexSet,
        violator: VertexSet,
    },
    Family(MisFamily),
}

/// Outcome of one checker call.
///
/// For matching statements `lhs` is the size of the set to saturate and
/// `rhs` the size of the largest matching found; otherwise they are the two
/// sides of the inequality. `condition` carries the premise or the tested
/// side of a biconditional, `equality` whether `lhs == rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub statement: Statement,
    pub verdict: Verdict,
    pub lhs: i64,
    pub rhs: i64,
    pub condition: Option<bool>,
    pub equality: Option<bool>,
    pub witness: Option<Witness>,
    pub inputs: String,
    pub note: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Recomputes the verdict from `lhs`/`rhs`/flags and re-checks any
    /// witness against `g`.
    pub fn revalidate(&self, g: &Graph) -> Result<(), String> {
        let expected = match self.statement {
            s if s.is_matching() => self.lhs == self.rhs,
            Statement::CliqueCollection
            | Statement::SetCollection
            | Statement::CollectionBound
            | Statement::CoreCoronaLower
            | Statement::CoreCoronaUpper
            | Statement::CoverGap => self.lhs <= self.rhs,
            Statement::KeEquality => {
                let ke = self.condition.ok_or("missing König–Egerváry flag")?;
                if self.equality != Some(self.lhs == self.rhs) {
                    return Err("equality flag disagrees with lhs/rhs".into());
                }
                !ke || self.lhs == self.rhs
            }
            Statement::MaximumStableSet => {
                let cond = self.condition.ok_or("missing matching condition")?;
                cond == (self.lhs == self.rhs)
            }
            _ => unreachable!(),
        };
        match self.verdict {
            Verdict::Skipped => {}
            v if v != Verdict::from_bool(expected) => {
                return Err(format!("verdict {} disagrees with lhs={} rhs={}", v.as_str(), self.lhs, self.rhs));
            }
            _ => {}
        }

        match &self.witness {
            None => {}
            Some(Witness::Saturation { from, into, matching }) => {
                matching.validate_from_into(g, from, into)?;
                if self.statement.is_matching() && (self.lhs != from.len() as i64 || self.rhs != matching.len() as i64)
                {
                    return Err("matching witness sizes disagree with lhs/rhs".into());
                }
            }
            Some(Witness::HallViolator { from, into, violator }) => {
                if !violator.is_subset(from) {
                    return Err("violator is not inside the source set".into());
                }
                if violator.is_empty() || !violates_hall(g, violator, into) {
                    return Err("violator satisfies Hall's condition".into());
                }
            }
            Some(Witness::Family(f)) => {
                if f.universe() != g.n() {
                    return Err("family bound to a different graph".into());
                }
                if f.kind() == FamilyKind::MaximumClique && !f.iter().all(|c| g.is_clique(c)) {
                    return Err("clique family member is not a clique".into());
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("S is not independent: {0:?} are adjacent")]
    NotIndependent((usize, usize)),
    #[error("the collection is empty")]
    EmptyCollection,
    #[error("Λ ⊄ Ω(G): member {index} is not a maximum independent set")]
    NotMaximumIndependent { index: usize },
    #[error("member {index} is not a maximum clique")]
    NotMaximumClique { index: usize },
    #[error("index {index} out of range for a family of {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("set or family bound to {found} vertices, graph has {expected}")]
    Universe { expected: usize, found: usize },
    #[error(transparent)]
    Overflow(#[from] CapOverflow),
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error("the two evaluation routes disagree: {0}")]
    Disagreement(String),
}

fn list(s: &VertexSet) -> String {
    format!("{:?}", s.to_vec())
}

fn family_list(f: &MisFamily) -> String {
    format!("{:?}", f.iter().map(VertexSet::to_vec).collect::<Vec<_>>())
}

/// Per-graph checker context; α, Ω, μ and the complement are computed
/// once and shared by every check.
pub struct Lab<'g> {
    g: &'g Graph,
    omega_cap: usize,
    graph6: String,
    alpha: OnceCell<usize>,
    omega: OnceCell<Result<MisFamily, CapOverflow>>,
    mu: OnceCell<usize>,
    complement: OnceCell<Graph>,
}

impl<'g> Lab<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Self::with_cap(g, DEFAULT_OMEGA_CAP)
    }

    pub fn with_cap(g: &'g Graph, omega_cap: usize) -> Self {
        Lab {
            g,
            omega_cap,
            graph6: serialize_graph6(g),
            alpha: OnceCell::new(),
            omega: OnceCell::new(),
            mu: OnceCell::new(),
            complement: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn alpha(&self) -> usize {
        *self.alpha.get_or_init(|| independence_number(self.g))
    }

    pub fn omega(&self) -> Result<&MisFamily, CapOverflow> {
        self.omega.get_or_init(|| enumerate_omega(self.g, self.omega_cap)).as_ref().map_err(Clone::clone)
    }

    pub fn mu(&self) -> usize {
        *self.mu.get_or_init(|| maximum_matching_size(self.g))
    }

    fn complement(&self) -> &Graph {
        self.complement.get_or_init(|| self.g.complement())
    }

    fn core_corona(&self) -> Result<(VertexSet, VertexSet), CapOverflow> {
        let omega = self.omega()?;
        Ok((omega.intersection(), omega.union()))
    }

    fn digest(&self, parts: &[(&str, String)]) -> String {
        let mut out = format!("g6={}", self.graph6);
        for (k, v) in parts {
            out.push(';');
            out.push_str(k);
            out.push('=');
            out.push_str(v);
        }
        out
    }

    fn check_bound(&self, s: &VertexSet) -> Result<(), Error> {
        if s.universe() != self.g.n() {
            return Err(Error::Universe { expected: self.g.n(), found: s.universe() });
        }
        Ok(())
    }

    fn require_independent(&self, s: &VertexSet) -> Result<(), Error> {
        self.check_bound(s)?;
        for u in s {
            if let Some(v) = (self.g.neighbors(u) & s).first() {
                return Err(Error::NotIndependent((u, v)));
            }
        }
        Ok(())
    }

    /// Λ non-empty and Λ ⊆ Ω(G).
    fn require_collection(&self, lam: &MisFamily) -> Result<(), Error> {
        if lam.universe() != self.g.n() {
            return Err(Error::Universe { expected: self.g.n(), found: lam.universe() });
        }
        if lam.is_empty() {
            return Err(Error::EmptyCollection);
        }
        let alpha = self.alpha();
        for (index, m) in lam.iter().enumerate() {
            if m.len() != alpha || !self.g.is_independent(m) {
                return Err(Error::NotMaximumIndependent { index });
            }
        }
        Ok(())
    }

    fn saturation(
        &self,
        statement: Statement,
        from: VertexSet,
        into: VertexSet,
        inputs: String,
    ) -> Result<CheckReport, Error> {
        let cert = saturating_matching(self.g, &from, &into)?;
        let lhs = from.len() as i64;
        let (rhs, witness) = match cert {
            HallCertificate::Matching(m) => (m.len() as i64, Witness::Saturation { from, into, matching: m }),
            HallCertificate::Violator(v) => {
                let size = crate::matching::bipartite_matching_size(self.g, &from, &into) as i64;
                (size, Witness::HallViolator { from, into, violator: v })
            }
        };
        Ok(CheckReport {
            statement,
            verdict: Verdict::from_bool(lhs == rhs),
            lhs,
            rhs,
            condition: None,
            equality: None,
            witness: Some(witness),
            inputs,
            note: None,
        })
    }

    fn inequality(&self, statement: Statement, lhs: usize, rhs: usize, inputs: String) -> CheckReport {
        CheckReport {
            statement,
            verdict: Verdict::from_bool(lhs <= rhs),
            lhs: lhs as i64,
            rhs: rhs as i64,
            condition: None,
            equality: Some(lhs == rhs),
            witness: None,
            inputs,
            note: None,
        }
    }

    /// The three matching statements for `S`, `Λ` and `X = Λ[x_index]`.
    pub fn check_matching_lemma(
        &self,
        s: &VertexSet,
        lam: &MisFamily,
        x_index: usize,
    ) -> Result<[CheckReport; 3], Error> {
        self.require_independent(s)?;
        self.require_collection(lam)?;
        let x = lam.get(x_index).ok_or(Error::IndexOutOfRange { index: x_index, len: lam.len() })?;
        let inputs = self.digest(&[("S", list(s)), ("L", family_list(lam)), ("X", x_index.to_string())]);
        let (meet, join) = (lam.intersection(), lam.union());

        let into_union = self.saturation(Statement::MatchingIntoUnion, s - &meet, &join - s, inputs.clone())?;
        let into_member = self.saturation(Statement::MatchingIntoMember, s - x, x - s, inputs.clone())?;
        let outside = self.saturation(Statement::MatchingOutsideMember, &(s & x) - &meet, &join - &(x | s), inputs)?;
        Ok([into_union, into_member, outside])
    }

    pub fn check_set_collection(&self, s: &VertexSet, lam: &MisFamily) -> Result<CheckReport, Error> {
        self.require_independent(s)?;
        self.require_collection(lam)?;
        let (meet, join) = (lam.intersection(), lam.union());
        let lhs = s.len() + self.alpha();
        let rhs = meet.intersection_len(s) + (&join | s).len();
        let inputs = self.digest(&[("S", list(s)), ("L", family_list(lam))]);
        Ok(self.inequality(Statement::SetCollection, lhs, rhs, inputs))
    }

    pub fn check_collection_bound(&self, lam: &MisFamily) -> Result<CheckReport, Error> {
        self.require_collection(lam)?;
        let lhs = 2 * self.alpha();
        let rhs = lam.intersection().len() + lam.union().len();
        let inputs = self.digest(&[("L", family_list(lam))]);
        Ok(self.inequality(Statement::CollectionBound, lhs, rhs, inputs))
    }

    /// `2α ≤ |core| + |corona|`, and `|core| + |corona| ≤ α + |V| − 1`
    /// (skipped on edgeless graphs).
    pub fn check_core_corona_bounds(&self) -> Result<[CheckReport; 2], Error> {
        let (core, corona) = self.core_corona()?;
        let alpha = self.alpha();
        let sum = core.len() + corona.len();
        let inputs = self.digest(&[]);
        let lower = self.inequality(Statement::CoreCoronaLower, 2 * alpha, sum, inputs.clone());
        let mut upper =
            self.inequality(Statement::CoreCoronaUpper, sum, (alpha + self.g.n()).saturating_sub(1), inputs);
        if self.g.edge_count() == 0 {
            upper.verdict = Verdict::Skipped;
            upper.note = Some("needs at least one edge".into());
        }
        Ok([lower, upper])
    }

    /// For König–Egerváry graphs `2α = |core| + |corona|`; other graphs
    /// pass vacuously but still carry the equality bit.
    pub fn check_ke_equality(&self) -> Result<CheckReport, Error> {
        let (core, corona) = self.core_corona()?;
        let alpha = self.alpha();
        let is_ke = alpha + self.mu() == self.g.n();
        let (lhs, rhs) = (2 * alpha, core.len() + corona.len());
        Ok(CheckReport {
            statement: Statement::KeEquality,
            verdict: Verdict::from_bool(!is_ke || lhs == rhs),
            lhs: lhs as i64,
            rhs: rhs as i64,
            condition: Some(is_ke),
            equality: Some(lhs == rhs),
            witness: None,
            inputs: self.digest(&[]),
            note: (!is_ke).then(|| "not König–Egerváry: holds vacuously".to_string()),
        })
    }

    /// `α − |core| ≤ τ − |∩{V − S}|` with `τ = |V| − α` and
    /// `∩{V − S : S ∈ Ω} = V − corona`.
    pub fn check_gitval(&self) -> Result<CheckReport, Error> {
        let (core, corona) = self.core_corona()?;
        let alpha = self.alpha();
        let n = self.g.n();
        let tau = n - alpha;
        let outside = n - corona.len();
        let lhs = alpha as i64 - core.len() as i64;
        let rhs = tau as i64 - outside as i64;
        Ok(CheckReport {
            statement: Statement::CoverGap,
            verdict: Verdict::from_bool(lhs <= rhs),
            lhs,
            rhs,
            condition: None,
            equality: Some(lhs == rhs),
            witness: None,
            inputs: self.digest(&[]),
            note: None,
        })
    }

    /// A matching from `S − core` into `corona − S` for `S = Ω[s_index]`.
    pub fn check_core_matching(&self, s_index: usize) -> Result<CheckReport, Error> {
        let omega = self.omega()?;
        let s = omega.get(s_index).ok_or(Error::IndexOutOfRange { index: s_index, len: omega.len() })?;
        let (core, corona) = self.core_corona()?;
        let inputs = self.digest(&[("S", list(s))]);
        self.saturation(Statement::CoreMatching, s - &core, &corona - s, inputs)
    }

    /// `|∩Γ| ≥ 2ω − |∪Γ|`, evaluated directly on the cliques of `g` and again
    /// as the collection bound on the complement; both must agree.
    pub fn check_hajnal(&self, gamma: &MisFamily) -> Result<CheckReport, Error> {
        if gamma.universe() != self.g.n() {
            return Err(Error::Universe { expected: self.g.n(), found: gamma.universe() });
        }
        if gamma.is_empty() {
            return Err(Error::EmptyCollection);
        }
        let comp = self.complement();
        let comp_lab = Lab::with_cap(comp, self.omega_cap);
        let omega_size = comp_lab.alpha();
        for (index, c) in gamma.iter().enumerate() {
            if c.len() != omega_size || !self.g.is_clique(c) {
                return Err(Error::NotMaximumClique { index });
            }
        }
        let lhs = 2 * omega_size;
        let rhs = gamma.intersection().len() + gamma.union().len();

        let as_independent = gamma.clone().with_kind(FamilyKind::MaximumIndependent);
        let dual = comp_lab.check_collection_bound(&as_independent).map_err(|e| match e {
            Error::NotMaximumIndependent { index } => Error::NotMaximumClique { index },
            other => other,
        })?;
        if (dual.lhs, dual.rhs) != (lhs as i64, rhs as i64) {
            return Err(Error::Disagreement(format!(
                "cliques: {lhs} <= {rhs}; complement: {} <= {}",
                dual.lhs, dual.rhs
            )));
        }
        let mut report =
            self.inequality(Statement::CliqueCollection, lhs, rhs, self.digest(&[("Gamma", family_list(gamma))]));
        report.witness = Some(Witness::Family(gamma.clone().with_kind(FamilyKind::MaximumClique)));
        Ok(report)
    }

    /// Evaluates "every independent set disjoint from `x` can be matched
    /// into `x`" and compares it with `|x| = α`.
    ///
    /// If a set can be saturated into `x`, so can each of its subsets (drop
    /// the edges at removed vertices), and every independent set disjoint
    /// from `x` lies in a maximal independent set of `G − x`. Testing the
    /// maximal independent sets of `G − x` therefore decides the condition.
    pub fn check_berge(&self, x: &VertexSet) -> Result<CheckReport, Error> {
        self.require_independent(x)?;
        let outside = x.complement();
        let mut visited = 0usize;
        let mut blocker: Option<(VertexSet, VertexSet)> = None;
        let mut failure: Option<Error> = None;
        let cap = self.omega_cap;
        let _ = for_each_maximal_independent(self.g, &outside, |s| {
            visited += 1;
            if visited > cap {
                failure = Some(Error::Overflow(CapOverflow { cap, found: visited }));
                return ControlFlow::Break(());
            }
            match saturating_matching(self.g, s, x) {
                Ok(HallCertificate::Matching(_)) => ControlFlow::Continue(()),
                Ok(HallCertificate::Violator(v)) => {
                    blocker = Some((s.clone(), v));
                    ControlFlow::Break(())
                }
                Err(e) => {
                    failure = Some(e.into());
                    ControlFlow::Break(())
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        let condition = blocker.is_none();
        let (lhs, rhs) = (x.len(), self.alpha());
        Ok(CheckReport {
            statement: Statement::MaximumStableSet,
            verdict: Verdict::from_bool(condition == (lhs == rhs)),
            lhs: lhs as i64,
            rhs: rhs as i64,
            condition: Some(condition),
            equality: Some(lhs == rhs),
            witness: blocker.map(|(from, violator)| Witness::HallViolator { from, into: x.clone(), violator }),
            inputs: self.digest(&[("X", list(x))]),
            note: None,
        })
    }

    /// Maximum cliques of `g`, capped like Ω.
    pub fn max_cliques(&self) -> Result<MisFamily, CapOverflow> {
        enumerate_max_cliques(self.g, self.omega_cap)
    }
}

pub fn check_matching_lemma(
    g: &Graph,
    s: &VertexSet,
    lam: &MisFamily,
    x_index: usize,
) -> Result<[CheckReport; 3], Error> {
    Lab::new(g).check_matching_lemma(s, lam, x_index)
}

pub fn check_set_collection(g: &Graph, s: &VertexSet, lam: &MisFamily) -> Result<CheckReport, Error> {
    Lab::new(g).check_set_collection(s, lam)
}

pub fn check_collection_bound(g: &Graph, lam: &MisFamily) -> Result<CheckReport, Error> {
    Lab::new(g).check_collection_bound(lam)
}

pub fn check_core_corona_bounds(g: &Graph) -> Result<[CheckReport; 2], Error> {
    Lab::new(g).check_core_corona_bounds()
}

pub fn check_ke_equality(g: &Graph) -> Result<CheckReport, Error> {
    Lab::new(g).check_ke_equality()
}

pub fn check_gitval(g: &Graph) -> Result<CheckReport, Error> {
    Lab::new(g).check_gitval()
}

pub fn check_core_matching(g: &Graph, s_index: usize) -> Result<CheckReport, Error> {
    Lab::new(g).check_core_matching(s_index)
}

pub fn check_hajnal(g: &Graph, gamma: &MisFamily) -> Result<CheckReport, Error> {
    Lab::new(g).check_hajnal(gamma)
}

pub fn check_berge(g: &Graph, x: &VertexSet) -> Result<CheckReport, Error> {
    Lab::new(g).check_berge(x)
}

/// Raw evaluation of the first matching statement and the set-and-collection
/// inequality with no hypotheses checked and no verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessityReport {
    pub s_independent: bool,
    pub collection_in_omega: bool,
    /// Hall certificate for `S − ∩Λ` into `∪Λ − S`.
    pub matching: HallCertificate,
    /// `|S| + α(G)`.
    pub set_plus_alpha: usize,
    /// `2|S|`.
    pub twice_set: usize,
    /// `|∩Λ ∩ S| + |∪Λ ∪ S|`.
    pub rhs: usize,
}

impl NecessityReport {
    pub fn relation_holds(&self) -> bool {
        self.set_plus_alpha <= self.rhs
    }

    pub fn twice_set_holds(&self) -> bool {
        self.twice_set <= self.rhs
    }
}

pub fn demonstrate_necessity(g: &Graph, s: &VertexSet, lam: &MisFamily) -> Result<NecessityReport, Error> {
    let lab = Lab::new(g);
    lab.check_bound(s)?;
    if lam.universe() != g.n() {
        return Err(Error::Universe { expected: g.n(), found: lam.universe() });
    }
    if lam.is_empty() {
        return Err(Error::EmptyCollection);
    }
    let (meet, join) = (lam.intersection(), lam.union());
    let matching = saturating_matching(g, &(s - &meet), &(&join - s))?;
    Ok(NecessityReport {
        s_independent: g.is_independent(s),
        collection_in_omega: lab.require_collection(lam).is_ok(),
        matching,
        set_plus_alpha: s.len() + lab.alpha(),
        twice_set: 2 * s.len(),
        rhs: meet.intersection_len(s) + (&join | s).len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::generate::{generate, GraphFamily};

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied())
    }

    fn c4() -> Graph {
        generate(&GraphFamily::Cycle { n: 4 }).unwrap()
    }

    fn p3() -> Graph {
        generate(&GraphFamily::Path { n: 3 }).unwrap()
    }

    fn paper_collection(g: &Graph) -> MisFamily {
        MisFamily::arbitrary(
            g.n(),
            vec![
                g.set_of(&["v1", "v2", "v3", "v6", "v8", "v10", "v12"]),
                g.set_of(&["v1", "v2", "v4", "v6", "v7", "v10", "v13"]),
            ],
        )
    }

    #[test]
    fn statement_ids_round_trip() {
        for s in Statement::ALL {
            assert_eq!(s.id().parse::<Statement>().unwrap(), s);
        }
        assert!("nope".parse::<Statement>().is_err());
    }

    #[test]
    fn matching_lemma_on_example() {
        let g = fixtures::lemma_example();
        let lam = paper_collection(&g);
        let s = g.set_of(&["v1", "v4", "v7"]);
        let [i, ii, iii] = check_matching_lemma(&g, &s, &lam, 0).unwrap();
        assert!(i.passed() && ii.passed() && iii.passed());
        assert_eq!((i.lhs, i.rhs), (2, 2));
        match i.witness.as_ref().unwrap() {
            Witness::Saturation { from, into, .. } => {
                assert_eq!(from, &g.set_of(&["v4", "v7"]));
                assert_eq!(into, &g.set_of(&["v2", "v3", "v6", "v8", "v10", "v12", "v13"]));
            }
            other => panic!("{other:?}"),
        }
        for r in [&i, &ii, &iii] {
            r.revalidate(&g).unwrap();
        }
    }

    #[test]
    fn empty_s_passes_trivially() {
        let g = c4();
        let lam = enumerate_omega(&g, 10).unwrap();
        for r in check_matching_lemma(&g, &VertexSet::empty(4), &lam, 1).unwrap() {
            assert!(r.passed());
            assert_eq!(r.lhs, 0);
        }
    }

    #[test]
    fn invalid_collection_is_a_precondition_error() {
        let g = fixtures::lemma_example();
        let lam = MisFamily::arbitrary(
            g.n(),
            vec![g.set_of(&["v2", "v3", "v7"]), g.set_of(&["v1", "v2", "v4", "v6", "v7", "v10", "v12"])],
        );
        let s = g.set_of(&["v1", "v2", "v4", "v7", "v9", "v12"]);
        let err = check_matching_lemma(&g, &s, &lam, 0).unwrap_err();
        assert_eq!(err, Error::NotMaximumIndependent { index: 1 });
        assert!(err.to_string().contains("Λ ⊄ Ω(G)"));
        assert!(check_set_collection(&g, &s, &lam).is_err());
    }

    #[test]
    fn dependent_s_and_empty_collection_are_errors() {
        let g = c4();
        let lam = enumerate_omega(&g, 10).unwrap();
        assert_eq!(check_set_collection(&g, &set(4, &[0, 1]), &lam), Err(Error::NotIndependent((0, 1))));
        let empty = MisFamily::arbitrary(4, vec![]);
        assert_eq!(check_collection_bound(&g, &empty), Err(Error::EmptyCollection));
        assert!(matches!(check_matching_lemma(&g, &VertexSet::empty(4), &lam, 5), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn set_collection_on_example() {
        let g = fixtures::lemma_example();
        let r = check_set_collection(&g, &g.set_of(&["v1", "v4", "v7"]), &paper_collection(&g)).unwrap();
        assert_eq!((r.lhs, r.rhs, r.verdict), (10, 11, Verdict::Pass));
    }

    #[test]
    fn set_collection_singleton_is_tight() {
        let g = c4();
        let x = set(4, &[0, 2]);
        let r = check_set_collection(&g, &x, &MisFamily::arbitrary(4, vec![x.clone()])).unwrap();
        assert_eq!((r.lhs, r.rhs), (4, 4));
    }

    #[test]
    fn necessity_demo() {
        let g = fixtures::lemma_example();
        let lam = MisFamily::arbitrary(
            g.n(),
            vec![g.set_of(&["v2", "v3", "v7"]), g.set_of(&["v1", "v2", "v4", "v6", "v7", "v10", "v12"])],
        );
        let s = g.set_of(&["v1", "v2", "v4", "v7", "v9", "v12"]);
        let r = demonstrate_necessity(&g, &s, &lam).unwrap();
        assert!(r.s_independent && !r.collection_in_omega);
        assert!(!r.matching.is_matching());
        assert_eq!((r.twice_set, r.rhs), (12, 11));
        assert_eq!(r.set_plus_alpha, 13);
        assert!(!r.relation_holds() && !r.twice_set_holds());
    }

    #[test]
    fn collection_bound_cases() {
        let g = c4();
        let r = check_collection_bound(&g, &enumerate_omega(&g, 10).unwrap()).unwrap();
        assert_eq!((r.lhs, r.rhs), (4, 4));
        let single = MisFamily::arbitrary(4, vec![set(4, &[1, 3])]);
        let r = check_collection_bound(&g, &single).unwrap();
        assert_eq!((r.lhs, r.rhs), (4, 4));
        let g2 = fixtures::non_ke_tight();
        let r = check_collection_bound(&g2, &enumerate_omega(&g2, 10).unwrap()).unwrap();
        assert_eq!((r.lhs, r.rhs, r.verdict), (6, 6, Verdict::Pass));
    }

    #[test]
    fn core_corona_bounds_cases() {
        let [lo, hi] = check_core_corona_bounds(&fixtures::non_ke_strict()).unwrap();
        assert_eq!((lo.lhs, lo.rhs), (8, 9));
        assert_eq!((hi.lhs, hi.rhs), (9, 12));
        let star = generate(&GraphFamily::Star { n: 5 }).unwrap();
        let [lo, hi] = check_core_corona_bounds(&star).unwrap();
        assert_eq!((lo.lhs, lo.rhs), (8, 8));
        assert_eq!((hi.lhs, hi.rhs, hi.verdict), (8, 8, Verdict::Pass));
        let [lo, hi] = check_core_corona_bounds(&Graph::empty(3)).unwrap();
        assert_eq!((lo.lhs, lo.rhs, lo.verdict), (6, 6, Verdict::Pass));
        assert_eq!(hi.verdict, Verdict::Skipped);
        hi.revalidate(&Graph::empty(3)).unwrap();
    }

    #[test]
    fn ke_equality_cases() {
        let r = check_ke_equality(&c4()).unwrap();
        assert_eq!((r.lhs, r.rhs, r.condition, r.verdict), (4, 4, Some(true), Verdict::Pass));
        let r = check_ke_equality(&fixtures::non_ke_tight()).unwrap();
        assert_eq!((r.condition, r.equality, r.verdict), (Some(false), Some(true), Verdict::Pass));
        let r = check_ke_equality(&fixtures::non_ke_strict()).unwrap();
        assert_eq!((r.condition, r.equality, r.verdict), (Some(false), Some(false), Verdict::Pass));
    }

    #[test]
    fn cover_gap_cases() {
        let r = check_gitval(&fixtures::non_ke_strict()).unwrap();
        assert_eq!((r.lhs, r.rhs), (2, 3));
        let r = check_gitval(&p3()).unwrap();
        assert_eq!((r.lhs, r.rhs, r.equality), (0, 0, Some(true)));
        let c5 = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        let r = check_gitval(&c5).unwrap();
        assert_eq!((r.lhs, r.rhs), (2, 3));
    }

    #[test]
    fn core_matching_cases() {
        let g = fixtures::lemma_example();
        let omega = enumerate_omega(&g, 100).unwrap();
        let idx = omega.iter().position(|s| s == &g.set_of(&["v1", "v2", "v3", "v6", "v8", "v10", "v12"])).unwrap();
        let r = check_core_matching(&g, idx).unwrap();
        assert!(r.passed());
        r.revalidate(&g).unwrap();
        let r = check_core_matching(&p3(), 0).unwrap();
        assert_eq!((r.lhs, r.rhs, r.verdict), (0, 0, Verdict::Pass));
        let g = c4();
        let r = check_core_matching(&g, 0).unwrap();
        assert_eq!((r.lhs, r.rhs), (2, 2));
        r.revalidate(&g).unwrap();
    }

    #[test]
    fn clique_collection_cases() {
        let k4 = Graph::complete(4);
        let gamma = enumerate_max_cliques(&k4, 10).unwrap();
        let r = check_hajnal(&k4, &gamma).unwrap();
        assert_eq!((r.lhs, r.rhs, r.verdict), (8, 8, Verdict::Pass));
        // triangle plus pendant: ω = 3
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let r = check_hajnal(&g, &MisFamily::arbitrary(4, vec![set(4, &[0, 1, 2])])).unwrap();
        assert_eq!((r.lhs, r.rhs), (6, 6));
        r.revalidate(&g).unwrap();
        // complement of the tight non-KE graph, with the complements' cliques
        let g2 = fixtures::non_ke_tight();
        let gamma = enumerate_omega(&g2, 10).unwrap().with_kind(FamilyKind::MaximumClique);
        let r = check_hajnal(&g2.complement(), &gamma).unwrap();
        assert_eq!((r.lhs, r.rhs, r.verdict), (6, 6, Verdict::Pass));
        let not_clique = MisFamily::arbitrary(4, vec![set(4, &[0, 3])]);
        assert!(matches!(check_hajnal(&g, &not_clique), Err(Error::NotMaximumClique { index: 0 })));
    }

    #[test]
    fn maximum_stable_set_cases() {
        let g = c4();
        let r = check_berge(&g, &set(4, &[0, 2])).unwrap();
        assert_eq!((r.condition, r.verdict), (Some(true), Verdict::Pass));
        let r = check_berge(&g, &set(4, &[0])).unwrap();
        assert_eq!((r.condition, r.verdict), (Some(false), Verdict::Pass));
        r.revalidate(&g).unwrap();
        let p = p3();
        let r = check_berge(&p, &set(3, &[1])).unwrap();
        assert_eq!((r.condition, r.lhs, r.rhs, r.verdict), (Some(false), 1, 2, Verdict::Pass));
        match r.witness.unwrap() {
            Witness::HallViolator { from, .. } => assert_eq!(from.to_vec(), vec![0, 2]),
            other => panic!("{other:?}"),
        }
        assert!(check_berge(&g, &set(4, &[0, 1])).is_err());
    }

    #[test]
    fn revalidate_rejects_tampering() {
        let g = c4();
        let lam = enumerate_omega(&g, 10).unwrap();
        let [mut i, ..] = check_matching_lemma(&g, &set(4, &[0, 2]), &lam, 1).unwrap();
        i.revalidate(&g).unwrap();
        i.verdict = Verdict::Fail;
        assert!(i.revalidate(&g).is_err());
        let mut r = check_set_collection(&g, &set(4, &[0, 2]), &lam).unwrap();
        r.rhs = r.lhs - 1;
        assert!(r.revalidate(&g).is_err());
        let [mut ii, ..] = check_matching_lemma(&g, &set(4, &[0, 2]), &lam, 1).unwrap();
        if let Some(Witness::Saturation { matching, .. }) = &mut ii.witness {
            matching.edges[0].1 = matching.edges[0].0;
        }
        assert!(ii.revalidate(&g).is_err());
    }
}
