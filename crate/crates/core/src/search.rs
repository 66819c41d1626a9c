//! Explorers for graphs with `2α = |core| + |corona|` and for the largest
//! sub-collections of Ω attaining `2α = |∪Λ| + |∩Λ|`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::error::{CapOverflow, GraphError};
use crate::graph::Graph;
use crate::matching::is_koenig_egervary;
use crate::mis::{enumerate_omega, is_very_well_covered, FamilyKind, MisFamily};
use crate::set::VertexSet;

pub const DEFAULT_SUBSET_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityClassification {
    pub graph_id: String,
    pub alpha: usize,
    pub core_size: usize,
    pub corona_size: usize,
    pub is_equality: bool,
    pub is_ke: bool,
    pub is_vwc: bool,
    pub has_unique_mis: bool,
}

impl EqualityClassification {
    pub fn flags(&self) -> FlagCombination {
        FlagCombination {
            is_equality: self.is_equality,
            is_ke: self.is_ke,
            is_vwc: self.is_vwc,
            unique_mis: self.has_unique_mis,
        }
    }
}

pub fn classify_equality(
    g: &Graph,
    graph_id: impl Into<String>,
    omega_cap: usize,
) -> Result<EqualityClassification, CapOverflow> {
    let omega = enumerate_omega(g, omega_cap)?;
    let alpha = omega.get(0).map_or(0, VertexSet::len);
    let (core, corona) = (omega.intersection(), omega.union());
    Ok(EqualityClassification {
        graph_id: graph_id.into(),
        alpha,
        core_size: core.len(),
        corona_size: corona.len(),
        is_equality: 2 * alpha == core.len() + corona.len(),
        is_ke: is_koenig_egervary(g),
        is_vwc: is_very_well_covered(g),
        has_unique_mis: omega.len() == 1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlagCombination {
    pub is_equality: bool,
    pub is_ke: bool,
    pub is_vwc: bool,
    pub unique_mis: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanError {
    pub graph_id: String,
    pub message: String,
}

pub type ScanRow = Result<EqualityClassification, ScanError>;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub graphs: usize,
    pub errors: usize,
    pub equality: usize,
    pub non_equality: usize,
    pub ke: usize,
    pub vwc: usize,
    pub unique_mis: usize,
    pub combinations: BTreeMap<FlagCombination, usize>,
}

impl ScanSummary {
    pub fn from_rows(rows: &[ScanRow]) -> Self {
        let mut s = ScanSummary { graphs: rows.len(), ..Default::default() };
        for row in rows {
            match row {
                Err(_) => s.errors += 1,
                Ok(c) => {
                    if c.is_equality {
                        s.equality += 1;
                    } else {
                        s.non_equality += 1;
                    }
                    s.ke += c.is_ke as usize;
                    s.vwc += c.is_vwc as usize;
                    s.unique_mis += c.has_unique_mis as usize;
                    *s.combinations.entry(c.flags()).or_default() += 1;
                }
            }
        }
        s
    }
}

/// Classifies each `(id, graph)` item; unparsable graphs and Ω overflows
/// become error rows. Rows come back in input order.
pub fn scan_equality<I>(items: I, omega_cap: usize) -> (Vec<ScanRow>, ScanSummary)
where
    I: IntoIterator<Item = (String, Result<Graph, GraphError>)>,
{
    let items: Vec<_> = items.into_iter().collect();
    let rows: Vec<ScanRow> = items
        .into_par_iter()
        .map(|(id, g)| {
            let g = g.map_err(|e| ScanError { graph_id: id.clone(), message: e.to_string() })?;
            classify_equality(&g, id.clone(), omega_cap).map_err(|e| ScanError { graph_id: id, message: e.to_string() })
        })
        .collect();
    let summary = ScanSummary::from_rows(&rows);
    (rows, summary)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityCollectionResult {
    pub max_size: usize,
    /// Positions of the witness members in Ω.
    pub indices: Vec<usize>,
    pub witness: MisFamily,
    pub omega_size: usize,
    pub exhaustive: bool,
}

impl EqualityCollectionResult {
    pub fn revalidate(&self, g: &Graph) -> Result<(), String> {
        if self.witness.len() != self.max_size || self.max_size == 0 {
            return Err(format!("witness has {} members, max_size is {}", self.witness.len(), self.max_size));
        }
        let alpha = crate::mis::independence_number(g);
        for m in &self.witness {
            if m.len() != alpha || !g.is_independent(m) {
                return Err(format!("{m:?} is not a maximum independent set"));
            }
        }
        let sum = self.witness.union().len() + self.witness.intersection().len();
        if sum != 2 * alpha {
            return Err(format!("|∪Λ| + |∩Λ| = {sum}, 2α = {}", 2 * alpha));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("|Ω| = {omega_size} exceeds the subset cap {cap}")]
    TooManyMembers { omega_size: usize, cap: usize },
    #[error(transparent)]
    Overflow(#[from] CapOverflow),
}

/// Exhaustive search over the non-empty sub-collections of Ω, in
/// lexicographic order of their index lists, for the largest one with
/// `2α = |∪Λ| + |∩Λ|`. Ties go to the lexicographically first.
pub fn largest_equality_collection(
    g: &Graph,
    subset_cap: usize,
    omega_cap: usize,
) -> Result<EqualityCollectionResult, SearchError> {
    let omega = enumerate_omega(g, omega_cap)?;
    if omega.len() > subset_cap {
        return Err(SearchError::TooManyMembers { omega_size: omega.len(), cap: subset_cap });
    }
    let alpha = omega.get(0).map_or(0, VertexSet::len);
    let mut search = Subsets { members: omega.members(), target: 2 * alpha, best: Vec::new(), path: Vec::new() };
    for first in 0..omega.len() {
        let m = &omega.members()[first];
        search.path.push(first);
        search.descend(first + 1, m.clone(), m.clone());
        search.path.pop();
    }
    let indices = search.best;
    Ok(EqualityCollectionResult {
        max_size: indices.len(),
        witness: omega.select(&indices).with_kind(FamilyKind::MaximumIndependent),
        indices,
        omega_size: omega.len(),
        exhaustive: true,
    })
}

struct Subsets<'a> {
    members: &'a [VertexSet],
    target: usize,
    best: Vec<usize>,
    path: Vec<usize>,
}

impl Subsets<'_> {
    fn descend(&mut self, next: usize, union: VertexSet, meet: VertexSet) {
        if self.path.len() > self.best.len() && union.len() + meet.len() == self.target {
            self.best = self.path.clone();
        }
        for i in next..self.members.len() {
            if self.path.len() + 1 + (self.members.len() - 1 - i) <= self.best.len() {
                break;
            }
            let m = &self.members[i];
            self.path.push(i);
            self.descend(i + 1, &union | m, &meet & m);
            self.path.pop();
        }
    }
}
