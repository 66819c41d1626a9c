//! Exact independence machinery: α(G), the family Ω(G) of all maximum
//! independent sets, core and corona, maximal independent sets, and the
//! clique-side duals through the complement graph.

use std::ops::ControlFlow;

use crate::error::CapOverflow;
use crate::graph::Graph;
use crate::set::VertexSet;

/// Default member cap for explicit family enumeration.
pub const DEFAULT_OMEGA_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    MaximumIndependent,
    MaximumClique,
    Arbitrary,
}

/// An explicit family of vertex sets of one graph, kept in canonical order
/// without duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MisFamily {
    n: usize,
    kind: FamilyKind,
    members: Vec<VertexSet>,
}

impl MisFamily {
    /// Sorts and deduplicates `members`. Panics if a member is bound to a
    /// different vertex count.
    pub fn new(n: usize, kind: FamilyKind, mut members: Vec<VertexSet>) -> Self {
        assert!(members.iter().all(|m| m.universe() == n), "family member bound to a different graph");
        members.sort();
        members.dedup();
        MisFamily { n, kind, members }
    }

    pub fn arbitrary(n: usize, members: Vec<VertexSet>) -> Self {
        Self::new(n, FamilyKind::Arbitrary, members)
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: FamilyKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&VertexSet> {
        self.members.get(i)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.members.iter()
    }

    /// ∩ of the members; the full vertex set for an empty family.
    pub fn intersection(&self) -> VertexSet {
        let mut out = VertexSet::full(self.n);
        for m in &self.members {
            out.intersect_with(m);
        }
        out
    }

    /// ∪ of the members.
    pub fn union(&self) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for m in &self.members {
            out.union_with(m);
        }
        out
    }

    /// Sub-family picked by member indices.
    pub fn select(&self, indices: &[usize]) -> MisFamily {
        MisFamily::new(self.n, self.kind, indices.iter().map(|&i| self.members[i].clone()).collect())
    }
}

impl<'a> IntoIterator for &'a MisFamily {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreCorona {
    pub core: VertexSet,
    pub corona: VertexSet,
    pub alpha: usize,
    pub omega_count: usize,
}

impl CoreCorona {
    pub fn from_omega(omega: &MisFamily) -> Self {
        let alpha = omega.get(0).map_or(0, VertexSet::len);
        CoreCorona { core: omega.intersection(), corona: omega.union(), alpha, omega_count: omega.len() }
    }
}

fn degree_within(g: &Graph, v: usize, cand: &VertexSet) -> usize {
    g.neighbors(v).intersection_len(cand)
}

fn max_degree_vertex(g: &Graph, cand: &VertexSet) -> (usize, usize) {
    cand.iter()
        .map(|v| (degree_within(g, v, cand), v))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .map(|(d, v)| (v, d))
        .expect("candidate set is non-empty")
}

/// Number of cliques in a greedy clique partition of `cand`; at most one
/// vertex per clique can be in an independent set.
fn clique_cover_bound(g: &Graph, cand: &VertexSet) -> usize {
    let mut rest = cand.clone();
    let mut cliques = 0;
    while let Some(v) = rest.first() {
        rest.remove(v);
        let mut grow = &rest & g.neighbors(v);
        while let Some(u) = grow.first() {
            rest.remove(u);
            grow.remove(u);
            grow.intersect_with(g.neighbors(u));
        }
        cliques += 1;
    }
    cliques
}

fn closed_neighborhood(g: &Graph, v: usize) -> VertexSet {
    let mut s = g.neighbors(v).clone();
    s.insert(v);
    s
}

struct AlphaSearch<'g> {
    g: &'g Graph,
    best: usize,
}

impl AlphaSearch<'_> {
    fn run(&mut self, mut cand: VertexSet, mut size: usize) {
        // a vertex of degree <= 1 in the candidate graph lies in some maximum
        // independent set of it, so take it without branching
        loop {
            let low = cand.iter().find(|&v| degree_within(self.g, v, &cand) <= 1);
            match low {
                Some(v) => {
                    size += 1;
                    cand.difference_with(&closed_neighborhood(self.g, v));
                }
                None => break,
            }
        }
        if cand.is_empty() {
            self.best = self.best.max(size);
            return;
        }
        if size + clique_cover_bound(self.g, &cand) <= self.best {
            return;
        }
        let (v, _) = max_degree_vertex(self.g, &cand);
        self.run(&cand - &closed_neighborhood(self.g, v), size + 1);
        cand.remove(v);
        self.run(cand, size);
    }
}

fn greedy_independent(g: &Graph, within: &VertexSet) -> VertexSet {
    let mut cand = within.clone();
    let mut chosen = VertexSet::empty(g.n());
    while !cand.is_empty() {
        let v = cand.iter().min_by_key(|&v| degree_within(g, v, &cand)).expect("non-empty");
        chosen.insert(v);
        cand.difference_with(&closed_neighborhood(g, v));
    }
    chosen
}

/// α(G), exact.
pub fn independence_number(g: &Graph) -> usize {
    let all = g.vertices();
    let mut search = AlphaSearch { g, best: greedy_independent(g, &all).len() };
    search.run(all, 0);
    search.best
}

struct OmegaSearch<'g> {
    g: &'g Graph,
    target: usize,
    cap: usize,
    out: Vec<VertexSet>,
}

impl OmegaSearch<'_> {
    fn run(&mut self, mut cand: VertexSet, mut chosen: VertexSet) -> Result<(), CapOverflow> {
        // a vertex with no neighbour among the candidates belongs to every
        // maximum independent set extending `chosen` inside `cand`
        loop {
            let isolated = cand.iter().find(|&v| !self.g.neighbors(v).intersects(&cand));
            match isolated {
                Some(v) => {
                    chosen.insert(v);
                    cand.remove(v);
                }
                None => break,
            }
        }
        if chosen.len() + cand.len() < self.target {
            return Ok(());
        }
        if cand.is_empty() {
            if chosen.len() == self.target {
                if self.out.len() == self.cap {
                    return Err(CapOverflow { cap: self.cap, found: self.cap + 1 });
                }
                self.out.push(chosen);
            }
            return Ok(());
        }
        if chosen.len() + clique_cover_bound(self.g, &cand) < self.target {
            return Ok(());
        }
        let (v, _) = max_degree_vertex(self.g, &cand);
        let mut with_v = chosen.clone();
        with_v.insert(v);
        self.run(&cand - &closed_neighborhood(self.g, v), with_v)?;
        cand.remove(v);
        self.run(cand, chosen)
    }
}

/// Ω(G) in canonical order. Fails rather than truncating when there are
/// more than `cap` members.
pub fn enumerate_omega(g: &Graph, cap: usize) -> Result<MisFamily, CapOverflow> {
    assert!(cap >= 1, "cap must be at least 1");
    let alpha = independence_number(g);
    let mut search = OmegaSearch { g, target: alpha, cap, out: Vec::new() };
    search.run(g.vertices(), VertexSet::empty(g.n()))?;
    Ok(MisFamily::new(g.n(), FamilyKind::MaximumIndependent, search.out))
}

pub fn core_corona(g: &Graph, cap: usize) -> Result<CoreCorona, CapOverflow> {
    Ok(CoreCorona::from_omega(&enumerate_omega(g, cap)?))
}

/// Visits every inclusion-maximal independent set of `G[within]`
/// (Bron–Kerbosch with pivoting, run on the non-adjacency relation).
pub fn for_each_maximal_independent<F>(g: &Graph, within: &VertexSet, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let n = g.n();
    let compat: Vec<VertexSet> = (0..n).map(|v| &closed_neighborhood(g, v).complement() & within).collect();
    let mut current = VertexSet::empty(n);
    bron_kerbosch(&compat, &mut current, within.clone(), VertexSet::empty(n), &mut visit)
}

fn bron_kerbosch<F>(
    compat: &[VertexSet],
    current: &mut VertexSet,
    mut cand: VertexSet,
    mut excluded: VertexSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    if cand.is_empty() {
        if excluded.is_empty() {
            return visit(current);
        }
        return ControlFlow::Continue(());
    }
    let pivot = (&cand | &excluded).iter().max_by_key(|&u| compat[u].intersection_len(&cand)).expect("non-empty");
    let branch = &cand - &compat[pivot];
    for v in &branch {
        current.insert(v);
        bron_kerbosch(compat, current, &cand & &compat[v], &excluded & &compat[v], visit)?;
        current.remove(v);
        cand.remove(v);
        excluded.insert(v);
    }
    ControlFlow::Continue(())
}

/// All maximal independent sets of `G[within]`, canonical order.
pub fn maximal_independent_sets_within(g: &Graph, within: &VertexSet, cap: usize) -> Result<MisFamily, CapOverflow> {
    assert!(cap >= 1, "cap must be at least 1");
    let mut out = Vec::new();
    let flow = for_each_maximal_independent(g, within, |s| {
        if out.len() == cap {
            return ControlFlow::Break(());
        }
        out.push(s.clone());
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(CapOverflow { cap, found: cap + 1 });
    }
    Ok(MisFamily::new(g.n(), FamilyKind::Arbitrary, out))
}

pub fn enumerate_maximal_independent(g: &Graph, cap: usize) -> Result<MisFamily, CapOverflow> {
    maximal_independent_sets_within(g, &g.vertices(), cap)
}

/// `2α(G) = |V(G)|` and every maximal independent set has the same size.
pub fn is_very_well_covered(g: &Graph) -> bool {
    let alpha = independence_number(g);
    if 2 * alpha != g.n() {
        return false;
    }
    for_each_maximal_independent(g, &g.vertices(), |s| {
        if s.len() == alpha {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    })
    .is_continue()
}

/// ω(G) = α(Ḡ).
pub fn clique_number(g: &Graph) -> usize {
    independence_number(&g.complement())
}

/// All maximum cliques of `g`, i.e. Ω of the complement.
pub fn enumerate_max_cliques(g: &Graph, cap: usize) -> Result<MisFamily, CapOverflow> {
    Ok(enumerate_omega(&g.complement(), cap)?.with_kind(FamilyKind::MaximumClique))
}
