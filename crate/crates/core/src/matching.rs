//! Matchings: saturating matchings from one vertex set into another with
//! Hall-violator certificates, maximum matchings in general graphs, and
//! König–Egerváry recognition.

use thiserror::Error;

use crate::graph::Graph;
use crate::mis::independence_number;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("source and target sets overlap in {0:?}")]
    Overlap(Vec<usize>),
    #[error("vertex set bound to {found} vertices, graph has {expected}")]
    Universe { expected: usize, found: usize },
}

/// A set of pairwise non-incident edges. In a matching from `A` into `B`
/// each edge is stored as `(a, b)` with `a ∈ A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
    pub saturates: Option<VertexSet>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching { edges: Vec::new(), saturates: None }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn endpoints(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.edges.iter().flat_map(|&(u, v)| [u, v]))
    }

    /// Checks that every edge exists in `g`, that edges are pairwise
    /// non-incident, and that the claimed saturated set is covered.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let mut seen = VertexSet::empty(g.n());
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return Err(format!("{}-{} is not an edge", g.label(u), g.label(v)));
            }
            for w in [u, v] {
                if seen.contains(w) {
                    return Err(format!("vertex {} is covered twice", g.label(w)));
                }
                seen.insert(w);
            }
        }
        if let Some(s) = &self.saturates {
            if let Some(v) = (s - &seen).first() {
                return Err(format!("vertex {} is not saturated", g.label(v)));
            }
        }
        Ok(())
    }

    /// [`validate`](Self::validate), plus: every edge runs from `from` to
    /// `into` and `from` is saturated.
    pub fn validate_from_into(&self, g: &Graph, from: &VertexSet, into: &VertexSet) -> Result<(), String> {
        self.validate(g)?;
        for &(a, b) in &self.edges {
            if !from.contains(a) || !into.contains(b) {
                return Err(format!("edge {}-{} does not run from the source into the target", g.label(a), g.label(b)));
            }
        }
        if self.len() != from.len() {
            return Err(format!("{} of {} source vertices matched", self.len(), from.len()));
        }
        Ok(())
    }
}

/// Outcome of a Hall test: a matching saturating `A`, or a subset `A′ ⊆ A`
/// with `|N(A′) ∩ B| < |A′|`, minimal under inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HallCertificate {
    Matching(Matching),
    Violator(VertexSet),
}

impl HallCertificate {
    pub fn is_matching(&self) -> bool {
        matches!(self, HallCertificate::Matching(_))
    }

    pub fn matching(&self) -> Option<&Matching> {
        match self {
            HallCertificate::Matching(m) => Some(m),
            HallCertificate::Violator(_) => None,
        }
    }

    pub fn violator(&self) -> Option<&VertexSet> {
        match self {
            HallCertificate::Violator(v) => Some(v),
            HallCertificate::Matching(_) => None,
        }
    }
}

/// `|N(A′) ∩ B| < |A′|`.
pub fn violates_hall(g: &Graph, subset: &VertexSet, b: &VertexSet) -> bool {
    g.neighborhood(subset).intersection_len(b) < subset.len()
}

const NONE: usize = usize::MAX;

/// Maximum matching of the bipartite graph between `a` and `b` (edges of
/// `g` only), by augmenting paths. Returns `mate_of_b` indexed by vertex.
fn bipartite_max(g: &Graph, a: &VertexSet, b: &VertexSet) -> Vec<usize> {
    fn augment(g: &Graph, u: usize, b: &VertexSet, visited: &mut VertexSet, mate: &mut [usize]) -> bool {
        for w in &(g.neighbors(u) & b) {
            if visited.contains(w) {
                continue;
            }
            visited.insert(w);
            if mate[w] == NONE || augment(g, mate[w], b, visited, mate) {
                mate[w] = u;
                return true;
            }
        }
        false
    }

    let mut mate = vec![NONE; g.n()];
    for u in a {
        let mut visited = VertexSet::empty(g.n());
        augment(g, u, b, &mut visited, &mut mate);
    }
    mate
}

/// A-side vertices reachable from the unmatched `root` by alternating
/// paths. With a maximum matching this set has exactly `|set| - 1`
/// neighbours in `b`, all matched.
fn alternating_reach(g: &Graph, root: usize, b: &VertexSet, mate: &[usize]) -> VertexSet {
    let mut reached = VertexSet::singleton(g.n(), root);
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        for y in &(g.neighbors(x) & b) {
            let z = mate[y];
            debug_assert_ne!(z, NONE, "augmenting path left in a maximum matching");
            if z != NONE && !reached.contains(z) {
                reached.insert(z);
                stack.push(z);
            }
        }
    }
    reached
}

/// Some Hall violator inside `a`, if `a` cannot be saturated into `b`.
fn find_violator(g: &Graph, a: &VertexSet, b: &VertexSet) -> Option<VertexSet> {
    let mate = bipartite_max(g, a, b);
    let mut matched = VertexSet::empty(g.n());
    for &m in mate.iter().filter(|&&m| m != NONE) {
        matched.insert(m);
    }
    (a - &matched).first().map(|root| alternating_reach(g, root, b, &mate))
}

/// Shrinks a violator until every proper subset satisfies Hall's condition.
/// Every proper subset lies inside some `A′ - e`, so it suffices that each
/// `A′ - e` admits a saturating matching.
fn minimize_violator(g: &Graph, mut violator: VertexSet, b: &VertexSet) -> VertexSet {
    'shrink: loop {
        for e in &violator {
            let mut smaller = violator.clone();
            smaller.remove(e);
            if let Some(inner) = find_violator(g, &smaller, b) {
                violator = inner;
                continue 'shrink;
            }
        }
        return violator;
    }
}

/// Either a matching saturating `a` into `b` or an inclusion-minimal Hall
/// violator `A′ ⊆ a`. Only edges of `g` between `a` and `b` are used.
pub fn saturating_matching(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<HallCertificate, MatchingError> {
    for s in [a, b] {
        if s.universe() != g.n() {
            return Err(MatchingError::Universe { expected: g.n(), found: s.universe() });
        }
    }
    if a.intersects(b) {
        return Err(MatchingError::Overlap((a & b).to_vec()));
    }
    let mate = bipartite_max(g, a, b);
    let mut edges: Vec<(usize, usize)> = b.iter().filter(|&w| mate[w] != NONE).map(|w| (mate[w], w)).collect();
    if edges.len() == a.len() {
        edges.sort_unstable();
        return Ok(HallCertificate::Matching(Matching { edges, saturates: Some(a.clone()) }));
    }
    let matched = VertexSet::from_vertices(g.n(), edges.iter().map(|e| e.0));
    let root = (a - &matched).first().expect("an unmatched source vertex exists");
    let violator = alternating_reach(g, root, b, &mate);
    Ok(HallCertificate::Violator(minimize_violator(g, violator, b)))
}

/// Size of a maximum matching between disjoint `a` and `b`.
pub fn bipartite_matching_size(g: &Graph, a: &VertexSet, b: &VertexSet) -> usize {
    bipartite_max(g, a, b).iter().filter(|&&m| m != NONE).count()
}

/// Maximum matching of a general graph (Edmonds' blossom algorithm).
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut blossom = Blossom::new(g);
    blossom.solve();
    let mut edges: Vec<(usize, usize)> =
        (0..g.n()).filter(|&v| blossom.mate[v] != NONE && v < blossom.mate[v]).map(|v| (v, blossom.mate[v])).collect();
    edges.sort_unstable();
    Matching { edges, saturates: None }
}

/// μ(G).
pub fn maximum_matching_size(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// α(G) + μ(G) = |V(G)|.
pub fn is_koenig_egervary(g: &Graph) -> bool {
    independence_number(g) + maximum_matching_size(g) == g.n()
}

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: Vec::new(),
        }
    }

    fn solve(&mut self) {
        let n = self.g.n();
        // greedy start
        for u in 0..n {
            if self.mate[u] == NONE {
                if let Some(v) = self.g.neighbors(u).iter().find(|&v| self.mate[v] == NONE) {
                    self.mate[u] = v;
                    self.mate[v] = u;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            let end = self.find_path(root);
            let mut v = end;
            while v != NONE {
                let pv = self.parent[v];
                let next = self.mate[pv];
                self.mate[v] = pv;
                self.mate[pv] = v;
                v = next;
            }
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex at the
    /// end of an augmenting path, or `NONE`.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        NONE
    }
}
