use std::fmt;

use crate::error::GraphError;
use crate::set::VertexSet;

/// Immutable simple undirected graph on vertices `0..n` with bitset rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![VertexSet::empty(n); n], labels: None }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut row = VertexSet::full(n);
                row.remove(v);
                row
            })
            .collect();
        Graph { n, adj, labels: None }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Attaches display labels (one per vertex).
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`: the attached label, or the 0-based index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Looks a vertex up by its display label.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == label),
            None => label.parse().ok().filter(|&v| v < self.n),
        }
    }

    /// Set of vertices with the given labels. Panics on an unknown label.
    pub fn set_of(&self, labels: &[&str]) -> VertexSet {
        VertexSet::from_vertices(
            self.n,
            labels.iter().map(|l| self.vertex_by_label(l).unwrap_or_else(|| panic!("no vertex labelled {l}"))),
        )
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `N(A) = {v : N(v) ∩ A ≠ ∅}`. Members of `A` belong to it when they
    /// have a neighbour inside `A`.
    pub fn neighborhood(&self, a: &VertexSet) -> VertexSet {
        assert_eq!(a.universe(), self.n, "vertex set bound to a different graph");
        let mut out = VertexSet::empty(self.n);
        for v in a {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Graph { n: self.n, adj, labels: self.labels.clone() }
    }

    /// True iff no edge joins two members of `s`.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        assert_eq!(s.universe(), self.n, "vertex set bound to a different graph");
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// True iff every two members of `s` are adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        assert_eq!(s.universe(), self.n, "vertex set bound to a different graph");
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    /// Checks symmetry, loop-freedom and row width.
    pub fn validate(&self) -> Result<(), String> {
        for v in 0..self.n {
            let row = &self.adj[v];
            if row.universe() != self.n {
                return Err(format!("row {v} bound to {} vertices", row.universe()));
            }
            if row.contains(v) {
                return Err(format!("loop at {v}"));
            }
            if let Some(u) = row.iter().find(|&u| !self.adj[u].contains(v)) {
                return Err(format!("edge {v}-{u} is not symmetric"));
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", self.label(u), self.label(v))?;
        }
        write!(f, "])")
    }
}
