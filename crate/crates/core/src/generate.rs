//! Deterministic graph generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::Graph;

/// Name of the generator PRNG, recorded in reports.
pub const PRNG_NAME: &str = "ChaCha8 (rand_chacha 0.3, seed_from_u64)";

#[derive(Debug, Clone, PartialEq)]
pub enum GraphFamily {
    /// G(n, p): each of the C(n,2) pairs, visited in lexicographic `(u, v)`
    /// order, is an edge with probability `p`.
    ErdosRenyi {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// K_{1,n-1} with vertex 0 as the centre.
    Star {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// K_{left,right}; the left side is `0..left`.
    CompleteBipartite {
        left: usize,
        right: usize,
    },
    Explicit {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

pub fn generate(spec: &GraphFamily) -> Result<Graph, GraphError> {
    match *spec {
        GraphFamily::ErdosRenyi { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(GraphError::InvalidSpec(format!("edge probability {p} outside [0, 1]")));
            }
            Ok(erdos_renyi(n, p, seed))
        }
        GraphFamily::Star { n } => {
            if n == 0 {
                return Err(GraphError::InvalidSpec("a star needs at least one vertex".into()));
            }
            Graph::from_edges(n, (1..n).map(|v| (0, v)))
        }
        GraphFamily::Path { n } => Graph::from_edges(n, (1..n).map(|v| (v - 1, v))),
        GraphFamily::Cycle { n } => {
            if n < 3 {
                return Err(GraphError::InvalidSpec(format!("a simple cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        GraphFamily::CompleteBipartite { left, right } => {
            Graph::from_edges(left + right, (0..left).flat_map(|u| (left..left + right).map(move |v| (u, v))))
        }
        GraphFamily::Explicit { n, ref edges } => Graph::from_edges(n, edges.iter().copied()),
    }
}

fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_degrees() {
        let g = generate(&GraphFamily::Star { n: 5 }).unwrap();
        assert_eq!(g.degree(0), 4);
        assert!((1..5).all(|v| g.degree(v) == 1));
    }

    #[test]
    fn cycle_and_path() {
        let c4 = generate(&GraphFamily::Cycle { n: 4 }).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert_eq!(generate(&GraphFamily::Path { n: 3 }).unwrap().edge_count(), 2);
        assert_eq!(generate(&GraphFamily::Path { n: 0 }).unwrap().n(), 0);
        assert!(generate(&GraphFamily::Cycle { n: 2 }).is_err());
    }

    #[test]
    fn complete_bipartite() {
        let g = generate(&GraphFamily::CompleteBipartite { left: 2, right: 3 }).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(!g.has_edge(0, 1));
        assert!(!g.has_edge(2, 4));
    }

    #[test]
    fn erdos_renyi_is_deterministic() {
        let spec = GraphFamily::ErdosRenyi { n: 12, p: 0.3, seed: 42 };
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        assert_eq!(a, b);
        let other = generate(&GraphFamily::ErdosRenyi { n: 12, p: 0.3, seed: 43 }).unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn erdos_renyi_extremes() {
        assert_eq!(generate(&GraphFamily::ErdosRenyi { n: 9, p: 0.0, seed: 1 }).unwrap().edge_count(), 0);
        assert_eq!(generate(&GraphFamily::ErdosRenyi { n: 9, p: 1.0, seed: 1 }).unwrap().edge_count(), 36);
        assert!(generate(&GraphFamily::ErdosRenyi { n: 9, p: 1.5, seed: 1 }).is_err());
        assert!(generate(&GraphFamily::ErdosRenyi { n: 9, p: f64::NAN, seed: 1 }).is_err());
    }

    #[test]
    fn erdos_renyi_density_is_plausible() {
        let total: usize =
            (0..200).map(|seed| generate(&GraphFamily::ErdosRenyi { n: 10, p: 0.5, seed }).unwrap().edge_count()).sum();
        let mean = total as f64 / 200.0;
        assert!((mean - 22.5).abs() < 1.5, "mean edge count {mean}");
    }
}
