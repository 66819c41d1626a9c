//! Built-in example graphs with 1-based labels (`v1`, `v2`, ... / `u1`, ...).
//!
//! The edge lists were transcribed from drawings; the unit tests pin the
//! independence numbers, cores and coronas they are expected to have, so a
//! transcription error shows up as a failing fixture test.

use crate::graph::Graph;

fn labelled(prefix: &str, n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().map(|&(u, v)| (u - 1, v - 1)))
        .expect("fixture edges are valid")
        .with_labels((1..=n).map(|i| format!("{prefix}{i}")))
}

/// 13 vertices, 15 edges, α = 7, core = {v1, v2, v10}.
pub fn lemma_example() -> Graph {
    labelled(
        "v",
        13,
        &[
            (1, 5),
            (2, 5),
            (3, 5),
            (3, 4),
            (4, 5),
            (5, 6),
            (5, 7),
            (7, 8),
            (8, 9),
            (6, 9),
            (9, 10),
            (10, 11),
            (11, 12),
            (11, 13),
            (12, 13),
        ],
    )
}

/// 10 vertices, core = {v8, v10}.
pub fn core_pair() -> Graph {
    labelled("v", 10, &[(1, 2), (2, 3), (1, 4), (4, 5), (5, 7), (7, 9), (9, 10), (3, 5), (5, 6), (8, 9), (6, 7)])
}

/// Non-König–Egerváry graph on 9 vertices with 2α = 8 < |core| + |corona| = 9.
pub fn non_ke_strict() -> Graph {
    labelled(
        "v",
        9,
        &[(1, 2), (2, 6), (6, 9), (1, 3), (3, 4), (1, 4), (2, 3), (2, 4), (2, 5), (2, 7), (5, 7), (6, 7), (6, 8)],
    )
}

/// Non-König–Egerváry graph on 7 vertices with 2α = 6 = |core| + |corona|.
pub fn non_ke_tight() -> Graph {
    labelled("u", 7, &[(1, 5), (5, 6), (2, 3), (3, 4), (1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5), (6, 7)])
}

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 4] = ["lemma-example", "core-pair", "non-ke-strict", "non-ke-tight"];

pub fn by_name(name: &str) -> Option<Graph> {
    match name {
        "lemma-example" => Some(lemma_example()),
        "core-pair" => Some(core_pair()),
        "non-ke-strict" => Some(non_ke_strict()),
        "non-ke-tight" => Some(non_ke_tight()),
        _ => None,
    }
}
