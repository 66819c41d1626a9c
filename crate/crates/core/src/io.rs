//! graph6 and DIMACS-like edge-list readers and writers.
//!
//! graph6 follows the nauty format description: a size prefix, then the
//! upper triangle of the adjacency matrix column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits per byte, each
//! byte offset by 63.

use crate::error::GraphError;
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_SMALL: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_LARGE: usize = (1 << 36) - 1;

fn g6_err(offset: usize, message: impl Into<String>) -> GraphError {
    GraphError::Graph6 { offset, message: message.into() }
}

/// Parses one graph6 string. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let body_start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = text.trim_end().as_bytes();
    let mut pos = body_start;

    let mut next = |what: &str| -> Result<u64, GraphError> {
        let at = pos;
        let b = *bytes.get(at).ok_or_else(|| g6_err(at, format!("truncated input, expected {what}")))?;
        if !(63..=126).contains(&b) {
            return Err(g6_err(at, format!("byte {b:#04x} outside the printable range 63..=126")));
        }
        pos += 1;
        Ok(u64::from(b - 63))
    };

    let first = next("vertex count")?;
    let n = if first < 63 {
        first as usize
    } else {
        let second = next("vertex count")?;
        let words = if second == 63 { 6 } else { 3 };
        let mut value = if words == 3 { second } else { 0 };
        let remaining = if words == 3 { 2 } else { 6 };
        for _ in 0..remaining {
            value = (value << 6) | next("vertex count")?;
        }
        value as usize
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    let data_start = pos;
    let data = bytes.get(data_start..data_start + byte_count).ok_or_else(|| {
        g6_err(bytes.len(), format!("truncated adjacency data: expected {byte_count} bytes for {n} vertices"))
    })?;
    if let Some(i) = data.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_err(data_start + i, format!("byte {:#04x} outside the printable range 63..=126", data[i])));
    }
    if bytes.len() > data_start + byte_count {
        return Err(g6_err(data_start + byte_count, "unexpected trailing data"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Canonical graph6 encoding (no header, no newline).
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_LARGE, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::new();
    if n <= MAX_SMALL {
        out.push(n as u8 + 63);
    } else if n <= MAX_MEDIUM {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Reads a graph6 stream: one graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Vec<Result<Graph, GraphError>> {
    text.lines().map(str::trim).filter(|l| !l.is_empty()).map(parse_graph6).collect()
}

/// Parses the edge-list format: `n <count>` then `e <u> <v>` lines with
/// 1-based endpoints. Blank lines and `c` comment lines are skipped.
/// Vertices keep their 1-based numbers as labels.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let err = |line: usize, message: String| GraphError::EdgeList { line, message };
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let mut tokens = raw.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        let fields: Vec<&str> = tokens.collect();
        let number = |s: &str| s.parse::<usize>().map_err(|_| err(line_no, format!("not a vertex number: {s:?}")));
        match tag {
            "c" => continue,
            "n" => {
                if n.is_some() {
                    return Err(err(line_no, "duplicate vertex-count line".into()));
                }
                let [count] = fields[..] else {
                    return Err(err(line_no, "expected `n <count>`".into()));
                };
                n = Some(number(count)?);
            }
            "e" => {
                let count = n.ok_or_else(|| err(line_no, "edge before the `n <count>` line".into()))?;
                let [a, b] = fields[..] else {
                    return Err(err(line_no, "expected `e <u> <v>`".into()));
                };
                let (u, v) = (number(a)?, number(b)?);
                for w in [u, v] {
                    if w == 0 || w > count {
                        return Err(err(line_no, format!("vertex {w} out of range 1..={count}")));
                    }
                }
                if u == v {
                    return Err(err(line_no, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(err(line_no, format!("unknown line tag {other:?}"))),
        }
    }

    let n = n.ok_or_else(|| err(text.lines().count().max(1), "missing `n <count>` line".into()))?;
    Ok(Graph::from_edges(n, edges)?.with_labels((1..=n).map(|v| v.to_string())))
}

/// Writes the edge-list format with 1-based endpoints, edges in
/// lexicographic order.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn smallest_graphs() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(serialize_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn hand_encoded_five_vertex_graphs() {
        // "D?{": bits 0000000000 1111.. -> edges (0,4),(1,4),(2,4),(3,4)
        let star = parse_graph6("D?{").unwrap();
        assert_eq!(star.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(serialize_graph6(&star), "D?{");
        // edges 0-2, 0-4, 1-3, 3-4 -> bits 010010 1001(00) -> 'Q' 'c'
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(serialize_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap().edge_count(), 1);
    }

    #[test]
    fn errors_name_byte_offsets() {
        match parse_graph6("D?") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("A_x") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("D? {") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_graph6(""), Err(GraphError::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("~"), Err(GraphError::Graph6 { offset: 1, .. })));
    }

    #[test]
    fn medium_size_prefix() {
        let g = Graph::from_edges(70, [(0, 69), (5, 6)]).unwrap();
        let s = serialize_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 6]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_examples() {
        let k2 = parse_edge_list("n 2\ne 1 2").unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(k2.label(0), "1");
        let g = parse_edge_list("n 3\ne 1 2\ne 2 1").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 1));
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("n 3\ne 2 2"), Err(GraphError::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("n 3\ne 1 4"), Err(GraphError::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("n 3\ne 0 1"), Err(GraphError::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("e 1 2"), Err(GraphError::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("c nothing"), Err(GraphError::EdgeList { .. })));
        assert!(matches!(parse_edge_list("n 2\nx 1 2"), Err(GraphError::EdgeList { line: 2, .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_edge_list("c comment\nn 4\n\ne 1 2\ne 3 4\ne 2 3\n").unwrap();
        assert_eq!(serialize_edge_list(&g), "n 4\ne 1 2\ne 2 3\ne 3 4\n");
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..20).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trips(g in arb_graph()) {
            let s = serialize_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(serialize_graph6(&back), s);
        }

        #[test]
        fn edge_list_round_trips(g in arb_graph()) {
            let back = parse_edge_list(&serialize_edge_list(&g)).unwrap().without_labels();
            prop_assert_eq!(back, g);
        }
    }
}
