//! Replay of the worked examples: every numeric claim becomes a row with the
//! expected and computed value.

use corona_core::fixtures;
use corona_core::generate::{generate, GraphFamily};
use corona_core::lemma::{demonstrate_necessity, Lab};
use corona_core::matching::{is_koenig_egervary, saturating_matching, HallCertificate};
use corona_core::mis::{core_corona, DEFAULT_OMEGA_CAP};
use corona_core::{Graph, MisFamily, VertexSet};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

fn row(claim: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Row {
    let (expected, computed) = (expected.to_string(), computed.to_string());
    Row { claim: claim.into(), pass: expected == computed, expected, computed }
}

/// The example graphs; tests swap in perturbed copies.
#[derive(Debug, Clone)]
pub struct PaperFixtures {
    pub lemma_example: Graph,
    pub core_pair: Graph,
    pub non_ke_strict: Graph,
    pub non_ke_tight: Graph,
}

impl Default for PaperFixtures {
    fn default() -> Self {
        PaperFixtures {
            lemma_example: fixtures::lemma_example(),
            core_pair: fixtures::core_pair(),
            non_ke_strict: fixtures::non_ke_strict(),
            non_ke_tight: fixtures::non_ke_tight(),
        }
    }
}

fn braces(g: &Graph, s: &VertexSet) -> String {
    let labels: Vec<String> = s.iter().map(|v| g.label(v)).collect();
    format!("{{{}}}", labels.join(","))
}

fn core_and_corona(g: &Graph) -> (VertexSet, VertexSet, usize) {
    let cc = core_corona(g, DEFAULT_OMEGA_CAP).expect("fixture Ω is small");
    (cc.core, cc.corona, cc.alpha)
}

fn lemma_rows(g: &Graph, rows: &mut Vec<Row>) {
    let lab = Lab::new(g);
    rows.push(row("lemma example: α", 7, lab.alpha()));

    let s1 = g.set_of(&["v1", "v2", "v3", "v6", "v8", "v10", "v12"]);
    let s2 = g.set_of(&["v1", "v2", "v4", "v6", "v7", "v10", "v13"]);
    let lam = MisFamily::arbitrary(g.n(), vec![s1, s2]);
    let s = g.set_of(&["v1", "v4", "v7"]);
    let from = &s - &lam.intersection();
    let into = &lam.union() - &s;
    rows.push(row("lemma example: S − ∩Λ", "{v4,v7}", braces(g, &from)));
    rows.push(row("lemma example: ∪Λ − S", "{v2,v3,v6,v8,v10,v12,v13}", braces(g, &into)));
    let matched = match saturating_matching(g, &from, &into) {
        Ok(HallCertificate::Matching(m)) if m.validate_from_into(g, &from, &into).is_ok() => {
            format!("saturating, size {}", m.len())
        }
        Ok(_) => "no saturating matching".to_string(),
        Err(e) => e.to_string(),
    };
    rows.push(row("lemma example: matching from S − ∩Λ into ∪Λ − S", "saturating, size 2", matched));
    let paper_m =
        [(g.vertex_by_label("v4"), g.vertex_by_label("v3")), (g.vertex_by_label("v7"), g.vertex_by_label("v8"))];
    let paper_ok = paper_m.iter().all(|&(a, b)| matches!((a, b), (Some(a), Some(b)) if g.has_edge(a, b)));
    rows.push(row("lemma example: M = {v3v4, v7v8} is a matching of G", true, paper_ok));
    match lab.check_set_collection(&s, &lam) {
        Ok(r) => rows.push(row(
            "lemma example: |S| + α ≤ |∩Λ ∩ S| + |∪Λ ∪ S|",
            "10 <= 11",
            format!("{} <= {}", r.lhs, r.rhs),
        )),
        Err(e) => rows.push(row("lemma example: |S| + α ≤ |∩Λ ∩ S| + |∪Λ ∪ S|", "10 <= 11", e)),
    }

    let (core, _, _) = core_and_corona(g);
    rows.push(row("lemma example: core", "{v1,v2,v10}", braces(g, &core)));

    let bad = MisFamily::arbitrary(
        g.n(),
        vec![g.set_of(&["v2", "v3", "v7"]), g.set_of(&["v1", "v2", "v4", "v6", "v7", "v10", "v12"])],
    );
    let s = g.set_of(&["v1", "v2", "v4", "v7", "v9", "v12"]);
    match demonstrate_necessity(g, &s, &bad) {
        Ok(d) => {
            rows.push(row("invalid Λ: Λ ⊆ Ω(G)", false, d.collection_in_omega));
            rows.push(row("invalid Λ: matching from S − ∩Λ into ∪Λ − S", false, d.matching.is_matching()));
            rows.push(row(
                "invalid Λ: 2|S| ≤ |∩Λ ∩ S| + |∪Λ ∪ S|",
                "12 <= 11 is false",
                format!("{} <= {} is {}", d.twice_set, d.rhs, d.twice_set_holds()),
            ));
        }
        Err(e) => rows.push(row("invalid Λ: demonstration", "evaluated", e)),
    }
}

fn core_pair_rows(g: &Graph, rows: &mut Vec<Row>) {
    let (core, _, _) = core_and_corona(g);
    rows.push(row("core pair: core", "{v8,v10}", braces(g, &core)));
}

fn strict_rows(g: &Graph, rows: &mut Vec<Row>) {
    let (core, corona, alpha) = core_and_corona(g);
    rows.push(row("non-KE strict: α", 4, alpha));
    rows.push(row("non-KE strict: core", "{v8,v9}", braces(g, &core)));
    rows.push(row("non-KE strict: |corona|", 7, corona.len()));
    rows.push(row(
        "non-KE strict: 2α < |core| + |corona|",
        "8 < 9",
        format!(
            "{} {} {}",
            2 * alpha,
            if 2 * alpha < core.len() + corona.len() { "<" } else { ">=" },
            core.len() + corona.len()
        ),
    ));
    rows.push(row("non-KE strict: König–Egerváry", false, is_koenig_egervary(g)));
}

fn tight_rows(g: &Graph, rows: &mut Vec<Row>) {
    let (core, corona, alpha) = core_and_corona(g);
    rows.push(row("non-KE tight: α", 3, alpha));
    rows.push(row("non-KE tight: core", "{u2,u4}", braces(g, &core)));
    rows.push(row("non-KE tight: corona", "{u2,u4,u6,u7}", braces(g, &corona)));
    rows.push(row(
        "non-KE tight: 2α = |core| + |corona|",
        "6 = 2 + 4",
        format!("{} = {} + {}", 2 * alpha, core.len(), corona.len()),
    ));
    rows.push(row("non-KE tight: König–Egerváry", false, is_koenig_egervary(g)));
}

fn star_rows(rows: &mut Vec<Row>) {
    for n in 2..=8 {
        let g = generate(&GraphFamily::Star { n }).expect("star");
        let (core, corona, alpha) = core_and_corona(&g);
        let expected = format!("{0} = {0} = {0}", 2 * (n - 1));
        rows.push(row(
            format!("K(1,{}): |core| + |corona| = 2(n−1) = α + n − 1", n - 1),
            expected,
            format!("{} = {} = {}", core.len() + corona.len(), 2 * (n - 1), alpha + n - 1),
        ));
    }
}

pub fn paper_rows(f: &PaperFixtures) -> Vec<Row> {
    let mut rows = Vec::new();
    lemma_rows(&f.lemma_example, &mut rows);
    core_pair_rows(&f.core_pair, &mut rows);
    strict_rows(&f.non_ke_strict, &mut rows);
    tight_rows(&f.non_ke_tight, &mut rows);
    star_rows(&mut rows);
    rows
}

/// Fixed-width table; mismatching rows show expected and computed values.
pub fn render(rows: &[Row]) -> String {
    let width = rows.iter().map(|r| r.claim.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        let pad = width - r.claim.chars().count();
        if r.pass {
            out.push_str(&format!("PASS  {}{}  {}\n", r.claim, " ".repeat(pad), r.computed));
        } else {
            out.push_str(&format!(
                "FAIL  {}{}  expected {}, computed {}\n",
                r.claim,
                " ".repeat(pad),
                r.expected,
                r.computed
            ));
        }
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    out.push_str(&format!("{} rows, {} passed, {} failed\n", rows.len(), rows.len() - failed, failed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perturbed_fixture_reports_core_mismatch() {
        let mut f = PaperFixtures::default();
        let g = &f.lemma_example;
        let mut edges: Vec<_> = g.edges().collect();
        // attach v1 to v2: v1 and v2 can no longer both be in every maximum set
        edges.push((0, 1));
        f.lemma_example = Graph::from_edges(g.n(), edges).unwrap().with_labels(g.labels().unwrap().to_vec());
        let rows = paper_rows(&f);
        let core = rows.iter().find(|r| r.claim == "lemma example: core").unwrap();
        assert!(!core.pass);
        assert!(render(&rows).contains("FAIL  lemma example: core"));
    }

    #[test]
    fn smallest_star_row() {
        let rows = paper_rows(&PaperFixtures::default());
        let r = rows.iter().find(|r| r.claim.starts_with("K(1,1)")).unwrap();
        assert!(r.pass);
        assert_eq!(r.computed, "2 = 2 = 2");
    }
}
