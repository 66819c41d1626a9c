pub mod campaign;
pub mod paper;
pub mod report;
pub mod suite;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use corona_core::io::{parse_edge_list, parse_graph6};
use corona_core::lemma::Lab;
use corona_core::mis::DEFAULT_OMEGA_CAP;
use corona_core::search::{largest_equality_collection, scan_equality, ScanRow, DEFAULT_SUBSET_CAP};
use corona_core::{fixtures, Graph, VertexSet};
use serde_json::json;

use crate::campaign::{run_campaign, CampaignSpec};
use crate::report::{labels_of, Counts, RunReport, Summary, REPORT_VERSION};
use crate::suite::{merge_counts, overflow_run, run_plan, verify_plan, StatementSet, EXHAUSTIVE_MAX_N};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "corona", version, about = "Exact checks of matching and core/corona statements on small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the statement checkers on input graphs.
    Verify(VerifyArgs),
    /// Replay the worked examples and print a pass/fail table.
    PaperExamples(PaperArgs),
    /// Run the full suite on seeded random graphs.
    Campaign(CampaignArgs),
    /// Equality-graph scans and largest equality collections.
    Search(SearchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Input file: graph6 lines or one edge list.
    #[arg(long, conflicts_with = "fixture")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: Format,
    /// Built-in example graph.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(fixtures::NAMES))]
    pub fixture: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// `all` or a comma-separated list of statement ids.
    #[arg(long, default_value = "all")]
    pub statements: String,
    /// Range S over every independent set (at most 12 vertices).
    #[arg(long)]
    pub exhaustive: bool,
    /// Extra set S as comma-separated vertex labels; repeatable.
    #[arg(long = "set", value_name = "LABELS")]
    pub sets: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_OMEGA_CAP)]
    pub omega_cap: usize,
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Zero the wall time so identical runs give identical reports.
    #[arg(long)]
    pub reproducible: bool,
}

#[derive(Debug, Args)]
pub struct PaperArgs {
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CampaignArgs {
    #[arg(long, default_value_t = 4)]
    pub n_min: usize,
    #[arg(long, default_value_t = 14)]
    pub n_max: usize,
    /// Edge probabilities, comma-separated.
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.3,0.5,0.7,0.9")]
    pub p: Vec<f64>,
    #[arg(long, default_value_t = 100)]
    pub count_per_cell: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_OMEGA_CAP)]
    pub omega_cap: usize,
    #[arg(long, default_value = "all")]
    pub statements: String,
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long)]
    pub reproducible: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(subcommand)]
    pub kind: SearchKind,
}

#[derive(Debug, Subcommand)]
pub enum SearchKind {
    /// Classify every graph6 line of the input.
    EqualityScan {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_OMEGA_CAP)]
        omega_cap: usize,
        /// CSV output path; stdout when absent.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Largest sub-collection of Ω attaining 2α = |∪Λ| + |∩Λ|.
    EqualityCollection {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        subset_cap: usize,
        #[arg(long, default_value_t = DEFAULT_OMEGA_CAP)]
        omega_cap: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// A usage, input or output problem (exit 2).
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub fn run_from<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("corona: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command) -> Result<u8, UsageError> {
    match command {
        Command::Verify(a) => cmd_verify(&a),
        Command::PaperExamples(a) => cmd_paper_examples(&a),
        Command::Campaign(a) => cmd_campaign(&a),
        Command::Search(a) => cmd_search(a.kind),
    }
}

fn read(path: &Path) -> Result<String, UsageError> {
    fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), UsageError> {
    fs::write(path, text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

/// Loads `(id, graph)` pairs; graph6 files may hold several graphs.
pub fn load_graphs(source: &GraphSource) -> Result<Vec<(String, Graph)>, UsageError> {
    if let Some(name) = &source.fixture {
        let g = fixtures::by_name(name).ok_or_else(|| UsageError(format!("unknown fixture {name:?}")))?;
        return Ok(vec![(name.clone(), g)]);
    }
    let path = source.input.as_ref().ok_or_else(|| UsageError("one of --input or --fixture is required".into()))?;
    let text = read(path)?;
    match source.format {
        Format::Edgelist => {
            let g = parse_edge_list(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            Ok(vec![("graph".into(), g)])
        }
        Format::Graph6 => {
            let mut graphs = Vec::new();
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let g = parse_graph6(line).map_err(|e| UsageError(format!("{}:{}: {e}", path.display(), i + 1)))?;
                graphs.push((format!("line{}", i + 1), g));
            }
            if graphs.is_empty() {
                return Err(UsageError(format!("{}: no graphs", path.display())));
            }
            Ok(graphs)
        }
    }
}

fn source_echo(source: &GraphSource) -> serde_json::Value {
    json!({
        "input": source.input.as_ref().map(|p| p.display().to_string()),
        "format": match source.format { Format::Graph6 => "graph6", Format::Edgelist => "edgelist" },
        "fixture": source.fixture,
    })
}

/// Resolves comma-separated label lists against `g`.
pub fn parse_sets(g: &Graph, sets: &[String]) -> Result<Vec<VertexSet>, UsageError> {
    sets.iter()
        .map(|text| {
            let mut s = VertexSet::empty(g.n());
            for label in text.split(',').map(str::trim).filter(|l| !l.is_empty()) {
                let v = g.vertex_by_label(label).ok_or_else(|| UsageError(format!("no vertex labelled {label:?}")))?;
                s.insert(v);
            }
            Ok(s)
        })
        .collect()
}

pub fn verify_report(
    graphs: &[(String, Graph)],
    extra_sets: &[String],
    statements: &StatementSet,
    exhaustive: bool,
    omega_cap: usize,
    spec: serde_json::Value,
    reproducible: bool,
) -> Result<RunReport, UsageError> {
    let started = Instant::now();
    let mut by_statement: BTreeMap<String, Counts> = BTreeMap::new();
    let mut results = Vec::new();
    for (id, g) in graphs {
        let extra = parse_sets(g, extra_sets)?;
        let lab = Lab::with_cap(g, omega_cap);
        let run = match verify_plan(&lab, exhaustive) {
            Ok(mut plan) => {
                plan.sets.extend(extra.iter().cloned());
                plan.stable_candidates.extend(extra);
                run_plan(id.clone(), &lab, &plan, statements, true)
            }
            Err(e) => {
                let mut run = overflow_run(id.clone(), g, &e);
                run.result.counts.record(None);
                run
            }
        };
        merge_counts(&mut by_statement, &run.by_statement);
        results.push(run.result);
    }
    let wall = if reproducible { 0 } else { started.elapsed().as_millis() as u64 };
    Ok(RunReport {
        version: REPORT_VERSION.to_string(),
        spec,
        summary: Summary::from_results(&results, by_statement, wall),
        results,
    })
}

fn print_counts(id: &str, c: &Counts) {
    println!(
        "{id}: {} checks, {} passed, {} failed, {} skipped, {} errors",
        c.run, c.passed, c.failed, c.skipped, c.errors
    );
}

fn cmd_verify(a: &VerifyArgs) -> Result<u8, UsageError> {
    let statements = StatementSet::parse(&a.statements)?;
    let graphs = load_graphs(&a.source)?;
    if a.exhaustive {
        if let Some((id, g)) = graphs.iter().find(|(_, g)| g.n() > EXHAUSTIVE_MAX_N) {
            return Err(UsageError(format!(
                "--exhaustive needs at most {EXHAUSTIVE_MAX_N} vertices; {id} has {}",
                g.n()
            )));
        }
    }
    let mut spec = source_echo(&a.source);
    spec["command"] = json!("verify");
    spec["statements"] = json!(statements.ids());
    spec["exhaustive"] = json!(a.exhaustive);
    spec["sets"] = json!(a.sets);
    spec["omega_cap"] = json!(a.omega_cap);
    let report = verify_report(&graphs, &a.sets, &statements, a.exhaustive, a.omega_cap, spec, a.reproducible)?;
    if let Some(path) = &a.report {
        write(path, &report.to_json())?;
    }
    for r in &report.results {
        print_counts(&r.graph_id, &r.counts);
        for c in r.checks.iter().filter(|c| c.verdict == "fail") {
            eprintln!("{}: {} failed: {} vs {} ({})", r.graph_id, c.statement, c.lhs, c.rhs, c.inputs);
        }
        for e in &r.errors {
            eprintln!("{}: {}: {}", r.graph_id, e.statement.as_deref().unwrap_or("graph"), e.message);
        }
    }
    let c = &report.summary.checks;
    Ok(if c.failed == 0 && c.errors == 0 { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_paper_examples(a: &PaperArgs) -> Result<u8, UsageError> {
    let rows = paper::paper_rows(&paper::PaperFixtures::default());
    print!("{}", paper::render(&rows));
    if let Some(path) = &a.report {
        let text = serde_json::to_string_pretty(&json!({
            "version": REPORT_VERSION,
            "spec": { "command": "paper-examples" },
            "results": rows,
            "summary": { "rows": rows.len(), "failed": rows.iter().filter(|r| !r.pass).count() },
        }))?;
        write(path, &(text + "\n"))?;
    }
    Ok(if rows.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_campaign(a: &CampaignArgs) -> Result<u8, UsageError> {
    let spec = CampaignSpec {
        n_min: a.n_min,
        n_max: a.n_max,
        p_list: a.p.clone(),
        count_per_cell: a.count_per_cell,
        seed: a.seed,
        omega_cap: a.omega_cap,
        statements: StatementSet::parse(&a.statements)?,
    };
    spec.validate()?;
    let report = run_campaign(&spec, a.reproducible);
    if let Some(path) = &a.report {
        write(path, &report.to_json())?;
    }
    let s = &report.summary;
    print_counts("campaign", &s.checks);
    println!("{} graphs, {} skipped on cap overflow", s.graphs, s.graphs_skipped);
    for (id, c) in &s.by_statement {
        println!("  {id}: {} run, {} passed, {} failed, {} skipped", c.run, c.passed, c.failed, c.skipped);
    }
    for r in report.results.iter().filter(|r| r.counts.failed + r.counts.errors > 0) {
        eprintln!("{} ({}): {} failed, {} errors", r.graph_id, r.graph6, r.counts.failed, r.counts.errors);
    }
    Ok(if s.checks.failed == 0 && s.checks.errors == 0 { EXIT_OK } else { EXIT_FAILURE })
}

pub const CSV_HEADER: [&str; 8] =
    ["graph_id", "alpha", "core", "corona", "is_equality", "is_ke", "is_vwc", "unique_mis"];

/// CSV rows in input order; error rows keep the id and leave the rest empty.
pub fn scan_csv(rows: &[ScanRow]) -> Result<String, UsageError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for row in rows {
        match row {
            Ok(c) => w.write_record([
                c.graph_id.clone(),
                c.alpha.to_string(),
                c.core_size.to_string(),
                c.corona_size.to_string(),
                c.is_equality.to_string(),
                c.is_ke.to_string(),
                c.is_vwc.to_string(),
                c.has_unique_mis.to_string(),
            ])?,
            Err(e) => w.write_record([e.graph_id.as_str(), "", "", "", "", "", "", ""])?,
        }
    }
    let bytes = w.into_inner().map_err(|e| UsageError(e.to_string()))?;
    Ok(String::from_utf8(bytes)?)
}

fn cmd_search(kind: SearchKind) -> Result<u8, UsageError> {
    match kind {
        SearchKind::EqualityScan { input, omega_cap, csv, report } => {
            let text = read(&input)?;
            let items = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| (format!("line{}", i + 1), parse_graph6(l)));
            let (rows, summary) = scan_equality(items, omega_cap);
            let table = scan_csv(&rows)?;
            match &csv {
                Some(path) => write(path, &table)?,
                None => print!("{table}"),
            }
            eprintln!(
                "{} graphs: {} equality, {} non-equality, {} errors",
                summary.graphs, summary.equality, summary.non_equality, summary.errors
            );
            if let Some(path) = report {
                let results: Vec<_> = rows
                    .iter()
                    .map(|r| match r {
                        Ok(c) => json!({
                            "graph_id": c.graph_id, "alpha": c.alpha, "core": c.core_size,
                            "corona": c.corona_size, "is_equality": c.is_equality, "is_ke": c.is_ke,
                            "is_vwc": c.is_vwc, "unique_mis": c.has_unique_mis,
                        }),
                        Err(e) => json!({ "graph_id": e.graph_id, "error": e.message }),
                    })
                    .collect();
                let combinations: Vec<_> = summary
                    .combinations
                    .iter()
                    .map(|(f, count)| {
                        json!({
                            "is_equality": f.is_equality, "is_ke": f.is_ke, "is_vwc": f.is_vwc,
                            "unique_mis": f.unique_mis, "count": count,
                        })
                    })
                    .collect();
                let doc = json!({
                    "version": REPORT_VERSION,
                    "spec": { "command": "search", "kind": "equality-scan", "input": input.display().to_string(), "omega_cap": omega_cap },
                    "results": results,
                    "summary": {
                        "graphs": summary.graphs, "errors": summary.errors, "equality": summary.equality,
                        "non_equality": summary.non_equality, "ke": summary.ke, "vwc": summary.vwc,
                        "unique_mis": summary.unique_mis, "combinations": combinations,
                    },
                });
                write(&path, &(serde_json::to_string_pretty(&doc)? + "\n"))?;
            }
            Ok(EXIT_OK)
        }
        SearchKind::EqualityCollection { source, subset_cap, omega_cap, report } => {
            let graphs = load_graphs(&source)?;
            let [(id, g)] = graphs.as_slice() else {
                return Err(UsageError(format!("expected a single graph, found {}", graphs.len())));
            };
            let outcome = largest_equality_collection(g, subset_cap, omega_cap);
            let (code, result) = match &outcome {
                Ok(r) => {
                    let members: Vec<Vec<String>> = r.witness.iter().map(|m| labels_of(g, m)).collect();
                    println!("{id}: max_size {} of |Ω| = {}", r.max_size, r.omega_size);
                    for m in &members {
                        println!("  {{{}}}", m.join(","));
                    }
                    (
                        EXIT_OK,
                        json!({
                            "graph_id": id, "max_size": r.max_size, "omega_size": r.omega_size,
                            "exhaustive": r.exhaustive, "indices": r.indices, "witness": members,
                        }),
                    )
                }
                Err(e) => {
                    eprintln!("{id}: {e}");
                    (EXIT_FAILURE, json!({ "graph_id": id, "error": e.to_string() }))
                }
            };
            if let Some(path) = report {
                let mut spec = source_echo(&source);
                spec["command"] = json!("search");
                spec["kind"] = json!("equality-collection");
                spec["subset_cap"] = json!(subset_cap);
                spec["omega_cap"] = json!(omega_cap);
                let doc = json!({
                    "version": REPORT_VERSION,
                    "spec": spec,
                    "results": [result],
                    "summary": { "graphs": 1, "errors": usize::from(outcome.is_err()) },
                });
                write(&path, &(serde_json::to_string_pretty(&doc)? + "\n"))?;
            }
            Ok(code)
        }
    }
}
