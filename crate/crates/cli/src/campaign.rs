//! Seeded Erdős–Rényi campaigns over the full statement suite.

use std::collections::BTreeMap;
use std::time::Instant;

use corona_core::generate::{generate, GraphFamily, PRNG_NAME};
use corona_core::lemma::Lab;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::report::{Counts, RunReport, Summary, REPORT_VERSION};
use crate::suite::{campaign_plan, merge_counts, overflow_run, run_plan, GraphRun, StatementSet};

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignSpec {
    pub n_min: usize,
    pub n_max: usize,
    pub p_list: Vec<f64>,
    pub count_per_cell: usize,
    pub seed: u64,
    pub omega_cap: usize,
    pub statements: StatementSet,
}

#[derive(Serialize)]
struct SpecEcho<'a> {
    command: &'static str,
    n_min: usize,
    n_max: usize,
    p: &'a [f64],
    count_per_cell: usize,
    seed: u64,
    omega_cap: usize,
    statements: Vec<&'static str>,
    prng: &'static str,
}

impl CampaignSpec {
    pub fn validate(&self) -> Result<(), String> {
        if self.n_min > self.n_max {
            return Err(format!("n range {}..={} is empty", self.n_min, self.n_max));
        }
        if self.n_max > 64 {
            return Err("campaign graphs are limited to 64 vertices".into());
        }
        if self.count_per_cell == 0 {
            return Err("count per cell must be at least 1".into());
        }
        if self.p_list.is_empty() {
            return Err("at least one edge probability is required".into());
        }
        if let Some(p) = self.p_list.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(format!("edge probability {p} outside [0, 1]"));
        }
        if self.omega_cap == 0 {
            return Err("omega cap must be at least 1".into());
        }
        Ok(())
    }

    fn echo(&self) -> serde_json::Value {
        serde_json::to_value(SpecEcho {
            command: "campaign",
            n_min: self.n_min,
            n_max: self.n_max,
            p: &self.p_list,
            count_per_cell: self.count_per_cell,
            seed: self.seed,
            omega_cap: self.omega_cap,
            statements: self.statements.ids(),
            prng: PRNG_NAME,
        })
        .expect("spec serializes")
    }

    /// Every graph of the campaign as `(id, n, p, seed)`, in report order.
    /// Cell `k` (cells ordered by `n`, then `p`) draws its graph seeds from
    /// ChaCha8 stream `k` of the campaign seed.
    pub fn jobs(&self) -> Vec<(String, usize, f64, u64)> {
        let mut jobs = Vec::new();
        let mut cell = 0u64;
        for n in self.n_min..=self.n_max {
            for &p in &self.p_list {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                rng.set_stream(cell);
                for i in 0..self.count_per_cell {
                    jobs.push((format!("n{n}-p{p}-{i}"), n, p, rng.next_u64()));
                }
                cell += 1;
            }
        }
        jobs
    }
}

fn run_one(spec: &CampaignSpec, id: String, n: usize, p: f64, seed: u64) -> GraphRun {
    let g = generate(&GraphFamily::ErdosRenyi { n, p, seed }).expect("validated spec");
    let lab = Lab::with_cap(&g, spec.omega_cap);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    match campaign_plan(&lab, &mut rng) {
        Ok(plan) => run_plan(id, &lab, &plan, &spec.statements, false),
        Err(e) => overflow_run(id, &g, &e),
    }
}

/// Runs the campaign in parallel; the report is independent of scheduling.
/// Per-graph results carry counts and the failing check records only.
pub fn run_campaign(spec: &CampaignSpec, reproducible: bool) -> RunReport {
    let started = Instant::now();
    let runs: Vec<GraphRun> =
        spec.jobs().into_par_iter().map(|(id, n, p, seed)| run_one(spec, id, n, p, seed)).collect();
    let mut by_statement: BTreeMap<String, Counts> = BTreeMap::new();
    for r in &runs {
        merge_counts(&mut by_statement, &r.by_statement);
    }
    let results: Vec<_> = runs.into_iter().map(|r| r.result).collect();
    let wall = if reproducible { 0 } else { started.elapsed().as_millis() as u64 };
    RunReport {
        version: REPORT_VERSION.to_string(),
        spec: spec.echo(),
        summary: Summary::from_results(&results, by_statement, wall),
        results,
    }
}
