//! Seeded batches: one line per instance with cost, LP value, oracle value
//! and ratio. Instances run in parallel; lines come out in seed order.

use rayon::prelude::*;

use terrain_guard::algos::{essential_segments, Mode};
use terrain_guard::gen::{generate_random, Family, GenParams};
use terrain_guard::{Error, ExactInstance, Rational};

use crate::error::{CliError, CliResult};
use crate::report::{Format, RunReport};
use crate::run::{solve, Algo};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchParams {
    pub algo: Algo,
    pub seed: u64,
    pub count: usize,
    pub vertices: usize,
    pub points: usize,
    pub guards: usize,
    /// Guards placed on points in discrete batches.
    pub shared: usize,
    /// Oracle cap; `None` skips the oracle.
    pub cap: Option<usize>,
}

impl BenchParams {
    pub fn family(&self) -> Family {
        match self.algo {
            Algo::LeftGreedy | Algo::OneSidedOpt => Family::LeftGuarding,
            Algo::OneSided2Approx => Family::OneSided,
            Algo::Continuous4Approx => Family::Continuous,
            Algo::Discrete => Family::Discrete { shared: self.shared },
        }
    }

    pub fn instance(&self, seed: u64) -> ExactInstance {
        let mut p = GenParams::new(seed, self.vertices, self.points, self.guards, self.family());
        p.unit_weights = self.algo == Algo::LeftGreedy;
        generate_random(&p)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub seed: u64,
    pub vertices: usize,
    pub points: usize,
    pub guards: usize,
    pub report: RunReport,
}

impl BenchRow {
    /// `cost / oracle`, when the oracle ran and is nonzero.
    pub fn ratio(&self) -> Option<Rational> {
        let opt = self.report.oracle.as_ref()?;
        (*opt != Rational::from_integer(0.into())).then(|| self.report.cost().clone() / opt.clone())
    }

    fn cells(&self) -> [String; 8] {
        let dash = || "-".to_string();
        [
            self.seed.to_string(),
            self.vertices.to_string(),
            self.points.to_string(),
            self.guards.to_string(),
            self.report.cost().to_string(),
            self.report.lp.as_ref().map_or_else(dash, ToString::to_string),
            self.report.oracle.as_ref().map_or_else(dash, ToString::to_string),
            self.ratio().map_or_else(dash, |r| r.to_string()),
        ]
    }
}

pub const HEADER: [&str; 8] = ["seed", "n", "points", "guards", "cost", "lp", "oracle", "ratio"];

fn run_one(params: &BenchParams, seed: u64) -> CliResult<BenchRow> {
    let inst = params.instance(seed);
    let (points, guards) = match inst.mode {
        Mode::Continuous => (essential_segments(&inst.terrain).len(), inst.terrain.len()),
        _ => (inst.points.len(), inst.left_guards.len() + inst.right_guards.len() + inst.both_guards.len()),
    };
    let report = match solve(&inst, params.algo, params.cap) {
        Err(CliError::Core(Error::CapExceeded { .. })) => solve(&inst, params.algo, None)?,
        other => other?,
    };
    Ok(BenchRow { seed, vertices: inst.terrain.len(), points, guards, report })
}

/// Runs seeds `seed .. seed + count`. The first error, in seed order, aborts the batch.
pub fn run_bench(params: &BenchParams) -> CliResult<Vec<BenchRow>> {
    let seeds: Vec<u64> = (0..params.count as u64).map(|i| params.seed + i).collect();
    let rows: Vec<CliResult<BenchRow>> = seeds.par_iter().map(|&s| run_one(params, s)).collect();
    rows.into_iter().collect()
}

pub fn render_rows(rows: &[BenchRow], format: Format) -> String {
    let mut table: Vec<Vec<String>> = vec![HEADER.iter().map(|h| h.to_string()).collect()];
    table.extend(rows.iter().map(|r| r.cells().to_vec()));
    let mut out = String::new();
    match format {
        Format::Tsv => {
            for line in table {
                out.push_str(&line.join("\t"));
                out.push('\n');
            }
        }
        Format::Text => {
            let widths: Vec<usize> = (0..HEADER.len()).map(|c| table.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
            for line in table {
                let cells: Vec<String> = line.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
                out.push_str(cells.join("  ").trim_end());
                out.push('\n');
            }
        }
    }
    out
}
