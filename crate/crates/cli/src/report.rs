//! Run reports as aligned text or tab-separated lines.

use std::fmt::Write as _;

use terrain_guard::{ExactSolution, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

/// A bound checked exactly during a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub algorithm: String,
    pub mode: String,
    pub solution: ExactSolution,
    pub lp: Option<Rational>,
    pub oracle: Option<Rational>,
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn new(algorithm: &str, mode: &str, solution: ExactSolution) -> Self {
        RunReport { algorithm: algorithm.into(), mode: mode.into(), solution, lp: None, oracle: None, checks: Vec::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, holds: bool) {
        self.checks.push(Check { name: name.into(), holds });
    }

    pub fn all_checks_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn cost(&self) -> &Rational {
        &self.solution.cost
    }

    fn fields(&self) -> Vec<(&'static str, String)> {
        let picks: Vec<String> = self.solution.picks.iter().map(|k| format!("{}:{}", k.guard.x(), k.side)).collect();
        let mut out = vec![
            ("algorithm", self.algorithm.clone()),
            ("mode", self.mode.clone()),
            ("cost", self.solution.cost.to_string()),
            ("guards", self.solution.len().to_string()),
            ("picks", picks.join(" ")),
        ];
        if let Some(lp) = &self.lp {
            out.push(("lp", lp.to_string()));
        }
        if let Some(oracle) = &self.oracle {
            out.push(("oracle", oracle.to_string()));
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Text => {
                for (key, value) in self.fields() {
                    writeln!(out, "{key:<10} {value}").unwrap();
                }
                let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
                for c in &self.checks {
                    let verdict = if c.holds { "pass" } else { "FAIL" };
                    writeln!(out, "{:<10} {:<width$}  {verdict}", "check", c.name).unwrap();
                }
            }
            Format::Tsv => {
                for (key, value) in self.fields() {
                    writeln!(out, "{key}\t{value}").unwrap();
                }
                for c in &self.checks {
                    writeln!(out, "check\t{}\t{}", c.name, c.holds).unwrap();
                }
            }
        }
        out
    }
}
