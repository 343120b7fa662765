//! Algorithm dispatch with exact bound checks.

use terrain_guard::algos::{
    brute_force_optimum, continuous_four_approx, discrete_guarding, locations, one_sided_two_approx,
    uniform_left_guarding, verify_feasible, weighted_one_sided_optimal, EssentialSegments, Guard, Mode, Route,
    Verdict,
};
use terrain_guard::covmat::VisibilityMatrix;
use terrain_guard::lpcore::CoveringLp;
use terrain_guard::{Error, ExactInstance, ExactSolution, Rational, Side};

use crate::error::{CliError, CliResult};
use crate::report::RunReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Algo {
    LeftGreedy,
    OneSidedOpt,
    #[value(name = "one-sided-2approx")]
    OneSided2Approx,
    #[value(name = "continuous-4approx")]
    Continuous4Approx,
    Discrete,
}

impl Algo {
    pub const ALL: [Algo; 5] =
        [Algo::LeftGreedy, Algo::OneSidedOpt, Algo::OneSided2Approx, Algo::Continuous4Approx, Algo::Discrete];

    pub fn as_str(self) -> &'static str {
        match self {
            Algo::LeftGreedy => "left-greedy",
            Algo::OneSidedOpt => "one-sided-opt",
            Algo::OneSided2Approx => "one-sided-2approx",
            Algo::Continuous4Approx => "continuous-4approx",
            Algo::Discrete => "discrete",
        }
    }

    /// The instance mode the algorithm runs on.
    pub fn mode(self) -> Mode {
        match self {
            Algo::LeftGreedy | Algo::OneSidedOpt | Algo::OneSided2Approx => Mode::OneSided,
            Algo::Continuous4Approx => Mode::Continuous,
            Algo::Discrete => Mode::Discrete,
        }
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Runs `algo` on `inst`. With `oracle_cap` set, the exhaustive optimum is
/// computed as well and the ratio against it is checked.
pub fn solve(inst: &ExactInstance, algo: Algo, oracle_cap: Option<usize>) -> CliResult<RunReport> {
    if inst.mode != algo.mode() {
        return Err(Error::WrongMode { expected: algo.mode().as_str() }.into());
    }
    let t = &inst.terrain;
    let mut report;
    // Factor against the optimum: the check is `cost <op> factor * oracle`.
    let oracle_factor: Option<i64>;
    match algo {
        Algo::LeftGreedy => {
            if !inst.right_guards.is_empty() {
                return Err(CliError::invalid("right_guards", "left-greedy uses left guards only"));
            }
            if let Some(g) = inst.left_guards.iter().find(|g| g.weight != q(1)) {
                return Err(CliError::invalid("weights.left", format!("left-greedy needs unit weights, got {}", g.weight)));
            }
            let run = uniform_left_guarding(t, &inst.points, &locations(&inst.left_guards))?;
            let witnesses = run.witnesses.len();
            report = RunReport::new(algo.as_str(), inst.mode.as_str(), run.solution);
            report.check("guards = witnesses", report.solution.len() == witnesses);
            oracle_factor = Some(1);
        }
        Algo::OneSidedOpt => {
            let (guards, side) = single_side(inst)?;
            let sol = weighted_one_sided_optimal(t, &inst.points, guards, side)?;
            let matrix = VisibilityMatrix::build_one_sided(t, &inst.points, &locations(guards), side);
            let lp = CoveringLp::from_matrix(&matrix, guards.iter().map(|g| g.weight.clone()).collect())?.solve();
            report = RunReport::new(algo.as_str(), inst.mode.as_str(), sol);
            report.check("lp solution integral", lp.is_integral());
            report.check("cost = lp", report.solution.cost == lp.objective);
            report.lp = Some(lp.objective);
            oracle_factor = Some(1);
        }
        Algo::OneSided2Approx => {
            let run = one_sided_two_approx(t, &inst.points, &inst.left_guards, &inst.right_guards)?;
            report = RunReport::new(algo.as_str(), inst.mode.as_str(), run.solution.clone());
            report.check("cost <= 2 * lp", run.solution.cost <= q(2) * run.lp_value().clone());
            report.check(
                "left cost <= 2 * left lp mass",
                run.left_cost <= q(2) * run.lp_left_mass(&inst.left_guards),
            );
            report.check(
                "right cost <= 2 * right lp mass",
                run.right_cost <= q(2) * run.lp_right_mass(&inst.left_guards, &inst.right_guards),
            );
            report.lp = Some(run.lp.objective);
            oracle_factor = Some(2);
        }
        Algo::Continuous4Approx => {
            let run = continuous_four_approx(t)?;
            report = RunReport::new(algo.as_str(), inst.mode.as_str(), run.solution.clone());
            report.check(
                "breakpoints <= n(n-1) + n",
                run.segments.breakpoints.len() <= EssentialSegments::<Rational>::breakpoint_bound(t.len()),
            );
            report.check("cost <= 2 * lp", run.solution.cost <= q(2) * run.one_sided.lp_value().clone());
            report.lp = Some(run.one_sided.lp.objective);
            oracle_factor = Some(2);
        }
        Algo::Discrete => {
            let run = discrete_guarding(t, &inst.points, &inst.both_guards)?;
            report = RunReport::new(algo.as_str(), inst.mode.as_str(), run.solution.clone());
            match &run.route {
                Route::Disjoint(inner) => {
                    report.check("cost <= 2 * lp", run.solution.cost <= q(2) * inner.lp_value().clone());
                }
                Route::Overlap(inner) => {
                    report.check("cost <= 5 * lp", run.solution.cost <= q(5) * inner.lp.objective.clone());
                    report.check(
                        "w(A0) <= 5 * lp mass on A0",
                        inner.self_guard_cost(&inst.both_guards) <= inner.self_guard_bound(&inst.both_guards),
                    );
                }
            }
            report.lp = Some(run.lp_value().clone());
            oracle_factor = Some(run.guarantee());
        }
    }

    let verdict = verify_feasible(inst, &report.solution);
    report.check("feasible", verdict.is_feasible());

    if let (Some(cap), Some(factor)) = (oracle_cap, oracle_factor) {
        let opt = brute_force_optimum(inst, cap)?.cost;
        let name = if factor == 1 { "cost = oracle".to_string() } else { format!("cost <= {factor} * oracle") };
        let holds = if factor == 1 { report.solution.cost == opt } else { report.solution.cost <= q(factor) * opt.clone() };
        report.check(name, holds);
        report.oracle = Some(opt);
    }
    Ok(report)
}

fn single_side(inst: &ExactInstance) -> CliResult<(&[Guard<Rational>], Side)> {
    match (inst.left_guards.is_empty(), inst.right_guards.is_empty()) {
        (false, true) => Ok((&inst.left_guards, Side::Left)),
        (true, false) => Ok((&inst.right_guards, Side::Right)),
        (true, true) => Err(CliError::invalid("left_guards", "no guards")),
        (false, false) => Err(CliError::invalid("right_guards", "one-sided-opt needs guards on a single side")),
    }
}

pub fn oracle(inst: &ExactInstance, cap: usize) -> CliResult<RunReport> {
    let sol = brute_force_optimum(inst, cap)?;
    let mut report = RunReport::new("oracle", inst.mode.as_str(), sol);
    report.oracle = Some(report.solution.cost.clone());
    report.check("feasible", verify_feasible(inst, &report.solution).is_feasible());
    Ok(report)
}

pub fn verify(inst: &ExactInstance, sol: &ExactSolution) -> Verdict<Rational> {
    verify_feasible(inst, sol)
}
