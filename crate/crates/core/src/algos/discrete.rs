//! Weighted discrete guarding with two-way guards.
//!
//! When no guard location is also a point to guard, every guard is split
//! into a left copy and a right copy and the one-sided 2-approximation is
//! applied (factor 4 overall). Otherwise the covering LP over two-way guards
//! is solved first; every point-guard carrying at least 1/5 of LP mass is
//! opened outright, and the remaining points are split by the scaled
//! solution `x_{g,L} = x_{g,R} = 5/4 x*_g` and solved per side (factor 5).

use crate::covmat::VisibilityMatrix;
use crate::error::{Error, Result};
use crate::geometry::{Side, Terrain, TerrainPoint};
use crate::lpcore::{CoveringLp, FractionalSolution};
use crate::scalar::{self, Scalar};

use super::one_sided::{joint_matrix, one_sided_two_approx, split_and_solve, OneSidedOutcome};
use super::{check_coverable, locations, Guard, Pick, Solution};

#[derive(Clone, Debug, PartialEq)]
pub enum Route<T> {
    /// No guard shares a location with a point.
    Disjoint(OneSidedOutcome<T>),
    Overlap(OverlapRun<T>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct OverlapRun<T> {
    /// Optimum of the two-way covering LP, one variable per guard.
    pub lp: FractionalSolution<T>,
    /// Indices of the guards opened outright.
    pub self_guards: Vec<usize>,
    /// Indices of points not seen by the opened guards.
    pub residual_points: Vec<usize>,
    /// Residual points assigned to the left subproblem (indices into `points`).
    pub left_points: Vec<usize>,
    pub right_points: Vec<usize>,
    /// Cost of the per-side solutions on the residual.
    pub residual_cost: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteOutcome<T> {
    /// Distinct guards, each facing both ways.
    pub solution: Solution<T>,
    pub route: Route<T>,
}

impl<T: Scalar> DiscreteOutcome<T> {
    /// Value of the LP driving the rounding: the one-sided LP on the
    /// disjoint route, the two-way LP on the overlap route.
    pub fn lp_value(&self) -> &T {
        match &self.route {
            Route::Disjoint(o) => o.lp_value(),
            Route::Overlap(o) => &o.lp.objective,
        }
    }

    /// Worst-case factor relative to the optimum: 4 or 5.
    pub fn guarantee(&self) -> i64 {
        match self.route {
            Route::Disjoint(_) => 4,
            Route::Overlap(_) => 5,
        }
    }
}

impl<T: Scalar> OverlapRun<T> {
    /// `w(A_0)`.
    pub fn self_guard_cost(&self, guards: &[Guard<T>]) -> T {
        scalar::sum(self.self_guards.iter().map(|&j| &guards[j].weight))
    }

    /// `5 * sum_{g in A_0} w_g x*_g`.
    pub fn self_guard_bound(&self, guards: &[Guard<T>]) -> T {
        let mass = self
            .self_guards
            .iter()
            .fold(T::zero(), |acc, &j| acc + guards[j].weight.clone() * self.lp.values[j].clone());
        scalar::int::<T>(5) * mass
    }

    /// `5 * sum_{g not in A_0} w_g x*_g`.
    pub fn residual_bound(&self, guards: &[Guard<T>]) -> T {
        let mass = (0..guards.len())
            .filter(|j| !self.self_guards.contains(j))
            .fold(T::zero(), |acc, j| acc + guards[j].weight.clone() * self.lp.values[j].clone());
        scalar::int::<T>(5) * mass
    }
}

pub fn discrete_guarding<T: Scalar>(
    terrain: &Terrain<T>,
    points: &[TerrainPoint<T>],
    guards: &[Guard<T>],
) -> Result<DiscreteOutcome<T>> {
    let options: Vec<_> = guards.iter().map(|g| (&g.at, Side::Both)).collect();
    check_coverable(terrain, points, &options)?;

    let overlap = guards.iter().any(|g| points.iter().any(|p| p.same_x(&g.at)));
    if !overlap {
        let run = one_sided_two_approx(terrain, points, guards, guards)?;
        let solution = merge_two_way(guards, run.solution.picks.iter().map(|k| &k.guard));
        return Ok(DiscreteOutcome { solution, route: Route::Disjoint(run) });
    }

    let matrix = VisibilityMatrix::build_one_sided(terrain, points, &locations(guards), Side::Both);
    let weights = guards.iter().map(|g| g.weight.clone()).collect();
    let lp = CoveringLp::from_matrix(&matrix, weights)?.solve();

    let fifth = scalar::ratio::<T>(1, 5);
    let self_guards: Vec<usize> = (0..guards.len())
        .filter(|&j| lp.values[j] >= fifth && points.iter().any(|p| p.same_x(&guards[j].at)))
        .collect();

    let residual_points: Vec<usize> = (0..points.len())
        .filter(|&i| !self_guards.iter().any(|&j| terrain.sees(&guards[j].at, &points[i])))
        .collect();
    let rest: Vec<usize> = (0..guards.len()).filter(|j| !self_guards.contains(j)).collect();
    let rest_guards: Vec<Guard<T>> = rest.iter().map(|&j| guards[j].clone()).collect();
    let residual: Vec<TerrainPoint<T>> = residual_points.iter().map(|&i| points[i].clone()).collect();

    let scale = scalar::ratio::<T>(5, 4);
    let scaled: Vec<T> = rest.iter().map(|&j| scale.clone() * lp.values[j].clone()).collect();
    let sides = joint_matrix(terrain, &residual, &rest_guards, &rest_guards);
    let k = rest.len();
    let side_mass = |row: &[bool], offset: usize| scalar::sum((0..k).filter(|&j| row[offset + j]).map(|j| &scaled[j]));
    let left_mass: Vec<T> = sides.entries().iter().map(|r| side_mass(r, 0)).collect();
    let right_mass: Vec<T> = sides.entries().iter().map(|r| side_mass(r, k)).collect();

    let split = split_and_solve(terrain, &residual, &rest_guards, &rest_guards, &left_mass, &right_mass).map_err(|e| match e {
        Error::Infeasible { index, x } => Error::Infeasible { index: residual_points[index], x },
        other => other,
    })?;

    let opened = self_guards.iter().map(|&j| &guards[j].at);
    let solution = merge_two_way(guards, opened.chain(split.solution.picks.iter().map(|k| &k.guard)));
    let to_points = |idx: &[usize]| idx.iter().map(|&i| residual_points[i]).collect::<Vec<_>>();
    let run = OverlapRun {
        lp,
        left_points: to_points(&split.left_points),
        right_points: to_points(&split.right_points),
        self_guards,
        residual_points,
        residual_cost: split.solution.cost,
    };
    Ok(DiscreteOutcome { solution, route: Route::Overlap(run) })
}

/// Distinct chosen locations as two-way guards, in input order.
fn merge_two_way<'a, T: Scalar + 'a>(guards: &[Guard<T>], chosen: impl Iterator<Item = &'a TerrainPoint<T>>) -> Solution<T> {
    let chosen: Vec<&TerrainPoint<T>> = chosen.collect();
    Solution::from_weighted(
        guards
            .iter()
            .filter(|g| chosen.iter().any(|c| c.same_x(&g.at)))
            .map(|g| (Pick::new(g.at.clone(), Side::Both), g.weight.clone())),
    )
}
