//! LP-rounding 2-approximation for one-sided guarding.
//!
//! Solve the joint covering LP over left and right guards, send every point
//! whose left mass is at least one half to the left subproblem and every
//! point whose right mass is at least one half to the right subproblem (a
//! point may go to both), then solve each side optimally.

use crate::covmat::{Column, VisibilityMatrix};
use crate::error::{Error, Result};
use crate::geometry::{Side, Terrain, TerrainPoint};
use crate::lpcore::{CoveringLp, FractionalSolution};
use crate::scalar::{self, Scalar};

use super::left::weighted_one_sided_optimal;
use super::{check_coverable, half, Guard, Solution};

#[derive(Clone, Debug, PartialEq)]
pub struct OneSidedOutcome<T> {
    pub solution: Solution<T>,
    /// Optimum of the joint LP; variables are the left guards followed by the right guards.
    pub lp: FractionalSolution<T>,
    /// Indices of points assigned to the left subproblem.
    pub left_points: Vec<usize>,
    pub right_points: Vec<usize>,
    pub left_cost: T,
    pub right_cost: T,
}

impl<T: Scalar> OneSidedOutcome<T> {
    pub fn lp_value(&self) -> &T {
        &self.lp.objective
    }

    /// `sum_{g in G_L} w_g x*_{g,L}`.
    pub fn lp_left_mass(&self, left: &[Guard<T>]) -> T {
        left.iter()
            .zip(&self.lp.values)
            .fold(T::zero(), |acc, (g, x)| acc + g.weight.clone() * x.clone())
    }

    pub fn lp_right_mass(&self, left: &[Guard<T>], right: &[Guard<T>]) -> T {
        right
            .iter()
            .zip(&self.lp.values[left.len()..])
            .fold(T::zero(), |acc, (g, x)| acc + g.weight.clone() * x.clone())
    }
}

/// Columns of the joint LP: left guards, then right guards.
pub fn joint_matrix<T: Scalar>(
    terrain: &Terrain<T>,
    points: &[TerrainPoint<T>],
    left: &[Guard<T>],
    right: &[Guard<T>],
) -> VisibilityMatrix<T> {
    let cols = left
        .iter()
        .map(|g| Column::new(g.at.clone(), Side::Left))
        .chain(right.iter().map(|g| Column::new(g.at.clone(), Side::Right)))
        .collect();
    VisibilityMatrix::build(terrain, points, cols)
}

pub fn one_sided_two_approx<T: Scalar>(
    terrain: &Terrain<T>,
    points: &[TerrainPoint<T>],
    left: &[Guard<T>],
    right: &[Guard<T>],
) -> Result<OneSidedOutcome<T>> {
    let options: Vec<_> = left
        .iter()
        .map(|g| (&g.at, Side::Left))
        .chain(right.iter().map(|g| (&g.at, Side::Right)))
        .collect();
    check_coverable(terrain, points, &options)?;

    let matrix = joint_matrix(terrain, points, left, right);
    let weights = left.iter().chain(right).map(|g| g.weight.clone()).collect();
    let lp = CoveringLp::from_matrix(&matrix, weights)?.solve();

    let mass = |row: &[bool], range: std::ops::Range<usize>| {
        scalar::sum(range.filter(|&j| row[j]).map(|j| &lp.values[j]))
    };
    let n_left = left.len();
    let width = matrix.n_cols();
    let left_mass: Vec<T> = matrix.entries().iter().map(|r| mass(r, 0..n_left)).collect();
    let right_mass: Vec<T> = matrix.entries().iter().map(|r| mass(r, n_left..width)).collect();

    let split = split_and_solve(terrain, points, left, right, &left_mass, &right_mass)?;
    Ok(OneSidedOutcome {
        solution: split.solution,
        lp,
        left_points: split.left_points,
        right_points: split.right_points,
        left_cost: split.left_cost,
        right_cost: split.right_cost,
    })
}

pub(crate) struct Split<T> {
    pub solution: Solution<T>,
    pub left_points: Vec<usize>,
    pub right_points: Vec<usize>,
    pub left_cost: T,
    pub right_cost: T,
}

/// Thresholds the per-point side masses at one half and solves both sides
/// optimally.
pub(crate) fn split_and_solve<T: Scalar>(
    terrain: &Terrain<T>,
    points: &[TerrainPoint<T>],
    left: &[Guard<T>],
    right: &[Guard<T>],
    left_mass: &[T],
    right_mass: &[T],
) -> Result<Split<T>> {
    let threshold = half::<T>();
    let left_points: Vec<usize> = (0..points.len()).filter(|&i| left_mass[i] >= threshold).collect();
    let right_points: Vec<usize> = (0..points.len()).filter(|&i| right_mass[i] >= threshold).collect();
    if let Some(index) = (0..points.len()).find(|i| !left_points.contains(i) && !right_points.contains(i)) {
        return Err(Error::Infeasible { index, x: points[index].x().to_string() });
    }

    let pick = |idx: &[usize]| idx.iter().map(|&i| points[i].clone()).collect::<Vec<_>>();
    let remap = |e: Error, idx: &[usize]| match e {
        Error::Infeasible { index, x } => Error::Infeasible { index: idx[index], x },
        other => other,
    };
    let a_left = weighted_one_sided_optimal(terrain, &pick(&left_points), left, Side::Left).map_err(|e| remap(e, &left_points))?;
    let a_right =
        weighted_one_sided_optimal(terrain, &pick(&right_points), right, Side::Right).map_err(|e| remap(e, &right_points))?;

    let left_cost = a_left.cost.clone();
    let right_cost = a_right.cost.clone();
    let mut solution = a_left;
    solution.picks.extend(a_right.picks);
    solution.cost = solution.cost + a_right.cost;
    Ok(Split { solution, left_points, right_points, left_cost, right_cost })
}
