//! Optimal one-directional guarding.

use crate::covmat::VisibilityMatrix;
use crate::error::{Error, Result};
use crate::geometry::{Side, Terrain, TerrainPoint};
use crate::lpcore::CoveringLp;
use crate::scalar::Scalar;

use super::{check_coverable, locations, Guard, Pick, Solution};

/// Index of the leftmost guard strictly left of `p` that sees it. Equal
/// abscissae resolve to the lower index.
pub fn leftmost_seer<T: Scalar>(terrain: &Terrain<T>, p: &TerrainPoint<T>, guards: &[TerrainPoint<T>]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (j, g) in guards.iter().enumerate() {
        if !terrain.covers(g, Side::Left, p) {
            continue;
        }
        if best.map_or(true, |b| g.x() < guards[b].x()) {
            best = Some(j);
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq)]
pub struct LeftGreedy<T> {
    pub solution: Solution<T>,
    /// Points that triggered a new guard, in scan order. No single guard sees
    /// two of them from the left, so their number bounds any solution from below.
    pub witnesses: Vec<TerrainPoint<T>>,
}

/// Unit-weight left guarding: scan points left to right and, for every point
/// not yet covered, add its leftmost seer.
pub fn uniform_left_guarding<T: Scalar>(
    terrain: &Terrain<T>,
    points: &[TerrainPoint<T>],
    guards: &[TerrainPoint<T>],
) -> Result<LeftGreedy<T>> {
    let options: Vec<_> = guards.iter().map(|g| (g, Side::Left)).collect();
    check_coverable(terrain, points, &options)?;

    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp_x(&points[b]));

    let mut chosen: Vec<usize> = Vec::new();
    let mut witnesses = Vec::new();
    for i in order {
        let p = &points[i];
        if chosen.iter().any(|&j| terrain.covers(&guards[j], Side::Left, p)) {
            continue;
        }
        let j = leftmost_seer(terrain, p, guards).expect("coverability checked above");
        chosen.push(j);
        witnesses.push(p.clone());
    }

    let solution = Solution::from_weighted(chosen.into_iter().map(|j| (Pick::new(guards[j].clone(), Side::Left), T::one())));
    Ok(LeftGreedy { solution, witnesses })
}

/// Minimum-weight guarding with every guard facing `side`, via a basic
/// optimal solution of the covering LP (integral because one-sided
/// visibility matrices are totally balanced).
pub fn weighted_one_sided_optimal<T: Scalar>(
    terrain: &Terrain<T>,
    points: &[TerrainPoint<T>],
    guards: &[Guard<T>],
    side: Side,
) -> Result<Solution<T>> {
    if side == Side::Both {
        return Err(Error::MixedSides);
    }
    let matrix = VisibilityMatrix::build_one_sided(terrain, points, &locations(guards), side);
    let weights = guards.iter().map(|g| g.weight.clone()).collect();
    let lp = CoveringLp::from_matrix(&matrix, weights).map_err(|e| match e {
        Error::EmptyRow(index) => Error::Infeasible { index, x: points[index].x().to_string() },
        other => other,
    })?;
    let fractional = lp.solve();
    if let Some(index) = fractional.values.iter().position(|v| !(v.is_zero() || v.is_one())) {
        return Err(Error::NotIntegral { index, value: fractional.values[index].to_string() });
    }
    Ok(Solution::from_weighted(
        guards
            .iter()
            .zip(&fractional.values)
            .filter(|(_, v)| v.is_one())
            .map(|(g, _)| (Pick::new(g.at.clone(), side), g.weight.clone())),
    ))
}
