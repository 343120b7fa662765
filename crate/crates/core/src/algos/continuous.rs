//! Guarding an entire terrain with vertex guards.
//!
//! For every pair of mutually visible vertices `v1 < v2`, the line through
//! them is followed beyond `v1` (leftward) and beyond `v2` (rightward) until
//! the chain first rises to meet it. Those meeting points, together with the
//! vertices, cut the terrain into essential segments: every vertex sees
//! either all of a segment or none of its interior. One representative per
//! segment (its midpoint) is then guarded by the one-sided 2-approximation
//! with every vertex available as both a left and a right guard.

use std::cmp::Ordering;

use crate::error::Result;
use crate::geometry::{orientation, Terrain, TerrainPoint};
use crate::scalar::{self, Scalar};

use super::one_sided::{one_sided_two_approx, OneSidedOutcome};
use super::{Guard, Pick, Solution};
use crate::geometry::Side;

#[derive(Clone, Debug, PartialEq)]
pub struct EssentialSegments<T> {
    /// Sorted by x, no repeats; includes every vertex.
    pub breakpoints: Vec<TerrainPoint<T>>,
    /// Midpoint of each pair of consecutive breakpoints.
    pub representatives: Vec<TerrainPoint<T>>,
}

impl<T: Scalar> EssentialSegments<T> {
    pub fn segments(&self) -> impl Iterator<Item = (&TerrainPoint<T>, &TerrainPoint<T>)> + '_ {
        self.breakpoints.windows(2).map(|w| (&w[0], &w[1]))
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// `2 * C(n, 2) + n`: every visible vertex pair contributes at most two
    /// new breakpoints.
    pub fn breakpoint_bound(n_vertices: usize) -> usize {
        n_vertices * (n_vertices - 1) + n_vertices
    }
}

pub fn essential_segments<T: Scalar>(terrain: &Terrain<T>) -> EssentialSegments<T> {
    let vs = terrain.vertices();
    let mut breakpoints: Vec<TerrainPoint<T>> = vs.to_vec();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if !terrain.sees(&vs[i], &vs[j]) {
                continue;
            }
            breakpoints.extend(first_rise(terrain, i, j, Walk::Right));
            breakpoints.extend(first_rise(terrain, i, j, Walk::Left));
        }
    }
    breakpoints.sort_by(|a, b| a.cmp_x(b));
    breakpoints.dedup_by(|a, b| a.same_x(b));

    let two = scalar::int::<T>(2);
    let representatives = breakpoints
        .windows(2)
        .map(|w| {
            let mid = (w[0].x().clone() + w[1].x().clone()) / two.clone();
            terrain.point_on(mid).expect("midpoint lies inside the terrain")
        })
        .collect();
    EssentialSegments { breakpoints, representatives }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Walk {
    Left,
    Right,
}

/// Where the chain first meets the line through vertices `i < j` when
/// walking outward past `j` (rightward) or past `i` (leftward). `None` when
/// the chain rises above the line immediately, runs along it from the start,
/// or never meets it again.
fn first_rise<T: Scalar>(terrain: &Terrain<T>, i: usize, j: usize, walk: Walk) -> Option<TerrainPoint<T>> {
    let vs = terrain.vertices();
    let (a, b) = (&vs[i], &vs[j]);
    // Positive orientation means strictly above the line, whichever side we walk.
    let side = |v: &TerrainPoint<T>| orientation(a, b, v);
    let steps: Vec<(usize, usize)> = match walk {
        Walk::Right => (j..vs.len() - 1).map(|k| (k, k + 1)).collect(),
        Walk::Left => (1..=i).rev().map(|k| (k, k - 1)).collect(),
    };
    let start = match walk {
        Walk::Right => j,
        Walk::Left => i,
    };
    for (from, to) in steps {
        match side(&vs[to]) {
            Ordering::Less => continue,
            _ if from == start => return None,
            Ordering::Equal => return Some(vs[to].clone()),
            Ordering::Greater => {
                let below = line_gap(a, b, &vs[from]);
                let above = line_gap(a, b, &vs[to]);
                let t = below.clone() / (below - above);
                let x = vs[from].x().clone() + t * (vs[to].x().clone() - vs[from].x().clone());
                return Some(terrain.point_on(x).expect("crossing lies on an edge"));
            }
        }
    }
    None
}

/// Signed cross product `(b - a) x (v - a)`; linear along any edge.
fn line_gap<T: Scalar>(a: &TerrainPoint<T>, b: &TerrainPoint<T>, v: &TerrainPoint<T>) -> T {
    (b.x().clone() - a.x().clone()) * (v.y().clone() - a.y().clone())
        - (b.y().clone() - a.y().clone()) * (v.x().clone() - a.x().clone())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContinuousOutcome<T> {
    /// Distinct vertices, each facing both ways.
    pub solution: Solution<T>,
    pub segments: EssentialSegments<T>,
    /// The one-sided run on (representatives, vertices, vertices).
    pub one_sided: OneSidedOutcome<T>,
}

/// Unit-weight vertex guards for the whole terrain, at most four times the
/// optimum number of guards.
pub fn continuous_four_approx<T: Scalar>(terrain: &Terrain<T>) -> Result<ContinuousOutcome<T>> {
    let segments = essential_segments(terrain);
    let guards: Vec<Guard<T>> = terrain.vertices().iter().cloned().map(Guard::unit).collect();
    let one_sided = one_sided_two_approx(terrain, &segments.representatives, &guards, &guards)?;

    let mut chosen: Vec<TerrainPoint<T>> = Vec::new();
    for pick in &one_sided.solution.picks {
        if !chosen.iter().any(|c| c.same_x(&pick.guard)) {
            chosen.push(pick.guard.clone());
        }
    }
    chosen.sort_by(|a, b| a.cmp_x(b));
    let solution = Solution::from_weighted(chosen.into_iter().map(|g| (Pick::new(g, Side::Both), T::one())));
    Ok(ContinuousOutcome { solution, segments, one_sided })
}
