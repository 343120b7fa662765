//! Exhaustive minimum-weight guarding, for cross-checking the approximations.

use crate::error::{Error, Result};
use crate::geometry::{Side, Terrain, TerrainPoint};
use crate::scalar::Scalar;

use super::continuous::essential_segments;
use super::{GuardingInstance, Mode, Pick, Solution};

pub const DEFAULT_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct GuardOption<T> {
    pub at: TerrainPoint<T>,
    pub side: Side,
    pub weight: T,
}

/// Minimum-weight subset of `options` covering every target, by enumerating
/// all `2^k` subsets with bitset coverage.
pub fn exhaustive_optimum<T: Scalar>(
    terrain: &Terrain<T>,
    targets: &[TerrainPoint<T>],
    options: &[GuardOption<T>],
    cap: usize,
) -> Result<Solution<T>> {
    let k = options.len();
    if k > cap || k >= usize::BITS as usize {
        return Err(Error::CapExceeded { count: k, cap });
    }
    let words = targets.len().div_ceil(64).max(1);
    let reach: Vec<Vec<u64>> = options
        .iter()
        .map(|o| {
            let mut bits = vec![0u64; words];
            for (i, p) in targets.iter().enumerate() {
                if terrain.covers(&o.at, o.side, p) {
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
            bits
        })
        .collect();
    let mut full = vec![0u64; words];
    for i in 0..targets.len() {
        full[i / 64] |= 1 << (i % 64);
    }
    let mut union = vec![0u64; words];
    for r in &reach {
        for (u, b) in union.iter_mut().zip(r) {
            *u |= b;
        }
    }
    if let Some(index) = (0..targets.len()).find(|&i| union[i / 64] >> (i % 64) & 1 == 0) {
        return Err(Error::Infeasible { index, x: targets[index].x().to_string() });
    }

    // coverage[mask] and cost[mask] extend coverage[mask - lowbit] by one option.
    let subsets = 1usize << k;
    let mut coverage = vec![0u64; subsets * words];
    let mut cost: Vec<T> = Vec::with_capacity(subsets);
    cost.push(T::zero());
    let mut best: Option<usize> = (targets.is_empty()).then_some(0);
    for mask in 1..subsets {
        let low = mask.trailing_zeros() as usize;
        let prev = mask & (mask - 1);
        let (head, tail) = coverage.split_at_mut(mask * words);
        let here = &mut tail[..words];
        let before = &head[prev * words..prev * words + words];
        let mut complete = true;
        for w in 0..words {
            here[w] = before[w] | reach[low][w];
            complete &= here[w] == full[w];
        }
        let c = cost[prev].clone() + options[low].weight.clone();
        if complete && best.map_or(true, |b| c < cost[b]) {
            best = Some(mask);
        }
        cost.push(c);
    }

    let mask = best.expect("union covers every target");
    Ok(Solution::from_weighted(
        (0..k)
            .filter(|j| mask >> j & 1 == 1)
            .map(|j| (Pick::new(options[j].at.clone(), options[j].side), options[j].weight.clone())),
    ))
}

/// Exact optimum of an instance. Continuous instances are discretized: the
/// targets are the essential-segment representatives and the options are
/// every vertex as a unit-weight left guard and as a right guard.
pub fn brute_force_optimum<T: Scalar>(instance: &GuardingInstance<T>, cap: usize) -> Result<Solution<T>> {
    match instance.mode {
        Mode::Continuous => {
            let segments = essential_segments(&instance.terrain);
            let options: Vec<GuardOption<T>> = instance
                .terrain
                .vertices()
                .iter()
                .flat_map(|v| {
                    [Side::Left, Side::Right].map(|side| GuardOption { at: v.clone(), side, weight: T::one() })
                })
                .collect();
            exhaustive_optimum(&instance.terrain, &segments.representatives, &options, cap)
        }
        _ => exhaustive_optimum(&instance.terrain, &instance.points, &instance.options(), cap),
    }
}
