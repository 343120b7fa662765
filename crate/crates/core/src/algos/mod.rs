//! Guarding algorithms and their shared vocabulary.
//!
//! * [`left`]: optimal left (or right) guarding, greedy for unit weights and
//!   LP-based for arbitrary weights.
//! * [`one_sided`]: the LP-rounding 2-approximation for one-sided guarding.
//! * [`continuous`]: essential segments and the 4-approximation for guarding
//!   a whole terrain.
//! * [`discrete`]: two-way guards, 4-approximation when no guard location is
//!   also a point to guard, 5-approximation otherwise.
//! * [`oracle`]: exhaustive optimum for cross-checking.

pub mod continuous;
pub mod discrete;
pub mod left;
pub mod one_sided;
pub mod oracle;

use crate::error::{Error, Result};
use crate::geometry::{Side, Terrain, TerrainPoint};
use crate::scalar::{self, Scalar};

pub use continuous::{continuous_four_approx, essential_segments, ContinuousOutcome, EssentialSegments};
pub use discrete::{discrete_guarding, DiscreteOutcome, Route};
pub use left::{leftmost_seer, uniform_left_guarding, weighted_one_sided_optimal, LeftGreedy};
pub use one_sided::{one_sided_two_approx, OneSidedOutcome};
pub use oracle::{brute_force_optimum, exhaustive_optimum, GuardOption, DEFAULT_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Guards are listed per direction (`left_guards`, `right_guards`).
    OneSided,
    /// Two-way guards (`both_guards`).
    Discrete,
    /// Guard the whole terrain; points and guards are derived.
    Continuous,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::OneSided => "one_sided",
            Mode::Discrete => "discrete",
            Mode::Continuous => "continuous",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "one_sided" | "one-sided" => Ok(Mode::OneSided),
            "discrete" => Ok(Mode::Discrete),
            "continuous" => Ok(Mode::Continuous),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

/// A candidate guard location with its cost.
#[derive(Clone, Debug, PartialEq)]
pub struct Guard<T> {
    pub at: TerrainPoint<T>,
    pub weight: T,
}

impl<T: Scalar> Guard<T> {
    pub fn new(at: TerrainPoint<T>, weight: T) -> Self {
        Guard { at, weight }
    }

    pub fn unit(at: TerrainPoint<T>) -> Self {
        Guard { at, weight: T::one() }
    }

    pub fn mirrored(&self) -> Self {
        Guard { at: self.at.mirrored(), weight: self.weight.clone() }
    }
}

pub fn locations<T: Scalar>(guards: &[Guard<T>]) -> Vec<TerrainPoint<T>> {
    guards.iter().map(|g| g.at.clone()).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct GuardingInstance<T> {
    pub terrain: Terrain<T>,
    pub mode: Mode,
    pub points: Vec<TerrainPoint<T>>,
    pub left_guards: Vec<Guard<T>>,
    pub right_guards: Vec<Guard<T>>,
    pub both_guards: Vec<Guard<T>>,
}

impl<T: Scalar> GuardingInstance<T> {
    /// Validates the lists and drops repeated guard locations (the first
    /// occurrence, with its weight, is kept).
    pub fn new(
        terrain: Terrain<T>,
        mode: Mode,
        points: Vec<TerrainPoint<T>>,
        left_guards: Vec<Guard<T>>,
        right_guards: Vec<Guard<T>>,
        both_guards: Vec<Guard<T>>,
    ) -> Result<Self> {
        if mode == Mode::Continuous && !(points.is_empty() && left_guards.is_empty() && right_guards.is_empty() && both_guards.is_empty()) {
            return Err(Error::ContinuousWithLists);
        }
        let all_guards = left_guards.iter().chain(&right_guards).chain(&both_guards);
        for p in points.iter().chain(all_guards.clone().map(|g| &g.at)) {
            if !terrain.is_on(p) {
                return Err(Error::OffTerrain { x: p.x().to_string(), y: p.y().to_string() });
            }
        }
        if let Some(g) = all_guards.clone().find(|g| !scalar::positive(&g.weight)) {
            return Err(Error::NonPositiveWeight { x: g.at.x().to_string(), weight: g.weight.to_string() });
        }
        Ok(GuardingInstance {
            terrain,
            mode,
            points,
            left_guards: dedup(left_guards),
            right_guards: dedup(right_guards),
            both_guards: dedup(both_guards),
        })
    }

    pub fn continuous(terrain: Terrain<T>) -> Self {
        GuardingInstance {
            terrain,
            mode: Mode::Continuous,
            points: Vec::new(),
            left_guards: Vec::new(),
            right_guards: Vec::new(),
            both_guards: Vec::new(),
        }
    }

    /// Every admissible (guard, direction) choice with its weight.
    pub fn options(&self) -> Vec<GuardOption<T>> {
        let tag = |gs: &[Guard<T>], side: Side| -> Vec<GuardOption<T>> {
            gs.iter().map(|g| GuardOption { at: g.at.clone(), side, weight: g.weight.clone() }).collect()
        };
        let mut out = tag(&self.left_guards, Side::Left);
        out.extend(tag(&self.right_guards, Side::Right));
        out.extend(tag(&self.both_guards, Side::Both));
        out
    }

    /// Whether some guard location coincides with a point to guard.
    pub fn has_overlap(&self) -> bool {
        self.both_guards.iter().any(|g| self.points.iter().any(|p| p.same_x(&g.at)))
    }

    /// Reflection `x -> -x`, with left and right guard lists exchanged.
    pub fn mirrored(&self) -> Self {
        let m = |gs: &[Guard<T>]| gs.iter().map(Guard::mirrored).collect::<Vec<_>>();
        GuardingInstance {
            terrain: self.terrain.mirrored(),
            mode: self.mode,
            points: self.points.iter().map(TerrainPoint::mirrored).collect(),
            left_guards: m(&self.right_guards),
            right_guards: m(&self.left_guards),
            both_guards: m(&self.both_guards),
        }
    }

    fn admits(&self, pick: &Pick<T>) -> bool {
        let listed = |gs: &[Guard<T>]| gs.iter().any(|g| g.at == pick.guard);
        match self.mode {
            Mode::Continuous => self.terrain.is_on(&pick.guard),
            _ => {
                listed(&self.both_guards)
                    || (pick.side == Side::Left && listed(&self.left_guards))
                    || (pick.side == Side::Right && listed(&self.right_guards))
            }
        }
    }
}

fn dedup<T: Scalar>(guards: Vec<Guard<T>>) -> Vec<Guard<T>> {
    let mut out: Vec<Guard<T>> = Vec::with_capacity(guards.len());
    for g in guards {
        if !out.iter().any(|h| h.at.same_x(&g.at)) {
            out.push(g);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct Pick<T> {
    pub guard: TerrainPoint<T>,
    pub side: Side,
}

impl<T: Scalar> Pick<T> {
    pub fn new(guard: TerrainPoint<T>, side: Side) -> Self {
        Pick { guard, side }
    }
}

/// Chosen guards with their total weight. A guard picked in two directions
/// is paid for twice.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution<T> {
    pub picks: Vec<Pick<T>>,
    pub cost: T,
}

impl<T: Scalar> Solution<T> {
    pub fn empty() -> Self {
        Solution { picks: Vec::new(), cost: T::zero() }
    }

    pub fn from_weighted(items: impl IntoIterator<Item = (Pick<T>, T)>) -> Self {
        let mut sol = Solution::empty();
        for (pick, w) in items {
            sol.cost = sol.cost + w;
            sol.picks.push(pick);
        }
        sol
    }

    pub fn len(&self) -> usize {
        self.picks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.picks.is_empty()
    }

    pub fn covers(&self, terrain: &Terrain<T>, p: &TerrainPoint<T>) -> bool {
        self.picks.iter().any(|k| terrain.covers(&k.guard, k.side, p))
    }

    pub fn mirrored(&self) -> Self {
        Solution {
            picks: self.picks.iter().map(|k| Pick::new(k.guard.mirrored(), k.side.mirrored())).collect(),
            cost: self.cost.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict<T> {
    Feasible,
    /// A point no picked guard covers.
    Uncovered(TerrainPoint<T>),
    /// A pick that is not an admissible guard of the instance.
    ForeignGuard(Pick<T>),
}

impl<T> Verdict<T> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Verdict::Feasible)
    }
}

/// Checks a solution against an instance. In continuous mode every
/// essential-segment breakpoint and representative must be covered.
pub fn verify_feasible<T: Scalar>(instance: &GuardingInstance<T>, solution: &Solution<T>) -> Verdict<T> {
    if let Some(bad) = solution.picks.iter().find(|k| !instance.admits(k)) {
        return Verdict::ForeignGuard(bad.clone());
    }
    let derived;
    let targets: Box<dyn Iterator<Item = &TerrainPoint<T>>> = match instance.mode {
        Mode::Continuous => {
            derived = essential_segments(&instance.terrain);
            Box::new(derived.breakpoints.iter().chain(&derived.representatives))
        }
        _ => Box::new(instance.points.iter()),
    };
    for p in targets {
        if !solution.covers(&instance.terrain, p) {
            return Verdict::Uncovered(p.clone());
        }
    }
    Verdict::Feasible
}

/// First point of `points` that no option covers.
pub(crate) fn check_coverable<T: Scalar>(
    terrain: &Terrain<T>,
    points: &[TerrainPoint<T>],
    options: &[(&TerrainPoint<T>, Side)],
) -> Result<()> {
    for (index, p) in points.iter().enumerate() {
        if !options.iter().any(|(g, side)| terrain.covers(g, *side, p)) {
            return Err(Error::Infeasible { index, x: p.x().to_string() });
        }
    }
    Ok(())
}

pub(crate) fn half<T: Scalar>() -> T {
    scalar::ratio(1, 2)
}
