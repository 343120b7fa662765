//! Seeded random instances.
//!
//! Terrains have integer vertices with x steps in `1..=3` and heights in
//! `0..=8`. Points and guards are midpoints of random sub-intervals of a
//! quarter-unit grid spanning the terrain, so they land on multiples of 1/8.
//! Points no admissible guard can cover are dropped, so every generated
//! instance is feasible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algos::{Guard, GuardingInstance, Mode};
use crate::geometry::{Side, Terrain, TerrainPoint};
use crate::scalar;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// One-sided instance with left guards only.
    LeftGuarding,
    /// Each guard lands in the left list, the right list, or both.
    OneSided,
    /// Two-way guards; the first `shared` guards are placed on points, all
    /// others avoid point locations.
    Discrete { shared: usize },
    Continuous,
}

impl Family {
    pub fn mode(self) -> Mode {
        match self {
            Family::LeftGuarding | Family::OneSided => Mode::OneSided,
            Family::Discrete { .. } => Mode::Discrete,
            Family::Continuous => Mode::Continuous,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub seed: u64,
    pub vertices: usize,
    pub points: usize,
    pub guards: usize,
    pub family: Family,
    pub unit_weights: bool,
}

impl GenParams {
    pub fn new(seed: u64, vertices: usize, points: usize, guards: usize, family: Family) -> Self {
        GenParams { seed, vertices, points, guards, family, unit_weights: false }
    }

    pub fn unit(mut self) -> Self {
        self.unit_weights = true;
        self
    }
}

pub fn random_terrain(rng: &mut impl Rng, vertices: usize) -> Terrain<Rational> {
    let mut x = 0i64;
    let raw: Vec<(Rational, Rational)> = (0..vertices.max(2))
        .map(|i| {
            if i > 0 {
                x += rng.gen_range(1..=3);
            }
            (scalar::int(x), scalar::int(rng.gen_range(0..=8)))
        })
        .collect();
    Terrain::new(raw).expect("strictly increasing integer abscissae")
}

pub fn random_point(rng: &mut impl Rng, terrain: &Terrain<Rational>) -> TerrainPoint<Rational> {
    let lo: Rational = terrain.x_min().clone();
    let span = terrain.x_max().clone() - lo.clone();
    let slots = (span * scalar::int::<Rational>(4)).to_integer();
    let slots: i64 = i64::try_from(slots).expect("small terrain");
    let a = rng.gen_range(0..slots);
    let b = rng.gen_range(a + 1..=slots);
    terrain.point_on(lo + scalar::ratio::<Rational>(a + b, 8)).expect("midpoint inside terrain")
}

fn random_weight(rng: &mut impl Rng, unit: bool) -> Rational {
    if unit {
        return scalar::int(1);
    }
    scalar::ratio(rng.gen_range(1..=6), rng.gen_range(1..=3))
}

pub fn generate_random(params: &GenParams) -> GuardingInstance<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let terrain = random_terrain(&mut rng, params.vertices);
    if params.family == Family::Continuous {
        return GuardingInstance::continuous(terrain);
    }

    let points: Vec<TerrainPoint<Rational>> = (0..params.points.max(1)).map(|_| random_point(&mut rng, &terrain)).collect();
    let mut locations: Vec<TerrainPoint<Rational>> = Vec::new();
    if let Family::Discrete { shared } = params.family {
        let mut on_points = points.clone();
        on_points.shuffle(&mut rng);
        locations.extend(on_points.into_iter().take(shared.min(params.guards)));
    }
    let mut attempts = 0;
    while locations.len() < params.guards.max(1) && attempts < 50 * params.guards.max(1) {
        attempts += 1;
        let g = random_point(&mut rng, &terrain);
        let clashes = matches!(params.family, Family::Discrete { .. }) && points.iter().any(|p| p.same_x(&g));
        if !clashes && !locations.iter().any(|h| h.same_x(&g)) {
            locations.push(g);
        }
    }

    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut both = Vec::new();
    for at in locations {
        let guard = Guard::new(at, random_weight(&mut rng, params.unit_weights));
        match params.family {
            Family::LeftGuarding => left.push(guard),
            Family::OneSided => match rng.gen_range(0..3) {
                0 => left.push(guard),
                1 => right.push(guard),
                _ => {
                    left.push(guard.clone());
                    right.push(guard);
                }
            },
            _ => both.push(guard),
        }
    }

    let coverable = |p: &TerrainPoint<Rational>| {
        left.iter().any(|g: &Guard<Rational>| terrain.covers(&g.at, Side::Left, p))
            || right.iter().any(|g| terrain.covers(&g.at, Side::Right, p))
            || both.iter().any(|g| terrain.covers(&g.at, Side::Both, p))
    };
    let points: Vec<_> = points.iter().filter(|p| coverable(p)).cloned().collect();

    GuardingInstance::new(terrain, params.family.mode(), points, left, right, both).expect("generated instance is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_fixed_seed() {
        for family in [Family::LeftGuarding, Family::OneSided, Family::Discrete { shared: 2 }, Family::Continuous] {
            let p = GenParams::new(42, 7, 10, 6, family);
            assert_eq!(generate_random(&p), generate_random(&p));
        }
    }

    #[test]
    fn two_vertex_terrain() {
        for seed in 0..20 {
            let inst = generate_random(&GenParams::new(seed, 2, 3, 2, Family::OneSided));
            assert_eq!(inst.terrain.len(), 2);
        }
    }

    #[test]
    fn discrete_overlap_control() {
        for seed in 0..30 {
            let disjoint = generate_random(&GenParams::new(seed, 8, 8, 6, Family::Discrete { shared: 0 }));
            assert!(!disjoint.has_overlap());
            let shared = generate_random(&GenParams::new(seed, 8, 8, 6, Family::Discrete { shared: 2 }));
            assert!(shared.has_overlap());
        }
    }

    #[test]
    fn everything_on_terrain_and_coverable() {
        for seed in 0..30 {
            let inst = generate_random(&GenParams::new(seed, 9, 12, 5, Family::LeftGuarding));
            for p in &inst.points {
                assert!(inst.terrain.is_on(p));
                assert!(inst.left_guards.iter().any(|g| inst.terrain.covers(&g.at, Side::Left, p)));
            }
        }
    }
}
