use proptest::prelude::*;

use terrain_guard::algos::{
    brute_force_optimum, continuous_four_approx, discrete_guarding, essential_segments, locations, one_sided_two_approx,
    uniform_left_guarding, verify_feasible, weighted_one_sided_optimal, EssentialSegments, Route, DEFAULT_CAP,
};
use terrain_guard::gen::{generate_random, Family, GenParams};
use terrain_guard::scalar;
use terrain_guard::{ExactInstance, ExactTerrain, Rational, Side};

fn q(n: i64) -> Rational {
    scalar::int(n)
}

fn left_instance(seed: u64, unit: bool) -> ExactInstance {
    let p = GenParams::new(seed, 2 + (seed % 10) as usize, 1 + (seed % 17) as usize, 1 + (seed % 12) as usize, Family::LeftGuarding);
    generate_random(&if unit { p.unit() } else { p })
}

fn constancy_holds(t: &ExactTerrain, seg: &EssentialSegments<Rational>) -> bool {
    seg.segments().all(|(a, b)| {
        let samples: Vec<_> = (1..=3)
            .map(|k| t.point_on(a.x().clone() + (b.x().clone() - a.x().clone()) * scalar::ratio::<Rational>(k, 4)).unwrap())
            .collect();
        t.vertices().iter().all(|g| {
            let first = t.sees(g, &samples[0]);
            samples.iter().all(|s| t.sees(g, s) == first)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn greedy_is_optimal_with_disjoint_witnesses(seed in any::<u64>()) {
        let inst = left_instance(seed, true);
        let guards = locations(&inst.left_guards);
        let greedy = uniform_left_guarding(&inst.terrain, &inst.points, &guards).unwrap();
        prop_assert!(verify_feasible(&inst, &greedy.solution).is_feasible());
        let opt = brute_force_optimum(&inst, DEFAULT_CAP).unwrap();
        prop_assert_eq!(&greedy.solution.cost, &opt.cost);
        prop_assert_eq!(greedy.witnesses.len(), greedy.solution.len());
        for g in &guards {
            let seen = greedy.witnesses.iter().filter(|p| inst.terrain.covers(g, Side::Left, p)).count();
            prop_assert!(seen <= 1);
        }
    }

    #[test]
    fn weighted_left_optimum_is_exact(seed in any::<u64>()) {
        let inst = left_instance(seed, false);
        let sol = weighted_one_sided_optimal(&inst.terrain, &inst.points, &inst.left_guards, Side::Left).unwrap();
        prop_assert!(verify_feasible(&inst, &sol).is_feasible());
        prop_assert_eq!(sol.cost, brute_force_optimum(&inst, DEFAULT_CAP).unwrap().cost);
    }

    #[test]
    fn one_sided_within_twice_lp_and_optimum(seed in any::<u64>()) {
        let inst = generate_random(&GenParams::new(seed, 2 + (seed % 9) as usize, 1 + (seed % 15) as usize, 1 + (seed % 8) as usize, Family::OneSided));
        let out = one_sided_two_approx(&inst.terrain, &inst.points, &inst.left_guards, &inst.right_guards).unwrap();
        prop_assert!(verify_feasible(&inst, &out.solution).is_feasible());
        let mut split: Vec<usize> = out.left_points.iter().chain(&out.right_points).copied().collect();
        split.sort_unstable();
        split.dedup();
        prop_assert_eq!(split, (0..inst.points.len()).collect::<Vec<_>>());
        prop_assert!(out.left_cost <= q(2) * out.lp_left_mass(&inst.left_guards));
        prop_assert!(out.right_cost <= q(2) * out.lp_right_mass(&inst.left_guards, &inst.right_guards));
        prop_assert!(out.solution.cost <= q(2) * out.lp_value().clone());
        let opt = brute_force_optimum(&inst, DEFAULT_CAP).unwrap();
        prop_assert!(out.lp_value() <= &opt.cost);
        prop_assert!(out.solution.cost <= q(2) * opt.cost);
    }

    #[test]
    fn discrete_within_guarantee(seed in any::<u64>(), shared in 0usize..3) {
        let inst = generate_random(&GenParams::new(seed, 2 + (seed % 9) as usize, 1 + (seed % 12) as usize, 1 + (seed % 10) as usize, Family::Discrete { shared }));
        let out = discrete_guarding(&inst.terrain, &inst.points, &inst.both_guards).unwrap();
        prop_assert!(verify_feasible(&inst, &out.solution).is_feasible());
        let opt = brute_force_optimum(&inst, DEFAULT_CAP).unwrap();
        prop_assert!(out.solution.cost <= q(out.guarantee()) * opt.cost.clone());
        match &out.route {
            Route::Disjoint(_) => prop_assert!(!inst.has_overlap()),
            Route::Overlap(run) => {
                prop_assert!(inst.has_overlap());
                prop_assert!(run.self_guard_cost(&inst.both_guards) <= run.self_guard_bound(&inst.both_guards));
                prop_assert!(run.residual_cost <= run.residual_bound(&inst.both_guards));
                prop_assert!(out.solution.cost <= q(5) * out.lp_value().clone());
                prop_assert!(out.lp_value() <= &opt.cost);
            }
        }
    }

    #[test]
    fn continuous_pipeline(seed in any::<u64>()) {
        let inst = generate_random(&GenParams::new(seed, 2 + (seed % 7) as usize, 0, 0, Family::Continuous));
        let t = &inst.terrain;
        let seg = essential_segments(t);
        prop_assert!(seg.breakpoints.len() <= EssentialSegments::<Rational>::breakpoint_bound(t.len()));
        prop_assert!(constancy_holds(t, &seg));
        let out = continuous_four_approx(t).unwrap();
        prop_assert!(verify_feasible(&inst, &out.solution).is_feasible());
        let opt = brute_force_optimum(&inst, DEFAULT_CAP).unwrap();
        prop_assert!(out.solution.cost <= q(2) * opt.cost);
    }

    #[test]
    fn mirrored_instances_cost_the_same(seed in any::<u64>()) {
        let inst = generate_random(&GenParams::new(seed, 2 + (seed % 9) as usize, 1 + (seed % 12) as usize, 1 + (seed % 8) as usize, Family::OneSided));
        let m = inst.mirrored();
        prop_assert_eq!(m.mirrored(), inst.clone());
        prop_assert_eq!(brute_force_optimum(&inst, DEFAULT_CAP).unwrap().cost, brute_force_optimum(&m, DEFAULT_CAP).unwrap().cost);

        let a = one_sided_two_approx(&inst.terrain, &inst.points, &inst.left_guards, &inst.right_guards).unwrap();
        let b = one_sided_two_approx(&m.terrain, &m.points, &m.left_guards, &m.right_guards).unwrap();
        prop_assert_eq!(a.lp_value(), b.lp_value());
        prop_assert!(b.solution.cost <= q(2) * b.lp_value().clone());
        prop_assert!(verify_feasible(&m, &a.solution.mirrored()).is_feasible());
    }

    #[test]
    fn mirrored_greedy_and_continuous(seed in any::<u64>()) {
        let inst = left_instance(seed, true);
        let m = inst.mirrored();
        let greedy = uniform_left_guarding(&inst.terrain, &inst.points, &locations(&inst.left_guards)).unwrap();
        let right = weighted_one_sided_optimal(&m.terrain, &m.points, &m.right_guards, Side::Right).unwrap();
        prop_assert_eq!(&greedy.solution.cost, &right.cost);
        let weighted = left_instance(seed, false);
        let wm = weighted.mirrored();
        let left = weighted_one_sided_optimal(&weighted.terrain, &weighted.points, &weighted.left_guards, Side::Left).unwrap();
        let mirrored_right = weighted_one_sided_optimal(&wm.terrain, &wm.points, &wm.right_guards, Side::Right).unwrap();
        prop_assert_eq!(&left.cost, &mirrored_right.cost);
        prop_assert!(verify_feasible(&wm, &left.mirrored()).is_feasible());

        let t = &inst.terrain;
        let seg = essential_segments(t);
        let mirrored_seg = essential_segments(&t.mirrored());
        let mut xs: Vec<Rational> = mirrored_seg.breakpoints.iter().map(|p| -p.x().clone()).collect();
        xs.reverse();
        prop_assert_eq!(xs, seg.breakpoints.iter().map(|p| p.x().clone()).collect::<Vec<_>>());
    }
}

#[test]
fn mirrored_rounding_costs_match_on_fixed_seeds() {
    for seed in 0..200u64 {
        let sizes = (2 + (seed % 9) as usize, 1 + (seed % 12) as usize, 1 + (seed % 8) as usize);
        let inst = generate_random(&GenParams::new(seed, sizes.0, sizes.1, sizes.2, Family::OneSided));
        let m = inst.mirrored();
        let a = one_sided_two_approx(&inst.terrain, &inst.points, &inst.left_guards, &inst.right_guards).unwrap();
        let b = one_sided_two_approx(&m.terrain, &m.points, &m.left_guards, &m.right_guards).unwrap();
        assert_eq!(a.solution.cost, b.solution.cost, "one-sided seed {seed}");

        let inst = generate_random(&GenParams::new(seed, sizes.0, sizes.1, sizes.2, Family::Discrete { shared: 1 }));
        let m = inst.mirrored();
        let a = discrete_guarding(&inst.terrain, &inst.points, &inst.both_guards).unwrap();
        let b = discrete_guarding(&m.terrain, &m.points, &m.both_guards).unwrap();
        assert_eq!(a.solution.cost, b.solution.cost, "discrete seed {seed}");
    }
}

#[test]
fn mirrored_continuous_runs_respect_the_bound() {
    for seed in 0..60u64 {
        let t = generate_random(&GenParams::new(seed, 2 + (seed % 7) as usize, 0, 0, Family::Continuous)).terrain;
        let m = t.mirrored();
        let opt = brute_force_optimum(&ExactInstance::continuous(m.clone()), DEFAULT_CAP).unwrap().cost;
        assert_eq!(opt, brute_force_optimum(&ExactInstance::continuous(t.clone()), DEFAULT_CAP).unwrap().cost);
        let out = continuous_four_approx(&m).unwrap();
        assert!(out.solution.cost <= q(2) * opt);
        assert!(verify_feasible(&ExactInstance::continuous(m), &out.solution).is_feasible());
    }
}
