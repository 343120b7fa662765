use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use terrain_guard::covmat::{visibility_sets, VisibilityMatrix};
use terrain_guard::gen::{random_point, random_terrain};
use terrain_guard::scalar;
use terrain_guard::{ExactPoint, ExactTerrain, Rational, Side};

fn sample(rng: &mut ChaCha8Rng, t: &ExactTerrain, k: usize) -> Vec<ExactPoint> {
    let mut pts: Vec<ExactPoint> = (0..k).map(|_| random_point(rng, t)).collect();
    pts.extend(t.vertices().iter().cloned());
    pts.sort_by(|a, b| a.cmp_x(b));
    pts.dedup_by(|a, b| a.same_x(b));
    pts
}

#[test]
fn crossing_sightlines_imply_outer_sightline() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0usize;
    for _ in 0..120 {
        let n = rng.gen_range(2..=20);
        let t = random_terrain(&mut rng, n);
        let pts = sample(&mut rng, &t, 12);
        for _ in 0..200 {
            let mut idx: Vec<usize> = (0..4).map(|_| rng.gen_range(0..pts.len())).collect();
            idx.sort_unstable();
            idx.dedup();
            if idx.len() < 4 {
                continue;
            }
            let (a, b, c, d) = (&pts[idx[0]], &pts[idx[1]], &pts[idx[2]], &pts[idx[3]]);
            if t.sees(a, c) && t.sees(b, d) {
                assert!(t.sees(a, d), "a={a} b={b} c={c} d={d} on {:?}", t.vertices());
            }
            checked += 1;
        }
    }
    assert!(checked >= 10_000, "only {checked} quadruples");
}

#[test]
fn sees_is_reflexive_symmetric_and_scale_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let factors = [scalar::ratio::<Rational>(3, 7), scalar::int(5), scalar::ratio(22, 3)];
    for _ in 0..60 {
        let n = rng.gen_range(2..=12);
        let t = random_terrain(&mut rng, n);
        let pts = sample(&mut rng, &t, 8);
        for w in t.vertices().windows(2) {
            assert!(t.sees(&w[0], &w[1]));
        }
        for p in &pts {
            assert!(t.sees(p, p));
            for q in &pts {
                assert_eq!(t.sees(p, q), t.sees(q, p));
                for f in &factors {
                    let s = t.scaled(f);
                    let (ps, qs) = (ExactTerrain::scale_point(p, f), ExactTerrain::scale_point(q, f));
                    assert_eq!(s.sees(&ps, &qs), t.sees(p, q));
                }
            }
        }
    }
}

#[test]
fn matrix_agrees_with_visibility_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=10);
        let t = random_terrain(&mut rng, n);
        let points: Vec<_> = (0..rng.gen_range(1..=8)).map(|_| random_point(&mut rng, &t)).collect();
        let guards: Vec<_> = (0..rng.gen_range(1..=6)).map(|_| random_point(&mut rng, &t)).collect();
        let sets = visibility_sets(&t, &points, &guards);
        let left = VisibilityMatrix::build_one_sided(&t, &points, &guards, Side::Left);
        let right = VisibilityMatrix::build_one_sided(&t, &points, &guards, Side::Right);
        let both = VisibilityMatrix::build_one_sided(&t, &points, &guards, Side::Both);
        for (i, s) in sets.iter().enumerate() {
            for j in 0..guards.len() {
                assert_eq!(left.get(i, j), s.left.contains(&j));
                assert_eq!(right.get(i, j), s.right.contains(&j));
                assert_eq!(both.get(i, j), s.all.contains(&j));
            }
        }
    }
}

#[test]
fn mirroring_swaps_left_and_right_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let t = random_terrain(&mut rng, n);
        let points: Vec<_> = (0..6).map(|_| random_point(&mut rng, &t)).collect();
        let guards: Vec<_> = (0..5).map(|_| random_point(&mut rng, &t)).collect();
        let m = t.mirrored();
        let mp: Vec<_> = points.iter().map(|p| p.mirrored()).collect();
        let mg: Vec<_> = guards.iter().map(|g| g.mirrored()).collect();
        let left = VisibilityMatrix::build_one_sided(&t, &points, &guards, Side::Left);
        let mirrored_right = VisibilityMatrix::build_one_sided(&m, &mp, &mg, Side::Right);
        assert_eq!(left.entries(), mirrored_right.entries());
        assert_eq!(left.count_ones(), mirrored_right.count_ones());
    }
}
