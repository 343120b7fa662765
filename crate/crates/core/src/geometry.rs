//! Exact 1.5D terrains and the visibility predicate.
//!
//! A terrain is an x-monotone polygonal chain. Two points on it see each
//! other when the segment joining them never passes strictly below the
//! chain. Because the chain is piecewise linear, it is enough to test the
//! vertices lying between the two abscissae against the segment.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Direction restriction of a guard relative to the points it covers.
///
/// `Left` guards sit strictly to the left of what they cover, `Right` guards
/// strictly to the right, and `Both` guards cover anything they see
/// (including their own location).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
    Both,
}

impl Side {
    pub fn mirrored(self) -> Self {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::Both => Side::Both,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Both => "both",
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "left" | "L" => Ok(Side::Left),
            "right" | "R" => Ok(Side::Right),
            "both" | "B" => Ok(Side::Both),
            other => Err(format!("unknown side {other:?}")),
        }
    }
}

/// A point of a terrain, identified by its abscissa.
#[derive(Clone, Debug, PartialEq)]
pub struct TerrainPoint<T> {
    x: T,
    y: T,
}

impl<T: Scalar> TerrainPoint<T> {
    pub fn x(&self) -> &T {
        &self.x
    }

    pub fn y(&self) -> &T {
        &self.y
    }

    /// Order along the chain.
    pub fn cmp_x(&self, other: &Self) -> Ordering {
        scalar::cmp(&self.x, &other.x)
    }

    pub fn same_x(&self, other: &Self) -> bool {
        self.x == other.x
    }

    /// Image under `x -> -x`.
    pub fn mirrored(&self) -> Self {
        TerrainPoint { x: -self.x.clone(), y: self.y.clone() }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (scalar::to_f64(&self.x), scalar::to_f64(&self.y))
    }
}

impl<T: Scalar> std::fmt::Display for TerrainPoint<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the cross product `(b - a) x (c - a)`: `Greater` when `c` lies to
/// the left of the directed line `a -> b`.
pub fn orientation<T: Scalar>(a: &TerrainPoint<T>, b: &TerrainPoint<T>, c: &TerrainPoint<T>) -> Ordering {
    let lhs = (b.x.clone() - a.x.clone()) * (c.y.clone() - a.y.clone());
    let rhs = (b.y.clone() - a.y.clone()) * (c.x.clone() - a.x.clone());
    scalar::cmp(&lhs, &rhs)
}

/// An x-monotone polygonal chain with at least two vertices and no three
/// consecutive collinear vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct Terrain<T> {
    vertices: Vec<TerrainPoint<T>>,
}

impl<T: Scalar> Terrain<T> {
    /// Validates the chain and drops vertices that are collinear with their
    /// neighbours.
    pub fn new(raw: impl IntoIterator<Item = (T, T)>) -> Result<Self> {
        let raw: Vec<(T, T)> = raw.into_iter().collect();
        if raw.len() < 2 {
            return Err(Error::TooFewVertices(raw.len()));
        }
        for (index, pair) in raw.windows(2).enumerate() {
            if pair[1].0 <= pair[0].0 {
                return Err(Error::NotMonotone { index: index + 1, x: pair[1].0.to_string() });
            }
        }

        let mut vertices: Vec<TerrainPoint<T>> = Vec::with_capacity(raw.len());
        for (x, y) in raw {
            let v = TerrainPoint { x, y };
            while vertices.len() >= 2 {
                let n = vertices.len();
                if orientation(&vertices[n - 2], &vertices[n - 1], &v) == Ordering::Equal {
                    vertices.pop();
                } else {
                    break;
                }
            }
            vertices.push(v);
        }
        Ok(Terrain { vertices })
    }

    pub fn vertices(&self) -> &[TerrainPoint<T>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn x_min(&self) -> &T {
        &self.vertices[0].x
    }

    pub fn x_max(&self) -> &T {
        &self.vertices[self.vertices.len() - 1].x
    }

    pub fn contains_x(&self, x: &T) -> bool {
        x >= self.x_min() && x <= self.x_max()
    }

    /// Lifts an abscissa onto the chain.
    pub fn point_on(&self, x: T) -> Result<TerrainPoint<T>> {
        if !self.contains_x(&x) {
            return Err(Error::OutOfRange {
                x: x.to_string(),
                min: self.x_min().to_string(),
                max: self.x_max().to_string(),
            });
        }
        let i = self.vertices.partition_point(|v| v.x < x);
        let hi = &self.vertices[i];
        if hi.x == x {
            return Ok(hi.clone());
        }
        let lo = &self.vertices[i - 1];
        let t = (x.clone() - lo.x.clone()) / (hi.x.clone() - lo.x.clone());
        let y = lo.y.clone() + t * (hi.y.clone() - lo.y.clone());
        Ok(TerrainPoint { x, y })
    }

    /// Whether `p` is exactly on the chain.
    pub fn is_on(&self, p: &TerrainPoint<T>) -> bool {
        self.point_on(p.x.clone()).map(|q| q.y == p.y).unwrap_or(false)
    }

    /// Vertices whose abscissa lies in `[lo, hi]`.
    pub fn vertices_between(&self, lo: &T, hi: &T) -> &[TerrainPoint<T>] {
        let start = self.vertices.partition_point(|v| &v.x < lo);
        let end = self.vertices.partition_point(|v| &v.x <= hi);
        &self.vertices[start..end.max(start)]
    }

    /// The visibility relation. Reflexive and symmetric.
    pub fn sees(&self, p: &TerrainPoint<T>, q: &TerrainPoint<T>) -> bool {
        let (a, b) = if p.x <= q.x { (p, q) } else { (q, p) };
        if a.x == b.x {
            return true;
        }
        // a is left of b, so "strictly above ab" is a left turn.
        self.vertices_between(&a.x, &b.x)
            .iter()
            .all(|v| orientation(a, b, v) != Ordering::Greater)
    }

    /// Whether `guard`, restricted to `side`, covers `point`.
    pub fn covers(&self, guard: &TerrainPoint<T>, side: Side, point: &TerrainPoint<T>) -> bool {
        let placed = match side {
            Side::Left => guard.x < point.x,
            Side::Right => guard.x > point.x,
            Side::Both => true,
        };
        placed && self.sees(guard, point)
    }

    /// Reflection through the y-axis.
    pub fn mirrored(&self) -> Self {
        Terrain { vertices: self.vertices.iter().rev().map(TerrainPoint::mirrored).collect() }
    }

    /// Uniform scaling of both coordinates by a positive factor.
    pub fn scaled(&self, factor: &T) -> Self {
        assert!(scalar::positive(factor), "scale factor must be positive");
        Terrain {
            vertices: self
                .vertices
                .iter()
                .map(|v| TerrainPoint { x: v.x.clone() * factor.clone(), y: v.y.clone() * factor.clone() })
                .collect(),
        }
    }

    /// Maps a point of this terrain to the corresponding point of `self.scaled(factor)`.
    pub fn scale_point(p: &TerrainPoint<T>, factor: &T) -> TerrainPoint<T> {
        TerrainPoint { x: p.x.clone() * factor.clone(), y: p.y.clone() * factor.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        scalar::int(n)
    }

    fn terrain(coords: &[(i64, i64)]) -> Terrain<Rational> {
        Terrain::new(coords.iter().map(|&(x, y)| (q(x), q(y)))).unwrap()
    }

    fn w_terrain() -> Terrain<Rational> {
        terrain(&[(0, 4), (2, 0), (4, 2), (6, 0), (8, 4)])
    }

    fn at(t: &Terrain<Rational>, x: i64) -> TerrainPoint<Rational> {
        t.point_on(q(x)).unwrap()
    }

    /// Walks the segment in small exact steps and compares against the chain.
    fn sampled_sees(t: &Terrain<Rational>, p: &TerrainPoint<Rational>, r: &TerrainPoint<Rational>) -> bool {
        let steps = 960;
        (0..=steps).all(|k| {
            let s = scalar::ratio::<Rational>(k, steps);
            let x = p.x().clone() + (r.x().clone() - p.x().clone()) * s.clone();
            let y = p.y().clone() + (r.y().clone() - p.y().clone()) * s;
            &y >= t.point_on(x).unwrap().y()
        })
    }

    #[test]
    fn minimal_flat_chain() {
        assert_eq!(terrain(&[(0, 0), (10, 0)]).len(), 2);
    }

    #[test]
    fn collinear_middle_vertex_is_dropped() {
        let t = terrain(&[(0, 0), (5, 0), (10, 0)]);
        assert_eq!(t.len(), 2);
        assert_eq!(t.vertices()[1].x(), &q(10));
    }

    #[test]
    fn collinear_runs_collapse() {
        let t = terrain(&[(0, 0), (1, 1), (2, 2), (3, 3), (4, 0)]);
        let xs: Vec<_> = t.vertices().iter().map(|v| v.x().clone()).collect();
        assert_eq!(xs, vec![q(0), q(3), q(4)]);
    }

    #[test]
    fn vertical_chain_rejected() {
        let err = Terrain::new(vec![(q(0), q(0)), (q(0), q(1))]).unwrap_err();
        assert!(matches!(err, Error::NotMonotone { index: 1, .. }));
    }

    #[test]
    fn single_vertex_rejected() {
        assert_eq!(Terrain::new(vec![(q(0), q(0))]).unwrap_err(), Error::TooFewVertices(1));
    }

    #[test]
    fn point_on_interpolates() {
        let t = terrain(&[(0, 0), (4, 4)]);
        assert_eq!(at(&t, 2).y(), &q(2));
        let t = terrain(&[(0, 4), (2, 0), (4, 2)]);
        assert_eq!(at(&t, 3).y(), &q(1));
        let half = t.point_on(scalar::ratio(1, 2)).unwrap();
        assert_eq!(half.y(), &q(3));
    }

    #[test]
    fn point_on_out_of_range() {
        let t = terrain(&[(0, 0), (4, 4)]);
        assert!(matches!(t.point_on(q(5)), Err(Error::OutOfRange { .. })));
        assert!(matches!(t.point_on(q(-1)), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn w_terrain_visibility() {
        let t = w_terrain();
        assert!(t.sees(&at(&t, 0), &at(&t, 8)));
        assert!(!t.sees(&at(&t, 2), &at(&t, 6)));
        assert!(!t.sees(&at(&t, 0), &at(&t, 6)));
        assert!(t.sees(&at(&t, 0), &at(&t, 4)));
    }

    #[test]
    fn w_terrain_agrees_with_sampling() {
        let t = w_terrain();
        for a in 0..=8 {
            for b in 0..=8 {
                let (p, r) = (at(&t, a), at(&t, b));
                assert_eq!(t.sees(&p, &r), sampled_sees(&t, &p, &r), "x={a} vs x={b}");
            }
        }
    }

    #[test]
    fn reflexive_and_adjacent() {
        let t = w_terrain();
        for v in t.vertices() {
            assert!(t.sees(v, v));
        }
        for pair in t.vertices().windows(2) {
            assert!(t.sees(&pair[0], &pair[1]));
        }
    }

    #[test]
    fn covers_is_strict_for_one_sided() {
        let t = terrain(&[(0, 0), (10, 0)]);
        let p = at(&t, 4);
        assert!(t.covers(&p, Side::Both, &p));
        assert!(!t.covers(&p, Side::Left, &p));
        assert!(!t.covers(&p, Side::Right, &p));
        assert!(t.covers(&at(&t, 2), Side::Left, &p));
        assert!(!t.covers(&at(&t, 2), Side::Right, &p));
    }

    #[test]
    fn mirror_reverses_order() {
        let t = w_terrain().mirrored();
        assert_eq!(t.x_min(), &q(-8));
        assert_eq!(t.x_max(), &q(0));
        assert!(!t.sees(&at(&t, -2), &at(&t, -6)));
    }

    #[test]
    fn works_over_f64_for_integer_input() {
        let t = Terrain::new(vec![(0.0, 4.0), (2.0, 0.0), (4.0, 2.0), (6.0, 0.0), (8.0, 4.0)]).unwrap();
        let a = t.point_on(0.0).unwrap();
        let b = t.point_on(8.0).unwrap();
        let c = t.point_on(6.0).unwrap();
        assert!(t.sees(&a, &b));
        assert!(!t.sees(&a, &c));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_terrain() -> impl Strategy<Value = Terrain<Rational>> {
            proptest::collection::vec((1i64..4, -6i64..6), 2..10).prop_map(|steps| {
                let mut x = 0;
                Terrain::new(steps.into_iter().map(|(dx, y)| {
                    x += dx;
                    (q(x), q(y))
                }))
                .unwrap()
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn symmetric_and_scale_invariant(t in arb_terrain(), a in 0u32..1000, b in 0u32..1000, k in 1i64..7, d in 1i64..5) {
                let span = t.x_max().clone() - t.x_min().clone();
                let lift = |u: u32| t.point_on(t.x_min().clone() + span.clone() * scalar::ratio::<Rational>(u as i64, 999)).unwrap();
                let (p, r) = (lift(a), lift(b));
                prop_assert_eq!(t.sees(&p, &r), t.sees(&r, &p));
                let f = scalar::ratio::<Rational>(k, d);
                let s = t.scaled(&f);
                prop_assert_eq!(t.sees(&p, &r), s.sees(&Terrain::scale_point(&p, &f), &Terrain::scale_point(&r, &f)));
                let m = t.mirrored();
                prop_assert_eq!(t.sees(&p, &r), m.sees(&p.mirrored(), &r.mirrored()));
            }
        }
    }
}
