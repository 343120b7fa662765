//! LP-rounding approximation algorithms for guarding 1.5D terrains.
//!
//! Everything is generic over [`Scalar`]; the guarantees are stated for the
//! exact instantiation [`Rational`], for which the aliases below exist.
//!
//! ```
//! use terrain_guard::{algos, scalar, ExactTerrain, Rational};
//!
//! let q = |n: i64| scalar::int::<Rational>(n);
//! let terrain = ExactTerrain::new([(q(0), q(4)), (q(2), q(0)), (q(4), q(2)), (q(6), q(0)), (q(8), q(4))]).unwrap();
//! let out = algos::continuous_four_approx(&terrain).unwrap();
//! assert!(out.solution.cost <= q(2) * out.one_sided.lp_value().clone());
//! ```

pub mod algos;
pub mod covmat;
pub mod error;
pub mod gen;
pub mod geometry;
pub mod lpcore;
pub mod scalar;

pub use error::{Error, Result};
pub use geometry::{Side, Terrain, TerrainPoint};
pub use scalar::Scalar;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

pub type ExactTerrain = Terrain<Rational>;
pub type ExactPoint = TerrainPoint<Rational>;
pub type ExactMatrix = covmat::VisibilityMatrix<Rational>;
pub type ExactLp = lpcore::CoveringLp<Rational>;
pub type ExactFractional = lpcore::FractionalSolution<Rational>;
pub type ExactGuard = algos::Guard<Rational>;
pub type ExactInstance = algos::GuardingInstance<Rational>;
pub type ExactSolution = algos::Solution<Rational>;

pub type FloatTerrain = Terrain<f64>;
pub type FloatLp = lpcore::CoveringLp<f64>;
