//! Exact planar geometry: rationals, points, orientation, convex hulls and
//! the join/meet of convex polytopes.

mod config;
mod point;
mod polytope;
mod rational;

pub use config::{ConfigError, Configuration};
pub use point::{between, collinear, cross, orient, Point};
pub use polytope::{convex_hull, join, meet, Polytope, PolytopeKind};
pub use rational::{ParseRationalError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("points must be pairwise distinct")]
    NotDistinct,
}
