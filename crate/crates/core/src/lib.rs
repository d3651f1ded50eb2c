//! Exact combinatorial geometry of k-point-deep hyperplane cuts: counting
//! oriented facets of finite point sets, lower bounds on their prefix sums,
//! configurations meeting those bounds, and the structural machinery
//! (half-nets, centerpoints, convex layers) tied to them.
//!
//! All computation is exact: points carry rational coordinates and every
//! geometric decision reduces to the sign of an integer determinant.

pub mod bounds;
pub mod conjecture;
pub mod construct;
pub mod count;
pub mod geom;
pub mod structure;

pub use geom::{GeomError, Point, PointSet, Rational};
