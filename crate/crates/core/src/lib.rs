//! Lower bounds on the minimal number of convex components of a compact set.
//!
//! A compact set `E` that is a finite union of convex bodies can be covered by
//! at least `k_min(E)` of them. This crate evaluates the classic perimeter
//! ratio bound, its planar quantitative refinement and the sectional-radius
//! bound in every dimension, on top of an exact-at-desk-scale polytope kernel
//! for `n = 2, 3` and product formulas for `n >= 4`.
//!
//! Layout:
//!
//! - [`geometry`]: points, half-spaces, convex polytopes (hull, measures,
//!   clipping, sections, distances, nested Hausdorff distance).
//! - [`union`]: finite unions of polytopes, boundary measure of the union,
//!   a Monte-Carlo oracle, and the product (coarea) formula.
//! - [`bounds`]: the estimators and the witness certification.
//! - [`gallery`]: parametric example scenes with closed forms.
//! - [`decomposer`]: greedy convex decomposition for 2D upper bounds.
//! - [`cli`]: scene and report I/O, command runners and SVG figures.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod bounds;
pub mod cli;
pub mod decomposer;
pub mod error;
pub mod gallery;
pub mod geometry;
pub mod union;

pub use error::{Error, Result};
pub use geometry::{ConvexPolytope, Direction, HalfSpace, Point};
pub use union::{ProductSolid, SolidUnion};
