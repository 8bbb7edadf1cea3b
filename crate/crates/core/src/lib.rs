//! Tight upper and lower bounds for the directed Hausdorff distance between
//! planar point sets when one or both sets are imprecise, i.e. every point
//! is only known to lie inside a disc.
//!
//! * [`upper`] computes `h_max` exactly for every input configuration.
//! * [`lower_exact`] computes `h_min(P~, Q)` exactly and `h_min(P, Q~)`
//!   exactly whenever the answer is below the small-distance threshold of
//!   pairwise disjoint discs.
//! * [`lower_approx`] approximates `h_min(P, Q~)` within a factor of 4 in
//!   general and 3 for disjoint discs of equal radius.
//! * [`oracle`] holds brute-force references used by the test suites.
//! * [`gadgets`] builds planar 3-SAT reduction instances.

pub mod error;
pub mod gadgets;
pub mod geometry;
pub mod lower_approx;
pub mod lower_exact;
pub mod matching;
pub mod oracle;
pub mod upper;

pub use error::{Error, Result};
pub use geometry::{
    circle_circle_intersections, closest_point_in_disc, directed_hausdorff, discs_common_point, farthest_point_in_disc,
    CircleIntersection, Disc, Point, Tolerance,
};
pub use lower_approx::{hmin_dispatch, ApproxResult, CoverRoutine};
pub use lower_exact::{independent_sets, place_together, IndependentSetsOutcome};
pub use upper::{hmax, UpperBoundResult};
