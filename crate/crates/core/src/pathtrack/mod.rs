//! Certified tracking of fiber roots along paths in the `x`-plane, and the
//! lasso systems those paths come from.

mod ball;
mod fiber;
mod lasso;
mod realcert;
mod series;
mod tracker;

pub use fiber::{track_fiber, track_lassos, LassoCrossing, Trajectory, CHORDS_PER_QUARTER};
pub use lasso::{
    build_lasso_system, default_epsilon, principal_real_value, sort_singular_values, LassoPath, PathPiece,
    SingularValue,
};
pub use realcert::{certify_real_segment, AlignmentCandidate, RealSegmentCertificate};
pub use series::root_series;
pub use tracker::{fiber_positions, track_segment, CrossingEvent, FiberFamily, Sample, SegmentTrack, TrackerConfig};
