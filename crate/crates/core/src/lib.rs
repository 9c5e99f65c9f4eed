//! Exact two-dimensional integral rectangle packing built around the
//! corner-occupying move.
//!
//! Rectangles have integer sides and may be rotated by 90°. The crate
//! provides:
//!
//! - [`geometry`]: placements, overlap, the over / right-of relations.
//! - [`stability`]: bottom-left stability and compaction to a stable packing.
//! - [`corners`]: bottom-left corners of a partial packing.
//! - [`decompose`]: escape search and corner-occupying placement orders.
//! - [`solver`]: a complete depth-first feasibility search.
//! - [`oracle`]: brute-force references for testing.
//! - [`space3d`]: 3D boxes and a layout where no box can escape.
//! - [`generate`]: feasible random instances.

pub mod corners;
pub mod decompose;
pub mod error;
pub mod generate;
pub mod geometry;
pub mod oracle;
pub mod solver;
pub mod space3d;
pub mod stability;

pub use corners::{apply_action, enumerate_corners, supporting_rects, Corner, CornerAction, Support};
pub use decompose::{extraction_order, find_escaper, placement_order, EscapeChain, PlacementOrder};
pub use error::{PackError, Result};
pub use generate::GenMode;
pub use geometry::{
    free_directions, is_feasible, is_over, is_right_of, l_value, outside_area, overlap_area,
    total_overlap, Container, FreeDirections, Instance, Layout, Packing, PartialPacking,
    PlacedRect, Placement, RectDims,
};
pub use oracle::{oracle_corners, oracle_feasible, OracleLimits};
pub use solver::{
    certify, quick_reject, solve, RectOrder, RejectReason, SolveResult, SolveStats, SolveStatus,
    SolverConfig,
};
pub use stability::{
    compact, is_bottom_left_stable, is_bottom_left_stable_rect, max_down_slide, max_left_slide,
    CompactionTrace,
};
