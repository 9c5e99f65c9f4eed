use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackError {
    #[error("{field} must be at least 1, got {value}")]
    InvalidDimension { field: &'static str, value: u32 },

    #[error("expected {expected} placements, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("rectangle index {index} out of range for {len} rectangles")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("packing is infeasible (total overlap {overlap})")]
    Infeasible { overlap: u64 },

    #[error("rectangle {} is not bottom-left stable; compact the packing first", .index + 1)]
    NotStable { index: usize },

    #[error("rectangle {} is already placed", .index + 1)]
    AlreadyPlaced { index: usize },

    #[error("({x}, {y}, rotated={rotated}) is not a bottom-left corner for rectangle {} in the current layout", .index + 1)]
    StaleCorner {
        index: usize,
        x: u32,
        y: u32,
        rotated: bool,
    },

    #[error("layout has no placed rectangles")]
    EmptyLayout,

    /// An internal invariant of the escape search or placement-order
    /// construction failed. Indicates a defect, never bad input.
    #[error("internal contradiction: {0}")]
    Contradiction(String),

    #[error("oracle state limit of {limit} exceeded")]
    OracleCapacity { limit: u64 },

    #[error("cannot generate {count} rectangles in a {width}x{height} container")]
    ImpossibleParameters { width: u32, height: u32, count: usize },
}

pub type Result<T, E = PackError> = std::result::Result<T, E>;
