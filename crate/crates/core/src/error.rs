use thiserror::Error;

/// Errors produced by coloring construction, search, and verification.
#[derive(Debug, Error)]
pub enum Error {
    /// A clique-size target is below the supported minimum of 3.
    #[error("clique target k{index} = {size} is not supported; every target must be at least 3")]
    CliqueTargetTooSmall { index: usize, size: usize },

    /// No targets were supplied.
    #[error("at least one clique target is required")]
    NoTargets,

    /// More colors than the assignment-string alphabet (digits 1..9) can express.
    #[error("{colors} colors requested; at most {max} are supported")]
    TooManyColors { colors: usize, max: usize },

    /// Vertex (or integer-range) count above the fixed bitset capacity.
    #[error("{n} exceeds the supported maximum of {max}")]
    CapacityExceeded { n: u32, max: u32 },

    /// A difference or integer was assigned two colors.
    #[error("{what} {value} is colored more than once")]
    DuplicateElement { what: &'static str, value: u32 },

    /// A difference or integer in the required domain was left uncolored.
    #[error("{what} {value} is not colored")]
    MissingElement { what: &'static str, value: u32 },

    /// A difference or integer outside the required domain was listed.
    #[error("{what} {value} is out of range 1..={max}")]
    OutOfRangeElement {
        what: &'static str,
        value: u32,
        max: u32,
    },

    /// A color index outside 1..=r.
    #[error("color {color} is out of range 1..={colors}")]
    BadColor { color: usize, colors: usize },

    /// Incremental clique test called with a difference that is not the new maximum.
    #[error("new difference {new_diff} must exceed the current maximum {max}")]
    NewDiffNotLargest { new_diff: u32, max: u32 },

    /// Number of color classes does not match the number of targets.
    #[error("coloring has {colors} colors but {targets} targets were given")]
    ColorCountMismatch { colors: usize, targets: usize },

    /// A level grew past the memory budget and no beam cap was set.
    #[error(
        "level at {point} would hold {members} colorings (~{bytes} bytes), over the \
         {budget}-byte budget; set a beam cap to continue with a certified lower bound"
    )]
    LevelBudgetExceeded {
        point: u32,
        members: usize,
        bytes: u64,
        budget: u64,
    },

    /// Vertex list passed to tuple extraction is not a monochromatic clique.
    #[error("edge {{{a},{b}}} has color {found}, expected {expected}")]
    NotMonochromatic {
        a: u32,
        b: u32,
        expected: usize,
        found: usize,
    },

    /// Lemma-2 style comparison across mismatched or inexact outcomes.
    #[error("comparison requires two exact outcomes for identical targets")]
    IncomparableOutcomes,

    /// Vertex list passed to tuple extraction is malformed.
    #[error("clique vertex list invalid: {reason}")]
    BadCliqueVertices { reason: String },

    /// Malformed checkpoint file.
    #[error("checkpoint parse error at line {line}: {message}")]
    CheckpointParse { line: usize, message: String },

    /// Checkpoint I/O failure.
    #[error("checkpoint i/o: {0}")]
    CheckpointIo(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
