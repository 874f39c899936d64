use alloc::string::String;
use core::fmt;

/// Errors reported by the analysis and search kernels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A matrix with no nonempty entry defines no code.
    EmptyMatrix,
    /// A variable node of weight zero (all-null column).
    ZeroWeightColumn { col: usize },
    /// An entry lists the same exponent twice.
    DuplicateExponent { row: usize, col: usize },
    /// Matrix dimensions do not line up.
    DimensionMismatch { detail: String },
    /// Expansion to a terminated parity-check matrix needs at least one block.
    ZeroBlocks,
    /// Girth caps are limited to 4, 6, 8, 10 or 12.
    InvalidGirthCap { cap: u32 },
    /// Spectrum enumeration is limited to even lengths between 4 and 12.
    InvalidSpectrumLength { len: u32 },
    /// The terminated window is too short to contain every short cycle.
    WindowTooSmall { blocks: usize, needed: usize },
    /// Operation requires a monomial (Type-1) matrix without null entries.
    NotMonomial,
    /// Operation is defined for a specific shape only.
    WrongShape { detail: String },
    /// No bound for this (family, girth, w, c) combination is cataloged.
    NoBoundInCatalog { detail: String },
    /// Girth 8 is unattainable for this shape.
    GirthImpossible { detail: String },
    /// The matrix girth is below the requested target.
    GirthBelowTarget { girth: u32, target: u32 },
    /// Invalid bound query (weights, girth parity, ...).
    InvalidQuery { detail: String },
    /// Construction needs a larger block length.
    BlockLengthTooSmall { a: usize, min: usize },
    /// No stored trinomial group for this block length.
    NoTrinomialGroup { a: usize },
    /// Transform multiplier must be coprime with the modulus.
    NotCoprime { multiplier: u64, modulus: u64 },
    /// Transform modulus must exceed every exponent.
    ModulusTooSmall { modulus: u64, max_entry: u32 },
    /// Multiplying null entries is undefined.
    NullEntryWithMultiplier,
    /// A permutation vector is not a bijection of the expected size.
    BadPermutation { detail: String },
    /// An empty search scan range.
    EmptyScanRange,
    /// Search shape not supported by this kernel.
    UnsupportedSearch { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyMatrix => write!(f, "matrix defines no code (every entry is null)"),
            Error::ZeroWeightColumn { col } => {
                write!(f, "zero-weight variable node (column {col})")
            }
            Error::DuplicateExponent { row, col } => {
                write!(f, "duplicate exponent in entry ({row}, {col})")
            }
            Error::DimensionMismatch { detail } => write!(f, "dimension mismatch: {detail}"),
            Error::ZeroBlocks => write!(f, "expansion needs at least one block column"),
            Error::InvalidGirthCap { cap } => {
                write!(f, "girth cap must be one of 4, 6, 8, 10, 12 (got {cap})")
            }
            Error::InvalidSpectrumLength { len } => {
                write!(f, "spectrum length must be even and between 4 and 12 (got {len})")
            }
            Error::WindowTooSmall { blocks, needed } => write!(
                f,
                "window smaller than cycle horizon ({blocks} blocks, need at least {needed})"
            ),
            Error::NotMonomial => write!(f, "operation requires a monomial matrix"),
            Error::WrongShape { detail } => write!(f, "unsupported shape: {detail}"),
            Error::NoBoundInCatalog { detail } => write!(f, "no bound in catalog: {detail}"),
            Error::GirthImpossible { detail } => write!(f, "girth 8 impossible: {detail}"),
            Error::GirthBelowTarget { girth, target } => {
                write!(f, "girth {girth} is below the requested target {target}")
            }
            Error::InvalidQuery { detail } => write!(f, "invalid query: {detail}"),
            Error::BlockLengthTooSmall { a, min } => {
                write!(f, "block length a = {a} too small (need at least {min})")
            }
            Error::NoTrinomialGroup { a } => {
                write!(f, "no trinomial group in corpus for a = {a}")
            }
            Error::NotCoprime { multiplier, modulus } => {
                write!(f, "multiplier {multiplier} is not coprime with modulus {modulus}")
            }
            Error::ModulusTooSmall { modulus, max_entry } => write!(
                f,
                "modulus {modulus} must exceed the largest exponent {max_entry}"
            ),
            Error::NullEntryWithMultiplier => {
                write!(f, "multiplier transforms are undefined on null entries")
            }
            Error::BadPermutation { detail } => write!(f, "bad permutation: {detail}"),
            Error::EmptyScanRange => write!(f, "empty scan range"),
            Error::UnsupportedSearch { detail } => write!(f, "unsupported search: {detail}"),
        }
    }
}

impl core::error::Error for Error {}
