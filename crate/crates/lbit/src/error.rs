use thiserror::Error;

/// Errors raised by the operator algebra and the number-theoretic layers.
///
/// Everything here is a *validation* failure: the inputs named something that
/// does not exist in the finite universe (off-lattice exponent, bad dimension,
/// coordinate out of range). None of these are internal faults.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u64, right: u64 },

    #[error("dimension {dim} is not a power of two")]
    NotPowerOfTwo { dim: u64 },

    #[error("rows do not form a permutation: column {col} hit twice")]
    NotBijective { col: u64 },

    #[error("ambient dimension {ambient} is not a power-of-two multiple of {dim}")]
    BadReplication { dim: u64, ambient: u64 },

    #[error("n_tot = {n_tot} unsupported (need 2..=5; dense statistics need n_tot <= 4)")]
    UnsupportedConfig { n_tot: u32 },

    #[error("exponent {value} is not on the dyadic lattice (finest resolution 2^-{r_max})")]
    UndefinedExponent { value: String, r_max: u32 },

    #[error("circle coordinate {j} outside 1..={max}")]
    CoordinateOutOfRange { j: u32, max: u32 },

    #[error("cos(theta) = {value} is off the exponent lattice: no co-sequence exists for this orientation")]
    OffLattice { value: String },

    #[error("phi = pi*{angle} does not map to an integer circle coordinate")]
    NonRepresentablePhi { angle: String },

    #[error("cosine {value} outside [-1, 1]")]
    CosineOutOfRange { value: String },

    #[error("lbit assignment malformed: {reason}")]
    BadAssignment { reason: String },

    #[error("invalid orientation token `{token}` (expected one of +x, -x, +z, -z)")]
    BadOrientation { token: String },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
