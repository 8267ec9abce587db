use thiserror::Error;

/// Everything that can go wrong across the crate.
///
/// Closed-form routines distinguish "you asked outside the proven range"
/// ([`Error::BeyondEnvelope`], [`Error::NoDimensionRow`]) from genuine
/// domain errors; callers are expected to fall back to the brute-force path
/// for the former.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent m = {m} outside the supported range [2, 62]")]
    ExponentRange { m: u32 },

    #[error("residue {x} out of range for n = {n}")]
    ResidueRange { x: u64, n: u64 },

    #[error("the zero residue is not a valid argument here")]
    ZeroResidue,

    #[error("even residue {x} never leads a coset")]
    EvenResidue { x: u64 },

    #[error("designed distance {delta} outside [2, {n}]")]
    DeltaRange { delta: u64, n: u64 },

    #[error("closed forms require odd delta, got {delta}")]
    EvenDelta { delta: u64 },

    #[error("m = {m} is divisible by 8; no closed-form family applies")]
    UnsupportedFamily { m: u32 },

    #[error("m = {m} sits below its family floor (t = {t}, need t >= {floor})")]
    FamilyFloor { m: u32, t: u32, floor: u32 },

    #[error("x = {x} lies outside every proven interval for m = {m}")]
    BeyondEnvelope { x: u64, m: u32 },

    #[error("no closed dimension row covers delta = {delta} for m = {m}")]
    NoDimensionRow { delta: u64, m: u32 },

    #[error("partition parameter t = {t} outside [{floor}, {cap}]")]
    PartitionRange { t: u32, floor: u32, cap: u32 },

    #[error("interval index s = {s} outside [1, {max}]")]
    IntervalIndex { s: u64, max: u64 },

    #[error("extension degree {degree} exceeds the packed-element cap of 32")]
    FieldTooLarge { degree: u32 },

    #[error("field was built for n = {expected}, called with n = {got}")]
    LengthMismatch { expected: u64, got: u64 },

    #[error("defining set is all of Z_{n}; the generator would be x^{n} + 1")]
    DegenerateGenerator { n: u64 },

    #[error("message length {got}, expected {expected}")]
    MessageLength { expected: usize, got: usize },

    #[error("reciprocal is undefined for a zero constant term")]
    ZeroConstantTerm,
}

pub type Result<T> = std::result::Result<T, Error>;
