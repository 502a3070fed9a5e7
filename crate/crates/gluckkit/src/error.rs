use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid torus knot parameters (p, q) = ({p}, {q}): {reason}")]
    InvalidTorusKnot { p: u64, q: u64, reason: &'static str },

    #[error("invalid V-sequence: {0}")]
    InvalidVSequence(&'static str),

    #[error("surgery coefficient must be a positive integer, got {0}")]
    NonPositiveSurgery(i64),

    #[error("surgery coefficient must be even to carry two spin structures, got {0}")]
    OddSurgeryCoefficient(u64),

    #[error("Spin^c label {i} out of range for surgery coefficient {n}")]
    SpinCOutOfRange { i: u64, n: u64 },

    #[error("winding number must be a positive even integer, got {0}")]
    WindingNotPositiveEven(i64),

    #[error("winding number must be odd, got {0}")]
    WindingNotOdd(i64),

    #[error("braid letter {letter} invalid on {strands} strands (need 1 <= |letter| <= strands - 1)")]
    InvalidBraidLetter { letter: i64, strands: u64 },

    #[error("braid word has {crossings} crossings, exceeding the exhaustive state-sum cap of {max}")]
    BraidTooLarge { crossings: usize, max: usize },

    #[error("cannot parse braid letter {0:?}")]
    MalformedBraidWord(String),

    #[error("cannot parse Laurent polynomial near {0:?}")]
    MalformedPolynomial(String),

    #[error("element has mixed-parity support; the invariance check needs a single parity")]
    MixedParity,
}
