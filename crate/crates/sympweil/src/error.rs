//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported simple type {family}{rank}: {bound}")]
    UnsupportedType {
        family: char,
        rank: usize,
        bound: &'static str,
    },

    #[error("simple-reflection index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight {weight} has length {got}, expected rank {expected}")]
    RankMismatch {
        weight: String,
        got: usize,
        expected: usize,
    },

    #[error("weight {0} is not dominant")]
    NonDominant(String),

    #[error("{op} requires type C, got {family}{rank}")]
    WrongType {
        op: &'static str,
        family: char,
        rank: usize,
    },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("dominant-weight enumeration exceeded the safety cap of {cap} weights")]
    CapExceeded { cap: usize },

    #[error("p^n = {pn} exceeds the configured bound {bound}")]
    PnBound { pn: u128, bound: u128 },

    #[error("weight-count mismatch for V({hw}) at (n={n}, p={p}): got {got}, expected {expected}")]
    CountMismatch {
        n: usize,
        p: u64,
        hw: String,
        got: u128,
        expected: u128,
    },

    #[error("unsupported Weil size (n={n}, p={p}); supported: (1,3) (1,5) (1,7) (2,3)")]
    UnsupportedWeilSize { n: usize, p: u64 },

    #[error("group enumeration exceeded the cap of {cap} elements")]
    GroupCapExceeded { cap: usize },

    #[error("generator is not symplectic (MᵀJM ≠ J)")]
    NotSymplectic,

    #[error("group order {got} does not match the expected order {expected}")]
    GroupOrder { got: usize, expected: u128 },

    #[error(
        "scalar cocycle obstruction: every calibration failed; last witness words {word_a:?} and {word_b:?}"
    )]
    CocycleObstruction {
        word_a: Vec<usize>,
        word_b: Vec<usize>,
    },

    #[error("cannot parse weight coordinates from {0:?}")]
    WeightParse(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
