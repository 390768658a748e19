use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed dart code: {0}")]
    Malformed(String),
    #[error("malformed permutation: dart {dart} {reason}")]
    BadPermutation { dart: usize, reason: &'static str },
    #[error("non-involutive pairing at dart {dart}")]
    NonInvolutive { dart: usize },
    #[error("loop at dart {dart}")]
    Loop { dart: usize },
    #[error("vertex {vertex} has degree {degree}, expected 4")]
    NotQuartic { vertex: usize, degree: usize },
    #[error("disconnected map: vertex {vertex} unreachable from vertex 0")]
    Disconnected { vertex: usize },
    #[error("map is not spherical: V - E + F = {euler}")]
    Genus { euler: i64 },
    #[error("expected a central circuit of this graph")]
    ForeignCircuit,
    #[error("operation requires exactly {expected} central circuit(s), found {found}")]
    CircuitCount { expected: usize, found: usize },
    #[error("face region is not a disk: {0}")]
    NotADisk(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("rail-road does not belong to this graph")]
    ForeignRailRoad,
    #[error("graph is not an i-hedrite")]
    NotHedrite,
}

pub type Result<T> = std::result::Result<T, Error>;
