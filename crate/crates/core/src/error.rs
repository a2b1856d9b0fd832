use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("duplicate edge {from} -> {to}")]
    DuplicateEdge { from: usize, to: usize },
    #[error("vertex {0} has no outgoing edge")]
    DeadEnd(usize),
    #[error("edge {from} -> {to} is not in the graph")]
    InvalidPath { from: usize, to: usize },
    #[error("cycle must be a nonempty closed walk starting where the stem ends")]
    InvalidLasso,
    #[error("distribution is empty")]
    EmptyDistribution,
    #[error("support times must be strictly increasing (time {0} out of order)")]
    UnsortedSupport(u64),
    #[error("probability at time {time} must be positive, got {probability}")]
    NonPositiveProbability { time: u64, probability: Rational },
    #[error("total probability mass {0} exceeds 1")]
    MassAboveOne(Rational),
    #[error("distribution mass is {mass}, short of 1 by {deficit}")]
    MassNotOne {
        mass: Box<Rational>,
        deficit: Box<Rational>,
    },
    #[error("distribution has expected time {actual}, expected {expected}")]
    ExpectedTimeMismatch {
        expected: Box<Rational>,
        actual: Box<Rational>,
    },
    #[error("utility sequence has {len} entries but time {time} was requested")]
    SequenceTooShort { time: u64, len: usize },
    #[error("matrix dimensions {left} and {right} do not match")]
    DimensionMismatch { left: usize, right: usize },
    #[error("enumeration budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("expected horizon must be positive, got {0}")]
    NonPositiveHorizon(Rational),
    #[error("no rational with denominator at most {qmax} lies in [{lo}, {hi}]")]
    NoBoundedRational {
        lo: Box<Rational>,
        hi: Box<Rational>,
        qmax: u64,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
