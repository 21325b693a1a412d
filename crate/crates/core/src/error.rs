use thiserror::Error;

use crate::conditions::{Condition, Triple};

/// Errors produced by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}; only simple graphs are supported")]
    SelfLoop(usize),

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("instance has {n} vertices, exceeding the limit of {max} for {what}")]
    TooLarge { what: &'static str, n: usize, max: usize },

    #[error("ordering violates {condition} at positions ({}, {}, {})", .witness.i, .witness.j, .witness.k)]
    ConditionViolated { condition: Condition, witness: Triple },

    #[error("{0}")]
    InvalidPartition(String),

    #[error("not a caterpillar: {0}")]
    NotCaterpillar(String),

    #[error("edge ({u}, {v}) has tree distance {distance}, violating the caterpillar distance property")]
    CaterpillarDistance { u: usize, v: usize, distance: usize },

    #[error("graph is not a member of the {0} class")]
    NotMember(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("invalid representation: {0}")]
    Representation(String),

    #[error("certificate rejected: {0}")]
    Certificate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
