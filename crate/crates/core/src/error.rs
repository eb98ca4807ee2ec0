use thiserror::Error;

use crate::Simplex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a simplex needs at least one vertex")]
    EmptySimplex,
    #[error("vertex {0} appears more than once in a simplex")]
    DuplicateVertex(u32),
    #[error("no facets given")]
    EmptyInput,
    #[error("facets have mixed dimensions ({first} and {other})")]
    MixedDimension { first: usize, other: usize },
    #[error("declared dimension {declared} does not match facet dimension {actual}")]
    DeclaredDimension { declared: usize, actual: usize },
    #[error("complex dimension must be at least 1")]
    ZeroDimension,
    #[error("invalid enumeration space: {0}")]
    InvalidSpace(String),
    #[error("complex exceeds limits: {0}")]
    TooLarge(String),
    #[error("{0} is not a facet of the complex")]
    NotAFacet(Simplex),
    #[error("{0} is not a simplex of the complex")]
    ForeignSimplex(Simplex),
    #[error("dimension {k} is out of range 0..={n}")]
    DimensionOutOfRange { k: usize, n: usize },
    #[error("simplices have dimensions {0} and {1}, expected a common dimension below the facets")]
    DimensionMismatch(usize, usize),
    #[error("malformed alternating sequence: {0}")]
    MalformedSequence(String),
    #[error("sequence is not a walk")]
    NotAWalk,
    #[error("sequence is not a reduced path")]
    NotReduced,
    #[error("walk starts and ends at the same simplex")]
    SameEndpoints,
    #[error("no path connects the two simplices")]
    NotConnectedPair,
    #[error("paths do not share endpoints")]
    EndpointMismatch,
    #[error("complex is not connected")]
    NotConnected,
    #[error("complex is not a simplicial tree")]
    NotATree,
    #[error("graph edge {0}-{0} is a self-loop")]
    SelfLoop(u32),
}

impl Error {
    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptySimplex => "empty_simplex",
            Error::DuplicateVertex(_) => "duplicate_vertex",
            Error::EmptyInput => "empty_input",
            Error::MixedDimension { .. } => "mixed_dimension",
            Error::DeclaredDimension { .. } => "declared_dimension",
            Error::ZeroDimension => "zero_dimension",
            Error::InvalidSpace(_) => "invalid_space",
            Error::TooLarge(_) => "too_large",
            Error::NotAFacet(_) => "not_a_facet",
            Error::ForeignSimplex(_) => "foreign_simplex",
            Error::DimensionOutOfRange { .. } => "dimension_out_of_range",
            Error::DimensionMismatch(..) => "dimension_mismatch",
            Error::MalformedSequence(_) => "malformed_sequence",
            Error::NotAWalk => "not_a_walk",
            Error::NotReduced => "not_reduced",
            Error::SameEndpoints => "same_endpoints",
            Error::NotConnectedPair => "not_connected_pair",
            Error::EndpointMismatch => "endpoint_mismatch",
            Error::NotConnected => "not_connected",
            Error::NotATree => "not_a_tree",
            Error::SelfLoop(_) => "self_loop",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
