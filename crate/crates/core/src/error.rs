use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("loop at vertex {vertex}")]
    Loop { vertex: u32 },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u32, n: u32 },
    #[error("duplicate edge {{{a},{b}}}")]
    DuplicateEdge { a: u32, b: u32 },
    #[error("edge {{{a},{b}}} not present")]
    MissingEdge { a: u32, b: u32 },
    #[error("counting needs at least 3 vertices, got {n}")]
    TooFewVertices { n: u32 },
    #[error("vertex {vertex} coincides with an endpoint of the split edge")]
    SplitVertexOnEdge { vertex: u32 },
    #[error("enumeration bound exceeded: n={n}, allowed 3..={max}")]
    BoundExceeded { n: u32, max: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("quad labels must be pairwise distinct, got ({0},{1}|{2},{3})")]
    RepeatedLabel(u32, u32, u32, u32),
    #[error("quad label {0} is not in the label set")]
    UnknownLabel(u32),
    #[error("ill-posed problem: |Q| = {quads} but |N| - 3 = {expected}")]
    IllPosed { quads: usize, expected: isize },
    #[error("{0} labels exceed the supported maximum of 64")]
    TooManyLabels(usize),
}
