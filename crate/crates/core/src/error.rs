use thiserror::Error;

/// Errors raised while building or parsing graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range 1..={order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("unknown family spec `{0}`")]
    UnknownFamily(String),
}

/// Errors raised by labeling construction and transforms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("expected {expected} labels, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("labels are not a bijection onto [1, {max}]")]
    NotBijective { max: u32 },
    #[error("not edge-magic: edge {first:?} sums to {first_sum}, edge {second:?} sums to {second_sum}")]
    NotEdgeMagic {
        first: (usize, usize),
        first_sum: u32,
        second: (usize, usize),
        second_sum: u32,
    },
    #[error("edge sums {sums:?} are not {q} consecutive integers")]
    NotExtendable { sums: Vec<u32>, q: usize },
    #[error("labeling is not super edge-magic")]
    NotSuper,
    #[error("labelings are on different graphs")]
    GraphMismatch,
    #[error("graph has no edges")]
    NoEdges,
}

/// Errors raised by interval computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("interval undefined for a graph without edges")]
    NoEdges,
    #[error("weights ({weights}) and label pool ({labels}) differ in length")]
    LengthMismatch { weights: usize, labels: usize },
    #[error("brute force refused: {size} elements exceeds guard {guard}")]
    TooLarge { size: usize, guard: usize },
}

/// Errors raised by the enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("graph has no edges")]
    NoEdges,
    #[error("search guard exceeded: {what} = {value} > {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("interval is empty; perfectness undefined")]
    EmptyInterval,
    #[error("search limits hit after {nodes} nodes; result is not exact")]
    Inconclusive { nodes: u64 },
    #[error("invalid search options: {0}")]
    Options(String),
    #[error(transparent)]
    Interval(#[from] IntervalError),
}

/// Errors raised by the star-family constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StarError {
    #[error("invalid star parameter: {0}")]
    Parameter(String),
    #[error("labeling is of type {0:?}, expected T1")]
    NotTypeOne(crate::star::StarType),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("suite {suite}: {source}")]
    Enumeration {
        suite: &'static str,
        source: EnumerationError,
    },
    #[error("suite {suite}: {source}")]
    Star {
        suite: &'static str,
        source: StarError,
    },
}
