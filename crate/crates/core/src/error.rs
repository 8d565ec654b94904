use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::graph6::Graph6Error;
use crate::graph::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} is not in the subgraph under consideration")]
    NotInSubgraph(usize),

    #[error("a graph on {0} vertices exceeds the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("adjacency is not symmetric between {0} and {1}")]
    AsymmetricAdjacency(usize, usize),

    #[error("the null graph has no maximum stable set to hit")]
    EmptyGraph,

    #[error("path endpoints must be distinct (got {0} twice)")]
    IdenticalEndpoints(usize),

    #[error("enumeration would exceed the cap of {cap} items")]
    CapExceeded { cap: usize },

    #[error("graph has {n} vertices; exhaustive check is capped at {cap}")]
    OrderCapExceeded { n: usize, cap: usize },

    #[error("colouring needs more than {limit} colours")]
    ColourLimitExceeded { limit: usize },

    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not a cradle: {0}")]
    InvalidCradle(crate::cradle::CradleViolation),

    #[error("the full candidate list leaves demander #{demander} unsatisfied")]
    UncoverableDemander { demander: usize },

    #[error("input is not {class}-free: induced copy on vertices {witness:?}")]
    NotInClass { class: String, witness: Vec<usize> },

    /// A step that holds for every graph in the advertised class failed.
    /// Either the input lies outside the class or the implementation is wrong.
    #[error("assertion `{step}` failed: {detail}")]
    Assertion { step: &'static str, detail: String, witness: VertexSet },

    #[error("hitting set of size {size} exceeds the budget {budget}")]
    BudgetExceeded { size: usize, budget: BigUint },

    #[error("returned set {set} is not contained in the subgraph")]
    OutsideSubgraph { set: VertexSet },

    #[error("set {set} does not hit every maximum stable set (alpha stays {alpha})")]
    NotHitting { set: VertexSet, alpha: usize },

    #[error("part {part}: A and A' do not cover the vertex set")]
    CoverViolation { part: usize },

    #[error("designated component is empty")]
    EmptyComponent,

    #[error("{set} is not a connected component of the graph minus the cutset")]
    NotAComponent { set: VertexSet },

    #[error("graph is not perfect: {evidence}")]
    Imperfect { evidence: String, witness: VertexSet },

    #[error("{0} is not a proper induced subgraph of P5")]
    NotProperP5Subgraph(String),

    #[error("no {pattern}-free graph in {tries} tries; try a lower p or n")]
    TriesExhausted { pattern: String, tries: usize },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// A short stable name for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::NotInSubgraph(_) => "not_in_subgraph",
            Error::TooManyVertices(_) => "too_many_vertices",
            Error::SelfLoop(_) => "self_loop",
            Error::AsymmetricAdjacency(..) => "asymmetric_adjacency",
            Error::EmptyGraph => "empty_graph",
            Error::IdenticalEndpoints(_) => "identical_endpoints",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::OrderCapExceeded { .. } => "order_cap_exceeded",
            Error::ColourLimitExceeded { .. } => "colour_limit_exceeded",
            Error::Graph6(_) => "graph6",
            Error::EdgeList(_) => "edge_list",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::InvalidCradle(_) => "invalid_cradle",
            Error::UncoverableDemander { .. } => "uncoverable_demander",
            Error::NotInClass { .. } => "not_in_class",
            Error::Assertion { .. } => "assertion",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::OutsideSubgraph { .. } => "outside_subgraph",
            Error::NotHitting { .. } => "not_hitting",
            Error::CoverViolation { .. } => "cover_violation",
            Error::EmptyComponent => "empty_component",
            Error::NotAComponent { .. } => "not_a_component",
            Error::Imperfect { .. } => "imperfect",
            Error::NotProperP5Subgraph(_) => "not_proper_p5_subgraph",
            Error::TriesExhausted { .. } => "tries_exhausted",
            Error::Io(_) => "io",
        }
    }
}
