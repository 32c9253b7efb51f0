use thiserror::Error;

use crate::engine::Step;
use crate::plane::Vid;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid embedding: {0}")]
    Embedding(String),

    #[error("vertex {0} is not on the outer cycle")]
    NotOnOuter(Vid),

    #[error("edge {0}-{1} is not on the outer cycle")]
    EdgeNotOnOuter(Vid, Vid),

    #[error("the outer walk repeats a vertex")]
    OuterNotCycle,

    #[error("edge {0}-{1} is already present")]
    EdgeExists(Vid, Vid),

    #[error("cannot join a vertex to itself ({0})")]
    SameVertex(Vid),

    #[error("vertices {0} and {1} do not lie on the given face")]
    NotOnFace(Vid, Vid),

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("not a subgraph: {0}")]
    NotSubgraph(String),

    #[error("marked material lies inside the contracted side: {0}")]
    MarkedInSide(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no path through the required edge meets the budget ({n} vertices)")]
    ProviderExhausted { n: usize },

    #[error("instance has {n} vertices, enumeration cap is {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("{msg}")]
    Contract { msg: String, trace: Vec<Step> },
}

pub type Result<T> = std::result::Result<T, Error>;
