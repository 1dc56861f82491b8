use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {index} out of range for a graph with {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("basepoint `{0}` carries no loop")]
    BasepointNotLooped(String),
    #[error("graph has no basepoint")]
    MissingBasepoint,
    #[error("not a graph map: {0}")]
    NotAGraphMap(String),
    #[error("invalid fold of `{vertex}` onto `{onto}`: {reason}")]
    InvalidFold {
        vertex: String,
        onto: String,
        reason: &'static str,
    },
    #[error("target graph has {0} vertices; multihomomorphism sets are limited to 64")]
    TargetTooLarge(usize),
    #[error("window exceeded: concatenation needs bound {needed} but the truncation is {bound}")]
    WindowExceeded { needed: usize, bound: usize },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid multihomomorphism: {0}")]
    InvalidMultihom(String),
    #[error("poset is not closed under taking faces; the cell model does not apply")]
    NotDownClosed,
    #[error("invalid clique data: {0}")]
    InvalidClique(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("unknown check `{name}`; available checks: {available}")]
    UnknownCheck { name: String, available: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
