use thiserror::Error;

/// Failures while decoding a graph6 string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("truncated graph6 payload: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 payload has {extra} trailing bytes")]
    TrailingData { extra: usize },
    #[error("byte {byte:#04x} at position {position} is outside the graph6 range 63..=126")]
    OutOfRange { position: usize, byte: u8 },
    #[error("padding bits after the last edge bit must be zero")]
    NonZeroPadding,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("{what} is {value}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("unsupported block size k = {0}")]
    UnsupportedBlockSize(usize),
    #[error("block {block:?} does not have exactly {k} distinct elements")]
    MalformedBlock { block: Vec<usize>, k: usize },
    #[error("{blocks} blocks cannot be assigned to {vertices} vertices")]
    SizeMismatch { blocks: usize, vertices: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("class {0} is not a tree")]
    NotATreeClass(String),
    #[error("empty set of classes")]
    EmptyClassSet,
    #[error("the series support contains no tree class")]
    NoTreeClass,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("graph must be connected")]
    Disconnected,
    #[error("series has k = {series}, values have k = {values}")]
    BlockSizeMismatch { series: usize, values: usize },
    #[error("no value assigned to block {0:?}")]
    MissingValue(Vec<usize>),
    #[error("orbit total {total} is not divisible by automorphism count {automorphisms}")]
    NonDivisible { total: String, automorphisms: u64 },
    #[error("tau is not injective: blocks of vertices {0} and {1} share their maximum")]
    NonInjectiveWitness(usize, usize),
    #[error("schema violation: {0}")]
    Schema(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
