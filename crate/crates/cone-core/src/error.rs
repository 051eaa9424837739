use thiserror::Error;

/// Errors produced by the core pipeline.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("edge {src} -> {dst} has negative weight {weight}")]
    NegativeWeight { src: String, dst: String, weight: f64 },

    #[error("edge {src} -> {dst} has non-finite weight")]
    NonFiniteWeight { src: String, dst: String },

    #[error("duplicate edge {src} -> {dst}")]
    DuplicateEdge { src: String, dst: String },

    #[error("{path}:{line}: malformed record: {message}")]
    MalformedRecord { path: String, line: usize, message: String },

    #[error("unknown node id `{id}` referenced by {context}")]
    UnknownNode { id: String, context: String },

    #[error("transition power requires k >= 1, got {k}")]
    InvalidPower { k: usize },

    #[error("dimension mismatch: {message}")]
    DimensionMismatch { message: String },

    #[error("community `{id}` has fewer than two members; metric undefined")]
    SingletonCommunity { id: String },

    #[error("network-wide average content similarity is zero; homogeneity undefined")]
    DegenerateContent,

    #[error("community `{id}` is empty")]
    EmptyCommunity { id: String },

    #[error("token index {token} outside vocabulary of size {vocab_size}")]
    VocabMismatch { token: u32, vocab_size: usize },

    #[error("mean pooling over an empty list")]
    EmptyPool,

    #[error("non-finite logits passed to softmax")]
    NonFiniteLogits,

    #[error("softmax target must be non-negative and sum to one (sum = {sum})")]
    InvalidTarget { sum: f64 },

    #[error("label mask is empty: no supervised nodes")]
    EmptyMask,

    #[error("training requires at least one example community")]
    NoTrainingCommunities,

    #[error("loss diverged at epoch {epoch} (loss = {loss})")]
    Divergence { epoch: usize, loss: f64 },

    #[error("sequence set covers {got} nodes but the graph has {expected}")]
    SequenceCount { got: usize, expected: usize },

    #[error("requested {k} clusters but only {n} points are available")]
    TooManyClusters { k: usize, n: usize },

    #[error("cannot score an empty community set")]
    EmptyCommunitySet,

    #[error("candidate list for community-count selection is empty")]
    NoCandidates,

    #[error("community-count selection needs at least two example communities, got {got}")]
    TooFewCommunities { got: usize },

    #[error("planted generator: {message}")]
    PlantedConfig { message: String },

    #[error("ego network `{ego}`: feature row for node {node} has width {got}, expected {expected}")]
    FeatureWidth { ego: String, node: String, got: usize, expected: usize },

    #[error("archive: bad magic bytes")]
    BadMagic,

    #[error("archive: unsupported format version {0}")]
    BadVersion(u32),

    #[error("archive: expected {expected} content, found {found}")]
    WrongArchiveKind { expected: &'static str, found: String },

    #[error("archive: checksum mismatch (stored {stored:#010x}, computed {computed:#010x})")]
    Checksum { stored: u32, computed: u32 },

    #[error("archive: truncated or corrupt ({0})")]
    Truncated(&'static str),

    #[error("archive: parameter block `{block}` has shape {got:?}, expected {expected:?}")]
    ArchiveShape { block: String, got: Vec<usize>, expected: Vec<usize> },

    #[error("embedding matrix must have at least one column")]
    EmptyEmbedding,

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CoreError>;
