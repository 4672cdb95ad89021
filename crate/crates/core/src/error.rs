use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition text {0:?}: {1}")]
    PartitionSyntax(String, String),

    #[error("invalid bipartition text {0:?}: expected \"parts|parts\"")]
    BipartitionSyntax(String),

    #[error("rank e must be at least 2, got {0}")]
    RankTooSmall(i64),

    #[error("operation requires a nonempty bipartition")]
    EmptyBipartition,

    #[error("operation requires both components to be nonempty")]
    EmptyComponent,

    #[error("residue {residue} out of range for e = {e}")]
    ResidueOutOfRange { residue: i64, e: i64 },

    #[error("window {lo}..{hi} does not cover the abacus region {need_lo}..{need_hi}")]
    WindowTooSmall {
        lo: i64,
        hi: i64,
        need_lo: i64,
        need_hi: i64,
    },

    #[error("period lies entirely in one row; the violating-pair pattern is undefined")]
    UnsplitPeriod,

    #[error("verification grid is empty")]
    EmptyGrid,

    #[error("invalid range {0:?}: expected \"lo..hi\"")]
    RangeSyntax(String),
}

pub type Result<T> = std::result::Result<T, Error>;
