use thiserror::Error;

/// Errors surfaced by the library. Domain violations carry enough context to
/// name the invariant that failed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("singular matrix where an invertible one is required")]
    Singular,
    #[error("basis is not multiplicatively closed: product of basis elements {i} and {j} leaves the span")]
    NotClosed { i: usize, j: usize },
    #[error("algebra has no identity element in its span")]
    NoUnit,
    #[error("could not resolve the endomorphism algebra structure (noncommutative semisimple quotient with no splitting found)")]
    UnresolvedEnd,
    #[error("polynomial factorization search exceeded its budget (degree {0})")]
    FactorBudget(usize),
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("quiver relation violated: {0}")]
    RelationViolated(String),
    #[error("quiver mismatch: expected V_{0}, got V_{1}")]
    QuiverMismatch(usize, usize),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("path leaves the materialized box at coordinate {coord}, offset {offset}")]
    OutOfBox { coord: usize, offset: i64 },
    #[error("parameter map s must be defined on every integral coordinate; missing {0}")]
    MissingCorner(usize),
    #[error("module is not bijective in direction {0}")]
    NotBijective(String),
    #[error("module is not simple")]
    NotSimple,
    #[error("bounded sp(2)-modules admit no projective covers or injective hulls; rank must be at least 2")]
    SpRankOne,
    #[error("coset does not lie inside the module's block")]
    CosetOutsideBlock,
    #[error("a direction set may contain at most one side per coordinate (coordinate {0})")]
    DuplicateDirection(usize),
    #[error("inadmissible tuple: {0}")]
    InadmissibleTuple(String),
    #[error("gluing map must be invertible here (it is singular)")]
    SingularGluing,
    #[error("no embedding of the requested submodule: {0}")]
    NoEmbedding(String),
    #[error("acceptance check failed: {0}")]
    Acceptance(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("module file error at {path}: {msg}")]
    ModuleFile { path: String, msg: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
