use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("quadratic module axiom violated: {0}")]
    QuadraticAxiom(String),

    #[error("missing table data: {0}")]
    MissingTableData(String),

    #[error("not in the stable range: k = {k} > n - 2 = {}", *n as i64 - 2)]
    NotStableRange { n: u32, k: u32 },

    #[error("criterion requires unstable γ data (n = {n}, k = {k})")]
    UnstableCriterion { n: u32, k: u32 },

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("inconsistent tables: {0}")]
    Inconsistent(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
