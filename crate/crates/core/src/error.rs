use bei_algebra::AlgebraError;
use bei_graph::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{what} limited to n <= {limit}, got n = {n}")]
    LimitExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("I/O error: {0}")]
    Io(String),
}

impl CoreError {
    /// Work or size limits, as opposed to bad input or a failed identity.
    pub fn is_resource(&self) -> bool {
        match self {
            CoreError::Algebra(e) => e.is_resource(),
            CoreError::Graph(GraphError::LimitExceeded { .. })
            | CoreError::LimitExceeded { .. } => true,
            _ => false,
        }
    }
}

pub(crate) fn precondition(msg: impl Into<String>) -> CoreError {
    CoreError::Precondition(msg.into())
}
