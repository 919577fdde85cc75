use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A conservative state has no admissible primitive counterpart. During a
    /// run this means the evolution has produced corrupted data.
    #[error("non-physical state{}: {reason} (D={d:e}, |m|={m:e}, E={e:e})", location(*.cell, *.stage))]
    NonPhysicalState {
        d: f64,
        m: f64,
        e: f64,
        reason: &'static str,
        cell: Option<(isize, isize)>,
        stage: Option<u8>,
    },

    #[error("exceeded the step limit of {max_steps} at t={t:e}")]
    MaxStepsExceeded { max_steps: u64, t: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("shape mismatch: expected {expected} values, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
}

fn location(cell: Option<(isize, isize)>, stage: Option<u8>) -> String {
    let mut s = String::new();
    if let Some((i, j)) = cell {
        s.push_str(&format!(" at cell ({i}, {j})"));
    }
    if let Some(k) = stage {
        s.push_str(&format!(" in RK stage {k}"));
    }
    s
}

impl Error {
    pub(crate) fn non_physical(d: f64, m: f64, e: f64, reason: &'static str) -> Self {
        Error::NonPhysicalState { d, m, e, reason, cell: None, stage: None }
    }

    /// Attaches a cell index to a [`Error::NonPhysicalState`].
    pub fn at_cell(self, i: isize, j: isize) -> Self {
        match self {
            Error::NonPhysicalState { d, m, e, reason, stage, .. } => {
                Error::NonPhysicalState { d, m, e, reason, cell: Some((i, j)), stage }
            }
            other => other,
        }
    }

    /// Attaches the Runge-Kutta stage (1-based) to a [`Error::NonPhysicalState`].
    pub fn in_stage(self, k: u8) -> Self {
        match self {
            Error::NonPhysicalState { d, m, e, reason, cell, .. } => {
                Error::NonPhysicalState { d, m, e, reason, cell, stage: Some(k) }
            }
            other => other,
        }
    }

    pub fn is_non_physical(&self) -> bool {
        matches!(self, Error::NonPhysicalState { .. })
    }
}
