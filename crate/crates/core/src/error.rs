use thiserror::Error;

/// Table-shape problems detected while building a [`crate::FinBicat`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("duplicate {kind} id `{name}`")]
    Duplicate { kind: &'static str, name: String },
    #[error("{kind} index {index} out of range")]
    OutOfRange { kind: &'static str, index: usize },
    #[error("{table}[{key}]: missing entry")]
    Missing { table: &'static str, key: String },
    #[error("{table}[{key}]: entry outside the table domain")]
    Extraneous { table: &'static str, key: String },
    #[error("{table}[{key}]: duplicate entry")]
    DuplicateEntry { table: &'static str, key: String },
}

/// Failed lookups in the composition tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BicatError {
    #[error("1-cells `{g}` and `{f}` are not composable")]
    NotComposable { g: String, f: String },
    #[error("2-cells `{beta}` and `{alpha}` do not share a frame boundary")]
    FrameMismatch { beta: String, alpha: String },
    #[error("cannot whisker 2-cell `{two}` by 1-cell `{one}`")]
    WhiskerMismatch { one: String, two: String },
    #[error("2-cell `{cell}` is not invertible")]
    NotInvertible { cell: String },
}
