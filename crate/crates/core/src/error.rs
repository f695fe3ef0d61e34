use thiserror::Error;

use crate::partition::{GrassmannianSpec, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchubertError {
    #[error("not a weakly decreasing sequence: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("invalid {op} of {left} and {right}")]
    InvalidCombination {
        op: &'static str,
        left: Partition,
        right: Partition,
    },
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("Gr({k},{n}) needs 0 < k < n")]
    BadGrassmannian { k: usize, n: usize },
    #[error("{partition} does not fit in the box of {spec}")]
    BoxViolation {
        partition: Partition,
        spec: GrassmannianSpec,
    },
    #[error("conditions have total weight {got}, expected {expected}")]
    WeightMismatch { expected: usize, got: usize },
    #[error("construction failed: {0}")]
    Construction(String),
}
