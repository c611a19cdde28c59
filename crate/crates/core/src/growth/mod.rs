//! Partitions with at most three rows, type words, cylindrical growth
//! diagrams, promotion and the chain-counting dimension oracle.

mod diagram;
mod enumerate;
mod partition;
mod tableau;
mod word;

use thiserror::Error;

pub use diagram::{chain_word, promotion, GrowthDiagram};
pub use enumerate::{dim_inv, enumerate_diagrams, for_each_chain};
pub use partition::{dif, is_vertical_strip, local_rule, PartitionRep, RowSet};
pub use tableau::{row_to_tableau, tableau_to_row, Tableau};
pub use word::{letter_weight, TypeWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrowthError {
    #[error("{0:?} is not a partition")]
    NotAPartition([u32; 3]),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("neither {0} / {1} nor {1} / {0} is a vertical strip")]
    NotVerticalStrip(PartitionRep, PartitionRep),
    #[error("the local rule does not produce a valid partition")]
    NotAPartitionAfterSort,
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("local condition fails at square ({row}, {col})")]
    LocalRuleViolation { row: usize, col: usize },
    #[error("the last row of the diagram differs from the first")]
    PeriodicityViolation,
    #[error("complement symmetry fails at ({row}, {col})")]
    ComplementViolation { row: usize, col: usize },
}
