use thiserror::Error;

use crate::check::CheckReport;
use crate::rat::Rat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set has {size} elements; the cap is {cap}")]
    TooManyElements { size: usize, cap: usize },
    #[error("invalid label {0:?}: labels are non-empty strings over [A-Za-z0-9_]")]
    InvalidLabel(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("label {0:?} repeated within a subset")]
    RepeatedLabel(String),
    #[error("missing subset {0}")]
    MissingSubset(String),
    #[error("duplicate subset {0}")]
    DuplicateSubset(String),
    #[error("table has {found} values; expected {expected}")]
    TableLength { expected: usize, found: usize },
    #[error("subset mask {mask:#x} is not contained in a ground set of {size} elements")]
    OutsideGround { mask: u32, size: usize },
    #[error("ground sets differ")]
    GroundMismatch,
    #[error("scale factor must be positive, got {0}")]
    NonPositiveFactor(Rat),
    #[error("rank {rank} exceeds ground set size {size}")]
    RankTooLarge { rank: usize, size: usize },
    #[error("vertex {0:?} is incident with no edge")]
    IsolatedVertex(String),
    #[error("edge {edge:?} uses unknown vertex {vertex:?}")]
    UnknownVertex { edge: String, vertex: String },
    #[error("{operation} requires {requirement}: {report}")]
    Precondition {
        operation: &'static str,
        requirement: &'static str,
        report: Box<CheckReport>,
    },
}
