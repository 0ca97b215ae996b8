use alloc::string::String;

use crate::pattern::Item;
use crate::representations::RepresentationKind;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("database contains no usable transaction")]
    EmptyDatabase,
    #[error("item {0} does not occur in the database")]
    UnknownItem(Item),
    #[error("a pattern must contain at least one item")]
    EmptyPattern,
    #[error("bond is undefined: no transaction contains any item of the pattern")]
    UndefinedMeasure,
    #[error("closure is undefined for a pattern with zero conjunctive support")]
    UndefinedClosure,
    #[error("invalid rational: {0}")]
    InvalidRational(String),
    #[error("invalid mining parameters: {0}")]
    InvalidParams(String),
    #[error("expected a {expected} representation, got {found}")]
    WrongKind {
        expected: &'static str,
        found: RepresentationKind,
    },
    #[error("representation does not match the database: {0}")]
    Inconsistent(String),
    #[error("corrupt representation: {0}")]
    CorruptRepresentation(String),
    #[error("oracle capacity exceeded: {items} items (limit {limit})")]
    Capacity { items: usize, limit: usize },
}
