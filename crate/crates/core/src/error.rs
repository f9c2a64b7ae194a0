use thiserror::Error;

use crate::gauss::ChordId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `column` counts characters from 0, whitespace included.
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("label `{0}` needs exactly one O and one U occurrence")]
    UnpairedLabel(String),
    #[error("label `{label}` occurs twice with role {role}")]
    DuplicateRole { label: String, role: char },
    #[error("the two occurrences of label `{0}` carry different signs")]
    SignMismatch(String),
    #[error("unknown chord `{0}`")]
    UnknownChord(String),
    #[error("circle {index} out of range (diagram has {count} circles)")]
    CircleOutOfRange { index: usize, count: usize },
    #[error("position {index} out of range on circle {circle}")]
    BadPosition { circle: usize, index: usize },
    #[error("chord {0} is a linking chord")]
    LinkingChord(ChordId),
    #[error("expected a single-component diagram, got {0} components")]
    MultiComponent(usize),
    #[error("chord {0} is not a kink")]
    NotAKink(ChordId),
    #[error("pattern mismatch: {0}")]
    PatternMismatch(&'static str),
}
