//! Error type shared by all modules.

use std::fmt;

/// Errors raised by filter arithmetic, cost-model loading, the optimizers,
/// and architecture simulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Mismatched lengths between a filter and a window/bit vector.
    Dimension { expected: usize, actual: usize, what: &'static str },
    /// A value or parameter outside its legal range.
    Domain(String),
    /// Cost configuration failed to parse.
    ConfigSyntax(String),
    /// Cost configuration parsed but violates a model invariant.
    ConfigValidation { field: String, message: String },
    /// A brute-force oracle was invoked beyond its tractability guard.
    Tractability(String),
    /// The compressor catalog cannot realize the requested reduction.
    Synthesis(String),
    /// Requested LUT size is beyond the cost table's range.
    ModelRange(String),
    /// A tap-to-layer assignment is not a bijection onto the filter taps.
    Assignment(String),
    /// LUT contents or plan do not match the simulation request.
    SimulationConfig(String),
    /// A coefficient or sample file failed to parse.
    Parse { line: usize, message: String },
    /// File I/O failure.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Dimension { expected, actual, what } => {
                write!(f, "dimension mismatch: {what} expected {expected}, got {actual}")
            }
            Self::Domain(msg) => write!(f, "domain error: {msg}"),
            Self::ConfigSyntax(msg) => write!(f, "config syntax error: {msg}"),
            Self::ConfigValidation { field, message } => {
                write!(f, "config validation error: {field}: {message}")
            }
            Self::Tractability(msg) => write!(f, "tractability guard exceeded: {msg}"),
            Self::Synthesis(msg) => write!(f, "synthesis error: {msg}"),
            Self::ModelRange(msg) => write!(f, "model range error: {msg}"),
            Self::Assignment(msg) => write!(f, "assignment error: {msg}"),
            Self::SimulationConfig(msg) => write!(f, "simulation configuration error: {msg}"),
            Self::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
            Self::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Self::Io(err.to_string())
    }
}
