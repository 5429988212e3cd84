use octahedral::Error;
use serde::Serialize;
use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum CliError {
    #[error("{}parse error: {message}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Parse { line: Option<usize>, message: String },
    #[error("line {line}: validation failed: {invariant}")]
    Validation { line: usize, invariant: String },
    #[error("{0}")]
    Io(String),
    #[error("{failed} of {total} rows failed")]
    RowsFailed { failed: usize, total: usize },
    #[error("{0} checks failed")]
    ChecksFailed(usize),
    #[error(transparent)]
    Core(#[from] Error),
}

/// Exit status: 2 for bad input or failed verification, 3 when a
/// computational limit was reached.
pub fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Core(
            Error::FactorizationIncomplete { .. }
            | Error::SearchExhausted(_)
            | Error::PrecisionExhausted { .. }
            | Error::DegenerateUnresolvable { .. },
        ) => 3,
        _ => 2,
    }
}

pub fn kind(e: &CliError) -> &'static str {
    match e {
        CliError::Parse { .. } => "ParseError",
        CliError::Validation { .. } => "ValidationError",
        CliError::Io(_) => "IoError",
        CliError::RowsFailed { .. } => "RowsFailed",
        CliError::ChecksFailed(_) => "ChecksFailed",
        CliError::Core(e) => match e {
            Error::FactorizationIncomplete { .. } => "FactorizationIncomplete",
            Error::ZeroArgument => "ZeroArgument",
            Error::Reducible => "Reducible",
            Error::NotSquarefree => "NotSquarefree",
            Error::WrongDegree { .. } => "WrongDegree",
            Error::NotPrimitive => "NotPrimitive",
            Error::PrecisionExhausted { .. } => "PrecisionExhausted",
            Error::DegenerateUnresolvable { .. } => "DegenerateUnresolvable",
            Error::NotPrincipal => "NotPrincipal",
            Error::SearchExhausted(_) => "SearchExhausted",
            Error::NotOctahedral => "NotOctahedral",
            Error::CyclotomicExcluded => "CyclotomicExcluded",
            Error::DegenerateParameter(_) => "DegenerateParameter",
            Error::ExcludedParameter(_) => "ExcludedParameter",
            Error::InvalidTypeParameter(_) => "InvalidTypeParameter",
            Error::NotPrime(_) => "NotPrime",
        },
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub schema: u32,
    pub error: ErrorBody,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
}

impl ErrorReport {
    pub fn new(e: &CliError) -> Self {
        let line = match e {
            CliError::Parse { line, .. } => *line,
            CliError::Validation { line, .. } => Some(*line),
            _ => None,
        };
        ErrorReport {
            schema: crate::SCHEMA,
            error: ErrorBody {
                kind: kind(e),
                message: e.to_string(),
                line,
            },
        }
    }
}
