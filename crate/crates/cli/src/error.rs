use std::process::ExitCode;

use confchar_core::equivariant::ValidationIssue;

pub const EXIT_PARSE: u8 = 3;
pub const EXIT_VALIDATION: u8 = 4;
pub const EXIT_NON_INTEGER: u8 = 5;
pub const EXIT_VERIFY: u8 = 6;
pub const EXIT_DOMAIN: u8 = 7;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("cannot parse group file: {0}")]
    Parse(String),
    #[error("group data failed validation")]
    Validation(Vec<ValidationIssue>),
    #[error("group data gives a non-integral orbit exponent")]
    NonIntegerExponent(Vec<ValidationIssue>),
    #[error("{0}")]
    Domain(String),
    #[error("{failed} verification check(s) failed")]
    Verification { failed: usize },
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Io { .. } | CliError::Parse(_) => EXIT_PARSE,
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::NonIntegerExponent(_) => EXIT_NON_INTEGER,
            CliError::Verification { .. } => EXIT_VERIFY,
            CliError::Domain(_) => EXIT_DOMAIN,
        })
    }

    /// Integrality failures get their own exit code only when they are the
    /// sole problem; structural issues take precedence.
    pub fn from_issues(issues: Vec<ValidationIssue>) -> Self {
        if issues.iter().all(ValidationIssue::is_non_integer_exponent) {
            CliError::NonIntegerExponent(issues)
        } else {
            CliError::Validation(issues)
        }
    }

    pub fn issues(&self) -> &[ValidationIssue] {
        match self {
            CliError::Validation(issues) | CliError::NonIntegerExponent(issues) => issues,
            _ => &[],
        }
    }
}

impl From<confchar_core::Error> for CliError {
    fn from(e: confchar_core::Error) -> Self {
        match e {
            confchar_core::Error::InvalidGroup(issues) => CliError::from_issues(issues),
            other => CliError::Domain(other.to_string()),
        }
    }
}
