use geonerve::format::LoadError;
use geonerve::{Error, ValidationErrors};

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Bad invocation or unreadable input (exit 2).
    Usage(String),
    /// Input violates the laws of its kind (exit 1).
    Invalid(ValidationErrors),
    /// A check ran and did not pass (exit 1).
    Check(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Invalid(_) | Failure::Check(_) => 1,
        }
    }

    pub fn report(&self, json: bool) {
        if json {
            let value = match self {
                Failure::Invalid(errs) => serde_json::json!({ "kind": "invalid", "violations": errs }),
                Failure::Usage(msg) => serde_json::json!({ "kind": "usage", "message": msg }),
                Failure::Check(msg) => serde_json::json!({ "kind": "check", "message": msg }),
            };
            eprintln!("{value}");
            return;
        }
        match self {
            Failure::Invalid(errs) => {
                eprintln!("invalid input:");
                for v in errs.iter() {
                    eprintln!("  {v}");
                }
            }
            Failure::Usage(msg) => eprintln!("error: {msg}"),
            Failure::Check(msg) => eprintln!("check failed: {msg}"),
        }
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<ValidationErrors> for Failure {
    fn from(e: ValidationErrors) -> Self {
        Failure::Invalid(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invalid(errs) => Failure::Invalid(errs),
            other => Failure::Check(other.to_string()),
        }
    }
}
