use std::fmt;

/// A single violated law, with the cells or simplices that witness it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct Violation {
    pub law: String,
    pub witnesses: Vec<String>,
    pub message: String,
}

impl Violation {
    pub fn new(law: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            law: law.into(),
            witnesses: Vec::new(),
            message: message.into(),
        }
    }

    pub fn with<I, S>(mut self, witnesses: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.witnesses.extend(witnesses.into_iter().map(Into::into));
        self
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.law, self.message)?;
        if !self.witnesses.is_empty() {
            write!(f, " [{}]", self.witnesses.join(", "))?;
        }
        Ok(())
    }
}

/// The complete list of violations found by a validator.
#[derive(Debug, Clone, PartialEq, Eq, Default, serde::Serialize)]
#[serde(transparent)]
pub struct ValidationErrors(pub Vec<Violation>);

impl ValidationErrors {
    pub fn push(&mut self, v: Violation) {
        self.0.push(v);
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Violation> {
        self.0.iter()
    }

    /// True if some violation names `law` (substring match).
    pub fn mentions(&self, law: &str) -> bool {
        self.0.iter().any(|v| v.law.contains(law))
    }

    pub(crate) fn into_result<T>(self, value: impl FnOnce() -> T) -> Result<T, ValidationErrors> {
        if self.0.is_empty() {
            Ok(value())
        } else {
            Err(self)
        }
    }
}

impl fmt::Display for ValidationErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationErrors {}

impl From<Violation> for ValidationErrors {
    fn from(v: Violation) -> Self {
        Self(vec![v])
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("validation failed:\n{0}")]
    Invalid(#[from] ValidationErrors),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("not a 2-groupoid: {0}")]
    NotGroupoid(String),
    #[error("search limit exceeded: more than {limit} candidate branches (raise the size guard to continue)")]
    SearchLimit { limit: u64 },
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
