//! Verdict values returned by the law checkers.
//!
//! A checker never panics on bad input: it either passes or names the first
//! violated law together with a witness tuple. `Inconclusive` is reserved
//! for checks that refuse to decide (currently only the support-map search
//! on large groupoid-free quantales).

use std::fmt;

/// A named law violation with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Stable identifier of the violated law.
    pub law: &'static str,
    /// The offending tuple, rendered with point/element names.
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.law, self.witness)
    }
}

/// Outcome of a law check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Violation),
    Inconclusive(String),
}

impl Verdict {
    pub fn fail(law: &'static str, witness: impl Into<String>) -> Self {
        Verdict::Fail(Violation { law, witness: witness.into() })
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    /// Keeps the first failure when combining sequential checks.
    pub fn and(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Pass => next(),
            other => other,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(v) => write!(f, "fail ({v})"),
            Verdict::Inconclusive(why) => write!(f, "inconclusive ({why})"),
        }
    }
}
