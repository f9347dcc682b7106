//! Structured verification reports.

use alloc::string::String;
use alloc::vec::Vec;

/// Outcome of a single named law, with the first failing basis tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub witness: Option<Vec<usize>>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub note: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            witness: None,
            note: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            witness,
            note: None,
        }
    }

    pub fn from_bool(name: impl Into<String>, passed: bool) -> Self {
        if passed {
            Check::pass(name)
        } else {
            Check::fail(name, None)
        }
    }

    /// Evaluates `holds` on each tuple in order and records the first
    /// tuple where it does not.
    pub fn over<I>(name: impl Into<String>, tuples: I, mut holds: impl FnMut(&[usize]) -> bool) -> Self
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let name = name.into();
        for t in tuples {
            if !holds(&t) {
                return Check::fail(name, Some(t));
            }
        }
        Check::pass(name)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) -> &mut Self {
        self.checks.push(check);
        self
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = alloc::format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }
}

impl core::fmt::Display for Report {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "{}", self.subject)?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            write!(
                f,
                "  {:<width$}  {}",
                c.name,
                if c.passed { "pass" } else { "FAIL" },
                width = width
            )?;
            if let Some(w) = &c.witness {
                write!(f, "  witness {w:?}")?;
            }
            if let Some(n) = &c.note {
                write!(f, "  ({n})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
