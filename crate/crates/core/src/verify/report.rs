use std::fmt;

use serde::{Deserialize, Serialize};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Closed-form value for the family.
    Formula,
    /// Independent recomputation by another method.
    Oracle,
    /// Follows directly from the construction.
    Definition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub check: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub source: Source,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub family: String,
    pub rows: Vec<VerifyRow>,
    /// Observations that do not affect `pass`.
    pub notes: Vec<String>,
    pub pass: bool,
}

impl VerifyReport {
    pub(crate) fn new(family: String) -> Self {
        VerifyReport {
            family,
            pass: true,
            ..Default::default()
        }
    }

    pub(crate) fn check<T: PartialEq + fmt::Display>(
        &mut self,
        check: impl Into<String>,
        expected: T,
        computed: T,
        source: Source,
    ) {
        let pass = expected == computed;
        self.pass &= pass;
        self.rows.push(VerifyRow {
            check: check.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
            source,
        });
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    /// Rows sorted by check name; the row list is already built in a fixed
    /// order, this is for merged reports.
    pub fn sorted(mut self) -> Self {
        self.rows.sort_by(|a, b| a.check.cmp(&b.check));
        self
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.family)?;
        for r in &self.rows {
            writeln!(
                f,
                "  [{}] {}: expected {}, computed {} ({:?})",
                if r.pass { "ok" } else { "FAIL" },
                r.check,
                r.expected,
                r.computed,
                r.source
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        write!(f, "  overall: {}", if self.pass { "pass" } else { "FAIL" })
    }
}
