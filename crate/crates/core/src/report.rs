//! Pass/fail records produced by the verification suites.

use std::fmt::Display;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub description: String,
    pub id: String,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub failed: usize,
    pub passed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Record an equality check; sides are rendered only once.
    pub fn push_eq<T: PartialEq + Display>(
        &mut self,
        id: impl Into<String>,
        description: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        let ok = lhs == rhs;
        self.checks.push(Check {
            description: description.into(),
            id: id.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
        });
        ok
    }

    /// Record a check whose computation failed with an error.
    pub fn push_error(
        &mut self,
        id: impl Into<String>,
        description: impl Into<String>,
        err: impl Display,
    ) {
        self.checks.push(Check {
            description: description.into(),
            id: id.into(),
            lhs: format!("error: {err}"),
            rhs: String::new(),
            status: Status::Fail,
        });
    }

    pub fn push_skipped(&mut self, id: impl Into<String>, description: impl Into<String>) {
        self.checks.push(Check {
            description: description.into(),
            id: id.into(),
            lhs: String::new(),
            rhs: String::new(),
            status: Status::Skipped,
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Prefix every id with `prefix/`.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for c in &mut self.checks {
            c.id = format!("{prefix}/{}", c.id);
        }
        self
    }

    /// Sort checks by id; stable, so equal ids keep insertion order.
    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl FromIterator<Report> for Report {
    fn from_iter<I: IntoIterator<Item = Report>>(iter: I) -> Self {
        let mut out = Report::new();
        for r in iter {
            out.merge(r);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts() {
        let mut r = Report::new();
        r.push_eq("b", "", &1, &1);
        r.push_eq("a", "", &1, &2);
        r.push_skipped("c", "");
        r.sort();
        assert_eq!(r.checks()[0].id, "a");
        assert_eq!(
            r.summary(),
            Summary {
                failed: 1,
                passed: 1,
                skipped: 1
            }
        );
        assert!(!r.all_passed());
    }
}
