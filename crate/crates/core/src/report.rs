use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A single violated instance of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub n: usize,
    pub detail: String,
}

/// Outcome of checking one identity over a range of `n`.
///
/// Serializes as `{identity, n_range, status, failures, notes?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub n_range: [usize; 2],
    pub status: Status,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, lo: usize, hi: usize) -> Self {
        Self {
            identity: identity.into(),
            n_range: [lo, hi],
            status: Status::Pass,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn fail(&mut self, n: usize, detail: impl Into<String>) {
        self.status = Status::Fail;
        self.failures.push(Failure { n, detail: detail.into() });
    }

    /// Records a failure at `n` unless `ok` holds.
    pub fn check(&mut self, n: usize, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(n, detail());
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_schema() {
        let mut r = VerificationReport::new("demo", 3, 5);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"identity":"demo","n_range":[3,5],"status":"pass","failures":[]}"#
        );
        r.check(4, false, || "off by one".into());
        assert!(!r.passed());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "fail");
        assert_eq!(v["failures"][0]["n"], 4);
    }
}
