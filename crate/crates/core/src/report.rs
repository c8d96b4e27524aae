//! Verification reports: per-case outcomes with witnesses for every failure.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    #[serde(rename = "type")]
    pub cartan_type: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<String>,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

/// Outcome of one case, produced independently by a worker.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl Outcome {
    /// Counts one case and records a failure when the two sides differ.
    pub fn check<T: PartialEq>(&mut self, case: impl Into<String>, lhs: &T, rhs: &T, show: impl Fn(&T) -> String) {
        self.cases += 1;
        if lhs != rhs {
            self.failures.push(Failure { case: case.into(), lhs: show(lhs), rhs: show(rhs) });
        }
    }

    /// Counts one case that passes iff `ok`.
    pub fn assert(&mut self, case: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure { case: case.into(), lhs: detail(), rhs: String::new() });
        }
    }

    /// Records a failure inside a case that was already counted.
    pub fn fail(&mut self, case: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) {
        self.failures.push(Failure { case: case.into(), lhs: lhs.into(), rhs: rhs.into() });
    }

    pub fn merge(mut self, other: Outcome) -> Outcome {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

impl Report {
    pub fn new(suite: &str, cartan_type: impl fmt::Display) -> Report {
        Report { suite: suite.to_string(), cartan_type: cartan_type.to_string(), ..Report::default() }
    }

    pub fn with_lambda(mut self, lambda: impl fmt::Display) -> Report {
        self.lambda = Some(lambda.to_string());
        self
    }

    pub fn with_mu(mut self, mu: impl fmt::Display) -> Report {
        self.mu = Some(mu.to_string());
        self
    }

    pub fn with_w(mut self, w: impl Into<String>) -> Report {
        self.w = Some(w.into());
        self
    }

    /// Folds outcomes in and sorts the failures, so the result does not
    /// depend on the order workers finished in.
    pub fn absorb(mut self, outcomes: impl IntoIterator<Item = Outcome>) -> Report {
        for o in outcomes {
            self.cases += o.cases;
            self.failures.extend(o.failures);
        }
        self.failures.sort();
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One line: suite, parameters, case count and verdict.
    pub fn summary(&self) -> String {
        let mut s = format!("{} {}", self.suite, self.cartan_type);
        if let Some(l) = &self.lambda {
            s += &format!(" lambda={l}");
        }
        if let Some(m) = &self.mu {
            s += &format!(" mu={m}");
        }
        if let Some(w) = &self.w {
            s += &format!(" w={w}");
        }
        let verdict = if self.passed() { "pass".to_string() } else { format!("FAIL ({} failures)", self.failures.len()) };
        format!("{s}: {} cases, {verdict}", self.cases)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for x in &self.failures {
            writeln!(f, "  {}\n    lhs: {}\n    rhs: {}", x.case, x.lhs, x.rhs)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_is_order_independent() {
        let mut a = Outcome::default();
        a.check("b", &1, &2, |x| x.to_string());
        let mut b = Outcome::default();
        b.check("a", &1, &3, |x| x.to_string());
        b.check("c", &1, &1, |x| x.to_string());
        let r1 = Report::new("t", "A1").absorb([a.clone(), b.clone()]);
        let r2 = Report::new("t", "A1").absorb([b, a]);
        assert_eq!(r1, r2);
        assert_eq!(r1.cases, 3);
        assert_eq!(r1.failures[0].case, "a");
        assert!(!r1.passed());
    }

    #[test]
    fn json_round_trip() {
        let mut o = Outcome::default();
        o.check("x", &"p", &"q", |s| s.to_string());
        let r = Report::new("theorem", "A2").with_lambda("[1,0]").with_w("all").absorb([o]);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"type\":\"A2\""));
        assert_eq!(serde_json::from_str::<Report>(&text).unwrap(), r);
    }
}
