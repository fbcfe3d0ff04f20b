//! Law reports: the uniform result format for every check suite.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LawStatus {
    Pass,
    Fail,
}

/// Outcome of one law within a suite. A failed law always carries a concrete
/// witness tuple; `sample_seed` is set exactly when sampling replaced
/// exhaustion for this law.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LawResult {
    pub law: String,
    pub status: LawStatus,
    /// Number of tuples checked.
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LawReport {
    pub instance: String,
    pub suite: String,
    pub results: Vec<LawResult>,
    pub elapsed_ms: u64,
    pub seed: u64,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status == LawStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.results.iter().filter(|r| r.status == LawStatus::Fail)
    }
}

/// Accumulates law results and stamps the report with timing on finish.
pub struct ReportBuilder {
    instance: String,
    suite: String,
    seed: u64,
    results: Vec<LawResult>,
    started: std::time::Instant,
}

impl ReportBuilder {
    pub fn new(instance: impl Into<String>, suite: impl Into<String>, seed: u64) -> Self {
        ReportBuilder {
            instance: instance.into(),
            suite: suite.into(),
            seed,
            results: Vec::new(),
            started: std::time::Instant::now(),
        }
    }

    /// Record a law from a scan: pass if `violations` is empty, else fail
    /// with the first (deterministic) witness.
    pub fn law(
        &mut self,
        name: &str,
        cases: u64,
        sample_seed: Option<u64>,
        violations: Vec<serde_json::Value>,
    ) -> &mut Self {
        let status = if violations.is_empty() {
            LawStatus::Pass
        } else {
            LawStatus::Fail
        };
        self.results.push(LawResult {
            law: name.to_string(),
            status,
            cases,
            witness: violations.into_iter().next(),
            sample_seed,
        });
        self
    }

    /// Record a law that already reduced to a boolean plus optional witness.
    pub fn claim(&mut self, name: &str, holds: bool, witness: serde_json::Value) -> &mut Self {
        self.results.push(LawResult {
            law: name.to_string(),
            status: if holds { LawStatus::Pass } else { LawStatus::Fail },
            cases: 1,
            witness: if holds { None } else { Some(witness) },
            sample_seed: None,
        });
        self
    }

    pub fn all_passed_so_far(&self) -> bool {
        self.results.iter().all(|r| r.status == LawStatus::Pass)
    }

    pub fn finish(self) -> LawReport {
        LawReport {
            instance: self.instance,
            suite: self.suite,
            results: self.results,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            seed: self.seed,
        }
    }
}

/// Canonical suite order used by the runner and by report merging.
pub const SUITE_ORDER: [&str; 7] = [
    "cubic", "mr", "filters", "twist", "group", "boolean", "lsb",
];

fn suite_rank(name: &str) -> usize {
    SUITE_ORDER
        .iter()
        .position(|s| *s == name)
        .unwrap_or(SUITE_ORDER.len())
}

/// Deterministic merge: stable order by instance, then by suite rank.
pub fn merge_reports(mut reports: Vec<LawReport>) -> Vec<LawReport> {
    reports.sort_by(|a, b| {
        a.instance
            .cmp(&b.instance)
            .then(suite_rank(&a.suite).cmp(&suite_rank(&b.suite)))
            .then(a.suite.cmp(&b.suite))
    });
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_law_keeps_first_witness() {
        let mut b = ReportBuilder::new("i", "cubic", 0);
        b.law(
            "axiom_a",
            10,
            None,
            vec![serde_json::json!({"x": 1}), serde_json::json!({"x": 2})],
        );
        let r = b.finish();
        assert!(!r.passed());
        assert_eq!(r.results[0].witness, Some(serde_json::json!({"x": 1})));
    }

    #[test]
    fn merge_orders_by_instance_then_suite() {
        let mk = |i: &str, s: &str| LawReport {
            instance: i.into(),
            suite: s.into(),
            results: vec![],
            elapsed_ms: 0,
            seed: 0,
        };
        let merged = merge_reports(vec![mk("b", "cubic"), mk("a", "mr"), mk("a", "cubic")]);
        let keys: Vec<(String, String)> = merged
            .iter()
            .map(|r| (r.instance.clone(), r.suite.clone()))
            .collect();
        assert_eq!(
            keys,
            vec![
                ("a".into(), "cubic".into()),
                ("a".into(), "mr".into()),
                ("b".into(), "cubic".into())
            ]
        );
    }
}
