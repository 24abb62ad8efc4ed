//! Check records and the JSON verification report.

use std::time::Instant;

use rand_chacha::ChaCha12Rng;
use serde::Serialize;
use serde_json::Value;

use super::config::{Suite, VerifyConfig};
use super::rng::substream;

/// Outcome of one check together with everything needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    /// Suite name.
    pub suite: String,
    /// Stable identifier of the check within its suite.
    pub check_id: String,
    /// Stable identifier of the verified statement; nonempty for every
    /// theorem-backed check.
    pub anchor: String,
    /// The parameters the check ran with (canonical JSON object: keys are
    /// emitted in sorted order).
    pub parameters: Value,
    /// `"pass"` or `"fail"`.
    pub status: String,
    /// On failure, a reproducible description of the first violation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    /// Wall-clock milliseconds, or 0 unless timing capture was requested
    /// (timings are off by default to keep reports byte-deterministic).
    pub elapsed_ms: u64,
}

/// A full verification report: the primary JSON artifact of `verify`.
#[derive(Debug, Serialize)]
pub struct Report {
    /// Report format version.
    pub schema: String,
    /// The seed all random substreams derive from.
    pub seed: u64,
    /// The configured ranks.
    pub n_range: Vec<usize>,
    /// The configured charts (`null` means all `k` per rank).
    pub k_list: Option<Vec<usize>>,
    /// The configured enumeration bound.
    pub l_max: i64,
    /// The configured sample count per randomized check.
    pub trials: usize,
    /// The suites that ran.
    pub suites: Vec<String>,
    /// Number of passing checks.
    pub checks_passed: usize,
    /// Number of failing checks.
    pub checks_failed: usize,
    /// Every check, sorted by (suite, check id, parameters).
    pub records: Vec<CheckRecord>,
}

impl Report {
    /// Assemble a report from finished suite outputs: sort, count, stamp.
    pub(crate) fn assemble(cfg: &VerifyConfig, mut records: Vec<CheckRecord>) -> Report {
        records.sort_by(|a, b| {
            (a.suite.as_str(), a.check_id.as_str(), a.parameters.to_string()).cmp(&(
                b.suite.as_str(),
                b.check_id.as_str(),
                b.parameters.to_string(),
            ))
        });
        let checks_passed = records.iter().filter(|r| r.status == "pass").count();
        let checks_failed = records.len() - checks_passed;
        Report {
            schema: "geomcrystal/1".into(),
            seed: cfg.seed,
            n_range: cfg.n_range.clone(),
            k_list: cfg.k_list.clone(),
            l_max: cfg.l_max,
            trials: cfg.trials,
            suites: cfg.selected_suites().iter().map(|s| s.name().to_string()).collect(),
            checks_passed,
            checks_failed,
            records,
        }
    }

    /// Whether every check passed.
    pub fn all_pass(&self) -> bool {
        self.checks_failed == 0
    }

    /// The report as pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Run one check body with its own derived random substream and append the
/// outcome. The body returns `Ok(())` on success or a reproducible
/// counterexample description on failure.
pub(crate) fn run_check(
    out: &mut Vec<CheckRecord>,
    cfg: &VerifyConfig,
    suite: Suite,
    check_id: &str,
    anchor: &str,
    parameters: Value,
    body: impl FnOnce(&mut ChaCha12Rng) -> Result<(), String>,
) {
    let params_canonical = parameters.to_string();
    let mut rng = substream(cfg.seed, suite.name(), check_id, &params_canonical);
    let start = Instant::now();
    let result = body(&mut rng);
    let elapsed_ms =
        if cfg.timings { start.elapsed().as_millis() as u64 } else { 0 };
    let (status, counterexample) = match result {
        Ok(()) => ("pass".to_string(), None),
        Err(detail) => ("fail".to_string(), Some(detail)),
    };
    out.push(CheckRecord {
        suite: suite.name().into(),
        check_id: check_id.into(),
        anchor: anchor.into(),
        parameters,
        status,
        counterexample,
        elapsed_ms,
    });
}

/// Helper for sampled checks whose draws can land outside a map's domain:
/// keep drawing until `trials` samples have been fully checked, treating
/// `Ok(false)` from the body as "domain miss, redraw" and giving up (as a
/// failure) only if misses overwhelm the budget.
pub(crate) fn sampled<R>(
    rng: &mut R,
    trials: usize,
    mut body: impl FnMut(&mut R) -> Result<bool, String>,
) -> Result<(), String> {
    let mut done = 0usize;
    let mut attempts = 0usize;
    let budget = trials.saturating_mul(100).max(1000);
    while done < trials {
        attempts += 1;
        if attempts > budget {
            return Err(format!(
                "sampling budget exhausted: only {done}/{trials} valid samples in {budget} draws"
            ));
        }
        if body(rng)? {
            done += 1;
        }
    }
    Ok(())
}
