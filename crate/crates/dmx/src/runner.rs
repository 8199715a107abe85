//! Runs verification checks across threads.

use std::thread;
use std::time::Instant;

use dmx_core::verify::{run_shard, Check, CorpusCache, VerificationReport, VerifyConfig};
use dmx_core::Error;
use serde::Serialize;

#[derive(Debug)]
pub struct SuiteRun {
    pub reports: Vec<VerificationReport>,
    /// Candidates the random generator discarded.
    pub rejections: u64,
}

impl SuiteRun {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }
}

/// Splits each check's instances into `shards` residue classes, runs them on
/// scoped threads and merges the partial reports. `elapsed` on the result is
/// the check's wall-clock time, corpus generation included.
pub fn run(checks: &[&Check], cfg: &VerifyConfig, shards: usize) -> Result<SuiteRun, Error> {
    let shards = shards.max(1);
    let mut cache = CorpusCache::new();
    let mut reports = Vec::with_capacity(checks.len());
    for &check in checks {
        let start = Instant::now();
        let instances = cache.instances(check, cfg)?;
        let parts: Vec<VerificationReport> = thread::scope(|s| {
            let handles: Vec<_> = (0..shards)
                .map(|k| {
                    let instances = &instances;
                    s.spawn(move || run_shard(check, instances, k, shards))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("check panicked"))
                .collect()
        });
        let mut report = parts
            .into_iter()
            .reduce(VerificationReport::merge)
            .expect("at least one shard");
        report.elapsed = start.elapsed();
        reports.push(report);
    }
    Ok(SuiteRun {
        reports,
        rejections: cache.rejections(),
    })
}

#[derive(Serialize)]
struct Record<'a> {
    name: &'a str,
    tested: u64,
    failed: usize,
    verdict: &'a str,
    seconds: f64,
}

/// One JSON object per line and check.
pub fn records(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let rec = Record {
            name: &r.name,
            tested: r.tested,
            failed: r.counterexamples.len(),
            verdict: if r.passed() { "pass" } else { "fail" },
            seconds: r.elapsed.as_secs_f64(),
        };
        out.push_str(&serde_json::to_string(&rec).expect("plain record"));
        out.push('\n');
    }
    out
}
