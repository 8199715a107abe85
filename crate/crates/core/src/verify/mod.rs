//! Property checks over generated corpora.
//!
//! A [`Check`] names a statement, the corpora it runs over and a pure
//! per-instance test. [`run_shard`] evaluates one residue class of
//! ordinals, and shard reports combine with [`VerificationReport::merge`],
//! so any number of shards yields the same totals.

pub mod catalogue;
pub mod checks;
pub mod corpus;
mod report;

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

pub use catalogue::{enumerate_delta_matroids, Catalogue};
pub use corpus::{Corpus, CorpusKind, Instance};
pub use report::{CheckKind, Counterexample, VerificationReport};

use crate::error::Error;
use checks::Outcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Caps every corpus's ground-set size (each corpus also has its own cap).
    pub max_n: usize,
    pub seed: u64,
    /// Size of the random corpus.
    pub random_count: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 6,
            seed: 0,
            random_count: 1000,
        }
    }
}

pub struct Check {
    pub name: &'static str,
    pub group: &'static str,
    pub kind: CheckKind,
    corpora: fn(&VerifyConfig) -> Vec<CorpusKind>,
    witnesses: fn() -> Vec<Instance>,
    pub run: fn(&Instance) -> Outcome,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check")
            .field("name", &self.name)
            .field("group", &self.group)
            .field("kind", &self.kind)
            .finish()
    }
}

impl Check {
    pub fn corpora(&self, cfg: &VerifyConfig) -> Vec<CorpusKind> {
        (self.corpora)(cfg)
    }

    /// Documented instances appended after the corpora.
    pub fn witnesses(&self) -> Vec<Instance> {
        (self.witnesses)()
    }
}

fn random(cfg: &VerifyConfig) -> CorpusKind {
    CorpusKind::Random {
        max_n: cfg.max_n.min(6),
        seed: cfg.seed,
        count: cfg.random_count,
    }
}

fn calculus_corpora(cfg: &VerifyConfig) -> Vec<CorpusKind> {
    alloc::vec![
        CorpusKind::AllDelta {
            max_n: cfg.max_n.min(3)
        },
        random(cfg)
    ]
}

fn exhaustive_corpora(cfg: &VerifyConfig) -> Vec<CorpusKind> {
    alloc::vec![
        CorpusKind::AllDelta {
            max_n: cfg.max_n.min(4)
        },
        random(cfg)
    ]
}

fn small_delta(cfg: &VerifyConfig) -> Vec<CorpusKind> {
    alloc::vec![CorpusKind::AllDelta {
        max_n: cfg.max_n.min(3)
    }]
}

fn symmetric(cfg: &VerifyConfig) -> Vec<CorpusKind> {
    alloc::vec![CorpusKind::SymmetricTwists {
        max_n: cfg.max_n.min(4)
    }]
}

fn binary_matroids(cfg: &VerifyConfig) -> Vec<CorpusKind> {
    alloc::vec![CorpusKind::BinaryMatroids {
        max_n: cfg.max_n.min(5)
    }]
}

fn binary_twists(cfg: &VerifyConfig) -> Vec<CorpusKind> {
    alloc::vec![CorpusKind::BinaryMatroidTwists {
        max_n: cfg.max_n.min(5)
    }]
}

fn ribbons(_: &VerifyConfig) -> Vec<CorpusKind> {
    alloc::vec![CorpusKind::Ribbon]
}

fn none() -> Vec<Instance> {
    Vec::new()
}

fn min_contraction_witness() -> Vec<Instance> {
    alloc::vec![Instance::Delta {
        d: checks::min_contraction_witness(),
        probe: 0,
    }]
}

fn non_binary_witness() -> Vec<Instance> {
    alloc::vec![Instance::Delta {
        d: checks::non_binary_witness(),
        probe: 0,
    }]
}

fn converse_witness() -> Vec<Instance> {
    let (m, a) = checks::converse_witness();
    alloc::vec![Instance::Twisted { m, a }]
}

macro_rules! check {
    ($name:literal, $group:literal, $kind:ident, $corpora:ident, $witnesses:ident, $run:path) => {
        Check {
            name: $name,
            group: $group,
            kind: CheckKind::$kind,
            corpora: $corpora,
            witnesses: $witnesses,
            run: $run,
        }
    };
}

/// Every check, in report order.
#[rustfmt::skip]
pub static CHECKS: &[Check] = &[
    check!("twist-group-law", "calculus", Universal, calculus_corpora, none, checks::twist_group_law),
    check!("dual-involution", "calculus", Universal, calculus_corpora, none, checks::dual_involution),
    check!("contraction-via-twist", "calculus", Universal, calculus_corpora, none, checks::contraction_via_twist),
    check!("deletion-via-dual", "calculus", Universal, calculus_corpora, none, checks::deletion_via_dual),
    check!("loop-complement-involution", "calculus", Universal, calculus_corpora, none, checks::loop_complement_involution),
    check!("loop-complement-interval", "calculus", Universal, calculus_corpora, none, checks::loop_complement_interval),
    check!("minor-order-independence", "calculus", Universal, calculus_corpora, none, checks::minor_order_independence),
    check!("twist-parity", "calculus", Universal, calculus_corpora, none, checks::twist_parity),
    check!("min-deletion", "lower", Universal, exhaustive_corpora, none, checks::min_deletion),
    check!("min-contraction-witness", "lower", ExpectedWitness, small_delta, min_contraction_witness, checks::min_contraction_counterexample),
    check!("lower-bound", "lower", Universal, exhaustive_corpora, none, checks::lower_bound),
    check!("deletion-bipartite", "lower", Universal, exhaustive_corpora, none, checks::deletion_bipartite),
    check!("contraction-bipartite", "lower", Universal, exhaustive_corpora, none, checks::contraction_bipartite),
    check!("odd-circuit", "binary", Universal, symmetric, none, checks::odd_circuit),
    check!("odd-circuit-non-binary", "binary", ExpectedWitness, small_delta, non_binary_witness, checks::odd_circuit_non_binary),
    check!("bipartite-loop-complement", "binary", Universal, symmetric, none, checks::bipartite_loop_complement),
    check!("binary-closure", "binary", Universal, symmetric, none, checks::binary_closure),
    check!("welsh-duality", "matroid", Universal, binary_matroids, none, checks::welsh_duality),
    check!("circuit-contraction", "matroid", Universal, binary_matroids, none, checks::circuit_contraction),
    check!("twist-decomposition", "matroid", Universal, binary_twists, none, checks::twist_decomposition),
    check!("bipartite-dual-eulerian", "matroid", Universal, binary_twists, none, checks::bipartite_dual_eulerian),
    check!("bipartite-dual-eulerian-converse", "matroid", ExpectedWitness, binary_twists, converse_witness, checks::bipartite_dual_eulerian_converse),
    check!("twist-characterization", "matroid", Universal, binary_twists, none, checks::twist_characterization),
    check!("ribbon-parity-orientability", "ribbon", Universal, ribbons, none, checks::ribbon_parity),
    check!("ribbon-petrie-bipartite", "ribbon", Universal, ribbons, none, checks::ribbon_petrie),
    check!("ribbon-bipartite-dual-eulerian", "ribbon", Universal, ribbons, none, checks::ribbon_bipartite_dual),
    check!("ribbon-converse-witness", "ribbon", ExpectedWitness, ribbons, none, checks::ribbon_bipartite_dual_converse),
    check!("ribbon-spanning-trees", "ribbon", Universal, ribbons, none, checks::ribbon_spanning_trees),
];

/// Resolves `all`, a group name or a check name.
pub fn select(suite: &str) -> Option<Vec<&'static Check>> {
    let picked: Vec<&'static Check> = CHECKS
        .iter()
        .filter(|c| suite == "all" || c.group == suite || c.name == suite)
        .collect();
    (!picked.is_empty()).then_some(picked)
}

/// Generated corpora, built once and shared between checks.
#[derive(Debug, Default)]
pub struct CorpusCache {
    built: BTreeMap<CorpusKind, Corpus>,
}

impl CorpusCache {
    pub fn new() -> CorpusCache {
        CorpusCache::default()
    }

    pub fn get(&mut self, kind: CorpusKind) -> Result<&Corpus, Error> {
        match self.built.entry(kind) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(e) => Ok(e.insert(corpus::build(kind)?)),
        }
    }

    /// The check's instances in ordinal order: corpora first, then any
    /// documented witness not already present.
    pub fn instances(&mut self, check: &Check, cfg: &VerifyConfig) -> Result<Vec<Instance>, Error> {
        let mut out = Vec::new();
        for kind in check.corpora(cfg) {
            out.extend(self.get(kind)?.instances.iter().cloned());
        }
        for w in check.witnesses() {
            if !out.contains(&w) {
                out.push(w);
            }
        }
        Ok(out)
    }

    /// Random-generator rejections over every random corpus built so far.
    pub fn rejections(&self) -> u64 {
        self.built.values().map(|c| c.rejections).sum()
    }
}

/// Evaluates the instances whose ordinal is `shard` modulo `shards`.
pub fn run_shard(
    check: &Check,
    instances: &[Instance],
    shard: usize,
    shards: usize,
) -> VerificationReport {
    assert!(shard < shards, "shard index out of range");
    let mut report = VerificationReport::empty(check.name, check.kind);
    for (i, inst) in instances.iter().enumerate().skip(shard).step_by(shards) {
        let out = (check.run)(inst);
        if !out.applicable {
            continue;
        }
        report.tested += 1;
        if !out.failures.is_empty() {
            report.counterexamples.push(Counterexample {
                ordinal: i as u64,
                instance: alloc::format!("{inst}"),
                details: out.failures.join("; "),
            });
        }
        report.witness_hits += u64::from(out.hit);
        if let Some(details) = out.witness {
            report.witnesses.push(Counterexample {
                ordinal: i as u64,
                instance: alloc::format!("{inst}"),
                details,
            });
        }
    }
    report
}

/// Runs checks one after another on a single shard.
pub fn run_suite(checks: &[&Check], cfg: &VerifyConfig) -> Result<Vec<VerificationReport>, Error> {
    let mut cache = CorpusCache::new();
    checks
        .iter()
        .map(|c| Ok(run_shard(c, &cache.instances(c, cfg)?, 0, 1)))
        .collect()
}

/// Line-oriented rendering. Timing is left out so output is reproducible.
pub fn render_text(reports: &[VerificationReport], max_listed: usize) -> String {
    let mut s = String::new();
    for r in reports {
        let kind = match r.kind {
            CheckKind::Universal => "universal",
            CheckKind::ExpectedWitness => "expected-witness",
        };
        let _ = write!(
            s,
            "{} {} [{}] tested={} counterexamples={}",
            if r.passed() { "PASS" } else { "FAIL" },
            r.name,
            kind,
            r.tested,
            r.counterexamples.len()
        );
        if r.kind == CheckKind::ExpectedWitness {
            let _ = write!(
                s,
                " hits={} documented={}",
                r.witness_hits,
                r.witnesses.len()
            );
        }
        s.push('\n');
        for c in r.counterexamples.iter().take(max_listed) {
            let _ = writeln!(
                s,
                "  counterexample #{}: {} :: {}",
                c.ordinal, c.instance, c.details
            );
        }
        if r.counterexamples.len() > max_listed {
            let _ = writeln!(s, "  ... {} more", r.counterexamples.len() - max_listed);
        }
        for w in r.witnesses.iter().take(max_listed) {
            let _ = writeln!(
                s,
                "  witness #{}: {} :: {}",
                w.ordinal, w.instance, w.details
            );
        }
        if r.witnesses.len() > max_listed {
            let _ = writeln!(s, "  ... {} more", r.witnesses.len() - max_listed);
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(
        s,
        "summary: {} checks, {} passed, {} failed",
        reports.len(),
        reports.len() - failed,
        failed
    );
    s
}
