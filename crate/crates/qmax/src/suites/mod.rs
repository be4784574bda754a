//! Named verification suites run over the corpus. Each reports instance
//! counts, failures and hypothesis-not-met counts; a suite passes when it
//! has no failures.

mod absorb;
mod exts;
mod rings;

use crate::corpus::{extension_corpus, ring_corpus, CorpusConfig, CorpusExt, CorpusRing};
use crate::error::{invalid, Result};
use crate::extension::transfer::TransferRecord;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Failures kept verbatim per suite; the count is always exact.
const MAX_LISTED: usize = 50;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub failed: usize,
    pub hypothesis_not_met: usize,
    pub counts: BTreeMap<String, usize>,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub records: Vec<TransferRecord>,
}

impl SuiteReport {
    fn new(suite: &str) -> SuiteReport {
        SuiteReport { suite: suite.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn count(&self, key: &str) -> usize {
        self.counts.get(key).copied().unwrap_or(0)
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failed += 1;
        if self.failures.len() < MAX_LISTED {
            self.failures.push(what);
        }
    }

    fn not_met(&mut self) {
        self.hypothesis_not_met += 1;
    }

    fn bump(&mut self, key: &str, n: usize) {
        *self.counts.entry(key.to_string()).or_default() += n;
    }

    fn merge(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        self.hypothesis_not_met += other.hypothesis_not_met;
        let room = MAX_LISTED.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        for (k, v) in other.counts {
            self.bump(&k, v);
        }
        self.records.extend(other.records);
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub corpus: CorpusConfig,
    /// Restricts the transfer suite to these statement ids.
    pub props: Option<Vec<String>>,
    /// Keeps per-instance transfer records in the report.
    pub records: bool,
}

/// Corpus rings and extensions, built on first use.
pub struct Corpus {
    cfg: CorpusConfig,
    rings: OnceLock<Vec<CorpusRing>>,
    exts: OnceLock<Vec<CorpusExt>>,
}

impl Corpus {
    pub fn new(cfg: CorpusConfig) -> Corpus {
        Corpus { cfg, rings: OnceLock::new(), exts: OnceLock::new() }
    }

    pub fn config(&self) -> &CorpusConfig {
        &self.cfg
    }

    pub fn rings(&self) -> Result<&[CorpusRing]> {
        if let Some(r) = self.rings.get() {
            return Ok(r);
        }
        let built = ring_corpus(&self.cfg)?;
        Ok(self.rings.get_or_init(|| built))
    }

    pub fn exts(&self) -> Result<&[CorpusExt]> {
        if let Some(e) = self.exts.get() {
            return Ok(e);
        }
        let built = extension_corpus(&self.cfg)?;
        Ok(self.exts.get_or_init(|| built))
    }

    /// Corpus rings with at most `max` elements.
    pub fn rings_up_to(&self, max: usize) -> Result<Vec<&CorpusRing>> {
        Ok(self.rings()?.iter().filter(|c| c.ring.size() <= max).collect())
    }
}

type SuiteFn = fn(&Corpus, &SuiteOptions) -> Result<SuiteReport>;

const SUITES: &[(&str, SuiteFn)] = &[
    ("lattice-oracle", rings::lattice_oracle),
    ("qmax-equivalence", rings::qmax_equivalence),
    ("submaximal", rings::submaximal),
    ("ramified-spir", rings::ramified_spir),
    ("qmax-structure", rings::qmax_structure),
    ("conductor-type", exts::conductor_type),
    ("extension-structure", exts::extension_structure),
    ("construction", exts::construction),
    ("example-ring", exts::example_ring),
    ("transfer", exts::transfer),
    ("lift-dichotomy", exts::lift_dichotomy),
    ("absorbing", absorb::absorbing),
    ("lambda", absorb::lambda),
    ("z-ideal", absorb::z_ideal),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs one suite by name, or every suite for "all".
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<SuiteReport>> {
    let corpus = Corpus::new(opts.corpus);
    run_suite_on(&corpus, name, opts)
}

pub fn run_suite_on(corpus: &Corpus, name: &str, opts: &SuiteOptions) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.iter().map(|(_, f)| f(corpus, opts)).collect();
    }
    match SUITES.iter().find(|(n, _)| *n == name) {
        Some((_, f)) => Ok(vec![f(corpus, opts)?]),
        None => invalid(format!("unknown suite {name:?}; known: all, {}", suite_names().join(", "))),
    }
}

/// Runs `f` on each item in parallel and merges the partial reports in
/// item order.
fn over<T: Sync>(suite: &str, items: &[T], f: impl Fn(&T, &mut SuiteReport) -> Result<()> + Sync) -> Result<SuiteReport> {
    let parts = items
        .par_iter()
        .map(|item| {
            let mut part = SuiteReport::new(suite);
            f(item, &mut part)?;
            Ok(part)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = SuiteReport::new(suite);
    for p in parts {
        out.merge(p);
    }
    Ok(out)
}
