//! Seeded fuzzing and exhaustive enumeration of small weighted oriented graphs.

use std::collections::{BTreeMap, HashSet};
use std::time::Duration;

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::Serialize;

use super::report::EngineReport;
use crate::betti::FieldSpec;
use crate::budget::Budget;
use crate::classifier::{classify, Certificate, TheoremTag};
use crate::deciders::{check_all_within, CheckAll};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::oriented::{OrientedGraphJson, WeightedOrientedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Fuzz,
    Enumerate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzConfig {
    /// Maximum vertex count; enumeration uses exactly this many.
    pub n: usize,
    pub max_weight: u32,
    /// Instances to draw. Enumeration ignores it.
    pub count: usize,
    pub seed: u64,
    pub field: FieldSpec,
    pub mode: Mode,
    /// Run the engine even where the classifier decides. Enumeration always does.
    pub verify_all: bool,
    #[serde(skip)]
    pub timeout: Option<Duration>,
    #[serde(skip)]
    pub threads: Option<usize>,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            n: 5,
            max_weight: 3,
            count: 1000,
            seed: 42,
            field: FieldSpec::Rationals,
            mode: Mode::Fuzz,
            verify_all: false,
            timeout: Some(Duration::from_secs(60)),
            threads: None,
        }
    }
}

const MAX_FUZZ_VERTICES: usize = 20;
const MAX_ENUMERATION: u128 = 20_000_000;

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfig(m));
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        if self.max_weight == 0 {
            return bad("max-weight must be at least 1".into());
        }
        if self.count == 0 {
            return bad("count must be at least 1".into());
        }
        match self.mode {
            Mode::Fuzz if self.n > MAX_FUZZ_VERTICES => {
                bad(format!("n must be at most {MAX_FUZZ_VERTICES}"))
            }
            Mode::Enumerate if enumeration_size(self.n, self.max_weight) > MAX_ENUMERATION => bad(
                format!("enumerating n = {} with weights up to {} is too large", self.n, self.max_weight),
            ),
            _ => Ok(()),
        }
    }

    fn engine_always(&self) -> bool {
        self.verify_all || self.mode == Mode::Enumerate
    }
}

fn enumeration_size(n: usize, max_weight: u32) -> u128 {
    let pairs = (n * n.saturating_sub(1) / 2) as u32;
    3u128
        .checked_pow(pairs)
        .and_then(|a| (max_weight as u128).checked_pow(n as u32).and_then(|b| a.checked_mul(b)))
        .unwrap_or(u128::MAX)
}

fn numbered(n: usize, weights: Vec<u32>, states: &[u8]) -> WeightedOrientedGraph {
    let mut arcs = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            match states[k] {
                1 => arcs.push((i, j)),
                2 => arcs.push((j, i)),
                _ => {}
            }
            k += 1;
        }
    }
    WeightedOrientedGraph::numbered(weights, arcs).expect("generated graphs are valid")
}

/// Draws one instance: the vertex count `1 + r % n`, then one state
/// `r % 3` per pair `i < j` in lexicographic order (none, `i -> j`,
/// `j -> i`), then a weight `1 + r % max_weight` per vertex.
pub fn draw_instance(rng: &mut SplitMix64, n: usize, max_weight: u32) -> WeightedOrientedGraph {
    let k = 1 + (rng.next_u64() % n as u64) as usize;
    let states: Vec<u8> = (0..k * (k - 1) / 2)
        .map(|_| (rng.next_u64() % 3) as u8)
        .collect();
    let weights = (0..k)
        .map(|_| 1 + (rng.next_u64() % max_weight as u64) as u32)
        .collect();
    numbered(k, weights, &states)
}

pub fn fuzz_instances(seed: u64, n: usize, max_weight: u32, count: usize) -> Vec<WeightedOrientedGraph> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    (0..count).map(|_| draw_instance(&mut rng, n, max_weight)).collect()
}

/// Every orientation state and weight assignment on exactly `n` vertices,
/// keeping the first graph for each distinct edge ideal. Smaller graphs are
/// covered through isolated vertices.
pub fn enumerate_instances(n: usize, max_weight: u32) -> Vec<WeightedOrientedGraph> {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut seen: HashSet<Vec<Monomial>> = HashSet::new();
    let mut out = Vec::new();
    let mut states = vec![0u8; pairs];
    loop {
        let mut weights = vec![1u32; n];
        loop {
            let d = numbered(n, weights.clone(), &states);
            if seen.insert(d.edge_ideal().generators().to_vec()) {
                out.push(d);
            }
            if !bump(&mut weights, 1, max_weight) {
                break;
            }
        }
        if !bump(&mut states, 0, 2) {
            break;
        }
    }
    out
}

/// Odometer increment with digits in `lo..=hi`, least significant first.
fn bump<T: Copy + PartialEq + std::ops::Add<Output = T> + From<u8>>(digits: &mut [T], lo: T, hi: T) -> bool {
    for d in digits.iter_mut() {
        if *d == hi {
            *d = lo;
        } else {
            *d = *d + T::from(1u8);
            return true;
        }
    }
    false
}

#[derive(Debug, Clone)]
pub struct InstanceOutcome {
    pub index: usize,
    pub graph: WeightedOrientedGraph,
    pub certificate: Certificate,
    pub engine: Option<CheckAll>,
    pub timed_out: bool,
}

impl InstanceOutcome {
    pub fn classifier_agrees(&self) -> bool {
        match (&self.engine, self.certificate.value) {
            (Some(e), Some(v)) => e.is_cl() == v,
            _ => true,
        }
    }
}

pub fn evaluate(index: usize, d: &WeightedOrientedGraph, config: &FuzzConfig) -> Result<InstanceOutcome> {
    let certificate = classify(d);
    let mut outcome = InstanceOutcome {
        index,
        graph: d.clone(),
        certificate,
        engine: None,
        timed_out: false,
    };
    if outcome.certificate.decided && !config.engine_always() {
        return Ok(outcome);
    }
    let budget = config.timeout.map_or_else(Budget::unlimited, Budget::with_timeout);
    match check_all_within(&d.edge_ideal(), config.field, &budget) {
        Ok(r) => outcome.engine = Some(r),
        Err(Error::Timeout) => {
            log::warn!("instance {index} timed out and was skipped");
            outcome.timed_out = true;
        }
        Err(e) => return Err(e),
    }
    Ok(outcome)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FindingKind {
    ImplicationViolation,
    ConjectureInconsistent,
    ClassifierDisagreement,
    Timeout,
}

/// An instance worth reporting, echoed verbatim.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub kind: FindingKind,
    pub index: usize,
    pub graph: OrientedGraphJson,
    pub ideal: Vec<String>,
    pub certificate: Certificate,
    pub engine: Option<EngineReport>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TagCounts {
    pub instances: usize,
    pub decided_true: usize,
    pub decided_false: usize,
    pub undecided: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzSummary {
    pub config: FuzzConfig,
    pub instances: usize,
    pub engine_runs: usize,
    pub timeouts: usize,
    pub by_tag: BTreeMap<TheoremTag, TagCounts>,
    pub cl_true: usize,
    pub lq_true: usize,
    pub vs_true: usize,
    pub classifier_disagreements: usize,
    pub conjecture_inconsistent: usize,
    pub implication_violations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzReport {
    pub findings: Vec<Finding>,
    pub summary: FuzzSummary,
}

fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))
}

/// Evaluates instances on a worker pool; results come back in index order.
pub fn evaluate_all(instances: &[WeightedOrientedGraph], config: &FuzzConfig) -> Result<Vec<InstanceOutcome>> {
    pool(config.threads)?.install(|| {
        instances
            .par_iter()
            .enumerate()
            .map(|(i, d)| evaluate(i, d, config))
            .collect()
    })
}

pub fn run_fuzz(config: &FuzzConfig) -> Result<FuzzReport> {
    config.validate()?;
    let instances = match config.mode {
        Mode::Fuzz => fuzz_instances(config.seed, config.n, config.max_weight, config.count),
        Mode::Enumerate => enumerate_instances(config.n, config.max_weight),
    };
    let outcomes = evaluate_all(&instances, config)?;
    Ok(summarize(config, &outcomes))
}

pub fn summarize(config: &FuzzConfig, outcomes: &[InstanceOutcome]) -> FuzzReport {
    let mut s = FuzzSummary {
        config: config.clone(),
        instances: outcomes.len(),
        engine_runs: 0,
        timeouts: 0,
        by_tag: BTreeMap::new(),
        cl_true: 0,
        lq_true: 0,
        vs_true: 0,
        classifier_disagreements: 0,
        conjecture_inconsistent: 0,
        implication_violations: 0,
    };
    let mut findings = Vec::new();
    for o in outcomes {
        let tag = s.by_tag.entry(o.certificate.theorem_tag).or_default();
        tag.instances += 1;
        match o.certificate.value {
            Some(true) => tag.decided_true += 1,
            Some(false) => tag.decided_false += 1,
            None => tag.undecided += 1,
        }
        let mut kinds = Vec::new();
        if o.timed_out {
            s.timeouts += 1;
            kinds.push(FindingKind::Timeout);
        }
        if let Some(e) = &o.engine {
            s.engine_runs += 1;
            s.cl_true += e.is_cl() as usize;
            s.lq_true += e.is_lq() as usize;
            s.vs_true += e.is_vs() as usize;
            if e.implication_violation.is_some() {
                s.implication_violations += 1;
                kinds.push(FindingKind::ImplicationViolation);
            }
            if !e.conjecture_consistent() {
                s.conjecture_inconsistent += 1;
                kinds.push(FindingKind::ConjectureInconsistent);
            }
        }
        if !o.classifier_agrees() {
            s.classifier_disagreements += 1;
            kinds.push(FindingKind::ClassifierDisagreement);
        }
        if kinds.is_empty() {
            continue;
        }
        let names = o.graph.var_names();
        let ideal = o.graph.edge_ideal();
        let engine = o.engine.as_ref().map(|e| EngineReport::new(&ideal, &names, e));
        kinds.sort();
        for kind in kinds {
            findings.push(Finding {
                kind,
                index: o.index,
                graph: o.graph.to_json(),
                ideal: names.render_ideal(&ideal),
                certificate: o.certificate.clone(),
                engine: engine.clone(),
            });
        }
    }
    FuzzReport {
        findings,
        summary: s,
    }
}

impl FuzzReport {
    /// One JSON object per finding, then the summary.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for f in &self.findings {
            out.push_str(&serde_json::to_string(&serde_json::json!({ "finding": f })).expect("serializable"));
            out.push('\n');
        }
        out.push_str(
            &serde_json::to_string(&serde_json::json!({ "summary": self.summary })).expect("serializable"),
        );
        out.push('\n');
        out
    }

    pub fn to_pretty(&self) -> String {
        let s = &self.summary;
        let c = &s.config;
        let mut out = match c.mode {
            Mode::Fuzz => format!(
                "fuzz seed={} n={} max-weight={} field={} verify-all={}\n",
                c.seed, c.n, c.max_weight, c.field, c.verify_all
            ),
            Mode::Enumerate => format!("enumerate n={} max-weight={} field={}\n", c.n, c.max_weight, c.field),
        };
        out.push_str(&format!(
            "instances {}  engine runs {}  timeouts {}\n\n",
            s.instances, s.engine_runs, s.timeouts
        ));
        out.push_str(&format!(
            "{:<24} {:>9} {:>6} {:>6} {:>9}\n",
            "certificate", "instances", "true", "false", "undecided"
        ));
        for (tag, t) in &s.by_tag {
            out.push_str(&format!(
                "{:<24} {:>9} {:>6} {:>6} {:>9}\n",
                tag.as_str(),
                t.instances,
                t.decided_true,
                t.decided_false,
                t.undecided
            ));
        }
        out.push_str(&format!(
            "\nengine: cl {}  lq {}  vs {}\n",
            s.cl_true, s.lq_true, s.vs_true
        ));
        out.push_str(&format!(
            "classifier disagreements {}  conjecture-inconsistent {}  implication violations {}\n",
            s.classifier_disagreements, s.conjecture_inconsistent, s.implication_violations
        ));
        for f in &self.findings {
            out.push_str(&format!(
                "\n[{:?}] instance {}: ({})\n",
                f.kind,
                f.index,
                f.ideal.join(", ")
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        let mut r = SplitMix64::seed_from_u64(42);
        assert_eq!(r.next_u64(), 13679457532755275413);
        assert_eq!(r.next_u64(), 2949826092126892291);
        assert_eq!(r.next_u64(), 5139283748462763858);
    }

    #[test]
    fn draws_are_reproducible() {
        let a = fuzz_instances(7, 5, 3, 50);
        let b = fuzz_instances(7, 5, 3, 50);
        assert_eq!(a, b);
        assert!(a.iter().all(|d| (1..=5).contains(&d.len()) && d.max_weight() <= 3));
    }

    #[test]
    fn enumeration_counts() {
        // one vertex, any weight: only the zero ideal
        assert_eq!(enumerate_instances(1, 3).len(), 1);
        // two vertices: zero ideal, x1 x2^w, x2 x1^w for w in 1..=2 (w = 1 coincide)
        assert_eq!(enumerate_instances(2, 2).len(), 4);
    }

    #[test]
    fn config_validation() {
        assert!(FuzzConfig::default().validate().is_ok());
        let bad = FuzzConfig {
            n: 0,
            ..FuzzConfig::default()
        };
        assert!(bad.validate().is_err());
        let huge = FuzzConfig {
            n: 9,
            mode: Mode::Enumerate,
            ..FuzzConfig::default()
        };
        assert!(huge.validate().is_err());
    }
}
