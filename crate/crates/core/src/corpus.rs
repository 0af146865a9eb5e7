//! Graph corpora for exhaustive and sampled sweeps, and the sweep driver.
//!
//! The exhaustive corpus is every connected labeled graph on `1..=max_n`
//! vertices (all `2^C(n,2)` edge sets, filtered for connectivity), not
//! isomorphism classes. The sampled corpus draws connected graphs from a
//! seeded ChaCha stream, so a seed fixes the sample on every platform.

use std::fmt::{self, Write as _};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{serialize_graph, Format};
use crate::solver::{brute_force_dims, enumerate_dims};
use crate::theorems::{full_report, Budgets, VerificationReport, ENTRY_NAMES};

/// Exhaustive sweeps above this many vertices are refused.
pub const MAX_EXHAUSTIVE_N: usize = 7;

/// All connected labeled graphs on exactly `n` vertices, in order of the
/// bitmask over `C(n,2)` vertex pairs (pairs in lexicographic order).
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    assert!(pairs.len() < 32, "exhaustive enumeration is limited to n <= 8");
    (0u32..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::from_canonical(n, edges);
            g.is_connected().then_some(g)
        })
        .collect()
}

/// Connected labeled graphs on `1..=max_n` vertices.
pub fn exhaustive_corpus(max_n: usize) -> Result<Vec<Graph>> {
    if max_n > MAX_EXHAUSTIVE_N {
        return Err(Error::InvalidParameter(format!(
            "exhaustive corpus limited to {MAX_EXHAUSTIVE_N} vertices, got {max_n}"
        )));
    }
    Ok((1..=max_n).flat_map(connected_graphs).collect())
}

/// `count` connected graphs; each picks `n` uniformly from `sizes` and an
/// edge density uniformly from `[0.2, 0.6)`, then redraws edges until the
/// graph is connected.
pub fn random_connected_sample(count: usize, sizes: &[usize], seed: u64) -> Result<Vec<Graph>> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidParameter(
            "sample sizes must be a nonempty list of positive vertex counts".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n = sizes[rng.gen_range(0..sizes.len())];
        let density: f64 = rng.gen_range(0.2..0.6);
        loop {
            let edges: Vec<(usize, usize)> = (0..n)
                .tuple_combinations()
                .filter(|_| rng.gen_bool(density))
                .collect();
            let g = Graph::from_canonical(n, edges);
            if g.is_connected() {
                out.push(g);
                break;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub budgets: Budgets,
    /// The brute-force oracle runs on graphs with at most this many edges.
    pub oracle_max_edges: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            budgets: Budgets::default(),
            oracle_max_edges: 16,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EntryTally {
    pub applicable: usize,
    pub passed: usize,
    pub exhausted: usize,
}

/// A graph on which some check failed, which points at a bug.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: Graph,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub graphs: usize,
    pub with_dim: usize,
    pub without_dim: usize,
    /// Graphs without a DIM that contain a 4-cycle.
    pub without_dim_with_c4: usize,
    pub with_partition: usize,
    pub oracle_checked: usize,
    pub oracle_discrepancies: usize,
    pub tallies: Vec<(String, EntryTally)>,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepSummary {
    pub fn violations(&self) -> usize {
        self.counterexamples.len()
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graphs = {}", self.graphs)?;
        writeln!(f, "with_dim = {}", self.with_dim)?;
        writeln!(f, "without_dim = {}", self.without_dim)?;
        writeln!(f, "without_dim_with_c4 = {}", self.without_dim_with_c4)?;
        writeln!(f, "with_partition = {}", self.with_partition)?;
        writeln!(f, "oracle_checked = {}", self.oracle_checked)?;
        writeln!(f, "oracle_discrepancies = {}", self.oracle_discrepancies)?;
        for (name, t) in &self.tallies {
            writeln!(
                f,
                "check.{name} = applicable {} passed {} exhausted {}",
                t.applicable, t.passed, t.exhausted
            )?;
        }
        writeln!(f, "counterexamples = {}", self.counterexamples.len())?;
        Ok(())
    }
}

struct GraphOutcome {
    report: VerificationReport,
    has_c4: bool,
    oracle: Option<bool>,
}

fn evaluate(g: &Graph, config: &SweepConfig) -> GraphOutcome {
    let report = full_report(g, &config.budgets);
    let oracle = (g.m() <= config.oracle_max_edges).then(|| {
        match enumerate_dims(g, config.budgets.enumeration) {
            Ok(dims) => brute_force_dims(g).is_ok_and(|bf| bf == dims),
            Err(_) => false,
        }
    });
    let has_c4 = !report.dim_exists
        && crate::cycles::enumerate_cycles(g, 4)
            .iter()
            .any(|c| c.len() == 4);
    GraphOutcome {
        report,
        has_c4,
        oracle,
    }
}

/// Runs [`full_report`] (and the brute-force oracle where it is cheap) on
/// every graph. Graphs are evaluated in parallel; the summary depends only on
/// the inputs.
pub fn sweep(graphs: &[Graph], config: &SweepConfig) -> SweepSummary {
    let outcomes: Vec<GraphOutcome> = graphs.par_iter().map(|g| evaluate(g, config)).collect();

    let mut summary = SweepSummary {
        graphs: graphs.len(),
        with_dim: 0,
        without_dim: 0,
        without_dim_with_c4: 0,
        with_partition: 0,
        oracle_checked: 0,
        oracle_discrepancies: 0,
        tallies: ENTRY_NAMES
            .iter()
            .map(|n| (n.to_string(), EntryTally::default()))
            .collect(),
        counterexamples: Vec::new(),
    };
    for (g, out) in graphs.iter().zip(outcomes) {
        let r = &out.report;
        if r.dim_exists {
            summary.with_dim += 1;
        } else {
            summary.without_dim += 1;
            summary.without_dim_with_c4 += usize::from(out.has_c4);
        }
        summary.with_partition += usize::from(r.partition_classes.is_some());
        let mut reasons = Vec::new();
        if let Some(agrees) = out.oracle {
            summary.oracle_checked += 1;
            if !agrees {
                summary.oracle_discrepancies += 1;
                reasons.push("oracle".to_string());
            }
        }
        for (entry, (_, tally)) in r.entries.iter().zip(summary.tallies.iter_mut()) {
            tally.applicable += usize::from(entry.applicable);
            tally.passed += usize::from(entry.passed);
            tally.exhausted += usize::from(entry.budget_exhausted);
            if entry.is_violation() {
                reasons.push(entry.name.clone());
            }
        }
        if !reasons.is_empty() {
            summary.counterexamples.push(Counterexample {
                graph: g.clone(),
                reason: reasons.join(","),
            });
        }
    }
    summary
}

/// Edge-list text for a counterexample, with the failing checks as a comment.
pub fn counterexample_file(c: &Counterexample) -> String {
    let mut out = String::new();
    writeln!(out, "# failed: {}", c.reason).unwrap();
    out.push_str(&serialize_graph(&c.graph, Format::EdgeList));
    out
}
