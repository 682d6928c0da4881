//! Exhaustive and sampled `(p, q)`-coloring verification over a [`ColorTable`].
//!
//! Exhaustive runs walk subsets in colex order over vertex indices. Sampled
//! runs split the sample sequence into fixed blocks of [`SAMPLE_BLOCK`]
//! samples; block `b` draws from ChaCha8 seeded with the run seed on stream
//! `b`. Work is spread over blocks, so reports depend only on the seed and
//! the sample count, never on the worker count.
//!
//! Reported violations are always the first ones in enumeration order (colex
//! for exhaustive runs, sample index for sampled runs), capped at
//! [`VerifyOptions::violation_cap`].

pub mod combos;

use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::table::ColorTable;

pub use combos::{binomial, Colex};

/// Samples per PRNG stream in sampled mode.
pub const SAMPLE_BLOCK: u64 = 4096;
/// Default exhaustive budget: subset evaluations per run.
pub const DEFAULT_BUDGET: u64 = 1 << 31;

const EXHAUSTIVE_CHUNK: u128 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled { seed: u64, samples: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Target {
    /// Every `p`-subset spans at least `q` colors.
    Pq { p: usize, q: usize },
    /// Every subset `S` with `2 ≤ |S| ≤ smax` spans at least `|S| - 1` colors.
    Strong { smax: usize },
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub mode: Mode,
    pub budget: u64,
    pub violation_cap: usize,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { mode: Mode::Exhaustive, budget: DEFAULT_BUDGET, violation_cap: 1, workers: None }
    }
}

impl VerifyOptions {
    pub fn exhaustive() -> Self {
        VerifyOptions::default()
    }

    pub fn sampled(seed: u64, samples: u64) -> Self {
        VerifyOptions { mode: Mode::Sampled { seed, samples }, ..VerifyOptions::default() }
    }
}

/// A subset spanning too few colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub subset: Vec<usize>,
    pub vertices: Vec<String>,
    pub distinct_colors: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub coloring: String,
    pub universe: String,
    pub vertices: usize,
    pub mode: Mode,
    pub target: Target,
    pub subsets_checked: u64,
    pub stopped_early: bool,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub wall_time_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn describe(mut self, coloring: impl Into<String>, universe: impl Into<String>) -> Self {
        self.coloring = coloring.into();
        self.universe = universe.into();
        self
    }
}

/// Per-worker distinct-color counter.
struct Counter {
    stamp: Vec<u32>,
    generation: u32,
}

impl Counter {
    fn new(colors: usize) -> Self {
        Counter { stamp: vec![0; colors], generation: 0 }
    }

    /// Distinct colors on `subset`, stopping once `enough` are seen.
    fn distinct(&mut self, table: &ColorTable, subset: &[usize], enough: usize) -> usize {
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.generation = 1;
        }
        let mut count = 0;
        for (k, &b) in subset.iter().enumerate() {
            for &a in &subset[..k] {
                let id = table.id(a, b) as usize;
                if self.stamp[id] != self.generation {
                    self.stamp[id] = self.generation;
                    count += 1;
                    if count >= enough {
                        return count;
                    }
                }
            }
        }
        count
    }
}

fn required(target: Target, size: usize) -> usize {
    match target {
        Target::Pq { q, .. } => q,
        Target::Strong { .. } => size - 1,
    }
}

fn sizes(target: Target, n: usize) -> Vec<usize> {
    match target {
        Target::Pq { p, .. } => vec![p],
        Target::Strong { smax } => (2..=smax.min(n)).collect(),
    }
}

fn validate(target: Target) -> Result<()> {
    match target {
        Target::Pq { p, q } => {
            if p < 2 || q < 1 || q as u128 > binomial(p as u64, 2) {
                return Err(Error::Domain(format!("need p >= 2 and 1 <= q <= C(p,2), got p={p}, q={q}")));
            }
        }
        Target::Strong { smax } => {
            if smax < 2 {
                return Err(Error::Domain(format!("need smax >= 2, got {smax}")));
            }
        }
    }
    Ok(())
}

/// How many subsets an exhaustive run would check.
pub fn exhaustive_count(n: usize, target: Target) -> u128 {
    sizes(target, n).iter().fold(0u128, |acc, &k| acc.saturating_add(binomial(n as u64, k as u64)))
}

struct Found {
    /// Position of the violation in the run's enumeration order.
    position: u64,
    violation: Violation,
}

fn violation(table: &ColorTable, subset: Vec<usize>, distinct_colors: usize) -> Violation {
    let vertices = subset.iter().map(|&i| table.labels()[i].clone()).collect();
    Violation { subset, vertices, distinct_colors }
}

fn run_exhaustive(table: &ColorTable, target: Target, cap: usize) -> (u64, Vec<Found>) {
    let n = table.len();
    let mut offset = 0u64;
    let mut found: Vec<Found> = Vec::new();
    for k in sizes(target, n) {
        let total = binomial(n as u64, k as u64);
        let need = required(target, k);
        let chunks: Vec<u128> = (0..total.div_ceil(EXHAUSTIVE_CHUNK)).collect();
        let per_chunk: Vec<Vec<Found>> = chunks
            .par_iter()
            .map_init(
                || Counter::new(table.num_colors()),
                |counter, &c| {
                    let start = c * EXHAUSTIVE_CHUNK;
                    let end = (start + EXHAUSTIVE_CHUNK).min(total);
                    let mut subset = combos::unrank(start, k);
                    let mut local = Vec::new();
                    for r in start..end {
                        let distinct = counter.distinct(table, &subset, need);
                        if distinct < need {
                            local.push(Found {
                                position: offset + r as u64,
                                violation: violation(table, subset.clone(), distinct),
                            });
                            if local.len() >= cap {
                                break;
                            }
                        }
                        combos::next_colex(&mut subset, n);
                    }
                    local
                },
            )
            .collect();
        found.extend(per_chunk.into_iter().flatten());
        found.truncate(cap);
        offset += total as u64;
        if found.len() >= cap {
            break;
        }
    }
    (exhaustive_count(n, target) as u64, found)
}

fn run_sampled(table: &ColorTable, target: Target, seed: u64, samples: u64, cap: usize) -> (u64, Vec<Found>) {
    let n = table.len();
    let sizes = sizes(target, n);
    if sizes.is_empty() || sizes[0] > n {
        return (0, Vec::new());
    }
    let (lo, hi) = (sizes[0], *sizes.last().unwrap());
    let blocks: Vec<u64> = (0..samples.div_ceil(SAMPLE_BLOCK)).collect();
    let per_block: Vec<Vec<Found>> = blocks
        .par_iter()
        .map_init(
            || Counter::new(table.num_colors()),
            |counter, &b| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(b);
                let start = b * SAMPLE_BLOCK;
                let end = (start + SAMPLE_BLOCK).min(samples);
                let mut local = Vec::new();
                for position in start..end {
                    let k = if lo == hi { lo } else { rng.gen_range(lo..=hi) };
                    let mut subset = sample(&mut rng, n, k).into_vec();
                    subset.sort_unstable();
                    let need = required(target, k);
                    let distinct = counter.distinct(table, &subset, need);
                    if distinct < need {
                        local.push(Found { position, violation: violation(table, subset, distinct) });
                        if local.len() >= cap {
                            break;
                        }
                    }
                }
                local
            },
        )
        .collect();
    let mut found: Vec<Found> = per_block.into_iter().flatten().collect();
    found.truncate(cap);
    (samples, found)
}

fn run(table: &ColorTable, target: Target, opts: &VerifyOptions) -> Result<VerificationReport> {
    validate(target)?;
    if opts.violation_cap == 0 {
        return Err(Error::Domain("violation cap must be at least 1".into()));
    }
    match opts.mode {
        Mode::Exhaustive => {
            let needed = exhaustive_count(table.len(), target);
            if needed > opts.budget as u128 {
                let needed = if needed == u128::MAX { "more than 2^128".to_string() } else { needed.to_string() };
                return Err(Error::Infeasible {
                    needed,
                    budget: opts.budget,
                    hint: " (raise --budget or use sampled mode)".into(),
                });
            }
        }
        Mode::Sampled { samples, .. } => {
            if samples > opts.budget {
                return Err(Error::Infeasible {
                    needed: samples.to_string(),
                    budget: opts.budget,
                    hint: String::new(),
                });
            }
        }
    }
    let started = Instant::now();
    let cap = opts.violation_cap;
    let work = || match opts.mode {
        Mode::Exhaustive => run_exhaustive(table, target, cap),
        Mode::Sampled { seed, samples } => run_sampled(table, target, seed, samples, cap),
    };
    let (total, found) = match opts.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::Domain(format!("cannot start workers: {e}")))?
            .install(work),
        None => work(),
    };
    let stopped_early = found.len() >= cap && found.last().is_some_and(|f| f.position + 1 < total);
    let subsets_checked = if stopped_early { found.last().unwrap().position + 1 } else { total };
    let mut violations: Vec<Violation> = found.into_iter().map(|f| f.violation).collect();
    violations.sort_by(|a, b| {
        (a.subset.len(), a.subset.iter().rev().collect::<Vec<_>>())
            .cmp(&(b.subset.len(), b.subset.iter().rev().collect::<Vec<_>>()))
    });
    Ok(VerificationReport {
        coloring: String::new(),
        universe: String::new(),
        vertices: table.len(),
        mode: opts.mode,
        target,
        subsets_checked,
        stopped_early,
        violations,
        wall_time_ms: started.elapsed().as_millis(),
    })
}

/// Checks that every `p`-subset spans at least `q` distinct colors.
pub fn verify_pq(table: &ColorTable, p: usize, q: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    run(table, Target::Pq { p, q }, opts)
}

/// Checks that every subset `S` with `|S| ≤ smax` spans at least `|S| - 1`
/// distinct colors.
pub fn verify_strong(table: &ColorTable, smax: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    run(table, Target::Strong { smax }, opts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRow {
    pub v: String,
    pub w: String,
    pub color: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessDetail {
    pub rows: Vec<WitnessRow>,
    pub distinct_colors: usize,
}

/// Every pair of `subset` with its encoded color, pairs in colex order.
pub fn witness_detail(table: &ColorTable, subset: &[usize]) -> Result<WitnessDetail> {
    if subset.is_empty() {
        return Err(Error::Domain("empty subset".into()));
    }
    if let Some(&bad) = subset.iter().find(|&&i| i >= table.len()) {
        return Err(Error::Domain(format!("vertex index {bad} outside the universe")));
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut rows = Vec::new();
    let mut colors = std::collections::BTreeSet::new();
    for (k, &b) in sorted.iter().enumerate() {
        for &a in &sorted[..k] {
            let color = table.encoding(a, b).to_string();
            colors.insert(color.clone());
            rows.push(WitnessRow { v: table.labels()[a].clone(), w: table.labels()[b].clone(), color });
        }
    }
    Ok(WitnessDetail { rows, distinct_colors: colors.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::BlockVariant;
    use crate::vectors::ResolutionChain;

    fn c1_table(alpha: usize) -> ColorTable {
        let chain: ResolutionChain = "1,2,4".parse().unwrap();
        ColorTable::block_full(alpha, &chain, BlockVariant::Eta).unwrap()
    }

    #[test]
    fn c1_is_a_4_3_coloring_on_16_vertices() {
        let r = verify_pq(&c1_table(4), 4, 3, &VerifyOptions::exhaustive()).unwrap();
        assert_eq!(r.subsets_checked, 1820);
        assert!(r.passed());
        assert!(!r.stopped_early);
    }

    #[test]
    fn single_edges_never_fail() {
        let r = verify_pq(&c1_table(3), 2, 1, &VerifyOptions::exhaustive()).unwrap();
        assert_eq!(r.subsets_checked, 28);
        assert!(r.passed());
        let r = verify_strong(&c1_table(3), 2, &VerifyOptions::exhaustive()).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn rainbow_base_case_passes_strong_check() {
        // alpha <= r_1: every pair has its own color
        let t = c1_table(2);
        assert_eq!(t.num_colors(), 6);
        let r = verify_strong(&t, 4, &VerifyOptions::exhaustive()).unwrap();
        assert_eq!(r.subsets_checked, 6 + 4 + 1);
        assert!(r.passed());
    }

    #[test]
    fn monochromatic_triangle_is_reported() {
        let t = ColorTable::from_edge_colors(4, &[0, 0, 1, 0, 1, 1]).unwrap();
        // edges 01,02,03,12,13,23 -> triangle 0,1,2 uses colors {0,0,0}
        let r = verify_pq(&t, 3, 2, &VerifyOptions::exhaustive()).unwrap();
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].subset, vec![0, 1, 2]);
        assert_eq!(r.violations[0].distinct_colors, 1);
        assert!(r.stopped_early);
        assert_eq!(r.subsets_checked, 1);
        let opts = VerifyOptions { violation_cap: 10, ..VerifyOptions::exhaustive() };
        let r = verify_pq(&t, 3, 2, &opts).unwrap();
        assert!(!r.stopped_early);
        assert_eq!(r.subsets_checked, 4);
    }

    #[test]
    fn budget_refusal_reports_needed_count() {
        let opts = VerifyOptions { budget: 100, ..VerifyOptions::exhaustive() };
        match verify_pq(&c1_table(4), 4, 3, &opts) {
            Err(Error::Infeasible { needed, .. }) => assert_eq!(needed, "1820"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_targets() {
        let t = c1_table(2);
        assert!(verify_pq(&t, 3, 4, &VerifyOptions::exhaustive()).is_err());
        assert!(verify_pq(&t, 1, 1, &VerifyOptions::exhaustive()).is_err());
        assert!(verify_strong(&t, 1, &VerifyOptions::exhaustive()).is_err());
    }

    #[test]
    fn passing_q_implies_passing_smaller_q() {
        let t = c1_table(5);
        assert!(verify_pq(&t, 4, 3, &VerifyOptions::exhaustive()).unwrap().passed());
        for q in 1..3 {
            assert!(verify_pq(&t, 4, q, &VerifyOptions::exhaustive()).unwrap().passed());
        }
    }

    #[test]
    fn sampled_runs_ignore_worker_count() {
        let t = ColorTable::from_edge_colors(6, &[0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0]).unwrap();
        let base = VerifyOptions { violation_cap: 5, ..VerifyOptions::sampled(7, 10_000) };
        let reports: Vec<String> = [1, 2, 4]
            .iter()
            .map(|&w| {
                let opts = VerifyOptions { workers: Some(w), ..base.clone() };
                let r = verify_pq(&t, 3, 2, &opts).unwrap();
                format!("{:?}|{}|{}", r.violations, r.subsets_checked, r.stopped_early)
            })
            .collect();
        assert_eq!(reports[0], reports[1]);
        assert_eq!(reports[1], reports[2]);
    }

    #[test]
    fn sampled_violations_reverify() {
        let t = ColorTable::from_edge_colors(6, &[0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0]).unwrap();
        let opts = VerifyOptions { violation_cap: 3, ..VerifyOptions::sampled(0, 5000) };
        let r = verify_pq(&t, 3, 2, &opts).unwrap();
        assert!(!r.violations.is_empty());
        for v in &r.violations {
            let detail = witness_detail(&t, &v.subset).unwrap();
            assert_eq!(detail.distinct_colors, v.distinct_colors);
            assert!(detail.distinct_colors < 2);
        }
    }

    #[test]
    fn witness_detail_rows() {
        let t = c1_table(3);
        let d = witness_detail(&t, &[0, 1]).unwrap();
        assert_eq!(d.rows.len(), 1);
        assert_eq!(d.distinct_colors, 1);
        assert!(witness_detail(&t, &[]).is_err());
        // search for a triangle with a repeated color
        let t = c1_table(4);
        let triple = Colex::new(t.len(), 3)
            .find(|s| {
                let ids = [t.id(s[0], s[1]), t.id(s[0], s[2]), t.id(s[1], s[2])];
                ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2]
            })
            .expect("some triangle repeats a color");
        let d = witness_detail(&t, &triple).unwrap();
        assert_eq!(d.rows.len(), 3);
        assert_eq!(d.distinct_colors, 2);
    }
}
