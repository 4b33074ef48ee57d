//! Head-to-head benchmark of the search methods against edge rejection
//! sampling, with verdict cross-checks on every instance.

use std::fmt::Write;
use std::str::FromStr;
use std::time::Instant;

use rand::RngCore;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::baseline::{random_edge_baseline, BaselineError};
use crate::generators::{
    self, assign_weights, prufer_random_tree, wilson_spanning_tree, GenError, WeightKind, WeightSpec,
};
use crate::io::decimal::{parse_doubled_epsilon, DecimalError};
use crate::registry::MethodRegistry;
use crate::splitter::{find_cut_edge_descent, improved_start, SplitError, StartRule, ToleranceWindow};
use crate::tree::WeightedTree;

pub const BASELINE: &str = "baseline";

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Split(#[from] SplitError),
    #[error(transparent)]
    Baseline(#[from] BaselineError),
    #[error(transparent)]
    Epsilon(#[from] DecimalError),
    #[error("instance {instance}: {detail}")]
    Disagreement { instance: usize, detail: String },
}

#[derive(Clone, Debug)]
pub enum InstanceSource {
    Prufer {
        n: usize,
    },
    Grid {
        width: usize,
        height: usize,
    },
    /// The same tree for every trial; only the random seeds change.
    Fixed(WeightedTree),
}

/// Tolerance per instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EpsilonPolicy {
    /// A decimal at the instance's scale.
    Absolute(String),
    /// `ε = S / k`, rounded down to whole scaled units of `2ε`.
    FractionOfTotal(u64),
}

impl EpsilonPolicy {
    pub fn doubled_for(&self, tree: &WeightedTree) -> Result<i64, BenchError> {
        match self {
            EpsilonPolicy::Absolute(text) => Ok(parse_doubled_epsilon(text, tree.scale())?),
            EpsilonPolicy::FractionOfTotal(k) => Ok((2 * tree.total_weight() as i128 / *k as i128) as i64),
        }
    }
}

/// `S/<k>` or a plain decimal.
impl FromStr for EpsilonPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(k) = s.strip_prefix("S/") {
            return match k.parse::<u64>() {
                Ok(k) if k > 0 => Ok(EpsilonPolicy::FractionOfTotal(k)),
                _ => Err(format!("bad divisor in `{s}`")),
            };
        }
        parse_doubled_epsilon(s, crate::io::decimal::MAX_SCALE).map_err(|e| e.to_string())?;
        Ok(EpsilonPolicy::Absolute(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StartKind {
    Improved,
    Random,
}

impl FromStr for StartKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "improved" => Ok(StartKind::Improved),
            "random" => Ok(StartKind::Random),
            _ => Err(format!("unknown start strategy `{s}`")),
        }
    }
}

impl StartKind {
    fn label(self) -> &'static str {
        match self {
            StartKind::Improved => "improved",
            StartKind::Random => "random",
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub source: InstanceSource,
    /// Ignored for [`InstanceSource::Fixed`].
    pub weights: WeightKind,
    pub epsilon: EpsilonPolicy,
    /// Registry method names, plus `baseline`.
    pub methods: Vec<String>,
    pub starts: Vec<StartKind>,
    pub trials: usize,
    pub seed: u64,
    pub max_attempts: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub start: Option<StartKind>,
    pub instances: usize,
    pub split: usize,
    pub not_splittable: usize,
    /// Baseline only.
    pub gave_up: usize,
    /// Iterations for searches, attempts for the baseline (give-ups count as
    /// `max_attempts`).
    pub mean_steps: f64,
    pub median_steps: f64,
    pub total_us: f64,
    pub mean_us: f64,
}

impl BenchRow {
    /// Everything except the timings, which is what is reproducible.
    pub fn counts(&self) -> (String, Option<StartKind>, usize, usize, usize, usize, u64, u64) {
        (
            self.method.clone(),
            self.start,
            self.instances,
            self.split,
            self.not_splittable,
            self.gave_up,
            self.mean_steps.to_bits(),
            self.median_steps.to_bits(),
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub instances: usize,
    /// Instances where the reference search split.
    pub splittable_instances: usize,
}

struct Run {
    split: bool,
    gave_up: bool,
    steps: u64,
    elapsed_us: f64,
}

struct Column {
    method: String,
    start: Option<StartKind>,
}

struct Seeds {
    topology: u64,
    weights: u64,
    start: u64,
    baseline: u64,
}

fn elapsed_us(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e6
}

impl BenchConfig {
    fn columns(&self, registry: &MethodRegistry) -> Result<Vec<Column>, BenchError> {
        if self.trials == 0 {
            return Err(BenchError::Config("trials must be at least 1".into()));
        }
        if self.methods.is_empty() {
            return Err(BenchError::Config("no methods selected".into()));
        }
        if self.max_attempts == 0 {
            return Err(BenchError::Config("max_attempts must be at least 1".into()));
        }
        let mut columns = Vec::new();
        for name in &self.methods {
            if name == BASELINE {
                columns.push(Column {
                    method: name.clone(),
                    start: None,
                });
                continue;
            }
            let method = registry
                .get(name)
                .ok_or_else(|| BenchError::Config(format!("unknown method `{name}`")))?;
            if method.uses_start() {
                if self.starts.is_empty() {
                    return Err(BenchError::Config("no start strategies selected".into()));
                }
                for &start in &self.starts {
                    columns.push(Column {
                        method: name.clone(),
                        start: Some(start),
                    });
                }
            } else {
                columns.push(Column {
                    method: name.clone(),
                    start: None,
                });
            }
        }
        Ok(columns)
    }

    fn instance(&self, seeds: &Seeds) -> Result<WeightedTree, BenchError> {
        let topology = match &self.source {
            InstanceSource::Fixed(tree) => return Ok(tree.clone()),
            InstanceSource::Prufer { n } => prufer_random_tree(*n, seeds.topology)?,
            InstanceSource::Grid { width, height } => wilson_spanning_tree(*width, *height, seeds.topology)?,
        };
        let spec = WeightSpec {
            kind: self.weights,
            seed: seeds.weights,
        };
        Ok(assign_weights(&topology, &spec)?)
    }
}

fn run_instance(
    config: &BenchConfig,
    registry: &MethodRegistry,
    columns: &[Column],
    index: usize,
    seeds: &Seeds,
) -> Result<(Vec<Run>, bool), BenchError> {
    let tree = config.instance(seeds)?;
    let window = ToleranceWindow::for_tree(&tree, config.epsilon.doubled_for(&tree)?)?;
    let reference = find_cut_edge_descent(&tree, &window, improved_start(&tree))?;
    let splittable = reference.verdict.is_split();
    let disagree = |detail: String| BenchError::Disagreement {
        instance: index,
        detail,
    };

    let mut runs = Vec::with_capacity(columns.len());
    let mut paths: Vec<(StartKind, &str, Vec<usize>)> = Vec::new();
    for column in columns {
        if column.method == BASELINE {
            let clock = Instant::now();
            let outcome = random_edge_baseline(&tree, &window, config.max_attempts, seeds.baseline);
            let elapsed = elapsed_us(clock);
            let outcome = match outcome {
                Err(BaselineError::NoEdges) => {
                    runs.push(Run {
                        split: false,
                        gave_up: true,
                        steps: config.max_attempts,
                        elapsed_us: elapsed,
                    });
                    continue;
                }
                other => other?,
            };
            if outcome.found() && !splittable {
                return Err(disagree(
                    "baseline found an edge but descent reports not splittable".into(),
                ));
            }
            runs.push(Run {
                split: outcome.found(),
                gave_up: !outcome.found(),
                steps: outcome.attempts(),
                elapsed_us: elapsed,
            });
            continue;
        }
        let method = registry.get(&column.method).expect("validated in columns()");
        let start = match column.start {
            Some(StartKind::Random) => StartRule::Random { seed: seeds.start },
            _ => StartRule::Improved,
        }
        .resolve(&tree)?;
        let clock = Instant::now();
        let result = method.split(&tree, &window, start)?;
        let elapsed = elapsed_us(clock);
        if result.verdict.is_split() != splittable {
            return Err(disagree(format!(
                "{} ({}) disagrees with the reference verdict",
                column.method,
                column.start.map_or("-", StartKind::label)
            )));
        }
        if let Some(kind) = column.start {
            let path = result.path();
            if let Some((_, other, _)) = paths
                .iter()
                .find(|(k, m, p)| *k == kind && *m != method.name() && *p != path)
            {
                return Err(disagree(format!(
                    "{} and {other} visit different vertices from the same {} start",
                    column.method,
                    kind.label()
                )));
            }
            paths.push((kind, method.name(), path));
        }
        runs.push(Run {
            split: result.verdict.is_split(),
            gave_up: false,
            steps: result.iterations() as u64,
            elapsed_us: elapsed,
        });
    }
    Ok((runs, splittable))
}

fn median(sorted: &[u64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2] as f64
    } else {
        (sorted[n / 2 - 1] as f64 + sorted[n / 2] as f64) / 2.0
    }
}

/// Runs every configured method on `config.trials` instances.
///
/// Instances are independent and evaluated in parallel; all seeds are drawn
/// up front from ChaCha8 seeded with `config.seed`, so the report apart from
/// timings depends only on the configuration.
pub fn run_bench(config: &BenchConfig, registry: &MethodRegistry) -> Result<BenchReport, BenchError> {
    let columns = config.columns(registry)?;
    let mut master = generators::rng_for(config.seed);
    let seeds: Vec<Seeds> = (0..config.trials)
        .map(|_| Seeds {
            topology: master.next_u64(),
            weights: master.next_u64(),
            start: master.next_u64(),
            baseline: master.next_u64(),
        })
        .collect();

    let outcomes = seeds
        .par_iter()
        .enumerate()
        .map(|(i, s)| run_instance(config, registry, &columns, i, s))
        .collect::<Result<Vec<_>, _>>()?;

    let rows = columns
        .iter()
        .enumerate()
        .map(|(c, column)| {
            let runs: Vec<&Run> = outcomes.iter().map(|(runs, _)| &runs[c]).collect();
            let mut steps: Vec<u64> = runs.iter().map(|r| r.steps).collect();
            steps.sort_unstable();
            let total_us: f64 = runs.iter().map(|r| r.elapsed_us).sum();
            let split = runs.iter().filter(|r| r.split).count();
            let gave_up = runs.iter().filter(|r| r.gave_up).count();
            BenchRow {
                method: column.method.clone(),
                start: column.start,
                instances: runs.len(),
                split,
                not_splittable: runs.len() - split - gave_up,
                gave_up,
                mean_steps: steps.iter().sum::<u64>() as f64 / steps.len() as f64,
                median_steps: median(&steps),
                total_us,
                mean_us: total_us / runs.len() as f64,
            }
        })
        .collect();

    Ok(BenchReport {
        rows,
        instances: config.trials,
        splittable_instances: outcomes.iter().filter(|(_, s)| *s).count(),
    })
}

impl BenchReport {
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{} instances, {} splittable\n{:<10} {:<9} {:>7} {:>9} {:>8} {:>11} {:>9} {:>12}\n",
            self.instances,
            self.splittable_instances,
            "method",
            "start",
            "split",
            "not_split",
            "gave_up",
            "mean_steps",
            "median",
            "mean_us"
        );
        for row in &self.rows {
            writeln!(
                out,
                "{:<10} {:<9} {:>7} {:>9} {:>8} {:>11.3} {:>9.1} {:>12.2}",
                row.method,
                row.start.map_or("-", StartKind::label),
                row.split,
                row.not_splittable,
                row.gave_up,
                row.mean_steps,
                row.median_steps,
                row.mean_us
            )
            .unwrap();
        }
        out
    }
}
