//! Seeded corpus runs: every operation on sampled tuples, checked by the
//! measures and, below the cap, by the oracle's enumeration.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::generate::{generate, Family, GeneratorSpec};
use super::tuples::{all_instances, sample};
use crate::connectivity::two_separations;
use crate::engine::Engine;
use crate::error::Error;
use crate::measures::{BoundKind, Instance, Measurer};
use crate::oracle::{Oracle, DEFAULT_CAP};
use crate::plane::{PlaneGraph, Vid};

/// Operation names as used in summaries and on the command line.
pub const OPS: [&str; 6] = ["base", "edge", "vertex", "two-edge", "vertex-edge", "split"];

#[derive(Clone, Debug)]
pub struct StressConfig {
    pub nmax: usize,
    /// Graphs per family.
    pub count: usize,
    pub seed: u64,
    pub families: Vec<Family>,
    /// Tuples per operation and graph; `None` runs all of them.
    pub per_op: Option<usize>,
    /// Enumerate with the oracle when `n` is at most this.
    pub oracle_cap: usize,
    pub measurer: Measurer,
    /// Operations to run, by name from [`OPS`].
    pub ops: Vec<String>,
}

impl StressConfig {
    pub fn new(nmax: usize, count: usize, seed: u64) -> Self {
        StressConfig {
            nmax,
            count,
            seed,
            families: Family::ALL.to_vec(),
            per_op: None,
            oracle_cap: DEFAULT_CAP,
            measurer: Measurer::exact(),
            ops: OPS.iter().map(|s| s.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub id: String,
    pub spec: GeneratorSpec,
    pub op: String,
    pub instance: Option<Instance>,
    pub reason: String,
    /// The graph in file format.
    pub graph: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StressSummary {
    pub graphs: usize,
    /// Cases run per operation.
    pub cases: BTreeMap<String, usize>,
    /// Cases cross-checked by oracle enumeration.
    pub oracle_checked: usize,
    pub violations: usize,
    pub failures: Vec<Failure>,
}

impl StressSummary {
    pub fn total_cases(&self) -> usize {
        self.cases.values().sum()
    }

    pub fn clean(&self) -> bool {
        self.violations == 0
    }
}

/// Graph specs of the run, in a fixed order.
pub fn corpus(cfg: &StressConfig) -> Vec<GeneratorSpec> {
    let mut out = Vec::new();
    for (fi, &family) in cfg.families.iter().enumerate() {
        let sizes: Vec<usize> = (3..=cfg.nmax).filter(|&n| family.admits(n)).collect();
        if sizes.is_empty() {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(31).wrapping_add(fi as u64));
        for _ in 0..cfg.count {
            let n = sizes[rng.gen_range(0..sizes.len())];
            out.push(GeneratorSpec { family, n, seed: rng.gen() });
        }
    }
    out
}

pub fn stress(cfg: &StressConfig) -> StressSummary {
    let specs = corpus(cfg);
    let parts: Vec<StressSummary> = specs.par_iter().enumerate().map(|(i, spec)| run_graph(cfg, i, spec)).collect();
    let mut out = StressSummary::default();
    for p in parts {
        out.graphs += p.graphs;
        for (k, c) in p.cases {
            *out.cases.entry(k).or_default() += c;
        }
        out.oracle_checked += p.oracle_checked;
        out.violations += p.violations;
        out.failures.extend(p.failures);
    }
    out
}

struct Run<'a> {
    cfg: &'a StressConfig,
    engine: Engine,
    oracle: Oracle,
    spec: GeneratorSpec,
    g: PlaneGraph,
    prefix: String,
    out: StressSummary,
}

impl Run<'_> {
    fn fail(&mut self, op: &str, instance: Option<Instance>, reason: String) {
        let id = format!("{}-{}-{}", self.prefix, op, self.out.failures.len());
        self.out.violations += 1;
        self.out.failures.push(Failure {
            id,
            spec: self.spec,
            op: op.to_string(),
            instance,
            reason,
            graph: self.g.to_text(),
        });
    }

    /// Records one engine outcome, re-checking it independently.
    fn check(&mut self, op: &str, inst: &Instance, res: crate::Result<(Vec<Vid>, crate::BoundReport)>) {
        *self.out.cases.entry(op.to_string()).or_default() += 1;
        let (path, report) = match res {
            Ok(r) => r,
            Err(e) => return self.fail(op, Some(*inst), e.to_string()),
        };
        if !report.satisfied {
            return self.fail(op, Some(*inst), format!("bound fails: {report}"));
        }
        let (valid, recomputed) = self.oracle.check_path(&self.g, inst, &path);
        if !valid {
            return self.fail(op, Some(*inst), format!("oracle rejects path {path:?}"));
        }
        let Some(o) = recomputed else {
            return self.fail(op, Some(*inst), "oracle could not evaluate the bound".into());
        };
        if !o.satisfied
            || o.bridge_count != report.bridge_count
            || o.budget_thirds != report.budget_thirds
            || o.beta_thirds != report.beta_thirds
        {
            return self.fail(op, Some(*inst), format!("oracle recomputes {o:?} against {report}"));
        }
        if self.g.n() <= self.cfg.oracle_cap {
            match self.oracle.verify_instance("", &self.g, inst, Some((&path, &report))) {
                Ok(r) => {
                    self.out.oracle_checked += 1;
                    if r.min_bridge_count.is_none_or(|m| m > report.bridge_count) {
                        self.fail(op, Some(*inst), format!("enumeration finds minimum {:?}", r.min_bridge_count));
                    }
                }
                Err(e) => self.fail(op, Some(*inst), e.to_string()),
            }
        }
    }
}

fn run_graph(cfg: &StressConfig, index: usize, spec: &GeneratorSpec) -> StressSummary {
    let prefix = format!("{}-n{}-{}", spec.family, spec.n, index);
    let mut out = StressSummary { graphs: 1, ..Default::default() };
    let g = match generate(spec) {
        Ok(g) => g,
        Err(e) => {
            out.violations += 1;
            out.failures.push(Failure {
                id: format!("{prefix}-generate"),
                spec: *spec,
                op: "generate".into(),
                instance: None,
                reason: e.to_string(),
                graph: String::new(),
            });
            return out;
        }
    };
    let mut run = Run {
        cfg,
        engine: Engine::new().with_measurer(cfg.measurer).verify(true),
        oracle: Oracle::new(cfg.oracle_cap),
        spec: *spec,
        g,
        prefix,
        out,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ index as u64);
    let kinds = [
        ("base", BoundKind::SingleEdge),
        ("edge", BoundKind::SingleEdge),
        ("vertex", BoundKind::PrescribedVertex),
        ("two-edge", BoundKind::TwoEdge),
        ("vertex-edge", BoundKind::VertexEdge),
    ];
    for (op, kind) in kinds {
        if !cfg.ops.iter().any(|o| o == op) {
            continue;
        }
        let tuples = match cfg.per_op {
            Some(k) => sample(&run.g, kind, k, &mut rng),
            None => all_instances(&run.g, kind),
        };
        for inst in tuples {
            let res = match inst {
                Instance::SingleEdge { u, v, e } if op == "base" => run.engine.base_tutte_path(&run.g, u, v, e),
                _ => run.engine.run(&run.g, &inst),
            };
            run.check(op, &inst, res.map(|r| (r.path, r.report)));
        }
    }
    split_cases(&mut run, &mut rng);
    run.out
}

/// Two-edge tuples paired with a separation the splitter accepts.
fn split_cases(run: &mut Run<'_>, rng: &mut ChaCha8Rng) {
    if !run.cfg.ops.iter().any(|o| o == "split") {
        return;
    }
    let Ok(seps) = two_separations(&run.g, None, false) else { return };
    if seps.is_empty() {
        return;
    }
    let tuples = match run.cfg.per_op {
        Some(k) => sample(&run.g, BoundKind::TwoEdge, k, rng),
        None => all_instances(&run.g, BoundKind::TwoEdge),
    };
    for inst in tuples {
        let Instance::TwoEdge { u, v, e, f } = inst else { continue };
        for sep in &seps {
            match run.engine.split_two_edge_on_separation(&run.g, u, v, e, f, sep) {
                Err(Error::Precondition(_)) => continue,
                res => {
                    run.check("split", &inst, res.map(|r| (r.path, r.report)));
                    break;
                }
            }
        }
    }
}
