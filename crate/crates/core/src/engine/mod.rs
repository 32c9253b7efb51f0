//! Constructive Tutte paths.
//!
//! Every operation recurses on smaller circuit graphs and splices the
//! pieces back together. In verify mode (the default) each recursive result
//! is re-measured before it is used, so a broken construction surfaces as
//! [`Error::Contract`] carrying the steps taken so far.

mod cycle;
mod provider;
mod single_edge;
mod two_edge;
mod vertex;
mod vertex_edge;

use serde::Serialize;

use crate::connectivity::{is_circuit_graph, Separation};
use crate::error::{Error, Result};
use crate::measures::{is_c_tutte_path, BoundReport, Instance, Measurer};
use crate::plane::{OuterCycle, Path, PlaneGraph, Vid};

pub use cycle::CycleReport;
pub use provider::{BaseProvider, ExhaustiveProvider};
pub use two_edge::{ClassPlan, DecompositionPlan, PartKind};

/// Which construction a step belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Op {
    SingleEdge,
    Vertex,
    Split,
    TwoEdge,
    VertexEdge,
    Cycle,
}

/// One reduction step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum Step {
    Enter {
        op: Op,
        n: usize,
        u: Vid,
        v: Vid,
    },
    /// The base provider was called on a graph of this size.
    Base {
        n: usize,
    },
    /// Outer triangle: the path is `C - uv`.
    Triangle,
    /// A side of the cut was replaced by the new vertex `apex`.
    Contract {
        cut: (Vid, Vid),
        apex: Vid,
        discarded: usize,
    },
    /// The apex was on the path and its side was expanded again.
    Expand {
        apex: Vid,
        cut: (Vid, Vid),
    },
    /// Solved in the mirror image and reversed.
    Mirror,
    /// Endpoints swapped so the prescribed vertex lies clockwise between them.
    Swap,
    /// Split along a 2-cut into two smaller instances.
    Split {
        cut: (Vid, Vid),
        case: u8,
    },
    /// No usable cut: the path is forced through `z`.
    Forced {
        z: Vid,
    },
    Block(DecompositionPlan),
    /// Accounting case chosen by `τ(ev)` in thirds.
    Case {
        tau_ev_thirds: i64,
    },
}

/// Outcome of a construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TutteResult {
    /// The path, or for the cycle operation the cycle without its closing edge.
    pub path: Path,
    pub report: BoundReport,
    pub trace: Vec<Step>,
    pub cycle: Option<CycleReport>,
}

/// Runs the constructions with a base provider and a measurer.
pub struct Engine {
    provider: Box<dyn BaseProvider>,
    measurer: Measurer,
    verify: bool,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new()
    }
}

impl Engine {
    pub fn new() -> Self {
        Engine { provider: Box::new(ExhaustiveProvider::default()), measurer: Measurer::exact(), verify: true }
    }

    pub fn with_measurer(mut self, m: Measurer) -> Self {
        self.measurer = m;
        self
    }

    pub fn with_provider(mut self, p: Box<dyn BaseProvider>) -> Self {
        self.provider = p;
        self
    }

    /// With verification off, bounds are only reported, not enforced.
    pub fn verify(mut self, on: bool) -> Self {
        self.verify = on;
        self
    }

    pub fn measurer(&self) -> Measurer {
        self.measurer
    }

    fn ctx(&self) -> Ctx<'_> {
        Ctx { engine: self, trace: Vec::new() }
    }

    fn finish(&self, g: &PlaneGraph, inst: &Instance, ctx: Ctx<'_>, path: Path) -> Result<TutteResult> {
        inst.check_path(g, &path)?;
        let report = self.measurer.bound_report(g, inst, &path)?;
        Ok(TutteResult { path, report, trace: ctx.trace, cycle: None })
    }

    /// A path through `e` straight from the base provider.
    pub fn base_tutte_path(&self, g: &PlaneGraph, u: Vid, v: Vid, e: (Vid, Vid)) -> Result<TutteResult> {
        require_circuit(g)?;
        single_edge::check(&g.cycle()?, u, v, e)?;
        let mut ctx = self.ctx();
        ctx.trace.push(Step::Base { n: g.n() });
        let inst = Instance::SingleEdge { u, v, e };
        let p = self.provider.find(g, u, v, e, &self.measurer)?;
        let p = ctx.checked(g, &inst, p)?;
        self.finish(g, &inst, ctx, p)
    }

    /// A path through outer edge `e`, contracting maximal 2-separations first.
    pub fn tutte_path_edge_refined(&self, g: &PlaneGraph, u: Vid, v: Vid, e: (Vid, Vid)) -> Result<TutteResult> {
        require_circuit(g)?;
        let mut ctx = self.ctx();
        let p = ctx.single_edge(g, u, v, e)?;
        self.finish(g, &Instance::SingleEdge { u, v, e }, ctx, p)
    }

    /// A path through outer vertex `z`.
    pub fn tutte_path_vertex(&self, g: &PlaneGraph, u: Vid, v: Vid, z: Vid) -> Result<TutteResult> {
        require_circuit(g)?;
        let mut ctx = self.ctx();
        let p = ctx.vertex(g, u, v, z)?;
        self.finish(g, &Instance::PrescribedVertex { u, v, z }, ctx, p)
    }

    /// A two-edge path assembled from the two sides of `sep`, where `side_a`
    /// holds `u` and `v` and `side_b` holds `e`.
    pub fn split_two_edge_on_separation(
        &self,
        g: &PlaneGraph,
        u: Vid,
        v: Vid,
        e: (Vid, Vid),
        f: (Vid, Vid),
        sep: &Separation,
    ) -> Result<TutteResult> {
        require_circuit(g)?;
        let c = g.cycle()?;
        two_edge::check(&c, u, v, e, f)?;
        let (x, y) = two_edge::split_cut(g, &c, u, v, e, sep)?;
        let mut ctx = self.ctx();
        let p = ctx.split(g, u, v, e, f, x, y)?;
        self.finish(g, &Instance::TwoEdge { u, v, e, f }, ctx, p)
    }

    /// A path from `u` to `v` through outer edges `f` then `e`, where `vu`
    /// is an edge of the outer cycle.
    pub fn tutte_path_two_edges(
        &self,
        g: &PlaneGraph,
        u: Vid,
        v: Vid,
        e: (Vid, Vid),
        f: (Vid, Vid),
    ) -> Result<TutteResult> {
        require_circuit(g)?;
        let mut ctx = self.ctx();
        let p = ctx.two_edge(g, u, v, e, f)?;
        self.finish(g, &Instance::TwoEdge { u, v, e, f }, ctx, p)
    }

    /// A path through outer vertex `z` and outer edge `e`, where `vu` is an
    /// edge of the outer cycle.
    pub fn tutte_path_vertex_edge(&self, g: &PlaneGraph, u: Vid, v: Vid, z: Vid, e: (Vid, Vid)) -> Result<TutteResult> {
        require_circuit(g)?;
        let mut ctx = self.ctx();
        let p = ctx.vertex_edge(g, u, v, z, e)?;
        self.finish(g, &Instance::VertexEdge { u, v, z, e }, ctx, p)
    }

    /// Runs the operation matching `inst`.
    pub fn run(&self, g: &PlaneGraph, inst: &Instance) -> Result<TutteResult> {
        match *inst {
            Instance::SingleEdge { u, v, e } => self.tutte_path_edge_refined(g, u, v, e),
            Instance::PrescribedVertex { u, v, z } => self.tutte_path_vertex(g, u, v, z),
            Instance::TwoEdge { u, v, e, f } => self.tutte_path_two_edges(g, u, v, e, f),
            Instance::VertexEdge { u, v, z, e } => self.tutte_path_vertex_edge(g, u, v, z, e),
        }
    }
}

fn require_circuit(g: &PlaneGraph) -> Result<()> {
    if is_circuit_graph(g) {
        Ok(())
    } else {
        Err(Error::Precondition("not a circuit graph".into()))
    }
}

/// Per-call state: the trace so far.
pub(crate) struct Ctx<'a> {
    engine: &'a Engine,
    trace: Vec<Step>,
}

impl Ctx<'_> {
    fn breach(&self, msg: impl Into<String>) -> Error {
        Error::Contract { msg: msg.into(), trace: self.trace.clone() }
    }

    fn measurer(&self) -> &Measurer {
        &self.engine.measurer
    }

    /// Path shape is always checked; C-Tutte and the bound only in verify mode.
    fn checked(&self, g: &PlaneGraph, inst: &Instance, p: Path) -> Result<Path> {
        inst.check_path(g, &p).map_err(|e| self.breach(format!("{inst:?}: {e}")))?;
        if self.engine.verify {
            let c = g.cycle()?;
            if !is_c_tutte_path(g, &c, &p)? {
                return Err(self.breach(format!("{inst:?}: path {p:?} is not C-Tutte")));
            }
            let r = self.engine.measurer.bound_report(g, inst, &p)?;
            if !r.satisfied {
                return Err(self.breach(format!("{inst:?}: path {p:?} breaks its bound ({r})")));
            }
        }
        Ok(p)
    }

    fn provide(&mut self, g: &PlaneGraph, u: Vid, v: Vid, e: (Vid, Vid)) -> Result<Path> {
        self.trace.push(Step::Base { n: g.n() });
        self.engine.provider.find(g, u, v, e, &self.engine.measurer)
    }
}

/// Replaces the consecutive pair `a, b` of `p` by `q`, which runs between
/// `a` and `b` in either direction.
fn splice_edge(p: &[Vid], a: Vid, b: Vid, q: &[Vid]) -> Option<Path> {
    let i = p.windows(2).position(|w| (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a))?;
    let mut q = q.to_vec();
    if q.first() != Some(&p[i]) {
        q.reverse();
    }
    if q.first() != Some(&p[i]) || q.last() != Some(&p[i + 1]) {
        return None;
    }
    let mut out = p[..i].to_vec();
    out.extend(q);
    out.extend_from_slice(&p[i + 2..]);
    Some(out)
}

/// Replaces the interior vertex `t` of `p`, together with its two path
/// neighbors, by `q`, which runs between those neighbors.
fn splice_vertex(p: &[Vid], t: Vid, q: &[Vid]) -> Option<Path> {
    let i = p.iter().position(|&x| x == t)?;
    if i == 0 || i + 1 >= p.len() {
        return None;
    }
    let mut q = q.to_vec();
    if q.first() != Some(&p[i - 1]) {
        q.reverse();
    }
    if q.first() != Some(&p[i - 1]) || q.last() != Some(&p[i + 1]) {
        return None;
    }
    let mut out = p[..i - 1].to_vec();
    out.extend(q);
    out.extend_from_slice(&p[i + 2..]);
    Some(out)
}

/// Clockwise offsets of an outer edge's ends from `u`, oriented.
fn edge_offsets(c: &OuterCycle, u: Vid, e: (Vid, Vid)) -> Result<(Vid, Vid, usize, usize)> {
    let (a, b) = c.orient(e)?;
    Ok((a, b, c.offset(u, a)?, c.offset(u, b)?))
}
