//! Bridges, Tutte predicates, and the bound quantities in exact thirds.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, AddAssign, Neg};

use serde::{Deserialize, Serialize};

use crate::connectivity::path_is_good;
use crate::error::{Error, Result};
use crate::plane::{check_path, edge_key, path_has_edge, End, OuterCycle, PlaneGraph, Segment, Vid};

/// An exact multiple of one third, stored as the numerator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Thirds(pub i64);

impl Thirds {
    pub const ZERO: Thirds = Thirds(0);
    pub const ONE: Thirds = Thirds(1);
    pub const TWO: Thirds = Thirds(2);

    pub fn whole(k: i64) -> Self {
        Thirds(3 * k)
    }
}

impl Add for Thirds {
    type Output = Thirds;
    fn add(self, o: Thirds) -> Thirds {
        Thirds(self.0 + o.0)
    }
}

impl AddAssign for Thirds {
    fn add_assign(&mut self, o: Thirds) {
        self.0 += o.0;
    }
}

impl std::ops::Sub for Thirds {
    type Output = Thirds;
    fn sub(self, o: Thirds) -> Thirds {
        Thirds(self.0 - o.0)
    }
}

impl Neg for Thirds {
    type Output = Thirds;
    fn neg(self) -> Thirds {
        Thirds(-self.0)
    }
}

impl std::iter::Sum for Thirds {
    fn sum<I: Iterator<Item = Thirds>>(it: I) -> Thirds {
        Thirds(it.map(|t| t.0).sum())
    }
}

impl fmt::Display for Thirds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/3", self.0)
    }
}

/// A subgraph given by vertices and edges (edges as sorted keys).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sub {
    pub vertices: BTreeSet<Vid>,
    pub edges: BTreeSet<(Vid, Vid)>,
}

impl Sub {
    pub fn from_path(p: &[Vid]) -> Self {
        Sub { vertices: p.iter().copied().collect(), edges: p.windows(2).map(|w| edge_key(w[0], w[1])).collect() }
    }

    /// A closed walk through `c`, returning to its first vertex.
    pub fn from_cycle(c: &[Vid]) -> Self {
        let mut s = Self::from_path(c);
        if c.len() > 2 {
            s.edges.insert(edge_key(c[c.len() - 1], c[0]));
        }
        s
    }

    pub fn from_parts(vertices: impl IntoIterator<Item = Vid>, edges: impl IntoIterator<Item = (Vid, Vid)>) -> Self {
        Sub {
            vertices: vertices.into_iter().collect(),
            edges: edges.into_iter().map(|(a, b)| edge_key(a, b)).collect(),
        }
    }

    fn check_in(&self, g: &PlaneGraph) -> Result<()> {
        for &v in &self.vertices {
            if !g.has_vertex(v) {
                return Err(Error::NotSubgraph(format!("vertex {v}")));
            }
        }
        for &(a, b) in &self.edges {
            if !g.has_edge(a, b) || !self.vertices.contains(&a) || !self.vertices.contains(&b) {
                return Err(Error::NotSubgraph(format!("edge {a}-{b}")));
            }
        }
        Ok(())
    }
}

/// One H-bridge of G.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bridge {
    pub attachments: BTreeSet<Vid>,
    pub interior: BTreeSet<Vid>,
    pub trivial: bool,
}

impl Bridge {
    /// `|B|`: attachments plus interior vertices.
    pub fn size(&self) -> usize {
        self.attachments.len() + self.interior.len()
    }

    /// Whether the bridge contains edge `ab`. Only meaningful for edges off H.
    pub fn contains_edge(&self, a: Vid, b: Vid) -> bool {
        if self.trivial {
            self.attachments.contains(&a) && self.attachments.contains(&b)
        } else {
            self.interior.contains(&a) || self.interior.contains(&b)
        }
    }
}

/// Components of `G - V(H)` with their attachments, ordered by smallest vertex.
fn nontrivial_bridges(g: &PlaneGraph, h: &BTreeSet<Vid>) -> Vec<Bridge> {
    let mut seen: BTreeSet<Vid> = h.clone();
    let mut out = Vec::new();
    for v in g.vertices() {
        if seen.contains(&v) {
            continue;
        }
        let mut interior = BTreeSet::new();
        let mut attachments = BTreeSet::new();
        let mut queue = VecDeque::from([v]);
        seen.insert(v);
        while let Some(x) = queue.pop_front() {
            interior.insert(x);
            for &y in g.neighbors(x) {
                if h.contains(&y) {
                    attachments.insert(y);
                } else if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        out.push(Bridge { attachments, interior, trivial: false });
    }
    out
}

/// All H-bridges: trivial ones (edges off H with both ends on H) first,
/// then one per component of `G - V(H)`.
pub fn bridges_of(g: &PlaneGraph, h: &Sub) -> Result<Vec<Bridge>> {
    h.check_in(g)?;
    let mut out: Vec<Bridge> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| h.vertices.contains(&a) && h.vertices.contains(&b) && !h.edges.contains(&(a, b)))
        .map(|(a, b)| Bridge { attachments: [a, b].into(), interior: BTreeSet::new(), trivial: true })
        .collect();
    out.extend(nontrivial_bridges(g, &h.vertices));
    Ok(out)
}

/// Every bridge has at most three attachments.
pub fn is_tutte(g: &PlaneGraph, h: &Sub) -> Result<bool> {
    Ok(bridges_of(g, h)?.iter().all(|b| b.attachments.len() <= 3))
}

/// Tutte, and every bridge holding an edge of `s` has at most two attachments.
pub fn is_s_tutte(g: &PlaneGraph, h: &Sub, s: &Sub) -> Result<bool> {
    Ok(bridges_of(g, h)?.iter().all(|b| {
        let cap = if s.edges.iter().any(|&(a, c)| b.contains_edge(a, c)) { 2 } else { 3 };
        b.attachments.len() <= cap
    }))
}

/// C-Tutte for a path in a graph with outer cycle `c`.
pub fn is_c_tutte_path(g: &PlaneGraph, c: &OuterCycle, p: &[Vid]) -> Result<bool> {
    is_s_tutte(g, &Sub::from_path(p), &Sub::from_cycle(c.vertices()))
}

/// Deliberate defects used to show the test suites are not vacuous.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mutation {
    /// τ evaluates its cases bottom-up instead of top-down.
    TauCasesSwapped,
    /// b(P) also counts trivial bridges.
    CountTrivialBridges,
    /// β(P) is always zero.
    DropBeta,
}

/// The quantity functions, optionally with one deliberate defect.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Measurer {
    pub mutation: Option<Mutation>,
}

impl Measurer {
    pub fn exact() -> Self {
        Measurer { mutation: None }
    }

    pub fn mutated(m: Mutation) -> Self {
        Measurer { mutation: Some(m) }
    }

    /// τ of the clockwise segment `xCy`.
    pub fn tau(&self, g: &PlaneGraph, c: &OuterCycle, s: &Segment) -> Result<Thirds> {
        let seq = c.segment(s)?;
        let has_edge_end = s.x.is_edge() || s.y.is_edge();
        let not_good = || !path_is_good(g, &seq);
        let incident = has_edge_end && s.x.incident(&s.y);
        let short = has_edge_end && seq.len() == 2;
        Ok(if self.mutation == Some(Mutation::TauCasesSwapped) {
            if short {
                Thirds::ONE
            } else if incident || not_good() {
                Thirds::TWO
            } else {
                Thirds::ZERO
            }
        } else if not_good() || incident {
            Thirds::TWO
        } else if short {
            Thirds::ONE
        } else {
            Thirds::ZERO
        })
    }

    pub fn bridge_count(&self, g: &PlaneGraph, p: &Sub) -> usize {
        let mut b = nontrivial_bridges(g, &p.vertices).len();
        if self.mutation == Some(Mutation::CountTrivialBridges) {
            b += g
                .edges()
                .into_iter()
                .filter(|&(a, c)| p.vertices.contains(&a) && p.vertices.contains(&c) && !p.edges.contains(&(a, c)))
                .count();
        }
        b
    }

    pub fn beta(&self, g: &PlaneGraph, p: &Sub) -> Thirds {
        if self.mutation == Some(Mutation::DropBeta) {
            return Thirds::ZERO;
        }
        nontrivial_bridges(g, &p.vertices)
            .iter()
            .filter(|b| b.attachments.len() == 2)
            .map(|b| Thirds(b.size() as i64 - 3))
            .sum()
    }

    /// The τ terms of an instance, in the order they appear in its bound.
    pub fn tau_terms(&self, g: &PlaneGraph, c: &OuterCycle, inst: &Instance) -> Result<Vec<Thirds>> {
        use End::{Edge, Vertex};
        let e2 = |e: (Vid, Vid)| Edge(e.0, e.1);
        let segs: Vec<Segment> = match *inst {
            Instance::SingleEdge { u, v, e } => {
                vec![Segment::new(Vertex(v), Vertex(u)), Segment::new(Vertex(u), e2(e)), Segment::new(e2(e), Vertex(v))]
            }
            Instance::PrescribedVertex { u, v, .. } => vec![Segment::new(Vertex(v), Vertex(u))],
            Instance::TwoEdge { u, v, e, f } => {
                vec![Segment::new(Vertex(u), e2(f)), Segment::new(e2(f), e2(e)), Segment::new(e2(e), Vertex(v))]
            }
            Instance::VertexEdge { .. } => Vec::new(),
        };
        segs.iter().map(|s| self.tau(g, c, s)).collect()
    }

    /// Evaluates the bound of `inst` on path `p`.
    pub fn bound_report(&self, g: &PlaneGraph, inst: &Instance, p: &[Vid]) -> Result<BoundReport> {
        inst.check_path(g, p)?;
        let c = g.cycle()?;
        let sub = Sub::from_path(p);
        let n = g.n();
        let tau = self.tau_terms(g, &c, inst)?;
        let beta = self.beta(g, &sub);
        let bridge_count = self.bridge_count(g, &sub);
        let budget = Thirds(n as i64 - inst.kind().offset()) + tau.iter().copied().sum() - beta;
        Ok(BoundReport {
            n,
            bridge_count,
            beta_thirds: beta.0,
            tau_thirds: tau.iter().map(|t| t.0).collect(),
            budget_thirds: budget.0,
            satisfied: 3 * bridge_count as i64 <= budget.0,
        })
    }
}

pub fn tau(g: &PlaneGraph, c: &OuterCycle, s: &Segment) -> Result<Thirds> {
    Measurer::exact().tau(g, c, s)
}

/// Number of nontrivial P-bridges: the components of `G - V(P)`.
pub fn bridge_count(g: &PlaneGraph, p: &Sub) -> Result<usize> {
    p.check_in(g)?;
    Ok(Measurer::exact().bridge_count(g, p))
}

/// Sum of `|B| - 3` over nontrivial P-bridges with exactly two attachments.
pub fn beta(g: &PlaneGraph, p: &Sub) -> Result<Thirds> {
    p.check_in(g)?;
    Ok(Measurer::exact().beta(g, p))
}

pub fn bound_report(g: &PlaneGraph, inst: &Instance, p: &[Vid]) -> Result<BoundReport> {
    Measurer::exact().bound_report(g, inst, p)
}

/// Which bound an instance is measured against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// Path through one outer edge: `(n-6) + τ(vu) + τ(ue) + τ(ev) - β`.
    SingleEdge,
    /// Path through one outer vertex: `(n-3) + τ(vu) - β`.
    PrescribedVertex,
    /// Path through two outer edges: `(n-7) + τ(uf) + τ(fe) + τ(ev) - β`.
    TwoEdge,
    /// Path through an outer vertex and an outer edge: `(n-2) - β`.
    VertexEdge,
}

impl BoundKind {
    fn offset(self) -> i64 {
        match self {
            BoundKind::SingleEdge => 6,
            BoundKind::PrescribedVertex => 3,
            BoundKind::TwoEdge => 7,
            BoundKind::VertexEdge => 2,
        }
    }
}

/// Endpoints and prescribed material of one construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Instance {
    SingleEdge { u: Vid, v: Vid, e: (Vid, Vid) },
    PrescribedVertex { u: Vid, v: Vid, z: Vid },
    TwoEdge { u: Vid, v: Vid, e: (Vid, Vid), f: (Vid, Vid) },
    VertexEdge { u: Vid, v: Vid, z: Vid, e: (Vid, Vid) },
}

impl Instance {
    pub fn kind(&self) -> BoundKind {
        match self {
            Instance::SingleEdge { .. } => BoundKind::SingleEdge,
            Instance::PrescribedVertex { .. } => BoundKind::PrescribedVertex,
            Instance::TwoEdge { .. } => BoundKind::TwoEdge,
            Instance::VertexEdge { .. } => BoundKind::VertexEdge,
        }
    }

    pub fn ends(&self) -> (Vid, Vid) {
        match *self {
            Instance::SingleEdge { u, v, .. }
            | Instance::PrescribedVertex { u, v, .. }
            | Instance::TwoEdge { u, v, .. }
            | Instance::VertexEdge { u, v, .. } => (u, v),
        }
    }

    pub fn must_edges(&self) -> Vec<(Vid, Vid)> {
        match *self {
            Instance::SingleEdge { e, .. } | Instance::VertexEdge { e, .. } => vec![e],
            Instance::TwoEdge { e, f, .. } => vec![e, f],
            Instance::PrescribedVertex { .. } => Vec::new(),
        }
    }

    pub fn must_vertices(&self) -> Vec<Vid> {
        match *self {
            Instance::PrescribedVertex { z, .. } | Instance::VertexEdge { z, .. } => vec![z],
            _ => Vec::new(),
        }
    }

    /// Path shape: simple, from `u` to `v`, through the prescribed material.
    pub fn check_path(&self, g: &PlaneGraph, p: &[Vid]) -> Result<()> {
        check_path(g, p)?;
        let (u, v) = self.ends();
        if p[0] != u || p[p.len() - 1] != v {
            return Err(Error::Precondition(format!("path does not run from {u} to {v}")));
        }
        for e in self.must_edges() {
            if !path_has_edge(p, e) {
                return Err(Error::Precondition(format!("path misses edge {}-{}", e.0, e.1)));
            }
        }
        for z in self.must_vertices() {
            if !p.contains(&z) {
                return Err(Error::Precondition(format!("path misses vertex {z}")));
            }
        }
        Ok(())
    }
}

/// One evaluated bound, all fractional quantities in thirds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub bridge_count: usize,
    pub beta_thirds: i64,
    pub tau_thirds: Vec<i64>,
    pub budget_thirds: i64,
    pub satisfied: bool,
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let taus: Vec<String> = self.tau_thirds.iter().map(|t| format!("{t}/3")).collect();
        write!(
            f,
            "n={} b={} beta={}/3 tau=[{}] budget={}/3 {}",
            self.n,
            self.bridge_count,
            self.beta_thirds,
            taus.join(", "),
            self.budget_thirds,
            if self.satisfied { "satisfied" } else { "VIOLATED" }
        )
    }
}
