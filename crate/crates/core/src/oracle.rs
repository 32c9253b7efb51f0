//! Brute-force ground truth.
//!
//! Nothing here calls the measures module: bridges, goodness, τ and the
//! budgets are recomputed on a dense adjacency so that agreement between
//! the two is evidence rather than a tautology.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::{BoundReport, Instance};
use crate::plane::{PlaneGraph, Vid};

pub const DEFAULT_CAP: usize = 12;

struct Dense {
    ids: Vec<Vid>,
    idx: BTreeMap<Vid, usize>,
    adj: Vec<Vec<bool>>,
    nbrs: Vec<Vec<usize>>,
    /// Outer cycle, clockwise, as indices.
    outer: Vec<usize>,
}

impl Dense {
    fn new(g: &PlaneGraph) -> Self {
        let ids: Vec<Vid> = g.vertices().collect();
        let idx: BTreeMap<Vid, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = ids.len();
        let mut adj = vec![vec![false; n]; n];
        let mut nbrs = vec![Vec::new(); n];
        for (i, &v) in ids.iter().enumerate() {
            for w in g.neighbors(v) {
                let j = idx[w];
                adj[i][j] = true;
                nbrs[i].push(j);
            }
            nbrs[i].sort_unstable();
        }
        let outer = g.outer_walk().iter().map(|v| idx[v]).collect();
        Dense { ids, idx, adj, nbrs, outer }
    }

    fn n(&self) -> usize {
        self.ids.len()
    }

    fn i(&self, v: Vid) -> Option<usize> {
        self.idx.get(&v).copied()
    }

    /// Components of the graph minus `gone`, each with the number of its
    /// vertices and the set of its neighbors in `gone`.
    fn pieces(&self, gone: &[bool]) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in 0..n {
            if gone[a] {
                continue;
            }
            for &b in &self.nbrs[a] {
                if !gone[b] {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (a, &g) in gone.iter().enumerate().take(n) {
            if !g {
                let r = find(&mut parent, a);
                groups.entry(r).or_default().push(a);
            }
        }
        groups
            .into_values()
            .map(|members| {
                let mut att: Vec<usize> =
                    members.iter().flat_map(|&a| self.nbrs[a].iter().copied()).filter(|&b| gone[b]).collect();
                att.sort_unstable();
                att.dedup();
                (members, att)
            })
            .collect()
    }

    fn splits(&self, removed: &[usize]) -> bool {
        let mut gone = vec![false; self.n()];
        for &r in removed {
            gone[r] = true;
        }
        self.pieces(&gone).len() > 1
    }
}

/// Bridge numbers of a path, recomputed from scratch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBound {
    pub bridge_count: usize,
    pub beta_thirds: i64,
    pub tau_thirds: Vec<i64>,
    pub budget_thirds: i64,
    pub satisfied: bool,
}

/// Result of checking one instance against enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub id: String,
    pub valid_paths: usize,
    /// Least bridge count over all valid paths; `None` when there are none.
    pub min_bridge_count: Option<usize>,
    pub engine_path_valid: bool,
    pub engine_bound_satisfied: bool,
    /// A valid path of least bridge count, or for cycles the longest cycle.
    pub witness: Option<Vec<Vid>>,
    pub recomputed: Option<OracleBound>,
    /// Whether the engine's own report matches the recomputed numbers.
    pub report_agrees: bool,
}

/// Checks with the path enumeration capped at `cap` vertices.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

/// Whether `p` is a simple path of the graph.
fn simple(d: &Dense, p: &[usize]) -> bool {
    let mut seen = vec![false; d.n()];
    for &x in p {
        if seen[x] {
            return false;
        }
        seen[x] = true;
    }
    p.windows(2).all(|w| d.adj[w[0]][w[1]])
}

/// C-Tutte test for a vertex set whose own edges are `used`: every
/// component off it has at most three attachments, at most two if it
/// touches the outer cycle.
fn c_tutte(d: &Dense, on: &[bool]) -> bool {
    let mut on_outer = vec![false; d.n()];
    for &x in &d.outer {
        on_outer[x] = true;
    }
    d.pieces(on).iter().all(|(members, att)| {
        let touches = members.iter().any(|&m| on_outer[m]);
        att.len() <= 3 && (!touches || att.len() <= 2)
    })
}

fn good(d: &Dense, seq: &[usize]) -> bool {
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if (j > i + 1 && d.adj[seq[i]][seq[j]]) || d.splits(&[seq[i], seq[j]]) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy)]
enum OEnd {
    V(usize),
    E(usize, usize),
}

fn touches(a: OEnd, x: usize) -> bool {
    match a {
        OEnd::V(v) => v == x,
        OEnd::E(p, q) => p == x || q == x,
    }
}

fn tau3(d: &Dense, x: OEnd, y: OEnd) -> Option<i64> {
    let k = d.outer.len();
    let pos = |v: usize| d.outer.iter().position(|&w| w == v);
    let clockwise = |a: usize, b: usize| -> Option<(usize, usize)> {
        let (pa, pb) = (pos(a)?, pos(b)?);
        if (pa + 1) % k == pb {
            Some((a, b))
        } else if (pb + 1) % k == pa {
            Some((b, a))
        } else {
            None
        }
    };
    let start = match x {
        OEnd::V(v) => v,
        OEnd::E(a, b) => clockwise(a, b)?.1,
    };
    let end = match y {
        OEnd::V(v) => v,
        OEnd::E(a, b) => clockwise(a, b)?.0,
    };
    let (ps, pe) = (pos(start)?, pos(end)?);
    let len = (pe + k - ps) % k + 1;
    let seq: Vec<usize> = (0..len).map(|s| d.outer[(ps + s) % k]).collect();
    let edge_end = matches!(x, OEnd::E(..)) || matches!(y, OEnd::E(..));
    let incident = edge_end
        && match x {
            OEnd::V(v) => touches(y, v),
            OEnd::E(a, b) => touches(y, a) || touches(y, b),
        };
    Some(if !good(d, &seq) || incident {
        2
    } else if edge_end && seq.len() == 2 {
        1
    } else {
        0
    })
}

struct Shape {
    u: usize,
    v: usize,
    must_e: Vec<(usize, usize)>,
    must_v: Vec<usize>,
    offset: i64,
    taus: Vec<(OEnd, OEnd)>,
}

fn shape(d: &Dense, inst: &Instance) -> Option<Shape> {
    let i = |v: Vid| d.i(v);
    let ie = |e: (Vid, Vid)| Some((d.i(e.0)?, d.i(e.1)?));
    Some(match *inst {
        Instance::SingleEdge { u, v, e } => {
            let (u, v, e) = (i(u)?, i(v)?, ie(e)?);
            let ee = OEnd::E(e.0, e.1);
            Shape {
                u,
                v,
                must_e: vec![e],
                must_v: vec![],
                offset: 6,
                taus: vec![(OEnd::V(v), OEnd::V(u)), (OEnd::V(u), ee), (ee, OEnd::V(v))],
            }
        }
        Instance::PrescribedVertex { u, v, z } => {
            let (u, v, z) = (i(u)?, i(v)?, i(z)?);
            Shape { u, v, must_e: vec![], must_v: vec![z], offset: 3, taus: vec![(OEnd::V(v), OEnd::V(u))] }
        }
        Instance::TwoEdge { u, v, e, f } => {
            let (u, v, e, f) = (i(u)?, i(v)?, ie(e)?, ie(f)?);
            let (ee, ff) = (OEnd::E(e.0, e.1), OEnd::E(f.0, f.1));
            Shape {
                u,
                v,
                must_e: vec![e, f],
                must_v: vec![],
                offset: 7,
                taus: vec![(OEnd::V(u), ff), (ff, ee), (ee, OEnd::V(v))],
            }
        }
        Instance::VertexEdge { u, v, z, e } => {
            let (u, v, z, e) = (i(u)?, i(v)?, i(z)?, ie(e)?);
            Shape { u, v, must_e: vec![e], must_v: vec![z], offset: 2, taus: vec![] }
        }
    })
}

fn has_edge(p: &[usize], e: (usize, usize)) -> bool {
    p.windows(2).any(|w| (w[0], w[1]) == e || (w[1], w[0]) == e)
}

fn admissible(d: &Dense, s: &Shape, p: &[usize]) -> bool {
    if p.first() != Some(&s.u) || p.last() != Some(&s.v) || !simple(d, p) {
        return false;
    }
    if !s.must_e.iter().all(|&e| has_edge(p, e)) || !s.must_v.iter().all(|z| p.contains(z)) {
        return false;
    }
    let mut on = vec![false; d.n()];
    for &x in p {
        on[x] = true;
    }
    c_tutte(d, &on)
}

fn bound(d: &Dense, s: &Shape, p: &[usize]) -> Option<OracleBound> {
    let mut on = vec![false; d.n()];
    for &x in p {
        on[x] = true;
    }
    let pieces = d.pieces(&on);
    let bridge_count = pieces.len();
    let beta_thirds: i64 =
        pieces.iter().filter(|(_, att)| att.len() == 2).map(|(m, att)| (m.len() + att.len()) as i64 - 3).sum();
    let tau_thirds: Vec<i64> = s.taus.iter().map(|&(x, y)| tau3(d, x, y)).collect::<Option<_>>()?;
    let budget_thirds = d.n() as i64 - s.offset + tau_thirds.iter().sum::<i64>() - beta_thirds;
    Some(OracleBound {
        bridge_count,
        beta_thirds,
        tau_thirds,
        budget_thirds,
        satisfied: 3 * bridge_count as i64 <= budget_thirds,
    })
}

/// Depth-first enumeration of simple paths from `s.u` to `s.v` through the
/// required edges, in increasing neighbor order.
fn each_path(d: &Dense, s: &Shape, visit: &mut dyn FnMut(&[usize])) {
    fn rec(d: &Dense, s: &Shape, path: &mut Vec<usize>, on: &mut [bool], visit: &mut dyn FnMut(&[usize])) {
        let end = *path.last().expect("nonempty");
        if end == s.v {
            visit(path);
            return;
        }
        let forced: Option<usize> = s.must_e.iter().find_map(|&(a, b)| {
            if has_edge(path, (a, b)) {
                None
            } else if a == end {
                Some(b)
            } else if b == end {
                Some(a)
            } else {
                None
            }
        });
        for &w in &d.nbrs[end] {
            if on[w] || forced.is_some_and(|f| f != w) {
                continue;
            }
            on[w] = true;
            path.push(w);
            rec(d, s, path, on, visit);
            path.pop();
            on[w] = false;
        }
    }
    let mut on = vec![false; d.n()];
    on[s.u] = true;
    rec(d, s, &mut vec![s.u], &mut on, visit);
}

fn to_ids(d: &Dense, p: &[usize]) -> Vec<Vid> {
    p.iter().map(|&i| d.ids[i]).collect()
}

fn to_idx(d: &Dense, p: &[Vid]) -> Option<Vec<usize>> {
    p.iter().map(|&v| d.i(v)).collect()
}

fn agrees(o: &OracleBound, r: &BoundReport) -> bool {
    o.bridge_count == r.bridge_count
        && o.beta_thirds == r.beta_thirds
        && o.tau_thirds == r.tau_thirds
        && o.budget_thirds == r.budget_thirds
        && o.satisfied == r.satisfied
}

impl Oracle {
    pub fn new(cap: usize) -> Self {
        Oracle { cap }
    }

    fn guard(&self, g: &PlaneGraph) -> Result<()> {
        if g.n() > self.cap {
            return Err(Error::CapExceeded { n: g.n(), cap: self.cap });
        }
        Ok(())
    }

    /// Every C-Tutte path from `u` to `v` through the required material.
    pub fn enumerate_tutte_paths(
        &self,
        g: &PlaneGraph,
        u: Vid,
        v: Vid,
        must_edges: &[(Vid, Vid)],
        must_vertices: &[Vid],
    ) -> Result<Vec<Vec<Vid>>> {
        self.guard(g)?;
        let d = Dense::new(g);
        let miss = |x: Vid| Error::NotSubgraph(format!("vertex {x}"));
        let s = Shape {
            u: d.i(u).ok_or_else(|| miss(u))?,
            v: d.i(v).ok_or_else(|| miss(v))?,
            must_e: must_edges
                .iter()
                .map(|&(a, b)| Ok((d.i(a).ok_or_else(|| miss(a))?, d.i(b).ok_or_else(|| miss(b))?)))
                .collect::<Result<_>>()?,
            must_v: must_vertices.iter().map(|&z| d.i(z).ok_or_else(|| miss(z))).collect::<Result<_>>()?,
            offset: 0,
            taus: vec![],
        };
        let mut out = Vec::new();
        each_path(&d, &s, &mut |p| {
            if admissible(&d, &s, p) {
                out.push(to_ids(&d, p));
            }
        });
        Ok(out)
    }

    /// Validity and bound of one path, with no enumeration and no cap.
    pub fn check_path(&self, g: &PlaneGraph, inst: &Instance, path: &[Vid]) -> (bool, Option<OracleBound>) {
        let d = Dense::new(g);
        let (Some(s), Some(p)) = (shape(&d, inst), to_idx(&d, path)) else {
            return (false, None);
        };
        if !admissible(&d, &s, &p) {
            return (false, None);
        }
        (true, bound(&d, &s, &p))
    }

    /// Recomputes validity and the bound of `engine` (path and report) and
    /// compares with every valid path of the instance.
    pub fn verify_instance(
        &self,
        id: &str,
        g: &PlaneGraph,
        inst: &Instance,
        engine: Option<(&[Vid], &BoundReport)>,
    ) -> Result<OracleReport> {
        self.guard(g)?;
        let d = Dense::new(g);
        let s = shape(&d, inst).ok_or_else(|| Error::Precondition("instance names unknown vertices".into()))?;
        let mut valid = 0usize;
        let mut best: Option<(usize, Vec<usize>)> = None;
        each_path(&d, &s, &mut |p| {
            if admissible(&d, &s, p) {
                valid += 1;
                let mut on = vec![false; d.n()];
                for &x in p {
                    on[x] = true;
                }
                let b = d.pieces(&on).len();
                if best.as_ref().is_none_or(|(bb, _)| b < *bb) {
                    best = Some((b, p.to_vec()));
                }
            }
        });
        let (engine_path_valid, recomputed) = match engine {
            Some((p, _)) => self.check_path(g, inst, p),
            None => (false, None),
        };
        let report_agrees = match (engine, &recomputed) {
            (Some((_, r)), Some(o)) => agrees(o, r),
            _ => false,
        };
        Ok(OracleReport {
            id: id.to_string(),
            valid_paths: valid,
            min_bridge_count: best.as_ref().map(|(b, _)| *b),
            engine_path_valid,
            engine_bound_satisfied: recomputed.as_ref().is_some_and(|o| o.satisfied),
            witness: best.map(|(_, p)| to_ids(&d, &p)),
            recomputed,
            report_agrees,
        })
    }

    /// Cycles through three edges, read with `g`'s outer cycle as `C`.
    /// The witness is the longest C-Tutte cycle; the engine cycle is given
    /// as a vertex sequence closed by its last-to-first edge.
    pub fn verify_cycle(
        &self,
        id: &str,
        g: &PlaneGraph,
        edges: [(Vid, Vid); 3],
        engine: Option<&[Vid]>,
    ) -> Result<OracleReport> {
        self.guard(g)?;
        let d = Dense::new(g);
        let ie = |e: (Vid, Vid)| Some((d.i(e.0)?, d.i(e.1)?));
        let es: Vec<(usize, usize)> = edges
            .iter()
            .map(|&e| ie(e))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Precondition("unknown edge".into()))?;
        let (a, b) = es[2];
        let s = Shape { u: b, v: a, must_e: vec![es[0], es[1]], must_v: vec![], offset: 0, taus: vec![] };
        let mut valid = 0usize;
        let mut min_b: Option<usize> = None;
        let mut longest: Option<Vec<usize>> = None;
        each_path(&d, &s, &mut |p| {
            if p.len() < 3 {
                return;
            }
            let mut on = vec![false; d.n()];
            for &x in p {
                on[x] = true;
            }
            if !c_tutte(&d, &on) {
                return;
            }
            valid += 1;
            let b = d.pieces(&on).len();
            min_b = Some(min_b.map_or(b, |m| m.min(b)));
            if longest.as_ref().is_none_or(|l| p.len() > l.len()) {
                longest = Some(p.to_vec());
            }
        });
        let engine_valid = engine.is_some_and(|c| {
            let Some(p) = to_idx(&d, c) else { return false };
            let closed = p.len() >= 3 && simple(&d, &p) && d.adj[p[0]][p[p.len() - 1]];
            let mut with_close = p.clone();
            with_close.push(p[0]);
            let mut on = vec![false; d.n()];
            for &x in &p {
                on[x] = true;
            }
            closed && es.iter().all(|&e| has_edge(&with_close, e)) && c_tutte(&d, &on)
        });
        Ok(OracleReport {
            id: id.to_string(),
            valid_paths: valid,
            min_bridge_count: min_b,
            engine_path_valid: engine_valid,
            engine_bound_satisfied: engine_valid && engine.is_some_and(|c| c.len() >= (2 * d.n() + 1).div_ceil(3)),
            witness: longest.map(|p| to_ids(&d, &p)),
            recomputed: None,
            report_agrees: true,
        })
    }

    /// Tutte test for a subgraph on `vertices`: every component of
    /// `G - V(H)` has at most three attachments. Edges off `H` joining two of
    /// its vertices have two, so the edge set of `H` never matters.
    pub fn is_tutte(&self, g: &PlaneGraph, vertices: &BTreeSet<Vid>) -> bool {
        let d = Dense::new(g);
        let mut on = vec![false; d.n()];
        for v in vertices {
            if let Some(i) = d.i(*v) {
                on[i] = true;
            }
        }
        d.pieces(&on).iter().all(|(_, att)| att.len() <= 3)
    }
}
