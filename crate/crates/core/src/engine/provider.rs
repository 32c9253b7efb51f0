//! Base single-edge paths by exhaustive branch and bound.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::measures::{Instance, Measurer, Mutation};
use crate::plane::{edge_key, PlaneGraph, Vid};

/// Supplies a C-Tutte path from `u` to `v` through outer edge `e` that meets
/// the single-edge budget `(n-6) + τ(vu) + τ(ue) + τ(ev) - β`.
pub trait BaseProvider: Send + Sync {
    fn find(&self, g: &PlaneGraph, u: Vid, v: Vid, e: (Vid, Vid), m: &Measurer) -> Result<Vec<Vid>>;
}

/// Depth-first search over `u`-`v` paths through `e`.
///
/// Components of `G - V(P)` that cannot reach `v` are final bridges, so a
/// partial path is dropped once one of them breaks the C-Tutte rule or their
/// cost exceeds the budget. Searches run in tiers of increasing bridge
/// count, each capped at `node_cap` nodes, followed by one uncapped search.
#[derive(Clone, Debug)]
pub struct ExhaustiveProvider {
    pub node_cap: usize,
}

impl Default for ExhaustiveProvider {
    fn default() -> Self {
        ExhaustiveProvider { node_cap: 20_000 }
    }
}

struct Dense {
    ids: Vec<Vid>,
    adj: Vec<Vec<usize>>,
    on_c: Vec<bool>,
}

impl Dense {
    fn new(g: &PlaneGraph) -> (Self, HashMap<Vid, usize>) {
        let ids: Vec<Vid> = g.vertices().collect();
        let idx: HashMap<Vid, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj: Vec<Vec<usize>> = ids.iter().map(|&v| g.neighbors(v).iter().map(|w| idx[w]).collect()).collect();
        for a in &mut adj {
            a.sort_unstable();
        }
        let mut on_c = vec![false; ids.len()];
        for v in g.outer_walk() {
            on_c[idx[v]] = true;
        }
        (Dense { ids, adj, on_c }, idx)
    }
}

struct Search<'a> {
    d: &'a Dense,
    g: &'a PlaneGraph,
    inst: Instance,
    m: &'a Measurer,
    u: usize,
    v: usize,
    e: (usize, usize),
    budget0: i64,
    use_beta: bool,
    max_frozen: usize,
    cap: Option<usize>,
    nodes: usize,
    capped: bool,
    path: Vec<usize>,
    in_path: Vec<bool>,
    comp: Vec<usize>,
    queue: Vec<usize>,
}

impl Search<'_> {
    fn uses_e(&self) -> bool {
        self.path.windows(2).any(|w| edge_key(w[0] as Vid, w[1] as Vid) == edge_key(self.e.0 as Vid, self.e.1 as Vid))
    }

    /// Cost of components that can no longer be entered, or `None` when one
    /// of them already breaks the C-Tutte rule.
    fn frozen_cost(&mut self) -> Option<(usize, i64)> {
        let n = self.d.ids.len();
        const NONE: usize = usize::MAX;
        self.comp.clear();
        self.comp.resize(n, NONE);
        let mut count = 0usize;
        let mut cost = 0i64;
        for s in 0..n {
            if self.in_path[s] || self.comp[s] != NONE {
                continue;
            }
            self.queue.clear();
            self.queue.push(s);
            self.comp[s] = s;
            let mut i = 0;
            let mut live = false;
            let mut outer = false;
            while i < self.queue.len() {
                let x = self.queue[i];
                i += 1;
                live |= x == self.v;
                outer |= self.d.on_c[x];
                for &y in &self.d.adj[x] {
                    if !self.in_path[y] && self.comp[y] == NONE {
                        self.comp[y] = s;
                        self.queue.push(y);
                    }
                }
            }
            if live {
                continue;
            }
            let mut att = 0usize;
            let mut marked: Vec<usize> = Vec::new();
            for &x in &self.queue {
                for &y in &self.d.adj[x] {
                    if self.in_path[y] && !marked.contains(&y) {
                        marked.push(y);
                        att += 1;
                    }
                }
            }
            if att > 3 || (outer && att > 2) {
                return None;
            }
            count += 1;
            cost += 3;
            if self.use_beta && att == 2 {
                cost += self.queue.len() as i64 - 1;
            }
        }
        Some((count, cost))
    }

    fn dfs(&mut self) -> Option<Vec<usize>> {
        self.nodes += 1;
        if let Some(cap) = self.cap {
            if self.nodes > cap {
                self.capped = true;
                return None;
            }
        }
        let end = *self.path.last().expect("nonempty");
        if end == self.v {
            if !self.uses_e() {
                return None;
            }
            let p: Vec<Vid> = self.path.iter().map(|&i| self.d.ids[i]).collect();
            let rep = self.m.bound_report(self.g, &self.inst, &p).ok()?;
            let tutte = self.frozen_cost().is_some();
            return (tutte && rep.satisfied && rep.bridge_count <= self.max_frozen).then(|| self.path.clone());
        }
        match self.frozen_cost() {
            None => return None,
            Some((count, cost)) if count > self.max_frozen || cost > self.budget0 => return None,
            _ => {}
        }
        let used = self.uses_e();
        let nbrs = self.d.adj[end].clone();
        for w in nbrs {
            if self.in_path[w] {
                continue;
            }
            if !used {
                let (a, b) = self.e;
                if end == a && w != b || end == b && w != a {
                    continue;
                }
                if w == self.v && !(end == a && w == b || end == b && w == a) {
                    continue;
                }
            }
            self.path.push(w);
            self.in_path[w] = true;
            if let Some(found) = self.dfs() {
                return Some(found);
            }
            self.path.pop();
            self.in_path[w] = false;
            if self.capped {
                return None;
            }
        }
        None
    }
}

impl BaseProvider for ExhaustiveProvider {
    fn find(&self, g: &PlaneGraph, u: Vid, v: Vid, e: (Vid, Vid), m: &Measurer) -> Result<Vec<Vid>> {
        let c = g.cycle()?;
        let inst = Instance::SingleEdge { u, v, e };
        let taus = m.tau_terms(g, &c, &inst)?;
        let budget0 = g.n() as i64 - 6 + taus.iter().map(|t| t.0).sum::<i64>();
        if budget0 < 0 {
            return Err(Error::ProviderExhausted { n: g.n() });
        }
        let (d, idx) = Dense::new(g);
        let lookup = |x: Vid| idx.get(&x).copied().ok_or(Error::Precondition(format!("vertex {x} missing")));
        let (ui, vi) = (lookup(u)?, lookup(v)?);
        let ei = (lookup(e.0)?, lookup(e.1)?);
        let kmax = (budget0 / 3) as usize;
        let mut tiers: Vec<(usize, Option<usize>)> = (0..=kmax).map(|k| (k, Some(self.node_cap))).collect();
        tiers.push((kmax, None));
        for (k, cap) in tiers {
            let mut s = Search {
                d: &d,
                g,
                inst,
                m,
                u: ui,
                v: vi,
                e: ei,
                budget0,
                use_beta: m.mutation != Some(Mutation::DropBeta),
                max_frozen: k,
                cap,
                nodes: 0,
                capped: false,
                path: vec![ui],
                in_path: vec![false; d.ids.len()],
                comp: Vec::new(),
                queue: Vec::new(),
            };
            s.in_path[s.u] = true;
            if let Some(p) = s.dfs() {
                return Ok(p.into_iter().map(|i| d.ids[i]).collect());
            }
            if !s.capped && k == kmax {
                break;
            }
        }
        Err(Error::ProviderExhausted { n: g.n() })
    }
}
