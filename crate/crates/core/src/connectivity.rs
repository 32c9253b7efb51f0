//! Cuts, 2-separations, blocks, circuit graphs and segment goodness.
//!
//! Everything here is brute force over small vertex subsets.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::plane::{OuterCycle, PlaneGraph, Segment, Vid};

/// A 2-separation given by its cut and the vertex sets of both parts.
/// The cut lies in both parts. An edge between the cut vertices belongs
/// to `side_a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub cut: (Vid, Vid),
    pub side_a: BTreeSet<Vid>,
    pub side_b: BTreeSet<Vid>,
}

impl Separation {
    /// Vertices of `side_b` off the cut.
    pub fn b_interior(&self) -> BTreeSet<Vid> {
        self.side_b.iter().copied().filter(|&v| v != self.cut.0 && v != self.cut.1).collect()
    }
}

/// Material that must stay on `side_a`.
#[derive(Clone, Debug, Default)]
pub struct KeepFilter {
    pub vertices: Vec<Vid>,
    pub edges: Vec<(Vid, Vid)>,
}

/// Whether deleting `removed` disconnects what is left.
pub fn disconnects(g: &PlaneGraph, removed: &BTreeSet<Vid>) -> bool {
    g.components_avoiding(removed).len() > 1
}

/// All vertex pairs whose removal disconnects `g`.
pub fn two_cuts(g: &PlaneGraph) -> Vec<(Vid, Vid)> {
    let vs: Vec<Vid> = g.vertices().collect();
    let mut out = Vec::new();
    for (i, &x) in vs.iter().enumerate() {
        for &y in &vs[i + 1..] {
            if disconnects(g, &[x, y].into()) {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn is_two_connected(g: &PlaneGraph) -> bool {
    if g.n() < 3 {
        return false;
    }
    if disconnects(g, &BTreeSet::new()) {
        return false;
    }
    !g.vertices().any(|v| disconnects(g, &[v].into()))
}

fn first_outer_vertex(g: &PlaneGraph, avoid: &BTreeSet<Vid>) -> Option<Vid> {
    g.outer_walk().iter().copied().find(|v| !avoid.contains(v))
}

/// How a discarded side may relate to the keep material.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum KeepRule {
    /// Keep vertices may not lie in `side_b` at all.
    OffSideB,
    /// Keep vertices may sit on the cut.
    OffInterior,
}

/// 2-separations of a 2-connected graph, lexicographic by cut.
///
/// Without a filter, a cut leaving two components yields one separation
/// whose `side_a` holds the first outer vertex off the cut; a cut leaving
/// three or more yields one separation per component. With a filter, the
/// discarded side is the union of components free of keep material, and
/// keep vertices may not lie on the cut. `maximal` keeps only separations
/// whose `side_b` is not strictly inside another one.
pub fn two_separations(g: &PlaneGraph, filter: Option<&KeepFilter>, maximal: bool) -> Result<Vec<Separation>> {
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let seps = match filter {
        None => unfiltered(g),
        Some(f) => keeping(g, &f.vertices, &f.edges, KeepRule::OffSideB, 1),
    };
    Ok(if maximal { maximal_only(seps) } else { seps })
}

fn unfiltered(g: &PlaneGraph) -> Vec<Separation> {
    let mut out = Vec::new();
    for (x, y) in two_cuts(g) {
        let cut: BTreeSet<Vid> = [x, y].into();
        let comps = g.components_avoiding(&cut);
        let all: BTreeSet<Vid> = g.vertices().collect();
        let make = |b_part: &BTreeSet<Vid>| {
            let side_b: BTreeSet<Vid> = b_part.union(&cut).copied().collect();
            let side_a: BTreeSet<Vid> = all.iter().copied().filter(|v| !b_part.contains(v)).collect();
            Separation { cut: (x, y), side_a, side_b }
        };
        if comps.len() == 2 {
            let anchor = first_outer_vertex(g, &cut).unwrap_or(*comps[0].first().expect("nonempty"));
            let b_part = if comps[0].contains(&anchor) { &comps[1] } else { &comps[0] };
            out.push(make(b_part));
        } else {
            for k in &comps {
                out.push(make(k));
            }
        }
    }
    out
}

/// Separations whose discarded side avoids the keep material, one per cut,
/// with at least `min_discard` discarded vertices.
pub(crate) fn keeping(
    g: &PlaneGraph,
    keep_v: &[Vid],
    keep_e: &[(Vid, Vid)],
    rule: KeepRule,
    min_discard: usize,
) -> Vec<Separation> {
    let mut protected: HashSet<Vid> = keep_v.iter().copied().collect();
    for &(a, b) in keep_e {
        protected.insert(a);
        protected.insert(b);
    }
    let all: BTreeSet<Vid> = g.vertices().collect();
    let mut out = Vec::new();
    for (x, y) in two_cuts(g) {
        if rule == KeepRule::OffSideB && (keep_v.contains(&x) || keep_v.contains(&y)) {
            continue;
        }
        let cut: BTreeSet<Vid> = [x, y].into();
        let comps = g.components_avoiding(&cut);
        let free: Vec<&BTreeSet<Vid>> = comps.iter().filter(|k| !k.iter().any(|v| protected.contains(v))).collect();
        if free.is_empty() || free.len() == comps.len() {
            continue;
        }
        let discard: BTreeSet<Vid> = free.into_iter().flatten().copied().collect();
        if discard.len() < min_discard {
            continue;
        }
        let side_b = discard.union(&cut).copied().collect();
        let side_a = all.difference(&discard).copied().collect();
        out.push(Separation { cut: (x, y), side_a, side_b });
    }
    out
}

pub(crate) fn maximal_only(seps: Vec<Separation>) -> Vec<Separation> {
    let keep: Vec<bool> = seps
        .iter()
        .map(|s| !seps.iter().any(|o| o.side_b.len() > s.side_b.len() && s.side_b.is_subset(&o.side_b)))
        .collect();
    seps.into_iter().zip(keep).filter(|(_, k)| *k).map(|(s, _)| s).collect()
}

/// Why a plane graph fails to be a circuit graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NotCircuit {
    NotTwoConnected,
    OuterNotCycle,
    /// A component of `G - cut` whose bridge holds no outer edge.
    HiddenComponent {
        cut: (Vid, Vid),
        component: Vec<Vid>,
    },
}

/// Circuit-graph check with a reason on failure.
///
/// A component of `G - T` is accepted when its bridge contains an outer
/// edge, which is the same as the component holding an outer vertex.
pub fn circuit_check(g: &PlaneGraph) -> std::result::Result<(), NotCircuit> {
    if !is_two_connected(g) {
        return Err(NotCircuit::NotTwoConnected);
    }
    let c = g.cycle().map_err(|_| NotCircuit::OuterNotCycle)?;
    for (x, y) in two_cuts(g) {
        for k in g.components_avoiding(&[x, y].into()) {
            if !k.iter().any(|&v| c.contains(v)) {
                return Err(NotCircuit::HiddenComponent { cut: (x, y), component: k.into_iter().collect() });
            }
        }
    }
    Ok(())
}

pub fn is_circuit_graph(g: &PlaneGraph) -> bool {
    circuit_check(g).is_ok()
}

pub type Adjacency = BTreeMap<Vid, BTreeSet<Vid>>;

/// A block: a maximal 2-connected subgraph, a bridge edge, or an isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub vertices: BTreeSet<Vid>,
    pub edges: Vec<(Vid, Vid)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: BTreeSet<Vid>,
}

/// Block decomposition by the lowpoint method.
pub fn blocks(adj: &Adjacency) -> BlockDecomposition {
    struct St<'a> {
        adj: &'a Adjacency,
        disc: BTreeMap<Vid, usize>,
        low: BTreeMap<Vid, usize>,
        time: usize,
        stack: Vec<(Vid, Vid)>,
        out: BlockDecomposition,
    }
    fn visit(st: &mut St, v: Vid, parent: Option<Vid>) {
        st.time += 1;
        st.disc.insert(v, st.time);
        st.low.insert(v, st.time);
        let mut children = 0;
        let nbrs: Vec<Vid> = st.adj[&v].iter().copied().collect();
        for w in nbrs {
            if Some(w) == parent {
                continue;
            }
            match st.disc.get(&w).copied() {
                None => {
                    children += 1;
                    st.stack.push((v, w));
                    visit(st, w, Some(v));
                    let lw = st.low[&w];
                    if lw < st.low[&v] {
                        st.low.insert(v, lw);
                    }
                    if lw >= st.disc[&v] {
                        if parent.is_some() || children > 1 {
                            st.out.cut_vertices.insert(v);
                        }
                        let mut block = Block { vertices: BTreeSet::new(), edges: Vec::new() };
                        while let Some((a, b)) = st.stack.pop() {
                            block.vertices.insert(a);
                            block.vertices.insert(b);
                            block.edges.push(crate::plane::edge_key(a, b));
                            if (a, b) == (v, w) {
                                break;
                            }
                        }
                        block.edges.sort_unstable();
                        st.out.blocks.push(block);
                    }
                }
                Some(dw) => {
                    if dw < st.disc[&v] {
                        st.stack.push((v, w));
                        if dw < st.low[&v] {
                            st.low.insert(v, dw);
                        }
                    }
                }
            }
        }
    }
    let mut st = St {
        adj,
        disc: BTreeMap::new(),
        low: BTreeMap::new(),
        time: 0,
        stack: Vec::new(),
        out: BlockDecomposition::default(),
    };
    for &v in adj.keys() {
        if st.disc.contains_key(&v) {
            continue;
        }
        if adj[&v].is_empty() {
            st.disc.insert(v, 0);
            st.out.blocks.push(Block { vertices: [v].into(), edges: Vec::new() });
        } else {
            visit(&mut st, v, None);
        }
    }
    st.out
}

/// Goodness of a clockwise segment given as its vertex sequence.
///
/// The segment fails when it holds `s` before `t` such that `{s, t}` is a
/// 2-cut, or such that `st` is an edge and `sCt` is longer than that edge.
/// The second case is the separation whose small side is the single edge
/// `st`, which the definition also admits.
pub fn path_is_good(g: &PlaneGraph, seq: &[Vid]) -> bool {
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            let (s, t) = (seq[i], seq[j]);
            if j > i + 1 && g.has_edge(s, t) {
                return false;
            }
            if disconnects(g, &[s, t].into()) {
                return false;
            }
        }
    }
    true
}

pub fn is_good_segment(g: &PlaneGraph, c: &OuterCycle, s: &Segment) -> Result<bool> {
    Ok(path_is_good(g, &c.segment(s)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityProfile {
    pub kappa: usize,
    pub essentially_4: bool,
}

fn for_each_subset(items: &[Vid], k: usize, f: &mut dyn FnMut(&[Vid]) -> bool) -> bool {
    fn rec(items: &[Vid], k: usize, start: usize, cur: &mut Vec<Vid>, f: &mut dyn FnMut(&[Vid]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            if !rec(items, k, i + 1, cur, f) {
                return false;
            }
            cur.pop();
        }
        true
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f)
}

/// Vertex connectivity and essential 4-connectivity by subset enumeration.
pub fn connectivity_profile(g: &PlaneGraph) -> ConnectivityProfile {
    let vs: Vec<Vid> = g.vertices().collect();
    let n = vs.len();
    let mut kappa = n.saturating_sub(1);
    'outer: for k in 0..n.saturating_sub(1) {
        let mut found = false;
        for_each_subset(&vs, k, &mut |s| {
            if disconnects(g, &s.iter().copied().collect()) {
                found = true;
                return false;
            }
            true
        });
        if found {
            kappa = k;
            break 'outer;
        }
    }
    let mut essentially_4 = !disconnects(g, &BTreeSet::new());
    for k in 1..=3.min(n) {
        if !essentially_4 {
            break;
        }
        for_each_subset(&vs, k, &mut |s| {
            let comps = g.components_avoiding(&s.iter().copied().collect());
            if comps.len() > 1 && !(comps.len() == 2 && comps.iter().any(|c| c.len() == 1)) {
                essentially_4 = false;
                return false;
            }
            true
        });
    }
    ConnectivityProfile { kappa, essentially_4 }
}
