use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{edge_offsets, splice_edge, splice_vertex, Ctx, Op, Step};
use crate::connectivity::{blocks, keeping, maximal_only, two_cuts, Adjacency, KeepRule, Separation};
use crate::error::{Error, Result};
use crate::measures::{bridges_of, Instance, Sub};
use crate::plane::{edge_key, End, OuterCycle, Path, PlaneGraph, Segment, Vid};

/// `vu` an outer edge read clockwise, and `u, f, e, v` in clockwise order.
pub(super) fn check(c: &OuterCycle, u: Vid, v: Vid, e: (Vid, Vid), f: (Vid, Vid)) -> Result<()> {
    if u == v {
        return Err(Error::SameVertex(u));
    }
    if c.next(v)? != u {
        return Err(Error::Precondition(format!("{v}-{u} is not an outer edge read clockwise")));
    }
    let (_, _, of0, of1) = edge_offsets(c, u, f)?;
    let (_, _, oe0, oe1) = edge_offsets(c, u, e)?;
    let ov = c.offset(u, v)?;
    if of0 >= of1 || oe0 >= oe1 || of1 > oe0 || oe1 > ov {
        return Err(Error::Precondition(format!(
            "{u}, {}-{}, {}-{}, {v} are not in clockwise order",
            f.0, f.1, e.0, e.1
        )));
    }
    Ok(())
}

/// The cut of `sep` oriented so that the clockwise arc from `x` to `y`
/// holds `e`, after checking the separation has the required shape.
pub(super) fn split_cut(
    g: &PlaneGraph,
    c: &OuterCycle,
    u: Vid,
    v: Vid,
    e: (Vid, Vid),
    sep: &Separation,
) -> Result<(Vid, Vid)> {
    let (a, b) = sep.cut;
    let bad = |msg: &str| Error::Precondition(format!("separation {{{a}, {b}}}: {msg}"));
    if !sep.side_a.contains(&u) || !sep.side_a.contains(&v) {
        return Err(bad("u and v must lie in the first side"));
    }
    if BTreeSet::from([a, b]) == BTreeSet::from([u, v]) {
        return Err(bad("the cut may not be {u, v}"));
    }
    let interior = sep.b_interior();
    if sep.side_b.len() < 3 || !(interior.contains(&e.0) || interior.contains(&e.1)) {
        return Err(bad("e must be an edge of the second side"));
    }
    if !crate::connectivity::disconnects(g, &[a, b].into()) {
        return Err(bad("not a cut"));
    }
    let (e0, _) = c.orient(e)?;
    let (x, y) = if c.strictly_between(a, e0, b)? || e0 == a { (a, b) } else { (b, a) };
    let arc = c.arc(x, y)?;
    if arc.iter().any(|w| sep.side_a.contains(w) && *w != x && *w != y) {
        return Err(bad("the second side must be the arc holding e"));
    }
    Ok((x, y))
}

/// How one part of the decomposition is routed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartKind {
    /// The edge `e` alone.
    JOne,
    /// Meets the block path once, span of one vertex.
    Point,
    /// Meets the block path once; routed through an added edge.
    Single,
    /// Meets the block path twice, span of one vertex.
    DoublePoint,
    /// Meets the block path twice; routed through a split vertex.
    Double,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassPlan {
    pub kind: PartKind,
    /// First and last vertex of the span on `v''Cv`.
    pub span: (Vid, Vid),
    /// Number of bridges in the class.
    pub bridges: usize,
}

/// The block `H`, its path, and the parts hung on `v''Cv`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionPlan {
    pub block: Vec<Vid>,
    pub block_path: Path,
    pub classes: Vec<ClassPlan>,
    /// Gaps between consecutive spans, with their vertex counts.
    pub links: Vec<((Vid, Vid), usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    OnPath(Vid),
    OffPath(Vid),
}

struct Class {
    key: Key,
    a: usize,
    b: usize,
    members: Vec<usize>,
    loose: Vec<usize>,
}

impl Ctx<'_> {
    pub(super) fn two_edge(&mut self, g: &PlaneGraph, u: Vid, v: Vid, e: (Vid, Vid), f: (Vid, Vid)) -> Result<Path> {
        let c = g.cycle()?;
        check(&c, u, v, e, f)?;
        self.trace.push(Step::Enter { op: Op::TwoEdge, n: g.n(), u, v });
        let inst = Instance::TwoEdge { u, v, e, f };

        // A side free of u, v, e, f with at least two vertices off the cut
        // becomes a single apex vertex.
        let mut seps = maximal_only(keeping(g, &[u, v], &[e, f], KeepRule::OffInterior, 2));
        seps.sort_by_key(|s| (Reverse(s.side_b.len()), s.cut));
        if let Some(s) = seps.first() {
            let d = s.b_interior();
            let (a, b) = s.cut;
            let arc = c.arc(a, b)?;
            let (x, y) = if d.contains(&arc[1]) { (a, b) } else { (b, a) };
            let t = g.fresh_id();
            let h = g.contract_with(x, y, &d, t)?;
            self.trace.push(Step::Contract { cut: (x, y), apex: t, discarded: d.len() });
            let mut p = self.two_edge(&h, u, v, e, f)?;
            if p.contains(&t) {
                let side = g.side_graph(x, y)?;
                let z = side.cycle()?.at(1);
                let q = self.vertex(&side, x, y, z)?;
                p = splice_vertex(&p, t, &q).ok_or_else(|| self.breach(format!("cannot expand apex {t}")))?;
                self.trace.push(Step::Expand { apex: t, cut: (x, y) });
            }
            return self.checked(g, &inst, p);
        }

        if c.len() == 3 {
            self.trace.push(Step::Triangle);
            let p = vec![u, c.next(u)?, v];
            return self.checked(g, &inst, p);
        }

        let (_, _, oe0, _) = edge_offsets(&c, u, e)?;
        if oe0 + 1 < 3 {
            self.trace.push(Step::Mirror);
            let m = g.mirrored();
            let mut p = self.two_edge(&m, v, u, f, e)?;
            p.reverse();
            return self.checked(g, &inst, p);
        }

        if let Some((x, y)) = self.split_candidate(g, &c, u, v, e)? {
            let p = self.split(g, u, v, e, f, x, y)?;
            return self.checked(g, &inst, p);
        }

        let p = self.through_block(g, &c, u, v, e, f)?;
        self.checked(g, &inst, p)
    }

    /// A 2-cut `{x, y}` other than `{u, v}` whose clockwise arc `xCy`
    /// holds `e` and avoids the inside of `vCu`; the widest one.
    fn split_candidate(&self, g: &PlaneGraph, c: &OuterCycle, u: Vid, v: Vid, e: (Vid, Vid)) -> Result<Option<(Vid, Vid)>> {
        let (_, _, oe0, oe1) = edge_offsets(c, u, e)?;
        let ov = c.offset(u, v)?;
        let mut best: Option<((usize, Reverse<usize>), Vid, Vid)> = None;
        for (a, b) in two_cuts(g) {
            if !c.contains(a) || !c.contains(b) || BTreeSet::from([a, b]) == BTreeSet::from([u, v]) {
                continue;
            }
            let (oa, ob) = (c.offset(u, a)?, c.offset(u, b)?);
            let (x, y, ox, oy) = if oa < ob { (a, b, oa, ob) } else { (b, a, ob, oa) };
            if ox > oe0 || oy < oe1 || oy > ov {
                continue;
            }
            let key = (oy - ox, Reverse(ox));
            if best.is_none_or(|(k, _, _)| key > k) {
                best = Some((key, x, y));
            }
        }
        Ok(best.map(|(_, x, y)| (x, y)))
    }

    /// Splits along `{x, y}` where the clockwise arc `xCy` holds `e` and the
    /// rest of the cycle holds `u` and `v`.
    #[allow(clippy::too_many_arguments)]
    pub(super) fn split(
        &mut self,
        g: &PlaneGraph,
        u: Vid,
        v: Vid,
        e: (Vid, Vid),
        f: (Vid, Vid),
        x: Vid,
        y: Vid,
    ) -> Result<Path> {
        let c = g.cycle()?;
        let (ox, oy) = (c.offset(u, x)?, c.offset(u, y)?);
        let (_, _, of0, of1) = edge_offsets(&c, u, f)?;
        let inst = Instance::TwoEdge { u, v, e, f };
        let g1 = g.side_graph(y, x)?;
        let g2 = g.side_graph(x, y)?;
        let p = if ox <= of0 && of1 <= oy {
            self.trace.push(Step::Split { cut: (x, y), case: 1 });
            let p1 = self.single_edge(&g1, u, v, (x, y))?;
            let p2 = self.two_edge(&g2, x, y, e, f)?;
            splice_edge(&p1, x, y, &p2)
        } else {
            self.trace.push(Step::Split { cut: (x, y), case: 2 });
            let p1 = self.two_edge(&g1, u, v, (x, y), f)?;
            let p2 = self.single_edge(&g2, x, y, e)?;
            splice_edge(&p1, x, y, &p2)
        };
        let p = p.ok_or_else(|| self.breach(format!("path misses the virtual edge {x}-{y}")))?;
        self.checked(g, &inst, p)
    }

    /// The block construction: a path in the block `H` of `G - v''Cv`
    /// holding `uCv'`, extended along `v''Cv` part by part.
    fn through_block(
        &mut self,
        g: &PlaneGraph,
        c: &OuterCycle,
        u: Vid,
        v: Vid,
        e: (Vid, Vid),
        f: (Vid, Vid),
    ) -> Result<Path> {
        let (vp, vpp) = c.orient(e)?;
        let r = c.arc(vpp, v)?;
        let rpos: BTreeMap<Vid, usize> = r.iter().enumerate().map(|(i, &w)| (w, i)).collect();

        let mut adj: Adjacency = g.adjacency();
        adj.retain(|w, _| !rpos.contains_key(w));
        for s in adj.values_mut() {
            s.retain(|w| !rpos.contains_key(w));
        }
        let un = c.next(u)?;
        let decomposition = blocks(&adj);
        let block = decomposition
            .blocks
            .iter()
            .find(|b| b.edges.contains(&edge_key(u, un)))
            .ok_or_else(|| self.breach("no block holds the first outer edge"))?;
        if c.arc(u, vp)?.iter().any(|w| !block.vertices.contains(w)) {
            return Err(self.breach(format!("{u}..{vp} is not inside one block")));
        }
        let h = g.induced(&block.vertices, (u, un))?;
        let d = h.cycle()?;
        let ph = self.single_edge(&h, u, vp, f)?;
        let on_ph: BTreeSet<Vid> = ph.iter().copied().collect();

        // Components of H - V(P_H), keyed by their smallest vertex.
        let mut off_key: BTreeMap<Vid, Vid> = BTreeMap::new();
        let mut off_comp: BTreeMap<Vid, BTreeSet<Vid>> = BTreeMap::new();
        for k in h.components_avoiding(&on_ph) {
            let m = *k.first().expect("nonempty");
            for &w in &k {
                off_key.insert(w, m);
            }
            off_comp.insert(m, k);
        }

        let mut frame = Sub::from_parts(h.vertices().chain(r.iter().copied()), h.edges());
        frame.edges.extend(r.windows(2).map(|w| edge_key(w[0], w[1])));
        let bridges = bridges_of(g, &frame)?;

        let mut classes: BTreeMap<Key, Class> = BTreeMap::new();
        let mut free: Vec<(usize, usize, usize)> = Vec::new();
        for (i, br) in bridges.iter().enumerate() {
            let on_h: Vec<Vid> = br.attachments.iter().copied().filter(|w| h.has_vertex(*w)).collect();
            let on_r: Vec<usize> = br.attachments.iter().filter_map(|w| rpos.get(w).copied()).collect();
            let (Some(&lo), Some(&hi)) = (on_r.iter().min(), on_r.iter().max()) else {
                return Err(self.breach(format!("a bridge at {:?} misses v''Cv", br.attachments)));
            };
            match on_h.as_slice() {
                [] => free.push((lo, hi, i)),
                [w] => {
                    let key = if on_ph.contains(w) { Key::OnPath(*w) } else { Key::OffPath(off_key[w]) };
                    let cl = classes.entry(key).or_insert(Class {
                        key,
                        a: lo,
                        b: hi,
                        members: Vec::new(),
                        loose: Vec::new(),
                    });
                    cl.a = cl.a.min(lo);
                    cl.b = cl.b.max(hi);
                    cl.members.push(i);
                }
                _ => return Err(self.breach(format!("a bridge meets the block at {on_h:?}"))),
            }
        }
        let mut classes: Vec<Class> = classes.into_values().collect();
        // Classes sharing a single vertex of v''Cv tie; the one through e leads.
        classes.sort_by_key(|cl| (cl.a, cl.b, cl.key != Key::OnPath(vp), cl.key));

        let last = r.len() - 1;
        let ok_order = classes.windows(2).all(|w| w[0].b <= w[1].a);
        if classes.is_empty() || !ok_order || classes[0].a != 0 || classes[classes.len() - 1].b != last {
            let spans: Vec<(usize, usize)> = classes.iter().map(|cl| (cl.a, cl.b)).collect();
            return Err(self.breach(format!("spans on v''Cv are not laid out in order: {spans:?}")));
        }
        let first = &classes[0];
        let lone_e = first.key == Key::OnPath(vp)
            && first.b == 0
            && first.members.len() == 1
            && bridges[first.members[0]].trivial;
        if !lone_e {
            return Err(self.breach("the first part is not the edge e alone"));
        }
        for (lo, hi, i) in free {
            if let Some(cl) = classes.iter_mut().find(|cl| cl.a <= lo && hi <= cl.b) {
                cl.loose.push(i);
            } else if !bridges[i].trivial || !classes.windows(2).any(|w| w[0].b <= lo && hi <= w[1].a) {
                return Err(self.breach(format!("a bridge on {:?} fits no part", bridges[i].attachments)));
            }
        }

        let tau_ev = self.measurer().tau(g, c, &Segment::new(End::Edge(e.0, e.1), End::Vertex(v)))?;
        self.trace.push(Step::Case { tau_ev_thirds: tau_ev.0 });

        let mut plan = DecompositionPlan {
            block: h.vertices().collect(),
            block_path: ph.clone(),
            classes: Vec::new(),
            links: classes.windows(2).map(|w| ((r[w[0].b], r[w[1].a]), w[1].a - w[0].b + 1)).collect(),
        };
        let mut parts: Vec<Path> = Vec::new();
        for (idx, cl) in classes.iter().enumerate() {
            let interior: BTreeSet<Vid> =
                cl.members.iter().chain(&cl.loose).flat_map(|&i| bridges[i].interior.iter().copied()).collect();
            let span: Vec<Vid> = r[cl.a..=cl.b].to_vec();
            let kind = match (idx, cl.key, cl.a == cl.b) {
                (0, _, _) => PartKind::JOne,
                (_, Key::OnPath(_), true) => PartKind::Point,
                (_, Key::OnPath(_), false) => PartKind::Single,
                (_, Key::OffPath(_), true) => PartKind::DoublePoint,
                (_, Key::OffPath(_), false) => PartKind::Double,
            };
            plan.classes.push(ClassPlan { kind, span: (span[0], span[span.len() - 1]), bridges: cl.members.len() });
            let part = match (cl.key, kind) {
                (_, PartKind::JOne | PartKind::Point | PartKind::DoublePoint) => vec![span[0]],
                (Key::OnPath(x), _) => self.single_part(g, x, &span, &interior)?,
                (Key::OffPath(k), _) => {
                    let kset = &off_comp[&k];
                    self.double_part(g, &h, &d, vp, &on_ph, kset, &span, &interior)?
                }
            };
            parts.push(part);
        }
        self.trace.push(Step::Block(plan));

        let mut p = ph;
        let mut prev: Option<usize> = None;
        for (cl, part) in classes.iter().zip(parts) {
            if let Some(pb) = prev {
                p.extend_from_slice(&r[pb + 1..=cl.a]);
                p.extend_from_slice(&part[1..]);
            } else {
                p.extend(part);
            }
            prev = Some(cl.b);
        }
        Ok(p)
    }

    /// A span met by the block path at `x` alone: route through the part
    /// plus the edge `x a`, then drop `x`.
    fn single_part(&mut self, g: &PlaneGraph, x: Vid, span: &[Vid], interior: &BTreeSet<Vid>) -> Result<Path> {
        let (a, b) = (span[0], span[span.len() - 1]);
        let mut keep: BTreeSet<Vid> = interior.clone();
        keep.extend(span.iter().copied());
        keep.insert(x);
        let dart = (span[0], span[1]);
        let j = g.induced(&keep, dart)?;
        let j = if j.has_edge(x, a) {
            if j.outer_walk().last() != Some(&x) {
                return Err(self.breach(format!("edge {x}-{a} does not bound the part")));
            }
            j
        } else {
            let walk = j.outer_walk();
            let at = walk
                .iter()
                .skip(1)
                .position(|&w| w == x)
                .ok_or_else(|| self.breach(format!("{x} is not on the boundary of its part")))?;
            j.split_face(j.outer_face_index(), 0, at + 1, dart)?
        };
        let q = self.single_edge(&j, x, b, (x, a))?;
        if q.len() < 2 || q[1] != a {
            return Err(self.breach(format!("part path does not leave {x} through {a}")));
        }
        Ok(q[1..].to_vec())
    }

    /// A span met by the block path at two vertices: a prescribed-vertex
    /// path in the block of the part without them.
    #[allow(clippy::too_many_arguments)]
    fn double_part(
        &mut self,
        g: &PlaneGraph,
        h: &PlaneGraph,
        d: &OuterCycle,
        vp: Vid,
        on_ph: &BTreeSet<Vid>,
        kset: &BTreeSet<Vid>,
        span: &[Vid],
        interior: &BTreeSet<Vid>,
    ) -> Result<Path> {
        let mut att: BTreeSet<Vid> = BTreeSet::new();
        for &w in kset {
            att.extend(h.neighbors(w).iter().copied().filter(|n| on_ph.contains(n)));
        }
        let att: Vec<Vid> = att.into_iter().collect();
        let [p0, p1] = att.as_slice() else {
            return Err(self.breach(format!("block bridge {kset:?} meets the block path at {att:?}")));
        };
        let (y, x) = if d.offset(vp, *p0)? < d.offset(vp, *p1)? { (*p0, *p1) } else { (*p1, *p0) };

        let mut keep: BTreeSet<Vid> = interior.clone();
        keep.extend(span.iter().copied());
        keep.extend(kset.iter().copied());
        let mut adj: Adjacency = BTreeMap::new();
        for &w in &keep {
            adj.insert(w, g.neighbors(w).iter().copied().filter(|n| keep.contains(n)).collect());
        }
        let (a, b) = (span[0], span[span.len() - 1]);
        let block = blocks(&adj)
            .blocks
            .into_iter()
            .find(|bl| bl.edges.contains(&edge_key(span[0], span[1])))
            .ok_or_else(|| self.breach("no block holds the span"))?;
        let j = g.induced(&block.vertices, (span[0], span[1]))?;
        let cj = j.cycle()?;
        if cj.arc(a, b)? != span {
            return Err(self.breach(format!("span {a}..{b} is not on the part's outer cycle")));
        }
        let back = cj.arc(b, a)?;
        let nx: BTreeSet<Vid> = g.neighbors(x).iter().copied().collect();
        let ny: BTreeSet<Vid> = g.neighbors(y).iter().copied().collect();
        let z = (1..back.len() - 1)
            .find(|&i| back[..i].iter().all(|w| !ny.contains(w)) && back[i + 1..].iter().all(|w| !nx.contains(w)))
            .map(|i| back[i])
            .ok_or_else(|| self.breach(format!("no split vertex on {b}..{a}")))?;
        let mut q = self.vertex(&j, b, a, z)?;
        q.reverse();
        Ok(q)
    }
}
