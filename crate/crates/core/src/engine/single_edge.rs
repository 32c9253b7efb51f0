use std::cmp::Reverse;
use std::collections::BTreeSet;

use super::{edge_offsets, splice_vertex, Ctx, Op, Step};
use crate::connectivity::{keeping, maximal_only, KeepRule};
use crate::error::{Error, Result};
use crate::measures::{Instance, Thirds};
use crate::plane::{End, OuterCycle, Path, PlaneGraph, Segment, Vid};

/// `u` and `v` distinct on the cycle, `e` an outer edge on `uCv`.
pub(super) fn check(c: &OuterCycle, u: Vid, v: Vid, e: (Vid, Vid)) -> Result<()> {
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let ov = c.offset(u, v)?;
    let (_, _, oa, ob) = edge_offsets(c, u, e)?;
    if oa >= ob || ob > ov {
        return Err(Error::Precondition(format!("edge {}-{} is not on the clockwise arc {u}..{v}", e.0, e.1)));
    }
    Ok(())
}

impl Ctx<'_> {
    pub(super) fn single_edge(&mut self, g: &PlaneGraph, u: Vid, v: Vid, e: (Vid, Vid)) -> Result<Path> {
        let c = g.cycle()?;
        check(&c, u, v, e)?;
        self.trace.push(Step::Enter { op: Op::SingleEdge, n: g.n(), u, v });
        let inst = Instance::SingleEdge { u, v, e };

        let mut seps = maximal_only(keeping(g, &[u, v], &[e], KeepRule::OffInterior, 2));
        seps.sort_by_key(|s| (Reverse(s.side_b.len()), s.cut));
        let mut chosen: Vec<(Vid, Vid, BTreeSet<Vid>)> = Vec::new();
        let mut taken: BTreeSet<Vid> = BTreeSet::new();
        for s in seps {
            let (x, y) = s.cut;
            let d = s.b_interior();
            let clash = d.iter().any(|w| taken.contains(w))
                || taken.contains(&x)
                || taken.contains(&y)
                || chosen.iter().any(|(a, b, _)| d.contains(a) || d.contains(b));
            if !clash {
                taken.extend(d.iter().copied());
                chosen.push((x, y, d));
            }
        }
        if chosen.is_empty() {
            let p = self.provide(g, u, v, e)?;
            return self.checked(g, &inst, p);
        }

        let apexes = g.fresh_ids(chosen.len());
        let mut h = g.clone();
        for ((x, y, d), &t) in chosen.iter().zip(&apexes) {
            h = h.contract_with(*x, *y, d, t)?;
            self.trace.push(Step::Contract { cut: (*x, *y), apex: t, discarded: d.len() });
        }
        let mut p = self.provide(&h, u, v, e)?;
        for ((x, y, d), &t) in chosen.iter().zip(&apexes) {
            if !p.contains(&t) {
                continue;
            }
            let arc = c.arc(*x, *y)?;
            let (a, b) = if d.contains(&arc[1]) { (*x, *y) } else { (*y, *x) };
            let side = g.side_graph(a, b)?;
            let ep = self.first_light_edge(&side, a, b)?;
            let q = self.single_edge(&side, a, b, ep)?;
            p = splice_vertex(&p, t, &q).ok_or_else(|| self.breach(format!("cannot expand apex {t}")))?;
            self.trace.push(Step::Expand { apex: t, cut: (a, b) });
        }
        self.checked(g, &inst, p)
    }

    /// The first edge `e'` of `xCy` with `τ(x e') <= 1/3`, or failing that
    /// the first edge of least weight.
    pub(super) fn first_light_edge(&self, g: &PlaneGraph, x: Vid, y: Vid) -> Result<(Vid, Vid)> {
        let c = g.cycle()?;
        let arc = c.arc(x, y)?;
        let mut best: Option<(Thirds, (Vid, Vid))> = None;
        for w in arc.windows(2) {
            let t = self.measurer().tau(g, &c, &Segment::new(End::Vertex(x), End::Edge(w[0], w[1])))?;
            if t <= Thirds::ONE {
                return Ok((w[0], w[1]));
            }
            if best.is_none_or(|(bt, _)| t < bt) {
                best = Some((t, (w[0], w[1])));
            }
        }
        best.map(|(_, e)| e).ok_or_else(|| Error::Precondition(format!("arc {x}..{y} has no edge")))
    }
}
