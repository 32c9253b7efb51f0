use super::{edge_offsets, splice_edge, Ctx, Op, Step};
use crate::connectivity::two_cuts;
use crate::error::{Error, Result};
use crate::measures::Instance;
use crate::plane::{Path, PlaneGraph, Vid};

impl Ctx<'_> {
    pub(super) fn vertex_edge(&mut self, g: &PlaneGraph, u: Vid, v: Vid, z: Vid, e: (Vid, Vid)) -> Result<Path> {
        let c = g.cycle()?;
        if u == v || u == z || v == z {
            return Err(Error::Precondition(format!("{u}, {z}, {v} are not distinct")));
        }
        if c.next(v)? != u {
            return Err(Error::Precondition(format!("{v}-{u} is not an outer edge read clockwise")));
        }
        let (e0, _, oe0, oe1) = edge_offsets(&c, u, e)?;
        let oz = c.offset(u, z)?;
        if oz > oe0 || oe1 > c.offset(u, v)? || oe0 >= oe1 {
            return Err(Error::Precondition(format!("{u}, {z}, {}-{}, {v} are not in clockwise order", e.0, e.1)));
        }
        self.trace.push(Step::Enter { op: Op::VertexEdge, n: g.n(), u, v });
        let inst = Instance::VertexEdge { u, v, z, e };

        let mut best: Option<((bool, usize, usize), Vid, Vid)> = None;
        for (a, b) in two_cuts(g) {
            if !c.contains(a) || !c.contains(b) {
                continue;
            }
            let (oa, ob) = (c.offset(u, a)?, c.offset(u, b)?);
            let (x, y, ox, oy) = if oa < ob { (a, b, oa, ob) } else { (b, a, ob, oa) };
            if oy > oe0 || oy < ox + 2 {
                continue;
            }
            let key = (ox < oz && oz < oy, oy - ox, usize::MAX - ox);
            if best.is_none_or(|(k, _, _)| key > k) {
                best = Some((key, x, y));
            }
        }

        let Some(((holds_z, _, _), x, y)) = best else {
            self.trace.push(Step::Forced { z });
            let p = self.single_edge(g, u, v, e)?;
            if !p.contains(&z) {
                return Err(self.breach(format!("no cut inside {u}..{e0}, yet the path misses {z}")));
            }
            return self.checked(g, &inst, p);
        };

        self.trace.push(Step::Split { cut: (x, y), case: 0 });
        let g1 = g.side_graph(y, x)?;
        let p1 = self.two_edge(&g1, u, v, e, (x, y))?;
        let g2 = g.side_graph(x, y)?;
        let target = if holds_z { z } else { g2.cycle()?.at(1) };
        let p2 = self.vertex(&g2, x, y, target)?;
        let p =
            splice_edge(&p1, x, y, &p2).ok_or_else(|| self.breach(format!("path misses the virtual edge {x}-{y}")))?;
        if !p.contains(&z) {
            return Err(self.breach(format!("split at {{{x}, {y}}} lost {z}")));
        }
        self.checked(g, &inst, p)
    }
}
