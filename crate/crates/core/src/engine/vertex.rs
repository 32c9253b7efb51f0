use super::{splice_edge, Ctx, Op, Step};
use crate::connectivity::two_cuts;
use crate::error::{Error, Result};
use crate::measures::Instance;
use crate::plane::{Path, PlaneGraph, Vid};

impl Ctx<'_> {
    pub(super) fn vertex(&mut self, g: &PlaneGraph, u: Vid, v: Vid, z: Vid) -> Result<Path> {
        let c = g.cycle()?;
        for w in [u, v, z] {
            c.pos(w)?;
        }
        if u == v || u == z || v == z {
            return Err(Error::Precondition(format!("{u}, {z}, {v} are not distinct")));
        }
        let inst = Instance::PrescribedVertex { u, v, z };
        if !c.strictly_between(u, z, v)? {
            self.trace.push(Step::Swap);
            let mut p = self.vertex(g, v, u, z)?;
            p.reverse();
            return self.checked(g, &inst, p);
        }
        self.trace.push(Step::Enter { op: Op::Vertex, n: g.n(), u, v });

        let oz = c.offset(u, z)?;
        let ov = c.offset(u, v)?;
        let mut best: Option<(usize, usize, Vid, Vid)> = None;
        for (a, b) in two_cuts(g) {
            if !c.contains(a) || !c.contains(b) {
                continue;
            }
            let (oa, ob) = (c.offset(u, a)?, c.offset(u, b)?);
            let (x, y, ox, oy) = if oa < ob { (a, b, oa, ob) } else { (b, a, ob, oa) };
            if !(ox < oz && oz < oy && oy <= ov) {
                continue;
            }
            let key = (oy - ox, usize::MAX - ox);
            if best.is_none_or(|(w, o, _, _)| key > (w, usize::MAX - o)) {
                best = Some((oy - ox, ox, x, y));
            }
        }

        let Some((_, _, x, y)) = best else {
            self.trace.push(Step::Forced { z });
            let e = self.first_light_edge(g, u, v)?;
            let p = self.single_edge(g, u, v, e)?;
            if !p.contains(&z) {
                return Err(self.breach(format!("no cut separates {z}, yet the path misses it")));
            }
            return self.checked(g, &inst, p);
        };

        self.trace.push(Step::Split { cut: (x, y), case: 0 });
        let g1 = g.side_graph(y, x)?;
        let p1 = self.single_edge(&g1, u, v, (x, y))?;
        let g2 = g.side_graph(x, y)?;
        let p2 = self.vertex(&g2, x, y, z)?;
        let p =
            splice_edge(&p1, x, y, &p2).ok_or_else(|| self.breach(format!("path misses the virtual edge {x}-{y}")))?;
        self.checked(g, &inst, p)
    }
}
