use serde::Serialize;

use super::{Engine, Op, Step, TutteResult};
use crate::connectivity::connectivity_profile;
use crate::error::{Error, Result};
use crate::measures::{bridges_of, Instance, Sub};
use crate::plane::{edge_key, PlaneGraph, Vid};

/// Length accounting for the three-edge cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleReport {
    /// The face used as outer cycle.
    pub face: Vec<Vid>,
    pub length: usize,
    /// `⌈(2n+1)/3⌉`.
    pub length_bound: usize,
    pub bound_holds: bool,
    /// Some bridge of the cycle has other than one interior vertex, so the
    /// length bound is reported but not enforced.
    pub degenerate: bool,
}

impl Engine {
    /// A cycle through three distinct edges of one face of a 3-connected,
    /// essentially 4-connected plane graph. The face is re-embedded as the
    /// outer one; `g3 = vu` closes a two-edge path through `e` and `f`.
    pub fn long_cycle_three_edges(
        &self,
        g: &PlaneGraph,
        e: (Vid, Vid),
        f: (Vid, Vid),
        g3: (Vid, Vid),
    ) -> Result<TutteResult> {
        let prof = connectivity_profile(g);
        if prof.kappa < 3 || !prof.essentially_4 {
            return Err(Error::Precondition(format!(
                "needs a 3-connected, essentially 4-connected graph (connectivity {}, essentially 4-connected: {})",
                prof.kappa, prof.essentially_4
            )));
        }
        let wanted = [edge_key(e.0, e.1), edge_key(f.0, f.1), edge_key(g3.0, g3.1)];
        if wanted[0] == wanted[1] || wanted[1] == wanted[2] || wanted[0] == wanted[2] {
            return Err(Error::Precondition("the three edges must be distinct".into()));
        }
        let face = g
            .faces()
            .iter()
            .find(|w| {
                let k = w.len();
                let keys: Vec<(Vid, Vid)> = (0..k).map(|i| edge_key(w[i], w[(i + 1) % k])).collect();
                wanted.iter().all(|x| keys.contains(x))
            })
            .ok_or_else(|| Error::Precondition("no face holds all three edges".into()))?
            .clone();
        let h = g.with_outer_dart((face[0], face[1]))?;
        let c = h.cycle()?;
        let (v, u) = c.orient(g3)?;
        let (ea, _) = c.orient(e)?;
        let (fa, _) = c.orient(f)?;
        let (e, f) = if c.offset(u, ea)? < c.offset(u, fa)? { (f, e) } else { (e, f) };

        let mut ctx = self.ctx();
        ctx.trace.push(Step::Enter { op: Op::Cycle, n: h.n(), u, v });
        let p = ctx.two_edge(&h, u, v, e, f)?;
        let n = h.n();
        let length = p.len();
        let length_bound = (2 * n + 1).div_ceil(3);
        let degenerate = bridges_of(&h, &Sub::from_cycle(&p))?.iter().any(|b| !b.trivial && b.interior.len() != 1);
        let bound_holds = length >= length_bound;
        if self.verify && !degenerate && !bound_holds {
            return Err(ctx.breach(format!("cycle of length {length} is shorter than {length_bound}")));
        }
        let mut res = self.finish(&h, &Instance::TwoEdge { u, v, e, f }, ctx, p)?;
        res.cycle = Some(CycleReport { face, length, length_bound, bound_holds, degenerate });
        Ok(res)
    }
}
