//! Valid argument tuples for each operation, read off the outer cycle.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::measures::{BoundKind, Instance};
use crate::plane::{PlaneGraph, Vid};

/// Every instance of `kind` on `g` with its points in clockwise order.
/// Prescribed-vertex tuples are the ones with `z` strictly inside `uCv`.
pub fn all_instances(g: &PlaneGraph, kind: BoundKind) -> Vec<Instance> {
    let c = g.outer_walk().to_vec();
    let k = c.len();
    let mut out = Vec::new();
    for i in 0..k {
        let w: Vec<Vid> = (0..k).map(|s| c[(i + s) % k]).collect();
        let u = w[0];
        match kind {
            BoundKind::SingleEdge => {
                for ov in 1..k {
                    for oa in 0..ov {
                        out.push(Instance::SingleEdge { u, v: w[ov], e: (w[oa], w[oa + 1]) });
                    }
                }
            }
            BoundKind::PrescribedVertex => {
                for ov in 2..k {
                    for oz in 1..ov {
                        out.push(Instance::PrescribedVertex { u, v: w[ov], z: w[oz] });
                    }
                }
            }
            BoundKind::TwoEdge => {
                let ov = k - 1;
                for of in 0..ov {
                    for oe in of + 1..ov {
                        out.push(Instance::TwoEdge { u, v: w[ov], e: (w[oe], w[oe + 1]), f: (w[of], w[of + 1]) });
                    }
                }
            }
            BoundKind::VertexEdge => {
                let ov = k - 1;
                for oz in 1..ov {
                    for oe in oz..ov {
                        out.push(Instance::VertexEdge { u, v: w[ov], z: w[oz], e: (w[oe], w[oe + 1]) });
                    }
                }
            }
        }
    }
    out
}

/// Up to `count` distinct instances of `kind`, drawn without replacement.
pub fn sample(g: &PlaneGraph, kind: BoundKind, count: usize, rng: &mut impl Rng) -> Vec<Instance> {
    let mut all = all_instances(g, kind);
    all.shuffle(rng);
    all.truncate(count);
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toolkit::generate::wheel;

    #[test]
    fn counts_on_a_square() {
        let g = wheel(4).unwrap();
        // 4 starts, and for each v at offset 1..3 there are ov edges.
        assert_eq!(all_instances(&g, BoundKind::SingleEdge).len(), 4 * (1 + 2 + 3));
        assert_eq!(all_instances(&g, BoundKind::PrescribedVertex).len(), 4 * (1 + 2));
        assert_eq!(all_instances(&g, BoundKind::TwoEdge).len(), 4 * 3);
        assert_eq!(all_instances(&g, BoundKind::VertexEdge).len(), 4 * (2 + 1));
    }

    #[test]
    fn every_tuple_is_accepted_by_the_engine() {
        let g = wheel(5).unwrap();
        let engine = crate::Engine::new();
        for kind in [BoundKind::SingleEdge, BoundKind::PrescribedVertex, BoundKind::TwoEdge, BoundKind::VertexEdge] {
            for inst in all_instances(&g, kind) {
                assert!(!matches!(engine.run(&g, &inst), Err(crate::Error::Precondition(_))), "{inst:?} rejected");
            }
        }
    }
}
