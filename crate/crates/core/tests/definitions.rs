mod common;

use std::collections::BTreeSet;

use common::*;
use tutte_core::connectivity::{
    blocks, circuit_check, connectivity_profile, is_circuit_graph, is_good_segment, two_separations, Adjacency,
    KeepFilter, NotCircuit,
};
use tutte_core::measures::{beta, bound_report, bridge_count, bridges_of, is_s_tutte, is_tutte, tau, Sub, Thirds};
use tutte_core::plane::{clockwise_segment, End, OuterCycle, Segment, Side};
use tutte_core::{Error, Instance, PlaneGraph};

fn seg(x: End, y: End) -> Segment {
    Segment::new(x, y)
}

use End::{Edge, Vertex};

fn euler(g: &PlaneGraph) -> i64 {
    g.n() as i64 - g.edge_count() as i64 + g.faces().len() as i64
}

#[test]
fn triangle_and_k4_faces() {
    let t = k3();
    assert_eq!(t.faces().len(), 2);
    let k = k4();
    assert_eq!(k.faces().len(), 4);
    assert_eq!(euler(&k), 2);
    assert_eq!(k.outer_walk(), &[1, 2, 3]);
}

#[test]
fn loader_rejects_unknown_neighbor() {
    let text = "planegraph v1\nn 3\n1: 2 5\n2: 1 3\n3: 2 1\nouter: 1 2 3\n";
    assert!(PlaneGraph::parse(text).is_err());
}

#[test]
fn text_round_trip() {
    for g in [k4(), w5(), c6_chord(), c8_nested(), square_antiprism()] {
        let back = PlaneGraph::parse(&g.to_text()).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.rotations(), g.rotations());
    }
}

#[test]
fn segments_on_a_pentagon() {
    let c = OuterCycle::new(vec![1, 2, 3, 4, 5]).unwrap();
    assert_eq!(clockwise_segment(&c, &seg(Vertex(1), Vertex(3))).unwrap(), vec![1, 2, 3]);
    assert_eq!(clockwise_segment(&c, &seg(Vertex(2), Vertex(2))).unwrap(), vec![2]);
    assert_eq!(clockwise_segment(&c, &seg(Edge(1, 2), Vertex(4))).unwrap(), vec![2, 3, 4]);
    assert!(clockwise_segment(&c, &seg(Vertex(7), Vertex(1))).is_err());
}

#[test]
fn opposite_segments_cover_the_cycle() {
    let c = OuterCycle::new(vec![1, 2, 3, 4, 5, 6]).unwrap();
    for x in 1..=6 {
        for y in 1..=6 {
            if x == y {
                continue;
            }
            let a = clockwise_segment(&c, &seg(Vertex(x), Vertex(y))).unwrap();
            let b = clockwise_segment(&c, &seg(Vertex(y), Vertex(x))).unwrap();
            let shared: BTreeSet<u32> = a.iter().filter(|w| b.contains(w)).copied().collect();
            assert_eq!(shared, BTreeSet::from([x, y]));
            assert_eq!(a.len() + b.len(), 8);
        }
    }
}

#[test]
fn edge_in_the_outer_face_of_the_prism() {
    let g = prism6();
    assert_eq!(g.outer_walk(), &[1, 2, 5, 4]);
    let h = g.add_edge_in_face(1, 5, g.outer_face_index()).unwrap();
    assert_eq!(h.outer_walk().len(), 3);
    assert!(h.outer_walk().contains(&1) && h.outer_walk().contains(&5));
    assert_eq!(euler(&h), 2);
    assert_eq!(h.faces().len(), g.faces().len() + 1);
    let back = h.remove_edge(1, 5).unwrap();
    let as_sets = |g: &PlaneGraph| -> BTreeSet<Vec<u32>> {
        g.faces()
            .iter()
            .map(|f| {
                let i = f.iter().enumerate().min_by_key(|(_, &v)| v).unwrap().0;
                f[i..].iter().chain(&f[..i]).copied().collect()
            })
            .collect()
    };
    assert_eq!(as_sets(&back), as_sets(&g));
}

#[test]
fn bad_edge_insertions() {
    let g = prism6();
    assert!(matches!(g.add_edge_in_face(1, 2, g.outer_face_index()), Err(Error::EdgeExists(..))));
    assert!(g.add_edge_in_face(1, 1, g.outer_face_index()).is_err());
    // Opposite corners of the octahedron share no face.
    let o = octahedron();
    assert!(!o.has_edge(1, 6));
    for f in 0..o.faces().len() {
        assert!(o.add_edge_in_face(1, 6, f).is_err());
    }
}

#[test]
fn contracting_one_side_of_the_chord() {
    let g = c6_chord();
    let seps = two_separations(&g, None, false).unwrap();
    let sep = seps.iter().find(|s| s.cut == (2, 5)).unwrap();
    let side = if sep.side_b.contains(&3) { Side::B } else { Side::A };
    let (h, t) = g.contract_side(sep, side, &[1, 6], &[]).unwrap();
    assert_eq!(h.n(), 5);
    assert_eq!(t, 7);
    assert_eq!(h.neighbors(t).iter().copied().collect::<BTreeSet<_>>(), BTreeSet::from([2, 5]));
    assert_eq!(euler(&h), 2);
    assert!(is_circuit_graph(&h));

    // Segments clear of the contracted side keep their τ.
    let (cg, ch) = (g.cycle().unwrap(), h.cycle().unwrap());
    for s in [seg(Vertex(6), Edge(1, 2)), seg(Edge(6, 1), Vertex(2)), seg(Vertex(5), Vertex(6))] {
        assert_eq!(tau(&g, &cg, &s).unwrap(), tau(&h, &ch, &s).unwrap(), "{s:?}");
    }

    let other = if side == Side::A { Side::B } else { Side::A };
    assert!(matches!(g.contract_side(sep, other, &[1, 6], &[]), Err(Error::MarkedInSide(_))));
}

#[test]
fn two_separations_of_fixtures() {
    assert!(two_separations(&k4(), None, false).unwrap().is_empty());
    let g = c6_chord();
    let seps = two_separations(&g, None, false).unwrap();
    // Independent count: pairs whose removal leaves a disconnected rest.
    let mut expected = Vec::new();
    for x in 1..=6u32 {
        for y in x + 1..=6 {
            let rest: Vec<u32> = (1..=6).filter(|&w| w != x && w != y).collect();
            let mut seen = vec![rest[0]];
            let mut i = 0;
            while i < seen.len() {
                for &w in g.neighbors(seen[i]) {
                    if w != x && w != y && !seen.contains(&w) {
                        seen.push(w);
                    }
                }
                i += 1;
            }
            if seen.len() < rest.len() {
                expected.push((x, y));
            }
        }
    }
    assert_eq!(seps.iter().map(|s| s.cut).collect::<Vec<_>>(), expected);
    let s = seps.iter().find(|s| s.cut == (2, 5)).unwrap();
    let sides = BTreeSet::from([s.side_a.clone(), s.side_b.clone()]);
    assert_eq!(sides, BTreeSet::from([BTreeSet::from([2, 3, 4, 5]), BTreeSet::from([5, 6, 1, 2])]));

    let keep = KeepFilter { vertices: vec![1, 8], edges: vec![] };
    let max = two_separations(&c8_nested(), Some(&keep), true).unwrap();
    assert_eq!(max.len(), 1);
    assert_eq!(max[0].cut, (2, 7));
    assert!(max[0].side_b.contains(&4));
    assert!(two_separations(&cycle(4).remove_edge(1, 2).unwrap(), None, false).is_err());
}

#[test]
fn circuit_graph_fixtures() {
    assert!(is_circuit_graph(&w5()));
    assert!(is_circuit_graph(&c6_chord()));
    match circuit_check(&hidden_pair()) {
        Err(NotCircuit::HiddenComponent { cut, component }) => {
            assert_eq!(cut, (1, 2));
            assert_eq!(component, vec![5, 6]);
        }
        other => panic!("unexpected {other:?}"),
    }
}

fn adj(edges: &[(u32, u32)]) -> Adjacency {
    let mut a = Adjacency::new();
    for &(x, y) in edges {
        a.entry(x).or_default().insert(y);
        a.entry(y).or_default().insert(x);
    }
    a
}

#[test]
fn block_fixtures() {
    let bowtie = blocks(&adj(&[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)]));
    assert_eq!(bowtie.blocks.len(), 2);
    assert_eq!(bowtie.cut_vertices, BTreeSet::from([3]));

    let path = blocks(&adj(&[(1, 2), (2, 3)]));
    assert_eq!(path.blocks.len(), 2);
    assert!(path.blocks.iter().all(|b| b.edges.len() == 1));

    // W5 without rim vertices 4 and 5.
    let mut a = w5().adjacency();
    for gone in [4, 5] {
        a.remove(&gone);
    }
    for s in a.values_mut() {
        s.retain(|w| *w != 4 && *w != 5);
    }
    let d = blocks(&a);
    assert_eq!(d.blocks.len(), 1);
    assert_eq!(d.blocks[0].vertices, BTreeSet::from([1, 2, 3, 6]));
    let all: usize = d.blocks.iter().map(|b| b.edges.len()).sum();
    assert_eq!(all, 5);
}

#[test]
fn goodness_fixtures() {
    let g = w5();
    let c = g.cycle().unwrap();
    for x in 1..=5 {
        for y in 1..=5 {
            // Stop short of the whole rim: there the edge y-x cuts off a side.
            if c.next(y).unwrap() != x {
                assert!(is_good_segment(&g, &c, &seg(Vertex(x), Vertex(y))).unwrap());
            }
        }
    }
    assert!(!is_good_segment(&g, &c, &seg(Vertex(1), Vertex(5))).unwrap());
    let g = c6_chord();
    let c = g.cycle().unwrap();
    assert!(!is_good_segment(&g, &c, &seg(Vertex(2), Vertex(5))).unwrap());
    assert!(!is_good_segment(&g, &c, &seg(Vertex(5), Vertex(2))).unwrap());
    assert!(is_good_segment(&g, &c, &seg(Vertex(3), Vertex(4))).unwrap());
    assert!(!is_good_segment(&g, &c, &seg(Vertex(2), Vertex(4))).unwrap());
}

#[test]
fn connectivity_profiles() {
    let p = connectivity_profile(&octahedron());
    assert_eq!((p.kappa, p.essentially_4), (4, true));
    let p = connectivity_profile(&prism6());
    assert_eq!((p.kappa, p.essentially_4), (3, true));
    let p = connectivity_profile(&c6_chord());
    assert_eq!((p.kappa, p.essentially_4), (2, false));
    assert_eq!(connectivity_profile(&square_antiprism()).kappa, 4);
}

#[test]
fn bridges_of_fixtures() {
    let b = bridges_of(&k4(), &Sub::from_cycle(&[1, 2, 3])).unwrap();
    assert_eq!(b.len(), 1);
    assert_eq!(b[0].interior, BTreeSet::from([4]));
    assert_eq!(b[0].attachments, BTreeSet::from([1, 2, 3]));
    assert_eq!(b[0].size(), 4);

    let b = bridges_of(&w5(), &Sub::from_path(&[1, 2, 3, 4, 6, 5])).unwrap();
    assert!(b.iter().all(|x| x.trivial));
    let trivial: BTreeSet<BTreeSet<u32>> = b.iter().map(|x| x.attachments.clone()).collect();
    for pair in [[6, 1], [6, 2], [6, 3], [4, 5], [5, 1]] {
        assert!(trivial.contains(&BTreeSet::from(pair)), "{pair:?}");
    }

    let b = bridges_of(&cycle(6), &Sub::from_path(&[1, 2, 3, 4])).unwrap();
    let nontrivial: Vec<_> = b.iter().filter(|x| !x.trivial).collect();
    assert_eq!(nontrivial.len(), 1);
    assert_eq!(nontrivial[0].interior, BTreeSet::from([5, 6]));
    assert_eq!(nontrivial[0].attachments, BTreeSet::from([1, 4]));

    assert!(matches!(bridges_of(&k4(), &Sub::from_path(&[1, 9])), Err(Error::NotSubgraph(_))));
}

#[test]
fn tutte_predicates() {
    assert!(is_tutte(&k4(), &Sub::from_cycle(&[1, 2, 3])).unwrap());
    assert!(!is_tutte(&w5(), &Sub::from_cycle(&[1, 2, 3, 4, 5])).unwrap());
    let g = fan6();
    let h = Sub::from_path(&[2, 3, 4]);
    assert!(is_tutte(&g, &h).unwrap());
    assert!(!is_s_tutte(&g, &h, &Sub::from_cycle(&[1, 2, 3, 4, 5, 6])).unwrap());
}

#[test]
fn bridge_counts_and_beta() {
    assert_eq!(bridge_count(&k3(), &Sub::from_path(&[1, 2, 3])).unwrap(), 0);
    assert_eq!(bridge_count(&k4(), &Sub::from_cycle(&[1, 2, 3])).unwrap(), 1);
    assert_eq!(bridge_count(&cycle(6), &Sub::from_path(&[1, 2, 3, 4])).unwrap(), 1);

    assert_eq!(beta(&cycle(6), &Sub::from_path(&[1, 2, 3, 4])).unwrap(), Thirds(1));
    assert_eq!(beta(&k4(), &Sub::from_cycle(&[1, 2, 3])).unwrap(), Thirds(0));
    assert_eq!(beta(&cycle(8), &Sub::from_path(&[1, 2, 3, 4])).unwrap(), Thirds(3));
}

#[test]
fn tau_fixtures() {
    let g = w5();
    let c = g.cycle().unwrap();
    assert_eq!(tau(&g, &c, &seg(Vertex(1), Edge(1, 2))).unwrap(), Thirds(2));
    assert_eq!(tau(&g, &c, &seg(Vertex(1), Edge(2, 3))).unwrap(), Thirds(1));
    assert_eq!(tau(&g, &c, &seg(Vertex(1), Vertex(3))).unwrap(), Thirds(0));
    let g = c6_chord();
    let c = g.cycle().unwrap();
    assert_eq!(tau(&g, &c, &seg(Vertex(2), Vertex(5))).unwrap(), Thirds(2));
}

#[test]
fn bound_report_fixtures() {
    let inst = Instance::TwoEdge { u: 1, v: 3, e: (2, 3), f: (1, 2) };
    let r = bound_report(&k3(), &inst, &[1, 2, 3]).unwrap();
    assert_eq!((r.bridge_count, r.beta_thirds, r.budget_thirds), (0, 0, 2));
    assert_eq!(r.tau_thirds, vec![2, 2, 2]);
    assert!(r.satisfied);

    let inst = Instance::TwoEdge { u: 1, v: 5, e: (3, 4), f: (2, 3) };
    let r = bound_report(&w5(), &inst, &[1, 2, 3, 4, 6, 5]).unwrap();
    assert_eq!(r.tau_thirds, vec![1, 2, 1]);
    assert_eq!((r.bridge_count, r.beta_thirds, r.budget_thirds), (0, 0, 3));
    assert!(r.satisfied);

    // The rim path leaves the hub out: b = 1 against a budget of 3 thirds.
    let r = bound_report(&w5(), &inst, &[1, 2, 3, 4, 5]).unwrap();
    assert_eq!(r.bridge_count, 1);
    assert!(r.satisfied);
    // C8 split by 1..4: b = 1, beta = 1, budget (8-7) + τ - 1.
    let inst = Instance::TwoEdge { u: 1, v: 8, e: (3, 4), f: (1, 2) };
    let r = bound_report(&cycle(8), &inst, &[1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
    assert_eq!(r.bridge_count, 0);
    let r = bound_report(&cycle(8), &Instance::SingleEdge { u: 1, v: 4, e: (2, 3) }, &[1, 2, 3, 4]).unwrap();
    assert_eq!((r.bridge_count, r.beta_thirds), (1, 3));
    assert_eq!(r.budget_thirds, 2 + r.tau_thirds.iter().sum::<i64>() - 3);
    assert_eq!(r.satisfied, 3 <= r.budget_thirds);
}
