mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use tutte_core::measures::{bridge_count, is_c_tutte_path, is_tutte, Sub};
use tutte_core::oracle::Oracle;
use tutte_core::toolkit::generate::{random_circuit, stacked};
use tutte_core::{Engine, Instance, PlaneGraph};

fn oracle() -> Oracle {
    Oracle::default()
}

#[test]
fn triangle_has_one_path_through_its_edge() {
    let paths = oracle().enumerate_tutte_paths(&k3(), 1, 3, &[(1, 2)], &[]).unwrap();
    assert_eq!(paths, vec![vec![1, 2, 3]]);
}

#[test]
fn k4_paths() {
    let g = k4();
    let paths = oracle().enumerate_tutte_paths(&g, 1, 3, &[(1, 2)], &[]).unwrap();
    assert!(paths.contains(&vec![1, 2, 4, 3]));
    assert!(paths.contains(&vec![1, 2, 3]));
    for p in &paths {
        assert!(is_tutte(&g, &Sub::from_path(p)).unwrap(), "{p:?}");
    }
}

#[test]
fn wheel_paths_without_bridges_take_the_hub() {
    let g = w5();
    let paths = oracle().enumerate_tutte_paths(&g, 1, 5, &[(2, 3), (3, 4)], &[]).unwrap();
    assert!(!paths.is_empty());
    for p in paths {
        if bridge_count(&g, &Sub::from_path(&p)).unwrap() == 0 {
            assert!(p.contains(&6), "{p:?}");
        }
    }
}

#[test]
fn wheel_two_edge_fixture() {
    let g = w5();
    let inst = Instance::TwoEdge { u: 1, v: 5, e: (3, 4), f: (1, 2) };
    let r = Engine::new().run(&g, &inst).unwrap();
    let o = oracle().verify_instance("w5", &g, &inst, Some((&r.path, &r.report))).unwrap();
    assert!(o.engine_path_valid && o.engine_bound_satisfied && o.report_agrees);
    assert_eq!(o.min_bridge_count, Some(0));
    assert!(o.valid_paths > 0);
}

#[test]
fn k4_cycle_witness_is_the_triangle() {
    let o = oracle().verify_cycle("k4", &k4(), [(1, 2), (2, 3), (3, 1)], None).unwrap();
    assert_eq!(o.witness.unwrap().len(), 3);
}

#[test]
fn corrupted_path_is_rejected() {
    let g = w5();
    let inst = Instance::SingleEdge { u: 1, v: 4, e: (1, 2) };
    let r = Engine::new().run(&g, &inst).unwrap();
    // 2-4 is not an edge of the wheel.
    let bad = vec![1, 2, 4];
    let o = oracle().verify_instance("bad", &g, &inst, Some((&bad, &r.report))).unwrap();
    assert!(!o.engine_path_valid);
    let (valid, _) = oracle().check_path(&g, &inst, &bad);
    assert!(!valid);
}

#[test]
fn cap_is_enforced() {
    let g = stacked(13, 1).unwrap();
    assert!(oracle().enumerate_tutte_paths(&g, 1, 2, &[], &[]).is_err());
    assert!(Oracle::new(13).enumerate_tutte_paths(&g, 1, 2, &[(1, 2)], &[]).is_ok());
}

/// All permutations of `items`.
fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Counts constrained C-Tutte paths by choosing the vertex set first and
/// then every order of its inner vertices.
fn count_by_subsets(g: &PlaneGraph, u: u32, v: u32, must_e: &[(u32, u32)], must_v: &[u32]) -> usize {
    let others: Vec<u32> = g.vertices().filter(|&x| x != u && x != v).collect();
    let c = g.cycle().unwrap();
    let mut count = 0;
    for mask in 0u32..1 << others.len() {
        let inner: Vec<u32> = (0..others.len()).filter(|i| mask >> i & 1 == 1).map(|i| others[i]).collect();
        if must_v.iter().any(|z| *z != u && *z != v && !inner.contains(z)) {
            continue;
        }
        for mid in permutations(&inner) {
            let mut p = vec![u];
            p.extend(mid);
            p.push(v);
            if !p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                continue;
            }
            let has = |(a, b): (u32, u32)| p.windows(2).any(|w| (w[0], w[1]) == (a, b) || (w[0], w[1]) == (b, a));
            if !must_e.iter().all(|&e| has(e)) {
                continue;
            }
            if is_c_tutte_path(g, &c, &p).unwrap() {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn enumeration_is_complete_on_small_graphs() {
    let graphs = [k4(), w5(), c6_chord(), fan6(), hidden_pair(), octahedron(), k4_stacked(), stacked(7, 4).unwrap()];
    for g in graphs {
        let walk = g.outer_walk().to_vec();
        let (u, v) = (walk[0], walk[walk.len() - 1]);
        let e = (walk[1], walk[2]);
        let cases = [(vec![], vec![]), (vec![e], vec![]), (vec![], vec![walk[1]])];
        for (me, mv) in &cases {
            let listed = oracle().enumerate_tutte_paths(&g, u, v, me, mv).unwrap();
            let distinct: BTreeSet<_> = listed.iter().cloned().collect();
            assert_eq!(distinct.len(), listed.len());
            assert_eq!(listed.len(), count_by_subsets(&g, u, v, me, mv), "{}", g.to_text());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tutte_predicates_agree(n in 4usize..11, seed in any::<u64>(), mask in any::<u64>()) {
        let g = random_circuit(n, seed).unwrap();
        let verts: BTreeSet<u32> = g.vertices().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| v).collect();
        let edges: Vec<(u32, u32)> =
            g.edges().into_iter().filter(|(a, b)| verts.contains(a) && verts.contains(b)).collect();
        let sub = Sub::from_parts(verts.iter().copied(), edges);
        prop_assert_eq!(oracle().is_tutte(&g, &verts), is_tutte(&g, &sub).unwrap());
    }
}

#[test]
fn tutte_predicates_agree_on_ten_thousand_pairs() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut pairs = 0;
    for _ in 0..100 {
        let g = random_circuit(rng.gen_range(4..13), rng.gen()).unwrap();
        let all: Vec<u32> = g.vertices().collect();
        for _ in 0..100 {
            let verts: BTreeSet<u32> = all.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
            let edges: Vec<(u32, u32)> =
                g.edges().into_iter().filter(|(a, b)| verts.contains(a) && verts.contains(b)).collect();
            let sub = Sub::from_parts(verts.iter().copied(), edges);
            assert_eq!(oracle().is_tutte(&g, &verts), is_tutte(&g, &sub).unwrap(), "{verts:?}\n{}", g.to_text());
            pairs += 1;
        }
    }
    assert_eq!(pairs, 10_000);
}
