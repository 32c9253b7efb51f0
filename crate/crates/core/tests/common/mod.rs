#![allow(dead_code)]

use tutte_core::toolkit::generate::{antiprism, prism, wheel};
use tutte_core::PlaneGraph;

pub fn faces(f: &[&[u32]]) -> PlaneGraph {
    let f: Vec<Vec<u32>> = f.iter().map(|x| x.to_vec()).collect();
    PlaneGraph::from_faces(&f, (f[0][0], f[0][1])).unwrap()
}

pub fn k3() -> PlaneGraph {
    faces(&[&[1, 2, 3], &[3, 2, 1]])
}

/// Outer triangle 1, 2, 3 around 4.
pub fn k4() -> PlaneGraph {
    faces(&[&[1, 2, 3], &[2, 1, 4], &[3, 2, 4], &[1, 3, 4]])
}

/// Rim 1..5 around hub 6.
pub fn w5() -> PlaneGraph {
    wheel(5).unwrap()
}

pub fn cycle(k: u32) -> PlaneGraph {
    let outer: Vec<u32> = (1..=k).collect();
    let inner: Vec<u32> = (1..=k).rev().collect();
    faces(&[&outer, &inner])
}

/// C6 with chord 2-5.
pub fn c6_chord() -> PlaneGraph {
    faces(&[&[1, 2, 3, 4, 5, 6], &[2, 1, 6, 5], &[5, 4, 3, 2]])
}

/// C8 with chord 3-6.
pub fn c8_chord() -> PlaneGraph {
    faces(&[&[1, 2, 3, 4, 5, 6, 7, 8], &[3, 2, 1, 8, 7, 6], &[6, 5, 4, 3]])
}

/// C8 with the nested chords 2-7 and 3-6.
pub fn c8_nested() -> PlaneGraph {
    faces(&[&[1, 2, 3, 4, 5, 6, 7, 8], &[2, 1, 8, 7], &[2, 7, 6, 3], &[3, 6, 5, 4]])
}

/// C6 with the fan of chords 1-3, 1-4, 1-5.
pub fn fan6() -> PlaneGraph {
    faces(&[&[1, 2, 3, 4, 5, 6], &[3, 2, 1], &[1, 4, 3], &[1, 5, 4], &[1, 6, 5]])
}

/// Square 1..4 with 5 and 6 inside, both joined to 1 and 2 and each other.
pub fn hidden_pair() -> PlaneGraph {
    faces(&[&[1, 2, 3, 4], &[2, 1, 5], &[5, 1, 6], &[2, 5, 6], &[1, 4, 3, 2, 6]])
}

/// K4 with the face 2, 1, 4 stacked by 5.
pub fn k4_stacked() -> PlaneGraph {
    faces(&[&[1, 2, 3], &[2, 1, 5], &[1, 4, 5], &[4, 2, 5], &[3, 2, 4], &[1, 3, 4]])
}

pub fn octahedron() -> PlaneGraph {
    antiprism(3).unwrap()
}

pub fn prism6() -> PlaneGraph {
    prism(3).unwrap()
}

pub fn square_antiprism() -> PlaneGraph {
    antiprism(4).unwrap()
}
