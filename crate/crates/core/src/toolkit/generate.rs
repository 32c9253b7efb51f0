//! Seeded instance families, built face by face.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::connectivity::is_circuit_graph;
use crate::error::{Error, Result};
use crate::plane::{PlaneGraph, Vid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Stacked,
    Wheel,
    Prism,
    Antiprism,
    Octahedron,
    RandomCircuit,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Stacked, Family::Wheel, Family::Prism, Family::Antiprism, Family::Octahedron, Family::RandomCircuit];

    pub fn name(self) -> &'static str {
        match self {
            Family::Stacked => "stacked",
            Family::Wheel => "wheel",
            Family::Prism => "prism",
            Family::Antiprism => "antiprism",
            Family::Octahedron => "octahedron",
            Family::RandomCircuit => "random_circuit",
        }
    }

    /// Whether `n` is a valid size for the family.
    pub fn admits(self, n: usize) -> bool {
        match self {
            Family::Stacked | Family::RandomCircuit => n >= 3,
            Family::Wheel => n >= 4,
            Family::Prism | Family::Antiprism => n >= 6 && n.is_multiple_of(2),
            Family::Octahedron => n == 6,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s || f.name().replace('_', "-") == s)
            .ok_or_else(|| Error::Precondition(format!("unknown family `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
}

pub fn generate(spec: &GeneratorSpec) -> Result<PlaneGraph> {
    let GeneratorSpec { family, n, seed } = *spec;
    if !family.admits(n) {
        return Err(Error::Precondition(format!("{family} does not come with {n} vertices")));
    }
    match family {
        Family::Stacked => stacked(n, seed),
        Family::Wheel => wheel(n - 1),
        Family::Prism => prism(n / 2),
        Family::Antiprism | Family::Octahedron => antiprism(n / 2),
        Family::RandomCircuit => random_circuit(n, seed),
    }
}

/// Hub `k+1` inside the rim `1..k`.
pub fn wheel(k: usize) -> Result<PlaneGraph> {
    let k = k as Vid;
    let hub = k + 1;
    let mut faces = vec![(1..=k).collect::<Vec<_>>()];
    for i in 1..=k {
        faces.push(vec![i, hub, i % k + 1]);
    }
    PlaneGraph::from_faces(&faces, (1, 2))
}

/// Rings `1..k` and `k+1..2k` joined by rungs; the outer face is the
/// square on `1, 2, k+2, k+1`.
pub fn prism(k: usize) -> Result<PlaneGraph> {
    let k = k as Vid;
    let next = |i: Vid| i % k + 1;
    let mut faces = vec![(1..=k).rev().collect::<Vec<_>>(), (k + 1..=2 * k).collect()];
    for i in 1..=k {
        faces.push(vec![i, next(i), k + next(i), k + i]);
    }
    PlaneGraph::from_faces(&faces, (1, 2))
}

/// Rings `1..k` (outer) and `k+1..2k` joined by a band of triangles.
pub fn antiprism(k: usize) -> Result<PlaneGraph> {
    let k = k as Vid;
    let next = |i: Vid| i % k + 1;
    let mut faces = vec![(1..=k).collect::<Vec<_>>(), (k + 1..=2 * k).rev().collect()];
    for i in 1..=k {
        faces.push(vec![k + next(i), next(i), i]);
        faces.push(vec![k + i, k + next(i), i]);
    }
    PlaneGraph::from_faces(&faces, (1, 2))
}

/// Start from the triangle `1, 2, 3` and repeatedly put a new vertex into
/// a random inner face, joined to its three corners.
pub fn stacked(n: usize, seed: u64) -> Result<PlaneGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inner: Vec<[Vid; 3]> = vec![[1, 3, 2]];
    for w in 4..=n as Vid {
        let i = rng.gen_range(0..inner.len());
        let [a, b, c] = inner.swap_remove(i);
        inner.extend([[a, b, w], [b, c, w], [c, a, w]]);
    }
    let mut faces = vec![vec![1, 2, 3]];
    faces.extend(inner.iter().map(|f| f.to_vec()));
    PlaneGraph::from_faces(&faces, (1, 2))
}

/// A stacked triangulation with seeded edge deletions, each kept only if
/// the result is still a circuit graph.
pub fn random_circuit(n: usize, seed: u64) -> Result<PlaneGraph> {
    let mut g = stacked(n, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut edges = g.edges();
    edges.shuffle(&mut rng);
    let target = rng.gen_range(0..=edges.len() / 2);
    let mut removed = 0;
    for (a, b) in edges {
        if removed == target {
            break;
        }
        if let Ok(h) = g.remove_edge(a, b) {
            if is_circuit_graph(&h) {
                g = h;
                removed += 1;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prism_outer_face_is_a_square() {
        assert_eq!(prism(3).unwrap().outer_walk(), &[1, 2, 5, 4]);
    }

    #[test]
    fn same_seed_same_graph() {
        assert_eq!(stacked(12, 7).unwrap(), stacked(12, 7).unwrap());
        assert_eq!(random_circuit(9, 3).unwrap().to_text(), random_circuit(9, 3).unwrap().to_text());
    }

    #[test]
    fn odd_antiprism_is_rejected() {
        let spec = GeneratorSpec { family: Family::Antiprism, n: 7, seed: 0 };
        assert!(generate(&spec).is_err());
    }
}
