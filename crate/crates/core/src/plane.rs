//! Plane graphs stored as rotation systems.
//!
//! Each vertex lists its neighbors in clockwise order. A face walk follows
//! `a -> b -> c` where `c` is the clockwise successor of `a` around `b`.
//! Under this rule the walk of the infinite face reads clockwise in the
//! drawing, so the outer walk is stored exactly as declared.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::connectivity::Separation;
use crate::error::{Error, Result};

pub type Vid = u32;

/// A path as a vertex sequence.
pub type Path = Vec<Vid>;

/// Undirected edge key with the smaller endpoint first.
pub fn edge_key(a: Vid, b: Vid) -> (Vid, Vid) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    rot: BTreeMap<Vid, Vec<Vid>>,
    outer_dart: (Vid, Vid),
    faces: Vec<Vec<Vid>>,
    outer_face: usize,
}

impl PlaneGraph {
    /// Builds and validates a plane graph from clockwise rotations.
    /// The outer face is the face containing `outer_dart`.
    pub fn from_rotations(rot: BTreeMap<Vid, Vec<Vid>>, outer_dart: (Vid, Vid)) -> Result<Self> {
        if rot.is_empty() {
            return Err(Error::Embedding("empty graph".into()));
        }
        let mut darts = 0usize;
        for (&v, nbrs) in &rot {
            let mut seen = HashSet::new();
            for &w in nbrs {
                if w == v {
                    return Err(Error::Embedding(format!("loop at vertex {v}")));
                }
                if !seen.insert(w) {
                    return Err(Error::Embedding(format!("parallel edge {v}-{w}")));
                }
                match rot.get(&w) {
                    None => {
                        return Err(Error::Embedding(format!("vertex {v} lists neighbor {w}, which is not a vertex")))
                    }
                    Some(back) if !back.contains(&v) => {
                        return Err(Error::Embedding(format!("edge {v}-{w} is missing from the rotation of {w}")))
                    }
                    _ => {}
                }
            }
            darts += nbrs.len();
        }
        if darts == 0 {
            return Err(Error::Embedding("graph has no edges".into()));
        }
        let (a, b) = outer_dart;
        if !rot.get(&a).is_some_and(|n| n.contains(&b)) {
            return Err(Error::Embedding(format!("outer dart {a}-{b} is not an edge")));
        }
        if !is_connected(&rot) {
            return Err(Error::Embedding("graph is disconnected".into()));
        }

        let mut g = PlaneGraph { rot, outer_dart, faces: Vec::new(), outer_face: 0 };
        let mut visited: HashSet<(Vid, Vid)> = HashSet::with_capacity(darts);
        let mut faces = Vec::new();
        let mut outer_face = None;
        let starts: Vec<(Vid, Vid)> = std::iter::once(outer_dart)
            .chain(g.rot.iter().flat_map(|(&v, n)| n.iter().map(move |&w| (v, w))))
            .collect();
        for start in starts {
            if visited.contains(&start) {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                if !visited.insert(d) {
                    return Err(Error::Embedding("face traversal does not close".into()));
                }
                walk.push(d.0);
                d = (d.1, g.succ(d.1, d.0));
                if d == start {
                    break;
                }
            }
            if start == outer_dart {
                outer_face = Some(faces.len());
            }
            faces.push(walk);
        }
        let n = g.rot.len() as i64;
        let e = (darts / 2) as i64;
        let f = faces.len() as i64;
        if n - e + f != 2 {
            return Err(Error::Embedding(format!("Euler check failed: {n} - {e} + {f} != 2")));
        }
        g.faces = faces;
        g.outer_face = outer_face.expect("outer dart traced first");
        Ok(g)
    }

    /// Builds a plane graph from its face walks, all read under the same
    /// traversal rule. Every dart must appear in exactly one face.
    pub fn from_faces(faces: &[Vec<Vid>], outer_dart: (Vid, Vid)) -> Result<Self> {
        let mut succ: BTreeMap<Vid, BTreeMap<Vid, Vid>> = BTreeMap::new();
        for face in faces {
            let k = face.len();
            if k < 2 {
                return Err(Error::Embedding("face with fewer than two vertices".into()));
            }
            for i in 0..k {
                let a = face[i];
                let b = face[(i + 1) % k];
                let c = face[(i + 2) % k];
                if succ.entry(b).or_default().insert(a, c).is_some() {
                    return Err(Error::Embedding(format!("dart {a}-{b} appears twice")));
                }
            }
        }
        let mut rot = BTreeMap::new();
        for (v, map) in succ {
            let first = *map.keys().next().expect("nonempty");
            let mut order = vec![first];
            let mut cur = map[&first];
            while cur != first {
                if order.len() > map.len() {
                    return Err(Error::Embedding(format!("faces do not close around {v}")));
                }
                order.push(cur);
                cur = *map.get(&cur).ok_or_else(|| Error::Embedding(format!("faces do not close around {v}")))?;
            }
            if order.len() != map.len() {
                return Err(Error::Embedding(format!("vertex {v} is pinched")));
            }
            rot.insert(v, order);
        }
        Self::from_rotations(rot, outer_dart)
    }

    /// Parses the `planegraph v1` text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let perr = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };

        let (ln, header) = lines.next().ok_or_else(|| perr(0, "empty input"))?;
        if header.split_whitespace().collect::<Vec<_>>() != ["planegraph", "v1"] {
            return Err(perr(ln, "expected header `planegraph v1`"));
        }
        let (ln, count) = lines.next().ok_or_else(|| perr(ln, "missing vertex count"))?;
        let n: usize = match count.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["n", k] => k.parse().map_err(|_| perr(ln, "bad vertex count"))?,
            _ => return Err(perr(ln, "expected `n <N>`")),
        };
        let mut rot = BTreeMap::new();
        let mut last = ln;
        for _ in 0..n {
            let (ln, line) = lines.next().ok_or_else(|| perr(last, "missing rotation line"))?;
            last = ln;
            let (head, rest) = line.split_once(':').ok_or_else(|| perr(ln, "expected `<vid>: ...`"))?;
            let v: Vid = head.trim().parse().map_err(|_| perr(ln, "bad vertex id"))?;
            let nbrs = parse_ids(rest).ok_or_else(|| perr(ln, "bad neighbor id"))?;
            if rot.insert(v, nbrs).is_some() {
                return Err(perr(ln, "vertex listed twice"));
            }
        }
        let (ln, line) = lines.next().ok_or_else(|| perr(last, "missing outer line"))?;
        let rest = line.strip_prefix("outer:").ok_or_else(|| perr(ln, "expected `outer: ...`"))?;
        let outer = parse_ids(rest).ok_or_else(|| perr(ln, "bad outer vertex id"))?;
        if let Some((ln, _)) = lines.next() {
            return Err(perr(ln, "trailing content"));
        }
        if outer.len() < 2 {
            return Err(perr(ln, "outer walk needs at least two vertices"));
        }
        let g = Self::from_rotations(rot, (outer[0], outer[1]))?;
        if g.outer_walk() != outer.as_slice() {
            return Err(Error::Embedding("declared outer walk is not a face".into()));
        }
        Ok(g)
    }

    /// Serializes to the `planegraph v1` text format.
    pub fn to_text(&self) -> String {
        let mut s = String::from("planegraph v1\n");
        let _ = writeln!(s, "n {}", self.rot.len());
        for (v, nbrs) in &self.rot {
            let _ = writeln!(s, "{v}: {}", join_ids(nbrs));
        }
        let _ = writeln!(s, "outer: {}", join_ids(self.outer_walk()));
        s
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.values().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vid> + '_ {
        self.rot.keys().copied()
    }

    pub fn has_vertex(&self, v: Vid) -> bool {
        self.rot.contains_key(&v)
    }

    /// Clockwise neighbors of `v` (empty for unknown vertices).
    pub fn neighbors(&self, v: Vid) -> &[Vid] {
        self.rot.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn rotations(&self) -> &BTreeMap<Vid, Vec<Vid>> {
        &self.rot
    }

    pub fn has_edge(&self, a: Vid, b: Vid) -> bool {
        self.neighbors(a).contains(&b)
    }

    /// All edges as sorted keys.
    pub fn edges(&self) -> Vec<(Vid, Vid)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (&v, nbrs) in &self.rot {
            for &w in nbrs {
                if v < w {
                    out.push((v, w));
                }
            }
        }
        out
    }

    /// Neighbor sets, for algorithms that ignore the embedding.
    pub fn adjacency(&self) -> BTreeMap<Vid, BTreeSet<Vid>> {
        self.rot.iter().map(|(&v, n)| (v, n.iter().copied().collect())).collect()
    }

    /// Clockwise successor of `w` in the rotation at `v`.
    pub fn succ(&self, v: Vid, w: Vid) -> Vid {
        let r = &self.rot[&v];
        let i = r.iter().position(|&x| x == w).expect("neighbor in rotation");
        r[(i + 1) % r.len()]
    }

    /// Clockwise predecessor of `w` in the rotation at `v`.
    pub fn pred(&self, v: Vid, w: Vid) -> Vid {
        let r = &self.rot[&v];
        let i = r.iter().position(|&x| x == w).expect("neighbor in rotation");
        r[(i + r.len() - 1) % r.len()]
    }

    pub fn faces(&self) -> &[Vec<Vid>] {
        &self.faces
    }

    pub fn outer_dart(&self) -> (Vid, Vid) {
        self.outer_dart
    }

    pub fn outer_face_index(&self) -> usize {
        self.outer_face
    }

    /// The outer walk, starting with the outer dart.
    pub fn outer_walk(&self) -> &[Vid] {
        &self.faces[self.outer_face]
    }

    /// Index of the face containing dart `a -> b`.
    pub fn face_of_dart(&self, a: Vid, b: Vid) -> Option<usize> {
        self.faces.iter().position(|w| {
            let k = w.len();
            (0..k).any(|i| w[i] == a && w[(i + 1) % k] == b)
        })
    }

    /// The outer walk as a cycle; fails if it repeats a vertex.
    pub fn cycle(&self) -> Result<OuterCycle> {
        OuterCycle::new(self.outer_walk().to_vec())
    }

    /// Smallest positive id not used by this graph.
    pub fn fresh_id(&self) -> Vid {
        self.fresh_ids(1)[0]
    }

    /// The `k` smallest positive ids not used by this graph.
    pub fn fresh_ids(&self, k: usize) -> Vec<Vid> {
        (1..).filter(|v| !self.rot.contains_key(v)).take(k).collect()
    }

    /// Same rotations, different outer face.
    pub fn with_outer_dart(&self, dart: (Vid, Vid)) -> Result<Self> {
        Self::from_rotations(self.rot.clone(), dart)
    }

    /// Mirror image: every rotation reversed. The outer walk keeps its
    /// first vertex and is read in the opposite direction.
    pub fn mirrored(&self) -> Self {
        let rot = self.rot.iter().map(|(&v, n)| (v, n.iter().rev().copied().collect())).collect();
        let walk = self.outer_walk();
        let dart = (walk[0], walk[walk.len() - 1]);
        Self::from_rotations(rot, dart).expect("mirror of a valid embedding")
    }

    /// Components of the graph after deleting `removed`, each sorted,
    /// ordered by smallest vertex.
    pub fn components_avoiding(&self, removed: &BTreeSet<Vid>) -> Vec<BTreeSet<Vid>> {
        let mut seen: BTreeSet<Vid> = removed.clone();
        let mut comps = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([v]);
            seen.insert(v);
            while let Some(x) = queue.pop_front() {
                comp.insert(x);
                for &y in self.neighbors(x) {
                    if seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Subgraph induced by `keep`, with the restricted rotations.
    pub fn induced(&self, keep: &BTreeSet<Vid>, outer_dart: (Vid, Vid)) -> Result<Self> {
        let rot = self
            .rot
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, n)| (v, n.iter().copied().filter(|w| keep.contains(w)).collect()))
            .collect();
        Self::from_rotations(rot, outer_dart)
    }

    /// Inserts edge `ab` inside face `face`, splitting it in two. The face
    /// holding the current outer dart stays outer.
    pub fn add_edge_in_face(&self, a: Vid, b: Vid, face: usize) -> Result<Self> {
        if a == b {
            return Err(Error::SameVertex(a));
        }
        if self.has_edge(a, b) {
            return Err(Error::EdgeExists(a, b));
        }
        let walk = self.faces.get(face).ok_or(Error::NotOnFace(a, b))?;
        let i = walk.iter().position(|&x| x == a).ok_or(Error::NotOnFace(a, b))?;
        let j = walk.iter().position(|&x| x == b).ok_or(Error::NotOnFace(a, b))?;
        self.split_face(face, i.min(j), i.max(j), self.outer_dart)
    }

    /// Joins the walk positions `i < j` of face `face` by a new edge drawn
    /// inside that face. The new face holding `outer_dart` becomes outer.
    pub fn split_face(&self, face: usize, i: usize, j: usize, outer_dart: (Vid, Vid)) -> Result<Self> {
        let walk = &self.faces[face];
        let k = walk.len();
        assert!(i < j && j < k, "split positions out of order");
        let (wi, wj) = (walk[i], walk[j]);
        if wi == wj {
            return Err(Error::SameVertex(wi));
        }
        if self.has_edge(wi, wj) {
            return Err(Error::EdgeExists(wi, wj));
        }
        let before_i = walk[(i + k - 1) % k];
        let before_j = walk[j - 1];
        let mut rot = self.rot.clone();
        insert_after(rot.get_mut(&wi).expect("vertex"), before_i, wj);
        insert_after(rot.get_mut(&wj).expect("vertex"), before_j, wi);
        Self::from_rotations(rot, outer_dart)
    }

    /// Deletes edge `ab`. If the outer dart disappears, another dart of the
    /// old outer walk takes its place.
    pub fn remove_edge(&self, a: Vid, b: Vid) -> Result<Self> {
        if !self.has_edge(a, b) {
            return Err(Error::NotSubgraph(format!("edge {a}-{b} is absent")));
        }
        let mut rot = self.rot.clone();
        rot.get_mut(&a).expect("vertex").retain(|&x| x != b);
        rot.get_mut(&b).expect("vertex").retain(|&x| x != a);
        let mut dart = self.outer_dart;
        if edge_key(dart.0, dart.1) == edge_key(a, b) {
            let walk = self.outer_walk();
            let k = walk.len();
            dart = (0..k)
                .map(|i| (walk[i], walk[(i + 1) % k]))
                .find(|&(x, y)| edge_key(x, y) != edge_key(a, b))
                .ok_or_else(|| Error::Embedding("no outer dart survives".into()))?;
        }
        Self::from_rotations(rot, dart)
    }

    /// Replaces `discard` (vertices off the cut `{x, y}`) by a new vertex `t`
    /// adjacent to exactly `x` and `y`, placed where the discarded part was.
    /// The outer dart is taken from the part of the outer walk that survives.
    pub fn contract_with(&self, x: Vid, y: Vid, discard: &BTreeSet<Vid>, t: Vid) -> Result<Self> {
        if discard.is_empty() || discard.contains(&x) || discard.contains(&y) {
            return Err(Error::Precondition("contraction needs a nonempty side off the cut".into()));
        }
        if self.has_vertex(t) {
            return Err(Error::Precondition(format!("new vertex id {t} already used")));
        }
        let mut rot: BTreeMap<Vid, Vec<Vid>> =
            self.rot.iter().filter(|(v, _)| !discard.contains(v)).map(|(&v, n)| (v, n.clone())).collect();
        for c in [x, y] {
            let r = rot.get_mut(&c).expect("cut vertex");
            let len = r.len();
            let start = (0..len)
                .find(|&i| discard.contains(&r[i]) && !discard.contains(&r[(i + len - 1) % len]))
                .ok_or_else(|| Error::Precondition(format!("cut vertex {c} does not touch the side")))?;
            r[start] = t;
            r.retain(|w| !discard.contains(w));
        }
        for (&v, n) in rot.iter_mut() {
            if v != x && v != y {
                n.retain(|w| !discard.contains(w));
            }
        }
        rot.insert(t, vec![x, y]);
        let walk = self.outer_walk();
        let k = walk.len();
        let dart = (0..k)
            .map(|i| (walk[i], walk[(i + 1) % k]))
            .find(|(a, b)| !discard.contains(a) && !discard.contains(b))
            .ok_or_else(|| Error::Precondition("contraction removes the whole outer walk".into()))?;
        Self::from_rotations(rot, dart)
    }

    /// Contracts one side of a 2-separation, refusing when marked vertices
    /// or edges would disappear.
    pub fn contract_side(
        &self,
        sep: &Separation,
        side: Side,
        marked_vertices: &[Vid],
        marked_edges: &[(Vid, Vid)],
    ) -> Result<(Self, Vid)> {
        let discard: BTreeSet<Vid> = match side {
            Side::A => &sep.side_a,
            Side::B => &sep.side_b,
        }
        .iter()
        .copied()
        .filter(|&v| v != sep.cut.0 && v != sep.cut.1)
        .collect();
        for &v in marked_vertices {
            if discard.contains(&v) {
                return Err(Error::MarkedInSide(format!("vertex {v}")));
            }
        }
        for &(a, b) in marked_edges {
            if discard.contains(&a) || discard.contains(&b) {
                return Err(Error::MarkedInSide(format!("edge {a}-{b}")));
            }
        }
        let t = self.fresh_id();
        let g = self.contract_with(sep.cut.0, sep.cut.1, &discard, t)?;
        Ok((g, t))
    }

    /// For a 2-cut `{x, y}` on the outer cycle, the side containing the
    /// clockwise arc `xCy`, plus the edge `xy`. Its outer cycle is
    /// `xCy + yx`, starting at `x`.
    pub fn side_graph(&self, x: Vid, y: Vid) -> Result<Self> {
        let c = self.cycle()?;
        let arc = c.arc(x, y)?;
        if arc.len() < 3 {
            return Err(Error::Precondition(format!("arc {x}..{y} has no interior")));
        }
        let cut: BTreeSet<Vid> = [x, y].into();
        let comp = self
            .components_avoiding(&cut)
            .into_iter()
            .find(|k| k.contains(&arc[1]))
            .expect("arc vertex lies in some component");
        let other = c.arc(y, x)?;
        if arc[1..arc.len() - 1].iter().any(|v| !comp.contains(v))
            || other[1..other.len() - 1].iter().any(|v| comp.contains(v))
        {
            return Err(Error::Precondition(format!("{{{x}, {y}}} does not separate the arc {x}..{y}")));
        }
        let mut keep = comp;
        keep.insert(x);
        keep.insert(y);
        let dart = (x, arc[1]);
        let h = self.induced(&keep, dart)?;
        if h.has_edge(x, y) {
            if h.outer_walk() != arc.as_slice() {
                return Err(Error::Precondition(format!("edge {x}-{y} does not bound the side")));
            }
            return Ok(h);
        }
        let walk = h.outer_walk();
        let j = arc.len() - 1;
        if walk.len() <= j || walk[..=j] != arc[..] {
            return Err(Error::Precondition(format!("side of {{{x}, {y}}} has an unexpected boundary")));
        }
        h.split_face(h.outer_face, 0, j, dart)
    }
}

/// Which side of a separation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

fn insert_after(r: &mut Vec<Vid>, anchor: Vid, new: Vid) {
    let i = r.iter().position(|&x| x == anchor).expect("anchor in rotation");
    r.insert(i + 1, new);
}

fn is_connected(rot: &BTreeMap<Vid, Vec<Vid>>) -> bool {
    let start = *rot.keys().next().expect("nonempty");
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &rot[&v] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == rot.len()
}

fn parse_ids(s: &str) -> Option<Vec<Vid>> {
    s.split_whitespace().map(|t| t.parse().ok()).collect()
}

fn join_ids(ids: &[Vid]) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// The outer cycle, clockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterCycle {
    seq: Vec<Vid>,
    pos: HashMap<Vid, usize>,
}

impl OuterCycle {
    pub fn new(seq: Vec<Vid>) -> Result<Self> {
        let mut pos = HashMap::with_capacity(seq.len());
        for (i, &v) in seq.iter().enumerate() {
            if pos.insert(v, i).is_some() {
                return Err(Error::OuterNotCycle);
            }
        }
        Ok(OuterCycle { seq, pos })
    }

    pub fn vertices(&self) -> &[Vid] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn contains(&self, v: Vid) -> bool {
        self.pos.contains_key(&v)
    }

    pub fn pos(&self, v: Vid) -> Result<usize> {
        self.pos.get(&v).copied().ok_or(Error::NotOnOuter(v))
    }

    pub fn at(&self, i: usize) -> Vid {
        self.seq[i % self.seq.len()]
    }

    pub fn next(&self, v: Vid) -> Result<Vid> {
        Ok(self.at(self.pos(v)? + 1))
    }

    pub fn prev(&self, v: Vid) -> Result<Vid> {
        Ok(self.at(self.pos(v)? + self.len() - 1))
    }

    /// Clockwise steps from `a` to `b`.
    pub fn offset(&self, a: Vid, b: Vid) -> Result<usize> {
        let k = self.len();
        Ok((self.pos(b)? + k - self.pos(a)?) % k)
    }

    /// Clockwise vertices from `a` to `b`, both included.
    pub fn arc(&self, a: Vid, b: Vid) -> Result<Vec<Vid>> {
        let i = self.pos(a)?;
        let steps = self.offset(a, b)?;
        Ok((0..=steps).map(|s| self.at(i + s)).collect())
    }

    /// Orients an edge of the cycle clockwise.
    pub fn orient(&self, e: (Vid, Vid)) -> Result<(Vid, Vid)> {
        let (a, b) = e;
        match (self.pos.get(&a), self.pos.get(&b)) {
            (Some(_), Some(_)) if self.next(a)? == b => Ok((a, b)),
            (Some(_), Some(_)) if self.next(b)? == a => Ok((b, a)),
            _ => Err(Error::EdgeNotOnOuter(a, b)),
        }
    }

    pub fn is_edge(&self, a: Vid, b: Vid) -> bool {
        self.orient((a, b)).is_ok()
    }

    /// Cycle edges oriented clockwise, starting at the first vertex.
    pub fn edges(&self) -> Vec<(Vid, Vid)> {
        (0..self.len()).map(|i| (self.at(i), self.at(i + 1))).collect()
    }

    /// The clockwise subpath `xCy`.
    pub fn segment(&self, s: &Segment) -> Result<Path> {
        let start = match s.x {
            End::Vertex(v) => {
                self.pos(v)?;
                v
            }
            End::Edge(a, b) => self.orient((a, b))?.1,
        };
        let end = match s.y {
            End::Vertex(v) => {
                self.pos(v)?;
                v
            }
            End::Edge(a, b) => self.orient((a, b))?.0,
        };
        self.arc(start, end)
    }

    /// Whether `z` lies strictly inside the clockwise arc from `a` to `b`.
    pub fn strictly_between(&self, a: Vid, z: Vid, b: Vid) -> Result<bool> {
        let oz = self.offset(a, z)?;
        Ok(oz > 0 && oz < self.offset(a, b)?)
    }
}

/// One end of a segment: a vertex or an edge of the outer cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum End {
    Vertex(Vid),
    Edge(Vid, Vid),
}

impl End {
    pub fn is_edge(&self) -> bool {
        matches!(self, End::Edge(..))
    }

    fn touches(&self, v: Vid) -> bool {
        match *self {
            End::Vertex(w) => w == v,
            End::Edge(a, b) => a == v || b == v,
        }
    }

    /// Incidence between two segment ends.
    pub fn incident(&self, other: &End) -> bool {
        match *self {
            End::Vertex(v) => other.touches(v),
            End::Edge(a, b) => other.touches(a) || other.touches(b),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub x: End,
    pub y: End,
}

impl Segment {
    pub fn new(x: End, y: End) -> Self {
        Segment { x, y }
    }
}

/// The clockwise subpath `xCy` of `c`.
pub fn clockwise_segment(c: &OuterCycle, s: &Segment) -> Result<Path> {
    c.segment(s)
}

/// Checks that `p` is a simple path of `g`.
pub fn check_path(g: &PlaneGraph, p: &[Vid]) -> Result<()> {
    if p.is_empty() {
        return Err(Error::NotSubgraph("empty path".into()));
    }
    let mut seen = HashSet::new();
    for &v in p {
        if !g.has_vertex(v) {
            return Err(Error::NotSubgraph(format!("vertex {v} is not in the graph")));
        }
        if !seen.insert(v) {
            return Err(Error::NotSubgraph(format!("vertex {v} repeats")));
        }
    }
    for w in p.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Error::NotSubgraph(format!("{}-{} is not an edge", w[0], w[1])));
        }
    }
    Ok(())
}

/// Whether `p` traverses edge `e` (either direction).
pub fn path_has_edge(p: &[Vid], e: (Vid, Vid)) -> bool {
    p.windows(2).any(|w| edge_key(w[0], w[1]) == edge_key(e.0, e.1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> PlaneGraph {
        PlaneGraph::parse("planegraph v1\nn 3\n1: 2 3\n2: 3 1\n3: 1 2\nouter: 1 2 3\n").unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = triangle();
        assert_eq!(g.faces().len(), 2);
        assert_eq!(g.outer_walk(), &[1, 2, 3]);
    }

    #[test]
    fn unknown_neighbor_is_rejected() {
        let text = "planegraph v1\nn 3\n1: 2 5\n2: 1\n3: 1\nouter: 1 2\n";
        assert!(matches!(PlaneGraph::parse(text), Err(Error::Embedding(_))));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# a triangle\nplanegraph v1\n\nn 3\n1: 2 3\n# middle\n2: 3 1\n3: 1 2\nouter: 1 2 3\n";
        assert_eq!(PlaneGraph::parse(text).unwrap(), triangle());
    }

    #[test]
    fn wrong_outer_walk_is_rejected() {
        let text = "planegraph v1\nn 3\n1: 2 3\n2: 3 1\n3: 1 2\nouter: 1 2\n";
        assert!(PlaneGraph::parse(text).is_err());
    }

    #[test]
    fn arcs_wrap_around() {
        let c = OuterCycle::new(vec![1, 2, 3, 4, 5]).unwrap();
        assert_eq!(c.arc(4, 2).unwrap(), vec![4, 5, 1, 2]);
        assert_eq!(c.arc(3, 3).unwrap(), vec![3]);
        assert_eq!(c.orient((2, 1)).unwrap(), (1, 2));
        assert_eq!(c.orient((5, 1)).unwrap(), (5, 1));
        assert!(c.orient((1, 3)).is_err());
    }

    #[test]
    fn incident_ends() {
        assert!(End::Vertex(1).incident(&End::Edge(1, 2)));
        assert!(End::Edge(2, 3).incident(&End::Edge(3, 4)));
        assert!(!End::Edge(1, 2).incident(&End::Vertex(3)));
    }
}
