use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::RibbonError;
use crate::oriented_maps::{cycles, OrientedBicolMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "w")]
    White,
    #[serde(rename = "b")]
    Black,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub color: Color,
    pub rotation: Vec<usize>,
}

/// Half-edge `h` belongs to the edge labeled `h / 2 + 1`; the even half-edge
/// is the white end.
pub fn edge_of(h: usize) -> usize {
    h / 2 + 1
}

pub(crate) fn white_end(label: usize) -> usize {
    2 * (label - 1)
}

pub(crate) fn black_end(label: usize) -> usize {
    2 * (label - 1) + 1
}

fn other_end(h: usize) -> usize {
    h ^ 1
}

/// Bicolored ribbon graph: cyclic rotations of half-edges at each vertex
/// together with a twist bit per edge. Edge labels need not be contiguous,
/// so that deleting edges keeps the labels of the remaining ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RibbonRecord", into = "RibbonRecord")]
pub struct RibbonGraph {
    vertices: Vec<Vertex>,
    twists: BTreeMap<usize, bool>,
}

#[derive(Serialize, Deserialize)]
struct RibbonRecord {
    n: usize,
    vertices: Vec<Vertex>,
    edges: BTreeMap<usize, [usize; 2]>,
    twists: BTreeMap<usize, u8>,
}

impl From<RibbonGraph> for RibbonRecord {
    fn from(r: RibbonGraph) -> Self {
        RibbonRecord {
            n: r.n(),
            edges: r.twists.keys().map(|&e| (e, [white_end(e), black_end(e)])).collect(),
            twists: r.twists.iter().map(|(&e, &t)| (e, t as u8)).collect(),
            vertices: r.vertices,
        }
    }
}

impl TryFrom<RibbonRecord> for RibbonGraph {
    type Error = RibbonError;
    fn try_from(rec: RibbonRecord) -> Result<Self, RibbonError> {
        if rec.edges.len() != rec.n || rec.twists.len() != rec.n {
            return Err(RibbonError::Malformed(format!("expected {} edges and twists", rec.n)));
        }
        for (&e, ends) in &rec.edges {
            if e == 0 || *ends != [white_end(e), black_end(e)] || !rec.twists.contains_key(&e) {
                return Err(RibbonError::Malformed(format!("edge {e} has half-edges {ends:?}")));
            }
        }
        let twists = rec.twists.into_iter().map(|(e, t)| (e, t != 0)).collect();
        RibbonGraph::new(rec.vertices, twists)
    }
}

impl RibbonGraph {
    pub fn new(vertices: Vec<Vertex>, twists: BTreeMap<usize, bool>) -> Result<Self, RibbonError> {
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        for v in &vertices {
            for &h in &v.rotation {
                let expected = if h % 2 == 0 { Color::White } else { Color::Black };
                if v.color != expected {
                    return Err(RibbonError::Malformed(format!("half-edge {h} at a {:?} vertex", v.color)));
                }
                *seen.entry(h).or_insert(0) += 1;
            }
        }
        for &e in twists.keys() {
            for h in [white_end(e), black_end(e)] {
                if seen.remove(&h) != Some(1) {
                    return Err(RibbonError::Malformed(format!("half-edge {h} must appear exactly once")));
                }
            }
        }
        if let Some((&h, _)) = seen.iter().next() {
            return Err(RibbonError::Malformed(format!("half-edge {h} belongs to no edge")));
        }
        Ok(RibbonGraph { vertices, twists })
    }

    /// Untwisted ribbon graph of an oriented map: the rotation at a white
    /// vertex follows `σ`, at a black vertex it follows `τ`.
    pub fn from_oriented(m: &OrientedBicolMap) -> Self {
        let mut vertices = Vec::new();
        for c in cycles(m.sigma()) {
            vertices.push(Vertex { color: Color::White, rotation: c.iter().map(|&e| white_end(e + 1)).collect() });
        }
        for c in cycles(m.tau()) {
            vertices.push(Vertex { color: Color::Black, rotation: c.iter().map(|&e| black_end(e + 1)).collect() });
        }
        let twists = (1..=m.n()).map(|e| (e, false)).collect();
        RibbonGraph { vertices, twists }
    }

    pub fn n(&self) -> usize {
        self.twists.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        self.twists.keys().copied()
    }

    pub fn twist(&self, label: usize) -> Option<bool> {
        self.twists.get(&label).copied()
    }

    pub fn twists(&self) -> &BTreeMap<usize, bool> {
        &self.twists
    }

    fn half_edge_limit(&self) -> usize {
        self.twists.keys().next_back().map_or(0, |&e| 2 * e)
    }

    /// `vertex[h]` and `position[h]` of each half-edge.
    fn locate(&self) -> (Vec<usize>, Vec<usize>) {
        let size = self.half_edge_limit();
        let mut vertex = vec![usize::MAX; size];
        let mut position = vec![usize::MAX; size];
        for (v, vert) in self.vertices.iter().enumerate() {
            for (i, &h) in vert.rotation.iter().enumerate() {
                vertex[h] = v;
                position[h] = i;
            }
        }
        (vertex, position)
    }

    /// White/black endpoints of an edge, as vertex indices.
    pub fn endpoints(&self, label: usize) -> Option<(usize, usize)> {
        self.twists.get(&label)?;
        let (vertex, _) = self.locate();
        Some((vertex[white_end(label)], vertex[black_end(label)]))
    }

    /// Number of boundary walks. Flags are pairs (half-edge, side); a walk
    /// alternates between moving around a corner of a vertex and running
    /// along an edge, switching sides on untwisted edges. Isolated vertices
    /// bound one face each.
    pub fn trace_faces(&self) -> usize {
        let (vertex, position) = self.locate();
        let size = self.half_edge_limit();
        let flag = |h: usize, s: usize| 2 * h + s;
        let corner = |h: usize, s: usize| -> (usize, usize) {
            let rot = &self.vertices[vertex[h]].rotation;
            let i = position[h];
            if s == 1 {
                (rot[(i + 1) % rot.len()], 0)
            } else {
                (rot[(i + rot.len() - 1) % rot.len()], 1)
            }
        };
        let along = |h: usize, s: usize| -> (usize, usize) {
            let twisted = self.twists[&edge_of(h)];
            (other_end(h), if twisted { s } else { 1 - s })
        };
        let mut seen = vec![false; 2 * size];
        let mut faces = 0;
        for h in (0..size).filter(|&h| vertex[h] != usize::MAX) {
            for s in 0..2 {
                if seen[flag(h, s)] {
                    continue;
                }
                faces += 1;
                let (mut ch, mut cs) = (h, s);
                loop {
                    seen[flag(ch, cs)] = true;
                    let (h2, s2) = corner(ch, cs);
                    seen[flag(h2, s2)] = true;
                    let (h3, s3) = along(h2, s2);
                    if seen[flag(h3, s3)] {
                        break;
                    }
                    (ch, cs) = (h3, s3);
                }
            }
        }
        faces + self.vertices.iter().filter(|v| v.rotation.is_empty()).count()
    }

    /// Component index of every vertex, numbered in order of first vertex.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let (vertex, _) = self.locate();
        let mut comp = vec![usize::MAX; self.vertices.len()];
        let mut count = 0;
        for start in 0..self.vertices.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &h in &self.vertices[v].rotation {
                    let u = vertex[other_end(h)];
                    if comp[u] == usize::MAX {
                        comp[u] = count;
                        stack.push(u);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn components(&self) -> usize {
        self.component_labels().0
    }

    /// Reverses the rotation at `v` and toggles the twists of its edges.
    pub fn flip(&self, v: usize) -> RibbonGraph {
        let mut out = self.clone();
        out.vertices[v].rotation.reverse();
        for &h in &self.vertices[v].rotation {
            let t = out.twists.get_mut(&edge_of(h)).unwrap();
            *t = !*t;
        }
        out
    }

    pub fn apply_flips(&self, flips: &[bool]) -> RibbonGraph {
        let mut out = self.clone();
        for (v, _) in flips.iter().enumerate().filter(|(_, &f)| f) {
            out.vertices[v].rotation.reverse();
        }
        let (vertex, _) = self.locate();
        for (&e, t) in out.twists.iter_mut() {
            *t ^= flips[vertex[white_end(e)]] ^ flips[vertex[black_end(e)]];
        }
        out
    }

    pub fn twist_edge(&self, label: usize) -> Result<RibbonGraph, RibbonError> {
        let mut out = self.clone();
        let t = out.twists.get_mut(&label).ok_or(RibbonError::UnknownEdge(label))?;
        *t = !*t;
        Ok(out)
    }

    /// Removes the given edges; their endpoints stay as vertices.
    pub fn delete_edges(&self, labels: &[usize]) -> RibbonGraph {
        let mut out = self.clone();
        for v in &mut out.vertices {
            v.rotation.retain(|&h| !labels.contains(&edge_of(h)));
        }
        for e in labels {
            out.twists.remove(e);
        }
        out
    }

    /// Whether some set of flips removes every twist.
    pub fn is_orientable(&self) -> bool {
        let flips = self.spanning_flips();
        let g = self.apply_flips(&flips);
        g.twists.values().all(|&t| !t)
    }

    /// Flips making the edges of a breadth-first spanning forest untwisted.
    /// Each component is rooted at its vertex holding the smallest
    /// half-edge; edges are explored in label order.
    fn spanning_flips(&self) -> Vec<bool> {
        let (vertex, _) = self.locate();
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by_key(|&v| (self.vertices[v].rotation.iter().min().copied().unwrap_or(usize::MAX), v));
        let mut flips = vec![false; self.vertices.len()];
        let mut visited = vec![false; self.vertices.len()];
        for &root in &order {
            if visited[root] {
                continue;
            }
            visited[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let mut incident: Vec<usize> = self.vertices[v].rotation.clone();
                incident.sort_unstable();
                for h in incident {
                    let u = vertex[other_end(h)];
                    if !visited[u] {
                        visited[u] = true;
                        flips[u] = self.twists[&edge_of(h)] ^ flips[v];
                        queue.push_back(u);
                    }
                }
            }
        }
        flips
    }

    /// Flips taking this graph to its canonical representative: the
    /// spanning-forest gauge, then per component the global flip choice
    /// whose normalized rotations are lexicographically smaller.
    pub fn gauge_flips(&self) -> Vec<bool> {
        let mut flips = self.spanning_flips();
        let gauged = self.apply_flips(&flips);
        let (count, comp) = self.component_labels();
        for c in 0..count {
            let members: Vec<usize> = (0..self.vertices.len()).filter(|&v| comp[v] == c).collect();
            let keep: Vec<Vec<usize>> =
                members.iter().map(|&v| normalize_rotation(&gauged.vertices[v].rotation)).collect();
            let flipped: Vec<Vec<usize>> = members
                .iter()
                .map(|&v| {
                    let mut r = gauged.vertices[v].rotation.clone();
                    r.reverse();
                    normalize_rotation(&r)
                })
                .collect();
            if flipped < keep {
                for &v in &members {
                    flips[v] = !flips[v];
                }
            }
        }
        flips
    }

    /// Canonical representative of the flip class: gauge-fixed twists,
    /// rotations starting at their smallest half-edge, vertices sorted.
    pub fn canonical(&self) -> RibbonGraph {
        let mut g = self.apply_flips(&self.gauge_flips());
        for v in &mut g.vertices {
            v.rotation = normalize_rotation(&v.rotation);
        }
        g.vertices.sort_by(|a, b| {
            let key = |v: &Vertex| (v.rotation.first().copied().unwrap_or(usize::MAX), v.color);
            key(a).cmp(&key(b))
        });
        g
    }

    /// Normalized rotations sorted by vertex, ignoring twists.
    pub fn canonical_rotations(&self) -> Vec<(Color, Vec<usize>)> {
        let mut out: Vec<(Color, Vec<usize>)> =
            self.vertices.iter().map(|v| (v.color, normalize_rotation(&v.rotation))).collect();
        out.sort();
        out
    }

    /// Vertex degrees and edge sets, i.e. the underlying bicolored graph.
    pub fn underlying_graph(&self) -> Vec<(Color, Vec<usize>)> {
        let mut out: Vec<(Color, Vec<usize>)> = self
            .vertices
            .iter()
            .map(|v| {
                let mut edges: Vec<usize> = v.rotation.iter().map(|&h| edge_of(h)).collect();
                edges.sort_unstable();
                (v.color, edges)
            })
            .collect();
        out.sort();
        out
    }
}

/// Rotates a cyclic sequence to start at its smallest element.
pub fn normalize_rotation(rot: &[usize]) -> Vec<usize> {
    match rot.iter().enumerate().min_by_key(|(_, &h)| h) {
        Some((i, _)) => rot[i..].iter().chain(&rot[..i]).copied().collect(),
        None => Vec::new(),
    }
}

pub fn flip_equivalent(a: &RibbonGraph, b: &RibbonGraph) -> bool {
    a.canonical() == b.canonical()
}

impl fmt::Display for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let c = if v.color == Color::White { 'w' } else { 'b' };
            let rot: Vec<String> = v.rotation.iter().map(|h| h.to_string()).collect();
            write!(f, "{c}({})", rot.join(" "))?;
        }
        let twisted: Vec<String> =
            self.twists.iter().filter(|(_, &t)| t).map(|(e, _)| e.to_string()).collect();
        if !twisted.is_empty() {
            write!(f, " twisted[{}]", twisted.join(","))?;
        }
        Ok(())
    }
}
