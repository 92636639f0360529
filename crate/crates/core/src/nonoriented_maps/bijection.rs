use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use super::counting::{enumerate_nonoriented_labeled, progressive_condition, OrderedMap};
use super::ribbon::{black_end, edge_of, normalize_rotation, white_end, Color, RibbonGraph, Vertex};
use super::RibbonError;
use crate::oriented_maps::{check_size, enumerate_labeled, OrientedBicolMap};

/// Largest edge count for which the correspondence is constructed.
pub const MAX_BIJECTION_EDGES: usize = 3;

/// One rooted pair on each side. Edge labels are the positions in the
/// order, so the order itself is `1 < 2 < .. < n` on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionEntry {
    pub root: usize,
    pub s1: RibbonGraph,
    pub s2: OrientedBicolMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub s1_size: usize,
    pub s2_size: usize,
    pub injective: bool,
    pub surjective: bool,
    pub preserves_graph: bool,
    /// Admissible attachments seen when the new edge joins two components.
    pub bridge_choices: BTreeSet<usize>,
    /// Admissible attachments seen when it closes a cycle.
    pub cycle_choices: BTreeSet<usize>,
    pub entries: Vec<BijectionEntry>,
}

fn edges_up_to(k: usize) -> Vec<usize> {
    (1..=k).collect()
}

fn joins_components(before: &RibbonGraph, w: usize, b: usize) -> bool {
    let (_, comp) = before.component_labels();
    comp[w] != comp[b]
}

/// Edges that join two components when edges are added in the order
/// `n, n−1, .., 1`; they form a spanning tree.
fn insertion_tree(r: &RibbonGraph, n: usize) -> Vec<usize> {
    (1..=n)
        .filter(|&k| {
            let before = r.delete_edges(&edges_up_to(k));
            let (w, b) = r.endpoints(k).expect("edge present");
            joins_components(&before, w, b)
        })
        .collect()
}

/// The representatives of a one-face class whose insertion-tree edges are
/// untwisted; there are two (mutual reversals) unless every vertex has
/// degree at most two.
fn tree_gauged_representatives(class: &RibbonGraph, n: usize) -> Vec<RibbonGraph> {
    let tree = insertion_tree(class, n);
    let mut flips = vec![false; class.vertices().len()];
    let mut visited = vec![false; class.vertices().len()];
    let root = class.endpoints(1).expect("edge 1 present").0;
    visited[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &e in &tree {
            let (w, b) = class.endpoints(e).unwrap();
            let u = if w == v { b } else if b == v { w } else { continue };
            if !visited[u] {
                visited[u] = true;
                flips[u] = class.twist(e).unwrap() ^ flips[v];
                queue.push_back(u);
            }
        }
    }
    let first = normalized(&class.apply_flips(&flips));
    let second = normalized(&first.apply_flips(&vec![true; flips.len()]));
    if first == second {
        vec![first]
    } else {
        vec![first, second]
    }
}

fn normalized(r: &RibbonGraph) -> RibbonGraph {
    let vertices = r
        .vertices()
        .iter()
        .map(|v| Vertex { color: v.color, rotation: normalize_rotation(&v.rotation) })
        .collect();
    RibbonGraph::new(vertices, r.twists().clone()).expect("normalization keeps validity")
}

fn set_twist(r: &RibbonGraph, e: usize, t: bool) -> RibbonGraph {
    if r.twist(e) == Some(t) {
        r.clone()
    } else {
        r.twist_edge(e).expect("edge present")
    }
}

/// Index, in the reading of the rotation that starts at its smallest
/// half-edge, of the half-edge preceding `x` once `x` is removed.
fn corner_index(rotation: &[usize], x: usize) -> usize {
    let pos = rotation.iter().position(|&h| h == x).expect("half-edge present");
    let rest: Vec<usize> = rotation.iter().copied().filter(|&h| h != x).collect();
    if rest.is_empty() {
        return 0;
    }
    let pred = rotation[(pos + rotation.len() - 1) % rotation.len()];
    normalize_rotation(&rest).iter().position(|&h| h == pred).unwrap()
}

fn insert_at_corner(rotation: &[usize], j: usize, x: usize) -> Vec<usize> {
    let mut reading = normalize_rotation(rotation);
    if reading.is_empty() {
        return vec![x];
    }
    reading.insert(j + 1, x);
    normalize_rotation(&reading)
}

struct Step {
    bridge: bool,
    choices: usize,
}

/// Rebuilds `rep` from isolated vertices by adding edges `n, .., 1` and, in
/// lockstep, an oriented map by inserting each new edge at the same corner
/// indices. At every step the admissible twists are listed on both sides
/// (all components one-faced, resp. orientable) and matched by position.
fn transport(rep: &RibbonGraph, n: usize) -> Result<(OrientedBicolMap, Vec<Step>), RibbonError> {
    let mut oriented = RibbonGraph::new(
        rep.vertices().iter().map(|v| Vertex { color: v.color, rotation: Vec::new() }).collect(),
        BTreeMap::new(),
    )?;
    let mut steps = Vec::new();
    for k in (1..=n).rev() {
        let before = rep.delete_edges(&edges_up_to(k));
        let after = rep.delete_edges(&edges_up_to(k - 1));
        let (w, b) = after.endpoints(k).expect("edge present");
        let bridge = joins_components(&before, w, b);
        let s1: Vec<bool> = [false, true]
            .into_iter()
            .filter(|&t| {
                let c = set_twist(&after, k, t);
                c.components() == c.trace_faces()
            })
            .collect();

        let jw = corner_index(&after.vertices()[w].rotation, white_end(k));
        let jb = corner_index(&after.vertices()[b].rotation, black_end(k));
        let mut vertices = oriented.vertices().to_vec();
        vertices[w].rotation = insert_at_corner(&vertices[w].rotation, jw, white_end(k));
        vertices[b].rotation = insert_at_corner(&vertices[b].rotation, jb, black_end(k));
        let candidate = |t: bool| {
            let mut twists = oriented.twists().clone();
            twists.insert(k, t);
            RibbonGraph::new(vertices.clone(), twists).expect("insertion keeps validity")
        };
        let s2: Vec<bool> = [false, true].into_iter().filter(|&t| candidate(t).is_orientable()).collect();

        let ambiguous = || RibbonError::AmbiguousChoice {
            edge: k,
            s1: rep.to_string(),
            s1_choices: s1.len(),
            s2_choices: s2.len(),
        };
        if s1.len() != s2.len() || !(1..=2).contains(&s1.len()) {
            return Err(ambiguous());
        }
        let index = s1.iter().position(|&t| Some(t) == rep.twist(k)).ok_or_else(ambiguous)?;
        oriented = candidate(s2[index]);
        steps.push(Step { bridge, choices: s1.len() });
    }
    if oriented.twists().values().any(|&t| t) {
        return Err(RibbonError::Malformed(format!("oriented image of {rep} kept a twist")));
    }
    Ok((rotations_to_pair(&oriented, n), steps))
}

fn rotations_to_pair(r: &RibbonGraph, n: usize) -> OrientedBicolMap {
    let mut sigma = vec![0; n];
    let mut tau = vec![0; n];
    for v in r.vertices() {
        let perm = if v.color == Color::White { &mut sigma } else { &mut tau };
        for (i, &h) in v.rotation.iter().enumerate() {
            let next = v.rotation[(i + 1) % v.rotation.len()];
            perm[edge_of(h) - 1] = edge_of(next) - 1;
        }
    }
    OrientedBicolMap::new(sigma, tau).expect("connected rotation system")
}

/// Builds the correspondence between rooted one-face non-oriented maps with
/// an admissible order and rooted oriented maps with an arbitrary order.
pub fn build_bijection(n: usize) -> Result<BijectionReport, RibbonError> {
    check_size(n, MAX_BIJECTION_EDGES)?;
    let natural: Vec<usize> = (1..=n).collect();
    let classes: Vec<RibbonGraph> = enumerate_nonoriented_labeled(n)?
        .into_iter()
        .filter(|r| r.trace_faces() == 1)
        .filter(|r| progressive_condition(&OrderedMap { map: r.clone(), order: natural.clone() }))
        .collect();
    let transported: Vec<(RibbonGraph, OrientedBicolMap, Vec<Step>)> = classes
        .par_iter()
        .flat_map_iter(|c| tree_gauged_representatives(c, n))
        .map(|rep| transport(&rep, n).map(|(pair, steps)| (rep, pair, steps)))
        .collect::<Result<_, _>>()?;

    let mut entries = Vec::new();
    let mut bridge_choices = BTreeSet::new();
    let mut cycle_choices = BTreeSet::new();
    let mut preserves_graph = true;
    for (rep, pair, steps) in transported {
        for s in &steps {
            if s.bridge {
                bridge_choices.insert(s.choices);
            } else {
                cycle_choices.insert(s.choices);
            }
        }
        preserves_graph &= RibbonGraph::from_oriented(&pair).underlying_graph() == rep.underlying_graph();
        for root in 1..=n {
            entries.push(BijectionEntry { root, s1: rep.clone(), s2: pair.clone() });
        }
    }
    let images: BTreeSet<(usize, &OrientedBicolMap)> = entries.iter().map(|e| (e.root, &e.s2)).collect();
    let labeled = enumerate_labeled(n)?;
    let s2_size = n * labeled.len();
    let surjective = images.len() == s2_size
        && labeled.iter().all(|m| (1..=n).all(|root| images.contains(&(root, m))));
    Ok(BijectionReport {
        n,
        s1_size: entries.len(),
        s2_size,
        injective: images.len() == entries.len(),
        surjective,
        preserves_graph,
        bridge_choices,
        cycle_choices,
        entries,
    })
}
