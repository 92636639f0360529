use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::ribbon::RibbonGraph;
use super::RibbonError;
use crate::oriented_maps::{check_size, enumerate_labeled, permutations};

/// Largest edge count for the ribbon-graph enumerations.
pub const MAX_RIBBON_EDGES: usize = 4;

/// A map together with a linear order on its edge labels, smallest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedMap {
    pub map: RibbonGraph,
    pub order: Vec<usize>,
}

impl OrderedMap {
    pub fn new(map: RibbonGraph, order: Vec<usize>) -> Result<Self, RibbonError> {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if !sorted.iter().copied().eq(map.labels()) {
            return Err(RibbonError::BadOrder(order));
        }
        Ok(OrderedMap { map, order })
    }
}

/// Whether deleting the first `i` edges leaves as many faces as connected
/// components, for every `1 ≤ i < n`.
pub fn progressive_condition(om: &OrderedMap) -> bool {
    (1..om.order.len()).all(|i| {
        let rest = om.map.delete_edges(&om.order[..i]);
        rest.components() == rest.trace_faces()
    })
}

/// All connected bicolored ribbon graphs with edges labeled `1..n`, one
/// canonical representative per flip class, sorted.
pub fn enumerate_nonoriented_labeled(n: usize) -> Result<Vec<RibbonGraph>, RibbonError> {
    check_size(n, MAX_RIBBON_EDGES)?;
    let classes: BTreeSet<RibbonGraph> = enumerate_labeled(n)?
        .par_iter()
        .flat_map_iter(|m| {
            let base = RibbonGraph::from_oriented(m);
            (0u32..1 << n).map(move |mask| {
                let mut r = base.clone();
                for e in 1..=n {
                    if mask & (1 << (e - 1)) != 0 {
                        r = r.twist_edge(e).expect("label in range");
                    }
                }
                r.canonical()
            })
        })
        .collect();
    Ok(classes.into_iter().collect())
}

/// Number of local orientations at the root of a rooted map built on this
/// class: reversing every rotation is a flip, and it fixes the
/// representative exactly when no vertex has degree three or more.
pub fn root_orientations(r: &RibbonGraph) -> u64 {
    if r.vertices().iter().any(|v| v.rotation.len() >= 3) {
        2
    } else {
        1
    }
}

/// Both sides of the counting identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremCounts {
    pub n: usize,
    /// Pairs (one-face class, order) satisfying the progressive condition.
    pub s1_labeled_pairs: u64,
    /// Rooted one-face maps with an admissible order.
    pub s1: u64,
    /// Rooted oriented maps with an arbitrary order.
    pub s2: u64,
}

/// Counts both sides in rooted-map units.
///
/// A rooted map with an order on its edges is the same as an edge-labeled
/// class (labels given by the order) with a chosen root edge and, on the
/// non-oriented side, a local orientation at the root. Summing over all
/// orders counts each labeled class `n!` times, hence the division by
/// `(n−1)!`.
pub fn count_s1_s2(n: usize) -> Result<TheoremCounts, RibbonError> {
    let one_face: Vec<RibbonGraph> = enumerate_nonoriented_labeled(n)?
        .into_iter()
        .filter(|r| r.trace_faces() == 1)
        .collect();
    let orders = permutations(n);
    let (pairs, weighted) = one_face
        .par_iter()
        .map(|r| {
            let admissible = orders
                .iter()
                .filter(|o| {
                    let order: Vec<usize> = o.iter().map(|&x| x + 1).collect();
                    progressive_condition(&OrderedMap { map: r.clone(), order })
                })
                .count() as u64;
            (admissible, admissible * root_orientations(r))
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let norm: u64 = (1..n as u64).product();
    assert_eq!(weighted % norm, 0, "weighted pair count {weighted} is not a multiple of (n-1)!");
    let labeled = enumerate_labeled(n)?.len() as u64;
    Ok(TheoremCounts { n, s1_labeled_pairs: pairs, s1: weighted / norm, s2: n as u64 * labeled })
}
