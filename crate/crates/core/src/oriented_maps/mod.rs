//! Oriented bicolored maps encoded as transitive pairs of permutations.
//!
//! A pair `(σ, τ)` of permutations of the edge set `{1..n}` describes a map:
//! white vertices are the cycles of `σ`, black vertices the cycles of `τ`,
//! and faces the cycles of `σ∘τ`. Every rooted map with `n` edges arises
//! from exactly `(n−1)!` labeled pairs.

mod embed;
mod sums;

pub use embed::{count_embeddings, profile, weight_n, weight_n_multirect, Profile};
pub use sums::{ch_a1_one_face, ch_top_concrete, ch_top_maps, labeled_count, MAX_SUM_EDGES};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// Largest edge count accepted by the enumerators.
pub const MAX_EDGES: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("n = {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },
    #[error("n must be at least 1")]
    Empty,
    #[error("{0:?} is not a permutation of 1..n")]
    NotAPermutation(Vec<usize>),
    #[error("sigma and tau do not act transitively")]
    NotTransitive,
    #[error("labeled sum {0} is not divisible by (n-1)!")]
    NotDivisible(String),
}

pub fn check_size(n: usize, max: usize) -> Result<(), MapError> {
    if n == 0 {
        Err(MapError::Empty)
    } else if n > max {
        Err(MapError::TooLarge { n, max })
    } else {
        Ok(())
    }
}

/// Cycles of a 0-based permutation, each starting at its smallest element,
/// ordered by that element.
pub fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = perm[x];
        }
        out.push(cycle);
    }
    out
}

/// `cycle_index[x]` = index (in [`cycles`] order) of the cycle containing `x`.
pub fn cycle_index(perm: &[usize]) -> (usize, Vec<usize>) {
    let mut idx = vec![usize::MAX; perm.len()];
    let mut count = 0;
    for start in 0..perm.len() {
        if idx[start] != usize::MAX {
            continue;
        }
        let mut x = start;
        while idx[x] == usize::MAX {
            idx[x] = count;
            x = perm[x];
        }
        count += 1;
    }
    (count, idx)
}

fn cycle_count(perm: &[usize]) -> usize {
    cycle_index(perm).0
}

fn is_transitive(sigma: &[usize], tau: &[usize]) -> bool {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for y in [sigma[x], tau[x]] {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    reached == n
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

/// Edge-labeled oriented bicolored map. Stored 0-based; serialized 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MapRecord", into = "MapRecord")]
pub struct OrientedBicolMap {
    sigma: Vec<usize>,
    tau: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MapRecord {
    n: usize,
    sigma: Vec<usize>,
    tau: Vec<usize>,
}

impl TryFrom<MapRecord> for OrientedBicolMap {
    type Error = MapError;
    fn try_from(r: MapRecord) -> Result<Self, MapError> {
        if r.sigma.len() != r.n || r.tau.len() != r.n {
            return Err(MapError::NotAPermutation(r.sigma));
        }
        OrientedBicolMap::from_one_based(&r.sigma, &r.tau)
    }
}

impl From<OrientedBicolMap> for MapRecord {
    fn from(m: OrientedBicolMap) -> MapRecord {
        MapRecord {
            n: m.n(),
            sigma: m.sigma.iter().map(|x| x + 1).collect(),
            tau: m.tau.iter().map(|x| x + 1).collect(),
        }
    }
}

impl OrientedBicolMap {
    /// From 0-based images.
    pub fn new(sigma: Vec<usize>, tau: Vec<usize>) -> Result<Self, MapError> {
        if sigma.is_empty() {
            return Err(MapError::Empty);
        }
        for p in [&sigma, &tau] {
            if p.len() != sigma.len() || !is_permutation(p) {
                return Err(MapError::NotAPermutation(p.iter().map(|x| x + 1).collect()));
            }
        }
        if !is_transitive(&sigma, &tau) {
            return Err(MapError::NotTransitive);
        }
        Ok(OrientedBicolMap { sigma, tau })
    }

    /// From 1-based images, e.g. `[2, 3, 1]` for the cycle `(1 2 3)`.
    pub fn from_one_based(sigma: &[usize], tau: &[usize]) -> Result<Self, MapError> {
        let shift = |p: &[usize]| -> Result<Vec<usize>, MapError> {
            p.iter()
                .map(|&x| x.checked_sub(1).ok_or_else(|| MapError::NotAPermutation(p.to_vec())))
                .collect()
        };
        OrientedBicolMap::new(shift(sigma)?, shift(tau)?)
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    /// `σ∘τ`, i.e. `x ↦ σ(τ(x))`.
    pub fn face_permutation(&self) -> Vec<usize> {
        self.tau.iter().map(|&y| self.sigma[y]).collect()
    }

    /// White-vertex/black-vertex incidence: `rows[w]` is the bitmask of
    /// blacks adjacent to white `w`. Vertices are numbered by smallest edge.
    pub fn adjacency(&self) -> (Vec<u64>, usize) {
        let (whites, w_of) = cycle_index(&self.sigma);
        let (blacks, b_of) = cycle_index(&self.tau);
        let mut rows = vec![0u64; whites];
        for e in 0..self.n() {
            rows[w_of[e]] |= 1 << b_of[e];
        }
        (rows, blacks)
    }

    /// The labeling obtained by renumbering edges in breadth-first order
    /// from edge 1, following `σ` before `τ`. Two pairs describe the same
    /// rooted map iff their canonical forms agree.
    pub fn canonical_rooted(&self) -> OrientedBicolMap {
        let n = self.n();
        let mut new_label = vec![usize::MAX; n];
        let mut order = vec![0];
        new_label[0] = 0;
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for y in [self.sigma[x], self.tau[x]] {
                if new_label[y] == usize::MAX {
                    new_label[y] = order.len();
                    order.push(y);
                }
            }
        }
        let relabel = |p: &[usize]| -> Vec<usize> {
            let mut out = vec![0; n];
            for x in 0..n {
                out[new_label[x]] = new_label[p[x]];
            }
            out
        };
        OrientedBicolMap { sigma: relabel(&self.sigma), tau: relabel(&self.tau) }
    }

    pub fn stats(&self) -> MapStats {
        map_stats(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MapStats {
    pub whites: usize,
    pub blacks: usize,
    pub faces: usize,
    pub genus: usize,
}

pub fn map_stats(m: &OrientedBicolMap) -> MapStats {
    let whites = cycle_count(&m.sigma);
    let blacks = cycle_count(&m.tau);
    let faces = cycle_count(&m.face_permutation());
    let chi = (whites + blacks + faces) as i64 - m.n() as i64;
    debug_assert!(chi <= 2 && chi % 2 == 0);
    MapStats { whites, blacks, faces, genus: ((2 - chi) / 2) as usize }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Every transitive pair `(σ, τ)` with `n` edges, ordered lexicographically
/// by `(σ, τ)`.
pub fn enumerate_labeled(n: usize) -> Result<Vec<OrientedBicolMap>, MapError> {
    check_size(n, MAX_EDGES)?;
    let perms = permutations(n);
    let mut out = Vec::new();
    for sigma in &perms {
        for tau in &perms {
            if is_transitive(sigma, tau) {
                out.push(OrientedBicolMap { sigma: sigma.clone(), tau: tau.clone() });
            }
        }
    }
    Ok(out)
}

/// One labeled representative per rooted map, in canonical form, sorted.
pub fn enumerate_rooted(n: usize) -> Result<Vec<OrientedBicolMap>, MapError> {
    let mut reps: Vec<_> = enumerate_labeled(n)?.iter().map(|m| m.canonical_rooted()).collect();
    reps.sort();
    reps.dedup();
    Ok(reps)
}
