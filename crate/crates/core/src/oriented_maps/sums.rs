use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use super::embed::{count_embeddings_grouped, profile, profile_to_poly};
use super::{check_size, cycle_index, permutations, MapError};
use crate::algebra::{factorial, gamma_laurent, Laurent, Monomial, MultiPoly, Rational, Var};
use crate::diagrams::YoungDiagram;

/// Largest edge count for the map-sum formulas.
pub const MAX_SUM_EDGES: usize = 6;

type Pattern = (Vec<u64>, usize);

/// Number of labeled pairs per white/black incidence pattern.
fn aggregate(n: usize, one_face_only: bool) -> BTreeMap<Pattern, u64> {
    let perms = permutations(n);
    perms
        .par_iter()
        .map(|sigma| {
            let mut local: BTreeMap<Pattern, u64> = BTreeMap::new();
            let (whites, w_of) = cycle_index(sigma);
            for tau in &perms {
                let (blacks, b_of) = cycle_index(tau);
                let mut rows = vec![0u64; whites];
                for e in 0..n {
                    rows[w_of[e]] |= 1 << b_of[e];
                }
                if !connected(&rows, blacks) {
                    continue;
                }
                if one_face_only {
                    let face: Vec<usize> = tau.iter().map(|&y| sigma[y]).collect();
                    if cycle_index(&face).0 != 1 {
                        continue;
                    }
                }
                *local.entry((rows, blacks)).or_insert(0) += 1;
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

/// The pair is transitive iff its white/black incidence graph is connected.
fn connected(rows: &[u64], blacks: usize) -> bool {
    let mut seen_w = 1u64;
    let mut seen_b = rows[0];
    loop {
        let mut grown = seen_w;
        for (w, &row) in rows.iter().enumerate() {
            if row & seen_b != 0 {
                grown |= 1 << w;
            }
        }
        let mut grown_b = seen_b;
        for (w, &row) in rows.iter().enumerate() {
            if grown & (1 << w) != 0 {
                grown_b |= row;
            }
        }
        if grown == seen_w && grown_b == seen_b {
            return seen_w.count_ones() as usize == rows.len() && seen_b.count_ones() as usize == blacks;
        }
        seen_w = grown;
        seen_b = grown_b;
    }
}

/// Number of transitive pairs with `n` edges.
pub fn labeled_count(n: usize) -> Result<u64, MapError> {
    check_size(n, MAX_SUM_EDGES)?;
    Ok(aggregate(n, false).values().sum())
}

fn divide_exact(value: &BigInt, by: &BigInt) -> Result<BigInt, MapError> {
    let (q, r) = value.div_rem(by);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(MapError::NotDivisible(value.to_string()))
    }
}

/// Top-degree Stanley polynomial from the map sum
/// `−Σ_M γ^{n+1−|V(M)|} 𝔑_M` over rooted oriented maps with `n` edges and
/// any number of faces, on `ℓ` rectangles.
pub fn ch_top_maps(n: usize, ell: usize) -> Result<MultiPoly, MapError> {
    check_size(n, MAX_SUM_EDGES)?;
    let norm = factorial(n as u64 - 1);
    let mut total = MultiPoly::zero();
    for ((rows, blacks), count) in aggregate(n, false) {
        let vertices = rows.len() + blacks;
        let g = Monomial::from_pairs([(Var::G, (n + 1 - vertices) as u32)]);
        let weight = profile_to_poly(&profile(&rows, blacks, ell));
        total = total + weight.mul_monomial(&Rational::from_integer(BigInt::from(count)), &g);
    }
    let mut out = MultiPoly::zero();
    for (m, c) in total.terms() {
        debug_assert!(c.is_integer());
        let q = divide_exact(c.numer(), &norm)?;
        out.add_term(m.clone(), -Rational::from_integer(q));
    }
    Ok(out)
}

/// The same top-degree map sum evaluated on a concrete diagram,
/// `−Σ_M γ^{n+1−|V(M)|} 𝔑_M(λ)`.
pub fn ch_top_concrete(n: usize, lambda: &YoungDiagram) -> Result<Laurent, MapError> {
    check_size(n, MAX_SUM_EDGES)?;
    let gamma = gamma_laurent();
    let mut total = Laurent::zero();
    for ((rows, blacks), count) in aggregate(n, false) {
        let mut c = count_embeddings_grouped(&rows, blacks, lambda) * BigInt::from(count);
        if c.is_zero() {
            continue;
        }
        if blacks % 2 == 1 {
            c = -c;
        }
        let vertices = rows.len() + blacks;
        let weight = Laurent::monomial(Rational::from_integer(c), rows.len() as i32 - blacks as i32);
        total = total + &gamma.pow((n + 1 - vertices) as u32) * &weight;
    }
    let norm = Rational::from_integer(-factorial(n as u64 - 1));
    let out = total.scale(&norm.recip());
    if out.terms().any(|(_, c)| !c.is_integer()) {
        return Err(MapError::NotDivisible(total.to_string()));
    }
    Ok(out)
}

/// `Ch_n(λ)` at `A = 1` from the sum over rooted one-face maps,
/// `−Σ_M (−1)^{|V•(M)|} · #embeddings(M, λ)`.
pub fn ch_a1_one_face(n: usize, lambda: &YoungDiagram) -> Result<Rational, MapError> {
    check_size(n, MAX_SUM_EDGES)?;
    let mut total = BigInt::zero();
    for ((rows, blacks), count) in aggregate(n, true) {
        let mut term = count_embeddings_grouped(&rows, blacks, lambda) * BigInt::from(count);
        if blacks % 2 == 1 {
            term = -term;
        }
        total += term;
    }
    let q = divide_exact(&total, &factorial(n as u64 - 1))?;
    Ok(-Rational::from_integer(q))
}
