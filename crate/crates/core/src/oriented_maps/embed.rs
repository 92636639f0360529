use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::OrientedBicolMap;
use crate::algebra::{int, Laurent, Monomial, MultiPoly, Rational, Var};
use crate::diagrams::YoungDiagram;

/// Multiset of exponent vectors `(e_p, e_q)` arising from
/// `Σ_{h: blacks → 1..ℓ} Π_b p_{h(b)} Π_w q_{max_{b~w} h(b)}`.
pub type Profile = BTreeMap<(Vec<u32>, Vec<u32>), u64>;

/// Expands the embedding sum of a white/black incidence pattern into `ℓ`
/// row groups. Embedding a white vertex into a column is possible exactly
/// when the column is at most the shortest row chosen by its neighbours,
/// so the columns contribute the length of the lowest group reached.
pub fn profile(rows: &[u64], blacks: usize, ell: usize) -> Profile {
    let mut out = Profile::new();
    let mut h = vec![0usize; blacks];
    loop {
        let mut pe = vec![0u32; ell];
        let mut qe = vec![0u32; ell];
        for &g in &h {
            pe[g] += 1;
        }
        for &row in rows {
            let top = (0..blacks).filter(|b| row & (1 << b) != 0).map(|b| h[b]).max().unwrap_or(0);
            qe[top] += 1;
        }
        *out.entry((pe, qe)).or_insert(0) += 1;
        let mut pos = 0;
        while pos < blacks {
            h[pos] += 1;
            if h[pos] < ell {
                break;
            }
            h[pos] = 0;
            pos += 1;
        }
        if pos == blacks {
            break;
        }
    }
    out
}

/// `(length, multiplicity)` of each distinct row length, longest first.
fn row_groups(lambda: &YoungDiagram) -> Vec<(u32, u32)> {
    let mut groups: Vec<(u32, u32)> = Vec::new();
    for &part in lambda.parts() {
        match groups.last_mut() {
            Some((s, r)) if *s == part => *r += 1,
            _ => groups.push((part, 1)),
        }
    }
    groups
}

/// Number of pairs `(f_1, f_2)` sending whites to columns and blacks to rows
/// so that every edge lands on a box of `λ`.
pub fn count_embeddings(m: &OrientedBicolMap, lambda: &YoungDiagram) -> BigInt {
    let (rows, blacks) = m.adjacency();
    count_embeddings_grouped(&rows, blacks, lambda)
}

pub(crate) fn count_embeddings_grouped(rows: &[u64], blacks: usize, lambda: &YoungDiagram) -> BigInt {
    if lambda.is_empty() {
        return BigInt::zero();
    }
    let groups = row_groups(lambda);
    profile(rows, blacks, groups.len())
        .into_iter()
        .map(|((pe, qe), count)| {
            let mut term = BigInt::from(count);
            for (j, &(s, r)) in groups.iter().enumerate() {
                term *= BigInt::from(r).pow(pe[j]) * BigInt::from(s).pow(qe[j]);
            }
            term
        })
        .sum()
}

/// `A^{|V∘|} (−A)^{−|V•|}` times the number of embeddings.
pub fn weight_n(m: &OrientedBicolMap, lambda: &YoungDiagram) -> Laurent {
    let stats = m.stats();
    let mut c = Rational::from_integer(count_embeddings(m, lambda));
    if stats.blacks % 2 == 1 {
        c = -c;
    }
    Laurent::monomial(c, stats.whites as i32 - stats.blacks as i32)
}

pub(crate) fn profile_to_poly(profile: &Profile) -> MultiPoly {
    MultiPoly::from_terms(profile.iter().map(|((pe, qe), &count)| {
        let pairs = pe
            .iter()
            .enumerate()
            .map(|(j, &e)| (Var::P(j as u16 + 1), e))
            .chain(qe.iter().enumerate().map(|(j, &e)| (Var::Q(j as u16 + 1), e)));
        (Monomial::from_pairs(pairs), int(count as i64))
    }))
}

/// The embedding weight on `(−Ap) × (A⁻¹q)`, a polynomial in `p_i, q_i`.
pub fn weight_n_multirect(m: &OrientedBicolMap, ell: usize) -> MultiPoly {
    let (rows, blacks) = m.adjacency();
    profile_to_poly(&profile(&rows, blacks, ell))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::diagrams::{concrete_to_multirect, partitions_up_to, YoungDiagram};
    use crate::oriented_maps::{cycle_index, enumerate_labeled};

    fn map(s: &[usize], t: &[usize]) -> OrientedBicolMap {
        OrientedBicolMap::from_one_based(s, t).unwrap()
    }

    fn yd(p: &[u32]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    fn assignments(len: usize, range: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v| (0..range).map(move |x| [v.clone(), vec![x]].concat()))
                .collect();
        }
        out
    }

    fn brute_force(m: &OrientedBicolMap, lambda: &YoungDiagram) -> usize {
        let (whites, w_of) = cycle_index(m.sigma());
        let (blacks, b_of) = cycle_index(m.tau());
        let cols = lambda.parts().first().copied().unwrap_or(0) as usize;
        let mut count = 0;
        for f1 in assignments(whites, cols) {
            for f2 in assignments(blacks, lambda.rows()) {
                let ok = (0..m.n()).all(|e| f1[w_of[e]] < lambda.parts()[f2[b_of[e]]] as usize);
                count += ok as usize;
            }
        }
        count
    }

    /// `Σ_{g,h: h(b) ≤ g(w) on edges} Π_w (q_{g(w)} − q_{g(w)+1}) Π_b p_{h(b)}`.
    fn literal(m: &OrientedBicolMap, ell: usize) -> MultiPoly {
        let (whites, w_of) = cycle_index(m.sigma());
        let (blacks, b_of) = cycle_index(m.tau());
        let q = |j: usize| if j < ell { MultiPoly::var(Var::Q(j as u16 + 1)) } else { MultiPoly::zero() };
        let mut total = MultiPoly::zero();
        for g in assignments(whites, ell) {
            for h in assignments(blacks, ell) {
                if (0..m.n()).any(|e| h[b_of[e]] > g[w_of[e]]) {
                    continue;
                }
                let mut term = MultiPoly::one();
                for &gw in &g {
                    term = &term * &(q(gw) - q(gw + 1));
                }
                for &hb in &h {
                    term = &term * &MultiPoly::var(Var::P(hb as u16 + 1));
                }
                total = total + term;
            }
        }
        total
    }

    #[test]
    fn embedding_examples() {
        let lambda = yd(&[2, 1]);
        assert_eq!(count_embeddings(&map(&[1], &[1]), &lambda), BigInt::from(3));
        assert_eq!(count_embeddings(&map(&[1, 2], &[2, 1]), &lambda), BigInt::from(5));
        assert_eq!(count_embeddings(&map(&[2, 3, 1], &[2, 3, 1]), &lambda), BigInt::from(3));
        assert_eq!(weight_n(&map(&[1], &[1]), &lambda).to_string(), "-3");
        assert_eq!(weight_n(&map(&[1, 2], &[2, 1]), &lambda).to_string(), "-5*A");
        assert_eq!(weight_n(&map(&[2, 3, 1], &[2, 3, 1]), &lambda).to_string(), "-3");
    }

    #[test]
    fn multirect_examples() {
        assert_eq!(weight_n_multirect(&map(&[1], &[1]), 2), parse_poly("p1*q1 + p2*q2").unwrap());
        assert_eq!(weight_n_multirect(&map(&[1, 2], &[2, 1]), 1), parse_poly("p1*q1^2").unwrap());
        assert_eq!(weight_n_multirect(&map(&[2, 3, 1], &[2, 3, 1]), 2), parse_poly("p1*q1 + p2*q2").unwrap());
    }

    #[test]
    fn grouped_count_matches_brute_force() {
        for n in 1..=3 {
            for m in enumerate_labeled(n).unwrap() {
                for lambda in partitions_up_to(5) {
                    assert_eq!(count_embeddings(&m, &lambda), BigInt::from(brute_force(&m, &lambda)));
                }
            }
        }
    }

    #[test]
    fn telescoped_matches_literal_sum() {
        for n in 1..=3 {
            for m in enumerate_labeled(n).unwrap() {
                for ell in 1..=3 {
                    assert_eq!(weight_n_multirect(&m, ell), literal(&m, ell));
                }
            }
        }
    }

    #[test]
    fn multirect_specialises_to_concrete() {
        for n in 1..=4 {
            for m in enumerate_labeled(n).unwrap().iter().step_by(5) {
                for lambda in partitions_up_to(6).into_iter().filter(|l| !l.is_empty()) {
                    let sub = concrete_to_multirect(&lambda).unwrap();
                    let poly = weight_n_multirect(m, sub.ell());
                    assert_eq!(sub.apply(&poly), weight_n(m, &lambda), "{lambda}");
                }
            }
        }
    }
}
