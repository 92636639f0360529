use std::collections::HashMap;

use crate::algebra::{falling_factorial, Rational};
use crate::diagrams::YoungDiagram;

fn beta_set(parts: &[u32]) -> Vec<u32> {
    let l = parts.len() as u32;
    parts.iter().enumerate().map(|(i, &p)| p + (l - 1 - i as u32)).collect()
}

fn from_beta(mut beta: Vec<u32>) -> Vec<u32> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len() as u32;
    beta.iter().enumerate().map(|(i, &b)| b - (l - 1 - i as u32)).filter(|&p| p > 0).collect()
}

fn chi(parts: Vec<u32>, rho: &[u32], memo: &mut HashMap<(Vec<u32>, usize), i64>) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    let key = (parts, rest.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = beta_set(&key.0);
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        let v = chi(from_beta(next), rest, memo);
        total += if crossed % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// `χ^λ` on the class `π ∪ 1^{|λ|−|π|}`, by border-strip removal.
/// Returns 0 when `|π| > |λ|`.
pub fn mn_character(lambda: &YoungDiagram, pi: &YoungDiagram) -> i64 {
    if pi.size() > lambda.size() {
        return 0;
    }
    let rho = pi.with_ones(lambda.size() - pi.size());
    chi(lambda.parts().to_vec(), rho.parts(), &mut HashMap::new())
}

/// `|λ|(|λ|−1)⋯(|λ|−|π|+1) · χ^λ(π ∪ 1^{|λ|−|π|}) / χ^λ(1^{|λ|})`.
pub fn normalized_character(pi: &YoungDiagram, lambda: &YoungDiagram) -> Rational {
    let n = lambda.size();
    if pi.size() > n {
        return Rational::from_integer(0.into());
    }
    let dim = mn_character(lambda, &YoungDiagram::empty());
    let ff = falling_factorial(n as u64, pi.size() as u64);
    Rational::new(ff * mn_character(lambda, pi), dim.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::diagrams::partitions;
    use crate::jack_oracle::symfunc::z_factor;

    fn yd(p: &[u32]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    #[test]
    fn spot_values() {
        assert_eq!(mn_character(&yd(&[2, 1]), &yd(&[3])), -1);
        assert_eq!(mn_character(&yd(&[2, 1]), &yd(&[])), 2);
        assert_eq!(mn_character(&yd(&[3, 2]), &yd(&[])), 5);
        for pi in partitions(5) {
            assert_eq!(mn_character(&yd(&[5]), &pi), 1);
        }
        assert_eq!(normalized_character(&yd(&[3]), &yd(&[2, 1])), int(-3));
        assert_eq!(normalized_character(&yd(&[3]), &yd(&[3])), int(6));
        assert_eq!(normalized_character(&yd(&[3]), &yd(&[1])), int(0));
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=6 {
            let parts = partitions(n);
            for a in &parts {
                for b in &parts {
                    let s: i64 = parts.iter().map(|l| mn_character(l, a) * mn_character(l, b)).sum();
                    let expected = if a == b { z_factor(a).try_into().unwrap() } else { 0 };
                    assert_eq!(s, expected, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn conjugation_twists_by_sign() {
        for n in 1..=5u32 {
            for lambda in partitions(7).into_iter().chain(partitions(6)) {
                let sign = if n % 2 == 1 { int(1) } else { int(-1) };
                let pi = yd(&[n]);
                assert_eq!(
                    normalized_character(&pi, &lambda.conjugate()),
                    sign * normalized_character(&pi, &lambda)
                );
            }
        }
    }
}
