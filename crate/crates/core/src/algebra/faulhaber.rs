use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{binomial, MultiPoly, Rational, Ring};

/// Bernoulli numbers `B_0..=B_m` with the convention `B_1 = +1/2`.
pub fn bernoulli_plus(m: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(m + 1);
    b.push(Rational::one());
    for k in 1..=m {
        // Σ_{j<=k} binom(k+1, j) B_j = 0   (B_1 = −1/2 convention)
        let s = (0..k).fold(Rational::zero(), |acc, j| {
            acc + Rational::from_integer(binomial(k as u64 + 1, j as u64)) * &b[j]
        });
        b.push(-s / Rational::from_integer(BigInt::from(k + 1)));
    }
    if m >= 1 {
        b[1] = -b[1].clone();
    }
    b
}

/// Coefficients `[a_0, .., a_{m+1}]` of `F_m(N) = Σ_{x=1}^{N} x^m`.
pub fn faulhaber_coefficients(m: usize) -> Vec<Rational> {
    let b = bernoulli_plus(m);
    let mut coeffs = vec![Rational::zero(); m + 2];
    let scale = Rational::from_integer(BigInt::from(m + 1));
    for (j, bj) in b.iter().enumerate() {
        coeffs[m + 1 - j] = Rational::from_integer(binomial(m as u64 + 1, j as u64)) * bj / &scale;
    }
    coeffs
}

fn horner<C: Ring>(coeffs: &[Rational], at: &MultiPoly<C>) -> MultiPoly<C> {
    coeffs.iter().rev().fold(MultiPoly::zero(), |acc, a| {
        &acc * at + MultiPoly::constant(C::from_rational(a))
    })
}

/// `F_m(offset + length) − F_m(offset)`, i.e. the polynomial that equals
/// `Σ_{x=offset+1}^{offset+length} x^m` at non-negative integers.
pub fn faulhaber_range_sum<C: Ring>(
    m: usize,
    offset: &MultiPoly<C>,
    length: &MultiPoly<C>,
) -> MultiPoly<C> {
    let coeffs = faulhaber_coefficients(m);
    let end = offset + length;
    horner(&coeffs, &end) - horner(&coeffs, offset)
}
