use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Laurent, Rational, Ring};

/// Dense univariate polynomial over the rationals; `coeffs[i]` multiplies `x^i`.
/// The leading coefficient is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn monomial(c: Rational, e: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = c;
        UniPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `p(x) ↦ p(x²)`
    pub fn square_variable(&self) -> Self {
        let mut coeffs = vec![Rational::zero(); 2 * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        UniPoly::new(coeffs)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dl = d.leading().expect("division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::default(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    let b = rhs.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

fn fmt_uni(p: &UniPoly, var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (e, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = Signed::is_negative(c);
        let abs = c.abs();
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        let power = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        if e == 0 {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{power}")?;
        } else {
            write!(f, "{abs}*{power}")?;
        }
    }
    Ok(())
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_uni(self, "A", f)
    }
}

/// Rational function in `A`: `numer / denom` with `gcd = 1` and monic
/// denominator. Zero is `0 / 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFuncA {
    numer: UniPoly,
    denom: UniPoly,
}

impl RatFuncA {
    pub fn new(numer: UniPoly, denom: UniPoly) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        if numer.is_zero() {
            return RatFuncA::zero();
        }
        let g = numer.gcd(&denom);
        let (mut n, _) = numer.div_rem(&g);
        let (mut d, _) = denom.div_rem(&g);
        let lead = d.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFuncA { numer: n, denom: d }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFuncA { numer: p, denom: UniPoly::constant(Rational::one()) }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn numer(&self) -> &UniPoly {
        &self.numer
    }

    pub fn denom(&self) -> &UniPoly {
        &self.denom
    }

    pub fn inv(&self) -> Option<Self> {
        if self.numer.is_zero() {
            None
        } else {
            Some(RatFuncA::new(self.denom.clone(), self.numer.clone()))
        }
    }

    /// Substitutes `x ↦ x²` (used to pass from `α` to `A` with `α = A²`).
    pub fn square_variable(&self) -> Self {
        RatFuncA {
            numer: self.numer.square_variable(),
            denom: self.denom.square_variable(),
        }
    }

    pub fn from_laurent(l: &Laurent) -> Self {
        let Some(min) = l.min_degree() else {
            return RatFuncA::zero();
        };
        let shift = (-min).max(0);
        let max = l.max_degree().unwrap();
        let mut coeffs = vec![Rational::zero(); (max + shift) as usize + 1];
        for (e, c) in l.terms() {
            coeffs[(e + shift) as usize] = c.clone();
        }
        RatFuncA::new(
            UniPoly::new(coeffs),
            UniPoly::monomial(Rational::one(), shift as usize),
        )
    }

    /// Succeeds when the denominator is a power of `A`.
    pub fn to_laurent(&self) -> Result<Laurent, AlgebraError> {
        let d = self.denom.degree().unwrap_or(0);
        if self.denom.valuation() != Some(d) {
            return Err(AlgebraError::NotLaurent(self.to_string()));
        }
        let lead = self.denom.leading().unwrap();
        Ok(Laurent::from_terms(
            self.numer
                .coeffs()
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i32 - d as i32, c / lead)),
        ))
    }
}

impl Add for RatFuncA {
    type Output = RatFuncA;
    fn add(self, rhs: RatFuncA) -> RatFuncA {
        if self.denom == rhs.denom {
            return RatFuncA::new(&self.numer + &rhs.numer, self.denom);
        }
        RatFuncA::new(
            &(&self.numer * &rhs.denom) + &(&rhs.numer * &self.denom),
            &self.denom * &rhs.denom,
        )
    }
}

impl Neg for RatFuncA {
    type Output = RatFuncA;
    fn neg(self) -> RatFuncA {
        RatFuncA { numer: -&self.numer, denom: self.denom }
    }
}

impl Sub for RatFuncA {
    type Output = RatFuncA;
    fn sub(self, rhs: RatFuncA) -> RatFuncA {
        self + (-rhs)
    }
}

impl Mul for RatFuncA {
    type Output = RatFuncA;
    fn mul(self, rhs: RatFuncA) -> RatFuncA {
        if self.numer.is_zero() || rhs.numer.is_zero() {
            return RatFuncA::zero();
        }
        RatFuncA::new(&self.numer * &rhs.numer, &self.denom * &rhs.denom)
    }
}

impl Div for RatFuncA {
    type Output = RatFuncA;
    fn div(self, rhs: RatFuncA) -> RatFuncA {
        self * rhs.inv().expect("division by zero rational function")
    }
}

impl Zero for RatFuncA {
    fn zero() -> Self {
        RatFuncA::from_poly(UniPoly::default())
    }
    fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }
}

impl One for RatFuncA {
    fn one() -> Self {
        RatFuncA::constant(Rational::one())
    }
}

impl Ring for RatFuncA {
    fn from_rational(r: &Rational) -> Self {
        RatFuncA::constant(r.clone())
    }

    fn is_atomic(&self) -> bool {
        false
    }
}

impl fmt::Display for RatFuncA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.degree() == Some(0) {
            return fmt_uni(&self.numer, "A", f);
        }
        write!(f, "(")?;
        fmt_uni(&self.numer, "A", f)?;
        write!(f, ")/(")?;
        fmt_uni(&self.denom, "A", f)?;
        write!(f, ")")
    }
}
