use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Rational, Ring};

/// Laurent polynomial in the symbol `A` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: BTreeMap<i32, Rational>,
}

impl Laurent {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · A^e`
    pub fn monomial(c: Rational, e: i32) -> Self {
        let mut l = Laurent::default();
        l.add_term(e, c);
        l
    }

    /// `A^e`
    pub fn a_pow(e: i32) -> Self {
        Self::monomial(Rational::one(), e)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, Rational)>) -> Self {
        let mut l = Laurent::default();
        for (e, c) in terms {
            l.add_term(e, c);
        }
        l
    }

    pub fn add_term(&mut self, e: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Coefficient of `A^e`.
    pub fn coeff(&self, e: i32) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Laurent::from_terms(self.terms.iter().map(|(&e, x)| (e, x * c)))
    }

    pub fn shift(&self, by: i32) -> Self {
        Laurent { terms: self.terms.iter().map(|(&e, c)| (e + by, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Laurent::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `A = 1`.
    pub fn at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Image under `A ↦ −A⁻¹`.
    pub fn involution(&self) -> Self {
        Laurent::from_terms(self.terms.iter().map(|(&e, c)| {
            let c = if e.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            (-e, c)
        }))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(mut self, rhs: Laurent) -> Laurent {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        self.clone() + rhs.clone()
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -self.clone()
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        self + (-rhs)
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self.clone() - rhs.clone()
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

impl Zero for Laurent {
    fn zero() -> Self {
        Laurent::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Laurent {
    fn one() -> Self {
        Laurent::constant(Rational::one())
    }
}

impl From<Rational> for Laurent {
    fn from(c: Rational) -> Self {
        Laurent::constant(c)
    }
}

impl Ring for Laurent {
    fn from_rational(r: &Rational) -> Self {
        Laurent::constant(r.clone())
    }

    fn prints_negative(&self) -> bool {
        self.terms.values().next_back().is_some_and(Signed::is_negative)
    }

    fn is_atomic(&self) -> bool {
        self.terms.len() <= 1
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&e, c)) in self.terms.iter().rev().enumerate() {
            let negative = Signed::is_negative(c);
            let abs = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let power = match e {
                0 => String::new(),
                1 => "A".to_string(),
                _ => format!("A^{e}"),
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
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn arithmetic_and_display() {
        let a = Laurent::a_pow(1);
        let ainv = Laurent::a_pow(-1);
        let gamma = &ainv - &a;
        assert_eq!(gamma.to_string(), "-A + A^-1");
        assert_eq!(gamma.pow(2).to_string(), "A^2 - 2 + A^-2");
        let x = Laurent::from_terms([(1, int(3)), (-1, rat(-2, 1))]);
        assert_eq!(x.to_string(), "3*A - 2*A^-1");
        assert_eq!(x.at_one(), int(1));
        assert_eq!(Laurent::constant(rat(-3, 2)).to_string(), "-3/2");
        assert_eq!(Laurent::zero().to_string(), "0");
    }

    #[test]
    fn involution_fixes_gamma() {
        let gamma = Laurent::a_pow(-1) - Laurent::a_pow(1);
        assert_eq!(gamma.involution(), gamma);
        let s = Laurent::a_pow(-1) + Laurent::a_pow(1);
        assert_eq!(s.involution(), -s);
    }
}
