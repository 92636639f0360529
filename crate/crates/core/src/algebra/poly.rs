use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Commutative coefficient ring used by [`MultiPoly`].
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;

    /// Whether the value should be printed as `- |x|` inside a sum.
    fn prints_negative(&self) -> bool {
        false
    }

    /// Whether the printed value is a single atom (no top-level `+`/`-`).
    fn is_atomic(&self) -> bool {
        true
    }
}

impl Ring for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn prints_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Formal variable. The derived order is the declared variable order
/// `g, delta, p1.., q1.., c1.., l1..` used for canonical term ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// `γ = −A + A⁻¹`
    G,
    /// `δ = −γ`
    Delta,
    P(u16),
    Q(u16),
    /// deformed content of the i-th box of a tuple
    C(u16),
    /// row lengths `λ_i` as formal variables
    L(u16),
}

impl Var {
    pub fn parse(name: &str) -> Option<Var> {
        match name {
            "g" => return Some(Var::G),
            "delta" => return Some(Var::Delta),
            _ => {}
        }
        let (head, tail) = name.split_at(1);
        let idx: u16 = tail.parse().ok().filter(|&i| i >= 1)?;
        match head {
            "p" => Some(Var::P(idx)),
            "q" => Some(Var::Q(idx)),
            "c" => Some(Var::C(idx)),
            "l" => Some(Var::L(idx)),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::G => write!(f, "g"),
            Var::Delta => write!(f, "delta"),
            Var::P(i) => write!(f, "p{i}"),
            Var::Q(i) => write!(f, "q{i}"),
            Var::C(i) => write!(f, "c{i}"),
            Var::L(i) => write!(f, "l{i}"),
        }
    }
}

/// Sparse monomial: variables in increasing order, all exponents positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Splits off the exponent of `v`, returning it and the remaining monomial.
    pub fn split(&self, v: Var) -> (u32, Monomial) {
        let e = self.exponent(v);
        (e, Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect()))
    }

    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }
}

/// Graded lexicographic order on the declared variable order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), other.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal if ea != eb => return ea.cmp(&eb),
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with coefficients in `C`.
///
/// Zero coefficients are never stored; terms are kept in graded
/// lexicographic order, which fixes the printed form.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly<C: Ring = Rational> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Ring> Default for MultiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Ring> MultiPoly<C> {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(C::one(), Monomial::var(v))
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Variables that occur with positive exponent, in canonical order.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(v, _)| v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())))
    }

    pub fn mul_monomial(&self, c: &C, mono: &Monomial) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, x)| (m.mul(mono), x.clone() * c.clone())),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Renames variables; colliding images are merged.
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    /// Substitutes each variable by a polynomial. Variables for which `f`
    /// returns `None` are kept.
    pub fn substitute(&self, f: impl Fn(Var) -> Option<MultiPoly<C>>) -> Self {
        let mut cache: BTreeMap<(Var, u32), MultiPoly<C>> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for &(v, e) in m.pairs() {
                let factor = match cache.get(&(v, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = match f(v) {
                            Some(image) => image.pow(e),
                            None => Self::term(C::one(), Monomial::from_pairs([(v, e)])),
                        };
                        cache.insert((v, e), p.clone());
                        p
                    }
                };
                acc = &acc * &factor;
            }
            out = out + acc;
        }
        out
    }

    /// Evaluates every variable into the coefficient ring.
    pub fn eval(&self, f: impl Fn(Var) -> C) -> C {
        let mut cache: BTreeMap<(Var, u32), C> = BTreeMap::new();
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut acc = c.clone();
            for &(v, e) in m.pairs() {
                let value = cache
                    .entry((v, e))
                    .or_insert_with(|| {
                        let base = f(v);
                        (0..e).fold(C::one(), |x, _| x * base.clone())
                    })
                    .clone();
                acc = acc * value;
            }
            total = total + acc;
        }
        total
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let (e, rest) = m.split(v);
            if e == 0 {
                return None;
            }
            let factor = C::from_rational(&super::int(e as i64));
            Some((rest.mul(&Monomial::from_pairs([(v, e - 1)])), c.clone() * factor))
        }))
    }

    /// Collects terms by the exponent of `v`: `self = Σ_e v^e · out[e]`.
    pub fn collect_in(&self, v: Var) -> BTreeMap<u32, MultiPoly<C>> {
        let mut out: BTreeMap<u32, MultiPoly<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }
}

/// Sum of the terms of total degree exactly `d`.
pub fn homogeneous_part<C: Ring>(f: &MultiPoly<C>, d: u32) -> MultiPoly<C> {
    f.filter_terms(|m| m.degree() == d)
}

impl<C: Ring> Add for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<C: Ring> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        self.clone() + rhs.clone()
    }
}

impl<C: Ring> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> Self {
        MultiPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<C: Ring> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -self.clone()
    }
}

impl<C: Ring> Sub for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Ring> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        self.clone() - rhs.clone()
    }
}

impl<C: Ring> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Ring> Mul for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Ring> Zero for MultiPoly<C> {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for MultiPoly<C> {
    fn one() -> Self {
        MultiPoly::one()
    }
}

impl<C: Ring> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.prints_negative() && c.is_atomic();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coeff = if abs.is_atomic() { abs.to_string() } else { format!("({abs})") };
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coeff}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn v(x: Var) -> MultiPoly {
        MultiPoly::var(x)
    }

    #[test]
    fn graded_lex_order() {
        let p1 = Monomial::var(Var::P(1));
        let q1 = Monomial::var(Var::Q(1));
        let g = Monomial::var(Var::G);
        assert!(g > p1);
        assert!(p1 > q1);
        assert!(p1.mul(&q1) > g);
        assert!(p1.mul(&p1) > p1.mul(&q1));
        assert!(Monomial::one() < q1);
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&v(Var::P(1)) * &v(Var::Q(1))) * &v(Var::G);
        let p = p.scale(&int(3)) + v(Var::P(1)).pow(2) - MultiPoly::constant(rat(3, 2));
        assert_eq!(p.to_string(), "3*g*p1*q1 + p1^2 - 3/2");
        assert_eq!(MultiPoly::<Rational>::zero().to_string(), "0");
        assert_eq!((-v(Var::C(1))).to_string(), "-c1");
    }

    #[test]
    fn homogeneous_part_examples() {
        let seven = MultiPoly::constant(int(7));
        assert_eq!(homogeneous_part(&seven, 0), seven);
        let pq = &v(Var::P(1)) * &v(Var::Q(1));
        let f = pq.clone() + &pq * &v(Var::P(1));
        assert_eq!(homogeneous_part(&f, 2), pq);
    }

    #[test]
    fn derivative_and_collect() {
        let c = v(Var::C(1));
        let g = v(Var::G);
        let f = c.pow(3) + &g * &c;
        assert_eq!(f.derivative(Var::C(1)), c.pow(2).scale(&int(3)) + g.clone());
        let by_c = f.collect_in(Var::C(1));
        assert_eq!(by_c[&1], g);
        assert_eq!(by_c[&3], MultiPoly::one());
    }

    #[test]
    fn substitute_and_eval() {
        let x = v(Var::L(1));
        let f = x.pow(2) + x.clone();
        let shifted = f.substitute(|var| (var == Var::L(1)).then(|| x.clone() + MultiPoly::one()));
        assert_eq!(shifted, x.pow(2) + x.scale(&int(3)) + MultiPoly::constant(int(2)));
        assert_eq!(f.eval(|_| int(4)), int(20));
    }
}
