//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exponent::Exponent;
use crate::order::MonomialOrder;
use crate::rational::{format_rational, Rational};

/// Sparse polynomial in `d` variables. Terms are kept in lexicographic
/// exponent order and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    dimension: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl Polynomial {
    pub fn zero(dimension: usize) -> Self {
        Polynomial { dimension, terms: BTreeMap::new() }
    }

    pub fn constant(dimension: usize, c: Rational) -> Self {
        Self::monomial(Exponent::zero(dimension), c)
    }

    pub fn monomial(exp: Exponent, coef: Rational) -> Self {
        let mut p = Self::zero(exp.dimension());
        if !coef.is_zero() {
            p.terms.insert(exp, coef);
        }
        p
    }

    /// The variable `x_{index+1}`.
    pub fn variable(dimension: usize, index: usize) -> Self {
        Self::monomial(Exponent::unit(dimension, index), Rational::one())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(dimension: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut p = Self::zero(dimension);
        for (e, c) in terms {
            check_dim(dimension, e.dimension())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
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

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<Exponent> {
        check_dim(order.dimension(), self.dimension)?;
        order.max(self.terms.keys()).cloned().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coefficient(&self, order: &MonomialOrder) -> Result<Rational> {
        let lm = self.leading_monomial(order)?;
        Ok(self.terms[&lm].clone())
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Result<Self> {
        let lc = self.leading_coefficient(order)?;
        Ok(self.scale(&lc.recip()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dimension);
        }
        Polynomial {
            dimension: self.dimension,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by `c * x^e`.
    pub fn mul_term(&self, e: &Exponent, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dimension);
        }
        Polynomial {
            dimension: self.dimension,
            terms: self.terms.iter().map(|(k, v)| (k.add(e), v * c)).collect(),
        }
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        assert_eq!(self.dimension, other.dimension, "polynomial dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), if sign { c.clone() } else { -c.clone() });
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.combine(rhs, true)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.combine(rhs, false)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.dimension, rhs.dimension, "polynomial dimension mismatch");
        let mut out = Polynomial::zero(self.dimension);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.add(b), x * y);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = if c < &Rational::zero() { (true, -c.clone()) } else { (false, c.clone()) };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e.is_zero() {
                f.write_str(&format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{e}")?;
            } else {
                write!(f, "{}*{e}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderKind;
    use crate::rational::int;

    fn x(d: usize, i: usize) -> Polynomial {
        Polynomial::variable(d, i)
    }

    #[test]
    fn leading_monomials() {
        let f = &x(2, 0) + &(&(&x(2, 1) * &x(2, 1)) * &x(2, 1));
        let lex1 = MonomialOrder::lex_from(1, 2).unwrap();
        assert_eq!(f.leading_monomial(&lex1).unwrap(), Exponent::from([1, 0]));

        let g = &(&x(2, 0) * &(&x(2, 1) * &x(2, 1))) - &(&(&x(2, 0) * &x(2, 0)) * &x(2, 1));
        let grevlex = MonomialOrder::named(&OrderKind::Grevlex, 2).unwrap();
        assert_eq!(g.leading_monomial(&grevlex).unwrap(), Exponent::from([2, 1]));

        let c = Polynomial::constant(3, int(5));
        assert_eq!(c.leading_monomial(&MonomialOrder::grevlex(3)).unwrap(), Exponent::zero(3));
    }

    #[test]
    fn zero_polynomial_has_no_leading_monomial() {
        let z = Polynomial::zero(2);
        assert_eq!(z.leading_monomial(&MonomialOrder::lex(2)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn arithmetic_cancels_terms() {
        let a = &x(2, 0) + &x(2, 1);
        let b = &x(2, 0) - &x(2, 1);
        let prod = &a * &b;
        assert_eq!(prod.len(), 2);
        assert!((&a - &a).is_zero());
        assert_eq!(prod.to_string(), "x1^2 - x2^2");
    }
}
