//! Interpolation conditions: point evaluations composed with partial derivatives.
//!
//! A [`FunctionalSet`] attaches to each of finitely many distinct points a
//! lower set of derivative multi-indices. Its kernel is a zero-dimensional
//! ideal whose codimension equals the number of conditions.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exponent::Exponent;
use crate::linalg::Matrix;
use crate::order_ideal::OrderIdeal;
use crate::polynomial::Polynomial;
use crate::rational::{format_rational, int, pow, Rational};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coordinates: Vec<Rational>) -> Self {
        Point(coordinates)
    }

    pub fn from_ints(coordinates: &[i64]) -> Self {
        Point(coordinates.iter().map(|&c| int(c)).collect())
    }

    pub fn origin(dimension: usize) -> Self {
        Point(vec![Rational::zero(); dimension])
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.0
    }

    pub fn without(&self, axis: usize) -> Point {
        let mut c = self.0.clone();
        c.remove(axis);
        Point(c)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Nonempty ordered list of pairwise distinct points of equal arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    dimension: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(dimension: usize, points: Vec<Point>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::ZeroDimension);
        }
        if points.is_empty() {
            return Err(Error::Empty);
        }
        let mut seen = BTreeSet::new();
        for p in &points {
            check_dim(dimension, p.dimension())?;
            if !seen.insert(p) {
                return Err(Error::DuplicatePoint(p.to_string()));
            }
        }
        Ok(PointSet { dimension, points })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// The points as a set, ignoring list order.
    pub fn as_set(&self) -> BTreeSet<Point> {
        self.points.iter().cloned().collect()
    }

    pub fn same_points(&self, other: &PointSet) -> bool {
        self.dimension == other.dimension && self.as_set() == other.as_set()
    }
}

/// `f -> (d^|alpha| f / dx^alpha)(point)`, unnormalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    pub point: Point,
    pub derivative: Exponent,
}

impl Functional {
    pub fn new(point: Point, derivative: Exponent) -> Result<Self> {
        check_dim(point.dimension(), derivative.dimension())?;
        Ok(Functional { point, derivative })
    }

    pub fn evaluation(point: Point) -> Self {
        let d = point.dimension();
        Functional { point, derivative: Exponent::zero(d) }
    }

    /// Value on the monomial `x^t`: `FF(t, alpha) * point^(t - alpha)`, where
    /// `FF` is the product of per-coordinate falling factorials.
    pub fn apply_monomial(&self, t: &Exponent) -> Rational {
        let Some(rest) = t.checked_sub(&self.derivative) else {
            return Rational::zero();
        };
        let mut value = Rational::one();
        for ((&ti, &ai), (&ri, xi)) in t
            .entries()
            .iter()
            .zip(self.derivative.entries())
            .zip(rest.entries().iter().zip(self.point.coordinates()))
        {
            let falling: u64 = (0..ai).map(|k| (ti - k) as u64).product();
            if falling != 1 {
                value *= Rational::from_integer(falling.into());
            }
            if ri > 0 {
                if xi.is_zero() {
                    return Rational::zero();
                }
                value *= pow(xi, ri);
            }
        }
        value
    }
}

/// Evaluates a functional on a polynomial.
pub fn evaluate(theta: &Functional, f: &Polynomial) -> Result<Rational> {
    check_dim(theta.point.dimension(), f.dimension())?;
    Ok(f.terms().fold(Rational::zero(), |acc, (t, c)| {
        let v = theta.apply_monomial(t);
        if v.is_zero() {
            acc
        } else {
            acc + c * v
        }
    }))
}

/// A point with its lower set of derivative multi-indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Site {
    pub point: Point,
    pub derivatives: OrderIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalSet {
    dimension: usize,
    sites: Vec<Site>,
}

impl FunctionalSet {
    pub fn new(dimension: usize, sites: Vec<Site>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::ZeroDimension);
        }
        if sites.is_empty() {
            return Err(Error::Empty);
        }
        let mut seen = BTreeSet::new();
        for s in &sites {
            check_dim(dimension, s.point.dimension())?;
            check_dim(dimension, s.derivatives.dimension())?;
            if s.derivatives.is_empty() {
                return Err(Error::EmptyDerivativeSet);
            }
            if !seen.insert(&s.point) {
                return Err(Error::DuplicatePoint(s.point.to_string()));
            }
        }
        Ok(FunctionalSet { dimension, sites })
    }

    /// Builds sites from raw derivative lists, rejecting non-lower sets.
    pub fn from_raw(dimension: usize, raw: Vec<(Point, Vec<Exponent>)>) -> Result<Self> {
        let sites = raw
            .into_iter()
            .map(|(point, ds)| Ok(Site { point, derivatives: OrderIdeal::new(dimension, ds)? }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dimension, sites)
    }

    /// Pure point evaluations, one per point (Lagrange interpolation).
    pub fn from_points(points: &PointSet) -> Self {
        let d = points.dimension();
        let sites = points
            .points()
            .iter()
            .map(|p| Site { point: p.clone(), derivatives: OrderIdeal::one(d) })
            .collect();
        FunctionalSet { dimension: d, sites }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    /// Total number of conditions.
    pub fn len(&self) -> usize {
        self.sites.iter().map(|s| s.derivatives.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether every site carries only the plain evaluation.
    pub fn is_lagrange(&self) -> bool {
        self.sites.iter().all(|s| s.derivatives.len() == 1)
    }

    /// Flattened conditions: sites in order, derivatives lexicographically within a site.
    pub fn functionals(&self) -> Vec<Functional> {
        self.sites
            .iter()
            .flat_map(|s| {
                s.derivatives
                    .iter()
                    .map(|a| Functional { point: s.point.clone(), derivative: a.clone() })
            })
            .collect()
    }

    /// Column vector `(theta_j(x^t))_j`.
    pub fn evaluate_monomial(&self, t: &Exponent) -> Vec<Rational> {
        self.sites
            .iter()
            .flat_map(|s| {
                s.derivatives.iter().map(move |a| {
                    Functional { point: s.point.clone(), derivative: a.clone() }.apply_monomial(t)
                })
            })
            .collect()
    }

    pub fn evaluate(&self, f: &Polynomial) -> Result<Vec<Rational>> {
        check_dim(self.dimension, f.dimension())?;
        self.functionals().iter().map(|th| evaluate(th, f)).collect()
    }

    /// Whether `f` lies in the kernel of every condition.
    pub fn annihilates(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.evaluate(f)?.iter().all(Zero::is_zero))
    }
}

/// Matrix with entry `(j, k) = theta_j(x^{monomials[k]})`.
pub fn evaluation_matrix(theta: &FunctionalSet, monomials: &[Exponent]) -> Result<Matrix> {
    for t in monomials {
        check_dim(theta.dimension(), t.dimension())?;
    }
    let columns: Vec<Vec<Rational>> = monomials.iter().map(|t| theta.evaluate_monomial(t)).collect();
    Ok((0..theta.len()).map(|j| columns.iter().map(|c| c[j].clone()).collect()).collect())
}
