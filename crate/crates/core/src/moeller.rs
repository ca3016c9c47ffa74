//! Gröbner éscalier and reduced Gröbner basis of the kernel of a functional set.
//!
//! Monomials are visited in increasing order. Each one is either independent
//! of the monomials accepted so far modulo the kernel, and joins the
//! éscalier, or its dependence yields a reduced Gröbner basis element with
//! that monomial as leader. Only multiples of accepted monomials by a single
//! variable are ever visited, so the loop ends once every corner is settled.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exponent::Exponent;
use crate::functionals::FunctionalSet;
use crate::linalg::{self, EchelonBasis, Reduction};
use crate::order::MonomialOrder;
use crate::order_ideal::OrderIdeal;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// Éscalier, corners and reduced Gröbner basis for one monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EscalierResult {
    pub order: MonomialOrder,
    pub escalier: OrderIdeal,
    /// Corners of the éscalier, lexicographically sorted.
    pub corners: Vec<Exponent>,
    /// Monic, reduced; sorted by leading monomial (lexicographic exponent order).
    pub groebner: Vec<Polynomial>,
}

impl EscalierResult {
    /// Leading monomials of the Gröbner basis, in basis order.
    pub fn leading_monomials(&self) -> Vec<Exponent> {
        self.groebner
            .iter()
            .map(|g| g.leading_monomial(&self.order).expect("basis elements are nonzero"))
            .collect()
    }

    /// Full reduction of `f` by the reduced Gröbner basis; the result is
    /// supported on the éscalier.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        check_dim(self.order.dimension(), f.dimension())?;
        let leaders: Vec<(Exponent, &Polynomial)> =
            self.leading_monomials().into_iter().zip(&self.groebner).collect();
        let mut rest = f.clone();
        loop {
            let outside = self.order.max(rest.support().filter(|t| !self.escalier.contains(t))).cloned();
            let Some(t) = outside else {
                return Ok(rest);
            };
            let (lm, g) = leaders
                .iter()
                .find(|(lm, _)| lm.divides(&t))
                .expect("every monomial outside the éscalier is a multiple of a corner");
            let c = rest.coefficient(&t);
            let shift = t.checked_sub(lm).expect("divides");
            rest = &rest - &g.mul_term(&shift, &c);
        }
    }
}

/// Computes the éscalier of `ker theta` with respect to `order`.
pub fn escalier(theta: &FunctionalSet, order: &MonomialOrder) -> Result<EscalierResult> {
    let d = theta.dimension();
    check_dim(d, order.dimension())?;
    let n = theta.len();

    let mut basis = EchelonBasis::new();
    let mut accepted: Vec<Exponent> = Vec::with_capacity(n);
    let mut leaders: Vec<Exponent> = Vec::new();
    let mut groebner: Vec<Polynomial> = Vec::new();
    let mut frontier: BTreeSet<Exponent> = BTreeSet::from([Exponent::zero(d)]);
    let mut visited: BTreeSet<Exponent> = BTreeSet::new();

    while let Some(t) = order.min(frontier.iter()).cloned() {
        frontier.remove(&t);
        visited.insert(t.clone());
        if leaders.iter().any(|lm| lm.divides(&t)) {
            continue;
        }
        match basis.insert_or_express(theta.evaluate_monomial(&t)) {
            Reduction::Inserted { .. } => {
                for i in 0..d {
                    let next = t.bump(i);
                    if !visited.contains(&next) {
                        frontier.insert(next);
                    }
                }
                accepted.push(t);
            }
            Reduction::Dependent { coeffs } => {
                let tail = accepted
                    .iter()
                    .zip(coeffs)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(u, c)| (u.clone(), -c));
                let g = Polynomial::from_terms(d, std::iter::once((t.clone(), Rational::one())).chain(tail))?;
                leaders.push(t);
                groebner.push(g);
            }
        }
    }

    if accepted.len() != n {
        return Err(Error::DegenerateFunctionals { rank: accepted.len(), expected: n });
    }

    let escalier = OrderIdeal::new(d, accepted)?;
    let corners = escalier.corner();
    let mut pairs: Vec<(Exponent, Polynomial)> = leaders.into_iter().zip(groebner).collect();
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    debug_assert_eq!(pairs.iter().map(|p| &p.0).collect::<Vec<_>>(), corners.iter().collect::<Vec<_>>());
    Ok(EscalierResult {
        order: order.clone(),
        escalier,
        corners,
        groebner: pairs.into_iter().map(|p| p.1).collect(),
    })
}

/// Whether the monomials `ts` are linearly independent modulo `ker theta`.
pub fn is_independent_mod_ideal(theta: &FunctionalSet, ts: &[Exponent]) -> Result<bool> {
    let distinct: Vec<Exponent> = ts.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let m = crate::functionals::evaluation_matrix(theta, &distinct)?;
    Ok(linalg::rank(&m) == distinct.len())
}

/// Rank of the full set of conditions, measured on all monomials of total
/// degree below `theta.len()`.
pub fn condition_rank(theta: &FunctionalSet) -> usize {
    let n = theta.len();
    let d = theta.dimension();
    let monomials: Vec<Exponent> = Exponent::new(vec![(n - 1) as u32; d])
        .divisor_box()
        .into_iter()
        .filter(|e| e.degree() < n as u64)
        .collect();
    let m = crate::functionals::evaluation_matrix(theta, &monomials).expect("same dimension");
    linalg::rank(&m)
}
