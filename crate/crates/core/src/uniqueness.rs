//! Deciding whether `ker theta` has exactly one monomial order quotient basis.
//!
//! Two independent criteria are provided: comparing the éscaliers for the
//! elimination orders `lex_from(i)`, `i = 1..=d`, and checking that the full
//! divisor box of every corner of a given quotient basis is dependent modulo
//! the ideal. [`enumerate_quotient_bases`] is a brute-force oracle for both.

use crate::error::{Error, Result};
use crate::functionals::FunctionalSet;
use crate::moeller::{escalier, is_independent_mod_ideal, EscalierResult};
use crate::order::MonomialOrder;
use crate::order_ideal::{order_ideals_of_size, OrderIdeal};
use crate::polynomial::Polynomial;

/// Two elimination orders whose éscaliers differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub order_a: MonomialOrder,
    pub order_b: MonomialOrder,
    pub escalier_a: OrderIdeal,
    pub escalier_b: OrderIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniquenessVerdict {
    Unique {
        basis: OrderIdeal,
        universal_gb: Vec<Polynomial>,
    },
    NotUnique(Witness),
}

impl UniquenessVerdict {
    pub fn is_unique(&self) -> bool {
        matches!(self, UniquenessVerdict::Unique { .. })
    }

    pub fn basis(&self) -> Option<&OrderIdeal> {
        match self {
            UniquenessVerdict::Unique { basis, .. } => Some(basis),
            UniquenessVerdict::NotUnique(_) => None,
        }
    }

    pub fn universal_gb(&self) -> Option<&[Polynomial]> {
        match self {
            UniquenessVerdict::Unique { universal_gb, .. } => Some(universal_gb),
            UniquenessVerdict::NotUnique(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            UniquenessVerdict::Unique { .. } => None,
            UniquenessVerdict::NotUnique(w) => Some(w),
        }
    }
}

/// Éscaliers for `lex_from(1), ..., lex_from(d)`.
pub fn elimination_escaliers(theta: &FunctionalSet) -> Result<Vec<EscalierResult>> {
    let d = theta.dimension();
    (1..=d)
        .map(|i| escalier(theta, &MonomialOrder::lex_from(i, d)?))
        .collect()
}

pub fn unique_quotient_basis(theta: &FunctionalSet) -> Result<UniquenessVerdict> {
    let mut results = elimination_escaliers(theta)?.into_iter();
    let first = results.next().expect("dimension >= 1");
    for other in results {
        if other.escalier != first.escalier {
            return Ok(UniquenessVerdict::NotUnique(Witness {
                order_a: first.order,
                order_b: other.order,
                escalier_a: first.escalier,
                escalier_b: other.escalier,
            }));
        }
    }
    Ok(UniquenessVerdict::Unique { basis: first.escalier, universal_gb: first.groebner })
}

/// Corner-box criterion: given a quotient basis `basis`, it is the only one
/// iff for every corner `a`, the monomials `{x^b : 0 <= b <= a}` are
/// dependent modulo the ideal.
pub fn corner_dependence_unique(theta: &FunctionalSet, basis: &OrderIdeal) -> Result<bool> {
    if basis.len() != theta.len() {
        return Err(Error::NotQuotientBasis(format!(
            "{} monomials for {} conditions",
            basis.len(),
            theta.len()
        )));
    }
    if !is_independent_mod_ideal(theta, &basis.to_vec())? {
        return Err(Error::NotQuotientBasis("monomials are dependent modulo the ideal".into()));
    }
    for a in basis.corner() {
        if is_independent_mod_ideal(theta, &a.divisor_box())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The reduced Gröbner basis shared by all monomial orders, if there is one.
pub fn universal_groebner_basis(theta: &FunctionalSet) -> Result<Option<Vec<Polynomial>>> {
    Ok(match unique_quotient_basis(theta)? {
        UniquenessVerdict::Unique { universal_gb, .. } => Some(universal_gb),
        UniquenessVerdict::NotUnique(_) => None,
    })
}

/// Size guard for [`enumerate_quotient_bases`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimit {
    pub max_conditions: usize,
    pub max_dimension: usize,
}

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit { max_conditions: 10, max_dimension: 4 }
    }
}

impl std::str::FromStr for OracleLimit {
    type Err = Error;

    /// `"n"` or `"n,d"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid oracle limit {s:?}"));
        let mut parts = s.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| bad()));
        let max_conditions = parts.next().ok_or_else(bad)??;
        let max_dimension = parts.next().transpose()?.unwrap_or(OracleLimit::default().max_dimension);
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(OracleLimit { max_conditions, max_dimension })
    }
}

/// Every order ideal that is a quotient basis for `ker theta`, found by
/// testing all order ideals of the right cardinality. Stops after
/// `max_results` hits.
pub fn enumerate_quotient_bases(
    theta: &FunctionalSet,
    max_results: usize,
    limit: OracleLimit,
) -> Result<Vec<OrderIdeal>> {
    let n = theta.len();
    let d = theta.dimension();
    if n > limit.max_conditions || d > limit.max_dimension {
        return Err(Error::OracleTooLarge {
            conditions: n,
            dimension: d,
            max_conditions: limit.max_conditions,
            max_dimension: limit.max_dimension,
        });
    }
    let mut out = Vec::new();
    for candidate in order_ideals_of_size(d, n) {
        if out.len() >= max_results {
            break;
        }
        if is_independent_mod_ideal(theta, &candidate.to_vec())? {
            out.push(candidate);
        }
    }
    Ok(out)
}
