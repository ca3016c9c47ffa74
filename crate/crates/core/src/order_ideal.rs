//! Lower sets of exponents (order ideals of monomials) and their corners.

use std::collections::BTreeSet;

use crate::error::{check_dim, Error, Result};
use crate::exponent::Exponent;

/// A finite divisor-closed set of exponents in `N_0^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal {
    dimension: usize,
    exponents: BTreeSet<Exponent>,
}

impl OrderIdeal {
    pub fn new<I: IntoIterator<Item = Exponent>>(dimension: usize, exponents: I) -> Result<Self> {
        let exponents: BTreeSet<Exponent> = exponents.into_iter().collect();
        for e in &exponents {
            check_dim(dimension, e.dimension())?;
        }
        if !closed_under_division(&exponents) {
            return Err(Error::NotLower);
        }
        Ok(OrderIdeal { dimension, exponents })
    }

    pub(crate) fn new_unchecked(dimension: usize, exponents: BTreeSet<Exponent>) -> Self {
        debug_assert!(closed_under_division(&exponents));
        OrderIdeal { dimension, exponents }
    }

    /// `{1}` in dimension `d`.
    pub fn one(dimension: usize) -> Self {
        Self::new_unchecked(dimension, BTreeSet::from([Exponent::zero(dimension)]))
    }

    /// The full box `{0, ..., bound}^d`.
    pub fn full_grid(dimension: usize, bound: u32) -> Self {
        Self::new_unchecked(dimension, Exponent::new(vec![bound; dimension]).divisor_box().into_iter().collect())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        self.exponents.contains(e)
    }

    /// Members in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &Exponent> {
        self.exponents.iter()
    }

    pub fn as_set(&self) -> &BTreeSet<Exponent> {
        &self.exponents
    }

    pub fn to_vec(&self) -> Vec<Exponent> {
        self.exponents.iter().cloned().collect()
    }

    /// `C[O] = { t not in O : x_i | t implies t / x_i in O }`, in lexicographic order.
    pub fn corner(&self) -> Vec<Exponent> {
        let mut candidates = BTreeSet::from([Exponent::zero(self.dimension)]);
        for e in &self.exponents {
            candidates.extend((0..self.dimension).map(|i| e.bump(i)));
        }
        candidates
            .into_iter()
            .filter(|t| !self.contains(t))
            .filter(|t| (0..self.dimension).all(|i| t.lower(i).is_none_or(|s| self.contains(&s))))
            .collect()
    }

    /// Extends by one corner element; the result is again an order ideal.
    pub fn with_corner(&self, corner: &Exponent) -> Self {
        let mut exponents = self.exponents.clone();
        exponents.insert(corner.clone());
        Self::new_unchecked(self.dimension, exponents)
    }

    pub fn max_along(&self, axis: usize) -> Option<u32> {
        self.exponents.iter().map(|e| e.entries()[axis]).max()
    }
}

impl<'a> IntoIterator for &'a OrderIdeal {
    type Item = &'a Exponent;
    type IntoIter = std::collections::btree_set::Iter<'a, Exponent>;

    fn into_iter(self) -> Self::IntoIter {
        self.exponents.iter()
    }
}

fn closed_under_division(set: &BTreeSet<Exponent>) -> bool {
    // Checking the immediate divisors suffices by induction on degree.
    set.iter().all(|e| (0..e.dimension()).all(|i| e.lower(i).is_none_or(|s| set.contains(&s))))
}

/// Whether a finite exponent set is lower (divisor-closed).
pub fn is_lower_set(set: &[Exponent]) -> Result<bool> {
    if let Some(first) = set.first() {
        for e in set {
            check_dim(first.dimension(), e.dimension())?;
        }
    }
    Ok(closed_under_division(&set.iter().cloned().collect()))
}

/// Every order ideal of cardinality `size` in dimension `dimension`, in
/// canonical order. Grown breadth-first by adding corners, deduplicated on
/// the sorted member list.
pub fn order_ideals_of_size(dimension: usize, size: usize) -> Vec<OrderIdeal> {
    if size == 0 {
        return vec![OrderIdeal::new_unchecked(dimension, BTreeSet::new())];
    }
    let mut level: BTreeSet<OrderIdeal> = BTreeSet::from([OrderIdeal::one(dimension)]);
    for _ in 1..size {
        level = level
            .iter()
            .flat_map(|o| o.corner().into_iter().map(move |c| o.with_corner(&c)))
            .collect();
    }
    level.into_iter().collect()
}
