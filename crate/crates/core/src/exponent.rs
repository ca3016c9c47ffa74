use std::fmt;

use serde::{Deserialize, Serialize};

/// Multi-index `(a_1, ..., a_d)` of a monomial `x_1^a_1 ... x_d^a_d`.
///
/// The derived `Ord` is plain lexicographic comparison of the entries. It is
/// only used for canonical (deterministic) enumeration and serialization;
/// monomial orders live in [`crate::order`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zero(dimension: usize) -> Self {
        Exponent(vec![0; dimension])
    }

    /// The exponent of the variable `x_{index+1}` (0-based index).
    pub fn unit(dimension: usize, index: usize) -> Self {
        let mut e = vec![0; dimension];
        e[index] = 1;
        Exponent(e)
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Product order: `self <= other` componentwise, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` when `other` does not divide `self`.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        if !other.divides(self) {
            return None;
        }
        Some(Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Multiply by `x_{index+1}`.
    pub fn bump(&self, index: usize) -> Exponent {
        let mut e = self.0.clone();
        e[index] += 1;
        Exponent(e)
    }

    /// Divide by `x_{index+1}` if possible.
    pub fn lower(&self, index: usize) -> Option<Exponent> {
        if self.0[index] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[index] -= 1;
        Some(Exponent(e))
    }

    /// Drops coordinate `index`.
    pub fn without(&self, index: usize) -> Exponent {
        let mut e = self.0.clone();
        e.remove(index);
        Exponent(e)
    }

    /// Inserts `value` at coordinate `index`.
    pub fn with_inserted(&self, index: usize, value: u32) -> Exponent {
        let mut e = self.0.clone();
        e.insert(index, value);
        Exponent(e)
    }

    /// All `b` with `0 <= b <= self`, in lexicographic order.
    pub fn divisor_box(&self) -> Vec<Exponent> {
        let mut out = vec![Vec::with_capacity(self.0.len())];
        for &a in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=a).map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(Exponent).collect()
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl<const N: usize> From<[u32; N]> for Exponent {
    fn from(v: [u32; N]) -> Self {
        Exponent(v.to_vec())
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Monomial notation, e.g. `x1^2*x3`, or `1` for the zero exponent.
impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if a == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, a)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
