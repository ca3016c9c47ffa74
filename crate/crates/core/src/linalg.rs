//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Rank of a dense rational matrix given by rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Matrix = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][col].recip();
        for v in m[r].iter_mut().skip(col) {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *v -= &factor * p;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Transpose of a rectangular matrix.
pub fn transpose(rows: &[Vec<Rational>]) -> Matrix {
    let ncols = rows.first().map_or(0, Vec::len);
    (0..ncols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Outcome of reducing a vector against an [`EchelonBasis`].
pub enum Reduction {
    /// The vector was independent and has been appended as basis element `index`.
    Inserted { index: usize },
    /// The vector equals `sum_j coeffs[j] * v_j` over the inserted vectors.
    Dependent { coeffs: Vec<Rational> },
}

/// Incrementally grown echelon form that remembers, for every stored row,
/// its expression in terms of the original inserted vectors.
///
/// Row `k` has a unit pivot and is zero at the pivots of rows `0..k`, so a
/// single sweep in insertion order reduces any vector completely.
#[derive(Default)]
pub struct EchelonBasis {
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    // combos[k][j]: coefficient of inserted vector j in row k
    combos: Vec<Vec<Rational>>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v`; inserts it when independent, otherwise returns the dependence.
    pub fn insert_or_express(&mut self, mut v: Vec<Rational>) -> Reduction {
        let n = self.rows.len();
        // Negated running combination: v_current = v - sum(acc[j] * v_j).
        let mut acc = vec![Rational::zero(); n];
        for k in 0..n {
            let p = self.pivots[k];
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, y) in v.iter_mut().zip(&self.rows[k]) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
            for (a, c) in acc.iter_mut().zip(&self.combos[k]) {
                if !c.is_zero() {
                    *a += &factor * c;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => Reduction::Dependent { coeffs: acc },
            Some(p) => {
                let inv = v[p].recip();
                for x in v.iter_mut() {
                    *x *= &inv;
                }
                // new row = (v_new - sum acc[j] v_j) / pivot
                let mut combo: Vec<Rational> = acc.into_iter().map(|a| -a * &inv).collect();
                combo.push(inv.clone());
                for c in &mut self.combos {
                    c.push(Rational::zero());
                }
                self.rows.push(v);
                self.pivots.push(p);
                self.combos.push(combo);
                Reduction::Inserted { index: n }
            }
        }
    }
}
