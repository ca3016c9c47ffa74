//! Monomial orders realized as integer weight matrices.
//!
//! `x^a` precedes `x^b` iff the vector `M a` is lexicographically smaller than
//! `M b`. A matrix defines a monomial order when it has full column rank and
//! the topmost nonzero entry of every column is positive.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{check_dim, Error, Result};
use crate::exponent::Exponent;
use crate::linalg;
use crate::rational::int;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    dimension: usize,
    matrix: Vec<Vec<i64>>,
    name: Option<String>,
}

/// Named order constructors. Permutations and indices are 1-based; the first
/// variable of a permutation is the greatest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex(Vec<usize>),
    Grlex(Vec<usize>),
    Grevlex,
    /// Elimination order for `x_i`, realized as [`MonomialOrder::lex_from`]`(i)`.
    Elim(usize),
}

impl MonomialOrder {
    /// Validates and wraps a weight matrix.
    pub fn from_matrix(matrix: Vec<Vec<i64>>, name: Option<String>) -> Result<Self> {
        let dimension = matrix.first().map_or(0, Vec::len);
        if dimension == 0 {
            return Err(Error::InvalidOrder("empty matrix".into()));
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != dimension) {
            return Err(Error::InvalidOrder(format!(
                "ragged matrix: row of length {} in dimension {dimension}",
                row.len()
            )));
        }
        for col in 0..dimension {
            match matrix.iter().map(|r| r[col]).find(|&x| x != 0) {
                Some(x) if x > 0 => {}
                _ => {
                    return Err(Error::InvalidOrder(format!(
                        "column {} has no positive leading entry",
                        col + 1
                    )))
                }
            }
        }
        let rows: Vec<_> = matrix.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let rank = linalg::rank(&rows);
        if rank != dimension {
            return Err(Error::InvalidOrder(format!("matrix rank {rank} < {dimension}")));
        }
        Ok(MonomialOrder { dimension, matrix, name })
    }

    pub fn named(kind: &OrderKind, dimension: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::ZeroDimension);
        }
        let unit = |v: usize| -> Vec<i64> {
            let mut r = vec![0; dimension];
            r[v - 1] = 1;
            r
        };
        let (matrix, name) = match kind {
            OrderKind::Lex(perm) => {
                check_permutation(perm, dimension)?;
                (perm.iter().map(|&v| unit(v)).collect(), format!("lex:{}", join(perm)))
            }
            OrderKind::Grlex(perm) => {
                check_permutation(perm, dimension)?;
                let mut m = vec![vec![1; dimension]];
                m.extend(perm[..dimension - 1].iter().map(|&v| unit(v)));
                (m, format!("grlex:{}", join(perm)))
            }
            OrderKind::Grevlex => {
                let mut m = vec![vec![1; dimension]];
                m.extend((2..=dimension).rev().map(|v| unit(v).into_iter().map(|x| -x).collect()));
                (m, "grevlex".to_string())
            }
            OrderKind::Elim(i) => {
                let lex = Self::lex_from(*i, dimension)?;
                (lex.matrix, format!("elim:{i}"))
            }
        };
        Self::from_matrix(matrix, Some(name))
    }

    /// Lexicographic order with `x_i > x_{i+1} > ... > x_d > x_1 > ... > x_{i-1}`.
    /// It is an elimination order for `x_i`.
    pub fn lex_from(i: usize, dimension: usize) -> Result<Self> {
        if i == 0 || i > dimension {
            return Err(Error::InvalidIndex { index: i, dimension });
        }
        let perm: Vec<usize> = (i..=dimension).chain(1..i).collect();
        Self::named(&OrderKind::Lex(perm), dimension)
    }

    pub fn lex(dimension: usize) -> Self {
        Self::lex_from(1, dimension).expect("dimension >= 1")
    }

    pub fn grevlex(dimension: usize) -> Self {
        Self::named(&OrderKind::Grevlex, dimension).expect("dimension >= 1")
    }

    /// Parses the order mini-language: `lex:2,3,1`, `grlex:1,2`, `grevlex`,
    /// `elim:i` or `matrix:[[1,1],[0,1]]`. A bare `lex` or `grlex` uses the
    /// identity permutation.
    pub fn parse(spec: &str, dimension: usize) -> Result<Self> {
        let spec = spec.trim();
        let (head, tail) = match spec.split_once(':') {
            Some((h, t)) => (h.trim(), Some(t.trim())),
            None => (spec, None),
        };
        let perm = |t: Option<&str>| -> Result<Vec<usize>> {
            let Some(t) = t else {
                return Ok((1..=dimension).collect());
            };
            t.split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index {s:?}"))))
                .collect()
        };
        match head {
            "lex" => Self::named(&OrderKind::Lex(perm(tail)?), dimension),
            "grlex" => Self::named(&OrderKind::Grlex(perm(tail)?), dimension),
            "grevlex" if tail.is_none() => Self::grevlex_checked(dimension),
            "elim" => {
                let t = tail.ok_or_else(|| Error::Parse("elim needs an index".into()))?;
                let p = perm(Some(t))?;
                match p.as_slice() {
                    [i] => Self::named(&OrderKind::Elim(*i), dimension),
                    _ => Err(Error::Parse("elim takes a single index".into())),
                }
            }
            "matrix" => {
                let t = tail.ok_or_else(|| Error::Parse("matrix order needs a matrix".into()))?;
                let m: Vec<Vec<i64>> =
                    serde_json::from_str(t).map_err(|e| Error::Parse(format!("bad matrix: {e}")))?;
                let order = Self::from_matrix(m, None)?;
                check_dim(dimension, order.dimension)?;
                Ok(order)
            }
            _ => Err(Error::Parse(format!("unknown order {spec:?}"))),
        }
    }

    fn grevlex_checked(dimension: usize) -> Result<Self> {
        Self::named(&OrderKind::Grevlex, dimension)
    }

    /// A random valid matrix order. Entries are small integers; the first row
    /// is nonnegative and may contain zeros so that lex-like orders occur too.
    pub fn random<R: Rng + ?Sized>(dimension: usize, rng: &mut R) -> Self {
        assert!(dimension > 0);
        loop {
            let top = if rng.random_bool(0.3) { 1 } else { 3 };
            let mut m = vec![(0..dimension).map(|_| rng.random_range(0..=top)).collect::<Vec<i64>>()];
            for _ in 1..dimension {
                m.push((0..dimension).map(|_| rng.random_range(-3..=3)).collect());
            }
            if let Ok(order) = Self::from_matrix(m, None) {
                return order;
            }
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Name if present, otherwise the `matrix:` spec.
    pub fn tag(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!("matrix:{}", serde_json::to_string(&self.matrix).expect("integers serialize")),
        }
    }

    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Result<Ordering> {
        check_dim(self.dimension, a.dimension())?;
        check_dim(self.dimension, b.dimension())?;
        Ok(self.cmp(a, b))
    }

    /// Comparison without the arity check.
    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        for row in &self.matrix {
            let dot = |e: &Exponent| -> i128 {
                row.iter().zip(e.entries()).map(|(&w, &x)| w as i128 * x as i128).sum()
            };
            match dot(a).cmp(&dot(b)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// The greatest exponent of a nonempty collection.
    pub fn max<'a, I: IntoIterator<Item = &'a Exponent>>(&self, items: I) -> Option<&'a Exponent> {
        items.into_iter().max_by(|a, b| self.cmp(a, b))
    }

    pub fn min<'a, I: IntoIterator<Item = &'a Exponent>>(&self, items: I) -> Option<&'a Exponent> {
        items.into_iter().min_by(|a, b| self.cmp(a, b))
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialOrder({})", self.tag())
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = s.split_once(':').unwrap_or((s, ""));
        let list = || -> Result<Vec<usize>> {
            tail.split(',')
                .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad index {x:?}"))))
                .collect()
        };
        match head.trim() {
            "lex" => Ok(OrderKind::Lex(list()?)),
            "grlex" => Ok(OrderKind::Grlex(list()?)),
            "grevlex" => Ok(OrderKind::Grevlex),
            "elim" => Ok(OrderKind::Elim(
                tail.trim().parse().map_err(|_| Error::Parse(format!("bad index {tail:?}")))?,
            )),
            _ => Err(Error::Parse(format!("unknown order kind {s:?}"))),
        }
    }
}

fn check_permutation(perm: &[usize], dimension: usize) -> Result<()> {
    let mut seen = vec![false; dimension];
    if perm.len() != dimension {
        return Err(Error::InvalidOrder(format!(
            "permutation of length {} in dimension {dimension}",
            perm.len()
        )));
    }
    for &v in perm {
        if v == 0 || v > dimension || std::mem::replace(&mut seen[v - 1], true) {
            return Err(Error::InvalidOrder(format!("{} is not a permutation of 1..={dimension}", join(perm))));
        }
    }
    Ok(())
}

fn join(perm: &[usize]) -> String {
    perm.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}
