#![allow(dead_code)]

use std::collections::BTreeSet;

use escalier_core::linalg::rank;
use escalier_core::rational::{int, ratio};
use escalier_core::{
    evaluation_matrix, CartesianDescription, Exponent, FunctionalSet, MonomialOrder, OrderIdeal, Point, PointSet,
    Polynomial, Rational,
};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn e(v: &[u32]) -> Exponent {
    Exponent::new(v.to_vec())
}

pub fn ideal(d: usize, v: &[&[u32]]) -> OrderIdeal {
    OrderIdeal::new(d, v.iter().map(|x| e(x))).unwrap()
}

pub fn point(c: &[Rational]) -> Point {
    Point::new(c.to_vec())
}

pub fn x(d: usize, i: usize) -> Polynomial {
    Polynomial::variable(d, i - 1)
}

pub fn c(d: usize, v: i64) -> Polynomial {
    Polynomial::constant(d, int(v))
}

/// Eight conditions at three points in three variables.
pub fn three_site_conditions() -> FunctionalSet {
    let o = Point::from_ints(&[0, 0, 0]);
    FunctionalSet::from_raw(
        3,
        vec![
            (o, vec![e(&[0, 0, 0]), e(&[0, 0, 1]), e(&[0, 1, 0]), e(&[1, 0, 0]), e(&[1, 0, 1])]),
            (Point::from_ints(&[1, 0, 0]), vec![e(&[0, 0, 0]), e(&[0, 0, 1])]),
            (Point::from_ints(&[0, 0, 1]), vec![e(&[0, 0, 0])]),
        ],
    )
    .unwrap()
}

pub fn three_site_escalier() -> OrderIdeal {
    // 1, x1, x1^2, x2, x3, x3^2, x1x3, x1^2x3
    ideal(
        3,
        &[&[0, 0, 0], &[1, 0, 0], &[2, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 2], &[1, 0, 1], &[2, 0, 1]],
    )
}

pub fn grid_points() -> PointSet {
    PointSet::new(
        2,
        vec![
            point(&[ratio(23, 10), ratio(6, 5)]),
            point(&[ratio(47, 10), ratio(6, 5)]),
            point(&[ratio(3, 2), ratio(6, 5)]),
            point(&[ratio(23, 10), ratio(1, 5)]),
        ],
    )
    .unwrap()
}

pub fn grid_lower_set() -> OrderIdeal {
    ideal(2, &[&[0, 0], &[1, 0], &[2, 0], &[0, 1]])
}

pub fn four_points() -> PointSet {
    PointSet::new(
        2,
        vec![
            point(&[int(0), int(0)]),
            point(&[ratio(11, 10), ratio(-1, 10)]),
            point(&[ratio(1, 10), ratio(9, 10)]),
            point(&[int(1), int(1)]),
        ],
    )
    .unwrap()
}

/// The universal Gröbner basis of the four-point family in dimension `d`.
pub fn xi_family_gb(d: usize) -> BTreeSet<Polynomial> {
    let mut gb = BTreeSet::from([
        &x(d, 1) * &(&x(d, 1) - &c(d, 1)),
        &x(d, 2) * &(&x(d, 2) - &c(d, 1)),
        &x(d, 3) * &(&x(d, 3) - &c(d, 1)),
        &x(d, 1) * &x(d, 2),
        &x(d, 2) * &x(d, 3),
        &(&x(d, 3) - &c(d, 1)) * &x(d, 1),
    ]);
    gb.extend((4..=d).map(|i| x(d, i)));
    gb
}

pub const POOL: [(i64, i64); 5] = [(0, 1), (1, 1), (2, 1), (-1, 1), (1, 2)];

pub fn pool_value<R: Rng>(rng: &mut R, pool: &[(i64, i64)]) -> Rational {
    let (p, q) = pool[rng.random_range(0..pool.len())];
    ratio(p, q)
}

/// Up to `n` distinct points with coordinates drawn from `pool`.
pub fn random_point_set<R: Rng>(rng: &mut R, d: usize, n: usize, pool: &[(i64, i64)]) -> PointSet {
    let mut seen = BTreeSet::new();
    let mut points = Vec::new();
    let capacity = pool.len().pow(d as u32);
    let target = n.min(capacity);
    while points.len() < target {
        let p = Point::new((0..d).map(|_| pool_value(rng, pool)).collect());
        if seen.insert(p.clone()) {
            points.push(p);
        }
    }
    PointSet::new(d, points).unwrap()
}

pub fn random_lower_set<R: Rng>(rng: &mut R, d: usize, size: usize) -> OrderIdeal {
    let mut o = OrderIdeal::one(d);
    while o.len() < size {
        let corners = o.corner();
        let pick = corners[rng.random_range(0..corners.len())].clone();
        o = OrderIdeal::new(d, o.iter().cloned().chain([pick])).unwrap();
    }
    o
}

/// Random functional set with at most `max_conditions` conditions.
pub fn random_functional_set<R: Rng>(rng: &mut R, d: usize, max_conditions: usize) -> FunctionalSet {
    let sites = rng.random_range(1..=3usize);
    let pts = random_point_set(rng, d, sites, &POOL);
    let mut budget = max_conditions;
    let mut raw = Vec::new();
    for (k, p) in pts.points().iter().enumerate() {
        let remaining_sites = pts.len() - k - 1;
        let max_here = (budget - remaining_sites).clamp(1, 3);
        let size = rng.random_range(1..=max_here);
        budget -= size;
        raw.push((p.clone(), random_lower_set(rng, d, size).to_vec()));
    }
    FunctionalSet::from_raw(d, raw).unwrap()
}

pub fn random_cartesian<R: Rng>(rng: &mut R, d: usize, size: usize) -> CartesianDescription {
    let a = random_lower_set(rng, d, size);
    let values = (0..d)
        .map(|axis| {
            let need = a.max_along(axis).unwrap() as usize + 1;
            let mut pool: Vec<Rational> = (-6..=6).flat_map(|p| [ratio(p, 1), ratio(p, 3)]).collect();
            pool.sort();
            pool.dedup();
            pool.shuffle(rng);
            pool.truncate(need);
            pool
        })
        .collect();
    CartesianDescription::new(a, values).unwrap()
}

/// Éscalier straight from its definition: walking all monomials of degree
/// `< n` in increasing order, a monomial belongs to the éscalier iff it is
/// independent of all smaller monomials modulo the ideal.
pub fn brute_force_escalier(theta: &FunctionalSet, order: &MonomialOrder) -> BTreeSet<Exponent> {
    let n = theta.len();
    let d = theta.dimension();
    let mut monomials: Vec<Exponent> = Exponent::new(vec![(n - 1) as u32; d])
        .divisor_box()
        .into_iter()
        .filter(|t| t.degree() < n as u64)
        .collect();
    monomials.sort_by(|a, b| order.cmp(a, b));
    let mut out = BTreeSet::new();
    let mut prefix: Vec<Exponent> = Vec::new();
    let mut current_rank = 0;
    for t in monomials {
        prefix.push(t.clone());
        let r = rank(&evaluation_matrix(theta, &prefix).unwrap());
        if r > current_rank {
            current_rank = r;
            out.insert(t);
        }
        if current_rank == n {
            break;
        }
    }
    out
}

/// Solves the square system `m * y = rhs` by Gauss–Jordan elimination.
pub fn solve(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Vec<Rational> {
    use num_traits::Zero;
    let n = rhs.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("invertible");
        m.swap(col, piv);
        rhs.swap(col, piv);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        rhs[col] *= &inv;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let row = m[col].clone();
                for (a, b) in m[r].iter_mut().zip(&row) {
                    *a -= &f * b;
                }
                let rc = rhs[col].clone();
                rhs[r] -= &f * rc;
            }
        }
    }
    rhs
}

/// Normal form computed by interpolation: the unique polynomial supported on
/// `basis` taking the same values as `f` under every condition.
pub fn interpolated_normal_form(theta: &FunctionalSet, basis: &OrderIdeal, f: &Polynomial) -> Polynomial {
    let cols = basis.to_vec();
    let m = evaluation_matrix(theta, &cols).unwrap();
    let y = solve(m, theta.evaluate(f).unwrap());
    Polynomial::from_terms(theta.dimension(), cols.into_iter().zip(y)).unwrap()
}

pub fn random_polynomial<R: Rng>(rng: &mut R, d: usize, terms: usize, max_exp: u32) -> Polynomial {
    Polynomial::from_terms(
        d,
        (0..terms).map(|_| {
            let exp = Exponent::new((0..d).map(|_| rng.random_range(0..=max_exp)).collect());
            (exp, ratio(rng.random_range(-5..=5), rng.random_range(1..=3)))
        }),
    )
    .unwrap()
}
