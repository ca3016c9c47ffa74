//! Instances shared by the benchmarks.

use escalier_core::{Exponent, FunctionalSet, Point, PointSet};

/// Conditions at the origin, `(1,0,0)` and `(0,0,1)` in three variables,
/// with derivative sets of sizes 5, 2 and 1.
pub fn three_site_conditions() -> FunctionalSet {
    let e = |v: [u32; 3]| Exponent::from(v);
    FunctionalSet::from_raw(
        3,
        vec![
            (Point::from_ints(&[0, 0, 0]), vec![e([0, 0, 0]), e([0, 0, 1]), e([0, 1, 0]), e([1, 0, 0]), e([1, 0, 1])]),
            (Point::from_ints(&[1, 0, 0]), vec![e([0, 0, 0]), e([0, 0, 1])]),
            (Point::from_ints(&[0, 0, 1]), vec![e([0, 0, 0])]),
        ],
    )
    .expect("valid conditions")
}

/// `n` points on the grid `{0..side}^d`, taken in a scrambled but fixed order.
pub fn grid_points(d: usize, side: i64, n: usize) -> PointSet {
    let total = (side as usize).pow(d as u32);
    let points = (0..total)
        .map(|k| (k * 7919) % total)
        .take(n)
        .map(|mut k| {
            let coords: Vec<i64> = (0..d)
                .map(|_| {
                    let c = (k % side as usize) as i64;
                    k /= side as usize;
                    c
                })
                .collect();
            Point::from_ints(&coords)
        })
        .collect();
    PointSet::new(d, points).expect("distinct grid points")
}
