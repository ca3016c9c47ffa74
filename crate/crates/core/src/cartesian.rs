//! Cartesian point sets: construction from a lower set and node values,
//! hyperplane slices, and recognition through nested slices.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::functionals::{Point, PointSet};
use crate::order_ideal::OrderIdeal;
use crate::rational::{int, Rational};

/// A lower set `A` and, per axis, the distinct node values `y_i(0), y_i(1), ...`
/// that index it. The point set is `{(y_1(a_1), ..., y_d(a_d)) : a in A}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartesianDescription {
    lower_set: OrderIdeal,
    node_values: Vec<Vec<Rational>>,
}

impl CartesianDescription {
    pub fn new(lower_set: OrderIdeal, node_values: Vec<Vec<Rational>>) -> Result<Self> {
        let d = lower_set.dimension();
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        if lower_set.is_empty() {
            return Err(Error::InvalidDescription("empty lower set".into()));
        }
        if node_values.len() != d {
            return Err(Error::InvalidDescription(format!(
                "{} node value lists for dimension {d}",
                node_values.len()
            )));
        }
        for (axis, values) in node_values.iter().enumerate() {
            let needed = lower_set.max_along(axis).expect("nonempty") as usize + 1;
            if values.len() != needed {
                return Err(Error::InvalidDescription(format!(
                    "axis {} has {} node values, lower set needs {needed}",
                    axis + 1,
                    values.len()
                )));
            }
            if values.iter().collect::<BTreeSet<_>>().len() != values.len() {
                return Err(Error::InvalidDescription(format!("axis {} node values repeat", axis + 1)));
            }
        }
        Ok(CartesianDescription { lower_set, node_values })
    }

    pub fn lower_set(&self) -> &OrderIdeal {
        &self.lower_set
    }

    pub fn node_values(&self) -> &[Vec<Rational>] {
        &self.node_values
    }

    pub fn dimension(&self) -> usize {
        self.lower_set.dimension()
    }

    pub fn point_of(&self, alpha: &Exponent) -> Point {
        Point::new(
            alpha
                .entries()
                .iter()
                .zip(&self.node_values)
                .map(|(&a, ys)| ys[a as usize].clone())
                .collect(),
        )
    }
}

/// Points in lower-set (lexicographic) order.
pub fn build_cartesian(desc: &CartesianDescription) -> PointSet {
    let points = desc.lower_set.iter().map(|a| desc.point_of(a)).collect();
    PointSet::new(desc.dimension(), points).expect("injective node values give distinct points")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slice {
    /// The common coordinate along the slicing axis.
    pub value: Rational,
    /// Remaining coordinates of the points in the hyperplane.
    pub projection: PointSet,
}

/// Slices perpendicular to one axis, by descending cardinality and then
/// ascending coordinate value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceFamily {
    /// 1-based axis.
    pub axis: usize,
    pub slices: Vec<Slice>,
}

impl SliceFamily {
    /// Whether every slice contains the next one.
    pub fn is_nested(&self) -> bool {
        let sets: Vec<BTreeSet<Point>> = self.slices.iter().map(|s| s.projection.as_set()).collect();
        sets.windows(2).all(|w| w[1].is_subset(&w[0]))
    }
}

/// Groups the points of `xi` by their coordinate on `axis` (1-based).
pub fn slices(xi: &PointSet, axis: usize) -> Result<SliceFamily> {
    let d = xi.dimension();
    if d == 1 {
        return Err(Error::NoSlicesInDimensionOne);
    }
    if axis == 0 || axis > d {
        return Err(Error::InvalidIndex { index: axis, dimension: d });
    }
    let mut groups: BTreeMap<Rational, Vec<Point>> = BTreeMap::new();
    for p in xi.points() {
        groups.entry(p.coordinates()[axis - 1].clone()).or_default().push(p.without(axis - 1));
    }
    let mut slices: Vec<Slice> = groups
        .into_iter()
        .map(|(value, pts)| Slice {
            value,
            projection: PointSet::new(d - 1, pts).expect("distinct points project distinctly within a hyperplane"),
        })
        .collect();
    // stable sort keeps ascending value order among equal cardinalities
    slices.sort_by_key(|s| std::cmp::Reverse(s.projection.len()));
    Ok(SliceFamily { axis, slices })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Cartesian(CartesianDescription),
    /// First (1-based) axis whose slices are not nested.
    NotCartesian { failing_axis: usize },
}

/// Decides Cartesianness by slice nesting and, when it holds, recovers a
/// description by indexing every coordinate value with its slice rank.
pub fn recognize(xi: &PointSet) -> Recognition {
    let d = xi.dimension();
    let ranked_values: Vec<Vec<Rational>> = if d == 1 {
        let values: BTreeSet<Rational> = xi.points().iter().map(|p| p.coordinates()[0].clone()).collect();
        vec![values.into_iter().collect()]
    } else {
        let mut per_axis = Vec::with_capacity(d);
        for axis in 1..=d {
            let family = slices(xi, axis).expect("d >= 2 and axis in range");
            if !family.is_nested() {
                return Recognition::NotCartesian { failing_axis: axis };
            }
            per_axis.push(family.slices.into_iter().map(|s| s.value).collect());
        }
        per_axis
    };
    let rank_of: Vec<BTreeMap<&Rational, u32>> = ranked_values
        .iter()
        .map(|vs| vs.iter().enumerate().map(|(j, v)| (v, j as u32)).collect())
        .collect();
    let alphas = xi.points().iter().map(|p| {
        Exponent::new(p.coordinates().iter().zip(&rank_of).map(|(c, ranks)| ranks[c]).collect())
    });
    let lower_set = OrderIdeal::new(d, alphas).expect("nested slices index a lower set");
    let desc = CartesianDescription::new(lower_set, ranked_values.clone()).expect("every slice rank is used");
    Recognition::Cartesian(desc)
}

pub fn is_cartesian(xi: &PointSet) -> Option<CartesianDescription> {
    match recognize(xi) {
        Recognition::Cartesian(desc) => Some(desc),
        Recognition::NotCartesian { .. } => None,
    }
}

/// `A_{i,j}` for `j = 0..=max_i`: members of `A` with `a_i = j`, coordinate `i` dropped.
pub fn slice_lower_sets(desc: &CartesianDescription, axis: usize) -> Result<Vec<OrderIdeal>> {
    let d = desc.dimension();
    if d == 1 {
        return Err(Error::NoSlicesInDimensionOne);
    }
    if axis == 0 || axis > d {
        return Err(Error::InvalidIndex { index: axis, dimension: d });
    }
    let a = desc.lower_set();
    let top = a.max_along(axis - 1).expect("nonempty");
    (0..=top)
        .map(|j| {
            OrderIdeal::new(
                d - 1,
                a.iter().filter(|e| e.entries()[axis - 1] == j).map(|e| e.without(axis - 1)),
            )
        })
        .collect()
}

/// `A_{i,j} (+) j`: lifts a `(d-1)`-dimensional set back by inserting `j` at `axis`.
pub fn lift(set: &OrderIdeal, axis: usize, j: u32) -> BTreeSet<Exponent> {
    set.iter().map(|e| e.with_inserted(axis - 1, j)).collect()
}

/// The four-point family `{0, e_2, e_3, e_1 + e_3}` in dimension `d >= 3`:
/// not Cartesian, yet with a unique quotient basis.
pub fn xi_family(d: usize) -> Result<PointSet> {
    if d < 3 {
        return Err(Error::DimensionTooSmall { dimension: d, minimum: 3 });
    }
    let point = |ones: &[usize]| {
        let mut c = vec![int(0); d];
        for &i in ones {
            c[i] = int(1);
        }
        Point::new(c)
    };
    PointSet::new(d, vec![point(&[]), point(&[1]), point(&[2]), point(&[0, 2])])
}
