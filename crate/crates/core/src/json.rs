//! JSON documents exchanged by the command-line tool.
//!
//! Exponents are integer arrays, rationals are `"p/q"` strings (decimals are
//! accepted on input), polynomials are lists of `{"exp", "coef"}` terms in
//! lexicographic exponent order. Field order is fixed by declaration order,
//! so identical values always serialize to identical bytes.

use serde::{Deserialize, Serialize};

use crate::cartesian::{CartesianDescription, Recognition, SliceFamily};
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::functionals::{FunctionalSet, Point, PointSet};
use crate::moeller::EscalierResult;
use crate::order::MonomialOrder;
use crate::order_ideal::OrderIdeal;
use crate::polynomial::Polynomial;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::uniqueness::UniquenessVerdict;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    pub exp: Exponent,
    pub coef: String,
}

pub type PolynomialDoc = Vec<TermDoc>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointSetDoc {
    pub dimension: usize,
    pub points: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SiteDoc {
    pub point: Vec<String>,
    pub derivatives: Vec<Exponent>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FunctionalSetDoc {
    pub dimension: usize,
    pub sites: Vec<SiteDoc>,
}

/// Either kind of interpolation-condition file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConditionsDoc {
    Functionals(FunctionalSetDoc),
    Points(PointSetDoc),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EscalierDoc {
    pub order: OrderDoc,
    pub escalier: Vec<Exponent>,
    pub corners: Vec<Exponent>,
    pub groebner: Vec<PolynomialDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub order_a: String,
    pub order_b: String,
    pub escalier_a: Vec<Exponent>,
    pub escalier_b: Vec<Exponent>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub unique: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Exponent>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub universal_gb: Option<Vec<PolynomialDoc>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CartesianDescriptionDoc {
    pub lower_set: Vec<Exponent>,
    pub node_values: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RecognitionDoc {
    pub cartesian: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_axis: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<CartesianDescriptionDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceDoc {
    pub value: String,
    pub points: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceFamilyDoc {
    pub axis: usize,
    pub slices: Vec<SliceDoc>,
}

fn rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn parse_all(values: &[String]) -> Result<Vec<Rational>> {
    values.iter().map(|s| parse_rational(s)).collect()
}

fn dimension_of(exps: &[Exponent]) -> Result<usize> {
    exps.first()
        .map(Exponent::dimension)
        .ok_or_else(|| Error::Parse("cannot infer dimension from an empty exponent list".into()))
}

pub fn polynomial_doc(p: &Polynomial) -> PolynomialDoc {
    p.terms().map(|(e, c)| TermDoc { exp: e.clone(), coef: format_rational(c) }).collect()
}

pub fn polynomial_from_doc(doc: &[TermDoc], dimension: usize) -> Result<Polynomial> {
    let terms = doc
        .iter()
        .map(|t| Ok((t.exp.clone(), parse_rational(&t.coef)?)))
        .collect::<Result<Vec<_>>>()?;
    Polynomial::from_terms(dimension, terms)
}

pub fn point_set_doc(xi: &PointSet) -> PointSetDoc {
    PointSetDoc {
        dimension: xi.dimension(),
        points: xi.points().iter().map(|p| rationals(p.coordinates())).collect(),
    }
}

pub fn point_set_from_doc(doc: &PointSetDoc) -> Result<PointSet> {
    let points = doc.points.iter().map(|c| Ok(Point::new(parse_all(c)?))).collect::<Result<Vec<_>>>()?;
    PointSet::new(doc.dimension, points)
}

pub fn functional_set_doc(theta: &FunctionalSet) -> FunctionalSetDoc {
    FunctionalSetDoc {
        dimension: theta.dimension(),
        sites: theta
            .sites()
            .iter()
            .map(|s| SiteDoc { point: rationals(s.point.coordinates()), derivatives: s.derivatives.to_vec() })
            .collect(),
    }
}

pub fn functional_set_from_doc(doc: &FunctionalSetDoc) -> Result<FunctionalSet> {
    let raw = doc
        .sites
        .iter()
        .map(|s| Ok((Point::new(parse_all(&s.point)?), s.derivatives.clone())))
        .collect::<Result<Vec<_>>>()?;
    FunctionalSet::from_raw(doc.dimension, raw)
}

pub fn conditions_from_doc(doc: &ConditionsDoc) -> Result<FunctionalSet> {
    match doc {
        ConditionsDoc::Functionals(f) => functional_set_from_doc(f),
        ConditionsDoc::Points(p) => Ok(FunctionalSet::from_points(&point_set_from_doc(p)?)),
    }
}

pub fn order_doc(order: &MonomialOrder) -> OrderDoc {
    OrderDoc { name: order.name().map(str::to_owned), matrix: order.matrix().to_vec() }
}

pub fn order_from_doc(doc: &OrderDoc) -> Result<MonomialOrder> {
    MonomialOrder::from_matrix(doc.matrix.clone(), doc.name.clone())
}

pub fn escalier_doc(r: &EscalierResult) -> EscalierDoc {
    EscalierDoc {
        order: order_doc(&r.order),
        escalier: r.escalier.to_vec(),
        corners: r.corners.clone(),
        groebner: r.groebner.iter().map(polynomial_doc).collect(),
    }
}

pub fn verdict_doc(v: &UniquenessVerdict) -> VerdictDoc {
    match v {
        UniquenessVerdict::Unique { basis, universal_gb } => VerdictDoc {
            unique: true,
            basis: Some(basis.to_vec()),
            witness: None,
            universal_gb: Some(universal_gb.iter().map(polynomial_doc).collect()),
        },
        UniquenessVerdict::NotUnique(w) => VerdictDoc {
            unique: false,
            basis: None,
            witness: Some(WitnessDoc {
                order_a: w.order_a.tag(),
                order_b: w.order_b.tag(),
                escalier_a: w.escalier_a.to_vec(),
                escalier_b: w.escalier_b.to_vec(),
            }),
            universal_gb: None,
        },
    }
}

pub fn description_doc(desc: &CartesianDescription) -> CartesianDescriptionDoc {
    CartesianDescriptionDoc {
        lower_set: desc.lower_set().to_vec(),
        node_values: desc.node_values().iter().map(|v| rationals(v)).collect(),
    }
}

pub fn description_from_doc(doc: &CartesianDescriptionDoc) -> Result<CartesianDescription> {
    let d = dimension_of(&doc.lower_set)?;
    let lower = OrderIdeal::new(d, doc.lower_set.iter().cloned())?;
    let values = doc.node_values.iter().map(|v| parse_all(v)).collect::<Result<Vec<_>>>()?;
    CartesianDescription::new(lower, values)
}

pub fn recognition_doc(r: &Recognition) -> RecognitionDoc {
    match r {
        Recognition::Cartesian(desc) => {
            RecognitionDoc { cartesian: true, failing_axis: None, description: Some(description_doc(desc)) }
        }
        Recognition::NotCartesian { failing_axis } => {
            RecognitionDoc { cartesian: false, failing_axis: Some(*failing_axis), description: None }
        }
    }
}

pub fn slice_family_doc(f: &SliceFamily) -> SliceFamilyDoc {
    SliceFamilyDoc {
        axis: f.axis,
        slices: f
            .slices
            .iter()
            .map(|s| SliceDoc {
                value: format_rational(&s.value),
                points: s.projection.points().iter().map(|p| rationals(p.coordinates())).collect(),
            })
            .collect(),
    }
}

pub fn order_ideal_from_list(exps: &[Exponent]) -> Result<OrderIdeal> {
    OrderIdeal::new(dimension_of(exps)?, exps.iter().cloned())
}
