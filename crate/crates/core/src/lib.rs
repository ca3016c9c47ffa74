//! Exact computation of Gröbner éscaliers and reduced Gröbner bases for
//! zero-dimensional ideals given by interpolation conditions, together with
//! criteria for a unique monomial order quotient basis and tools for
//! Cartesian point sets.
//!
//! All arithmetic is over the rationals, so every result is exact.
//!
//! ```
//! use escalier_core::{escalier, FunctionalSet, MonomialOrder, Point, PointSet};
//!
//! let xi = PointSet::new(1, vec![Point::from_ints(&[3])]).unwrap();
//! let r = escalier(&FunctionalSet::from_points(&xi), &MonomialOrder::lex(1)).unwrap();
//! assert_eq!(r.groebner[0].to_string(), "x1 - 3");
//! ```

pub mod cartesian;
pub mod error;
pub mod exponent;
pub mod functionals;
pub mod json;
pub mod linalg;
pub mod moeller;
pub mod order;
pub mod order_ideal;
pub mod polynomial;
pub mod rational;
pub mod uniqueness;

pub use cartesian::{
    build_cartesian, is_cartesian, lift, recognize, slice_lower_sets, slices, xi_family, CartesianDescription,
    Recognition, Slice, SliceFamily,
};
pub use error::{Error, Result};
pub use exponent::Exponent;
pub use functionals::{evaluate, evaluation_matrix, Functional, FunctionalSet, Point, PointSet, Site};
pub use moeller::{condition_rank, escalier, is_independent_mod_ideal, EscalierResult};
pub use order::{MonomialOrder, OrderKind};
pub use order_ideal::{is_lower_set, order_ideals_of_size, OrderIdeal};
pub use polynomial::Polynomial;
pub use rational::{format_rational, parse_rational, Rational};
pub use uniqueness::{
    corner_dependence_unique, elimination_escaliers, enumerate_quotient_bases, unique_quotient_basis,
    universal_groebner_basis, OracleLimit, UniquenessVerdict, Witness,
};

/// Normal form of `f` modulo the ideal behind `result`.
pub fn normal_form(result: &EscalierResult, f: &Polynomial) -> Result<Polynomial> {
    result.normal_form(f)
}

/// Leading monomial of a nonzero polynomial.
pub fn leading_monomial(order: &MonomialOrder, f: &Polynomial) -> Result<Exponent> {
    f.leading_monomial(order)
}

/// Corners of an order ideal.
pub fn corner(o: &OrderIdeal) -> Vec<Exponent> {
    o.corner()
}
