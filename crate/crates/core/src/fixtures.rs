//! The two sextics shipped with the crate, plus small sanity curves.

use crate::pipeline::parse_curve;
use crate::QBiPoly;

pub const C_TEXT: &str = include_str!("../curves/C.poly");
pub const CPRIME_TEXT: &str = include_str!("../curves/Cprime.poly");

/// The sextic with abelian fundamental group.
pub fn curve_c() -> QBiPoly {
    parse_curve(C_TEXT).expect("fixture C parses")
}

/// The sextic whose fundamental group has a dihedral quotient of order 10.
pub fn curve_cprime() -> QBiPoly {
    parse_curve(CPRIME_TEXT).expect("fixture C' parses")
}

/// Smooth conic `x^2 + y^2 - 1`.
pub fn conic() -> QBiPoly {
    parse_curve("x^2 + y^2 - 1").unwrap()
}
