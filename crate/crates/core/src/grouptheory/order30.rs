//! Identification of groups of order 30.
//!
//! Up to isomorphism there are four: `Z30`, `D30`, `D10 x Z3` and `S3 x Z5`.
//! Their abelianizations are `[30]`, `[2]`, `[6]` and `[10]`. Exactly `D30`
//! and `D10 x Z3` map onto `D10`; the quotient count is required to agree
//! with the abelianization.

use std::fmt;

use serde::Serialize;

use super::abelian::abelianization;
use super::coset::coset_table;
use super::finite::{find_epimorphisms, FiniteGroupTable};
use super::word::{FreeWord, GroupPresentation};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Order30 {
    Z30,
    D30,
    D10xZ3,
    S3xZ5,
}

impl fmt::Display for Order30 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Order30::Z30 => "Z/30",
            Order30::D30 => "D30",
            Order30::D10xZ3 => "D10 x Z/3",
            Order30::S3xZ5 => "S3 x Z/5",
        };
        write!(f, "{s}")
    }
}

/// Result of the identification together with the evidence used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Order30Verdict {
    pub group: Order30,
    pub abelianization: Vec<u64>,
    pub d10_quotients: usize,
}

/// Identify a group known to have order 30.
pub fn identify_order30(p: &GroupPresentation, max_cosets: usize) -> Result<Order30Verdict, Error> {
    let order = coset_table(p, max_cosets)?.order();
    if order != 30 {
        return Err(Error::InvalidInput(format!("group has order {order}, not 30")));
    }
    let ab = abelianization(p);
    let d10 = find_epimorphisms(p, &FiniteGroupTable::dihedral(10)).len();
    let a = ab.as_u64();
    let group = match (a.as_slice(), d10 > 0) {
        ([30], false) => Order30::Z30,
        ([2], true) => Order30::D30,
        ([6], true) => Order30::D10xZ3,
        ([10], false) => Order30::S3xZ5,
        _ => {
            return Err(Error::InvalidInput(format!(
                "inconsistent invariants for order 30: abelianization {ab}, {d10} D10 quotients"
            )))
        }
    };
    Ok(Order30Verdict { group, abelianization: a, d10_quotients: d10 })
}

/// Facts about a word `b` read off the coset table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub word: Vec<i32>,
    pub order: usize,
    pub fifth_power_central: bool,
}

/// Order of `b` and whether `b^5` is central.
pub fn check_witness(p: &GroupPresentation, b: &FreeWord, max_cosets: usize) -> Result<WitnessCheck, Error> {
    let t = coset_table(p, max_cosets)?;
    Ok(WitnessCheck {
        word: b.letters().to_vec(),
        order: t.element_order(b),
        fifth_power_central: t.is_central(&b.pow(5), p.generators),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_known_groups() {
        let z30 = GroupPresentation::from_lists(1, &[&[1; 30]]);
        assert_eq!(identify_order30(&z30, 1000).unwrap().group, Order30::Z30);
        // <r, s | r^15, s^2, (rs)^2>
        let d30 = GroupPresentation::from_lists(2, &[&[1; 15], &[2, 2], &[1, 2, 1, 2]]);
        let v = identify_order30(&d30, 1000).unwrap();
        assert_eq!((v.group, v.abelianization.clone()), (Order30::D30, vec![2]));
        // <a, b | a^2, a b a = b^4>
        let g = GroupPresentation::from_lists(2, &[&[1, 1], &[1, 2, 1, -2, -2, -2, -2]]);
        let v = identify_order30(&g, 10_000).unwrap();
        assert_eq!(v.group, Order30::D10xZ3);
        let w = check_witness(&g, &FreeWord::generator(2), 10_000).unwrap();
        assert_eq!(w.order, 15);
        assert!(w.fifth_power_central);
        let s3z5 = GroupPresentation::from_lists(
            3,
            &[&[1, 1], &[2, 2, 2], &[1, 2, 1, 2], &[3; 5], &[1, 3, -1, -3], &[2, 3, -2, -3]],
        );
        assert_eq!(identify_order30(&s3z5, 10_000).unwrap().group, Order30::S3xZ5);
        let six = GroupPresentation::from_lists(1, &[&[1; 6]]);
        assert!(identify_order30(&six, 100).is_err());
    }
}
