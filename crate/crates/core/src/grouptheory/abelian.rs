use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::snf::integer_invariants;
use super::word::GroupPresentation;

/// Invariant factors `d_1 | d_2 | ...` of an abelian group; `0` is a copy
/// of the integers. The trivial group has no factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    #[serde(serialize_with = "as_numbers")]
    pub factors: Vec<BigInt>,
}

fn as_numbers<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for d in v {
        match d.to_u64() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&d.to_string())?,
        }
    }
    seq.end()
}

impl AbelianInvariants {
    pub fn is_finite(&self) -> bool {
        self.factors.iter().all(|d| !d.is_zero())
    }

    /// Order if finite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.factors.iter().product())
    }

    pub fn as_u64(&self) -> Vec<u64> {
        self.factors.iter().map(|d| d.to_u64().unwrap_or(u64::MAX)).collect()
    }

    /// Divisibility chain check.
    pub fn is_chain(&self) -> bool {
        self.factors.windows(2).all(
            |w| {
                if w[1].is_zero() {
                    true
                } else {
                    !w[0].is_zero() && (&w[1] % &w[0]).is_zero()
                }
            },
        )
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> =
            self.factors.iter().map(|d| if d.is_zero() { "Z".to_string() } else { format!("Z/{d}") }).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Relator exponent-sum matrix.
pub fn relation_matrix(p: &GroupPresentation) -> Vec<Vec<BigInt>> {
    p.relators.iter().map(|r| r.exponent_sums(p.generators).into_iter().map(BigInt::from).collect()).collect()
}

/// Abelianization through the Smith normal form of the relation matrix.
pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    AbelianInvariants { factors: integer_invariants(&relation_matrix(p), p.generators) }
}
