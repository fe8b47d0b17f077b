use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::expand::{puiseux_expansions, PuiseuxBranch};
use crate::{Error, QBiPoly};

/// Simple singularity label; `A(0)` is a smooth point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SingularityLabel {
    A(u32),
    Unsupported,
}

impl fmt::Display for SingularityLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityLabel::A(n) => write!(f, "A{n}"),
            SingularityLabel::Unsupported => write!(f, "unsupported"),
        }
    }
}

/// Local type of a curve point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularityType {
    pub label: SingularityLabel,
    /// Order of vanishing of the equation at the point.
    pub multiplicity: u32,
    pub branches: usize,
    /// `(i, j, k)`: branches `i` and `j` first differ at `x^k`.
    #[serde(serialize_with = "contacts_as_strings")]
    pub contact_orders: Vec<(usize, usize, BigRational)>,
    /// Intersection multiplicity of the vertical line with the curve at the
    /// point, i.e. the number of local strands of the vertical pencil.
    pub vertical_strands: u32,
}

fn contacts_as_strings<S: serde::Serializer>(v: &[(usize, usize, BigRational)], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (i, j, k) in v {
        seq.serialize_element(&(i, j, k.to_string()))?;
    }
    seq.end()
}

impl SingularityType {
    pub fn milnor_number(&self) -> Option<u32> {
        match self.label {
            SingularityLabel::A(n) => Some(n),
            SingularityLabel::Unsupported => None,
        }
    }

    pub fn delta_invariant(&self) -> Option<u32> {
        self.milnor_number().map(|n| n.div_ceil(2))
    }
}

/// Exponent in `x` where two branch series first differ.
fn contact_order(a: &PuiseuxBranch, b: &PuiseuxBranch) -> Option<BigRational> {
    let mut ks: Vec<BigRational> = Vec::new();
    for br in [a, b] {
        for (k, _) in br.x_exponents() {
            ks.push(k);
        }
    }
    ks.sort();
    ks.dedup();
    let coeff =
        |br: &PuiseuxBranch, k: &BigRational| br.x_exponents().into_iter().find(|(e, _)| e == k).map(|(_, c)| c);
    ks.into_iter().find(|k| coeff(a, k) != coeff(b, k))
}

fn lowest_degree(f: &QBiPoly) -> u32 {
    f.terms().map(|((i, j), _)| i + j).min().unwrap_or(0)
}

/// Local type at `point`, smooth points included as `A0`.
pub fn local_singularity(curve: &QBiPoly, point: (&BigRational, &BigRational)) -> Result<SingularityType, Error> {
    let g = curve.translate(point.0, point.1);
    if !g.coeff(0, 0).is_zero() {
        return Err(Error::InvalidInput("point is not on the curve".into()));
    }
    let vertical_strands = g
        .eval_x(&BigRational::zero())
        .valuation()
        .map(|v| v as u32)
        .ok_or_else(|| Error::Degenerate("the vertical line through the point lies on the curve".into()))?;
    let multiplicity = lowest_degree(&g);
    // make the vertical direction transversal to the tangent cone
    let mut lambda = 0i64;
    let mut h = g.clone();
    while h.coeff(0, multiplicity).is_zero() {
        lambda += 1;
        h = g.shear(&BigRational::from_integer(BigInt::from(lambda)));
    }
    let zero = BigRational::zero();
    let branches = puiseux_expansions(&h, (&zero, &zero), 1);
    let (count, contacts, label) = match &branches {
        Ok(bs) => {
            let mut contacts = Vec::new();
            for i in 0..bs.len() {
                for j in i + 1..bs.len() {
                    if let Some(k) = contact_order(&bs[i], &bs[j]) {
                        contacts.push((i, j, k));
                    }
                }
            }
            let label = match (multiplicity, bs.as_slice()) {
                (1, _) => SingularityLabel::A(0),
                (2, [a, b]) if a.ramification == 1 && b.ramification == 1 => match &contacts[..] {
                    [(_, _, k)] if k.is_integer() => {
                        let k: u32 = k.to_integer().try_into().unwrap_or(0);
                        SingularityLabel::A(2 * k - 1)
                    }
                    _ => SingularityLabel::Unsupported,
                },
                (2, [a]) if a.ramification == 2 => match a.terms.iter().find(|(k, _)| k % 2 == 1) {
                    Some((k, _)) => SingularityLabel::A(k - 1),
                    None => SingularityLabel::Unsupported,
                },
                _ => SingularityLabel::Unsupported,
            };
            (bs.len(), contacts, label)
        }
        Err(_) if multiplicity > 2 => (0, Vec::new(), SingularityLabel::Unsupported),
        Err(e) => return Err(Error::Unsupported(format!("local expansion failed: {e}"))),
    };
    Ok(SingularityType { label, multiplicity, branches: count, contact_orders: contacts, vertical_strands })
}

/// Classify a singular point as `A_n`.
pub fn classify_simple_singularity(
    curve: &QBiPoly,
    point: (&BigRational, &BigRational),
) -> Result<SingularityType, Error> {
    let s = local_singularity(curve, point)?;
    if s.multiplicity == 1 {
        return Err(Error::InvalidInput("point is smooth".into()));
    }
    Ok(s)
}

/// Half-twists between the two local strands of the vertical pencil
/// around the point: `n + 1` for `A_n`, `1` for a simple tangency.
pub fn local_braid_exponent(sing: &SingularityType) -> Result<u32, Error> {
    match sing.label {
        SingularityLabel::A(n) if sing.vertical_strands == 2 => Ok(n + 1),
        SingularityLabel::A(_) => {
            Err(Error::Unsupported(format!("{} local strands on the vertical line", sing.vertical_strands)))
        }
        SingularityLabel::Unsupported => Err(Error::Unsupported("singularity is not of type A".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::parse_curve;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn label(text: &str) -> SingularityType {
        local_singularity(&parse_curve(text).unwrap(), (&r(0), &r(0))).unwrap()
    }

    #[test]
    fn small_examples() {
        let node = label("x^2 - y^2");
        assert_eq!((node.label, node.branches), (SingularityLabel::A(1), 2));
        assert_eq!(label("y^2 - x^3").label, SingularityLabel::A(2));
        assert_eq!(label("x^2 - y^3").label, SingularityLabel::A(2));
        assert_eq!(label("(y - x^2)^2 - x^7").label, SingularityLabel::A(6));
        assert_eq!(label("(y - x^2) * (y - x^2 - x^4)").label, SingularityLabel::A(7));
        assert_eq!(label("y*(y - x)").label, SingularityLabel::A(1));
        assert_eq!(label("y^3 - x^4").label, SingularityLabel::Unsupported);
    }

    #[test]
    fn braid_exponents() {
        assert_eq!(local_braid_exponent(&label("y^2 - x^5")).unwrap(), 5);
        let tangent = label("x - y^2");
        assert_eq!((tangent.label, tangent.vertical_strands), (SingularityLabel::A(0), 2));
        assert_eq!(local_braid_exponent(&tangent).unwrap(), 1);
        assert!(local_braid_exponent(&label("x^2 - y^5")).is_err());
        assert!(classify_simple_singularity(&parse_curve("y - x").unwrap(), (&r(0), &r(0))).is_err());
    }
}
