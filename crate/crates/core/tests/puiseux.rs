use monodromy::fixtures::{curve_c, curve_cprime};
use monodromy::newtonpuiseux::*;
use monodromy::pipeline::parse_curve;
use num_bigint::BigInt;
use num_rational::BigRational;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn quad(a: BigRational, b: BigRational, d: i64) -> QuadNumber {
    QuadNumber { a, b, d: BigInt::from(d) }
}

#[test]
fn c_origin_branches() {
    let f = curve_c();
    let bs = puiseux_expansions(&f, (&q(0, 1), &q(0, 1)), 6).unwrap();
    assert_eq!(bs.len(), 2);
    let mut fifth = Vec::new();
    for b in &bs {
        assert_eq!(b.ramification, 1);
        assert_eq!(b.coefficient(1), QuadNumber::rational(q(0, 1)));
        assert_eq!(b.coefficient(2), QuadNumber::rational(q(1, 1)));
        assert_eq!(b.coefficient(3), QuadNumber::rational(q(5, 1)));
        assert_eq!(b.coefficient(4), QuadNumber::rational(q(51, 1)));
        fifth.push(b.coefficient(5));
        assert!(b.residual_valuation(&f, b.truncation).is_none());
    }
    assert!(fifth.contains(&quad(q(503, 1), q(32, 1), 6)));
    assert!(fifth.contains(&quad(q(503, 1), q(-32, 1), 6)));
}

#[test]
fn c_cusp_branch() {
    let f = curve_c();
    let bs = puiseux_expansions(&f, (&q(0, 1), &q(1, 1)), 3).unwrap();
    assert_eq!(bs.len(), 1);
    let b = &bs[0];
    assert_eq!(b.ramification, 2);
    assert_eq!(b.terms[0], (4, QuadNumber::rational(q(-1, 2))));
    // (1/10) i sqrt 5, up to the choice of square root
    let c5 = b.coefficient(5);
    assert_eq!((c5.a.clone(), c5.d.clone()), (q(0, 1), BigInt::from(-5)));
    assert_eq!(c5.b.clone() * c5.b.clone(), q(1, 100));
    let alg = &b.coefficients()[1].1;
    assert!((alg.center.1.abs() - 0.223_606_797_749_979).abs() < alg.radius);
    assert_eq!(alg.minimal_polynomial, vec!["1/20", "0", "1"]);
    assert!(b.residual_valuation(&f, b.truncation).is_none());
}

#[test]
fn fixture_singularities() {
    let c = curve_c();
    let cp = curve_cprime();
    let at = |f, x, y| classify_simple_singularity(f, (&q(x, 1), &q(y, 1))).unwrap();
    let s = at(&c, 0, 0);
    assert_eq!((s.label, s.branches, s.vertical_strands), (SingularityLabel::A(9), 2, 2));
    assert_eq!(s.contact_orders[0].2, q(5, 1));
    assert_eq!(s.delta_invariant(), Some(5));
    let s = at(&c, 0, 1);
    assert_eq!((s.label, s.branches, s.vertical_strands), (SingularityLabel::A(4), 1, 2));
    let s = at(&c, 1, 0);
    assert_eq!((s.label, s.vertical_strands), (SingularityLabel::A(4), 4));
    let s = at(&cp, 0, 0);
    assert_eq!((s.label, s.milnor_number()), (SingularityLabel::A(9), Some(9)));
}

#[test]
fn predicted_local_braids() {
    let c = curve_c();
    let at = |x, y| local_braid_exponent(&classify_simple_singularity(&c, (&q(x, 1), &q(y, 1))).unwrap());
    assert_eq!(at(0, 0).unwrap(), 10);
    assert_eq!(at(0, 1).unwrap(), 5);
    assert!(at(1, 0).is_err());
}

#[test]
fn textbook_curves() {
    let cusp = parse_curve("y^2 - x^3").unwrap();
    let b = &puiseux_expansions(&cusp, (&q(0, 1), &q(0, 1)), 5).unwrap()[0];
    assert_eq!((b.ramification, b.terms.clone()), (2, vec![(3, QuadNumber::rational(q(1, 1)))]));
    let node = parse_curve("x^2 - y^2").unwrap();
    assert_eq!(classify_simple_singularity(&node, (&q(0, 1), &q(0, 1))).unwrap().label, SingularityLabel::A(1));
    assert!(classify_simple_singularity(&node, (&q(1, 1), &q(1, 1))).is_err());
    assert!(puiseux_expansions(&node, (&q(1, 1), &q(0, 1)), 3).is_err());
}
