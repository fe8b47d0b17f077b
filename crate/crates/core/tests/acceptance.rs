//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use monodromy::exactpoly::{discriminant_y, equal_up_to_constant, product_of_powers, Poly};
use monodromy::fixtures::{curve_c, curve_cprime, CPRIME_TEXT, C_TEXT};
use monodromy::grouptheory::{
    abelianization, alexander_polynomial, coset_enumeration_order, find_epimorphisms, fundamental_identity_holds,
    tietze_simplify, FiniteGroupTable, GroupPresentation, TietzeLimits,
};
use monodromy::newtonpuiseux::{classify_simple_singularity, local_braid_exponent};
use monodromy::numroots::PrecisionPolicy;
use monodromy::pathtrack::{
    build_lasso_system, certify_real_segment, default_epsilon, fiber_positions, principal_real_value, track_lassos,
    FiberFamily, TrackerConfig,
};
use monodromy::pipeline::{
    emit_report, run_pipeline, singular_values, CurveSource, PipelineConfig, Report, ReportFormat,
};
use monodromy::scalar::{qi, rational_to_f64, Cplx, Dyadic, Rounding};
use monodromy::vankampen::{
    acts_as_full_twist, affine_presentation, artin_act, assemble_presentation, composite_braid, half_twists_within,
    projective_relator, BraidWord,
};
use monodromy::{QBiPoly, QPoly};

const TOL: f64 = 1e-3;

const ETA_C: [(f64, f64); 10] = [
    (-0.7408, 0.0),
    (-0.3914, 0.0),
    (-0.1309, 0.0),
    (0.0, 0.0),
    (0.0598, 0.0),
    (0.0778, 0.0),
    (0.6274, 0.0),
    (0.9933, -0.1446),
    (0.9933, 0.1446),
    (1.0, 0.0),
];

const ETA_CPRIME: [(f64, f64); 8] = [
    (-5.5758, 0.0),
    (-0.3708, 0.0),
    (-0.3677, 0.0),
    (0.0, 0.0),
    (0.9708, 0.0),
    (1.0, 0.0),
    (1.9718, -0.7077),
    (1.9718, 0.7077),
];

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn qp(c: &[i64]) -> QPoly {
    Poly::new(c.iter().map(|&v| qi(v)).collect())
}

fn run(text: &str) -> Report {
    run_pipeline(&PipelineConfig::new(CurveSource::Text(text.into()))).expect("pipeline runs")
}

fn braids(r: &Report) -> Vec<BraidWord> {
    let d = r.curve.as_ref().expect("curve").deg_y as usize;
    r.lassos.iter().map(|l| BraidWord::new(d, l.braid.clone()).expect("valid braid")).collect()
}

/// Every expected value has exactly one computed root within `TOL`, and
/// nothing else was computed.
fn roots_match(r: &Report, expected: &[(f64, f64)]) -> (bool, String) {
    let roots = &r.discriminant.as_ref().expect("discriminant").roots;
    let ok = roots.len() == expected.len()
        && expected.iter().all(|&(re, im)| {
            roots.iter().filter(|v| (v.re - re).abs() <= TOL && (v.im - im).abs() <= TOL).count() == 1
        });
    let json: serde_json::Value =
        serde_json::from_slice(&emit_report(r, ReportFormat::Structured)).expect("structured report is JSON");
    let records = json["discriminant"]["roots"].as_array().map_or(0, |a| a.len());
    (
        ok && records == expected.len(),
        format!("{} distinct roots, {records} structured records, {} expected", roots.len(), expected.len()),
    )
}

fn discriminant_factors(curve: &QBiPoly, factors: &[(QPoly, u32)]) -> bool {
    let d = discriminant_y(curve).expect("discriminant");
    equal_up_to_constant(&d, &product_of_powers(factors))
}

fn criterion_1(c: &Report) -> Outcome {
    let x = qp(&[0, 1]);
    let octic = qp(&[-96000, 2072000, 2388080, -170653568, -56181608, 1017975356, -359900737, -1278576626, 858898351]);
    let exact = discriminant_factors(&curve_c(), &[(x, 15), (qp(&[-1, 1]), 7), (octic, 1)]);
    let (roots, detail) = roots_match(c, &ETA_C);
    check(exact && roots, format!("x^15 (x-1)^7 octic: {exact}; {detail}"))
}

fn criterion_2(cp: &Report) -> Outcome {
    let exact = discriminant_factors(
        &curve_cprime(),
        &[(qp(&[0, 1]), 12), (qp(&[9, 18, -17, 2, 1]), 1), (qp(&[-9, -15, 25]), 2), (qp(&[-1, 1]), 10)],
    );
    let (roots, detail) = roots_match(cp, &ETA_CPRIME);
    check(exact && roots, format!("x^12 quartic quadratic^2 (x-1)^10: {exact}; {detail}"))
}

fn d10_count(r: &Report) -> Option<usize> {
    r.quotients.iter().find(|q| q.target == "d10").map(|q| q.epimorphisms)
}

fn criterion_3(c: &Report) -> Outcome {
    let ab = c.abelianization.as_ref().map(|a| a.invariants.clone()).unwrap_or_default();
    let order = c.order.as_ref().and_then(|o| o.value);
    let d10 = d10_count(c);
    check(
        ab == ["6"] && order == Some(6) && d10 == Some(0),
        format!("abelianization {ab:?}, order {order:?}, D10 epimorphisms {d10:?}"),
    )
}

fn criterion_4(cp: &Report) -> Outcome {
    let ab = cp.abelianization.as_ref().map(|a| a.invariants.clone()).unwrap_or_default();
    let order = cp.order.as_ref().and_then(|o| o.value);
    let d10 = d10_count(cp);
    let w = cp.witness.as_ref();
    let witness = w.is_some_and(|w| w.word == [2, 1] && w.order == 15 && w.fifth_power_central);
    let verdict = cp.verdict.clone().unwrap_or_default();
    check(
        ab == ["6"] && order == Some(30) && d10.is_some_and(|n| n > 0) && witness && verdict == "D10 x Z/3",
        format!(
            "order {order:?}, abelianization {ab:?}, D10 epimorphisms {d10:?}, witness order {:?}, verdict {verdict}",
            w.map(|w| w.order)
        ),
    )
}

fn criterion_5(c: &Report, cp: &Report) -> Outcome {
    let one = Some(vec!["1".to_string()]);
    let trefoil = GroupPresentation::from_lists(2, &[&[1, 2, 1, -2, -1, -2]]);
    let delta = alexander_polynomial(&trefoil, &[1, 1]).expect("trefoil");
    let expect: Vec<BigInt> = [1, -1, 1].iter().map(|&v| BigInt::from(v)).collect();
    check(
        c.alexander == one && cp.alexander == one && delta.coeffs() == expect.as_slice(),
        format!("C {:?}, C' {:?}, trefoil {:?}", c.alexander, cp.alexander, delta.coeffs()),
    )
}

fn criterion_6() -> Outcome {
    let curve = curve_c();
    let data = singular_values(&curve, &PrecisionPolicy::default()).expect("singular values");
    let near = |x: f64| {
        data.values
            .iter()
            .filter(|v| v.real)
            .map(|v| v.position().to_rational())
            .find(|p| (rational_to_f64(p) - x).abs() < TOL)
            .expect("singular value present")
    };
    let margin = BigRational::new(BigInt::one(), BigInt::from(1u64 << 20));
    let a = near(0.0778) + &margin;
    let b = near(0.6274) - &margin;
    let cert = certify_real_segment(&curve, &a, &b).expect("certificate");
    let events = cert.events();
    let located = events.len() == 1
        && (events[0].x0 - 0.1205).abs() <= TOL
        && events[0].u0.is_some_and(|u| (u - 0.0075).abs() <= TOL);
    let first = events.first().map(|e| (e.x0, e.u0.unwrap_or(f64::NAN)));
    check(
        cert.candidates.len() == 5 && located,
        format!("{} resultant roots, {} alignment(s) at {first:?}", cert.candidates.len(), events.len()),
    )
}

/// Braid words from tracking every lasso again with the starting precision
/// doubled.
fn braids_at_double_precision(curve: &QBiPoly) -> Vec<BraidWord> {
    let data = singular_values(curve, &PrecisionPolicy::default()).expect("singular values");
    let eps = default_epsilon(&data.values);
    let k = principal_real_value(&data.values).expect("real singular value");
    let base = data.values[k].position() + &eps;
    let lassos = build_lasso_system(&data.values, &base, &eps).expect("lassos");
    let d = PrecisionPolicy::default();
    let cfg = TrackerConfig {
        policy: PrecisionPolicy { start_bits: 2 * d.start_bits, ceiling_bits: d.ceiling_bits },
        ..TrackerConfig::default()
    };
    let fam = FiberFamily::new(curve).expect("family");
    let tr = track_lassos(&fam, &lassos, &cfg).expect("tracking");
    tr.iter().map(|t| BraidWord::new(fam.degree(), t.letters()).expect("braid")).collect()
}

fn properties(name: &str, r: &Report, curve: &QBiPoly) -> (bool, String) {
    let bs = braids(r);
    let d = bs[0].strands();
    let deg = r.discriminant.as_ref().map(|x| x.degree).unwrap_or(0) as i64;
    let total: i64 = bs.iter().map(|b| b.exponent_sum()).sum();
    let perms = r.lassos.iter().zip(&bs).all(|(l, b)| l.permutation == b.permutation());
    let comp = composite_braid(&bs, d);
    let identity: Vec<usize> = (0..d).collect();
    let twist = acts_as_full_twist(&comp) && comp.permutation() == identity;
    let boundary = artin_act(&comp, &projective_relator(d)) == projective_relator(d);

    let p = assemble_presentation(&bs, d).expect("presentation");
    let s = tietze_simplify(&p, &TietzeLimits::default());
    let d10 = FiniteGroupTable::dihedral(10);
    let affine = affine_presentation(&bs, d).expect("affine");
    let affine_s = tietze_simplify(&affine, &TietzeLimits::default());
    let alex = |q: &GroupPresentation| alexander_polynomial(q, &vec![1; q.generators]).ok();
    let tietze = abelianization(&p) == abelianization(&s)
        && coset_enumeration_order(&p, 1_000_000).ok() == coset_enumeration_order(&s, 1_000_000).ok()
        && find_epimorphisms(&p, &d10).len() == find_epimorphisms(&s, &d10).len()
        && affine_s.relators.iter().all(|r| r.exponent_sums(affine_s.generators).iter().sum::<i64>() == 0)
        && alex(&affine) == alex(&affine_s);
    let fox = p.relators.iter().all(|r| fundamental_identity_holds(r, p.generators));
    let doubled = braids_at_double_precision(curve) == bs;
    let ok = total == 30 && total == deg && perms && twist && boundary && tietze && fox && doubled;
    (
        ok,
        format!(
            "{name}: exponent sum {total}/{deg}, permutations {perms}, full twist {twist}, boundary fixed {boundary}, \
             Tietze invariant {tietze}, Fox {fox}, doubled precision {doubled}"
        ),
    )
}

fn criterion_7(c: &Report, cp: &Report) -> Outcome {
    let (a, da) = properties("C", c, &curve_c());
    let (b, db) = properties("C'", cp, &curve_cprime());
    check(a && b, format!("{da}; {db}"))
}

fn criterion_8() -> Outcome {
    let conic = run("x^2 + y^2 - 1");
    let cubic = run("y^3 - 3*y + x^3 - x");
    let conic_order = conic.order.as_ref().and_then(|o| o.value);
    let cubic_ab = cubic.abelianization.as_ref().map(|a| a.invariants.clone()).unwrap_or_default();
    check(
        conic_order == Some(2) && cubic_ab == ["3"],
        format!("conic order {conic_order:?}, cubic abelianization {cubic_ab:?}"),
    )
}

fn criterion_9(c: &Report) -> Outcome {
    let curve = curve_c();
    let base = c.basepoint.as_deref().map(parse_fraction).expect("basepoint");
    let base = Dyadic::from_rational_round(&base, 64, Rounding::Down);
    let fam = FiberFamily::new(&curve).expect("family");
    let fiber = fiber_positions(&fam, &Cplx::real(base), &TrackerConfig::default()).expect("fiber");
    // the `n` fiber roots closest to `y`
    let nearest = |y: f64, n: usize| -> Vec<usize> {
        let dist = |k: usize| (fiber[k].0 - y).hypot(fiber[k].1);
        let mut idx: Vec<usize> = (0..fiber.len()).collect();
        idx.sort_by(|&a, &b| dist(a).total_cmp(&dist(b)));
        idx.truncate(n);
        idx.sort();
        idx
    };
    let lasso = c.lassos.iter().find(|l| l.target == 4).expect("lasso around eta4");
    let b = BraidWord::new(fiber.len(), lasso.braid.clone()).expect("braid");
    let mut lines = Vec::new();
    let mut ok = true;
    for (y, expect) in [(0, 10), (1, 5)] {
        let sing = classify_simple_singularity(&curve, (&qi(0), &qi(y))).expect("singular point");
        let strands = nearest(y as f64, sing.vertical_strands as usize);
        let twists = half_twists_within(&b, &strands);
        let predicted = local_braid_exponent(&sing).expect("local exponent") as i64;
        ok &= strands.len() == 2 && twists == expect && predicted == expect;
        lines.push(format!(
            "{} at (0,{y}): strands {strands:?}, {twists} half-twists, predicted {predicted}",
            sing.label
        ));
    }
    check(ok, lines.join(", "))
}

fn parse_fraction(s: &str) -> BigRational {
    s.parse().expect("rational")
}

fn main() -> ExitCode {
    let start = Instant::now();
    let (c, cp) = std::thread::scope(|s| {
        let c = s.spawn(|| run(C_TEXT));
        let cp = s.spawn(|| run(CPRIME_TEXT));
        (c.join().expect("C run"), cp.join().expect("C' run"))
    });
    println!("pipeline runs on C and C': {:.1}s", start.elapsed().as_secs_f64());
    let criteria: Vec<Criterion> = vec![
        ("discriminant of C", Box::new(|| criterion_1(&c))),
        ("discriminant of C'", Box::new(|| criterion_2(&cp))),
        ("group of C is Z/6", Box::new(|| criterion_3(&c))),
        ("group of C' is D10 x Z/3", Box::new(|| criterion_4(&cp))),
        ("Alexander polynomials", Box::new(|| criterion_5(&c, &cp))),
        ("real segment alignment on C", Box::new(criterion_6)),
        ("property suite", Box::new(|| criterion_7(&c, &cp))),
        ("sanity curves", Box::new(criterion_8)),
        ("local braids around eta4 of C", Box::new(|| criterion_9(&c))),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        let secs = t.elapsed().as_secs_f64();
        println!("[{}] {} {name}: {} ({secs:.1}s)", if o.pass { "PASS" } else { "FAIL" }, k + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
