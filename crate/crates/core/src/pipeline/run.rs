use std::path::{Path, PathBuf};
use std::time::Instant;

use num_rational::BigRational;
use serde::Serialize;
use sha2::{Digest, Sha256};

use super::config::PipelineConfig;
use super::parse::{format_curve, parse_curve};
use super::report::*;
use super::singular::{singular_values, DiscriminantData};
use crate::exactpoly::BiPoly;
use crate::grouptheory::{
    abelianization, alexander_polynomial, check_witness, coset_enumeration_order, find_epimorphisms, identify_order30,
    tietze_simplify, AbelianInvariants, FiniteGroupTable, FreeWord, GroupPresentation,
};
use crate::pathtrack::{
    build_lasso_system, default_epsilon, principal_real_value, track_lassos, FiberFamily, LassoPath, TrackerConfig,
    Trajectory,
};
use crate::scalar::Ring;
use crate::scalar::{Dyadic, Rounding};
use crate::vankampen::{acts_as_full_twist, affine_presentation, assemble_presentation, composite_braid, BraidWord};
use crate::{Error, QBiPoly, QPoly};

/// Parsed curve after the optional shear, checked for a generic pencil.
pub fn prepare_curve(cfg: &PipelineConfig) -> Result<QBiPoly, Error> {
    let mut f = parse_curve(&cfg.source.read()?)?;
    if let Some(a) = &cfg.shear {
        f = f.shear(a);
    }
    check_generic(&f)?;
    Ok(f)
}

/// The vertical pencil is generic when `deg_y f = deg f`, i.e. the axis
/// point `(0:1:0)` is not on the curve.
pub fn check_generic(f: &QBiPoly) -> Result<(), Error> {
    let d = f.total_degree();
    if d == 0 {
        return Err(Error::InvalidInput("constant polynomial".into()));
    }
    if f.deg_y() != d {
        return Err(Error::Degenerate(format!(
            "pencil not generic: deg_y = {} but degree = {d}; the point (0:1:0) lies on the curve. \
             Change coordinates, e.g. with --shear 1",
            f.deg_y()
        )));
    }
    Ok(())
}

fn root_records(data: &DiscriminantData) -> Vec<RootRecord> {
    data.values
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let (re, im) = v.disk.center_f64();
            // rounding the center to f64 costs at most one ulp per part
            let slack = (re.abs() + im.abs()) * f64::EPSILON;
            RootRecord {
                index: k + 1,
                re,
                im,
                radius: v.disk.radius.to_f64() * (1.0 + f64::EPSILON) + slack,
                real: v.real,
                multiplicity: v.multiplicity,
            }
        })
        .collect()
}

fn cache_key(curve: &str, lasso: &LassoPath, tracker: &TrackerConfig) -> String {
    let mut h = Sha256::new();
    h.update(curve.as_bytes());
    h.update(format!("\n{:?}\n{:?}\n{:?}", lasso.basepoint, lasso.pieces, tracker.policy).as_bytes());
    h.update(format!(
        "{} {} {} {}",
        tracker.series_order, tracker.initial_step_log2, tracker.min_step_log2, tracker.tilt_log2
    ));
    hex::encode(h.finalize())
}

fn cache_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.json"))
}

/// Trajectories for every lasso, in lasso order, reusing cached ones.
fn tracked(
    cfg: &PipelineConfig,
    curve: &QBiPoly,
    fam: &FiberFamily,
    lassos: &[LassoPath],
    tracker: &TrackerConfig,
) -> Result<Vec<Trajectory>, Error> {
    let text = format_curve(curve);
    let keys: Vec<String> = lassos.iter().map(|l| cache_key(&text, l, tracker)).collect();
    let mut out: Vec<Option<Trajectory>> = vec![None; lassos.len()];
    if let (Some(dir), false) = (&cfg.cache_dir, tracker.record_samples) {
        for (slot, key) in out.iter_mut().zip(&keys) {
            if let Ok(s) = std::fs::read_to_string(cache_path(dir, key)) {
                *slot = serde_json::from_str(&s).ok();
            }
        }
    }
    let missing: Vec<usize> = (0..lassos.len()).filter(|&k| out[k].is_none()).collect();
    if !missing.is_empty() {
        let todo: Vec<LassoPath> = missing.iter().map(|&k| lassos[k].clone()).collect();
        let fresh = track_lassos(fam, &todo, tracker)?;
        for (&k, t) in missing.iter().zip(fresh) {
            if let Some(dir) = &cfg.cache_dir {
                std::fs::create_dir_all(dir)?;
                let mut stored = t.clone();
                stored.samples.clear();
                let json = serde_json::to_string(&stored).map_err(|e| Error::InvalidInput(e.to_string()))?;
                std::fs::write(cache_path(dir, &keys[k]), json)?;
            }
            out[k] = Some(t);
        }
    }
    Ok(out.into_iter().map(|t| t.expect("every lasso tracked")).collect())
}

#[derive(Serialize)]
struct DumpRecord<'a> {
    lasso: usize,
    trajectory: &'a Trajectory,
}

fn dump_trajectories(dir: &Path, trajectories: &[Trajectory]) -> Result<(), Error> {
    std::fs::create_dir_all(dir)?;
    for (k, t) in trajectories.iter().enumerate() {
        let json = serde_json::to_string_pretty(&DumpRecord { lasso: k + 1, trajectory: t })
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
        std::fs::write(dir.join(format!("lasso_{:02}_eta{:02}.json", k + 1, t.target + 1)), json)?;
    }
    Ok(())
}

fn format_x_poly(g: &QPoly) -> String {
    format_curve(&BiPoly::from_terms(g.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone()))))
}

fn presentation_record(p: &GroupPresentation) -> PresentationRecord {
    PresentationRecord { generators: p.generators, relators: p.relators.iter().map(|r| r.letters().to_vec()).collect() }
}

fn abelian_record(a: &AbelianInvariants) -> AbelianRecord {
    AbelianRecord { invariants: a.factors.iter().map(|f| f.to_string()).collect(), text: a.to_string() }
}

fn millis(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

/// Run everything the configuration asks for.
///
/// A tracking failure at the precision ceiling or an exhausted coset bound
/// gives a partial report with status `inconclusive`; other failures are
/// errors.
pub fn run_pipeline(cfg: &PipelineConfig) -> Result<Report, Error> {
    cfg.validate()?;
    let curve = prepare_curve(cfg)?;
    let mut report = Report::empty();
    report.curve = Some(CurveInfo {
        text: format_curve(&curve),
        degree: curve.total_degree(),
        deg_y: curve.deg_y(),
        terms: curve.nterms(),
        shear: cfg.shear.as_ref().map(|a| a.to_string()),
    });

    let t0 = Instant::now();
    let data = singular_values(&curve, &cfg.policy())?;
    report.discriminant = Some(DiscriminantReport {
        degree: data.discriminant.deg(),
        factors: data
            .factors
            .iter()
            .map(|(g, k)| FactorRecord { polynomial: format_x_poly(g), degree: g.deg(), multiplicity: *k })
            .collect(),
        roots: root_records(&data),
    });
    let t_disc = millis(t0);

    let d = curve.deg_y() as usize;
    let braids: Vec<BraidWord> = if data.values.is_empty() {
        Vec::new()
    } else {
        let eps = match &cfg.epsilon {
            Some(e) => Dyadic::from_rational_round(e, 64, Rounding::Down),
            None => default_epsilon(&data.values),
        };
        let base = match principal_real_value(&data.values) {
            Some(k) => data.values[k].position() + &eps,
            // right of every singular value
            None => {
                let right = data.values.iter().map(|v| v.position().clone()).max().expect("nonempty");
                Dyadic::from_rational_round(&right.to_rational().floor(), 64, Rounding::Down) + Dyadic::from_i64(1)
            }
        };
        report.epsilon = Some(eps.to_rational().to_string());
        report.basepoint = Some(base.to_rational().to_string());
        let lassos = build_lasso_system(&data.values, &base, &eps)?;
        let tracker = TrackerConfig {
            policy: cfg.policy(),
            record_samples: cfg.dump_trajectories.is_some(),
            ..TrackerConfig::default()
        };
        let fam = FiberFamily::new(&curve)?;
        let t1 = Instant::now();
        let trajectories = match tracked(cfg, &curve, &fam, &lassos, &tracker) {
            Ok(t) => t,
            Err(e @ Error::CertificationFailed { .. }) => {
                report.status = RunStatus::Inconclusive;
                report.notes.push(format!("tracking stopped: {e}"));
                return Ok(report);
            }
            Err(e) => return Err(e),
        };
        if let Some(dir) = &cfg.dump_trajectories {
            dump_trajectories(dir, &trajectories)?;
        }
        let mut braids = Vec::with_capacity(trajectories.len());
        for t in &trajectories {
            if t.permutation != t.permutation_from_crossings() {
                return Err(Error::Degenerate(format!(
                    "crossing sequence around eta{} does not reproduce the endpoint permutation",
                    t.target + 1
                )));
            }
            let b = BraidWord::new(d, t.letters())?;
            report.lassos.push(LassoRecord {
                target: t.target + 1,
                braid: b.letters().to_vec(),
                exponent_sum: b.exponent_sum(),
                permutation: t.permutation.clone(),
                steps: t.steps,
                precision_bits: t.precision_bits,
                crossings: t
                    .crossings
                    .iter()
                    .map(|c| CrossingRecord {
                        letter: c.letter(),
                        segment: c.location.0 as usize,
                        parameter: c.location.1,
                    })
                    .collect(),
            });
            braids.push(b);
        }
        if cfg.timing {
            report.timing_ms = Some(TimingRecord { discriminant: t_disc, tracking: millis(t1), groups: 0 });
        }
        braids
    };
    let composite = composite_braid(&braids, d);
    report.composite =
        Some(CompositeRecord { exponent_sum: composite.exponent_sum(), full_twist: acts_as_full_twist(&composite) });

    let t2 = Instant::now();
    let p = assemble_presentation(&braids, d)?;
    let s = tietze_simplify(&p, &cfg.tietze);
    report.presentation = Some(presentation_record(&p));
    report.simplified = Some(presentation_record(&s));
    let ab = abelianization(&p);
    report.abelianization = Some(abelian_record(&ab));
    let order = match coset_enumeration_order(&s, cfg.coset_bound) {
        Ok(n) => Some(n),
        Err(Error::Exceeded(_)) => None,
        Err(e) => return Err(e),
    };
    report.order = Some(OrderRecord {
        value: order,
        bound: cfg.coset_bound,
        certified_by: if order.is_some() { "coset enumeration".into() } else { String::new() },
    });
    for name in &cfg.quotients {
        let target = FiniteGroupTable::by_name(name)?;
        report.quotients.push(QuotientRecord {
            target: name.clone(),
            order: target.order(),
            epimorphisms: find_epimorphisms(&s, &target).len(),
        });
    }
    if order == Some(30) {
        report.order30 = Some(identify_order30(&s, cfg.coset_bound)?);
        if d >= 2 {
            report.witness = Some(check_witness(&p, &FreeWord::new(vec![2, 1]), cfg.coset_bound)?);
        }
    }
    if cfg.alexander {
        let affine = affine_presentation(&braids, d)?;
        let delta = alexander_polynomial(&affine, &vec![1; d])?;
        report.alexander = Some(delta.coeffs().iter().map(|c| c.to_string()).collect());
    }
    report.verdict = Some(verdict(order, &ab, report.order30.as_ref().map(|v| v.group.to_string())));
    if let (Some(n), Some(k)) = (order, ab.order()) {
        if ab.factors.len() <= 1 && k == n.into() {
            report.notes.push(format!(
                "the group is abelian, so it equals its abelianization; order {n} is also certified by coset enumeration"
            ));
        }
    }
    if order.is_none() {
        report.status = RunStatus::Inconclusive;
        report.notes.push(format!("coset enumeration exceeded {} cosets", cfg.coset_bound));
    } else {
        report.status = RunStatus::Complete;
    }
    if let Some(t) = report.timing_ms.as_mut() {
        t.groups = millis(t2);
    } else if cfg.timing {
        report.timing_ms = Some(TimingRecord { discriminant: t_disc, tracking: 0, groups: millis(t2) });
    }
    Ok(report)
}

fn verdict(order: Option<usize>, ab: &AbelianInvariants, order30: Option<String>) -> String {
    match (order, ab.order()) {
        (Some(1), _) => "trivial group".into(),
        (Some(n), Some(k)) if k == n.into() && ab.factors.len() == 1 => format!("Z/{n}"),
        (Some(n), Some(k)) if k == n.into() => format!("abelian group {ab}"),
        (Some(_), _) if order30.is_some() => order30.unwrap_or_default(),
        (Some(n), _) => format!("non-abelian group of order {n}"),
        (None, _) => format!("order undetermined; abelianization {ab}"),
    }
}

/// Process exit status for a run: 0 complete, 2 inconclusive, 1 error.
pub fn exit_code(result: &Result<Report, Error>) -> i32 {
    match result {
        Ok(r) if r.is_inconclusive() => 2,
        Ok(_) => 0,
        Err(Error::CertificationFailed { .. }) | Err(Error::Exceeded(_)) => 2,
        Err(_) => 1,
    }
}

/// Exact rational for a decimal or fraction command-line value.
pub fn parse_rational(text: &str) -> Result<BigRational, Error> {
    let p = parse_curve(text)?;
    if p.total_degree() != 0 {
        return Err(Error::InvalidInput(format!("expected a rational number, got {text:?}")));
    }
    Ok(p.coeff(0, 0))
}
