//! Run report and its two renderings.
//!
//! The structured rendering is JSON with these top-level fields, all
//! optional or empty in an empty report:
//!
//! * `schema_version`: integer, currently 1
//! * `status`: `"complete"`, `"inconclusive"` or `"empty"`
//! * `curve`: `text`, `degree`, `deg_y`, `terms`, `shear`
//! * `discriminant`: `degree`, `factors` (`polynomial`, `degree`,
//!   `multiplicity`) and `roots` (`index`, `re`, `im`, `radius`, `real`,
//!   `multiplicity`)
//! * `epsilon`, `basepoint`: exact rationals as strings
//! * `lassos`: `target`, `braid`, `exponent_sum`, `permutation`, `steps`,
//!   `precision_bits`, `crossings` (`letter`, `segment`, `parameter`)
//! * `composite`: `exponent_sum`, `full_twist`
//! * `presentation`, `simplified`: `generators`, `relators`
//! * `abelianization`: `invariants`, `text`
//! * `order`: `value` or null, `bound`, `certified_by`
//! * `quotients`: `target`, `order`, `epimorphisms`
//! * `order30`, `witness`: present for groups of order 30
//! * `alexander`: integer coefficients, lowest degree first
//! * `verdict`, `notes`, `timing_ms`

use std::fmt::Write as _;

use serde::Serialize;

use super::config::ReportFormat;
use crate::grouptheory::{Order30Verdict, WitnessCheck};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RunStatus {
    #[default]
    Empty,
    Complete,
    Inconclusive,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CurveInfo {
    pub text: String,
    pub degree: u32,
    pub deg_y: u32,
    pub terms: usize,
    pub shear: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct FactorRecord {
    pub polynomial: String,
    pub degree: usize,
    pub multiplicity: u32,
}

/// A certified root: the true root lies within `radius` of `(re, im)`.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RootRecord {
    pub index: usize,
    pub re: f64,
    pub im: f64,
    pub radius: f64,
    pub real: bool,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct DiscriminantReport {
    pub degree: usize,
    pub factors: Vec<FactorRecord>,
    pub roots: Vec<RootRecord>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CrossingRecord {
    pub letter: i32,
    pub segment: usize,
    pub parameter: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct LassoRecord {
    pub target: usize,
    pub braid: Vec<i32>,
    pub exponent_sum: i64,
    pub permutation: Vec<usize>,
    pub steps: usize,
    pub precision_bits: u32,
    pub crossings: Vec<CrossingRecord>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CompositeRecord {
    pub exponent_sum: i64,
    pub full_twist: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct PresentationRecord {
    pub generators: usize,
    pub relators: Vec<Vec<i32>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct AbelianRecord {
    pub invariants: Vec<String>,
    pub text: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct OrderRecord {
    pub value: Option<usize>,
    pub bound: usize,
    pub certified_by: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct QuotientRecord {
    pub target: String,
    pub order: usize,
    pub epimorphisms: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct TimingRecord {
    pub discriminant: u64,
    pub tracking: u64,
    pub groups: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub status: RunStatus,
    pub curve: Option<CurveInfo>,
    pub discriminant: Option<DiscriminantReport>,
    pub epsilon: Option<String>,
    pub basepoint: Option<String>,
    pub lassos: Vec<LassoRecord>,
    pub composite: Option<CompositeRecord>,
    pub presentation: Option<PresentationRecord>,
    pub simplified: Option<PresentationRecord>,
    pub abelianization: Option<AbelianRecord>,
    pub order: Option<OrderRecord>,
    pub quotients: Vec<QuotientRecord>,
    pub order30: Option<Order30Verdict>,
    pub witness: Option<WitnessCheck>,
    pub alexander: Option<Vec<String>>,
    pub verdict: Option<String>,
    pub notes: Vec<String>,
    pub timing_ms: Option<TimingRecord>,
}

impl Report {
    pub fn empty() -> Self {
        Report { schema_version: SCHEMA_VERSION, ..Default::default() }
    }

    pub fn is_inconclusive(&self) -> bool {
        self.status == RunStatus::Inconclusive
    }
}

fn relator_text(r: &[i32]) -> String {
    if r.is_empty() {
        return "1".into();
    }
    r.iter().map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) }).collect::<Vec<_>>().join(" ")
}

fn presentation_text(p: &PresentationRecord) -> String {
    let gens: Vec<String> = (1..=p.generators).map(|k| format!("x{k}")).collect();
    let rels: Vec<String> = p.relators.iter().map(|r| relator_text(r)).collect();
    format!("< {} | {} >", gens.join(", "), rels.join(", "))
}

fn text_report(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "status: {}", serde_json::to_value(r.status).unwrap_or_default().as_str().unwrap_or(""));
    if let Some(c) = &r.curve {
        let _ = writeln!(s, "\n== curve\n{}\ndegree {}, deg_y {}, {} terms", c.text, c.degree, c.deg_y, c.terms);
        if let Some(a) = &c.shear {
            let _ = writeln!(s, "sheared by x -> x + ({a}) y");
        }
    }
    if let Some(d) = &r.discriminant {
        let _ = writeln!(s, "\n== discriminant\ndegree {}", d.degree);
        for f in &d.factors {
            let _ = writeln!(s, "  ({})^{}", f.polynomial, f.multiplicity);
        }
        let _ = writeln!(s, "{} distinct roots", d.roots.len());
        for v in &d.roots {
            let kind = if v.real { "real" } else { "complex" };
            let _ = writeln!(
                s,
                "  eta{:<2} = {:+.10} {:+.10}i  (+-{:.1e}, {kind}, multiplicity {})",
                v.index, v.re, v.im, v.radius, v.multiplicity
            );
        }
    }
    if let (Some(e), Some(b)) = (&r.epsilon, &r.basepoint) {
        let _ = writeln!(s, "\n== lassos\nepsilon {e}, basepoint {b}");
    }
    for l in &r.lassos {
        let _ = writeln!(
            s,
            "  eta{:<2} braid {:?} (exponent sum {}, {} steps, {} bits)",
            l.target, l.braid, l.exponent_sum, l.steps, l.precision_bits
        );
    }
    if let Some(c) = &r.composite {
        let _ = writeln!(s, "composite exponent sum {}, acts as full twist: {}", c.exponent_sum, c.full_twist);
    }
    if let Some(p) = &r.presentation {
        let _ = writeln!(s, "\n== presentation\n{}", presentation_text(p));
    }
    if let Some(p) = &r.simplified {
        let _ = writeln!(s, "simplified: {}", presentation_text(p));
    }
    if let Some(a) = &r.abelianization {
        let _ = writeln!(s, "\n== invariants\nabelianization {}", a.text);
    }
    if let Some(o) = &r.order {
        match o.value {
            Some(n) => {
                let _ = writeln!(s, "order {n} ({})", o.certified_by);
            }
            None => {
                let _ = writeln!(s, "order undetermined within {} cosets", o.bound);
            }
        }
    }
    for q in &r.quotients {
        let _ = writeln!(s, "epimorphisms onto {} (order {}): {}", q.target, q.order, q.epimorphisms);
    }
    if let Some(v) = &r.order30 {
        let _ = writeln!(s, "order-30 identification: {} ({} D10 quotients)", v.group, v.d10_quotients);
    }
    if let Some(w) = &r.witness {
        let _ = writeln!(
            s,
            "witness {}: order {}, fifth power central: {}",
            relator_text(&w.word),
            w.order,
            w.fifth_power_central
        );
    }
    if let Some(a) = &r.alexander {
        let _ = writeln!(s, "Alexander polynomial coefficients {}", a.join(" "));
    }
    if let Some(v) = &r.verdict {
        let _ = writeln!(s, "\n== verdict\n{v}");
    }
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    if let Some(t) = &r.timing_ms {
        let _ = writeln!(
            s,
            "\n== timing (ms)\ndiscriminant {}, tracking {}, groups {}",
            t.discriminant, t.tracking, t.groups
        );
    }
    s
}

/// Render a report.
pub fn emit_report(r: &Report, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Text => text_report(r).into_bytes(),
        ReportFormat::Structured => {
            let mut v = serde_json::to_vec_pretty(r).expect("report serializes");
            v.push(b'\n');
            v
        }
    }
}
