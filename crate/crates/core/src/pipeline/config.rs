use std::path::PathBuf;

use num_rational::BigRational;

use crate::grouptheory::{TietzeLimits, DEFAULT_COSET_BOUND};
use crate::numroots::PrecisionPolicy;
use crate::Error;

/// Where the curve comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveSource {
    Text(String),
    File(PathBuf),
}

impl CurveSource {
    pub fn read(&self) -> Result<String, Error> {
        match self {
            CurveSource::Text(t) => Ok(t.clone()),
            CurveSource::File(p) => Ok(std::fs::read_to_string(p)?),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Structured,
}

/// Everything a run depends on. Two runs with equal configurations produce
/// byte-identical reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    pub source: CurveSource,
    /// Apply `x -> x + a y` before anything else.
    pub shear: Option<BigRational>,
    /// Lasso radius; rounded down to a binary fraction.
    pub epsilon: Option<BigRational>,
    /// Precision ceiling in bits for root isolation and tracking.
    pub precision_bits: u32,
    pub tietze: TietzeLimits,
    pub coset_bound: usize,
    /// Finite targets for epimorphism searches, by name (`d10`, `z3`, ...).
    pub quotients: Vec<String>,
    pub alexander: bool,
    pub format: ReportFormat,
    /// Per-lasso trajectory cache.
    pub cache_dir: Option<PathBuf>,
    pub dump_trajectories: Option<PathBuf>,
    /// Include wall-clock timings; off by default as they break determinism.
    pub timing: bool,
}

impl PipelineConfig {
    pub fn new(source: CurveSource) -> Self {
        PipelineConfig {
            source,
            shear: None,
            epsilon: None,
            precision_bits: PrecisionPolicy::default().ceiling_bits,
            tietze: TietzeLimits::default(),
            coset_bound: DEFAULT_COSET_BOUND,
            quotients: vec!["d10".into()],
            alexander: true,
            format: ReportFormat::Text,
            cache_dir: None,
            dump_trajectories: None,
            timing: false,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.precision_bits < 64 {
            return Err(Error::InvalidInput("precision ceiling must be at least 64 bits".into()));
        }
        if self.coset_bound == 0 {
            return Err(Error::InvalidInput("coset bound must be positive".into()));
        }
        let t = &self.tietze;
        if t.max_total_length == 0 || t.max_relator_length == 0 || t.max_rounds == 0 {
            return Err(Error::InvalidInput("Tietze limits must be positive".into()));
        }
        if let Some(e) = &self.epsilon {
            if *e <= BigRational::from_integer(0.into()) {
                return Err(Error::InvalidInput("epsilon must be positive".into()));
            }
        }
        Ok(())
    }

    pub fn policy(&self) -> PrecisionPolicy {
        let d = PrecisionPolicy::default();
        PrecisionPolicy { start_bits: d.start_bits.min(self.precision_bits), ceiling_bits: self.precision_bits }
    }
}
