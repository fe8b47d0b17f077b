//! Tracking along whole lassos, sharing segments between them.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::lasso::LassoPath;
use super::tracker::{track_segment, CrossingEvent, FiberFamily, Sample, SegmentTrack, TrackerConfig};
use crate::scalar::{Cplx, Dyadic};
use crate::Error;

type CD = Cplx<Dyadic>;
type Key = (Dyadic, Dyadic, Dyadic, Dyadic);

/// Chords per quarter turn when arcs are replaced by polygons.
pub const CHORDS_PER_QUARTER: u32 = 4;
const VERTEX_BITS: u32 = 60;

/// Crossing event located on a lasso: `location` is the piece-wise
/// parameter, segment index plus the position within that segment.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LassoCrossing {
    pub position: usize,
    pub sign: i32,
    pub location: (f64, f64),
}

impl LassoCrossing {
    pub fn letter(&self) -> i32 {
        self.sign * self.position as i32
    }
}

/// Certified trajectory of the fiber roots over one lasso.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Trajectory {
    pub target: usize,
    pub vertices: Vec<(f64, f64)>,
    pub crossings: Vec<LassoCrossing>,
    /// `permutation[p]` is the final position of the strand starting at `p`.
    pub permutation: Vec<usize>,
    pub samples: Vec<Sample>,
    pub steps: usize,
    pub precision_bits: u32,
}

impl Trajectory {
    pub fn letters(&self) -> Vec<i32> {
        self.crossings.iter().map(|c| c.letter()).collect()
    }

    /// Permutation obtained by applying the crossing transpositions in order.
    pub fn permutation_from_crossings(&self) -> Vec<usize> {
        let d = self.permutation.len();
        let mut at: Vec<usize> = (0..d).collect(); // at[strand] = position
        let mut who: Vec<usize> = (0..d).collect(); // who[position] = strand
        for c in &self.crossings {
            let p = c.position - 1;
            let (a, b) = (who[p], who[p + 1]);
            who.swap(p, p + 1);
            at[a] = p + 1;
            at[b] = p;
        }
        at
    }
}

fn key(a: &CD, b: &CD) -> (Key, bool) {
    let ka = (a.re.clone(), a.im.clone());
    let kb = (b.re.clone(), b.im.clone());
    if ka <= kb {
        ((ka.0, ka.1, kb.0, kb.1), false)
    } else {
        ((kb.0, kb.1, ka.0, ka.1), true)
    }
}

fn invert_perm(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        q[j] = i;
    }
    q
}

struct Oriented {
    events: Vec<CrossingEvent>,
    perm: Vec<usize>,
    samples: Vec<Sample>,
}

fn orient(t: &SegmentTrack, flip: bool) -> Oriented {
    if !flip {
        return Oriented { events: t.events.clone(), perm: t.position_permutation(), samples: t.samples.clone() };
    }
    let events = t
        .events
        .iter()
        .rev()
        .map(|e| CrossingEvent {
            strands: (e.strands.1, e.strands.0),
            position: e.position,
            sign: -e.sign,
            s_range: (1.0 - e.s_range.1, 1.0 - e.s_range.0),
        })
        .collect();
    let samples = t
        .samples
        .iter()
        .rev()
        .map(|s| Sample { s: 1.0 - s.s, centers: s.centers.clone(), radii: s.radii.clone() })
        .collect();
    Oriented { events, perm: invert_perm(&t.position_permutation()), samples }
}

fn segments_of(lasso: &LassoPath) -> Vec<(CD, CD)> {
    let v = lasso.polygon(CHORDS_PER_QUARTER, VERTEX_BITS);
    v.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect()
}

fn assemble(lasso: &LassoPath, d: usize, cache: &HashMap<Key, SegmentTrack>) -> Trajectory {
    let segs = segments_of(lasso);
    let mut crossings = Vec::new();
    let mut perm: Vec<usize> = (0..d).collect();
    let mut samples = Vec::new();
    let mut steps = 0;
    let mut prec = 0;
    for (i, (a, b)) in segs.iter().enumerate() {
        let (k, flip) = key(a, b);
        let t = &cache[&k];
        steps += t.steps;
        prec = prec.max(t.precision_bits);
        let o = orient(t, flip);
        for e in o.events {
            crossings.push(LassoCrossing {
                position: e.position,
                sign: e.sign,
                location: (i as f64 + e.s_range.0, i as f64 + e.s_range.1),
            });
        }
        perm = perm.iter().map(|&p| o.perm[p]).collect();
        samples.extend(o.samples.into_iter().map(|s| Sample { s: i as f64 + s.s, ..s }));
    }
    let vertices =
        lasso.polygon(CHORDS_PER_QUARTER, VERTEX_BITS).iter().map(|z| (z.re.to_f64(), z.im.to_f64())).collect();
    Trajectory { target: lasso.target, vertices, crossings, permutation: perm, samples, steps, precision_bits: prec }
}

fn track_unique(
    fam: &FiberFamily,
    lassos: &[LassoPath],
    cfg: &TrackerConfig,
) -> Result<HashMap<Key, SegmentTrack>, Error> {
    let mut todo: Vec<(Key, CD, CD)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for l in lassos {
        for (a, b) in segments_of(l) {
            let (k, flip) = key(&a, &b);
            if seen.insert(k.clone()) {
                let (s, e) = if flip { (b, a) } else { (a, b) };
                todo.push((k, s, e));
            }
        }
    }
    let results: Vec<Result<SegmentTrack, Error>> =
        todo.par_iter().map(|(_, a, b)| track_segment(fam, a, b, cfg)).collect();
    let mut cache = HashMap::with_capacity(todo.len());
    for ((k, _, _), r) in todo.into_iter().zip(results) {
        cache.insert(k, r?);
    }
    Ok(cache)
}

/// Track the fiber roots over one lasso.
pub fn track_fiber(fam: &FiberFamily, lasso: &LassoPath, cfg: &TrackerConfig) -> Result<Trajectory, Error> {
    let cache = track_unique(fam, std::slice::from_ref(lasso), cfg)?;
    Ok(assemble(lasso, fam.degree(), &cache))
}

/// Track every lasso of a system; results are in lasso order.
pub fn track_lassos(fam: &FiberFamily, lassos: &[LassoPath], cfg: &TrackerConfig) -> Result<Vec<Trajectory>, Error> {
    let cache = track_unique(fam, lassos, cfg)?;
    Ok(lassos.iter().map(|l| assemble(l, fam.degree(), &cache)).collect())
}
