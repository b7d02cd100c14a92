//! Seeded Monte Carlo estimates of the volumes of the regions studied here.
//!
//! Sample `k` of a run reads a fixed block of draws from the counter-based
//! stream keyed by the seed, so results depend on `(target, samples, seed)`
//! only. The chunk count decides how many workers share the work and has no
//! effect on the numbers.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json::serialize_f64;
use crate::ntuple::decide_ntuple;
use crate::rng::{partition, SampleStream};
use crate::triple::{
    in_region, is_cyclic_xyz, sample_ordered_cyclic, DensityGrid, TripleRegion, Which,
};
use crate::tuple::ProbTuple;
use crate::verdict::Status;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    P3,
    P3Star,
    VolC3I,
    VolC3II,
    VolC3Ordered,
    VolDnStar(usize),
    PnBracket(usize),
}

impl Target {
    fn dims(self) -> usize {
        match self {
            Target::VolDnStar(n) | Target::PnBracket(n) => n,
            _ => 3,
        }
    }

    fn validate(self) -> Result<()> {
        match self {
            Target::VolDnStar(n) if n < 3 => Err(Error::InvalidSpec(format!(
                "vol_Dn_star needs n >= 3, got {n}"
            ))),
            Target::PnBracket(n) if n < 4 => Err(Error::InvalidSpec(format!(
                "pn_bracket needs n >= 4, got {n}"
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::P3 => f.write_str("p3"),
            Target::P3Star => f.write_str("p3_star"),
            Target::VolC3I => f.write_str("vol_C3_I"),
            Target::VolC3II => f.write_str("vol_C3_II"),
            Target::VolC3Ordered => f.write_str("vol_C3_ordered"),
            Target::VolDnStar(n) => write!(f, "vol_Dn_star({n})"),
            Target::PnBracket(n) => write!(f, "pn_bracket({n})"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    /// Accepts `p3`, `p3_star`, `vol_C3_I`, `vol_C3_II`, `vol_C3_ordered`,
    /// `vol_Dn_star(n)` and `pn_bracket(n)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidSpec(format!("unknown target {s:?}"));
        if let Some((name, rest)) = s.split_once('(') {
            let n: usize = rest
                .strip_suffix(')')
                .ok_or_else(bad)?
                .trim()
                .parse()
                .map_err(|_| bad())?;
            return match name.trim() {
                "vol_Dn_star" => Ok(Target::VolDnStar(n)),
                "pn_bracket" => Ok(Target::PnBracket(n)),
                _ => Err(bad()),
            };
        }
        match s {
            "p3" => Ok(Target::P3),
            "p3_star" => Ok(Target::P3Star),
            "vol_C3_I" => Ok(Target::VolC3I),
            "vol_C3_II" => Ok(Target::VolC3II),
            "vol_C3_ordered" => Ok(Target::VolC3Ordered),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Target {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EstimatorSpec {
    pub target: Target,
    pub samples: u64,
    pub seed: u64,
    pub chunks: usize,
}

impl EstimatorSpec {
    pub fn new(target: Target, samples: u64, seed: u64, chunks: usize) -> Self {
        Self {
            target,
            samples,
            seed,
            chunks,
        }
    }
}

/// A Bernoulli-proportion estimate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MCEstimate {
    pub target: Target,
    #[serde(serialize_with = "serialize_f64")]
    pub estimate: f64,
    #[serde(serialize_with = "serialize_f64")]
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
    pub chunks: usize,
}

impl MCEstimate {
    fn from_count(spec: &EstimatorSpec, hits: u64) -> Self {
        let p = hits as f64 / spec.samples as f64;
        Self {
            target: spec.target,
            estimate: p,
            stderr: (p * (1.0 - p) / spec.samples as f64).sqrt(),
            samples: spec.samples,
            seed: spec.seed,
            chunks: spec.chunks,
        }
    }

    /// Number of standard errors between the estimate and `value`. A zero
    /// standard error counts as exact agreement only on equality.
    pub fn z_score(&self, value: f64) -> f64 {
        let d = (self.estimate - value).abs();
        if d == 0.0 {
            0.0
        } else {
            d / self.stderr
        }
    }
}

/// `lower` counts tuples certified cyclic; `upper` is one minus the fraction
/// certified not cyclic. Undecided tuples widen the gap.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bracket {
    pub target: Target,
    pub lower: MCEstimate,
    pub upper: MCEstimate,
    pub unknown: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Estimate {
    Single(MCEstimate),
    Bracket(Bracket),
}

impl Estimate {
    pub fn single(&self) -> Option<&MCEstimate> {
        match self {
            Estimate::Single(e) => Some(e),
            Estimate::Bracket(_) => None,
        }
    }

    pub fn bracket(&self) -> Option<&Bracket> {
        match self {
            Estimate::Bracket(b) => Some(b),
            Estimate::Single(_) => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("estimate serializes")
    }
}

/// Per-chunk tallies: `(first class, second class)`.
type Tally = (u64, u64);

fn run<F>(spec: &EstimatorSpec, classify: F) -> Tally
where
    F: Fn(&[f64]) -> (bool, bool) + Sync,
{
    let dims = spec.target.dims();
    partition(spec.samples, spec.chunks)
        .into_par_iter()
        .map(|range| {
            let mut stream = SampleStream::for_sample(spec.seed, range.start, dims);
            let mut buf = vec![0.0; dims];
            let mut tally = (0u64, 0u64);
            for _ in range {
                stream.fill(&mut buf);
                let (a, b) = classify(&buf);
                tally.0 += a as u64;
                tally.1 += b as u64;
            }
            tally
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1))
}

fn triple_region(t: &[f64], region: TripleRegion) -> bool {
    in_region(
        &ProbTuple::new(t.to_vec()).expect("unit cube point"),
        region,
    )
    .expect("length 3")
}

fn in_dn_star(t: &[f64]) -> bool {
    let n = t.len();
    let first = t[0];
    t.iter().all(|&v| first <= v) && (0..n).all(|i| t[i] + t[(i + 1) % n] < 1.0)
}

pub fn estimate(spec: &EstimatorSpec) -> Result<Estimate> {
    if spec.samples == 0 {
        return Err(Error::InvalidSpec("samples must be at least 1".into()));
    }
    if spec.chunks == 0 {
        return Err(Error::InvalidSpec("chunks must be at least 1".into()));
    }
    spec.target.validate()?;

    let single = |hits: u64| Ok(Estimate::Single(MCEstimate::from_count(spec, hits)));
    match spec.target {
        Target::P3 => single(run(spec, |t| (is_cyclic_xyz(t[0], t[1], t[2]), false)).0),
        Target::P3Star => single(run(spec, |t| (triple_region(t, TripleRegion::C3Star), false)).0),
        Target::VolC3I => single(run(spec, |t| (triple_region(t, TripleRegion::C3I), false)).0),
        Target::VolC3II => single(run(spec, |t| (triple_region(t, TripleRegion::C3II), false)).0),
        Target::VolC3Ordered => {
            single(run(spec, |t| (triple_region(t, TripleRegion::C3Ordered), false)).0)
        }
        Target::VolDnStar(_) => single(run(spec, |t| (in_dn_star(t), false)).0),
        Target::PnBracket(_) => {
            let (cyclic, not_cyclic) = run(spec, |t| {
                let tuple = ProbTuple::new(t.to_vec()).expect("unit cube point");
                match decide_ntuple(&tuple).status() {
                    Status::Cyclic => (true, false),
                    Status::NotCyclic => (false, true),
                    Status::Unknown => (false, false),
                }
            });
            let lower = MCEstimate::from_count(spec, cyclic);
            let upper = MCEstimate::from_count(spec, spec.samples - not_cyclic);
            Ok(Estimate::Bracket(Bracket {
                target: spec.target,
                lower,
                upper,
                unknown: spec.samples - cyclic - not_cyclic,
            }))
        }
    }
}

/// Count how many values fall in each of `bins` equal bins of `[0, 1]`.
/// A value of exactly 1 goes to the last bin.
pub fn bin_counts(values: impl IntoIterator<Item = f64>, bins: usize) -> Vec<u64> {
    let mut counts = vec![0u64; bins];
    for v in values {
        let k = ((v * bins as f64) as usize).min(bins - 1);
        counts[k] += 1;
    }
    counts
}

/// Empirical density of one order statistic from `samples` rejection draws,
/// tabulated at bin centres.
pub fn histogram(which: Which, samples: usize, bins: usize, seed: u64) -> Result<DensityGrid> {
    if bins < 10 {
        return Err(Error::InvalidSpec(format!(
            "need at least 10 bins, got {bins}"
        )));
    }
    if samples == 0 {
        return Err(Error::InvalidSpec("samples must be at least 1".into()));
    }
    let draws = sample_ordered_cyclic(samples, seed);
    let c = which.coordinate();
    let counts = bin_counts(draws.triples.iter().map(|p| p[c]), bins);
    let width = 1.0 / bins as f64;
    let points = counts
        .iter()
        .enumerate()
        .map(|(k, &n)| {
            (
                (k as f64 + 0.5) * width,
                n as f64 / (samples as f64 * width),
            )
        })
        .collect();
    Ok(DensityGrid { which, points })
}
