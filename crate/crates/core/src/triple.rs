//! Cyclic triples: the exact decision, the sub-regions used to compute
//! volumes, closed-form volumes, and the densities of the order statistics of
//! a uniformly random cyclic triple.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::number::Prob;
use crate::quad::{bisect, golden_max, integrate_pieces};
use crate::rng::SampleStream;
use crate::tuple::ProbTuple;
use crate::verdict::{Reason, Verdict};

pub use crate::number::OMEGA;

/// `1 - OMEGA = (3 - sqrt(5)) / 2`, the first density breakpoint.
pub const ONE_MINUS_OMEGA: f64 = 0.381_966_011_250_105_1;

/// Named subsets of `[0, 1]^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TripleRegion {
    /// All cyclic triples.
    C3,
    /// Nontransitive triples: cyclic with every entry above 1/2.
    C3Star,
    /// Cyclic, `1/2 < x <= y, z`.
    C3I,
    /// Cyclic, `x < 1/2 < y, z`.
    C3II,
    /// Cyclic with `x <= y <= z`.
    C3Ordered,
}

/// Trybula's test on raw coordinates.
fn trybula<T: Prob>(x: &T, y: &T, z: &T) -> Reason {
    let one = T::one();
    let first = [
        x.clone() + y.clone() * z.clone(),
        y.clone() + z.clone() * x.clone(),
        z.clone() + x.clone() * y.clone(),
    ];
    if !first.iter().any(|s| *s <= one) {
        return Reason::TrybulaIneq1Fails;
    }
    let (xc, yc, zc) = (
        one.clone() - x.clone(),
        one.clone() - y.clone(),
        one.clone() - z.clone(),
    );
    let second = [
        xc.clone() + yc.clone() * zc.clone(),
        yc.clone() + zc.clone() * xc.clone(),
        zc + xc * yc,
    ];
    if !second.iter().any(|s| *s <= one) {
        return Reason::TrybulaIneq2Fails;
    }
    Reason::TrybulaBothHold
}

/// Decide whether a triple is cyclic. Total on `[0, 1]^3`: the answer is never
/// `Unknown`. Boundaries count as cyclic (both inequalities are non-strict).
pub fn is_cyclic_triple<T: Prob>(t: &ProbTuple<T>) -> Result<Verdict> {
    t.expect_len(3)?;
    let v = t.values();
    Ok(Verdict::new(trybula(&v[0], &v[1], &v[2])))
}

/// Fast path for plain coordinates, used by the samplers.
#[inline]
pub fn is_cyclic_xyz(x: f64, y: f64, z: f64) -> bool {
    trybula(&x, &y, &z) == Reason::TrybulaBothHold
}

/// Cyclic with every coordinate strictly above 1/2.
pub fn is_nontransitive_triple<T: Prob>(t: &ProbTuple<T>) -> Result<bool> {
    Ok(is_cyclic_triple(t)?.is_cyclic() && *t.min() > T::half())
}

/// The two-inequality test valid for sorted input `x <= y <= z`:
/// `x + yz <= 1` and `(1 - z) + (1 - x)(1 - y) <= 1`.
pub fn is_cyclic_sorted<T: Prob>(x: &T, y: &T, z: &T) -> bool {
    let one = T::one();
    x.clone() + y.clone() * z.clone() <= one
        && (one.clone() - z.clone()) + (one.clone() - x.clone()) * (one.clone() - y.clone()) <= one
}

/// Membership via the explicit inequality descriptions of each region.
/// Bounds like `y <= (1 - x)/x` are used in the multiplied-out form
/// `x + xy <= 1`, which is equivalent for the nonnegative values involved and
/// stays exact for rationals.
pub fn in_region<T: Prob>(t: &ProbTuple<T>, region: TripleRegion) -> Result<bool> {
    t.expect_len(3)?;
    let v = t.values();
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    Ok(match region {
        TripleRegion::C3 => is_cyclic_triple(t)?.is_cyclic(),
        TripleRegion::C3Star => is_nontransitive_triple(t)?,
        TripleRegion::C3I => in_c3_i(x, y, z),
        TripleRegion::C3II => in_c3_ii(x, y, z),
        TripleRegion::C3Ordered => in_c3_ordered(x, y, z),
    })
}

fn in_c3_i<T: Prob>(x: &T, y: &T, z: &T) -> bool {
    let one = T::one();
    let xy = x.clone() + x.clone() * y.clone();
    let xz = x.clone() + y.clone() * z.clone();
    *x > T::half() && x.at_most_golden() && x <= y && xy <= one && x <= z && xz <= one
}

fn in_c3_ii<T: Prob>(x: &T, y: &T, z: &T) -> bool {
    let one = T::one();
    let half = T::half();
    if !(*x >= T::zero() && *x < half && *y > half && *y <= one && *z > half && *z <= one) {
        return false;
    }
    if x.clone() + y.clone() <= one {
        true
    } else {
        x.clone() + y.clone() * z.clone() <= one
    }
}

fn in_c3_ordered<T: Prob>(x: &T, y: &T, z: &T) -> bool {
    let one = T::one();
    *x >= T::zero()
        && x.at_most_golden()
        && x <= y
        && x.clone() + y.clone() * y.clone() <= one
        && y <= z
        && *z <= one
        && (one.clone() - z.clone()) + (one.clone() - x.clone()) * (one.clone() - y.clone()) <= one
        && x.clone() + y.clone() * z.clone() <= one
}

/// Closed-form volumes of the triple regions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExactVolumes {
    /// Volume of all cyclic triples.
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub p3: f64,
    /// Volume of nontransitive triples.
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub p3_star: f64,
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub vol_i: f64,
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub vol_ii: f64,
}

pub fn exact_volumes() -> ExactVolumes {
    let sqrt5 = 5f64.sqrt();
    let ln2 = std::f64::consts::LN_2;
    let omega = (sqrt5 - 1.0) / 2.0;
    let log_s5m1 = (sqrt5 - 1.0).ln();
    ExactVolumes {
        p3: 11.0 * sqrt5 / 4.0 - 17.0 / 4.0 - 6.0 * log_s5m1,
        p3_star: 11.0 * sqrt5 / 8.0 - 43.0 / 16.0 - 3.0 * log_s5m1 + 3.0 * ln2 / 8.0,
        vol_i: ln2 / 8.0 - (2.0 * omega).ln() + 11.0 * omega / 12.0 - 7.0 / 16.0,
        vol_ii: 3.0 / 16.0 - ln2 / 8.0,
    }
}

fn p3() -> f64 {
    static P3: OnceLock<f64> = OnceLock::new();
    *P3.get_or_init(|| exact_volumes().p3)
}

/// Which order statistic of a random cyclic triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    /// Smallest coordinate.
    F1,
    /// Middle coordinate.
    F2,
    /// Largest coordinate.
    F3,
}

impl Which {
    pub const ALL: [Which; 3] = [Which::F1, Which::F2, Which::F3];

    /// Coordinate of a sorted triple this density describes.
    pub fn coordinate(self) -> usize {
        match self {
            Which::F1 => 0,
            Which::F2 => 1,
            Which::F3 => 2,
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::F1 => "f1",
            Which::F2 => "f2",
            Which::F3 => "f3",
        })
    }
}

impl FromStr for Which {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "f1" | "1" | "min" => Ok(Which::F1),
            "f2" | "2" | "mid" | "middle" => Ok(Which::F2),
            "f3" | "3" | "max" => Ok(Which::F3),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

fn f1(x: f64) -> f64 {
    let c = 3.0 / p3();
    let u = 1.0 - x;
    let value = if x <= ONE_MINUS_OMEGA {
        // u ln u -> 0 as u -> 0 does not arise here: u >= w.
        c * (x * x * x - 3.0 * x * x + u / (2.0 - x) - u * u.ln())
    } else if x <= 0.5 {
        c * (x * x - 3.0 * x + 1.0 - u * u.ln())
    } else if x <= OMEGA {
        c * (x * x + x - 1.0 + u * u.ln() - 2.0 * u * x.ln())
    } else {
        0.0
    };
    value.max(0.0)
}

fn f2(x: f64) -> f64 {
    if x <= ONE_MINUS_OMEGA {
        3.0 / p3() * (3.0 * x * x - x * x * x)
    } else if x <= 0.5 {
        6.0 / p3() * (3.0 * x - x * x - 1.0 / (2.0 * (1.0 - x)))
    } else {
        f2(1.0 - x)
    }
}

/// The density of the chosen order statistic at `x`. At a breakpoint the
/// left-hand formula is used.
pub fn density(which: Which, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::BadAbscissa(x));
    }
    Ok(density_unchecked(which, x))
}

pub(crate) fn density_unchecked(which: Which, x: f64) -> f64 {
    match which {
        Which::F1 => f1(x),
        Which::F2 => f2(x),
        Which::F3 => f1(1.0 - x),
    }
}

/// Points where some density changes formula.
pub const BREAKPOINTS: [f64; 5] = [0.0, ONE_MINUS_OMEGA, 0.5, OMEGA, 1.0];

const QUAD_TOL: f64 = 1e-13;

/// `integral_0^1 f(x) dx`, split at the breakpoints.
pub fn total_mass(which: Which) -> f64 {
    integrate_pieces(&|x| density_unchecked(which, x), &BREAKPOINTS, QUAD_TOL)
}

/// `integral_a^b f(x) dx` for `0 <= a <= b <= 1`.
pub fn mass_between(which: Which, a: f64, b: f64) -> f64 {
    let mut breaks = vec![a];
    breaks.extend(BREAKPOINTS.iter().copied().filter(|&p| p > a && p < b));
    breaks.push(b);
    integrate_pieces(&|x| density_unchecked(which, x), &breaks, QUAD_TOL)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityStats {
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub mean: f64,
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub median: f64,
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub mode: f64,
    /// Density value at the mode.
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub peak: f64,
}

pub fn density_stats(which: Which) -> DensityStats {
    let f = |x: f64| density_unchecked(which, x);
    let mean = integrate_pieces(&|x| x * f(x), &BREAKPOINTS, QUAD_TOL);
    let median = bisect(|t| mass_between(which, 0.0, t) - 0.5, 0.0, 1.0, 1e-10);
    let (mode, peak) = BREAKPOINTS
        .windows(2)
        .map(|w| golden_max(f, w[0], w[1], 1e-10))
        .fold((0.0, f64::NEG_INFINITY), |best, cand| {
            if cand.1 > best.1 {
                cand
            } else {
                best
            }
        });
    DensityStats {
        mean,
        median,
        mode,
        peak,
    }
}

/// The smallest of three independent uniforms: density `3(1 - x)^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnrestrictedMinStats {
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub mean: f64,
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub median: f64,
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub mode: f64,
}

pub fn unrestricted_min_stats() -> UnrestrictedMinStats {
    UnrestrictedMinStats {
        mean: 0.25,
        median: 1.0 - 0.5f64.cbrt(),
        mode: 0.0,
    }
}

pub fn unrestricted_min_density(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::BadAbscissa(x));
    }
    Ok(3.0 * (1.0 - x) * (1.0 - x))
}

/// Output of the rejection sampler together with its acceptance record.
#[derive(Debug, Clone)]
pub struct OrderedSamples {
    pub triples: Vec<[f64; 3]>,
    pub attempts: u64,
}

impl OrderedSamples {
    pub fn acceptance_rate(&self) -> f64 {
        self.triples.len() as f64 / self.attempts as f64
    }
}

/// Draw `count` triples uniformly from the ordered cyclic region.
///
/// Each attempt draws a uniform point of the cube, sorts it, and keeps it if
/// it is cyclic. Cyclicity is invariant under permutations, so the kept points
/// are the order statistics of a uniform cyclic triple, i.e. uniform on the
/// ordered region; about `p3` of the attempts succeed. Attempt `k` reads draws
/// `3k..3k+3` of the seeded stream.
pub fn sample_ordered_cyclic(count: usize, seed: u64) -> OrderedSamples {
    let mut stream = SampleStream::at(seed, 0);
    let mut triples = Vec::with_capacity(count);
    let mut attempts = 0u64;
    let mut p = [0.0; 3];
    while triples.len() < count {
        stream.fill(&mut p);
        attempts += 1;
        p.sort_by(f64::total_cmp);
        if in_c3_ordered(&p[0], &p[1], &p[2]) {
            triples.push(p);
        }
    }
    OrderedSamples { triples, attempts }
}

/// Tabulated `(x, f(x))` pairs for one density.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityGrid {
    pub which: Which,
    pub points: Vec<(f64, f64)>,
}

impl DensityGrid {
    /// Closed-form values at `x = k / steps`, `k = 0..=steps`.
    pub fn closed_form(which: Which, steps: usize) -> Self {
        Self {
            which,
            points: grid_abscissas(steps)
                .map(|x| (x, density_unchecked(which, x)))
                .collect(),
        }
    }
}

fn grid_abscissas(steps: usize) -> impl Iterator<Item = f64> {
    let steps = steps.max(1);
    (0..=steps).map(move |k| k as f64 / steps as f64)
}

/// CSV with header `x,f1,f2,f3` on the fixed grid `k / steps`.
pub fn density_csv(steps: usize) -> String {
    let mut out = String::from("x,f1,f2,f3\n");
    for x in grid_abscissas(steps) {
        let [a, b, c] = Which::ALL.map(|w| density_unchecked(w, x));
        out.push_str(&format!("{x},{a},{b},{c}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn exact(s: &str) -> ProbTuple<BigRational> {
        s.parse().unwrap()
    }

    fn float(s: &str) -> ProbTuple<f64> {
        s.parse().unwrap()
    }

    #[test]
    fn decision_examples() {
        let v = is_cyclic_triple(&exact("5/9,5/9,5/9")).unwrap();
        assert_eq!(v.reason(), Reason::TrybulaBothHold);
        assert!(is_cyclic_triple(&exact("1/2,1/2,1/2")).unwrap().is_cyclic());
        assert_eq!(
            is_cyclic_triple(&exact("1,1,1")).unwrap().reason(),
            Reason::TrybulaIneq1Fails
        );
        assert_eq!(
            is_cyclic_triple(&exact("0.7,0.7,0.7")).unwrap().reason(),
            Reason::TrybulaIneq1Fails
        );
        assert_eq!(
            is_cyclic_triple(&exact("0,0,0")).unwrap().reason(),
            Reason::TrybulaIneq2Fails
        );
        assert!(is_cyclic_triple(&exact("1/2,1/2,1/2,1/2")).is_err());
    }

    #[test]
    fn golden_boundary_is_cyclic() {
        // (w, w, w) sits exactly on x + yz = 1; the constant is irrational, so
        // probe just inside and just outside with rationals.
        assert!(is_cyclic_triple(&exact("0.618,0.618,0.618"))
            .unwrap()
            .is_cyclic());
        assert!(!is_cyclic_triple(&exact("0.6181,0.6181,0.6181"))
            .unwrap()
            .is_cyclic());
        // exact boundary with rationals: x + yz = 1
        assert!(is_cyclic_triple(&exact("1/2,1,1/2")).unwrap().is_cyclic());
    }

    #[test]
    fn nontransitive_examples() {
        assert!(is_nontransitive_triple(&exact("5/9,5/9,5/9")).unwrap());
        assert!(!is_nontransitive_triple(&exact("1/2,1/2,1/2")).unwrap());
        assert!(!is_nontransitive_triple(&exact("0.4,0.9,0.9")).unwrap());
    }

    #[test]
    fn region_examples() {
        assert!(in_region(&float("0.55,0.6,0.7"), TripleRegion::C3I).unwrap());
        assert!(!in_region(&float("0.7,0.8,0.9"), TripleRegion::C3I).unwrap());
        assert!(in_region(&float("0.2,0.6,0.9"), TripleRegion::C3II).unwrap());
        assert!(in_region(&exact("0.55,0.6,0.7"), TripleRegion::C3I).unwrap());
        assert!(in_region(&exact("0.2,0.6,0.9"), TripleRegion::C3II).unwrap());
        // second branch: y > 1 - x, then z <= (1 - x)/y
        assert!(in_region(&exact("0.3,0.8,0.85"), TripleRegion::C3II).unwrap());
        assert!(!in_region(&exact("0.3,0.8,0.9"), TripleRegion::C3II).unwrap());
        assert!(in_region(&exact("1/5,1/2,3/5"), TripleRegion::C3Ordered).unwrap());
        assert!(!in_region(&exact("3/5,1/2,3/5"), TripleRegion::C3Ordered).unwrap());
    }

    #[test]
    fn regions_agree_with_trybula_exactly() {
        // Exhaustive grid of rationals k/20: the explicit descriptions must
        // match the Trybula test restricted to each region's side conditions.
        let half = BigRational::new(1.into(), 2.into());
        let vals: Vec<BigRational> = (0..=20)
            .map(|k| BigRational::new(k.into(), 20.into()))
            .collect();
        for x in &vals {
            for y in &vals {
                for z in &vals {
                    let t = ProbTuple::new(vec![x.clone(), y.clone(), z.clone()]).unwrap();
                    let cyclic = is_cyclic_triple(&t).unwrap().is_cyclic();
                    let c3i = cyclic && *x > half && x <= y && x <= z;
                    let c3ii = cyclic && *x < half && *y > half && *z > half;
                    let ordered = cyclic && x <= y && y <= z;
                    assert_eq!(in_region(&t, TripleRegion::C3I).unwrap(), c3i, "{t}");
                    assert_eq!(in_region(&t, TripleRegion::C3II).unwrap(), c3ii, "{t}");
                    assert_eq!(
                        in_region(&t, TripleRegion::C3Ordered).unwrap(),
                        ordered,
                        "{t}"
                    );
                    if x <= y && y <= z {
                        assert_eq!(is_cyclic_sorted(x, y, z), cyclic, "{t}");
                    }
                }
            }
        }
    }

    #[test]
    fn volume_examples_and_identities() {
        let v = exact_volumes();
        assert!((v.p3 - 0.6275748).abs() <= 1e-6);
        assert!((v.p3_star - 0.0112175).abs() <= 1e-6);
        assert!((v.vol_ii - 0.100_856_602_430_006_8).abs() <= 1e-15);
        assert!(((3.0 * v.vol_i - v.p3_star) / v.p3_star).abs() <= 1e-14);
        assert!(((6.0 * v.vol_i + 6.0 * v.vol_ii - v.p3) / v.p3).abs() <= 1e-14);
    }

    #[test]
    fn density_examples() {
        let p3 = exact_volumes().p3;
        assert_eq!(density(Which::F1, 0.9).unwrap(), 0.0);
        assert!((density(Which::F1, 0.0).unwrap() - 1.5 / p3).abs() < 1e-14);
        assert!((density(Which::F1, 0.0).unwrap() - 2.390_153_313_607_795).abs() < 1e-12);
        assert!((density(Which::F2, 0.5).unwrap() - 1.5 / p3).abs() < 1e-14);
        assert_eq!(
            density(Which::F3, 1.0).unwrap(),
            density(Which::F1, 0.0).unwrap()
        );
        assert!(density(Which::F1, -0.1).is_err());
        assert!(density(Which::F1, f64::NAN).is_err());
        assert_eq!(density(Which::F2, 1.0).unwrap(), 0.0);
        assert!(density(Which::F1, OMEGA).unwrap().abs() < 1e-12);
    }

    #[test]
    fn densities_are_continuous_at_breakpoints() {
        for w in Which::ALL {
            for &b in &BREAKPOINTS[1..4] {
                let l = density_unchecked(w, b - 1e-12);
                let r = density_unchecked(w, b + 1e-12);
                assert!((l - r).abs() < 1e-9, "{w} at {b}: {l} vs {r}");
            }
        }
    }

    /// Slice area of the ordered region at fixed smallest coordinate, by
    /// brute-force midpoint integration over y of the z-interval length read
    /// straight off the sorted two-inequality test.
    fn f1_oracle(x: f64) -> f64 {
        let steps = 200_000;
        let y_hi = 1.0;
        let h = (y_hi - x) / steps as f64;
        let mut area = 0.0;
        for k in 0..steps {
            let y = x + (k as f64 + 0.5) * h;
            let lo = y.max((1.0 - x) * (1.0 - y));
            let hi = 1f64.min((1.0 - x) / y);
            if hi > lo {
                area += (hi - lo) * h;
            }
        }
        6.0 / exact_volumes().p3 * area
    }

    fn f2_oracle(y: f64) -> f64 {
        let steps = 200_000;
        let h = y / steps as f64;
        let mut area = 0.0;
        for k in 0..steps {
            let x = (k as f64 + 0.5) * h;
            let lo = y.max((1.0 - x) * (1.0 - y));
            let hi = 1f64.min((1.0 - x) / y);
            if hi > lo {
                area += (hi - lo) * h;
            }
        }
        6.0 / exact_volumes().p3 * area
    }

    #[test]
    fn closed_forms_match_slice_integrals() {
        for &x in &[0.05, 0.2, 0.38, 0.4, 0.45, 0.5, 0.55, 0.6, 0.7] {
            let closed = density_unchecked(Which::F1, x);
            assert!(
                (closed - f1_oracle(x)).abs() < 1e-6,
                "f1({x}) {closed} vs {}",
                f1_oracle(x)
            );
        }
        for &y in &[0.05, 0.2, 0.38, 0.45, 0.5, 0.55, 0.6, 0.7, 0.9, 0.99] {
            let closed = density_unchecked(Which::F2, y);
            assert!(
                (closed - f2_oracle(y)).abs() < 1e-6,
                "f2({y}) {closed} vs {}",
                f2_oracle(y)
            );
        }
    }

    #[test]
    fn normalization_and_nontransitive_mass() {
        for w in Which::ALL {
            assert!((total_mass(w) - 1.0).abs() < 1e-8, "{w}: {}", total_mass(w));
        }
        let v = exact_volumes();
        assert!((mass_between(Which::F1, 0.5, OMEGA) - v.p3_star / v.p3).abs() < 1e-8);
    }

    #[test]
    fn stats_reproduce_reference_table() {
        let s = density_stats(Which::F1);
        assert!((s.mean - 0.211).abs() <= 5e-3, "{s:?}");
        assert!((s.median - 0.197).abs() <= 5e-3, "{s:?}");
        assert!((s.mode - 0.107).abs() <= 5e-3, "{s:?}");
        let s2 = density_stats(Which::F2);
        assert!((s2.mean - 0.5).abs() < 1e-9);
        assert!((s2.median - 0.5).abs() < 1e-9);
        let s3 = density_stats(Which::F3);
        assert!((s3.mean - (1.0 - s.mean)).abs() < 1e-9);
        assert!((s3.mode - (1.0 - s.mode)).abs() < 1e-7);
    }

    #[test]
    fn unrestricted_baseline() {
        let u = unrestricted_min_stats();
        assert_eq!(u.mean, 0.25);
        assert!((u.median - 0.206_299_474_015_900_3).abs() < 1e-12);
        assert_eq!(unrestricted_min_density(0.0).unwrap(), 3.0);
        // quadrature cross-check
        let mean =
            crate::quad::adaptive_simpson(&|x| x * 3.0 * (1.0 - x) * (1.0 - x), 0.0, 1.0, 1e-14);
        assert!((mean - 0.25).abs() < 1e-12);
        let cdf = |t: f64| 1.0 - (1.0 - t).powi(3);
        assert!((cdf(u.median) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn sampler_postconditions() {
        let s = sample_ordered_cyclic(20_000, 11);
        assert_eq!(s.triples.len(), 20_000);
        for p in &s.triples {
            assert!(p[0] <= p[1] && p[1] <= p[2]);
            assert!(in_region(
                &ProbTuple::new(p.to_vec()).unwrap(),
                TripleRegion::C3Ordered
            )
            .unwrap());
            assert!(p[0] <= OMEGA);
        }
        let p3 = exact_volumes().p3;
        let rate = s.acceptance_rate();
        let se = (p3 * (1.0 - p3) / s.attempts as f64).sqrt();
        assert!((rate - p3).abs() < 5.0 * se, "{rate}");
        assert_eq!(sample_ordered_cyclic(100, 11).triples, s.triples[..100]);
    }

    #[test]
    fn csv_has_expected_shape() {
        let csv = density_csv(4);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "x,f1,f2,f3");
        assert_eq!(lines.len(), 6);
        assert!(lines[1].starts_with("0,"));
        assert!(lines[5].starts_with("1,"));
        let grid = DensityGrid::closed_form(Which::F1, 10);
        assert!(grid.points.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(grid.points.iter().all(|p| p.1 >= 0.0));
    }
}
