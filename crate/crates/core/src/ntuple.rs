//! Cyclic n-tuples for general `n`.
//!
//! No complete characterization is available beyond triples, so decisions
//! here are three-valued: a sufficient condition with an explicit witness, two
//! necessary conditions from the extremal constant `pi_n`, and `Unknown` for
//! everything in between.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::number::Prob;
use crate::triple::is_cyclic_triple;
use crate::tuple::ProbTuple;
use crate::verdict::{Reason, Verdict};
use crate::witness::{DiscreteDist, WitnessSystem};

/// Safety margin when comparing exact or float data against the irrational
/// `pi_n`; a tuple inside the margin falls through to `Unknown`.
const PI_N_MARGIN: f64 = 1e-12;

/// `pi_n = 1 - 1 / (4 cos^2(pi / (n + 2)))`: the largest achievable minimum
/// of the cycle probabilities of `n` independent variables.
pub fn pi_n(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::BadDimension { n, min: 3 });
    }
    let c = (std::f64::consts::PI / (n as f64 + 2.0)).cos();
    Ok(1.0 - 1.0 / (4.0 * c * c))
}

/// First index `i` (0-based) with `x_i + x_{i+1} >= 1` and
/// `x_{i+2} + x_{i+3} <= 1`, cyclically.
pub fn find_up_down_index<T: Prob>(t: &ProbTuple<T>) -> Option<usize> {
    let one = T::one();
    let sums = t.pair_sums();
    let n = sums.len();
    (0..n).find(|&i| sums[i] >= one && sums[(i + 2) % n] <= one)
}

fn pi_n_filter<T: Prob>(t: &ProbTuple<T>) -> Option<Reason> {
    let pi = pi_n(t.len()).ok()?;
    if t.min().as_f64() > pi + PI_N_MARGIN {
        Some(Reason::MinExceedsPiN)
    } else if t.max().as_f64() < 1.0 - pi - PI_N_MARGIN {
        Some(Reason::MaxBelowOneMinusPiN)
    } else {
        None
    }
}

/// Three-valued decision. For `n = 3` this is the exact triple test. For
/// `n >= 4`: `NotCyclic` when the entries are all above `pi_n` or all below
/// `1 - pi_n`; `Cyclic` when the up-down condition holds somewhere;
/// `Unknown` otherwise. No witness is attached; see [`decide_ntuple_exact`].
pub fn decide_ntuple<T: Prob>(t: &ProbTuple<T>) -> Verdict {
    if t.len() == 3 {
        return is_cyclic_triple(t).expect("length checked");
    }
    if let Some(reason) = pi_n_filter(t) {
        return Verdict::new(reason);
    }
    match find_up_down_index(t) {
        Some(_) => Verdict::new(Reason::UpDownConditionMet),
        None => Verdict::new(Reason::Undecided),
    }
}

/// As [`decide_ntuple`], and for cyclic verdicts with `n >= 4` the witness
/// built at the first qualifying index is attached.
pub fn decide_ntuple_exact(t: &ProbTuple<BigRational>) -> Verdict {
    let verdict = decide_ntuple(t);
    if t.len() >= 4 && verdict.is_cyclic() {
        let i = find_up_down_index(t).expect("cyclic verdict has an index");
        let w = build_witness(t, i).expect("index satisfies the hypothesis");
        verdict.with_witness(w)
    } else {
        verdict
    }
}

/// Independent route through the pairwise-sum regions: a tuple with mixed
/// pairwise sums (neither all below 1 nor all above 1) is cyclic. Does not
/// build a witness and never answers `NotCyclic`.
pub fn decide_by_pairwise_sums<T: Prob>(t: &ProbTuple<T>) -> Verdict {
    if in_dn(t, DnRegion::AllBelow) || in_dn(t, DnRegion::AllAbove) {
        Verdict::new(Reason::Undecided)
    } else {
        Verdict::new(Reason::MixedPairwiseSums)
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Build independent variables realizing `t`, given an index `i` (0-based)
/// where `x_i + x_{i+1} >= 1` and `x_{i+2} + x_{i+3} <= 1`.
///
/// The tuple is rotated so the condition sits on the last three positions,
/// the variables take values in `{-(n-1), ..., -2, 0, 2, ..., n+2}`, and the
/// rotation is undone on the result.
pub fn build_witness(t: &ProbTuple<BigRational>, i: usize) -> Result<WitnessSystem> {
    let n = t.len();
    if n < 4 {
        return Err(Error::BadDimension { n, min: 4 });
    }
    let one = BigRational::one();
    if i >= n || t.pair_sum(i) < one || t.pair_sum(i + 2) > one {
        return Err(Error::HypothesisNotMet(i));
    }
    // Rotated tuple y (1-based y_1..y_n below) has the condition at n-2.
    let shift = (i + n - (n - 3)) % n;
    let y = t.rotate(shift as isize);
    let y = |k: usize| y.values()[k - 1].clone();
    let ni = n as i64;

    let mut dists: Vec<DiscreteDist> = Vec::with_capacity(n);
    // U_1
    dists.push(DiscreteDist::new([(q(0), &one - y(n)), (q(ni + 1), y(n))])?);
    // U_2; when y_n = 1 the hypothesis forces y_1 = 0 and the ratio is 0.
    let ratio = if y(n) == one {
        BigRational::zero()
    } else {
        y(1) / (&one - y(n))
    };
    dists.push(DiscreteDist::new([(q(-2), &one - &ratio), (q(2), ratio)])?);
    // U_3 .. U_{n-2}
    for k in 3..=n - 2 {
        let k64 = k as i64;
        dists.push(DiscreteDist::new([
            (q(-k64), &one - y(k - 1)),
            (q(k64), y(k - 1)),
        ])?);
    }
    // U_{n-1}
    dists.push(DiscreteDist::new([
        (q(-(ni - 1)), &one - y(n - 2)),
        (q(ni - 1), y(n - 1) + y(n - 2) - &one),
        (q(ni + 2), &one - y(n - 1)),
    ])?);
    // U_n
    dists.push(DiscreteDist::new([(q(ni), one.clone())])?);

    // V_k = U_{k - shift} realizes x.
    dists.rotate_right(shift);
    WitnessSystem::new(dists)
}

/// Regions defined by the adjacent pairwise sums `s_i = x_i + x_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DnRegion {
    /// Every `s_i < 1`.
    AllBelow,
    /// Every `s_i > 1`.
    AllAbove,
    /// `AllBelow` with `x_1` a (possibly tied) minimum.
    AllBelowFirstMin,
}

pub fn in_dn<T: Prob>(t: &ProbTuple<T>, region: DnRegion) -> bool {
    let one = T::one();
    let sums = t.pair_sums();
    match region {
        DnRegion::AllBelow => sums.iter().all(|s| *s < one),
        DnRegion::AllAbove => sums.iter().all(|s| *s > one),
        DnRegion::AllBelowFirstMin => {
            let first = &t.values()[0];
            t.values().iter().all(|v| first <= v) && sums.iter().all(|s| *s < one)
        }
    }
}

/// Number of up-down alternating permutations `A_n` (`A_0 = A_1 = 1`).
pub fn alternating_count(n: usize) -> BigUint {
    AlternatingCounts::new(n).get(n).clone()
}

/// Table `A_0 ..= A_max`, filled by the boustrophedon (Seidel-Entringer)
/// recurrence `E(m, k) = E(m, k-1) + E(m-1, m-k)`, `A_m = E(m, m)`.
#[derive(Debug, Clone)]
pub struct AlternatingCounts {
    table: Vec<BigUint>,
}

impl AlternatingCounts {
    pub fn new(max: usize) -> Self {
        let mut table = vec![BigUint::one()];
        let mut row = vec![BigUint::one()];
        for m in 1..=max {
            let mut next = Vec::with_capacity(m + 1);
            next.push(BigUint::zero());
            for k in 1..=m {
                let v = &next[k - 1] + &row[m - k];
                next.push(v);
            }
            table.push(next[m].clone());
            row = next;
        }
        Self { table }
    }

    pub fn max(&self) -> usize {
        self.table.len() - 1
    }

    pub fn get(&self, n: usize) -> &BigUint {
        &self.table[n]
    }

    /// `A_n / n!` as an exact rational.
    pub fn density(&self, n: usize) -> BigRational {
        BigRational::new(self.table[n].clone().into(), factorial(n).into())
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Partial sum of Andre's series for `A_n / n!` with `terms` terms:
/// `2 (2/pi)^(n+1) sum_k (+-1)^k / (2k+1)^(n+1)`, alternating in sign for
/// even `n` and all positive for odd `n`.
pub fn andre_series(n: usize, terms: usize) -> f64 {
    let e = (n + 1) as i32;
    let lead = 2.0 * (2.0 / std::f64::consts::PI).powi(e);
    // Sum small terms first.
    let sum: f64 = (0..terms)
        .rev()
        .map(|k| {
            let term = 1.0 / ((2 * k + 1) as f64).powi(e);
            if n.is_multiple_of(2) && k % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum();
    lead * sum
}

/// `vol(D_n^*) = A_{n-1} / (2n (n-1)!)`, the volume of tuples with all
/// pairwise sums below 1 and the first coordinate minimal.
#[derive(Debug, Clone, PartialEq)]
pub struct DnStarVolume {
    pub exact: BigRational,
    pub value: f64,
}

pub fn vol_dn_star(n: usize) -> Result<DnStarVolume> {
    if n < 3 {
        return Err(Error::BadDimension { n, min: 3 });
    }
    let counts = AlternatingCounts::new(n - 1);
    let exact = counts.density(n - 1) / BigRational::from_integer((2 * n).into());
    let value = exact.to_f64().unwrap_or(f64::NAN);
    Ok(DnStarVolume { exact, value })
}

/// Bounds on the volume of cyclic n-tuples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PnBounds {
    pub n: usize,
    /// `1 - 3 (2/pi)^n`.
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub lower: f64,
    /// `1 - 2 (1/4)^n`.
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub upper: f64,
    /// `1 - 2n vol(D_n^*) = 1 - A_{n-1} / (n-1)!`.
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub sharper_lower: f64,
}

pub fn pn_bounds(n: usize) -> Result<PnBounds> {
    if n < 4 {
        return Err(Error::BadDimension { n, min: 4 });
    }
    let e = n as i32;
    let counts = AlternatingCounts::new(n - 1);
    let sharper = BigRational::one() - counts.density(n - 1);
    Ok(PnBounds {
        n,
        lower: 1.0 - 3.0 * (2.0 / std::f64::consts::PI).powi(e),
        upper: 1.0 - 2.0 * 0.25f64.powi(e),
        sharper_lower: sharper.to_f64().unwrap_or(f64::NAN),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::Status;
    use crate::witness::verify_witness;

    fn exact(s: &str) -> ProbTuple<BigRational> {
        s.parse().unwrap()
    }

    #[test]
    fn pi_n_values() {
        assert!((pi_n(3).unwrap() - (5f64.sqrt() - 1.0) / 2.0).abs() <= 1e-12);
        assert!((pi_n(4).unwrap() - 2.0 / 3.0).abs() <= 1e-12);
        let p = pi_n(1000).unwrap();
        assert!(p > 0.7499 && p < 0.75);
        assert!(pi_n(2).is_err());
    }

    #[test]
    fn decision_examples() {
        let v = decide_ntuple_exact(&exact("0.6,0.5,0.3,0.4"));
        assert_eq!(v.reason(), Reason::UpDownConditionMet);
        assert!(verify_witness(
            v.witness().unwrap(),
            &exact("0.6,0.5,0.3,0.4")
        ));

        assert_eq!(
            decide_ntuple(&exact("0.8,0.8,0.8,0.8")).reason(),
            Reason::MinExceedsPiN
        );
        assert_eq!(
            decide_ntuple(&exact("0.2,0.2,0.2,0.2")).reason(),
            Reason::MaxBelowOneMinusPiN
        );
        assert_eq!(
            decide_ntuple(&exact("2/3,2/3,2/3,2/3")).status(),
            Status::Unknown
        );
        for n in 3..12 {
            let t = ProbTuple::uniform(n, BigRational::new(1.into(), 2.into())).unwrap();
            let v = decide_ntuple_exact(&t);
            assert!(v.is_cyclic(), "n = {n}");
            if n >= 4 {
                assert!(verify_witness(v.witness().unwrap(), &t));
            }
        }
        // n = 3 goes through the exact triple test
        assert_eq!(
            decide_ntuple(&exact("1,1,1")).reason(),
            Reason::TrybulaIneq1Fails
        );
    }

    #[test]
    fn pi_n_margin_falls_back_to_unknown() {
        // 0.6666666666666667 > 2/3 by less than the margin
        let t = ProbTuple::uniform(4, 2.0f64 / 3.0 + 1e-16).unwrap();
        assert_eq!(decide_ntuple(&t).status(), Status::Unknown);
    }

    #[test]
    fn witness_examples() {
        let t = exact("1/2,1/2,1/2,1/2");
        let w = build_witness(&t, 0).unwrap();
        assert!(verify_witness(&w, &t));

        // s_{n-2} = 1 exactly: the middle atom of U_{n-1} gets weight 0
        let t = exact("1/5,1/5,1/2,1/2,3/10");
        let i = find_up_down_index(&t).unwrap();
        let w = build_witness(&t, i).unwrap();
        assert!(verify_witness(&w, &t));
        assert!(w
            .dists()
            .iter()
            .flat_map(|d| d.atoms())
            .any(|a| a.weight.is_zero()));

        // x_n = 1 forces x_1 = 0
        let t = exact("0,1/2,1/2,1");
        let i = find_up_down_index(&t).unwrap();
        let w = build_witness(&t, i).unwrap();
        assert!(verify_witness(&w, &t));

        assert_eq!(
            build_witness(&exact("2/3,2/3,2/3,2/3"), 0),
            Err(Error::HypothesisNotMet(0))
        );
        assert!(build_witness(&exact("1/2,1/2,1/2"), 0).is_err());
    }

    #[test]
    fn witness_at_every_valid_index() {
        let t = exact("0.9,0.3,0.2,0.1,0.95,0.6,0.45");
        let mut found = 0;
        for i in 0..t.len() {
            if let Ok(w) = build_witness(&t, i) {
                found += 1;
                assert!(verify_witness(&w, &t), "index {i}");
            }
        }
        assert!(found >= 2);
    }

    #[test]
    fn dn_examples() {
        assert!(in_dn(&exact("0.2,0.3,0.2,0.3"), DnRegion::AllBelow));
        assert!(in_dn(&exact("0.8,0.9,0.8,0.9"), DnRegion::AllAbove));
        assert!(!in_dn(&exact("0.5,0.5,0.5"), DnRegion::AllBelow));
        assert!(in_dn(&exact("0.2,0.3,0.2,0.3"), DnRegion::AllBelowFirstMin));
        assert!(!in_dn(
            &exact("0.3,0.2,0.3,0.2"),
            DnRegion::AllBelowFirstMin
        ));
    }

    /// Brute-force oracle: count permutations of 0..n with p0 < p1 > p2 < ...
    fn brute_alternating(n: usize) -> u64 {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], n: usize) -> u64 {
            let k = prefix.len();
            if k == n {
                return 1;
            }
            let mut total = 0;
            for v in 0..n {
                if used[v] {
                    continue;
                }
                if k > 0 {
                    let prev = prefix[k - 1];
                    let up = k % 2 == 1;
                    if up != (v > prev) {
                        continue;
                    }
                }
                used[v] = true;
                prefix.push(v);
                total += rec(prefix, used, n);
                prefix.pop();
                used[v] = false;
            }
            total
        }
        rec(&mut Vec::new(), &mut vec![false; n], n)
    }

    #[test]
    fn alternating_counts_match_enumeration() {
        let expected = [1u64, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521];
        let table = AlternatingCounts::new(10);
        for n in 1..=10 {
            let brute = brute_alternating(n);
            assert_eq!(brute, expected[n - 1], "n = {n}");
            assert_eq!(table.get(n), &BigUint::from(brute));
            assert_eq!(alternating_count(n), BigUint::from(brute));
        }
    }

    #[test]
    fn andre_bound_holds() {
        let table = AlternatingCounts::new(30);
        for n in 1..=30 {
            let ratio = table.density(n).to_f64().unwrap();
            assert!(
                ratio <= 3.0 * (2.0 / std::f64::consts::PI).powi(n as i32 + 1),
                "n = {n}"
            );
            assert!(table.get(n) <= &factorial(n));
        }
    }

    #[test]
    fn andre_series_converges() {
        // Alternating remainder is below the first omitted term.
        let lead = |n: usize| 2.0 * (2.0 / std::f64::consts::PI).powi(n as i32 + 1);
        let s = andre_series(2, 50);
        assert!((s - 0.5).abs() <= lead(2) / 101f64.powi(3));
        assert!((andre_series(2, 20_000) - 0.5).abs() <= 1e-12);
        // Odd n: the tail is at most lead * integral of x^-(n+1) / 2 beyond 2K-1.
        let s = andre_series(5, 50);
        assert!((s - 16.0 / 120.0).abs() <= lead(5) * 99f64.powi(-5) / 10.0);
        assert!((andre_series(5, 200) - 16.0 / 120.0).abs() <= 1e-12);
        // One term, even n: an upper bound for A_n / n!
        for n in (2..=20).step_by(2) {
            let ratio = AlternatingCounts::new(n).density(n).to_f64().unwrap();
            assert!(andre_series(n, 1) >= ratio);
        }
        for n in 3..=12 {
            let ratio = AlternatingCounts::new(n).density(n).to_f64().unwrap();
            assert!((andre_series(n, 5000) - ratio).abs() < 1e-10, "n = {n}");
        }
    }

    #[test]
    fn dn_star_volumes() {
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(vol_dn_star(3).unwrap().exact, r(1, 12));
        assert_eq!(vol_dn_star(4).unwrap().exact, r(1, 24));
        assert_eq!(vol_dn_star(5).unwrap().exact, r(1, 48));
        assert!(vol_dn_star(2).is_err());
    }

    #[test]
    fn bounds() {
        let b = pn_bounds(4).unwrap();
        assert!((b.lower - 0.507_232_851_775_151_9).abs() < 1e-12);
        assert_eq!(b.upper, 1.0 - 2.0 / 256.0);
        assert!((b.sharper_lower - 2.0 / 3.0).abs() < 1e-15);
        for n in 4..40 {
            let b = pn_bounds(n).unwrap();
            assert!(
                b.lower <= b.sharper_lower && b.sharper_lower <= b.upper,
                "n = {n}"
            );
        }
        let gap = |n| {
            let b = pn_bounds(n).unwrap();
            b.upper - b.lower
        };
        assert!(gap(60) < 1e-11 && gap(60) < gap(20));
        assert!(pn_bounds(3).is_err());
    }
}
