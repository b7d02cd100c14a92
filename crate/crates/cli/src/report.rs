//! Every headline number in one composite document.

use std::f64::consts::PI;

use anyhow::Result;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use nontransitive_core::mc::bin_counts;
use nontransitive_core::ntuple::AlternatingCounts;
use nontransitive_core::rng::SampleStream;
use nontransitive_core::triple::total_mass;
use nontransitive_core::witness::{efron_dice, moon_moser_dice};
use nontransitive_core::*;

pub struct ReportOptions {
    pub samples: u64,
    pub seed: u64,
    pub chunks: usize,
    pub tuples: usize,
}

fn single(target: Target, opts: &ReportOptions, salt: u64) -> Result<MCEstimate> {
    let spec = EstimatorSpec::new(
        target,
        opts.samples,
        opts.seed.wrapping_add(salt),
        opts.chunks,
    );
    Ok(estimate(&spec)?
        .single()
        .expect("single-valued target")
        .clone())
}

fn mc_entry(e: &MCEstimate, truth: f64) -> Value {
    json!({
        "estimate": e.estimate,
        "stderr": e.stderr,
        "exact": truth,
        "z": e.z_score(truth),
    })
}

fn random_rational(stream: &mut SampleStream) -> BigRational {
    let den = 1 + (stream.uniform() * 1000.0) as i64;
    let num = (stream.uniform() * (den as f64 + 1.0)) as i64;
    BigRational::new(num.min(den).into(), den.into())
}

/// Random rational tuples forced to satisfy the up-down hypothesis.
fn witness_section(opts: &ReportOptions) -> Value {
    let mut stream = SampleStream::at(opts.seed, 0);
    let one = BigRational::from_integer(1.into());
    let mut verified = 0;
    for _ in 0..opts.tuples {
        let n = 4 + (stream.uniform() * 7.0) as usize;
        let i = (stream.uniform() * n as f64) as usize;
        let mut v: Vec<BigRational> = (0..n).map(|_| random_rational(&mut stream)).collect();
        let a = v[i].clone();
        v[(i + 1) % n] = &one - &a + random_rational(&mut stream) * &a;
        let c = v[(i + 2) % n].clone();
        v[(i + 3) % n] = random_rational(&mut stream) * (&one - &c);
        let t = ProbTuple::new(v).expect("entries stay in [0, 1]");
        let verdict = decide_ntuple_exact(&t);
        if verdict.witness().is_some_and(|w| verify_witness(w, &t)) {
            verified += 1;
        }
    }
    json!({ "tuples": opts.tuples, "verified": verified })
}

fn symmetry_section(opts: &ReportOptions) -> Value {
    const PERMS3: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut stream = SampleStream::at(opts.seed.wrapping_add(1), 0);
    let (mut compared, mut exempt, mut violations) = (0u64, 0u64, 0u64);
    for k in 0..opts.tuples {
        let n = 3 + k % 6;
        let mut buf = vec![0.0; n];
        stream.fill(&mut buf);
        let t = ProbTuple::new(buf)
            .expect("uniform draws lie in [0, 1)")
            .to_exact();
        let base = decide_ntuple(&t);
        let mut others = vec![
            t.rotate((stream.uniform() * n as f64) as isize),
            t.reverse(),
            t.complement(),
        ];
        if n == 3 {
            others.extend(
                PERMS3
                    .iter()
                    .map(|p| t.permute(p).expect("valid permutation")),
            );
        }
        for other in others {
            let v = decide_ntuple(&other);
            if base.is_decisive() && v.is_decisive() {
                compared += 1;
                violations += u64::from(base.status() != v.status());
            } else {
                exempt += 1;
            }
        }
    }
    json!({
        "tuples": opts.tuples,
        "compared": compared,
        "exempt_unknown": exempt,
        "violations": violations,
    })
}

fn histogram_section(opts: &ReportOptions) -> Result<Value> {
    let count = opts.samples as usize;
    let bins = 50;
    let mut sup = serde_json::Map::new();
    for which in [Which::F1, Which::F2] {
        let grid = histogram(which, count, bins, opts.seed)?;
        let d = grid
            .points
            .iter()
            .map(|&(x, h)| (h - density(which, x).unwrap_or(f64::NAN)).abs())
            .fold(0.0, f64::max);
        sup.insert(which.to_string(), json!(d));
    }
    let draws = sample_ordered_cyclic(count, opts.seed);
    let above = draws.triples.iter().filter(|t| t[0] > OMEGA).count();
    let counts = bin_counts(draws.triples.iter().map(|t| t[1]), bins);
    let chi2: f64 = (0..bins / 2)
        .map(|k| {
            let (a, b) = (counts[k] as f64, counts[bins - 1 - k] as f64);
            if a + b == 0.0 {
                0.0
            } else {
                (a - b) * (a - b) / (a + b)
            }
        })
        .sum();
    Ok(json!({
        "samples": count,
        "bins": bins,
        "sup_error": sup,
        "min_above_golden": above,
        "f2_mirror_chi2": chi2,
    }))
}

pub fn build(opts: &ReportOptions) -> Result<Value> {
    let v = exact_volumes();
    let rel = |a: f64, b: f64| ((a - b) / b).abs();

    let p3 = single(Target::P3, opts, 0)?;
    let p3_star = single(Target::P3Star, opts, 1)?;

    let mut sym = 0.0f64;
    let mut refl = 0.0f64;
    for k in 0..=1000 {
        let x = k as f64 / 1000.0;
        sym = sym.max((density(Which::F2, x)? - density(Which::F2, 1.0 - x)?).abs());
        refl = refl.max((density(Which::F3, x)? - density(Which::F1, 1.0 - x)?).abs());
    }
    let masses: serde_json::Map<String, Value> = Which::ALL
        .iter()
        .map(|&w| (w.to_string(), json!(total_mass(w))))
        .collect();

    let mut dn = Vec::new();
    for n in 3..=6 {
        let vol = vol_dn_star(n)?;
        let e = single(Target::VolDnStar(n), opts, 100 + n as u64)?;
        let mut entry = mc_entry(&e, vol.value);
        entry["n"] = json!(n);
        entry["exact_rational"] = json!(vol.exact.to_string());
        dn.push(entry);
    }

    let table = AlternatingCounts::new(30);
    let counts: Vec<String> = (1..=10).map(|n| table.get(n).to_string()).collect();
    let andre_ratio = (1..=30)
        .map(|n| {
            let d = table.density(n).to_f64().unwrap_or(f64::NAN);
            d / (3.0 * (2.0 / PI).powi(n as i32 + 1))
        })
        .fold(0.0, f64::max);

    let mut brackets = Vec::new();
    for n in 4..=8 {
        let b = pn_bounds(n)?;
        let spec = EstimatorSpec::new(
            Target::PnBracket(n),
            opts.samples,
            opts.seed.wrapping_add(200 + n as u64),
            opts.chunks,
        );
        let est = estimate(&spec)?;
        let br = est.bracket().expect("bracket target");
        brackets.push(json!({
            "n": n,
            "lower": br.lower.estimate,
            "lower_stderr": br.lower.stderr,
            "upper": br.upper.estimate,
            "upper_stderr": br.upper.stderr,
            "unknown": br.unknown,
            "bound_lower": b.lower,
            "bound_upper": b.upper,
            "sharper_lower": b.sharper_lower,
            "consistent": br.lower.estimate <= br.upper.estimate
                && br.lower.estimate - 4.0 * br.lower.stderr <= b.upper
                && br.upper.estimate + 4.0 * br.upper.stderr >= b.lower,
        }));
    }

    let det =
        |chunks| single(Target::P3, &ReportOptions { chunks, ..*opts }, 0).map(|e| e.estimate);
    let det_values = [det(1)?, det(opts.chunks)?, det(opts.chunks + 3)?];

    let efron_tuple: ProbTuple<BigRational> = "2/3,2/3,2/3,2/3".parse()?;
    let mm_tuple: ProbTuple<BigRational> = "5/9,5/9,5/9".parse()?;

    Ok(json!({
        "exact_volumes": {
            "p3": v.p3,
            "p3_star": v.p3_star,
            "vol_i": v.vol_i,
            "vol_ii": v.vol_ii,
            "p3_star_vs_3_vol_i_rel": rel(3.0 * v.vol_i, v.p3_star),
            "p3_vs_6_vol_i_plus_6_vol_ii_rel": rel(6.0 * (v.vol_i + v.vol_ii), v.p3),
        },
        "monte_carlo": {
            "samples": opts.samples,
            "seed": opts.seed,
            "chunks": opts.chunks,
            "p3": mc_entry(&p3, v.p3),
            "p3_star": mc_entry(&p3_star, v.p3_star),
        },
        "densities": {
            "total_mass": masses,
            "f2_symmetry_max_error": sym,
            "f3_reflection_max_error": refl,
        },
        "stats": {
            "f1": density_stats(Which::F1),
            "unrestricted_min": unrestricted_min_stats(),
        },
        "histograms": histogram_section(opts)?,
        "vol_dn_star": dn,
        "alternating": {
            "counts_1_to_10": counts,
            "max_ratio_to_andre_bound_n_le_30": andre_ratio,
        },
        "pn_brackets": brackets,
        "witnesses": witness_section(opts),
        "dice": {
            "efron": verify_witness(&efron_dice(), &efron_tuple),
            "moon_moser": verify_witness(&moon_moser_dice(), &mm_tuple),
        },
        "symmetry": symmetry_section(opts),
        "determinism": {
            "p3_estimates_by_chunks": [
                [1, det_values[0]],
                [opts.chunks, det_values[1]],
                [opts.chunks + 3, det_values[2]],
            ],
            "identical": det_values.iter().all(|x| x.to_bits() == det_values[0].to_bits()),
        },
    }))
}
