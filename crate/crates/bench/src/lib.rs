//! Shared inputs for the criterion benches.

use nontransitive_core::ProbTuple;
use num_rational::BigRational;

/// Deterministic pseudo-random float tuples of length `n`.
pub fn float_tuples(n: usize, count: usize) -> Vec<ProbTuple<f64>> {
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    (0..count)
        .map(|_| ProbTuple::new((0..n).map(|_| next()).collect()).unwrap())
        .collect()
}

/// Rational tuples of length `n` with denominator 1000 satisfying the
/// up-down condition at index 0.
pub fn witness_tuples(n: usize, count: usize) -> Vec<ProbTuple<BigRational>> {
    float_tuples(n, count)
        .into_iter()
        .map(|t| {
            let mut v: Vec<BigRational> = t
                .values()
                .iter()
                .map(|x| BigRational::new(((x * 1000.0) as i64).into(), 1000.into()))
                .collect();
            // force s_0 >= 1 and s_2 <= 1
            v[0] = BigRational::new(3.into(), 5.into());
            v[1] = BigRational::new(1.into(), 2.into());
            v[2] = BigRational::new(1.into(), 5.into());
            v[3] = BigRational::new(3.into(), 10.into());
            ProbTuple::new(v).unwrap()
        })
        .collect()
}
