use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::number::Prob;

/// An ordered n-tuple of probabilities, `n >= 3`, indexed cyclically.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbTuple<T> {
    values: Vec<T>,
}

impl<T: Prob> ProbTuple<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.len() < 3 {
            return Err(Error::TooShort(values.len()));
        }
        let zero = T::zero();
        let one = T::one();
        for (index, v) in values.iter().enumerate() {
            // written so that NaN fails too
            if !(*v >= zero && *v <= one) {
                return Err(Error::OutOfRange {
                    index,
                    value: v.to_string(),
                });
            }
        }
        Ok(Self { values })
    }

    /// The constant tuple `(v, ..., v)`.
    pub fn uniform(n: usize, v: T) -> Result<Self> {
        Self::new(vec![v; n])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    /// Entry `i mod n`. Negative indices wrap too.
    pub fn at(&self, i: isize) -> &T {
        let n = self.values.len() as isize;
        &self.values[i.rem_euclid(n) as usize]
    }

    /// `x_i + x_{i+1}`, cyclically.
    pub fn pair_sum(&self, i: usize) -> T {
        let n = self.values.len();
        self.values[i % n].clone() + self.values[(i + 1) % n].clone()
    }

    pub fn pair_sums(&self) -> Vec<T> {
        (0..self.len()).map(|i| self.pair_sum(i)).collect()
    }

    pub fn min(&self) -> &T {
        self.values
            .iter()
            .fold(&self.values[0], |m, v| if v < m { v } else { m })
    }

    pub fn max(&self) -> &T {
        self.values
            .iter()
            .fold(&self.values[0], |m, v| if v > m { v } else { m })
    }

    /// `(1 - x_1, ..., 1 - x_n)`.
    pub fn complement(&self) -> Self {
        Self {
            values: self.values.iter().map(|v| T::one() - v.clone()).collect(),
        }
    }

    /// `(x_{1+k}, ..., x_{n+k})`.
    pub fn rotate(&self, k: isize) -> Self {
        let n = self.values.len();
        let shift = k.rem_euclid(n as isize) as usize;
        let mut values = self.values.clone();
        values.rotate_left(shift);
        Self { values }
    }

    /// `(x_n, ..., x_1)`.
    pub fn reverse(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Self { values }
    }

    /// Apply a permutation of positions: entry `i` of the result is `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.len() {
            return Err(Error::WrongLength {
                expected: self.len(),
                got: perm.len(),
            });
        }
        Self::new(perm.iter().map(|&i| self.values[i].clone()).collect())
    }

    pub fn to_f64(&self) -> ProbTuple<f64> {
        ProbTuple {
            values: self.values.iter().map(Prob::as_f64).collect(),
        }
    }

    pub(crate) fn expect_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::WrongLength {
                expected: n,
                got: self.len(),
            })
        }
    }
}

impl ProbTuple<f64> {
    /// Exact rational image of a float tuple. Every finite `f64` is a dyadic
    /// rational, so nothing is lost.
    pub fn to_exact(&self) -> ProbTuple<BigRational> {
        ProbTuple {
            values: self
                .values
                .iter()
                .map(|&v| BigRational::from_float(v).expect("validated finite"))
                .collect(),
        }
    }
}

impl<T: Prob> FromStr for ProbTuple<T> {
    type Err = Error;

    /// Comma-separated decimals or `p/q` ratios, e.g. `"5/9,5/9,5/9"`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(T::parse_prob)
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

impl<T: Prob> fmt::Display for ProbTuple<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
