//! Cyclic and nontransitive probability tuples.
//!
//! An n-tuple `(x_1, ..., x_n)` of probabilities is *cyclic* when independent,
//! almost surely distinct random variables `U_1, ..., U_n` exist with
//! `P(U_{i+1} > U_i) = x_i` around the cycle, and *nontransitive* when in
//! addition every `x_i > 1/2`. This crate decides cyclicity exactly for
//! triples, certifies it with explicit finite witnesses for longer tuples,
//! evaluates the closed-form volumes and order-statistic densities for
//! triples, and checks all of it with a reproducible Monte Carlo engine.
//!
//! ```
//! use nontransitive_core::{decide_ntuple_exact, verify_witness, ProbTuple, Status};
//! use num_rational::BigRational;
//!
//! let t: ProbTuple<BigRational> = "3/5,1/2,3/10,2/5".parse().unwrap();
//! let verdict = decide_ntuple_exact(&t);
//! assert_eq!(verdict.status(), Status::Cyclic);
//! assert!(verify_witness(verdict.witness().unwrap(), &t));
//! ```

pub mod error;
pub mod json;
pub mod mc;
pub mod ntuple;
pub mod number;
pub mod quad;
pub mod rng;
pub mod triple;
pub mod tuple;
pub mod verdict;
pub mod witness;

pub use error::{Error, Result};
pub use mc::{estimate, histogram, Bracket, Estimate, EstimatorSpec, MCEstimate, Target};
pub use ntuple::{
    alternating_count, andre_series, build_witness, decide_by_pairwise_sums, decide_ntuple,
    decide_ntuple_exact, find_up_down_index, in_dn, pi_n, pn_bounds, vol_dn_star,
    AlternatingCounts, DnRegion, PnBounds,
};
pub use number::{parse_rational, Prob, OMEGA};
pub use triple::{
    density, density_stats, exact_volumes, in_region, is_cyclic_triple, is_nontransitive_triple,
    sample_ordered_cyclic, unrestricted_min_stats, DensityGrid, DensityStats, ExactVolumes,
    TripleRegion, Which,
};
pub use tuple::ProbTuple;
pub use verdict::{Reason, Status, Verdict};
pub use witness::{verify_witness, DiscreteDist, WitnessSystem};
