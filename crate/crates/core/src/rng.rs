//! Counter-based random streams.
//!
//! Every uniform draw is a pure function of `(seed, global index)`: the
//! keystream of ChaCha8 keyed by the seed is addressed by word position, so a
//! worker can jump straight to the first sample of its range. Estimates are
//! therefore independent of how samples are split across workers.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// 32-bit keystream words consumed per `f64` draw.
const WORDS_PER_DRAW: u128 = 2;

#[derive(Clone, Debug)]
pub struct SampleStream {
    rng: ChaCha8Rng,
}

impl SampleStream {
    /// Position the stream at draw number `draw_index` for `seed`.
    pub fn at(seed: u64, draw_index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_word_pos(draw_index as u128 * WORDS_PER_DRAW);
        Self { rng }
    }

    /// Stream for sample `sample_index` when each sample uses `dims` draws.
    pub fn for_sample(seed: u64, sample_index: u64, dims: usize) -> Self {
        Self::at(seed, sample_index * dims as u64)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    #[inline]
    pub fn fill(&mut self, out: &mut [f64]) {
        for v in out {
            *v = self.uniform();
        }
    }
}

/// Split `0..total` into `chunks` contiguous ranges of near-equal size.
pub fn partition(total: u64, chunks: usize) -> Vec<std::ops::Range<u64>> {
    let chunks = chunks.max(1) as u64;
    (0..chunks)
        .map(|c| (total * c / chunks)..(total * (c + 1) / chunks))
        .filter(|r| !r.is_empty())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeking_matches_sequential_draws() {
        let mut seq = SampleStream::at(7, 0);
        let draws: Vec<f64> = (0..1000).map(|_| seq.uniform()).collect();
        for k in [0usize, 1, 15, 16, 17, 63, 64, 500, 999] {
            let mut jumped = SampleStream::at(7, k as u64);
            assert_eq!(jumped.uniform(), draws[k], "draw {k}");
        }
        let mut s = SampleStream::for_sample(7, 10, 3);
        assert_eq!(s.uniform(), draws[30]);
    }

    #[test]
    fn seeds_give_different_streams() {
        let a = SampleStream::at(1, 0).uniform();
        let b = SampleStream::at(2, 0).uniform();
        assert_ne!(a, b);
    }

    #[test]
    fn uniforms_are_in_unit_interval() {
        let mut s = SampleStream::at(3, 0);
        let mut sum = 0.0;
        for _ in 0..100_000 {
            let u = s.uniform();
            assert!((0.0..1.0).contains(&u));
            sum += u;
        }
        assert!((sum / 100_000.0 - 0.5).abs() < 0.005);
    }

    #[test]
    fn partition_covers_range() {
        for (total, chunks) in [(10u64, 3usize), (7, 7), (5, 8), (1_000_003, 16), (0, 4)] {
            let parts = partition(total, chunks);
            let mut next = 0;
            for r in &parts {
                assert_eq!(r.start, next);
                next = r.end;
            }
            assert_eq!(next, total);
        }
    }
}
