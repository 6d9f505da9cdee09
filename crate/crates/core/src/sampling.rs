//! Reproducible random streams.
//!
//! `stream(seed, index)` is a ChaCha8 generator keyed by `seed` and
//! positioned on stream `index`; the same pair gives the same numbers on
//! every platform and for any number of worker threads, because work is
//! split into fixed index ranges rather than per-thread generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A vector of `len` integers drawn uniformly from `[-bound, bound]`.
pub fn int_vector(rng: &mut impl Rng, len: usize, bound: i64) -> Vec<i64> {
    (0..len).map(|_| rng.random_range(-bound..=bound)).collect()
}
