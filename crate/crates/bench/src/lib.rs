//! Deterministic inputs shared by the benchmarks.

use factorable::{Letter, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5EED;

/// `count` words of exactly `len` letters drawn uniformly from `letters`.
pub fn random_words(letters: usize, len: usize, count: usize) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count)
        .map(|_| Word::from_positions((0..len).map(|_| rng.gen_range(0..letters) as Letter).collect()))
        .collect()
}
