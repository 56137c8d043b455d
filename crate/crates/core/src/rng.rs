//! Seeded random streams.
//!
//! Every sample, restart or scan item draws from its own ChaCha stream keyed by
//! `(seed, index)`, so results do not depend on scheduling and any single item
//! can be regenerated in isolation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random source used across the crate.
pub type StreamRng = ChaCha8Rng;

/// Independent stream `index` of the generator keyed by `seed`.
pub fn stream(seed: u64, index: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
