//! Seeded random streams.
//!
//! Every run draws from one ChaCha8 stream seeded from a `u64`. ChaCha8 output
//! is specified independently of platform and word size, so a seed reproduces
//! the same layout everywhere. The stream is consumed in a fixed order: the
//! initial layout first (x then y, node by node), then one stimulus per
//! iteration.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type LayoutRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> LayoutRng {
    ChaCha8Rng::seed_from_u64(seed)
}
