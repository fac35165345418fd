//! Deterministic randomness. Every random draw in the library flows from a
//! single u64 seed split into per-purpose ChaCha streams, so reports are
//! reproducible bit for bit and independent draws never share state.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream ids; one per consumer so adding draws in one place never shifts
/// another.
#[derive(Clone, Copy, Debug)]
pub enum Stream {
    Representations = 1,
    GroupElements = 2,
    AsymPoints = 3,
    DedupProbe = 4,
    Surjectivity = 5,
    Reynolds = 6,
    EllipticSpecs = 7,
}

pub fn stream_rng(seed: u64, stream: Stream) -> ChaCha8Rng {
    substream_rng(seed, stream, 0)
}

/// Counter-based splitting: (seed, stream, counter) pins an independent RNG.
pub fn substream_rng(seed: u64, stream: Stream, counter: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((stream as u64) << 32) ^ counter);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngCore;

    #[test]
    fn streams_are_independent_and_reproducible() {
        let a1 = stream_rng(1, Stream::Representations).next_u64();
        let a2 = stream_rng(1, Stream::Representations).next_u64();
        let b = stream_rng(1, Stream::GroupElements).next_u64();
        let c = stream_rng(2, Stream::Representations).next_u64();
        assert_eq!(a1, a2);
        assert_ne!(a1, b);
        assert_ne!(a1, c);
        let s0 = substream_rng(1, Stream::Surjectivity, 0).next_u64();
        let s1 = substream_rng(1, Stream::Surjectivity, 1).next_u64();
        assert_ne!(s0, s1);
    }
}
