//! Keyed, counter-addressed random streams.
//!
//! A stream is a ChaCha8 keystream: the key comes from `master_seed`, the
//! 64-bit ChaCha stream id is `stream_index`. Draw `i` of a stream is the
//! `i`-th 64-bit word of that keystream, so a value depends only on
//! `(master_seed, stream_index, i)` and never on the order in which other
//! draws were made.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RngStream {
    master_seed: u64,
    stream_index: u64,
}

impl RngStream {
    pub fn new(master_seed: u64, stream_index: u64) -> Self {
        RngStream {
            master_seed,
            stream_index,
        }
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn stream_index(&self) -> u64 {
        self.stream_index
    }

    /// Sub-stream labelled `label`. Children of distinct labels (and of
    /// distinct parents) land on distinct stream ids with overwhelming
    /// probability; the master seed is inherited.
    pub fn child(&self, label: u64) -> RngStream {
        let idx = splitmix64(self.stream_index ^ splitmix64(label.wrapping_add(0xA076_1D64_78BD_642F)));
        RngStream {
            master_seed: self.master_seed,
            stream_index: idx,
        }
    }

    /// Generator positioned at draw 0.
    pub fn generator(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master_seed);
        rng.set_stream(self.stream_index);
        rng
    }

    /// Generator positioned at draw `index`.
    pub fn generator_at(&self, index: u64) -> ChaCha8Rng {
        let mut rng = self.generator();
        rng.set_word_pos(u128::from(index) * 2);
        rng
    }

    /// Draw `index` of the stream.
    pub fn draw(&self, index: u64) -> u64 {
        use rand::RngCore;
        self.generator_at(index).next_u64()
    }
}

#[inline]
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Bernoulli trial on a uniform 64-bit draw: success iff `draw < p * 2^64`,
/// with `p = 1` always succeeding.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Coin {
    threshold: u64,
    certain: bool,
}

impl Coin {
    pub(crate) fn new(p: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&p));
        if p >= 1.0 {
            Coin {
                threshold: u64::MAX,
                certain: true,
            }
        } else {
            Coin {
                threshold: (p * 18_446_744_073_709_551_616.0) as u64,
                certain: false,
            }
        }
    }

    #[inline]
    pub(crate) fn flip(&self, draw: u64) -> bool {
        self.certain || draw < self.threshold
    }
}
