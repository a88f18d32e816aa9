//! SplitMix64 (Steele, Lea, Flood; the generator behind Java's
//! SplittableRandom), used wherever the toolkit needs seeded randomness.
//! Pure integer arithmetic, so identical seeds give identical output on
//! every platform.

#[derive(Clone)]
pub(crate) struct SplitMix64 {
    state: u64,
}

pub(crate) const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

#[inline]
pub(crate) fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix(self.state)
    }

    /// Uniform value in `0..bound` by rejection-free multiply-shift; the
    /// bias is negligible for the tiny bounds used here and the result is
    /// still fully deterministic.
    pub fn next_below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }
}

/// Counter-style access: the `index`-th output of the SplitMix64 stream
/// seeded with `seed`, computable without stepping through the stream.
#[inline]
pub(crate) fn at_index(seed: u64, index: u64) -> u64 {
    mix(seed.wrapping_add(GOLDEN_GAMMA.wrapping_mul(index.wrapping_add(1))))
}

/// Fisher-Yates shuffle driven by SplitMix64.
pub(crate) fn shuffle<T>(items: &mut [T], rng: &mut SplitMix64) {
    for i in (1..items.len()).rev() {
        let j = rng.next_below(i + 1);
        items.swap(i, j);
    }
}
