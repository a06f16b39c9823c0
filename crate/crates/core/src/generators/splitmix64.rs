//! Steele, Lea and Flood's SplitMix64. Also used by [`crate::seed_expand`].

use super::Generator;
use crate::{Error, GeneratorKind};

pub const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub const fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

impl Generator for SplitMix64 {
    const KIND: GeneratorKind = GeneratorKind::SplitMix64;

    fn from_seed(seed: &[u64]) -> Result<Self, Error> {
        Ok(Self::new(seed[0]))
    }

    fn from_state(words: &[u64]) -> Result<Self, Error> {
        Ok(Self::new(words[0]))
    }

    fn write_state(&self, out: &mut [u64]) {
        out[0] = self.state;
    }

    #[inline]
    fn next_word(&mut self) -> u64 {
        self.next_u64()
    }
}
