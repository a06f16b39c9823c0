//! Marsaglia's `xor128`: four 32-bit lanes, shifts (11, 8, 19).
//!
//! The lanes are packed two per word, low half first:
//! `word[0] = x | y << 32`, `word[1] = z | w << 32`.

use super::Generator;
use crate::{Error, GeneratorKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xorshift128 {
    lanes: [u32; 4],
}

impl Xorshift128 {
    pub fn new(lanes: [u32; 4]) -> Result<Self, Error> {
        if lanes == [0; 4] {
            return Err(Error::DegenerateSeed { kind: Self::KIND });
        }
        Ok(Self { lanes })
    }
}

impl Generator for Xorshift128 {
    const KIND: GeneratorKind = GeneratorKind::Xorshift128;

    fn from_seed(seed: &[u64]) -> Result<Self, Error> {
        Self::new([
            seed[0] as u32,
            (seed[0] >> 32) as u32,
            seed[1] as u32,
            (seed[1] >> 32) as u32,
        ])
    }

    fn from_state(words: &[u64]) -> Result<Self, Error> {
        Self::from_seed(words)
    }

    fn write_state(&self, out: &mut [u64]) {
        let [x, y, z, w] = self.lanes.map(u64::from);
        out[0] = x | y << 32;
        out[1] = z | w << 32;
    }

    #[inline]
    fn next_word(&mut self) -> u64 {
        let [x, y, z, w] = self.lanes;
        let t = x ^ (x << 11);
        let next = w ^ (w >> 19) ^ (t ^ (t >> 8));
        self.lanes = [y, z, w, next];
        u64::from(next)
    }
}
