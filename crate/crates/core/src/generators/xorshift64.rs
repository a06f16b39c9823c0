//! Marsaglia's 64-bit xorshift with the (13, 7, 17) shift triple.

use super::Generator;
use crate::{Error, GeneratorKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xorshift64 {
    x: u64,
}

impl Xorshift64 {
    pub fn new(seed: u64) -> Result<Self, Error> {
        if seed == 0 {
            return Err(Error::DegenerateSeed { kind: Self::KIND });
        }
        Ok(Self { x: seed })
    }
}

impl Generator for Xorshift64 {
    const KIND: GeneratorKind = GeneratorKind::Xorshift64;

    fn from_seed(seed: &[u64]) -> Result<Self, Error> {
        Self::new(seed[0])
    }

    fn from_state(words: &[u64]) -> Result<Self, Error> {
        Self::new(words[0])
    }

    fn write_state(&self, out: &mut [u64]) {
        out[0] = self.x;
    }

    #[inline]
    fn next_word(&mut self) -> u64 {
        let mut x = self.x;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.x = x;
        x
    }
}
