//! Marsaglia's 32-bit xorshift with the (13, 17, 5) shift triple.

use super::{low32, Generator};
use crate::{Error, GeneratorKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xorshift32 {
    x: u32,
}

impl Xorshift32 {
    pub fn new(seed: u32) -> Result<Self, Error> {
        if seed == 0 {
            return Err(Error::DegenerateSeed { kind: Self::KIND });
        }
        Ok(Self { x: seed })
    }
}

impl Generator for Xorshift32 {
    const KIND: GeneratorKind = GeneratorKind::Xorshift32;

    fn from_seed(seed: &[u64]) -> Result<Self, Error> {
        Self::new(low32(seed[0]))
    }

    fn from_state(words: &[u64]) -> Result<Self, Error> {
        Self::from_seed(words)
    }

    fn write_state(&self, out: &mut [u64]) {
        out[0] = u64::from(self.x);
    }

    #[inline]
    fn next_word(&mut self) -> u64 {
        let mut x = self.x;
        x ^= x << 13;
        x ^= x >> 17;
        x ^= x << 5;
        self.x = x;
        u64::from(x)
    }
}
