//! PCG-XSH-RR 64/32 (O'Neill's `pcg32`).
//!
//! State words are `[state, increment]`; the increment is always odd.

use super::Generator;
use crate::{Error, GeneratorKind};

pub const MULTIPLIER: u64 = 6_364_136_223_846_793_005;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pcg32 {
    state: u64,
    inc: u64,
}

impl Pcg32 {
    /// Seeds as `pcg32_srandom_r(initstate, initseq)` does.
    pub fn new(initstate: u64, initseq: u64) -> Self {
        let mut rng = Self {
            state: 0,
            inc: (initseq << 1) | 1,
        };
        rng.step();
        rng.state = rng.state.wrapping_add(initstate);
        rng.step();
        rng
    }

    #[inline]
    fn step(&mut self) {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(self.inc);
    }

    #[inline]
    pub fn next_u32(&mut self) -> u32 {
        let old = self.state;
        self.step();
        let xorshifted = (((old >> 18) ^ old) >> 27) as u32;
        let rot = (old >> 59) as u32;
        xorshifted.rotate_right(rot)
    }
}

impl Generator for Pcg32 {
    const KIND: GeneratorKind = GeneratorKind::Pcg32;

    fn from_seed(seed: &[u64]) -> Result<Self, Error> {
        Ok(Self::new(seed[0], seed[1]))
    }

    fn from_state(words: &[u64]) -> Result<Self, Error> {
        if words[1] & 1 == 0 {
            return Err(Error::InvalidState {
                kind: Self::KIND,
                reason: "increment must be odd",
            });
        }
        Ok(Self {
            state: words[0],
            inc: words[1],
        })
    }

    fn write_state(&self, out: &mut [u64]) {
        out[0] = self.state;
        out[1] = self.inc;
    }

    #[inline]
    fn next_word(&mut self) -> u64 {
        u64::from(self.next_u32())
    }
}
