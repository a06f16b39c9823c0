//! 32-bit KISS: `(MWC ^ CONG) + SHR3`.
//!
//! Components, one state word each (low 32 bits):
//! `[z, w]` for the pair of multiply-with-carry halves (multipliers 36969 and
//! 18000), `jsr` for the shift register (13, 17, 5) and `jcong` for the
//! congruential generator `69069 * x + 12345`.

use super::{low32, Generator};
use crate::{Error, GeneratorKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kiss {
    z: u32,
    w: u32,
    jsr: u32,
    jcong: u32,
}

impl Kiss {
    /// Fails when the shift-register component is zero, its fixed point.
    pub fn new(z: u32, w: u32, jsr: u32, jcong: u32) -> Result<Self, Error> {
        if jsr == 0 {
            return Err(Error::DegenerateSeed { kind: Self::KIND });
        }
        Ok(Self { z, w, jsr, jcong })
    }

    #[inline]
    pub fn next_u32(&mut self) -> u32 {
        self.z = 36969u32
            .wrapping_mul(self.z & 0xFFFF)
            .wrapping_add(self.z >> 16);
        self.w = 18000u32
            .wrapping_mul(self.w & 0xFFFF)
            .wrapping_add(self.w >> 16);
        let mwc = (self.z << 16).wrapping_add(self.w);

        self.jcong = self.jcong.wrapping_mul(69069).wrapping_add(12345);

        self.jsr ^= self.jsr << 13;
        self.jsr ^= self.jsr >> 17;
        self.jsr ^= self.jsr << 5;

        (mwc ^ self.jcong).wrapping_add(self.jsr)
    }
}

impl Generator for Kiss {
    const KIND: GeneratorKind = GeneratorKind::Kiss;

    fn from_seed(seed: &[u64]) -> Result<Self, Error> {
        Self::new(
            low32(seed[0]),
            low32(seed[1]),
            low32(seed[2]),
            low32(seed[3]),
        )
    }

    fn from_state(words: &[u64]) -> Result<Self, Error> {
        Self::from_seed(words)
    }

    fn write_state(&self, out: &mut [u64]) {
        out[0] = u64::from(self.z);
        out[1] = u64::from(self.w);
        out[2] = u64::from(self.jsr);
        out[3] = u64::from(self.jcong);
    }

    #[inline]
    fn next_word(&mut self) -> u64 {
        u64::from(self.next_u32())
    }
}
