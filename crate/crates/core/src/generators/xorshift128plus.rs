//! Vigna's xorshift128+ with the (23, 17, 26) shift triple.
//!
//! The output is the sum of the two state words after the update.

use super::Generator;
use crate::{Error, GeneratorKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xorshift128Plus {
    s: [u64; 2],
}

impl Xorshift128Plus {
    pub fn new(s: [u64; 2]) -> Result<Self, Error> {
        if s == [0, 0] {
            return Err(Error::DegenerateSeed { kind: Self::KIND });
        }
        Ok(Self { s })
    }
}

impl Generator for Xorshift128Plus {
    const KIND: GeneratorKind = GeneratorKind::Xorshift128Plus;

    fn from_seed(seed: &[u64]) -> Result<Self, Error> {
        Self::new([seed[0], seed[1]])
    }

    fn from_state(words: &[u64]) -> Result<Self, Error> {
        Self::from_seed(words)
    }

    fn write_state(&self, out: &mut [u64]) {
        out[..2].copy_from_slice(&self.s);
    }

    #[inline]
    fn next_word(&mut self) -> u64 {
        let mut s1 = self.s[0];
        let s0 = self.s[1];
        s1 ^= s1 << 23;
        let next = s1 ^ s0 ^ (s1 >> 17) ^ (s0 >> 26);
        self.s = [s0, next];
        next.wrapping_add(s0)
    }
}
