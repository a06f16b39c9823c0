//! 64-bit Mersenne Twister (Matsumoto and Nishimura, 2004 parameters).
//!
//! The flat state is the 312-word vector followed by the read index; an
//! index of 312 means the vector is regenerated on the next draw.

use super::Generator;
use crate::{Error, GeneratorKind};

const NN: usize = 312;
const MM: usize = 156;
const MATRIX_A: u64 = 0xB502_6F5A_A966_19E9;
const UPPER_MASK: u64 = 0xFFFF_FFFF_8000_0000;
const LOWER_MASK: u64 = 0x7FFF_FFFF;
const INIT_MULTIPLIER: u64 = 6_364_136_223_846_793_005;

pub const STATE_WORDS: usize = NN + 1;
pub const DEFAULT_SEED: u64 = 5489;

#[derive(Clone, PartialEq, Eq)]
pub struct Mt19937_64 {
    mt: [u64; NN],
    index: usize,
}

impl std::fmt::Debug for Mt19937_64 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Mt19937_64")
            .field("index", &self.index)
            .finish_non_exhaustive()
    }
}

impl Mt19937_64 {
    pub fn new(seed: u64) -> Self {
        let mut mt = [0u64; NN];
        mt[0] = seed;
        for i in 1..NN {
            let prev = mt[i - 1];
            mt[i] = INIT_MULTIPLIER
                .wrapping_mul(prev ^ (prev >> 62))
                .wrapping_add(i as u64);
        }
        Self { mt, index: NN }
    }

    #[inline]
    fn mix(upper: u64, lower: u64) -> u64 {
        let x = (upper & UPPER_MASK) | (lower & LOWER_MASK);
        (x >> 1) ^ if x & 1 != 0 { MATRIX_A } else { 0 }
    }

    fn twist(&mut self) {
        let mt = &mut self.mt;
        for i in 0..NN - MM {
            mt[i] = mt[i + MM] ^ Self::mix(mt[i], mt[i + 1]);
        }
        for i in NN - MM..NN - 1 {
            mt[i] = mt[i + MM - NN] ^ Self::mix(mt[i], mt[i + 1]);
        }
        mt[NN - 1] = mt[MM - 1] ^ Self::mix(mt[NN - 1], mt[0]);
        self.index = 0;
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        if self.index >= NN {
            self.twist();
        }
        let mut x = self.mt[self.index];
        self.index += 1;

        x ^= (x >> 29) & 0x5555_5555_5555_5555;
        x ^= (x << 17) & 0x71D6_7FFF_EDA6_0000;
        x ^= (x << 37) & 0xFFF7_EEE0_0000_0000;
        x ^ (x >> 43)
    }
}

impl Default for Mt19937_64 {
    fn default() -> Self {
        Self::new(DEFAULT_SEED)
    }
}

impl Generator for Mt19937_64 {
    const KIND: GeneratorKind = GeneratorKind::Mt19937_64;

    fn from_seed(seed: &[u64]) -> Result<Self, Error> {
        Ok(Self::new(seed[0]))
    }

    fn from_state(words: &[u64]) -> Result<Self, Error> {
        let index = words[NN];
        if index > NN as u64 {
            return Err(Error::InvalidState {
                kind: Self::KIND,
                reason: "read index exceeds 312",
            });
        }
        if words[..NN].iter().all(|&w| w == 0) {
            return Err(Error::DegenerateSeed { kind: Self::KIND });
        }
        let mut mt = [0u64; NN];
        mt.copy_from_slice(&words[..NN]);
        Ok(Self {
            mt,
            index: index as usize,
        })
    }

    fn write_state(&self, out: &mut [u64]) {
        out[..NN].copy_from_slice(&self.mt);
        out[NN] = self.index as u64;
    }

    #[inline]
    fn next_word(&mut self) -> u64 {
        self.next_u64()
    }
}
